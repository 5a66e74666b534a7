//! Toolchain for the reversible quantum combinator language UPi and its two
//! arrow extensions: UPia, which adds an allocation effect through a hidden
//! heap, and UPichia, which further adds a hiding effect through discarded
//! garbage.
//!
//! The crate provides:
//!
//! - the combinator AST with a unification-based type checker, the inversion
//!   meta-combinator, and a macro layer for derived combinators and the
//!   usual gate library ([`syntax`], [`typecheck`], [`macros`]);
//! - normal-form arrow values and their meta-combinators ([`arrow_alloc`],
//!   [`arrow_hide`]);
//! - executable semantics: unitaries for the base language ([`unitary`]),
//!   isometries and quantum channels with Choi-matrix equality for the
//!   arrows ([`channel`]), and finite bijections for the phase-free fragment
//!   together with the injection/bijection/projection factorization of
//!   arbitrary finite functions ([`classical`]);
//! - a quantum flowchart frontend translated into the hiding arrow
//!   ([`flowchart`]);
//! - a textual surface syntax and program files ([`parser`], [`pretty`]),
//!   JSON output ([`json`]), and seeded term generators ([`gen`]).

pub mod arrow_alloc;
pub mod arrow_hide;
pub mod channel;
pub mod classical;
pub mod error;
pub mod macros;
pub mod matrix;
pub mod syntax;
pub mod types;
pub mod unitary;

pub use error::{Error, Result};
pub use matrix::{CMatrix, DEFAULT_TOL};
pub use syntax::{Comb, Prim};
pub use types::{BaseType, CombType};
