//! The typed combinator AST shared by the reversible base language and its
//! quantum extension, together with the inversion meta-combinator.
//!
//! Every primitive node stores the base types at which it is instantiated, so
//! the type of any well-formed term is derivable without an environment. Terms
//! are produced either by the type checker (from surface syntax with holes) or
//! by the constructors here, which enforce well-typedness on the spot.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::types::{BaseType, CombType};

/// The fifteen primitive structural isomorphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Prim {
    Id,
    SwapAdd,
    UnitAdd,
    UnitiAdd,
    AssocAdd,
    AssociAdd,
    SwapMul,
    UnitMul,
    UnitiMul,
    AssocMul,
    AssociMul,
    Distrib,
    Distribi,
    Distribo,
    Distriboi,
}

pub const ALL_PRIMS: [Prim; 15] = [
    Prim::Id,
    Prim::SwapAdd,
    Prim::UnitAdd,
    Prim::UnitiAdd,
    Prim::AssocAdd,
    Prim::AssociAdd,
    Prim::SwapMul,
    Prim::UnitMul,
    Prim::UnitiMul,
    Prim::AssocMul,
    Prim::AssociMul,
    Prim::Distrib,
    Prim::Distribi,
    Prim::Distribo,
    Prim::Distriboi,
];

impl Prim {
    /// Number of base-type parameters in the primitive's type scheme.
    pub fn arity(self) -> usize {
        match self {
            Prim::Id | Prim::UnitAdd | Prim::UnitiAdd | Prim::UnitMul | Prim::UnitiMul => 1,
            Prim::Distribo | Prim::Distriboi => 1,
            Prim::SwapAdd | Prim::SwapMul => 2,
            Prim::AssocAdd | Prim::AssociAdd | Prim::AssocMul | Prim::AssociMul => 3,
            Prim::Distrib | Prim::Distribi => 3,
        }
    }

    /// The concrete surface token.
    pub fn token(self) -> &'static str {
        match self {
            Prim::Id => "id",
            Prim::SwapAdd => "swap+",
            Prim::UnitAdd => "unit+",
            Prim::UnitiAdd => "uniti+",
            Prim::AssocAdd => "assoc+",
            Prim::AssociAdd => "associ+",
            Prim::SwapMul => "swap*",
            Prim::UnitMul => "unit*",
            Prim::UnitiMul => "uniti*",
            Prim::AssocMul => "assoc*",
            Prim::AssociMul => "associ*",
            Prim::Distrib => "distrib",
            Prim::Distribi => "distribi",
            Prim::Distribo => "distribo",
            Prim::Distriboi => "distriboi",
        }
    }

    pub fn from_token(tok: &str) -> Option<Prim> {
        ALL_PRIMS.iter().copied().find(|p| p.token() == tok)
    }

    /// Instantiates the type scheme at the given parameters.
    ///
    /// Panics if `params.len() != self.arity()`; construction goes through
    /// [`Comb::prim`] which checks this.
    pub fn comb_type(self, params: &[BaseType]) -> CombType {
        assert_eq!(params.len(), self.arity(), "wrong arity for {}", self.token());
        fn sum(a: &BaseType, b: &BaseType) -> BaseType {
            BaseType::sum(a.clone(), b.clone())
        }
        fn prod(a: &BaseType, b: &BaseType) -> BaseType {
            BaseType::prod(a.clone(), b.clone())
        }
        let t = |s, t| CombType::new(s, t);
        match self {
            Prim::Id => t(params[0].clone(), params[0].clone()),
            Prim::SwapAdd => t(sum(&params[0], &params[1]), sum(&params[1], &params[0])),
            Prim::UnitAdd => t(sum(&params[0], &BaseType::Zero), params[0].clone()),
            Prim::UnitiAdd => t(params[0].clone(), sum(&params[0], &BaseType::Zero)),
            Prim::AssocAdd => t(
                sum(&sum(&params[0], &params[1]), &params[2]),
                sum(&params[0], &sum(&params[1], &params[2])),
            ),
            Prim::AssociAdd => t(
                sum(&params[0], &sum(&params[1], &params[2])),
                sum(&sum(&params[0], &params[1]), &params[2]),
            ),
            Prim::SwapMul => t(prod(&params[0], &params[1]), prod(&params[1], &params[0])),
            Prim::UnitMul => t(prod(&params[0], &BaseType::One), params[0].clone()),
            Prim::UnitiMul => t(params[0].clone(), prod(&params[0], &BaseType::One)),
            Prim::AssocMul => t(
                prod(&prod(&params[0], &params[1]), &params[2]),
                prod(&params[0], &prod(&params[1], &params[2])),
            ),
            Prim::AssociMul => t(
                prod(&params[0], &prod(&params[1], &params[2])),
                prod(&prod(&params[0], &params[1]), &params[2]),
            ),
            Prim::Distrib => t(
                prod(&params[0], &sum(&params[1], &params[2])),
                sum(&prod(&params[0], &params[1]), &prod(&params[0], &params[2])),
            ),
            Prim::Distribi => t(
                sum(&prod(&params[0], &params[1]), &prod(&params[0], &params[2])),
                prod(&params[0], &sum(&params[1], &params[2])),
            ),
            Prim::Distribo => t(prod(&params[0], &BaseType::Zero), BaseType::Zero),
            Prim::Distriboi => t(BaseType::Zero, prod(&params[0], &BaseType::Zero)),
        }
    }
}

/// A well-typed combinator term.
#[derive(Debug, Clone, PartialEq)]
pub enum Comb {
    Prim(Prim, Vec<BaseType>),
    Seq(Box<Comb>, Box<Comb>),
    SumPar(Box<Comb>, Box<Comb>),
    ProdPar(Box<Comb>, Box<Comb>),
    /// A phase, stored as the angle theta and denoting e^(i*theta). Storing
    /// the angle keeps the payload on the unit circle by construction.
    Phase(f64),
    Hadamard,
}

impl Comb {
    pub fn prim(p: Prim, params: Vec<BaseType>) -> Comb {
        assert_eq!(
            params.len(),
            p.arity(),
            "{} takes {} type parameter(s)",
            p.token(),
            p.arity()
        );
        Comb::Prim(p, params)
    }

    pub fn id(b: BaseType) -> Comb {
        Comb::prim(Prim::Id, vec![b])
    }

    pub fn swap_add(a: BaseType, b: BaseType) -> Comb {
        Comb::prim(Prim::SwapAdd, vec![a, b])
    }

    pub fn unit_add(b: BaseType) -> Comb {
        Comb::prim(Prim::UnitAdd, vec![b])
    }

    pub fn uniti_add(b: BaseType) -> Comb {
        Comb::prim(Prim::UnitiAdd, vec![b])
    }

    pub fn assoc_add(a: BaseType, b: BaseType, c: BaseType) -> Comb {
        Comb::prim(Prim::AssocAdd, vec![a, b, c])
    }

    pub fn associ_add(a: BaseType, b: BaseType, c: BaseType) -> Comb {
        Comb::prim(Prim::AssociAdd, vec![a, b, c])
    }

    pub fn swap_mul(a: BaseType, b: BaseType) -> Comb {
        Comb::prim(Prim::SwapMul, vec![a, b])
    }

    pub fn unit_mul(b: BaseType) -> Comb {
        Comb::prim(Prim::UnitMul, vec![b])
    }

    pub fn uniti_mul(b: BaseType) -> Comb {
        Comb::prim(Prim::UnitiMul, vec![b])
    }

    pub fn assoc_mul(a: BaseType, b: BaseType, c: BaseType) -> Comb {
        Comb::prim(Prim::AssocMul, vec![a, b, c])
    }

    pub fn associ_mul(a: BaseType, b: BaseType, c: BaseType) -> Comb {
        Comb::prim(Prim::AssociMul, vec![a, b, c])
    }

    pub fn distrib(a: BaseType, b: BaseType, c: BaseType) -> Comb {
        Comb::prim(Prim::Distrib, vec![a, b, c])
    }

    pub fn distribi(a: BaseType, b: BaseType, c: BaseType) -> Comb {
        Comb::prim(Prim::Distribi, vec![a, b, c])
    }

    pub fn distribo(b: BaseType) -> Comb {
        Comb::prim(Prim::Distribo, vec![b])
    }

    pub fn distriboi(b: BaseType) -> Comb {
        Comb::prim(Prim::Distriboi, vec![b])
    }

    /// Sequential composition in diagrammatic order: `self` first.
    ///
    /// Panics when the middle types disagree; terms built from checked input
    /// cannot trip this.
    pub fn seq(self, other: Comb) -> Comb {
        let a = self.ty();
        let b = other.ty();
        assert_eq!(
            a.target, b.source,
            "seq mismatch: {} then {}",
            a, b
        );
        Comb::Seq(Box::new(self), Box::new(other))
    }

    pub fn sum_par(self, other: Comb) -> Comb {
        Comb::SumPar(Box::new(self), Box::new(other))
    }

    pub fn prod_par(self, other: Comb) -> Comb {
        Comb::ProdPar(Box::new(self), Box::new(other))
    }

    /// Phase from an angle in radians, denoting e^(i*theta).
    pub fn phase(theta: f64) -> Comb {
        Comb::Phase(theta)
    }

    /// Phase from an explicit complex payload; rejects non-unit modulus.
    pub fn phase_from_complex(phi: Complex64) -> Result<Comb> {
        let n = phi.norm();
        if (n - 1.0).abs() > 1e-12 {
            return Err(Error::BadPhase(n));
        }
        Ok(Comb::Phase(phi.arg()))
    }

    /// The complex payload of a phase node.
    pub fn phase_value(theta: f64) -> Complex64 {
        Complex64::new(theta.cos(), theta.sin())
    }

    /// The type of the term. Derived structurally from the primitives'
    /// stored parameters.
    pub fn ty(&self) -> CombType {
        match self {
            Comb::Prim(p, params) => p.comb_type(params),
            Comb::Seq(a, b) => CombType::new(a.ty().source, b.ty().target),
            Comb::SumPar(a, b) => {
                let (ta, tb) = (a.ty(), b.ty());
                CombType::new(
                    BaseType::sum(ta.source, tb.source),
                    BaseType::sum(ta.target, tb.target),
                )
            }
            Comb::ProdPar(a, b) => {
                let (ta, tb) = (a.ty(), b.ty());
                CombType::new(
                    BaseType::prod(ta.source, tb.source),
                    BaseType::prod(ta.target, tb.target),
                )
            }
            Comb::Phase(_) => CombType::new(BaseType::One, BaseType::One),
            Comb::Hadamard => CombType::new(BaseType::qbit(), BaseType::qbit()),
        }
    }

    /// The inversion meta-combinator. Sequencing reverses order, parallel
    /// composition inverts componentwise, each primitive maps to its partner,
    /// and phases conjugate. Total on well-typed terms.
    pub fn invert(&self) -> Comb {
        match self {
            Comb::Prim(p, params) => {
                let (q, qparams) = match p {
                    Prim::Id => (Prim::Id, params.clone()),
                    Prim::SwapAdd => (Prim::SwapAdd, vec![params[1].clone(), params[0].clone()]),
                    Prim::UnitAdd => (Prim::UnitiAdd, params.clone()),
                    Prim::UnitiAdd => (Prim::UnitAdd, params.clone()),
                    Prim::AssocAdd => (Prim::AssociAdd, params.clone()),
                    Prim::AssociAdd => (Prim::AssocAdd, params.clone()),
                    Prim::SwapMul => (Prim::SwapMul, vec![params[1].clone(), params[0].clone()]),
                    Prim::UnitMul => (Prim::UnitiMul, params.clone()),
                    Prim::UnitiMul => (Prim::UnitMul, params.clone()),
                    Prim::AssocMul => (Prim::AssociMul, params.clone()),
                    Prim::AssociMul => (Prim::AssocMul, params.clone()),
                    Prim::Distrib => (Prim::Distribi, params.clone()),
                    Prim::Distribi => (Prim::Distrib, params.clone()),
                    Prim::Distribo => (Prim::Distriboi, params.clone()),
                    Prim::Distriboi => (Prim::Distribo, params.clone()),
                };
                Comb::Prim(q, qparams)
            }
            Comb::Seq(a, b) => Comb::Seq(Box::new(b.invert()), Box::new(a.invert())),
            Comb::SumPar(a, b) => Comb::SumPar(Box::new(a.invert()), Box::new(b.invert())),
            Comb::ProdPar(a, b) => Comb::ProdPar(Box::new(a.invert()), Box::new(b.invert())),
            Comb::Phase(theta) => Comb::Phase(-theta),
            Comb::Hadamard => Comb::Hadamard,
        }
    }
}
