//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("unresolved type hole: {0}")]
    UnresolvedHole(String),
    #[error("phase payload is not unit modulus (|phi| = {0})")]
    BadPhase(f64),
    #[error("unknown macro `{0}`")]
    UnknownMacro(String),
    #[error("macro `{name}` expects {expected} argument(s), got {got}")]
    ArityError {
        name: String,
        expected: usize,
        got: usize,
    },
    #[error("term is not liftable: {0}")]
    NotLiftable(String),
    #[error("garbage type `{0}` is not inhabited")]
    GarbageUninhabited(String),
    #[error("type `{0}` is not inhabited")]
    NotInhabited(String),
    #[error("term is not classical (contains phase or hadamard)")]
    NotClassical,
    #[error("cannot factor a function into an empty codomain")]
    EmptyCodomain,
    #[error("bad state: {0}")]
    BadState(String),
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("branch contexts do not match: {0}")]
    BranchMismatch(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("undefined name `{0}`")]
    UndefinedName(String),
    #[error("duplicate definition `{0}`")]
    DuplicateDefinition(String),
    #[error("cannot determine input contexts: {0}")]
    NeedsContext(String),
    #[error("{0}")]
    Unsupported(String),
}

impl Error {
    /// Stable machine-readable tag, used by the CLI error JSON and the FFI
    /// status codes.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::TypeMismatch(_) => "TypeMismatch",
            Error::UnresolvedHole(_) => "UnresolvedHole",
            Error::BadPhase(_) => "BadPhase",
            Error::UnknownMacro(_) => "UnknownMacro",
            Error::ArityError { .. } => "ArityError",
            Error::NotLiftable(_) => "NotLiftable",
            Error::GarbageUninhabited(_) => "GarbageUninhabited",
            Error::NotInhabited(_) => "NotInhabited",
            Error::NotClassical => "NotClassical",
            Error::EmptyCodomain => "EmptyCodomain",
            Error::BadState(_) => "BadState",
            Error::Parse { .. } => "ParseError",
            Error::UnboundVariable(_) => "UnboundVariable",
            Error::BranchMismatch(_) => "BranchMismatch",
            Error::DuplicateVariable(_) => "DuplicateVariable",
            Error::UndefinedName(_) => "UndefinedName",
            Error::DuplicateDefinition(_) => "DuplicateDefinition",
            Error::NeedsContext(_) => "NeedsContext",
            Error::Unsupported(_) => "Unsupported",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
