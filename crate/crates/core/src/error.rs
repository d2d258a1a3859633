use thiserror::Error;

/// Errors raised by the calculus. Every variant describes a violated
/// precondition; none of the operations fail for numerical reasons.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("requested dimension {requested} exceeds ambient dimension {ambient}")]
    DimensionTooLarge { requested: usize, ambient: usize },

    #[error("symplectic form is invalid: {0}")]
    InvalidForm(String),

    #[error("subspace is not Lagrangian")]
    NotLagrangian,

    #[error("subspace is not isotropic")]
    NotIsotropic,

    #[error("subspace is not coisotropic")]
    NotCoisotropic,

    #[error("morphisms are not composable: {0}")]
    NotComposable(String),

    #[error("relation is not an endomorphism")]
    NotEndomorphism,

    #[error("relation is not invertible")]
    NotInvertible,

    #[error("negative index {0} requires extended-index mode")]
    NegativeIndex(i64),

    #[error("pair at position {0} is not congenial")]
    NotCongenial(usize),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors that come from a type/shape mismatch between
    /// otherwise well-formed objects (the CLI maps these to their own exit code).
    pub fn is_mismatch(&self) -> bool {
        matches!(
            self,
            Error::DimensionMismatch { .. } | Error::NotComposable(_) | Error::NotEndomorphism
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
