use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("value is not real (not fixed by complex conjugation)")]
    NotReal,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("polynomial is not squarefree")]
    NotSquarefree,

    #[error("both polynomials are zero")]
    ZeroGcd,

    #[error("radical base must be positive")]
    NonPositiveBase,

    #[error("group order exceeds the configured bound of {bound} elements")]
    OrderBound { bound: usize },

    #[error(
        "automorphism search is limited to groups of order at most {bound} (got {order}); \
         supply automorphisms explicitly instead"
    )]
    AutomorphismBound { bound: usize, order: usize },

    #[error("invalid permutation: {0}")]
    InvalidPerm(String),

    #[error("element is not in the group")]
    NotInGroup,

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("character table verification failed: {0}")]
    TableVerification(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("representation check failed: {0}")]
    RepVerification(String),

    #[error("could not construct representation: {0}")]
    RepConstruction(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("invariant breach: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
