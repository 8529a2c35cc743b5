use thiserror::Error;

/// Errors raised by the polyhedral, algebraic and front-end layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("degenerate cone")]
    DegenerateCone,

    #[error("cone is not strictly convex")]
    NotStrictlyConvex,

    #[error("cone is not full-dimensional")]
    NotFullDimensional,

    #[error("invalid semigroup presentation: {0}")]
    InvalidPresentation(String),

    #[error("not a monomial of k[A]: {0}")]
    NotAMonomial(String),

    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),

    #[error("polynomials belong to different subalgebras")]
    PresentationMismatch,

    #[error("zero ideal has no Gröbner basis")]
    ZeroIdeal,

    #[error("weight not in cone")]
    WeightNotInCone,

    #[error("no neighbor: facet lies on the boundary of the base cone")]
    NoNeighbor,

    #[error("integer overflow converting {0}")]
    Overflow(String),

    #[error("auto-reduction did not stabilize after {0} passes")]
    ReductionDiverged(usize),

    #[error("fan traversal inconsistency: {0}")]
    Traversal(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
