use thiserror::Error;

/// Errors raised across the toolkit.
///
/// Variants are grouped by the exit-code class the command-line surface maps
/// them to: input schema problems, mathematical precondition failures, scale
/// caps, and internal invariant violations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank deficient input: {0}")]
    Rank(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("polynomial degree error: {0}")]
    Degree(String),
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("polynomial is not irreducible over Q: {0}")]
    NotIrreducible(String),
    #[error("could not reach the requested precision: {0}")]
    Precision(String),
    #[error("invalid group: {0}")]
    Group(String),
    #[error("element is not a unit of the group algebra with augmentation 1")]
    NotUnit,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid Galois action: {0}")]
    Galois(String),
    #[error("order is not maximal: {0}")]
    NotMaximal(String),
    #[error("lattice is not an order: {0}")]
    NotOrder(String),
    #[error("element is not normal: {0}")]
    NotNormal(String),
    #[error("ideal/order mismatch: {0}")]
    OrderMismatch(String),
    #[error("containment failure: {0}")]
    Containment(String),
    #[error("zero input: {0}")]
    Zero(String),
    #[error("points lie in the same orbit")]
    SameOrbit,
    #[error("search cap exhausted after {0} candidates")]
    SearchCap(usize),
    #[error("scale cap exceeded: {0}")]
    Scale(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Process exit code used by the command-line surface.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Schema(_) | Error::Io(_) => 2,
            Error::Scale(_) => 4,
            Error::InternalInvariant(_) => 5,
            _ => 3,
        }
    }
}
