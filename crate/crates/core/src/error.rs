use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("generator {index} is not orthogonal (residual {residual:e})")]
    NonOrthogonalGenerator { index: usize, residual: f64 },

    #[error("closure exceeded {max_order} elements; group is infinite or numerically drifting")]
    OrderExceeded { max_order: usize },

    #[error("group axiom violated: {0}")]
    GroupAxiom(String),

    #[error("initial vector has norm {norm}, expected 1")]
    NonUnitInitialVector { norm: f64 },

    #[error("stabilizer mismatch: |G|/|orbit| = {coset_count} but {fixed_count} elements fix the initial vector")]
    StabilizerMismatch { coset_count: usize, fixed_count: usize },

    #[error("{settings} settings exceed the enumeration budget of {limit}")]
    BudgetExceeded { settings: usize, limit: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("orbit has {distinct} distinct settings, expected {expected}")]
    DegenerateOrbit { distinct: usize, expected: usize },

    #[error("empty orbit or Gram matrix")]
    Empty,

    #[error("invalid strategy: {0}")]
    InvalidStrategy(String),

    #[error("unknown solid `{0}`")]
    UnknownSolid(String),
}
