use thiserror::Error;

/// Errors raised by the algebra, analysis, construction and certification layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CarnotError {
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("malformed structure: {0}")]
    Malformed(String),
    #[error("element of dimension {got} used with algebra of dimension {expected}")]
    AlgebraMismatch { expected: usize, got: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("dilation scale must be positive")]
    NonPositiveScale,
    #[error("layer index {index} not in 1..={max}")]
    BadLayerIndex { index: usize, max: usize },
    #[error("exterior power {power} exceeds dimension {dim}")]
    BadExponent { power: usize, dim: usize },
    #[error("first layer is empty")]
    EmptyFirstLayer,
    #[error("search budget exceeded: {needed} evaluations requested, cap is {cap}")]
    SearchBudgetExceeded { needed: u128, cap: u128 },
    #[error("grid budget exceeded: {needed} grid points requested, cap is {cap}")]
    GridBudgetExceeded { needed: u128, cap: u128 },
    #[error("subspace is not contained in the first layer")]
    NotInFirstLayer,
    #[error("subspace is trivial")]
    TrivialSubspace,
    #[error("subspace is not proper")]
    NotProper,
    #[error("layers are not closed under the bracket")]
    NotSubalgebra,
    #[error("not a graded ideal: {0}")]
    NotGradedIdeal(String),
    #[error("quotient is not a Carnot algebra: {0}")]
    QuotientNotCarnot(String),
    #[error("construction requires 2-step algebras")]
    NotTwoStep,
    #[error("step mismatch: {0} vs {1}")]
    StepMismatch(usize, usize),
    #[error("subspace is not a complement of the distinguished line")]
    NotComplement,
    #[error("linear map is not invertible")]
    NotInvertible,
    #[error("unknown catalog name `{0}`")]
    UnknownCatalogName(String),
    #[error("bad catalog parameters: {0}")]
    BadParams(String),
    #[error("step {step} exceeds supported BCH truncation order {max}")]
    UnsupportedStep { step: usize, max: usize },
    #[error("element is not horizontal (has components outside the first layer)")]
    NotHorizontal,
    #[error("recursion depth {0} exceeded")]
    RecursionDepthExceeded(usize),
    #[error("generated algebra failed validation: {0}")]
    InvalidAlgebra(String),
}

pub type Result<T> = std::result::Result<T, CarnotError>;
