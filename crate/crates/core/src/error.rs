use thiserror::Error;

/// Every failure mode surfaced by the library.
///
/// A guaranteed property failing on a concrete instance is reported as
/// [`Error::InvariantViolation`]; callers that run property suites record
/// these rather than abort.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operands belong to different algebras")]
    ParentMismatch,
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("characteristic {0} is neither 0 nor a supported prime")]
    BadCharacteristic(u64),
    #[error("operation not available in characteristic {0}")]
    BadChar(u64),
    #[error("characteristic {characteristic} too small (need 0 or > {needed})")]
    CharTooSmall { characteristic: u64, needed: u64 },
    #[error("parity requirement violated: {0}")]
    BadParity(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("no such element: {0}")]
    NoSuchElement(String),
    #[error("bilinear form is degenerate or has the wrong symmetry")]
    DegenerateForm,
    #[error("element must be nonzero")]
    ZeroElement,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("element is not a Jordan element (ad(x)^3 != 0)")]
    NotJordanElement,
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("element is not von Neumann regular")]
    NotRegular,
    #[error("witness does not satisfy U_e(a) = e")]
    WitnessInvalid,
    #[error("no f with ad(f)^3 = 0 found within budget {0}")]
    Sl2SearchExhausted(usize),
    #[error("idempotent search exhausted without a nil certificate")]
    IdempotentSearchExhausted,
    #[error("operator does not split over the field: {0}")]
    NonSplitOperator(String),
    #[error("factorial {0}! is not invertible in the field")]
    FactorialNotInvertible(usize),
    #[error("operator is not nilpotent")]
    NotNilpotent,
    #[error("exp(ad) is not an automorphism on this instance")]
    NotAutomorphism,
    #[error("interpolation nodes must be distinct and nonzero")]
    DuplicateNodes,
    #[error("generator of degree 0 supplied; nonzero degree required")]
    NonzeroDegreeRequired,
    #[error("enumeration budget exceeded: need {needed}, budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("size budget exceeded: dimension {needed} > budget {budget}")]
    SizeBudget { needed: usize, budget: usize },
    #[error("operation needs a finite field")]
    InfiniteField,
    #[error("element does not lie in the skew part K")]
    NotInK,
    #[error("simplicity probe {0} generated a proper ideal")]
    ProbeFailed(String),
    #[error("inconsistent tower sizes: {0}")]
    SizeMismatch(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
