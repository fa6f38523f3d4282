use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library reports. [`Error::code`] gives the stable
/// upper-case identifier used in machine-readable output.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("enumeration budget of {0} candidates exhausted")]
    BudgetExceeded(u64),
    #[error("invalid face: {0}")]
    InvalidFace(String),
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("invalid chart: {0}")]
    InvalidChart(String),
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("vertex {0} is not contractible: {1}")]
    NotContractible(String, String),
    #[error("unsupported fibre type: {0}")]
    UnsupportedType(String),
    #[error("numeric criterion violated: {0}")]
    NumericInvalid(String),
    #[error("missing data: {0}")]
    MissingData(String),
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error("semantic error: {0}")]
    Semantic(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::BudgetExceeded(_) => "BUDGET_EXCEEDED",
            Error::InvalidFace(_) => "INVALID_FACE",
            Error::InvalidFan(_) => "INVALID_FAN",
            Error::InvalidChart(_) => "INVALID_CHART",
            Error::InvalidModel(_) => "INVALID_MODEL",
            Error::InvalidGraph(_) => "INVALID_GRAPH",
            Error::InvalidInput(_) => "INVALID_INPUT",
            Error::NotApplicable(_) => "NOT_APPLICABLE",
            Error::NotContractible(..) => "NOT_CONTRACTIBLE",
            Error::UnsupportedType(_) => "UNSUPPORTED_TYPE",
            Error::NumericInvalid(_) => "NUMERIC_INVALID",
            Error::MissingData(_) => "MISSING_DATA",
            Error::Inconsistent(_) => "INCONSISTENT",
            Error::Overflow(_) => "OVERFLOW",
            Error::Parse { .. } => "PARSE_ERROR",
            Error::Schema { .. } => "SCHEMA_ERROR",
            Error::Semantic(_) => "SEMANTIC_ERROR",
            Error::Internal(_) => "INTERNAL",
        }
    }
}
