use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("scalar domains differ: {0} vs {1}")]
    DomainMismatch(String, String),

    #[error("variable lists differ: [{0}] vs [{1}]")]
    VariableMismatch(String, String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("gcd of two zero polynomials is undefined")]
    UndefinedGcd,

    #[error("{0}: zero polynomial not allowed")]
    ZeroPolynomial(&'static str),

    #[error("{0}")]
    DegreeTooLow(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("ideal is not zero-dimensional: {0}")]
    NotZeroDimensional(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("degenerate family: {0}")]
    DegenerateFamily(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
}

impl Error {
    /// Stable machine-readable identifier for reports and exit-code mapping.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DomainMismatch(..) => "domain-mismatch",
            Error::VariableMismatch(..) => "variable-mismatch",
            Error::UnknownVariable(_) => "unknown-variable",
            Error::UndefinedGcd => "undefined-gcd",
            Error::ZeroPolynomial(_) => "zero-polynomial",
            Error::DegreeTooLow(_) => "degree-too-low",
            Error::NotPrime(_) => "not-prime",
            Error::DivisionByZero => "division-by-zero",
            Error::NotZeroDimensional(_) => "not-zero-dimensional",
            Error::ResourceLimit(_) => "resource-limit",
            Error::Precondition(_) => "precondition",
            Error::DegenerateFamily(_) => "degenerate-family",
            Error::Unsupported(_) => "unsupported",
            Error::InvalidInput(_) => "invalid-input",
            Error::Syntax { .. } => "syntax",
        }
    }
}
