use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("elements belong to different systems ({0} vs {1})")]
    CrossSystem(u64, u64),
    #[error("system `{0}` has no multiplication")]
    NoMultiplication(String),
    #[error("product {0} * {1} is not an element of the carrier")]
    UndefinedProduct(String, String),
    #[error("system `{0}` has no {1} element")]
    Absent(String, String),
    #[error("matrix must be square, got {0}x{1}")]
    NotSquare(usize, usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("axiom violation: {0}")]
    Axiom(#[from] AxiomViolation),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("search bound {0} exceeded")]
    Bound(u32),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("coefficient overflow")]
    Overflow,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
}

/// A named axiom failure with the offending elements rendered as text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxiomViolation {
    #[error("{table} table is not total (row {row}, column {col})")]
    NotTotal { table: String, row: String, col: String },
    #[error("addition is not commutative at ({0}, {1})")]
    AddNotCommutative(String, String),
    #[error("addition is not associative at ({0}, {1}, {2})")]
    AddNotAssociative(String, String, String),
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    MulNotAssociative(String, String, String),
    #[error("negation is not an involution at {0}")]
    NegNotInvolution(String),
    #[error("negation is not additive at ({0}, {1})")]
    NegNotAdditive(String, String),
    #[error("negation is not compatible with multiplication at ({0}, {1})")]
    NegNotMultiplicative(String, String),
    #[error("zero is not neutral for {0}")]
    ZeroNotNeutral(String),
    #[error("zero is not absorbing for {0}")]
    ZeroNotAbsorbing(String),
    #[error("one is not a unit for {0}")]
    OneNotUnit(String),
    #[error("negation of tangible {0} is not tangible")]
    TangibleNegation(String),
    #[error("tangible {0} is a quasi-zero")]
    TangibleQuasiZero(String),
    #[error("{0} is not a sum of tangible elements")]
    NotGenerated(String),
    #[error("multiplication does not distribute over addition at ({0}, {1}, {2})")]
    NotDistributive(String, String, String),
    #[error("surpassing relation fails {axiom} at {witness}")]
    Surpass { axiom: String, witness: String },
    #[error("hypergroup axiom {axiom} fails at {witness}")]
    Hypergroup { axiom: String, witness: String },
    #[error("fuzzy ring axiom {axiom} fails at {witness}")]
    Fuzzy { axiom: String, witness: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, col, msg: msg.into() }
    }

    /// True for the error class the CLI maps to exit code 2.
    pub fn is_axiom(&self) -> bool {
        matches!(self, Error::Axiom(_))
    }
}
