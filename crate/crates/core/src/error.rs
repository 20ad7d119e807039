use thiserror::Error;

/// Errors raised by the algebra, code, and graph layers.
///
/// Coordinates in messages are 1-indexed; vertices are 0-indexed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in F_{0}")]
    DivisionByZero(u32),
    #[error("element {element} is not a canonical member of a field of order {order}")]
    BadElement { element: u32, order: u32 },
    #[error("invalid field: {0}")]
    BadField(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("code is not LCD")]
    NotLcd,
    #[error("binary code is not even")]
    NotEven,
    #[error("operation requires a code over F_{expected}, got F_{actual}")]
    WrongField { expected: u32, actual: u32 },
    #[error("code has no nonzero codeword")]
    NoNonzeroCodeword,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("coordinate {coordinate} is out of range for length {length}")]
    CoordinateOutOfRange { coordinate: usize, length: usize },
    #[error("vertex {vertex} is out of range for {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("theorem violated: {0}")]
    TheoremViolation(String),
    #[error("{q} is not a supported Paley order (need a prime power q = 1 mod 4 with exponent at most 2)")]
    NotPaleyOrder { q: u32 },
    #[error("adjacency matrix is not idempotent over F_{0}")]
    NotIdempotent(u32),
    #[error("projector is not the adjacency matrix of a two-graph")]
    NotTwoGraphProjector,
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown {kind} `{name}`")]
    UnknownName { kind: &'static str, name: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
