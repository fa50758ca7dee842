use thiserror::Error;

/// Errors raised anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point {0} occurs more than once")]
    RepeatedPoint(usize),
    #[error("point {point} is out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("{names} generator names given for {gens} generators")]
    NameCountMismatch { names: usize, gens: usize },
    #[error("group order {order} exceeds the element limit {limit}")]
    OrderExceedsLimit { order: u128, limit: u128 },
    #[error("not a subgroup")]
    NotASubgroup,
    #[error("index {index} exceeds the coset limit {limit}")]
    IndexExceedsLimit { index: u128, limit: u128 },
    #[error("word letter {letter} exceeds arity {arity}")]
    ArityMismatch { letter: u32, arity: usize },
    #[error("word letter {letter} is out of range for {arity} generators")]
    IndexOutOfRange { letter: u32, arity: usize },
    #[error("couldn't find a word: frontier exhausted at level {level}")]
    FrontierExhausted { level: usize },
    #[error("can't generate subgroup")]
    TargetNotCovered,
    #[error("use other method: single generator exhausted after {levels} levels")]
    SingleGeneratorExhausted { levels: usize },
    #[error("element is not contained in the group")]
    ElementNotContained,
    #[error("subgroup chain violated: S is not contained in T")]
    ChainViolated,
    #[error("group of order {0} is not a 2-group")]
    NotATwoGroup(u128),
    #[error("checker precondition violated: {0}")]
    CheckerPreconditionViolated(String),
    #[error("line {line}, column {column}: {message}")]
    GeneratorFile {
        line: usize,
        column: usize,
        message: String,
    },
}

/// Coarse classification used for process exit codes and FFI status codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed input text (exit 1).
    Malformed,
    /// Violated precondition or containment (exit 2).
    Precondition,
    /// Resource limit hit (exit 3).
    Resource,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            RepeatedPoint(_) | PointOutOfRange { .. } | Syntax { .. } | GeneratorFile { .. } => {
                ErrorClass::Malformed
            }
            OrderExceedsLimit { .. }
            | IndexExceedsLimit { .. }
            | FrontierExhausted { .. }
            | SingleGeneratorExhausted { .. } => ErrorClass::Resource,
            _ => ErrorClass::Precondition,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
