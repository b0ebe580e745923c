use thiserror::Error;

/// Errors raised by the algebra kernel and its front ends.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Only units times powers of `w` can be inverted in the coefficient ring.
    #[error("coefficient is not invertible in the scalar ring: {0}")]
    NonInvertibleCoefficient(String),

    #[error("series is not unital: alpha-degree-0 part is {0}, expected 1")]
    NotUnitalSeries(String),

    #[error("element is outside the commutative position subalgebra: {0}")]
    NotInCommutativeSubalgebra(String),

    #[error("unknown observable `{0}`")]
    UnknownObservable(String),

    #[error("observable `{name}` takes {expected} indices, got {got}")]
    IndexArity {
        name: String,
        expected: usize,
        got: usize,
    },

    #[error("index {0} out of range 0..=3")]
    IndexOutOfRange(usize),

    #[error("parse error at {line}:{column}: expected {}", .expected.join(", "))]
    Parse {
        line: usize,
        column: usize,
        expected: Vec<String>,
    },

    #[error("manifest error at {line}:{column}: {message}")]
    Manifest {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("evaluation error at {line}:{column}: {message}")]
    Eval {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
