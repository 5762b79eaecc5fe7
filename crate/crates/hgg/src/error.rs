use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the pipeline stages.
///
/// Every failure mode is a value, never a panic: a malformed certificate or a
/// degenerate input must surface as a report entry or an `Err`, so callers
/// (including the CLI) can map them to exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter orbit for denominator {0} is incomplete or has unequal multiplicities")]
    NotGaloisClosed(u64),

    #[error("polynomial has a non-cyclotomic factor: {0}")]
    NotCyclotomicProduct(String),

    #[error("parameter lists share the entry {0}")]
    SharedEntry(String),

    #[error("not a valid hypergeometric pair: {0}")]
    InvalidPair(String),

    #[error("difference polynomial f - g is zero")]
    ZeroDifference,

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("matrix is singular")]
    Singular,

    #[error("unbound name `{0}` in word program")]
    UnboundName(String),

    #[error("orbit vectors are linearly dependent")]
    OrbitDegenerate,

    #[error("computed form is not invariant under the generators")]
    InvarianceFailed,

    #[error("invariant-form solution space has dimension {0}, expected 1")]
    SolutionSpaceNotLine(usize),

    #[error("form matrix is degenerate")]
    Degenerate,

    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown label `{0}` in annotation file")]
    UnknownLabel(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("io error on {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    pub(crate) fn io(path: &std::path::Path, err: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            message: err.to_string(),
        }
    }

    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
