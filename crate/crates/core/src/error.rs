use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong while building or solving a rating problem.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands come from different semifields or backends.
    #[error("semifield mismatch: {0}")]
    Mismatch(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    /// A mathematical precondition failed (zero inverse, zero entries, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The Kleene star was requested for a matrix with `Tr(A) > 1`.
    #[error("Kleene star undefined: Tr(A) = {value} exceeds the unit")]
    StarUndefined { value: String },

    /// The constraint matrix has a cycle with product above the unit, so
    /// `Cx <= x` has no regular solution.
    #[error("infeasible constraints: Tr(C) = {value} exceeds the unit (cycle {cycle:?}, product {cycle_value})")]
    Infeasible {
        value: String,
        cycle: Vec<usize>,
        cycle_value: String,
    },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("usage error: {0}")]
    Usage(String),

    /// A requested quantity has no exact representation in the backend.
    #[error("inexact result: {0}")]
    Inexact(String),

    #[error("i/o error: {0}")]
    Io(String),

    /// An error raised while reading a named input file.
    #[error("{path}: {source}")]
    File { path: String, source: Box<Error> },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }

    /// True for errors caused by malformed requests rather than by the data.
    pub fn is_usage(&self) -> bool {
        match self {
            Error::File { source, .. } => source.is_usage(),
            other => matches!(
                other,
                Error::Mismatch(_)
                    | Error::Dimension(_)
                    | Error::NotSquare { .. }
                    | Error::Parse { .. }
                    | Error::Usage(_)
            ),
        }
    }

    /// Process exit status: 2 for malformed input, 3 when the data violates
    /// a mathematical precondition, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::File { source, .. } => source.exit_code(),
            Error::Domain(_) | Error::StarUndefined { .. } | Error::Infeasible { .. } | Error::Inexact(_) => 3,
            Error::Io(_) => 1,
            other if other.is_usage() => 2,
            _ => 1,
        }
    }

    pub(crate) fn in_file(self, path: impl Into<String>) -> Self {
        Error::File {
            path: path.into(),
            source: Box::new(self),
        }
    }
}
