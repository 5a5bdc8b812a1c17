use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Validation,
    EmptyInput,
    Io,
    Domain,
}

impl ErrorClass {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorClass::Validation => 3,
            ErrorClass::Io => 4,
            ErrorClass::Domain => 5,
            ErrorClass::EmptyInput => 6,
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty panel")]
    EmptyPanel,

    #[error("validation error: {0}")]
    Validation(String),

    #[error("line {line}: {message}")]
    Parse { line: u64, message: String },

    #[error("{what} not found; available: {}", ListDisplay(.available))]
    NotFound {
        what: String,
        available: Vec<String>,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{0}")]
    Undefined(&'static str),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: {source}")]
    AtLine {
        line: u64,
        #[source]
        source: Box<Error>,
    },

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(line: u64, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }

    pub fn io(path: impl fmt::Display, source: std::io::Error) -> Self {
        Error::Io {
            path: path.to_string(),
            source,
        }
    }

    pub(crate) fn at_line(line: u64, source: Error) -> Self {
        Error::AtLine {
            line,
            source: Box::new(source),
        }
    }

    pub fn class(&self) -> ErrorClass {
        match self {
            Error::AtLine { source, .. } => source.class(),
            Error::EmptyPanel => ErrorClass::EmptyInput,
            Error::Validation(_) | Error::Parse { .. } | Error::NotFound { .. } => {
                ErrorClass::Validation
            }
            Error::Csv(e) if e.is_io_error() => ErrorClass::Io,
            Error::Csv(_) => ErrorClass::Validation,
            Error::Io { .. } => ErrorClass::Io,
            Error::Domain(_) | Error::Undefined(_) | Error::Unsupported(_) => ErrorClass::Domain,
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.class().exit_code()
    }
}

struct ListDisplay<'a>(&'a [String]);

impl fmt::Display for ListDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("(none)");
        }
        f.write_str(&self.0.join(", "))
    }
}
