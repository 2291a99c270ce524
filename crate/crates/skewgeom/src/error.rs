use std::fmt;

/// Errors produced by parameter validation, data ingestion, and fitting.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A distribution or model parameter lies outside its domain.
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },
    /// The data admit no interior maximum (e.g. every observation is zero).
    DegenerateData(String),
    /// The support is numerically exhausted: survival underflowed to zero at `x`.
    SupportExhausted { x: u64 },
    /// A frequency file or bin specification failed to parse.
    Parse { line: usize, message: String },
    /// Bins do not form a usable partition for the requested operation.
    InvalidBins(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter {
                name,
                value,
                reason,
            } => write!(f, "invalid parameter {name} = {value}: {reason}"),
            Error::DegenerateData(msg) => write!(f, "degenerate data: {msg}"),
            Error::SupportExhausted { x } => {
                write!(f, "support numerically exhausted at x = {x}")
            }
            Error::Parse { line, message } => write!(f, "line {line}: {message}"),
            Error::InvalidBins(msg) => write!(f, "invalid bins: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
