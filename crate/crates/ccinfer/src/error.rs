//! Error type shared across the crate.
//!
//! Errors split into two groups that the CLI maps to exit codes:
//! input/format problems (exit 2) and violated statistical
//! preconditions (exit 3).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("non-numeric field `{value}` in column `{column}` at line {line}")]
    NonNumericField {
        line: usize,
        column: String,
        value: String,
    },
    #[error("v = {value} out of [0,1] at line {line}")]
    VOutOfRange { line: usize, value: f64 },
    #[error("inconsistent missingness at line {line}: {detail}")]
    InconsistentMissingness { line: usize, detail: String },
    #[error("empty file")]
    EmptyFile,

    #[error("observation count {got} does not match number of delta=1 entries {expected}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("invalid probability {0}: must satisfy 0 < p <= 1")]
    InvalidProbability(f64),
    #[error("domain error: {0}")]
    DomainError(String),

    #[error("insufficient data: need at least {needed} complete cases, have {got}")]
    InsufficientData { needed: usize, got: usize },
    #[error("rank-deficient design matrix (relative pivot below {tol:e})")]
    RankDeficientDesign { tol: f64 },
    #[error("degenerate residuals: sigma_hat = 0")]
    DegenerateResiduals,
    #[error("Gamma(x) numerically singular at x = {0}")]
    SingularGamma(f64),
    #[error("empty input")]
    EmptyInput,
    #[error("chi(V) lies in the span of the null design columns")]
    DegenerateChi,
    #[error("a non-constant weight function chi is required: {0}")]
    NonConstantChiRequired(String),
    #[error("invalid scenario config: {0}")]
    InvalidConfig(String),

    #[error("replication {index} failed: {source}")]
    Replication {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    /// Exit code the CLI uses for this error: 2 for input/format
    /// problems, 3 for violated statistical preconditions.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::MalformedHeader(_)
            | Error::NonNumericField { .. }
            | Error::VOutOfRange { .. }
            | Error::InconsistentMissingness { .. }
            | Error::EmptyFile
            | Error::InvalidConfig(_)
            | Error::Io(_)
            | Error::Csv(_) => 2,
            Error::Replication { source, .. } => source.exit_code(),
            _ => 3,
        }
    }

    /// Stable machine-readable code for the CLI error envelope.
    pub fn code(&self) -> &'static str {
        match self {
            Error::MalformedHeader(_) => "MalformedHeader",
            Error::NonNumericField { .. } => "NonNumericField",
            Error::VOutOfRange { .. } => "VOutOfRange",
            Error::InconsistentMissingness { .. } => "InconsistentMissingness",
            Error::EmptyFile => "EmptyFile",
            Error::ArityMismatch { .. } => "ArityMismatch",
            Error::InvalidProbability(_) => "InvalidProbability",
            Error::DomainError(_) => "DomainError",
            Error::InsufficientData { .. } => "InsufficientData",
            Error::RankDeficientDesign { .. } => "RankDeficientDesign",
            Error::DegenerateResiduals => "DegenerateResiduals",
            Error::SingularGamma(_) => "SingularGamma",
            Error::EmptyInput => "EmptyInput",
            Error::DegenerateChi => "DegenerateChi",
            Error::NonConstantChiRequired(_) => "NonConstantChiRequired",
            Error::InvalidConfig(_) => "InvalidConfig",
            Error::Replication { .. } => "Replication",
            Error::Io(_) => "Io",
            Error::Csv(_) => "Csv",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
