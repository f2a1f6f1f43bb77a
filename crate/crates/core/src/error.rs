use thiserror::Error;

/// Everything that can go wrong inside the toolkit.
///
/// Variants are grouped by the layer that raises them; callers that need a
/// coarse classification (the CLI maps these onto exit codes) can use
/// [`Error::is_dataset_error`] and [`Error::is_scan_violation`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("series division by a factor with zero constant term")]
    ZeroConstantTerm,

    #[error("expected an integral value, got {0}")]
    NonIntegralResult(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("negative middle Betti number {value} for {variety}; not a smooth complete intersection")]
    NegativeBetti { variety: String, value: String },

    #[error("no del Pezzo variety of dimension {dimension} and degree {degree}")]
    InvalidDelPezzo { dimension: u32, degree: u32 },

    #[error("scan violation at {case}: {law}")]
    ScanViolation { case: String, law: String },

    #[error("dataset schema error: {0}")]
    SchemaError(String),

    #[error("inconsistent pairing for ({a}, {b}): {detail}")]
    InconsistentPairing { a: String, b: String, detail: String },

    #[error("missing pairing for ({a}, {b})")]
    MissingPairing { a: String, b: String },

    #[error("invalid partition ({0}, {1})")]
    InvalidPartition(i64, i64),

    #[error("dual cone is not full-dimensional: {0}")]
    EmptyInterior(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

impl Error {
    pub fn is_dataset_error(&self) -> bool {
        matches!(
            self,
            Error::SchemaError(_) | Error::InconsistentPairing { .. } | Error::MissingPairing { .. }
        )
    }

    pub fn is_scan_violation(&self) -> bool {
        matches!(self, Error::ScanViolation { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
