use thiserror::Error;

/// Errors raised by soft-set construction, parsing and measure evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SoftSetError {
    #[error("universe must contain at least one element")]
    EmptyUniverse,
    #[error("attribute list must contain at least one attribute")]
    EmptyAttributes,
    #[error("duplicate element `{0}` in universe")]
    DuplicateElement(String),
    #[error("duplicate attribute `{0}` in attribute list")]
    DuplicateAttribute(String),
    #[error("attribute `{0}` is not declared in the soft space")]
    UnknownAttribute(String),
    #[error("element `{0}` is not in the universe")]
    UnknownElement(String),
    #[error("duplicate element `{element}` in value set of attribute `{attribute}`")]
    DuplicateValue { attribute: String, element: String },
    #[error("soft sets live in different soft spaces")]
    SpaceMismatch,
    #[error("restricted intersection requires overlapping attribute domains")]
    EmptyIntersection,
    #[error("{measure} requires a non-empty attribute domain on both operands")]
    EmptyDomain { measure: &'static str },
    #[error("matrix is {rows}x{cols} but the soft space needs {expected_rows}x{expected_cols}")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("matrix entry at ({row}, {col}) is {value}; only 0 and 1 are allowed")]
    NonBinaryEntry { row: usize, col: usize, value: u8 },
    #[error("unknown measure `{0}`")]
    UnknownMeasure(String),
    #[error("measure `{measure}` is a {actual}, expected a {expected}")]
    WrongMeasureKind {
        measure: String,
        expected: &'static str,
        actual: &'static str,
    },
    #[error("steepness must be a positive finite number, got {0}")]
    InvalidSteepness(f64),
    #[error("threshold must lie strictly between 0 and 1, got {0}")]
    InvalidThreshold(f64),
    #[error("trial count must be at least 1")]
    NoTrials,
    #[error("measure `{0}` is undefined (0/0) for these operands")]
    Undefined(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl SoftSetError {
    /// Usage-level errors (bad identifiers, bad parameters, malformed input)
    /// as opposed to domain errors raised by a well-formed computation.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            SoftSetError::UnknownMeasure(_)
                | SoftSetError::WrongMeasureKind { .. }
                | SoftSetError::InvalidSteepness(_)
                | SoftSetError::InvalidThreshold(_)
                | SoftSetError::NoTrials
                | SoftSetError::Parse(_)
                | SoftSetError::EmptyUniverse
                | SoftSetError::EmptyAttributes
                | SoftSetError::DuplicateElement(_)
                | SoftSetError::DuplicateAttribute(_)
                | SoftSetError::UnknownAttribute(_)
                | SoftSetError::UnknownElement(_)
                | SoftSetError::DuplicateValue { .. }
        )
    }
}

pub type Result<T, E = SoftSetError> = std::result::Result<T, E>;
