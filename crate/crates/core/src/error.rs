use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("negative ratio {0}")]
    Negative(String),
    #[error("malformed ratio {0:?}")]
    MalformedRatio(String),
    #[error("lcm of an empty list")]
    EmptyList,
    #[error("lcm argument must be positive")]
    ZeroInLcm,
    #[error("target value must be positive")]
    NonPositiveTarget,
    #[error("tolerance must lie strictly between 0 and 1")]
    ToleranceOutOfRange,
    #[error("no convergent within tolerance after {0} terms")]
    NoConvergence(usize),
    #[error("scale note {index}: {reason}")]
    InvalidScale { index: usize, reason: String },
    #[error("unknown scale {0:?} (expected A, B, C, D or E)")]
    UnknownScale(String),
    #[error("chord size {0} out of range 2..=12")]
    ChordSizeOutOfRange(usize),
    #[error("invalid chord {0:?}: offsets must satisfy 0 < x1 < ... < x(k-1) <= 11")]
    InvalidChord(String),
    #[error("interval index {0} out of range 1..=11")]
    IntervalOutOfRange(usize),
    #[error("unknown measure {0:?}")]
    UnknownMeasure(String),
    #[error("unknown voicing {0:?} (expected closed, reduced or pitch-class)")]
    UnknownVoicing(String),
    #[error("notes must be non-empty and strictly increasing")]
    InvalidNotes,
}
