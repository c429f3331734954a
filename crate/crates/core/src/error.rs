use thiserror::Error;

/// Every failure the library can report. Variant names double as the
/// error-case names printed by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("WrongSetSize: set {set:?} has {actual} elements, expected {expected}")]
    WrongSetSize {
        set: Vec<usize>,
        expected: usize,
        actual: usize,
    },
    #[error("ElementOutOfRange: element {element} is not in [1, {n}]")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("DuplicateSet: {0:?} occurs more than once")]
    DuplicateSet(Vec<usize>),
    #[error("EmptyFamily: operation requires a nonempty family")]
    EmptyFamily,
    #[error("ZeroMinDegree: element {0} is not covered by any member")]
    ZeroMinDegree(usize),
    #[error("InvalidS: {0}")]
    InvalidS(String),
    #[error("WrongProbeSize: probe has {actual} elements, expected {expected}")]
    WrongProbeSize { expected: usize, actual: usize },
    #[error("InvalidParameters: {0}")]
    InvalidParameters(String),
    #[error("InvalidIndices: {0}")]
    InvalidIndices(String),
    #[error("DimensionMismatch: expected length {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("LpUnbounded: the linear program has no finite optimum")]
    LpUnbounded,
    #[error("NotPrimePower: {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("NotRegular: {0}")]
    NotRegular(String),
    #[error("NotIntersecting: {0}")]
    NotIntersecting(String),
    #[error("LTooLarge: l = {l} must be below the minimum pairwise difference {min_difference}")]
    LTooLarge { l: usize, min_difference: usize },
    #[error("GroundSetExhausted: k + l = {needed} exceeds n = {n}")]
    GroundSetExhausted { needed: usize, n: usize },
    #[error("GroundSetTooLarge: n = {n} exceeds the supported maximum {max}")]
    GroundSetTooLarge { n: usize, max: usize },
    #[error("RatioMismatch: ratios {left} and {right} differ")]
    RatioMismatch { left: String, right: String },
    #[error("SizeCapExceeded: {requested} sets requested, cap is {cap}")]
    SizeCapExceeded { requested: String, cap: u64 },
    #[error("NoReplacementFound: {0}")]
    NoReplacementFound(String),
    #[error("ProfileInfeasible: {0}")]
    ProfileInfeasible(String),
    #[error("RemovalNotPresent: {0:?} is not a member of the folded family")]
    RemovalNotPresent(Vec<usize>),
    #[error("PowerOfTwoK: k = {0} is a power of two")]
    PowerOfTwoK(usize),
    #[error("KNotPowerOfTwo: k = {0} is not a power of two")]
    KNotPowerOfTwo(usize),
    #[error("LimitExceeded: n = {n} is above the search limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error("ParseError: {0}")]
    ParseError(String),
    #[error("InvariantViolation: {0}")]
    InvariantViolation(String),
    #[error("Io: {0}")]
    Io(String),
}

impl Error {
    /// Name of the error case, e.g. `"DuplicateSet"`.
    pub fn case(&self) -> &'static str {
        match self {
            Error::WrongSetSize { .. } => "WrongSetSize",
            Error::ElementOutOfRange { .. } => "ElementOutOfRange",
            Error::DuplicateSet(_) => "DuplicateSet",
            Error::EmptyFamily => "EmptyFamily",
            Error::ZeroMinDegree(_) => "ZeroMinDegree",
            Error::InvalidS(_) => "InvalidS",
            Error::WrongProbeSize { .. } => "WrongProbeSize",
            Error::InvalidParameters(_) => "InvalidParameters",
            Error::InvalidIndices(_) => "InvalidIndices",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::LpUnbounded => "LpUnbounded",
            Error::NotPrimePower(_) => "NotPrimePower",
            Error::NotRegular(_) => "NotRegular",
            Error::NotIntersecting(_) => "NotIntersecting",
            Error::LTooLarge { .. } => "LTooLarge",
            Error::GroundSetExhausted { .. } => "GroundSetExhausted",
            Error::GroundSetTooLarge { .. } => "GroundSetTooLarge",
            Error::RatioMismatch { .. } => "RatioMismatch",
            Error::SizeCapExceeded { .. } => "SizeCapExceeded",
            Error::NoReplacementFound(_) => "NoReplacementFound",
            Error::ProfileInfeasible(_) => "ProfileInfeasible",
            Error::RemovalNotPresent(_) => "RemovalNotPresent",
            Error::PowerOfTwoK(_) => "PowerOfTwoK",
            Error::KNotPowerOfTwo(_) => "KNotPowerOfTwo",
            Error::LimitExceeded { .. } => "LimitExceeded",
            Error::ParseError(_) => "ParseError",
            Error::InvariantViolation(_) => "InvariantViolation",
            Error::Io(_) => "Io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
