use thiserror::Error;

/// Errors raised by the geometric operations and the experiment runner.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("a sampled curve needs at least 8 points, got {0}")]
    TooFewSamples(usize),
    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(f64),
    #[error("cusp exponent must be a finite real >= 1, got {0}")]
    InvalidCuspExponent(f64),
    #[error("affine scale factor must be non-zero")]
    ZeroScale,
    #[error("cusp angle must be positive, got {0}")]
    NonPositiveAngle(f64),
    #[error("point at infinity is not allowed here: {0}")]
    InfinitePoint(&'static str),
    #[error("invalid sampled curve: {0}")]
    InvalidCurve(String),
    #[error("degenerate curve: all samples within 1e-15 of each other")]
    DegenerateCurve,
    #[error("the identity fixes every point")]
    IdentityFixedPoints,
    #[error("singular matrix: determinant is zero")]
    SingularMatrix,
    #[error("trend estimation needs at least 3 increasing resolutions, got {0}")]
    TooFewResolutions(usize),
    #[error("resolutions must be strictly increasing")]
    UnsortedResolutions,
    #[error("element budget exceeded: ball of radius {bound} holds {requested} words, budget is {budget}")]
    BudgetExceeded {
        bound: usize,
        requested: u128,
        budget: usize,
    },
    #[error("the trivial group has an empty limit set")]
    TrivialLimitSet,
    #[error("invalid group parameter: {0}")]
    InvalidGroup(String),
    #[error("degeneration profile needs a cyclic family")]
    NonCyclicFamily,
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
