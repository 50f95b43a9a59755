use thiserror::Error;

/// A scalar string that is not in the canonical rendering.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid scalar literal `{0}`")]
pub struct ParseScalarError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("composition {parts:?} does not lie in Lambda({n},{r})")]
    BadComposition { parts: Vec<u32>, n: usize, r: u32 },

    #[error("generator {0} is out of range for n = {1}")]
    GeneratorOutOfRange(String, usize),

    #[error("cannot parse generator `{0}`")]
    BadGenerator(String),

    #[error("cannot parse matrix index `{0}`")]
    BadIndex(String),

    #[error("oracle refused: r = {r} exceeds the limit {max}")]
    OracleGuard { r: u32, max: u32 },

    #[error("oracle composite for {context} is not in the span of the expected basis")]
    OracleInconsistent { context: String },

    #[error(transparent)]
    Scalar(#[from] ParseScalarError),
}

pub type Result<T> = std::result::Result<T, Error>;
