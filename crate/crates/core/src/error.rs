use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("letter index {index} is not in an alphabet of {size} letters")]
    LetterOutOfRange { index: usize, size: usize },
    #[error("operands are over different alphabets")]
    AlphabetMismatch,
    #[error("position {position} is out of range for a word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("word `{0}` is not freely reduced")]
    NotFreelyReduced(String),
    #[error("the empty word cannot carry a significant letter")]
    EmptyWord,
    #[error("linear languages use different modes")]
    ModeMismatch,
    #[error("inversion is only defined for inverse-mode linear languages")]
    ReversalInversion,
    #[error("ball of radius {radius} exceeds the element cap of {cap}; use a smaller radius or prune X")]
    BallCapExceeded { cap: usize, radius: usize },
    #[error("target element `{0}` lies outside the ball")]
    TargetOutsideBall(String),
    #[error("invalid oracle: {0}")]
    InvalidOracle(String),
    #[error("G is free on the images of the alphabet; nothing to construct")]
    NothingToConstruct,
    #[error("generators do not have significant letters: {0}")]
    NotSignificant(String),
    #[error("central case requested but a cycle has unequal tape lengths")]
    UnbalancedCycle,
    #[error("{what} exceeds the cap of {cap} states")]
    StateCapExceeded { what: &'static str, cap: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
