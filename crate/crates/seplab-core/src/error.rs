use thiserror::Error;

/// Error codes surfaced by the library. Every variant names the violated
/// precondition or exhausted bound; none of them is a panic in disguise.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at offset {offset}: {msg}")]
    Parse { offset: usize, msg: String },

    #[error("undefined name `{0}`")]
    Scope(String),

    #[error("the zero ideal has no order")]
    ZeroIdeal,

    #[error("result not certified within degree bound: {0}")]
    Uncertified(String),

    #[error("ideal is not a value-threshold ideal for this point")]
    NotVideal,

    #[error("series truncation too small: need {needed}, have {have}")]
    Truncation { needed: i64, have: i64 },

    #[error("no sign-changing element found within the degree bound {0}")]
    DegreeExhausted(usize),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("divisorial chain is terminal; no further transform exists")]
    Terminal,

    #[error("lift is not centered at the maximal ideal of the chosen chart")]
    NotCentered,

    #[error("no lift exists in the chosen chart")]
    NoLift,

    #[error("inverse transform exponent not found below cap {0}")]
    InverseTransformCap(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
