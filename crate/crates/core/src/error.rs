use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown identifier '{name}' at position {pos}")]
    UnknownIdentifier { pos: usize, name: String },
    #[error("exponent at position {pos} is not a nonnegative integer literal")]
    BadExponent { pos: usize },

    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("constant polynomial is not allowed here")]
    ConstantPolynomial,
    #[error("curve does not pass through origin")]
    NotThroughOrigin,
    #[error("not a nonzero homogeneous linear form: {0}")]
    NotALine(String),

    #[error("factor {index} does not pass through origin")]
    FactorNotThroughOrigin { index: usize },
    #[error("factor {index} is constant")]
    ConstantFactor { index: usize },
    #[error("non-isolated singularity: factors {i} and {j} share a component")]
    CommonComponent { i: usize, j: usize },
    #[error("non-isolated singularity: factor {index} has a repeated component")]
    RepeatedComponent { index: usize },
    #[error("factor list is empty")]
    NoFactors,
    #[error("non-isolated singularity: {0}")]
    NonIsolated(String),

    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("resampling budget of {0} attempts exhausted")]
    ResampleBudget(usize),
    #[error("oracle truncation cap N = {cap} reached without stabilization")]
    OracleCap { cap: usize },
}

impl Error {
    /// Input errors as opposed to resource caps or sampling failures.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::OracleCap { .. } | Error::ResampleBudget(_))
    }
}
