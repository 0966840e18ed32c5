use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial has a nonzero constant term and is not divisible by x")]
    NonzeroConstantTerm,

    #[error("polynomial degree {degree} exceeds the bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },

    #[error("instance needs {requested} steps but the enumeration cap is {cap}")]
    CapExceeded { requested: usize, cap: usize },

    #[error("invalid index {index}: {reason}")]
    InvalidIndex { index: usize, reason: &'static str },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("moment of degree {degree} requested but the functional is defined up to degree {max_degree}")]
    DegreeOutOfRange { degree: usize, max_degree: usize },

    #[error("leading principal minor is not positive ({0})")]
    NonpositiveCofactor(String),

    #[error("polynomial {0} of the family does not satisfy a three-term recurrence")]
    NotInRecurrence(usize),

    #[error("polynomial {0} of the family is not monic of degree {0}")]
    NotMonic(usize),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}
