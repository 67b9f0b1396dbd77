use thiserror::Error;

use crate::bochner::PsdWitness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("{what}: size {size} exceeds guard {limit}")]
    GuardExceeded {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("group mismatch: C_{left_m}^{left_n} vs C_{right_m}^{right_n}")]
    SpecMismatch {
        left_m: usize,
        left_n: usize,
        right_m: usize,
        right_n: usize,
    },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("function is not positive semidefinite: {0}")]
    NotPsd(PsdWitness),

    #[error("not a probability distribution: {0}")]
    NotADistribution(String),

    #[error("polynomial degree {degree} is not below {bound}")]
    DegreeTooHigh { degree: usize, bound: usize },

    #[error("zero function")]
    ZeroFunction,

    #[error("linear program is {0}")]
    LpStatus(&'static str),
}
