use thiserror::Error;

use crate::series::Monomial;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exp requires a zero constant term")]
    NonZeroConstantTerm,

    #[error("log requires constant term exactly 1")]
    ConstantTermNotOne,

    #[error("rank-marker shift needs x-degree >= 1, found monomial {0}")]
    ZeroXDegree(Monomial),

    #[error("rank-marker shift needs a z-free series, found monomial {0}")]
    UnexpectedZ(Monomial),

    #[error("coefficient of {monomial} lies beyond truncation caps (dx={dx}, dy={dy}, dz={dz})")]
    BeyondCaps {
        monomial: Monomial,
        dx: u32,
        dy: u32,
        dz: u32,
    },

    #[error("internal consistency failure: {what} is not a non-negative integer ({value})")]
    NotACount { what: String, value: String },

    #[error("n must be at least {min}, got {n}")]
    InvalidN { n: usize, min: usize },

    #[error("n = {n} exceeds the guard of {max} for {what}; {hint}")]
    GuardExceeded {
        n: usize,
        max: usize,
        what: &'static str,
        hint: &'static str,
    },

    #[error("{q}^{n} points exceed the point budget of {budget}")]
    BudgetExceeded { n: usize, q: u64, budget: u128 },

    #[error("q = {0} must be a prime >= 5")]
    BadModulus(u64),
}
