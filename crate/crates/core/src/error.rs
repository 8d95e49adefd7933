use thiserror::Error;

use crate::poly::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A truncated series is too short for an exact result.
    #[error("truncation error: need order {needed}, series is truncated at {available}")]
    Truncation { needed: usize, available: usize },

    #[error("series is not invertible: constant term is zero")]
    NotInvertible,

    /// The scalar `u_k + v_k x̂_F` ansatz for the number operator left a
    /// nonzero residual.
    #[error("inconsistent number-operator ansatz for {scheme} at n = {n}: residual {residual}")]
    InconsistentAnsatz {
        scheme: String,
        n: usize,
        residual: String,
    },

    /// Two constructions that must agree did not.
    #[error("identity check failed: {0}")]
    IdentityFailed(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn nonzero_constant(what: &str, c: &Rational) -> Self {
        Error::Domain(format!("{what} requires a zero constant term, found {c}"))
    }
}
