use thiserror::Error;

use crate::coords::SphericalPoint;

/// Errors raised by state construction and field evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Invalid indices or arguments outside an operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A vector field has a non-vanishing limit on the polar axis, where `u_phi` is undefined.
    #[error("polar-axis singularity at {0}")]
    Pole(SphericalPoint),

    /// The density vanishes (or falls below the node tolerance), so `J / rho` is undefined.
    #[error("density node at {point} (rho = {rho:e})")]
    Node { point: SphericalPoint, rho: f64 },

    /// A quadrature or integration produced a non-finite or unconverged value.
    #[error("numeric error: {0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
