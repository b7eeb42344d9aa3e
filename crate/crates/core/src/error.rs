use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("chain needs at least one site")]
    NoSites,
    #[error("{name} must be {requirement}, got {value}")]
    InvalidParameter {
        name: &'static str,
        requirement: &'static str,
        value: f64,
    },
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{0} grid is empty")]
    EmptyGrid(&'static str),
    #[error("no zero mode (remainder {remainder:.3e})")]
    NoZeroMode { remainder: f64 },
    #[error("null space has dimension {dimension}, expected a single zero-mode pair")]
    DegenerateNullSpace { dimension: usize },
    #[error("vector is identically zero")]
    ZeroVector,
    #[error("profile does not decay away from the edge (slope {slope:.3e})")]
    NotDecaying { slope: f64 },
}

pub(crate) fn check_finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::InvalidParameter {
            name,
            requirement: "finite",
            value,
        })
    }
}
