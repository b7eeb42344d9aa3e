//! Orthonormal type-I discrete sine transform.
//!
//! `s[l][ζ] = √(2/(L+1)) · sin(π l ζ / (L+1))` for `l, ζ ∈ 1..=L`. The
//! basis functions vanish at `l = 0` and `l = L + 1`, which is what encodes
//! hard-wall boundaries. The matrix is symmetric and orthogonal, hence its
//! own inverse.
//!
//! Indices in the public API are 1-based like the sums they come from;
//! storage is 0-based.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::trig::sin_pi_frac;

#[derive(Debug, Clone, PartialEq)]
pub struct SineBasis {
    matrix: DMatrix<f64>,
}

impl SineBasis {
    pub fn new(sites: usize) -> Result<Self> {
        if sites == 0 {
            return Err(Error::NoSites);
        }
        let norm = libm::sqrt(2.0 / (sites + 1) as f64);
        let matrix = DMatrix::from_fn(sites, sites, |i, j| {
            norm * sin_pi_frac(((i + 1) * (j + 1)) as i64, (sites + 1) as u64)
        });
        Ok(Self { matrix })
    }

    pub fn sites(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// Normalized basis function `ζ` evaluated at any integer site `l`,
    /// including the virtual sites `0` and `L + 1` outside the chain.
    pub fn continuation(&self, l: i64, zeta: usize) -> f64 {
        let q = (self.sites() + 1) as u64;
        libm::sqrt(2.0 / q as f64) * sin_pi_frac(l * zeta as i64, q)
    }

    /// `s · v`. Maps position amplitudes to momentum amplitudes and back.
    pub fn apply(&self, v: &DVector<f64>) -> Result<DVector<f64>> {
        self.check(v.len())?;
        Ok(&self.matrix * v)
    }

    /// `s · m · sᵀ`: re-expresses an operator in the other basis.
    pub fn conjugate(&self, m: &DMatrix<f64>) -> Result<DMatrix<f64>> {
        self.check(m.nrows())?;
        self.check(m.ncols())?;
        Ok(&self.matrix * m * self.matrix.transpose())
    }

    fn check(&self, found: usize) -> Result<()> {
        if found == self.sites() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.sites(),
                found,
            })
        }
    }
}
