//! Matrix representations of the Kitaev chain.
//!
//! * [`CouplingMatrix::position`]: tridiagonal Majorana coupling matrix of
//!   the open chain.
//! * [`CouplingMatrix::momentum`]: the same operator in the hard-wall sine
//!   basis, built in closed form as `diag(E_ζ) + K` with `K` skew-symmetric
//!   and non-zero only between momenta of opposite parity.
//! * [`BdgRealSpace`]: `2L × 2L` particle/hole Bogoliubov–de Gennes matrix,
//!   used as an independent check on the coupling-matrix spectrum.
//! * [`PbcDispersion`]: the translation-invariant (periodic) dispersion.
//!
//! The pairing block of the momentum matrix is `+2Δ F` so that
//! `momentum == s · position · s` holds entrywise. Flipping its sign only
//! transposes the skew part, which leaves singular values and the
//! eigenvalue multiset unchanged and swaps the roles of the two null
//! vectors.

use alloc::vec::Vec;

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};
use crate::model::ChainParams;
use crate::trig::{cos_pi_frac, sin_pi_frac};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Representation {
    Position,
    Momentum,
}

/// Real `L × L` matrix `M` of the quadratic form `H = i Γᴬ · M · Γᴮ`.
///
/// Rows are contracted with the A species, columns with the B species.
#[derive(Debug, Clone, PartialEq)]
pub struct CouplingMatrix {
    entries: DMatrix<f64>,
    representation: Representation,
    params: ChainParams,
}

impl CouplingMatrix {
    /// Tridiagonal matrix with `−μ` on the diagonal, `−(t + Δ)` above it and
    /// `−(t − Δ)` below it.
    pub fn position(c: &ChainParams) -> Self {
        let n = c.sites();
        let (t, delta, mu) = (c.t(), c.delta(), c.mu());
        let entries = DMatrix::from_fn(n, n, |i, j| {
            if i == j {
                -mu
            } else if j == i + 1 {
                -(t + delta)
            } else if i == j + 1 {
                -(t - delta)
            } else {
                0.0
            }
        });
        Self {
            entries,
            representation: Representation::Position,
            params: *c,
        }
    }

    /// `M[ζ][ζ'] = E_ζ δ_ζζ' + 2Δ F_ζζ'` with `E_ζ = −μ − 2t cos(πζ/(L+1))`
    /// and `F_ζζ' = 2/(L+1) · S_ζ S_ζ' / (C_ζ − C_ζ')` for `ζ + ζ'` odd.
    pub fn momentum(c: &ChainParams) -> Self {
        let n = c.sites();
        let q = (n + 1) as u64;
        let (t, delta, mu) = (c.t(), c.delta(), c.mu());
        let sines: Vec<f64> = (1..=n).map(|z| sin_pi_frac(z as i64, q)).collect();
        let pref = 2.0 / q as f64;
        let entries = DMatrix::from_fn(n, n, |i, j| {
            let (z, zp) = ((i + 1) as i64, (j + 1) as i64);
            if i == j {
                -mu - 2.0 * t * cos_pi_frac(z, q)
            } else if (z + zp) % 2 == 1 {
                // evaluated once per unordered pair so the block is exactly skew
                let (lo, hi) = if z < zp { (z, zp) } else { (zp, z) };
                // C_lo − C_hi = 2 sin(π(lo+hi)/2(L+1)) sin(π(hi−lo)/2(L+1)) > 0
                let diff = 2.0 * sin_pi_frac(lo + hi, 2 * q) * sin_pi_frac(hi - lo, 2 * q);
                let f = 2.0 * delta * pref * sines[lo as usize - 1] * sines[hi as usize - 1] / diff;
                if z < zp {
                    f
                } else {
                    -f
                }
            } else {
                0.0
            }
        });
        Self {
            entries,
            representation: Representation::Momentum,
            params: *c,
        }
    }

    pub fn build(c: &ChainParams, representation: Representation) -> Self {
        match representation {
            Representation::Position => Self::position(c),
            Representation::Momentum => Self::momentum(c),
        }
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn into_entries(self) -> DMatrix<f64> {
        self.entries
    }

    pub fn representation(&self) -> Representation {
        self.representation
    }

    pub fn params(&self) -> &ChainParams {
        &self.params
    }

    pub fn sites(&self) -> usize {
        self.entries.nrows()
    }

    pub fn diagonal_part(&self) -> DMatrix<f64> {
        DMatrix::from_diagonal(&self.entries.diagonal())
    }

    /// Everything off the diagonal. Skew-symmetric in the momentum basis.
    pub fn off_diagonal_part(&self) -> DMatrix<f64> {
        let mut m = self.entries.clone();
        m.fill_diagonal(0.0);
        m
    }
}

/// Single-particle BdG matrix of the open chain in the basis
/// `(a_1 … a_L, a†_1 … a†_L)`:
///
/// ```text
/// [  h   D ]     h: −μ on the diagonal, −t on the first off-diagonals
/// [ −D  −h ]     D: antisymmetric, D[l][l+1] = Δ
/// ```
#[derive(Debug, Clone, PartialEq)]
pub struct BdgRealSpace {
    entries: DMatrix<f64>,
    params: ChainParams,
}

impl BdgRealSpace {
    pub fn new(c: &ChainParams) -> Self {
        let n = c.sites();
        let (t, delta, mu) = (c.t(), c.delta(), c.mu());
        let mut m = DMatrix::zeros(2 * n, 2 * n);
        for l in 0..n {
            m[(l, l)] = -mu;
            m[(n + l, n + l)] = mu;
            if l + 1 < n {
                m[(l, l + 1)] = -t;
                m[(l + 1, l)] = -t;
                m[(n + l, n + l + 1)] = t;
                m[(n + l + 1, n + l)] = t;
                // particle-hole block D and its partner −D
                m[(l, n + l + 1)] = delta;
                m[(l + 1, n + l)] = -delta;
                m[(n + l, l + 1)] = -delta;
                m[(n + l + 1, l)] = delta;
            }
        }
        Self { entries: m, params: *c }
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn params(&self) -> &ChainParams {
        &self.params
    }

    /// All `2L` eigenvalues, sorted descending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut values: Vec<f64> = SymmetricEigen::new(self.entries.clone())
            .eigenvalues
            .iter()
            .copied()
            .collect();
        values.sort_by(|a, b| b.total_cmp(a));
        values
    }

    /// Upper half of the spectrum (the quasiparticle energies), sorted
    /// descending. Zero modes contribute `|±0|`.
    pub fn quasiparticle_energies(&self) -> Vec<f64> {
        let values = self.eigenvalues();
        values[..self.params.sites()].iter().map(|x| x.abs()).collect()
    }
}

/// Periodic-chain BdG dispersion at one momentum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PbcDispersion {
    pub k: f64,
    pub eps_k: f64,
    pub delta_k_abs: f64,
    /// `−√(ε_k² + |Δ_k|²)`
    pub lambda_plus: f64,
    /// `+√(ε_k² + |Δ_k|²)`
    pub lambda_minus: f64,
}

impl PbcDispersion {
    pub fn new(c: &ChainParams, k: f64) -> Self {
        Self::from_trig(c, k, libm::cos(k), libm::sin(k))
    }

    fn from_trig(c: &ChainParams, k: f64, cos_k: f64, sin_k: f64) -> Self {
        let eps_k = -c.mu() - 2.0 * c.t() * cos_k;
        let delta_k_abs = c.delta() * sin_k.abs();
        let e = libm::hypot(eps_k, delta_k_abs);
        Self {
            k,
            eps_k,
            delta_k_abs,
            lambda_plus: -e,
            lambda_minus: e,
        }
    }

    /// `|λ₊ − λ₋|`
    pub fn gap(&self) -> f64 {
        (self.lambda_plus - self.lambda_minus).abs()
    }
}

/// Discrete periodic momenta `k_n = 2πn/L`, folded into `(−π, π]`, as
/// `(k, cos k, sin k)` with exact values at `k = 0` and `k = π`.
fn pbc_momenta(sites: usize) -> impl Iterator<Item = (f64, f64, f64)> {
    let q = sites as u64;
    (0..sites as i64).map(move |n| {
        let n = if 2 * n > sites as i64 { n - sites as i64 } else { n };
        let k = 2.0 * core::f64::consts::PI * n as f64 / q as f64;
        (k, cos_pi_frac(2 * n, q), sin_pi_frac(2 * n, q))
    })
}

/// Gap `ΔE(μ) = min_n |λ₊(k_n) − λ₋(k_n)|` over the `L` periodic momenta,
/// one value per entry of `mu_grid` (which overrides `c.mu()`).
pub fn pbc_gap_profile(c: &ChainParams, mu_grid: &[f64]) -> Result<Vec<(f64, f64)>> {
    if mu_grid.is_empty() {
        return Err(Error::EmptyGrid("mu"));
    }
    let momenta: Vec<_> = pbc_momenta(c.sites()).collect();
    Ok(mu_grid
        .iter()
        .map(|&mu| {
            let at = c.with_mu(mu);
            let gap = momenta
                .iter()
                .map(|&(k, cos_k, sin_k)| PbcDispersion::from_trig(&at, k, cos_k, sin_k).gap())
                .fold(f64::INFINITY, f64::min);
            (mu, gap)
        })
        .collect())
}
