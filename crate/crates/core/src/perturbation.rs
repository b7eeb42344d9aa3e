//! Weak-coupling spectrum: the pairing block treated as a perturbation of
//! the hard-wall tight-binding band.
//!
//! For `M = diag(E) + K` with `K` skew-symmetric the first-order shift
//! vanishes and the second-order shift of level `ζ` is
//! `−Σ K_ζζ'² / (E_ζ − E_ζ')`. With `E_ζ − E_ζ' = −2t (C_ζ − C_ζ')` this
//! gives
//!
//! ```text
//! E_ζ⁽³⁾ = E_ζ + 8Δ² / (t (L+1)²) · Σ_{ζ+ζ' odd} S_ζ² S_ζ'² / (C_ζ − C_ζ')³
//! ```
//!
//! and third-order terms vanish by parity. The sum collapses to
//! `(Δ²/t) · C_ζ`, i.e. a pure band-width renormalization with
//! `t_eff = t − Δ²/(2t)`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::model::ChainParams;
use crate::trig::{cos_pi_frac, sin_pi_frac};

#[derive(Debug, Clone, PartialEq)]
pub struct PerturbativeSpectrum {
    energies: Vec<f64>,
    t_eff: f64,
    params: ChainParams,
}

impl PerturbativeSpectrum {
    /// Indexed by `ζ - 1`.
    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    pub fn t_eff(&self) -> f64 {
        self.t_eff
    }

    pub fn params(&self) -> &ChainParams {
        &self.params
    }

    pub fn sorted(&self) -> Vec<f64> {
        let mut v = self.energies.clone();
        v.sort_by(f64::total_cmp);
        v
    }
}

fn require_hopping(c: &ChainParams) -> Result<f64> {
    if c.t() > 0.0 {
        Ok(c.t())
    } else {
        Err(Error::InvalidParameter {
            name: "t",
            requirement: "positive for perturbative spectra",
            value: c.t(),
        })
    }
}

/// `t − Δ²/(2t)`.
pub fn effective_hopping(c: &ChainParams) -> Result<f64> {
    let t = require_hopping(c)?;
    Ok(t - c.delta() * c.delta() / (2.0 * t))
}

pub fn third_order_spectrum(c: &ChainParams) -> Result<PerturbativeSpectrum> {
    let t = require_hopping(c)?;
    let n = c.sites();
    let q = (n + 1) as u64;
    let sin_sq: Vec<f64> = (1..=n)
        .map(|z| {
            let s = sin_pi_frac(z as i64, q);
            s * s
        })
        .collect();
    let pref = 8.0 * c.delta() * c.delta() / (t * (q * q) as f64);
    let energies = (1..=n as i64)
        .map(|z| {
            let bare = -c.mu() - 2.0 * t * cos_pi_frac(z, q);
            // only opposite-parity partners couple, so ζ' = ζ never appears
            let sum: f64 = ((1 + z % 2)..=n as i64)
                .step_by(2)
                .map(|zp| {
                    let diff = -2.0 * sin_pi_frac(z + zp, 2 * q) * sin_pi_frac(z - zp, 2 * q);
                    sin_sq[zp as usize - 1] / (diff * diff * diff)
                })
                .sum();
            bare + pref * sin_sq[z as usize - 1] * sum
        })
        .collect();
    Ok(PerturbativeSpectrum {
        energies,
        t_eff: effective_hopping(c)?,
        params: *c,
    })
}

/// Tight-binding band with the renormalized hopping `t_eff`.
pub fn effective_spectrum(c: &ChainParams) -> Result<PerturbativeSpectrum> {
    let t_eff = effective_hopping(c)?;
    let q = (c.sites() + 1) as u64;
    let energies = (1..=c.sites() as i64)
        .map(|z| -c.mu() - 2.0 * t_eff * cos_pi_frac(z, q))
        .collect();
    Ok(PerturbativeSpectrum {
        energies,
        t_eff,
        params: *c,
    })
}

/// Chemical potentials `μ̃_ζ = −2 t_eff cos(πζ/(L+1))` at which a weak
/// coupling level crosses zero, sorted ascending.
pub fn zero_mode_mu_predictions(sites: usize, t_eff: f64) -> Result<Vec<f64>> {
    if sites == 0 {
        return Err(Error::NoSites);
    }
    if t_eff == 0.0 || !t_eff.is_finite() {
        return Err(Error::InvalidParameter {
            name: "t_eff",
            requirement: "finite and non-zero",
            value: t_eff,
        });
    }
    let q = (sites + 1) as u64;
    let mut mus: Vec<f64> = (1..=sites as i64)
        .map(|z| -2.0 * t_eff * cos_pi_frac(z, q) + 0.0)
        .collect();
    mus.sort_by(f64::total_cmp);
    Ok(mus)
}
