//! Chain parameters and the η-parameterization of the coupling plane.
//!
//! With `E0 = t + Δ` as energy scale, `t = E0 cos²(πη/2)` and
//! `Δ = E0 sin²(πη/2)` sweep from free fermions (`η = 0`) to pure pairing
//! (`η = 1`).

use core::f64::consts::{FRAC_2_PI, FRAC_PI_2};

use crate::error::{check_finite, Error, Result};

/// Default upper edge of the weak-coupling regime in `η`.
pub const DEFAULT_WEAK_COUPLING_ETA: f64 = 0.15;

/// Uniform chain: `L` sites, hopping `t`, pairing `Δ`, chemical potential `μ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainParams {
    sites: usize,
    t: f64,
    delta: f64,
    mu: f64,
}

impl ChainParams {
    pub fn new(sites: usize, t: f64, delta: f64, mu: f64) -> Result<Self> {
        if sites == 0 {
            return Err(Error::NoSites);
        }
        let t = check_finite("t", t)?;
        let delta = check_finite("delta", delta)?;
        let mu = check_finite("mu", mu)?;
        if t < 0.0 {
            return Err(Error::InvalidParameter {
                name: "t",
                requirement: "non-negative",
                value: t,
            });
        }
        if delta < 0.0 {
            return Err(Error::InvalidParameter {
                name: "delta",
                requirement: "non-negative",
                value: delta,
            });
        }
        Ok(Self { sites, t, delta, mu })
    }

    /// Maps an `(η, μ̃, E0)` point onto physical couplings for a chain of
    /// `sites` sites.
    pub fn from_eta(sites: usize, p: &EtaPoint) -> Result<Self> {
        let c = libm::cos(FRAC_PI_2 * p.eta);
        let s = libm::sin(FRAC_PI_2 * p.eta);
        Self::new(sites, p.e0 * c * c, p.e0 * s * s, p.mu_tilde * p.e0)
    }

    /// Inverse of [`ChainParams::from_eta`]. Fails when `t = Δ = 0`.
    pub fn to_eta(&self) -> Result<EtaPoint> {
        let e0 = self.t + self.delta;
        if e0 <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "t + delta",
                requirement: "positive",
                value: e0,
            });
        }
        let eta = if self.t == 0.0 {
            1.0
        } else {
            FRAC_2_PI * libm::atan(libm::sqrt(self.delta / self.t))
        };
        EtaPoint::new(eta, self.mu / e0, e0)
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// `E0 = t + Δ`, or 1 when both couplings vanish.
    pub fn energy_scale(&self) -> f64 {
        let e0 = self.t + self.delta;
        if e0 > 0.0 {
            e0
        } else {
            1.0
        }
    }

    pub fn with_mu(self, mu: f64) -> Self {
        Self { mu, ..self }
    }

    pub fn with_sites(self, sites: usize) -> Result<Self> {
        Self::new(sites, self.t, self.delta, self.mu)
    }
}

/// A point of the `(η, μ̃)` plane at energy scale `E0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EtaPoint {
    eta: f64,
    mu_tilde: f64,
    e0: f64,
}

impl EtaPoint {
    pub fn new(eta: f64, mu_tilde: f64, e0: f64) -> Result<Self> {
        let eta = check_finite("eta", eta)?;
        let mu_tilde = check_finite("mu_tilde", mu_tilde)?;
        let e0 = check_finite("E0", e0)?;
        if !(0.0..=1.0).contains(&eta) {
            return Err(Error::InvalidParameter {
                name: "eta",
                requirement: "in [0, 1]",
                value: eta,
            });
        }
        if e0 <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "E0",
                requirement: "positive",
                value: e0,
            });
        }
        Ok(Self { eta, mu_tilde, e0 })
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn mu_tilde(&self) -> f64 {
        self.mu_tilde
    }

    pub fn e0(&self) -> f64 {
        self.e0
    }

    pub fn regime(&self) -> Regime {
        self.regime_with(DEFAULT_WEAK_COUPLING_ETA)
    }

    pub fn regime_with(&self, weak_coupling_eta: f64) -> Regime {
        if self.eta == 0.0 {
            Regime::Free
        } else if self.eta == 1.0 {
            Regime::PairingOnly
        } else if self.eta <= weak_coupling_eta {
            Regime::WeakCoupling
        } else {
            Regime::Dimerized
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `η = 0`: free fermions, real spectrum.
    Free,
    /// Small `η`: pairing is a perturbation of the tight-binding band.
    WeakCoupling,
    /// Intermediate `η`: complex spectrum, unpaired Majoranas.
    Dimerized,
    /// `η = 1`: pairing only, purely imaginary spectrum.
    PairingOnly,
}
