//! Singular values and eigenvalues of coupling matrices, and the
//! `(η, μ̃)` phase-diagram scan.
//!
//! A grid point is labelled topological when the smallest singular value
//! `d0` of its coupling matrix falls below a threshold. At finite `L` the
//! zero-mode splitting is exponentially small rather than zero, so the
//! threshold is a genuine parameter of the scan.

use alloc::vec::Vec;

use nalgebra::{Complex, DMatrix, DVector, Dyn, SVD};

use crate::error::{check_finite, Error, Result};
use crate::hamiltonian::CouplingMatrix;
use crate::model::{ChainParams, EtaPoint};

/// Default topological threshold on `d0`, in units of `E0`.
pub const DEFAULT_TOPOLOGICAL_THRESHOLD: f64 = 1e-6;

/// An eigenvalue counts as real when `|Im λ| ≤ REALITY_TOLERANCE · E0`.
pub const REALITY_TOLERANCE: f64 = 1e-9;

/// Left/right singular vectors belonging to `d0`: `M v = d0 u`.
#[derive(Debug, Clone, PartialEq)]
pub struct MinimalTriplet {
    pub left: DVector<f64>,
    pub right: DVector<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SingularSpectrum {
    values: Vec<f64>,
    minimal: Option<MinimalTriplet>,
}

impl SingularSpectrum {
    pub fn of(m: &CouplingMatrix) -> Self {
        Self::of_matrix(m.entries(), false)
    }

    pub fn with_vectors(m: &CouplingMatrix) -> Self {
        Self::of_matrix(m.entries(), true)
    }

    /// With `vectors`, the left vector is taken as the right singular vector
    /// of `Mᵀ`: the `U` factor returned alongside an (almost) vanishing
    /// singular value can be far less accurate than `Vᵀ`.
    pub fn of_matrix(m: &DMatrix<f64>, vectors: bool) -> Self {
        let svd = SVD::new(m.clone(), false, vectors);
        let mut values: Vec<f64> = svd.singular_values.iter().copied().collect();
        let minimal = if vectors {
            let right = minimal_right_vector(&svd);
            let mut left = minimal_right_vector(&SVD::new(m.transpose(), false, true));
            if left.dot(&(m * &right)) < 0.0 {
                left.neg_mut();
            }
            Some(MinimalTriplet { left, right })
        } else {
            None
        };
        values.sort_by(|a, b| b.total_cmp(a));
        Self { values, minimal }
    }

    /// Sorted descending.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn d0(&self) -> f64 {
        *self.values.last().expect("non-empty spectrum")
    }

    pub fn minimal_triplet(&self) -> Option<&MinimalTriplet> {
        self.minimal.as_ref()
    }

    /// Number of singular values strictly below `tolerance`.
    pub fn null_dimension(&self, tolerance: f64) -> usize {
        self.values.iter().filter(|&&s| s < tolerance).count()
    }
}

fn minimal_right_vector(svd: &SVD<f64, Dyn, Dyn>) -> DVector<f64> {
    let argmin = svd
        .singular_values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .expect("SVD of a non-empty matrix");
    svd.v_t.as_ref().expect("requested Vᵀ").row(argmin).transpose()
}

/// Eigenvalues of the (generally non-symmetric) real coupling matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSpectrum {
    values: Vec<Complex<f64>>,
}

impl ComplexSpectrum {
    pub fn of(m: &CouplingMatrix) -> Self {
        Self::of_matrix(m.entries())
    }

    pub fn of_matrix(m: &DMatrix<f64>) -> Self {
        Self {
            values: m.complex_eigenvalues().iter().copied().collect(),
        }
    }

    pub fn values(&self) -> &[Complex<f64>] {
        &self.values
    }

    pub fn max_abs_imag(&self) -> f64 {
        self.values.iter().fold(0.0, |a, z| a.max(z.im.abs()))
    }

    pub fn max_abs_real(&self) -> f64 {
        self.values.iter().fold(0.0, |a, z| a.max(z.re.abs()))
    }

    pub fn count_real(&self, tolerance: f64) -> usize {
        self.values.iter().filter(|z| z.im.abs() <= tolerance).count()
    }

    /// Sorted by real part, then imaginary part.
    pub fn sorted(&self) -> Vec<Complex<f64>> {
        let mut v = self.values.clone();
        v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        v
    }

    pub fn sorted_real_parts(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.values.iter().map(|z| z.re).collect();
        v.sort_by(f64::total_cmp);
        v
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Phase {
    Topological,
    Trivial,
}

impl Phase {
    pub fn classify(d0: f64, threshold: f64) -> Self {
        if d0 < threshold {
            Phase::Topological
        } else {
            Phase::Trivial
        }
    }
}

/// `d0` and phase labels over an `η × μ̃` grid, stored row-major with `η`
/// as the outer index.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseDiagram {
    eta_grid: Vec<f64>,
    mu_grid: Vec<f64>,
    d0: Vec<f64>,
    labels: Vec<Phase>,
    threshold: f64,
    sites: usize,
    e0: f64,
}

impl PhaseDiagram {
    /// Builds the diagram from precomputed `d0` values (row-major, `η`
    /// outer). Lets callers evaluate grid points however they like.
    pub fn assemble(
        sites: usize,
        e0: f64,
        eta_grid: Vec<f64>,
        mu_grid: Vec<f64>,
        threshold: f64,
        d0: Vec<f64>,
    ) -> Result<Self> {
        validate_scan(sites, e0, &eta_grid, &mu_grid, threshold)?;
        let expected = eta_grid.len() * mu_grid.len();
        if d0.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: d0.len(),
            });
        }
        let labels = d0.iter().map(|&d| Phase::classify(d, threshold)).collect();
        Ok(Self {
            eta_grid,
            mu_grid,
            d0,
            labels,
            threshold,
            sites,
            e0,
        })
    }

    pub fn eta_grid(&self) -> &[f64] {
        &self.eta_grid
    }

    pub fn mu_grid(&self) -> &[f64] {
        &self.mu_grid
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn e0(&self) -> f64 {
        self.e0
    }

    pub fn d0(&self, i: usize, j: usize) -> f64 {
        self.d0[i * self.mu_grid.len() + j]
    }

    pub fn label(&self, i: usize, j: usize) -> Phase {
        self.labels[i * self.mu_grid.len() + j]
    }

    /// `(η, μ̃, d0, phase)` in row-major order.
    pub fn points(&self) -> impl Iterator<Item = (f64, f64, f64, Phase)> + '_ {
        let n_mu = self.mu_grid.len();
        self.d0
            .iter()
            .zip(&self.labels)
            .enumerate()
            .map(move |(k, (&d, &p))| (self.eta_grid[k / n_mu], self.mu_grid[k % n_mu], d, p))
    }
}

pub fn validate_scan(sites: usize, e0: f64, eta_grid: &[f64], mu_grid: &[f64], threshold: f64) -> Result<()> {
    if sites == 0 {
        return Err(Error::NoSites);
    }
    if eta_grid.is_empty() {
        return Err(Error::EmptyGrid("eta"));
    }
    if mu_grid.is_empty() {
        return Err(Error::EmptyGrid("mu_tilde"));
    }
    if !threshold.is_finite() || threshold <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "threshold",
            requirement: "positive",
            value: threshold,
        });
    }
    for &eta in eta_grid {
        EtaPoint::new(eta, 0.0, e0)?;
    }
    for &mu in mu_grid {
        check_finite("mu_tilde", mu)?;
    }
    Ok(())
}

/// `d0` of the momentum coupling matrix at one `(η, μ̃)` point.
pub fn phase_point_d0(sites: usize, e0: f64, eta: f64, mu_tilde: f64) -> Result<f64> {
    let c = ChainParams::from_eta(sites, &EtaPoint::new(eta, mu_tilde, e0)?)?;
    Ok(SingularSpectrum::of(&CouplingMatrix::momentum(&c)).d0())
}

/// Serial scan over the grid. See [`PhaseDiagram::assemble`] for bringing
/// your own (e.g. parallel) evaluation.
pub fn scan_phase_diagram(
    sites: usize,
    e0: f64,
    eta_grid: &[f64],
    mu_grid: &[f64],
    threshold: f64,
) -> Result<PhaseDiagram> {
    validate_scan(sites, e0, eta_grid, mu_grid, threshold)?;
    let mut d0 = Vec::with_capacity(eta_grid.len() * mu_grid.len());
    for &eta in eta_grid {
        for &mu in mu_grid {
            d0.push(phase_point_d0(sites, e0, eta, mu)?);
        }
    }
    PhaseDiagram::assemble(sites, e0, eta_grid.to_vec(), mu_grid.to_vec(), threshold, d0)
}

/// `±2 cos²(πη/2)`: the bulk phase boundary in `μ̃`.
pub fn analytic_boundary(eta: f64) -> Result<(f64, f64)> {
    let p = EtaPoint::new(eta, 0.0, 1.0)?;
    let c = libm::cos(core::f64::consts::FRAC_PI_2 * p.eta());
    let b = 2.0 * c * c;
    Ok((b, -b))
}

/// `steps` evenly spaced values from `min` to `max` inclusive; a single
/// step yields `[min]`.
pub fn uniform_grid(min: f64, max: f64, steps: usize) -> Result<Vec<f64>> {
    let min = check_finite("grid minimum", min)?;
    let max = check_finite("grid maximum", max)?;
    match steps {
        0 => Err(Error::EmptyGrid("uniform")),
        1 => Ok(alloc::vec![min]),
        _ => {
            let last = (steps - 1) as f64;
            Ok((0..steps)
                .map(|i| {
                    if i == steps - 1 {
                        max
                    } else {
                        min + (max - min) * (i as f64 / last)
                    }
                })
                .collect())
        }
    }
}
