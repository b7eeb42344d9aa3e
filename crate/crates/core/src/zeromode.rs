//! Majorana zero-mode retrieval and edge-decay fits.
//!
//! A vector orthogonal to every row of `M` solves `M v = 0` (right null
//! vector, species B); one orthogonal to every column solves `Mᵀ u = 0`
//! (left null vector, species A).
//!
//! The projection route orthonormalizes the rows (columns) with pivoted
//! modified Gram–Schmidt plus one reorthogonalization pass, then strips a
//! seeded random vector of its components along that span. At finite `L`
//! the zero mode is only exponentially close to exact, so all `L` rows are
//! numerically independent; the numerical rank (singular values above the
//! tolerance) decides how many pivots to keep, and the row left over with
//! the smallest remainder is the dependent one.

use alloc::vec::Vec;

use nalgebra::DVector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dst::SineBasis;
use crate::error::{Error, Result};
use crate::hamiltonian::{CouplingMatrix, Representation};
use crate::spectral::{SingularSpectrum, DEFAULT_TOPOLOGICAL_THRESHOLD};

/// Projected random vectors shorter than this mean there is no null space.
pub const MIN_REMAINDER: f64 = 1e-8;

/// Sites below `CUTOFF · max|ψ|` are ignored by the decay fit.
const FIT_CUTOFF: f64 = 1e-12;

/// Zero-energy Majorana pair in momentum (`phi`) and position (`psi`)
/// space. A is the left null vector, B the right one.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroModePair {
    pub phi_a: DVector<f64>,
    pub phi_b: DVector<f64>,
    pub psi_a: DVector<f64>,
    pub psi_b: DVector<f64>,
    /// `‖Mᵀ a‖₂` in the representation of the input matrix.
    pub residual_left: f64,
    /// `‖M b‖₂` in the representation of the input matrix.
    pub residual_right: f64,
    pub d0: f64,
}

impl ZeroModePair {
    /// Recomputes the position-space fields from the momentum fields.
    pub fn to_position(&self, basis: &SineBasis) -> Result<Self> {
        Ok(Self {
            psi_a: basis.apply(&self.phi_a)?,
            psi_b: basis.apply(&self.phi_b)?,
            ..self.clone()
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Edge {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FitMode {
    /// Fit only the outer envelope of `|ψ|`.
    #[default]
    Envelope,
    /// Fit every site above the cutoff.
    Plain,
}

/// `|ψ_l| ≈ amplitude · exp(−d/ξ)` with `d` the distance from `edge`
/// (0 at the edge site).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayFit {
    pub xi: f64,
    pub amplitude: f64,
    pub r_squared: f64,
    pub edge: Edge,
    pub support_sites: usize,
}

/// Projection route with the default rank tolerance
/// (`1e-6 · E0`).
pub fn null_pair_projection(m: &CouplingMatrix, seed: u64) -> Result<ZeroModePair> {
    let tol = DEFAULT_TOPOLOGICAL_THRESHOLD * m.params().energy_scale();
    null_pair_projection_with(m, seed, tol)
}

pub fn null_pair_projection_with(m: &CouplingMatrix, seed: u64, rank_tolerance: f64) -> Result<ZeroModePair> {
    let spectrum = SingularSpectrum::of(m);
    let n = m.sites();
    let dimension = spectrum.null_dimension(rank_tolerance);
    if dimension > 1 {
        return Err(Error::DegenerateNullSpace { dimension });
    }
    let entries = m.entries();
    let rank = n - dimension;
    let rows = orthonormal_span(entries.row_iter().map(|r| r.transpose()), rank);
    let cols = orthonormal_span(entries.column_iter().map(|c| c.into_owned()), rank);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || DVector::from_fn(n, |_, _| rng.random_range(-1.0..1.0));
    let b = null_direction(draw(), &rows)?;
    let a = null_direction(draw(), &cols)?;
    finish(m, a, b, spectrum.d0())
}

/// Minimal singular triplet route. Always returns the triplet; callers
/// decide from `d0` whether it is a zero mode.
pub fn null_pair_svd(m: &CouplingMatrix) -> ZeroModePair {
    let spectrum = SingularSpectrum::with_vectors(m);
    let triplet = spectrum.minimal_triplet().expect("vectors requested");
    let (a, b) = (triplet.left.clone(), triplet.right.clone());
    finish(m, a, b, spectrum.d0()).expect("dimensions match by construction")
}

/// SVD route that, like the projection route, reports a missing or
/// degenerate null space: singular values below `tolerance` count as
/// zero.
pub fn null_pair_svd_within(m: &CouplingMatrix, tolerance: f64) -> Result<ZeroModePair> {
    let spectrum = SingularSpectrum::with_vectors(m);
    match spectrum.null_dimension(tolerance) {
        0 => Err(Error::NoZeroMode {
            remainder: spectrum.d0(),
        }),
        1 => {
            let triplet = spectrum.minimal_triplet().expect("vectors requested");
            finish(m, triplet.left.clone(), triplet.right.clone(), spectrum.d0())
        }
        dimension => Err(Error::DegenerateNullSpace { dimension }),
    }
}

fn finish(m: &CouplingMatrix, a: DVector<f64>, b: DVector<f64>, d0: f64) -> Result<ZeroModePair> {
    let entries = m.entries();
    let residual_left = (entries.transpose() * &a).norm();
    let residual_right = (entries * &b).norm();
    let basis = SineBasis::new(m.sites())?;
    let (phi_a, phi_b, psi_a, psi_b) = match m.representation() {
        Representation::Momentum => {
            let (pa, pb) = (basis.apply(&a)?, basis.apply(&b)?);
            (a, b, pa, pb)
        }
        Representation::Position => {
            let (fa, fb) = (basis.apply(&a)?, basis.apply(&b)?);
            (fa, fb, a, b)
        }
    };
    let (phi_a, psi_a) = fix_sign(phi_a, psi_a);
    let (phi_b, psi_b) = fix_sign(phi_b, psi_b);
    Ok(ZeroModePair {
        phi_a,
        phi_b,
        psi_a,
        psi_b,
        residual_left,
        residual_right,
        d0,
    })
}

/// Flips both representations so the largest position-space component is
/// positive.
fn fix_sign(phi: DVector<f64>, psi: DVector<f64>) -> (DVector<f64>, DVector<f64>) {
    let mut peak = 0.0f64;
    for &x in psi.iter() {
        if x.abs() > peak.abs() {
            peak = x;
        }
    }
    if peak < 0.0 {
        (-phi, -psi)
    } else {
        (phi, psi)
    }
}

/// Pivoted MGS: repeatedly takes the remaining vector with the largest
/// remainder until `rank` vectors are orthonormalized (or nothing is left).
fn orthonormal_span(vectors: impl Iterator<Item = DVector<f64>>, rank: usize) -> Vec<DVector<f64>> {
    let mut work: Vec<DVector<f64>> = vectors.collect();
    let mut basis: Vec<DVector<f64>> = Vec::with_capacity(rank);
    while basis.len() < rank && !work.is_empty() {
        let (pivot, _) = work
            .iter()
            .map(|w| w.norm())
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("non-empty");
        let mut q = work.swap_remove(pivot);
        // reorthogonalization pass
        for e in &basis {
            let c = e.dot(&q);
            q.axpy(-c, e, 1.0);
        }
        let qn = q.norm();
        if qn == 0.0 {
            break;
        }
        q /= qn;
        for w in work.iter_mut() {
            let c = q.dot(w);
            w.axpy(-c, &q, 1.0);
        }
        basis.push(q);
    }
    basis
}

fn null_direction(mut v: DVector<f64>, span: &[DVector<f64>]) -> Result<DVector<f64>> {
    for _ in 0..2 {
        for e in span {
            let c = e.dot(&v);
            v.axpy(-c, e, 1.0);
        }
    }
    let remainder = v.norm();
    if remainder < MIN_REMAINDER {
        return Err(Error::NoZeroMode { remainder });
    }
    Ok(v / remainder)
}

/// Weight `Σ|ψ_l|²` in the first and last `⌊L/2⌋` sites; for odd `L` the
/// central site counts toward neither.
pub fn half_chain_weights(psi: &DVector<f64>) -> (f64, f64) {
    let n = psi.len();
    let half = n / 2;
    let left = psi.rows(0, half).norm_squared();
    let right = psi.rows(n - half, half).norm_squared();
    (left, right)
}

pub fn dominant_edge(psi: &DVector<f64>) -> Edge {
    let (left, right) = half_chain_weights(psi);
    if left >= right {
        Edge::Left
    } else {
        Edge::Right
    }
}

/// Log-linear least-squares fit of `|ψ_l|` against distance from `edge`.
///
/// In envelope mode a site is kept only if it exceeds every site farther
/// from the edge. For a decaying oscillation this picks out the crests;
/// for a monotone profile it keeps everything.
pub fn fit_decay(psi: &[f64], edge: Edge, mode: FitMode) -> Result<DecayFit> {
    let peak = psi.iter().fold(0.0f64, |a, x| a.max(x.abs()));
    if peak == 0.0 {
        return Err(Error::ZeroVector);
    }
    let n = psi.len();
    let distance = |i: usize| match edge {
        Edge::Left => i,
        Edge::Right => n - 1 - i,
    };
    let site_at = |d: usize| match edge {
        Edge::Left => d,
        Edge::Right => n - 1 - d,
    };
    let cutoff = FIT_CUTOFF * peak;
    let mut points: Vec<(f64, f64)> = Vec::new();
    match mode {
        FitMode::Plain => {
            for d in 0..n {
                let a = psi[site_at(d)].abs();
                if a > cutoff {
                    points.push((d as f64, libm::log(a)));
                }
            }
        }
        FitMode::Envelope => {
            let mut running = cutoff;
            for d in (0..n).rev() {
                let a = psi[site_at(d)].abs();
                if a > running {
                    points.push((d as f64, libm::log(a)));
                    running = a;
                }
            }
            points.reverse();
        }
    }
    debug_assert!(points.iter().all(|&(d, _)| distance(site_at(d as usize)) == d as usize));

    if points.len() == 1 {
        return Ok(DecayFit {
            xi: 0.0,
            amplitude: libm::exp(points[0].1),
            r_squared: 1.0,
            edge,
            support_sites: 1,
        });
    }
    let (slope, intercept, r_squared) = linear_fit(&points);
    if slope.is_nan() || slope >= 0.0 {
        return Err(Error::NotDecaying { slope });
    }
    Ok(DecayFit {
        xi: -1.0 / slope,
        amplitude: libm::exp(intercept),
        r_squared,
        edge,
        support_sites: points.len(),
    })
}

fn linear_fit(points: &[(f64, f64)]) -> (f64, f64, f64) {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let syy: f64 = points.iter().map(|p| (p.1 - my) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_res: f64 = points
        .iter()
        .map(|p| {
            let r = p.1 - (intercept + slope * p.0);
            r * r
        })
        .sum();
    let r2 = if syy == 0.0 { 1.0 } else { 1.0 - ss_res / syy };
    (slope, intercept, r2.clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{ChainParams, EtaPoint};
    use alloc::vec;

    fn eta_params(sites: usize, eta: f64, mu_tilde: f64) -> ChainParams {
        ChainParams::from_eta(sites, &EtaPoint::new(eta, mu_tilde, 1.0).unwrap()).unwrap()
    }

    fn unit(n: usize, i: usize) -> DVector<f64> {
        let mut v = DVector::zeros(n);
        v[i] = 1.0;
        v
    }

    #[test]
    fn sweet_spot_modes_sit_on_the_end_sites() {
        let m = CouplingMatrix::momentum(&eta_params(51, 0.5, 0.0));
        for pair in [
            null_pair_projection(&m, 0).unwrap(),
            null_pair_projection(&m, 7).unwrap(),
            null_pair_svd(&m),
        ] {
            assert!((&pair.psi_b - unit(51, 0)).amax() < 1e-12);
            assert!((&pair.psi_a - unit(51, 50)).amax() < 1e-12);
            assert!(pair.residual_left < 1e-12 && pair.residual_right < 1e-12);
        }
    }

    #[test]
    fn two_site_sweet_spot_position() {
        let c = ChainParams::new(2, 0.5, 0.5, 0.0).unwrap();
        let pair = null_pair_svd(&CouplingMatrix::position(&c));
        assert!((&pair.psi_b - unit(2, 0)).amax() < 1e-15);
        assert!((&pair.psi_a - unit(2, 1)).amax() < 1e-15);
        assert_eq!(pair.d0, 0.0);
    }

    #[test]
    fn trivial_phase_has_no_zero_mode() {
        let m = CouplingMatrix::momentum(&eta_params(51, 0.5, 2.5));
        assert!(matches!(null_pair_projection(&m, 0), Err(Error::NoZeroMode { .. })));
    }

    #[test]
    fn checked_svd_route() {
        let m = CouplingMatrix::momentum(&eta_params(51, 0.5, 0.0));
        assert_eq!(null_pair_svd_within(&m, 1e-6).unwrap(), null_pair_svd(&m));
        let m = CouplingMatrix::momentum(&eta_params(51, 0.5, 2.5));
        assert!(matches!(null_pair_svd_within(&m, 1e-6), Err(Error::NoZeroMode { .. })));
        let m = CouplingMatrix::position(&ChainParams::new(3, 0.0, 0.0, 0.0).unwrap());
        assert_eq!(
            null_pair_svd_within(&m, 1e-6),
            Err(Error::DegenerateNullSpace { dimension: 3 })
        );
    }

    #[test]
    fn degenerate_null_space_is_reported() {
        // t = Δ = 0, μ = 0: M = 0
        let c = ChainParams::new(4, 0.0, 0.0, 0.0).unwrap();
        let m = CouplingMatrix::position(&c);
        assert_eq!(
            null_pair_projection(&m, 0),
            Err(Error::DegenerateNullSpace { dimension: 4 })
        );
    }

    #[test]
    fn projection_is_deterministic() {
        let m = CouplingMatrix::momentum(&eta_params(31, 0.4, 0.2));
        assert_eq!(null_pair_projection(&m, 3), null_pair_projection(&m, 3));
    }

    #[test]
    fn to_position_round_trips() {
        let basis = SineBasis::new(9).unwrap();
        let mut pair = null_pair_svd(&CouplingMatrix::momentum(&eta_params(9, 0.5, 0.0)));
        pair.phi_a = basis.matrix().column(3).into_owned();
        pair.phi_b = DVector::zeros(9);
        let moved = pair.to_position(&basis).unwrap();
        assert!((&moved.psi_a - unit(9, 3)).amax() < 1e-14);
        assert_eq!(moved.psi_b, DVector::zeros(9));
        assert!(pair.to_position(&SineBasis::new(8).unwrap()).is_err());
    }

    #[test]
    fn fit_single_site() {
        let fit = fit_decay(unit(51, 0).as_slice(), Edge::Left, FitMode::Envelope).unwrap();
        assert_eq!((fit.xi, fit.support_sites, fit.r_squared), (0.0, 1, 1.0));
    }

    #[test]
    fn fit_exact_exponential() {
        let psi: Vec<f64> = (1..=51).map(|l| libm::exp(-(l as f64) / 3.0)).collect();
        for mode in [FitMode::Envelope, FitMode::Plain] {
            let fit = fit_decay(&psi, Edge::Left, mode).unwrap();
            assert!((fit.xi - 3.0).abs() < 1e-10, "{fit:?}");
            assert!((fit.r_squared - 1.0).abs() < 1e-12);
            assert_eq!(fit.support_sites, 51);
            assert!((fit.amplitude - libm::exp(-1.0 / 3.0)).abs() < 1e-10);
        }
        let mirrored: Vec<f64> = psi.iter().rev().copied().collect();
        let fit = fit_decay(&mirrored, Edge::Right, FitMode::Plain).unwrap();
        assert!((fit.xi - 3.0).abs() < 1e-10);
    }

    #[test]
    fn envelope_skips_troughs() {
        let psi: Vec<f64> = (0..41)
            .map(|d| libm::exp(-(d as f64) / 4.0) * if d % 2 == 0 { 1.0 } else { 0.1 })
            .collect();
        let fit = fit_decay(&psi, Edge::Left, FitMode::Envelope).unwrap();
        assert_eq!(fit.support_sites, 21);
        assert!((fit.xi - 4.0).abs() < 1e-10);
        let plain = fit_decay(&psi, Edge::Left, FitMode::Plain).unwrap();
        assert!(plain.r_squared < 0.99);
    }

    #[test]
    fn fit_errors() {
        assert_eq!(fit_decay(&[0.0; 5], Edge::Left, FitMode::Plain), Err(Error::ZeroVector));
        assert!(matches!(
            fit_decay(&[0.1, 0.2, 0.4], Edge::Left, FitMode::Plain),
            Err(Error::NotDecaying { .. })
        ));
    }

    #[test]
    fn half_weights() {
        let psi = DVector::from_vec(vec![0.6, 0.0, 0.8]);
        let (l, r) = half_chain_weights(&psi);
        assert!((l - 0.36).abs() < 1e-15 && (r - 0.64).abs() < 1e-15);
        assert_eq!(dominant_edge(&psi), Edge::Right);
    }
}
