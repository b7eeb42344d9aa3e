//! Data-parallel phase scan.
//!
//! Every grid point is independent, so the work is a plain parallel map;
//! results are collected in grid order before the diagram is assembled,
//! which keeps the output identical for any worker count.

use anyhow::{Context, Result};
use kitaev_core::spectral::{phase_point_d0, validate_scan};
use kitaev_core::PhaseDiagram;
use rayon::prelude::*;

/// Environment variable overriding the default worker count.
pub const WORKERS_ENV: &str = "KITAEV_WORKERS";

pub fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

pub fn parallel_phase_diagram(
    sites: usize,
    e0: f64,
    eta_grid: Vec<f64>,
    mu_grid: Vec<f64>,
    threshold: f64,
    workers: usize,
) -> Result<PhaseDiagram> {
    validate_scan(sites, e0, &eta_grid, &mu_grid, threshold)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .context("building worker pool")?;
    let n_mu = mu_grid.len();
    let d0 = pool.install(|| {
        (0..eta_grid.len() * n_mu)
            .into_par_iter()
            .map(|k| phase_point_d0(sites, e0, eta_grid[k / n_mu], mu_grid[k % n_mu]))
            .collect::<kitaev_core::Result<Vec<f64>>>()
    })?;
    Ok(PhaseDiagram::assemble(sites, e0, eta_grid, mu_grid, threshold, d0)?)
}
