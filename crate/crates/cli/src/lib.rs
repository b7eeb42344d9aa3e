//! Command-line front end for `kitaev-core`.
//!
//! Each subcommand is a pure function from its arguments to a [`Report`]:
//! the CSV body plus any summary lines. [`run`] does the IO.

pub mod args;
pub mod csv;
pub mod scan;

use std::io::Write;

use anyhow::{ensure, Context, Result};
use kitaev_core::hamiltonian::pbc_gap_profile;
use kitaev_core::perturbation::{
    effective_hopping, effective_spectrum, third_order_spectrum, zero_mode_mu_predictions,
};
use kitaev_core::spectral::{uniform_grid, DEFAULT_TOPOLOGICAL_THRESHOLD};
use kitaev_core::zeromode::{dominant_edge, fit_decay, null_pair_projection_with, null_pair_svd_within};
use kitaev_core::{
    ChainParams, ComplexSpectrum, CouplingMatrix, EtaPoint, FitMode, Phase, Representation, SingularSpectrum,
};

use crate::args::{
    Basis, Cli, Command, Fit, Method, PbcGapArgs, PhaseDiagramArgs, SpectrumArgs, SpectrumKind, ZeroModeMusArgs,
    ZeroModesArgs,
};
use crate::csv::{float, summary, Table};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub csv: String,
    /// Lines destined for standard error.
    pub summary: Vec<String>,
}

impl From<String> for Report {
    fn from(csv: String) -> Self {
        Self {
            csv,
            summary: Vec::new(),
        }
    }
}

pub fn run(cli: Cli) -> Result<()> {
    let (report, out) = match cli.command {
        Command::PbcGap(a) => (pbc_gap(&a)?, a.output.out),
        Command::Spectrum(a) => (spectrum(&a)?, a.output.out),
        Command::PhaseDiagram(a) => (phase_diagram(&a)?, a.output.out),
        Command::ZeroModes(a) => (zero_modes(&a)?, a.output.out),
        Command::ZeroModeMus(a) => (zero_mode_mus(&a)?, a.output.out),
    };
    match out {
        Some(path) => std::fs::write(&path, &report.csv).with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout()
            .lock()
            .write_all(report.csv.as_bytes())
            .context("writing to stdout")?,
    }
    let mut stderr = std::io::stderr().lock();
    for line in &report.summary {
        writeln!(stderr, "{line}")?;
    }
    Ok(())
}

pub fn pbc_gap(a: &PbcGapArgs) -> Result<Report> {
    ensure!(a.mu_steps >= 2, "--mu-steps must be at least 2, got {}", a.mu_steps);
    let c = ChainParams::new(a.sites, a.t, a.delta, 0.0)?;
    let grid = uniform_grid(a.mu_min, a.mu_max, a.mu_steps)?;
    let mut table = Table::new(&["mu", "gap"]);
    for (mu, gap) in pbc_gap_profile(&c, &grid)? {
        table.row([float(mu), float(gap)]);
    }
    Ok(table.finish().into())
}

pub fn spectrum(a: &SpectrumArgs) -> Result<Report> {
    let c = ChainParams::new(a.sites, a.t, a.delta, a.mu)?;
    let representation = match a.representation {
        Basis::Position => Representation::Position,
        Basis::Momentum => Representation::Momentum,
    };
    let indexed = |values: &[f64]| {
        let mut table = Table::new(&["zeta", "value"]);
        for (i, v) in values.iter().enumerate() {
            table.row([(i + 1).to_string(), float(*v)]);
        }
        table.finish()
    };
    let csv = match a.kind {
        SpectrumKind::Singular => indexed(SingularSpectrum::of(&CouplingMatrix::build(&c, representation)).values()),
        SpectrumKind::Eigen => {
            let spectrum = ComplexSpectrum::of(&CouplingMatrix::build(&c, representation));
            let mut table = Table::new(&["zeta", "re", "im"]);
            for (i, z) in spectrum.sorted().iter().enumerate() {
                table.row([(i + 1).to_string(), float(z.re), float(z.im)]);
            }
            table.finish()
        }
        SpectrumKind::Perturbative => indexed(third_order_spectrum(&c)?.energies()),
        SpectrumKind::Effective => indexed(effective_spectrum(&c)?.energies()),
    };
    Ok(csv.into())
}

pub fn phase_diagram(a: &PhaseDiagramArgs) -> Result<Report> {
    let threshold = a.threshold.unwrap_or(DEFAULT_TOPOLOGICAL_THRESHOLD * a.e0);
    let workers = a.workers.map_or_else(scan::default_workers, |w| w.get());
    let diagram = scan::parallel_phase_diagram(
        a.sites,
        a.e0,
        uniform_grid(a.eta_min, a.eta_max, a.eta_steps)?,
        uniform_grid(a.mu_min, a.mu_max, a.mu_steps)?,
        threshold,
        workers,
    )?;
    let mut table = Table::new(&["eta", "mu_tilde", "d0", "topological"]);
    for (eta, mu, d0, phase) in diagram.points() {
        let flag = if phase == Phase::Topological { "1" } else { "0" };
        table.row([float(eta), float(mu), float(d0), flag.to_string()]);
    }
    Ok(table.finish().into())
}

pub fn zero_modes(a: &ZeroModesArgs) -> Result<Report> {
    let point = EtaPoint::new(a.eta, a.mu_tilde, a.e0)?;
    let m = CouplingMatrix::momentum(&ChainParams::from_eta(a.sites, &point)?);
    let tolerance = a.threshold.unwrap_or(DEFAULT_TOPOLOGICAL_THRESHOLD * a.e0);
    let pair = match a.method {
        Method::Svd => null_pair_svd_within(&m, tolerance),
        Method::Projection => null_pair_projection_with(&m, a.seed, tolerance),
    }
    .context("no isolated zero-mode pair at these parameters")?;
    let mode = match a.fit {
        Fit::Envelope => FitMode::Envelope,
        Fit::Plain => FitMode::Plain,
    };
    let fit_a = fit_decay(pair.psi_a.as_slice(), dominant_edge(&pair.psi_a), mode).context("fitting A mode")?;
    let fit_b = fit_decay(pair.psi_b.as_slice(), dominant_edge(&pair.psi_b), mode).context("fitting B mode")?;

    let mut table = Table::new(&["index", "phiA", "phiB", "psiA", "psiB"]);
    for i in 0..a.sites {
        table.row([
            (i + 1).to_string(),
            float(pair.phi_a[i]),
            float(pair.phi_b[i]),
            float(pair.psi_a[i]),
            float(pair.psi_b[i]),
        ]);
    }
    Ok(Report {
        csv: table.finish(),
        summary: vec![
            summary("d0", pair.d0),
            summary("residual_left", pair.residual_left),
            summary("residual_right", pair.residual_right),
            summary("xi_A", fit_a.xi),
            summary("r2_A", fit_a.r_squared),
            summary("xi_B", fit_b.xi),
            summary("r2_B", fit_b.r_squared),
        ],
    })
}

pub fn zero_mode_mus(a: &ZeroModeMusArgs) -> Result<Report> {
    let c = ChainParams::new(a.sites, a.t, a.delta, 0.0)?;
    let mus = zero_mode_mu_predictions(a.sites, effective_hopping(&c)?)?;
    let mut table = Table::new(&["zeta", "mu_tilde"]);
    for (i, mu) in mus.iter().enumerate() {
        table.row([(i + 1).to_string(), float(*mu)]);
    }
    Ok(table.finish().into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    fn parse(argv: &[&str]) -> Command {
        Cli::try_parse_from(std::iter::once("kitaev").chain(argv.iter().copied()))
            .unwrap()
            .command
    }

    fn csv_of(argv: &[&str]) -> String {
        match parse(argv) {
            Command::PbcGap(a) => pbc_gap(&a),
            Command::Spectrum(a) => spectrum(&a),
            Command::PhaseDiagram(a) => phase_diagram(&a),
            Command::ZeroModes(a) => zero_modes(&a),
            Command::ZeroModeMus(a) => zero_mode_mus(&a),
        }
        .unwrap()
        .csv
    }

    fn column(csv: &str, idx: usize) -> Vec<f64> {
        csv.lines()
            .skip(1)
            .map(|l| l.split(',').nth(idx).unwrap().parse().unwrap())
            .collect()
    }

    #[test]
    fn singular_two_sites() {
        let csv = csv_of(&["spectrum", "-L", "2", "--t", "1", "--delta", "0.5", "--mu", "0"]);
        let values = column(&csv, 1);
        assert!(csv.starts_with("zeta,value\n1,"));
        assert!((values[0] - 1.5).abs() < 1e-14 && (values[1] - 0.5).abs() < 1e-14);
    }

    #[test]
    fn eigen_without_pairing_is_real() {
        let csv = csv_of(&["spectrum", "--kind", "eigen", "--delta", "0", "--mu", "0"]);
        assert!(csv.starts_with("zeta,re,im\n"));
        assert!(column(&csv, 2).iter().all(|&im| im == 0.0));
    }

    #[test]
    fn effective_band() {
        let csv = csv_of(&["spectrum", "--kind", "effective", "--t", "1", "--delta", "0.35"]);
        let t_eff = 1.0 - 0.35f64 * 0.35 / 2.0;
        for (z, v) in column(&csv, 1).iter().enumerate() {
            let want = -2.0 * t_eff * (std::f64::consts::PI * (z + 1) as f64 / 52.0).cos();
            assert!((v - want).abs() < 1e-14);
        }
    }

    #[test]
    fn perturbative_needs_hopping() {
        let Command::Spectrum(a) = parse(&["spectrum", "--kind", "perturbative", "--t", "0"]) else {
            panic!()
        };
        assert!(spectrum(&a).is_err());
    }

    #[test]
    fn pbc_gap_rows() {
        let csv = csv_of(&["pbc-gap", "--mu-min", "-3", "--mu-max", "3", "--mu-steps", "601"]);
        assert_eq!(csv.lines().count(), 602);
        let row = csv.lines().find(|l| l.starts_with("-2.0000000000000000e0,")).unwrap();
        assert_eq!(row, "-2.0000000000000000e0,0.0000000000000000e0");
        let Command::PbcGap(a) = parse(&["pbc-gap", "--mu-steps", "1"]) else {
            panic!()
        };
        assert!(pbc_gap(&a).is_err());
    }

    #[test]
    fn phase_diagram_single_points() {
        let csv = csv_of(&[
            "phase-diagram",
            "--eta-min",
            "0.5",
            "--eta-steps",
            "1",
            "--mu-min",
            "0",
            "--mu-steps",
            "1",
        ]);
        let row = csv.lines().nth(1).unwrap();
        assert!(row.starts_with("5.0000000000000000e-1,0.0000000000000000e0,") && row.ends_with(",1"));
        let csv = csv_of(&[
            "phase-diagram",
            "--eta-min",
            "0",
            "--eta-steps",
            "1",
            "--mu-min",
            "2.4",
            "--mu-steps",
            "1",
        ]);
        assert!(csv.lines().nth(1).unwrap().ends_with(",0"));
    }

    #[test]
    fn zero_modes_sweet_spot() {
        let Command::ZeroModes(a) = parse(&["zero-modes", "--eta", "0.5", "--mu-tilde", "0"]) else {
            panic!()
        };
        let report = zero_modes(&a).unwrap();
        assert!(report.summary.contains(&"xi_A=0.0000000000000000e0".to_string()));
        assert!(report.summary.contains(&"xi_B=0.0000000000000000e0".to_string()));
        let psi_a = column(&report.csv, 3);
        let psi_b = column(&report.csv, 4);
        assert!((psi_a[50] - 1.0).abs() < 1e-12 && (psi_b[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn zero_modes_trivial_phase_fails() {
        for method in ["svd", "projection"] {
            let Command::ZeroModes(a) = parse(&["zero-modes", "--mu-tilde", "2.5", "--method", method]) else {
                panic!()
            };
            assert!(zero_modes(&a).is_err());
        }
    }

    #[test]
    fn zero_mode_mus_three_sites() {
        let csv = csv_of(&["zero-mode-mus", "-L", "3", "--t", "1", "--delta", "0"]);
        let mus = column(&csv, 1);
        let r2 = std::f64::consts::SQRT_2;
        assert!((mus[0] + r2).abs() < 1e-15 && mus[1] == 0.0 && (mus[2] - r2).abs() < 1e-15);
        let Command::ZeroModeMus(a) = parse(&["zero-mode-mus", "--t", "0"]) else {
            panic!()
        };
        assert!(zero_mode_mus(&a).is_err());
    }
}
