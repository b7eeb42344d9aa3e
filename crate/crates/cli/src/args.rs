use std::num::NonZeroUsize;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, PartialEq, Parser)]
#[command(
    name = "kitaev",
    version,
    about = "Finite Kitaev chain spectra, phase diagrams and Majorana zero modes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, PartialEq, Subcommand)]
pub enum Command {
    /// Bulk gap under periodic boundaries as a function of μ.
    PbcGap(PbcGapArgs),
    /// Spectrum of the coupling matrix or its weak-coupling approximations.
    Spectrum(SpectrumArgs),
    /// Minimal singular value d0 over an (η, μ̃) grid.
    PhaseDiagram(PhaseDiagramArgs),
    /// Zero-energy Majorana pair in momentum and position space.
    ZeroModes(ZeroModesArgs),
    /// Weak-coupling predictions for the μ̃ values hosting zero modes.
    ZeroModeMus(ZeroModeMusArgs),
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct Output {
    /// Write CSV here instead of standard output.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Args)]
#[command(allow_negative_numbers = true)]
pub struct PbcGapArgs {
    #[arg(long, short = 'L', default_value_t = 51)]
    pub sites: usize,
    #[arg(long, default_value_t = 1.0)]
    pub t: f64,
    #[arg(long, default_value_t = 0.2)]
    pub delta: f64,
    #[arg(long, default_value_t = -3.0)]
    pub mu_min: f64,
    #[arg(long, default_value_t = 3.0)]
    pub mu_max: f64,
    #[arg(long, default_value_t = 601)]
    pub mu_steps: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    Position,
    Momentum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpectrumKind {
    /// Singular values, descending.
    Singular,
    /// Complex eigenvalues, by real then imaginary part.
    Eigen,
    /// Second-order perturbative levels, by ζ.
    Perturbative,
    /// Band with renormalized hopping, by ζ.
    Effective,
}

#[derive(Debug, Clone, PartialEq, Args)]
#[command(allow_negative_numbers = true)]
pub struct SpectrumArgs {
    #[arg(long, short = 'L', default_value_t = 51)]
    pub sites: usize,
    #[arg(long, default_value_t = 1.0)]
    pub t: f64,
    #[arg(long, default_value_t = 0.35)]
    pub delta: f64,
    #[arg(long, default_value_t = 0.0)]
    pub mu: f64,
    #[arg(long, value_enum, default_value_t = Basis::Momentum)]
    pub representation: Basis,
    #[arg(long, value_enum, default_value_t = SpectrumKind::Singular)]
    pub kind: SpectrumKind,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, PartialEq, Args)]
#[command(allow_negative_numbers = true)]
pub struct PhaseDiagramArgs {
    #[arg(long, short = 'L', default_value_t = 51)]
    pub sites: usize,
    #[arg(long, default_value_t = 1.0)]
    pub e0: f64,
    #[arg(long, default_value_t = 0.0)]
    pub eta_min: f64,
    #[arg(long, default_value_t = 1.0)]
    pub eta_max: f64,
    #[arg(long, default_value_t = 101)]
    pub eta_steps: usize,
    #[arg(long, default_value_t = -2.5)]
    pub mu_min: f64,
    #[arg(long, default_value_t = 2.5)]
    pub mu_max: f64,
    #[arg(long, default_value_t = 101)]
    pub mu_steps: usize,
    /// Absolute d0 threshold for the topological label [default: 1e-6·E0]
    #[arg(long)]
    pub threshold: Option<f64>,
    /// Worker threads [default: available parallelism]
    #[arg(long, env = "KITAEV_WORKERS")]
    pub workers: Option<NonZeroUsize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Minimal singular triplet.
    Svd,
    /// Gram–Schmidt projection of a seeded random vector.
    Projection,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Fit {
    Envelope,
    Plain,
}

#[derive(Debug, Clone, PartialEq, Args)]
#[command(allow_negative_numbers = true)]
pub struct ZeroModesArgs {
    #[arg(long, short = 'L', default_value_t = 51)]
    pub sites: usize,
    #[arg(long, default_value_t = 0.3)]
    pub eta: f64,
    #[arg(long, default_value_t = 0.1)]
    pub mu_tilde: f64,
    #[arg(long, default_value_t = 1.0)]
    pub e0: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Method::Projection)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = Fit::Envelope)]
    pub fit: Fit,
    /// Singular values below this count as zero [default: 1e-6·E0]
    #[arg(long)]
    pub threshold: Option<f64>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, PartialEq, Args)]
#[command(allow_negative_numbers = true)]
pub struct ZeroModeMusArgs {
    #[arg(long, short = 'L', default_value_t = 51)]
    pub sites: usize,
    #[arg(long, default_value_t = 1.0)]
    pub t: f64,
    #[arg(long, default_value_t = 0.2)]
    pub delta: f64,
    #[command(flatten)]
    pub output: Output,
}
