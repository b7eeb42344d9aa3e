//! Finite Kitaev chain with hard-wall boundaries.
//!
//! The chain Hamiltonian is written as the quadratic Majorana form
//! `H = i Γᴬ · M · Γᴮ` with a real `L × L` coupling matrix `M`. In the
//! position basis `M` is tridiagonal; the type-I discrete sine transform
//! carries it to a momentum basis where it splits into a diagonal
//! dispersion plus a skew-symmetric pairing block. Singular values of `M`
//! are the quasiparticle energies, so the smallest one (`d0`) detects the
//! Majorana zero modes, and the associated null vectors are their
//! wavefunctions.
//!
//! The crate is `no_std` (with `alloc`); IO and the command-line front end
//! live in `kitaev-cli`.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod dst;
pub mod error;
pub mod hamiltonian;
pub mod model;
pub mod perturbation;
pub mod spectral;
pub mod zeromode;

mod trig;

pub use nalgebra::{Complex, DMatrix, DVector};

pub use crate::dst::SineBasis;
pub use crate::error::{Error, Result};
pub use crate::hamiltonian::{BdgRealSpace, CouplingMatrix, PbcDispersion, Representation};
pub use crate::model::{ChainParams, EtaPoint, Regime};
pub use crate::perturbation::PerturbativeSpectrum;
pub use crate::spectral::{ComplexSpectrum, Phase, PhaseDiagram, SingularSpectrum};
pub use crate::zeromode::{DecayFit, Edge, FitMode, ZeroModePair};
