//! Nucleon-nucleus partial-wave scattering and the information entropy of
//! its angle-integrated cross sections.
//!
//! The crate is `no_std` (with `alloc`). Everything here is a pure function
//! of its inputs: relativistic kinematics, a complex Woods-Saxon optical
//! potential, a Numerov radial solver with Coulomb/Bessel matching, partial
//! cross sections and their normalized probabilities, Shannon entropy, and
//! the least-squares plane `S = a + b ln T + c ln A`.
//!
//! IO, configuration files, the CLI and parallel scans live in the `nucent`
//! companion crate.

#![no_std]
// `num_traits::Float` supplies the float math without std; when another crate
// in the build links std the inherent methods take over and the import idles.
#![allow(unused_imports)]

extern crate alloc;

pub mod constants;
pub mod coulomb;
pub mod entropy;
pub mod error;
pub mod fit;
pub mod kinematics;
pub mod nuclide;
pub mod observables;
pub mod pipeline;
pub mod potential;
pub mod solver;
pub(crate) mod special;

pub use error::{Error, Result};
pub use kinematics::{GrazingGeometry, Kinematics, ParticlePair};
pub use nuclide::{MassModel, NucleusSpec, Projectile};
pub use potential::{OpticalPotentialParams, PotentialProfile, WoodsSaxonTerm};
pub use solver::{ChannelSolution, JSign, PartialWaveSet, RadialGrid, SolverOptions};
