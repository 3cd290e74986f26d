//! One scan point: optical potential → S-matrix → cross sections →
//! probabilities → entropy.

use crate::entropy::EntropyRecord;
use crate::error::Result;
use crate::kinematics::{Kinematics, ParticlePair};
use crate::nuclide::{NucleusSpec, Projectile};
use crate::observables::{partial_cross_sections, probabilities, ChannelProbabilities, CrossSections};
use crate::potential::{global_params, OpticalPotentialParams};
use crate::solver::{solve_all, PartialWaveSet, SolverOptions};

#[derive(Debug, Clone, PartialEq)]
pub struct PointResult {
    pub record: EntropyRecord,
    pub kinematics: Kinematics,
    pub partial_waves: PartialWaveSet,
    pub cross_sections: CrossSections,
    pub probabilities: ChannelProbabilities,
}

/// Evaluate one point with explicit potential parameters.
pub fn compute_point_with(
    params: &OpticalPotentialParams,
    nucleus: &NucleusSpec,
    options: &SolverOptions,
) -> Result<PointResult> {
    let projectile = params.projectile;
    let t = params.energy;
    let kin = Kinematics::new(t, ParticlePair::nucleon_on(projectile, nucleus))?;
    let pw = solve_all(params, nucleus, &kin, options)?;
    let xs = partial_cross_sections(&pw)?;
    let probs = probabilities(&xs)?;
    let record = EntropyRecord::new(projectile, *nucleus, t, kin.k, &xs, &probs)?;
    Ok(PointResult { record, kinematics: kin, partial_waves: pw, cross_sections: xs, probabilities: probs })
}

/// Evaluate one point with the built-in global potential.
pub fn compute_point(
    projectile: Projectile,
    nucleus: &NucleusSpec,
    t: f64,
    coulomb: bool,
    options: &SolverOptions,
) -> Result<PointResult> {
    let mut params = global_params(nucleus, t, projectile)?;
    params.coulomb = coulomb;
    compute_point_with(&params, nucleus, options)
}
