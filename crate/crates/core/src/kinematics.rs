//! Relativistic two-body kinematics, grazing geometry and the closed-form
//! entropy of a uniform partial-wave distribution.

use num_traits::Float;

use crate::constants::{GRAZING_DIFFUSENESS, GRAZING_R0, HBARC};
use crate::error::{Error, Result};
use crate::nuclide::{NucleusSpec, Projectile};

/// Projectile and target rest masses [MeV/c²].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParticlePair {
    pub m1: f64,
    pub m2: f64,
}

impl ParticlePair {
    pub fn new(m1: f64, m2: f64) -> Result<Self> {
        if !(m1 > 0.0) {
            return Err(Error::Domain { what: "projectile mass", value: m1 });
        }
        if !(m2 > 0.0) {
            return Err(Error::Domain { what: "target mass", value: m2 });
        }
        Ok(ParticlePair { m1, m2 })
    }

    pub fn nucleon_on(projectile: Projectile, target: &NucleusSpec) -> Self {
        ParticlePair { m1: projectile.mass(), m2: target.mass }
    }
}

fn check_energy(t: f64) -> Result<()> {
    if t >= 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain { what: "lab kinetic energy", value: t })
    }
}

/// Centre-of-mass wave number [fm⁻¹] for lab kinetic energy `t` [MeV]:
/// (ħc k)² = m2²(T² + 2 m1 T) / ((m1+m2)² + 2 m2 T).
pub fn wave_number(t: f64, pair: ParticlePair) -> Result<f64> {
    check_energy(t)?;
    let ParticlePair { m1, m2 } = pair;
    let p2 = m2 * m2 * (t * t + 2.0 * m1 * t) / ((m1 + m2).powi(2) + 2.0 * m2 * t);
    Ok(p2.sqrt() / HBARC)
}

/// Leading (non-relativistic) term: (ħc k)² ≈ 2 m1 m2² T / (m1+m2)².
pub fn wave_number_leading(t: f64, pair: ParticlePair) -> Result<f64> {
    check_energy(t)?;
    let ParticlePair { m1, m2 } = pair;
    let p2 = 2.0 * m1 * m2 * m2 * t / (m1 + m2).powi(2);
    Ok(p2.sqrt() / HBARC)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Kinematics {
    /// Lab kinetic energy [MeV].
    pub t: f64,
    /// CM wave number [fm⁻¹].
    pub k: f64,
    /// Relativistic reduced mass E1·E2/√s [MeV].
    pub reduced_mass: f64,
    pub hbarc: f64,
}

impl Kinematics {
    pub fn new(t: f64, pair: ParticlePair) -> Result<Self> {
        let k = wave_number(t, pair)?;
        let ParticlePair { m1, m2 } = pair;
        let s = (m1 + m2).powi(2) + 2.0 * m2 * t;
        let sqrt_s = s.sqrt();
        let e1 = (s + m1 * m1 - m2 * m2) / (2.0 * sqrt_s);
        let e2 = (s + m2 * m2 - m1 * m1) / (2.0 * sqrt_s);
        Ok(Kinematics { t, k, reduced_mass: e1 * e2 / sqrt_s, hbarc: HBARC })
    }

    /// 2μ/ħ² [MeV⁻¹ fm⁻²], the coupling of the potential in the radial equation.
    pub fn two_mu_over_hbar2(&self) -> f64 {
        2.0 * self.reduced_mass / (self.hbarc * self.hbarc)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrazingGeometry {
    pub r0: f64,
    pub a_diff: f64,
    pub x0: f64,
    /// Grazing radius [fm].
    pub radius: f64,
    pub l_max: u32,
}

/// Grazing geometry with the default r0 = 1.15 fm, a = 0.55 fm.
pub fn grazing(a: u32, k: f64) -> Result<GrazingGeometry> {
    grazing_with(GRAZING_R0, GRAZING_DIFFUSENESS, a, k)
}

pub fn grazing_with(r0: f64, a_diff: f64, a: u32, k: f64) -> Result<GrazingGeometry> {
    if a == 0 {
        return Err(Error::Domain { what: "mass number", value: 0.0 });
    }
    if !(k >= 0.0) {
        return Err(Error::Domain { what: "wave number", value: k });
    }
    let a13 = f64::from(a).cbrt();
    let x0 = r0 + 3.0 * a_diff / a13;
    let radius = x0 * a13;
    let l_max = (k * radius).floor() as u32;
    Ok(GrazingGeometry { r0, a_diff, x0, radius, l_max })
}

/// Entropy of a uniform distribution over the `l_max + 1` grazing partial waves.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformEntropy {
    /// ln(l_max + 1) with l_max = floor(k R).
    pub entropy: f64,
    /// ln(k R), before integer flooring; equals `a + ½ ln T + ⅓ ln A`.
    pub entropy_continuous: f64,
    /// Intercept `a = ln(x0 √(2 m1)/ħc) + ln(m2/(m1+m2))`.
    pub intercept: f64,
    pub l_max: u32,
}

/// ln n for a uniform distribution over n = l_max + 1 entries.
pub fn uniform_entropy_for_lmax(l_max: u32) -> f64 {
    f64::from(l_max + 1).ln()
}

pub fn uniform_intercept(nucleus: &NucleusSpec, pair: ParticlePair) -> f64 {
    let x0 = GRAZING_R0 + 3.0 * GRAZING_DIFFUSENESS / nucleus.a_third();
    (x0 * (2.0 * pair.m1).sqrt() / HBARC).ln() + (pair.m2 / (pair.m1 + pair.m2)).ln()
}

/// Uniform-model entropy using the leading-order wave number.
pub fn uniform_entropy(t: f64, nucleus: &NucleusSpec, pair: ParticlePair) -> Result<UniformEntropy> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain { what: "lab kinetic energy (must be > 0)", value: t });
    }
    let k = wave_number_leading(t, pair)?;
    let geo = grazing(nucleus.a(), k)?;
    Ok(UniformEntropy {
        entropy: uniform_entropy_for_lmax(geo.l_max),
        entropy_continuous: (k * geo.radius).ln(),
        intercept: uniform_intercept(nucleus, pair),
        l_max: geo.l_max,
    })
}
