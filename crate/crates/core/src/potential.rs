//! Complex nucleon-nucleus optical potential: Woods-Saxon volume, derivative
//! Woods-Saxon surface absorption, Thomas spin-orbit and the Coulomb field
//! of a uniformly charged sphere.
//!
//! Sign convention: positive depths are attractive (real) or absorptive
//! (imaginary),
//!
//! ```text
//! U(r) = −V_V f_V − i W_V f_V + 4i a_D W_D f_D'
//!        + λπ² (V_so + i W_so) (1/r) f_so' · 2 l·s + V_C(r)
//! ```

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;

use crate::constants::{E2, PION_COMPTON_SQ};
use crate::error::{Error, Result};
use crate::nuclide::{NucleusSpec, Projectile};
use crate::solver::JSign;

/// One Woods-Saxon form factor with radius `radius_const · A^(1/3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WoodsSaxonTerm {
    /// Strength [MeV].
    pub depth: f64,
    /// Reduced radius r [fm].
    pub radius_const: f64,
    /// Diffuseness a [fm].
    pub diffuseness: f64,
}

impl WoodsSaxonTerm {
    pub fn new(depth: f64, radius_const: f64, diffuseness: f64) -> Result<Self> {
        if !(radius_const > 0.0) {
            return Err(Error::Domain { what: "Woods-Saxon radius constant", value: radius_const });
        }
        if !(diffuseness > 0.0) {
            return Err(Error::Domain { what: "Woods-Saxon diffuseness", value: diffuseness });
        }
        if !depth.is_finite() {
            return Err(Error::Domain { what: "Woods-Saxon depth", value: depth });
        }
        Ok(WoodsSaxonTerm { depth, radius_const, diffuseness })
    }

    pub fn zero() -> Self {
        WoodsSaxonTerm { depth: 0.0, radius_const: 1.0, diffuseness: 0.5 }
    }

    /// f(r) = 1/(1 + exp((r − R)/a)).
    #[inline]
    pub fn shape(&self, r: f64, a_third: f64) -> f64 {
        let x = (r - self.radius_const * a_third) / self.diffuseness;
        1.0 / (1.0 + x.exp())
    }

    /// df/dr, written so it stays finite for large (r − R)/a.
    #[inline]
    pub fn shape_derivative(&self, r: f64, a_third: f64) -> f64 {
        let x = (r - self.radius_const * a_third) / self.diffuseness;
        let e = (-x.abs()).exp();
        -e / (self.diffuseness * (1.0 + e) * (1.0 + e))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OpticalPotentialParams {
    pub real_volume: WoodsSaxonTerm,
    pub imag_volume: WoodsSaxonTerm,
    pub imag_surface: WoodsSaxonTerm,
    pub real_spin_orbit: WoodsSaxonTerm,
    pub imag_spin_orbit: WoodsSaxonTerm,
    /// Coulomb radius r_C [fm]; R_C = r_C A^(1/3).
    pub coulomb_radius_const: f64,
    /// Lab kinetic energy [MeV].
    pub energy: f64,
    pub projectile: Projectile,
    /// Include the Coulomb field for charged projectiles.
    pub coulomb: bool,
}

/// Energy range over which the built-in global parameterization is offered.
pub const GLOBAL_ENERGY_RANGE: (f64, f64) = (20.0, 1000.0);

impl OpticalPotentialParams {
    pub fn in_validity_range(&self) -> bool {
        (GLOBAL_ENERGY_RANGE.0..=GLOBAL_ENERGY_RANGE.1).contains(&self.energy)
    }

    /// Product of projectile and target charges seen by the radial equation.
    pub fn charge_product(&self, nucleus: &NucleusSpec) -> f64 {
        if self.coulomb {
            f64::from(self.projectile.charge() * nucleus.z)
        } else {
            0.0
        }
    }

    /// Potential at `r` [fm] for channel (l, j = l ± 1/2).
    pub fn evaluate(&self, nucleus: &NucleusSpec, r: f64, l: u32, j: JSign) -> Result<Complex64> {
        if !(r > 0.0) || !r.is_finite() {
            return Err(Error::Domain { what: "radius", value: r });
        }
        let a13 = nucleus.a_third();
        Ok(self.central(nucleus, r, a13) + j.l_dot_s(l) * self.spin_orbit_factor(r, a13))
    }

    /// Central nuclear + Coulomb part.
    pub(crate) fn central(&self, nucleus: &NucleusSpec, r: f64, a13: f64) -> Complex64 {
        let vol = self.real_volume.depth * self.real_volume.shape(r, a13);
        let wvol = self.imag_volume.depth * self.imag_volume.shape(r, a13);
        let s = &self.imag_surface;
        let wsurf = 4.0 * s.diffuseness * s.depth * s.shape_derivative(r, a13);
        Complex64::new(-vol + self.coulomb_potential(nucleus, r, a13), -wvol + wsurf)
    }

    /// Radial spin-orbit factor multiplying l·s: 2 λπ² (V_so + iW_so)(1/r) f_so'.
    pub(crate) fn spin_orbit_factor(&self, r: f64, a13: f64) -> Complex64 {
        let thomas = |t: &WoodsSaxonTerm| t.depth * t.shape_derivative(r, a13) / r;
        2.0 * PION_COMPTON_SQ
            * Complex64::new(thomas(&self.real_spin_orbit), thomas(&self.imag_spin_orbit))
    }

    /// Uniformly charged sphere inside R_C, point charge outside.
    pub fn coulomb_potential(&self, nucleus: &NucleusSpec, r: f64, a13: f64) -> f64 {
        let zz = self.charge_product(nucleus);
        if zz == 0.0 {
            return 0.0;
        }
        let rc = self.coulomb_radius_const * a13;
        if r < rc {
            zz * E2 / (2.0 * rc) * (3.0 - (r / rc).powi(2))
        } else {
            zz * E2 / r
        }
    }

    /// Largest `radius_const · A^(1/3) + diffuseness` scale among the nuclear terms.
    pub fn nuclear_extent(&self, a13: f64) -> (f64, f64) {
        let terms = [
            &self.real_volume,
            &self.imag_volume,
            &self.imag_surface,
            &self.real_spin_orbit,
            &self.imag_spin_orbit,
        ];
        terms
            .iter()
            .filter(|t| t.depth != 0.0)
            .fold((0.0, 0.0), |(r, a), t| (r.max(t.radius_const * a13), a.max(t.diffuseness)))
    }
}

/// Switches on the built-in global parameterization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GlobalModel {
    /// Scale of the (N − Z)/A isovector terms; 1 is the published value.
    pub isovector_scale: f64,
}

impl Default for GlobalModel {
    fn default() -> Self {
        GlobalModel { isovector_scale: 1.0 }
    }
}

/// Real-volume energy polynomial g(f) = 1 − v2 f + v3 f² − v4 f³, held
/// constant beyond its local minimum, where the cubic turns back up.
fn real_volume_energy_factor(v2: f64, v3: f64, v4: f64, f: f64) -> f64 {
    let disc = v3 * v3 - 3.0 * v2 * v4;
    let f_eff = if disc >= 0.0 && v4 > 0.0 {
        f.min((v3 - disc.sqrt()) / (3.0 * v4))
    } else {
        f
    };
    1.0 - v2 * f_eff + v3 * f_eff * f_eff - v4 * f_eff.powi(3)
}

/// Global nucleon optical potential (Koning-Delaroche functional form,
/// neutron energy coefficients shared by both projectiles, isovector terms
/// with sign +1 for protons and −1 for neutrons).
pub fn global_params(nucleus: &NucleusSpec, t: f64, projectile: Projectile) -> Result<OpticalPotentialParams> {
    global_params_with(nucleus, t, projectile, &GlobalModel::default())
}

pub fn global_params_with(
    nucleus: &NucleusSpec,
    t: f64,
    projectile: Projectile,
    model: &GlobalModel,
) -> Result<OpticalPotentialParams> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain { what: "lab kinetic energy", value: t });
    }
    let a = nucleus.a_f64();
    let a13 = nucleus.a_third();
    let iso = projectile.isospin_sign() * model.isovector_scale * nucleus.asymmetry();

    let fermi = -11.2814 + 0.02646 * a;
    let f = t - fermi;

    let v1 = 59.30 + 21.0 * iso - 0.024 * a;
    let v2 = 7.228e-3 - 1.48e-6 * a;
    let v3 = 1.994e-5 - 2.0e-8 * a;
    let v4 = 7.0e-9;
    let w1 = 12.195 + 0.0167 * a;
    let w2 = 73.55 + 0.0795 * a;
    let d1 = 16.0 + 16.0 * iso;
    let d2 = 0.0180 + 0.003802 / (1.0 + ((a - 156.0) / 8.0).exp());
    let d3 = 11.5;
    let vso1 = 5.922 + 0.0030 * a;
    let vso2 = 0.0040;

    let depth_v = v1 * real_volume_energy_factor(v2, v3, v4, f);
    let depth_w = w1 * f * f / (f * f + w2 * w2);
    let depth_d = d1 * f * f * (-d2 * f).exp() / (f * f + d3 * d3);
    let depth_so = vso1 * (-vso2 * f).exp();

    let r_v = 1.3039 - 0.4054 / a13;
    let a_v = 0.6778 - 1.487e-4 * a;
    let r_d = 1.3424 - 0.01585 * a13;
    let a_d = 0.5446 - 1.656e-4 * a;
    let r_so = 1.1854 - 0.647 / a13;
    let a_so = 0.59;
    let r_c = 1.198 + 0.697 / (a13 * a13) + 12.994 / a13.powi(5);

    Ok(OpticalPotentialParams {
        real_volume: WoodsSaxonTerm::new(depth_v, r_v, a_v)?,
        imag_volume: WoodsSaxonTerm::new(depth_w, r_v, a_v)?,
        imag_surface: WoodsSaxonTerm::new(depth_d.max(0.0), r_d, a_d)?,
        real_spin_orbit: WoodsSaxonTerm::new(depth_so, r_so, a_so)?,
        // Imaginary spin-orbit omitted: with it Im U turns emissive for large l·s.
        imag_spin_orbit: WoodsSaxonTerm::new(0.0, r_so, a_so)?,
        coulomb_radius_const: r_c,
        energy: t,
        projectile,
        coulomb: true,
    })
}

/// The potential of one (l, j) channel tabulated on a radial grid.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialProfile {
    pub grid: Vec<f64>,
    /// Values for j = l + 1/2 [MeV].
    pub central_plus: Vec<Complex64>,
    /// Values for j = l − 1/2 [MeV]; empty for l = 0.
    pub central_minus: Vec<Complex64>,
    pub l: u32,
}

impl PotentialProfile {
    pub fn tabulate(params: &OpticalPotentialParams, nucleus: &NucleusSpec, grid: &[f64], l: u32) -> Result<Self> {
        let plus = grid
            .iter()
            .map(|&r| params.evaluate(nucleus, r, l, JSign::Plus))
            .collect::<Result<Vec<_>>>()?;
        let minus = if l == 0 {
            Vec::new()
        } else {
            grid.iter()
                .map(|&r| params.evaluate(nucleus, r, l, JSign::Minus))
                .collect::<Result<Vec<_>>>()?
        };
        Ok(PotentialProfile { grid: grid.to_vec(), central_plus: plus, central_minus: minus, l })
    }

    pub fn channel(&self, j: JSign) -> &[Complex64] {
        match j {
            JSign::Plus => &self.central_plus,
            JSign::Minus => &self.central_minus,
        }
    }
}
