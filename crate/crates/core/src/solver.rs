//! Radial Schrödinger integration per (l, j) channel and asymptotic matching
//! to obtain the nuclear S-matrix elements η_l^±.
//!
//! The radial equation
//!
//! ```text
//! u'' = [l(l+1)/r² + (2μ/ħ²) U(r) − k²] u,   u(r → 0) ∝ r^(l+1)
//! ```
//!
//! is integrated outward with Numerov's method on a uniform grid
//! r_i = i·h. The constant k² is replaced by the value that makes the
//! discrete recursion propagate e^{±ikr} without phase error, which keeps
//! the free solution exact on the grid. The solution at the last two grid
//! points is matched to u ∝ H⁻ − η H⁺, with Coulomb functions for charged
//! projectiles and Riccati-Bessel functions otherwise.

use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;
use num_traits::Float;

use crate::constants::{E2, GRAZING_DIFFUSENESS};
use crate::coulomb::{coulomb_functions, CoulombFunctions};
use crate::error::{Error, Result};
use crate::kinematics::{grazing, Kinematics};
use crate::nuclide::NucleusSpec;
use crate::potential::OpticalPotentialParams;
use crate::special::coulomb_phases;

/// Total angular momentum j = l ± 1/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum JSign {
    Plus,
    Minus,
}

impl JSign {
    /// ⟨l·s⟩: l/2 for j = l + 1/2, −(l+1)/2 for j = l − 1/2.
    pub fn l_dot_s(self, l: u32) -> f64 {
        match self {
            JSign::Plus => 0.5 * f64::from(l),
            JSign::Minus => -0.5 * f64::from(l + 1),
        }
    }
}

impl fmt::Display for JSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            JSign::Plus => "+",
            JSign::Minus => "-",
        })
    }
}

/// Uniform grid r_i = i·h, i = 1..=points, ending exactly at r_match.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialGrid {
    pub r_min: f64,
    pub r_match: f64,
    pub h: f64,
    pub points: usize,
}

impl RadialGrid {
    /// Grid reaching `r_match` with step at most `max_step`.
    pub fn new(r_match: f64, max_step: f64) -> Result<Self> {
        if !(max_step > 0.0) || !max_step.is_finite() {
            return Err(Error::Domain { what: "radial step", value: max_step });
        }
        if !(r_match > 2.0 * max_step) || !r_match.is_finite() {
            return Err(Error::Domain { what: "matching radius", value: r_match });
        }
        let points = (r_match / max_step).ceil() as usize;
        let h = r_match / points as f64;
        Ok(RadialGrid { r_min: h, r_match, h, points })
    }

    #[inline]
    pub fn r(&self, i: usize) -> f64 {
        i as f64 * self.h
    }

    /// Grid radii r_1..=r_points.
    pub fn radii(&self) -> impl Iterator<Item = f64> + '_ {
        (1..=self.points).map(move |i| self.r(i))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelSolution {
    pub l: u32,
    pub j: JSign,
    /// S-matrix element.
    pub eta: Complex64,
    /// Complex phase shift, η = exp(2iδ).
    pub delta: Complex64,
}

impl ChannelSolution {
    pub fn from_eta(l: u32, j: JSign, eta: Complex64) -> Self {
        let i = Complex64::new(0.0, 1.0);
        let delta = -0.5 * i * eta.ln();
        ChannelSolution { l, j, eta, delta }
    }

    /// 1 − |η|², the absorbed flux fraction.
    pub fn absorption(&self) -> f64 {
        1.0 - self.eta.norm_sqr()
    }
}

/// Both spin-orbit partners of one partial wave; l = 0 has no j = l − 1/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialWave {
    pub l: u32,
    pub plus: ChannelSolution,
    pub minus: Option<ChannelSolution>,
}

impl PartialWave {
    pub fn eta_plus(&self) -> Complex64 {
        self.plus.eta
    }

    /// η_l^−; for l = 0 the value is irrelevant (weight l = 0) and is 1.
    pub fn eta_minus(&self) -> Complex64 {
        self.minus.map_or(Complex64::new(1.0, 0.0), |c| c.eta)
    }

    pub fn channels(&self) -> impl Iterator<Item = &ChannelSolution> {
        core::iter::once(&self.plus).chain(self.minus.iter())
    }
}

/// The S-matrix payload for one (projectile, target, energy).
#[derive(Debug, Clone, PartialEq)]
pub struct PartialWaveSet {
    /// CM wave number [fm⁻¹].
    pub k: f64,
    /// Highest l solved.
    pub l_max: u32,
    /// Grazing l_max = floor(k R).
    pub l_grazing: u32,
    /// Sommerfeld parameter (0 without Coulomb distortion).
    pub sommerfeld: f64,
    /// Coulomb phase shifts σ_l, l = 0..=l_max (all zero for neutral).
    pub coulomb_phases: Vec<f64>,
    /// Index l ↦ waves[l].
    pub waves: Vec<PartialWave>,
}

impl PartialWaveSet {
    /// Build from explicit (η⁺, η⁻) pairs, l = 0, 1, ... (η⁻ at l = 0 ignored).
    pub fn from_etas(k: f64, etas: &[(Complex64, Complex64)]) -> Result<Self> {
        if etas.is_empty() {
            return Err(Error::Domain { what: "partial-wave count", value: 0.0 });
        }
        let waves = etas
            .iter()
            .enumerate()
            .map(|(l, &(p, m))| {
                let l = l as u32;
                PartialWave {
                    l,
                    plus: ChannelSolution::from_eta(l, JSign::Plus, p),
                    minus: (l > 0).then(|| ChannelSolution::from_eta(l, JSign::Minus, m)),
                }
            })
            .collect::<Vec<_>>();
        let l_max = (waves.len() - 1) as u32;
        Ok(PartialWaveSet {
            k,
            l_max,
            l_grazing: l_max,
            sommerfeld: 0.0,
            coulomb_phases: alloc::vec![0.0; waves.len()],
            waves,
        })
    }

    pub fn channels(&self) -> impl Iterator<Item = &ChannelSolution> {
        self.waves.iter().flat_map(|w| w.channels())
    }

    /// Largest |η| over all channels.
    pub fn max_eta_modulus(&self) -> f64 {
        self.channels().map(|c| c.eta.norm()).fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Partial waves solved beyond the grazing l_max before convergence is tested.
    pub padding: u32,
    /// Convergence threshold on 1 − |η|² and |1 − η|².
    pub tolerance: f64,
    /// Hard cap on l.
    pub l_cap: u32,
    /// Step override [fm]; default min(0.01, 1/(20k)).
    pub step: Option<f64>,
    /// Matching-radius override [fm].
    pub r_match: Option<f64>,
    /// Combine steps h and h/2 as (16 η_{h/2} − η_h)/15, cancelling the
    /// O(h⁴) Numerov error.
    pub richardson: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { padding: 5, tolerance: 1e-8, l_cap: 1000, step: None, r_match: None, richardson: true }
    }
}

/// Default step min(0.01 fm, 1/(20k)).
pub fn default_step(k: f64) -> f64 {
    if k > 0.0 {
        (0.01f64).min(1.0 / (20.0 * k))
    } else {
        0.01
    }
}

/// Matching radius: 12 diffusenesses beyond the grazing radius, and at
/// least 12 diffusenesses beyond the widest potential term.
pub fn default_matching_radius(params: &OpticalPotentialParams, nucleus: &NucleusSpec) -> f64 {
    let a13 = nucleus.a_third();
    let graze = grazing(nucleus.a(), 0.0).map_or(0.0, |g| g.radius) + 12.0 * GRAZING_DIFFUSENESS;
    let (r_pot, a_pot) = params.nuclear_extent(a13);
    graze.max(r_pot + 12.0 * a_pot)
}

/// Numerov constant that reproduces e^{±ikr} exactly on a grid of step h.
fn discrete_k2(k: f64, h: f64) -> f64 {
    let c = (k * h).cos();
    12.0 * (1.0 - c) / ((5.0 + c) * h * h)
}

const RESCALE_AT: f64 = 1e200;

/// Integrate one channel outward; returns u at the last two grid points
/// (r_match − h, r_match).
///
/// `potential[i]` is U(r_{i+1}) in MeV for i = 0..grid.points, `coupling`
/// is 2μ/ħ² [MeV⁻¹ fm⁻²].
pub fn integrate_channel(
    potential: &[Complex64],
    coupling: f64,
    k: f64,
    l: u32,
    j: JSign,
    grid: &RadialGrid,
) -> Result<(Complex64, Complex64)> {
    let n = grid.points;
    if potential.len() != n {
        return Err(Error::Domain { what: "potential table length", value: potential.len() as f64 });
    }
    let h = grid.h;
    let h2 = h * h;
    let k2 = discrete_k2(k, h);
    let ll = f64::from(l) * f64::from(l + 1);

    let vmax = potential.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let k_local = (k * k + coupling * vmax).sqrt();
    if h * k_local >= 0.5 {
        return Err(Error::Unstable { l, j, r: grid.r_match });
    }

    let f_at = |i: usize| -> Complex64 {
        let r = grid.r(i);
        coupling * potential[i - 1] + (ll / (r * r) - k2)
    };

    // Start where the centrifugal term keeps h²F/12 small; u ∝ r^(l+1)(1 + c r²).
    let i0 = if l == 0 { 1 } else { ((ll / 0.12).sqrt().ceil() as usize).max(2) };
    if i0 + 1 > n {
        // The whole grid is deep inside the centrifugal barrier.
        let ratio = (grid.r(n) / grid.r(n - 1)).powi(l as i32 + 1);
        return Ok((Complex64::new(1.0, 0.0), Complex64::new(ratio, 0.0)));
    }
    let series = |i: usize| -> Complex64 {
        let r = grid.r(i);
        let c = (coupling * potential[i - 1] - k2) / (2.0 * (2.0 * f64::from(l) + 3.0));
        let r0 = grid.r(i0);
        Complex64::new((r / r0).powi(l as i32 + 1), 0.0) * (1.0 + c * r * r)
    };

    let (mut w_prev, mut u_cur, mut f_cur) = if l == 0 {
        // u(0) = 0 so w(0) = 0 regardless of U(0)
        (Complex64::new(0.0, 0.0), series(1), f_at(1))
    } else {
        let u_prev = series(i0 - 1);
        let f_prev = f_at(i0 - 1);
        (u_prev * (1.0 - h2 / 12.0 * f_prev), series(i0), f_at(i0))
    };
    let mut w_cur = u_cur * (1.0 - h2 / 12.0 * f_cur);
    let mut u_prev_val = if l == 0 { Complex64::new(0.0, 0.0) } else { series(i0 - 1) };

    for i in i0..n {
        let w_next = 2.0 * w_cur - w_prev + h2 * f_cur * u_cur;
        let f_next = f_at(i + 1);
        let u_next = w_next / (1.0 - h2 / 12.0 * f_next);
        if !(u_next.re.is_finite() && u_next.im.is_finite()) {
            return Err(Error::Unstable { l, j, r: grid.r(i + 1) });
        }
        u_prev_val = u_cur;
        w_prev = w_cur;
        w_cur = w_next;
        u_cur = u_next;
        f_cur = f_next;
        if u_cur.norm() > RESCALE_AT {
            let s = 1.0 / RESCALE_AT;
            w_prev *= s;
            w_cur *= s;
            u_cur *= s;
            u_prev_val *= s;
        }
    }
    Ok((u_prev_val, u_cur))
}

fn match_with(
    u: (Complex64, Complex64),
    at_prev: (Complex64, Complex64),
    at_last: (Complex64, Complex64),
    l: u32,
    j: JSign,
) -> Result<ChannelSolution> {
    // at_* = (H⁺, H⁻) at r_match − h and r_match
    let (u1, u2) = u;
    let num = u1 * at_last.1 - u2 * at_prev.1;
    let den = u1 * at_last.0 - u2 * at_prev.0;
    let scale = u1.norm().max(u2.norm()) * at_last.0.norm().max(at_prev.0.norm());
    if !(den.norm() > 1e-14 * scale) {
        // H⁺ is exponentially large deep inside the barrier; the wave does not
        // reach the potential and η = 1 to working precision.
        if at_last.0.norm().is_infinite() || scale.is_infinite() {
            return Ok(ChannelSolution::from_eta(l, j, Complex64::new(1.0, 0.0)));
        }
        return Err(Error::SingularMatch { l, j });
    }
    let eta = num / den;
    if !(eta.re.is_finite() && eta.im.is_finite()) {
        return Err(Error::SingularMatch { l, j });
    }
    Ok(ChannelSolution::from_eta(l, j, eta))
}

fn hankels(cf: &CoulombFunctions, l: u32) -> (Complex64, Complex64) {
    (cf.h_plus(l).0, cf.h_minus(l).0)
}

/// Match to u ∝ H⁻ − η H⁺ with Coulomb functions of Sommerfeld parameter
/// `sommerfeld` (Riccati-Bessel functions when it is zero).
pub fn match_charged(
    u: (Complex64, Complex64),
    k: f64,
    sommerfeld: f64,
    l: u32,
    j: JSign,
    grid: &RadialGrid,
) -> Result<ChannelSolution> {
    let prev = coulomb_functions(sommerfeld, l, k * (grid.r_match - grid.h))?;
    let last = coulomb_functions(sommerfeld, l, k * grid.r_match)?;
    match_with(u, hankels(&prev, l), hankels(&last, l), l, j)
}

/// Match to spherical Hankel functions, u ∝ (i/2)[H⁻ − η H⁺].
pub fn match_neutron(
    u: (Complex64, Complex64),
    k: f64,
    l: u32,
    j: JSign,
    grid: &RadialGrid,
) -> Result<ChannelSolution> {
    match_charged(u, k, 0.0, l, j, grid)
}

/// Sommerfeld parameter η_S = (2μ/ħ²) Z₁Z₂e² / (2k).
pub fn sommerfeld(params: &OpticalPotentialParams, nucleus: &NucleusSpec, kin: &Kinematics) -> f64 {
    let zz = params.charge_product(nucleus);
    if zz == 0.0 || kin.k == 0.0 {
        0.0
    } else {
        kin.two_mu_over_hbar2() * zz * E2 / (2.0 * kin.k)
    }
}

/// Potential tables on a grid, shared by all channels.
struct RadialTables {
    grid: RadialGrid,
    central: Vec<Complex64>,
    spin_orbit: Vec<Complex64>,
}

impl RadialTables {
    fn new(params: &OpticalPotentialParams, nucleus: &NucleusSpec, grid: RadialGrid) -> Self {
        let a13 = nucleus.a_third();
        let central = grid.radii().map(|r| params.central(nucleus, r, a13)).collect();
        let spin_orbit = grid.radii().map(|r| params.spin_orbit_factor(r, a13)).collect();
        RadialTables { grid, central, spin_orbit }
    }

    fn fill(&self, l: u32, j: JSign, out: &mut Vec<Complex64>) {
        let ls = j.l_dot_s(l);
        out.clear();
        out.extend(self.central.iter().zip(&self.spin_orbit).map(|(c, s)| c + ls * s));
    }
}

/// Asymptotic functions at r_match − h for each grid plus r_match.
struct Asymptotics {
    eta_s: f64,
    k: f64,
    l_top: u32,
    radii: Vec<f64>,
    funcs: Vec<CoulombFunctions>,
}

impl Asymptotics {
    fn new(eta_s: f64, k: f64, l_top: u32, radii: Vec<f64>) -> Result<Self> {
        let funcs = radii
            .iter()
            .map(|&r| coulomb_functions(eta_s, l_top, k * r))
            .collect::<Result<Vec<_>>>()?;
        Ok(Asymptotics { eta_s, k, l_top, radii, funcs })
    }

    fn ensure(&mut self, l: u32, l_cap: u32) -> Result<()> {
        if l > self.l_top {
            let top = (2 * self.l_top).max(l).min(l_cap.max(l));
            *self = Asymptotics::new(self.eta_s, self.k, top, core::mem::take(&mut self.radii))?;
        }
        Ok(())
    }
}

/// Solve every partial wave until the S-matrix has converged to unity.
pub fn solve_all(
    params: &OpticalPotentialParams,
    nucleus: &NucleusSpec,
    kin: &Kinematics,
    options: &SolverOptions,
) -> Result<PartialWaveSet> {
    let k = kin.k;
    if !(k > 0.0) || !(kin.t > 0.0) {
        return Err(Error::Domain { what: "lab kinetic energy", value: kin.t });
    }
    let r_match = options.r_match.unwrap_or_else(|| default_matching_radius(params, nucleus));
    let coarse = RadialGrid::new(r_match, options.step.unwrap_or_else(|| default_step(k)))?;
    let mut grids = alloc::vec![coarse];
    if options.richardson {
        grids.push(RadialGrid::new(r_match, 0.5 * coarse.h)?);
    }
    let l_grazing = grazing(nucleus.a(), k)?.l_max;
    let eta_s = sommerfeld(params, nucleus, kin);
    let coupling = kin.two_mu_over_hbar2();
    let tables: Vec<_> = grids.iter().map(|&g| RadialTables::new(params, nucleus, g)).collect();

    let l_min_stop = l_grazing + options.padding;
    let l_top = (l_min_stop + 10).max((k * r_match).ceil() as u32 + 20).min(options.l_cap);
    // radii: r_match, then r_match − h for each grid
    let mut radii = alloc::vec![r_match];
    radii.extend(grids.iter().map(|g| r_match - g.h));
    let mut asym = Asymptotics::new(eta_s, k, l_top, radii)?;

    let mut waves = Vec::new();
    let mut pot = Vec::with_capacity(grids.last().map_or(0, |g| g.points));
    let converged = |c: &ChannelSolution| {
        c.absorption().abs() < options.tolerance
            && (Complex64::new(1.0, 0.0) - c.eta).norm_sqr() < options.tolerance
    };

    let mut l = 0u32;
    loop {
        if l > options.l_cap {
            return Err(Error::PartialWaveCutoff { l_cap: options.l_cap });
        }
        asym.ensure(l, options.l_cap)?;
        let mut solve = |j: JSign| -> Result<ChannelSolution> {
            let mut etas = [Complex64::new(0.0, 0.0); 2];
            for (g, table) in tables.iter().enumerate() {
                table.fill(l, j, &mut pot);
                if pot.iter().all(|v| *v == Complex64::new(0.0, 0.0)) {
                    // nothing to scatter from; skip the O(h⁴) noise of integrating
                    return Ok(ChannelSolution::from_eta(l, j, Complex64::new(1.0, 0.0)));
                }
                let u = integrate_channel(&pot, coupling, k, l, j, &table.grid)?;
                let last = hankels(&asym.funcs[0], l);
                let prev = hankels(&asym.funcs[g + 1], l);
                etas[g] = match_with(u, prev, last, l, j)?.eta;
            }
            let eta = if tables.len() == 2 { (16.0 * etas[1] - etas[0]) / 15.0 } else { etas[0] };
            Ok(ChannelSolution::from_eta(l, j, eta))
        };
        let plus = solve(JSign::Plus)?;
        let minus = if l > 0 { Some(solve(JSign::Minus)?) } else { None };
        let wave = PartialWave { l, plus, minus };
        let done = l >= l_min_stop && wave.channels().all(converged);
        waves.push(wave);
        if done {
            break;
        }
        l += 1;
    }

    Ok(PartialWaveSet {
        k,
        l_max: l,
        l_grazing,
        sommerfeld: eta_s,
        coulomb_phases: coulomb_phases(eta_s, l),
        waves,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::ParticlePair;
    use crate::nuclide::{MassModel, Projectile};
    use crate::potential::{global_params, WoodsSaxonTerm};

    const COUPLING: f64 = 0.045;

    fn free_eta(k: f64, l: u32, h: f64) -> Complex64 {
        let grid = RadialGrid::new(12.0, h).unwrap();
        let pot = alloc::vec![Complex64::new(0.0, 0.0); grid.points];
        let u = integrate_channel(&pot, COUPLING, k, l, JSign::Plus, &grid).unwrap();
        match_neutron(u, k, l, JSign::Plus, &grid).unwrap().eta
    }

    #[test]
    fn free_s_wave_is_a_sine() {
        let k = 1.3;
        let grid = RadialGrid::new(10.0, 0.01).unwrap();
        let pot = alloc::vec![Complex64::new(0.0, 0.0); grid.points];
        let (u1, u2) = integrate_channel(&pot, COUPLING, k, 0, JSign::Plus, &grid).unwrap();
        let (r1, r2) = (grid.r_match - grid.h, grid.r_match);
        let scale = u2.re / (k * r2).sin();
        assert!(((u1.re / scale) - (k * r1).sin()).abs() < 1e-6 * (k * r1).sin().abs().max(1e-3));
    }

    #[test]
    fn free_potential_gives_unit_eta() {
        for &(k, l) in &[(0.5, 0), (1.0, 3), (1.0, 10), (4.0, 0), (8.6, 0), (1.5, 25)] {
            let h = default_step(k);
            let eta = free_eta(k, l, h);
            assert!((eta - 1.0).norm() < 1e-8, "k={k} l={l} eta={eta}");
        }
    }

    #[test]
    fn real_potential_is_unitary_and_absorptive_is_not() {
        let grid = RadialGrid::new(12.0, 0.01).unwrap();
        let ws = WoodsSaxonTerm::new(45.0, 1.2, 0.65).unwrap();
        let a13 = 3.0;
        let real: Vec<_> = grid.radii().map(|r| Complex64::new(-ws.depth * ws.shape(r, a13), 0.0)).collect();
        let absorptive: Vec<_> = grid
            .radii()
            .map(|r| Complex64::new(-ws.depth, -10.0) * ws.shape(r, a13))
            .collect();
        for l in [0, 2, 7] {
            let u = integrate_channel(&real, COUPLING, 1.5, l, JSign::Plus, &grid).unwrap();
            let c = match_neutron(u, 1.5, l, JSign::Plus, &grid).unwrap();
            assert!((c.eta.norm() - 1.0).abs() < 1e-8, "l={l} |eta|={}", c.eta.norm());
            let u = integrate_channel(&absorptive, COUPLING, 1.5, l, JSign::Plus, &grid).unwrap();
            let c = match_neutron(u, 1.5, l, JSign::Plus, &grid).unwrap();
            assert!(c.eta.norm() < 1.0);
        }
    }

    #[test]
    fn phase_shift_consistent_with_eta() {
        let c = ChannelSolution::from_eta(2, JSign::Minus, Complex64::from_polar(0.6, 1.1));
        let i = Complex64::new(0.0, 1.0);
        assert!(((2.0 * i * c.delta).exp() - c.eta).norm() < 1e-14);
        assert!(c.delta.im > 0.0);
    }

    #[test]
    fn coarse_step_is_rejected() {
        let grid = RadialGrid::new(12.0, 0.2).unwrap();
        let pot = alloc::vec![Complex64::new(-50.0, 0.0); grid.points];
        let err = integrate_channel(&pot, COUPLING, 3.0, 0, JSign::Plus, &grid).unwrap_err();
        assert!(matches!(err, Error::Unstable { .. }));
    }

    #[test]
    fn grid_ends_on_matching_radius() {
        let g = RadialGrid::new(10.003, 0.01).unwrap();
        assert!((g.r(g.points) - 10.003).abs() < 1e-12);
        assert!(g.h <= 0.01 && g.r_min == g.h);
        assert!(RadialGrid::new(10.0, 0.0).is_err());
    }

    fn solve(z: u32, n: u32, proj: Projectile, t: f64) -> PartialWaveSet {
        let target = NucleusSpec::new(z, n, MassModel::MassNumber).unwrap();
        let kin = Kinematics::new(t, ParticlePair::nucleon_on(proj, &target)).unwrap();
        let params = global_params(&target, t, proj).unwrap();
        solve_all(&params, &target, &kin, &SolverOptions::default()).unwrap()
    }

    #[test]
    fn ca40_65mev_converges_past_grazing() {
        let pw = solve(20, 20, Projectile::Neutron, 65.0);
        assert!(pw.l_max >= pw.l_grazing);
        let last = pw.waves.last().unwrap();
        assert!((last.plus.eta - 1.0).norm() < 1e-4);
        assert!(pw.waves[0].minus.is_none());
        assert!(pw.waves.iter().skip(1).all(|w| w.minus.is_some()));
        assert!(pw.max_eta_modulus() <= 1.0 + 1e-8);
    }

    #[test]
    fn zero_potential_gives_unit_s_matrix() {
        let target = NucleusSpec::new(20, 20, MassModel::MassNumber).unwrap();
        let kin = Kinematics::new(100.0, ParticlePair::nucleon_on(Projectile::Neutron, &target)).unwrap();
        let mut params = global_params(&target, 100.0, Projectile::Neutron).unwrap();
        for t in [
            &mut params.real_volume,
            &mut params.imag_volume,
            &mut params.imag_surface,
            &mut params.real_spin_orbit,
            &mut params.imag_spin_orbit,
        ] {
            t.depth = 0.0;
        }
        let opts = SolverOptions { r_match: Some(12.0), ..SolverOptions::default() };
        let pw = solve_all(&params, &target, &kin, &opts).unwrap();
        for c in pw.channels() {
            assert!((c.eta - 1.0).norm() < 1e-8);
        }
    }
}
