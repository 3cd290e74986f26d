//! Built-in oracle suite: square well, free waves, Coulomb functions,
//! unitarity and the optical theorem.

use std::f64::consts::PI;

use nucent_core::coulomb::coulomb_functions;
use nucent_core::kinematics::{grazing, Kinematics, ParticlePair};
use nucent_core::observables::forward_amplitude;
use nucent_core::pipeline::compute_point_with;
use nucent_core::potential::global_params;
use nucent_core::solver::{default_matching_radius, default_step, integrate_channel, match_neutron, solve_all};
use nucent_core::{JSign, MassModel, NucleusSpec, Projectile, RadialGrid, SolverOptions, WoodsSaxonTerm};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// Worst observed deviation.
    pub worst: f64,
    pub tolerance: f64,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, worst: f64, tolerance: f64, detail: String) -> Self {
        Check { name, passed: worst <= tolerance, worst, tolerance, detail }
    }

    pub fn line(&self) -> String {
        format!(
            "{} {:<28} worst {:.3e} (tolerance {:.0e}) {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.worst,
            self.tolerance,
            self.detail
        )
    }
}

fn ca40() -> NucleusSpec {
    NucleusSpec::new(20, 20, MassModel::MassNumber).expect("valid nucleus")
}

/// s-wave phase shift of a real square well (depth 40 MeV, radius 3 fm)
/// by Numerov, extrapolated in the step, and by tan(kR + δ) = (k/K) tan(KR).
pub fn square_well_phase(t: f64) -> Result<(f64, f64)> {
    let kin = Kinematics::new(t, ParticlePair::nucleon_on(Projectile::Neutron, &ca40()))?;
    let (k, coupling) = (kin.k, kin.two_mu_over_hbar2());
    let (depth, radius) = (40.0, 3.0);
    let mut deltas = [0.0; 2];
    for (slot, h) in deltas.iter_mut().zip([0.002, 0.001]) {
        let grid = RadialGrid::new(8.0, h)?;
        let table: Vec<Complex64> = grid
            .radii()
            .map(|r| {
                // the edge point carries the mean of the two sides
                let v = if (r - radius).abs() < 0.25 * grid.h {
                    -0.5 * depth
                } else if r < radius {
                    -depth
                } else {
                    0.0
                };
                Complex64::new(v, 0.0)
            })
            .collect();
        let u = integrate_channel(&table, coupling, k, 0, JSign::Plus, &grid)?;
        *slot = match_neutron(u, k, 0, JSign::Plus, &grid)?.delta.re;
    }
    let numeric = (4.0 * deltas[1] - deltas[0]) / 3.0;
    let kk = (k * k + coupling * depth).sqrt();
    let exact = ((k / kk) * (kk * radius).tan()).atan() - k * radius;
    Ok((numeric, exact))
}

fn distance_mod_pi(x: f64) -> f64 {
    let y = x.rem_euclid(PI);
    y.min(PI - y)
}

pub fn check_square_well() -> Result<Check> {
    let energies = [5.0, 20.0, 50.0, 100.0, 200.0];
    let mut worst = 0.0f64;
    for t in energies {
        let (num, exact) = square_well_phase(t)?;
        worst = worst.max(distance_mod_pi(num - exact));
    }
    Ok(Check::new("square-well s-wave phase", worst, 1e-6, format!("rad, T = {energies:?} MeV")))
}

/// Free waves through the radial integrator and matching, step pair h, h/2
/// combined as in the solver, for l up to the grazing value plus five.
pub fn check_free_waves() -> Result<Check> {
    let nuc = ca40();
    let mut worst = 0.0f64;
    let mut count = 0;
    for t in [20.0, 100.0, 400.0, 1000.0] {
        let kin = Kinematics::new(t, ParticlePair::nucleon_on(Projectile::Neutron, &nuc))?;
        let r_match = default_matching_radius(&global_params(&nuc, t, Projectile::Neutron)?, &nuc);
        let h = default_step(kin.k);
        let grids = [RadialGrid::new(r_match, h)?, RadialGrid::new(r_match, h / 2.0)?];
        let l_top = grazing(nuc.a(), kin.k)?.l_max + 5;
        for l in 0..=l_top {
            let mut etas = [Complex64::new(0.0, 0.0); 2];
            for (eta, grid) in etas.iter_mut().zip(&grids) {
                let zero = vec![Complex64::new(0.0, 0.0); grid.points];
                let u = integrate_channel(&zero, kin.two_mu_over_hbar2(), kin.k, l, JSign::Plus, grid)?;
                *eta = match_neutron(u, kin.k, l, JSign::Plus, grid)?.eta;
            }
            let eta = (16.0 * etas[1] - etas[0]) / 15.0;
            worst = worst.max((eta - 1.0).norm());
            count += 1;
        }
    }
    Ok(Check::new("free waves: eta = 1", worst, 1e-8, format!("{count} channels")))
}

/// Ten (η_S, ρ) points spanning neutral, weak and strong Coulomb fields.
pub const WRONSKIAN_POINTS: [(f64, f64); 10] = [
    (0.0, 0.5),
    (0.0, 30.0),
    (0.1, 2.0),
    (0.3, 10.0),
    (0.5, 60.0),
    (1.0, 5.0),
    (2.0, 1.0),
    (3.0, 25.0),
    (5.0, 15.0),
    (10.0, 40.0),
];

pub fn check_wronskian() -> Result<Check> {
    let mut worst = 0.0f64;
    for (eta, rho) in WRONSKIAN_POINTS {
        let cf = coulomb_functions(eta, 60, rho)?;
        for l in 0..=60 {
            let w = cf.wronskian(l);
            worst = worst.max(if w.is_finite() { (w - 1.0).abs() } else { f64::INFINITY });
        }
    }
    Ok(Check::new("Coulomb Wronskian", worst, 1e-8, "l <= 60 at 10 (eta, rho) points".into()))
}

/// ρ j_l(ρ) (Miller's downward recurrence) and −ρ y_l(ρ) (upward).
pub fn riccati_bessel(l_max: usize, x: f64) -> (Vec<f64>, Vec<f64>) {
    let top = l_max + 40 + x as usize;
    let mut j = vec![0.0; top + 2];
    j[top] = 1e-300;
    for l in (1..=top).rev() {
        j[l - 1] = (2 * l + 1) as f64 / x * j[l] - j[l + 1];
        if j[l - 1].abs() > 1e250 {
            j.iter_mut().skip(l - 1).for_each(|v| *v *= 1e-250);
        }
    }
    let norm = x.sin() / x / j[0];
    let f = j[..=l_max].iter().map(|v| x * v * norm).collect();
    let mut y = vec![-x.cos() / x, -x.cos() / (x * x) - x.sin() / x];
    for l in 1..l_max {
        y.push((2 * l + 1) as f64 / x * y[l] - y[l - 1]);
    }
    let g = y[..=l_max].iter().map(|v| -x * v).collect();
    (f, g)
}

pub fn check_neutral_coulomb() -> Result<Check> {
    let mut worst = 0.0f64;
    for rho in [0.5, 3.0, 12.0, 40.0] {
        let cf = coulomb_functions(0.0, 30, rho)?;
        let (f, g) = riccati_bessel(30, rho);
        for l in 0..=30 {
            worst = worst.max(((cf.f[l] - f[l]) / f[l]).abs()).max(((cf.g[l] - g[l]) / g[l]).abs());
        }
    }
    Ok(Check::new("eta_S = 0 Riccati-Bessel", worst, 1e-8, "relative, l <= 30".into()))
}

pub fn check_real_potential_unitarity() -> Result<Check> {
    let nuc = ca40();
    let mut worst = 0.0f64;
    for t in [30.0, 150.0] {
        let mut p = global_params(&nuc, t, Projectile::Neutron)?;
        p.imag_volume = WoodsSaxonTerm::zero();
        p.imag_surface = WoodsSaxonTerm::zero();
        p.imag_spin_orbit = WoodsSaxonTerm::zero();
        let kin = Kinematics::new(t, ParticlePair::nucleon_on(Projectile::Neutron, &nuc))?;
        let pw = solve_all(&p, &nuc, &kin, &SolverOptions::default())?;
        worst = pw.channels().map(|c| (c.eta.norm() - 1.0).abs()).fold(worst, f64::max);
    }
    Ok(Check::new("real potential |eta| = 1", worst, 1e-8, "n + 40Ca".into()))
}

/// Ten neutron points of the default grid.
pub const OPTICAL_THEOREM_POINTS: [(u32, u32, f64); 10] = [
    (2, 2, 20.0),
    (6, 6, 50.0),
    (8, 8, 100.0),
    (20, 20, 20.0),
    (20, 20, 400.0),
    (28, 30, 200.0),
    (40, 50, 60.0),
    (40, 50, 1000.0),
    (82, 126, 30.0),
    (82, 126, 700.0),
];

pub fn check_optical_theorem() -> Result<Check> {
    let mut worst = 0.0f64;
    for (z, n, t) in OPTICAL_THEOREM_POINTS {
        let nuc = NucleusSpec::new(z, n, MassModel::MassNumber)?;
        let r = compute_point_with(&global_params(&nuc, t, Projectile::Neutron)?, &nuc, &SolverOptions::default())?;
        let im_f0 = forward_amplitude(&r.partial_waves)?.im;
        let rhs = r.kinematics.k * r.cross_sections.total / (4.0 * PI);
        worst = worst.max((im_f0 - rhs).abs() / rhs);
    }
    Ok(Check::new("optical theorem (neutrons)", worst, 1e-3, "relative, 10 points".into()))
}

pub fn run_all() -> Vec<Result<Check>> {
    vec![
        check_square_well(),
        check_free_waves(),
        check_wronskian(),
        check_neutral_coulomb(),
        check_real_potential_unitarity(),
        check_optical_theorem(),
    ]
}
