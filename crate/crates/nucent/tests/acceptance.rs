//! Acceptance criteria. One line per criterion; exit status 1 if any fails.

use std::f64::consts::PI;
use std::time::Instant;

use nucent::config::{ScanConfig, Target};
use nucent::csvio::{write_rows, ScanRow};
use nucent::report::{reference_for, uniform_reference, FitReport, UNIFORM_INTERCEPT_HALF_WIDTH};
use nucent::scan::{run_isotope_scan, run_scan, solve_point, Parallelism};
use nucent::validate;
use nucent_core::kinematics::{uniform_entropy, uniform_intercept, ParticlePair};
use nucent_core::nuclide::ChainElement;
use nucent_core::observables::forward_amplitude;
use nucent_core::{MassModel, NucleusSpec, Projectile, SolverOptions};
use rayon::prelude::*;

struct Outcome {
    id: u32,
    name: &'static str,
    passed: bool,
    detail: String,
}

fn csv(rows: &[ScanRow]) -> Vec<u8> {
    let mut buf = Vec::new();
    write_rows(&mut buf, rows).expect("in-memory CSV");
    buf
}

fn main() {
    let cfg = ScanConfig::default();
    let opts = SolverOptions::default();
    let energies = cfg.energy.energies().expect("default grid");
    let mut points: Vec<(Projectile, Target, f64)> = Vec::new();
    for &p in &cfg.projectiles {
        for &tg in &cfg.targets {
            points.extend(energies.iter().map(|&t| (p, tg, t)));
        }
    }
    let mut out = Vec::new();

    // Production scan, timed.
    let start = Instant::now();
    let rows = run_scan(&cfg, &opts, Parallelism::Auto).expect("scan runs");
    let grid_seconds = start.elapsed().as_secs_f64();

    // Per-point detail for normalization and unitarity.
    let details: Vec<_> = points
        .par_iter()
        .map(|&(p, tg, t)| solve_point(&cfg.potential, p, tg, t, cfg.coulomb, cfg.mass_model, &opts))
        .collect();
    let failures = details.iter().filter(|d| d.is_err()).count();

    // 1
    let worst_norm = details
        .iter()
        .flatten()
        .map(|d| (d.probabilities.sum() - 1.0).abs())
        .fold(0.0, f64::max);
    out.push(Outcome {
        id: 1,
        name: "normalization",
        passed: failures == 0 && rows.len() == 700 && worst_norm <= 1e-12,
        detail: format!("{} points, {failures} failed, max |Σp − 1| = {worst_norm:.2e} (≤ 1e-12)", rows.len()),
    });

    // 2
    let worst_eta = details.iter().flatten().map(|d| d.partial_waves.max_eta_modulus()).fold(0.0, f64::max);
    out.push(Outcome {
        id: 2,
        name: "unitarity",
        passed: failures == 0 && worst_eta <= 1.0 + 1e-8,
        detail: format!("max |η| = {worst_eta:.12} (≤ 1 + 1e-8)"),
    });

    // 3
    let sq = validate::check_square_well().expect("square well");
    let free = validate::check_free_waves().expect("free waves");
    out.push(Outcome {
        id: 3,
        name: "solver oracle",
        passed: sq.passed && free.passed,
        detail: format!("square well {:.2e} rad (≤ 1e-6), free |η − 1| {:.2e} (≤ 1e-8)", sq.worst, free.worst),
    });

    // 4
    let wr = validate::check_wronskian().expect("wronskian");
    let bes = validate::check_neutral_coulomb().expect("bessel");
    out.push(Outcome {
        id: 4,
        name: "Coulomb machinery",
        passed: wr.passed && bes.passed,
        detail: format!("Wronskian {:.2e}, η_S = 0 vs Riccati-Bessel {:.2e} (≤ 1e-8)", wr.worst, bes.worst),
    });

    // 5: ten neutron points of the default grid
    let mut worst_ot = 0.0f64;
    for i in 0..10 {
        let idx = (i * 35 + 7) % 350;
        let (_, tg, t) = points[idx];
        let d = solve_point(&cfg.potential, Projectile::Neutron, tg, t, true, cfg.mass_model, &opts).expect("neutron point");
        let im = forward_amplitude(&d.partial_waves).expect("amplitude").im;
        let rhs = d.kinematics.k * d.cross_sections.total / (4.0 * PI);
        worst_ot = worst_ot.max((im - rhs).abs() / rhs);
    }
    out.push(Outcome {
        id: 5,
        name: "optical theorem",
        passed: worst_ot <= 1e-3,
        detail: format!("max relative deviation {worst_ot:.2e} at 10 grid points (≤ 1e-3)"),
    });

    // 6, 7
    let fits: Vec<FitReport> = [(20.0, 1000.0), (50.0, 500.0)]
        .iter()
        .flat_map(|&(lo, hi)| [Projectile::Neutron, Projectile::Proton].map(|p| (p, lo, hi)))
        .map(|(p, lo, hi)| FitReport::build(&rows, p, lo, hi).expect("fit"))
        .collect();
    let wide: Vec<&FitReport> = fits.iter().filter(|f| f.emin == 20.0).collect();
    out.push(Outcome {
        id: 6,
        name: "linearity",
        passed: wide.iter().all(|f| f.r_squared >= 0.95),
        detail: wide.iter().map(|f| format!("{}A R² = {:.4}", f.projectile, f.r_squared)).collect::<Vec<_>>().join(", ") + " (≥ 0.95)",
    });
    let mut ok7 = true;
    let mut parts = Vec::new();
    for f in &fits {
        let p = if f.projectile == "n" { Projectile::Neutron } else { Projectile::Proton };
        let r = reference_for(p, f.emin, f.emax).expect("reference row");
        let ok = (0.55..=0.90).contains(&f.b)
            && (0.25..=0.45).contains(&f.c)
            && (f.b - r.b).abs() <= 0.15
            && (f.c - r.c).abs() <= 0.10;
        ok7 &= ok;
        parts.push(format!("{} b={:.4} (ref {:.4}) c={:.4} (ref {:.4}){}", r.label, f.b, r.b, f.c, r.c, if ok { "" } else { " ✗" }));
    }
    out.push(Outcome { id: 7, name: "fit coefficients", passed: ok7, detail: parts.join("; ") });

    // 8
    let mut slope_err = 0.0f64;
    let mut intercepts = Vec::new();
    for p in [Projectile::Neutron, Projectile::Proton] {
        for tg in Target::reference() {
            let nuc = NucleusSpec::new(tg.z, tg.n, MassModel::MassNumber).expect("nucleus");
            let pair = ParticlePair::nucleon_on(p, &nuc);
            let (lo, hi) = (uniform_entropy(50.0, &nuc, pair).unwrap(), uniform_entropy(200.0, &nuc, pair).unwrap());
            slope_err = slope_err.max(((hi.entropy_continuous - lo.entropy_continuous) / (4.0f64).ln() - 0.5).abs());
            intercepts.push((p, tg, uniform_intercept(&nuc, pair)));
        }
    }
    let band = uniform_reference().a;
    let outside: Vec<String> = intercepts
        .iter()
        .filter(|(_, _, a)| (a - band).abs() > UNIFORM_INTERCEPT_HALF_WIDTH)
        .map(|(p, tg, a)| format!("{p}+{tg} a={a:.3}"))
        .collect();
    let (amin, amax) = intercepts.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), x| (l.min(x.2), h.max(x.2)));
    out.push(Outcome {
        id: 8,
        name: "uniform model",
        passed: slope_err < 1e-12 && outside.is_empty(),
        detail: format!(
            "|∂S/∂lnT − 1/2| = {slope_err:.1e}; a ∈ [{amin:.3}, {amax:.3}] vs {band} ± {UNIFORM_INTERCEPT_HALF_WIDTH}; outside: {}",
            if outside.is_empty() { "none".into() } else { outside.join(", ") }
        ),
    });

    // 9
    let mut hits = Vec::new();
    let mut total = 0;
    for e in ChainElement::ALL {
        let chains = run_isotope_scan(e, 400.0, &[Projectile::Neutron], &cfg, &opts, Parallelism::Auto).expect("chain");
        for &m in e.magic_neutrons() {
            total += 1;
            if chains[0].shell_signature(m) {
                hits.push(format!("{}N={m}", e.symbol()));
            }
        }
    }
    out.push(Outcome {
        id: 9,
        name: "shell signatures",
        passed: hits.len() >= 5,
        detail: format!("{} of {total} magic cases show a d²S/dN² feature (≥ 5): [{}]", hits.len(), hits.join(", ")),
    });

    // 10
    let mut slowest = 0.0f64;
    for &(p, t) in &[(Projectile::Proton, 1000.0), (Projectile::Neutron, 1000.0), (Projectile::Proton, 20.0)] {
        let tg = Target { z: 82, n: 126 };
        let s = Instant::now();
        solve_point(&cfg.potential, p, tg, t, true, cfg.mass_model, &opts).expect("point");
        slowest = slowest.max(s.elapsed().as_secs_f64());
    }
    let threads = rayon::current_num_threads();
    out.push(Outcome {
        id: 10,
        name: "performance",
        passed: grid_seconds < 60.0 && slowest < 0.5,
        detail: format!("700-point grid {grid_seconds:.2} s on {threads} thread(s) (< 60 s); slowest point {slowest:.3} s (< 0.5 s)"),
    });

    // 11
    let serial = run_scan(&cfg, &opts, Parallelism::Serial).expect("serial scan");
    let again = run_scan(&cfg, &opts, Parallelism::Auto).expect("repeat scan");
    let (a, b, c) = (csv(&rows), csv(&serial), csv(&again));
    out.push(Outcome {
        id: 11,
        name: "determinism",
        passed: a == b && a == c,
        detail: format!("parallel vs serial identical: {}, repeat identical: {}", a == b, a == c),
    });

    println!();
    for o in &out {
        println!("{} [{:>2}] {:<26} {}", if o.passed { "PASS" } else { "FAIL" }, o.id, o.name, o.detail);
    }

    // Supplementary figures, not criteria.
    let spot = rows
        .iter()
        .filter(|r| r.projectile == Projectile::Neutron && r.target == Target { z: 20, n: 20 })
        .min_by(|x, y| (x.t - 400.0).abs().total_cmp(&(y.t - 400.0).abs()))
        .expect("n + 40Ca rows");
    let r = reference_for(Projectile::Neutron, 20.0, 1000.0).unwrap();
    let law_s = r.a + r.b * spot.t.ln() + r.c * 40f64.ln();
    println!("info n+40Ca T={:.1} MeV: S = {:.3} nats, published law gives {:.3}", spot.t, spot.s, law_s);
    for f in &fits {
        println!(
            "info {}A {}-{} MeV: a={:.4} b={:.4} c={:.4}, {:.1}% of residuals within 5%",
            f.projectile,
            f.emin,
            f.emax,
            f.a,
            f.b,
            f.c,
            100.0 * f.within_5_percent
        );
    }

    let failed = out.iter().filter(|o| !o.passed).count();
    println!("acceptance: {} passed, {failed} failed", out.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
