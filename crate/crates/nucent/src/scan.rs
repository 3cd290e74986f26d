//! Parallel scans over (projectile, target, energy) and isotope chains.

use std::time::{SystemTime, UNIX_EPOCH};

use nucent_core::nuclide::ChainElement;
use nucent_core::pipeline::{compute_point_with, PointResult};
use nucent_core::{MassModel, Projectile, SolverOptions};
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{PotentialSource, ScanConfig, Target};
use crate::csvio::{sort_rows, ScanRow};
use crate::error::{AppError, Result};

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "NUCENT_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Parallelism {
    Serial,
    /// Worker count from `NUCENT_THREADS`, else all cores.
    #[default]
    Auto,
    Threads(usize),
}

impl Parallelism {
    fn threads(self) -> Result<usize> {
        match self {
            Parallelism::Serial => Ok(1),
            Parallelism::Threads(0) => Err(AppError::Usage("thread count must be >= 1".into())),
            Parallelism::Threads(n) => Ok(n),
            Parallelism::Auto => match std::env::var(THREADS_ENV) {
                Ok(v) => match v.trim().parse::<usize>() {
                    Ok(n) if n > 0 => Ok(n),
                    _ => Err(AppError::Usage(format!("{THREADS_ENV} must be a positive integer, got '{v}'"))),
                },
                Err(_) => Ok(std::thread::available_parallelism().map_or(1, usize::from)),
            },
        }
    }
}

/// Provenance written next to a scan table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanMetadata {
    pub potential_id: String,
    pub code_version: &'static str,
    pub timestamp_unix: u64,
    pub rows: usize,
    pub failed_rows: usize,
}

impl ScanMetadata {
    pub fn new(potential: &PotentialSource, rows: &[ScanRow]) -> Self {
        ScanMetadata {
            potential_id: potential.id(),
            code_version: env!("CARGO_PKG_VERSION"),
            timestamp_unix: SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()),
            rows: rows.len(),
            failed_rows: rows.iter().filter(|r| !r.is_ok()).count(),
        }
    }
}

/// Full result of one point, or the error that stopped it.
pub fn solve_point(
    source: &PotentialSource,
    projectile: Projectile,
    target: Target,
    t: f64,
    coulomb: bool,
    mass_model: MassModel,
    options: &SolverOptions,
) -> Result<PointResult> {
    let nucleus = target.nucleus(mass_model)?;
    let params = source.params(&nucleus, t, projectile, coulomb)?;
    Ok(compute_point_with(&params, &nucleus, options)?)
}

pub fn compute_row(
    source: &PotentialSource,
    projectile: Projectile,
    target: Target,
    t: f64,
    coulomb: bool,
    mass_model: MassModel,
    options: &SolverOptions,
) -> ScanRow {
    match solve_point(source, projectile, target, t, coulomb, mass_model, options) {
        Ok(p) => ScanRow::from_record(&p.record),
        Err(e) => ScanRow::failed(projectile, target, t, &e.to_string()),
    }
}

fn run_points(points: &[(Projectile, Target, f64)], cfg: &ScanConfig, options: &SolverOptions, par: Parallelism) -> Result<Vec<ScanRow>> {
    let eval = |&(p, tg, t): &(Projectile, Target, f64)| compute_row(&cfg.potential, p, tg, t, cfg.coulomb, cfg.mass_model, options);
    let threads = par.threads()?;
    let mut rows: Vec<ScanRow> = if threads == 1 {
        points.iter().map(eval).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| AppError::Usage(format!("thread pool: {e}")))?;
        pool.install(|| points.par_iter().map(eval).collect())
    };
    sort_rows(&mut rows);
    Ok(rows)
}

/// Every (projectile, target, energy) of the config, sorted by (projectile, A, Z, T).
pub fn run_scan(cfg: &ScanConfig, options: &SolverOptions, par: Parallelism) -> Result<Vec<ScanRow>> {
    let energies = cfg.energy.energies()?;
    let mut points = Vec::with_capacity(cfg.projectiles.len() * cfg.targets.len() * energies.len());
    for &p in &cfg.projectiles {
        for &tg in &cfg.targets {
            points.extend(energies.iter().map(|&t| (p, tg, t)));
        }
    }
    run_points(&points, cfg, options, par)
}

#[derive(Debug, Clone, PartialEq)]
pub struct IsotopePoint {
    pub row: ScanRow,
    /// S(N+1) − 2S(N) + S(N−1) where both neighbours exist.
    pub d2: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IsotopeChain {
    pub projectile: Projectile,
    pub element: ChainElement,
    pub t: f64,
    pub points: Vec<IsotopePoint>,
}

/// Second differences of consecutive values; `None` at the ends and next to
/// missing values.
pub fn second_differences(s: &[f64]) -> Vec<Option<f64>> {
    (0..s.len())
        .map(|i| {
            if i == 0 || i + 1 >= s.len() {
                return None;
            }
            let d = s[i + 1] - 2.0 * s[i] + s[i - 1];
            d.is_finite().then_some(d)
        })
        .collect()
}

impl IsotopeChain {
    fn d2_at(&self, n: u32) -> Option<f64> {
        self.points.iter().find(|p| p.row.target.n == n).and_then(|p| p.d2)
    }

    /// Whether the second difference changes sign or has a strict local
    /// extremum within one neutron of `magic`.
    pub fn shell_signature(&self, magic: u32) -> bool {
        (magic.saturating_sub(1)..=magic + 1).any(|n| {
            let here = self.d2_at(n);
            let next = self.d2_at(n + 1);
            let prev = n.checked_sub(1).and_then(|m| self.d2_at(m));
            let sign_change = matches!((here, next), (Some(a), Some(b)) if a * b < 0.0);
            let extremum = matches!((prev, here, next), (Some(a), Some(b), Some(c)) if (b > a && b > c) || (b < a && b < c));
            sign_change || extremum
        })
    }
}

/// Entropy along an embedded isotope chain at fixed energy.
pub fn run_isotope_scan(
    element: ChainElement,
    t: f64,
    projectiles: &[Projectile],
    cfg: &ScanConfig,
    options: &SolverOptions,
    par: Parallelism,
) -> Result<Vec<IsotopeChain>> {
    if !(t > 0.0) {
        return Err(AppError::Usage(format!("energy must be > 0, got {t}")));
    }
    let isotopes: Vec<Target> = element.isotopes(cfg.mass_model).map(|n| Target { z: n.z, n: n.n }).collect();
    let points: Vec<_> = projectiles.iter().flat_map(|&p| isotopes.iter().map(move |&tg| (p, tg, t))).collect();
    let rows = run_points(&points, cfg, options, par)?;
    let mut chains = Vec::new();
    for &p in projectiles {
        let mut chain_rows: Vec<ScanRow> = rows.iter().filter(|r| r.projectile == p).cloned().collect();
        chain_rows.sort_by_key(|r| r.target.n);
        let s: Vec<f64> = chain_rows.iter().map(|r| r.s).collect();
        let points = chain_rows.into_iter().zip(second_differences(&s)).map(|(row, d2)| IsotopePoint { row, d2 }).collect();
        chains.push(IsotopeChain { projectile: p, element, t, points });
    }
    Ok(chains)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn second_differences_of_quadratic_are_constant() {
        let s: Vec<f64> = (0..6).map(|n| f64::from(n * n)).collect();
        let d = second_differences(&s);
        assert_eq!(d[0], None);
        assert_eq!(d[5], None);
        assert!(d[1..5].iter().all(|x| *x == Some(2.0)));
        assert!(second_differences(&[1.0]).iter().all(Option::is_none));
        assert_eq!(second_differences(&[1.0, f64::NAN, 2.0])[1], None);
    }

    fn chain(ns: &[u32], d2: &[Option<f64>]) -> IsotopeChain {
        let points = ns
            .iter()
            .zip(d2)
            .map(|(&n, &d)| IsotopePoint {
                row: ScanRow::failed(Projectile::Neutron, Target { z: 20, n }, 400.0, "test"),
                d2: d,
            })
            .collect();
        IsotopeChain { projectile: Projectile::Neutron, element: ChainElement::Ca, t: 400.0, points }
    }

    #[test]
    fn detects_sign_change_and_extremum() {
        let ns: Vec<u32> = (16..=24).collect();
        let flat = chain(&ns, &[None, Some(1.0), Some(1.0), Some(1.0), Some(1.0), Some(1.0), Some(1.0), Some(1.0), None]);
        assert!(!flat.shell_signature(20));
        let flip = chain(&ns, &[None, Some(1.0), Some(1.0), Some(1.0), Some(1.0), Some(-1.0), Some(-1.0), Some(-1.0), None]);
        assert!(flip.shell_signature(20));
        let peak = chain(&ns, &[None, Some(1.0), Some(1.0), Some(2.0), Some(3.0), Some(1.0), Some(1.0), Some(1.0), None]);
        assert!(peak.shell_signature(21));
        assert!(!peak.shell_signature(17));
    }

    #[test]
    fn thread_count_validation() {
        assert_eq!(Parallelism::Serial.threads().unwrap(), 1);
        assert_eq!(Parallelism::Threads(3).threads().unwrap(), 3);
        assert!(Parallelism::Threads(0).threads().is_err());
    }
}
