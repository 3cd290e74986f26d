//! Plane fits over scan rows and their text/JSON reports.

use std::fmt::Write as _;

use nucent_core::fit::{fit_plane, residual_report, FitResult, FitSample, ResidualReport};
use nucent_core::Projectile;
use serde::Serialize;

use crate::csvio::ScanRow;
use crate::error::Result;

/// Published coefficients of S = a + b ln T + c ln A.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReferenceRow {
    pub label: &'static str,
    #[serde(skip)]
    pub projectile: Option<Projectile>,
    pub emin: f64,
    pub emax: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

pub const REFERENCE_ROWS: [ReferenceRow; 5] = [
    ReferenceRow { label: "nA 20-1000", projectile: Some(Projectile::Neutron), emin: 20.0, emax: 1000.0, a: -1.0796, b: 0.7168, c: 0.3787 },
    ReferenceRow { label: "pA 20-1000", projectile: Some(Projectile::Proton), emin: 20.0, emax: 1000.0, a: -1.1866, b: 0.7412, c: 0.3634 },
    ReferenceRow { label: "nA 50-500", projectile: Some(Projectile::Neutron), emin: 50.0, emax: 500.0, a: -1.1267, b: 0.7348, c: 0.3598 },
    ReferenceRow { label: "pA 50-500", projectile: Some(Projectile::Proton), emin: 50.0, emax: 500.0, a: -1.2638, b: 0.7638, c: 0.3485 },
    ReferenceRow { label: "uniform model", projectile: None, emin: 0.0, emax: f64::INFINITY, a: -1.25, b: 0.5, c: 1.0 / 3.0 },
];

/// Half-width of the published uniform-model intercept band.
pub const UNIFORM_INTERCEPT_HALF_WIDTH: f64 = 0.25;

pub fn reference_for(projectile: Projectile, emin: f64, emax: f64) -> Option<&'static ReferenceRow> {
    REFERENCE_ROWS
        .iter()
        .find(|r| r.projectile == Some(projectile) && r.emin == emin && r.emax == emax)
}

pub fn uniform_reference() -> &'static ReferenceRow {
    &REFERENCE_ROWS[4]
}

/// Successful rows of one projectile with emin ≤ T ≤ emax.
pub fn select_samples(rows: &[ScanRow], projectile: Projectile, emin: f64, emax: f64) -> Vec<FitSample> {
    rows.iter()
        .filter(|r| r.is_ok() && r.projectile == projectile && r.t >= emin && r.t <= emax)
        .map(|r| FitSample::new(r.t, f64::from(r.target.a()), r.s))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReferenceComparison {
    pub label: &'static str,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub delta_a: f64,
    pub delta_b: f64,
    pub delta_c: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FitReport {
    pub projectile: String,
    pub emin: f64,
    pub emax: f64,
    pub samples: usize,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub r_squared: f64,
    pub rms_residual: f64,
    pub max_residual: f64,
    pub residual_percent_median: f64,
    pub residual_percent_p90: f64,
    pub residual_percent_max: f64,
    /// Share of samples with |S − Ŝ|/S below 5 %.
    pub within_5_percent: f64,
    pub reference: Option<ReferenceComparison>,
    #[serde(skip)]
    pub fit: FitResult,
    #[serde(skip)]
    pub residuals: ResidualReport,
}

impl FitReport {
    pub fn build(rows: &[ScanRow], projectile: Projectile, emin: f64, emax: f64) -> Result<Self> {
        let samples = select_samples(rows, projectile, emin, emax);
        let fit = fit_plane(&samples)?;
        let residuals = residual_report(&fit, &samples);
        let reference = reference_for(projectile, emin, emax).map(|r| ReferenceComparison {
            label: r.label,
            a: r.a,
            b: r.b,
            c: r.c,
            delta_a: fit.a - r.a,
            delta_b: fit.b - r.b,
            delta_c: fit.c - r.c,
        });
        Ok(FitReport {
            projectile: projectile.tag().into(),
            emin,
            emax,
            samples: fit.samples,
            a: fit.a,
            b: fit.b,
            c: fit.c,
            r_squared: fit.r_squared,
            rms_residual: fit.rms_residual,
            max_residual: fit.max_residual,
            residual_percent_median: residuals.abs_percent_median,
            residual_percent_p90: residuals.abs_percent_p90,
            residual_percent_max: residuals.abs_percent_max,
            within_5_percent: residuals.fraction_within(5.0),
            reference,
            fit,
            residuals,
        })
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}A fit, {} <= T <= {} MeV, {} samples", self.projectile, self.emin, self.emax, self.samples);
        let _ = writeln!(s, "  {:<16} {:>11} {:>11} {:>11}", "", "a", "b", "c");
        let _ = writeln!(s, "  {:<16} {:>11.4} {:>11.4} {:>11.4}", "this run", self.a, self.b, self.c);
        match &self.reference {
            Some(r) => {
                let _ = writeln!(s, "  {:<16} {:>11.4} {:>11.4} {:>11.4}", r.label, r.a, r.b, r.c);
                let _ = writeln!(s, "  {:<16} {:>+11.4} {:>+11.4} {:>+11.4}", "difference", r.delta_a, r.delta_b, r.delta_c);
            }
            None => {
                let _ = writeln!(s, "  (no reference row for this projectile and range)");
            }
        }
        let u = uniform_reference();
        let _ = writeln!(
            s,
            "  {:<16} {:>11} {:>11.4} {:>11.4}",
            u.label,
            format!("{:.2}±{:.2}", u.a, UNIFORM_INTERCEPT_HALF_WIDTH),
            u.b,
            u.c
        );
        let _ = writeln!(s, "  R² = {:.5}, rms residual = {:.4}, max residual = {:.4} nats", self.r_squared, self.rms_residual, self.max_residual);
        let _ = writeln!(
            s,
            "  |residual|/S: median {:.2}%, p90 {:.2}%, max {:.2}%; {:.1}% of samples within 5%",
            self.residual_percent_median,
            self.residual_percent_p90,
            self.residual_percent_max,
            100.0 * self.within_5_percent
        );
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Target;
    use crate::csvio::FLAG_OK;

    fn synthetic() -> Vec<ScanRow> {
        let mut rows = Vec::new();
        for &(z, n) in &[(2, 2), (20, 20), (82, 126)] {
            for &t in &[20.0, 100.0, 400.0, 1000.0] {
                let a = f64::from(z + n);
                rows.push(ScanRow {
                    projectile: Projectile::Neutron,
                    target: Target { z, n },
                    t,
                    k: 1.0,
                    lmax: Some(1),
                    sigma_e_mb: 1.0,
                    sigma_r_mb: 1.0,
                    sigma_t_mb: 2.0,
                    s: -1.0 + 0.7 * f64::ln(t) + 0.4 * a.ln(),
                    flag: FLAG_OK.into(),
                });
            }
        }
        rows
    }

    #[test]
    fn report_recovers_plane_and_reference() {
        let rows = synthetic();
        let rep = FitReport::build(&rows, Projectile::Neutron, 20.0, 1000.0).unwrap();
        assert!((rep.b - 0.7).abs() < 1e-10 && (rep.c - 0.4).abs() < 1e-10);
        let r = rep.reference.as_ref().unwrap();
        assert_eq!(r.label, "nA 20-1000");
        assert!((r.delta_b - (0.7 - 0.7168)).abs() < 1e-10);
        assert!(rep.text().contains("nA 20-1000"));
        let json = serde_json::to_value(&rep).unwrap();
        assert_eq!(json["samples"], 12);
        assert!(json.get("fit").is_none());
    }

    #[test]
    fn range_filter_and_failed_rows() {
        let mut rows = synthetic();
        rows[0].flag = "error: x".into();
        assert_eq!(select_samples(&rows, Projectile::Neutron, 50.0, 500.0).len(), 6);
        assert_eq!(select_samples(&rows, Projectile::Neutron, 20.0, 1000.0).len(), 11);
        assert!(FitReport::build(&rows, Projectile::Proton, 20.0, 1000.0).is_err());
        assert!(reference_for(Projectile::Proton, 50.0, 500.0).is_some());
        assert!(reference_for(Projectile::Proton, 30.0, 500.0).is_none());
    }
}
