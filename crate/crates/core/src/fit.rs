//! Least-squares plane S = a + b ln T + c ln A and residual diagnostics.

use alloc::vec::Vec;

use num_traits::Float;

use crate::entropy::EntropyRecord;
use crate::error::{Error, Result};
use crate::nuclide::Projectile;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleTag {
    pub projectile: Projectile,
    pub z: u32,
    pub n: u32,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitSample {
    /// ln T, T in MeV.
    pub ln_t: f64,
    /// ln A.
    pub ln_a: f64,
    /// Entropy [nats].
    pub s: f64,
    pub tag: Option<SampleTag>,
}

impl FitSample {
    pub fn new(t: f64, a: f64, s: f64) -> Self {
        FitSample { ln_t: t.ln(), ln_a: a.ln(), s, tag: None }
    }
}

impl From<&EntropyRecord> for FitSample {
    fn from(r: &EntropyRecord) -> Self {
        FitSample {
            ln_t: r.t.ln(),
            ln_a: r.nucleus.a_f64().ln(),
            s: r.s,
            tag: Some(SampleTag { projectile: r.projectile, z: r.nucleus.z, n: r.nucleus.n }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitResult {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub rms_residual: f64,
    pub max_residual: f64,
    pub r_squared: f64,
    pub samples: usize,
}

impl FitResult {
    pub fn predict(&self, ln_t: f64, ln_a: f64) -> f64 {
        self.a + self.b * ln_t + self.c * ln_a
    }
}

/// Relative determinant threshold below which the design is rank deficient.
const RANK_TOLERANCE: f64 = 1e-12;

/// Ordinary least squares on centred data. Samples are put in a canonical
/// order first, so the result does not depend on the input order.
pub fn fit_plane(samples: &[FitSample]) -> Result<FitResult> {
    if samples.len() < 3 {
        return Err(Error::TooFewSamples { got: samples.len() });
    }
    if let Some(bad) = samples.iter().find(|s| !(s.ln_t.is_finite() && s.ln_a.is_finite() && s.s.is_finite())) {
        return Err(Error::Domain { what: "fit sample", value: bad.s });
    }
    let mut xs: Vec<(f64, f64, f64)> = samples.iter().map(|s| (s.ln_t, s.ln_a, s.s)).collect();
    xs.sort_by(|p, q| {
        p.0.total_cmp(&q.0).then(p.1.total_cmp(&q.1)).then(p.2.total_cmp(&q.2))
    });

    let n = xs.len() as f64;
    let (mut m1, mut m2, mut my) = (0.0, 0.0, 0.0);
    for &(x1, x2, y) in &xs {
        m1 += x1;
        m2 += x2;
        my += y;
    }
    m1 /= n;
    m2 /= n;
    my /= n;

    let (mut s11, mut s22, mut s12, mut s1y, mut s2y, mut syy) = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
    for &(x1, x2, y) in &xs {
        let (d1, d2, dy) = (x1 - m1, x2 - m2, y - my);
        s11 += d1 * d1;
        s22 += d2 * d2;
        s12 += d1 * d2;
        s1y += d1 * dy;
        s2y += d2 * dy;
        syy += dy * dy;
    }
    let det = s11 * s22 - s12 * s12;
    if !(s11 > 0.0 && s22 > 0.0) || det <= RANK_TOLERANCE * s11 * s22 {
        return Err(Error::DegenerateDesign);
    }
    let b = (s1y * s22 - s2y * s12) / det;
    let c = (s2y * s11 - s1y * s12) / det;
    let a = my - b * m1 - c * m2;

    let (mut ss_res, mut max_res) = (0.0, 0.0f64);
    for &(x1, x2, y) in &xs {
        let r = y - (a + b * x1 + c * x2);
        ss_res += r * r;
        max_res = max_res.max(r.abs());
    }
    let r_squared = if syy > 0.0 { (1.0 - ss_res / syy).clamp(0.0, 1.0) } else { 1.0 };
    Ok(FitResult {
        a,
        b,
        c,
        rms_residual: (ss_res / n).sqrt(),
        max_residual: max_res,
        r_squared,
        samples: xs.len(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualRow {
    /// Position in the input slice.
    pub index: usize,
    pub tag: Option<SampleTag>,
    pub s: f64,
    pub fitted: f64,
    /// S − Ŝ.
    pub residual: f64,
    /// 100 · residual / S.
    pub percent: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport {
    pub rows: Vec<ResidualRow>,
    /// Median, 90th percentile and maximum of |residual|/S in percent.
    pub abs_percent_median: f64,
    pub abs_percent_p90: f64,
    pub abs_percent_max: f64,
}

impl ResidualReport {
    /// Fraction of samples with |residual|/S below `percent`.
    pub fn fraction_within(&self, percent: f64) -> f64 {
        if self.rows.is_empty() {
            return 0.0;
        }
        let k = self.rows.iter().filter(|r| r.percent.abs() < percent).count();
        k as f64 / self.rows.len() as f64
    }

    /// Row with the largest |residual|.
    pub fn worst(&self) -> Option<&ResidualRow> {
        self.rows.iter().max_by(|p, q| p.residual.abs().total_cmp(&q.residual.abs()))
    }
}

/// Nearest-rank quantile of sorted data.
fn quantile(sorted: &[f64], q: f64) -> f64 {
    if sorted.is_empty() {
        return 0.0;
    }
    let rank = (q * sorted.len() as f64).ceil() as usize;
    sorted[rank.clamp(1, sorted.len()) - 1]
}

pub fn residual_report(result: &FitResult, samples: &[FitSample]) -> ResidualReport {
    let rows: Vec<ResidualRow> = samples
        .iter()
        .enumerate()
        .map(|(index, smp)| {
            let fitted = result.predict(smp.ln_t, smp.ln_a);
            let residual = smp.s - fitted;
            let percent = if smp.s != 0.0 { 100.0 * residual / smp.s } else { f64::INFINITY };
            ResidualRow { index, tag: smp.tag, s: smp.s, fitted, residual, percent }
        })
        .collect();
    let mut abs: Vec<f64> = rows.iter().map(|r| r.percent.abs()).collect();
    abs.sort_by(f64::total_cmp);
    ResidualReport {
        abs_percent_median: quantile(&abs, 0.5),
        abs_percent_p90: quantile(&abs, 0.9),
        abs_percent_max: abs.last().copied().unwrap_or(0.0),
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn plane(a: f64, b: f64, c: f64) -> Vec<FitSample> {
        let mut v = Vec::new();
        for &t in &[20.0, 50.0, 120.0, 400.0, 1000.0] {
            for &m in &[4.0, 16.0, 40.0, 208.0] {
                let (x1, x2): (f64, f64) = (f64::ln(t), f64::ln(m));
                v.push(FitSample { ln_t: x1, ln_a: x2, s: a + b * x1 + c * x2, tag: None });
            }
        }
        v
    }

    #[test]
    fn recovers_exact_plane() {
        let r = fit_plane(&plane(1.0, 0.5, 1.0 / 3.0)).unwrap();
        assert!((r.a - 1.0).abs() < 1e-10);
        assert!((r.b - 0.5).abs() < 1e-10);
        assert!((r.c - 1.0 / 3.0).abs() < 1e-10);
        assert!(r.rms_residual < 1e-12 && r.r_squared > 1.0 - 1e-12);
        let rep = residual_report(&r, &plane(1.0, 0.5, 1.0 / 3.0));
        assert!(rep.rows.iter().all(|row| row.residual.abs() < 1e-12));
    }

    #[test]
    fn single_target_is_degenerate() {
        let v: Vec<_> = [20.0, 40.0, 80.0, 160.0].iter().map(|&t| FitSample::new(t, 40.0, 3.0)).collect();
        assert_eq!(fit_plane(&v), Err(Error::DegenerateDesign));
        assert_eq!(fit_plane(&v[..2]), Err(Error::TooFewSamples { got: 2 }));
    }

    #[test]
    fn collinear_design_is_degenerate() {
        // A proportional to T: ln A = ln T + const
        let v: Vec<_> = [2.0, 4.0, 8.0, 16.0].iter().map(|&t| FitSample::new(t, 3.0 * t, t)).collect();
        assert_eq!(fit_plane(&v), Err(Error::DegenerateDesign));
    }

    #[test]
    fn outlier_is_the_worst_row() {
        let mut v = plane(-1.1, 0.7, 0.38);
        v[7].s += 1.0;
        let r = fit_plane(&v).unwrap();
        let rep = residual_report(&r, &v);
        assert_eq!(rep.worst().unwrap().index, 7);
        assert!((r.max_residual - rep.worst().unwrap().residual.abs()).abs() < 1e-12);
        assert!(r.rms_residual <= r.max_residual);
    }

    #[test]
    fn quantiles_of_report() {
        let sorted = vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0];
        assert_eq!(quantile(&sorted, 0.5), 5.0);
        assert_eq!(quantile(&sorted, 0.9), 9.0);
        assert_eq!(quantile(&[], 0.9), 0.0);
    }
}
