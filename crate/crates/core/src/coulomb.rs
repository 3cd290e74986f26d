//! Regular and irregular Coulomb wave functions F_l, G_l and their
//! ρ-derivatives for l = 0..=l_max.
//!
//! Steed's method: the continued fraction for F'/F (CF1) at an angular
//! momentum above the turning point fixes the sign and the ratio, F is
//! recurred downward to l = 0, the continued fraction for H'/H with
//! H = G + iF (CF2) at l = 0 gives G_0 through the Wronskian, and G is
//! recurred upward. With η = 0 the functions reduce to Riccati-Bessel
//! functions F_l = ρ j_l(ρ), G_l = −ρ y_l(ρ).

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};

const EPS: f64 = 4.0 * f64::EPSILON;
const TINY: f64 = 1e-300;
const MAX_ITER: usize = 200_000;
const RESCALE: f64 = 1e200;

#[derive(Debug, Clone, PartialEq)]
pub struct CoulombFunctions {
    /// Sommerfeld parameter η.
    pub eta: f64,
    pub rho: f64,
    pub f: Vec<f64>,
    pub fp: Vec<f64>,
    pub g: Vec<f64>,
    pub gp: Vec<f64>,
}

impl CoulombFunctions {
    pub fn l_max(&self) -> u32 {
        (self.f.len() - 1) as u32
    }

    /// Outgoing H⁺_l = G_l + iF_l and its derivative.
    pub fn h_plus(&self, l: u32) -> (Complex64, Complex64) {
        let l = l as usize;
        (Complex64::new(self.g[l], self.f[l]), Complex64::new(self.gp[l], self.fp[l]))
    }

    /// Incoming H⁻_l = G_l − iF_l and its derivative.
    pub fn h_minus(&self, l: u32) -> (Complex64, Complex64) {
        let l = l as usize;
        (Complex64::new(self.g[l], -self.f[l]), Complex64::new(self.gp[l], -self.fp[l]))
    }

    /// F'G − FG' for each l; identically one.
    pub fn wronskian(&self, l: u32) -> f64 {
        let l = l as usize;
        self.fp[l] * self.g[l] - self.f[l] * self.gp[l]
    }
}

#[inline]
fn s_coef(l: f64, eta: f64, rho: f64) -> f64 {
    l / rho + eta / l
}

#[inline]
fn r_coef(l: f64, eta: f64) -> f64 {
    (1.0 + (eta / l).powi(2)).sqrt()
}

/// F'_L/F_L from the continued fraction
/// f_L = S_{L+1} − R²_{L+1}/(T_{L+1} − R²_{L+2}/(T_{L+2} − …)).
fn cf1(eta: f64, rho: f64, l: u32) -> Result<f64> {
    let l0 = f64::from(l);
    let mut f = s_coef(l0 + 1.0, eta, rho);
    if f == 0.0 {
        f = TINY;
    }
    let mut c = f;
    let mut d = 0.0;
    for n in 1..=MAX_ITER {
        let m = l0 + n as f64;
        let a = -(1.0 + (eta / m).powi(2));
        let b = s_coef(m, eta, rho) + s_coef(m + 1.0, eta, rho);
        d = b + a * d;
        if d == 0.0 {
            d = TINY;
        }
        c = b + a / c;
        if c == 0.0 {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < EPS {
            return Ok(f);
        }
    }
    Err(Error::NoConvergence { eta, rho, l })
}

/// H'_0/H_0 = p + iq for H = G + iF.
fn cf2(eta: f64, rho: f64) -> Result<Complex64> {
    let i = Complex64::new(0.0, 1.0);
    let lead = i * (1.0 - eta / rho);
    if eta == 0.0 {
        return Ok(lead);
    }
    let a0 = Complex64::new(1.0, eta);
    let b0 = Complex64::new(0.0, eta);
    let tiny = Complex64::new(1e-150, 0.0);
    let mut f = tiny;
    let mut c = f;
    let mut d = Complex64::new(0.0, 0.0);
    for n in 1..=MAX_ITER {
        let k = (n - 1) as f64;
        let an = (a0 + k) * (b0 + k);
        let bn = Complex64::new(2.0 * (rho - eta), 2.0 * n as f64);
        d = bn + an * d;
        if d.norm_sqr() == 0.0 {
            d = tiny;
        }
        c = bn + an / c;
        if c.norm_sqr() == 0.0 {
            c = tiny;
        }
        d = d.inv();
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).norm() < EPS {
            return Ok(lead + i / rho * f);
        }
    }
    Err(Error::NoConvergence { eta, rho, l: 0 })
}

/// Coulomb functions F, F', G, G' at (η, ρ) for l = 0..=l_max.
pub fn coulomb_functions(eta: f64, l_max: u32, rho: f64) -> Result<CoulombFunctions> {
    if !(rho > 0.0) || !rho.is_finite() {
        return Err(Error::Domain { what: "rho", value: rho });
    }
    if !eta.is_finite() {
        return Err(Error::Domain { what: "Sommerfeld parameter", value: eta });
    }

    // Start the downward recursion beyond the turning point so F_L > 0.
    let tp2 = rho * rho - 2.0 * eta * rho;
    let l_tp = if tp2 > 0.0 { tp2.sqrt().ceil() as u32 + 2 } else { 1 };
    let l_top = l_max.max(l_tp);

    let n = l_top as usize + 1;
    let mut f = alloc::vec![0.0; n];
    let mut fp = alloc::vec![0.0; n];
    f[n - 1] = 1.0;
    fp[n - 1] = cf1(eta, rho, l_top)?;
    for l in (1..=l_top).rev() {
        let lf = f64::from(l);
        let (s, r) = (s_coef(lf, eta, rho), r_coef(lf, eta));
        let (fl, fpl) = (f[l as usize], fp[l as usize]);
        let fm = (s * fl + fpl) / r;
        f[l as usize - 1] = fm;
        fp[l as usize - 1] = s * fm - r * fl;
        if fm.abs() > RESCALE {
            for v in f.iter_mut().chain(fp.iter_mut()).skip(0) {
                *v /= RESCALE;
            }
        }
    }

    let pq = cf2(eta, rho)?;
    let (p, q) = (pq.re, pq.im);
    if q == 0.0 {
        return Err(Error::NoConvergence { eta, rho, l: 0 });
    }
    let (f0, fp0) = (f[0], fp[0]);
    let gam = (fp0 - p * f0) / q;
    let w = 1.0 / (gam * (fp0 - p * f0) + q * f0 * f0).sqrt();

    let m = l_max as usize + 1;
    f.truncate(m);
    fp.truncate(m);
    for v in f.iter_mut().chain(fp.iter_mut()) {
        *v *= w;
    }

    let mut g = Vec::with_capacity(m);
    let mut gp = Vec::with_capacity(m);
    let g0 = w * gam;
    g.push(g0);
    gp.push(p * g0 - q * f[0]);
    for l in 0..l_max as usize {
        let lf = (l + 1) as f64;
        let (s, r) = (s_coef(lf, eta, rho), r_coef(lf, eta));
        let gn = (s * g[l] - gp[l]) / r;
        g.push(gn);
        gp.push(r * g[l] - s * gn);
    }

    Ok(CoulombFunctions { eta, rho, f, fp, g, gp })
}
