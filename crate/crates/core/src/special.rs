//! Coulomb phase shifts and Legendre polynomials.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

/// Coulomb phase shifts σ_l = arg Γ(l + 1 + iη) for l = 0..=l_max, unwrapped
/// (σ_{l+1} = σ_l + atan(η/(l+1))).
pub fn coulomb_phases(eta: f64, l_max: u32) -> Vec<f64> {
    let mut out = Vec::with_capacity(l_max as usize + 1);
    let mut sigma = if eta == 0.0 { 0.0 } else { ln_gamma(Complex64::new(1.0, eta)).im };
    out.push(sigma);
    for l in 1..=l_max {
        sigma += (eta / f64::from(l)).atan();
        out.push(sigma);
    }
    out
}

/// ln Γ(z) for Re z > 0 by upward shift and the Stirling series. The
/// imaginary part is the continuous branch along the shift path.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    const SHIFT: u32 = 12;
    let mut acc = Complex64::new(0.0, 0.0);
    let mut w = z;
    for _ in 0..SHIFT {
        acc += w.ln();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let series = inv
        * (1.0 / 12.0
            - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 * (1.0 / 1680.0 - inv2 / 1188.0))));
    (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + series - acc
}

/// P_l(x) and dP_l/dθ at x = cos θ for l = 0..=l_max.
pub fn legendre_with_theta_derivative(theta: f64, l_max: u32) -> (Vec<f64>, Vec<f64>) {
    let n = l_max as usize + 1;
    let (sin_t, x) = theta.sin_cos();
    let mut p = Vec::with_capacity(n);
    let mut dpdx = Vec::with_capacity(n);
    p.push(1.0);
    dpdx.push(0.0);
    if n > 1 {
        p.push(x);
        dpdx.push(1.0);
    }
    for l in 1..n - 1 {
        let lf = l as f64;
        let next = ((2.0 * lf + 1.0) * x * p[l] - lf * p[l - 1]) / (lf + 1.0);
        p.push(next);
        dpdx.push(dpdx[l - 1] + (2.0 * lf + 1.0) * p[l]);
    }
    let dtheta = dpdx.into_iter().map(|d| -sin_t * d).collect();
    (p, dtheta)
}
