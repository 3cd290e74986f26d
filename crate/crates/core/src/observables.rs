//! Partial and angle-integrated cross sections, their normalized channel
//! probabilities, and the nuclear scattering amplitude (Coulomb amplitude
//! excluded).

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::solver::PartialWaveSet;
use crate::special::legendre_with_theta_derivative;

/// Cross sections in fm².
#[derive(Debug, Clone, PartialEq)]
pub struct CrossSections {
    pub elastic: Vec<f64>,
    pub reaction: Vec<f64>,
    pub total_elastic: f64,
    pub total_reaction: f64,
    pub total: f64,
}

/// fm² → mb.
pub const FM2_TO_MB: f64 = 10.0;

impl CrossSections {
    pub fn l_max(&self) -> u32 {
        (self.elastic.len() - 1) as u32
    }
}

/// σ_l^(e) = (π/k²)[(l+1)|1−η⁺|² + l|1−η⁻|²],
/// σ_l^(r) = (π/k²)[(l+1)(1−|η⁺|²) + l(1−|η⁻|²)].
pub fn partial_cross_sections(pw: &PartialWaveSet) -> Result<CrossSections> {
    if !(pw.k > 0.0) {
        return Err(Error::Domain { what: "wave number", value: pw.k });
    }
    let scale = PI / (pw.k * pw.k);
    let one = Complex64::new(1.0, 0.0);
    let mut elastic = Vec::with_capacity(pw.waves.len());
    let mut reaction = Vec::with_capacity(pw.waves.len());
    for w in &pw.waves {
        let (lp, lm) = (f64::from(w.l + 1), f64::from(w.l));
        let (ep, em) = (w.eta_plus(), w.eta_minus());
        let el = lp * (one - ep).norm_sqr() + lm * (one - em).norm_sqr();
        // Round-off can leave −1e-17 for a unitary channel.
        let re = (lp * (1.0 - ep.norm_sqr()) + lm * (1.0 - em.norm_sqr())).max(0.0);
        elastic.push(scale * el);
        reaction.push(scale * re);
    }
    let total_elastic = ordered_sum(&elastic);
    let total_reaction = ordered_sum(&reaction);
    Ok(CrossSections {
        elastic,
        reaction,
        total_elastic,
        total_reaction,
        total: total_elastic + total_reaction,
    })
}

/// Sum from the smallest terms (the high-l tail) upward.
fn ordered_sum(v: &[f64]) -> f64 {
    v.iter().rev().sum()
}

/// Normalized channel probabilities p_l^(e) = σ_l^(e)/σ^(t), p_l^(r) = σ_l^(r)/σ^(t).
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelProbabilities {
    pub elastic: Vec<f64>,
    pub reaction: Vec<f64>,
}

impl ChannelProbabilities {
    /// Elastic entries then reaction entries.
    pub fn entries(&self) -> impl Iterator<Item = f64> + '_ {
        self.elastic.iter().chain(&self.reaction).copied()
    }

    pub fn sum(&self) -> f64 {
        self.entries().sum()
    }

    pub fn len(&self) -> usize {
        self.elastic.len() + self.reaction.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn probabilities(xs: &CrossSections) -> Result<ChannelProbabilities> {
    // Normalize by the sum of the entries themselves so Σp = 1 to rounding.
    let total = ordered_sum(&xs.elastic) + ordered_sum(&xs.reaction);
    if !(total > 0.0) {
        return Err(Error::DegenerateDistribution);
    }
    Ok(ChannelProbabilities {
        elastic: xs.elastic.iter().map(|s| s / total).collect(),
        reaction: xs.reaction.iter().map(|s| s / total).collect(),
    })
}

/// Non-spin-flip and spin-flip nuclear amplitudes [fm] on a θ grid.
#[derive(Debug, Clone, PartialEq)]
pub struct AngularAmplitude {
    pub theta: Vec<f64>,
    pub non_flip: Vec<Complex64>,
    pub spin_flip: Vec<Complex64>,
}

/// Default θ grid: 1°..=180° in 1° steps.
pub fn default_theta_grid() -> Vec<f64> {
    (1..=180).map(|d| f64::from(d).to_radians()).collect()
}

/// f(θ) = (i/2k) Σ [(l+1)(1−η⁺) + l(1−η⁻)] e^{2iσ_l} P_l(cos θ),
/// g(θ) = −(1/2k) Σ (η⁺ − η⁻) e^{2iσ_l} dP_l/dθ.
///
/// θ = 0 is accepted for the forward (optical-theorem) amplitude.
pub fn amplitude(pw: &PartialWaveSet, theta: &[f64]) -> Result<AngularAmplitude> {
    if !(pw.k > 0.0) {
        return Err(Error::Domain { what: "wave number", value: pw.k });
    }
    if let Some(&bad) = theta.iter().find(|&&t| !(0.0..=PI).contains(&t)) {
        return Err(Error::Domain { what: "scattering angle", value: bad });
    }
    let i = Complex64::new(0.0, 1.0);
    let one = Complex64::new(1.0, 0.0);
    let inv2k = 0.5 / pw.k;
    let weights: Vec<(Complex64, Complex64)> = pw
        .waves
        .iter()
        .map(|w| {
            let phase = Complex64::from_polar(1.0, 2.0 * pw.coulomb_phases[w.l as usize]);
            let (ep, em) = (w.eta_plus(), w.eta_minus());
            let nf = (f64::from(w.l + 1) * (one - ep) + f64::from(w.l) * (one - em)) * phase;
            let sf = if w.l == 0 { Complex64::new(0.0, 0.0) } else { (ep - em) * phase };
            (nf, sf)
        })
        .collect();

    let mut non_flip = Vec::with_capacity(theta.len());
    let mut spin_flip = Vec::with_capacity(theta.len());
    for &t in theta {
        let (p, dp) = legendre_with_theta_derivative(t, pw.l_max);
        let (mut f, mut g) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
        for (l, (nf, sf)) in weights.iter().enumerate().rev() {
            f += nf * p[l];
            g += sf * dp[l];
        }
        non_flip.push(i * inv2k * f);
        spin_flip.push(-inv2k * g);
    }
    Ok(AngularAmplitude { theta: theta.to_vec(), non_flip, spin_flip })
}

/// Forward non-spin-flip amplitude f(0).
pub fn forward_amplitude(pw: &PartialWaveSet) -> Result<Complex64> {
    Ok(amplitude(pw, &[0.0])?.non_flip[0])
}
