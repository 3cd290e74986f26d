//! Shannon information entropy of the partial-wave channel probabilities.

use num_traits::Float;

use crate::error::{Error, Result};
use crate::nuclide::{NucleusSpec, Projectile};
use crate::observables::{ChannelProbabilities, CrossSections};

/// Entries below this are exact zeros (their contribution is < 1e-28).
pub const ZERO_PROBABILITY: f64 = 1e-30;

/// Allowed deviation of Σp from one.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-10;

/// S = −Σ p ln p in nats with 0 ln 0 = 0.
pub fn shannon<I>(p: I) -> Result<f64>
where
    I: IntoIterator<Item = f64>,
{
    let mut sum = 0.0;
    let mut s = 0.0;
    for x in p {
        if !(x >= 0.0) || !x.is_finite() {
            return Err(Error::Domain { what: "probability", value: x });
        }
        sum += x;
        if x >= ZERO_PROBABILITY {
            s -= x * x.ln();
        }
    }
    if (sum - 1.0).abs() > NORMALIZATION_TOLERANCE {
        return Err(Error::NotNormalized { sum });
    }
    Ok(s.max(0.0))
}

/// Entropy of the concatenated elastic and reaction channel probabilities.
pub fn channel_entropy(probs: &ChannelProbabilities) -> Result<f64> {
    shannon(probs.entries())
}

/// One scan point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyRecord {
    pub projectile: Projectile,
    pub nucleus: NucleusSpec,
    /// Lab kinetic energy [MeV].
    pub t: f64,
    pub k: f64,
    /// Entropy [nats].
    pub s: f64,
    /// Cross sections [fm²].
    pub sigma_e: f64,
    pub sigma_r: f64,
    pub sigma_t: f64,
    pub l_max_used: u32,
}

impl EntropyRecord {
    pub fn new(
        projectile: Projectile,
        nucleus: NucleusSpec,
        t: f64,
        k: f64,
        xs: &CrossSections,
        probs: &ChannelProbabilities,
    ) -> Result<Self> {
        Ok(EntropyRecord {
            projectile,
            nucleus,
            t,
            k,
            s: channel_entropy(probs)?,
            sigma_e: xs.total_elastic,
            sigma_r: xs.total_reaction,
            sigma_t: xs.total,
            l_max_used: xs.l_max(),
        })
    }

    /// ln(2(l_max + 1)), the largest entropy the channel set admits.
    pub fn entropy_bound(&self) -> f64 {
        (2.0 * f64::from(self.l_max_used + 1)).ln()
    }
}
