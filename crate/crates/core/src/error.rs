use core::fmt;

use crate::solver::JSign;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the operation's domain.
    Domain { what: &'static str, value: f64 },
    /// Nucleon counts that do not describe a nucleus.
    InvalidNucleus { z: u32, n: u32 },
    /// The Numerov recursion diverged (step too coarse for the local wave number).
    Unstable { l: u32, j: JSign, r: f64 },
    /// Matching to the asymptotic solutions failed.
    SingularMatch { l: u32, j: JSign },
    /// A continued fraction did not converge.
    NoConvergence { eta: f64, rho: f64, l: u32 },
    /// The partial-wave sum did not converge below the angular-momentum cap.
    PartialWaveCutoff { l_cap: u32 },
    /// Zero total cross section; no probability distribution exists.
    DegenerateDistribution,
    /// Probabilities do not sum to one.
    NotNormalized { sum: f64 },
    /// Least-squares design matrix has rank below three.
    DegenerateDesign,
    /// Fewer samples than unknowns.
    TooFewSamples { got: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { what, value } => write!(f, "{what} out of domain: {value}"),
            Error::InvalidNucleus { z, n } => write!(f, "invalid nucleus Z={z} N={n}"),
            Error::Unstable { l, j, r } => write!(
                f,
                "numerov integration unstable for l={l} j={j} at r={r} fm; reduce the step"
            ),
            Error::SingularMatch { l, j } => write!(f, "singular matching determinant for l={l} j={j}"),
            Error::NoConvergence { eta, rho, l } => write!(
                f,
                "continued fraction did not converge (eta={eta}, rho={rho}, l={l})"
            ),
            Error::PartialWaveCutoff { l_cap } => {
                write!(f, "partial-wave sum not converged below l={l_cap}")
            }
            Error::DegenerateDistribution => write!(f, "degenerate distribution: total cross section is zero"),
            Error::NotNormalized { sum } => write!(f, "probabilities sum to {sum}, not 1"),
            Error::DegenerateDesign => write!(f, "degenerate design: need at least two distinct T and two distinct A"),
            Error::TooFewSamples { got } => write!(f, "need at least 3 samples, got {got}"),
        }
    }
}

impl core::error::Error for Error {}
