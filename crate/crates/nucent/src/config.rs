//! Scan and potential configuration, read from TOML.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use nucent_core::nuclide::{element_z, REFERENCE_TARGETS};
use nucent_core::potential::{global_params, OpticalPotentialParams};
use nucent_core::{MassModel, NucleusSpec, Projectile, WoodsSaxonTerm};
use serde::{Deserialize, Serialize};

use crate::error::{AppError, Result};

/// Target written as `40Ca`, `Ca40`, `Ca-40` or `ca 40`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Target {
    pub z: u32,
    pub n: u32,
}

impl Target {
    pub fn a(&self) -> u32 {
        self.z + self.n
    }

    pub fn nucleus(&self, model: MassModel) -> Result<NucleusSpec> {
        Ok(NucleusSpec::new(self.z, self.n, model)?)
    }

    pub fn reference() -> Vec<Target> {
        REFERENCE_TARGETS.iter().map(|&(z, n)| Target { z, n }).collect()
    }
}

impl FromStr for Target {
    type Err = AppError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || AppError::Usage(format!("cannot parse target '{s}' (expected e.g. 40Ca or Ca40)"));
        let clean: String = s.chars().filter(|c| !matches!(c, '-' | ' ' | '_')).collect();
        let digits: String = clean.chars().filter(char::is_ascii_digit).collect();
        let letters: String = clean.chars().filter(char::is_ascii_alphabetic).collect();
        if digits.is_empty() || letters.is_empty() || digits.len() + letters.len() != clean.len() {
            return Err(bad());
        }
        let contiguous = clean.starts_with(&digits) || clean.ends_with(&digits);
        let a: u32 = digits.parse().map_err(|_| bad())?;
        let z = element_z(&letters).ok_or_else(bad)?;
        if !contiguous || a < z {
            return Err(bad());
        }
        Ok(Target { z, n: a - z })
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = nucent_core::nuclide::element_symbol(self.z).unwrap_or("?");
        write!(f, "{}{}", self.a(), sym)
    }
}

impl Serialize for Target {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Target {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    #[default]
    Log,
    Linear,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnergyGrid {
    pub min: f64,
    pub max: f64,
    pub count: usize,
    #[serde(default)]
    pub spacing: Spacing,
}

impl Default for EnergyGrid {
    fn default() -> Self {
        EnergyGrid { min: 20.0, max: 1000.0, count: 50, spacing: Spacing::Log }
    }
}

impl EnergyGrid {
    pub fn validate(&self) -> Result<()> {
        if !(self.min > 0.0 && self.min < self.max && self.max.is_finite()) {
            return Err(AppError::Usage(format!("energy grid needs 0 < min < max, got [{}, {}]", self.min, self.max)));
        }
        if self.count < 2 {
            return Err(AppError::Usage(format!("energy grid needs count >= 2, got {}", self.count)));
        }
        Ok(())
    }

    /// Grid energies [MeV], rounded to 12 significant digits so they are
    /// exactly what the CSV stores.
    pub fn energies(&self) -> Result<Vec<f64>> {
        self.validate()?;
        let last = (self.count - 1) as f64;
        Ok((0..self.count)
            .map(|i| {
                let x = i as f64 / last;
                let t = match self.spacing {
                    Spacing::Log => self.min * (self.max / self.min).powf(x),
                    Spacing::Linear => self.min + (self.max - self.min) * x,
                };
                if i == 0 {
                    self.min
                } else if i + 1 == self.count {
                    self.max
                } else {
                    crate::csvio::round_sig(t)
                }
            })
            .collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MassModelName {
    #[default]
    MassNumber,
    Tabulated,
}

impl From<MassModelName> for MassModel {
    fn from(m: MassModelName) -> Self {
        match m {
            MassModelName::MassNumber => MassModel::MassNumber,
            MassModelName::Tabulated => MassModel::Tabulated,
        }
    }
}

fn default_projectiles() -> Vec<String> {
    vec!["n".into(), "p".into()]
}

fn default_targets() -> Vec<Target> {
    Target::reference()
}

fn default_true() -> bool {
    true
}

/// Contents of a scan configuration file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanConfigFile {
    #[serde(default = "default_projectiles")]
    pub projectiles: Vec<String>,
    #[serde(default = "default_targets")]
    pub targets: Vec<Target>,
    #[serde(default)]
    pub energy: EnergyGrid,
    /// Potential file; the built-in global potential when absent.
    #[serde(default)]
    pub potential: Option<PathBuf>,
    #[serde(default = "default_true")]
    pub coulomb: bool,
    #[serde(default)]
    pub mass_model: MassModelName,
    #[serde(default)]
    pub output: Option<PathBuf>,
}

impl Default for ScanConfigFile {
    fn default() -> Self {
        ScanConfigFile {
            projectiles: default_projectiles(),
            targets: default_targets(),
            energy: EnergyGrid::default(),
            potential: None,
            coulomb: true,
            mass_model: MassModelName::MassNumber,
            output: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum PotentialSource {
    Global,
    Fixed(PotentialConfig),
}

impl PotentialSource {
    pub fn id(&self) -> String {
        match self {
            PotentialSource::Global => "global-ws".into(),
            PotentialSource::Fixed(p) => p.id.clone(),
        }
    }

    pub fn params(&self, nucleus: &NucleusSpec, t: f64, projectile: Projectile, coulomb: bool) -> Result<OpticalPotentialParams> {
        let mut p = match self {
            PotentialSource::Global => global_params(nucleus, t, projectile)?,
            PotentialSource::Fixed(cfg) => cfg.params(t, projectile)?,
        };
        p.coulomb = coulomb;
        Ok(p)
    }
}

/// Validated scan description.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanConfig {
    pub projectiles: Vec<Projectile>,
    pub targets: Vec<Target>,
    pub energy: EnergyGrid,
    pub potential: PotentialSource,
    pub coulomb: bool,
    pub mass_model: MassModel,
    pub output: Option<PathBuf>,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig::from_file(ScanConfigFile::default(), Path::new(".")).expect("default scan config is valid")
    }
}

pub fn parse_projectile(s: &str) -> Result<Projectile> {
    s.parse().map_err(|e| AppError::Usage(format!("'{s}': {e}")))
}

impl ScanConfig {
    /// `base` resolves relative potential paths.
    pub fn from_file(file: ScanConfigFile, base: &Path) -> Result<Self> {
        let mut projectiles = file.projectiles.iter().map(|s| parse_projectile(s)).collect::<Result<Vec<_>>>()?;
        projectiles.sort_by_key(|p| p.tag());
        projectiles.dedup();
        if projectiles.is_empty() {
            return Err(AppError::Usage("scan needs at least one projectile".into()));
        }
        if file.targets.is_empty() {
            return Err(AppError::Usage("scan needs at least one target".into()));
        }
        file.energy.validate()?;
        let potential = match file.potential {
            None => PotentialSource::Global,
            Some(p) => PotentialSource::Fixed(PotentialConfig::load(&base.join(p))?),
        };
        Ok(ScanConfig {
            projectiles,
            targets: file.targets,
            energy: file.energy,
            potential,
            coulomb: file.coulomb,
            mass_model: file.mass_model.into(),
            output: file.output.map(|o| base.join(o)),
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| AppError::io(path, e))?;
        let file: ScanConfigFile = toml::from_str(&text).map_err(|e| AppError::Config { path: path.into(), source: e })?;
        Self::from_file(file, path.parent().unwrap_or(Path::new(".")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermConfig {
    /// Depth [MeV], positive for attraction/absorption.
    pub depth: f64,
    /// Radius constant r [fm], R = r A^(1/3).
    pub radius: f64,
    /// Diffuseness [fm].
    pub diffuseness: f64,
}

impl TermConfig {
    fn term(&self) -> Result<WoodsSaxonTerm> {
        Ok(WoodsSaxonTerm::new(self.depth, self.radius, self.diffuseness)?)
    }
}

fn default_coulomb_radius() -> f64 {
    1.25
}

/// Energy-independent Woods-Saxon potential from a file; missing terms are zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PotentialConfig {
    #[serde(default = "PotentialConfig::default_id")]
    pub id: String,
    #[serde(default = "default_coulomb_radius")]
    pub coulomb_radius: f64,
    pub real_volume: Option<TermConfig>,
    pub imag_volume: Option<TermConfig>,
    pub imag_surface: Option<TermConfig>,
    pub real_spin_orbit: Option<TermConfig>,
    pub imag_spin_orbit: Option<TermConfig>,
}

impl PotentialConfig {
    fn default_id() -> String {
        "file".into()
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| AppError::io(path, e))?;
        let cfg: PotentialConfig = toml::from_str(&text).map_err(|e| AppError::Config { path: path.into(), source: e })?;
        cfg.params(100.0, Projectile::Neutron)?;
        Ok(cfg)
    }

    pub fn params(&self, t: f64, projectile: Projectile) -> Result<OpticalPotentialParams> {
        let term = |c: &Option<TermConfig>| c.as_ref().map_or(Ok(WoodsSaxonTerm::zero()), TermConfig::term);
        if !(self.coulomb_radius > 0.0) {
            return Err(AppError::Usage(format!("coulomb_radius must be > 0, got {}", self.coulomb_radius)));
        }
        Ok(OpticalPotentialParams {
            real_volume: term(&self.real_volume)?,
            imag_volume: term(&self.imag_volume)?,
            imag_surface: term(&self.imag_surface)?,
            real_spin_orbit: term(&self.real_spin_orbit)?,
            imag_spin_orbit: term(&self.imag_spin_orbit)?,
            coulomb_radius_const: self.coulomb_radius,
            energy: t,
            projectile,
            coulomb: true,
        })
    }
}
