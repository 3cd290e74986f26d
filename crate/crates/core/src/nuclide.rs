//! Target nuclei, projectile species and nuclear masses.

use core::fmt;
use core::str::FromStr;

use num_traits::Float;

use crate::constants::{AMU, ELECTRON_MASS, NEUTRON_MASS, PROTON_MASS};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Projectile {
    Neutron,
    Proton,
}

impl Projectile {
    pub fn mass(self) -> f64 {
        match self {
            Projectile::Neutron => NEUTRON_MASS,
            Projectile::Proton => PROTON_MASS,
        }
    }

    pub fn charge(self) -> u32 {
        match self {
            Projectile::Neutron => 0,
            Projectile::Proton => 1,
        }
    }

    /// Sign of the isovector coupling: +1 for protons, -1 for neutrons.
    pub fn isospin_sign(self) -> f64 {
        match self {
            Projectile::Neutron => -1.0,
            Projectile::Proton => 1.0,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Projectile::Neutron => "n",
            Projectile::Proton => "p",
        }
    }
}

impl fmt::Display for Projectile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownProjectile;

impl fmt::Display for UnknownProjectile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unsupported projectile (expected n or p)")
    }
}

impl FromStr for Projectile {
    type Err = UnknownProjectile;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        match s {
            "n" | "neutron" => Ok(Projectile::Neutron),
            "p" | "proton" => Ok(Projectile::Proton),
            _ => Err(UnknownProjectile),
        }
    }
}

/// How a target rest mass is obtained from (Z, N).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MassModel {
    /// `A · u`.
    #[default]
    MassNumber,
    /// Atomic mass excess table for the tabulated nuclides, minus the
    /// electron masses; falls back to `A · u − Z · m_e` elsewhere.
    Tabulated,
}

// Atomic mass excesses [MeV] for the reference targets.
const MASS_EXCESS: &[(u32, u32, f64)] = &[
    (2, 2, 2.424_916),
    (6, 6, 0.0),
    (8, 8, -4.737_002),
    (20, 20, -34.846_3),
    (28, 30, -60.228_4),
    (40, 50, -88.767_3),
    (82, 126, -21.748_5),
];

/// Target nucleus.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NucleusSpec {
    pub z: u32,
    pub n: u32,
    /// Rest mass [MeV/c²].
    pub mass: f64,
}

impl NucleusSpec {
    pub fn new(z: u32, n: u32, model: MassModel) -> Result<Self> {
        if z == 0 {
            return Err(Error::InvalidNucleus { z, n });
        }
        let a = f64::from(z + n);
        let mass = match model {
            MassModel::MassNumber => a * AMU,
            MassModel::Tabulated => {
                let excess = MASS_EXCESS
                    .iter()
                    .find(|&&(tz, tn, _)| tz == z && tn == n)
                    .map_or(0.0, |&(_, _, d)| d);
                a * AMU + excess - f64::from(z) * ELECTRON_MASS
            }
        };
        Ok(NucleusSpec { z, n, mass })
    }

    /// Nucleus with an explicit rest mass.
    pub fn with_mass(z: u32, n: u32, mass: f64) -> Result<Self> {
        if z == 0 {
            return Err(Error::InvalidNucleus { z, n });
        }
        if !(mass > 0.0) || !mass.is_finite() {
            return Err(Error::Domain { what: "nuclear mass", value: mass });
        }
        Ok(NucleusSpec { z, n, mass })
    }

    pub fn a(&self) -> u32 {
        self.z + self.n
    }

    pub fn a_f64(&self) -> f64 {
        f64::from(self.a())
    }

    /// A^(1/3).
    pub fn a_third(&self) -> f64 {
        self.a_f64().cbrt()
    }

    /// Neutron excess (N − Z)/A.
    pub fn asymmetry(&self) -> f64 {
        (f64::from(self.n) - f64::from(self.z)) / self.a_f64()
    }

    /// Nucleus from an element symbol and a mass number, e.g. `("Ca", 40)`.
    pub fn from_symbol(symbol: &str, a: u32, model: MassModel) -> Result<Self> {
        let z = element_z(symbol).ok_or(Error::Domain { what: "element symbol", value: f64::NAN })?;
        if a < z {
            return Err(Error::InvalidNucleus { z, n: 0 });
        }
        Self::new(z, a - z, model)
    }

    pub fn symbol(&self) -> &'static str {
        element_symbol(self.z).unwrap_or("?")
    }
}

const ELEMENTS: [&str; 92] = [
    "H", "He", "Li", "Be", "B", "C", "N", "O", "F", "Ne", "Na", "Mg", "Al", "Si", "P", "S", "Cl",
    "Ar", "K", "Ca", "Sc", "Ti", "V", "Cr", "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As",
    "Se", "Br", "Kr", "Rb", "Sr", "Y", "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag", "Cd", "In",
    "Sn", "Sb", "Te", "I", "Xe", "Cs", "Ba", "La", "Ce", "Pr", "Nd", "Pm", "Sm", "Eu", "Gd", "Tb",
    "Dy", "Ho", "Er", "Tm", "Yb", "Lu", "Hf", "Ta", "W", "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl",
    "Pb", "Bi", "Po", "At", "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U",
];

pub fn element_z(symbol: &str) -> Option<u32> {
    ELEMENTS
        .iter()
        .position(|s| s.eq_ignore_ascii_case(symbol))
        .map(|i| i as u32 + 1)
}

pub fn element_symbol(z: u32) -> Option<&'static str> {
    ELEMENTS.get((z as usize).checked_sub(1)?).copied()
}

/// The seven reference targets: ⁴He, ¹²C, ¹⁶O, ⁴⁰Ca, ⁵⁸Ni, ⁹⁰Zr, ²⁰⁸Pb as (Z, N).
pub const REFERENCE_TARGETS: [(u32, u32); 7] =
    [(2, 2), (6, 6), (8, 8), (20, 20), (28, 30), (40, 50), (82, 126)];

/// Elements with an embedded isotope chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainElement {
    O,
    Ca,
    Ni,
    Zr,
    Sn,
    Pb,
}

impl ChainElement {
    pub const ALL: [ChainElement; 6] = [
        ChainElement::O,
        ChainElement::Ca,
        ChainElement::Ni,
        ChainElement::Zr,
        ChainElement::Sn,
        ChainElement::Pb,
    ];

    pub fn z(self) -> u32 {
        match self {
            ChainElement::O => 8,
            ChainElement::Ca => 20,
            ChainElement::Ni => 28,
            ChainElement::Zr => 40,
            ChainElement::Sn => 50,
            ChainElement::Pb => 82,
        }
    }

    /// Inclusive neutron-number range of the chain.
    pub fn neutron_range(self) -> (u32, u32) {
        match self {
            ChainElement::O => (6, 16),
            ChainElement::Ca => (16, 32),
            ChainElement::Ni => (26, 52),
            ChainElement::Zr => (46, 60),
            ChainElement::Sn => (48, 86),
            ChainElement::Pb => (114, 134),
        }
    }

    /// Neutron shell closures inside the chain.
    pub fn magic_neutrons(self) -> &'static [u32] {
        match self {
            ChainElement::O => &[8],
            ChainElement::Ca => &[20, 28],
            ChainElement::Ni => &[28, 50],
            ChainElement::Zr => &[50],
            ChainElement::Sn => &[50, 82],
            ChainElement::Pb => &[126],
        }
    }

    pub fn symbol(self) -> &'static str {
        element_symbol(self.z()).unwrap_or("?")
    }

    pub fn isotopes(self, model: MassModel) -> impl Iterator<Item = NucleusSpec> {
        let (lo, hi) = self.neutron_range();
        let z = self.z();
        (lo..=hi).filter_map(move |n| NucleusSpec::new(z, n, model).ok())
    }
}

impl FromStr for ChainElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ChainElement::ALL
            .into_iter()
            .find(|e| e.symbol().eq_ignore_ascii_case(s))
            .ok_or(Error::Domain { what: "isotope chain element", value: f64::NAN })
    }
}
