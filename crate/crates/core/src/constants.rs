//! Physical constants in MeV / fm units.

/// ħc [MeV fm].
pub const HBARC: f64 = 197.326_980_4;

/// Atomic mass unit [MeV/c²].
pub const AMU: f64 = 931.494_102_42;

/// Neutron rest mass [MeV/c²].
pub const NEUTRON_MASS: f64 = 939.565_420_52;

/// Proton rest mass [MeV/c²].
pub const PROTON_MASS: f64 = 938.272_088_16;

/// Electron rest mass [MeV/c²].
pub const ELECTRON_MASS: f64 = 0.510_998_95;

/// e²/(4πε₀) [MeV fm].
pub const E2: f64 = 1.439_964_548;

/// Squared pion Compton wavelength (ħ/m_π c)² [fm²] used by the Thomas spin-orbit term.
pub const PION_COMPTON_SQ: f64 = 2.0;

/// Grazing-radius constant r0 [fm].
pub const GRAZING_R0: f64 = 1.15;

/// Grazing-radius surface diffuseness [fm].
pub const GRAZING_DIFFUSENESS: f64 = 0.55;
