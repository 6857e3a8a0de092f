//! SI <-> natural-unit (ħ = c = 1, energies in eV) presentation.
//!
//! All computation happens in SI; these conversions exist only for input
//! parsing and output formatting.

use serde::Serialize;

use crate::constants::PhysicalConstants;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnitSystem {
    Si,
    NaturalEv,
}

/// Physical dimension of a value being converted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    /// kg <-> eV (m c²)
    Mass,
    /// J <-> eV
    Energy,
    /// kg·m/s <-> eV (p c)
    Momentum,
    /// 1/m <-> eV (ħ c k)
    Wavenumber,
    /// m <-> 1/eV
    Length,
    /// V/m <-> eV² (e E ħ c)
    ElectricField,
}

/// Factor f with natural = f · SI for the given dimension.
fn si_to_natural_factor(dim: Dimension, c: &PhysicalConstants) -> f64 {
    let e = c.elementary_charge();
    let hbar_c = c.hbar() * c.c_rel();
    match dim {
        Dimension::Mass => c.c_rel() * c.c_rel() / e,
        Dimension::Energy => 1.0 / e,
        Dimension::Momentum => c.c_rel() / e,
        Dimension::Wavenumber => hbar_c / e,
        Dimension::Length => e / hbar_c,
        Dimension::ElectricField => hbar_c / e,
    }
}

pub fn to_natural(value: f64, dim: Dimension, consts: &PhysicalConstants) -> f64 {
    value * si_to_natural_factor(dim, consts)
}

pub fn from_natural(value: f64, dim: Dimension, consts: &PhysicalConstants) -> f64 {
    value / si_to_natural_factor(dim, consts)
}

/// Converts `value` given in `from` units into `to` units.
pub fn convert(
    value: f64,
    dim: Dimension,
    from: UnitSystem,
    to: UnitSystem,
    consts: &PhysicalConstants,
) -> f64 {
    match (from, to) {
        (UnitSystem::Si, UnitSystem::NaturalEv) => to_natural(value, dim, consts),
        (UnitSystem::NaturalEv, UnitSystem::Si) => from_natural(value, dim, consts),
        _ => value,
    }
}

/// Wavenumber |k| in 1/m for a momentum ħ|k| given in GeV/c.
pub fn wavenumber_from_gev(p_gev: f64, consts: &PhysicalConstants) -> f64 {
    from_natural(p_gev * 1e9, Dimension::Wavenumber, consts)
}

/// Momentum ħ|k| in GeV/c for a wavenumber in 1/m.
pub fn gev_from_wavenumber(k: f64, consts: &PhysicalConstants) -> f64 {
    to_natural(k, Dimension::Wavenumber, consts) * 1e-9
}
