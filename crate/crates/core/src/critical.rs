//! Strong-field estimates: limiting field, equivalent intensity and the
//! focal-volume cell count.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::constants::{check_mass, PhysicalConstants};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FieldVariant {
    /// Oscillator displacement reaching the Compton length: 4m²c³/(eħ).
    Model,
    /// Potential rising by mc² over one Compton length: 2m²c³/(eħ).
    SauterBohr,
}

impl FieldVariant {
    pub fn factor(self) -> f64 {
        match self {
            FieldVariant::Model => 4.0,
            FieldVariant::SauterBohr => 2.0,
        }
    }
}

impl fmt::Display for FieldVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldVariant::Model => "model",
            FieldVariant::SauterBohr => "sauter-bohr",
        })
    }
}

impl FromStr for FieldVariant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "model" => Ok(FieldVariant::Model),
            "sauter-bohr" => Ok(FieldVariant::SauterBohr),
            other => Err(format!("unknown variant '{other}' (model, sauter-bohr)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CriticalFieldResult {
    /// V/m
    pub field: f64,
    pub variant: FieldVariant,
    /// W/m²
    pub intensity_equiv: f64,
    /// m²c³/(eħ), printed for reference only.
    pub conventional_field: f64,
}

/// factor · m²c³/(eħ) for the chosen variant.
pub fn limiting_field(
    mass: f64,
    variant: FieldVariant,
    consts: &PhysicalConstants,
) -> Result<CriticalFieldResult> {
    check_mass(mass)?;
    let c = consts.c_rel();
    let conventional = mass * mass * c * c * c / (consts.elementary_charge() * consts.hbar());
    let field = variant.factor() * conventional;
    Ok(CriticalFieldResult {
        field,
        variant,
        intensity_equiv: intensity_for_field(field, consts)?,
        conventional_field: conventional,
    })
}

/// Plane-wave intensity ½ ε₀ c E².
pub fn intensity_for_field(field: f64, consts: &PhysicalConstants) -> Result<f64> {
    if !(field.is_finite() && field >= 0.0) {
        return Err(Error::Domain(format!(
            "field magnitude must be nonnegative, got {field}"
        )));
    }
    Ok(0.5 * consts.epsilon0_exp() * consts.c_rel() * field * field)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FocalVolumeEstimate {
    /// m³
    pub focal_volume: f64,
    /// m³
    pub cell_volume: f64,
    pub n_cells: f64,
    pub per_cell_probability: f64,
    pub total_probability: f64,
}

/// Splits a focal volume into Compton cells (ħ/mc)³ and combines independent
/// per-cell pair-creation probabilities: P = 1 − (1 − p)^n.
pub fn focal_volume_relaxation(
    focal_volume: f64,
    per_cell_probability: f64,
    mass: f64,
    consts: &PhysicalConstants,
) -> Result<FocalVolumeEstimate> {
    if !(focal_volume.is_finite() && focal_volume > 0.0) {
        return Err(Error::Domain(format!(
            "focal volume must be positive, got {focal_volume}"
        )));
    }
    if !(0.0..=1.0).contains(&per_cell_probability) {
        return Err(Error::Domain(format!(
            "per-cell probability must lie in [0, 1], got {per_cell_probability}"
        )));
    }
    let compton = consts.compton_length(mass)?;
    let cell_volume = compton * compton * compton;
    let n_cells = focal_volume / cell_volume;
    Ok(FocalVolumeEstimate {
        focal_volume,
        cell_volume,
        n_cells,
        per_cell_probability,
        total_probability: combined_probability(per_cell_probability, n_cells),
    })
}

/// 1 − (1 − p)^n via −expm1(n·ln(1 − p)); exact for tiny p and huge n.
pub fn combined_probability(p: f64, n: f64) -> f64 {
    if p == 0.0 || n == 0.0 {
        return 0.0;
    }
    if p == 1.0 {
        return 1.0;
    }
    let total = -(n * (-p).ln_1p()).exp_m1();
    total.clamp(0.0, 1.0)
}
