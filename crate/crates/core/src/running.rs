//! One-loop running of the QED coupling and the Landau pole.
//!
//! The kernel is the Feynman-parameter integral
//!
//! ```text
//! I(z) = ∫₀¹ x(1−x) ln(1 + x(1−x) z) dx,   z = ħ²k² / (m² c_rel²)
//! ```
//!
//! and each charged species shifts the inverse coupling by
//! `prefactor · deg · (q/e)² · I(z)`. Two prefactors are supported:
//!
//! * [`RunningMode::Consistent`]: 2/π. Since I(z) → (ln z − 5/3)/6 for large z,
//!   this reproduces the leading-log Landau condition
//!   α⁻¹(0) = (1/3π) Σ deg (q/e)² ln(Λ²/m²c²).
//! * [`RunningMode::PaperLiteral`]: 1/(3π) in front of the integral, as the
//!   running formula is commonly printed. Its large-z limit is 1/6 of the
//!   leading-log condition above.
//!
//! Landau-pole arithmetic stays in log space throughout: ln(Λ/mc) is around
//! 650 for a single species and e^650 is not representable.

use std::f64::consts::{LN_10, PI};

use serde::Serialize;

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};
use crate::particles::ParticleSet;
use crate::quadrature::{integrate_with_breakpoints, QuadOptions};
use crate::roots::{bracket_upward, brent, RootOptions};

/// Lower limit of the real-valued region: for z ≤ −4 the logarithm's
/// argument reaches zero at x = 1/2.
pub const PAIR_THRESHOLD_Z: f64 = -4.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum RunningMode {
    #[default]
    Consistent,
    PaperLiteral,
}

impl RunningMode {
    /// Factor multiplying deg·(q/e)²·I(z).
    pub fn prefactor(self) -> f64 {
        match self {
            RunningMode::Consistent => 2.0 / PI,
            RunningMode::PaperLiteral => 1.0 / (3.0 * PI),
        }
    }

    /// Factor multiplying deg·(q/e)²·ln(Λ²/m²c²) in the leading-log limit.
    pub fn leading_log_prefactor(self) -> f64 {
        self.prefactor() / 6.0
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RunningMode::Consistent => "consistent",
            RunningMode::PaperLiteral => "paper-literal",
        }
    }
}

impl std::str::FromStr for RunningMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "consistent" => Ok(RunningMode::Consistent),
            "paper-literal" => Ok(RunningMode::PaperLiteral),
            other => Err(format!(
                "unknown mode '{other}' (expected consistent or paper-literal)"
            )),
        }
    }
}

/// Dimensionless momentum scale z = ħ²k²/(m²c²) for one species.
/// Spacelike transfers have z > 0.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
pub struct MomentumScaleZ(f64);

impl MomentumScaleZ {
    pub fn new(z: f64) -> Result<Self> {
        if z.is_nan() {
            return Err(Error::Domain("z is NaN".into()));
        }
        if z <= PAIR_THRESHOLD_Z {
            return Err(Error::Threshold { z });
        }
        Ok(MomentumScaleZ(z))
    }

    /// z for a spacelike wavenumber |k| (1/m) and a species of mass `mass`.
    pub fn for_species(wavenumber: f64, mass: f64, consts: &PhysicalConstants) -> Result<Self> {
        crate::constants::check_mass(mass)?;
        let ratio = consts.hbar() * wavenumber / (mass * consts.c_rel());
        Self::new(ratio * ratio)
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// I(z) = ∫₀¹ x(1−x) ln(1 + x(1−x) z) dx.
///
/// The integrand is symmetric about x = 1/2, so only [0, 1/2] is integrated.
/// For large z the integrand changes shape around x ≈ 1/z; breakpoints at
/// 1/z, 10/z, 100/z, … let the adaptive rule see that region from the start.
pub fn feynman_integral(z: f64) -> Result<f64> {
    let z = MomentumScaleZ::new(z)?.value();
    if z == 0.0 {
        return Ok(0.0);
    }
    let integrand = |x: f64| {
        let w = x * (1.0 - x);
        w * (w * z).ln_1p()
    };
    let mut breakpoints = Vec::new();
    if z > 1.0 {
        let mut x = 1.0 / z;
        while x < 0.5 {
            breakpoints.push(x);
            x *= 10.0;
        }
    }
    let opts = QuadOptions {
        abs_tol: 1e-15,
        rel_tol: 1e-13,
        max_intervals: 4000,
    };
    let half = integrate_with_breakpoints(integrand, 0.0, 0.5, &breakpoints, opts)?;
    Ok(2.0 * half.value)
}

/// How the momentum transfer is specified.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MomentumScale {
    /// Spacelike |k| in 1/m.
    Wavenumber(f64),
    /// z of the lightest species in the set; other species scale as (m_ref/m)².
    ReferenceZ(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpeciesShift {
    pub name: String,
    pub z: f64,
    pub shift: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunningResult {
    pub alpha_inverse: f64,
    pub alpha_inverse_at_zero: f64,
    pub per_species_shift: Vec<SpeciesShift>,
    pub mode: RunningMode,
}

impl RunningResult {
    pub fn total_shift(&self) -> f64 {
        self.per_species_shift.iter().map(|s| s.shift).sum()
    }

    pub fn alpha(&self) -> f64 {
        1.0 / self.alpha_inverse
    }

    /// (α(k) − α(0)) / α(0).
    pub fn relative_alpha_change(&self) -> f64 {
        self.alpha_inverse_at_zero / self.alpha_inverse - 1.0
    }
}

/// α⁻¹ at the given momentum transfer, starting from the fixture's α⁻¹(0).
pub fn alpha_inverse_at(
    scale: MomentumScale,
    set: &ParticleSet,
    consts: &PhysicalConstants,
    mode: RunningMode,
) -> Result<RunningResult> {
    let alpha_inverse_at_zero = consts.alpha_inverse_exp();
    let reference_mass = set.lightest().map(|p| p.mass);
    let prefactor = mode.prefactor();

    let mut per_species_shift = Vec::with_capacity(set.len());
    for p in set.particles() {
        let z = match scale {
            MomentumScale::Wavenumber(k) => {
                if !(k.is_finite() && k >= 0.0) {
                    return Err(Error::Domain(format!(
                        "|k| must be a nonnegative magnitude, got {k}"
                    )));
                }
                MomentumScaleZ::for_species(k, p.mass, consts)?
            }
            MomentumScale::ReferenceZ(z_ref) => {
                let m_ref = reference_mass.expect("nonempty set has a lightest particle");
                let ratio = m_ref / p.mass;
                MomentumScaleZ::new(z_ref * ratio * ratio)?
            }
        };
        let shift = prefactor * p.weight() * feynman_integral(z.value())?;
        per_species_shift.push(SpeciesShift {
            name: p.name.clone(),
            z: z.value(),
            shift,
        });
    }

    let total: f64 = per_species_shift.iter().map(|s| s.shift).sum();
    Ok(RunningResult {
        alpha_inverse: alpha_inverse_at_zero - total,
        alpha_inverse_at_zero,
        per_species_shift,
        mode,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LandauPole {
    /// ln(Λ / (m_ref c_rel)).
    pub log_lambda: f64,
    pub reference_particle: String,
    /// kg
    pub reference_mass: f64,
    /// log₁₀ of Λ expressed in GeV/c.
    pub log10_lambda_gev: f64,
    /// Leading-log right-hand side minus α⁻¹(0), evaluated at the root.
    pub residual: f64,
    pub mode: RunningMode,
}

impl LandauPole {
    /// Λ in GeV/c as `(mantissa, exponent)` with 1 ≤ mantissa < 10.
    pub fn lambda_gev_scientific(&self) -> (f64, i64) {
        split_log10(self.log10_lambda_gev)
    }
}

/// Splits 10^x into mantissa and integer exponent without forming 10^x.
pub fn split_log10(log10_value: f64) -> (f64, i64) {
    let exponent = log10_value.floor();
    let mut mantissa = 10f64.powf(log10_value - exponent);
    let mut exponent = exponent as i64;
    if mantissa >= 10.0 {
        mantissa /= 10.0;
        exponent += 1;
    }
    (mantissa, exponent)
}

/// Leading-log right-hand side Σ c·deg·(q/e)²·ln(Λ²/mᵢ²c²) for a given
/// ln(Λ/(m_ref c)), where m_ref is the lightest mass in the set.
pub fn leading_log_alpha_inverse(set: &ParticleSet, log_lambda: f64, mode: RunningMode) -> f64 {
    let Some(reference) = set.lightest() else {
        return 0.0;
    };
    let c = mode.leading_log_prefactor();
    set.particles()
        .iter()
        .map(|p| c * p.weight() * 2.0 * (log_lambda - (p.mass / reference.mass).ln()))
        .sum()
}

/// Solves α⁻¹(0) = (1/3π) Σ deg (q/e)² ln(Λ²/mᵢ²c²) for ln(Λ/(m_ref c)).
pub fn landau_pole(
    set: &ParticleSet,
    consts: &PhysicalConstants,
    mode: RunningMode,
) -> Result<LandauPole> {
    let reference = set
        .lightest()
        .ok_or_else(|| Error::Domain("Landau pole needs a nonempty particle set".into()))?;
    if set.charge_sum() <= 0.0 {
        return Err(Error::Domain("charge sum must be positive".into()));
    }
    let target = consts.alpha_inverse_exp();
    let condition = |l: f64| leading_log_alpha_inverse(set, l, mode) - target;

    // condition(0) < 0 because every ln(m/m_ref) ≥ 0.
    let (lo, hi) = bracket_upward(&condition, 0.0, 1.0, 64)?;
    let log_lambda = brent(condition, lo, hi, RootOptions::default())?;

    let reference_energy_gev =
        reference.mass * consts.c_rel() * consts.c_rel() / (consts.elementary_charge() * 1e9);
    Ok(LandauPole {
        log_lambda,
        reference_particle: reference.name.clone(),
        reference_mass: reference.mass,
        log10_lambda_gev: log_lambda / LN_10 + reference_energy_gev.log10(),
        residual: condition(log_lambda),
        mode,
    })
}

/// α⁻¹(0) = (1/3π)·ν·ln(Λ²/m²c²) for ν unit-charge species of equal mass.
pub fn zeldovich_alpha_inverse(nu_types: u32, log_lambda_over_mc: f64) -> Result<f64> {
    if nu_types < 1 {
        return Err(Error::Domain(
            "number of particle types must be at least 1".into(),
        ));
    }
    Ok(f64::from(nu_types) * 2.0 * log_lambda_over_mc / (3.0 * PI))
}

/// ln(p_Planck / (m c)) with p_Planck = sqrt(ħc³/G); needs G in the fixture.
pub fn planck_log_lambda(mass: f64, consts: &PhysicalConstants) -> Result<f64> {
    crate::constants::check_mass(mass)?;
    let p = consts
        .planck_momentum()
        .ok_or_else(|| Error::Schema("constants fixture has no gravitational_g".into()))?;
    Ok((p / (mass * consts.c_rel())).ln())
}
