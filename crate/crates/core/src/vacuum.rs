//! Harmonic-oscillator model of the polarizable vacuum.
//!
//! Each charged species contributes virtual pairs that respond to a static
//! field like a harmonic oscillator with reduced mass m/2 and gap
//! ħω₀ = 2mc². The induced dipole per unit field is e²ħ²/(2m³c⁴), and each
//! pair occupies V = κ·(ħ/mc)³ for one of five volume prescriptions. The
//! dipole density then no longer depends on the mass, and summing species gives
//!
//! ```text
//! ε₀      = (e²/2ħc)   Σ deg (q/e)² ħ³/(m³c³V) = e² S / (2ħcκ)
//! 1/μ₀    = (e²c/2ħ)   Σ deg (q/e)² ħ³/(m³c³V) = e² c S / (2ħκ)
//! α⁻¹(0)  = 4π ε₀ ħc / e² = 2π S / κ
//! ```
//!
//! with S = Σ deg (q/e)². The sums are evaluated species by species so the
//! mass cancellation and the 1/√(ε₀μ₀) = c identity are checked numerically
//! rather than assumed.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::constants::{check_mass, PhysicalConstants};
use crate::error::{Error, Result};
use crate::particles::ParticleSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VolumeOption {
    /// Reduced Compton wavelength cubed.
    Opt1,
    /// Mode counting without cutoff: zero volume per pair.
    Opt2,
    /// Mode counting with a relativistic cutoff at p = 2mc.
    Opt3,
    /// Oscillator ground state, equivalent rectangular distribution.
    Opt4,
    /// Oscillator ground state, position variance.
    Opt5,
}

impl VolumeOption {
    pub const ALL: [VolumeOption; 5] = [
        VolumeOption::Opt1,
        VolumeOption::Opt2,
        VolumeOption::Opt3,
        VolumeOption::Opt4,
        VolumeOption::Opt5,
    ];

    /// Finite-volume options.
    pub const FINITE: [VolumeOption; 4] = [
        VolumeOption::Opt1,
        VolumeOption::Opt3,
        VolumeOption::Opt4,
        VolumeOption::Opt5,
    ];

    /// The two oscillator-based options used for the charge-sum estimate.
    pub const OSCILLATOR: [VolumeOption; 2] = [VolumeOption::Opt4, VolumeOption::Opt5];

    /// κ in V = κ (ħ/mc)³.
    pub fn kappa(self) -> f64 {
        match self {
            VolumeOption::Opt1 => 1.0,
            VolumeOption::Opt2 => 0.0,
            VolumeOption::Opt3 => 3.0 * PI * PI / 4.0,
            VolumeOption::Opt4 => (PI / 4.0).powf(1.5),
            VolumeOption::Opt5 => 2f64.powf(-1.5),
        }
    }

    /// N = 1/κ, the factor in α⁻¹ = 2πN·S. `None` for the zero-volume option.
    pub fn n_factor(self) -> Option<f64> {
        match self {
            VolumeOption::Opt2 => None,
            VolumeOption::Opt4 => Some((4.0 / PI).powf(1.5)),
            VolumeOption::Opt5 => Some(2f64.powf(1.5)),
            other => Some(1.0 / other.kappa()),
        }
    }

    pub fn is_divergent(self) -> bool {
        self == VolumeOption::Opt2
    }

    pub fn number(self) -> u8 {
        match self {
            VolumeOption::Opt1 => 1,
            VolumeOption::Opt2 => 2,
            VolumeOption::Opt3 => 3,
            VolumeOption::Opt4 => 4,
            VolumeOption::Opt5 => 5,
        }
    }

    pub fn from_number(n: u8) -> Option<Self> {
        VolumeOption::ALL.into_iter().find(|o| o.number() == n)
    }

    fn finite_kappa(self) -> Result<f64> {
        if self.is_divergent() {
            Err(divergence())
        } else {
            Ok(self.kappa())
        }
    }
}

impl fmt::Display for VolumeOption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "opt{}", self.number())
    }
}

impl FromStr for VolumeOption {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let digits = s.trim().trim_start_matches("opt");
        digits
            .parse::<u8>()
            .ok()
            .and_then(VolumeOption::from_number)
            .ok_or_else(|| format!("unknown volume option '{s}' (expected 1..5)"))
    }
}

fn divergence() -> Error {
    Error::Divergence(
        "volume option 2 assigns zero volume to a single virtual pair; dividing by it diverges"
            .into(),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PairVolume {
    pub option: VolumeOption,
    pub kappa: f64,
    /// m³
    pub volume: f64,
    pub divergent: bool,
}

/// V = κ (ħ/(m c))³.
pub fn pair_volume(
    option: VolumeOption,
    mass: f64,
    consts: &PhysicalConstants,
) -> Result<PairVolume> {
    let compton = consts.compton_length(mass)?;
    let kappa = option.kappa();
    Ok(PairVolume {
        option,
        kappa,
        volume: kappa * compton * compton * compton,
        divergent: option.is_divergent(),
    })
}

/// Induced dipole per unit field, e²ħ²/(2m³c⁴), in C·m²/V.
pub fn induced_polarizability(mass: f64, consts: &PhysicalConstants) -> Result<f64> {
    check_mass(mass)?;
    let e = consts.elementary_charge();
    let hbar = consts.hbar();
    let c2 = consts.c_rel() * consts.c_rel();
    Ok(e * e * hbar * hbar / (2.0 * mass * mass * mass * c2 * c2))
}

// Σ deg (q/e)² ħ³/(m³c³V), species by species.
fn volume_weighted_sum(
    set: &ParticleSet,
    option: VolumeOption,
    consts: &PhysicalConstants,
) -> Result<f64> {
    option.finite_kappa()?;
    if set.is_empty() {
        return Err(Error::ZeroPermittivity(format!(
            "particle set '{}' is empty",
            set.label
        )));
    }
    let mut sum = 0.0;
    for p in set.particles() {
        let compton = consts.compton_length(p.mass)?;
        let v = pair_volume(option, p.mass, consts)?.volume;
        sum += p.weight() * compton * compton * compton / v;
    }
    Ok(sum)
}

/// ε₀ = Σ deg (q/e)² ⟨d⟩ᵢ/Vᵢ, with ⟨d⟩ the induced dipole per unit field.
pub fn epsilon0_model(
    set: &ParticleSet,
    option: VolumeOption,
    consts: &PhysicalConstants,
) -> Result<f64> {
    option.finite_kappa()?;
    if set.is_empty() {
        return Err(Error::ZeroPermittivity(format!(
            "particle set '{}' is empty",
            set.label
        )));
    }
    let mut sum = 0.0;
    for p in set.particles() {
        let d = induced_polarizability(p.mass, consts)?;
        let v = pair_volume(option, p.mass, consts)?.volume;
        sum += p.weight() * d / v;
    }
    Ok(sum)
}

/// μ₀ from 1/μ₀ = (e²c/2ħ) Σ deg (q/e)² ħ³/(m³c³V).
pub fn mu0_model(
    set: &ParticleSet,
    option: VolumeOption,
    consts: &PhysicalConstants,
) -> Result<f64> {
    let e = consts.elementary_charge();
    let inverse =
        e * e * consts.c_rel() / (2.0 * consts.hbar()) * volume_weighted_sum(set, option, consts)?;
    Ok(1.0 / inverse)
}

/// α⁻¹(0) = 2πN·S with N = 1/κ. An empty set gives 0.
pub fn alpha_inverse_model(set: &ParticleSet, option: VolumeOption) -> Result<f64> {
    let n = option.n_factor().ok_or_else(divergence)?;
    Ok(2.0 * PI * n * set.charge_sum())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VacuumModelResult {
    pub epsilon0_model: f64,
    pub mu0_model: f64,
    pub c_model: f64,
    pub alpha_inverse_model: f64,
    pub option: VolumeOption,
    pub kappa: f64,
    pub charge_sum: f64,
    pub set_label: String,
}

/// Evaluates the full model for one set and one volume option.
pub fn vacuum_model(
    set: &ParticleSet,
    option: VolumeOption,
    consts: &PhysicalConstants,
) -> Result<VacuumModelResult> {
    let epsilon0_model = epsilon0_model(set, option, consts)?;
    let mu0_model = mu0_model(set, option, consts)?;
    Ok(VacuumModelResult {
        epsilon0_model,
        mu0_model,
        c_model: 1.0 / (epsilon0_model * mu0_model).sqrt(),
        alpha_inverse_model: alpha_inverse_model(set, option)?,
        option,
        kappa: option.kappa(),
        charge_sum: set.charge_sum(),
        set_label: set.label.clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OptionChargeSum {
    pub option: VolumeOption,
    pub n_factor: f64,
    pub charge_sum: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChargeSumEstimate {
    pub alpha_inverse_exp: f64,
    pub per_option: Vec<OptionChargeSum>,
    pub center: f64,
    pub halfspread: f64,
    /// `center ± halfspread` at one decimal.
    pub display: String,
}

/// Solves α⁻¹ = 2πN·S for S under each option; the spread between the
/// options is reported as center ± halfspread.
///
/// The one-decimal display rounds each per-option sum to tenths first and
/// then forms center and halfspread exactly in tenths, rounding halves away
/// from zero.
pub fn invert_charge_sum(
    alpha_inverse_exp: f64,
    options: &[VolumeOption],
) -> Result<ChargeSumEstimate> {
    if !(alpha_inverse_exp.is_finite() && alpha_inverse_exp > 0.0) {
        return Err(Error::Domain(format!(
            "alpha inverse must be positive, got {alpha_inverse_exp}"
        )));
    }
    if options.is_empty() {
        return Err(Error::Domain(
            "at least one volume option is required".into(),
        ));
    }
    let mut per_option = Vec::with_capacity(options.len());
    for &option in options {
        let n = option.n_factor().ok_or_else(divergence)?;
        per_option.push(OptionChargeSum {
            option,
            n_factor: n,
            charge_sum: alpha_inverse_exp / (2.0 * PI * n),
        });
    }

    let values = || per_option.iter().map(|o| o.charge_sum);
    let lo = values().fold(f64::INFINITY, f64::min);
    let hi = values().fold(f64::NEG_INFINITY, f64::max);

    let lo_tenths = (lo * 10.0).round() as i64;
    let hi_tenths = (hi * 10.0).round() as i64;
    let display = format!(
        "{} ± {}",
        format_tenths(half_tenths_rounded(lo_tenths + hi_tenths)),
        format_tenths(half_tenths_rounded(hi_tenths - lo_tenths)),
    );

    Ok(ChargeSumEstimate {
        alpha_inverse_exp,
        per_option,
        center: 0.5 * (lo + hi),
        halfspread: 0.5 * (hi - lo),
        display,
    })
}

// x/2 rounded half away from zero, for x ≥ 0.
fn half_tenths_rounded(x: i64) -> i64 {
    (x + 1) / 2
}

fn format_tenths(t: i64) -> String {
    format!("{}.{}", t / 10, t % 10)
}
