//! Rayleigh–Jeans and Planck spectral energy densities, and their integrals
//! up to a frequency cutoff.
//!
//! All densities are energy per volume per frequency interval (J·s/m³).
//! Divergent totals are only ever exposed through an explicit cutoff.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};
use crate::quadrature::{integrate_with_breakpoints, QuadOptions};

/// Below this hν/kT the Bose factor switches to its Taylor series.
pub const SMALL_ARGUMENT: f64 = 1e-5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectralLaw {
    Rj,
    Planck1,
    Planck2,
}

impl fmt::Display for SpectralLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpectralLaw::Rj => "rj",
            SpectralLaw::Planck1 => "planck1",
            SpectralLaw::Planck2 => "planck2",
        })
    }
}

impl FromStr for SpectralLaw {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "rj" => Ok(SpectralLaw::Rj),
            "planck1" => Ok(SpectralLaw::Planck1),
            "planck2" => Ok(SpectralLaw::Planck2),
            other => Err(format!("unknown law '{other}' (rj, planck1, planck2)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralSample {
    /// Hz
    pub frequency: f64,
    /// K
    pub temperature: f64,
    /// J·s/m³
    pub density: f64,
}

fn check_inputs(nu: f64, temperature: f64) -> Result<()> {
    if !(temperature.is_finite() && temperature > 0.0) {
        return Err(Error::Domain(format!(
            "temperature must be positive, got {temperature}"
        )));
    }
    if !(nu.is_finite() && nu >= 0.0) {
        return Err(Error::Domain(format!(
            "frequency must be nonnegative, got {nu}"
        )));
    }
    Ok(())
}

/// Mode density 8πν²/c³.
fn mode_density(nu: f64, consts: &PhysicalConstants) -> f64 {
    8.0 * PI * nu * nu / consts.c_rel().powi(3)
}

/// x/(eˣ − 1), with a series below [`SMALL_ARGUMENT`] and an e⁻ˣ form for
/// large x.
pub fn bose_factor(x: f64) -> f64 {
    if x < SMALL_ARGUMENT {
        // x/(eˣ−1) = 1 − x/2 + x²/12 − x⁴/720 + …
        let x2 = x * x;
        1.0 - 0.5 * x + x2 / 12.0 - x2 * x2 / 720.0
    } else if x < 1.0 {
        x / x.exp_m1()
    } else {
        let decay = (-x).exp();
        x * decay / (1.0 - decay)
    }
}

/// (8πν²/c³) kT.
pub fn rayleigh_jeans(nu: f64, temperature: f64, consts: &PhysicalConstants) -> Result<f64> {
    check_inputs(nu, temperature)?;
    Ok(mode_density(nu, consts) * consts.boltzmann_k() * temperature)
}

/// (8πν²/c³) hν/(e^{hν/kT} − 1). ν = 0 returns the limit 0.
pub fn planck_first(nu: f64, temperature: f64, consts: &PhysicalConstants) -> Result<f64> {
    check_inputs(nu, temperature)?;
    if nu == 0.0 {
        return Ok(0.0);
    }
    let kt = consts.boltzmann_k() * temperature;
    let x = consts.planck_h() * nu / kt;
    Ok(mode_density(nu, consts) * kt * bose_factor(x))
}

/// Zero-point part (8πν²/c³)(hν/2); independent of temperature.
pub fn zero_point_density(nu: f64, consts: &PhysicalConstants) -> Result<f64> {
    if !(nu.is_finite() && nu >= 0.0) {
        return Err(Error::Domain(format!(
            "frequency must be nonnegative, got {nu}"
        )));
    }
    Ok(mode_density(nu, consts) * 0.5 * consts.planck_h() * nu)
}

/// Planck's first formula plus the zero-point term ½hν per mode.
pub fn planck_second(nu: f64, temperature: f64, consts: &PhysicalConstants) -> Result<f64> {
    Ok(planck_first(nu, temperature, consts)? + zero_point_density(nu, consts)?)
}

pub fn density(
    law: SpectralLaw,
    nu: f64,
    temperature: f64,
    consts: &PhysicalConstants,
) -> Result<f64> {
    match law {
        SpectralLaw::Rj => rayleigh_jeans(nu, temperature, consts),
        SpectralLaw::Planck1 => planck_first(nu, temperature, consts),
        SpectralLaw::Planck2 => planck_second(nu, temperature, consts),
    }
}

pub fn spectral_sample(
    law: SpectralLaw,
    nu: f64,
    temperature: f64,
    consts: &PhysicalConstants,
) -> Result<SpectralSample> {
    Ok(SpectralSample {
        frequency: nu,
        temperature,
        density: density(law, nu, temperature, consts)?,
    })
}

/// Radiation constant a = 8π⁵k⁴/(15c³h³); ∫₀^∞ planck_first dν = aT⁴.
pub fn radiation_constant(consts: &PhysicalConstants) -> f64 {
    8.0 * PI.powi(5) * consts.boltzmann_k().powi(4)
        / (15.0 * consts.c_rel().powi(3) * consts.planck_h().powi(3))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralIntegral {
    pub law: SpectralLaw,
    /// K
    pub temperature: f64,
    /// Hz
    pub nu_max: f64,
    /// J/m³
    pub energy_density: f64,
    pub error_estimate: f64,
}

/// ∫₀^{ν_max} ρ(ν) dν by adaptive quadrature, to 1e-12 relative.
///
/// Breakpoints at multiples of kT/h put nodes on the thermal peak even when
/// ν_max is far above it. Non-convergence is returned as
/// [`Error::Quadrature`] carrying the achieved estimate.
pub fn spectral_integral(
    law: SpectralLaw,
    temperature: f64,
    nu_max: f64,
    consts: &PhysicalConstants,
) -> Result<SpectralIntegral> {
    check_inputs(0.0, temperature)?;
    if !(nu_max.is_finite() && nu_max > 0.0) {
        return Err(Error::Domain(format!(
            "nu_max must be positive, got {nu_max}"
        )));
    }
    let thermal = consts.boltzmann_k() * temperature / consts.planck_h();
    let breakpoints: Vec<f64> = [
        0.3, 1.0, 2.0, 3.0, 5.0, 10.0, 20.0, 40.0, 80.0, 160.0, 320.0, 640.0,
    ]
    .iter()
    .map(|m| m * thermal)
    .collect();
    let opts = QuadOptions {
        abs_tol: 0.0,
        rel_tol: 1e-12,
        max_intervals: 4000,
    };
    // inputs are validated above, so the integrand never fails
    let integrand = |nu: f64| density(law, nu, temperature, consts).unwrap_or(f64::NAN);
    let r = integrate_with_breakpoints(integrand, 0.0, nu_max, &breakpoints, opts)?;
    Ok(SpectralIntegral {
        law,
        temperature,
        nu_max,
        energy_density: r.value,
        error_estimate: r.error_estimate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn consts() -> PhysicalConstants {
        PhysicalConstants::bundled()
    }

    #[test]
    fn rj_examples() {
        let c = consts();
        assert_eq!(rayleigh_jeans(0.0, 300.0, &c).unwrap(), 0.0);
        let base = rayleigh_jeans(1e13, 300.0, &c).unwrap();
        let doubled = rayleigh_jeans(2e13, 600.0, &c).unwrap();
        assert_relative_eq!(doubled, 8.0 * base, max_relative = 1e-15);
        // mpmath: 8π·1e28/c³ · k · 300
        assert_relative_eq!(
            rayleigh_jeans(1e14, 300.0, &c).unwrap(),
            3.863_512_202_884e-17,
            max_relative = 1e-12
        );
        assert!(matches!(
            rayleigh_jeans(1e14, 0.0, &c),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            rayleigh_jeans(1e14, -3.0, &c),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn bose_factor_branches_agree() {
        for x in [SMALL_ARGUMENT * 0.999, SMALL_ARGUMENT, 0.999_999, 1.0] {
            let direct = x / x.exp_m1();
            assert_relative_eq!(bose_factor(x), direct, max_relative = 1e-14);
        }
        assert_eq!(bose_factor(0.0), 1.0);
        assert_eq!(bose_factor(1e4), 0.0);
    }

    #[test]
    fn planck_matches_rj_at_small_argument() {
        let c = consts();
        let t = 1e4;
        let nu = 1e-8 * c.boltzmann_k() * t / c.planck_h();
        let rj = rayleigh_jeans(nu, t, &c).unwrap();
        let p1 = planck_first(nu, t, &c).unwrap();
        assert_relative_eq!(p1, rj, max_relative = 1e-7);
    }

    #[test]
    fn planck_exponential_cutoff() {
        let c = consts();
        let mut last = f64::INFINITY;
        for nu in [1e14, 1e15, 1e16] {
            let p = planck_first(nu, 300.0, &c).unwrap();
            assert!(p < last);
            last = p;
        }
        assert_eq!(planck_first(1e17, 300.0, &c).unwrap(), 0.0);
        assert_eq!(planck_first(0.0, 300.0, &c).unwrap(), 0.0);
    }

    #[test]
    fn zero_point_offset() {
        let c = consts();
        let nu = 3e14;
        let zp = zero_point_density(nu, &c).unwrap();
        for t in [1.0, 300.0, 1e5] {
            let d = planck_second(nu, t, &c).unwrap() - planck_first(nu, t, &c).unwrap();
            assert_relative_eq!(d, zp, max_relative = 1e-12);
        }
        // thermal part gone at very low temperature
        assert_eq!(planck_second(nu, 1e-3, &c).unwrap(), zp);
        assert!(zp > 0.0);
    }

    #[test]
    fn stefan_boltzmann() {
        let c = consts();
        let a = radiation_constant(&c);
        assert_relative_eq!(a, 7.565_733_250_28e-16, max_relative = 1e-11);
        let t = 1000.0;
        let nu_max = 100.0 * c.boltzmann_k() * t / c.planck_h();
        let r = spectral_integral(SpectralLaw::Planck1, t, nu_max, &c).unwrap();
        assert_relative_eq!(r.energy_density, a * t.powi(4), max_relative = 1e-6);
    }

    #[test]
    fn far_cutoff_still_converges_to_stefan_boltzmann() {
        let c = consts();
        let r = spectral_integral(SpectralLaw::Planck1, 300.0, 1e18, &c).unwrap();
        assert_relative_eq!(
            r.energy_density,
            radiation_constant(&c) * 300f64.powi(4),
            max_relative = 1e-9
        );
    }

    #[test]
    fn rj_integral_cubic() {
        let c = consts();
        let a = spectral_integral(SpectralLaw::Rj, 300.0, 1e14, &c).unwrap();
        let b = spectral_integral(SpectralLaw::Rj, 300.0, 2e14, &c).unwrap();
        assert_relative_eq!(
            b.energy_density,
            8.0 * a.energy_density,
            max_relative = 1e-12
        );
    }

    #[test]
    fn zero_point_integral_closed_form() {
        let c = consts();
        let t = 300.0;
        for nu_max in [1e13, 1e15] {
            let p2 = spectral_integral(SpectralLaw::Planck2, t, nu_max, &c).unwrap();
            let p1 = spectral_integral(SpectralLaw::Planck1, t, nu_max, &c).unwrap();
            let closed = PI * c.planck_h() * nu_max.powi(4) / c.c_rel().powi(3);
            let tol = 1e-11 * p2.energy_density;
            assert!((p2.energy_density - p1.energy_density - closed).abs() < tol);
        }
    }

    #[test]
    fn planck2_quartic_growth() {
        let c = consts();
        let lo = spectral_integral(SpectralLaw::Planck2, 300.0, 1e15, &c).unwrap();
        let hi = spectral_integral(SpectralLaw::Planck2, 300.0, 1e16, &c).unwrap();
        assert_relative_eq!(
            hi.energy_density / lo.energy_density,
            1e4,
            max_relative = 1e-6
        );
    }

    #[test]
    fn integral_domain_errors() {
        let c = consts();
        assert!(spectral_integral(SpectralLaw::Rj, 0.0, 1e14, &c).is_err());
        assert!(spectral_integral(SpectralLaw::Rj, 300.0, 0.0, &c).is_err());
        assert!(spectral_integral(SpectralLaw::Rj, 300.0, f64::INFINITY, &c).is_err());
    }

    #[test]
    fn law_parsing() {
        assert_eq!(
            "planck2".parse::<SpectralLaw>().unwrap(),
            SpectralLaw::Planck2
        );
        assert!("wien".parse::<SpectralLaw>().is_err());
        assert_eq!(SpectralLaw::Rj.to_string(), "rj");
    }
}
