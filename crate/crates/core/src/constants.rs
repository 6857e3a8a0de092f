//! Physical constants loaded from a key–value fixture.
//!
//! The fixture format is one `name = value` pair per line, values in SI.
//! Blank lines and anything after `#` are ignored. Seven keys are required:
//!
//! | key                 | quantity                      | unit  |
//! |---------------------|-------------------------------|-------|
//! | `elementary_charge` | e                             | C     |
//! | `hbar`              | reduced Planck constant       | J·s   |
//! | `planck_h`          | Planck constant               | J·s   |
//! | `c_rel`             | limiting speed of relativity  | m/s   |
//! | `boltzmann_k`       | Boltzmann constant            | J/K   |
//! | `epsilon0_exp`      | measured vacuum permittivity  | F/m   |
//! | `alpha_inverse_exp` | measured inverse fine structure constant | 1 |
//!
//! Optional keys: `gravitational_g` (m³/(kg·s²)) and `vintage` (free text).
//!
//! `c_rel` is the speed relating rest mass to rest energy. It is deliberately
//! not called "speed of light": the vacuum model computes a light speed of its
//! own and compares it against this value.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};

/// Relative tolerance for the fixture's internal consistency checks.
pub const INTEGRITY_TOLERANCE: f64 = 1e-9;

const BUNDLED_CODATA_2018: &str = include_str!("../data/codata-2018.constants");

const REQUIRED_KEYS: [&str; 7] = [
    "elementary_charge",
    "hbar",
    "planck_h",
    "c_rel",
    "boltzmann_k",
    "epsilon0_exp",
    "alpha_inverse_exp",
];

/// Immutable set of SI constants. Every other module reads constants from here.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhysicalConstants {
    elementary_charge: f64,
    hbar: f64,
    planck_h: f64,
    c_rel: f64,
    boltzmann_k: f64,
    epsilon0_exp: f64,
    alpha_inverse_exp: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    gravitational_g: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vintage: Option<String>,
}

impl PhysicalConstants {
    /// The CODATA 2018 fixture compiled into the library.
    pub fn bundled() -> Self {
        Self::parse(BUNDLED_CODATA_2018).expect("bundled constants fixture is valid")
    }

    /// Reads and validates a constants fixture from disk.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::parse(&text)
    }

    /// Parses and validates fixture text.
    pub fn parse(text: &str) -> Result<Self> {
        let mut values: BTreeMap<String, f64> = BTreeMap::new();
        let mut vintage = None;

        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Schema(format!("line {}: expected `name = value`", lineno + 1))
            })?;
            let key = key.trim();
            let value = value.trim();
            if key == "vintage" {
                vintage = Some(value.to_string());
                continue;
            }
            if !REQUIRED_KEYS.contains(&key) && key != "gravitational_g" {
                return Err(Error::Schema(format!(
                    "line {}: unknown key '{key}'",
                    lineno + 1
                )));
            }
            let parsed: f64 = value.parse().map_err(|_| {
                Error::Schema(format!("line {}: '{value}' is not a number", lineno + 1))
            })?;
            if values.insert(key.to_string(), parsed).is_some() {
                return Err(Error::Schema(format!("duplicate key '{key}'")));
            }
        }

        let get = |key: &str| -> Result<f64> {
            values
                .get(key)
                .copied()
                .ok_or_else(|| Error::Schema(format!("missing field '{key}'")))
        };

        let consts = PhysicalConstants {
            elementary_charge: get("elementary_charge")?,
            hbar: get("hbar")?,
            planck_h: get("planck_h")?,
            c_rel: get("c_rel")?,
            boltzmann_k: get("boltzmann_k")?,
            epsilon0_exp: get("epsilon0_exp")?,
            alpha_inverse_exp: get("alpha_inverse_exp")?,
            gravitational_g: values.get("gravitational_g").copied(),
            vintage,
        };
        consts.validate()?;
        Ok(consts)
    }

    fn validate(&self) -> Result<()> {
        let mut fields = vec![
            ("elementary_charge", self.elementary_charge),
            ("hbar", self.hbar),
            ("planck_h", self.planck_h),
            ("c_rel", self.c_rel),
            ("boltzmann_k", self.boltzmann_k),
            ("epsilon0_exp", self.epsilon0_exp),
            ("alpha_inverse_exp", self.alpha_inverse_exp),
        ];
        if let Some(g) = self.gravitational_g {
            fields.push(("gravitational_g", g));
        }
        for (name, value) in fields {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::Integrity(format!(
                    "{name} must be positive and finite, got {value}"
                )));
            }
        }

        let h_from_hbar = 2.0 * PI * self.hbar;
        if relative_difference(h_from_hbar, self.planck_h) > INTEGRITY_TOLERANCE {
            return Err(Error::Integrity(format!(
                "planck_h = {} but 2*pi*hbar = {h_from_hbar}",
                self.planck_h
            )));
        }

        let alpha_inv = self.alpha_inverse_from_epsilon0();
        if relative_difference(alpha_inv, self.alpha_inverse_exp) > INTEGRITY_TOLERANCE {
            return Err(Error::Integrity(format!(
                "alpha_inverse_exp = {} but 4*pi*epsilon0*hbar*c/e^2 = {alpha_inv}",
                self.alpha_inverse_exp
            )));
        }
        Ok(())
    }

    pub fn elementary_charge(&self) -> f64 {
        self.elementary_charge
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn planck_h(&self) -> f64 {
        self.planck_h
    }

    pub fn c_rel(&self) -> f64 {
        self.c_rel
    }

    pub fn boltzmann_k(&self) -> f64 {
        self.boltzmann_k
    }

    pub fn epsilon0_exp(&self) -> f64 {
        self.epsilon0_exp
    }

    pub fn alpha_inverse_exp(&self) -> f64 {
        self.alpha_inverse_exp
    }

    pub fn gravitational_g(&self) -> Option<f64> {
        self.gravitational_g
    }

    pub fn vintage(&self) -> Option<&str> {
        self.vintage.as_deref()
    }

    /// α⁻¹ = 4π ε₀ ħ c / e², recomputed from the stored e, ħ, c and ε₀.
    pub fn alpha_inverse_from_epsilon0(&self) -> f64 {
        4.0 * PI * self.epsilon0_exp * self.hbar * self.c_rel
            / (self.elementary_charge * self.elementary_charge)
    }

    /// Returns a copy with a different α⁻¹(0). Used for what-if evaluations;
    /// skips the ε₀ consistency check on purpose.
    pub fn with_alpha_inverse(&self, alpha_inverse: f64) -> Result<Self> {
        if !(alpha_inverse.is_finite() && alpha_inverse > 0.0) {
            return Err(Error::Domain(format!(
                "alpha inverse must be positive, got {alpha_inverse}"
            )));
        }
        Ok(PhysicalConstants {
            alpha_inverse_exp: alpha_inverse,
            ..self.clone()
        })
    }

    /// Planck momentum sqrt(ħ c³ / G) in kg·m/s, when G is present.
    pub fn planck_momentum(&self) -> Option<f64> {
        self.gravitational_g
            .map(|g| (self.hbar * self.c_rel.powi(3) / g).sqrt())
    }

    /// Reduced Compton wavelength ħ/(m c_rel).
    pub fn compton_length(&self, mass: f64) -> Result<f64> {
        check_mass(mass)?;
        Ok(self.hbar / (mass * self.c_rel))
    }
}

pub(crate) fn check_mass(mass: f64) -> Result<()> {
    if mass.is_finite() && mass > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("mass must be positive, got {mass}")))
    }
}

fn relative_difference(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}
