//! Charged elementary particles and the charge-weighted sum Σ deg·(q/e)².
//!
//! Particle tables are comma-separated text with the header
//! `name,charge_ratio,mass_kg,degeneracy,kind`. `charge_ratio` is written as
//! an integer, a fraction (`-1/3`) or a decimal (`0.5`) and is kept as an exact
//! rational, so sums like 3·(2/3)²·3 come out as exact integers. Colour
//! multiplicity goes into `degeneracy`; quarks are not triplicated as rows.

use std::collections::HashSet;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

const SM_FERMIONS: &str = include_str!("../data/sm-fermions.csv");
const SM_WITH_W: &str = include_str!("../data/sm-with-w.csv");

/// Labels of the particle sets compiled into the library.
pub const BUNDLED_SETS: [&str; 2] = ["SM-fermions", "SM-with-W"];

/// Default set for front ends.
pub const DEFAULT_SET: &str = "SM-with-W";

const HEADER: [&str; 5] = ["name", "charge_ratio", "mass_kg", "degeneracy", "kind"];

/// Electric charge in units of e, held exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChargeRatio(Ratio<i64>);

impl ChargeRatio {
    pub fn new(numer: i64, denom: i64) -> Self {
        ChargeRatio(Ratio::new(numer, denom))
    }

    pub fn as_f64(self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn squared(self) -> Ratio<i64> {
        self.0 * self.0
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for ChargeRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for ChargeRatio {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || format!("'{s}' is not an integer, fraction or decimal");
        if let Some((n, d)) = s.split_once('/') {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(format!("'{s}' has a zero denominator"));
            }
            return Ok(ChargeRatio::new(n, d));
        }
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty()
            || !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
            || frac_part.len() > 15
        {
            return Err(bad());
        }
        let digits = format!("{int_part}{frac_part}");
        let numer: i64 = if digits.is_empty() {
            0
        } else {
            digits.parse().map_err(|_| bad())?
        };
        let denom = 10i64.pow(frac_part.len() as u32);
        let numer = if negative { -numer } else { numer };
        Ok(ChargeRatio::new(numer, denom))
    }
}

impl Serialize for ChargeRatio {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_f64(self.as_f64())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ParticleKind {
    Lepton,
    Quark,
    Boson,
}

impl FromStr for ParticleKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim() {
            "lepton" => Ok(ParticleKind::Lepton),
            "quark" => Ok(ParticleKind::Quark),
            "boson" => Ok(ParticleKind::Boson),
            other => Err(format!("unknown kind '{other}' (lepton, quark, boson)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Particle {
    pub name: String,
    pub charge_ratio: ChargeRatio,
    /// kg
    pub mass: f64,
    pub degeneracy: u32,
    pub kind: ParticleKind,
}

impl Particle {
    /// Builds a particle, enforcing mass > 0, degeneracy >= 1 and nonzero charge.
    pub fn new(
        name: impl Into<String>,
        charge_ratio: ChargeRatio,
        mass: f64,
        degeneracy: u32,
        kind: ParticleKind,
    ) -> std::result::Result<Self, String> {
        if !(mass.is_finite() && mass > 0.0) {
            return Err(format!("mass must be positive, got {mass}"));
        }
        if degeneracy < 1 {
            return Err("degeneracy must be at least 1".into());
        }
        if charge_ratio.is_zero() {
            return Err("charge_ratio must be nonzero (neutral particles do not belong)".into());
        }
        Ok(Particle {
            name: name.into(),
            charge_ratio,
            mass,
            degeneracy,
            kind,
        })
    }

    /// deg·(q/e)² as an exact rational.
    pub fn weight_exact(&self) -> Ratio<i64> {
        self.charge_ratio.squared() * Ratio::from_integer(i64::from(self.degeneracy))
    }

    /// deg·(q/e)².
    pub fn weight(&self) -> f64 {
        self.weight_exact().to_f64().unwrap_or(f64::NAN)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParticleSet {
    pub label: String,
    particles: Vec<Particle>,
}

impl ParticleSet {
    /// Creates a set, rejecting duplicate names.
    pub fn new(label: impl Into<String>, particles: Vec<Particle>) -> Result<Self> {
        let mut seen = HashSet::new();
        for (i, p) in particles.iter().enumerate() {
            if !seen.insert(p.name.as_str()) {
                return Err(Error::Row {
                    row: i + 1,
                    name: p.name.clone(),
                    reason: "duplicate name".into(),
                });
            }
        }
        Ok(ParticleSet {
            label: label.into(),
            particles,
        })
    }

    pub fn empty(label: impl Into<String>) -> Self {
        ParticleSet {
            label: label.into(),
            particles: Vec::new(),
        }
    }

    /// One of the [`BUNDLED_SETS`].
    pub fn bundled(label: &str) -> Result<Self> {
        let text = match label {
            "SM-fermions" => SM_FERMIONS,
            "SM-with-W" => SM_WITH_W,
            other => return Err(Error::UnknownSet(other.to_string())),
        };
        Self::parse(label, text)
    }

    /// Loads a particle table; the label is the file stem.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        let label = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "custom".into());
        Self::parse(&label, &text)
    }

    /// Parses a particle table. Row numbers in errors count data rows from 1.
    pub fn parse(label: &str, text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));

        let Some(header) = lines.next() else {
            return Ok(ParticleSet::empty(label));
        };
        let columns: Vec<&str> = header.split(',').map(str::trim).collect();
        if columns != HEADER {
            return Err(Error::Schema(format!(
                "particle table header must be '{}', got '{header}'",
                HEADER.join(",")
            )));
        }

        let mut particles = Vec::new();
        for (i, line) in lines.enumerate() {
            let row = i + 1;
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            let name = fields.first().copied().unwrap_or("").to_string();
            let row_err = |reason: String| Error::Row {
                row,
                name: name.clone(),
                reason,
            };
            if fields.len() != HEADER.len() {
                return Err(row_err(format!(
                    "expected {} fields, got {}",
                    HEADER.len(),
                    fields.len()
                )));
            }
            if name.is_empty() {
                return Err(row_err("empty name".into()));
            }
            let charge: ChargeRatio = fields[1].parse().map_err(row_err)?;
            let mass: f64 = fields[2]
                .parse()
                .map_err(|_| row_err(format!("mass '{}' is not a number", fields[2])))?;
            let degeneracy: u32 = fields[3].parse().map_err(|_| {
                row_err(format!(
                    "degeneracy '{}' is not a positive integer",
                    fields[3]
                ))
            })?;
            let kind: ParticleKind = fields[4].parse().map_err(row_err)?;
            let particle =
                Particle::new(name.clone(), charge, mass, degeneracy, kind).map_err(row_err)?;
            if particles.iter().any(|p: &Particle| p.name == particle.name) {
                return Err(row_err("duplicate name".into()));
            }
            particles.push(particle);
        }
        Ok(ParticleSet {
            label: label.to_string(),
            particles,
        })
    }

    pub fn particles(&self) -> &[Particle] {
        &self.particles
    }

    pub fn len(&self) -> usize {
        self.particles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.particles.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&Particle> {
        self.particles.iter().find(|p| p.name == name)
    }

    /// Lightest particle, used as the reference mass for the Landau pole.
    pub fn lightest(&self) -> Option<&Particle> {
        self.particles
            .iter()
            .min_by(|a, b| a.mass.total_cmp(&b.mass))
    }

    /// Σ deg·(q/e)² as an exact rational.
    pub fn charge_sum_exact(&self) -> Ratio<i64> {
        self.particles
            .iter()
            .map(Particle::weight_exact)
            .fold(Ratio::zero(), |acc, w| acc + w)
    }

    /// Σ deg·(q/e)².
    pub fn charge_sum(&self) -> f64 {
        self.charge_sum_exact().to_f64().unwrap_or(f64::NAN)
    }

    /// Disjoint union; fails on a shared name.
    pub fn union(&self, other: &ParticleSet, label: impl Into<String>) -> Result<Self> {
        let mut particles = self.particles.clone();
        particles.extend(other.particles.iter().cloned());
        ParticleSet::new(label, particles)
    }
}

/// Free-function form of [`ParticleSet::charge_sum`].
pub fn charge_sum(set: &ParticleSet) -> f64 {
    set.charge_sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn electron() -> Particle {
        Particle::new(
            "e-",
            ChargeRatio::new(-1, 1),
            9.1093837015e-31,
            1,
            ParticleKind::Lepton,
        )
        .unwrap()
    }

    #[test]
    fn bundled_counts() {
        assert_eq!(ParticleSet::bundled("SM-fermions").unwrap().len(), 9);
        assert_eq!(ParticleSet::bundled("SM-with-W").unwrap().len(), 10);
    }

    #[test]
    fn standard_model_sums() {
        // 3 leptons * 1 + 3 up-type * 3 colours * 4/9 + 3 down-type * 3 * 1/9 = 3 + 4 + 1
        let fermions = ParticleSet::bundled("SM-fermions").unwrap();
        assert_eq!(fermions.charge_sum_exact(), Ratio::from_integer(8));
        assert_eq!(fermions.charge_sum(), 8.0);
        let with_w = ParticleSet::bundled("SM-with-W").unwrap();
        assert_eq!(with_w.charge_sum(), 9.0);
    }

    #[test]
    fn single_electron_and_empty() {
        let set = ParticleSet::new("e", vec![electron()]).unwrap();
        assert_eq!(charge_sum(&set), 1.0);
        let empty = ParticleSet::parse("none", "").unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.charge_sum(), 0.0);
    }

    #[test]
    fn unknown_bundled_set() {
        assert_eq!(
            ParticleSet::bundled("MSSM").unwrap_err(),
            Error::UnknownSet("MSSM".into())
        );
    }

    #[test]
    fn zero_charge_row_rejected() {
        let text = "name,charge_ratio,mass_kg,degeneracy,kind\ne-,-1,9.1e-31,1,lepton\nZ,0,1.6e-25,1,boson\n";
        match ParticleSet::parse("t", text).unwrap_err() {
            Error::Row { row, name, reason } => {
                assert_eq!(row, 2);
                assert_eq!(name, "Z");
                assert!(reason.contains("charge"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn nonpositive_mass_and_duplicates_rejected() {
        let text = "name,charge_ratio,mass_kg,degeneracy,kind\nx,1,-1e-30,1,lepton\n";
        assert!(matches!(
            ParticleSet::parse("t", text),
            Err(Error::Row { row: 1, .. })
        ));
        let text =
            "name,charge_ratio,mass_kg,degeneracy,kind\nx,1,1e-30,1,lepton\nx,1,2e-30,1,lepton\n";
        assert!(matches!(
            ParticleSet::parse("t", text),
            Err(Error::Row { row: 2, ref reason, .. }) if reason == "duplicate name"
        ));
    }

    #[test]
    fn bad_header_rejected() {
        let text = "name,charge,mass\n";
        assert!(matches!(
            ParticleSet::parse("t", text),
            Err(Error::Schema(_))
        ));
    }

    #[test]
    fn charge_ratio_parsing() {
        assert_eq!(
            "2/3".parse::<ChargeRatio>().unwrap(),
            ChargeRatio::new(2, 3)
        );
        assert_eq!(
            "-1/3".parse::<ChargeRatio>().unwrap(),
            ChargeRatio::new(-1, 3)
        );
        assert_eq!(
            "-0.5".parse::<ChargeRatio>().unwrap(),
            ChargeRatio::new(-1, 2)
        );
        assert_eq!("+1".parse::<ChargeRatio>().unwrap(), ChargeRatio::new(1, 1));
        assert!("1/0".parse::<ChargeRatio>().is_err());
        assert!("abc".parse::<ChargeRatio>().is_err());
        assert!(".".parse::<ChargeRatio>().is_err());
        assert!("1e3".parse::<ChargeRatio>().is_err());
    }

    #[test]
    fn lightest_is_electron() {
        let set = ParticleSet::bundled("SM-with-W").unwrap();
        assert_eq!(set.lightest().unwrap().name, "e-");
    }

    #[test]
    fn union_is_additive_and_rejects_overlap() {
        let a = ParticleSet::bundled("SM-fermions").unwrap();
        let e = ParticleSet::new("e", vec![electron()]).unwrap();
        assert!(a.union(&e, "x").is_err());
        let w = ParticleSet::parse(
            "w",
            "name,charge_ratio,mass_kg,degeneracy,kind\nW+,1,1.43e-25,1,boson\n",
        )
        .unwrap();
        let u = a.union(&w, "u").unwrap();
        assert_eq!(u.charge_sum(), a.charge_sum() + w.charge_sum());
    }
}
