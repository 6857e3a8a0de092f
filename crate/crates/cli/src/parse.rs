//! Strict value-with-unit parsing. Numbers use Rust's locale-independent
//! float grammar; the unit suffix is mandatory and must match exactly.

use qed_vacuum::units::wavenumber_from_gev;
use qed_vacuum::PhysicalConstants;

/// Momentum units accepted by `--k`, longest suffix first so that `GeV/c`
/// is never read as `eV/c`. The factor converts to GeV/c, or is `None` for
/// a wavenumber already in 1/m.
const MOMENTUM_UNITS: [(&str, Option<f64>); 10] = [
    ("GeV/c", Some(1.0)),
    ("MeV/c", Some(1e-3)),
    ("keV/c", Some(1e-6)),
    ("eV/c", Some(1e-9)),
    ("GeV", Some(1.0)),
    ("MeV", Some(1e-3)),
    ("keV", Some(1e-6)),
    ("eV", Some(1e-9)),
    ("m^-1", None),
    ("1/m", None),
];

const VOLUME_UNITS: [(&str, f64); 2] = [("um3", 1e-18), ("m3", 1.0)];

fn number(text: &str, what: &str) -> Result<f64, String> {
    let v: f64 = text
        .parse()
        .map_err(|_| format!("{what}: '{text}' is not a number"))?;
    if !v.is_finite() {
        return Err(format!("{what}: '{text}' is not finite"));
    }
    Ok(v)
}

/// Parses `--k`, returning |k| in 1/m.
pub fn wavenumber(text: &str, consts: &PhysicalConstants) -> Result<f64, String> {
    let text = text.trim();
    for (suffix, to_gev) in MOMENTUM_UNITS {
        if let Some(value) = text.strip_suffix(suffix) {
            let v = number(value, "momentum")?;
            if v < 0.0 {
                return Err(format!(
                    "momentum '{text}' must be a nonnegative spacelike magnitude"
                ));
            }
            return Ok(match to_gev {
                Some(f) => wavenumber_from_gev(v * f, consts),
                None => v,
            });
        }
    }
    Err(format!(
        "momentum '{text}' needs a unit suffix (GeV/c, MeV/c, GeV, 1/m, m^-1, ...)"
    ))
}

/// Parses `--volume`, returning m³.
pub fn volume(text: &str) -> Result<f64, String> {
    let text = text.trim();
    for (suffix, factor) in VOLUME_UNITS {
        if let Some(value) = text.strip_suffix(suffix) {
            return Ok(number(value, "volume")? * factor);
        }
    }
    Err(format!("volume '{text}' needs a unit suffix (um3 or m3)"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Lin,
    Log,
}

/// Parses `start:stop:points,log|lin`, converting endpoints with `value`.
pub fn sweep<F>(text: &str, value: F) -> Result<Vec<f64>, String>
where
    F: Fn(&str) -> Result<f64, String>,
{
    let (range, spacing) = text
        .rsplit_once(',')
        .ok_or_else(|| format!("sweep '{text}' must look like start:stop:points,log|lin"))?;
    let spacing = match spacing {
        "lin" => Spacing::Lin,
        "log" => Spacing::Log,
        other => return Err(format!("sweep spacing '{other}' must be log or lin")),
    };
    let parts: Vec<&str> = range.split(':').collect();
    let [start, stop, points] = parts[..] else {
        return Err(format!(
            "sweep '{text}' must look like start:stop:points,log|lin"
        ));
    };
    let start = value(start)?;
    let stop = value(stop)?;
    let points: usize = points
        .parse()
        .map_err(|_| format!("sweep point count '{points}' is not a positive integer"))?;
    grid(start, stop, points, spacing)
}

pub fn grid(start: f64, stop: f64, points: usize, spacing: Spacing) -> Result<Vec<f64>, String> {
    if points == 0 {
        return Err("sweep needs at least one point".into());
    }
    if points == 1 {
        return Ok(vec![start]);
    }
    let last = (points - 1) as f64;
    let values = match spacing {
        Spacing::Lin => (0..points)
            .map(|i| start + (stop - start) * i as f64 / last)
            .collect::<Vec<_>>(),
        Spacing::Log => {
            if start <= 0.0 || stop <= 0.0 {
                return Err("log sweep endpoints must be positive".into());
            }
            let (a, b) = (start.log10(), stop.log10());
            (0..points)
                .map(|i| 10f64.powf(a + (b - a) * i as f64 / last))
                .collect()
        }
    };
    let mut values = values;
    values[0] = start;
    values[points - 1] = stop;
    Ok(values)
}

pub fn plain_number(text: &str) -> Result<f64, String> {
    number(text.trim(), "value")
}
