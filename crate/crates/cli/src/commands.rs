use std::path::PathBuf;

use qed_vacuum::blackbody::{self, SpectralLaw};
use qed_vacuum::critical::{focal_volume_relaxation, limiting_field, FieldVariant};
use qed_vacuum::particles::{ParticleSet, BUNDLED_SETS, DEFAULT_SET};
use qed_vacuum::running::{
    alpha_inverse_at, landau_pole, planck_log_lambda, zeldovich_alpha_inverse, MomentumScale,
};
use qed_vacuum::units::gev_from_wavenumber;
use qed_vacuum::vacuum::{
    induced_polarizability, invert_charge_sum, pair_volume, vacuum_model, VolumeOption,
};
use qed_vacuum::{Error, PhysicalConstants, RunningMode};
use serde_json::{json, Value};

use crate::args::{Command, GlobalArgs, Law, Mode, Show, Variant};
use crate::parse;
use crate::report::{Cell, Report, Table};

pub const CONSTANTS_ENV: &str = "QEDVAC_CONSTANTS";

/// Failures surfaced to the user, split by exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or inputs: exit 2.
    Usage(String),
    /// Library failure; numeric ones exit 3, the rest 2.
    Core(Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_numeric() => 3,
            _ => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<String> for CliError {
    fn from(m: String) -> Self {
        CliError::Usage(m)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

struct Context {
    consts: PhysicalConstants,
    constants_echo: Value,
    global: GlobalArgs,
    warnings: Vec<String>,
}

impl Context {
    fn new(global: GlobalArgs, constants_env: Option<String>) -> CliResult<Self> {
        let path = global
            .constants
            .clone()
            .or_else(|| constants_env.filter(|s| !s.is_empty()).map(PathBuf::from));
        let (consts, source) = match &path {
            Some(p) => (PhysicalConstants::load(p)?, p.display().to_string()),
            None => (PhysicalConstants::bundled(), "bundled".to_string()),
        };
        let constants_echo = json!({
            "source": source,
            "vintage": consts.vintage(),
        });
        Ok(Context {
            consts,
            constants_echo,
            global,
            warnings: Vec::new(),
        })
    }

    fn particle_set(&mut self) -> CliResult<(ParticleSet, Value)> {
        match (&self.global.particles, &self.global.set) {
            (Some(path), set) => {
                if let Some(label) = set {
                    self.warnings.push(format!(
                        "--set {label} ignored because --particles was given"
                    ));
                }
                let s = ParticleSet::load(path)?;
                let echo = set_echo(&s, &path.display().to_string());
                Ok((s, echo))
            }
            (None, set) => {
                let label = set.as_deref().unwrap_or(DEFAULT_SET);
                let s = ParticleSet::bundled(label).map_err(|e| match e {
                    Error::UnknownSet(l) => CliError::Usage(format!(
                        "unknown particle set '{l}' (bundled: {})",
                        BUNDLED_SETS.join(", ")
                    )),
                    other => CliError::Core(other),
                })?;
                let echo = set_echo(&s, "bundled");
                Ok((s, echo))
            }
        }
    }
}

fn set_echo(set: &ParticleSet, source: &str) -> Value {
    json!({ "label": set.label, "source": source, "species": set.len() })
}

fn running_mode(mode: Mode) -> RunningMode {
    match mode {
        Mode::Consistent => RunningMode::Consistent,
        Mode::PaperLiteral => RunningMode::PaperLiteral,
    }
}

const PAPER_LITERAL_WARNING: &str =
    "paper-literal mode uses 1/(3π) in front of the Feynman integral; \
its large-|k| limit is 1/6 of the leading-log running";

fn find_particle<'a>(set: &'a ParticleSet, name: &str) -> CliResult<&'a qed_vacuum::Particle> {
    set.get(name).ok_or_else(|| {
        let known: Vec<&str> = set.particles().iter().map(|p| p.name.as_str()).collect();
        CliError::Usage(format!(
            "unknown particle '{name}' in set {} (known: {})",
            set.label,
            known.join(", ")
        ))
    })
}

pub fn execute(
    command: Command,
    global: GlobalArgs,
    constants_env: Option<String>,
) -> CliResult<Report> {
    let mut ctx = Context::new(global, constants_env)?;
    let mut report = match command {
        Command::Running { k, sweep, mode } => running(&mut ctx, k, sweep, running_mode(mode))?,
        Command::Landau { mode, planck_nu } => landau(&mut ctx, running_mode(mode), planck_nu)?,
        Command::Vacuum { option, show } => vacuum(&mut ctx, option, show)?,
        Command::SumCharges {
            alpha_inverse,
            options,
        } => sum_charges(&mut ctx, alpha_inverse, &options)?,
        Command::Schwinger {
            particle,
            variant,
            intensity,
        } => schwinger(&mut ctx, &particle, variant, intensity)?,
        Command::Focal {
            volume,
            p,
            particle,
        } => focal(&mut ctx, &volume, p, &particle)?,
        Command::Blackbody {
            law,
            temperature,
            nu,
            sweep,
            integrate,
            nu_max,
        } => blackbody_cmd(&mut ctx, law, temperature, nu, sweep, integrate, nu_max)?,
        Command::Particles => particles(&mut ctx)?,
    };
    let mut warnings = std::mem::take(&mut ctx.warnings);
    warnings.append(&mut report.warnings);
    report.warnings = warnings;
    Ok(report)
}

fn running(
    ctx: &mut Context,
    k: Option<String>,
    sweep: Option<String>,
    mode: RunningMode,
) -> CliResult<Report> {
    let (set, set_echo) = ctx.particle_set()?;
    let consts = &ctx.consts;
    let ks = match (k, sweep) {
        (Some(k), _) => vec![parse::wavenumber(&k, consts)?],
        (None, Some(s)) => parse::sweep(&s, |v| parse::wavenumber(v, consts))?,
        (None, None) => return Err(CliError::Usage("give --k or --sweep".into())),
    };

    let mut columns = vec![
        "k_per_m".to_string(),
        "k_gev".into(),
        "alpha_inverse".into(),
        "alpha".into(),
        "relative_alpha_change".into(),
    ];
    for p in set.particles() {
        columns.push(format!("z[{}]", p.name));
    }
    for p in set.particles() {
        columns.push(format!("shift[{}]", p.name));
    }
    let mut table = Table::new(columns);
    let mut points = Vec::with_capacity(ks.len());
    let mut alpha_inverse_at_zero = consts.alpha_inverse_exp();
    for &k in &ks {
        let r = alpha_inverse_at(MomentumScale::Wavenumber(k), &set, consts, mode)?;
        alpha_inverse_at_zero = r.alpha_inverse_at_zero;
        let k_gev = gev_from_wavenumber(k, consts);
        let mut row: Vec<Cell> = vec![
            k.into(),
            k_gev.into(),
            r.alpha_inverse.into(),
            r.alpha().into(),
            r.relative_alpha_change().into(),
        ];
        row.extend(r.per_species_shift.iter().map(|s| Cell::Num(s.z)));
        row.extend(r.per_species_shift.iter().map(|s| Cell::Num(s.shift)));
        table.row(row);
        points.push(json!({
            "k": k,
            "k_gev": k_gev,
            "alpha_inverse": r.alpha_inverse,
            "alpha": r.alpha(),
            "relative_alpha_change": r.relative_alpha_change(),
            "total_shift": r.total_shift(),
            "species": r.per_species_shift,
        }));
    }

    let mut warnings = Vec::new();
    if mode == RunningMode::PaperLiteral {
        warnings.push(PAPER_LITERAL_WARNING.into());
    }
    if set.is_empty() {
        warnings.push("particle set is empty; α does not run".into());
    }
    Ok(Report {
        command: "running",
        inputs_echo: json!({
            "constants": ctx.constants_echo,
            "particle_set": set_echo,
            "mode": mode.as_str(),
            "k_per_m": ks,
        }),
        results: json!({
            "mode": mode.as_str(),
            "alpha_inverse_at_zero": alpha_inverse_at_zero,
            "points": points,
        }),
        warnings,
        table,
    })
}

fn landau(ctx: &mut Context, mode: RunningMode, planck_nu: Option<u32>) -> CliResult<Report> {
    let (set, set_echo) = ctx.particle_set()?;
    let consts = &ctx.consts;
    let pole = landau_pole(&set, consts, mode)?;
    let (mantissa, exponent) = pole.lambda_gev_scientific();
    let lambda_display = format!("{mantissa:.4}e{exponent}");

    let mut table = Table::new([
        "reference",
        "ln_lambda_over_mc",
        "log10_lambda_gev",
        "lambda_gev",
        "residual",
    ]);
    table.row(vec![
        pole.reference_particle.as_str().into(),
        pole.log_lambda.into(),
        pole.log10_lambda_gev.into(),
        lambda_display.as_str().into(),
        pole.residual.into(),
    ]);
    table.notes.push(format!(
        "Landau pole Λ ≈ {lambda_display} GeV/c (ln(Λ/m_{} c) = {:.6})",
        pole.reference_particle, pole.log_lambda
    ));

    let mut results = json!({
        "mode": mode.as_str(),
        "alpha_inverse_at_zero": consts.alpha_inverse_exp(),
        "reference_particle": pole.reference_particle,
        "reference_mass": pole.reference_mass,
        "log_lambda": pole.log_lambda,
        "log10_lambda_gev": pole.log10_lambda_gev,
        "lambda_gev": lambda_display,
        "residual": pole.residual,
    });
    if let Some(nu) = planck_nu {
        let log_planck = planck_log_lambda(pole.reference_mass, consts)?;
        let alpha_inverse = zeldovich_alpha_inverse(nu, log_planck)?;
        table.notes.push(format!(
            "Zel'dovich estimate with Λ at the Planck momentum, ν = {nu}: α⁻¹ = {alpha_inverse:.4}"
        ));
        results["zeldovich"] = json!({
            "nu_types": nu,
            "log_planck_over_mc": log_planck,
            "alpha_inverse": alpha_inverse,
        });
    }

    let mut warnings = Vec::new();
    if mode == RunningMode::PaperLiteral {
        warnings.push(PAPER_LITERAL_WARNING.into());
    }
    Ok(Report {
        command: "landau",
        inputs_echo: json!({
            "constants": ctx.constants_echo,
            "particle_set": set_echo,
            "mode": mode.as_str(),
            "planck_nu": planck_nu,
        }),
        results,
        warnings,
        table,
    })
}

fn vacuum(ctx: &mut Context, option: u8, show: Show) -> CliResult<Report> {
    let option = VolumeOption::from_number(option)
        .ok_or_else(|| CliError::Usage(format!("--option must be 1..5, got {option}")))?;
    let (set, set_echo) = ctx.particle_set()?;
    let consts = &ctx.consts;
    let r = vacuum_model(&set, option, consts)?;

    let eps_exp = consts.epsilon0_exp();
    let c = consts.c_rel();
    let mu_exp = 1.0 / (eps_exp * c * c);
    let rows: [(Show, &str, f64, f64, &str); 4] = [
        (Show::Eps0, "epsilon0", r.epsilon0_model, eps_exp, "F/m"),
        (Show::Mu0, "mu0", r.mu0_model, mu_exp, "H/m"),
        (Show::C, "c", r.c_model, c, "m/s"),
        (
            Show::Alpha,
            "alpha_inverse",
            r.alpha_inverse_model,
            consts.alpha_inverse_exp(),
            "",
        ),
    ];
    let mut table = Table::new(["quantity", "model", "measured", "model/measured", "unit"]);
    let mut shown = serde_json::Map::new();
    for (which, name, model, measured, unit) in rows {
        if show == Show::All || show == which {
            table.row(vec![
                name.into(),
                model.into(),
                measured.into(),
                (model / measured).into(),
                unit.into(),
            ]);
            shown.insert(
                name.to_string(),
                json!({ "model": model, "measured": measured, "unit": unit }),
            );
        }
    }
    table.notes.push(format!(
        "{option}: κ = {}, N = {}, Σ deg·(q/e)² = {}",
        r.kappa,
        option.n_factor().unwrap_or(f64::NAN),
        r.charge_sum
    ));

    let mut species = Vec::with_capacity(set.len());
    for p in set.particles() {
        species.push(json!({
            "name": p.name,
            "mass": p.mass,
            "weight": p.weight(),
            "induced_polarizability": induced_polarizability(p.mass, consts)?,
            "pair_volume": pair_volume(option, p.mass, consts)?.volume,
        }));
    }

    Ok(Report {
        command: "vacuum",
        inputs_echo: json!({
            "constants": ctx.constants_echo,
            "particle_set": set_echo,
            "option": option.number(),
            "show": format!("{show:?}").to_lowercase(),
        }),
        results: json!({
            "option": option.number(),
            "kappa": r.kappa,
            "n_factor": option.n_factor(),
            "charge_sum": r.charge_sum,
            "quantities": shown,
            "species": species,
        }),
        warnings: Vec::new(),
        table,
    })
}

fn sum_charges(ctx: &mut Context, alpha_inverse: Option<f64>, options: &str) -> CliResult<Report> {
    let options: Vec<VolumeOption> = options
        .split(',')
        .map(|s| s.trim().parse::<VolumeOption>())
        .collect::<std::result::Result<_, _>>()?;
    let alpha = alpha_inverse.unwrap_or(ctx.consts.alpha_inverse_exp());
    let est = invert_charge_sum(alpha, &options)?;

    let mut table = Table::new(["option", "n_factor", "charge_sum"]);
    for o in &est.per_option {
        table.row(vec![
            o.option.to_string().into(),
            o.n_factor.into(),
            o.charge_sum.into(),
        ]);
    }
    table.notes.push(format!(
        "Σ(q/e)² = {}   (center {}, halfspread {})",
        est.display,
        crate::report::short(est.center),
        crate::report::short(est.halfspread)
    ));

    let mut standard_model = serde_json::Map::new();
    for label in BUNDLED_SETS {
        let s = ParticleSet::bundled(label)?;
        standard_model.insert(label.to_string(), json!(s.charge_sum()));
        table
            .notes
            .push(format!("{label}: Σ deg·(q/e)² = {}", s.charge_sum_exact()));
    }

    let mut warnings = Vec::new();
    if let Some(o) = options
        .iter()
        .find(|o| !VolumeOption::OSCILLATOR.contains(o))
    {
        warnings.push(format!(
            "{o} is not an oscillator ground-state prescription"
        ));
    }
    Ok(Report {
        command: "sum-charges",
        inputs_echo: json!({
            "constants": ctx.constants_echo,
            "alpha_inverse": alpha,
            "options": options.iter().map(|o| o.number()).collect::<Vec<_>>(),
        }),
        results: json!({
            "alpha_inverse_exp": est.alpha_inverse_exp,
            "per_option": est.per_option,
            "center": est.center,
            "halfspread": est.halfspread,
            "display": est.display,
            "standard_model": standard_model,
        }),
        warnings,
        table,
    })
}

fn field_variant(v: Variant) -> FieldVariant {
    match v {
        Variant::Model => FieldVariant::Model,
        Variant::SauterBohr => FieldVariant::SauterBohr,
    }
}

fn schwinger(
    ctx: &mut Context,
    particle: &str,
    variant: Variant,
    intensity: bool,
) -> CliResult<Report> {
    let (set, set_echo) = ctx.particle_set()?;
    let p = find_particle(&set, particle)?;
    let variant = field_variant(variant);
    let r = limiting_field(p.mass, variant, &ctx.consts)?;

    let mut table = Table::new(["quantity", "value", "unit"]);
    table.row(vec![
        format!("field ({variant})").into(),
        r.field.into(),
        "V/m".into(),
    ]);
    table.row(vec![
        "field (m²c³/eħ)".into(),
        r.conventional_field.into(),
        "V/m".into(),
    ]);
    let mut results = json!({
        "particle": p.name,
        "mass": p.mass,
        "variant": variant.to_string(),
        "factor": variant.factor(),
        "field": r.field,
        "conventional_field": r.conventional_field,
    });
    if intensity {
        table.row(vec![
            "intensity".into(),
            r.intensity_equiv.into(),
            "W/m²".into(),
        ]);
        results["intensity_equiv"] = json!(r.intensity_equiv);
    }
    Ok(Report {
        command: "schwinger",
        inputs_echo: json!({
            "constants": ctx.constants_echo,
            "particle_set": set_echo,
            "particle": p.name,
            "variant": variant.to_string(),
            "intensity": intensity,
        }),
        results,
        warnings: Vec::new(),
        table,
    })
}

fn focal(ctx: &mut Context, volume: &str, p: f64, particle: &str) -> CliResult<Report> {
    let v = parse::volume(volume)?;
    let (set, set_echo) = ctx.particle_set()?;
    let part = find_particle(&set, particle)?;
    let r = focal_volume_relaxation(v, p, part.mass, &ctx.consts)?;

    let mut table = Table::new(["quantity", "value", "unit"]);
    table.row(vec![
        "focal_volume".into(),
        r.focal_volume.into(),
        "m³".into(),
    ]);
    table.row(vec![
        "cell_volume".into(),
        r.cell_volume.into(),
        "m³".into(),
    ]);
    table.row(vec!["n_cells".into(), r.n_cells.into(), "".into()]);
    table.row(vec![
        "per_cell_probability".into(),
        r.per_cell_probability.into(),
        "".into(),
    ]);
    table.row(vec![
        "total_probability".into(),
        r.total_probability.into(),
        "".into(),
    ]);

    let mut results = serde_json::to_value(r).expect("estimate serializes");
    results["particle"] = json!(part.name);
    Ok(Report {
        command: "focal",
        inputs_echo: json!({
            "constants": ctx.constants_echo,
            "particle_set": set_echo,
            "volume_m3": v,
            "p": p,
            "particle": part.name,
        }),
        results,
        warnings: Vec::new(),
        table,
    })
}

fn spectral_law(l: Law) -> SpectralLaw {
    match l {
        Law::Rj => SpectralLaw::Rj,
        Law::Planck1 => SpectralLaw::Planck1,
        Law::Planck2 => SpectralLaw::Planck2,
    }
}

fn blackbody_cmd(
    ctx: &mut Context,
    law: Law,
    temperature: f64,
    nu: Option<f64>,
    sweep: Option<String>,
    integrate: bool,
    nu_max: Option<f64>,
) -> CliResult<Report> {
    let law = spectral_law(law);
    let consts = &ctx.consts;
    let mut warnings = Vec::new();

    if integrate {
        let nu_max = nu_max.ok_or_else(|| CliError::Usage("--integrate needs --nu-max".into()))?;
        let r = blackbody::spectral_integral(law, temperature, nu_max, consts)?;
        let stefan_boltzmann = blackbody::radiation_constant(consts) * temperature.powi(4);
        let mut table = Table::new([
            "law",
            "temperature",
            "nu_max",
            "energy_density",
            "error_estimate",
        ]);
        table.row(vec![
            law.to_string().into(),
            temperature.into(),
            nu_max.into(),
            r.energy_density.into(),
            r.error_estimate.into(),
        ]);
        table.notes.push(format!(
            "aT⁴ = {} J/m³ (full-spectrum Stefan–Boltzmann value)",
            crate::report::short(stefan_boltzmann)
        ));
        if law != SpectralLaw::Planck1 {
            warnings.push(format!(
                "{law} has no finite full-spectrum limit; the result grows with --nu-max"
            ));
        }
        return Ok(Report {
            command: "blackbody",
            inputs_echo: json!({
                "constants": ctx.constants_echo,
                "law": law,
                "temperature": temperature,
                "nu_max": nu_max,
                "integrate": true,
            }),
            results: json!({
                "law": law,
                "temperature": temperature,
                "nu_max": nu_max,
                "energy_density": r.energy_density,
                "error_estimate": r.error_estimate,
                "stefan_boltzmann": stefan_boltzmann,
            }),
            warnings,
            table,
        });
    }

    let nus = match (nu, sweep) {
        (Some(nu), _) => vec![nu],
        (None, Some(s)) => parse::sweep(&s, parse::plain_number)?,
        (None, None) => {
            return Err(CliError::Usage(
                "give --nu, --sweep or --integrate --nu-max".into(),
            ))
        }
    };
    let thermal = consts.boltzmann_k() * temperature / consts.planck_h();
    let mut table = Table::new(["frequency", "x", "density"]);
    let mut samples = Vec::with_capacity(nus.len());
    for &f in &nus {
        let s = blackbody::spectral_sample(law, f, temperature, consts)?;
        let x = f / thermal;
        table.row(vec![f.into(), x.into(), s.density.into()]);
        samples.push(json!({ "frequency": f, "x": x, "density": s.density }));
    }
    Ok(Report {
        command: "blackbody",
        inputs_echo: json!({
            "constants": ctx.constants_echo,
            "law": law,
            "temperature": temperature,
            "frequencies": nus,
            "integrate": false,
        }),
        results: json!({
            "law": law,
            "temperature": temperature,
            "samples": samples,
        }),
        warnings,
        table,
    })
}

fn particles(ctx: &mut Context) -> CliResult<Report> {
    let (set, set_echo) = ctx.particle_set()?;
    let mut table = Table::new([
        "name",
        "charge_ratio",
        "mass_kg",
        "degeneracy",
        "kind",
        "weight",
    ]);
    for p in set.particles() {
        table.row(vec![
            p.name.as_str().into(),
            p.charge_ratio.to_string().into(),
            p.mass.into(),
            p.degeneracy.into(),
            format!("{:?}", p.kind).to_lowercase().into(),
            p.weight_exact().to_string().into(),
        ]);
    }
    table
        .notes
        .push(format!("Σ deg·(q/e)² = {}", set.charge_sum_exact()));
    let mut warnings = Vec::new();
    if set.is_empty() {
        warnings.push("particle set is empty".into());
    }
    Ok(Report {
        command: "particles",
        inputs_echo: json!({
            "constants": ctx.constants_echo,
            "particle_set": set_echo,
        }),
        results: json!({
            "label": set.label,
            "particles": set.particles(),
            "charge_sum": set.charge_sum(),
            "charge_sum_exact": set.charge_sum_exact().to_string(),
        }),
        warnings,
        table,
    })
}
