//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails or runs over its time budget.

mod common;

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{run_bin, with_flags, FORMATS, INVOCATIONS};
use qed_vacuum::blackbody::{radiation_constant, spectral_integral, SpectralLaw};
use qed_vacuum::critical::{limiting_field, FieldVariant};
use qed_vacuum::particles::{ChargeRatio, Particle, ParticleKind, ParticleSet};
use qed_vacuum::running::{
    alpha_inverse_at, feynman_integral, landau_pole, leading_log_alpha_inverse, MomentumScale,
    RunningMode,
};
use qed_vacuum::units::wavenumber_from_gev;
use qed_vacuum::vacuum::{alpha_inverse_model, vacuum_model, VolumeOption};
use qed_vacuum::PhysicalConstants;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<String, String>;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn c1_sum_charges_golden() -> Outcome {
    let out = run_bin(
        &[
            "sum-charges",
            "--alpha-inverse",
            "137.035999",
            "--format",
            "json",
            "--no-banner",
        ],
        None,
    );
    if out.status.code() != Some(0) {
        return Err(format!("exit {:?}", out.status.code()));
    }
    let v: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let r = &v["results"];
    let display = r["display"].as_str().unwrap_or_default();
    let center = r["center"].as_f64().unwrap_or(f64::NAN);
    let half = r["halfspread"].as_f64().unwrap_or(f64::NAN);

    // independent arithmetic: S = α⁻¹ / (2πN), N4 = (4/π)^{3/2}, N5 = 2^{3/2}
    let s4 = 137.035999 / (2.0 * PI * (4.0 / PI).powf(1.5));
    let s5 = 137.035999 / (2.0 * PI * 2f64.powf(1.5));
    let (c_ref, h_ref) = ((s4 + s5) / 2.0, (s4 - s5) / 2.0);
    check(
        display == "11.5 ± 3.8"
            && (center - c_ref).abs() < 1e-3
            && (half - h_ref).abs() < 1e-3
            && (center - 11.45).abs() < 0.01
            && (half - 3.74).abs() < 0.01,
        format!("display \"{display}\", center {center:.6}, halfspread {half:.6}"),
    )
}

fn c2_standard_model_sums() -> Outcome {
    let f = ParticleSet::bundled("SM-fermions").map_err(|e| e.to_string())?;
    let w = ParticleSet::bundled("SM-with-W").map_err(|e| e.to_string())?;
    let (ef, ew) = (f.charge_sum_exact(), w.charge_sum_exact());
    check(
        ef == 8.into() && ew == 9.into() && f.charge_sum() == 8.0 && w.charge_sum() == 9.0,
        format!("SM-fermions = {ef}, SM-with-W = {ew}"),
    )
}

fn random_set(rng: &mut ChaCha8Rng, index: usize) -> ParticleSet {
    let n = rng.gen_range(1..=15);
    let particles = (0..n)
        .map(|i| {
            let denom = [1, 2, 3][rng.gen_range(0..3)];
            let mut numer = rng.gen_range(1..=3);
            if rng.gen_bool(0.5) {
                numer = -numer;
            }
            let mass = 10f64.powf(rng.gen_range(-32.0..-22.0));
            Particle::new(
                format!("r{index}_{i}"),
                ChargeRatio::new(numer, denom),
                mass,
                rng.gen_range(1..=3),
                ParticleKind::Lepton,
            )
            .expect("valid random particle")
        })
        .collect();
    ParticleSet::new(format!("random-{index}"), particles).expect("unique names")
}

fn c3_speed_of_light() -> Outcome {
    let consts = PhysicalConstants::bundled();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_c0de);
    let mut worst = 0.0f64;
    let mut count = 0;
    for i in 0..1000 {
        let set = random_set(&mut rng, i);
        for option in VolumeOption::FINITE {
            let r = vacuum_model(&set, option, &consts).map_err(|e| e.to_string())?;
            worst = worst.max(rel(r.c_model, consts.c_rel()));
            count += 1;
        }
    }
    check(
        worst < 1e-12,
        format!("{count} evaluations, worst relative error {worst:.2e}"),
    )
}

fn c4_model_alpha_values() -> Outcome {
    let set = ParticleSet::bundled("SM-with-W").map_err(|e| e.to_string())?;
    let a4 = alpha_inverse_model(&set, VolumeOption::Opt4).map_err(|e| e.to_string())?;
    let a5 = alpha_inverse_model(&set, VolumeOption::Opt5).map_err(|e| e.to_string())?;
    let i4 = 2.0 * PI * 9.0 * (4.0 / PI).powf(1.5);
    let i5 = 2.0 * PI * 9.0 * 2f64.powf(1.5);
    check(
        rel(a4, i4) < 1e-3 && rel(a5, i5) < 1e-3 && rel(a4, 81.25) < 1e-3 && rel(a5, 159.92) < 1e-3,
        format!("opt4 {a4:.4}, opt5 {a5:.4}"),
    )
}

/// Midpoint rule with Neumaier-compensated summation.
fn brute_force(z: f64, panels: usize) -> f64 {
    let h = 1.0 / panels as f64;
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for i in 0..panels {
        let x = (i as f64 + 0.5) * h;
        let u = x * (1.0 - x);
        let term = u * (u * z).ln_1p();
        let t = sum + term;
        if sum.abs() >= term.abs() {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }
    (sum + comp) * h
}

fn c5_quadrature_oracle() -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for z in [1e-3, 1.0, 1e3, 1e8] {
        let got = feynman_integral(z).map_err(|e| e.to_string())?;
        let oracle = brute_force(z, 10_000_000);
        let err = (got - oracle).abs();
        ok &= err < 1e-8;
        details.push(format!("z={z:e}: |Δ|={err:.1e}"));
    }
    let z = 1e-6;
    let small = rel(feynman_integral(z).map_err(|e| e.to_string())?, z / 30.0);
    ok &= small < 1e-3;
    details.push(format!("series rel {small:.1e}"));
    let z = 1e12;
    let asym = rel(
        feynman_integral(z).map_err(|e| e.to_string())?,
        (z.ln() - 5.0 / 3.0) / 6.0,
    );
    ok &= asym < 1e-3;
    details.push(format!("asymptote rel {asym:.1e}"));
    check(ok, details.join(", "))
}

fn c6_few_percent_running() -> Outcome {
    let consts = PhysicalConstants::bundled();
    let set = ParticleSet::bundled("SM-with-W").map_err(|e| e.to_string())?;
    let k = wavenumber_from_gev(100.0, &consts);
    let r = alpha_inverse_at(
        MomentumScale::Wavenumber(k),
        &set,
        &consts,
        RunningMode::Consistent,
    )
    .map_err(|e| e.to_string())?;
    let change = r.relative_alpha_change();
    check(
        (0.02..=0.10).contains(&change),
        format!("Δα/α = {change:.4} at 100 GeV/c"),
    )
}

fn c7_landau_round_trip() -> Outcome {
    let consts = PhysicalConstants::bundled();
    let single = ParticleSet::new(
        "single",
        vec![Particle::new(
            "e-",
            ChargeRatio::new(-1, 1),
            9.109_383_701_5e-31,
            1,
            ParticleKind::Lepton,
        )
        .map_err(|e| e.to_string())?],
    )
    .map_err(|e| e.to_string())?;
    let pole = landau_pole(&single, &consts, RunningMode::Consistent).map_err(|e| e.to_string())?;
    let closed = 1.5 * PI * consts.alpha_inverse_exp();
    let single_err = rel(pole.log_lambda, closed);

    let multi = ParticleSet::bundled("SM-with-W").map_err(|e| e.to_string())?;
    let pole_m =
        landau_pole(&multi, &consts, RunningMode::Consistent).map_err(|e| e.to_string())?;
    let residual = leading_log_alpha_inverse(&multi, pole_m.log_lambda, RunningMode::Consistent)
        - consts.alpha_inverse_exp();
    check(
        single_err < 1e-9 && residual.abs() < 1e-9 && pole_m.residual.abs() < 1e-9,
        format!(
            "single ln(Λ/mc) = {:.6} (rel {single_err:.1e}), SM-with-W residual {residual:.1e}",
            pole.log_lambda
        ),
    )
}

fn c8_schwinger_field() -> Outcome {
    let consts = PhysicalConstants::bundled();
    let m = 9.109_383_701_5e-31;
    let model = limiting_field(m, FieldVariant::Model, &consts).map_err(|e| e.to_string())?;
    let sb = limiting_field(m, FieldVariant::SauterBohr, &consts).map_err(|e| e.to_string())?;
    let plug_in = 4.0 * m * m * 299_792_458f64.powi(3) / (1.602_176_634e-19 * 1.054_571_817e-34);
    check(
        rel(model.field, plug_in) < 1e-3
            && rel(model.field, 5.29e18) < 1e-3
            && sb.field == model.field / 2.0,
        format!(
            "model {:.5e} V/m, sauter-bohr {:.5e} V/m",
            model.field, sb.field
        ),
    )
}

fn c9_stefan_boltzmann() -> Outcome {
    let consts = PhysicalConstants::bundled();
    let t = 1000.0;
    let nu_max = 100.0 * consts.boltzmann_k() * t / consts.planck_h();
    let r =
        spectral_integral(SpectralLaw::Planck1, t, nu_max, &consts).map_err(|e| e.to_string())?;
    let at4 = radiation_constant(&consts) * t.powi(4);
    let err = rel(r.energy_density, at4);
    check(
        err < 1e-6,
        format!(
            "u = {:.9e} J/m³, aT⁴ = {at4:.9e}, rel {err:.1e}",
            r.energy_density
        ),
    )
}

/// Least-squares slope of ln y against ln x.
fn fitted_exponent(xs: &[f64], ys: &[f64]) -> f64 {
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let n = lx.len() as f64;
    let (mx, my) = (lx.iter().sum::<f64>() / n, ly.iter().sum::<f64>() / n);
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

fn c10_divergence_laws() -> Outcome {
    let consts = PhysicalConstants::bundled();
    let t = 300.0;
    let cutoffs: Vec<f64> = (0..=8)
        .map(|i| 1e15 * 10f64.powf(f64::from(i) / 8.0))
        .collect();
    let mut rj = Vec::new();
    let mut zp = Vec::new();
    for &nu in &cutoffs {
        let integral = |law| spectral_integral(law, t, nu, &consts).map(|r| r.energy_density);
        rj.push(integral(SpectralLaw::Rj).map_err(|e| e.to_string())?);
        let p2 = integral(SpectralLaw::Planck2).map_err(|e| e.to_string())?;
        let p1 = integral(SpectralLaw::Planck1).map_err(|e| e.to_string())?;
        zp.push(p2 - p1);
    }
    let (e3, e4) = (
        fitted_exponent(&cutoffs, &rj),
        fitted_exponent(&cutoffs, &zp),
    );
    check(
        (e3 - 3.0).abs() < 1e-3 && (e4 - 4.0).abs() < 1e-3,
        format!("rj exponent {e3:.6}, planck2−planck1 exponent {e4:.6}"),
    )
}

fn c11_determinism() -> Outcome {
    let mut runs = 0;
    for args in INVOCATIONS {
        for format in FORMATS {
            let argv = with_flags(args, &["--format", format, "--no-banner"]);
            let a = run_bin(&argv, None);
            let b = run_bin(&argv, None);
            if a.stdout != b.stdout || a.stderr != b.stderr || a.status.code() != b.status.code() {
                return Err(format!("output differs for {argv:?}"));
            }
            if a.status.code() != Some(0) {
                return Err(format!("{argv:?} exited {:?}", a.status.code()));
            }
            runs += 1;
        }
    }
    Ok(format!("{runs} invocations byte-identical across two runs"))
}

struct Criterion {
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion {
            name: "sum-charges golden",
            budget: secs(1),
            run: c1_sum_charges_golden,
        },
        Criterion {
            name: "standard-model charge sums",
            budget: secs(1),
            run: c2_standard_model_sums,
        },
        Criterion {
            name: "speed-of-light identity",
            budget: secs(5),
            run: c3_speed_of_light,
        },
        Criterion {
            name: "model α⁻¹ values",
            budget: secs(1),
            run: c4_model_alpha_values,
        },
        Criterion {
            name: "quadrature oracle",
            budget: secs(30),
            run: c5_quadrature_oracle,
        },
        Criterion {
            name: "few-percent running",
            budget: secs(1),
            run: c6_few_percent_running,
        },
        Criterion {
            name: "Landau-pole round trip",
            budget: secs(1),
            run: c7_landau_round_trip,
        },
        Criterion {
            name: "limiting field",
            budget: secs(1),
            run: c8_schwinger_field,
        },
        Criterion {
            name: "Stefan–Boltzmann",
            budget: secs(5),
            run: c9_stefan_boltzmann,
        },
        Criterion {
            name: "divergence laws",
            budget: secs(5),
            run: c10_divergence_laws,
        },
        Criterion {
            name: "determinism",
            budget: None,
            run: c11_determinism,
        },
    ];

    let mut failed = 0;
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let over = c.budget.is_some_and(|b| elapsed > b);
        let (status, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over time budget")),
            (Err(d), _) => ("FAIL", d.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        let budget = c
            .budget
            .map(|b| format!(" / {}s", b.as_secs()))
            .unwrap_or_default();
        println!(
            "{status} [{:>2}] {}: {detail} ({:.3}s{budget})",
            i + 1,
            c.name,
            elapsed.as_secs_f64()
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
