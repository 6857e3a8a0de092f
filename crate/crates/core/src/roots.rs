//! Bracketed scalar root finding (Brent's method).

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootOptions {
    /// Absolute tolerance on x.
    pub x_tol: f64,
    pub max_iter: usize,
}

impl Default for RootOptions {
    fn default() -> Self {
        RootOptions {
            x_tol: 1e-14,
            max_iter: 200,
        }
    }
}

/// Grows `[lo, hi]` geometrically towards larger x until `f` changes sign.
/// Assumes `f` is increasing, so the search only moves `hi`.
pub fn bracket_upward<F>(f: &F, lo: f64, hi: f64, max_steps: usize) -> Result<(f64, f64)>
where
    F: Fn(f64) -> f64,
{
    let f_lo = f(lo);
    if f_lo > 0.0 {
        return Err(Error::Root(format!(
            "f({lo}) = {f_lo} is already positive; no upward bracket"
        )));
    }
    let mut width = (hi - lo).max(1.0);
    let mut upper = hi;
    for _ in 0..max_steps {
        if f(upper) >= 0.0 {
            return Ok((lo, upper));
        }
        width *= 2.0;
        upper = lo + width;
    }
    Err(Error::Root(format!(
        "no sign change found in [{lo}, {upper}]"
    )))
}

/// Finds a root of `f` in `[a, b]`; `f(a)` and `f(b)` must differ in sign.
pub fn brent<F>(f: F, a: f64, b: f64, opts: RootOptions) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let mut a = a;
    let mut b = b;
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::Root(format!(
            "f({a}) = {fa} and f({b}) = {fb} do not bracket a root"
        )));
    }

    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;

    for _ in 0..opts.max_iter {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol = 2.0 * f64::EPSILON * b.abs() + 0.5 * opts.x_tol;
        let m = 0.5 * (c - b);
        if m.abs() <= tol || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= tol && fa.abs() > fb.abs() {
            // inverse quadratic interpolation, or secant when a == c
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                (2.0 * m * s, 1.0 - s)
            } else {
                let q = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0)),
                    (q - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (tol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = d;
            }
        } else {
            d = m;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol { d } else { tol.copysign(m) };
        fb = f(b);
    }
    Err(Error::Root(format!(
        "no convergence after {} iterations (last x = {b})",
        opts.max_iter
    )))
}
