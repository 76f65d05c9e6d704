//! Van Wijngaarden-Dekker-Brent bracketed root finding.

use crate::error::{Error, Result};
use crate::numerics::Interval;

pub const MAX_ITERATIONS: usize = 200;

/// Find a zero of `f` inside `bracket`, which must contain a sign change.
///
/// Brent's method, falling back to bisection when interpolation stalls. The
/// returned point lies within `x_tol` (plus a machine-precision term) of a
/// sign change of `f`.
pub fn brent_root<F>(mut f: F, bracket: Interval, x_tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    if !bracket.is_finite() {
        return Err(Error::InvalidInterval {
            lo: bracket.lo(),
            hi: bracket.hi(),
        });
    }
    if !(x_tol > 0.0) {
        return Err(Error::param("x_tol", "must be positive"));
    }

    let (mut a, mut b) = (bracket.lo(), bracket.hi());
    let (mut fa, mut fb) = (f(a), f(b));
    if fa.is_nan() || fb.is_nan() {
        return Err(Error::NonFiniteIntegrand {
            at: if fa.is_nan() { a } else { b },
        });
    }
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoSignChange {
            lo: a,
            hi: b,
            f_lo: fa,
            f_hi: fb,
        });
    }

    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;

    for _ in 0..MAX_ITERATIONS {
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

        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * x_tol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Ok(b);
        }

        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }

        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = f(b);
        if fb.is_nan() {
            return Err(Error::NonFiniteIntegrand { at: b });
        }
    }

    Err(Error::RootBudgetExhausted {
        best: b,
        iterations: MAX_ITERATIONS,
    })
}
