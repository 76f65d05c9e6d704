//! Half-line Fourier integrals `∫_0^L g(u) e^{iωu} du`.
//!
//! The head `[0, n·h]` (with `h = π/|ω|`, half the oscillation period) is
//! integrated adaptively starting from panels of width `h`. Beyond the head
//! the cosine and sine parts are summed one half-period at a time between
//! their respective zeros; for slowly decaying `g` the alternating partial
//! sums are accelerated with Wynn's epsilon algorithm, which handles
//! amplitudes decaying as slowly as `1/u`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::extrapolate::wynn_epsilon;
use super::quadrature::{adaptive, adaptive_breaks, integrate_complex, Anchor, Interval, QuadratureResult, Tolerance};
use crate::error::{Error, Result};

/// Maximum number of half-period panels summed beyond the head.
pub const MAX_TAIL_PANELS: usize = 4000;
const HEAD_WIDTHS: f64 = 8.0;
const MAX_HEAD_PANELS: usize = 20_000;
const EPSILON_WINDOW: usize = 40;
const MIN_TAIL_TERMS: usize = 6;

/// `∫_0^length g(u) e^{iωu} du`; `length = None` means the whole half-line.
///
/// `scale` is the characteristic width of `g` and sets the extent of the
/// head region.
pub fn fourier_half_line<G>(
    g: G,
    omega: f64,
    length: Option<f64>,
    scale: f64,
    tol: Tolerance,
) -> Result<QuadratureResult<Complex64>>
where
    G: Fn(f64) -> Complex64,
{
    let scale = if scale > 0.0 && scale.is_finite() { scale } else { 1.0 };
    if let Some(l) = length {
        if !(l > 0.0) {
            return Ok(QuadratureResult {
                value: Complex64::new(0.0, 0.0),
                abs_error_estimate: 0.0,
                evaluations: 0,
            });
        }
    }

    if omega == 0.0 {
        let domain = match length {
            Some(l) => Interval::new(0.0, l)?,
            None => Interval::positive_half_line(),
        };
        return integrate_complex(&g, domain, Anchor { center: 0.0, scale }, tol);
    }

    let integrand = |u: f64| -> Complex64 {
        let v = g(u);
        if v.re == 0.0 && v.im == 0.0 {
            return v;
        }
        v * Complex64::from_polar(1.0, omega * u)
    };

    let h = PI / omega.abs();
    let mut head_panels = ((HEAD_WIDTHS * scale) / h).ceil().max(1.0) as usize;
    head_panels = head_panels.min(MAX_HEAD_PANELS);
    let mut head_end = head_panels as f64 * h;
    if let Some(l) = length {
        if l <= head_end {
            head_panels = ((l / h).ceil() as usize).max(1);
            head_end = l;
        }
    }

    // Panel edges every half-period, plus a geometric grid on the scale of
    // `g` so a long half-period cannot hide the bulk of `g` from the rule.
    let mut breaks: Vec<f64> = (0..=head_panels).map(|k| (k as f64 * h).min(head_end)).collect();
    let mut x = scale;
    while x < head_end {
        breaks.push(x);
        x = if x < HEAD_WIDTHS * scale { x + scale } else { 2.0 * x };
    }
    breaks.sort_by(f64::total_cmp);
    breaks.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * head_end);
    let head = adaptive_breaks(integrand, &breaks, tol.scaled(0.1), super::quadrature::MAX_EVALUATIONS)?;
    let mut evaluations = head.evaluations;
    let mut err = head.abs_error_estimate;
    let mut sum = head.value;

    if length.is_some_and(|l| l <= head_end) {
        return Ok(QuadratureResult {
            value: sum,
            abs_error_estimate: err,
            evaluations,
        });
    }

    // The cosine and sine components are summed separately, each over panels
    // bounded by its own zeros, so that successive panel integrals alternate
    // in sign. Panels between extrema instead give monotone terms that the
    // epsilon algorithm cannot accelerate.
    let panel_tol = tol.scaled(1e-2);
    let target = tol.target(sum.norm());
    let cos_tail = tail_sum(
        |u| g(u) * (omega * u).cos(),
        head_end,
        0.5 * h,
        h,
        length,
        panel_tol,
        target,
    )?;
    let sin_tail = tail_sum(|u| g(u) * (omega * u).sin(), head_end, h, h, length, panel_tol, target)?;
    evaluations += cos_tail.evaluations + sin_tail.evaluations;
    err += cos_tail.abs_error_estimate + sin_tail.abs_error_estimate;
    sum += cos_tail.value + Complex64::new(0.0, 1.0) * sin_tail.value;
    Ok(QuadratureResult {
        value: sum,
        abs_error_estimate: err,
        evaluations,
    })
}

/// `∫_start^length f` summed panel by panel: the first panel has width
/// `first`, the rest width `h`. Infinite tails are extrapolated.
fn tail_sum<F>(
    f: F,
    start: f64,
    first: f64,
    h: f64,
    length: Option<f64>,
    panel_tol: Tolerance,
    target: f64,
) -> Result<QuadratureResult<Complex64>>
where
    F: Fn(f64) -> Complex64,
{
    let mut sum = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut evaluations = 0;
    let mut re_sums: Vec<f64> = Vec::new();
    let mut im_sums: Vec<f64> = Vec::new();
    let mut small_terms = 0usize;
    let mut last_estimate: Option<Complex64> = None;
    let mut agreed = 0usize;
    let done = |value, abs_error_estimate, evaluations| {
        Ok(QuadratureResult {
            value,
            abs_error_estimate,
            evaluations,
        })
    };

    let mut a = start;
    for j in 0..MAX_TAIL_PANELS {
        let mut b = a + if j == 0 { first } else { h };
        let mut last_panel = false;
        if let Some(l) = length {
            if b >= l {
                b = l;
                last_panel = true;
            }
        }
        let panel = adaptive(&f, a, b, 1, panel_tol, super::quadrature::MAX_EVALUATIONS)?;
        a = b;
        evaluations += panel.evaluations;
        err += panel.abs_error_estimate;
        sum += panel.value;
        if last_panel {
            return done(sum, err, evaluations);
        }

        if panel.value.norm() <= 1e-3 * target {
            small_terms += 1;
            if small_terms >= 3 {
                return done(sum, err + panel.value.norm(), evaluations);
            }
        } else {
            small_terms = 0;
        }

        // The first panel is a partial one and would break the alternation.
        // A finite range is summed exactly, never extrapolated.
        if j == 0 || length.is_some() {
            continue;
        }
        re_sums.push(sum.re);
        im_sums.push(sum.im);
        if re_sums.len() > EPSILON_WINDOW {
            re_sums.remove(0);
            im_sums.remove(0);
        }
        if re_sums.len() < MIN_TAIL_TERMS {
            continue;
        }
        let estimate = Complex64::new(wynn_epsilon(&re_sums), wynn_epsilon(&im_sums));
        if let Some(prev) = last_estimate {
            let change = (estimate - prev).norm();
            if change <= 0.5 * target {
                agreed += 1;
                if agreed >= 2 {
                    return done(estimate, err + change, evaluations);
                }
            } else {
                agreed = 0;
            }
        }
        last_estimate = Some(estimate);
    }

    Err(Error::OscillatoryNonConvergence {
        estimate: last_estimate.unwrap_or(sum).norm(),
        cycles: MAX_TAIL_PANELS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerance {
        Tolerance::new(1e-11, 1e-11).unwrap()
    }

    #[test]
    fn exponential_decay_closed_form() {
        // ∫_0^∞ e^{-u} e^{iωu} du = 1/(1 - iω)
        for &w in &[0.1, 1.0, 7.5, -3.0] {
            let r = fourier_half_line(|u| Complex64::new((-u).exp(), 0.0), w, None, 1.0, tol()).unwrap();
            let exact = Complex64::new(1.0, 0.0) / Complex64::new(1.0, -w);
            assert!((r.value - exact).norm() < 1e-10, "ω={w}: {} vs {}", r.value, exact);
        }
    }

    #[test]
    fn slowly_decaying_one_over_u_tail() {
        // ∫_0^∞ cos(ωu)/(1+u²) du = (π/2) e^{-ω}
        let w = 0.7;
        let r = fourier_half_line(|u| Complex64::new(1.0 / (1.0 + u * u), 0.0), w, None, 1.0, tol())
            .unwrap();
        assert!((r.value.re - 0.5 * PI * (-w).exp()).abs() < 1e-10, "{}", r.value.re);

        // ∫_0^∞ cos(ωu)/sqrt(1+u²) du = K0(ω); amplitude decays only as 1/u
        for &w in &[0.05, 0.5, 2.0] {
            let r = fourier_half_line(|u| Complex64::new(1.0 / (1.0 + u * u).sqrt(), 0.0), w, None, 1.0, tol())
                .unwrap();
            let k0 = crate::numerics::special::bessel_k0(w).unwrap();
            assert!((r.value.re - k0).abs() < 1e-9, "ω={w}: {} vs {k0}", r.value.re);
        }
    }

    #[test]
    fn long_half_period_still_sees_narrow_bump() {
        // ∫_0^∞ e^{-u²} cos(ωu) du = (√π/2) e^{-ω²/4}
        for &w in &[1e-6, 1e-4, 3e-2] {
            let r = fourier_half_line(|u| Complex64::new((-u * u).exp(), 0.0), w, None, 1.0, tol()).unwrap();
            let exact = 0.5 * PI.sqrt() * (-0.25 * w * w).exp();
            assert!((r.value.re - exact).abs() < 1e-11, "ω={w}: {}", r.value.re);
        }
    }

    #[test]
    fn one_over_u_tail_with_correction() {
        // C(ω) = ∫cos(ωu)/(u+1), S(ω) = ∫sin(ωu)/(u+1) at ω = 0.05 (Ci/Si closed form),
        // and ∫cos(ωu)/(u+1)² = 1 - ω S(ω) by parts.
        let (c, s) = (2.492_126_730_649_391_5, 1.397_995_977_944_737_1);
        let w = 0.05;
        let r = fourier_half_line(|u| Complex64::new(1.0 / (u + 1.0), 0.0), w, None, 1.0, tol()).unwrap();
        assert!((r.value.re - c).abs() < 1e-10 && (r.value.im - s).abs() < 1e-10, "{}", r.value);
        let g = |u: f64| Complex64::new(1.0 / (u + 1.0) + 1.0 / ((u + 1.0) * (u + 1.0)), 0.0);
        let r = fourier_half_line(g, w, None, 1.0, tol()).unwrap();
        assert!((r.value.re - (c + 1.0 - w * s)).abs() < 1e-10, "{}", r.value.re);
    }

    #[test]
    fn finite_length() {
        // ∫_0^2 e^{iu} du = (e^{2i} - 1)/i
        let r = fourier_half_line(|_| Complex64::new(1.0, 0.0), 1.0, Some(2.0), 1.0, tol()).unwrap();
        let exact = (Complex64::new(0.0, 2.0).exp() - 1.0) / Complex64::new(0.0, 1.0);
        assert!((r.value - exact).norm() < 1e-12);
    }

    #[test]
    fn long_finite_range_is_not_extrapolated() {
        // ∫_0^L cos(ωu)/(u+1) du over 40.5 half-periods differs from the
        // infinite integral by -Ci(ω(L+1))cos ω - (Si(ω(L+1)) - π/2) sin ω ≠ 0.
        let w = 1.0;
        let l = 40.5 * PI;
        let finite = fourier_half_line(|u| Complex64::new(1.0 / (u + 1.0), 0.0), w, Some(l), 1.0, tol()).unwrap();
        let infinite = fourier_half_line(|u| Complex64::new(1.0 / (u + 1.0), 0.0), w, None, 1.0, tol()).unwrap();
        let direct = crate::numerics::integrate(|u| (w * u).cos() / (u + 1.0), Interval::new(0.0, l).unwrap(), 1e-12, 1e-12)
            .unwrap();
        assert!((finite.value.re - direct.value).abs() < 1e-10);
        assert!((finite.value.re - infinite.value.re).abs() > 1e-3);
    }

    #[test]
    fn zero_frequency_falls_back_to_plain_integral() {
        let r = fourier_half_line(|u| Complex64::new((-u).exp(), 0.0), 0.0, None, 1.0, tol()).unwrap();
        assert!((r.value.re - 1.0).abs() < 1e-11);
    }
}
