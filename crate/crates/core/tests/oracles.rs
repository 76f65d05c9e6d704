//! Cross-checks against values computed independently of the library's
//! special functions and quadrature.

use siqr::dispersion::{uncertainty_report, ReportConfig};
use siqr::momentum::momentum_density;
use siqr::search::{min_siqr_search, SearchConfig};
use siqr::states::{make_cauchy, make_f_dist, make_gaussian, make_student_t};
use statrs::distribution::{ContinuousCDF, Normal, StudentsT};

/// `K_ν(z) = ∫₀^∞ e^{−z cosh t} cosh(νt) dt` by the trapezoid rule, which
/// converges geometrically for this integrand.
fn bessel_k(nu: f64, z: f64) -> f64 {
    let h = 0.05f64;
    let mut sum = 0.5 * (-z).exp();
    let mut t = h;
    loop {
        let term = (-z * t.cosh()).exp() * (nu * t).cosh();
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
        t += h;
    }
    sum * h
}

fn simpson(g: &dyn Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let h = (b - a) / n as f64;
    let mut s = g(a) + g(b);
    for i in 1..n {
        s += g(a + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    s * h / 3.0
}

/// Upper quartile of an even density on the line, known up to a constant.
/// Works in `u = ln p` so the mass near the origin is resolved.
fn upper_quartile(f: &dyn Fn(f64) -> f64) -> f64 {
    let g = |u: f64| f(u.exp()) * u.exp();
    let (start, stop, step) = (-40.0f64, 4.0f64, 0.05f64);
    let panels = ((stop - start) / step).round() as usize;
    let mut cum = vec![0.0];
    for k in 0..panels {
        let a = start + k as f64 * step;
        let last = *cum.last().unwrap();
        cum.push(last + simpson(&g, a, a + step, 20));
    }
    let half = 0.5 * cum[panels];
    let k = cum.iter().position(|&c| c > half).unwrap() - 1;
    let a = start + k as f64 * step;
    let (mut lo, mut hi) = (a, a + step);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if cum[k] + simpson(&g, a, mid, 20) < half {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (0.5 * (lo + hi)).exp()
}

fn report(wf: &siqr::states::WaveFunction) -> siqr::dispersion::UncertaintyReport {
    uncertainty_report(wf, &ReportConfig::default()).unwrap()
}

#[test]
fn gaussian_quartiles_from_normal_quantile() {
    let z = Normal::new(0.0, 1.0).unwrap().inverse_cdf(0.75);
    for sigma in [0.5, 1.0, 3.0] {
        let r = report(&make_gaussian(0.7, sigma).unwrap());
        assert!((r.siqr_x - sigma * z).abs() < 1e-9);
        assert!((r.siqr_p - z / (2.0 * sigma)).abs() < 1e-9);
        assert!((r.product_over_hbar - z * z / 2.0).abs() < 1e-9);
    }
}

#[test]
fn cauchy_momentum_density_matches_k0_squared() {
    for gamma in [1.0, 2.5] {
        let md = momentum_density(&make_cauchy(0.0, gamma).unwrap(), 1.0).unwrap();
        for p in [0.05, 0.3, 1.0, 2.0] {
            let k = bessel_k(0.0, gamma * p);
            let expect = 2.0 * gamma / std::f64::consts::PI.powi(2) * k * k;
            assert!((md.pdf(p) - expect).abs() < 1e-10 * expect.max(1.0), "gamma {gamma}, p {p}");
        }
    }
}

#[test]
fn cauchy_momentum_quartile_from_oracle_density() {
    let f = |p: f64| bessel_k(0.0, p).powi(2);
    let q3 = upper_quartile(&f);
    for gamma in [1.0, 2.0, 3.0, 4.0] {
        let r = report(&make_cauchy(0.0, gamma).unwrap());
        assert!((r.siqr_p - q3 / gamma).abs() < 1e-7, "gamma {gamma}: {} vs {}", r.siqr_p, q3 / gamma);
        assert!((r.siqr_x - gamma).abs() < 1e-9);
    }
}

#[test]
fn student_t_position_quartiles_from_statrs() {
    for n in [2u32, 3] {
        let q = StudentsT::new(0.0, 1.0, n as f64).unwrap().inverse_cdf(0.75);
        let r = report(&make_student_t(n).unwrap());
        assert!((r.siqr_x - q).abs() < 1e-8, "n {n}");
    }
}

#[test]
fn student_t2_momentum_quartile_from_bessel_oracle() {
    // ψ ∝ (2 + x²)^{-3/4}, so |φ|² ∝ a^{1/2} K_{1/4}(a)² with a = √2 |p|.
    let f = |p: f64| {
        let a = 2f64.sqrt() * p;
        a.sqrt() * bessel_k(0.25, a).powi(2)
    };
    let q3 = upper_quartile(&f);
    let r = report(&make_student_t(2).unwrap());
    assert!((r.siqr_p - q3).abs() < 1e-7, "{} vs {q3}", r.siqr_p);
}

#[test]
fn student_t3_momentum_is_laplace() {
    // |φ|² = √3 e^{−2√3|p|}, whose upper quartile is ln 2 / (2√3).
    let md = momentum_density(&make_student_t(3).unwrap(), 1.0).unwrap();
    for p in [0.0, 0.1, 0.7, 1.5] {
        let expect = 3f64.sqrt() * (-2.0 * 3f64.sqrt() * p).exp();
        assert!((md.pdf(p) - expect).abs() < 1e-9, "p {p}");
    }
    let r = report(&make_student_t(3).unwrap());
    assert!((r.siqr_p - 2f64.ln() / (2.0 * 3f64.sqrt())).abs() < 1e-8);
}

#[test]
fn f52_momentum_density_matches_high_precision_values() {
    // Computed at 30 digits with explicit half-period breakpoints and a
    // two-term asymptotic tail.
    let md = momentum_density(&make_f_dist(5, 2).unwrap(), 1.0).unwrap();
    for (p, expect) in [
        (0.05, 1.37185441636536),
        (0.5, 0.204401068344402),
        (2.0, 0.0277381544174229),
    ] {
        let got = md.pdf(p);
        assert!(((got - expect) / expect).abs() < 1e-8, "p {p}: {got} vs {expect}");
    }
}

#[test]
fn haar_argmin_through_numeric_transform() {
    let cfg = SearchConfig {
        degree: 6,
        samples: 300,
        master_seed: 9,
        ..Default::default()
    };
    let r = min_siqr_search(&cfg).unwrap();
    let wf = r.argmin_state.to_wave_function().without_momentum_density();
    let numeric = uncertainty_report(&wf, &ReportConfig::default()).unwrap();
    assert!(
        (numeric.product_over_hbar - r.objective_min()).abs() < 1e-7,
        "{} vs {}",
        numeric.product_over_hbar,
        r.objective_min()
    );
}
