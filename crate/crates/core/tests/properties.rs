use proptest::prelude::*;

use siqr::dispersion::{uncertainty_report, CdfEvaluator, QuantumState, ReportConfig};
use siqr::hermite::haar_sample;
use siqr::momentum::plancherel_check;
use siqr::numerics::{integrate, Interval, Tolerance};
use siqr::states::{make_cauchy, make_f_dist, make_gaussian, make_student_t, WaveFunction};

fn product(wf: &WaveFunction) -> f64 {
    let cfg = ReportConfig {
        moments: false,
        ..Default::default()
    };
    uncertainty_report(wf, &cfg).unwrap().product_over_hbar
}

fn catalog(index: usize) -> WaveFunction {
    match index {
        0 => make_gaussian(0.0, 1.0).unwrap(),
        1 => make_cauchy(0.0, 1.0).unwrap(),
        2 => make_student_t(2).unwrap(),
        _ => make_student_t(3).unwrap(),
    }
}

fn bump(c: f64, w: f64) -> impl Fn(f64) -> f64 {
    move |x: f64| (-(x - c) * (x - c) / (w * w)).exp() * (1.0 + x * x).sqrt()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quadrature_is_linear(a in -3.0f64..3.0, b in -3.0f64..3.0, c in -2.0f64..2.0, w in 0.3f64..3.0) {
        let f = bump(c, w);
        let g = |x: f64| 1.0 / (1.0 + x * x);
        let line = Interval::real_line();
        let lhs = integrate(|x| a * f(x) + b * g(x), line, 1e-12, 1e-12).unwrap().value;
        let rhs = a * integrate(&f, line, 1e-12, 1e-12).unwrap().value
            + b * integrate(g, line, 1e-12, 1e-12).unwrap().value;
        prop_assert!((lhs - rhs).abs() < 1e-9 * (1.0 + rhs.abs()), "{lhs} vs {rhs}");
    }

    #[test]
    fn quadrature_is_additive(lo in -10.0f64..0.0, mid in 0.0f64..3.0, hi in 3.0f64..12.0, c in -2.0f64..2.0) {
        let f = bump(c, 1.5);
        let whole = integrate(&f, Interval::new(lo, hi).unwrap(), 1e-12, 1e-12).unwrap().value;
        let left = integrate(&f, Interval::new(lo, mid).unwrap(), 1e-12, 1e-12).unwrap().value;
        let right = integrate(&f, Interval::new(mid, hi).unwrap(), 1e-12, 1e-12).unwrap().value;
        prop_assert!((whole - left - right).abs() < 1e-10 * (1.0 + whole.abs()));
    }

    #[test]
    fn cdf_is_monotone(which in 0usize..4, mut xs in prop::collection::vec(-20.0f64..20.0, 2..8)) {
        xs.sort_by(f64::total_cmp);
        let d = catalog(which).position_density();
        let mut ev = CdfEvaluator::new(&d, Tolerance::default());
        let mut last = 0.0;
        for x in xs {
            let (f, e) = ev.eval(x).unwrap();
            prop_assert!((0.0..=1.0).contains(&f));
            prop_assert!(f >= last - e, "F({x}) = {f} < {last}");
            last = f;
        }
    }

    #[test]
    fn quantile_round_trip(which in 0usize..5, level in 0.01f64..0.99) {
        let d = if which == 4 {
            make_f_dist(5, 2).unwrap().position_density()
        } else {
            catalog(which).position_density()
        };
        let mut ev = CdfEvaluator::new(&d, Tolerance::default());
        let (q, achieved) = ev.quantile(level).unwrap();
        let mut fresh = CdfEvaluator::new(&d, Tolerance::default());
        let (f, e) = fresh.eval(q).unwrap();
        prop_assert!((f - level).abs() <= achieved + e, "level {level}: F(q) = {f}, achieved {achieved}");
    }

    #[test]
    fn haar_states_obey_the_variance_bound(seed in any::<u64>(), degree in 0usize..=8) {
        let s = haar_sample(degree, seed).unwrap();
        let r = uncertainty_report(&s, &ReportConfig::default()).unwrap();
        prop_assert!(r.variance_product_over_hbar.unwrap() >= 0.5 - 1e-9);
        prop_assert!(r.product_over_hbar > 0.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn siqr_product_is_dilation_invariant(which in 0usize..4, s in 0.2f64..5.0) {
        let wf = catalog(which);
        let base = product(&wf);
        let scaled = product(&wf.dilate(s).unwrap().without_momentum_density());
        prop_assert!((scaled - base).abs() <= 1e-5, "{} at s = {s}: {scaled} vs {base}", wf.label());
    }

    #[test]
    fn siqr_product_is_translation_invariant(which in 0usize..4, shift in -5.0f64..5.0) {
        let wf = catalog(which);
        let base = product(&wf);
        let moved = product(&wf.translate(shift).unwrap().without_momentum_density());
        prop_assert!((moved - base).abs() <= 1e-5, "{} shifted {shift}: {moved} vs {base}", wf.label());
    }

    #[test]
    fn plancherel_holds(which in 0usize..5, hbar in 0.5f64..2.0) {
        let wf = if which == 4 { make_f_dist(5, 2).unwrap() } else { catalog(which) };
        let norm = plancherel_check(&wf, hbar).unwrap();
        prop_assert!((norm - 1.0).abs() <= 1e-6, "{}: {norm}", wf.label());
    }

    #[test]
    fn plancherel_holds_for_hermite_states(seed in any::<u64>(), degree in 1usize..=6) {
        let wf = haar_sample(degree, seed).unwrap().to_wave_function();
        let norm = plancherel_check(&wf, 1.0).unwrap();
        prop_assert!((norm - 1.0).abs() <= 1e-6, "{norm}");
    }

    #[test]
    fn momentum_density_of_hermite_state_is_consistent(seed in any::<u64>(), degree in 1usize..=5) {
        let s = haar_sample(degree, seed).unwrap();
        let closed = s.momentum_density(1.0, Tolerance::default()).unwrap();
        let numeric = siqr::momentum::momentum_density(&s.to_wave_function().without_momentum_density(), 1.0).unwrap();
        for p in [-1.7, -0.4, 0.0, 0.9, 2.2] {
            prop_assert!((closed.pdf(p) - numeric.pdf(p)).abs() < 1e-9);
        }
    }
}
