//! Semi-interquartile ranges of σₓ and σ_y for pure qubit states.
//!
//! States are written in the σₓ eigenbasis as
//! `√p |−x⟩ + e^{iθ} √(1−p) |+x⟩`, with |±y⟩ = (|0⟩ ± i|1⟩)/√2.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use crate::dispersion::discrete_quantile;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QubitState {
    /// Weight on the −x eigenstate.
    pub p: f64,
    pub theta: f64,
}

impl QubitState {
    pub fn new(p: f64, theta: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::param("p", "must lie in [0, 1]"));
        }
        if !theta.is_finite() {
            return Err(Error::param("theta", "must be finite"));
        }
        Ok(Self {
            p,
            theta: theta.rem_euclid(2.0 * PI),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TwoPointDist {
    pub prob_minus: f64,
    pub prob_plus: f64,
}

impl TwoPointDist {
    pub fn new(prob_minus: f64, prob_plus: f64) -> Result<Self> {
        if !(prob_minus >= 0.0 && prob_plus >= 0.0) || ((prob_minus + prob_plus) - 1.0).abs() > 1e-12 {
            return Err(Error::Unnormalized {
                sum: prob_minus + prob_plus,
            });
        }
        Ok(Self {
            prob_minus,
            prob_plus,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
}

pub fn pauli_distribution(s: QubitState, axis: Axis) -> TwoPointDist {
    match axis {
        Axis::X => TwoPointDist {
            prob_minus: s.p,
            prob_plus: 1.0 - s.p,
        },
        Axis::Y => {
            let c = (s.p * (1.0 - s.p)).sqrt() * s.theta.sin();
            // Clamp rounding so both stay in [0, 1].
            let minus = (0.5 * (1.0 - 2.0 * c)).clamp(0.0, 1.0);
            TwoPointDist {
                prob_minus: minus,
                prob_plus: 1.0 - minus,
            }
        }
    }
}

/// Half the quartile spread of a ±1 outcome; 0 or 1.
///
/// The upper quartile uses the strict convention and the lower quartile is
/// its mirror image, `Q1(X) = −Q3(−X)`, so the result is 0 exactly when one
/// outcome has probability above 3/4.
pub fn pauli_siqr(d: TwoPointDist) -> f64 {
    let pts = [(-1.0, d.prob_minus), (1.0, d.prob_plus)];
    let mirrored = [(-1.0, d.prob_plus), (1.0, d.prob_minus)];
    let q3 = discrete_quantile(&pts, 0.75).expect("valid two-point distribution");
    let q1 = -discrete_quantile(&mirrored, 0.75).expect("valid two-point distribution");
    (q3 - q1) / 2.0
}

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub p: f64,
    pub theta: f64,
    pub siqr_x: f64,
    pub siqr_y: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub grid_p: usize,
    pub grid_theta: usize,
    pub points: usize,
    pub min_sum: f64,
    pub pass: bool,
    pub counterexamples: Vec<Counterexample>,
}

fn grid(n: usize, hi: f64, extra: &[f64]) -> Vec<f64> {
    let mut g: Vec<f64> = (0..n).map(|i| hi * i as f64 / (n - 1) as f64).collect();
    g.extend_from_slice(extra);
    g.sort_by(f64::total_cmp);
    g.dedup();
    g
}

/// Evaluates SIQRₓ² + SIQR_y² ≥ 1 over a uniform grid on p ∈ [0, 1] and
/// θ ∈ [0, 2π) plus the boundary points p ∈ {1/4, 3/4}, θ ∈ {π/2, 3π/2}.
/// Any state whose σₓ and σ_y outcomes are both more than 3/4 likely is
/// reported as a counterexample.
pub fn verify_qubit_theorem(grid_p: usize, grid_theta: usize) -> Result<TheoremReport> {
    if grid_p < 2 || grid_theta < 2 {
        return Err(Error::param("grid", "needs at least 2 points per axis"));
    }
    let ps = grid(grid_p, 1.0, &[0.25, 0.75]);
    // θ = 2π duplicates θ = 0, so the uniform θ grid stops one step short.
    let mut thetas = grid(grid_theta + 1, 2.0 * PI, &[FRAC_PI_2, 3.0 * FRAC_PI_2]);
    thetas.retain(|&t| t < 2.0 * PI);

    let mut min_sum = f64::INFINITY;
    let mut counterexamples = Vec::new();
    for &p in &ps {
        let sx = pauli_siqr(pauli_distribution(QubitState { p, theta: 0.0 }, Axis::X));
        for &theta in &thetas {
            let sy = pauli_siqr(pauli_distribution(QubitState { p, theta }, Axis::Y));
            let sum = sx * sx + sy * sy;
            min_sum = min_sum.min(sum);
            if sum < 1.0 {
                counterexamples.push(Counterexample {
                    p,
                    theta,
                    siqr_x: sx,
                    siqr_y: sy,
                });
            }
        }
    }
    Ok(TheoremReport {
        grid_p,
        grid_theta,
        points: ps.len() * thetas.len(),
        min_sum,
        pass: counterexamples.is_empty(),
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(p: f64, t: f64) -> QubitState {
        QubitState::new(p, t).unwrap()
    }

    #[test]
    fn distributions() {
        let d = pauli_distribution(st(1.0, 0.3), Axis::X);
        assert_eq!((d.prob_minus, d.prob_plus), (1.0, 0.0));
        let d = pauli_distribution(st(0.5, FRAC_PI_2), Axis::Y);
        assert!(d.prob_minus.abs() < 1e-15 && (d.prob_plus - 1.0).abs() < 1e-15);
        let d = pauli_distribution(st(0.75, FRAC_PI_2), Axis::Y);
        let h = 3f64.sqrt() / 2.0;
        assert!((d.prob_minus - 0.5 * (1.0 - h)).abs() < 1e-15);
        assert!((d.prob_plus - 0.5 * (1.0 + h)).abs() < 1e-15);
    }

    #[test]
    fn siqr_values() {
        assert_eq!(pauli_siqr(TwoPointDist::new(0.8, 0.2).unwrap()), 0.0);
        assert_eq!(pauli_siqr(TwoPointDist::new(0.5, 0.5).unwrap()), 1.0);
        assert_eq!(pauli_siqr(TwoPointDist::new(0.75, 0.25).unwrap()), 1.0);
        assert_eq!(pauli_siqr(TwoPointDist::new(0.25, 0.75).unwrap()), 1.0);
        assert_eq!(pauli_siqr(TwoPointDist::new(0.1, 0.9).unwrap()), 0.0);
    }

    #[test]
    fn siqr_x_zero_iff_outside_quarter_band() {
        for i in 0..=400 {
            let p = i as f64 / 400.0;
            let sx = pauli_siqr(pauli_distribution(st(p, 0.0), Axis::X));
            assert_eq!(sx == 0.0, !(0.25..=0.75).contains(&p), "p = {p}");
        }
    }

    #[test]
    fn named_points() {
        let s = st(1.0, 0.0);
        assert_eq!(pauli_siqr(pauli_distribution(s, Axis::X)), 0.0);
        assert_eq!(pauli_siqr(pauli_distribution(s, Axis::Y)), 1.0);
        let s = st(0.5, 0.0);
        assert_eq!(pauli_siqr(pauli_distribution(s, Axis::X)), 1.0);
        assert_eq!(pauli_siqr(pauli_distribution(s, Axis::Y)), 1.0);
    }

    #[test]
    fn theta_periodic() {
        for &(p, t) in &[(0.9, 0.4), (0.75, FRAC_PI_2), (0.2, 5.0)] {
            let a = pauli_distribution(st(p, t), Axis::Y);
            let b = pauli_distribution(st(p, t + 2.0 * PI), Axis::Y);
            assert!((a.prob_minus - b.prob_minus).abs() < 1e-12);
            assert_eq!(pauli_siqr(a), pauli_siqr(b));
        }
    }

    #[test]
    fn both_spreads_vanish_off_the_axes() {
        let s = st(0.8, FRAC_PI_2);
        let dx = pauli_distribution(s, Axis::X);
        let dy = pauli_distribution(s, Axis::Y);
        assert!((dy.prob_plus - 0.9).abs() < 1e-12);
        assert_eq!(pauli_siqr(dx) + pauli_siqr(dy), 0.0);
    }

    #[test]
    fn grid_counterexamples_are_exactly_the_doubly_sharp_states() {
        let r = verify_qubit_theorem(101, 101).unwrap();
        assert!(!r.pass);
        assert_eq!(r.min_sum, 0.0);
        for c in &r.counterexamples {
            let s = st(c.p, c.theta);
            let mx = pauli_distribution(s, Axis::X);
            let my = pauli_distribution(s, Axis::Y);
            assert!(mx.prob_minus.max(mx.prob_plus) > 0.75);
            assert!(my.prob_minus.max(my.prob_plus) > 0.75);
        }
        // Along the axes one of the two spreads is always 1.
        let r = verify_qubit_theorem(2, 4).unwrap();
        assert!(r.pass);
        assert!(verify_qubit_theorem(1, 5).is_err());
    }

    #[test]
    fn rejects_bad_state() {
        assert!(QubitState::new(1.5, 0.0).is_err());
        assert!(TwoPointDist::new(0.6, 0.6).is_err());
    }
}
