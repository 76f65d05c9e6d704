//! Hermite functions and finite superpositions of them.
//!
//! `h_n(u) = (2^n n! √π)^{-1/2} H_n(u) e^{-u²/2}` are the oscillator
//! eigenfunctions with mass·frequency = 1. A state `Σ c_n h_n(x/ℓ)/√ℓ` with
//! `ℓ = √ħ` has momentum amplitude `Σ c_n (-i)^n h_n(pℓ/ħ) √(ℓ/ħ)`, so both
//! densities, their CDFs and all low moments are available in closed form.

use std::collections::BTreeMap;
use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::dispersion::{MomentResult, QuantumState};
use crate::error::{Error, Result};
use crate::numerics::special::erf;
use crate::numerics::{Interval, Tolerance};
use crate::states::{Density, MomentFlags, WaveFunction};

pub const MAX_DEGREE: usize = 64;

fn check_degree(n: usize) -> Result<()> {
    if n > MAX_DEGREE {
        Err(Error::DegreeTooLarge { n, max: MAX_DEGREE })
    } else {
        Ok(())
    }
}

/// The `n`-th orthonormal Hermite function at `x`.
pub fn hermite_fn(n: usize, x: f64) -> Result<f64> {
    check_degree(n)?;
    let mut out = [0.0; MAX_DEGREE + 1];
    fill_hermite(&mut out[..=n], x);
    Ok(out[n])
}

/// `out[k] = h_k(x)` for every `k < out.len()`.
fn fill_hermite(out: &mut [f64], x: f64) {
    if out.is_empty() {
        return;
    }
    out[0] = PI.powf(-0.25) * (-0.5 * x * x).exp();
    if out.len() > 1 {
        out[1] = SQRT_2 * x * out[0];
    }
    for n in 2..out.len() {
        let nf = n as f64;
        out[n] = (2.0 / nf).sqrt() * x * out[n - 1] - ((nf - 1.0) / nf).sqrt() * out[n - 2];
    }
}

/// Coefficients over `h_0..h_d`; the degree is `d`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "HermiteStateRepr", try_from = "HermiteStateRepr")]
pub struct HermiteState {
    coefficients: Vec<Complex64>,
    seed_tag: Option<u64>,
    hbar: f64,
}

#[derive(Serialize, Deserialize)]
struct HermiteStateRepr {
    degree: usize,
    seed_tag: Option<u64>,
    /// Interleaved `re0, im0, re1, im1, ...`.
    coefficients: Vec<f64>,
}

impl From<HermiteState> for HermiteStateRepr {
    fn from(s: HermiteState) -> Self {
        Self {
            degree: s.degree(),
            seed_tag: s.seed_tag,
            coefficients: s.coefficients.iter().flat_map(|c| [c.re, c.im]).collect(),
        }
    }
}

impl TryFrom<HermiteStateRepr> for HermiteState {
    type Error = Error;
    fn try_from(r: HermiteStateRepr) -> Result<Self> {
        if r.coefficients.len() != 2 * (r.degree + 1) {
            return Err(Error::param("coefficients", "expected 2·(degree+1) interleaved values"));
        }
        let c = r
            .coefficients
            .chunks_exact(2)
            .map(|p| Complex64::new(p[0], p[1]))
            .collect();
        let mut s = HermiteState::new(c)?;
        s.seed_tag = r.seed_tag;
        Ok(s)
    }
}

impl HermiteState {
    /// A state from (not necessarily normalized) coefficients.
    pub fn new(coefficients: Vec<Complex64>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::param("coefficients", "must not be empty"));
        }
        check_degree(coefficients.len() - 1)?;
        let norm: f64 = coefficients.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if !(norm > 0.0) || !norm.is_finite() {
            return Err(Error::Unnormalized { sum: norm * norm });
        }
        Ok(Self {
            coefficients: coefficients.into_iter().map(|c| c / norm).collect(),
            seed_tag: None,
            hbar: 1.0,
        })
    }

    /// The `n`-th eigenstate.
    pub fn eigenstate(n: usize) -> Result<Self> {
        check_degree(n)?;
        let mut c = vec![Complex64::new(0.0, 0.0); n + 1];
        c[n] = Complex64::new(1.0, 0.0);
        Self::new(c)
    }

    pub fn with_hbar(mut self, hbar: f64) -> Result<Self> {
        if !(hbar > 0.0) || !hbar.is_finite() {
            return Err(Error::param("hbar", "must be positive and finite"));
        }
        self.hbar = hbar;
        Ok(self)
    }

    pub fn with_seed_tag(mut self, tag: u64) -> Self {
        self.seed_tag = Some(tag);
        self
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn seed_tag(&self) -> Option<u64> {
        self.seed_tag
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// The oscillator length `ℓ = √ħ`.
    pub fn length_scale(&self) -> f64 {
        self.hbar.sqrt()
    }

    /// The same state embedded in a larger basis.
    pub fn padded(&self, degree: usize) -> Result<Self> {
        check_degree(degree)?;
        let mut c = self.coefficients.clone();
        c.resize(degree.max(self.degree()) + 1, Complex64::new(0.0, 0.0));
        Ok(Self {
            coefficients: c,
            seed_tag: self.seed_tag,
            hbar: self.hbar,
        })
    }

    /// Coefficients in the momentum representation, `(-i)^n c_n`.
    fn momentum_coefficients(&self) -> Vec<Complex64> {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(n, &c)| c * minus_i_pow(n))
            .collect()
    }

    /// Only even or only odd `n` present.
    pub fn has_definite_parity(&self) -> bool {
        let even = self.coefficients.iter().step_by(2).any(|c| c.norm_sqr() > 0.0);
        let odd = self.coefficients.iter().skip(1).step_by(2).any(|c| c.norm_sqr() > 0.0);
        !(even && odd)
    }

    /// `(<a>, <a²>, <a†a>)`.
    fn ladder_moments(&self) -> (Complex64, Complex64, f64) {
        let c = &self.coefficients;
        let mut a1 = Complex64::new(0.0, 0.0);
        let mut a2 = Complex64::new(0.0, 0.0);
        let mut number = 0.0;
        for n in 0..c.len() {
            let nf = n as f64;
            number += nf * c[n].norm_sqr();
            if n + 1 < c.len() {
                a1 += c[n].conj() * c[n + 1] * (nf + 1.0).sqrt();
            }
            if n + 2 < c.len() {
                a2 += c[n].conj() * c[n + 2] * ((nf + 1.0) * (nf + 2.0)).sqrt();
            }
        }
        (a1, a2, number)
    }

    /// `(<x>, Var x)` in length units.
    pub fn position_mean_variance(&self) -> (f64, f64) {
        let (a1, a2, number) = self.ladder_moments();
        let l = self.length_scale();
        let mean_u = SQRT_2 * a1.re;
        let second_u = a2.re + number + 0.5;
        (l * mean_u, l * l * (second_u - mean_u * mean_u).max(0.0))
    }

    /// `(<p>, Var p)` in momentum units.
    pub fn momentum_mean_variance(&self) -> (f64, f64) {
        let (a1, a2, number) = self.ladder_moments();
        let k = self.hbar / self.length_scale();
        let mean_v = SQRT_2 * a1.im;
        let second_v = -a2.re + number + 0.5;
        (k * mean_v, k * k * (second_v - mean_v * mean_v).max(0.0))
    }

    /// `√(Var x · Var p)/ħ`.
    pub fn variance_product_over_hbar(&self) -> f64 {
        let (_, vx) = self.position_mean_variance();
        let (_, vp) = self.momentum_mean_variance();
        (vx * vp).sqrt() / self.hbar
    }

    /// A general [`WaveFunction`] view, used to cross-check the closed forms
    /// against the numeric transform.
    pub fn to_wave_function(&self) -> WaveFunction {
        let l = self.length_scale();
        let pos = self.clone();
        let der = self.clone();
        let mom = self.clone();
        let mut params = BTreeMap::new();
        params.insert("degree".to_string(), self.degree() as f64);
        let mut wf = WaveFunction::new("hermite", move |x| state_amplitude(&pos, x))
            .with_derivative(move |x| state_derivative(&der, x))
            .with_momentum_density(move |p, hbar| {
                let m = mom.clone().with_hbar(hbar).unwrap_or_else(|_| mom.clone());
                state_momentum_amplitude(&m, p).norm_sqr()
            })
            .with_moment_flags(MomentFlags::BOTH, MomentFlags::BOTH)
            .with_scale(l)
            .with_center(self.position_mean_variance().0);
        for (k, v) in params {
            wf = wf.with_param(&k, v);
        }
        wf
    }
}

fn minus_i_pow(n: usize) -> Complex64 {
    match n % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, -1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, 1.0),
    }
}

fn superpose(coefficients: &[Complex64], u: f64) -> Complex64 {
    let mut h = [0.0; MAX_DEGREE + 1];
    fill_hermite(&mut h[..coefficients.len()], u);
    coefficients.iter().zip(h.iter()).map(|(&c, &hn)| c * hn).sum()
}

/// `ψ(x) = Σ c_n h_n(x/ℓ)/√ℓ`.
pub fn state_amplitude(s: &HermiteState, x: f64) -> Complex64 {
    let l = s.length_scale();
    superpose(&s.coefficients, x / l) / l.sqrt()
}

/// `φ(p) = Σ c_n (-i)^n h_n(pℓ/ħ) √(ℓ/ħ)`.
pub fn state_momentum_amplitude(s: &HermiteState, p: f64) -> Complex64 {
    let l = s.length_scale();
    let k = s.hbar / l;
    superpose(&s.momentum_coefficients(), p / k) / k.sqrt()
}

fn state_derivative(s: &HermiteState, x: f64) -> Complex64 {
    let l = s.length_scale();
    let u = x / l;
    let d = s.degree();
    let mut h = [0.0; MAX_DEGREE + 2];
    fill_hermite(&mut h[..d + 2], u);
    let mut sum = Complex64::new(0.0, 0.0);
    for (n, &c) in s.coefficients.iter().enumerate() {
        sum += c * hermite_derivative(&h, n);
    }
    sum / (l * l.sqrt())
}

// h_n' = √(n/2) h_{n-1} - √((n+1)/2) h_{n+1}; `h` must extend to index n+1.
fn hermite_derivative(h: &[f64], n: usize) -> f64 {
    let nf = n as f64;
    let down = if n > 0 { (0.5 * nf).sqrt() * h[n - 1] } else { 0.0 };
    down - (0.5 * (nf + 1.0)).sqrt() * h[n + 1]
}

/// `∫_{-∞}^{u} |Σ c_n h_n|²`.
///
/// Uses `∫_{-∞}^u h_m h_n = (h_m' h_n - h_m h_n')/(2(n-m))` off the diagonal
/// and `I_00 = (1 + erf u)/2`, `I_{n+1,n+1} = I_nn - h_n h_{n+1}/√(2(n+1))`.
fn superposition_cdf(coefficients: &[Complex64], u: f64) -> f64 {
    if u == f64::NEG_INFINITY {
        return 0.0;
    }
    if u == f64::INFINITY {
        return 1.0;
    }
    let d = coefficients.len() - 1;
    let mut h = [0.0; MAX_DEGREE + 2];
    fill_hermite(&mut h[..d + 2], u);
    let mut dh = [0.0; MAX_DEGREE + 1];
    for (n, slot) in dh.iter_mut().enumerate().take(d + 1) {
        *slot = hermite_derivative(&h, n);
    }
    let mut diag = 0.5 * (1.0 + erf(u));
    let mut total = 0.0;
    for n in 0..=d {
        if n > 0 {
            diag -= h[n - 1] * h[n] / (2.0 * n as f64).sqrt();
        }
        total += coefficients[n].norm_sqr() * diag;
    }
    for m in 0..=d {
        for n in (m + 1)..=d {
            let w = (coefficients[m].conj() * coefficients[n]).re;
            if w == 0.0 {
                continue;
            }
            let i_mn = (dh[m] * h[n] - h[m] * dh[n]) / (2.0 * (n - m) as f64);
            total += 2.0 * w * i_mn;
        }
    }
    total
}

/// Haar-uniform state on the span of `h_0..h_degree`.
pub fn haar_sample(degree: usize, rng_seed: u64) -> Result<HermiteState> {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    Ok(haar_sample_with(degree, &mut rng)?.with_seed_tag(rng_seed))
}

/// Haar sample from a caller-supplied generator: `2(d+1)` standard normals
/// form the coefficients, which are then normalized.
pub fn haar_sample_with<R: Rng + ?Sized>(degree: usize, rng: &mut R) -> Result<HermiteState> {
    check_degree(degree)?;
    loop {
        let c: Vec<Complex64> = (0..=degree)
            .map(|_| {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                Complex64::new(re, im)
            })
            .collect();
        // An all-zero draw has probability zero but cannot be normalized.
        if c.iter().any(|z| z.norm_sqr() > 0.0) {
            return HermiteState::new(c);
        }
    }
}

impl QuantumState for HermiteState {
    fn label(&self) -> String {
        format!("hermite-{}", self.degree())
    }

    fn params(&self) -> BTreeMap<String, f64> {
        let mut p = BTreeMap::new();
        p.insert("degree".to_string(), self.degree() as f64);
        p
    }

    fn position_density(&self, hbar: f64) -> Result<Density> {
        let s = self.clone().with_hbar(hbar)?;
        let l = s.length_scale();
        let (mean, _) = s.position_mean_variance();
        let pdf_state = s.clone();
        let c = s.coefficients.clone();
        let d = Density::new(move |x| state_amplitude(&pdf_state, x).norm_sqr(), Interval::real_line())
            .with_closed_form_cdf(move |x| superposition_cdf(&c, x / l))
            .with_scale(l);
        Ok(if s.has_definite_parity() {
            d.with_symmetry_center(0.0)
        } else {
            d.with_center(mean)
        })
    }

    fn momentum_density(&self, hbar: f64, _tol: Tolerance) -> Result<Density> {
        let s = self.clone().with_hbar(hbar)?;
        let k = hbar / s.length_scale();
        let (mean, _) = s.momentum_mean_variance();
        let pdf_state = s.clone();
        let c = s.momentum_coefficients();
        let d = Density::new(
            move |p| state_momentum_amplitude(&pdf_state, p).norm_sqr(),
            Interval::real_line(),
        )
        .with_closed_form_cdf(move |p| superposition_cdf(&c, p / k))
        .with_scale(k);
        Ok(if s.has_definite_parity() {
            d.with_symmetry_center(0.0)
        } else {
            d.with_center(mean)
        })
    }

    fn position_moments(&self, hbar: f64, _tol: Tolerance) -> Result<(MomentResult, MomentResult)> {
        let (m, v) = self.clone().with_hbar(hbar)?.position_mean_variance();
        Ok((MomentResult::finite(m), MomentResult::finite(v)))
    }

    fn momentum_moments(&self, hbar: f64, _tol: Tolerance) -> Result<(MomentResult, MomentResult)> {
        let (m, v) = self.clone().with_hbar(hbar)?.momentum_mean_variance();
        Ok((MomentResult::finite(m), MomentResult::finite(v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;
    use crate::dispersion::{uncertainty_report, ReportConfig};
    use crate::momentum::to_momentum_amplitude;
    use crate::numerics::{integrate, integrate_anchored, Anchor};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn ground_state_values() {
        assert!((hermite_fn(0, 0.0).unwrap() - PI.powf(-0.25)).abs() < 1e-15);
        assert!((hermite_fn(0, 0.0).unwrap() - 0.7511).abs() < 1e-4);
        assert_eq!(hermite_fn(1, 0.0).unwrap(), 0.0);
        assert!(matches!(hermite_fn(65, 0.0), Err(Error::DegreeTooLarge { .. })));
    }

    #[test]
    fn matches_explicit_polynomials() {
        // h_2 = (2u² - 1) e^{-u²/2} / (√2 π^{1/4}), h_3 = (2u³ - 3u) e^{-u²/2} / (√3 π^{1/4})
        for &u in &[-1.3f64, 0.2, 2.1] {
            let g = (-0.5 * u * u).exp() * PI.powf(-0.25);
            let h2 = (2.0 * u * u - 1.0) * g / SQRT_2;
            let h3 = (2.0 * u * u * u - 3.0 * u) * g / 3f64.sqrt();
            assert!((hermite_fn(2, u).unwrap() - h2).abs() < 1e-14);
            assert!((hermite_fn(3, u).unwrap() - h3).abs() < 1e-14);
        }
    }

    #[test]
    fn orthonormality() {
        let dot = |m: usize, n: usize| {
            integrate(
                |x| hermite_fn(m, x).unwrap() * hermite_fn(n, x).unwrap(),
                Interval::real_line(),
                1e-13,
                1e-13,
            )
            .unwrap()
            .value
        };
        assert!(dot(2, 3).abs() < 1e-10);
        assert!((dot(2, 2) - 1.0).abs() < 1e-10);
        assert!((dot(40, 40) - 1.0).abs() < 1e-10);
        assert!(dot(7, 9).abs() < 1e-10);
    }

    #[test]
    fn closed_form_cdf_matches_quadrature() {
        let s = HermiteState::new(vec![c(0.3, 0.1), c(-0.5, 0.4), c(0.2, -0.6), c(0.1, 0.2), c(-0.3, 0.0)]).unwrap();
        let cf = s.coefficients().to_vec();
        for &u in &[-2.5, -0.7, 0.0, 0.4, 1.9] {
            let exact = superposition_cdf(&cf, u);
            let quad = integrate(
                |t| superpose(&cf, t).norm_sqr(),
                Interval::new(f64::NEG_INFINITY, u).unwrap(),
                1e-14,
                1e-13,
            )
            .unwrap()
            .value;
            assert!((exact - quad).abs() < 1e-12, "u={u}: {exact} vs {quad}");
        }
        assert!((superposition_cdf(&cf, 40.0) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn closed_form_moments_match_quadrature() {
        let s = HermiteState::new(vec![c(0.3, 0.1), c(-0.5, 0.4), c(0.2, -0.6), c(0.1, 0.2)])
            .unwrap()
            .with_hbar(2.0)
            .unwrap();
        let tol = Tolerance::new(1e-12, 1e-12).unwrap();
        let a = Anchor::default();
        let px = |x: f64| state_amplitude(&s, x).norm_sqr();
        let pp = |p: f64| state_momentum_amplitude(&s, p).norm_sqr();
        let m = |f: &dyn Fn(f64) -> f64, k: i32| integrate_anchored(|x| x.powi(k) * f(x), Interval::real_line(), a, tol).unwrap().value;
        let (mx, vx) = s.position_mean_variance();
        let (mp, vp) = s.momentum_mean_variance();
        assert!((m(&px, 0) - 1.0).abs() < 1e-10 && (m(&pp, 0) - 1.0).abs() < 1e-10);
        assert!((m(&px, 1) - mx).abs() < 1e-10);
        assert!((m(&px, 2) - mx * mx - vx).abs() < 1e-10);
        assert!((m(&pp, 1) - mp).abs() < 1e-10, "{} vs {mp}", m(&pp, 1));
        assert!((m(&pp, 2) - mp * mp - vp).abs() < 1e-10);
    }

    #[test]
    fn momentum_amplitude_matches_numeric_transform() {
        for hbar in [1.0, 2.5] {
            let s = HermiteState::new(vec![c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)])
                .unwrap()
                .with_hbar(hbar)
                .unwrap();
            let wf = s.to_wave_function().without_momentum_density();
            for &p in &[-1.0, 0.0, 1.0] {
                let numeric = to_momentum_amplitude(&wf, p, hbar).unwrap();
                let closed = state_momentum_amplitude(&s, p);
                assert!((numeric - closed).norm() < 1e-9, "p={p}: {numeric} vs {closed}");
            }
        }
    }

    #[test]
    fn eigenfunction_transform_law() {
        for n in 0..=8 {
            let wf = HermiteState::eigenstate(n).unwrap().to_wave_function().without_momentum_density();
            for &x in &[-2.0, -1.0, 0.0, 1.0, 2.0] {
                let numeric = to_momentum_amplitude(&wf, x, 1.0).unwrap();
                let expected = minus_i_pow(n) * hermite_fn(n, x).unwrap();
                assert!((numeric - expected).norm() < 1e-9, "n={n} x={x}");
            }
        }
    }

    #[test]
    fn ground_state_is_minimum_uncertainty() {
        let s = haar_sample(0, 7).unwrap();
        assert!((s.coefficients()[0].norm() - 1.0).abs() < 1e-15);
        assert!((s.variance_product_over_hbar() - 0.5).abs() < 1e-15);
        let r = uncertainty_report(&s, &ReportConfig::default()).unwrap();
        assert!((r.product_over_hbar - 0.2275).abs() < 5e-4);
        assert!((r.variance_product_over_hbar.unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn haar_sampling_is_seeded() {
        let a = haar_sample(4, 1).unwrap();
        let b = haar_sample(4, 1).unwrap();
        let c = haar_sample(4, 2).unwrap();
        assert_eq!(a, b);
        assert_ne!(a.coefficients(), c.coefficients());
        let norm: f64 = a.coefficients().iter().map(|z| z.norm_sqr()).sum();
        assert!((norm - 1.0).abs() < 1e-12);
    }

    #[test]
    fn haar_weights_are_uniform_on_average() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let mut acc = [0.0; 4];
        let n = 100_000;
        for _ in 0..n {
            let s = haar_sample_with(3, &mut rng).unwrap();
            for (a, c) in acc.iter_mut().zip(s.coefficients()) {
                *a += c.norm_sqr();
            }
        }
        for a in acc {
            assert!((a / n as f64 - 0.25).abs() < 0.01);
        }
    }

    #[test]
    fn parity_gives_even_densities() {
        let s = HermiteState::new(vec![c(0.5, 0.1), c(0.0, 0.0), c(-0.3, 0.7)]).unwrap();
        for &x in &[0.3, 1.2] {
            let a = state_amplitude(&s, x).norm_sqr();
            let b = state_amplitude(&s, -x).norm_sqr();
            assert!((a - b).abs() < 1e-14);
            let a = state_momentum_amplitude(&s, x).norm_sqr();
            let b = state_momentum_amplitude(&s, -x).norm_sqr();
            assert!((a - b).abs() < 1e-14);
        }
        assert!(s.has_definite_parity());
    }

    #[test]
    fn serialization_round_trip() {
        let s = haar_sample(2, 99).unwrap();
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(v["degree"], 2);
        assert_eq!(v["seed_tag"], 99);
        assert_eq!(v["coefficients"].as_array().unwrap().len(), 6);
        let back: HermiteState = serde_json::from_value(v).unwrap();
        assert_eq!(back.seed_tag(), s.seed_tag());
        for (a, b) in back.coefficients().iter().zip(s.coefficients()) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn padding_preserves_statistics() {
        let s = haar_sample(2, 5).unwrap();
        let p = s.padded(6).unwrap();
        let cfg = ReportConfig::default();
        let a = uncertainty_report(&s, &cfg).unwrap();
        let b = uncertainty_report(&p, &cfg).unwrap();
        assert!((a.product_over_hbar - b.product_over_hbar).abs() < 1e-12);
    }
}
