//! Special functions used by the closed-form densities.
//!
//! Modified Bessel functions of integer order 0 and 1 are implemented here:
//! ascending series for small arguments and Steed's continued fraction
//! (Temme's CF2 variant) above `x = 2`. Log-gamma and the error function
//! come from `libm`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082;
const SERIES_SWITCH: f64 = 2.0;
const MAX_TERMS: usize = 1000;

pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma(x)
}

pub fn ln_beta(a: f64, b: f64) -> f64 {
    ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)
}

pub fn erf(x: f64) -> f64 {
    libm::erf(x)
}

pub fn erfc(x: f64) -> f64 {
    libm::erfc(x)
}

/// Standard normal cumulative distribution function.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * erfc(-x / std::f64::consts::SQRT_2)
}

/// Modified Bessel function of the first kind, order 0.
pub fn bessel_i0(x: f64) -> f64 {
    let y = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..MAX_TERMS {
        let kf = k as f64;
        term *= y / (kf * kf);
        sum += term;
        if term < f64::EPSILON * sum {
            break;
        }
    }
    sum
}

/// Modified Bessel function of the first kind, order 1.
pub fn bessel_i1(x: f64) -> f64 {
    let y = 0.25 * x * x;
    let mut term = 0.5 * x;
    let mut sum = term;
    for k in 1..MAX_TERMS {
        let kf = k as f64;
        term *= y / (kf * (kf + 1.0));
        sum += term;
        if term.abs() < f64::EPSILON * sum.abs() {
            break;
        }
    }
    sum
}

/// `(K0(x), K1(x))` for `x > 0`.
pub fn bessel_k0_k1(x: f64) -> Result<(f64, f64)> {
    if !(x > 0.0) || x.is_nan() {
        return Err(Error::param("t", "K0 and K1 are only defined for t > 0"));
    }
    if x <= SERIES_SWITCH {
        Ok(k01_series(x))
    } else {
        Ok(k01_continued_fraction(x))
    }
}

/// Modified Bessel function of the second kind, order 0.
pub fn bessel_k0(t: f64) -> Result<f64> {
    bessel_k0_k1(t).map(|(k0, _)| k0)
}

/// Modified Bessel function of the second kind, order 1.
pub fn bessel_k1(t: f64) -> Result<f64> {
    bessel_k0_k1(t).map(|(_, k1)| k1)
}

// K0(x) = -(ln(x/2) + γ) I0(x) + Σ_{k≥1} H_k (x²/4)^k / (k!)²
// K1(x) = 1/x + ln(x/2) I1(x) - (x/4) Σ_{k≥0} [ψ(k+1) + ψ(k+2)] (x²/4)^k / (k!(k+1)!)
fn k01_series(x: f64) -> (f64, f64) {
    let y = 0.25 * x * x;
    let log_half = (0.5 * x).ln();

    let mut k0_sum = 0.0;
    let mut term0 = 1.0; // (x²/4)^k / (k!)²
    let mut harmonic = 0.0;
    for k in 1..MAX_TERMS {
        let kf = k as f64;
        term0 *= y / (kf * kf);
        harmonic += 1.0 / kf;
        let add = term0 * harmonic;
        k0_sum += add;
        if add < f64::EPSILON * k0_sum.abs() {
            break;
        }
    }
    let k0 = -(log_half + EULER_GAMMA) * bessel_i0(x) + k0_sum;

    let mut k1_sum = 0.0;
    let mut term1 = 1.0; // (x²/4)^k / (k!(k+1)!)
    let mut psi_k1 = -EULER_GAMMA; // ψ(k+1)
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        if k > 0 {
            term1 *= y / (kf * (kf + 1.0));
            psi_k1 += 1.0 / kf;
        }
        let psi_k2 = psi_k1 + 1.0 / (kf + 1.0);
        let add = term1 * (psi_k1 + psi_k2);
        k1_sum += add;
        if k > 2 && add.abs() < f64::EPSILON * k1_sum.abs() {
            break;
        }
    }
    let k1 = 1.0 / x + log_half * bessel_i1(x) - 0.25 * x * k1_sum;
    (k0, k1)
}

// Steed's method on Temme's CF2 for order mu = 0; yields K0 and K1 together.
fn k01_continued_fraction(x: f64) -> (f64, f64) {
    let mu = 0.0f64;
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut h = d;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25 - mu * mu;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..MAX_TERMS {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < f64::EPSILON {
            break;
        }
    }
    h *= a1;
    let k0 = (PI / (2.0 * x)).sqrt() * (-x).exp() / s;
    let k1 = k0 * (mu + x + 0.5 - h) / x;
    (k0, k1)
}
