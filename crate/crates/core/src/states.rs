//! Wave-function data model and the catalog of closed-form states.
//!
//! Catalog states are real, non-negative square roots of classical
//! densities: `ψ(x) = sqrt(f(x))`. Each carries analytic moment metadata for
//! both position and momentum, a characteristic width used to anchor the
//! numerical machinery, and (where one exists) the closed-form momentum
//! density.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::special::{bessel_k0, ln_beta, ln_gamma};
use crate::numerics::Interval;

pub type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
pub type ComplexFn = Arc<dyn Fn(f64) -> Complex64 + Send + Sync>;
/// Momentum density as a function of `(p, ħ)`.
pub type MomentumPdfFn = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Existence {
    Yes,
    No,
    Unknown,
}

impl Existence {
    fn from_bool(b: bool) -> Self {
        if b {
            Existence::Yes
        } else {
            Existence::No
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentFlags {
    pub mean_exists: Existence,
    pub variance_exists: Existence,
}

impl MomentFlags {
    pub const UNKNOWN: Self = Self {
        mean_exists: Existence::Unknown,
        variance_exists: Existence::Unknown,
    };
    pub const BOTH: Self = Self {
        mean_exists: Existence::Yes,
        variance_exists: Existence::Yes,
    };
    pub const NEITHER: Self = Self {
        mean_exists: Existence::No,
        variance_exists: Existence::No,
    };

    pub fn new(mean: bool, variance: bool) -> Self {
        Self {
            mean_exists: Existence::from_bool(mean),
            variance_exists: Existence::from_bool(variance),
        }
    }
}

impl Default for MomentFlags {
    fn default() -> Self {
        Self::UNKNOWN
    }
}

/// A one-dimensional probability density.
#[derive(Clone)]
pub struct Density {
    pdf: RealFn,
    cdf: Option<RealFn>,
    domain: Interval,
    symmetry_center: Option<f64>,
    center: f64,
    scale: f64,
}

impl fmt::Debug for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Density")
            .field("domain", &self.domain)
            .field("symmetry_center", &self.symmetry_center)
            .field("center", &self.center)
            .field("scale", &self.scale)
            .field("closed_form_cdf", &self.cdf.is_some())
            .finish()
    }
}

impl Density {
    pub fn new(pdf: impl Fn(f64) -> f64 + Send + Sync + 'static, domain: Interval) -> Self {
        let center = match (domain.lo().is_finite(), domain.hi().is_finite()) {
            (true, true) => 0.5 * (domain.lo() + domain.hi()),
            (true, false) => domain.lo() + 1.0,
            (false, true) => domain.hi() - 1.0,
            (false, false) => 0.0,
        };
        Self {
            pdf: Arc::new(pdf),
            cdf: None,
            domain,
            symmetry_center: None,
            center,
            scale: 1.0,
        }
    }

    /// Declares the density symmetric about `c`; also used as the bracketing centre.
    pub fn with_symmetry_center(mut self, c: f64) -> Self {
        self.symmetry_center = Some(c);
        self.center = c;
        self
    }

    /// Location (mode or median estimate) from which quantile brackets expand.
    pub fn with_center(mut self, c: f64) -> Self {
        self.center = c;
        self
    }

    pub fn with_scale(mut self, scale: f64) -> Self {
        if scale > 0.0 && scale.is_finite() {
            self.scale = scale;
        }
        self
    }

    pub fn with_closed_form_cdf(mut self, cdf: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        self.cdf = Some(Arc::new(cdf));
        self
    }

    pub fn pdf(&self, x: f64) -> f64 {
        if self.domain.contains(x) {
            (self.pdf)(x)
        } else {
            0.0
        }
    }

    pub fn closed_form_cdf(&self) -> Option<&RealFn> {
        self.cdf.as_ref()
    }

    pub fn domain(&self) -> Interval {
        self.domain
    }

    pub fn symmetry_center(&self) -> Option<f64> {
        self.symmetry_center
    }

    pub fn center(&self) -> f64 {
        self.center
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }
}

/// A normalized pure state in position representation.
#[derive(Clone)]
pub struct WaveFunction {
    label: String,
    params: BTreeMap<String, f64>,
    amplitude: ComplexFn,
    derivative: Option<ComplexFn>,
    momentum_pdf: Option<MomentumPdfFn>,
    moment_flags: MomentFlags,
    momentum_flags: MomentFlags,
    support: Interval,
    center: f64,
    symmetric: bool,
    scale: f64,
    real_valued: bool,
}

impl fmt::Debug for WaveFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WaveFunction")
            .field("label", &self.label)
            .field("params", &self.params)
            .field("moment_flags", &self.moment_flags)
            .field("momentum_flags", &self.momentum_flags)
            .field("support", &self.support)
            .field("closed_form_momentum_density", &self.momentum_pdf.is_some())
            .finish()
    }
}

impl WaveFunction {
    /// A user-supplied state. Moment metadata defaults to unknown.
    pub fn new(label: impl Into<String>, amplitude: impl Fn(f64) -> Complex64 + Send + Sync + 'static) -> Self {
        Self {
            label: label.into(),
            params: BTreeMap::new(),
            amplitude: Arc::new(amplitude),
            derivative: None,
            momentum_pdf: None,
            moment_flags: MomentFlags::UNKNOWN,
            momentum_flags: MomentFlags::UNKNOWN,
            support: Interval::real_line(),
            center: 0.0,
            symmetric: false,
            scale: 1.0,
            real_valued: false,
        }
    }

    /// A real-valued user state.
    pub fn from_real(label: impl Into<String>, amplitude: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        let mut wf = Self::new(label, move |x| Complex64::new(amplitude(x), 0.0));
        wf.real_valued = true;
        wf
    }

    pub fn with_param(mut self, name: &str, value: f64) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }

    pub fn with_derivative(mut self, d: impl Fn(f64) -> Complex64 + Send + Sync + 'static) -> Self {
        self.derivative = Some(Arc::new(d));
        self
    }

    pub fn with_momentum_density(mut self, pdf: impl Fn(f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        self.momentum_pdf = Some(Arc::new(pdf));
        self
    }

    pub fn with_moment_flags(mut self, position: MomentFlags, momentum: MomentFlags) -> Self {
        self.moment_flags = position;
        self.momentum_flags = momentum;
        self
    }

    pub fn with_support(mut self, support: Interval) -> Self {
        self.support = support;
        self
    }

    /// Declares `|ψ|²` symmetric about `c`.
    pub fn with_symmetry_center(mut self, c: f64) -> Self {
        self.center = c;
        self.symmetric = true;
        self
    }

    pub fn with_center(mut self, c: f64) -> Self {
        self.center = c;
        self
    }

    pub fn with_scale(mut self, scale: f64) -> Self {
        if scale > 0.0 && scale.is_finite() {
            self.scale = scale;
        }
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn params(&self) -> &BTreeMap<String, f64> {
        &self.params
    }

    pub fn amplitude(&self, x: f64) -> Complex64 {
        if self.support.contains(x) {
            (self.amplitude)(x)
        } else {
            Complex64::new(0.0, 0.0)
        }
    }

    pub fn derivative(&self, x: f64) -> Option<Complex64> {
        let d = self.derivative.as_ref()?;
        Some(if self.support.contains(x) {
            d(x)
        } else {
            Complex64::new(0.0, 0.0)
        })
    }

    pub fn has_derivative(&self) -> bool {
        self.derivative.is_some()
    }

    pub fn closed_form_momentum_density(&self) -> Option<&MomentumPdfFn> {
        self.momentum_pdf.as_ref()
    }

    pub fn moment_flags(&self) -> MomentFlags {
        self.moment_flags
    }

    pub fn momentum_flags(&self) -> MomentFlags {
        self.momentum_flags
    }

    pub fn support(&self) -> Interval {
        self.support
    }

    pub fn center(&self) -> f64 {
        self.center
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// True when `ψ` is real, which makes the momentum density even.
    pub fn is_real_valued(&self) -> bool {
        self.real_valued
    }

    pub fn position_pdf(&self, x: f64) -> f64 {
        self.amplitude(x).norm_sqr()
    }

    pub fn position_density(&self) -> Density {
        let amp = Arc::clone(&self.amplitude);
        let d = Density::new(move |x| amp(x).norm_sqr(), self.support).with_scale(self.scale);
        if self.symmetric {
            d.with_symmetry_center(self.center)
        } else {
            d.with_center(self.center)
        }
    }

    /// `ψ_s(x) = sqrt(s)·ψ(s·x)`: position widths shrink by `s`, momentum
    /// widths grow by `s`.
    pub fn dilate(&self, s: f64) -> Result<Self> {
        if !(s > 0.0) || !s.is_finite() {
            return Err(Error::param("s", "dilation factor must be positive"));
        }
        let amp = Arc::clone(&self.amplitude);
        let root = s.sqrt();
        let mut out = self.clone();
        out.label = format!("{} (dilated x{s})", self.label);
        out.params.insert("dilation".into(), s);
        out.amplitude = Arc::new(move |x| amp(s * x) * root);
        out.derivative = self.derivative.as_ref().map(|d| {
            let d = Arc::clone(d);
            let factor = s * root;
            Arc::new(move |x: f64| d(s * x) * factor) as ComplexFn
        });
        out.momentum_pdf = self.momentum_pdf.as_ref().map(|m| {
            let m = Arc::clone(m);
            Arc::new(move |p: f64, hbar: f64| m(p / s, hbar) / s) as MomentumPdfFn
        });
        out.support = Interval::new(self.support.lo() / s, self.support.hi() / s)?;
        out.center = self.center / s;
        out.scale = self.scale / s;
        Ok(out)
    }

    /// `ψ(x - shift)`.
    pub fn translate(&self, shift: f64) -> Result<Self> {
        if !shift.is_finite() {
            return Err(Error::param("shift", "must be finite"));
        }
        let amp = Arc::clone(&self.amplitude);
        let mut out = self.clone();
        out.label = format!("{} (shifted {shift})", self.label);
        *out.params.entry("shift".into()).or_insert(0.0) += shift;
        out.amplitude = Arc::new(move |x| amp(x - shift));
        out.derivative = self.derivative.as_ref().map(|d| {
            let d = Arc::clone(d);
            Arc::new(move |x: f64| d(x - shift)) as ComplexFn
        });
        out.support = Interval::new(self.support.lo() + shift, self.support.hi() + shift)?;
        out.center = self.center + shift;
        Ok(out)
    }
}

fn real(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

/// `ψ_C = sqrt(f_C(x; x0, γ))`, the square root of the Cauchy-Lorentz density.
pub fn make_cauchy(x0: f64, gamma: f64) -> Result<WaveFunction> {
    if !(gamma > 0.0) || !gamma.is_finite() {
        return Err(Error::param("gamma", "must be positive"));
    }
    if !x0.is_finite() {
        return Err(Error::param("x0", "must be finite"));
    }
    let norm = (gamma / PI).sqrt();
    Ok(WaveFunction::new("cauchy", move |x| {
        let u = x - x0;
        real(norm / (u * u + gamma * gamma).sqrt())
    })
    .with_derivative(move |x| {
        let u = x - x0;
        let q = u * u + gamma * gamma;
        real(-norm * u / (q * q.sqrt()))
    })
    .with_momentum_density(move |p, hbar| {
        // (2γ/(π²ħ))·K0(γ|p|/ħ)²; diverges logarithmically at p = 0.
        let t = gamma * p.abs() / hbar;
        match bessel_k0(t) {
            Ok(k) => 2.0 * gamma / (PI * PI * hbar) * k * k,
            Err(_) => f64::INFINITY,
        }
    })
    .with_moment_flags(MomentFlags::NEITHER, MomentFlags::BOTH)
    .with_symmetry_center(x0)
    .with_scale(gamma)
    .with_param("x0", x0)
    .with_param("gamma", gamma)
    .into_real())
}

/// `ψ_G = sqrt(f_G(x; μ, σ²))`.
pub fn make_gaussian(mu: f64, sigma: f64) -> Result<WaveFunction> {
    if !(sigma > 0.0) || !sigma.is_finite() {
        return Err(Error::param("sigma", "must be positive"));
    }
    if !mu.is_finite() {
        return Err(Error::param("mu", "must be finite"));
    }
    let norm = (2.0 * PI * sigma * sigma).powf(-0.25);
    let inv4s2 = 1.0 / (4.0 * sigma * sigma);
    Ok(WaveFunction::new("gaussian", move |x| {
        let u = x - mu;
        real(norm * (-u * u * inv4s2).exp())
    })
    .with_derivative(move |x| {
        let u = x - mu;
        real(-2.0 * u * inv4s2 * norm * (-u * u * inv4s2).exp())
    })
    .with_momentum_density(move |p, hbar| {
        let sp = hbar / (2.0 * sigma);
        (-(p * p) / (2.0 * sp * sp)).exp() / ((2.0 * PI).sqrt() * sp)
    })
    .with_moment_flags(MomentFlags::BOTH, MomentFlags::BOTH)
    .with_symmetry_center(mu)
    .with_scale(sigma)
    .with_param("mu", mu)
    .with_param("sigma", sigma)
    .into_real())
}

/// `ψ_S = sqrt(f_S(x; n))` for Student's t with `n` degrees of freedom.
///
/// No closed-form momentum density is attached, so momentum quantities go
/// through the numerical transform.
pub fn make_student_t(n: u32) -> Result<WaveFunction> {
    if n < 1 {
        return Err(Error::param("n", "degrees of freedom must be at least 1"));
    }
    let nf = n as f64;
    let log_c = ln_gamma(0.5 * (nf + 1.0)) - ln_gamma(0.5 * nf) - 0.5 * (nf * PI).ln();
    let amp_norm = (0.5 * log_c).exp();
    let expo = -(nf + 1.0) / 4.0;
    Ok(WaveFunction::new("student-t", move |x| {
        real(amp_norm * (1.0 + x * x / nf).powf(expo))
    })
    .with_derivative(move |x| {
        let q = 1.0 + x * x / nf;
        real(amp_norm * q.powf(expo) * (-(nf + 1.0) / (2.0 * nf)) * x / q)
    })
    .with_moment_flags(MomentFlags::new(n >= 2, n >= 3), MomentFlags::BOTH)
    .with_symmetry_center(0.0)
    .with_scale(1.0)
    .with_param("n", nf)
    .into_real())
}

/// `ψ_F = sqrt(f_F(x; d1, d2))` on `(0, ∞)`, zero for `x ≤ 0`.
pub fn make_f_dist(d1: u32, d2: u32) -> Result<WaveFunction> {
    if d1 < 1 {
        return Err(Error::param("d1", "degrees of freedom must be at least 1"));
    }
    if d2 < 1 {
        return Err(Error::param("d2", "degrees of freedom must be at least 1"));
    }
    let (a, b) = (d1 as f64, d2 as f64);
    let log_c = 0.5 * a * (a / b).ln() - ln_beta(0.5 * a, 0.5 * b);
    let amp_norm = (0.5 * log_c).exp();
    let amp = move |x: f64| -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        let log_f = (0.5 * a - 1.0) * x.ln() - 0.5 * (a + b) * (1.0 + a * x / b).ln();
        amp_norm * (0.5 * log_f).exp()
    };
    // Mode of the F density for d1 > 2; otherwise the density peaks at 0.
    let mode = if d1 > 2 { (a - 2.0) / a * b / (b + 2.0) } else { 0.5 };
    // Momentum moments: ψ ~ x^((d1-2)/4) at 0+, so |φ|² ~ p^(-(d1+2)/2).
    let momentum = MomentFlags::new(d1 > 2, d1 > 4);
    Ok(WaveFunction::new("f", move |x| real(amp(x)))
        .with_derivative(move |x| {
            if x <= 0.0 {
                return real(0.0);
            }
            let dlog = 0.5 * ((0.5 * a - 1.0) / x - 0.5 * (a + b) * (a / b) / (1.0 + a * x / b));
            real(amp(x) * dlog)
        })
        .with_moment_flags(MomentFlags::new(d2 > 2, d2 > 4), momentum)
        .with_support(Interval::positive_half_line())
        .with_center(mode)
        .with_scale(1.0)
        .with_param("d1", a)
        .with_param("d2", b)
        .into_real())
}

impl WaveFunction {
    fn into_real(mut self) -> Self {
        self.real_valued = true;
        self
    }

    /// Drops the stored momentum density so the numeric transform is used.
    pub fn without_momentum_density(mut self) -> Self {
        self.momentum_pdf = None;
        self
    }

    /// Forgets the symmetry declaration; both half-lines are then integrated.
    pub fn without_symmetry(mut self) -> Self {
        self.symmetric = false;
        self
    }
}

/// Named catalog entries addressable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CatalogName {
    Cauchy,
    Gaussian,
    StudentT,
    F,
}

impl CatalogName {
    pub fn as_str(&self) -> &'static str {
        match self {
            CatalogName::Cauchy => "cauchy",
            CatalogName::Gaussian => "gaussian",
            CatalogName::StudentT => "student-t",
            CatalogName::F => "f",
        }
    }
}

impl std::str::FromStr for CatalogName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cauchy" => Ok(CatalogName::Cauchy),
            "gaussian" => Ok(CatalogName::Gaussian),
            "student-t" | "t" => Ok(CatalogName::StudentT),
            "f" => Ok(CatalogName::F),
            other => Err(Error::param("distribution", format!("unknown catalog entry `{other}`"))),
        }
    }
}

fn dof(params: &BTreeMap<String, f64>, name: &'static str, default: u32) -> Result<u32> {
    match params.get(name) {
        None => Ok(default),
        Some(&v) if v >= 1.0 && v.fract() == 0.0 && v <= u32::MAX as f64 => Ok(v as u32),
        Some(&v) => Err(Error::param(name, format!("expected a positive integer, got {v}"))),
    }
}

/// Build a catalog state from a name and a parameter map; missing parameters
/// take the standard values (x0 = μ = 0, γ = σ = 1, n = 2, d1 = 5, d2 = 2).
pub fn from_catalog(name: CatalogName, params: &BTreeMap<String, f64>) -> Result<WaveFunction> {
    let get = |k: &str, default: f64| params.get(k).copied().unwrap_or(default);
    match name {
        CatalogName::Cauchy => make_cauchy(get("x0", 0.0), get("gamma", 1.0)),
        CatalogName::Gaussian => make_gaussian(get("mu", 0.0), get("sigma", 1.0)),
        CatalogName::StudentT => make_student_t(dof(params, "n", 2)?),
        CatalogName::F => make_f_dist(dof(params, "d1", 5)?, dof(params, "d2", 2)?),
    }
}
