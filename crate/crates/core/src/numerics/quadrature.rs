//! Globally adaptive Gauss-Kronrod quadrature on finite, semi-infinite and
//! infinite intervals.
//!
//! Infinite endpoints are compactified with `x = c + s·t/(1 - t²)`, which
//! keeps algebraically decaying integrands (Cauchy-like tails) bounded near
//! `t = ±1`. The driver bisects the panel with the largest error estimate
//! until the summed estimate meets `max(abs_tol, rel_tol·|I|)` or the
//! evaluation budget runs out.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard cap on integrand evaluations for a single integral.
pub const MAX_EVALUATIONS: usize = 1_000_000;

pub const DEFAULT_ABS_TOL: f64 = 1e-10;
pub const DEFAULT_REL_TOL: f64 = 1e-10;

/// Integration domain; either endpoint may be infinite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || lo >= hi {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    pub fn real_line() -> Self {
        Self {
            lo: f64::NEG_INFINITY,
            hi: f64::INFINITY,
        }
    }

    pub fn positive_half_line() -> Self {
        Self {
            lo: 0.0,
            hi: f64::INFINITY,
        }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.lo && x <= self.hi
    }

    pub fn is_finite(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    /// Intersection with `[lo, hi]`, or `None` when empty.
    pub fn clamp(&self, lo: f64, hi: f64) -> Option<Self> {
        let lo = lo.max(self.lo);
        let hi = hi.min(self.hi);
        (lo < hi).then_some(Self { lo, hi })
    }
}

/// Outcome of a converged integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult<T = f64> {
    pub value: T,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
}

/// Absolute/relative tolerance pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            abs: DEFAULT_ABS_TOL,
            rel: DEFAULT_REL_TOL,
        }
    }
}

impl Tolerance {
    pub fn new(abs: f64, rel: f64) -> Result<Self> {
        if !(abs > 0.0) || !abs.is_finite() {
            return Err(Error::param("abs_tol", "must be positive and finite"));
        }
        if !(rel > 0.0) || !rel.is_finite() {
            return Err(Error::param("rel_tol", "must be positive and finite"));
        }
        Ok(Self { abs, rel })
    }

    pub fn target(&self, value: f64) -> f64 {
        self.abs.max(self.rel * value.abs())
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            abs: self.abs * factor,
            rel: self.rel * factor,
        }
    }
}

/// Values the quadrature driver can accumulate.
pub trait QuadValue:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> + Send + Sync
{
    fn zero() -> Self;
    fn norm(self) -> f64;
    fn is_finite_value(self) -> bool;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn norm(self) -> f64 {
        self.abs()
    }
    fn is_finite_value(self) -> bool {
        self.is_finite()
    }
}

impl QuadValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn norm(self) -> f64 {
        Complex64::norm(self)
    }
    fn is_finite_value(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689,
    0.973_906_528_517_171_720_077_964_012_084,
    0.930_157_491_355_708_226_001_207_180_060,
    0.865_063_366_688_984_510_732_096_688_423,
    0.780_817_726_586_416_897_063_717_578_345,
    0.679_409_568_299_024_406_234_327_365_115,
    0.562_757_134_668_604_683_339_000_099_273,
    0.433_395_394_129_247_190_799_265_943_166,
    0.294_392_862_701_460_198_131_126_603_104,
    0.148_874_338_981_631_210_884_826_001_130,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062,
    0.032_558_162_307_964_727_478_818_972_459,
    0.054_755_896_574_351_996_031_381_300_245,
    0.075_039_674_810_919_952_767_043_140_916,
    0.093_125_454_583_697_605_535_065_465_083,
    0.109_387_158_802_297_641_899_210_590_326,
    0.123_491_976_262_065_851_077_600_525_634,
    0.134_709_217_311_473_325_928_054_001_772,
    0.142_775_938_577_060_080_797_094_273_139,
    0.147_739_104_901_338_491_374_841_515_972,
    0.149_445_554_002_916_905_664_936_468_390,
];

// 10-point Gauss weights, attached to XGK[1], XGK[3], ..., XGK[9].
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893,
    0.149_451_349_150_580_593_145_776_339_658,
    0.219_086_362_515_982_043_995_534_934_228,
    0.269_266_719_309_996_355_091_226_921_569,
    0.295_524_224_714_752_870_173_892_994_651,
];

const GK_POINTS: usize = 21;

struct RuleOutput<T> {
    value: T,
    error: f64,
    roundoff_floor: f64,
}

fn gauss_kronrod_21<T, F>(f: &mut F, a: f64, b: f64) -> Result<RuleOutput<T>>
where
    T: QuadValue,
    F: FnMut(f64) -> T,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut eval = |x: f64| -> Result<T> {
        let v = f(x);
        if v.is_finite_value() {
            Ok(v)
        } else {
            Err(Error::NonFiniteIntegrand { at: x })
        }
    };

    let mut fv1 = [T::zero(); 10];
    let mut fv2 = [T::zero(); 10];
    let fc = eval(center)?;
    let mut kronrod = fc * WGK[10];
    let mut gauss = T::zero();
    let mut res_abs = WGK[10] * fc.norm();

    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = eval(center - dx)?;
        let f2 = eval(center + dx)?;
        fv1[j] = f1;
        fv2[j] = f2;
        kronrod = kronrod + (f1 + f2) * WGK[j];
        res_abs += WGK[j] * (f1.norm() + f2.norm());
        if j % 2 == 1 {
            gauss = gauss + (f1 + f2) * WG[j / 2];
        }
    }

    let mean = kronrod * 0.5;
    let mut res_asc = WGK[10] * (fc - mean).norm();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).norm() + (fv2[j] - mean).norm());
    }

    let abs_half = half.abs();
    let value = kronrod * half;
    res_abs *= abs_half;
    res_asc *= abs_half;

    let mut error = ((kronrod - gauss) * half).norm();
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    let roundoff_floor = 50.0 * f64::EPSILON * res_abs;
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(roundoff_floor);
    }

    Ok(RuleOutput {
        value,
        error,
        roundoff_floor,
    })
}

struct Segment<T> {
    a: f64,
    b: f64,
    value: T,
    error: f64,
    frozen: bool,
    // too narrow to bisect further while still above the roundoff floor
    width_limited: bool,
}

impl<T> PartialEq for Segment<T> {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}
impl<T> Eq for Segment<T> {}
impl<T> PartialOrd for Segment<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T> Ord for Segment<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn make_segment<T, F>(f: &mut F, a: f64, b: f64, min_width: f64) -> Result<Segment<T>>
where
    T: QuadValue,
    F: FnMut(f64) -> T,
{
    let rule = gauss_kronrod_21(f, a, b)?;
    let width_floor = (100.0 * f64::EPSILON * a.abs().max(b.abs())).max(min_width);
    let roundoff_limited = rule.error <= 2.0 * rule.roundoff_floor;
    let width_limited = !roundoff_limited && (b - a).abs() <= width_floor;
    Ok(Segment {
        a,
        b,
        value: rule.value,
        error: rule.error,
        frozen: roundoff_limited || width_limited,
        width_limited,
    })
}

/// Core driver on a finite interval `[a, b]` split into `pieces` equal panels.
pub(crate) fn adaptive<T, F>(
    f: F,
    a: f64,
    b: f64,
    pieces: usize,
    tol: Tolerance,
    max_evaluations: usize,
) -> Result<QuadratureResult<T>>
where
    T: QuadValue,
    F: FnMut(f64) -> T,
{
    let pieces = pieces.max(1);
    let step = (b - a) / pieces as f64;
    let breaks: Vec<f64> = (0..=pieces)
        .map(|i| if i == pieces { b } else { a + step * i as f64 })
        .collect();
    adaptive_breaks(f, &breaks, tol, max_evaluations)
}

/// Core driver over the panels delimited by the increasing `breaks`.
pub(crate) fn adaptive_breaks<T, F>(
    mut f: F,
    breaks: &[f64],
    tol: Tolerance,
    max_evaluations: usize,
) -> Result<QuadratureResult<T>>
where
    T: QuadValue,
    F: FnMut(f64) -> T,
{
    debug_assert!(breaks.len() >= 2);
    let pieces = breaks.len() - 1;
    let mut heap = BinaryHeap::with_capacity(pieces * 4);
    let mut done: Vec<Segment<T>> = Vec::new();
    let mut evaluations = 0usize;
    let mut total = T::zero();
    let mut total_err = 0.0;

    let min_width = 1e-30 * (breaks[pieces] - breaks[0]).abs();
    for w in breaks.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let seg = make_segment(&mut f, lo, hi, min_width)?;
        evaluations += GK_POINTS;
        total = total + seg.value;
        total_err += seg.error;
        if seg.frozen {
            done.push(seg);
        } else {
            heap.push(seg);
        }
    }

    loop {
        if total_err <= tol.target(total.norm()) || heap.is_empty() {
            break;
        }
        if evaluations + 2 * GK_POINTS > max_evaluations {
            return Err(Error::QuadratureNonConvergence {
                estimate: total.norm(),
                abs_error: total_err,
                evaluations,
            });
        }
        let worst = heap.pop().expect("heap checked non-empty");
        let mid = 0.5 * (worst.a + worst.b);
        let left = make_segment(&mut f, worst.a, mid, min_width)?;
        let right = make_segment(&mut f, mid, worst.b, min_width)?;
        evaluations += 2 * GK_POINTS;
        total = total - worst.value + left.value + right.value;
        total_err += left.error + right.error - worst.error;
        for seg in [left, right] {
            if seg.frozen {
                done.push(seg);
            } else {
                heap.push(seg);
            }
        }
    }

    // Re-sum from scratch so incremental cancellation does not leak into
    // the reported value.
    let mut value = T::zero();
    let mut err = 0.0;
    let mut unresolved = 0.0;
    for seg in heap.iter().chain(done.iter()) {
        value = value + seg.value;
        err += seg.error;
        if seg.width_limited {
            unresolved += seg.error;
        }
    }
    if err > tol.target(value.norm()) && unresolved > tol.target(value.norm()) {
        return Err(Error::QuadratureNonConvergence {
            estimate: value.norm(),
            abs_error: err,
            evaluations,
        });
    }
    Ok(QuadratureResult {
        value,
        abs_error_estimate: err,
        evaluations,
    })
}

/// Where to anchor the compactifying map for infinite endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Anchor {
    pub center: f64,
    pub scale: f64,
}

impl Default for Anchor {
    fn default() -> Self {
        Self {
            center: 0.0,
            scale: 1.0,
        }
    }
}

/// Integrate `f` over `domain` with the default anchor (centre 0, scale 1).
pub fn integrate<F>(f: F, domain: Interval, abs_tol: f64, rel_tol: f64) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    let tol = Tolerance::new(abs_tol, rel_tol)?;
    integrate_anchored(f, domain, Anchor::default(), tol)
}

/// Integrate a real function, placing the compactification around `anchor`.
pub fn integrate_anchored<F>(
    f: F,
    domain: Interval,
    anchor: Anchor,
    tol: Tolerance,
) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    integrate_generic(f, domain, anchor, tol)
}

/// Complex-valued counterpart of [`integrate_anchored`].
pub fn integrate_complex<F>(
    f: F,
    domain: Interval,
    anchor: Anchor,
    tol: Tolerance,
) -> Result<QuadratureResult<Complex64>>
where
    F: Fn(f64) -> Complex64,
{
    integrate_generic(f, domain, anchor, tol)
}

fn integrate_generic<T, F>(
    f: F,
    domain: Interval,
    anchor: Anchor,
    tol: Tolerance,
) -> Result<QuadratureResult<T>>
where
    T: QuadValue,
    F: Fn(f64) -> T,
{
    let scale = if anchor.scale > 0.0 && anchor.scale.is_finite() {
        anchor.scale
    } else {
        1.0
    };
    // x = base ± s·t/(1 - t²), dx/dt = s·(1 + t²)/(1 - t²)².
    let map = move |t: f64| -> (f64, f64) {
        let d = 1.0 - t * t;
        (scale * t / d, scale * (1.0 + t * t) / (d * d))
    };
    let guarded = |v: T, jac: f64| -> T {
        if v.norm() == 0.0 {
            T::zero()
        } else {
            v * jac
        }
    };

    match (domain.lo.is_finite(), domain.hi.is_finite()) {
        (true, true) => adaptive(&f, domain.lo, domain.hi, 1, tol, MAX_EVALUATIONS),
        (false, false) => {
            let c = anchor.center;
            adaptive(
                |t| {
                    let (x, j) = map(t);
                    guarded(f(c + x), j)
                },
                -1.0,
                1.0,
                4,
                tol,
                MAX_EVALUATIONS,
            )
        }
        (true, false) => {
            let a = domain.lo;
            adaptive(
                |t| {
                    let (x, j) = map(t);
                    guarded(f(a + x), j)
                },
                0.0,
                1.0,
                4,
                tol,
                MAX_EVALUATIONS,
            )
        }
        (false, true) => {
            let b = domain.hi;
            adaptive(
                |t| {
                    let (x, j) = map(t);
                    guarded(f(b - x), j)
                },
                0.0,
                1.0,
                4,
                tol,
                MAX_EVALUATIONS,
            )
        }
    }
}
