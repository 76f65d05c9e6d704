//! Quantiles, semi-interquartile ranges, divergence-aware moments and the
//! assembled uncertainty report.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::momentum;
use crate::numerics::{brent_root, integrate_anchored, Anchor, Interval, Tolerance};
use crate::states::{Density, Existence, MomentFlags, WaveFunction};

const MAX_BRACKET_DOUBLINGS: usize = 120;
/// Quantile abscissae are located to this fraction of the density's scale.
const QUANTILE_X_TOL: f64 = 1e-11;

const PROBE_START: f64 = 8.0;
const PROBE_DOUBLINGS: usize = 7; // 8 · 2^7 = 1024
const PROBE_DIVERGENT_RATIO: f64 = 0.9;
const PROBE_FINITE_RATIO: f64 = 0.75;
const PROBE_NEGLIGIBLE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MomentStatus {
    Finite,
    Divergent,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MomentResult {
    pub status: MomentStatus,
    pub value: Option<f64>,
}

impl MomentResult {
    pub fn finite(v: f64) -> Self {
        Self {
            status: MomentStatus::Finite,
            value: Some(v),
        }
    }

    pub fn divergent() -> Self {
        Self {
            status: MomentStatus::Divergent,
            value: None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.status == MomentStatus::Finite
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuartileSet {
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    /// Bound on `|CDF(q) - level|` over the three quartiles.
    pub achieved_tol: f64,
}

impl QuartileSet {
    pub fn siqr(&self) -> f64 {
        0.5 * (self.q3 - self.q1)
    }
}

/// Incremental CDF evaluation.
///
/// Every evaluated point is remembered, and a new point is reached by
/// integrating from the nearest known one. Root-finding iterates then cost a
/// short integral each instead of a full tail integral.
pub struct CdfEvaluator<'a> {
    density: &'a Density,
    tol: Tolerance,
    // (x, F(x), accumulated error)
    known: Vec<(f64, f64, f64)>,
}

impl<'a> CdfEvaluator<'a> {
    pub fn new(density: &'a Density, tol: Tolerance) -> Self {
        Self {
            density,
            tol,
            known: Vec::new(),
        }
    }

    fn anchor(&self) -> Anchor {
        Anchor {
            center: self.density.center(),
            scale: self.density.scale(),
        }
    }

    fn seed(&mut self) -> Result<()> {
        let d = self.density;
        let dom = d.domain();
        if let Some(c) = d.symmetry_center() {
            self.known.push((c, 0.5, 0.0));
        }
        if dom.lo().is_finite() {
            self.known.push((dom.lo(), 0.0, 0.0));
        }
        if dom.hi().is_finite() {
            self.known.push((dom.hi(), 1.0, 0.0));
        }
        if self.known.is_empty() {
            let c = d.center();
            let left = Interval::new(dom.lo(), c)?;
            let r = integrate_anchored(|x| d.pdf(x), left, self.anchor(), self.tol)?;
            self.known.push((c, r.value, r.abs_error_estimate));
        }
        Ok(())
    }

    /// `(F(q), error bound)`.
    pub fn eval(&mut self, q: f64) -> Result<(f64, f64)> {
        if q.is_nan() {
            return Err(Error::param("q", "must not be NaN"));
        }
        let d = self.density;
        if let Some(cdf) = d.closed_form_cdf() {
            return Ok((cdf(q).clamp(0.0, 1.0), 4.0 * f64::EPSILON));
        }
        let dom = d.domain();
        if q <= dom.lo() {
            return Ok((0.0, 0.0));
        }
        if q >= dom.hi() {
            return Ok((1.0, 0.0));
        }
        if self.known.is_empty() {
            self.seed()?;
        }
        let &(x0, f0, e0) = self
            .known
            .iter()
            .min_by(|a, b| (a.0 - q).abs().total_cmp(&(b.0 - q).abs()))
            .expect("seeded");
        if x0 == q {
            return Ok((f0, e0));
        }
        let (a, b, sign) = if x0 < q { (x0, q, 1.0) } else { (q, x0, -1.0) };
        let r = integrate_anchored(|x| d.pdf(x), Interval::new(a, b)?, self.anchor(), self.tol)?;
        let f = (f0 + sign * r.value).clamp(0.0, 1.0);
        let e = e0 + r.abs_error_estimate;
        self.known.push((q, f, e));
        Ok((f, e))
    }

    /// Smallest `q` with `F(q) = level`, bracketed outward from the density's centre.
    pub fn quantile(&mut self, level: f64) -> Result<(f64, f64)> {
        if !(level > 0.0 && level < 1.0) {
            return Err(Error::param("level", "must lie strictly between 0 and 1"));
        }
        let d = self.density;
        let dom = d.domain();
        let c = d.center().clamp(dom.lo(), dom.hi());
        let s = d.scale();
        let (fc, _) = self.eval(c)?;
        let dir = if fc < level { 1.0 } else { -1.0 };
        let mut near = c;
        let mut step = s;
        let mut far = None;
        for _ in 0..MAX_BRACKET_DOUBLINGS {
            let mut x = c + dir * step;
            if dir > 0.0 && x >= dom.hi() {
                x = dom.hi();
            }
            if dir < 0.0 && x <= dom.lo() {
                x = dom.lo();
            }
            let (fx, _) = self.eval(x)?;
            if (dir > 0.0 && fx >= level) || (dir < 0.0 && fx <= level) {
                far = Some(x);
                break;
            }
            near = x;
            step *= 2.0;
        }
        let far = far.ok_or(Error::QuantileBracket { level })?;
        let bracket = Interval::new(near.min(far), near.max(far))?;

        let mut failure = None;
        let root = brent_root(
            |x| match self.eval(x) {
                Ok((f, _)) => f - level,
                Err(e) => {
                    failure.get_or_insert(e);
                    f64::NAN
                }
            },
            bracket,
            QUANTILE_X_TOL * s.max(c.abs()).max(f64::MIN_POSITIVE),
        );
        if let Some(e) = failure {
            return Err(e);
        }
        let q = root?;
        let (fq, eq) = self.eval(q)?;
        Ok((q, (fq - level).abs() + eq))
    }
}

pub fn cdf(d: &Density, q: f64, tol: Tolerance) -> Result<f64> {
    CdfEvaluator::new(d, tol).eval(q).map(|(f, _)| f)
}

/// `q` with `|CDF(q) - level| ≤ tol` (up to quadrature accuracy).
pub fn quantile(d: &Density, level: f64, tol: Tolerance) -> Result<f64> {
    CdfEvaluator::new(d, tol).quantile(level).map(|(q, _)| q)
}

pub fn quartiles(d: &Density, tol: Tolerance) -> Result<QuartileSet> {
    let mut ev = CdfEvaluator::new(d, tol);
    if let Some(c) = d.symmetry_center() {
        let (q3, e) = ev.quantile(0.75)?;
        return Ok(QuartileSet {
            q1: 2.0 * c - q3,
            median: c,
            q3,
            achieved_tol: e,
        });
    }
    let (median, e2) = ev.quantile(0.5)?;
    let (q1, e1) = ev.quantile(0.25)?;
    let (q3, e3) = ev.quantile(0.75)?;
    Ok(QuartileSet {
        q1,
        median,
        q3,
        achieved_tol: e1.max(e2).max(e3),
    })
}

pub fn siqr(d: &Density, tol: Tolerance) -> Result<f64> {
    quartiles(d, tol).map(|q| q.siqr())
}

/// Mean and variance of `d`, honouring analytic existence flags.
///
/// Unknown flags trigger a doubling-window probe: the shell contributions
/// `∫_{L<|x-c|<2L} |x-c|^k f(x) dx` for `L = 8, 16, ..., 1024` (in units of
/// the density's scale) shrink geometrically when the moment is finite and
/// stay level or grow when it diverges.
pub fn mean_variance(d: &Density, flags: MomentFlags, tol: Tolerance) -> Result<(MomentResult, MomentResult)> {
    let mean_exists = match flags.mean_exists {
        Existence::Unknown => probe(d, 1, tol)?,
        e => e == Existence::Yes,
    };
    if !mean_exists {
        return Ok((MomentResult::divergent(), MomentResult::divergent()));
    }
    let anchor = Anchor {
        center: d.center(),
        scale: d.scale(),
    };
    let mean = match d.symmetry_center() {
        Some(c) => c,
        None => integrate_anchored(|x| x * d.pdf(x), d.domain(), anchor, tol)?.value,
    };
    let var_exists = match flags.variance_exists {
        Existence::Unknown => probe(d, 2, tol)?,
        e => e == Existence::Yes,
    };
    let var = if var_exists {
        let v = integrate_anchored(|x| (x - mean) * (x - mean) * d.pdf(x), d.domain(), anchor, tol)?.value;
        MomentResult::finite(v)
    } else {
        MomentResult::divergent()
    };
    Ok((MomentResult::finite(mean), var))
}

fn probe(d: &Density, k: i32, tol: Tolerance) -> Result<bool> {
    let c = d.center();
    let s = d.scale();
    let dom = d.domain();
    let anchor = Anchor { center: c, scale: s };
    let weight = |x: f64| (x - c).abs().powi(k) * d.pdf(x);
    let piece = |a: f64, b: f64| -> Result<f64> {
        match Interval::new(a.max(dom.lo()), b.min(dom.hi())) {
            Ok(iv) => Ok(integrate_anchored(weight, iv, anchor, tol)?.value),
            Err(_) => Ok(0.0),
        }
    };

    let mut radius = PROBE_START * s;
    let mut total = piece(c - radius, c + radius)?;
    let mut shells = Vec::with_capacity(PROBE_DOUBLINGS);
    for _ in 0..PROBE_DOUBLINGS {
        let next = 2.0 * radius;
        let shell = piece(c - next, c - radius)? + piece(c + radius, c + next)?;
        total += shell;
        shells.push(shell);
        radius = next;
    }

    let last = *shells.last().expect("at least one shell");
    if last <= PROBE_NEGLIGIBLE * total.abs().max(f64::MIN_POSITIVE) {
        return Ok(true);
    }
    let ratios: Vec<f64> = shells.windows(2).map(|w| w[1] / w[0]).collect();
    let tail = &ratios[ratios.len() - 3..];
    if tail.iter().all(|&r| r >= PROBE_DIVERGENT_RATIO) {
        Ok(false)
    } else if tail.iter().all(|&r| r <= PROBE_FINITE_RATIO) {
        Ok(true)
    } else {
        Err(Error::InconclusiveMoment)
    }
}

/// `inf{a : F(a) > level}` over sorted `(value, probability)` pairs.
pub fn discrete_quantile(outcomes: &[(f64, f64)], level: f64) -> Result<f64> {
    if outcomes.is_empty() {
        return Err(Error::param("outcomes", "must not be empty"));
    }
    if outcomes.windows(2).any(|w| w[0].0 >= w[1].0) {
        return Err(Error::param("outcomes", "values must be strictly increasing"));
    }
    if outcomes.iter().any(|&(_, p)| !(p >= 0.0)) {
        return Err(Error::param("outcomes", "probabilities must be non-negative"));
    }
    let sum: f64 = outcomes.iter().map(|&(_, p)| p).sum();
    if (sum - 1.0).abs() > 1e-12 {
        return Err(Error::Unnormalized { sum });
    }
    let mut cumulative = 0.0;
    for &(a, p) in outcomes {
        cumulative += p;
        if cumulative > level {
            return Ok(a);
        }
    }
    Ok(outcomes[outcomes.len() - 1].0)
}

/// Anything that exposes position and momentum statistics.
pub trait QuantumState {
    fn label(&self) -> String;
    fn params(&self) -> BTreeMap<String, f64>;
    fn position_density(&self, hbar: f64) -> Result<Density>;
    fn momentum_density(&self, hbar: f64, tol: Tolerance) -> Result<Density>;
    fn position_moments(&self, hbar: f64, tol: Tolerance) -> Result<(MomentResult, MomentResult)>;
    fn momentum_moments(&self, hbar: f64, tol: Tolerance) -> Result<(MomentResult, MomentResult)>;
}

impl QuantumState for WaveFunction {
    fn label(&self) -> String {
        WaveFunction::label(self).to_string()
    }

    fn params(&self) -> BTreeMap<String, f64> {
        WaveFunction::params(self).clone()
    }

    fn position_density(&self, _hbar: f64) -> Result<Density> {
        Ok(WaveFunction::position_density(self))
    }

    fn momentum_density(&self, hbar: f64, tol: Tolerance) -> Result<Density> {
        // Each amplitude must be two orders tighter than the CDF it feeds.
        let transform_tol = tol.scaled(1e-2);
        Ok(momentum::momentum_density_with(self, hbar, transform_tol)?.to_density())
    }

    fn position_moments(&self, _hbar: f64, tol: Tolerance) -> Result<(MomentResult, MomentResult)> {
        mean_variance(&WaveFunction::position_density(self), self.moment_flags(), tol)
    }

    fn momentum_moments(&self, hbar: f64, tol: Tolerance) -> Result<(MomentResult, MomentResult)> {
        momentum::momentum_moments(self, hbar, tol)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReportConfig {
    pub hbar: f64,
    pub tol: Tolerance,
    /// Skip means and variances (the search only needs quartiles).
    pub moments: bool,
}

impl Default for ReportConfig {
    fn default() -> Self {
        Self {
            hbar: 1.0,
            tol: Tolerance::default(),
            moments: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReportTolerances {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub achieved_x: f64,
    pub achieved_p: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UncertaintyReport {
    pub label: String,
    pub params: BTreeMap<String, f64>,
    pub hbar: f64,
    pub siqr_x: f64,
    pub siqr_p: f64,
    pub product_over_hbar: f64,
    pub mean_x: Option<MomentResult>,
    pub var_x: Option<MomentResult>,
    pub mean_p: Option<MomentResult>,
    pub var_p: Option<MomentResult>,
    pub variance_product_over_hbar: Option<f64>,
    pub tolerances: ReportTolerances,
    #[serde(skip)]
    pub position_quartiles: Option<QuartileSet>,
    #[serde(skip)]
    pub momentum_quartiles: Option<QuartileSet>,
}

pub fn uncertainty_report<S: QuantumState + ?Sized>(state: &S, config: &ReportConfig) -> Result<UncertaintyReport> {
    let hbar = config.hbar;
    if !(hbar > 0.0) || !hbar.is_finite() {
        return Err(Error::param("hbar", "must be positive and finite"));
    }
    let tol = config.tol;

    let xq = state
        .position_density(hbar)
        .and_then(|d| quartiles(&d, tol))
        .map_err(|e| e.on_axis("position"))?;
    let pq = state
        .momentum_density(hbar, tol)
        .and_then(|d| quartiles(&d, tol))
        .map_err(|e| e.on_axis("momentum"))?;
    let siqr_x = xq.siqr();
    let siqr_p = pq.siqr();

    let (mut mean_x, mut var_x, mut mean_p, mut var_p) = (None, None, None, None);
    let mut variance_product = None;
    if config.moments {
        let (mx, vx) = state.position_moments(hbar, tol).map_err(|e| e.on_axis("position"))?;
        let (mp, vp) = state.momentum_moments(hbar, tol).map_err(|e| e.on_axis("momentum"))?;
        if let (Some(a), Some(b)) = (vx.value, vp.value) {
            variance_product = Some((a * b).sqrt() / hbar);
        }
        mean_x = Some(mx);
        var_x = Some(vx);
        mean_p = Some(mp);
        var_p = Some(vp);
    }

    Ok(UncertaintyReport {
        label: state.label(),
        params: state.params(),
        hbar,
        siqr_x,
        siqr_p,
        product_over_hbar: siqr_x * siqr_p / hbar,
        mean_x,
        var_x,
        mean_p,
        var_p,
        variance_product_over_hbar: variance_product,
        tolerances: ReportTolerances {
            abs_tol: tol.abs,
            rel_tol: tol.rel,
            achieved_x: xq.achieved_tol,
            achieved_p: pq.achieved_tol,
        },
        position_quartiles: Some(xq),
        momentum_quartiles: Some(pq),
    })
}
