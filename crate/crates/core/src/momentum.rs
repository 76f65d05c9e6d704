//! Momentum-space amplitudes and densities.
//!
//! `φ(p) = (2πħ)^(-1/2) ∫ e^{-ixp/ħ} ψ(x) dx`, evaluated by splitting the
//! position axis at the state's centre `c` and integrating each half-line
//! with the period-aware oscillatory engine.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dispersion::{self, MomentResult};
use crate::error::{Error, Result};
use crate::numerics::{fourier_half_line, integrate_anchored, Anchor, Interval, Tolerance};
use crate::states::{Density, Existence, WaveFunction};

/// Tolerance used for each amplitude evaluation when the caller gives none.
pub const DEFAULT_TRANSFORM_TOL: Tolerance = Tolerance {
    abs: 1e-12,
    rel: 1e-11,
};

fn check_hbar(hbar: f64) -> Result<()> {
    if hbar > 0.0 && hbar.is_finite() {
        Ok(())
    } else {
        Err(Error::param("hbar", "must be positive and finite"))
    }
}

/// `φ(p)` with the default transform tolerance.
pub fn to_momentum_amplitude(wf: &WaveFunction, p: f64, hbar: f64) -> Result<Complex64> {
    momentum_amplitude_with(wf, p, hbar, DEFAULT_TRANSFORM_TOL)
}

pub fn momentum_amplitude_with(wf: &WaveFunction, p: f64, hbar: f64, tol: Tolerance) -> Result<Complex64> {
    check_hbar(hbar)?;
    if !p.is_finite() {
        return Err(Error::param("p", "must be finite"));
    }
    let omega = p / hbar;
    let support = wf.support();
    let c = wf.center();
    let scale = wf.scale();
    let right_len = finite_len(support.hi() - c);
    let left_len = finite_len(c - support.lo());

    // ∫ψ(x)e^{-iωx}dx = e^{-iωc}[∫_0 ψ(c+u)e^{-iωu}du + ∫_0 ψ(c-u)e^{iωu}du]
    let right = fourier_half_line(|u| wf.amplitude(c + u), -omega, right_len, scale, tol)?;
    let sum = if wf.is_symmetric() && wf.is_real_valued() {
        Complex64::new(2.0 * right.value.re, 0.0)
    } else {
        let left = fourier_half_line(|u| wf.amplitude(c - u), omega, left_len, scale, tol)?;
        right.value + left.value
    };
    let phase = if c == 0.0 {
        Complex64::new(1.0, 0.0)
    } else {
        Complex64::from_polar(1.0, -omega * c)
    };
    Ok(phase * sum / (2.0 * PI * hbar).sqrt())
}

fn finite_len(l: f64) -> Option<f64> {
    if l.is_finite() {
        Some(l)
    } else {
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MomentumSource {
    ClosedForm,
    NumericTransform,
}

/// `|φ(p)|²` together with how it is evaluated.
#[derive(Clone)]
pub struct MomentumDensity {
    pdf: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    source: MomentumSource,
    hbar: f64,
    symmetric: bool,
    scale: f64,
}

impl fmt::Debug for MomentumDensity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MomentumDensity")
            .field("source", &self.source)
            .field("hbar", &self.hbar)
            .field("symmetric", &self.symmetric)
            .finish()
    }
}

impl MomentumDensity {
    /// Evaluate the density. A transform failure yields NaN, which the
    /// quadrature layer reports as an error.
    pub fn pdf(&self, p: f64) -> f64 {
        (self.pdf)(p)
    }

    pub fn source(&self) -> MomentumSource {
        self.source
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// Even in `p`; always true for real position amplitudes.
    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn to_density(&self) -> Density {
        let pdf = Arc::clone(&self.pdf);
        let d = Density::new(move |p| pdf(p), Interval::real_line()).with_scale(self.scale);
        if self.symmetric {
            d.with_symmetry_center(0.0)
        } else {
            d.with_center(0.0)
        }
    }
}

/// The momentum density of `wf`, preferring a closed form when one is stored.
pub fn momentum_density(wf: &WaveFunction, hbar: f64) -> Result<MomentumDensity> {
    momentum_density_with(wf, hbar, DEFAULT_TRANSFORM_TOL)
}

pub fn momentum_density_with(wf: &WaveFunction, hbar: f64, tol: Tolerance) -> Result<MomentumDensity> {
    check_hbar(hbar)?;
    let symmetric = wf.is_real_valued();
    let scale = hbar / wf.scale();
    if let Some(closed) = wf.closed_form_momentum_density() {
        let closed = Arc::clone(closed);
        return Ok(MomentumDensity {
            pdf: Arc::new(move |p| closed(p, hbar)),
            source: MomentumSource::ClosedForm,
            hbar,
            symmetric,
            scale,
        });
    }
    let wf = wf.clone();
    Ok(MomentumDensity {
        pdf: Arc::new(move |p| match momentum_amplitude_with(&wf, p, hbar, tol) {
            Ok(a) => a.norm_sqr(),
            Err(e) => {
                log::debug!("momentum transform failed at p = {p}: {e}");
                f64::NAN
            }
        }),
        source: MomentumSource::NumericTransform,
        hbar,
        symmetric,
        scale,
    })
}

/// `∫|φ(p)|² dp`, always through the numeric transform.
pub fn plancherel_check(wf: &WaveFunction, hbar: f64) -> Result<f64> {
    check_hbar(hbar)?;
    let tol = Tolerance::new(1e-9, 1e-9)?;
    let md = momentum_density_numeric(wf, hbar)?;
    let anchor = Anchor {
        center: 0.0,
        scale: md.scale(),
    };
    if md.is_symmetric() {
        let half = integrate_anchored(|p| md.pdf(p), Interval::positive_half_line(), anchor, tol)?;
        Ok(2.0 * half.value)
    } else {
        Ok(integrate_anchored(|p| md.pdf(p), Interval::real_line(), anchor, tol)?.value)
    }
}

fn momentum_density_numeric(wf: &WaveFunction, hbar: f64) -> Result<MomentumDensity> {
    let stripped = wf.clone().without_momentum_density();
    momentum_density(&stripped, hbar)
}

/// Mean and variance of momentum.
///
/// Finite moments come from the position-space derivative,
/// `<p> = -iħ∫ψ̄ψ'` and `<p²> = ħ²∫|ψ'|²`, which avoids integrating the
/// slowly converging transform against `p²`. States without a derivative
/// or with unknown metadata go through the momentum density itself.
pub fn momentum_moments(wf: &WaveFunction, hbar: f64, tol: Tolerance) -> Result<(MomentResult, MomentResult)> {
    check_hbar(hbar)?;
    let flags = wf.momentum_flags();
    let known = flags.mean_exists != Existence::Unknown && flags.variance_exists != Existence::Unknown;
    if !known || !wf.has_derivative() {
        let md = momentum_density(wf, hbar)?;
        return dispersion::mean_variance(&md.to_density(), flags, tol);
    }

    let anchor = Anchor {
        center: wf.center(),
        scale: wf.scale(),
    };
    let support = wf.support();
    let deriv = |x: f64| wf.derivative(x).unwrap_or_default();

    let mean = if flags.mean_exists == Existence::Yes {
        let m = if wf.is_real_valued() {
            0.0
        } else {
            let r = integrate_anchored(
                |x| (wf.amplitude(x).conj() * deriv(x)).im,
                support,
                anchor,
                tol,
            )?;
            // -iħ∫ψ̄ψ' is real; its value is ħ·Im∫ψ̄ψ'
            hbar * r.value
        };
        MomentResult::finite(m)
    } else {
        MomentResult::divergent()
    };

    let var = if flags.variance_exists == Existence::Yes {
        let second = integrate_anchored(|x| deriv(x).norm_sqr(), support, anchor, tol)?.value * hbar * hbar;
        let m = mean.value.unwrap_or(0.0);
        MomentResult::finite((second - m * m).max(0.0))
    } else {
        MomentResult::divergent()
    };
    Ok((mean, var))
}
