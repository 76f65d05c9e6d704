use thiserror::Error;

/// Errors raised by the numerical pipeline.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("invalid interval [{lo}, {hi}]")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error(
        "quadrature did not converge after {evaluations} evaluations \
         (best estimate {estimate:e}, error estimate {abs_error:e})"
    )]
    QuadratureNonConvergence {
        estimate: f64,
        abs_error: f64,
        evaluations: usize,
    },

    #[error("integrand returned a non-finite value at x = {at}")]
    NonFiniteIntegrand { at: f64 },

    #[error("oscillatory tail did not converge after {cycles} half-periods (estimate {estimate:e})")]
    OscillatoryNonConvergence { estimate: f64, cycles: usize },

    #[error("no sign change on bracket [{lo}, {hi}]: f(lo) = {f_lo:e}, f(hi) = {f_hi:e}")]
    NoSignChange { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("root finder exhausted {iterations} iterations (best iterate {best})")]
    RootBudgetExhausted { best: f64, iterations: usize },

    #[error("could not bracket the {level} quantile")]
    QuantileBracket { level: f64 },

    #[error("moment probe was inconclusive")]
    InconclusiveMoment,

    #[error("Hermite function degree {n} exceeds the supported maximum {max}")]
    DegreeTooLarge { n: usize, max: usize },

    #[error("probabilities sum to {sum}, not 1")]
    Unnormalized { sum: f64 },

    #[error("{failed} of {total} samples failed during the search")]
    SearchFailures { failed: usize, total: usize },

    #[error("{axis} axis: {source}")]
    Axis {
        axis: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }

    pub(crate) fn on_axis(self, axis: &'static str) -> Self {
        Error::Axis {
            axis,
            source: Box::new(self),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
