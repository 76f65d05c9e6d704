//! Monte-Carlo search over Haar-random Hermite superpositions.
//!
//! Each degree `d = 0..=D` draws `N` fresh samples and also re-evaluates the
//! previous degree's argmin (zero-padded), so per-degree minima never
//! increase. Sample `i` at degree `d` uses a ChaCha8 stream keyed by
//! `(d, i)` under the master seed, which makes every result independent of
//! evaluation order and worker count.

use std::io::Write;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::dispersion::{uncertainty_report, ReportConfig};
use crate::error::{Error, Result};
use crate::hermite::{haar_sample_with, HermiteState};
use crate::numerics::Tolerance;

/// A running minimum below this is reported for review, never treated as a failure.
pub const SANITY_FLOOR: f64 = 0.05;
/// Largest tolerated share of failed sample evaluations.
pub const MAX_FAILURE_FRACTION: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    /// Product of position and momentum semi-interquartile ranges.
    Siqr,
    /// Product of position and momentum standard deviations.
    Variance,
}

/// How the samples of one degree are evaluated. Both give identical results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Execution {
    Sequential,
    /// Rayon worker pool; without the `parallel` feature this runs sequentially.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub degree: usize,
    pub samples: usize,
    pub master_seed: u64,
    pub hbar: f64,
    pub tol: Tolerance,
    #[serde(default)]
    pub execution: Execution,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            degree: 8,
            samples: 10_000,
            master_seed: 0,
            hbar: 1.0,
            tol: Tolerance::default(),
            execution: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeMinimum {
    pub degree: usize,
    pub samples: usize,
    pub min: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub objective: Objective,
    pub degree: usize,
    pub samples: usize,
    /// Smallest SIQR product seen over every evaluated state.
    pub min_product_over_hbar: f64,
    /// Smallest variance product seen over every evaluated state.
    pub min_variance_product_over_hbar: Option<f64>,
    /// Minimizer of the objective.
    pub argmin_state: HermiteState,
    pub master_seed: u64,
    /// Objective minimum after each degree.
    pub per_degree_minima: Vec<DegreeMinimum>,
    pub failures: usize,
    pub evaluated: usize,
    pub below_sanity_floor: bool,
}

impl SearchResult {
    /// Minimum of the objective that drove the search.
    pub fn objective_min(&self) -> f64 {
        self.per_degree_minima.last().map(|m| m.min).unwrap_or(f64::NAN)
    }
}

#[derive(Debug, Clone, Copy)]
struct Evaluation {
    siqr: f64,
    variance: f64,
}

impl Evaluation {
    fn objective(&self, o: Objective) -> f64 {
        match o {
            Objective::Siqr => self.siqr,
            Objective::Variance => self.variance,
        }
    }
}

fn evaluate(state: &HermiteState, cfg: &ReportConfig) -> Result<Evaluation> {
    let r = uncertainty_report(state, cfg)?;
    let variance = r
        .variance_product_over_hbar
        .ok_or_else(|| Error::param("state", "finite superpositions have finite variances"))?;
    if !(r.product_over_hbar > 0.0) {
        return Err(Error::param("state", "non-positive SIQR product"));
    }
    Ok(Evaluation {
        siqr: r.product_over_hbar,
        variance,
    })
}

/// Stream identifier of sample `index` at `degree`; also the state's seed tag.
pub fn stream_id(degree: usize, index: usize) -> u64 {
    ((degree as u64) << 40) | index as u64
}

/// The `index`-th Haar sample at `degree` under `master_seed`.
pub fn sample(master_seed: u64, degree: usize, index: usize) -> Result<HermiteState> {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    let id = stream_id(degree, index);
    rng.set_stream(id);
    Ok(haar_sample_with(degree, &mut rng)?.with_seed_tag(id))
}

fn map_indexed<T, F>(n: usize, execution: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match execution {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().map(f).collect()
        }
        _ => (0..n).map(f).collect(),
    }
}

fn run(objective: Objective, config: &SearchConfig) -> Result<SearchResult> {
    if config.samples < 1 {
        return Err(Error::param("samples", "must be at least 1"));
    }
    let report_cfg = ReportConfig {
        hbar: config.hbar,
        tol: config.tol,
        moments: true,
    };

    let mut carried: Option<(HermiteState, Evaluation)> = None;
    let mut per_degree = Vec::with_capacity(config.degree + 1);
    let mut min_siqr = f64::INFINITY;
    let mut min_variance = f64::INFINITY;
    let mut failures = 0usize;
    let mut evaluated = 0usize;

    for degree in 0..=config.degree {
        let results: Vec<(HermiteState, Result<Evaluation>)> = map_indexed(config.samples, config.execution, |i| {
            match sample(config.master_seed, degree, i) {
                Ok(s) => {
                    let e = evaluate(&s, &report_cfg);
                    (s, e)
                }
                Err(e) => (HermiteState::eigenstate(0).expect("degree 0 is valid"), Err(e)),
            }
        });

        let mut failed_here = 0usize;
        // The carried argmin sits first, so it wins exact ties.
        let mut best: Option<(HermiteState, Evaluation)> = match carried.take() {
            Some((s, e)) => Some((s.padded(degree)?, e)),
            None => None,
        };
        for (state, outcome) in results {
            match outcome {
                Ok(e) => {
                    min_siqr = min_siqr.min(e.siqr);
                    min_variance = min_variance.min(e.variance);
                    let better = best
                        .as_ref()
                        .is_none_or(|(_, b)| e.objective(objective) < b.objective(objective));
                    if better {
                        best = Some((state, e));
                    }
                }
                Err(err) => {
                    failed_here += 1;
                    log::warn!(
                        "degree {degree}: sample {:?} failed: {err}",
                        state.seed_tag()
                    );
                }
            }
        }
        evaluated += config.samples;
        failures += failed_here;
        if failed_here as f64 > MAX_FAILURE_FRACTION * config.samples as f64 {
            return Err(Error::SearchFailures {
                failed: failed_here,
                total: config.samples,
            });
        }
        let (state, eval) = best.ok_or(Error::SearchFailures {
            failed: failed_here,
            total: config.samples,
        })?;
        per_degree.push(DegreeMinimum {
            degree,
            samples: config.samples,
            min: eval.objective(objective),
        });
        log::info!("degree {degree}: min {:.6}", eval.objective(objective));
        carried = Some((state, eval));
    }

    let below = min_siqr < SANITY_FLOOR;
    if below {
        log::warn!("SIQR product {min_siqr} fell below the sanity floor {SANITY_FLOOR}; flagging for review");
    }
    let (argmin_state, _) = carried.expect("at least one degree evaluated");
    Ok(SearchResult {
        objective,
        degree: config.degree,
        samples: config.samples,
        min_product_over_hbar: min_siqr,
        min_variance_product_over_hbar: min_variance.is_finite().then_some(min_variance),
        argmin_state,
        master_seed: config.master_seed,
        per_degree_minima: per_degree,
        failures,
        evaluated,
        below_sanity_floor: below,
    })
}

/// Minimum SIQR product over Haar samples of degree `0..=config.degree`.
pub fn min_siqr_search(config: &SearchConfig) -> Result<SearchResult> {
    run(Objective::Siqr, config)
}

/// Same protocol with the variance product as objective.
pub fn min_variance_search(config: &SearchConfig) -> Result<SearchResult> {
    run(Objective::Variance, config)
}

/// `(degree, samples, min)` rows.
pub fn convergence_table(result: &SearchResult) -> Vec<DegreeMinimum> {
    result.per_degree_minima.clone()
}

/// The convergence table as CSV with a header row.
pub fn write_convergence_csv<W: Write>(result: &SearchResult, out: W) -> Result<(), csv::Error> {
    #[derive(Serialize)]
    struct Row {
        degree: usize,
        samples: usize,
        min_product_over_hbar: f64,
    }
    let mut w = csv::Writer::from_writer(out);
    for m in convergence_table(result) {
        w.serialize(Row {
            degree: m.degree,
            samples: m.samples,
            min_product_over_hbar: m.min,
        })?;
    }
    w.flush()?;
    Ok(())
}
