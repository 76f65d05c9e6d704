//! Command-line front end. Momentum quantities are printed in units of ħ
//! unless `--raw` is given.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::dispersion::{uncertainty_report, MomentResult, MomentStatus, QuartileSet, ReportConfig, UncertaintyReport};
use crate::numerics::Tolerance;
use crate::qubit::{verify_qubit_theorem, Counterexample, TheoremReport};
use crate::search::{min_siqr_search, min_variance_search, write_convergence_csv, Objective, SearchConfig, SearchResult};
use crate::states::{from_catalog, CatalogName};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Numeric(#[from] crate::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "siqr", version, about = "Median-based and variance-based uncertainty products")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Reduced Planck constant.
    #[arg(long, global = true, default_value_t = 1.0)]
    pub hbar: f64,
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub abs_tol: f64,
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub rel_tol: f64,
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Print momentum quantities as computed instead of in units of ħ.
    #[arg(long, global = true)]
    pub raw: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full uncertainty report for a catalog state.
    Product(DistArgs),
    /// Position and momentum quartiles for a catalog state.
    Quartiles(DistArgs),
    /// Recompute every published number and compare.
    Reproduce(ReproduceArgs),
    /// Haar search over Hermite superpositions.
    Search(SearchArgs),
    /// Check the σₓ/σ_y quartile-spread relation on a grid.
    Qubit(QubitArgs),
}

#[derive(Debug, Clone, Args)]
pub struct DistArgs {
    /// cauchy, gaussian, student-t or f.
    #[arg(value_parser = parse_catalog)]
    pub dist: CatalogName,
    /// Gaussian centre.
    #[arg(long)]
    pub mu: Option<f64>,
    /// Gaussian width.
    #[arg(long)]
    pub sigma: Option<f64>,
    /// Cauchy location.
    #[arg(long)]
    pub x0: Option<f64>,
    /// Cauchy half-width.
    #[arg(long)]
    pub gamma: Option<f64>,
    /// Student t degrees of freedom (2 or 3).
    #[arg(long)]
    pub n: Option<f64>,
    /// F numerator degrees of freedom.
    #[arg(long)]
    pub d1: Option<f64>,
    /// F denominator degrees of freedom.
    #[arg(long)]
    pub d2: Option<f64>,
    /// Skip means and variances.
    #[arg(long)]
    pub no_moments: bool,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Highest Hermite degree searched.
    #[arg(long, default_value_t = 8)]
    pub degree: usize,
    /// Haar samples per degree.
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = ObjectiveArg::Siqr)]
    pub objective: ObjectiveArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ObjectiveArg {
    Siqr,
    Variance,
}

#[derive(Debug, Args)]
pub struct QubitArgs {
    /// Grid points along p (and θ unless --grid-theta is given).
    #[arg(long, default_value_t = 1001)]
    pub grid: usize,
    #[arg(long)]
    pub grid_theta: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 100_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 8)]
    pub degree: usize,
    /// Degree of the variance-objective search.
    #[arg(long, default_value_t = 5)]
    pub variance_degree: usize,
    #[arg(long, default_value_t = 1001)]
    pub grid: usize,
}

fn parse_catalog(s: &str) -> std::result::Result<CatalogName, String> {
    s.parse::<CatalogName>().map_err(|e| e.to_string())
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RunConfig {
    pub hbar: f64,
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub output_format: Format,
    pub raw: bool,
}

impl RunConfig {
    fn from_args(g: &GlobalArgs, default_format: Format) -> CliResult<Self> {
        if !(g.hbar > 0.0 && g.hbar.is_finite()) {
            return Err(CliError::Usage(format!("--hbar must be positive, got {}", g.hbar)));
        }
        if !(g.abs_tol > 0.0 && g.rel_tol > 0.0) {
            return Err(CliError::Usage("tolerances must be positive".into()));
        }
        Ok(Self {
            hbar: g.hbar,
            abs_tol: g.abs_tol,
            rel_tol: g.rel_tol,
            output_format: g.format.unwrap_or(default_format),
            raw: g.raw,
        })
    }

    fn tolerance(&self) -> CliResult<Tolerance> {
        Tolerance::new(self.abs_tol, self.rel_tol).map_err(|e| CliError::Usage(e.to_string()))
    }

    fn report_config(&self, moments: bool) -> CliResult<ReportConfig> {
        Ok(ReportConfig {
            hbar: self.hbar,
            tol: self.tolerance()?,
            moments,
        })
    }
}

/// Runs one command and returns whether every check it performed passed.
pub fn run(cli: &Cli) -> CliResult<bool> {
    let mut out: Box<dyn Write> = match &cli.global.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let ok = run_to(cli, &mut out)?;
    out.flush()?;
    Ok(ok)
}

/// As [`run`], writing to `out` and ignoring `--out`.
pub fn run_to(cli: &Cli, out: &mut dyn Write) -> CliResult<bool> {
    let default_format = match cli.command {
        Command::Reproduce(_) | Command::Qubit(_) => Format::Text,
        _ => Format::Json,
    };
    let cfg = RunConfig::from_args(&cli.global, default_format)?;
    match &cli.command {
        Command::Product(a) => cmd_product(a, &cfg, out),
        Command::Quartiles(a) => cmd_quartiles(a, &cfg, out),
        Command::Reproduce(a) => cmd_reproduce(a, &cfg, out),
        Command::Search(a) => cmd_search(a, &cfg, out),
        Command::Qubit(a) => cmd_qubit(a, &cfg, out),
    }
}

fn catalog_params(a: &DistArgs) -> CliResult<BTreeMap<String, f64>> {
    let given = [
        ("mu", a.mu),
        ("sigma", a.sigma),
        ("x0", a.x0),
        ("gamma", a.gamma),
        ("n", a.n),
        ("d1", a.d1),
        ("d2", a.d2),
    ];
    let allowed: &[&str] = match a.dist {
        CatalogName::Cauchy => &["x0", "gamma"],
        CatalogName::Gaussian => &["mu", "sigma"],
        CatalogName::StudentT => &["n"],
        CatalogName::F => &["d1", "d2"],
    };
    let mut params = BTreeMap::new();
    for (name, value) in given {
        if let Some(v) = value {
            if !allowed.contains(&name) {
                return Err(CliError::Usage(format!(
                    "--{name} does not apply to {}",
                    a.dist.as_str()
                )));
            }
            params.insert(name.to_string(), v);
        }
    }
    Ok(params)
}

fn build_report(a: &DistArgs, cfg: &RunConfig) -> CliResult<UncertaintyReport> {
    let params = catalog_params(a)?;
    let wf = from_catalog(a.dist, &params).map_err(|e| CliError::Usage(e.to_string()))?;
    let report = uncertainty_report(&wf, &cfg.report_config(!a.no_moments)?)?;
    Ok(if cfg.raw { report } else { in_hbar_units(report) })
}

fn scale_moment(m: Option<MomentResult>, f: f64) -> Option<MomentResult> {
    m.map(|m| MomentResult {
        status: m.status,
        value: m.value.map(|v| v / f),
    })
}

fn scale_quartiles(q: Option<QuartileSet>, f: f64) -> Option<QuartileSet> {
    q.map(|q| QuartileSet {
        q1: q.q1 / f,
        median: q.median / f,
        q3: q.q3 / f,
        achieved_tol: q.achieved_tol,
    })
}

/// Divides momentum quantities by the matching power of ħ.
pub fn in_hbar_units(mut r: UncertaintyReport) -> UncertaintyReport {
    let h = r.hbar;
    r.siqr_p /= h;
    r.mean_p = scale_moment(r.mean_p, h);
    r.var_p = scale_moment(r.var_p, h * h);
    r.momentum_quartiles = scale_quartiles(r.momentum_quartiles, h);
    r
}

fn moment_text(m: &Option<MomentResult>) -> String {
    match m {
        None => String::new(),
        Some(MomentResult {
            status: MomentStatus::Divergent,
            ..
        }) => "divergent".into(),
        Some(MomentResult { value: Some(v), .. }) => format!("{v}"),
        Some(_) => String::new(),
    }
}

fn params_text(p: &BTreeMap<String, f64>) -> String {
    p.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
}

pub const PRODUCT_CSV_HEADER: [&str; 15] = [
    "label",
    "params",
    "hbar",
    "siqr_x",
    "siqr_p",
    "product_over_hbar",
    "mean_x",
    "var_x",
    "mean_p",
    "var_p",
    "variance_product_over_hbar",
    "abs_tol",
    "rel_tol",
    "achieved_x",
    "achieved_p",
];

fn cmd_product(a: &DistArgs, cfg: &RunConfig, out: &mut dyn Write) -> CliResult<bool> {
    let r = build_report(a, cfg)?;
    let p_unit = if cfg.raw { "" } else { " hbar" };
    match cfg.output_format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &r)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(PRODUCT_CSV_HEADER)?;
            w.write_record([
                r.label.clone(),
                params_text(&r.params),
                r.hbar.to_string(),
                r.siqr_x.to_string(),
                r.siqr_p.to_string(),
                r.product_over_hbar.to_string(),
                moment_text(&r.mean_x),
                moment_text(&r.var_x),
                moment_text(&r.mean_p),
                moment_text(&r.var_p),
                r.variance_product_over_hbar.map(|v| v.to_string()).unwrap_or_default(),
                r.tolerances.abs_tol.to_string(),
                r.tolerances.rel_tol.to_string(),
                r.tolerances.achieved_x.to_string(),
                r.tolerances.achieved_p.to_string(),
            ])?;
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "{} ({})", r.label, params_text(&r.params))?;
            writeln!(out, "  hbar                 {}", r.hbar)?;
            writeln!(out, "  siqr_x               {:.9}", r.siqr_x)?;
            writeln!(out, "  siqr_p               {:.9}{p_unit}", r.siqr_p)?;
            writeln!(out, "  product / hbar       {:.9}", r.product_over_hbar)?;
            if r.var_x.is_some() {
                writeln!(out, "  mean_x               {}", moment_text(&r.mean_x))?;
                writeln!(out, "  var_x                {}", moment_text(&r.var_x))?;
                writeln!(out, "  mean_p               {}", moment_text(&r.mean_p))?;
                writeln!(out, "  var_p                {}", moment_text(&r.var_p))?;
                let vp = r.variance_product_over_hbar.map(|v| format!("{v:.9}"));
                writeln!(out, "  dx dp / hbar         {}", vp.as_deref().unwrap_or("n/a"))?;
            }
            writeln!(
                out,
                "  achieved tolerance   x {:.1e}, p {:.1e}",
                r.tolerances.achieved_x, r.tolerances.achieved_p
            )?;
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct QuartileRow {
    axis: &'static str,
    q1: f64,
    median: f64,
    q3: f64,
    siqr: f64,
    achieved_tol: f64,
}

fn cmd_quartiles(a: &DistArgs, cfg: &RunConfig, out: &mut dyn Write) -> CliResult<bool> {
    let quiet = DistArgs { no_moments: true, ..a.clone() };
    let r = build_report(&quiet, cfg)?;
    let row = |axis, q: QuartileSet| QuartileRow {
        axis,
        q1: q.q1,
        median: q.median,
        q3: q.q3,
        siqr: q.siqr(),
        achieved_tol: q.achieved_tol,
    };
    let rows = [
        row("x", r.position_quartiles.expect("report fills quartiles")),
        row("p", r.momentum_quartiles.expect("report fills quartiles")),
    ];
    match cfg.output_format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &rows)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for r in &rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "{} ({})", r.label, params_text(&r.params))?;
            for q in &rows {
                writeln!(
                    out,
                    "  {}  q1 {:>13.9}  median {:>13.9}  q3 {:>13.9}  siqr {:.9}",
                    q.axis, q.q1, q.median, q.q3, q.siqr
                )?;
            }
        }
    }
    Ok(true)
}

fn run_search(objective: Objective, degree: usize, samples: usize, seed: u64, cfg: &RunConfig) -> CliResult<SearchResult> {
    if samples == 0 {
        return Err(CliError::Usage("--samples must be at least 1".into()));
    }
    if degree > crate::hermite::MAX_DEGREE {
        return Err(CliError::Usage(format!(
            "--degree must be at most {}",
            crate::hermite::MAX_DEGREE
        )));
    }
    let sc = SearchConfig {
        degree,
        samples,
        master_seed: seed,
        hbar: cfg.hbar,
        tol: cfg.tolerance()?,
        ..Default::default()
    };
    Ok(match objective {
        Objective::Siqr => min_siqr_search(&sc)?,
        Objective::Variance => min_variance_search(&sc)?,
    })
}

fn cmd_search(a: &SearchArgs, cfg: &RunConfig, out: &mut dyn Write) -> CliResult<bool> {
    let objective = match a.objective {
        ObjectiveArg::Siqr => Objective::Siqr,
        ObjectiveArg::Variance => Objective::Variance,
    };
    let r = run_search(objective, a.degree, a.samples, a.seed, cfg)?;
    match cfg.output_format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &r)?;
            writeln!(out)?;
        }
        Format::Csv => write_convergence_csv(&r, &mut *out)?,
        Format::Text => {
            writeln!(
                out,
                "{:?} search: degree {}, {} samples per degree, seed {}",
                r.objective, r.degree, r.samples, r.master_seed
            )?;
            for m in &r.per_degree_minima {
                writeln!(out, "  degree {:>2}  min {:.9}", m.degree, m.min)?;
            }
            writeln!(out, "  min SIQR product / hbar      {:.9}", r.min_product_over_hbar)?;
            if let Some(v) = r.min_variance_product_over_hbar {
                writeln!(out, "  min variance product / hbar  {v:.9}")?;
            }
            writeln!(out, "  failures {}/{}", r.failures, r.evaluated)?;
            if r.below_sanity_floor {
                writeln!(out, "  note: minimum fell below the sanity floor; review the argmin")?;
            }
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct QubitSummary<'a> {
    grid_p: usize,
    grid_theta: usize,
    points: usize,
    min_sum: f64,
    pass: bool,
    counterexample_count: usize,
    first_counterexamples: &'a [Counterexample],
}

fn qubit_summary(r: &TheoremReport) -> QubitSummary<'_> {
    QubitSummary {
        grid_p: r.grid_p,
        grid_theta: r.grid_theta,
        points: r.points,
        min_sum: r.min_sum,
        pass: r.pass,
        counterexample_count: r.counterexamples.len(),
        first_counterexamples: &r.counterexamples[..r.counterexamples.len().min(10)],
    }
}

fn qubit_report(grid_p: usize, grid_theta: usize) -> CliResult<TheoremReport> {
    verify_qubit_theorem(grid_p, grid_theta).map_err(|e| CliError::Usage(e.to_string()))
}

fn cmd_qubit(a: &QubitArgs, cfg: &RunConfig, out: &mut dyn Write) -> CliResult<bool> {
    let r = qubit_report(a.grid, a.grid_theta.unwrap_or(a.grid))?;
    let s = qubit_summary(&r);
    match cfg.output_format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &s)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["p", "theta", "siqr_x", "siqr_y"])?;
            for c in &r.counterexamples {
                w.serialize((c.p, c.theta, c.siqr_x, c.siqr_y))?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(
                out,
                "SIQR_x^2 + SIQR_y^2 >= 1 on {} points: {}",
                s.points,
                if s.pass { "holds" } else { "FAILS" }
            )?;
            writeln!(out, "  minimum sum       {}", s.min_sum)?;
            writeln!(out, "  counterexamples   {}", s.counterexample_count)?;
            for c in s.first_counterexamples {
                writeln!(
                    out,
                    "    p = {:.6}, theta = {:.6}: SIQR_x = {}, SIQR_y = {}",
                    c.p, c.theta, c.siqr_x, c.siqr_y
                )?;
            }
        }
    }
    Ok(r.pass)
}

/// One line of the reproduction table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReproduceRow {
    pub quantity: String,
    #[serde(rename = "paper_value")]
    pub published_value: String,
    pub computed_value: String,
    pub abs_diff: Option<f64>,
    pub pass: bool,
}

impl ReproduceRow {
    fn near(quantity: impl Into<String>, published: f64, computed: f64, tol: f64) -> Self {
        let diff = (computed - published).abs();
        Self {
            quantity: quantity.into(),
            published_value: format!("{published} ± {tol:e}"),
            computed_value: format!("{computed:.9}"),
            abs_diff: Some(diff),
            pass: diff <= tol,
        }
    }

    fn claim(quantity: impl Into<String>, published: impl Into<String>, computed: impl Into<String>, pass: bool) -> Self {
        Self {
            quantity: quantity.into(),
            published_value: published.into(),
            computed_value: computed.into(),
            abs_diff: None,
            pass,
        }
    }
}

fn divergent(m: &Option<MomentResult>) -> bool {
    matches!(m, Some(r) if r.status == MomentStatus::Divergent)
}

fn finite_value(m: &Option<MomentResult>) -> Option<f64> {
    m.as_ref().and_then(|r| r.value)
}

/// Recomputes every published result with fixed tolerances.
pub fn reproduce_rows(a: &ReproduceArgs, cfg: &RunConfig) -> CliResult<Vec<ReproduceRow>> {
    let rc = cfg.report_config(true)?;
    let report = |name: CatalogName, params: &[(&str, f64)]| -> CliResult<UncertaintyReport> {
        let p: BTreeMap<String, f64> = params.iter().map(|&(k, v)| (k.to_string(), v)).collect();
        let wf = from_catalog(name, &p)?;
        Ok(in_hbar_units(uncertainty_report(&wf, &rc)?))
    };
    let mut rows = Vec::new();

    let g = report(CatalogName::Gaussian, &[])?;
    rows.push(ReproduceRow::near("gaussian product_over_hbar", 0.2275, g.product_over_hbar, 5e-4));
    rows.push(ReproduceRow::near(
        "gaussian variance product",
        0.5,
        g.variance_product_over_hbar.unwrap_or(f64::NAN),
        1e-8,
    ));

    let mut cauchy_products = Vec::new();
    for (gamma, published) in [(1.0, 0.094), (2.0, 0.047), (3.0, 0.032), (4.0, 0.024)] {
        let c = report(CatalogName::Cauchy, &[("gamma", gamma)])?;
        rows.push(ReproduceRow::near(format!("cauchy gamma={gamma} siqr_p"), published, c.siqr_p, 1e-3));
        rows.push(ReproduceRow::near(
            format!("cauchy gamma={gamma} product_over_hbar"),
            0.094,
            c.product_over_hbar,
            1e-3,
        ));
        cauchy_products.push(c.product_over_hbar);
        if gamma == 1.0 {
            let both = divergent(&c.mean_x) && divergent(&c.var_x);
            rows.push(ReproduceRow::claim(
                "cauchy position mean and variance",
                "divergent",
                if both { "divergent" } else { "finite" },
                both,
            ));
        }
    }
    let spread = cauchy_products.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
        - cauchy_products.iter().cloned().fold(f64::INFINITY, f64::min);
    rows.push(ReproduceRow::near("cauchy product spread over gamma", 0.0, spread, 1e-5));

    let t2 = report(CatalogName::StudentT, &[("n", 2.0)])?;
    rows.push(ReproduceRow::near("t(2) siqr_x", (2.0f64 / 3.0).sqrt(), t2.siqr_x, 1e-6));
    rows.push(ReproduceRow::near("t(2) siqr_p", 0.161, t2.siqr_p, 1e-3));
    rows.push(ReproduceRow::near("t(2) product_over_hbar", 0.131, t2.product_over_hbar, 1e-3));
    rows.push(ReproduceRow::near(
        "t(2) position mean",
        0.0,
        finite_value(&t2.mean_x).unwrap_or(f64::NAN),
        1e-6,
    ));
    rows.push(ReproduceRow::claim(
        "t(2) position variance",
        "divergent",
        moment_text(&t2.var_x),
        divergent(&t2.var_x),
    ));

    let t3 = report(CatalogName::StudentT, &[("n", 3.0)])?;
    rows.push(ReproduceRow::near("t(3) siqr_x", 0.765, t3.siqr_x, 1e-3));
    rows.push(ReproduceRow::near("t(3) siqr_p", 0.200, t3.siqr_p, 1e-3));
    rows.push(ReproduceRow::near("t(3) product_over_hbar", 0.153, t3.product_over_hbar, 1e-3));
    let t3_finite = finite_value(&t3.var_x).is_some() && finite_value(&t3.var_p).is_some();
    rows.push(ReproduceRow::claim(
        "t(3) variances",
        "finite",
        if t3_finite { "finite" } else { "divergent" },
        t3_finite,
    ));
    let ordered = t2.product_over_hbar < t3.product_over_hbar && t3.product_over_hbar < g.product_over_hbar;
    rows.push(ReproduceRow::claim(
        "ordering t(2) < t(3) < gaussian",
        "0.131 < 0.153 < 0.2275",
        format!(
            "{:.4} < {:.4} < {:.4}",
            t2.product_over_hbar, t3.product_over_hbar, g.product_over_hbar
        ),
        ordered,
    ));

    let f = report(CatalogName::F, &[("d1", 5.0), ("d2", 2.0)])?;
    rows.push(ReproduceRow::claim(
        "F(5,2) product_over_hbar",
        "> 0.2275",
        format!("{:.9}", f.product_over_hbar),
        f.product_over_hbar > 0.2275,
    ));

    let s = run_search(Objective::Siqr, a.degree, a.samples, a.seed, cfg)?;
    rows.push(ReproduceRow::claim(
        format!("haar search min product, degree {}, {} samples", a.degree, a.samples),
        "<= 0.175 (1/5.88 = 0.1701)",
        format!("{:.9}", s.min_product_over_hbar),
        s.min_product_over_hbar <= 0.175,
    ));
    let monotone = s.per_degree_minima.windows(2).all(|w| w[1].min <= w[0].min);
    rows.push(ReproduceRow::claim(
        "haar search per-degree minima",
        "nonincreasing",
        if monotone { "nonincreasing" } else { "increasing step" },
        monotone,
    ));
    let v = run_search(Objective::Variance, a.variance_degree, a.samples, a.seed, cfg)?;
    let vmin = v.objective_min();
    rows.push(ReproduceRow::claim(
        format!("haar variance search min, degree {}", a.variance_degree),
        "in [0.5 - 1e-6, 0.5 + 1e-3]",
        format!("{vmin:.9}"),
        (0.5 - 1e-6..=0.5 + 1e-3).contains(&vmin),
    ));

    let q = qubit_report(a.grid, a.grid)?;
    rows.push(ReproduceRow::claim(
        format!("qubit SIQR_x^2 + SIQR_y^2 >= 1, {}x{} grid", a.grid, a.grid),
        "min 1, 0 counterexamples",
        format!("min {}, {} counterexamples", q.min_sum, q.counterexamples.len()),
        q.pass,
    ));
    Ok(rows)
}

fn cmd_reproduce(a: &ReproduceArgs, cfg: &RunConfig, out: &mut dyn Write) -> CliResult<bool> {
    let rows = reproduce_rows(a, cfg)?;
    let all = rows.iter().all(|r| r.pass);
    match cfg.output_format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &rows)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["quantity", "paper_value", "computed_value", "abs_diff", "pass"])?;
            for r in &rows {
                w.write_record([
                    r.quantity.clone(),
                    r.published_value.clone(),
                    r.computed_value.clone(),
                    r.abs_diff.map(|d| format!("{d:e}")).unwrap_or_default(),
                    if r.pass { "pass".into() } else { "fail".into() },
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            let width = rows.iter().map(|r| r.quantity.chars().count()).max().unwrap_or(0);
            for r in &rows {
                let diff = r.abs_diff.map(|d| format!("{d:.1e}")).unwrap_or_else(|| "-".into());
                writeln!(
                    out,
                    "{}  {:<width$}  published {:<28}  computed {:<40}  diff {:<8}",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.quantity,
                    r.published_value,
                    r.computed_value,
                    diff,
                )?;
            }
            let failed = rows.iter().filter(|r| !r.pass).count();
            writeln!(out, "{} of {} rows pass", rows.len() - failed, rows.len())?;
        }
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("siqr").chain(args.iter().copied())).unwrap()
    }

    fn run_to_string(args: &[&str]) -> (CliResult<bool>, String) {
        let mut buf = Vec::new();
        let r = run_to(&parse(args), &mut buf);
        (r, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn product_json_keys() {
        let (r, s) = run_to_string(&["product", "gaussian", "--mu", "0", "--sigma", "1"]);
        assert!(r.unwrap());
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        let mut expected = vec![
            "label",
            "params",
            "hbar",
            "siqr_x",
            "siqr_p",
            "product_over_hbar",
            "mean_x",
            "var_x",
            "mean_p",
            "var_p",
            "variance_product_over_hbar",
            "tolerances",
        ];
        expected.sort();
        let mut keys = keys;
        keys.sort();
        assert_eq!(keys, expected);
        assert!((v["product_over_hbar"].as_f64().unwrap() - 0.2275).abs() < 5e-4);
    }

    #[test]
    fn momentum_printed_in_hbar_units() {
        let (_, s) = run_to_string(&["--hbar", "2", "product", "cauchy", "--gamma", "3", "--no-moments"]);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        let p = v["siqr_p"].as_f64().unwrap();
        assert!((p - 0.0313).abs() < 1e-3, "{p}");
        let (_, s) = run_to_string(&["--hbar", "2", "--raw", "product", "cauchy", "--gamma", "3", "--no-moments"]);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert!((v["siqr_p"].as_f64().unwrap() - 2.0 * p).abs() < 1e-9);
    }

    #[test]
    fn product_csv_has_fixed_header() {
        let (_, s) = run_to_string(&["--format", "csv", "product", "student-t", "--n", "2"]);
        let mut lines = s.lines();
        assert_eq!(lines.next().unwrap(), PRODUCT_CSV_HEADER.join(","));
        let row = lines.next().unwrap();
        assert!(row.contains("divergent"));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert!(Cli::try_parse_from(["siqr", "product", "lognormal"]).is_err());
        let (r, _) = run_to_string(&["product", "gaussian", "--gamma", "2"]);
        assert_eq!(r.unwrap_err().exit_code(), 2);
        let (r, _) = run_to_string(&["--hbar=-1", "product", "gaussian"]);
        assert_eq!(r.unwrap_err().exit_code(), 2);
        let (r, _) = run_to_string(&["product", "cauchy", "--gamma", "0"]);
        assert_eq!(r.unwrap_err().exit_code(), 2);
    }

    #[test]
    fn search_degree_zero() {
        let (r, s) = run_to_string(&["search", "--degree", "0", "--samples", "10"]);
        assert!(r.unwrap());
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert!((v["min_product_over_hbar"].as_f64().unwrap() - 0.2275).abs() < 5e-4);
        assert!(v["argmin_state"]["coefficients"].is_array());
    }

    #[test]
    fn quartiles_text() {
        let (r, s) = run_to_string(&["--format", "text", "quartiles", "cauchy"]);
        assert!(r.unwrap());
        assert!(s.lines().count() == 3);
    }

    #[test]
    fn qubit_reports_counterexamples() {
        let (r, s) = run_to_string(&["--format", "json", "qubit", "--grid", "101"]);
        assert!(!r.unwrap());
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert!(v["counterexample_count"].as_u64().unwrap() > 0);
    }
}
