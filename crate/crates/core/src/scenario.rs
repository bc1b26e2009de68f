//! Scenario front end: config ingestion, the named-scenario registry, and
//! all file emission (JSON reports, CSV tables).

use std::collections::BTreeSet;
use std::fs::{self, File};
use std::io::{BufWriter, Write as _};
use std::path::{Path, PathBuf};

use serde::{Serialize, Serializer};

use crate::boundary::StationaryDensity;
use crate::engine::{self, ensemble_snapshots, PathConfig, SchemeKind};
use crate::error::{Error, Result};
use crate::estimators::{lyapunov_exponent, tv_decay_series, Histogram1D, Histogram2D};
use crate::params::{DerivedQuantities, LjxReport, SirParams};
use crate::rng::RngStream;
use crate::support::{support_spec, SupportKind, SupportSpec};

/// The three canonical parameter sets used throughout the test corpus.
///
/// 1: (20, 4, 1, 10, 1, 1, -1) — permanent, barrier-region support.
/// 2: (7, 3, 1, 1, 2, 1, 1) — permanent, full-quadrant support.
/// 3: (5, 5, 4, 1, 1, 2, -1) — extinct.
pub fn example_params(n: u8) -> SirParams {
    match n {
        1 => SirParams::new(20.0, 4.0, 1.0, 10.0, 1.0, 1.0, -1.0),
        2 => SirParams::new(7.0, 3.0, 1.0, 1.0, 2.0, 1.0, 1.0),
        3 => SirParams::new(5.0, 5.0, 4.0, 1.0, 1.0, 2.0, -1.0),
        other => panic!("no example parameter set {other}"),
    }
}

/// Fully resolved inputs for one scenario run.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub params: SirParams,
    /// Noise intensity on the third equation; `Some` switches `simulate`
    /// to the three-equation system with independent noise channels.
    pub sigma3: Option<f64>,
    pub s0: f64,
    pub i0: f64,
    pub r0: f64,
    pub dt: f64,
    pub t_final: f64,
    pub record_stride: Option<usize>,
    pub scheme: SchemeKind,
    pub n_paths: usize,
    pub master_seed: u64,
    pub out_dir: PathBuf,
    pub scenario: String,
    pub quiet: bool,
}

impl ScenarioConfig {
    pub fn new(params: SirParams, scenario: &str) -> Self {
        Self {
            params,
            sigma3: None,
            s0: 1.0,
            i0: 1.0,
            r0: 1.0,
            dt: 0.01,
            t_final: 100.0,
            record_stride: None,
            scheme: SchemeKind::default(),
            n_paths: 1000,
            master_seed: 0,
            out_dir: PathBuf::from("out"),
            scenario: scenario.to_string(),
            quiet: false,
        }
    }

    pub fn validate(mut self) -> Result<Self> {
        self.params = self.params.validate()?;
        if self.n_paths < 1 {
            return Err(Error::Config("n_paths must be >= 1".into()));
        }
        self.path_config()?; // surfaces dt/t_final/stride problems early
        Ok(self)
    }

    pub fn path_config(&self) -> Result<PathConfig> {
        let cfg = PathConfig::new(self.dt, self.t_final)?.with_scheme(self.scheme);
        match self.record_stride {
            Some(k) => cfg.with_stride(k),
            None => Ok(cfg),
        }
    }
}

/// Partial settings coming from the command line; each `Some` wins over the
/// config file.
#[derive(Debug, Clone, Default)]
pub struct CliOverrides {
    pub scenario: Option<String>,
    pub seed: Option<u64>,
    pub paths: Option<usize>,
    pub dt: Option<f64>,
    pub t_final: Option<f64>,
    pub out: Option<PathBuf>,
    pub quiet: bool,
}

impl CliOverrides {
    pub fn apply(&self, mut cfg: ScenarioConfig) -> ScenarioConfig {
        if let Some(s) = &self.scenario {
            cfg.scenario = s.clone();
        }
        if let Some(v) = self.seed {
            cfg.master_seed = v;
        }
        if let Some(v) = self.paths {
            cfg.n_paths = v;
        }
        if let Some(v) = self.dt {
            cfg.dt = v;
        }
        if let Some(v) = self.t_final {
            cfg.t_final = v;
        }
        if let Some(v) = &self.out {
            cfg.out_dir = v.clone();
        }
        cfg.quiet |= self.quiet;
        cfg
    }
}

const KNOWN_KEYS: &[&str] = &[
    "alpha", "beta", "mu", "rho", "gamma", "sigma1", "sigma2", "sigma3", "s0", "i0", "r0",
    "dt", "t_final", "record_stride", "scheme", "n_paths", "seed", "scenario", "out",
];

/// Parses a flat `key = value` config file. Lines starting with `#` and
/// blank lines are skipped; unknown and duplicate keys are rejected with the
/// offending line number; missing required keys are named.
pub fn parse_config(path: &Path) -> Result<ScenarioConfig> {
    let text = fs::read_to_string(path)?;
    parse_config_str(&text)
}

pub fn parse_config_str(text: &str) -> Result<ScenarioConfig> {
    let mut seen = BTreeSet::new();
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (key, value) = trimmed.split_once('=').ok_or_else(|| Error::Parse {
            line,
            msg: format!("expected `key = value`, got `{trimmed}`"),
        })?;
        let key = key.trim();
        let value = value.trim();
        if !KNOWN_KEYS.contains(&key) {
            return Err(Error::Parse { line, msg: format!("unknown key `{key}`") });
        }
        if !seen.insert(key.to_string()) {
            return Err(Error::Parse { line, msg: format!("duplicate key `{key}`") });
        }
        pairs.push((line, key.to_string(), value.to_string()));
    }
    let get = |key: &str| pairs.iter().find(|(_, k, _)| k == key);
    let req_f64 = |key: &str| -> Result<f64> {
        let (line, _, v) =
            get(key).ok_or_else(|| Error::Config(format!("missing required key `{key}`")))?;
        v.parse::<f64>().map_err(|e| Error::Parse { line: *line, msg: format!("{key}: {e}") })
    };
    let opt_f64 = |key: &str| -> Result<Option<f64>> {
        match get(key) {
            None => Ok(None),
            Some((line, _, v)) => v
                .parse::<f64>()
                .map(Some)
                .map_err(|e| Error::Parse { line: *line, msg: format!("{key}: {e}") }),
        }
    };
    let params = SirParams::new(
        req_f64("alpha")?,
        req_f64("beta")?,
        req_f64("mu")?,
        req_f64("rho")?,
        req_f64("gamma")?,
        req_f64("sigma1")?,
        req_f64("sigma2")?,
    );
    let (_, _, scenario) = get("scenario")
        .ok_or_else(|| Error::Config("missing required key `scenario`".into()))?;
    let mut cfg = ScenarioConfig::new(params, scenario);
    cfg.sigma3 = opt_f64("sigma3")?;
    if let Some(v) = opt_f64("s0")? {
        cfg.s0 = v;
    }
    if let Some(v) = opt_f64("i0")? {
        cfg.i0 = v;
    }
    if let Some(v) = opt_f64("r0")? {
        cfg.r0 = v;
    }
    if let Some(v) = opt_f64("dt")? {
        cfg.dt = v;
    }
    if let Some(v) = opt_f64("t_final")? {
        cfg.t_final = v;
    }
    if let Some((line, _, v)) = get("record_stride") {
        cfg.record_stride = Some(v.parse().map_err(|e| Error::Parse {
            line: *line,
            msg: format!("record_stride: {e}"),
        })?);
    }
    if let Some((line, _, v)) = get("scheme") {
        cfg.scheme = v
            .parse()
            .map_err(|e| Error::Parse { line: *line, msg: format!("scheme: {e}") })?;
    }
    if let Some((line, _, v)) = get("n_paths") {
        cfg.n_paths = v
            .parse()
            .map_err(|e| Error::Parse { line: *line, msg: format!("n_paths: {e}") })?;
    }
    if let Some((line, _, v)) = get("seed") {
        cfg.master_seed = v
            .parse()
            .map_err(|e| Error::Parse { line: *line, msg: format!("seed: {e}") })?;
    }
    if let Some((_, _, v)) = get("out") {
        cfg.out_dir = PathBuf::from(v);
    }
    Ok(cfg)
}

fn serialize_extended<S: Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if x.is_finite() {
        s.serialize_f64(*x)
    } else if *x == f64::NEG_INFINITY {
        s.serialize_str("-inf")
    } else {
        s.serialize_str("inf")
    }
}

/// The closed-form classification of one parameter set: threshold, verdict,
/// support characterization, and the older sufficient-condition report.
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub params: SirParams,
    pub lambda: f64,
    pub lambda_deterministic: f64,
    pub r0: f64,
    pub c1: f64,
    pub c2: f64,
    pub r: f64,
    pub a: f64,
    pub b: f64,
    #[serde(serialize_with = "serialize_extended")]
    pub dstar: f64,
    pub cstar: Option<f64>,
    pub verdict: String,
    pub support: SupportKind,
    pub ljx: LjxReport,
    /// Set when the parameters coincide with the third canonical example,
    /// whose published threshold value disagrees with the formula.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub paper_note: Option<String>,
}

impl ClassificationReport {
    pub fn for_params(p: &SirParams) -> Result<Self> {
        let p = p.validate()?;
        let d: DerivedQuantities = p.derive()?;
        let spec = support_spec(&p)?;
        let paper_note = if p == example_params(3) {
            Some(
                "the published example states lambda = -1.75 for these parameters, while the \
                 threshold formula gives -0.25; both are negative, so the verdict is unchanged. \
                 The printed value matches these parameters with the two noise intensities \
                 swapped."
                    .to_string(),
            )
        } else {
            None
        };
        Ok(Self {
            params: p,
            lambda: d.lambda,
            lambda_deterministic: d.lambda_d,
            r0: d.r0,
            c1: d.c1,
            c2: d.c2,
            r: d.r,
            a: d.a,
            b: d.b,
            dstar: d.dstar,
            cstar: d.cstar,
            verdict: d.verdict.to_string(),
            support: spec.kind,
            ljx: p.ljx_sufficient_conditions(),
            paper_note,
        })
    }
}

/// A named, runnable analysis selected at runtime via config or CLI.
pub trait Scenario: Sync {
    fn name(&self) -> &'static str;
    fn describe(&self) -> &'static str;
    fn run(&self, cfg: &ScenarioConfig) -> Result<()>;
}

struct Classify;
struct Simulate;
struct Stationary;
struct Lyapunov;
struct TvDecay;
struct Support;
struct Example(u8);

static CLASSIFY: Classify = Classify;
static SIMULATE: Simulate = Simulate;
static STATIONARY: Stationary = Stationary;
static LYAPUNOV: Lyapunov = Lyapunov;
static TV_DECAY: TvDecay = TvDecay;
static SUPPORT: Support = Support;
static EXAMPLE1: Example = Example(1);
static EXAMPLE2: Example = Example(2);
static EXAMPLE3: Example = Example(3);

static REGISTRY: [&dyn Scenario; 9] = [
    &CLASSIFY, &SIMULATE, &STATIONARY, &LYAPUNOV, &TV_DECAY, &SUPPORT, &EXAMPLE1, &EXAMPLE2,
    &EXAMPLE3,
];

pub fn scenarios() -> &'static [&'static dyn Scenario] {
    &REGISTRY
}

pub fn scenario_by_name(name: &str) -> Option<&'static dyn Scenario> {
    REGISTRY.iter().copied().find(|s| s.name() == name)
}

/// Validates the config and dispatches to the registered scenario.
pub fn run(cfg: &ScenarioConfig) -> Result<()> {
    let cfg = cfg.clone().validate()?;
    let scenario = scenario_by_name(&cfg.scenario).ok_or_else(|| {
        Error::Config(format!(
            "unknown scenario `{}`; registered: {}",
            cfg.scenario,
            REGISTRY.iter().map(|s| s.name()).collect::<Vec<_>>().join(", ")
        ))
    })?;
    fs::create_dir_all(&cfg.out_dir)?;
    scenario.run(&cfg)
}

/// Reproduces canonical example `n` into `out` with the given seed.
pub fn run_example(n: u8, master_seed: u64, out: &Path) -> Result<()> {
    let mut cfg = ScenarioConfig::new(example_params(n), &format!("example{n}"));
    cfg.master_seed = master_seed;
    cfg.out_dir = out.to_path_buf();
    cfg.quiet = true;
    run(&cfg)
}

fn say(cfg: &ScenarioConfig, msg: &str) {
    if !cfg.quiet {
        println!("{msg}");
    }
}

fn out_file(cfg: &ScenarioConfig, name: &str) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(cfg.out_dir.join(name))?))
}

fn write_json<T: Serialize>(cfg: &ScenarioConfig, name: &str, value: &T) -> Result<()> {
    let mut w = out_file(cfg, name)?;
    serde_json::to_writer_pretty(&mut w, value).map_err(|e| Error::Config(e.to_string()))?;
    writeln!(w)?;
    Ok(())
}

pub fn write_histogram1d_csv<W: std::io::Write>(w: &mut W, h: &Histogram1D) -> Result<()> {
    writeln!(w, "bin_lo,bin_hi,mass")?;
    for (k, m) in h.mass.iter().enumerate() {
        writeln!(w, "{:.16e},{:.16e},{:.16e}", h.edges[k], h.edges[k + 1], m)?;
    }
    Ok(())
}

pub fn write_histogram2d_csv<W: std::io::Write>(w: &mut W, h: &Histogram2D) -> Result<()> {
    writeln!(w, "x_lo,x_hi,y_lo,y_hi,mass")?;
    let ny = h.y_edges.len() - 1;
    for ix in 0..h.x_edges.len() - 1 {
        for iy in 0..ny {
            writeln!(
                w,
                "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
                h.x_edges[ix],
                h.x_edges[ix + 1],
                h.y_edges[iy],
                h.y_edges[iy + 1],
                h.mass[ix * ny + iy]
            )?;
        }
    }
    Ok(())
}

pub fn write_tv_csv<W: std::io::Write>(w: &mut W, series: &[(f64, f64)]) -> Result<()> {
    writeln!(w, "t,tv")?;
    for (t, tv) in series {
        writeln!(w, "{t:.16e},{tv:.16e}")?;
    }
    Ok(())
}

/// The barrier curve S = (c*/I)^(1/r) sampled over a log-grid on I starting
/// exactly at I = 1.
pub fn write_support_boundary_csv<W: std::io::Write>(
    w: &mut W,
    spec: &SupportSpec,
    i_hi: f64,
    n_points: usize,
) -> Result<()> {
    let cstar = spec
        .cstar
        .ok_or_else(|| Error::Domain("support boundary needs a barrier level".into()))?;
    writeln!(w, "I,S_boundary")?;
    let log_hi = i_hi.ln();
    for k in 0..n_points {
        let i = if k == 0 { 1.0 } else { (log_hi * k as f64 / (n_points - 1) as f64).exp() };
        let s = (cstar / i).powf(1.0 / spec.r);
        writeln!(w, "{i:.16e},{s:.16e}")?;
    }
    Ok(())
}

impl Scenario for Classify {
    fn name(&self) -> &'static str {
        "classify"
    }

    fn describe(&self) -> &'static str {
        "closed-form threshold, verdict, and support report (no simulation)"
    }

    fn run(&self, cfg: &ScenarioConfig) -> Result<()> {
        let report = ClassificationReport::for_params(&cfg.params)?;
        write_json(cfg, "classification.json", &report)?;
        say(
            cfg,
            &format!("lambda = {:.6}, verdict {} -> classification.json", report.lambda, report.verdict),
        );
        Ok(())
    }
}

impl Scenario for Simulate {
    fn name(&self) -> &'static str {
        "simulate"
    }

    fn describe(&self) -> &'static str {
        "one sample path to trajectory.csv (three-equation system when sigma3 is set)"
    }

    fn run(&self, cfg: &ScenarioConfig) -> Result<()> {
        let path_cfg = cfg.path_config()?;
        let rng = RngStream::new(cfg.master_seed, 0);
        let traj = match cfg.sigma3 {
            Some(s3) => engine::simulate_nondegenerate(
                &cfg.params, s3, cfg.s0, cfg.i0, cfg.r0, &path_cfg, rng,
            )?,
            None => engine::simulate_degenerate(&cfg.params, cfg.s0, cfg.i0, &path_cfg, rng)?,
        };
        let mut w = out_file(cfg, "trajectory.csv")?;
        traj.write_csv(&mut w)?;
        say(cfg, &format!("{} recorded steps -> trajectory.csv", traj.len()));
        Ok(())
    }
}

impl Scenario for Stationary {
    fn name(&self) -> &'static str {
        "stationary"
    }

    fn describe(&self) -> &'static str {
        "table of the boundary stationary density to stationary_density.csv"
    }

    fn run(&self, cfg: &ScenarioConfig) -> Result<()> {
        let d = StationaryDensity::from_params(&cfg.params)?;
        let lo = d.quantile(1e-4)?;
        let hi = d.quantile(1.0 - 1e-4)?;
        let n = 400;
        let mut w = out_file(cfg, "stationary_density.csv")?;
        writeln!(w, "x,fstar")?;
        for k in 0..n {
            let x = lo * (hi / lo).powf(k as f64 / (n - 1) as f64);
            writeln!(w, "{:.16e},{:.16e}", x, d.density_at(x)?)?;
        }
        say(
            cfg,
            &format!("shape {} scale {} mean {} -> stationary_density.csv", d.shape(), d.scale(), d.mean()),
        );
        Ok(())
    }
}

#[derive(Serialize)]
struct LyapunovSummary {
    lambda_formula: f64,
    burn_in: f64,
    slopes: Vec<f64>,
    mean_slope: f64,
}

impl Scenario for Lyapunov {
    fn name(&self) -> &'static str {
        "lyapunov"
    }

    fn describe(&self) -> &'static str {
        "per-path log-I slopes across the ensemble to lyapunov.json"
    }

    fn run(&self, cfg: &ScenarioConfig) -> Result<()> {
        let path_cfg = cfg.path_config()?;
        let burn_in = 0.1 * cfg.t_final;
        use rayon::prelude::*;
        let slopes: Result<Vec<f64>> = (0..cfg.n_paths)
            .into_par_iter()
            .map(|j| {
                let traj = engine::simulate_degenerate(
                    &cfg.params,
                    cfg.s0,
                    cfg.i0,
                    &path_cfg,
                    RngStream::new(cfg.master_seed, j as u64),
                )?;
                Ok(lyapunov_exponent(&traj, burn_in)?.slope)
            })
            .collect();
        let slopes = slopes?;
        let mean_slope = slopes.iter().sum::<f64>() / slopes.len() as f64;
        let summary = LyapunovSummary {
            lambda_formula: cfg.params.threshold_lambda(),
            burn_in,
            slopes,
            mean_slope,
        };
        write_json(cfg, "lyapunov.json", &summary)?;
        say(cfg, &format!("mean slope {mean_slope:.4} -> lyapunov.json"));
        Ok(())
    }
}

impl Scenario for TvDecay {
    fn name(&self) -> &'static str {
        "tv-decay"
    }

    fn describe(&self) -> &'static str {
        "total-variation distance to the late-time law at dyadic checkpoints, to tv_decay.csv"
    }

    fn run(&self, cfg: &ScenarioConfig) -> Result<()> {
        let t = cfg.t_final;
        let checkpoints = [t / 16.0, t / 8.0, t / 4.0, t / 2.0];
        let series = tv_decay_series(
            &cfg.params,
            cfg.s0,
            cfg.i0,
            cfg.n_paths,
            &checkpoints,
            t,
            cfg.dt,
            cfg.scheme,
            cfg.master_seed,
        )?;
        let mut w = out_file(cfg, "tv_decay.csv")?;
        write_tv_csv(&mut w, &series)?;
        say(cfg, &format!("{} checkpoints -> tv_decay.csv", series.len()));
        Ok(())
    }
}

impl Scenario for Support {
    fn name(&self) -> &'static str {
        "support"
    }

    fn describe(&self) -> &'static str {
        "support characterization to support.json (+ support_boundary.csv when a barrier exists)"
    }

    fn run(&self, cfg: &ScenarioConfig) -> Result<()> {
        let p = cfg.params.validate()?;
        let spec = support_spec(&p)?;
        write_json(cfg, "support.json", &spec)?;
        if spec.cstar.is_some() {
            let mut w = out_file(cfg, "support_boundary.csv")?;
            write_support_boundary_csv(&mut w, &spec, 100.0, 200)?;
            say(cfg, "barrier region -> support.json, support_boundary.csv");
        } else {
            say(cfg, "full quadrant -> support.json");
        }
        Ok(())
    }
}

const EXAMPLE_DENSITY_TIME: f64 = 50.0;
const EXAMPLE_BINS_2D: usize = 40;
const EXAMPLE_BINS_1D: usize = 50;

impl Scenario for Example {
    fn name(&self) -> &'static str {
        match self.0 {
            1 => "example1",
            2 => "example2",
            _ => "example3",
        }
    }

    fn describe(&self) -> &'static str {
        "reproduces one canonical example: trajectory, densities, and summary report"
    }

    /// Uses the built-in canonical parameter set for its number; the rate
    /// keys of the config file are ignored here by design.
    fn run(&self, cfg: &ScenarioConfig) -> Result<()> {
        let p = example_params(self.0);
        let report = ClassificationReport::for_params(&p)?;
        write_json(cfg, "summary.json", &report)?;

        let traj_cfg = PathConfig::new(1e-3, 100.0)?.with_scheme(cfg.scheme);
        let traj = engine::simulate_degenerate(
            &p,
            cfg.s0,
            cfg.i0,
            &traj_cfg,
            RngStream::new(cfg.master_seed, 0),
        )?;
        let mut w = out_file(cfg, "trajectory.csv")?;
        traj.write_csv(&mut w)?;

        // ensemble snapshot at t = 50 on its own seed domain, disjoint from
        // the trajectory stream via a distinct master seed derivation
        let ens_seed = cfg.master_seed ^ 0xD15E_A5E5;
        let n_paths = cfg.n_paths.max(2000);
        // dt fine enough that the alpha/S repulsion stays resolvable even
        // for the large-noise extinction example
        let rows = ensemble_snapshots(
            &p,
            cfg.s0,
            cfg.i0,
            1e-3,
            cfg.scheme,
            &[EXAMPLE_DENSITY_TIME],
            n_paths,
            ens_seed,
        )?;
        let states = &rows[0];

        match self.0 {
            1 | 2 => {
                let (mut xh, mut yh) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
                for &(x, y) in states {
                    xh = xh.max(x);
                    yh = yh.max(y);
                }
                let h = Histogram2D::from_points(
                    states,
                    EXAMPLE_BINS_2D,
                    EXAMPLE_BINS_2D,
                    (0.0, xh * 1.000001),
                    (0.0, yh * 1.000001),
                )?;
                let mut w = out_file(cfg, "empirical_density.csv")?;
                write_histogram2d_csv(&mut w, &h)?;
                if self.0 == 1 {
                    let spec = support_spec(&p)?;
                    let mut w = out_file(cfg, "support_boundary.csv")?;
                    write_support_boundary_csv(&mut w, &spec, 100.0, 200)?;
                }
            }
            _ => {
                // extinction: the S marginal at t = 50 against the binned
                // boundary stationary law, on one shared grid
                let d = StationaryDensity::from_params(&p)?;
                let s_samples: Vec<f64> = states.iter().map(|&(s, _)| s).collect();
                let hi = d.quantile(1.0 - 1e-4)?.max(
                    s_samples.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
                ) * 1.000001;
                let emp =
                    Histogram1D::from_samples(&s_samples, EXAMPLE_BINS_1D, Some((0.0, hi)))?;
                let refh = Histogram1D::binned_density(
                    |x| if x <= 0.0 { Ok(0.0) } else { d.cdf(x) },
                    &emp.edges,
                )?;
                let mut w = out_file(cfg, "empirical_S_t50.csv")?;
                write_histogram1d_csv(&mut w, &emp)?;
                let mut w = out_file(cfg, "stationary_density.csv")?;
                write_histogram1d_csv(&mut w, &refh)?;
            }
        }
        say(cfg, &format!("example {} artifacts written to {}", self.0, cfg.out_dir.display()));
        Ok(())
    }
}
