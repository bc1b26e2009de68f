//! Seeded, positivity-preserving numerical integration of the model's SDE
//! systems, with shared-noise coupling for pathwise comparison runs.

pub mod scheme;
pub mod system;

use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::params::SirParams;
use crate::rng::{standard_normal, RngStream};
pub use scheme::{scheme_by_name, schemes, Scheme, SchemeKind, Scratch};
use system::{Boundary1, Degenerate2, DominatingPair, SdeSystem, ThreeEquation};

const MAX_STEPS: f64 = 1e9;
const MAX_RECORDED: usize = 1_000_000;

/// Step size, horizon, scheme, and recording stride for one integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathConfig {
    pub dt: f64,
    pub t_final: f64,
    pub scheme: SchemeKind,
    pub record_stride: usize,
}

impl PathConfig {
    /// Default stride keeps at most one million recorded points.
    pub fn new(dt: f64, t_final: f64) -> Result<Self> {
        let cfg = Self { dt, t_final, scheme: SchemeKind::default(), record_stride: 1 };
        cfg.check()?;
        let stride = (cfg.n_steps() / MAX_RECORDED).max(1);
        Ok(Self { record_stride: stride, ..cfg })
    }

    pub fn with_scheme(self, scheme: SchemeKind) -> Self {
        Self { scheme, ..self }
    }

    pub fn with_stride(self, record_stride: usize) -> Result<Self> {
        let cfg = Self { record_stride, ..self };
        cfg.check()?;
        Ok(cfg)
    }

    pub fn n_steps(&self) -> usize {
        (self.t_final / self.dt).round().max(1.0) as usize
    }

    fn check(&self) -> Result<()> {
        if !(self.dt > 0.0) || !self.dt.is_finite() {
            return Err(Error::Config(format!("dt must be positive, got {}", self.dt)));
        }
        if !(self.t_final > self.dt) {
            return Err(Error::Config(format!(
                "t_final ({}) must exceed dt ({})",
                self.t_final, self.dt
            )));
        }
        if self.t_final / self.dt > MAX_STEPS {
            return Err(Error::Config(format!(
                "t_final/dt = {:.3e} exceeds the {MAX_STEPS:.0e} step guard",
                self.t_final / self.dt
            )));
        }
        if self.record_stride == 0 {
            return Err(Error::Config("record_stride must be >= 1".into()));
        }
        Ok(())
    }
}

/// Time-indexed samples of one realized path.
///
/// `log_i` is carried exactly alongside `i`; extinction runs drive I below
/// the smallest positive double, so `i` underflows to zero on output while
/// `log_i` keeps the exact exponent.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub s: Vec<f64>,
    pub i: Vec<f64>,
    pub log_i: Vec<f64>,
    pub r_class: Option<Vec<f64>>,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// CSV export: `t,S,I[,R]` (or `t,S` for one-dimensional runs),
    /// 17 significant digits.
    pub fn write_csv<W: std::io::Write>(&self, w: &mut W) -> Result<()> {
        let has_i = !self.i.is_empty();
        match (&self.r_class, has_i) {
            (Some(_), _) => writeln!(w, "t,S,I,R")?,
            (None, true) => writeln!(w, "t,S,I")?,
            (None, false) => writeln!(w, "t,S")?,
        }
        for k in 0..self.len() {
            write!(w, "{:.16e},{:.16e}", self.times[k], self.s[k])?;
            if has_i {
                write!(w, ",{:.16e}", self.i[k])?;
            }
            if let Some(r) = &self.r_class {
                write!(w, ",{:.16e}", r[k])?;
            }
            writeln!(w)?;
        }
        Ok(())
    }
}

/// A degenerate path together with its dominating boundary pair, all three
/// driven by the same Brownian increments and aligned on one time grid.
#[derive(Debug, Clone)]
pub struct CoupledComparison {
    pub traj: Trajectory,
    pub s_hat: Vec<f64>,
    pub i_hat: Vec<f64>,
    pub log_i_hat: Vec<f64>,
}

struct Recorder {
    stride: usize,
    n_steps: usize,
    times: Vec<f64>,
    coords: Vec<Vec<f64>>,
    logs: Vec<Vec<f64>>,
}

impl Recorder {
    fn new(dim: usize, stride: usize, n_steps: usize) -> Self {
        Self {
            stride,
            n_steps,
            times: Vec::new(),
            coords: vec![Vec::new(); dim],
            logs: vec![Vec::new(); dim],
        }
    }

    fn observe(&mut self, scheme: &dyn Scheme, step: usize, t: f64, state: &[f64], buf: &mut [f64]) {
        if step % self.stride != 0 && step != self.n_steps {
            return;
        }
        self.times.push(t);
        scheme.coords(state, buf);
        for (col, &v) in self.coords.iter_mut().zip(buf.iter()) {
            col.push(v);
        }
        scheme.log_coords(state, buf);
        for (col, &v) in self.logs.iter_mut().zip(buf.iter()) {
            col.push(v);
        }
    }
}

fn drive<F>(
    sys: &dyn SdeSystem,
    scheme: &dyn Scheme,
    x0: &[f64],
    cfg: &PathConfig,
    streams: &[RngStream],
    mut observe: F,
) -> Result<()>
where
    F: FnMut(&dyn Scheme, usize, f64, &[f64]),
{
    cfg.check()?;
    debug_assert_eq!(streams.len(), sys.noise_dim());
    let mut rngs: Vec<ChaCha8Rng> = streams.iter().map(|s| s.rng()).collect();
    let mut state = scheme.init_state(x0);
    let mut scratch = Scratch::for_dim(sys.dim());
    let mut db = vec![0.0; sys.noise_dim()];
    let sqrt_dt = cfg.dt.sqrt();
    let n_steps = cfg.n_steps();
    observe(scheme, 0, 0.0, &state);
    for k in 1..=n_steps {
        for (d, rng) in db.iter_mut().zip(rngs.iter_mut()) {
            *d = standard_normal(rng) * sqrt_dt;
        }
        scheme.step(sys, &mut state, &mut scratch, cfg.dt, &db);
        if !scheme.state_valid(&state) {
            return Err(Error::NonFiniteState { step: k });
        }
        observe(scheme, k, k as f64 * cfg.dt, &state);
    }
    Ok(())
}

fn integrate(
    sys: &dyn SdeSystem,
    x0: &[f64],
    cfg: &PathConfig,
    streams: &[RngStream],
) -> Result<Recorder> {
    let scheme = cfg.scheme.resolve();
    let mut rec = Recorder::new(sys.dim(), cfg.record_stride, cfg.n_steps());
    let mut buf = vec![0.0; sys.dim()];
    drive(sys, scheme, x0, cfg, streams, |scheme, step, t, state| {
        rec.observe(scheme, step, t, state, &mut buf)
    })?;
    Ok(rec)
}

fn check_initial(name: &'static str, v: f64, allow_zero: bool) -> Result<()> {
    let ok = if allow_zero { v >= 0.0 } else { v > 0.0 };
    if !ok || !v.is_finite() {
        return Err(Error::Domain(format!("initial value {name} = {v} is out of range")));
    }
    Ok(())
}

/// Integrates the 2-D degenerate system (one shared Brownian path).
///
/// `i0 = 0` is accepted and reproduces the boundary dynamics exactly: the
/// log state of I stays at -inf and S never feels the contact term.
pub fn simulate_degenerate(
    p: &SirParams,
    s0: f64,
    i0: f64,
    cfg: &PathConfig,
    rng: RngStream,
) -> Result<Trajectory> {
    check_initial("s0", s0, false)?;
    check_initial("i0", i0, true)?;
    let sys = Degenerate2::new(p);
    let rec = integrate(&sys, &[s0, i0], cfg, &[rng])?;
    Ok(two_dim_trajectory(rec))
}

/// Integrates the 3-D system with three independent Brownian paths derived
/// from `rng` by sub-stream indices 0, 1, 2.
pub fn simulate_nondegenerate(
    p: &SirParams,
    sigma3: f64,
    s0: f64,
    i0: f64,
    r0: f64,
    cfg: &PathConfig,
    rng: RngStream,
) -> Result<Trajectory> {
    check_initial("s0", s0, false)?;
    check_initial("i0", i0, true)?;
    check_initial("r0", r0, false)?;
    let sys = ThreeEquation::new(p, sigma3, false);
    let streams = [rng.substream(0), rng.substream(1), rng.substream(2)];
    let rec = integrate(&sys, &[s0, i0, r0], cfg, &streams)?;
    Ok(three_dim_trajectory(rec))
}

/// Integrates the 3-D system with one shared Brownian path; the (S, I)
/// marginal is bit-identical to `simulate_degenerate` for the same stream.
pub fn simulate_full_degenerate(
    p: &SirParams,
    sigma3: f64,
    s0: f64,
    i0: f64,
    r0: f64,
    cfg: &PathConfig,
    rng: RngStream,
) -> Result<Trajectory> {
    check_initial("s0", s0, false)?;
    check_initial("i0", i0, true)?;
    check_initial("r0", r0, false)?;
    let sys = ThreeEquation::new(p, sigma3, true);
    let rec = integrate(&sys, &[s0, i0, r0], cfg, &[rng])?;
    Ok(three_dim_trajectory(rec))
}

/// Integrates the boundary process dS = (alpha - mu S) dt + sigma1 S dB.
pub fn simulate_boundary(p: &SirParams, s0: f64, cfg: &PathConfig, rng: RngStream) -> Result<Trajectory> {
    simulate_tilde(p, 0.0, s0, cfg, rng)
}

/// Integrates the damped comparison process with kill rate mu + beta*theta.
/// `theta = 0` recovers `simulate_boundary` bit-exactly for the same stream.
pub fn simulate_tilde(
    p: &SirParams,
    theta: f64,
    s0: f64,
    cfg: &PathConfig,
    rng: RngStream,
) -> Result<Trajectory> {
    check_initial("s0", s0, false)?;
    check_initial("theta", theta, true)?;
    let sys = Boundary1::new(p, theta);
    let rec = integrate(&sys, &[s0], cfg, &[rng])?;
    Ok(Trajectory {
        times: rec.times,
        s: rec.coords.into_iter().next().unwrap(),
        i: Vec::new(),
        log_i: Vec::new(),
        r_class: None,
    })
}

/// Integrates (S, I) together with the dominating pair (S_hat, I_hat) on the
/// same Brownian increments, aligned on one time grid.
pub fn coupled_comparison(
    p: &SirParams,
    s0: f64,
    i0: f64,
    cfg: &PathConfig,
    rng: RngStream,
) -> Result<CoupledComparison> {
    let traj = simulate_degenerate(p, s0, i0, cfg, rng)?;
    check_initial("i0", i0, false)?;
    let sys = DominatingPair::new(p);
    let rec = integrate(&sys, &[s0, i0], cfg, &[rng])?;
    let hat = two_dim_trajectory(rec);
    Ok(CoupledComparison { traj, s_hat: hat.s, i_hat: hat.i, log_i_hat: hat.log_i })
}

fn two_dim_trajectory(rec: Recorder) -> Trajectory {
    let mut coords = rec.coords.into_iter();
    let mut logs = rec.logs.into_iter();
    let s = coords.next().unwrap();
    let i = coords.next().unwrap();
    logs.next();
    let log_i = logs.next().unwrap();
    Trajectory { times: rec.times, s, i, log_i, r_class: None }
}

fn three_dim_trajectory(rec: Recorder) -> Trajectory {
    let mut coords = rec.coords.into_iter();
    let mut logs = rec.logs.into_iter();
    let s = coords.next().unwrap();
    let i = coords.next().unwrap();
    let r = coords.next().unwrap();
    logs.next();
    let log_i = logs.next().unwrap();
    Trajectory { times: rec.times, s, i, log_i, r_class: Some(r) }
}

/// States of the degenerate system sampled at the given times, one row per
/// requested time, across an ensemble of independent streams.
///
/// Path `j` uses `(master_seed, j)`; results are deterministic and
/// independent of scheduling order.
#[allow(clippy::too_many_arguments)]
pub fn ensemble_snapshots(
    p: &SirParams,
    s0: f64,
    i0: f64,
    dt: f64,
    scheme: SchemeKind,
    times: &[f64],
    n_paths: usize,
    master_seed: u64,
) -> Result<Vec<Vec<(f64, f64)>>> {
    if times.is_empty() {
        return Err(Error::EmptyInput);
    }
    let t_final = times.iter().cloned().fold(f64::NAN, f64::max);
    let cfg = PathConfig::new(dt, t_final)?.with_scheme(scheme);
    let target_steps: Vec<usize> =
        times.iter().map(|t| (t / dt).round().min(cfg.n_steps() as f64) as usize).collect();
    let per_path: Result<Vec<Vec<(f64, f64)>>> = (0..n_paths)
        .into_par_iter()
        .map(|j| {
            let sys = Degenerate2::new(p);
            let scheme_obj = cfg.scheme.resolve();
            let mut out = vec![(0.0, 0.0); target_steps.len()];
            let mut buf = [0.0; 2];
            drive(
                &sys,
                scheme_obj,
                &[s0, i0],
                &cfg,
                &[RngStream::new(master_seed, j as u64)],
                |scheme, step, _t, state| {
                    for (slot, &target) in out.iter_mut().zip(target_steps.iter()) {
                        if step == target {
                            scheme.coords(state, &mut buf);
                            *slot = (buf[0], buf[1]);
                        }
                    }
                },
            )?;
            Ok(out)
        })
        .collect();
    let per_path = per_path?;
    // transpose to one row per requested time
    let mut rows = vec![Vec::with_capacity(n_paths); times.len()];
    for path in per_path {
        for (row, state) in rows.iter_mut().zip(path) {
            row.push(state);
        }
    }
    Ok(rows)
}
