//! Integration schemes behind a common trait, registered by name and
//! selected at runtime.

use serde::{Deserialize, Serialize};

use super::system::SdeSystem;

/// One step of a time-discretization strategy for geometric-noise SDE
/// systems. Implementations own the representation of the internal state
/// (e.g. log coordinates) and expose conversions back to model coordinates.
pub trait Scheme: Send + Sync {
    fn name(&self) -> &'static str;

    /// Internal state from initial model coordinates.
    fn init_state(&self, x0: &[f64]) -> Vec<f64>;

    /// Advances `state` by `dt` given the Brownian increments `db` (one per
    /// noise channel, already scaled by sqrt(dt)).
    fn step(&self, sys: &dyn SdeSystem, state: &mut [f64], scratch: &mut Scratch, dt: f64, db: &[f64]);

    /// Model coordinates of the internal state.
    fn coords(&self, state: &[f64], out: &mut [f64]);

    /// Natural logarithm of each coordinate, exact where the scheme carries
    /// logs natively.
    fn log_coords(&self, state: &[f64], out: &mut [f64]);

    /// False once the state contains NaN or +inf (log states may be -inf,
    /// which encodes a coordinate stuck at zero).
    fn state_valid(&self, state: &[f64]) -> bool;
}

/// Reusable buffers so the inner loop never allocates.
#[derive(Default)]
pub struct Scratch {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
}

impl Scratch {
    pub fn for_dim(dim: usize) -> Self {
        Scratch { a: vec![0.0; dim], b: vec![0.0; dim] }
    }
}

/// Euler-Maruyama applied to the log coordinates. The noise becomes
/// additive and every coordinate stays strictly positive for any step size.
pub struct LogEulerMaruyama;

impl Scheme for LogEulerMaruyama {
    fn name(&self) -> &'static str {
        "log-euler-maruyama"
    }

    fn init_state(&self, x0: &[f64]) -> Vec<f64> {
        x0.iter().map(|&x| x.ln()).collect()
    }

    fn step(&self, sys: &dyn SdeSystem, state: &mut [f64], scratch: &mut Scratch, dt: f64, db: &[f64]) {
        for (c, &s) in scratch.a.iter_mut().zip(state.iter()) {
            *c = s.exp();
        }
        sys.per_capita_drift(&scratch.a, &mut scratch.b);
        for i in 0..state.len() {
            let sigma = sys.sigma(i);
            state[i] += (scratch.b[i] - 0.5 * sigma * sigma) * dt + sigma * db[sys.noise_channel(i)];
        }
    }

    fn coords(&self, state: &[f64], out: &mut [f64]) {
        for (o, &s) in out.iter_mut().zip(state.iter()) {
            *o = s.exp();
        }
    }

    fn log_coords(&self, state: &[f64], out: &mut [f64]) {
        out.copy_from_slice(state);
    }

    fn state_valid(&self, state: &[f64]) -> bool {
        state.iter().all(|x| !x.is_nan() && *x != f64::INFINITY)
    }
}

/// Plain Euler-Maruyama in the original coordinates with a clamp at 1e-300.
/// Provided for cross-checks only; the clamp is a projection, not a model.
pub struct EulerMaruyamaProjected;

const PROJECTION_FLOOR: f64 = 1e-300;

impl Scheme for EulerMaruyamaProjected {
    fn name(&self) -> &'static str {
        "euler-maruyama-projected"
    }

    fn init_state(&self, x0: &[f64]) -> Vec<f64> {
        x0.to_vec()
    }

    fn step(&self, sys: &dyn SdeSystem, state: &mut [f64], scratch: &mut Scratch, dt: f64, db: &[f64]) {
        sys.drift(state, &mut scratch.b);
        for i in 0..state.len() {
            let sigma = sys.sigma(i);
            state[i] += scratch.b[i] * dt + sigma * state[i] * db[sys.noise_channel(i)];
            if state[i] < PROJECTION_FLOOR {
                state[i] = PROJECTION_FLOOR;
            }
        }
    }

    fn coords(&self, state: &[f64], out: &mut [f64]) {
        out.copy_from_slice(state);
    }

    fn log_coords(&self, state: &[f64], out: &mut [f64]) {
        for (o, &s) in out.iter_mut().zip(state.iter()) {
            *o = s.ln();
        }
    }

    fn state_valid(&self, state: &[f64]) -> bool {
        state.iter().all(|x| x.is_finite())
    }
}

static LOG_EULER: LogEulerMaruyama = LogEulerMaruyama;
static PROJECTED: EulerMaruyamaProjected = EulerMaruyamaProjected;
static REGISTRY: [&dyn Scheme; 2] = [&LOG_EULER, &PROJECTED];

/// All registered schemes.
pub fn schemes() -> &'static [&'static dyn Scheme] {
    &REGISTRY
}

pub fn scheme_by_name(name: &str) -> Option<&'static dyn Scheme> {
    REGISTRY.iter().copied().find(|s| s.name() == name)
}

/// Config-facing identifier for a registered scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum SchemeKind {
    #[default]
    LogEulerMaruyama,
    EulerMaruyamaProjected,
}

impl SchemeKind {
    pub fn name(&self) -> &'static str {
        match self {
            SchemeKind::LogEulerMaruyama => LOG_EULER.name(),
            SchemeKind::EulerMaruyamaProjected => PROJECTED.name(),
        }
    }

    pub fn resolve(&self) -> &'static dyn Scheme {
        scheme_by_name(self.name()).expect("registered scheme")
    }
}

impl std::str::FromStr for SchemeKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "log-euler-maruyama" => Ok(SchemeKind::LogEulerMaruyama),
            "euler-maruyama-projected" => Ok(SchemeKind::EulerMaruyamaProjected),
            other => Err(format!(
                "unknown scheme `{other}`; registered: {}",
                schemes().iter().map(|s| s.name()).collect::<Vec<_>>().join(", ")
            )),
        }
    }
}
