//! Simulation and classification toolkit for a stochastic SIR epidemic
//! model with multiplicative noise. A single closed-form threshold decides
//! the asymptotic regime; this crate computes it, simulates the underlying
//! SDE systems with positivity-preserving schemes, and estimates the
//! statistics (Lyapunov slopes, ergodic averages, empirical densities,
//! total-variation decay) that witness each regime.

pub mod boundary;
pub mod engine;
pub mod error;
pub mod estimators;
pub mod numerics;
pub mod params;
pub mod rng;
pub mod scenario;
pub mod support;

pub use engine::{PathConfig, SchemeKind, Trajectory};
pub use error::{Error, Result};
pub use params::{DerivedQuantities, SirParams, Verdict};
pub use rng::RngStream;
pub use scenario::{example_params, ClassificationReport, ScenarioConfig};
