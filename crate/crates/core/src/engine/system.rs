//! The SDE systems of the model family. Every coordinate carries geometric
//! noise sigma_i * x_i dB, where dB comes from one of `noise_dim` channels.

use crate::params::SirParams;

pub trait SdeSystem: Sync {
    fn dim(&self) -> usize;

    /// Number of independent Brownian channels driving the system.
    fn noise_dim(&self) -> usize {
        1
    }

    fn sigma(&self, coord: usize) -> f64;

    fn noise_channel(&self, _coord: usize) -> usize {
        0
    }

    /// Drift in the original coordinates.
    fn drift(&self, x: &[f64], out: &mut [f64]);

    /// Drift divided by the coordinate, in closed form (the log-coordinate
    /// drift before the Ito correction).
    fn per_capita_drift(&self, x: &[f64], out: &mut [f64]);
}

/// The two-dimensional (S, I) system driven by a single shared Brownian path.
pub struct Degenerate2 {
    alpha: f64,
    beta: f64,
    mu: f64,
    mrg: f64,
    sigma1: f64,
    sigma2: f64,
}

impl Degenerate2 {
    pub fn new(p: &SirParams) -> Self {
        Self {
            alpha: p.alpha,
            beta: p.beta,
            mu: p.mu,
            mrg: p.removal_rate(),
            sigma1: p.sigma1,
            sigma2: p.sigma2,
        }
    }
}

impl SdeSystem for Degenerate2 {
    fn dim(&self) -> usize {
        2
    }

    fn sigma(&self, coord: usize) -> f64 {
        [self.sigma1, self.sigma2][coord]
    }

    fn drift(&self, x: &[f64], out: &mut [f64]) {
        let (s, i) = (x[0], x[1]);
        out[0] = self.alpha - self.beta * s * i - self.mu * s;
        out[1] = self.beta * s * i - self.mrg * i;
    }

    fn per_capita_drift(&self, x: &[f64], out: &mut [f64]) {
        let (s, i) = (x[0], x[1]);
        out[0] = self.alpha / s - self.beta * i - self.mu;
        out[1] = self.beta * s - self.mrg;
    }
}

/// The full three-equation system. `shared_noise` selects between one
/// Brownian path on all equations (degenerate) and three independent paths.
pub struct ThreeEquation {
    alpha: f64,
    beta: f64,
    mu: f64,
    mrg: f64,
    gamma: f64,
    sigma: [f64; 3],
    shared_noise: bool,
}

impl ThreeEquation {
    pub fn new(p: &SirParams, sigma3: f64, shared_noise: bool) -> Self {
        Self {
            alpha: p.alpha,
            beta: p.beta,
            mu: p.mu,
            mrg: p.removal_rate(),
            gamma: p.gamma,
            sigma: [p.sigma1, p.sigma2, sigma3],
            shared_noise,
        }
    }
}

impl SdeSystem for ThreeEquation {
    fn dim(&self) -> usize {
        3
    }

    fn noise_dim(&self) -> usize {
        if self.shared_noise {
            1
        } else {
            3
        }
    }

    fn sigma(&self, coord: usize) -> f64 {
        self.sigma[coord]
    }

    fn noise_channel(&self, coord: usize) -> usize {
        if self.shared_noise {
            0
        } else {
            coord
        }
    }

    fn drift(&self, x: &[f64], out: &mut [f64]) {
        let (s, i, r) = (x[0], x[1], x[2]);
        out[0] = self.alpha - self.beta * s * i - self.mu * s;
        out[1] = self.beta * s * i - self.mrg * i;
        out[2] = self.gamma * i - self.mu * r;
    }

    fn per_capita_drift(&self, x: &[f64], out: &mut [f64]) {
        let (s, i, r) = (x[0], x[1], x[2]);
        out[0] = self.alpha / s - self.beta * i - self.mu;
        out[1] = self.beta * s - self.mrg;
        out[2] = self.gamma * i / r - self.mu;
    }
}

/// The one-dimensional boundary process dS = (alpha - kill*S) dt + sigma1 S dB.
/// With `kill = mu` this is the boundary equation; with `kill = mu + beta*theta`
/// it is the damped comparison process.
pub struct Boundary1 {
    alpha: f64,
    kill: f64,
    sigma1: f64,
}

impl Boundary1 {
    pub fn new(p: &SirParams, theta: f64) -> Self {
        Self { alpha: p.alpha, kill: p.mu + p.beta * theta, sigma1: p.sigma1 }
    }
}

impl SdeSystem for Boundary1 {
    fn dim(&self) -> usize {
        1
    }

    fn sigma(&self, _coord: usize) -> f64 {
        self.sigma1
    }

    fn drift(&self, x: &[f64], out: &mut [f64]) {
        out[0] = self.alpha - self.kill * x[0];
    }

    fn per_capita_drift(&self, x: &[f64], out: &mut [f64]) {
        out[0] = self.alpha / x[0] - self.kill;
    }
}

/// The dominating pair (S_hat, I_hat): the boundary process together with
/// the linear-in-I process it feeds, both on the shared Brownian channel.
pub struct DominatingPair {
    alpha: f64,
    beta: f64,
    mu: f64,
    mrg: f64,
    sigma1: f64,
    sigma2: f64,
}

impl DominatingPair {
    pub fn new(p: &SirParams) -> Self {
        Self {
            alpha: p.alpha,
            beta: p.beta,
            mu: p.mu,
            mrg: p.removal_rate(),
            sigma1: p.sigma1,
            sigma2: p.sigma2,
        }
    }
}

impl SdeSystem for DominatingPair {
    fn dim(&self) -> usize {
        2
    }

    fn sigma(&self, coord: usize) -> f64 {
        [self.sigma1, self.sigma2][coord]
    }

    fn drift(&self, x: &[f64], out: &mut [f64]) {
        let (s, i) = (x[0], x[1]);
        out[0] = self.alpha - self.mu * s;
        out[1] = (self.beta * s - self.mrg) * i;
    }

    fn per_capita_drift(&self, x: &[f64], out: &mut [f64]) {
        let (s, _) = (x[0], x[1]);
        out[0] = self.alpha / s - self.mu;
        out[1] = self.beta * s - self.mrg;
    }
}
