//! Model parameters and every closed-form quantity derived from them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::support;

/// Tolerance under which the threshold is reported as critical rather than
/// classified. The critical case has no established behavior, so the toolkit
/// refuses to guess there.
pub const CRITICAL_TOL: f64 = 1e-12;

/// The seven model constants of the stochastic SIR system.
///
/// `alpha` birth rate, `beta` contact rate, `mu` disease-free death rate,
/// `rho` excess death rate of infectives, `gamma` recovery rate, and the two
/// noise intensities `sigma1` (on S) and `sigma2` (on I). All rates are per
/// unit time; the noise intensities are per square-root time.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SirParams {
    pub alpha: f64,
    pub beta: f64,
    pub mu: f64,
    pub rho: f64,
    pub gamma: f64,
    pub sigma1: f64,
    pub sigma2: f64,
}

/// Asymptotic classification by the sign of the threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Extinction,
    Permanence,
    Critical,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Extinction => write!(f, "Extinction"),
            Verdict::Permanence => write!(f, "Permanence"),
            Verdict::Critical => write!(f, "Critical"),
        }
    }
}

/// All closed-form derived quantities in one place.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DerivedQuantities {
    /// mu + sigma1^2/2
    pub c1: f64,
    /// mu + rho + gamma + sigma2^2/2
    pub c2: f64,
    /// -sigma2/sigma1
    pub r: f64,
    /// shape of the boundary stationary density, 2*c1/sigma1^2 (always > 1)
    pub a: f64,
    /// scale of the boundary stationary density, 2*alpha/sigma1^2
    pub b: f64,
    pub lambda: f64,
    pub lambda_d: f64,
    pub r0: f64,
    /// infimum of the barrier function; may be `NEG_INFINITY`
    pub dstar: f64,
    /// barrier level, present iff `dstar > 0`
    pub cstar: Option<f64>,
    pub verdict: Verdict,
}

/// Evaluation of the sufficient conditions from the earlier literature
/// (restricted to `sigma1, sigma2 > 0`), reported so the CLI can show where
/// the threshold criterion succeeds while these conditions fail.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct LjxReport {
    /// mu > sigma1^2
    pub mu_cond: bool,
    /// mu + rho + gamma > sigma2^2
    pub rho_cond: bool,
    /// R0 > 1
    pub r0_cond: bool,
    /// delta below its admissible bound; `None` when delta is undefined
    /// (division by zero in its formula)
    pub delta_cond: Option<bool>,
    pub all: bool,
    pub delta: Option<f64>,
    pub s_star: f64,
    pub i_star: f64,
}

impl SirParams {
    pub fn new(alpha: f64, beta: f64, mu: f64, rho: f64, gamma: f64, sigma1: f64, sigma2: f64) -> Self {
        Self { alpha, beta, mu, rho, gamma, sigma1, sigma2 }
    }

    /// Checks sign constraints and normalizes the noise so that `sigma1 > 0`.
    ///
    /// A joint sign flip of `(sigma1, sigma2)` leaves the law of the solution
    /// invariant, so a caller-supplied `sigma1 < 0` is folded into the
    /// normalized representative rather than rejected.
    pub fn validate(self) -> Result<Self> {
        for (name, v) in [("alpha", self.alpha), ("beta", self.beta), ("mu", self.mu)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::NonPositiveRate(name));
            }
        }
        for (name, v) in [("rho", self.rho), ("gamma", self.gamma)] {
            if v < 0.0 || !v.is_finite() {
                return Err(Error::NegativeRate(name));
            }
        }
        if self.sigma1 == 0.0 || !self.sigma1.is_finite() || !self.sigma2.is_finite() {
            return Err(Error::ZeroSigma1);
        }
        let mut p = self;
        if p.sigma1 < 0.0 {
            p.sigma1 = -p.sigma1;
            p.sigma2 = -p.sigma2;
        }
        Ok(p)
    }

    /// mu + rho + gamma, the total removal rate of infectives.
    pub fn removal_rate(&self) -> f64 {
        self.mu + self.rho + self.gamma
    }

    /// Stratonovich-corrected decay rate on S: mu + sigma1^2/2.
    pub fn c1(&self) -> f64 {
        self.mu + 0.5 * self.sigma1 * self.sigma1
    }

    /// Stratonovich-corrected removal rate on I: mu + rho + gamma + sigma2^2/2.
    pub fn c2(&self) -> f64 {
        self.removal_rate() + 0.5 * self.sigma2 * self.sigma2
    }

    /// The dimensionless noise ratio r = -sigma2/sigma1.
    pub fn noise_ratio(&self) -> f64 {
        -self.sigma2 / self.sigma1
    }

    /// The extinction/permanence threshold: alpha*beta/mu - c2.
    pub fn threshold_lambda(&self) -> f64 {
        self.alpha * self.beta / self.mu - self.c2()
    }

    /// The deterministic threshold beta*alpha/mu - (mu+rho+gamma).
    /// Equals `threshold_lambda() + sigma2^2/2`.
    pub fn threshold_lambda_deterministic(&self) -> f64 {
        self.alpha * self.beta / self.mu - self.removal_rate()
    }

    /// Basic reproduction number beta*alpha/(mu*(mu+rho+gamma)).
    pub fn reproduction_number(&self) -> f64 {
        self.beta * self.alpha / (self.mu * self.removal_rate())
    }

    pub fn verdict(&self) -> Verdict {
        let lambda = self.threshold_lambda();
        if lambda.abs() < CRITICAL_TOL {
            Verdict::Critical
        } else if lambda < 0.0 {
            Verdict::Extinction
        } else {
            Verdict::Permanence
        }
    }

    /// Evaluates each inequality of the prior sufficient criterion.
    pub fn ljx_sufficient_conditions(&self) -> LjxReport {
        let mrg = self.removal_rate();
        let s1sq = self.sigma1 * self.sigma1;
        let s2sq = self.sigma2 * self.sigma2;
        let mu_cond = self.mu > s1sq;
        let rho_cond = mrg > s2sq;
        let r0_cond = self.reproduction_number() > 1.0;
        let s_star = mrg / self.beta;
        let i_star = self.alpha / mrg - self.mu / self.beta;
        let (delta, delta_cond) = if self.mu == s1sq || mrg == s2sq {
            (None, None)
        } else {
            let delta = self.mu * s1sq / (self.mu - s1sq) * s_star * s_star
                + mrg * s2sq / (mrg - s2sq) * i_star * i_star
                + mrg * s2sq * i_star / (2.0 * self.beta);
            let bound = (self.mu * self.mu / (self.mu - s1sq) * s_star * s_star)
                .min(mrg * mrg / (mrg - s2sq) * i_star * i_star);
            (Some(delta), Some(delta < bound))
        };
        let all = mu_cond && rho_cond && r0_cond && delta_cond == Some(true);
        LjxReport { mu_cond, rho_cond, r0_cond, delta_cond, all, delta, s_star, i_star }
    }

    /// Computes every derived quantity, including the barrier constants.
    ///
    /// Requires `sigma2 != 0` (the barrier analysis is undefined without it).
    pub fn derive(&self) -> Result<DerivedQuantities> {
        let dstar = support::compute_dstar(self)?;
        let cstar = support::cstar_from(self, dstar);
        let s1sq = self.sigma1 * self.sigma1;
        Ok(DerivedQuantities {
            c1: self.c1(),
            c2: self.c2(),
            r: self.noise_ratio(),
            a: 2.0 * self.c1() / s1sq,
            b: 2.0 * self.alpha / s1sq,
            lambda: self.threshold_lambda(),
            lambda_d: self.threshold_lambda_deterministic(),
            r0: self.reproduction_number(),
            dstar,
            cstar,
            verdict: self.verdict(),
        })
    }
}
