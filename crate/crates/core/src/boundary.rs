//! Exact analytics for the boundary susceptible-only process: its
//! inverse-gamma-type stationary density, distribution function, moments,
//! and an exact sampler.

use rand::Rng;
use rand_distr::{Distribution, Gamma};
use statrs::function::gamma::{gamma_lr, gamma_ur, ln_gamma};

use crate::error::{Error, Result};
use crate::params::SirParams;
use crate::rng::RngStream;

/// Stationary density f*(x) = (b^a / Gamma(a)) x^(-(a+1)) e^(-b/x), x > 0,
/// with shape `a > 1` and scale `b > 0`. The mean is b/(a-1) = alpha/mu.
#[derive(Debug, Clone, Copy)]
pub struct StationaryDensity {
    a: f64,
    b: f64,
    log_norm: f64,
}

impl StationaryDensity {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a > 1.0) || !(b > 0.0) || !a.is_finite() || !b.is_finite() {
            return Err(Error::Domain(format!(
                "stationary density needs shape > 1 and scale > 0, got ({a}, {b})"
            )));
        }
        Ok(Self { a, b, log_norm: a * b.ln() - ln_gamma(a) })
    }

    /// a = 2 c1 / sigma1^2, b = 2 alpha / sigma1^2.
    pub fn from_params(p: &SirParams) -> Result<Self> {
        let s1sq = p.sigma1 * p.sigma1;
        if s1sq == 0.0 {
            return Err(Error::ZeroSigma1);
        }
        Self::new(2.0 * p.c1() / s1sq, 2.0 * p.alpha / s1sq)
    }

    pub fn shape(&self) -> f64 {
        self.a
    }

    pub fn scale(&self) -> f64 {
        self.b
    }

    /// Evaluated in log space so that small x underflows to 0 instead of
    /// overflowing through x^(-(a+1)).
    pub fn density_at(&self, x: f64) -> Result<f64> {
        self.check_x(x)?;
        Ok((self.log_norm - (self.a + 1.0) * x.ln() - self.b / x).exp())
    }

    /// Mean of the stationary law, b/(a-1); equals alpha/mu exactly.
    pub fn mean(&self) -> f64 {
        self.b / (self.a - 1.0)
    }

    /// P(X <= x), the regularized upper incomplete gamma Q(a, b/x).
    pub fn cdf(&self, x: f64) -> Result<f64> {
        self.check_x(x)?;
        Ok(gamma_ur(self.a, self.b / x))
    }

    /// P(X > x); full precision in the upper tail where `cdf` rounds to 1.
    pub fn sf(&self, x: f64) -> Result<f64> {
        self.check_x(x)?;
        Ok(gamma_lr(self.a, self.b / x))
    }

    /// Quantile by bisection on the CDF.
    pub fn quantile(&self, q: f64) -> Result<f64> {
        if !(0.0 < q && q < 1.0) {
            return Err(Error::Domain(format!("quantile needs q in (0,1), got {q}")));
        }
        let mut hi = self.mean();
        while self.cdf(hi)? < q {
            hi *= 2.0;
        }
        Ok(crate::numerics::bisect_monotone(
            |x| self.cdf(x).unwrap(),
            self.b / 1e6,
            hi,
            q,
            1e-12,
        ))
    }

    /// `n` i.i.d. draws: G ~ Gamma(shape a, rate b) rejection-sampled, then
    /// X = 1/G, whose density is exactly f*.
    pub fn sample(&self, stream: RngStream, n: usize) -> Vec<f64> {
        let mut rng = stream.rng();
        self.sample_with(&mut rng, n)
    }

    pub fn sample_with<R: Rng + ?Sized>(&self, rng: &mut R, n: usize) -> Vec<f64> {
        let gamma = Gamma::new(self.a, 1.0 / self.b).expect("valid gamma parameters");
        (0..n).map(|_| 1.0 / gamma.sample(rng)).collect()
    }

    fn check_x(&self, x: f64) -> Result<()> {
        if !(x > 0.0) {
            return Err(Error::Domain(format!("density domain is x > 0, got {x}")));
        }
        Ok(())
    }
}
