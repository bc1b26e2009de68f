//! Path statistics: Lyapunov-exponent regression, occupation averages,
//! histogram laws, and total-variation decay along a checkpoint schedule.

use rayon::prelude::*;

use crate::engine::{ensemble_snapshots, SchemeKind, Trajectory};
use crate::error::{Error, Result};
use crate::params::SirParams;

/// Least-squares slope with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitResult {
    pub slope: f64,
    pub stderr: f64,
}

/// Least-squares slope of log I(t) against t after `burn_in`. The asymptotic
/// value of this slope classifies the path: negative slopes witness
/// exponential extinction.
pub fn lyapunov_exponent(traj: &Trajectory, burn_in: f64) -> Result<FitResult> {
    if traj.log_i.is_empty() {
        return Err(Error::InsufficientData("trajectory has no I component".into()));
    }
    let pts: Vec<(f64, f64)> = traj
        .times
        .iter()
        .zip(traj.log_i.iter())
        .filter(|(&t, &y)| t >= burn_in && y.is_finite())
        .map(|(&t, &y)| (t, y))
        .collect();
    if pts.len() < 3 {
        return Err(Error::InsufficientData(format!(
            "{} usable points after burn-in; need at least 3",
            pts.len()
        )));
    }
    let span = pts.last().unwrap().0 - pts[0].0;
    if span < 10.0 {
        return Err(Error::InsufficientData(format!(
            "time span after burn-in is {span:.3}; need at least 10"
        )));
    }
    let n = pts.len() as f64;
    let t_mean = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let y_mean = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - t_mean) * (p.0 - t_mean)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - t_mean) * (p.1 - y_mean)).sum();
    let slope = sxy / sxx;
    let intercept = y_mean - slope * t_mean;
    let ss_res: f64 = pts
        .iter()
        .map(|p| {
            let e = p.1 - (intercept + slope * p.0);
            e * e
        })
        .sum();
    let stderr = if pts.len() > 2 { (ss_res / (n - 2.0) / sxx).sqrt() } else { 0.0 };
    Ok(FitResult { slope, stderr })
}

/// Time average of f(S, I) along the path after `burn_in`, by the left
/// rectangle rule. The average of f == 1 is exactly 1 because the sum is
/// divided by the span actually covered.
pub fn time_average<F>(traj: &Trajectory, f: F, burn_in: f64) -> Result<f64>
where
    F: Fn(f64, f64) -> f64,
{
    if traj.len() < 2 {
        return Err(Error::InsufficientData("need at least two samples".into()));
    }
    let mut total = 0.0;
    let mut span = 0.0;
    for k in 0..traj.len() - 1 {
        let t = traj.times[k];
        if t < burn_in {
            continue;
        }
        let w = traj.times[k + 1] - t;
        let i = if traj.i.is_empty() { 0.0 } else { traj.i[k] };
        total += f(traj.s[k], i) * w;
        span += w;
    }
    if span <= 0.0 {
        return Err(Error::InsufficientData("burn-in swallowed the whole path".into()));
    }
    Ok(total / span)
}

/// Equal-width histogram normalized to unit mass.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram1D {
    pub edges: Vec<f64>,
    pub mass: Vec<f64>,
    pub count: usize,
}

impl Histogram1D {
    /// Bins `samples` into `n_bins` equal-width bins over `range` (or the
    /// sample range). Out-of-range samples are clamped into the end bins so
    /// the masses always sum to one.
    pub fn from_samples(samples: &[f64], n_bins: usize, range: Option<(f64, f64)>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::EmptyInput);
        }
        if n_bins == 0 {
            return Err(Error::Config("histogram needs at least one bin".into()));
        }
        let (mut lo, mut hi) = range.unwrap_or_else(|| {
            samples.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
                (lo.min(x), hi.max(x))
            })
        });
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            if lo == hi && lo.is_finite() {
                // degenerate sample set: widen symmetrically
                let pad = lo.abs().max(1.0) * 1e-9;
                lo -= pad;
                hi += pad;
            } else {
                return Err(Error::Domain(format!("bad histogram range [{lo}, {hi}]")));
            }
        }
        let width = (hi - lo) / n_bins as f64;
        let edges: Vec<f64> = (0..=n_bins).map(|k| lo + k as f64 * width).collect();
        let mut counts = vec![0usize; n_bins];
        for &x in samples {
            let k = (((x - lo) / width) as isize).clamp(0, n_bins as isize - 1) as usize;
            counts[k] += 1;
        }
        let n = samples.len();
        let mass = counts.iter().map(|&c| c as f64 / n as f64).collect();
        Ok(Self { edges, mass, count: n })
    }

    /// Bin masses of an absolutely continuous law given its distribution
    /// function, renormalized so the truncation to the grid has unit mass.
    pub fn binned_density<F>(cdf: F, edges: &[f64]) -> Result<Self>
    where
        F: Fn(f64) -> Result<f64>,
    {
        if edges.len() < 2 {
            return Err(Error::Config("need at least two edges".into()));
        }
        let mut mass: Vec<f64> = edges
            .windows(2)
            .map(|w| Ok(cdf(w[1])? - cdf(w[0])?))
            .collect::<Result<_>>()?;
        let total: f64 = mass.iter().sum();
        if total <= 0.0 {
            return Err(Error::Domain("grid carries no mass".into()));
        }
        for m in &mut mass {
            *m /= total;
        }
        Ok(Self { edges: edges.to_vec(), mass, count: 0 })
    }

    /// Total-variation distance on the common grid: half the L1 distance of
    /// the bin masses.
    pub fn tv(&self, other: &Self) -> Result<f64> {
        if self.edges != other.edges {
            return Err(Error::ShapeMismatch);
        }
        Ok(0.5 * self.mass.iter().zip(&other.mass).map(|(a, b)| (a - b).abs()).sum::<f64>())
    }
}

/// Equal-width product-grid histogram over the positive quadrant.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram2D {
    pub x_edges: Vec<f64>,
    pub y_edges: Vec<f64>,
    /// Row-major: mass[ix * (y bins) + iy].
    pub mass: Vec<f64>,
    pub count: usize,
}

impl Histogram2D {
    pub fn from_points(
        points: &[(f64, f64)],
        nx: usize,
        ny: usize,
        x_range: (f64, f64),
        y_range: (f64, f64),
    ) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        if nx == 0 || ny == 0 {
            return Err(Error::Config("histogram needs at least one bin per axis".into()));
        }
        let (xl, xh) = x_range;
        let (yl, yh) = y_range;
        if !(xl < xh && yl < yh) || !xl.is_finite() || !xh.is_finite() || !yl.is_finite() || !yh.is_finite() {
            return Err(Error::Domain("bad 2-D histogram range".into()));
        }
        let wx = (xh - xl) / nx as f64;
        let wy = (yh - yl) / ny as f64;
        let x_edges = (0..=nx).map(|k| xl + k as f64 * wx).collect();
        let y_edges = (0..=ny).map(|k| yl + k as f64 * wy).collect();
        let mut counts = vec![0usize; nx * ny];
        for &(x, y) in points {
            let ix = (((x - xl) / wx) as isize).clamp(0, nx as isize - 1) as usize;
            let iy = (((y - yl) / wy) as isize).clamp(0, ny as isize - 1) as usize;
            counts[ix * ny + iy] += 1;
        }
        let n = points.len();
        let mass = counts.iter().map(|&c| c as f64 / n as f64).collect();
        Ok(Self { x_edges, y_edges, mass, count: n })
    }

    pub fn tv(&self, other: &Self) -> Result<f64> {
        if self.x_edges != other.x_edges || self.y_edges != other.y_edges {
            return Err(Error::ShapeMismatch);
        }
        Ok(0.5 * self.mass.iter().zip(&other.mass).map(|(a, b)| (a - b).abs()).sum::<f64>())
    }

    /// Marginal over the first coordinate.
    pub fn marginal_x(&self) -> Histogram1D {
        let ny = self.y_edges.len() - 1;
        let mass = self
            .mass
            .chunks(ny)
            .map(|row| row.iter().sum())
            .collect();
        Histogram1D { edges: self.x_edges.clone(), mass, count: self.count }
    }

    pub fn marginal_y(&self) -> Histogram1D {
        let ny = self.y_edges.len() - 1;
        let mut mass = vec![0.0; ny];
        for row in self.mass.chunks(ny) {
            for (m, &v) in mass.iter_mut().zip(row) {
                *m += v;
            }
        }
        Histogram1D { edges: self.y_edges.clone(), mass, count: self.count }
    }
}

const TV_BINS: usize = 10;

/// Estimated total-variation distance between the law of (S, I) at each
/// checkpoint and the law at `reference_time`, from an ensemble of `n_paths`
/// independent paths per time point, binned on a common 10x10 grid.
///
/// The reference ensemble uses stream indices disjoint from every checkpoint
/// ensemble so the two laws are estimated independently.
#[allow(clippy::too_many_arguments)]
pub fn tv_decay_series(
    p: &SirParams,
    s0: f64,
    i0: f64,
    n_paths: usize,
    checkpoints: &[f64],
    reference_time: f64,
    dt: f64,
    scheme: SchemeKind,
    master_seed: u64,
) -> Result<Vec<(f64, f64)>> {
    if checkpoints.is_empty() {
        return Err(Error::EmptyInput);
    }
    let max_cp = checkpoints.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if reference_time < max_cp {
        return Err(Error::Config(format!(
            "reference time {reference_time} precedes the last checkpoint {max_cp}"
        )));
    }
    let mut times: Vec<f64> = checkpoints.to_vec();
    times.push(reference_time);
    let rows = ensemble_snapshots(p, s0, i0, dt, scheme, &times, n_paths, master_seed)?;
    // independent ensemble for the reference law
    let ref_rows =
        ensemble_snapshots(p, s0, i0, dt, scheme, &[reference_time], n_paths, master_seed ^ 0x5EED_0F5E)?;
    let reference = &ref_rows[0];
    let mut xh = f64::NEG_INFINITY;
    let mut yh = f64::NEG_INFINITY;
    for &(x, y) in rows.iter().flatten().chain(reference.iter()) {
        xh = xh.max(x);
        yh = yh.max(y);
    }
    let x_range = (0.0, xh * 1.000001);
    let y_range = (0.0, yh * 1.000001);
    let ref_hist = Histogram2D::from_points(reference, TV_BINS, TV_BINS, x_range, y_range)?;
    checkpoints
        .par_iter()
        .zip(rows.par_iter())
        .map(|(&t, row)| {
            let h = Histogram2D::from_points(row, TV_BINS, TV_BINS, x_range, y_range)?;
            Ok((t, h.tv(&ref_hist)?))
        })
        .collect()
}
