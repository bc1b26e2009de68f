//! Geometric and analytic certificates for the two-dimensional system:
//! the Lie-bracket rank check, the transformed control-system fields, the
//! barrier constants d* and c*, support membership, and the Foster-Lyapunov
//! drift quantities.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::golden_section_min;
use crate::params::SirParams;

/// Log-grid size for the d* scan. Chosen so the golden refinement reproduces
/// the quadratic closed form to 1e-9.
const DSTAR_GRID_POINTS: usize = 10_000;
const DSTAR_GRID_LO: f64 = 1e-8;
const DSTAR_GRID_HI: f64 = 1e8;
const DSTAR_REFINE_TOL: f64 = 1e-10;

/// Characterization of the invariant measure's support.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SupportKind {
    /// The whole open positive quadrant.
    FullQuadrant,
    /// The region above the barrier curve s^r * i = c*.
    BarrierRegion,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SupportSpec {
    pub r: f64,
    pub dstar: f64,
    pub cstar: Option<f64>,
    pub kind: SupportKind,
}

/// The barrier function psi(u) = -(c1 r + c2) u^r + beta u^(1+r) + alpha r u^(r-1).
pub fn psi(p: &SirParams, u: f64) -> Result<f64> {
    if !(u > 0.0) {
        return Err(Error::Domain(format!("psi requires u > 0, got {u}")));
    }
    let c1 = p.c1();
    let c2 = p.c2();
    let r = p.noise_ratio();
    Ok(-(c1 * r + c2) * u.powf(r) + p.beta * u.powf(1.0 + r) + p.alpha * r * u.powf(r - 1.0))
}

/// The infimum of psi over u > 0 as an extended real.
///
/// For r < 0 the infimum is -inf (the u -> 0 limit diverges). For r > 1 the
/// u -> 0 limit is 0, so the infimum is capped at 0 even when the numeric
/// scan is still decreasing at the grid edge. For r in (0, 1] the minimum is
/// interior and located by a log-grid scan plus golden-section refinement.
pub fn compute_dstar(p: &SirParams) -> Result<f64> {
    if p.sigma2 == 0.0 {
        return Err(Error::SigmaTwoZero);
    }
    let r = p.noise_ratio();
    if r < 0.0 {
        return Ok(f64::NEG_INFINITY);
    }
    let lf = DSTAR_GRID_LO.ln();
    let step = (DSTAR_GRID_HI / DSTAR_GRID_LO).ln() / (DSTAR_GRID_POINTS - 1) as f64;
    let mut best_val = f64::INFINITY;
    let mut best_idx = 0usize;
    for k in 0..DSTAR_GRID_POINTS {
        let u = (lf + k as f64 * step).exp();
        let v = psi(p, u)?;
        if v < best_val {
            best_val = v;
            best_idx = k;
        }
    }
    let lo = (lf + best_idx.saturating_sub(1) as f64 * step).exp();
    let hi = (lf + (best_idx + 1).min(DSTAR_GRID_POINTS - 1) as f64 * step).exp();
    let (_, refined) = golden_section_min(|u| psi(p, u).unwrap(), lo, hi, DSTAR_REFINE_TOL);
    let dstar = refined.min(best_val);
    Ok(if r > 1.0 { dstar.min(0.0) } else { dstar })
}

/// Barrier level c* = d*/(beta r), defined only when d* > 0.
pub fn compute_cstar(p: &SirParams) -> Result<Option<f64>> {
    let dstar = compute_dstar(p)?;
    Ok(cstar_from(p, dstar))
}

pub(crate) fn cstar_from(p: &SirParams, dstar: f64) -> Option<f64> {
    if dstar > 0.0 {
        Some(dstar / (p.beta * p.noise_ratio()))
    } else {
        None
    }
}

pub fn support_spec(p: &SirParams) -> Result<SupportSpec> {
    let dstar = compute_dstar(p)?;
    let cstar = cstar_from(p, dstar);
    let kind = if cstar.is_some() {
        SupportKind::BarrierRegion
    } else {
        SupportKind::FullQuadrant
    };
    Ok(SupportSpec { r: p.noise_ratio(), dstar, cstar, kind })
}

/// Membership test with multiplicative slack on the barrier level.
pub fn support_contains(spec: &SupportSpec, s: f64, i: f64, slack: f64) -> bool {
    match spec.kind {
        SupportKind::FullQuadrant => true,
        SupportKind::BarrierRegion => {
            let cstar = spec.cstar.expect("barrier region has cstar");
            s.powf(spec.r) * i >= cstar * (1.0 - slack)
        }
    }
}

/// Drift of the u coordinate of the transformed control system:
/// g(u, z) = alpha - c1 u - beta z u^(1-r).
pub fn control_g(p: &SirParams, u: f64, z: f64) -> Result<f64> {
    check_uz(u, z)?;
    let r = p.noise_ratio();
    Ok(p.alpha - p.c1() * u - p.beta * z * u.powf(1.0 - r))
}

/// Drift of the z = u^r v coordinate:
/// h(u, z) = u^(-r) z [psi(u) - beta r z].
pub fn control_h(p: &SirParams, u: f64, z: f64) -> Result<f64> {
    check_uz(u, z)?;
    let r = p.noise_ratio();
    Ok(u.powf(-r) * z * (psi(p, u)? - p.beta * r * z))
}

fn check_uz(u: f64, z: f64) -> Result<()> {
    if !(u > 0.0) || !(z > 0.0) {
        return Err(Error::Domain(format!("control fields require u, z > 0, got ({u}, {z})")));
    }
    Ok(())
}

/// Result of the bracket rank evaluation at one point.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct BracketRank {
    pub rank: u8,
    pub det_cd: f64,
    pub det_de: f64,
    pub det_df: f64,
}

/// Evaluates the diffusion field and its iterated brackets at (x, y) and
/// reports whether they span the plane.
///
/// The closed forms are valid for any r != 0, so both signs of sigma2 go
/// through the same expressions.
pub fn lie_bracket_rank(p: &SirParams, x: f64, y: f64) -> Result<BracketRank> {
    if p.sigma2 == 0.0 {
        return Err(Error::SigmaTwoZero);
    }
    if !(x > 0.0) || !(y > 0.0) {
        return Err(Error::Domain(format!("bracket rank requires x, y > 0, got ({x}, {y})")));
    }
    let r = p.noise_ratio();
    let bxy = p.beta * x * y;
    let c = (x, -r * y);
    let d = (p.alpha - r * bxy, -bxy);
    let e = (-p.alpha + r * r * bxy, -bxy);
    let f = (p.alpha - r * r * r * bxy, -bxy);
    let det = |a: (f64, f64), b: (f64, f64)| a.0 * b.1 - a.1 * b.0;
    let norm = |a: (f64, f64)| (a.0 * a.0 + a.1 * a.1).sqrt();
    let det_cd = det(c, d);
    let det_de = det(d, e);
    let det_df = det(d, f);
    let rel = |dv: f64, a: (f64, f64), b: (f64, f64)| dv.abs() > 1e-12 * (norm(a) * norm(b)).max(f64::MIN_POSITIVE);
    let rank = if rel(det_cd, c, d) || rel(det_de, d, e) || rel(det_df, d, f) {
        2
    } else {
        1
    };
    Ok(BracketRank { rank, det_cd, det_de, det_df })
}

/// Upper limit of the admissible Lyapunov exponent p*:
/// min(2 mu / sigma1^2, 2 (mu+rho+gamma) / sigma2^2).
pub fn p_star_max(p: &SirParams) -> f64 {
    let m1 = 2.0 * p.mu / (p.sigma1 * p.sigma1);
    if p.sigma2 == 0.0 {
        m1
    } else {
        m1.min(2.0 * p.removal_rate() / (p.sigma2 * p.sigma2))
    }
}

/// The Foster-Lyapunov function U(u, v) = (u+v)^(1+p*) + u^(-p*/2).
pub fn lyapunov_u(p: &SirParams, p_star: f64, u: f64, v: f64) -> Result<f64> {
    check_p_star(p, p_star)?;
    if !(u > 0.0) || v < 0.0 {
        return Err(Error::Domain(format!("U requires u > 0 and v >= 0, got ({u}, {v})")));
    }
    Ok((u + v).powf(1.0 + p_star) + u.powf(-0.5 * p_star))
}

/// The generator applied to U, in closed form.
pub fn generator_lu(p: &SirParams, p_star: f64, u: f64, v: f64) -> Result<f64> {
    check_p_star(p, p_star)?;
    if !(u > 0.0) || !(v > 0.0) {
        return Err(Error::Domain(format!("LU requires u, v > 0, got ({u}, {v})")));
    }
    let ps = p_star;
    let w = u + v;
    let mrg = p.removal_rate();
    let term1 = (1.0 + ps) * w.powf(ps) * (p.alpha - p.mu * u - mrg * v);
    let term2 = 0.5 * (1.0 + ps) * ps * w.powf(ps - 1.0) * (p.sigma1 * u + p.sigma2 * v).powi(2);
    let term3 = -0.5 * ps * u.powf(-0.5 * ps - 1.0) * (p.alpha - p.beta * u * v - p.mu * u);
    let term4 = ps * (2.0 + ps) / 8.0 * p.sigma1 * p.sigma1 * u.powf(-0.5 * ps);
    Ok(term1 + term2 + term3 + term4)
}

fn check_p_star(p: &SirParams, p_star: f64) -> Result<()> {
    let max = p_star_max(p);
    if !(p_star > 0.0) || !(p_star < max) {
        return Err(Error::Domain(format!(
            "p_star must lie in (0, {max}), got {p_star}"
        )));
    }
    Ok(())
}
