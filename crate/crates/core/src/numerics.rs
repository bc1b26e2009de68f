//! Small numerical kernels: 1-D minimization and adaptive quadrature.

const PHI_CONJ: f64 = 0.381_966_011_250_105_2; // 2 - golden ratio

/// Golden-section search for the minimum of `f` on `[a, b]`.
///
/// Shrinks the bracket until its width drops below `rel_tol` relative to the
/// midpoint (plus a small absolute floor). Returns `(x_min, f_min)`.
pub fn golden_section_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, rel_tol: f64) -> (f64, f64) {
    if a > b {
        std::mem::swap(&mut a, &mut b);
    }
    let mut x1 = a + PHI_CONJ * (b - a);
    let mut x2 = b - PHI_CONJ * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..400 {
        let mid = 0.5 * (a + b);
        if (b - a) <= rel_tol * mid.abs() + 1e-300 {
            break;
        }
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + PHI_CONJ * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = b - PHI_CONJ * (b - a);
            f2 = f(x2);
        }
    }
    if f1 < f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Adaptive Simpson quadrature of `f` over `[a, b]` to absolute tolerance
/// `tol`. Starts from a 16-panel composite so narrow features away from the
/// interval midpoints cannot be mistaken for a zero integrand.
pub fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    const PANELS: usize = 16;
    let w = (b - a) / PANELS as f64;
    let mut total = 0.0;
    for k in 0..PANELS {
        let pa = a + k as f64 * w;
        let pb = pa + w;
        let fa = f(pa);
        let fb = f(pb);
        let m = 0.5 * (pa + pb);
        let fm = f(m);
        let whole = simpson(pa, pb, fa, fm, fb);
        total += simpson_rec(f, pa, pb, fa, fm, fb, whole, tol / PANELS as f64, 50);
    }
    total
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn simpson_rec(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
}

/// Bisection root find for a monotone function: returns x with f(x) ~ target.
pub fn bisect_monotone(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, target: f64, tol: f64) -> f64 {
    let rising = f(hi) >= f(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if (hi - lo) <= tol * mid.abs().max(1.0) {
            return mid;
        }
        let v = f(mid);
        if (v < target) == rising {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
