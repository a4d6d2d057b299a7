//! Quadrature building blocks shared by the geometry, coefficient and
//! oracle modules.
//!
//! The workhorse is an adaptive two-point Gauss rule: it never evaluates
//! interval endpoints, so integrable boundary singularities (the
//! `1/(distance-to-boundary)` weights showing up everywhere here) converge,
//! while non-integrable ones blow past a hard cap and are reported as
//! divergent instead of returning garbage.

use alloc::vec::Vec;

use crate::fmath;

/// Estimates above this are treated as divergent integrals.
pub const BLOWUP_CAP: f64 = 1e12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadOutcome {
    pub value: f64,
    /// True when the recursion hit the cap or kept growing at max depth.
    pub divergent: bool,
}

// Two-point Gauss-Legendre nodes on (-1, 1).
const G2: f64 = 0.577_350_269_189_625_8;

#[inline]
fn gauss2<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> f64 {
    let c = 0.5 * (lo + hi);
    let h = 0.5 * (hi - lo);
    let mut a = f(c - h * G2);
    let mut b = f(c + h * G2);
    // A singular sample point gets nudged inward rather than poisoning the sum.
    if !a.is_finite() {
        a = f(c - h * (G2 - 1e-9));
    }
    if !b.is_finite() {
        b = f(c + h * (G2 - 1e-9));
    }
    h * (a + b)
}

fn adapt<F: Fn(f64) -> f64>(
    f: &F,
    lo: f64,
    hi: f64,
    whole: f64,
    tol: f64,
    depth: usize,
    divergent: &mut bool,
) -> f64 {
    let mid = 0.5 * (lo + hi);
    let left = gauss2(f, lo, mid);
    let right = gauss2(f, mid, hi);
    let refined = left + right;
    if !refined.is_finite() || refined.abs() > BLOWUP_CAP {
        *divergent = true;
        return refined;
    }
    if (refined - whole).abs() <= tol {
        return refined;
    }
    if depth == 0 {
        // Still growing at the bottom of the recursion: treat a large
        // mismatch as divergence, otherwise accept the refined value.
        if (refined - whole).abs() > 0.5 * whole.abs().max(1.0) {
            *divergent = true;
        }
        return refined;
    }
    adapt(f, lo, mid, left, 0.5 * tol, depth - 1, divergent)
        + adapt(f, mid, hi, right, 0.5 * tol, depth - 1, divergent)
}

/// Adaptive integral of `f` over `[lo, hi]`.
///
/// `initial_panels` splits the interval before adaptivity starts (callers
/// use it to seed known structure, e.g. a chord crossing several smoothness
/// regions); `tol` is an absolute tolerance for the whole interval.
pub fn integrate_adaptive<F: Fn(f64) -> f64>(
    f: &F,
    lo: f64,
    hi: f64,
    initial_panels: usize,
    tol: f64,
    max_depth: usize,
) -> QuadOutcome {
    let panels = initial_panels.max(1);
    let h = (hi - lo) / panels as f64;
    let mut divergent = false;
    let mut total = 0.0;
    for i in 0..panels {
        let a = lo + i as f64 * h;
        let b = if i + 1 == panels { hi } else { a + h };
        let whole = gauss2(f, a, b);
        total += adapt(f, a, b, whole, tol / panels as f64, max_depth, &mut divergent);
        if divergent || !total.is_finite() || total.abs() > BLOWUP_CAP {
            return QuadOutcome { value: f64::INFINITY, divergent: true };
        }
    }
    QuadOutcome { value: total, divergent }
}

/// Composite Simpson rule with `panels` panels (smooth integrands only).
pub fn simpson<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, panels: usize) -> f64 {
    let n = panels.max(1);
    let h = (hi - lo) / n as f64;
    let mut acc = 0.0;
    for i in 0..n {
        let a = lo + i as f64 * h;
        let b = a + h;
        acc += (h / 6.0) * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
    }
    acc
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`, by Newton iteration on the
/// Legendre polynomial.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = alloc::vec![0.0; n];
    let mut weights = alloc::vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev-based starting guess.
        let mut x = fmath::cos(core::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5));
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}
