//! Domain geometry: membership, boundary distance and the intrinsic metric.
//!
//! Three analytic geometries are supported (half-space, ball, axis slab);
//! each gives the exact distance to the boundary set, which every downstream
//! estimate leans on. The intrinsic distance `rho(x, y)` reweights length by
//! `1 / (rho_boundary /\ 1)`; it is computed exactly in one dimension and as
//! a straight-chord upper bound in higher dimensions.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg;
use crate::quad;

/// Points with boundary distance at or below this are treated as lying on
/// the boundary.
pub const BOUNDARY_EPS: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub enum DomainKind {
    /// `{ x : <normal, x> > offset }` with a unit normal.
    HalfSpace { normal: Vec<f64>, offset: f64 },
    /// Open ball of the given radius.
    Ball { center: Vec<f64>, radius: f64 },
    /// `{ x : lo < x[axis] < hi }`; the 1-D interval is the `axis = 0` case.
    Slab { axis: usize, lo: f64, hi: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Domain {
    kind: DomainKind,
    dim: usize,
    r0: f64,
    r1: f64,
}

impl Domain {
    pub fn half_space(mut normal: Vec<f64>, offset: f64) -> Result<Self> {
        let dim = normal.len();
        if dim == 0 {
            return Err(Error::invalid("half-space normal must be non-empty"));
        }
        let n = linalg::norm(&normal);
        if !(n.is_finite() && n > 0.0) {
            return Err(Error::invalid("half-space normal must be nonzero and finite"));
        }
        for c in normal.iter_mut() {
            *c /= n;
        }
        let r0 = 1.0;
        Ok(Domain { kind: DomainKind::HalfSpace { normal, offset: offset / n }, dim, r0, r1: r0 / 2.0 })
    }

    /// The half-line `(0, oo)` in one dimension.
    pub fn half_line() -> Self {
        Domain::half_space(alloc::vec![1.0], 0.0).expect("static geometry")
    }

    pub fn ball(center: Vec<f64>, radius: f64) -> Result<Self> {
        if center.is_empty() {
            return Err(Error::invalid("ball center must be non-empty"));
        }
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::invalid("ball radius must be positive"));
        }
        let dim = center.len();
        let r0 = radius / 2.0;
        Ok(Domain { kind: DomainKind::Ball { center, radius }, dim, r0, r1: r0 / 2.0 })
    }

    /// The open interval `(lo, hi)` in one dimension.
    pub fn interval(lo: f64, hi: f64) -> Result<Self> {
        Domain::slab(1, 0, lo, hi)
    }

    pub fn slab(dim: usize, axis: usize, lo: f64, hi: f64) -> Result<Self> {
        if dim == 0 || axis >= dim {
            return Err(Error::invalid("slab axis out of range"));
        }
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::invalid("slab requires lo < hi, both finite"));
        }
        let r0 = (hi - lo) / 4.0;
        Ok(Domain { kind: DomainKind::Slab { axis, lo, hi }, dim, r0, r1: r0 / 2.0 })
    }

    /// Overrides the regularity radii. Requires `0 < r1 <= r0`.
    pub fn with_radii(mut self, r0: f64, r1: f64) -> Result<Self> {
        if !(r0.is_finite() && r0 > 0.0 && r1 > 0.0 && r1 <= r0) {
            return Err(Error::invalid("radii must satisfy 0 < r1 <= r0"));
        }
        self.r0 = r0;
        self.r1 = r1;
        Ok(self)
    }

    pub fn kind(&self) -> &DomainKind {
        &self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn r0(&self) -> f64 {
        self.r0
    }

    pub fn r1(&self) -> f64 {
        self.r1
    }

    /// Signed distance to the boundary set: positive inside, negative outside.
    pub fn signed_distance(&self, x: &[f64]) -> f64 {
        debug_assert_eq!(x.len(), self.dim);
        match &self.kind {
            DomainKind::HalfSpace { normal, offset } => linalg::dot(normal, x) - offset,
            DomainKind::Ball { center, radius } => {
                let mut d2 = 0.0;
                for (xi, ci) in x.iter().zip(center) {
                    d2 += (xi - ci) * (xi - ci);
                }
                radius - crate::fmath::sqrt(d2)
            }
            DomainKind::Slab { axis, lo, hi } => (x[*axis] - lo).min(hi - x[*axis]),
        }
    }

    /// Distance to the boundary set, regardless of side.
    pub fn boundary_distance(&self, x: &[f64]) -> f64 {
        match &self.kind {
            DomainKind::Slab { axis, lo, hi } => (x[*axis] - lo).abs().min((hi - x[*axis]).abs()),
            _ => self.signed_distance(x).abs(),
        }
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        self.signed_distance(x) > 0.0
    }

    pub fn on_boundary(&self, x: &[f64]) -> bool {
        self.boundary_distance(x) <= BOUNDARY_EPS
    }

    /// Nearest boundary point.
    pub fn project_to_boundary(&self, x: &[f64]) -> Vec<f64> {
        let mut out = x.to_vec();
        match &self.kind {
            DomainKind::HalfSpace { normal, offset } => {
                let excess = linalg::dot(normal, x) - offset;
                for (o, n) in out.iter_mut().zip(normal) {
                    *o -= excess * n;
                }
            }
            DomainKind::Ball { center, radius } => {
                let mut d2 = 0.0;
                for (xi, ci) in x.iter().zip(center) {
                    d2 += (xi - ci) * (xi - ci);
                }
                let d = crate::fmath::sqrt(d2);
                if d < 1e-300 {
                    // Center: every boundary point is nearest; pick one axis.
                    out.copy_from_slice(center);
                    out[0] += radius;
                } else {
                    let scale = radius / d;
                    for (o, ci) in out.iter_mut().zip(center) {
                        *o = ci + (*o - ci) * scale;
                    }
                }
            }
            DomainKind::Slab { axis, lo, hi } => {
                out[*axis] = if (x[*axis] - lo).abs() <= (hi - x[*axis]).abs() { *lo } else { *hi };
            }
        }
        out
    }

    /// Unit direction along which the boundary distance changes fastest at
    /// `x` (the inward normal of the nearest boundary piece). Used for the
    /// normal-direction variance in the bridge crossing probability.
    pub fn boundary_normal_dir(&self, x: &[f64]) -> Vec<f64> {
        match &self.kind {
            DomainKind::HalfSpace { normal, .. } => normal.clone(),
            DomainKind::Ball { center, .. } => {
                let mut dir: Vec<f64> = x.iter().zip(center).map(|(xi, ci)| xi - ci).collect();
                let n = linalg::norm(&dir);
                if n < 1e-300 {
                    dir[0] = 1.0;
                } else {
                    for c in dir.iter_mut() {
                        *c /= n;
                    }
                }
                dir
            }
            DomainKind::Slab { axis, .. } => {
                let mut dir = alloc::vec![0.0; self.dim];
                dir[*axis] = 1.0;
                dir
            }
        }
    }

    /// Intrinsic distance between `x` and `y`: the line integral of
    /// `1 / (rho_boundary /\ 1)` along the straight chord.
    ///
    /// Exact in one dimension (the chord is the only path); an upper bound
    /// on the geodesic value for `d >= 2`. Endpoints on the boundary make
    /// the weight non-integrable, so any pair with exactly one endpoint on
    /// the boundary (or two distinct boundary points) returns `+inf`.
    pub fn intrinsic_distance(&self, x: &[f64], y: &[f64], quadrature_steps: usize) -> Result<f64> {
        if quadrature_steps == 0 {
            return Err(Error::invalid("quadrature_steps must be positive"));
        }
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: x.len().max(y.len()) });
        }
        if x == y {
            return Ok(0.0);
        }
        if self.on_boundary(x) || self.on_boundary(y) {
            return Ok(f64::INFINITY);
        }
        let mut chord = 0.0;
        for (a, b) in x.iter().zip(y) {
            chord += (a - b) * (a - b);
        }
        let chord = crate::fmath::sqrt(chord);
        let weight = |s: f64| {
            let mut rho = f64::INFINITY;
            // Evaluate rho_boundary on the fly to avoid allocating per node.
            match &self.kind {
                DomainKind::HalfSpace { normal, offset } => {
                    let mut v = -offset;
                    for i in 0..self.dim {
                        v += normal[i] * (x[i] + s * (y[i] - x[i]));
                    }
                    rho = v.abs();
                }
                DomainKind::Ball { center, radius } => {
                    let mut d2 = 0.0;
                    for i in 0..self.dim {
                        let z = x[i] + s * (y[i] - x[i]) - center[i];
                        d2 += z * z;
                    }
                    rho = (radius - crate::fmath::sqrt(d2)).abs();
                }
                DomainKind::Slab { axis, lo, hi } => {
                    let z = x[*axis] + s * (y[*axis] - x[*axis]);
                    rho = (z - lo).abs().min((hi - z).abs());
                }
            }
            chord / rho.min(1.0)
        };
        let out = if self.dim == 1 {
            quad::integrate_adaptive(&weight, 0.0, 1.0, quadrature_steps, 1e-12, 52)
        } else {
            quad::integrate_adaptive(&weight, 0.0, 1.0, quadrature_steps, 1e-11, 40)
        };
        if out.divergent {
            return Ok(f64::INFINITY);
        }
        if !out.value.is_finite() {
            return Err(Error::numerical("intrinsic distance quadrature produced NaN".to_string()));
        }
        Ok(out.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn boundary_distance_examples() {
        let hs = Domain::half_space(vec![1.0, 0.0], 0.0).unwrap();
        assert_eq!(hs.boundary_distance(&[0.5, 3.0]), 0.5);

        let iv = Domain::interval(0.0, 2.0).unwrap();
        assert_eq!(iv.boundary_distance(&[1.0]), 1.0);

        let ball = Domain::ball(vec![0.0, 0.0], 1.0).unwrap();
        assert_eq!(ball.boundary_distance(&[0.0, 0.0]), 1.0);
    }

    #[test]
    fn signed_distance_sides() {
        let iv = Domain::interval(0.0, 2.0).unwrap();
        assert!(iv.contains(&[0.7]));
        assert!(!iv.contains(&[-0.1]));
        assert!(iv.on_boundary(&[0.0]));
        assert!(iv.on_boundary(&[2.0]));
        let ball = Domain::ball(vec![1.0], 0.5).unwrap();
        assert!(ball.contains(&[1.2]));
        assert!(!ball.contains(&[0.2]));
    }

    #[test]
    fn projection_lands_on_boundary() {
        let ball = Domain::ball(vec![0.0, 0.0], 1.0).unwrap();
        let p = ball.project_to_boundary(&[0.3, 0.1]);
        assert!(ball.boundary_distance(&p) <= 1e-12);
        let hs = Domain::half_line();
        let p = hs.project_to_boundary(&[0.4]);
        assert!(p[0].abs() <= 1e-15);
    }

    #[test]
    fn lipschitz_on_grid() {
        // 1-Lipschitz property of rho_boundary between neighboring grid points.
        let domains = [
            Domain::half_space(vec![0.6, 0.8], -0.3).unwrap(),
            Domain::ball(vec![0.2, -0.1], 1.3).unwrap(),
            Domain::slab(2, 1, -1.0, 1.5).unwrap(),
        ];
        for dom in &domains {
            let n = 40;
            for i in 0..n {
                for j in 0..n {
                    let x = [-2.0 + 4.0 * i as f64 / n as f64, -2.0 + 4.0 * j as f64 / n as f64];
                    let step = 4.0 / n as f64;
                    let xr = [x[0] + step, x[1]];
                    let xu = [x[0], x[1] + step];
                    let d = dom.boundary_distance(&x);
                    assert!((d - dom.boundary_distance(&xr)).abs() <= step + 1e-12);
                    assert!((d - dom.boundary_distance(&xu)).abs() <= step + 1e-12);
                }
            }
        }
    }

    #[test]
    fn intrinsic_identity_and_symmetry() {
        let iv = Domain::interval(0.0, 2.0).unwrap();
        assert_eq!(iv.intrinsic_distance(&[1.0], &[1.0], 4).unwrap(), 0.0);
        let a = iv.intrinsic_distance(&[0.3], &[1.4], 4).unwrap();
        let b = iv.intrinsic_distance(&[1.4], &[0.3], 4).unwrap();
        assert!((a - b).abs() < 1e-10);
    }

    #[test]
    fn intrinsic_halfline_log_integral() {
        // On (0, oo) with both points below 1: integral of dr/r = ln(y/x).
        let hl = Domain::half_line();
        let v = hl.intrinsic_distance(&[0.5], &[1.0], 8).unwrap();
        assert!((v - core::f64::consts::LN_2).abs() < 1e-9, "got {v}");
    }

    #[test]
    fn intrinsic_boundary_endpoint_diverges() {
        let iv = Domain::interval(0.0, 2.0).unwrap();
        assert_eq!(iv.intrinsic_distance(&[0.0], &[1.0], 8).unwrap(), f64::INFINITY);
        let ball = Domain::ball(vec![0.0, 0.0], 1.0).unwrap();
        assert_eq!(
            ball.intrinsic_distance(&[1.0, 0.0], &[0.2, 0.0], 8).unwrap(),
            f64::INFINITY
        );
    }

    #[test]
    fn intrinsic_dominates_euclidean() {
        let ball = Domain::ball(vec![0.0, 0.0], 1.0).unwrap();
        let pairs = [([0.1, 0.2], [0.5, -0.3]), ([-0.4, 0.0], [0.0, 0.6]), ([0.7, 0.1], [0.6, 0.2])];
        for (x, y) in pairs {
            let rho = ball.intrinsic_distance(&x, &y, 16).unwrap();
            let euclid = crate::fmath::sqrt(
                (x[0] - y[0]) * (x[0] - y[0]) + (x[1] - y[1]) * (x[1] - y[1]),
            );
            assert!(rho >= euclid - 1e-12);
        }
    }

    #[test]
    fn rejects_zero_quadrature_steps() {
        let iv = Domain::interval(0.0, 2.0).unwrap();
        assert!(iv.intrinsic_distance(&[0.5], &[1.0], 0).is_err());
    }
}
