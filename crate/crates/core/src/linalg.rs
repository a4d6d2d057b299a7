//! Minimal dense linear algebra on slices. State dimensions here are tiny
//! (d, m <= 3 in practice), so plain Gaussian elimination is the right tool.

use alloc::vec::Vec;

#[inline]
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[inline]
pub fn norm(a: &[f64]) -> f64 {
    crate::fmath::sqrt(dot(a, a))
}

/// `out = a * x` for a row-major `rows x cols` matrix.
pub fn matvec(a: &[f64], rows: usize, cols: usize, x: &[f64], out: &mut [f64]) {
    debug_assert_eq!(a.len(), rows * cols);
    debug_assert_eq!(x.len(), cols);
    debug_assert_eq!(out.len(), rows);
    for r in 0..rows {
        out[r] = dot(&a[r * cols..(r + 1) * cols], x);
    }
}

/// `out = a^T * x` for a row-major `rows x cols` matrix.
pub fn matvec_transpose(a: &[f64], rows: usize, cols: usize, x: &[f64], out: &mut [f64]) {
    debug_assert_eq!(a.len(), rows * cols);
    debug_assert_eq!(x.len(), rows);
    debug_assert_eq!(out.len(), cols);
    for c in 0..cols {
        let mut acc = 0.0;
        for r in 0..rows {
            acc += a[r * cols + c] * x[r];
        }
        out[c] = acc;
    }
}

/// Solves the square system `a x = b` in place by partial-pivot Gaussian
/// elimination. Returns false if the matrix is numerically singular.
pub fn solve_in_place(a: &mut [f64], n: usize, b: &mut [f64]) -> bool {
    debug_assert_eq!(a.len(), n * n);
    debug_assert_eq!(b.len(), n);
    for col in 0..n {
        let mut pivot = col;
        for r in col + 1..n {
            if a[r * n + col].abs() > a[pivot * n + col].abs() {
                pivot = r;
            }
        }
        if a[pivot * n + col].abs() < 1e-300 {
            return false;
        }
        if pivot != col {
            for c in 0..n {
                a.swap(col * n + c, pivot * n + c);
            }
            b.swap(col, pivot);
        }
        let d = a[col * n + col];
        for r in col + 1..n {
            let factor = a[r * n + col] / d;
            if factor == 0.0 {
                continue;
            }
            for c in col..n {
                a[r * n + c] -= factor * a[col * n + c];
            }
            b[r] -= factor * b[col];
        }
    }
    for col in (0..n).rev() {
        let mut acc = b[col];
        for c in col + 1..n {
            acc -= a[col * n + c] * b[c];
        }
        b[col] = acc / a[col * n + col];
    }
    true
}

/// `sigma sigma^T` for a row-major `d x m` matrix, written into `out` (d x d).
pub fn gram(sigma: &[f64], d: usize, m: usize, out: &mut [f64]) {
    debug_assert_eq!(sigma.len(), d * m);
    debug_assert_eq!(out.len(), d * d);
    for i in 0..d {
        for j in 0..d {
            out[i * d + j] = dot(&sigma[i * m..(i + 1) * m], &sigma[j * m..(j + 1) * m]);
        }
    }
}

/// Thomas algorithm for a tridiagonal system; diagonals given as
/// `(sub, diag, sup)` with `sub[0]` and `sup[n-1]` unused.
pub fn solve_tridiagonal(sub: &[f64], diag: &[f64], sup: &[f64], rhs: &mut [f64]) -> bool {
    let n = diag.len();
    let mut scratch: Vec<f64> = alloc::vec![0.0; n];
    let mut d0 = diag[0];
    if d0.abs() < 1e-300 {
        return false;
    }
    scratch[0] = sup[0] / d0;
    rhs[0] /= d0;
    for i in 1..n {
        d0 = diag[i] - sub[i] * scratch[i - 1];
        if d0.abs() < 1e-300 {
            return false;
        }
        if i + 1 < n {
            scratch[i] = sup[i] / d0;
        }
        rhs[i] = (rhs[i] - sub[i] * rhs[i - 1]) / d0;
    }
    for i in (0..n - 1).rev() {
        rhs[i] -= scratch[i] * rhs[i + 1];
    }
    true
}
