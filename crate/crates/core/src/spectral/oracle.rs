//! Dense reference for the largest eigenvalue of `A_α(G)`.

use super::{build_alpha_matrix, fabs, AlphaParam, SpectralError};
use crate::graph::Graph;
use crate::scalar::{from_count, Real};

pub const ORACLE_MAX_N: usize = 12;

/// Householder reduction of a symmetric matrix to tridiagonal form.
/// Returns `(diagonal, off_diagonal)`.
pub(crate) fn tridiagonalize<T: Real>(mut a: Vec<Vec<T>>) -> (Vec<T>, Vec<T>) {
    let n = a.len();
    let two = T::one() + T::one();
    for k in 0..n.saturating_sub(2) {
        let col: Vec<T> = (k + 1..n).map(|i| a[i][k]).collect();
        let norm = col.iter().fold(T::zero(), |s, &v| s + v * v).sqrt();
        if norm == T::zero() {
            continue;
        }
        let alpha = if col[0] > T::zero() { -norm } else { norm };
        let mut v = col;
        v[0] = v[0] - alpha;
        let vnorm = v.iter().fold(T::zero(), |s, &x| s + x * x).sqrt();
        if vnorm == T::zero() {
            continue;
        }
        for x in v.iter_mut() {
            *x = *x / vnorm;
        }
        let m = n - k - 1;
        // p = A_sub v, K = vᵀp, q = p − K v; A_sub −= 2(v qᵀ + q vᵀ)
        let p: Vec<T> = (0..m)
            .map(|i| (0..m).fold(T::zero(), |s, j| s + a[k + 1 + i][k + 1 + j] * v[j]))
            .collect();
        let kk = (0..m).fold(T::zero(), |s, i| s + v[i] * p[i]);
        let q: Vec<T> = (0..m).map(|i| p[i] - kk * v[i]).collect();
        for i in 0..m {
            for j in 0..m {
                let upd = two * (v[i] * q[j] + q[i] * v[j]);
                a[k + 1 + i][k + 1 + j] = a[k + 1 + i][k + 1 + j] - upd;
            }
        }
        a[k + 1][k] = alpha;
        a[k][k + 1] = alpha;
        for i in k + 2..n {
            a[i][k] = T::zero();
            a[k][i] = T::zero();
        }
    }
    let diag = (0..n).map(|i| a[i][i]).collect();
    let off = (0..n.saturating_sub(1)).map(|i| a[i + 1][i]).collect();
    (diag, off)
}

/// Number of eigenvalues of the tridiagonal matrix strictly below `x`
/// (sign count of the LDLᵀ pivots of `T − xI`).
pub(crate) fn count_below<T: Real>(diag: &[T], off: &[T], x: T) -> usize {
    let tiny = T::min_positive_value();
    let mut count = 0;
    let mut q = T::one();
    for i in 0..diag.len() {
        q = if i == 0 {
            diag[0] - x
        } else {
            diag[i] - x - off[i - 1] * off[i - 1] / q
        };
        if q == T::zero() {
            q = -tiny;
        }
        if q < T::zero() {
            count += 1;
        }
    }
    count
}

/// Largest eigenvalue of `A_α(G)` by tridiagonalization and bisection on
/// `[0, Δ + 1]`. Works for disconnected graphs too.
pub fn spectral_radius_oracle<T: Real>(g: &Graph, a: &AlphaParam<T>) -> Result<T, SpectralError> {
    let n = g.n();
    if n > ORACLE_MAX_N {
        return Err(SpectralError::TooLarge { n, max: ORACLE_MAX_N });
    }
    if n == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    let (diag, off) = tridiagonalize(build_alpha_matrix(g, a));
    let max_deg = (0..n).map(|v| g.neighbors(v).len()).max().unwrap_or(0);
    let mut lo = T::zero();
    let mut hi = from_count::<T>(max_deg + 1);
    for _ in 0..200 {
        let mid = (lo + hi) / (T::one() + T::one());
        if mid <= lo || mid >= hi {
            break;
        }
        if count_below(&diag, &off, mid) == n {
            hi = mid;
        } else {
            lo = mid;
        }
        if fabs(hi - lo) <= T::epsilon() * hi {
            break;
        }
    }
    Ok((lo + hi) / (T::one() + T::one()))
}
