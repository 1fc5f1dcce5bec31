//! The A_α matrix, its spectral radius and Perron vector.
//!
//! [`spectral_radius`] runs power iteration on `A_α + I` from the
//! normalized all-ones vector and stops once the eigen-equation residual
//! `max_v |(A_α x)_v − ρ x_v|` is below tolerance. The `+I` shift makes the
//! iteration matrix primitive, so bipartite graphs at α = 0 (whose spectrum
//! is symmetric about zero) still converge. When the two largest eigenvalues
//! are nearly equal, plain power iteration needs millions of steps; after
//! `polish_after` steps the iterate is finished by inverse iteration shifted
//! at the Collatz–Wielandt upper bound `max_v (A_α x)_v / x_v ≥ ρ`, which
//! cannot lock onto any eigenvalue other than ρ.
//!
//! [`spectral_radius_oracle`] is an independent dense check: Householder
//! tridiagonalization followed by Sturm-count bisection.

mod oracle;

use thiserror::Error;

use crate::graph::Graph;
use crate::scalar::{from_count, lit, Real, Scalar};

pub use oracle::{spectral_radius_oracle, ORACLE_MAX_N};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("alpha must lie in [0, 1), got {0}")]
    InvalidAlpha(String),
    #[error("graph is disconnected; the Perron vector is not unique")]
    Disconnected,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error(
        "no convergence after {iterations} iterations (best rho {rho}, residual {residual:e})"
    )]
    NotConverged { rho: f64, residual: f64, iterations: usize },
    #[error("vector is zero")]
    ZeroVector,
    #[error("vector has length {found}, graph has {expected} vertices")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dense oracle supports at most {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
}

/// α restricted to `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct AlphaParam<T> {
    alpha: T,
}

impl<T: Scalar> AlphaParam<T> {
    pub fn new(alpha: T) -> Result<Self, SpectralError> {
        // written so that NaN fails too
        if alpha >= T::zero() && alpha < T::one() {
            Ok(AlphaParam { alpha })
        } else {
            Err(SpectralError::InvalidAlpha(format!("{alpha:?}")))
        }
    }

    pub fn value(&self) -> T {
        self.alpha
    }

    /// Weight `1 − α` on the adjacency part.
    pub fn adjacency_weight(&self) -> T {
        T::one() - self.alpha
    }
}

impl AlphaParam<f64> {
    /// The default harness grid.
    pub fn default_grid() -> Vec<Self> {
        crate::DEFAULT_ALPHA_GRID.iter().map(|&a| AlphaParam { alpha: a }).collect()
    }
}

/// Spectral radius estimate with its unit Perron vector.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResult<T> {
    pub alpha: AlphaParam<T>,
    pub rho: T,
    pub x: Vec<T>,
    pub residual: T,
    pub iterations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerOptions<T> {
    /// Residual bound on `max_v |(A_α x)_v − ρ x_v|`.
    pub tol: T,
    /// Cap on the total number of matrix applications.
    pub max_iter: usize,
    /// Switch to shifted inverse iteration after this many power steps;
    /// `None` keeps plain power iteration throughout.
    pub polish_after: Option<usize>,
}

impl<T: Real> Default for PowerOptions<T> {
    /// `tol = max(1e-12, 100·ε)`, so f64 gets 1e-12 and f32 about 1.2e-5.
    fn default() -> Self {
        let tol = lit::<T>(1e-12).max(T::epsilon() * lit(100.0));
        PowerOptions { tol, max_iter: 1_000_000, polish_after: Some(5_000) }
    }
}

/// Dense `A_α(G)`: `α·d(i)` on the diagonal, `1 − α` on edges.
pub fn build_alpha_matrix<T: Scalar>(g: &Graph, a: &AlphaParam<T>) -> Vec<Vec<T>> {
    let n = g.n();
    let beta = a.adjacency_weight();
    let mut m = vec![vec![T::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        let nb = g.neighbors(i);
        row[i] = a.value() * from_count(nb.len());
        for &j in nb {
            row[j] = beta;
        }
    }
    m
}

/// `A_α(G)·x` without forming the matrix.
pub fn apply_alpha<T: Scalar>(g: &Graph, a: &AlphaParam<T>, x: &[T]) -> Vec<T> {
    let alpha = a.value();
    let beta = a.adjacency_weight();
    (0..g.n())
        .map(|v| {
            let nb = g.neighbors(v);
            let s = nb.iter().fold(T::zero(), |acc, &w| acc + x[w]);
            alpha * from_count::<T>(nb.len()) * x[v] + beta * s
        })
        .collect()
}

fn check_len<T>(g: &Graph, x: &[T]) -> Result<(), SpectralError> {
    if x.len() == g.n() {
        Ok(())
    } else {
        Err(SpectralError::DimensionMismatch { expected: g.n(), found: x.len() })
    }
}

/// `xᵀ A_α x / xᵀx = (α Σ d(v) x_v² + 2(1−α) Σ_{uv∈E} x_u x_v) / ‖x‖²`.
pub fn rayleigh_quotient<T: Scalar>(
    g: &Graph,
    a: &AlphaParam<T>,
    x: &[T],
) -> Result<T, SpectralError> {
    check_len(g, x)?;
    let norm2 = x.iter().fold(T::zero(), |acc, &v| acc + v * v);
    if norm2 == T::zero() {
        return Err(SpectralError::ZeroVector);
    }
    let diag = (0..g.n()).fold(T::zero(), |acc, v| {
        acc + from_count::<T>(g.neighbors(v).len()) * x[v] * x[v]
    });
    let off = g.edges().fold(T::zero(), |acc, (u, v)| acc + x[u] * x[v]);
    let two = T::one() + T::one();
    Ok((a.value() * diag + two * a.adjacency_weight() * off) / norm2)
}

/// `max_v |α d(v) x_v + (1−α) Σ_{w∼v} x_w − ρ x_v|`.
pub fn eigen_residual<T: Scalar>(
    g: &Graph,
    a: &AlphaParam<T>,
    x: &[T],
    rho: T,
) -> Result<T, SpectralError> {
    check_len(g, x)?;
    let ax = apply_alpha(g, a, x);
    Ok(ax
        .iter()
        .zip(x)
        .map(|(&y, &xv)| (y - rho * xv).abs())
        .fold(T::zero(), |m, r| if r > m { r } else { m }))
}

fn dot<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (&x, &y)| acc + x * y)
}

fn normalize<T: Real>(x: &mut [T]) {
    let norm = dot(x, x).sqrt();
    for v in x.iter_mut() {
        *v = *v / norm;
    }
}

fn max_residual<T: Real>(ax: &[T], x: &[T], rho: T) -> T {
    ax.iter()
        .zip(x)
        .map(|(&y, &xv)| fabs(y - rho * xv))
        .fold(T::zero(), |m, r| m.max(r))
}

// Float and Signed both provide abs(); pin the Float one.
#[inline]
fn fabs<T: Real>(x: T) -> T {
    num_traits::Float::abs(x)
}

/// Spectral radius with the default options (tolerance 1e-12 in f64).
pub fn spectral_radius<T: Real>(
    g: &Graph,
    a: &AlphaParam<T>,
) -> Result<SpectralResult<T>, SpectralError> {
    spectral_radius_with(g, a, &PowerOptions::default())
}

pub fn spectral_radius_with<T: Real>(
    g: &Graph,
    a: &AlphaParam<T>,
    opts: &PowerOptions<T>,
) -> Result<SpectralResult<T>, SpectralError> {
    let n = g.n();
    if n == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    let mut x = vec![T::one() / from_count::<T>(n).sqrt(); n];
    let mut rho = T::zero();
    let mut residual = T::infinity();
    let mut iterations = 0;
    let power_steps = opts.polish_after.map_or(opts.max_iter, |p| p.min(opts.max_iter));

    while iterations < power_steps {
        let ax = apply_alpha(g, a, &x);
        iterations += 1;
        rho = dot(&x, &ax);
        residual = max_residual(&ax, &x, rho);
        if residual <= opts.tol {
            return Ok(SpectralResult { alpha: *a, rho, x, residual, iterations });
        }
        x = ax.iter().zip(&x).map(|(&y, &xv)| y + xv).collect();
        normalize(&mut x);
    }

    if opts.polish_after.is_some() {
        let dense = build_alpha_matrix(g, a);
        while iterations < opts.max_iter {
            let ax = apply_alpha(g, a, &x);
            iterations += 1;
            rho = dot(&x, &ax);
            residual = max_residual(&ax, &x, rho);
            if residual <= opts.tol {
                return Ok(SpectralResult { alpha: *a, rho, x, residual, iterations });
            }
            let Some(next) = inverse_step(&dense, &x, &ax) else { break };
            x = next;
        }
    }

    Err(SpectralError::NotConverged {
        rho: rho.to_f64().unwrap_or(f64::NAN),
        residual: residual.to_f64().unwrap_or(f64::NAN),
        iterations,
    })
}

/// One step of inverse iteration shifted at the Collatz–Wielandt bound.
/// Returns `None` if the iterate has lost positivity.
fn inverse_step<T: Real>(dense: &[Vec<T>], x: &[T], ax: &[T]) -> Option<Vec<T>> {
    let mut sigma = T::neg_infinity();
    for (&y, &xv) in ax.iter().zip(x) {
        if xv <= T::zero() {
            return None;
        }
        sigma = sigma.max(y / xv);
    }
    let mut m: Vec<Vec<T>> = dense.to_vec();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = row[i] - sigma;
    }
    let tiny = T::epsilon() * fabs(sigma).max(T::one());
    let mut y = solve_dense(m, x.to_vec(), tiny)?;
    // σ ≥ ρ makes A_α − σI negative semidefinite; flip back to positive.
    let s = y.iter().fold(T::zero(), |acc, &v| acc + v);
    if !s.is_finite() || s == T::zero() {
        return None;
    }
    for v in y.iter_mut() {
        *v = *v / s;
    }
    normalize(&mut y);
    Some(y)
}

/// Gaussian elimination with partial pivoting; pivots smaller than `tiny`
/// are replaced by `tiny`, as usual for inverse iteration.
fn solve_dense<T: Real>(mut m: Vec<Vec<T>>, mut b: Vec<T>, tiny: T) -> Option<Vec<T>> {
    let n = b.len();
    for k in 0..n {
        let p = (k..n).max_by(|&i, &j| {
            fabs(m[i][k]).partial_cmp(&fabs(m[j][k])).unwrap_or(std::cmp::Ordering::Equal)
        })?;
        m.swap(k, p);
        b.swap(k, p);
        if fabs(m[k][k]) < tiny {
            m[k][k] = if m[k][k] < T::zero() { -tiny } else { tiny };
        }
        for i in k + 1..n {
            let f = m[i][k] / m[k][k];
            if f == T::zero() {
                continue;
            }
            for j in k..n {
                m[i][j] = m[i][j] - f * m[k][j];
            }
            b[i] = b[i] - f * b[k];
        }
    }
    let mut x = vec![T::zero(); n];
    for k in (0..n).rev() {
        let s = (k + 1..n).fold(b[k], |acc, j| acc - m[k][j] * x[j]);
        x[k] = s / m[k][k];
    }
    x.iter().all(|v| v.is_finite()).then_some(x)
}

#[cfg(test)]
mod tests;
