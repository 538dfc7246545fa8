//! Largest eigenvalue of symmetric nonnegative matrices.
//!
//! Power iteration runs on `M + cI` with `c` half the largest row sum: the
//! shift keeps every eigenvalue of a bipartite `M` away from `-rho` so the
//! iteration converges, and it preserves positivity of the iterate. A cyclic
//! Jacobi sweep takes over if the iteration cap is hit.

use serde::Serialize;

use super::matrix::WeightedMatrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Default residual tolerance, relative to the Frobenius norm.
pub const DEFAULT_TOL: f64 = 1e-10;

const MAX_POWER_ITERATIONS: usize = 20_000;
const MAX_JACOBI_SWEEPS: usize = 100;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralResult<T> {
    pub rho: T,
    pub eigenvector: Vec<T>,
    pub residual: T,
}

fn norm<T: Scalar>(x: &[T]) -> T {
    x.iter().map(|&v| v * v).sum::<T>().sqrt()
}

fn residual<T: Scalar>(m: &WeightedMatrix<T>, x: &[T], rho: T) -> T {
    let y = m.mul_vec(x);
    norm(&y.iter().zip(x).map(|(&a, &b)| a - rho * b).collect::<Vec<_>>())
}

/// Spectral radius and unit Perron vector with `residual <= tol * ||M||_F`.
pub fn spectral_radius<T: Scalar>(m: &WeightedMatrix<T>, tol: T) -> Result<SpectralResult<T>> {
    // written so that NaN is rejected too
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(tol > T::zero()) {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let n = m.order();
    let scale = m.frobenius_norm();
    if scale == T::zero() {
        let x = vec![T::one() / T::from_count(n).sqrt(); n];
        return Ok(SpectralResult {
            rho: T::zero(),
            eigenvector: x,
            residual: T::zero(),
        });
    }
    let target = tol * scale;
    let shift = m.max_row_sum() / T::lit(2.0);
    let mut x = vec![T::one() / T::from_count(n).sqrt(); n];
    for _ in 0..MAX_POWER_ITERATIONS {
        let mx = m.mul_vec(&x);
        let rho: T = mx.iter().zip(&x).map(|(&a, &b)| a * b).sum();
        let r = norm(&mx.iter().zip(&x).map(|(&a, &b)| a - rho * b).collect::<Vec<_>>());
        if r <= target {
            return Ok(SpectralResult {
                rho,
                eigenvector: x,
                residual: r,
            });
        }
        let mut y: Vec<T> = mx.iter().zip(&x).map(|(&a, &b)| a + shift * b).collect();
        let ny = norm(&y);
        y.iter_mut().for_each(|v| *v = *v / ny);
        x = y;
    }
    let result = jacobi_top(m)?;
    if result.residual <= target {
        Ok(result)
    } else {
        Err(Error::ConvergenceFailure {
            iterations: MAX_POWER_ITERATIONS,
            residual: result.residual.to_f64().unwrap_or(f64::NAN),
        })
    }
}

fn jacobi_top<T: Scalar>(m: &WeightedMatrix<T>) -> Result<SpectralResult<T>> {
    let (values, vectors) = symmetric_eigen(m.as_slice(), m.order())?;
    let mut x = vectors.into_iter().next().expect("nonempty");
    let rho = values[0];
    let sum: T = x.iter().copied().sum();
    if sum < T::zero() {
        x.iter_mut().for_each(|v| *v = -*v);
    }
    let r = residual(m, &x, rho);
    Ok(SpectralResult {
        rho,
        eigenvector: x,
        residual: r,
    })
}

/// Full eigendecomposition of a symmetric row-major `n x n` matrix by cyclic
/// Jacobi rotations. Eigenvalues come back in decreasing order, each paired
/// with a unit eigenvector.
pub fn symmetric_eigen<T: Scalar>(a: &[T], n: usize) -> Result<(Vec<T>, Vec<Vec<T>>)> {
    if a.len() != n * n {
        return Err(Error::InvalidParameter("matrix length is not n * n".into()));
    }
    let mut a = a.to_vec();
    let mut v = vec![T::zero(); n * n];
    for i in 0..n {
        v[i * n + i] = T::one();
    }
    let total: T = a.iter().map(|&x| x * x).sum::<T>();
    let floor = T::epsilon() * T::epsilon() * total;
    let mut converged = false;
    for _ in 0..MAX_JACOBI_SWEEPS {
        let off: T = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j] * a[i * n + j])
            .sum();
        if off <= floor {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == T::zero() {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (T::lit(2.0) * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    if !converged {
        return Err(Error::ConvergenceFailure {
            iterations: MAX_JACOBI_SWEEPS,
            residual: f64::NAN,
        });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].partial_cmp(&a[i * n + i]).expect("finite eigenvalues"));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors = order
        .iter()
        .map(|&i| {
            let col: Vec<T> = (0..n).map(|k| v[k * n + i]).collect();
            let nc = norm(&col);
            col.into_iter().map(|x| x / nc).collect()
        })
        .collect();
    Ok((values, vectors))
}

/// `x^T M x` for a unit vector `x`; a lower bound on the spectral radius.
pub fn rayleigh_bound<T: Scalar>(m: &WeightedMatrix<T>, x: &[T]) -> Result<T> {
    if x.len() != m.order() {
        return Err(Error::InvalidParameter(format!(
            "vector length {} for order {}",
            x.len(),
            m.order()
        )));
    }
    let nx = norm(x);
    let slack = T::lit(1e-9).max(T::epsilon() * T::lit(16.0));
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !((nx - T::one()).abs() <= slack) {
        return Err(Error::NonUnitVector(nx.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(m.mul_vec(x).iter().zip(x).map(|(&a, &b)| a * b).sum())
}
