//! Characteristic polynomials of small quotient matrices.

use super::partition::QuotientMatrix;
use crate::error::{Error, Result};
use crate::scalar::Field;

/// Largest quotient order accepted by [`char_poly`].
pub const MAX_CHAR_POLY_ORDER: usize = 6;

// ascending coefficients
type Poly<T> = Vec<T>;

fn poly_mul<T: Field>(a: &Poly<T>, b: &Poly<T>) -> Poly<T> {
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

fn poly_add_assign<T: Field>(acc: &mut Poly<T>, p: &Poly<T>, negate: bool) {
    if acc.len() < p.len() {
        acc.resize(p.len(), T::zero());
    }
    for (a, x) in acc.iter_mut().zip(p) {
        *a = if negate {
            a.clone() - x.clone()
        } else {
            a.clone() + x.clone()
        };
    }
}

fn det<T: Field>(m: &[Vec<Poly<T>>]) -> Poly<T> {
    match m.len() {
        0 => vec![T::one()],
        1 => m[0][0].clone(),
        k => {
            let mut acc = vec![T::zero()];
            for col in 0..k {
                if m[0][col].iter().all(|c| c.is_zero()) {
                    continue;
                }
                let minor: Vec<Vec<Poly<T>>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != col)
                            .map(|(_, e)| e.clone())
                            .collect()
                    })
                    .collect();
                let term = poly_mul(&m[0][col], &det(&minor));
                poly_add_assign(&mut acc, &term, col % 2 == 1);
            }
            acc
        }
    }
}

/// `det(xI - B)` by cofactor expansion, highest degree first, so the
/// leading coefficient is 1.
pub fn char_poly<T: Field>(q: &QuotientMatrix<T>) -> Result<Vec<T>> {
    let k = q.order();
    if k > MAX_CHAR_POLY_ORDER {
        return Err(Error::QuotientTooLarge(k));
    }
    let m: Vec<Vec<Poly<T>>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let b = T::zero() - q.entries[i][j].clone();
                    if i == j {
                        vec![b, T::one()]
                    } else {
                        vec![b]
                    }
                })
                .collect()
        })
        .collect();
    let mut p = det(&m);
    p.resize(k + 1, T::zero());
    p.reverse();
    Ok(p)
}

fn horner(coeffs: &[f64], x: f64) -> (f64, f64) {
    let (mut p, mut dp) = (0.0, 0.0);
    for &c in coeffs {
        dp = dp * x + p;
        p = p * x + c;
    }
    (p, dp)
}

/// Largest real root of a real-rooted polynomial given highest degree first,
/// such as the characteristic polynomial of a symmetrisable matrix. Newton's
/// method from the Cauchy bound descends monotonically onto it; a bisection
/// step guards against overshoot from rounding.
pub fn largest_real_root(coeffs: &[f64]) -> Option<f64> {
    let lead = *coeffs.first()?;
    if lead == 0.0 || coeffs.len() < 2 {
        return None;
    }
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    let bound = 1.0 + monic[1..].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let (mut lo, mut hi) = (-bound, bound);
    let mut x = bound;
    for _ in 0..500 {
        let (p, dp) = horner(&monic, x);
        if p == 0.0 {
            return Some(x);
        }
        if p > 0.0 {
            hi = hi.min(x);
        } else {
            lo = lo.max(x);
        }
        let mut next = if dp != 0.0 { x - p / dp } else { f64::NAN };
        if (next - x).abs() <= 4.0 * f64::EPSILON * x.abs().max(1.0) {
            return Some(next);
        }
        if !(next > lo && next < hi) || !next.is_finite() {
            next = if lo > -bound {
                (lo + hi) / 2.0
            } else {
                x - (hi - lo) / 4.0
            };
            if (next - x).abs() <= 4.0 * f64::EPSILON * x.abs().max(1.0) {
                return Some(next);
            }
        }
        x = next;
    }
    Some(x)
}
