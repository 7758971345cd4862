//! Integer polynomial resultants via fraction-free elimination, and the
//! field discriminant computed from them.

use crate::context::Ctx;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Resultant of two integer polynomials (coefficients lowest degree first).
///
/// Computed as the determinant of the Sylvester matrix by Bareiss
/// fraction-free elimination, so every intermediate value stays an integer.
pub fn resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let f = trim(f);
    let g = trim(g);
    if f.is_empty() || g.is_empty() {
        return BigInt::zero();
    }
    let m = f.len() - 1;
    let n = g.len() - 1;
    if m == 0 && n == 0 {
        return BigInt::one();
    }
    let size = m + n;
    let mut matrix = vec![vec![BigInt::zero(); size]; size];
    for row in 0..n {
        for (k, c) in f.iter().rev().enumerate() {
            matrix[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in g.iter().rev().enumerate() {
            matrix[n + row][row + k] = c.clone();
        }
    }
    bareiss_determinant(matrix)
}

fn trim(poly: &[BigInt]) -> Vec<BigInt> {
    let mut v = poly.to_vec();
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

/// Exact determinant of a square integer matrix.
fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev; // exact by the Bareiss identity
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Discriminant of the p-th cyclotomic field.
///
/// Computed as (-1)^(d(d-1)/2) Res(f, f') for the monic minimal polynomial f
/// of degree d = p-1. Equals (-1)^((p-1)/2) p^(p-2).
pub fn discriminant(ctx: &Ctx) -> BigInt {
    let f = ctx.modulus();
    let deriv: Vec<BigInt> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    let d = ctx.degree();
    let res = resultant(f, &deriv);
    if (d * (d - 1) / 2) % 2 == 1 {
        -res
    } else {
        res
    }
}
