//! Row Hermite normal form of integer lattices, the canonical basis used by
//! ideals: upper triangular, positive diagonal, entries above each pivot
//! reduced into [0, pivot).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Reduces the generator rows to HNF; `None` when the rank is below n.
pub(crate) fn hnf(mut rows: Vec<Vec<BigInt>>, n: usize) -> Option<Vec<Vec<BigInt>>> {
    rows.retain(|r| r.iter().any(|c| !c.is_zero()));
    let mut rank = 0usize;
    for col in 0..n {
        // gcd-reduce the column below the current rank
        loop {
            let mut pivot: Option<usize> = None;
            for r in rank..rows.len() {
                if rows[r][col].is_zero() {
                    continue;
                }
                match pivot {
                    None => pivot = Some(r),
                    Some(p) if rows[r][col].abs() < rows[p][col].abs() => pivot = Some(r),
                    _ => {}
                }
            }
            let Some(p) = pivot else { break };
            rows.swap(rank, p);
            if rows[rank][col].is_negative() {
                for c in rows[rank].iter_mut() {
                    *c = -std::mem::take(c);
                }
            }
            let mut finished = true;
            for r in rank + 1..rows.len() {
                if rows[r][col].is_zero() {
                    continue;
                }
                let q = rows[r][col].div_floor(&rows[rank][col]);
                if !q.is_zero() {
                    let pivot_row = rows[rank].clone();
                    for (c, pc) in rows[r].iter_mut().zip(&pivot_row) {
                        *c = &*c - &q * pc;
                    }
                }
                if !rows[r][col].is_zero() {
                    finished = false;
                }
            }
            if finished {
                break;
            }
        }
        if rank >= rows.len() || rows[rank][col].is_zero() {
            return None; // rank deficient
        }
        // reduce the entries above the pivot into [0, pivot)
        for r in 0..rank {
            let q = rows[r][col].div_floor(&rows[rank][col]);
            if !q.is_zero() {
                let pivot_row = rows[rank].clone();
                for (c, pc) in rows[r].iter_mut().zip(&pivot_row) {
                    *c = &*c - &q * pc;
                }
            }
        }
        rank += 1;
    }
    rows.truncate(n);
    Some(rows)
}

/// Solves x * basis = v over the integers for an upper-triangular basis;
/// `None` when v is outside the lattice.
pub(crate) fn solve_membership(basis: &[Vec<BigInt>], v: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = basis.len();
    let mut x = vec![BigInt::zero(); n];
    for j in 0..n {
        let mut rhs = v[j].clone();
        for i in 0..j {
            rhs -= &x[i] * &basis[i][j];
        }
        let (q, r) = rhs.div_rem(&basis[j][j]);
        if !r.is_zero() {
            return None;
        }
        x[j] = q;
    }
    Some(x)
}
