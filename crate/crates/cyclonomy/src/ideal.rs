//! Ideals of the ring of integers as full-rank sublattices in Hermite normal
//! form. The HNF basis is a canonical representative, so ideal equality is
//! matrix equality.

use crate::context::Ctx;
use crate::error::{Error, Result};
use crate::hnf;
use crate::CycInt;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Nonzero ideal, stored as its row-HNF lattice basis in the power basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycIdeal {
    ctx: Ctx,
    basis: Vec<Vec<BigInt>>,
}

impl CycIdeal {
    /// HNF of the lattice spanned by g * zeta^i over all generators g.
    ///
    /// Multiplying each generator through by the powers of zeta makes the
    /// lattice an ideal by construction.
    pub fn from_generators(ctx: &Ctx, gens: &[CycInt]) -> Result<CycIdeal> {
        let nonzero: Vec<&CycInt> = gens.iter().filter(|g| !g.is_zero()).collect();
        if nonzero.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        let n = ctx.degree();
        let mut rows = Vec::with_capacity(nonzero.len() * n);
        for g in nonzero {
            for i in 0..n {
                let shifted = g * &CycInt::zeta_pow(ctx, i as i64);
                rows.push(shifted.coeffs().to_vec());
            }
        }
        Self::from_rows(ctx, rows)
    }

    /// The unit ideal (the whole ring).
    pub fn whole_ring(ctx: &Ctx) -> CycIdeal {
        CycIdeal::from_generators(ctx, &[CycInt::one(ctx)]).expect("one is nonzero")
    }

    fn from_rows(ctx: &Ctx, rows: Vec<Vec<BigInt>>) -> Result<CycIdeal> {
        let basis = hnf::hnf(rows, ctx.degree())
            .ok_or_else(|| Error::InternalInconsistency("ideal lattice is not full rank".into()))?;
        let ideal = CycIdeal {
            ctx: ctx.clone(),
            basis,
        };
        debug_assert!(ideal.is_zeta_stable());
        Ok(ideal)
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    /// Basis rows as ring elements.
    pub fn basis_elements(&self) -> Vec<CycInt> {
        self.basis
            .iter()
            .map(|row| CycInt::reduce(&self.ctx, row.clone()))
            .collect()
    }

    /// Lattice index in the ring of integers: the product of the HNF diagonal.
    pub fn norm(&self) -> BigInt {
        self.basis
            .iter()
            .enumerate()
            .fold(BigInt::one(), |acc, (i, row)| acc * &row[i])
    }

    pub fn contains(&self, a: &CycInt) -> bool {
        hnf::solve_membership(&self.basis, a.coeffs()).is_some()
    }

    /// Ideal closure check: zeta times every basis row stays in the lattice.
    pub fn is_zeta_stable(&self) -> bool {
        let zeta = CycInt::zeta(&self.ctx);
        self.basis_elements()
            .iter()
            .all(|row| self.contains(&(row * &zeta)))
    }

    fn same_ctx(&self, other: &CycIdeal) -> Result<()> {
        if self.ctx.p() == other.ctx.p() {
            Ok(())
        } else {
            Err(Error::ContextMismatch {
                left: self.ctx.p(),
                right: other.ctx.p(),
            })
        }
    }

    /// Ideal product: HNF of the pairwise products of basis rows.
    pub fn mul(&self, other: &CycIdeal) -> Result<CycIdeal> {
        self.same_ctx(other)?;
        let left = self.basis_elements();
        let right = other.basis_elements();
        let mut rows = Vec::with_capacity(left.len() * right.len());
        for a in &left {
            for b in &right {
                rows.push((a * b).coeffs().to_vec());
            }
        }
        Self::from_rows(&self.ctx, rows)
    }

    /// Ideal sum, the gcd of ideals: HNF of the stacked bases.
    pub fn sum(&self, other: &CycIdeal) -> Result<CycIdeal> {
        self.same_ctx(other)?;
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Self::from_rows(&self.ctx, rows)
    }

    /// Searches the coefficient box |c_i| <= height for a generator:
    /// an element of the ideal whose norm matches the ideal norm.
    ///
    /// `None` is inconclusive; a found generator is exact.
    pub fn principal_generator_bounded(&self, height: u64) -> Option<CycInt> {
        let n = self.ctx.degree();
        let target = self.norm();
        let h = height as i64;
        let width = (2 * height + 1) as usize;
        let mut odo = vec![0usize; n];
        loop {
            let coeffs: Vec<BigInt> = odo.iter().map(|&e| BigInt::from(e as i64 - h)).collect();
            if coeffs.iter().any(|c| !c.is_zero()) {
                let candidate = CycInt::reduce(&self.ctx, coeffs);
                if self.contains(&candidate) && candidate.norm().abs() == target {
                    return Some(candidate);
                }
            }
            let mut i = n;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                odo[i] += 1;
                if odo[i] < width {
                    break;
                }
                odo[i] = 0;
                if i == 0 {
                    return None;
                }
            }
        }
    }
}
