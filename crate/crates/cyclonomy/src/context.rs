use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::One;
use std::sync::Arc;

/// The p-th cyclotomic field, for an odd prime p.
///
/// Holds the level p, the degree p-1 of the field over the rationals, and the
/// coefficients of the minimal polynomial 1 + X + ... + X^(p-1) of a primitive
/// p-th root of unity. Contexts are immutable and shared by reference count;
/// every element and ideal carries one.
#[derive(Debug, PartialEq, Eq)]
pub struct FieldContext {
    p: u64,
    degree: usize,
    modulus: Vec<BigInt>,
}

/// Shared handle to a [`FieldContext`].
pub type Ctx = Arc<FieldContext>;

impl FieldContext {
    /// Builds the context for the p-th cyclotomic field.
    ///
    /// Primality is checked by trial division; even numbers, composites and
    /// anything below 3 are rejected with [`Error::NotAnOddPrime`].
    pub fn new(p: u64) -> Result<Ctx> {
        if !is_odd_prime(p) {
            return Err(Error::NotAnOddPrime(p));
        }
        let degree = (p - 1) as usize;
        let modulus = vec![BigInt::one(); p as usize];
        Ok(Arc::new(FieldContext { p, degree, modulus }))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Degree p-1 of the field extension; also the length of coefficient vectors.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficients of 1 + X + ... + X^(p-1), lowest degree first (all ones).
    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }
}

/// Trial-division primality test, excluding 2. Adequate for desk-scale p.
pub(crate) fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_odd_primes() {
        let ctx = FieldContext::new(5).unwrap();
        assert_eq!(ctx.p(), 5);
        assert_eq!(ctx.degree(), 4);
        assert_eq!(ctx.modulus().len(), 5);
        assert!(ctx.modulus().iter().all(|c| *c == BigInt::one()));
        for p in [3, 7, 11, 13, 97] {
            assert!(FieldContext::new(p).is_ok());
        }
    }

    #[test]
    fn rejects_composites_and_two() {
        for p in [0, 1, 2, 4, 6, 9, 15, 91] {
            assert_eq!(FieldContext::new(p), Err(Error::NotAnOddPrime(p)));
        }
    }
}
