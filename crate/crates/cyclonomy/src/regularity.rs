//! Regularity of odd primes: p is regular exactly when p divides no
//! numerator of B_2, B_4, ..., B_(p-3). The denominator can never carry a
//! factor of p by von Staudt-Clausen, since p-1 does not divide any n < p-1.

use crate::bernoulli::{with_table, BernoulliTable};
use crate::context::is_odd_prime;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// Outcome of the regularity test for one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityReport {
    pub p: u64,
    pub regular: bool,
    /// Pairs (p, n) with p dividing the numerator of B_n, n even in [2, p-3].
    pub irregular_pairs: Vec<(u64, u64)>,
}

/// Regularity test against a caller-owned Bernoulli table.
pub fn is_regular_with(table: &mut BernoulliTable, p: u64) -> Result<RegularityReport> {
    if !is_odd_prime(p) {
        return Err(Error::NotAnOddPrime(p));
    }
    let pb = BigInt::from(p);
    let mut irregular_pairs = Vec::new();
    let mut n = 2;
    while n + 3 <= p {
        if table.get(n).numer().mod_floor(&pb).is_zero() {
            irregular_pairs.push((p, n));
        }
        n += 2;
    }
    Ok(RegularityReport {
        p,
        regular: irregular_pairs.is_empty(),
        irregular_pairs,
    })
}

/// Regularity test for an odd prime, using the shared memo table.
///
/// p = 3 has an empty index range and is regular vacuously.
pub fn is_regular(p: u64) -> Result<RegularityReport> {
    with_table(|table| is_regular_with(table, p))
}

/// All irregular primes up to n, ascending. One Bernoulli table serves every
/// prime in the scan.
pub fn irregular_primes_upto_with(table: &mut BernoulliTable, n: u64) -> Vec<u64> {
    (3..=n)
        .filter(|&p| is_odd_prime(p))
        .filter(|&p| {
            !is_regular_with(table, p)
                .expect("odd primes pass the precondition")
                .regular
        })
        .collect()
}

pub fn irregular_primes_upto(n: u64) -> Vec<u64> {
    with_table(|table| irregular_primes_upto_with(table, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_regular_primes() {
        let mut t = BernoulliTable::new();
        let five = is_regular_with(&mut t, 5).unwrap();
        assert!(five.regular);
        assert!(five.irregular_pairs.is_empty());

        let three = is_regular_with(&mut t, 3).unwrap();
        assert!(three.regular, "p=3 is regular by the empty range");
    }

    #[test]
    fn thirty_seven_is_irregular_at_index_32() {
        let mut t = BernoulliTable::new();
        let report = is_regular_with(&mut t, 37).unwrap();
        assert!(!report.regular);
        assert_eq!(report.irregular_pairs, vec![(37, 32)]);
    }

    #[test]
    fn rejects_non_primes() {
        let mut t = BernoulliTable::new();
        assert_eq!(is_regular_with(&mut t, 4), Err(Error::NotAnOddPrime(4)));
        assert_eq!(is_regular_with(&mut t, 2), Err(Error::NotAnOddPrime(2)));
    }

    #[test]
    fn irregular_primes_below_one_hundred() {
        let mut t = BernoulliTable::new();
        assert_eq!(irregular_primes_upto_with(&mut t, 100), vec![37, 59, 67]);
        assert_eq!(irregular_primes_upto_with(&mut t, 30), Vec::<u64>::new());
        assert_eq!(irregular_primes_upto_with(&mut t, 3), Vec::<u64>::new());
    }

    #[test]
    fn denominator_reading_is_vacuous() {
        // von Staudt-Clausen keeps p out of every denominator for n <= p-3
        let mut t = BernoulliTable::new();
        for p in [5u64, 7, 11, 13, 37] {
            let pb = BigInt::from(p);
            let mut n = 2;
            while n + 3 <= p {
                assert!(
                    !t.get(n).denom().mod_floor(&pb).is_zero(),
                    "p={p} divides denominator of B_{n}"
                );
                n += 2;
            }
        }
    }
}
