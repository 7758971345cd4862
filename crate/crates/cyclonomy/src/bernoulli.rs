//! Exact Bernoulli numbers under the convention B_1 = -1/2, from the
//! recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0, with the von Staudt-Clausen
//! denominator product as an independent oracle.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::sync::{Mutex, OnceLock};

/// Exact Bernoulli number with numerator and denominator in lowest terms,
/// denominator positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernoulliValue {
    pub n: u64,
    pub numerator: BigInt,
    pub denominator: BigInt,
}

/// Memoized table of B_0, B_1, ... extended on demand.
#[derive(Debug, Default)]
pub struct BernoulliTable {
    values: Vec<BigRational>,
}

impl BernoulliTable {
    pub fn new() -> BernoulliTable {
        BernoulliTable { values: Vec::new() }
    }

    pub fn computed_len(&self) -> usize {
        self.values.len()
    }

    fn ensure(&mut self, n: usize) {
        if self.values.is_empty() {
            self.values.push(BigRational::one());
        }
        while self.values.len() <= n {
            let m = self.values.len();
            // B_m = -(sum_{k<m} C(m+1,k) B_k) / (m+1)
            let mut sum = BigRational::zero();
            let mut binom = BigInt::one();
            for (k, b) in self.values.iter().enumerate() {
                sum += b * BigRational::from_integer(binom.clone());
                binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
            }
            let value = -sum / BigRational::from_integer(BigInt::from(m + 1));
            self.values.push(value);
        }
    }

    pub fn get(&mut self, n: u64) -> BigRational {
        self.ensure(n as usize);
        self.values[n as usize].clone()
    }

    /// Exports the computed prefix as (index, numerator, denominator) rows.
    pub fn snapshot(&self) -> Vec<(u64, BigInt, BigInt)> {
        self.values
            .iter()
            .enumerate()
            .map(|(n, b)| (n as u64, b.numer().clone(), b.denom().clone()))
            .collect()
    }

    /// Checks cached rows against freshly recomputed values. The cache is
    /// advisory: a false return means the rows are wrong and were ignored.
    pub fn verify_entries(&mut self, entries: &[(u64, BigInt, BigInt)]) -> bool {
        entries.iter().all(|(n, numer, denom)| {
            let b = self.get(*n);
            b.numer() == numer && b.denom() == denom
        })
    }
}

fn global_table() -> &'static Mutex<BernoulliTable> {
    static TABLE: OnceLock<Mutex<BernoulliTable>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(BernoulliTable::new()))
}

/// Runs f against the process-wide memo table; growth is serialized by the
/// lock, so concurrent callers always observe a consistent prefix.
pub fn with_table<R>(f: impl FnOnce(&mut BernoulliTable) -> R) -> R {
    let mut table = global_table().lock().expect("bernoulli table lock");
    f(&mut table)
}

/// The exact Bernoulli number B_n.
pub fn bernoulli(n: u64) -> BernoulliValue {
    let b = with_table(|t| t.get(n));
    BernoulliValue {
        n,
        numerator: b.numer().clone(),
        denominator: b.denom().clone(),
    }
}

/// Von Staudt-Clausen denominator: the product of the primes q with
/// (q-1) | n, for even n >= 2. An oracle independent of the recurrence.
pub fn vsc_denominator(n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::OutOfRange {
            index: 0,
            min: 2,
            max: u64::MAX,
        });
    }
    if n % 2 != 0 {
        return Err(Error::OddIndex(n));
    }
    let mut product = BigInt::one();
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let q = d + 1;
        if q == 2 || crate::context::is_odd_prime(q) {
            product *= BigInt::from(q);
        }
    }
    Ok(product)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn first_values() {
        let mut t = BernoulliTable::new();
        assert_eq!(t.get(0), rat(1, 1));
        assert_eq!(t.get(1), rat(-1, 2));
        assert_eq!(t.get(2), rat(1, 6));
        assert_eq!(t.get(3), rat(0, 1));
        assert_eq!(t.get(4), rat(-1, 30));
        assert_eq!(t.get(12), rat(-691, 2730));
    }

    #[test]
    fn odd_indices_vanish() {
        let mut t = BernoulliTable::new();
        for n in (3..=61).step_by(2) {
            assert!(t.get(n).is_zero(), "B_{n} should vanish");
        }
    }

    #[test]
    fn recurrence_residual_is_zero() {
        // re-verify sum_{k=0}^{n} C(n+1,k) B_k = 0 directly on the table
        let mut t = BernoulliTable::new();
        t.get(60);
        for n in 1..=60usize {
            let mut residual = BigRational::zero();
            let mut binom = BigInt::one();
            for k in 0..=n {
                residual += t.get(k as u64) * BigRational::from_integer(binom.clone());
                binom = binom * BigInt::from(n + 1 - k) / BigInt::from(k + 1);
            }
            assert!(residual.is_zero(), "residual nonzero at n={n}");
        }
    }

    #[test]
    fn vsc_examples() {
        assert_eq!(vsc_denominator(2).unwrap(), BigInt::from(6));
        assert_eq!(vsc_denominator(4).unwrap(), BigInt::from(30));
        assert_eq!(vsc_denominator(12).unwrap(), BigInt::from(2730));
        assert!(matches!(vsc_denominator(3), Err(Error::OddIndex(3))));
        assert!(matches!(vsc_denominator(0), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn denominators_match_vsc_oracle() {
        let mut t = BernoulliTable::new();
        for n in (2..=120u64).step_by(2) {
            assert_eq!(
                t.get(n).denom().clone(),
                vsc_denominator(n).unwrap(),
                "denominator mismatch at n={n}"
            );
        }
    }

    #[test]
    fn snapshot_round_trip() {
        let mut t = BernoulliTable::new();
        t.get(20);
        let rows = t.snapshot();
        assert_eq!(rows.len(), 21);
        let mut fresh = BernoulliTable::new();
        assert!(fresh.verify_entries(&rows));

        let mut corrupted = rows.clone();
        corrupted[12].1 += 1;
        let mut fresh2 = BernoulliTable::new();
        assert!(!fresh2.verify_entries(&corrupted));
    }

    #[test]
    fn global_table_is_shared() {
        let b = bernoulli(12);
        assert_eq!(b.numerator, BigInt::from(-691));
        assert_eq!(b.denominator, BigInt::from(2730));
        let len = with_table(|t| t.computed_len());
        assert!(len >= 13);
    }

    #[test]
    fn concurrent_growth_stays_consistent() {
        let handles: Vec<_> = (0..8u64)
            .map(|i| std::thread::spawn(move || bernoulli(40 + 2 * i)))
            .collect();
        for handle in handles {
            let b = handle.join().unwrap();
            assert_eq!(b.denominator, vsc_denominator(b.n).unwrap());
        }
    }
}
