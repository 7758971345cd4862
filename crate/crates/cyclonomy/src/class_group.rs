//! Finite abelian class-group model in invariant-factor form, and the
//! coprime-power principality lemma it supports: when gcd(n, h) = 1, the n-th
//! power map is injective, so x^n trivial forces x trivial.

use crate::error::{Error, Result};
use num_integer::Integer;

/// Abstract finite abelian group d_1 x d_2 x ... with d_i | d_(i+1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassGroupModel {
    invariant_factors: Vec<u64>,
}

impl ClassGroupModel {
    pub fn new(invariant_factors: Vec<u64>) -> Result<ClassGroupModel> {
        for pair in invariant_factors.windows(2) {
            if pair[1] % pair[0] != 0 {
                return Err(Error::InvalidElement(format!(
                    "invariant factors must divide in order: {} does not divide {}",
                    pair[0], pair[1]
                )));
            }
        }
        if invariant_factors.iter().any(|&d| d == 0) {
            return Err(Error::InvalidElement(
                "invariant factors must be >= 1".into(),
            ));
        }
        Ok(ClassGroupModel { invariant_factors })
    }

    pub fn trivial() -> ClassGroupModel {
        ClassGroupModel {
            invariant_factors: Vec::new(),
        }
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    /// Group order h, the product of the invariant factors.
    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    /// Exponent of the group: the largest invariant factor.
    pub fn exponent(&self) -> u64 {
        self.invariant_factors.last().copied().unwrap_or(1)
    }

    /// Canonical residue vector of an exponent-vector element.
    pub fn reduce(&self, x: &[i64]) -> Result<Vec<u64>> {
        if x.len() != self.invariant_factors.len() {
            return Err(Error::InvalidElement(format!(
                "element has {} components, group has {}",
                x.len(),
                self.invariant_factors.len()
            )));
        }
        Ok(x.iter()
            .zip(&self.invariant_factors)
            .map(|(&c, &d)| c.rem_euclid(d as i64) as u64)
            .collect())
    }

    pub fn pow(&self, x: &[u64], k: u64) -> Vec<u64> {
        x.iter()
            .zip(&self.invariant_factors)
            .map(|(&c, &d)| ((c as u128 * k as u128) % d as u128) as u64)
            .collect()
    }

    pub fn is_identity(&self, x: &[u64]) -> bool {
        x.iter().all(|&c| c == 0)
    }
}

fn modular_inverse(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m as i128, (a % m) as i128);
    while new_r != 0 {
        let quot = r / new_r;
        (t, new_t) = (new_t, t - quot * new_t);
        (r, new_r) = (new_r, r - quot * new_r);
    }
    debug_assert_eq!(r, 1, "inverse requires coprime inputs");
    t.rem_euclid(m as i128) as u64
}

/// Verifies an instance of the lemma: with gcd(n, h) = 1, x is recovered from
/// x^n by raising to the inverse of n modulo the exponent, so x^n = identity
/// implies x = identity.
pub fn coprime_power_trivial(group: &ClassGroupModel, x: &[i64], n: u64) -> Result<bool> {
    let h = group.order();
    if n.gcd(&h) != 1 {
        return Err(Error::NotCoprime {
            value: n as i64,
            modulus: h,
        });
    }
    let x = group.reduce(x)?;
    let power = group.pow(&x, n);
    let inv = modular_inverse(n, group.exponent());
    let recovered = group.pow(&power, inv);
    if recovered != x {
        return Err(Error::InternalInconsistency(
            "coprime power map failed to invert".into(),
        ));
    }
    if group.is_identity(&power) && !group.is_identity(&x) {
        return Err(Error::InternalInconsistency(
            "x^n trivial but x nontrivial despite coprimality".into(),
        ));
    }
    Ok(true)
}
