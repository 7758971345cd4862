//! Verifiable pieces of the Case 2 descent: the case split, desk-scale
//! exhaustive search for Fermat counterexamples, the quotient map
//! q(eta) = (x + eta y)/(zeta - 1) with its residue bijection, the product
//! factorization of x^p + y^p, and the checker for descent-equation instances.

use crate::error::{Error, Result};
use crate::units::UnitElem;
use crate::CycInt;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

/// Candidate triple for the Fermat equation; validity is what operations
/// test, not a construction invariant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FermatTriple {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub exponent: u32,
}

/// The classical case split for a candidate solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseClass {
    /// p does not divide abc.
    CaseI,
    /// p divides abc.
    CaseII,
    /// abc = 0 or the triple is not coprime.
    Degenerate,
}

pub fn classify_case(t: &FermatTriple, p: u64) -> CaseClass {
    if t.a == 0 || t.b == 0 || t.c == 0 {
        return CaseClass::Degenerate;
    }
    let gcd =
        t.a.unsigned_abs()
            .gcd(&t.b.unsigned_abs())
            .gcd(&t.c.unsigned_abs());
    if gcd != 1 {
        return CaseClass::Degenerate;
    }
    let p = p as i64;
    if t.a % p == 0 || t.b % p == 0 || t.c % p == 0 {
        CaseClass::CaseII
    } else {
        CaseClass::CaseI
    }
}

/// All triples 1 <= a <= b < c <= bound with a^p + b^p = c^p, by exact
/// integer root extraction. Exponent 2 is permitted as a positive control:
/// a search that finds the Pythagorean triples demonstrably works.
pub fn flt_search(p: u32, bound: u64) -> Vec<FermatTriple> {
    let mut solutions = Vec::new();
    for a in 1..=bound {
        let ap = BigInt::from(a).pow(p);
        for b in a..=bound {
            let sum = &ap + BigInt::from(b).pow(p);
            let root = sum.nth_root(p);
            if root.pow(p) != sum {
                continue;
            }
            match root.to_u64() {
                Some(c) if c <= bound => solutions.push(FermatTriple {
                    a: a as i64,
                    b: b as i64,
                    c: c as i64,
                    exponent: p,
                }),
                _ => {}
            }
        }
    }
    solutions
}

/// Row of the quotient table: (x + zeta^m y)/(zeta - 1) and its residue
/// modulo the prime above p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QTableEntry {
    pub m: u64,
    pub quotient: CycInt,
    pub residue: u64,
}

/// Computes q(zeta^m) = (x + zeta^m y)/(zeta - 1) for every m.
///
/// Requires lambda | x + y; then lambda divides x + zeta^m y for every m
/// since lambda divides zeta^m - 1, and all p divisions are exact. Composed
/// with reduction modulo the prime above p the map is a bijection onto Z/p.
pub fn q_table(x: &CycInt, y: &CycInt) -> Result<Vec<QTableEntry>> {
    let sum = x.checked_add(y)?;
    if sum.reduce_mod_lambda() != 0 {
        return Err(Error::HypothesisFailed(
            "lambda does not divide x + y".into(),
        ));
    }
    let ctx = x.ctx();
    let p = ctx.p();
    let lam = CycInt::lambda(ctx);
    let mut entries = Vec::with_capacity(p as usize);
    for m in 0..p {
        let numerator = x + &(&CycInt::zeta_pow(ctx, m as i64) * y);
        let quotient = numerator.divide_exact(&lam).map_err(|e| match e {
            Error::NotDivisible => Error::InternalInconsistency(format!(
                "x + zeta^{m} y must be divisible by lambda under the hypothesis"
            )),
            other => other,
        })?;
        let residue = quotient.reduce_mod_lambda();
        entries.push(QTableEntry {
            m,
            quotient,
            residue,
        });
    }
    Ok(entries)
}

/// The unique m with q(zeta^m) congruent to 0 modulo the prime above p.
///
/// Bijectivity of the residue map makes the zero unique; any other count is
/// a bug surfaced as [`Error::NonUniqueZero`].
pub fn eta_zero(x: &CycInt, y: &CycInt) -> Result<u64> {
    let table = q_table(x, y)?;
    let zeros: Vec<u64> = table
        .iter()
        .filter(|e| e.residue == 0)
        .map(|e| e.m)
        .collect();
    match zeros.as_slice() {
        [m] => Ok(*m),
        other => Err(Error::NonUniqueZero(other.len())),
    }
}

/// Verifies the exact factorization prod_{m} (x + zeta^m y) = x^p + y^p,
/// an identity for odd p. A mismatch indicates broken arithmetic.
pub fn product_identity_check(x: &CycInt, y: &CycInt) -> Result<bool> {
    let ctx = x.ctx();
    x.same_ctx(y)?;
    let p = ctx.p();
    let mut product = CycInt::one(ctx);
    for m in 0..p {
        product = &product * &(x + &(&CycInt::zeta_pow(ctx, m as i64) * y));
    }
    let direct = &x.pow(p as u32) + &y.pow(p as u32);
    if product == direct {
        Ok(true)
    } else {
        Err(Error::InternalInconsistency(format!(
            "product factorization mismatch: {product} vs {direct}"
        )))
    }
}

/// Claimed instance of the descent equation
/// x^p + y^p = eps (1 - zeta)^(p(m+1)) z^p.
#[derive(Clone, Debug)]
pub struct DescentInstance {
    pub x: CycInt,
    pub y: CycInt,
    pub z: CycInt,
    pub epsilon: UnitElem,
    pub m: u32,
}

/// Which side condition or equation a candidate instance violated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Eq1Violation {
    YDivisibleByLambda,
    ZDivisibleByLambda,
    EquationMismatch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Eq1Verdict {
    Valid,
    Invalid(Eq1Violation),
}

/// Checks a descent-equation instance exactly: lambda must divide neither y
/// nor z, and the equation must hold on the nose.
///
/// The theory predicts no valid instances exist; this is a certificate
/// checker and a target for negative regression tests.
pub fn verify_eq1(instance: &DescentInstance) -> Eq1Verdict {
    if instance.y.reduce_mod_lambda() == 0 {
        return Eq1Verdict::Invalid(Eq1Violation::YDivisibleByLambda);
    }
    if instance.z.reduce_mod_lambda() == 0 {
        return Eq1Verdict::Invalid(Eq1Violation::ZDivisibleByLambda);
    }
    let ctx = instance.x.ctx();
    let p = ctx.p() as u32;
    let lhs = &instance.x.pow(p) + &instance.y.pow(p);
    let one_minus_zeta = -&CycInt::lambda(ctx);
    let exponent = (p as u64 * (instance.m as u64 + 1))
        .try_into()
        .expect("p(m+1) stays within u32 at desk scale");
    let power = one_minus_zeta.pow(exponent);
    let rhs = &(instance.epsilon.value() * &power) * &instance.z.pow(p);
    if lhs == rhs {
        Eq1Verdict::Valid
    } else {
        Eq1Verdict::Invalid(Eq1Violation::EquationMismatch)
    }
}
