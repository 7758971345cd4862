//! Constructive Hilbert 90 for the cyclotomic extension of the rationals:
//! a norm-one element eta yields a cocycle on the cyclic Galois group, and a
//! nonzero resolvent b(theta) = sum c(sigma^i) sigma^i(theta) satisfies
//! eta sigma(b) = b, producing the witness directly.

use crate::context::Ctx;
use crate::element::{Coeff, CycElem};
use crate::error::{Error, Result};
use crate::{CycInt, CycRat};
use num_rational::BigRational;
use num_traits::One;

/// The cyclic Galois group, presented by powers of a fixed generator
/// sigma : zeta -> zeta^g, with g the least primitive root modulo p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisGroup {
    ctx: Ctx,
    generator: u64,
    order: usize,
}

impl GaloisGroup {
    /// Finds the least primitive root by exhaustive order check.
    pub fn new(ctx: &Ctx) -> GaloisGroup {
        let p = ctx.p();
        let generator = (2..p)
            .find(|&g| {
                let mut acc = g % p;
                for _ in 1..p - 2 {
                    if acc == 1 {
                        return false;
                    }
                    acc = ((acc as u128 * g as u128) % p as u128) as u64;
                }
                acc != 1
            })
            .expect("every prime has a primitive root");
        GaloisGroup {
            ctx: ctx.clone(),
            generator,
            order: ctx.degree(),
        }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The exponent k with sigma^i : zeta -> zeta^k.
    pub fn exponent_of(&self, i: usize) -> u64 {
        let p = self.ctx.p();
        let mut acc = 1u64;
        for _ in 0..(i % self.order) {
            acc = ((acc as u128 * self.generator as u128) % p as u128) as u64;
        }
        acc
    }

    /// Applies sigma^i.
    pub fn apply<T: Coeff>(&self, i: usize, a: &CycElem<T>) -> CycElem<T> {
        a.galois_apply(self.exponent_of(i) as i64)
            .expect("powers of a primitive root are coprime to p")
    }
}

/// Map from the Galois group to nonzero field elements, index i holding the
/// value at sigma^i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    group: GaloisGroup,
    values: Vec<CycRat>,
}

impl Cocycle {
    /// Wraps raw values without checking the cocycle identity; pair with
    /// [`verify_cocycle`].
    pub fn from_values(group: GaloisGroup, values: Vec<CycRat>) -> Cocycle {
        Cocycle { group, values }
    }

    pub fn group(&self) -> &GaloisGroup {
        &self.group
    }

    pub fn values(&self) -> &[CycRat] {
        &self.values
    }

    pub fn value(&self, i: usize) -> &CycRat {
        &self.values[i % self.values.len()]
    }
}

/// Builds the cocycle c(sigma^n) = prod_{i=0}^{n-1} sigma^i(eta) from a
/// norm-one eta; the empty product makes c(identity) = 1.
pub fn cocycle_from_eta(eta: &CycRat) -> Result<Cocycle> {
    let norm = eta.norm();
    if norm != BigRational::one() {
        return Err(Error::NormNotOne(norm));
    }
    let group = GaloisGroup::new(eta.ctx());
    let mut values = Vec::with_capacity(group.order());
    let mut acc = CycRat::one(eta.ctx());
    for i in 0..group.order() {
        values.push(acc.clone());
        acc = &acc * &group.apply(i, eta);
    }
    let cocycle = Cocycle { group, values };
    debug_assert!(verify_cocycle(&cocycle));
    Ok(cocycle)
}

/// Checks every instance of c(sigma^(i+j)) = sigma^i(c(sigma^j)) c(sigma^i).
///
/// Wrap-around indices reduce modulo the group order, which is where the
/// norm-one hypothesis enters.
pub fn verify_cocycle(c: &Cocycle) -> bool {
    let d = c.group.order();
    if c.values.len() != d || c.values.iter().any(CycElem::is_zero) {
        return false;
    }
    for i in 0..d {
        for j in 0..d {
            let lhs = c.value(i + j);
            let rhs = &c.group.apply(i, c.value(j)) * c.value(i);
            if *lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// The resolvent b(theta) = sum_i c(sigma^i) sigma^i(theta).
///
/// Zero is a legal output; nonzero outputs satisfy eta sigma(b) = b for the
/// eta generating the cocycle.
pub fn resolvent(c: &Cocycle, theta: &CycRat) -> CycRat {
    let mut acc = CycRat::zero(theta.ctx());
    for (i, value) in c.values.iter().enumerate() {
        acc = &acc + &(value * &c.group.apply(i, theta));
    }
    acc
}

/// Produces a nonzero epsilon with eta sigma(epsilon) = epsilon, given
/// norm(eta) = 1.
///
/// Tries theta = zeta^j in order; linear independence of characters
/// guarantees some basis vector gives a nonzero resolvent, so exhausting the
/// basis is impossible and reported as a hard error.
pub fn hilbert90_witness(eta: &CycRat) -> Result<CycRat> {
    let cocycle = cocycle_from_eta(eta)?;
    let ctx = eta.ctx();
    for j in 0..cocycle.group().order() {
        let theta = CycRat::zeta_pow(ctx, j as i64);
        let b = resolvent(&cocycle, &theta);
        if b.is_zero() {
            continue;
        }
        let check = eta * &cocycle.group().apply(1, &b);
        if check != b {
            return Err(Error::InternalInconsistency(
                "resolvent fails the defining identity".into(),
            ));
        }
        return Ok(b);
    }
    Err(Error::ExhaustedBasis)
}

/// Integral variant: for integral eta, scales the witness by the least
/// common multiple of its coefficient denominators, an integer and hence
/// fixed by sigma.
pub fn hilbert90_integral(eta: &CycRat) -> Result<CycInt> {
    if !eta.is_integral() {
        return Err(Error::NotIntegralEta);
    }
    let witness = hilbert90_witness(eta)?;
    let lcm = witness.denominator_lcm();
    let scaled = witness.scale(&BigRational::from_integer(lcm));
    Ok(scaled.to_int().expect("denominators cleared by their lcm"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::FieldContext;
    use num_bigint::BigInt;

    fn ratelem(ctx: &Ctx, coeffs: &[i64]) -> CycRat {
        CycRat::reduce(
            ctx,
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    #[test]
    fn least_primitive_roots() {
        for (p, g) in [(3u64, 2u64), (5, 2), (7, 3), (11, 2), (13, 2)] {
            let ctx = FieldContext::new(p).unwrap();
            assert_eq!(GaloisGroup::new(&ctx).generator(), g, "p={p}");
        }
    }

    #[test]
    fn generator_exponent_table() {
        let ctx = FieldContext::new(5).unwrap();
        let group = GaloisGroup::new(&ctx);
        let exps: Vec<u64> = (0..4).map(|i| group.exponent_of(i)).collect();
        assert_eq!(exps, vec![1, 2, 4, 3]);
    }

    #[test]
    fn cocycle_from_zeta_frozen_values() {
        let ctx = FieldContext::new(5).unwrap();
        let eta = CycRat::zeta(&ctx);
        let c = cocycle_from_eta(&eta).unwrap();
        assert_eq!(c.value(0), &CycRat::one(&ctx));
        assert_eq!(c.value(1), &CycRat::zeta(&ctx));
        assert_eq!(c.value(2), &CycRat::zeta_pow(&ctx, 3));
        assert_eq!(c.value(3), &CycRat::zeta_pow(&ctx, 2));
    }

    #[test]
    fn norm_one_is_required() {
        let ctx = FieldContext::new(5).unwrap();
        let two = CycRat::from_int(&ctx, 2);
        match cocycle_from_eta(&two) {
            Err(Error::NormNotOne(n)) => {
                assert_eq!(n, BigRational::from_integer(BigInt::from(16)))
            }
            other => panic!("expected NormNotOne, got {other:?}"),
        }
    }

    #[test]
    fn constant_cocycle_verifies() {
        let ctx = FieldContext::new(5).unwrap();
        let c = cocycle_from_eta(&CycRat::one(&ctx)).unwrap();
        assert!(verify_cocycle(&c));
        assert!(c.values().iter().all(|v| *v == CycRat::one(&ctx)));
    }

    #[test]
    fn corrupted_cocycle_fails() {
        let ctx = FieldContext::new(5).unwrap();
        let c = cocycle_from_eta(&CycRat::zeta(&ctx)).unwrap();
        assert!(verify_cocycle(&c));
        let mut values = c.values().to_vec();
        values[2] = &values[2] * &CycRat::zeta(&ctx);
        let corrupted = Cocycle::from_values(c.group().clone(), values);
        assert!(!verify_cocycle(&corrupted));
    }

    #[test]
    fn resolvent_of_constant_cocycle_is_trace() {
        let ctx = FieldContext::new(5).unwrap();
        let c = cocycle_from_eta(&CycRat::one(&ctx)).unwrap();
        assert_eq!(resolvent(&c, &CycRat::one(&ctx)), CycRat::from_int(&ctx, 4));
        assert_eq!(
            resolvent(&c, &CycRat::zeta(&ctx)),
            CycRat::from_int(&ctx, -1)
        );
    }

    #[test]
    fn resolvent_is_linear_in_theta() {
        let ctx = FieldContext::new(7).unwrap();
        let w = ratelem(&ctx, &[1, 2, 0, 0, -1, 3]);
        let eta = w.divide(&w.galois_apply(3).unwrap()).unwrap();
        let c = cocycle_from_eta(&eta).unwrap();
        let t1 = ratelem(&ctx, &[2, 0, 1, 0, 0, -4]);
        let t2 = ratelem(&ctx, &[0, 5, -1, 2, 1, 0]);
        let lhs = resolvent(&c, &(&t1 + &t2));
        let rhs = &resolvent(&c, &t1) + &resolvent(&c, &t2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn witness_for_zeta() {
        let ctx = FieldContext::new(5).unwrap();
        let eta = CycRat::zeta(&ctx);
        let group = GaloisGroup::new(&ctx);
        let eps = hilbert90_witness(&eta).unwrap();
        assert!(!eps.is_zero());
        assert_eq!(&eta * &group.apply(1, &eps), eps);
    }

    #[test]
    fn witness_for_one_is_sigma_fixed() {
        let ctx = FieldContext::new(5).unwrap();
        let group = GaloisGroup::new(&ctx);
        let eps = hilbert90_witness(&CycRat::one(&ctx)).unwrap();
        assert_eq!(group.apply(1, &eps), eps);
    }

    #[test]
    fn witness_round_trip_from_quotients() {
        let ctx = FieldContext::new(5).unwrap();
        let group = GaloisGroup::new(&ctx);
        let w = ratelem(&ctx, &[1, 1, 0, 0]);
        let eta = w.divide(&group.apply(1, &w)).unwrap();
        assert_eq!(eta.norm(), BigRational::one());
        let eps = hilbert90_witness(&eta).unwrap();
        assert_eq!(&eta * &group.apply(1, &eps), eps);
    }

    #[test]
    fn integral_witness() {
        let ctx = FieldContext::new(5).unwrap();
        let group = GaloisGroup::new(&ctx);
        let eta = CycRat::zeta(&ctx);
        let eps = hilbert90_integral(&eta).unwrap();
        assert!(!eps.is_zero());
        let eps_rat = eps.to_rat();
        assert_eq!(&eta * &group.apply(1, &eps_rat), eps_rat);

        assert!(!hilbert90_integral(&CycRat::one(&ctx)).unwrap().is_zero());

        // rational eta is rejected by the integral variant
        let w = ratelem(&ctx, &[1, 2, 0, 0]);
        let eta_rat = w.divide(&group.apply(1, &w)).unwrap();
        if !eta_rat.is_integral() {
            assert!(matches!(
                hilbert90_integral(&eta_rat),
                Err(Error::NotIntegralEta)
            ));
        }
        // but the plain witness still exists and may carry denominators
        let eps2 = hilbert90_witness(&eta_rat).unwrap();
        assert_eq!(&eta_rat * &group.apply(1, &eps2), eps2);
    }

    #[test]
    fn wraparound_product_is_the_norm() {
        let ctx = FieldContext::new(7).unwrap();
        let group = GaloisGroup::new(&ctx);
        let w = ratelem(&ctx, &[2, -1, 0, 1, 0, 0]);
        let eta = w.divide(&group.apply(1, &w)).unwrap();
        let c = cocycle_from_eta(&eta).unwrap();
        // extending the defining product one more step gives norm(eta) = 1
        let full = c.value(group.order() - 1) * &group.apply(group.order() - 1, &eta);
        assert_eq!(full, CycRat::one(&ctx));
    }
}
