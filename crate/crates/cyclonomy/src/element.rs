//! Elements of the p-th cyclotomic field on the power basis 1, zeta, ...,
//! zeta^(p-2), with exact coefficients.
//!
//! [`CycElem`] is generic over the coefficient scalar: `CycElem<BigInt>` is an
//! algebraic integer, `CycElem<BigRational>` a field element. The
//! representation is canonical (the power basis is a basis), so equality is
//! coefficientwise.

use crate::context::Ctx;
use crate::error::{Error, Result};
use crate::resultant;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact coefficient scalar: implemented by `BigInt` and `BigRational`.
pub trait Coeff: Clone + Eq + fmt::Debug + fmt::Display + Signed + FromPrimitive {}
impl<T> Coeff for T where T: Clone + Eq + fmt::Debug + fmt::Display + Signed + FromPrimitive {}

/// Element of the p-th cyclotomic field, coefficient of zeta^i at index i.
///
/// Coefficient vectors always have length p-1 (zero-padded); all arithmetic
/// reduces modulo 1 + X + ... + X^(p-1). Values are immutable; operations are
/// pure functions.
#[derive(Clone, Debug)]
pub struct CycElem<T> {
    ctx: Ctx,
    coeffs: Vec<T>,
}

impl<T: Coeff> PartialEq for CycElem<T> {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.p() == other.ctx.p() && self.coeffs == other.coeffs
    }
}

impl<T: Coeff> Eq for CycElem<T> {}

impl<T: Coeff> fmt::Display for CycElem<T> {
    /// Formats as the element text format: comma-separated coefficients,
    /// little-endian in powers of zeta.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl<T: Coeff> CycElem<T> {
    /// Reduces an arbitrary-degree coefficient vector to the canonical
    /// representative, using zeta^p = 1 and zeta^(p-1) = -(1 + ... + zeta^(p-2)).
    pub fn reduce(ctx: &Ctx, raw: Vec<T>) -> Self {
        let p = ctx.p() as usize;
        let mut acc = vec![T::zero(); p];
        for (i, c) in raw.into_iter().enumerate() {
            let idx = i % p;
            acc[idx] = acc[idx].clone() + c;
        }
        let last = acc[p - 1].clone();
        let coeffs = acc[..p - 1]
            .iter()
            .map(|c| c.clone() - last.clone())
            .collect();
        CycElem {
            ctx: ctx.clone(),
            coeffs,
        }
    }

    pub fn zero(ctx: &Ctx) -> Self {
        CycElem {
            ctx: ctx.clone(),
            coeffs: vec![T::zero(); ctx.degree()],
        }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Self::from_scalar(ctx, T::one())
    }

    pub fn from_scalar(ctx: &Ctx, value: T) -> Self {
        let mut coeffs = vec![T::zero(); ctx.degree()];
        coeffs[0] = value;
        CycElem {
            ctx: ctx.clone(),
            coeffs,
        }
    }

    pub fn from_int(ctx: &Ctx, n: i64) -> Self {
        Self::from_scalar(ctx, T::from_i64(n).expect("i64 fits in coefficient type"))
    }

    /// zeta^k for any integer k (negative exponents wrap modulo p).
    pub fn zeta_pow(ctx: &Ctx, k: i64) -> Self {
        let p = ctx.p() as i64;
        let e = k.rem_euclid(p) as usize;
        let mut raw = vec![T::zero(); e + 1];
        raw[e] = T::one();
        Self::reduce(ctx, raw)
    }

    pub fn zeta(ctx: &Ctx) -> Self {
        Self::zeta_pow(ctx, 1)
    }

    /// lambda = zeta - 1, the generator of the prime above p.
    pub fn lambda(ctx: &Ctx) -> Self {
        &Self::zeta(ctx) - &Self::one(ctx)
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn coeff_sum(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |acc, c| acc + c.clone())
    }

    pub(crate) fn same_ctx(&self, other: &Self) -> Result<()> {
        if self.ctx.p() == other.ctx.p() {
            Ok(())
        } else {
            Err(Error::ContextMismatch {
                left: self.ctx.p(),
                right: other.ctx.p(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        Ok(self * other)
    }

    /// Multiplies every coefficient by the scalar s.
    pub fn scale(&self, s: &T) -> Self {
        CycElem {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(&self.ctx);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Applies the Galois automorphism sigma_k : zeta -> zeta^k.
    ///
    /// k may be any integer coprime to p; sigma_1 is the identity and
    /// sigma_{-1} is complex conjugation.
    pub fn galois_apply(&self, k: i64) -> Result<Self> {
        let p = self.ctx.p();
        let e = k.rem_euclid(p as i64) as u64;
        if e == 0 {
            return Err(Error::NotCoprime {
                value: k,
                modulus: p,
            });
        }
        Ok(self.galois_unchecked(e))
    }

    pub(crate) fn galois_unchecked(&self, k: u64) -> Self {
        let p = self.ctx.p();
        let mut raw = vec![T::zero(); p as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let idx = ((i as u128 * k as u128) % p as u128) as usize;
            raw[idx] = raw[idx].clone() + c.clone();
        }
        Self::reduce(&self.ctx, raw)
    }

    /// Complex conjugation sigma_{-1}.
    pub fn conjugate(&self) -> Self {
        self.galois_unchecked(self.ctx.p() - 1)
    }

    /// Product of the non-identity conjugates, prod_{k=2}^{p-1} sigma_k(a).
    ///
    /// For a unit this is the inverse; in general a times this product equals
    /// the norm as a constant element.
    pub fn conjugate_complement(&self) -> Self {
        let p = self.ctx.p();
        let mut acc = Self::one(&self.ctx);
        for k in 2..p {
            acc = &acc * &self.galois_unchecked(k);
        }
        acc
    }

    /// Extracts the constant coefficient, insisting every other coefficient
    /// vanish. Used for quantities that are rational by construction.
    fn expect_constant(&self, what: &str) -> T {
        for c in &self.coeffs[1..] {
            if !c.is_zero() {
                panic!("internal inconsistency: {what} is not rational: {self}");
            }
        }
        self.coeffs[0].clone()
    }

    /// Trace, computed as the sum of all Galois conjugates.
    pub fn trace(&self) -> T {
        let p = self.ctx.p();
        let mut acc = Self::zero(&self.ctx);
        for k in 1..p {
            acc = &acc + &self.galois_unchecked(k);
        }
        acc.expect_constant("conjugate sum")
    }

    /// Norm computed as the product of all Galois conjugates.
    ///
    /// Retained as an independent cross-check of the resultant-based norm.
    pub fn norm_via_conjugates(&self) -> T {
        let p = self.ctx.p();
        let mut acc = Self::one(&self.ctx);
        for k in 1..p {
            acc = &acc * &self.galois_unchecked(k);
        }
        acc.expect_constant("conjugate product")
    }

    fn trimmed(&self) -> Vec<T> {
        let mut v = self.coeffs.clone();
        while v.len() > 1 && v.last().map(|c| c.is_zero()).unwrap_or(false) {
            v.pop();
        }
        v
    }
}

impl<T: Coeff> Add for &CycElem<T> {
    type Output = CycElem<T>;

    fn add(self, rhs: &CycElem<T>) -> CycElem<T> {
        assert_eq!(self.ctx.p(), rhs.ctx.p(), "context mismatch in add");
        CycElem {
            ctx: self.ctx.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<T: Coeff> Sub for &CycElem<T> {
    type Output = CycElem<T>;

    fn sub(self, rhs: &CycElem<T>) -> CycElem<T> {
        assert_eq!(self.ctx.p(), rhs.ctx.p(), "context mismatch in sub");
        CycElem {
            ctx: self.ctx.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<T: Coeff> Neg for &CycElem<T> {
    type Output = CycElem<T>;

    fn neg(self) -> CycElem<T> {
        CycElem {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Coeff> Mul for &CycElem<T> {
    type Output = CycElem<T>;

    /// Schoolbook convolution followed by reduction modulo the minimal
    /// polynomial.
    fn mul(self, rhs: &CycElem<T>) -> CycElem<T> {
        assert_eq!(self.ctx.p(), rhs.ctx.p(), "context mismatch in mul");
        let n = self.ctx.degree();
        let mut raw = vec![T::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] = raw[i + j].clone() + a.clone() * b.clone();
            }
        }
        CycElem::reduce(&self.ctx, raw)
    }
}

impl CycElem<BigInt> {
    /// Norm over the rationals, computed as the resultant of the minimal
    /// polynomial with the coefficient polynomial.
    pub fn norm(&self) -> BigInt {
        if self.is_zero() {
            return BigInt::zero();
        }
        resultant::resultant(self.ctx.modulus(), &self.trimmed())
    }

    /// Image under the residue map sending zeta to 1, a value in {0..p-1}.
    ///
    /// This is reduction modulo the prime above p: an integer n maps to
    /// n mod p, and lambda maps to 0.
    pub fn reduce_mod_lambda(&self) -> u64 {
        let p = BigInt::from(self.ctx.p());
        self.coeff_sum()
            .mod_floor(&p)
            .to_u64()
            .expect("residue fits in u64")
    }

    /// Exact division: returns c with b*c = a when a/b is integral.
    ///
    /// Computed through the field inverse (conjugate product over the norm)
    /// followed by an integrality test.
    pub fn divide_exact(&self, b: &CycElem<BigInt>) -> Result<CycElem<BigInt>> {
        self.same_ctx(b)?;
        if b.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let conj = b.conjugate_complement();
        let norm = (b * &conj).expect_constant("norm of divisor");
        let scaled = self * &conj;
        let mut coeffs = Vec::with_capacity(scaled.coeffs.len());
        for c in &scaled.coeffs {
            let (q, r) = c.div_rem(&norm);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            coeffs.push(q);
        }
        Ok(CycElem {
            ctx: self.ctx.clone(),
            coeffs,
        })
    }

    /// Largest t such that lambda^t exactly divides the element.
    ///
    /// Terminates because t is bounded by (p-1) times the p-adic valuation of
    /// the norm.
    pub fn lambda_valuation(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let lam = Self::lambda(&self.ctx);
        let mut current = self.clone();
        let mut t = 0u64;
        loop {
            match current.divide_exact(&lam) {
                Ok(q) => {
                    t += 1;
                    current = q;
                }
                Err(Error::NotDivisible) => return Ok(t),
                Err(e) => return Err(e),
            }
        }
    }

    /// The integer residue n in {0..p-1} with a^p congruent to n modulo p.
    ///
    /// Such n always exists; failure indicates broken arithmetic.
    pub fn pth_power_residue(&self) -> Result<u64> {
        let p = self.ctx.p();
        let pb = BigInt::from(p);
        let power = self.pow(p as u32);
        for (i, c) in power.coeffs.iter().enumerate().skip(1) {
            if !c.mod_floor(&pb).is_zero() {
                return Err(Error::InternalInconsistency(format!(
                    "coefficient {i} of a^p is {c}, not divisible by {p}"
                )));
            }
        }
        Ok(power.coeffs[0]
            .mod_floor(&pb)
            .to_u64()
            .expect("residue fits in u64"))
    }

    pub fn to_rat(&self) -> CycElem<BigRational> {
        CycElem {
            ctx: self.ctx.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }
}

impl CycElem<BigRational> {
    /// Norm over the rationals, by clearing denominators and taking the
    /// integer resultant.
    pub fn norm(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let d = self.denominator_lcm();
        let scaled = self.scale(&BigRational::from_integer(d.clone()));
        let ints = scaled.to_int().expect("cleared denominators");
        let deg = self.ctx.degree() as u32;
        BigRational::new(ints.norm(), d.pow(deg))
    }

    /// True when every coefficient has denominator one.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn to_int(&self) -> Option<CycElem<BigInt>> {
        if !self.is_integral() {
            return None;
        }
        Some(CycElem {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| c.numer().clone()).collect(),
        })
    }

    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Field inverse.
    pub fn inverse(&self) -> Result<CycElem<BigRational>> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let conj = self.conjugate_complement();
        let norm = (self * &conj).expect_constant("norm of inverse target");
        Ok(conj.scale(&norm.recip()))
    }

    pub fn divide(&self, rhs: &CycElem<BigRational>) -> Result<CycElem<BigRational>> {
        self.same_ctx(rhs)?;
        Ok(self * &rhs.inverse()?)
    }
}
