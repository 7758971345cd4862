//! Units of the ring of integers: recognition, inversion, torsion
//! decomposition, congruence tests, the bounded p-th-root search, and the
//! quotient polynomial attached to a unit close to 1.

use crate::context::Ctx;
use crate::element::CycElem;
use crate::error::{Error, Result};
use crate::CycInt;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// A unit of the ring of integers, witnessed by its norm.
///
/// Norms from a totally imaginary field are positive, so norm 1 is exactly
/// the unit condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitElem {
    value: CycInt,
    norm_witness: BigInt,
}

impl UnitElem {
    /// Checks the norm and wraps the element; fails with the offending norm.
    pub fn new(value: CycInt) -> Result<UnitElem> {
        let norm = value.norm();
        if norm != BigInt::one() {
            return Err(Error::NotAUnit(norm));
        }
        Ok(UnitElem {
            value,
            norm_witness: norm,
        })
    }

    pub fn value(&self) -> &CycInt {
        &self.value
    }

    pub fn norm_witness(&self) -> &BigInt {
        &self.norm_witness
    }

    pub fn ctx(&self) -> &Ctx {
        self.value.ctx()
    }

    /// Inverse unit, the product of the non-identity conjugates.
    pub fn inverse(&self) -> UnitElem {
        let inv = self.value.conjugate_complement();
        debug_assert_eq!(&self.value * &inv, CycInt::one(self.ctx()));
        UnitElem::new(inv).expect("conjugate complement of a unit is a unit")
    }

    /// Integer power, with negative exponents through the inverse.
    pub fn pow(&self, e: i64) -> UnitElem {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let raised = base.value.pow(e.unsigned_abs() as u32);
        UnitElem::new(raised).expect("power of a unit is a unit")
    }
}

/// Recognizes a as a unit; alias for [`UnitElem::new`].
pub fn as_unit(a: CycInt) -> Result<UnitElem> {
    UnitElem::new(a)
}

/// The cyclotomic unit (1 - zeta^k)/(1 - zeta) = 1 + zeta + ... + zeta^(k-1),
/// for 2 <= k <= p-1.
pub fn cyclotomic_unit(ctx: &Ctx, k: u64) -> Result<UnitElem> {
    let p = ctx.p();
    if !(2..=p - 1).contains(&k) {
        return Err(Error::OutOfRange {
            index: k,
            min: 2,
            max: p - 1,
        });
    }
    let mut acc = CycInt::zero(ctx);
    for i in 0..k {
        acc = &acc + &CycInt::zeta_pow(ctx, i as i64);
    }
    UnitElem::new(acc)
}

/// Writes u = zeta^n * x with x fixed by complex conjugation.
///
/// The quotient u / conj(u) is a torsion unit; matching it against the 2p
/// candidates +/-zeta^m by direct comparison determines n. The minus sign
/// cannot occur for units of this ring, so hitting it signals a bug upstream.
pub fn decompose_real(u: &UnitElem) -> Result<(u64, CycInt)> {
    let ctx = u.ctx();
    let p = ctx.p();
    let conj = UnitElem::new(u.value.conjugate()).expect("conjugate of a unit is a unit");
    let t = &u.value * &conj.inverse().value;
    for m in 0..p {
        if t == CycInt::zeta_pow(ctx, m as i64) {
            // 2n = m mod p, so n = m (p+1)/2
            let n = (m * ((p + 1) / 2)) % p;
            let x = &CycInt::zeta_pow(ctx, -(n as i64)) * &u.value;
            if x.conjugate() != x {
                return Err(Error::InternalInconsistency(
                    "real part of unit decomposition is not conjugation-fixed".into(),
                ));
            }
            return Ok((n, x));
        }
    }
    for m in 0..p {
        if t == -&CycInt::zeta_pow(ctx, m as i64) {
            return Err(Error::MinusSignCase);
        }
    }
    Err(Error::NoTorsionMatch)
}

/// The unique n in {0..p-1} with p dividing u - n, if any.
///
/// At most one such n exists because distinct integers below p differ by less
/// than p.
pub fn congruent_integer_mod_p(u: &UnitElem) -> Option<u64> {
    let p = BigInt::from(u.ctx().p());
    let coeffs = u.value.coeffs();
    if coeffs[1..].iter().any(|c| !c.mod_floor(&p).is_zero()) {
        return None;
    }
    Some(
        coeffs[0]
            .mod_floor(&p)
            .to_u64()
            .expect("residue fits in u64"),
    )
}

/// Default generator stock for [`kummer_search`]: the cyclotomic units
/// (1 - zeta^k)/(1 - zeta) for 2 <= k <= (p-1)/2.
///
/// There are (p-3)/2 of them, matching the free rank of the unit group. For
/// p = 3 the list is empty and the search covers the torsion alone.
pub fn default_kummer_generators(ctx: &Ctx) -> Vec<UnitElem> {
    (2..=(ctx.p() - 1) / 2)
        .map(|k| cyclotomic_unit(ctx, k).expect("k stays in range"))
        .collect()
}

/// Bounded search for v with v^p = u over v = t prod g_i^(b_i), where t
/// runs over the full torsion +/-zeta^a.
///
/// A `None` is inconclusive: the search is complete only within the box
/// |b_i| <= bound. A returned unit is re-verified before it leaves.
pub fn kummer_search(u: &UnitElem, generators: &[UnitElem], bound: u64) -> Option<UnitElem> {
    let ctx = u.ctx();
    let p = ctx.p();
    let width = 2 * bound + 1;
    // generator power tables, index b + bound
    let tables: Vec<Vec<CycInt>> = generators
        .iter()
        .map(|g| {
            (0..width)
                .map(|i| g.pow(i as i64 - bound as i64).value().clone())
                .collect()
        })
        .collect();
    let mut exps = vec![0usize; generators.len()];
    loop {
        let mut body = CycInt::one(ctx);
        for (table, &e) in tables.iter().zip(&exps) {
            body = &body * &table[e];
        }
        for a in 0..p {
            for sign in [1i64, -1] {
                let torsion = &CycInt::from_int(ctx, sign) * &CycInt::zeta_pow(ctx, a as i64);
                let v = &torsion * &body;
                if v.pow(p as u32) == *u.value() {
                    let unit = UnitElem::new(v).expect("p-th root of a unit is a unit");
                    assert_eq!(unit.value().pow(p as u32), *u.value());
                    return Some(unit);
                }
            }
        }
        // odometer over exponent vectors, last generator fastest
        let mut i = exps.len();
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            exps[i] += 1;
            if exps[i] < width as usize {
                break;
            }
            exps[i] = 0;
            if i == 0 {
                return None;
            }
        }
    }
}

/// Polynomial with coefficients in the ring of integers, index = degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<CycInt>,
}

impl IntPolynomial {
    /// Trims trailing zero coefficients so the leading term is nonzero.
    pub fn new(mut coeffs: Vec<CycInt>) -> IntPolynomial {
        while coeffs.len() > 1 && coeffs.last().map(CycElem::is_zero).unwrap_or(false) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[CycInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs
            .last()
            .map(|c| *c == CycInt::one(c.ctx()))
            .unwrap_or(false)
    }
}

/// The monic degree-p polynomial (((zeta-1)X - 1)^p + u) / (zeta-1)^p.
///
/// Requires (zeta-1)^p to divide u - 1; every coefficient of the expansion is
/// then exactly divisible and the quotient has integral coefficients.
pub fn build_pu(u: &UnitElem) -> Result<IntPolynomial> {
    let ctx = u.ctx();
    let p = ctx.p();
    let lam = CycInt::lambda(ctx);
    let diff = &u.value - &CycInt::one(ctx);
    if !diff.is_zero() && diff.lambda_valuation()? < p {
        return Err(Error::HypothesisFailed(format!(
            "lambda^{p} does not divide u - 1 (valuation {})",
            diff.lambda_valuation()?
        )));
    }

    // expand ((lambda X - 1)^p + u, coefficient of X^j is C(p,j) lambda^j (-1)^(p-j)
    let mut expansion = Vec::with_capacity(p as usize + 1);
    let mut binom = BigInt::one();
    for j in 0..=p {
        let mut c = CycInt::lambda(ctx).pow(j as u32).scale(&binom);
        if (p - j) % 2 == 1 {
            c = -&c;
        }
        expansion.push(c);
        binom = binom * BigInt::from(p - j) / BigInt::from(j + 1);
    }
    expansion[0] = &expansion[0] + &u.value;

    let lam_p = lam.pow(p as u32);
    let mut coeffs = Vec::with_capacity(expansion.len());
    for (j, c) in expansion.iter().enumerate() {
        let q = c.divide_exact(&lam_p).map_err(|e| match e {
            Error::NotDivisible => Error::InternalInconsistency(format!(
                "coefficient {j} of the expansion is not divisible by lambda^{p}"
            )),
            other => other,
        })?;
        coeffs.push(q);
    }
    Ok(IntPolynomial::new(coeffs))
}
