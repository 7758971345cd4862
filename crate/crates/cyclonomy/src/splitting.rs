//! Splitting of rational primes: the totally ramified prime above p, and for
//! q != p the factorization of the minimal polynomial modulo q into the g
//! irreducible factors of degree f = ord_p(q).

use crate::context::{is_odd_prime, Ctx};
use crate::error::{Error, Result};
use crate::ideal::CycIdeal;
use crate::CycInt;
use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Fixed seed for the randomized splitting branch; keeps every run identical.
const CZ_SEED: u64 = 1_000_003;

/// Exhaustive factor search is used while q^f stays at or below this.
const EXHAUSTIVE_LIMIT: u128 = 10_000;

/// Shape of the factorization of (q) in the ring of integers.
#[derive(Clone, Debug)]
pub struct SplittingData {
    pub q: u64,
    /// Ramification index: 1 unless q = p, where it is p-1.
    pub e: u32,
    /// Residue degree, the multiplicative order of q modulo p.
    pub f: u32,
    /// Number of primes above q.
    pub g: u32,
    pub primes: Vec<CycIdeal>,
}

fn is_prime(q: u64) -> bool {
    q == 2 || is_odd_prime(q)
}

/// Splits the rational prime q in the p-th cyclotomic field.
pub fn prime_split(ctx: &Ctx, q: u64) -> Result<SplittingData> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let p = ctx.p();
    if q == p {
        // (p) = (lambda)^(p-1), totally ramified
        let prime = CycIdeal::from_generators(
            ctx,
            &[
                CycInt::from_scalar(ctx, BigInt::from(p)),
                CycInt::lambda(ctx),
            ],
        )?;
        return Ok(SplittingData {
            q,
            e: (p - 1) as u32,
            f: 1,
            g: 1,
            primes: vec![prime],
        });
    }
    let f = multiplicative_order(q % p, p);
    let g = ((p - 1) / f) as u32;
    let factors = factor_min_poly_mod_q(p, q, f as usize, g as usize)?;
    let mut primes = Vec::with_capacity(factors.len());
    for h in &factors {
        let lifted = CycInt::reduce(ctx, h.iter().map(|&c| BigInt::from(c)).collect());
        let prime =
            CycIdeal::from_generators(ctx, &[CycInt::from_scalar(ctx, BigInt::from(q)), lifted])?;
        primes.push(prime);
    }
    primes.sort_by(|a, b| a.basis().cmp(b.basis()));
    Ok(SplittingData {
        q,
        e: 1,
        f: f as u32,
        g,
        primes,
    })
}

fn multiplicative_order(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    let mut acc = a % p;
    let mut ord = 1;
    while acc != 1 {
        acc = mulmod(acc, a, p);
        ord += 1;
    }
    ord
}

/// Factors 1 + X + ... + X^(p-1) over F_q into its monic degree-f irreducible
/// factors: exhaustive divisor search while q^f is tiny, seeded
/// Cantor-Zassenhaus equal-degree splitting above that.
fn factor_min_poly_mod_q(p: u64, q: u64, f: usize, g: usize) -> Result<Vec<Vec<u64>>> {
    let phi: Vec<u64> = vec![1 % q; p as usize];
    let mut factors = if pow_capped(q, f as u32) <= EXHAUSTIVE_LIMIT {
        exhaustive_factors(&phi, f, q)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(CZ_SEED);
        let mut out = Vec::new();
        equal_degree_split(phi, f, q, &mut rng, &mut out);
        out
    };
    factors.sort();
    if factors.len() != g {
        return Err(Error::InternalInconsistency(format!(
            "expected {g} factors of degree {f} for p={p}, q={q}, found {}",
            factors.len()
        )));
    }
    Ok(factors)
}

fn pow_capped(q: u64, f: u32) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..f {
        acc = acc.saturating_mul(q as u128);
        if acc > EXHAUSTIVE_LIMIT {
            return acc;
        }
    }
    acc
}

/// Every monic degree-f divisor of the squarefree target is irreducible of
/// degree exactly f, so plain trial division finds precisely the factors.
fn exhaustive_factors(target: &[u64], f: usize, q: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut lower = vec![0u64; f];
    loop {
        let mut candidate = lower.clone();
        candidate.push(1);
        if poly_rem(target, &candidate, q).is_empty() {
            out.push(candidate);
        }
        let mut i = 0;
        loop {
            if i == f {
                return out;
            }
            lower[i] += 1;
            if lower[i] < q {
                break;
            }
            lower[i] = 0;
            i += 1;
        }
    }
}

fn equal_degree_split(
    poly: Vec<u64>,
    f: usize,
    q: u64,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<Vec<u64>>,
) {
    let deg = poly.len() - 1;
    if deg == f {
        out.push(make_monic(poly, q));
        return;
    }
    loop {
        let r = random_poly(deg, q, rng);
        let candidate = if q == 2 {
            trace_map(&r, f, &poly, q)
        } else {
            let exp = (BigUint::from(q).pow(f as u32) - BigUint::one()) >> 1;
            let s = poly_pow_rem(&r, &exp, &poly, q);
            poly_sub_one(s, q)
        };
        let d = poly_gcd(&poly, &candidate, q);
        let ddeg = d.len().saturating_sub(1);
        if ddeg > 0 && ddeg < deg {
            let quotient = poly_div_exact(&poly, &d, q);
            equal_degree_split(d, f, q, rng, out);
            equal_degree_split(quotient, f, q, rng, out);
            return;
        }
    }
}

/// Sum of the Frobenius orbit r + r^2 + r^4 + ... used for splitting over F_2.
fn trace_map(r: &[u64], f: usize, modulus: &[u64], q: u64) -> Vec<u64> {
    let mut acc = r.to_vec();
    let mut power = r.to_vec();
    for _ in 1..f {
        power = poly_mul_rem(&power, &power, modulus, q);
        acc = poly_add(&acc, &power, q);
    }
    acc
}

fn random_poly(deg_below: usize, q: u64, rng: &mut ChaCha8Rng) -> Vec<u64> {
    loop {
        let coeffs: Vec<u64> = (0..deg_below).map(|_| rng.gen_range(0..q)).collect();
        let trimmed = trim(coeffs);
        if !trimmed.is_empty() {
            return trimmed;
        }
    }
}

// dense polynomials over F_q: ascending coefficients, no trailing zeros

fn mulmod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_add(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] = (out[i] + c) % q;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] = (out[i] + c) % q;
    }
    trim(out)
}

fn poly_sub_one(mut a: Vec<u64>, q: u64) -> Vec<u64> {
    if a.is_empty() {
        return vec![q - 1];
    }
    a[0] = (a[0] + q - 1) % q;
    trim(a)
}

fn poly_mul(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, q)) % q;
        }
    }
    trim(out)
}

fn modinv(a: u64, q: u64) -> u64 {
    // extended Euclid; q prime, a nonzero mod q
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (q as i128, (a % q) as i128);
    while new_r != 0 {
        let quot = r / new_r;
        (t, new_t) = (new_t, t - quot * new_t);
        (r, new_r) = (new_r, r - quot * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(q as i128) as u64
}

/// Remainder of a modulo b; b nonzero.
fn poly_rem(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
    let mut rem = trim(a.to_vec());
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let inv_lead = modinv(*b.last().unwrap(), q);
    while rem.len() >= b.len() {
        let coeff = mulmod(*rem.last().unwrap(), inv_lead, q);
        let offset = rem.len() - b.len();
        for (i, &bc) in b.iter().enumerate() {
            let sub = mulmod(coeff, bc, q);
            rem[offset + i] = (rem[offset + i] + q - sub) % q;
        }
        rem = trim(rem);
    }
    rem
}

fn poly_div_exact(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
    let mut rem = trim(a.to_vec());
    let b = trim(b.to_vec());
    let inv_lead = modinv(*b.last().unwrap(), q);
    let mut quot = vec![0u64; rem.len().saturating_sub(b.len()) + 1];
    while rem.len() >= b.len() {
        let coeff = mulmod(*rem.last().unwrap(), inv_lead, q);
        let offset = rem.len() - b.len();
        quot[offset] = coeff;
        for (i, &bc) in b.iter().enumerate() {
            let sub = mulmod(coeff, bc, q);
            rem[offset + i] = (rem[offset + i] + q - sub) % q;
        }
        rem = trim(rem);
    }
    assert!(rem.is_empty(), "polynomial division was not exact");
    trim(quot)
}

fn make_monic(a: Vec<u64>, q: u64) -> Vec<u64> {
    let a = trim(a);
    match a.last() {
        None | Some(1) => a,
        Some(&lead) => {
            let inv = modinv(lead, q);
            a.iter().map(|&c| mulmod(c, inv, q)).collect()
        }
    }
}

fn poly_gcd(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = poly_rem(&x, &y, q);
        x = y;
        y = r;
    }
    make_monic(x, q)
}

fn poly_mul_rem(a: &[u64], b: &[u64], modulus: &[u64], q: u64) -> Vec<u64> {
    poly_rem(&poly_mul(a, b, q), modulus, q)
}

fn poly_pow_rem(base: &[u64], exp: &BigUint, modulus: &[u64], q: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut acc = poly_rem(base, modulus, q);
    for bit in 0..exp.bits() {
        if exp.bit(bit) {
            result = poly_mul_rem(&result, &acc, modulus, q);
        }
        if bit + 1 < exp.bits() {
            acc = poly_mul_rem(&acc, &acc, modulus, q);
        }
    }
    result
}
