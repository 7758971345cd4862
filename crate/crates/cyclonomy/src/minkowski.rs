//! Rational enclosure of the Minkowski bound. The class-number certificate
//! rests on this interval, so no floating point enters: pi is bracketed by a
//! hard-coded rational enclosure and the square root by integer isqrt.

use crate::context::Ctx;
use crate::resultant;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

/// 3.14159265358979 < pi < 3.14159265358980
fn pi_enclosure() -> (BigRational, BigRational) {
    let denom = BigInt::from(10u64).pow(14);
    (
        BigRational::new(BigInt::from(314_159_265_358_979u64), denom.clone()),
        BigRational::new(BigInt::from(314_159_265_358_980u64), denom),
    )
}

fn rat_pow(base: &BigRational, exp: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Encloses sqrt(d) for a nonnegative integer d to 30 decimal digits.
fn sqrt_enclosure(d: &BigInt) -> (BigRational, BigRational) {
    let scale = BigInt::from(10u64).pow(30);
    let root = (d * &scale * &scale).sqrt();
    (
        BigRational::new(root.clone(), scale.clone()),
        BigRational::new(root + BigInt::one(), scale),
    )
}

/// Rational interval (lo, hi) guaranteed to contain the Minkowski bound
/// sqrt(|disc|) * (4/pi)^((p-1)/2) * n!/n^n with n = p-1.
///
/// The field is totally imaginary, so the signature is (0, (p-1)/2). The
/// interval width is far below 1e-6 at desk scale.
pub fn minkowski_bound(ctx: &Ctx) -> (BigRational, BigRational) {
    let n = ctx.degree() as u32;
    let r2 = n / 2;
    let disc = resultant::discriminant(ctx).abs();
    let (sqrt_lo, sqrt_hi) = sqrt_enclosure(&disc);
    let (pi_lo, pi_hi) = pi_enclosure();
    let four = BigRational::from_integer(BigInt::from(4));
    let ratio_lo = rat_pow(&(&four / &pi_hi), r2);
    let ratio_hi = rat_pow(&(&four / &pi_lo), r2);

    let mut factorial = BigInt::one();
    for k in 2..=n {
        factorial *= BigInt::from(k);
    }
    let stirling = BigRational::new(factorial, BigInt::from(n).pow(n));

    (
        sqrt_lo * ratio_lo * stirling.clone(),
        sqrt_hi * ratio_hi * stirling,
    )
}
