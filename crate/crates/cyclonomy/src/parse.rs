//! The element text format shared by every CLI command: comma-separated
//! coefficients, little-endian in powers of zeta, integers or rationals
//! written "a/b". The coefficient count must be exactly p-1.

use crate::context::Ctx;
use crate::error::{Error, Result};
use crate::{CycInt, CycRat};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

fn split_checked(ctx: &Ctx, text: &str) -> Result<Vec<String>> {
    let parts: Vec<String> = text.split(',').map(|s| s.trim().to_string()).collect();
    let expected = ctx.degree();
    if parts.len() != expected {
        return Err(Error::InvalidElement(format!(
            "expected p-1 = {expected} comma-separated coefficients, got {}",
            parts.len()
        )));
    }
    Ok(parts)
}

fn parse_rational(token: &str) -> Result<BigRational> {
    let bad = |t: &str| Error::InvalidElement(format!("cannot parse coefficient '{t}'"));
    match token.split_once('/') {
        None => {
            let n: BigInt = token.parse().map_err(|_| bad(token))?;
            Ok(BigRational::from_integer(n))
        }
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(|_| bad(token))?;
            let d: BigInt = den.trim().parse().map_err(|_| bad(token))?;
            if d.is_zero() {
                return Err(Error::InvalidElement(format!(
                    "zero denominator in coefficient '{token}'"
                )));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Parses an element with rational coefficients.
pub fn parse_rat_element(ctx: &Ctx, text: &str) -> Result<CycRat> {
    let parts = split_checked(ctx, text)?;
    let coeffs = parts
        .iter()
        .map(|t| parse_rational(t))
        .collect::<Result<Vec<_>>>()?;
    Ok(CycRat::reduce(ctx, coeffs))
}

/// Parses an element with integer coefficients; rationals are rejected.
pub fn parse_int_element(ctx: &Ctx, text: &str) -> Result<CycInt> {
    let parts = split_checked(ctx, text)?;
    let coeffs = parts
        .iter()
        .map(|t| {
            t.parse::<BigInt>().map_err(|_| {
                Error::InvalidElement(format!(
                    "coefficient '{t}' is not an integer (rational coefficients are not \
                     accepted here)"
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CycInt::reduce(ctx, coeffs))
}
