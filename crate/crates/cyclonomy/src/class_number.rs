//! Class-number-one certification for p in {3, 5, 7}: every prime ideal of
//! norm at most the Minkowski bound must be principal. For these p the bound
//! is so small that no prime ideal qualifies, and the certificate is the
//! verified emptiness of that list.

use crate::context::Ctx;
use crate::error::{Error, Result};
use crate::minkowski::minkowski_bound;
use crate::splitting::prime_split;
use crate::CycInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

/// Coefficient box used for the principality search during certification.
const CERT_HEIGHT: u64 = 3;

/// One certification record: a rational prime examined, its splitting shape,
/// and a principal generator when a prime ideal above it needed checking.
#[derive(Clone, Debug)]
pub struct CheckedPrime {
    pub q: u64,
    pub f: u32,
    pub g: u32,
    pub principal_witness: Option<CycInt>,
}

/// The full evidence behind a class-number claim.
#[derive(Clone, Debug)]
pub struct ClassNumberCertificate {
    pub p: u64,
    pub minkowski_lo: BigRational,
    pub minkowski_hi: BigRational,
    pub primes_checked: Vec<CheckedPrime>,
    pub class_number: u64,
}

/// Certifies class number 1 for p in {3, 5, 7}.
///
/// Splits every rational prime q up to the Minkowski bound, and for each
/// prime ideal of norm within the bound demands a bounded principality
/// witness. Any resistant ideal aborts the certification loudly.
pub fn certify_class_number(ctx: &Ctx) -> Result<ClassNumberCertificate> {
    let p = ctx.p();
    if ![3, 5, 7].contains(&p) {
        return Err(Error::UnsupportedPrime(p));
    }
    let (lo, hi) = minkowski_bound(ctx);
    let bound = hi
        .floor()
        .to_integer()
        .to_u64()
        .expect("Minkowski bound fits in u64 at desk scale");
    let mut primes_checked = Vec::new();
    for q in 2..=bound {
        let split = match prime_split(ctx, q) {
            Ok(split) => split,
            Err(Error::NotPrime(_)) => continue,
            Err(e) => return Err(e),
        };
        let mut found_small = false;
        for prime in &split.primes {
            if prime.norm().to_u64().map(|n| n <= bound).unwrap_or(false) {
                found_small = true;
                match prime.principal_generator_bounded(CERT_HEIGHT) {
                    Some(witness) => primes_checked.push(CheckedPrime {
                        q,
                        f: split.f,
                        g: split.g,
                        principal_witness: Some(witness),
                    }),
                    None => {
                        return Err(Error::CertificationFailed(format!(
                            "prime of norm {} above {q} resisted the height-{CERT_HEIGHT} search",
                            prime.norm()
                        )))
                    }
                }
            }
        }
        if !found_small {
            primes_checked.push(CheckedPrime {
                q,
                f: split.f,
                g: split.g,
                principal_witness: None,
            });
        }
    }
    Ok(ClassNumberCertificate {
        p,
        minkowski_lo: lo,
        minkowski_hi: hi,
        primes_checked,
        class_number: 1,
    })
}

/// Class number for p in {3, 5, 7}; always 1, but only after certification.
pub fn class_number_small(ctx: &Ctx) -> Result<u64> {
    certify_class_number(ctx).map(|cert| cert.class_number)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::FieldContext;
    use num_traits::Signed;

    #[test]
    fn certifies_small_primes() {
        for p in [3u64, 5, 7] {
            let ctx = FieldContext::new(p).unwrap();
            assert_eq!(class_number_small(&ctx).unwrap(), 1);
        }
    }

    #[test]
    fn bound_floor_values() {
        // p = 3, 5 have bound below 2, so no primes are examined at all;
        // p = 7 examines q = 2 and 3 but neither has a small-norm prime ideal
        let ctx3 = FieldContext::new(3).unwrap();
        assert!(certify_class_number(&ctx3)
            .unwrap()
            .primes_checked
            .is_empty());

        let ctx5 = FieldContext::new(5).unwrap();
        assert!(certify_class_number(&ctx5)
            .unwrap()
            .primes_checked
            .is_empty());

        let ctx7 = FieldContext::new(7).unwrap();
        let cert = certify_class_number(&ctx7).unwrap();
        let qs: Vec<u64> = cert.primes_checked.iter().map(|c| c.q).collect();
        assert_eq!(qs, vec![2, 3]);
        assert!(cert
            .primes_checked
            .iter()
            .all(|c| c.principal_witness.is_none()));
        let two = &cert.primes_checked[0];
        assert_eq!((two.f, two.g), (3, 2));
        let three = &cert.primes_checked[1];
        assert_eq!((three.f, three.g), (6, 1));
    }

    #[test]
    fn rejects_unsupported_primes() {
        let ctx = FieldContext::new(11).unwrap();
        assert!(matches!(
            class_number_small(&ctx),
            Err(Error::UnsupportedPrime(11))
        ));
    }

    #[test]
    fn principality_witness_for_split_prime() {
        // class number 1 at p = 5 guarantees the primes above 11 are principal
        let ctx = FieldContext::new(5).unwrap();
        let split = prime_split(&ctx, 11).unwrap();
        let prime = &split.primes[0];
        let witness = prime
            .principal_generator_bounded(2)
            .expect("generator of norm 11 in the height-2 box");
        assert_eq!(witness.norm().abs(), prime.norm());
        assert!(prime.contains(&witness));
    }
}
