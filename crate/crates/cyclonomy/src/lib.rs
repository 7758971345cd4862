//! Exact arithmetic in the p-th cyclotomic field for odd primes p, together
//! with the unit, ideal, regularity, descent and Hilbert-90 machinery needed
//! to check the classical number theory behind the Fermat equation at desk
//! scale. Everything is exact: arbitrary-precision integers and rationals,
//! never floating point.

pub mod bernoulli;
pub mod class_group;
pub mod class_number;
pub mod context;
pub mod descent;
pub mod element;
pub mod error;
pub mod hilbert90;
mod hnf;
pub mod ideal;
pub mod minkowski;
pub mod parse;
pub mod regularity;
pub mod resultant;
pub mod splitting;
pub mod units;

pub use context::{Ctx, FieldContext};
pub use element::{Coeff, CycElem};
pub use error::{Error, Result};

/// Algebraic integer: exact integer coefficients on the power basis.
pub type CycInt = CycElem<num_bigint::BigInt>;

/// Field element: exact rational coefficients on the power basis.
pub type CycRat = CycElem<num_rational::BigRational>;
