//! Exact arithmetic over Q(zeta_e) and rational functions in t.

mod cyclotomic;
mod linalg;
mod poly;
mod ratfunc;
mod root;
mod serial;

pub use cyclotomic::{cyclotomic_polynomial, totient, CycNum};
pub use linalg::{Mat, Scalar};
pub use poly::TPoly;
pub use ratfunc::TRat;
pub use root::Root;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Shorthand for the rational n/d.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
