use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::arith::{CycNum, Root, TPoly, TRat};
use crate::combinatorics::{z_partition, EPartition};

/// z_alpha = e^{l(alpha)} prod_k z_{alpha^(k)}, the centralizer order in G(e,1,n).
pub fn z_alpha(alpha: &EPartition) -> BigInt {
    let mut z = BigInt::from(alpha.e()).pow(alpha.length() as u32);
    for p in alpha.parts() {
        z *= BigInt::from(z_partition(p));
    }
    z
}

/// The centralizer series of a class of G(e,1,n).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZSeries {
    pub alpha: EPartition,
    pub value: TRat,
}

/// z_alpha(t) = z_alpha prod_{k,j} (1 - root^k t^{alpha_j^(k)})^{-1}.
pub fn z_series_root(alpha: &EPartition, root: Root) -> TRat {
    let mut den = TPoly::one();
    for (k, p) in alpha.parts().iter().enumerate() {
        for &a in p {
            let factor = &TPoly::one() - &TPoly::monomial(root.pow(k as i64), a as usize);
            den = &den * &factor;
        }
    }
    let z = CycNum::from_rational(root.field, BigRational::from_integer(z_alpha(alpha)));
    TRat::normalize(TPoly::constant(z), den).expect("nonzero denominator")
}

pub fn z_series(alpha: &EPartition) -> ZSeries {
    ZSeries {
        alpha: alpha.clone(),
        value: z_series_root(alpha, Root::primitive(alpha.e() as u32)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ep(s: &str) -> EPartition {
        EPartition::parse(s).unwrap()
    }

    #[test]
    fn examples() {
        let one_minus_t = TPoly::from_ints(&[1, -1]);
        let v = z_series(&ep("(1;-)")).value;
        assert_eq!(v, TRat::normalize(TPoly::from_ints(&[2]), one_minus_t.clone()).unwrap());
        let v = z_series(&ep("(1;1)")).value;
        let den = &one_minus_t * &TPoly::from_ints(&[1, 1]);
        assert_eq!(v, TRat::normalize(TPoly::from_ints(&[4]), den).unwrap());
        let v = z_series(&ep("(1)")).value;
        assert_eq!(v, TRat::normalize(TPoly::one(), one_minus_t).unwrap());
        assert_eq!(z_alpha(&ep("(21;-;1)")), BigInt::from(27 * 2));
    }
}
