use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::bases::{monomial, powersum_root, q_product, schur, Sign};
use super::sympoly::SymPoly;
use crate::arith::{Mat, Root, TRat};
use crate::combinatorics::{enumerate_epartitions, EPartition};
use crate::error::{Error, Result};
use crate::wreath::z_series_root;

/// Which family a `BasisExpansion` is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisTag {
    Schur,
    Monomial,
    Powersum,
    Qplus,
    Qminus,
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BasisTag::Schur => "schur",
            BasisTag::Monomial => "monomial",
            BasisTag::Powersum => "powersum",
            BasisTag::Qplus => "qplus",
            BasisTag::Qminus => "qminus",
        };
        f.write_str(s)
    }
}

/// Coordinates of a degree-n function in one of the bases.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisExpansion {
    pub basis: BasisTag,
    pub coeffs: BTreeMap<EPartition, TRat>,
}

impl BasisExpansion {
    pub fn single(basis: BasisTag, alpha: EPartition) -> BasisExpansion {
        BasisExpansion {
            basis,
            coeffs: BTreeMap::from([(alpha, TRat::one())]),
        }
    }

    pub fn coeff(&self, alpha: &EPartition) -> TRat {
        self.coeffs.get(alpha).cloned().unwrap_or_else(TRat::zero)
    }

    /// Common size of the indices, if any.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next().map(|a| a.size())
    }

    /// Rebuilds the polynomial in `m` variables per color.
    pub fn to_sympoly(&self, m: &[u32], root: Root) -> Result<SymPoly> {
        let mut acc = SymPoly::zero(m);
        for (alpha, c) in &self.coeffs {
            acc = acc.add(&basis_poly(self.basis, alpha, m, root)?.scale(c));
        }
        Ok(acc)
    }
}

impl Serialize for BasisExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            basis: BasisTag,
            coeffs: BTreeMap<String, &'a TRat>,
        }
        Repr {
            basis: self.basis,
            coeffs: self.coeffs.iter().map(|(a, c)| (a.key(), c)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BasisExpansion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            basis: BasisTag,
            coeffs: BTreeMap<String, TRat>,
        }
        let r = Repr::deserialize(d)?;
        let mut coeffs = BTreeMap::new();
        for (k, v) in r.coeffs {
            coeffs.insert(EPartition::parse(&k).map_err(D::Error::custom)?, v);
        }
        Ok(BasisExpansion { basis: r.basis, coeffs })
    }
}

/// The basis element indexed by alpha.
pub fn basis_poly(basis: BasisTag, alpha: &EPartition, m: &[u32], root: Root) -> Result<SymPoly> {
    Ok(match basis {
        BasisTag::Schur => schur(alpha, m)?,
        BasisTag::Monomial => monomial(alpha, m)?,
        BasisTag::Powersum => powersum_root(alpha, m, root),
        BasisTag::Qplus => q_product(alpha, Sign::Plus, m),
        BasisTag::Qminus => q_product(alpha, Sign::Minus, m),
    })
}

fn dominant_exponent(alpha: &EPartition, m: &[u32]) -> Vec<u16> {
    let mut ex = Vec::new();
    for (k, p) in alpha.parts().iter().enumerate() {
        let mut row: Vec<u16> = p.iter().map(|&x| x as u16).collect();
        row.resize(m[k] as usize, 0);
        ex.extend(row);
    }
    ex
}

/// Expansion of a homogeneous degree-n polynomial with m_k >= n, using the primitive root for p.
pub fn expand(f: &SymPoly, basis: BasisTag, n: u32) -> Result<BasisExpansion> {
    expand_root(f, basis, n, Root::primitive(f.e() as u32))
}

/// Expansion with power sums taken at an arbitrary root.
pub fn expand_root(f: &SymPoly, basis: BasisTag, n: u32, root: Root) -> Result<BasisExpansion> {
    let m = f.m().to_vec();
    if m.iter().any(|&mk| mk < n) {
        return Err(Error::InvalidParameter(format!("expansion in degree {} needs at least {} variables per color", n, n)));
    }
    if let Some(d) = f.degree() {
        if d != n {
            return Err(Error::InvalidParameter(format!("polynomial has degree {}, expected {}", d, n)));
        }
    }
    let labels = enumerate_epartitions(n, f.e());
    let polys: Vec<SymPoly> = labels
        .iter()
        .map(|a| basis_poly(basis, a, &m, root))
        .collect::<Result<_>>()?;
    let doms: Vec<Vec<u16>> = labels.iter().map(|a| dominant_exponent(a, &m)).collect();
    let mat = Mat::from_fn(labels.len(), labels.len(), |i, j| polys[j].coeff(&doms[i]));
    let rhs = Mat::from_fn(labels.len(), 1, |i, _| f.coeff(&doms[i]));
    let sol = mat.solve(&rhs)?;
    let mut coeffs = BTreeMap::new();
    let mut check = SymPoly::zero(&m);
    for (i, a) in labels.iter().enumerate() {
        let c = sol.get(i, 0);
        if !c.is_zero() {
            check = check.add(&polys[i].scale(c));
            coeffs.insert(a.clone(), c.clone());
        }
    }
    if &check != f {
        return Err(Error::Invariant(format!("polynomial is not in the span of the {} basis", basis)));
    }
    Ok(BasisExpansion { basis, coeffs })
}

/// Converts to power-sum coordinates, using n variables per color.
pub fn to_powersum(f: &BasisExpansion, e: usize, root: Root) -> Result<BasisExpansion> {
    if f.basis == BasisTag::Powersum {
        return Ok(f.clone());
    }
    let Some(n) = f.degree() else {
        return Ok(BasisExpansion { basis: BasisTag::Powersum, coeffs: BTreeMap::new() });
    };
    let m = vec![n; e];
    expand_root(&f.to_sympoly(&m, root)?, BasisTag::Powersum, n, root)
}

/// Sesquilinear form with <p_alpha, p_beta> = z_alpha(t) delta; mixed degrees give 0.
pub fn scalar_product(f: &BasisExpansion, g: &BasisExpansion) -> Result<TRat> {
    let e = f.coeffs.keys().chain(g.coeffs.keys()).map(|a| a.e()).next().unwrap_or(1);
    scalar_product_root(f, g, Root::primitive(e as u32))
}

pub fn scalar_product_root(f: &BasisExpansion, g: &BasisExpansion, root: Root) -> Result<TRat> {
    if f.degree().is_none() || g.degree().is_none() || f.degree() != g.degree() {
        return Ok(TRat::zero());
    }
    let e = root.order() as usize;
    let fp = to_powersum(f, e, root)?;
    let gp = to_powersum(g, e, root)?;
    let mut acc = TRat::zero();
    for (a, c) in &fp.coeffs {
        if let Some(d) = gp.coeffs.get(a) {
            acc = &acc + &(&(c * &d.conj()) * &z_series_root(a, root));
        }
    }
    Ok(acc)
}

/// Outcome of comparing both sides of the degree-n Cauchy kernel.
#[derive(Clone, Debug)]
pub struct CauchyReport {
    pub holds: bool,
    /// The q-m side, in x variables (first e colors) and y variables (last e colors).
    pub lhs: SymPoly,
    pub rhs: SymPoly,
}

/// sum_alpha q_{alpha,+}(x) m_alpha(y) against sum_alpha z_alpha(t)^{-1} p_alpha(x) conj p_alpha(y).
pub fn cauchy_truncated(n: u32, e: usize, m: &[u32]) -> Result<CauchyReport> {
    let root = Root::primitive(e as u32);
    let mut lhs = SymPoly::zero(&[m, m].concat());
    let mut rhs = lhs.clone();
    for alpha in enumerate_epartitions(n, e) {
        let ok_len = alpha.parts().iter().zip(m).all(|(p, &mk)| p.len() <= mk as usize);
        if ok_len {
            let mm = monomial(&alpha, m)?;
            lhs = lhs.add(&q_product(&alpha, Sign::Plus, m).tensor(&mm));
        }
        let p = powersum_root(&alpha, m, root);
        let zi = z_series_root(&alpha, root).inv()?;
        rhs = rhs.add(&p.tensor(&p.conj()).scale(&zi));
    }
    Ok(CauchyReport { holds: lhs == rhs, lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::TPoly;

    fn ep(s: &str) -> EPartition {
        EPartition::parse(s).unwrap()
    }

    fn int(n: i64) -> TRat {
        TRat::from_int(n)
    }

    #[test]
    fn expand_examples() {
        let m = [2];
        let ex = expand(&powersum_root(&ep("(2)"), &m, Root::primitive(1)), BasisTag::Schur, 2).unwrap();
        assert_eq!(ex.coeff(&ep("(2)")), int(1));
        assert_eq!(ex.coeff(&ep("(11)")), int(-1));
        let ex = expand(&powersum_root(&ep("(11)"), &m, Root::primitive(1)), BasisTag::Schur, 2).unwrap();
        assert_eq!(ex.coeff(&ep("(2)")), int(1));
        assert_eq!(ex.coeff(&ep("(11)")), int(1));
        let a = ep("(1;1)");
        let ex = expand(&schur(&a, &[2, 2]).unwrap(), BasisTag::Schur, 2).unwrap();
        assert_eq!(ex, BasisExpansion::single(BasisTag::Schur, a));
    }

    #[test]
    fn expansion_round_trip_and_json() {
        let m = [3, 3];
        let f = q_product(&ep("(2;1)"), Sign::Minus, &m);
        for basis in [BasisTag::Schur, BasisTag::Monomial, BasisTag::Powersum, BasisTag::Qplus] {
            let ex = expand(&f, basis, 3).unwrap();
            assert_eq!(ex.to_sympoly(&m, Root::primitive(2)).unwrap(), f);
            let js = serde_json::to_string(&ex).unwrap();
            let back: BasisExpansion = serde_json::from_str(&js).unwrap();
            assert_eq!(back, ex);
        }
        let js = serde_json::to_value(expand(&schur(&ep("(21;-)"), &m).unwrap(), BasisTag::Schur, 3).unwrap()).unwrap();
        assert!(js["coeffs"].get("(21;)").is_some());
        assert!(expand(&f, BasisTag::Schur, 2).is_err());
    }

    #[test]
    fn powersum_pairing() {
        for e in 1..=3usize {
            for a in enumerate_epartitions(2, e) {
                for b in enumerate_epartitions(2, e) {
                    let v = scalar_product(
                        &BasisExpansion::single(BasisTag::Powersum, a.clone()),
                        &BasisExpansion::single(BasisTag::Powersum, b.clone()),
                    )
                    .unwrap();
                    if a == b {
                        assert_eq!(v, z_series_root(&a, Root::primitive(e as u32)));
                    } else {
                        assert!(v.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn q_and_m_are_dual() {
        for e in 1..=3usize {
            for n in 1..=2u32 {
                let labels = enumerate_epartitions(n, e);
                for a in &labels {
                    for b in &labels {
                        let q = BasisExpansion::single(BasisTag::Qplus, a.clone());
                        let mb = BasisExpansion::single(BasisTag::Monomial, b.clone());
                        let v = scalar_product(&q, &mb).unwrap();
                        let qm = BasisExpansion::single(BasisTag::Qminus, b.clone());
                        let ma = BasisExpansion::single(BasisTag::Monomial, a.clone());
                        let w = scalar_product(&ma, &qm).unwrap();
                        let expect = if a == b { TRat::one() } else { TRat::zero() };
                        assert_eq!(v, expect, "<q+_{:?}, m_{:?}>", a, b);
                        assert_eq!(w, expect, "<m_{:?}, q-_{:?}>", a, b);
                    }
                }
            }
        }
    }

    #[test]
    fn cauchy_small() {
        let r = cauchy_truncated(1, 1, &[1]).unwrap();
        assert!(r.holds);
        let one_minus_t = TRat::from_poly(TPoly::from_ints(&[1, -1]));
        assert_eq!(r.lhs.coeff(&[1, 1]), one_minus_t);
        assert!(cauchy_truncated(1, 2, &[1, 1]).unwrap().holds);
        assert!(cauchy_truncated(2, 2, &[2, 2]).unwrap().holds);
        assert!(cauchy_truncated(1, 3, &[1, 1, 1]).unwrap().holds);
    }

    #[test]
    fn mixed_degrees_vanish() {
        let a = BasisExpansion::single(BasisTag::Schur, ep("(1;-)"));
        let b = BasisExpansion::single(BasisTag::Schur, ep("(2;-)"));
        assert!(scalar_product(&a, &b).unwrap().is_zero());
    }
}
