use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{CycNum, TRat};

/// Sparse polynomial in colored variables x_i^(k), 1 <= i <= m_k, with TRat coefficients.
///
/// Exponent vectors are flattened color by color.
#[derive(Clone, PartialEq)]
pub struct SymPoly {
    m: Vec<u32>,
    terms: BTreeMap<Vec<u16>, TRat>,
}

impl SymPoly {
    pub fn zero(m: &[u32]) -> SymPoly {
        SymPoly {
            m: m.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(m: &[u32], c: TRat) -> SymPoly {
        let mut p = SymPoly::zero(m);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.nvars()], c);
        }
        p
    }

    pub fn one(m: &[u32]) -> SymPoly {
        SymPoly::constant(m, TRat::one())
    }

    /// The single variable x_i^(k), i zero-based.
    pub fn var(m: &[u32], k: usize, i: usize) -> SymPoly {
        let mut p = SymPoly::zero(m);
        let mut ex = vec![0u16; p.nvars()];
        ex[p.offset(k) + i] = 1;
        p.terms.insert(ex, TRat::one());
        p
    }

    pub fn e(&self) -> usize {
        self.m.len()
    }

    pub fn m(&self) -> &[u32] {
        &self.m
    }

    pub fn nvars(&self) -> usize {
        self.m.iter().sum::<u32>() as usize
    }

    pub fn offset(&self, k: usize) -> usize {
        self.m[..k].iter().sum::<u32>() as usize
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u16>, TRat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, ex: &[u16]) -> TRat {
        self.terms.get(ex).cloned().unwrap_or_else(TRat::zero)
    }

    pub fn add_term(&mut self, ex: Vec<u16>, c: TRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&ex) {
            Some(v) => {
                let s = &*v + &c;
                if s.is_zero() {
                    self.terms.remove(&ex);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(ex, c);
            }
        }
    }

    pub fn add(&self, o: &SymPoly) -> SymPoly {
        assert_eq!(self.m, o.m, "variable sets differ");
        let mut r = self.clone();
        for (ex, c) in &o.terms {
            r.add_term(ex.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &SymPoly) -> SymPoly {
        self.add(&o.scale(&TRat::from_int(-1)))
    }

    pub fn scale(&self, c: &TRat) -> SymPoly {
        if c.is_zero() {
            return SymPoly::zero(&self.m);
        }
        SymPoly {
            m: self.m.clone(),
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn scale_cyc(&self, c: &CycNum) -> SymPoly {
        self.scale(&TRat::constant(c.clone()))
    }

    pub fn mul(&self, o: &SymPoly) -> SymPoly {
        assert_eq!(self.m, o.m, "variable sets differ");
        let mut r = SymPoly::zero(&self.m);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let ex: Vec<u16> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                r.add_term(ex, ca * cb);
            }
        }
        r
    }

    pub fn pow(&self, k: u32) -> SymPoly {
        let mut acc = SymPoly::one(&self.m);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Conjugates coefficients; variables and t are fixed.
    pub fn conj(&self) -> SymPoly {
        SymPoly {
            m: self.m.clone(),
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v.conj())).collect(),
        }
    }

    /// The polynomial in the union of both variable sets (colors of `self` first).
    pub fn tensor(&self, o: &SymPoly) -> SymPoly {
        let mut m = self.m.clone();
        m.extend_from_slice(&o.m);
        let mut r = SymPoly::zero(&m);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let mut ex = ea.clone();
                ex.extend_from_slice(eb);
                r.add_term(ex, ca * cb);
            }
        }
        r
    }

    /// Regards `self` as living in the first block of a larger variable set.
    pub fn embed_left(&self, extra: &[u32]) -> SymPoly {
        self.tensor(&SymPoly::one(extra))
    }

    /// Regards `self` as living in the second block of a larger variable set.
    pub fn embed_right(&self, extra: &[u32]) -> SymPoly {
        SymPoly::one(extra).tensor(self)
    }

    /// Total degree of each term, if homogeneous.
    pub fn degree(&self) -> Option<u32> {
        let mut d = None;
        for ex in self.terms.keys() {
            let s: u32 = ex.iter().map(|&x| x as u32).sum();
            match d {
                None => d = Some(s),
                Some(v) if v != s => return None,
                _ => {}
            }
        }
        d
    }

    /// Whether invariant under permuting variables within each color.
    pub fn is_symmetric(&self) -> bool {
        for (ex, c) in &self.terms {
            for k in 0..self.e() {
                let off = self.offset(k);
                for i in 0..(self.m[k] as usize).saturating_sub(1) {
                    let mut sw = ex.clone();
                    sw.swap(off + i, off + i + 1);
                    if &self.coeff(&sw) != c {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymPoly{:?}{{", self.m)?;
        for (ex, c) in &self.terms {
            write!(f, " [{}]{:?}", c, ex)?;
        }
        write!(f, " }}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_basics() {
        let m = [2, 1];
        let x = SymPoly::var(&m, 0, 0);
        let y = SymPoly::var(&m, 0, 1);
        let s = x.add(&y);
        let sq = s.mul(&s);
        assert_eq!(sq.terms().len(), 3);
        assert_eq!(sq.coeff(&[1, 1, 0]), TRat::from_int(2));
        assert!(sq.is_symmetric());
        assert!(!x.is_symmetric());
        assert_eq!(sq.degree(), Some(2));
        assert!(s.sub(&s).is_zero());
    }

    #[test]
    fn tensor_layout() {
        let a = SymPoly::var(&[1], 0, 0);
        let b = SymPoly::var(&[2], 0, 1);
        let t = a.tensor(&b);
        assert_eq!(t.m(), &[1, 2]);
        assert_eq!(t.coeff(&[1, 0, 1]), TRat::one());
    }
}
