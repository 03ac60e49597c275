use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::arith::{CycNum, Mat, Root};
use crate::combinatorics::{enumerate_epartitions, EPartition, Partition};

/// Character table of G(e,1,n): entry (alpha, beta) is chi^alpha(w_beta).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharTable {
    pub root: Root,
    pub n: u32,
    pub rows: Vec<EPartition>,
    pub cols: Vec<EPartition>,
    #[serde(with = "crate::labeled::mat_serde")]
    pub entries: Mat<CycNum>,
}

impl CharTable {
    pub fn e(&self) -> u32 {
        self.root.order()
    }

    pub fn value(&self, alpha: &EPartition, beta: &EPartition) -> Option<&CycNum> {
        let i = self.rows.iter().position(|a| a == alpha)?;
        let j = self.cols.iter().position(|b| b == beta)?;
        Some(self.entries.get(i, j))
    }
}

/// Removes all rim hooks of size r from lam: (remaining partition, leg length parity sign).
fn rim_hooks(lam: &[u32], r: u32) -> Vec<(Partition, i64)> {
    let l = lam.len();
    let beta: Vec<i64> = (0..l).map(|i| lam[i] as i64 + (l - 1 - i) as i64).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        let nb = b - r as i64;
        if nb < 0 || beta.contains(&nb) {
            continue;
        }
        let between = beta.iter().filter(|&&x| nb < x && x < b).count();
        let mut next = beta.clone();
        next[idx] = nb;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let rest: Partition = (0..l)
            .map(|i| (next[i] - (l - 1 - i) as i64) as u32)
            .filter(|&x| x > 0)
            .collect();
        out.push((rest, if between % 2 == 0 { 1 } else { -1 }));
    }
    out
}

struct Mn {
    root: Root,
    memo: HashMap<(EPartition, Vec<(u32, usize)>), CycNum>,
}

impl Mn {
    /// chi^alpha on the class with the given (part, color) list.
    fn value(&mut self, alpha: &EPartition, parts: &[(u32, usize)]) -> CycNum {
        let field = self.root.field;
        let Some((&(r, i), rest)) = parts.split_first() else {
            return if alpha.size() == 0 { CycNum::one(field) } else { CycNum::zero(field) };
        };
        let key = (alpha.clone(), parts.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut acc = CycNum::zero(field);
        for j in 0..alpha.e() {
            for (rest_part, sign) in rim_hooks(alpha.component(j), r) {
                let mut comps = alpha.parts().to_vec();
                comps[j] = rest_part;
                let smaller = EPartition::new(comps).expect("valid");
                let v = self.value(&smaller, rest);
                if v.is_zero() {
                    continue;
                }
                let w = &v * &self.root.pow((i * j) as i64);
                acc = if sign > 0 { &acc + &w } else { &acc - &w };
            }
        }
        self.memo.insert(key, acc.clone());
        acc
    }
}

fn class_parts(beta: &EPartition) -> Vec<(u32, usize)> {
    let mut v: Vec<(u32, usize)> = beta
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(k, p)| p.iter().map(move |&r| (r, k)))
        .collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Character table with the primitive e-th root.
pub fn char_table(e: u32, n: u32) -> CharTable {
    char_table_root(Root::primitive(e), n)
}

/// Character table of G(e',1,n) with e' = root.order(), values written with the given root.
pub fn char_table_root(root: Root, n: u32) -> CharTable {
    let labels = enumerate_epartitions(n, root.order() as usize);
    let mut mn = Mn {
        root,
        memo: HashMap::new(),
    };
    let parts: Vec<Vec<(u32, usize)>> = labels.iter().map(class_parts).collect();
    let entries = Mat::from_fn(labels.len(), labels.len(), |i, j| mn.value(&labels[i], &parts[j]));
    CharTable {
        root,
        n,
        rows: labels.clone(),
        cols: labels,
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::TRat;
    use crate::symfunc::{expand_root, powersum_root, BasisTag};
    use crate::wreath::z_alpha;
    use num_rational::BigRational;

    fn ep(s: &str) -> EPartition {
        EPartition::parse(s).unwrap()
    }

    #[test]
    fn symmetric_group_s3() {
        let t = char_table(1, 3);
        let row: Vec<CycNum> = ["(111)", "(21)", "(3)"]
            .iter()
            .map(|c| t.value(&ep("(21)"), &ep(c)).unwrap().clone())
            .collect();
        assert_eq!(row, vec![CycNum::from_int(1, 2), CycNum::from_int(1, 0), CycNum::from_int(1, -1)]);
        for c in &t.cols {
            assert!(t.value(&ep("(3)"), c).unwrap().is_one());
        }
    }

    #[test]
    fn order_two_group() {
        let t = char_table(2, 1);
        assert_eq!(t.rows, vec![ep("(1;-)"), ep("(-;1)")]);
        let v = |a: &str, b: &str| t.value(&ep(a), &ep(b)).unwrap().clone();
        assert!(v("(1;-)", "(1;-)").is_one());
        assert!(v("(1;-)", "(-;1)").is_one());
        assert!(v("(-;1)", "(1;-)").is_one());
        assert_eq!(v("(-;1)", "(-;1)"), CycNum::from_int(2, -1));
    }

    #[test]
    fn matches_frobenius_expansion() {
        for (e, n) in [(1, 4), (2, 2), (2, 3), (3, 2), (4, 2)] {
            for root in [Root::primitive(e), Root { field: 2 * e, step: 2 }] {
                let t = char_table_root(root, n);
                let m = vec![n; e as usize];
                for (j, beta) in t.cols.iter().enumerate() {
                    let ex = expand_root(&powersum_root(beta, &m, root), BasisTag::Schur, n, root).unwrap();
                    for (i, alpha) in t.rows.iter().enumerate() {
                        assert_eq!(ex.coeff(alpha), TRat::constant(t.entries.get(i, j).clone()), "{:?} {:?}", alpha, beta);
                    }
                }
            }
        }
    }

    #[test]
    fn column_orthogonality() {
        for (e, n) in [(2, 3), (3, 3), (4, 2)] {
            let t = char_table(e, n);
            let k = t.rows.len();
            for a in 0..k {
                for b in 0..k {
                    let mut s = CycNum::zero(e);
                    for i in 0..k {
                        s = &s + &(t.entries.get(i, a) * &t.entries.get(i, b).conj());
                    }
                    let expect = if a == b {
                        CycNum::from_rational(e, BigRational::from_integer(z_alpha(&t.cols[a])))
                    } else {
                        CycNum::zero(e)
                    };
                    assert_eq!(s, expect);
                }
            }
        }
    }
}
