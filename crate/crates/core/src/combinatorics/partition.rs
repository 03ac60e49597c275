use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing positive parts.
pub type Partition = Vec<u32>;

/// All partitions of n, largest first part first, each block in reverse lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, cur: &mut Partition, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=max.min(n)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Centralizer order z_lambda = prod_i i^{m_i} m_i! in the symmetric group.
pub fn z_partition(lam: &[u32]) -> u128 {
    let mut z: u128 = 1;
    let mut i = 0;
    while i < lam.len() {
        let mut j = i;
        while j < lam.len() && lam[j] == lam[i] {
            j += 1;
        }
        let m = (j - i) as u128;
        for k in 1..=m {
            z *= k * lam[i] as u128;
        }
        i = j;
    }
    z
}

/// An e-tuple of partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EPartition {
    parts: Vec<Partition>,
}

impl EPartition {
    pub fn new(mut parts: Vec<Partition>) -> Result<EPartition> {
        if parts.is_empty() {
            return Err(Error::InvalidParameter("an e-partition needs e >= 1 components".into()));
        }
        for p in parts.iter_mut() {
            p.retain(|&x| x > 0);
            if p.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidParameter(format!("component {:?} is not weakly decreasing", p)));
            }
        }
        Ok(EPartition { parts })
    }

    pub fn empty(e: usize) -> EPartition {
        EPartition { parts: vec![Vec::new(); e] }
    }

    pub fn e(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[Partition] {
        &self.parts
    }

    pub fn component(&self, k: usize) -> &Partition {
        &self.parts[k]
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().flatten().sum()
    }

    /// l(alpha), total number of parts.
    pub fn length(&self) -> usize {
        self.parts.iter().map(|p| p.len()).sum()
    }

    /// Number of trailing empty components.
    pub fn trailing_empty(&self) -> usize {
        self.parts.iter().rev().take_while(|p| p.is_empty()).count()
    }

    /// Order used for representatives and tie-breaking: components compared by (size, parts).
    pub fn weight_cmp(&self, other: &EPartition) -> Ordering {
        for (a, b) in self.parts.iter().zip(&other.parts) {
            let sa: u32 = a.iter().sum();
            let sb: u32 = b.iter().sum();
            match sa.cmp(&sb).then_with(|| a.cmp(b)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    /// Compact key such as "(21;;1)"; parts are comma separated when any exceeds 9.
    pub fn key(&self) -> String {
        let wide = self.parts.iter().flatten().any(|&x| x > 9);
        let comps: Vec<String> = self
            .parts
            .iter()
            .map(|p| {
                let s: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                s.join(if wide { "," } else { "" })
            })
            .collect();
        format!("({})", comps.join(";"))
    }

    /// Label with multiplicities as exponents and empty components as "-", e.g. "(1^2;1;-)".
    pub fn label(&self) -> String {
        let comps: Vec<String> = self
            .parts
            .iter()
            .map(|p| {
                if p.is_empty() {
                    return "-".to_string();
                }
                let wide = p.iter().any(|&x| x > 9);
                let mut out = Vec::new();
                let mut i = 0;
                while i < p.len() {
                    let mut j = i;
                    while j < p.len() && p[j] == p[i] {
                        j += 1;
                    }
                    if j - i > 1 {
                        out.push(format!("{}^{}", p[i], j - i));
                    } else {
                        out.push(p[i].to_string());
                    }
                    i = j;
                }
                let needs_sep = wide || out.iter().any(|s| s.contains('^'));
                out.join(if needs_sep && out.len() > 1 { "," } else { "" })
            })
            .collect();
        format!("({})", comps.join(";"))
    }

    /// Parses the forms produced by `key` and `label`.
    pub fn parse(s: &str) -> Result<EPartition> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected parentheses in {:?}", s)))?;
        let mut parts = Vec::new();
        for comp in inner.split(';') {
            let comp = comp.trim();
            let mut p: Partition = Vec::new();
            if !(comp.is_empty() || comp == "-") {
                let tokens: Vec<&str> = if comp.contains(',') || comp.contains('^') {
                    comp.split(',').collect()
                } else {
                    comp.split("").filter(|x| !x.is_empty()).collect()
                };
                for tok in tokens {
                    let (base, mult) = match tok.split_once('^') {
                        Some((b, m)) => (b, m),
                        None => (tok, "1"),
                    };
                    let b: u32 = base.parse().map_err(|_| Error::Parse(format!("bad part {:?}", tok)))?;
                    let m: usize = mult.parse().map_err(|_| Error::Parse(format!("bad exponent {:?}", tok)))?;
                    p.extend(std::iter::repeat_n(b, m));
                }
            }
            parts.push(p);
        }
        EPartition::new(parts)
    }
}

impl fmt::Debug for EPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

impl fmt::Display for EPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// All e-partitions of n in a fixed order.
pub fn enumerate_epartitions(n: u32, e: usize) -> Vec<EPartition> {
    fn compositions(n: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 1 {
            cur.push(n);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in (0..=n).rev() {
            cur.push(a);
            compositions(n - a, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut comps = Vec::new();
    compositions(n, e, &mut Vec::new(), &mut comps);
    fn product(lists: &[Vec<Partition>], cur: &mut Vec<Partition>, out: &mut Vec<EPartition>) {
        match lists.split_first() {
            None => out.push(EPartition { parts: cur.clone() }),
            Some((first, rest)) => {
                for p in first {
                    cur.push(p.clone());
                    product(rest, cur, out);
                    cur.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    for sizes in comps {
        let lists: Vec<Vec<Partition>> = sizes.iter().map(|&s| partitions(s)).collect();
        product(&lists, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(enumerate_epartitions(0, 3).len(), 1);
        assert_eq!(enumerate_epartitions(2, 2).len(), 5);
        assert_eq!(enumerate_epartitions(3, 3).len(), 22);
    }

    #[test]
    fn centralizers() {
        assert_eq!(z_partition(&[1, 1, 1]), 6);
        assert_eq!(z_partition(&[2, 1]), 2);
        assert_eq!(z_partition(&[2, 2]), 8);
    }

    #[test]
    fn labels_roundtrip() {
        let a = EPartition::new(vec![vec![2, 1], vec![], vec![1]]).unwrap();
        assert_eq!(a.key(), "(21;;1)");
        assert_eq!(a.label(), "(21;-;1)");
        assert_eq!(EPartition::parse("(21;;1)").unwrap(), a);
        let b = EPartition::new(vec![vec![1, 1], vec![1], vec![]]).unwrap();
        assert_eq!(b.label(), "(1^2;1;-)");
        assert_eq!(EPartition::parse(&b.label()).unwrap(), b);
        let c = EPartition::new(vec![vec![2, 1, 1], vec![]]).unwrap();
        assert_eq!(EPartition::parse(&c.label()).unwrap(), c);
        let w = EPartition::new(vec![vec![12, 3], vec![]]).unwrap();
        assert_eq!(EPartition::parse(&w.key()).unwrap(), w);
    }
}
