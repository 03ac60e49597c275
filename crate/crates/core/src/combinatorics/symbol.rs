use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::params::{enumerate_char_params, CharParam, GroupParams};
use super::partition::EPartition;
use crate::error::{Error, Result};

/// An e-symbol of type (r,0): alpha plus the staircase, row by row.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Symbol {
    pub rows: Vec<Vec<u32>>,
    pub r: u32,
    pub m: Vec<u32>,
}

/// Lambda = alpha + Lambda^0 with Lambda^0 row k = ((m_k - 1) r, ..., r, 0).
pub fn make_symbol(alpha: &EPartition, m: &[u32], r: u32) -> Result<Symbol> {
    if m.len() != alpha.e() {
        return Err(Error::InvalidParameter(format!(
            "need {} row lengths, got {}",
            alpha.e(),
            m.len()
        )));
    }
    let mut rows = Vec::with_capacity(m.len());
    for (k, &mk) in m.iter().enumerate() {
        let part = alpha.component(k);
        if part.len() > mk as usize {
            return Err(Error::InvalidParameter(format!(
                "component {} has {} parts but the row has {} entries",
                k,
                part.len(),
                mk
            )));
        }
        let row = (0..mk)
            .map(|i| part.get(i as usize).copied().unwrap_or(0) + (mk - 1 - i) * r)
            .collect();
        rows.push(row);
    }
    Ok(Symbol { rows, r, m: m.to_vec() })
}

impl Symbol {
    /// All entries, sorted weakly decreasing.
    pub fn entries(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.rows.iter().flatten().copied().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    fn staircase(&self) -> Symbol {
        make_symbol(&EPartition::empty(self.m.len()), &self.m, self.r).expect("valid")
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.rows.iter().flatten().any(|&x| x > 9);
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                let s: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                s.join(if wide { "," } else { "" })
            })
            .collect();
        write!(f, "({})", rows.join(";"))
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn weighted(entries: &[u32]) -> u64 {
    entries.iter().enumerate().map(|(i, &x)| i as u64 * x as u64).sum()
}

/// a(Lambda): sum over unordered pairs of distinct positions of the minimum, minus the same for Lambda^0.
pub fn a_value(sym: &Symbol) -> u64 {
    weighted(&sym.entries()) - weighted(&sym.staircase().entries())
}

/// Entries multiset and a-value of the symbol of alpha with m_k = n for all k.
pub fn symbol_data(alpha: &EPartition, r: u32) -> (Vec<u32>, u64) {
    let n = alpha.size().max(1);
    let sym = make_symbol(alpha, &vec![n; alpha.e()], r).expect("m_k = n suffices");
    (sym.entries(), a_value(&sym))
}

/// The total order: larger a first, then entry multiset, then representative (larger first), then label.
pub fn order_cmp(a: (&EPartition, u32), b: (&EPartition, u32), r: u32) -> Ordering {
    let (ea, aa) = symbol_data(a.0, r);
    let (eb, ab) = symbol_data(b.0, r);
    ab.cmp(&aa)
        .then_with(|| ea.cmp(&eb))
        .then_with(|| b.0.weight_cmp(a.0))
        .then_with(|| a.1.cmp(&b.1))
}

/// Items arranged in the total order and cut into similarity classes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimilarityPartition<T> {
    pub items: Vec<T>,
    /// Intervals [start, end) of `items`.
    pub classes: Vec<(usize, usize)>,
    pub a_values: Vec<u64>,
}

impl<T> SimilarityPartition<T> {
    /// a-value of the item at position i.
    pub fn a_of(&self, i: usize) -> u64 {
        let k = self.class_of(i);
        self.a_values[k]
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.classes
            .iter()
            .position(|&(s, e)| s <= i && i < e)
            .expect("index in range")
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|(s, e)| e - s).collect()
    }
}

/// Sorts items by the total order and groups them by entry multiset.
pub fn similarity_partition<T: Clone>(
    items: &[T],
    key: impl Fn(&T) -> (&EPartition, u32),
    r: u32,
) -> SimilarityPartition<T> {
    let mut sorted: Vec<T> = items.to_vec();
    sorted.sort_by(|a, b| order_cmp(key(a), key(b), r));
    let data: Vec<(Vec<u32>, u64)> = sorted.iter().map(|x| symbol_data(key(x).0, r)).collect();
    let mut classes = Vec::new();
    let mut a_values = Vec::new();
    let mut start = 0;
    for i in 1..=sorted.len() {
        if i == sorted.len() || data[i].0 != data[start].0 {
            classes.push((start, i));
            a_values.push(data[start].1);
            start = i;
        }
    }
    SimilarityPartition {
        items: sorted,
        classes,
        a_values,
    }
}

/// Character parameters of sigma^q W in the order used for all matrices.
pub fn similarity_order(params: &GroupParams, r: u32) -> SimilarityPartition<CharParam> {
    similarity_partition(&enumerate_char_params(params), |z| (&z.alpha, z.phi), r)
}

/// e-partitions of n (the G(e,1,n) case) in the same order.
pub fn similarity_order_epartitions(list: &[EPartition], r: u32) -> SimilarityPartition<EPartition> {
    similarity_partition(list, |a| (a, 0), r)
}
