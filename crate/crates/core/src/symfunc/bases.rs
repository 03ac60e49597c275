use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::sympoly::SymPoly;
use crate::arith::{CycNum, Root, TPoly, TRat};
use crate::combinatorics::EPartition;
use crate::error::{Error, Result};

/// Sign of the q and Hall-Littlewood families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(&self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    /// Color coupled with color k in q_{r,sign}^(k).
    pub fn partner(&self, k: usize, e: usize) -> usize {
        match self {
            Sign::Plus => (k + e - 1) % e,
            Sign::Minus => (k + 1) % e,
        }
    }
}

/// Exponent-count map for a single color in `m` variables.
type Block = BTreeMap<Vec<u16>, i64>;

fn ssyt_content(lam: &[u32], m: usize) -> Block {
    let cells: Vec<(usize, usize)> = lam
        .iter()
        .enumerate()
        .flat_map(|(i, &l)| (0..l as usize).map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<usize>> = lam.iter().map(|&l| vec![0; l as usize]).collect();
    let mut out = Block::new();
    fn rec(idx: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, m: usize, out: &mut Block) {
        if idx == cells.len() {
            let mut ex = vec![0u16; m];
            for row in grid.iter() {
                for &v in row {
                    ex[v] += 1;
                }
            }
            *out.entry(ex).or_insert(0) += 1;
            return;
        }
        let (i, j) = cells[idx];
        let lo_left = if j > 0 { grid[i][j - 1] } else { 0 };
        let lo_up = if i > 0 { grid[i - 1][j] + 1 } else { 0 };
        for v in lo_left.max(lo_up)..m {
            grid[i][j] = v;
            rec(idx + 1, cells, grid, m, out);
        }
    }
    rec(0, &cells, &mut grid, m, &mut out);
    out
}

fn monomial_block(lam: &[u32], m: usize) -> Block {
    let mut base: Vec<u16> = lam.iter().map(|&x| x as u16).collect();
    base.resize(m, 0);
    base.sort_unstable();
    let mut out = Block::new();
    // next_permutation over the multiset
    loop {
        out.insert(base.clone(), 1);
        let Some(i) = (0..m.saturating_sub(1)).rev().find(|&i| base[i] < base[i + 1]) else {
            break;
        };
        let j = (i + 1..m).rev().find(|&j| base[j] > base[i]).expect("exists");
        base.swap(i, j);
        base[i + 1..].reverse();
    }
    out
}

fn complete_block(a: u32, m: usize) -> Block {
    let mut out = Block::new();
    fn rec(i: usize, left: u16, cur: &mut Vec<u16>, out: &mut Block) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.insert(cur.clone(), 1);
            return;
        }
        for v in 0..=left {
            cur[i] = v;
            rec(i + 1, left - v, cur, out);
        }
        cur[i] = 0;
    }
    if m == 0 {
        if a == 0 {
            out.insert(Vec::new(), 1);
        }
        return out;
    }
    rec(0, a as u16, &mut vec![0; m], &mut out);
    out
}

fn elementary_block(b: u32, m: usize) -> Block {
    if b as usize > m {
        return Block::new();
    }
    monomial_block(&vec![1u32; b as usize], m)
}

fn power_block(r: u32, m: usize) -> Block {
    (0..m)
        .map(|i| {
            let mut ex = vec![0u16; m];
            ex[i] = r as u16;
            (ex, 1)
        })
        .collect()
}

/// Places a single-color block into color k of the full variable set.
fn place(block: &Block, k: usize, m: &[u32], coeff: &TRat) -> SymPoly {
    let mut p = SymPoly::zero(m);
    let off = p.offset(k);
    let total = p.nvars();
    for (ex, &c) in block {
        let mut full = vec![0u16; total];
        full[off..off + ex.len()].copy_from_slice(ex);
        p.add_term(full, coeff.scale(&CycNum::from_int(1, c)));
    }
    p
}

fn check_lengths(alpha: &EPartition, m: &[u32]) -> Result<()> {
    if alpha.e() != m.len() {
        return Err(Error::InvalidParameter(format!(
            "{} colors but {} variable counts",
            alpha.e(),
            m.len()
        )));
    }
    for (k, p) in alpha.parts().iter().enumerate() {
        if p.len() > m[k] as usize {
            return Err(Error::InvalidParameter(format!(
                "component {} of {} has more than {} parts",
                k,
                alpha.label(),
                m[k]
            )));
        }
    }
    Ok(())
}

/// s_alpha = prod_k s_{alpha^(k)}(x^(k)).
pub fn schur(alpha: &EPartition, m: &[u32]) -> Result<SymPoly> {
    check_lengths(alpha, m)?;
    let mut acc = SymPoly::one(m);
    for (k, lam) in alpha.parts().iter().enumerate() {
        if lam.is_empty() {
            continue;
        }
        acc = acc.mul(&place(&ssyt_content(lam, m[k] as usize), k, m, &TRat::one()));
    }
    Ok(acc)
}

/// m_alpha = prod_k m_{alpha^(k)}(x^(k)).
pub fn monomial(alpha: &EPartition, m: &[u32]) -> Result<SymPoly> {
    check_lengths(alpha, m)?;
    let mut acc = SymPoly::one(m);
    for (k, lam) in alpha.parts().iter().enumerate() {
        if lam.is_empty() {
            continue;
        }
        acc = acc.mul(&place(&monomial_block(lam, m[k] as usize), k, m, &TRat::one()));
    }
    Ok(acc)
}

/// p_r^(i) = sum_j root^{ij} p_r(x^(j)).
pub fn powersum_row(r: u32, i: usize, m: &[u32], root: Root) -> SymPoly {
    let mut acc = SymPoly::zero(m);
    for j in 0..m.len() {
        let c = TRat::constant(root.pow((i * j) as i64));
        acc = acc.add(&place(&power_block(r, m[j] as usize), j, m, &c));
    }
    acc
}

/// p_alpha with the primitive root of order e.
pub fn powersum(alpha: &EPartition, m: &[u32]) -> SymPoly {
    powersum_root(alpha, m, Root::primitive(alpha.e() as u32))
}

/// p_alpha = prod_k prod_j p^(k)_{alpha_j^(k)} for an arbitrary root of order e.
pub fn powersum_root(alpha: &EPartition, m: &[u32], root: Root) -> SymPoly {
    let mut acc = SymPoly::one(m);
    for (k, lam) in alpha.parts().iter().enumerate() {
        for &r in lam {
            acc = acc.mul(&powersum_row(r, k, m, root));
        }
    }
    acc
}

/// Coefficient of y^r in prod_i (1 - t x_i^(k') y) / prod_i (1 - x_i^(k) y), k' = sign.partner(k).
pub fn q_row(r: u32, k: usize, sign: Sign, m: &[u32]) -> SymPoly {
    if r == 0 {
        return SymPoly::one(m);
    }
    let kp = sign.partner(k, m.len());
    let mut acc = SymPoly::zero(m);
    for b in 0..=r {
        let a = r - b;
        let coeff = TRat::from_poly(TPoly::monomial(CycNum::from_int(1, if b % 2 == 0 { 1 } else { -1 }), b as usize));
        let h = place(&complete_block(a, m[k] as usize), k, m, &TRat::one());
        let eb = place(&elementary_block(b, m[kp] as usize), kp, m, &coeff);
        acc = acc.add(&h.mul(&eb));
    }
    acc
}

/// q_{alpha,sign} = prod_k prod_j q_{alpha_j^(k),sign}^(k).
pub fn q_product(alpha: &EPartition, sign: Sign, m: &[u32]) -> SymPoly {
    let mut acc = SymPoly::one(m);
    for (k, lam) in alpha.parts().iter().enumerate() {
        for &r in lam {
            acc = acc.mul(&q_row(r, k, sign, m));
        }
    }
    acc
}

impl SymPoly {
    /// theta^s: the variable x_i^(k) is replaced by x_i^(k+s); needs equal counts per color.
    pub fn shift_colors(&self, s: usize) -> SymPoly {
        let e = self.e();
        assert!(self.m().windows(2).all(|w| w[0] == w[1]), "shift needs equal variable counts");
        let mk = self.m().first().copied().unwrap_or(0) as usize;
        let mut r = SymPoly::zero(self.m());
        for (ex, c) in self.terms() {
            let mut out = vec![0u16; ex.len()];
            for k in 0..e {
                let to = (k + s) % e;
                out[to * mk..(to + 1) * mk].copy_from_slice(&ex[k * mk..(k + 1) * mk]);
            }
            r.add_term(out, c.clone());
        }
        r
    }

    /// Value at a point (variables flattened color by color) and a value of t.
    pub fn eval(&self, x: &[CycNum], t: &CycNum) -> Result<CycNum> {
        let e = t.order();
        let mut acc = CycNum::zero(e);
        for (ex, c) in self.terms() {
            let num = c.num().eval(t);
            let den = c.den().eval(t);
            let mut v = &num * &den.inv()?;
            for (xi, &k) in x.iter().zip(ex) {
                if k > 0 {
                    v = &v * &xi.pow(k as u32);
                }
            }
            acc = &acc + &v;
        }
        Ok(acc)
    }
}
