//! Enumeration of G(e,p,n) as monomial matrices, used to check class and character data.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::coset::{char_poly, det_value, z_coset, CosetTable};
use crate::arith::{CycNum, TPoly};
use crate::combinatorics::{enumerate_class_params, ClassParam, GroupParams};
use crate::error::{Error, Result};

/// Largest group the oracle will enumerate.
pub const BRUTE_FORCE_LIMIT: u128 = 1_000_000;

/// w(e_i) = zeta^{col[i]} e_{perm[i]}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Elem {
    pub perm: Vec<u8>,
    pub col: Vec<u8>,
}

impl Elem {
    fn identity(n: usize) -> Elem {
        Elem {
            perm: (0..n as u8).collect(),
            col: vec![0; n],
        }
    }

    /// (self * o)(e_i) = self(o(e_i)).
    pub fn mul(&self, o: &Elem, e: u32) -> Elem {
        let n = self.perm.len();
        let mut perm = vec![0u8; n];
        let mut col = vec![0u8; n];
        for i in 0..n {
            let k = o.perm[i] as usize;
            perm[i] = self.perm[k];
            col[i] = ((o.col[i] as u32 + self.col[k] as u32) % e) as u8;
        }
        Elem { perm, col }
    }

    pub fn inv(&self, e: u32) -> Elem {
        let n = self.perm.len();
        let mut perm = vec![0u8; n];
        let mut col = vec![0u8; n];
        for i in 0..n {
            let k = self.perm[i] as usize;
            perm[k] = i as u8;
            col[k] = ((e - self.col[i] as u32) % e) as u8;
        }
        Elem { perm, col }
    }

    pub fn color_sum(&self, e: u32) -> u32 {
        self.col.iter().map(|&c| c as u32).sum::<u32>() % e
    }

    /// Cycles of the underlying permutation with their color sums.
    pub fn cycles(&self, e: u32) -> Vec<(usize, u32)> {
        let n = self.perm.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let (mut len, mut sum, mut i) = (0, 0, s);
            while !seen[i] {
                seen[i] = true;
                len += 1;
                sum += self.col[i] as u32;
                i = self.perm[i] as usize;
            }
            out.push((len, sum % e));
        }
        out
    }

    pub fn det(&self, e: u32) -> CycNum {
        let n = self.perm.len();
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.perm[i] > self.perm[j] {
                    inversions += 1;
                }
            }
        }
        let z = CycNum::zeta_pow(e, self.color_sum(e) as i64);
        if inversions % 2 == 0 {
            z
        } else {
            -&z
        }
    }

    /// det(t - w) from the cycle decomposition.
    pub fn char_poly(&self, e: u32) -> TPoly {
        let mut acc = TPoly::constant(CycNum::one(e));
        for (len, sum) in self.cycles(e) {
            let f = &TPoly::monomial(CycNum::one(e), len) - &TPoly::constant(CycNum::zeta_pow(e, sum as i64));
            acc = &acc * &f;
        }
        acc
    }
}

/// The representative w_beta(b): one cycle per part; the first cycle carries the twist by b.
pub fn class_rep(xi: &ClassParam, e: u32) -> Elem {
    let n = xi.beta.size() as usize;
    let mut w = Elem::identity(n);
    let mut start = 0;
    let mut first = true;
    for (k, part) in xi.beta.parts().iter().enumerate() {
        for &a in part {
            let a = a as usize;
            let end = start + a - 1;
            for i in start..end {
                w.perm[i] = (i + 1) as u8;
            }
            w.perm[end] = start as u8;
            let k = k as u32;
            if first && a > 1 {
                w.col[end] = ((k + e - xi.b % e) % e) as u8;
                w.col[end - 1] = (xi.b % e) as u8;
            } else {
                w.col[end] = k as u8;
            }
            first = false;
            start += a;
        }
    }
    w
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    fn rec(k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    rec(0, &mut cur, &mut out);
    out
}

/// All elements w with color sum congruent to `residue` mod p.
fn elements(params: &GroupParams, residue: u32) -> Vec<Elem> {
    let n = params.n as usize;
    let e = params.e;
    let perms = permutations(n);
    let mut out = Vec::new();
    let total = (e as usize).pow(n as u32);
    for perm in &perms {
        for mut code in 0..total {
            let mut col = vec![0u8; n];
            for c in col.iter_mut() {
                *c = (code % e as usize) as u8;
                code /= e as usize;
            }
            let s: u32 = col.iter().map(|&c| c as u32).sum();
            if s % params.p == residue % params.p {
                out.push(Elem { perm: perm.clone(), col });
            }
        }
    }
    out
}

fn generators(params: &GroupParams) -> Vec<Elem> {
    let n = params.n as usize;
    let mut gens = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut g = Elem::identity(n);
        g.perm.swap(i, i + 1);
        gens.push(g);
    }
    if params.p < params.e {
        let mut g = Elem::identity(n);
        g.col[0] = params.p as u8;
        gens.push(g);
    }
    if n >= 2 {
        let mut g = Elem::identity(n);
        g.col[0] = (params.e - 1) as u8;
        g.col[1] = 1;
        gens.push(g);
    }
    gens
}

/// Orbits of W acting by conjugation on a W-stable set.
fn orbits(set: &[Elem], gens: &[Elem], e: u32) -> (HashMap<Elem, usize>, Vec<usize>) {
    let mut label: HashMap<Elem, usize> = HashMap::with_capacity(set.len());
    let mut sizes = Vec::new();
    let inv: Vec<Elem> = gens.iter().map(|g| g.inv(e)).collect();
    for x in set {
        if label.contains_key(x) {
            continue;
        }
        let id = sizes.len();
        let mut stack = vec![x.clone()];
        label.insert(x.clone(), id);
        let mut size = 1;
        while let Some(y) = stack.pop() {
            for (g, gi) in gens.iter().zip(&inv) {
                let c = g.mul(&y, e).mul(gi, e);
                if !label.contains_key(&c) {
                    label.insert(c.clone(), id);
                    stack.push(c);
                    size += 1;
                }
            }
        }
        sizes.push(size);
    }
    (label, sizes)
}

/// Conjugacy data of W and of its action on sigma^q W.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupReport {
    pub params: GroupParams,
    pub order: usize,
    /// Conjugacy class sizes of W.
    pub class_sizes: Vec<usize>,
    /// W-orbit sizes on sigma^q W.
    pub coset_orbit_sizes: Vec<usize>,
    pub class_params: Vec<ClassParam>,
    /// The orbit containing w_beta(b) for each class parameter.
    pub param_orbits: Vec<usize>,
    /// |W| / |orbit| per class parameter.
    pub centralizers: Vec<usize>,
    /// Structure constants a[i][j][k] of W (q = 0 only): pairs in C_i x C_j with product the representative of C_k.
    #[serde(skip)]
    pub structure: Vec<Vec<Vec<u64>>>,
    #[serde(skip)]
    reps: Vec<Elem>,
}

pub fn brute_force_oracle(params: &GroupParams) -> Result<GroupReport> {
    let order = params.group_order();
    if order > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeLimit(format!(
            "|W| = {} exceeds the brute-force limit {}",
            order, BRUTE_FORCE_LIMIT
        )));
    }
    let e = params.e;
    let w = elements(params, 0);
    let gens = generators(params);
    let (wlabel, class_sizes) = orbits(&w, &gens, e);
    let coset = if params.q % params.p == 0 { w.clone() } else { elements(params, params.q) };
    let (clabel, coset_orbit_sizes) = orbits(&coset, &gens, e);
    let class_params = enumerate_class_params(params);
    let reps: Vec<Elem> = class_params.iter().map(|xi| class_rep(xi, e)).collect();
    let param_orbits: Vec<usize> = reps
        .iter()
        .map(|r| clabel.get(r).copied().ok_or_else(|| Error::Invariant(format!("{:?} is not in the coset", r))))
        .collect::<Result<_>>()?;
    let centralizers = param_orbits.iter().map(|&o| w.len() / coset_orbit_sizes[o]).collect();
    let mut structure = Vec::new();
    if params.q % params.p == 0 {
        let k = class_sizes.len();
        structure = vec![vec![vec![0u64; k]; k]; k];
        let mut class_reps: Vec<Option<Elem>> = vec![None; k];
        for x in &w {
            let c = wlabel[x];
            if class_reps[c].is_none() {
                class_reps[c] = Some(x.clone());
            }
        }
        for (kk, z) in class_reps.iter().enumerate() {
            let z = z.as_ref().expect("nonempty class");
            for x in &w {
                let y = x.inv(e).mul(z, e);
                structure[wlabel[x]][wlabel[&y]][kk] += 1;
            }
        }
    }
    Ok(GroupReport {
        params: *params,
        order: w.len(),
        class_sizes,
        coset_orbit_sizes,
        class_params,
        param_orbits,
        centralizers,
        structure,
        reps,
    })
}

impl GroupReport {
    /// Failures of the class-parameter data: bijection with orbits, centralizers, determinants.
    pub fn check_classes(&self) -> Vec<String> {
        let mut bad = Vec::new();
        let e = self.params.e;
        let mut seen = vec![false; self.coset_orbit_sizes.len()];
        for &o in &self.param_orbits {
            if std::mem::replace(&mut seen[o], true) {
                bad.push(format!("two class parameters share orbit {}", o));
            }
        }
        if self.param_orbits.len() != self.coset_orbit_sizes.len() {
            bad.push(format!(
                "{} class parameters for {} orbits",
                self.param_orbits.len(),
                self.coset_orbit_sizes.len()
            ));
        }
        for (i, xi) in self.class_params.iter().enumerate() {
            let z = z_coset(xi, &self.params).centralizer;
            if z != BigInt::from(self.centralizers[i]) {
                bad.push(format!("centralizer of {:?}: formula {} but counted {}", xi, z, self.centralizers[i]));
            }
            if self.reps[i].det(e) != det_value(xi, &self.params) {
                bad.push(format!("determinant of {:?}", xi));
            }
            if self.reps[i].char_poly(e) != char_poly(xi, e) {
                bad.push(format!("characteristic polynomial of {:?}", xi));
            }
        }
        bad
    }

    /// Failures of the table: each row must be an irreducible character of W (q = 0), or of
    /// norm one on the coset otherwise.
    pub fn check_table(&self, table: &CosetTable) -> Vec<String> {
        let mut bad = Vec::new();
        let e = self.params.e;
        if table.cols != self.class_params {
            bad.push("table columns differ from the class parameters".into());
            return bad;
        }
        let k = self.coset_orbit_sizes.len();
        if table.rows.len() != k {
            bad.push(format!("{} rows for {} orbits", table.rows.len(), k));
        }
        // values[z][orbit]
        let mut values = vec![vec![CycNum::zero(e); k]; table.rows.len()];
        for (xi, &o) in self.param_orbits.iter().enumerate() {
            for (z, row) in values.iter_mut().enumerate() {
                row[o] = table.entries.get(z, xi).clone();
            }
        }
        for (z, row) in values.iter().enumerate() {
            let label = format!("{:?}", table.rows[z]);
            let mut norm = CycNum::zero(e);
            for (o, v) in row.iter().enumerate() {
                let size = CycNum::from_int(e, self.coset_orbit_sizes[o] as i64);
                norm = &norm + &(&(v * &v.conj()) * &size);
            }
            if norm != CycNum::from_int(e, self.order as i64) {
                bad.push(format!("{} does not have norm one", label));
            }
            if !self.structure.is_empty() {
                let id = self.param_orbits[self
                    .class_params
                    .iter()
                    .position(|xi| xi.beta.parts()[0].iter().all(|&x| x == 1) && xi.beta.parts()[0].len() == self.params.n as usize)
                    .expect("identity class")];
                let deg = row[id].as_rational().cloned();
                match deg {
                    Some(d) if d > BigRational::from_integer(0.into()) => {
                        let dinv = CycNum::from_rational(e, d.recip());
                        let omega: Vec<CycNum> = (0..k)
                            .map(|o| &(&row[o] * &CycNum::from_int(e, self.class_sizes[o] as i64)) * &dinv)
                            .collect();
                        'outer: for i in 0..k {
                            for j in 0..k {
                                let lhs = &omega[i] * &omega[j];
                                let mut rhs = CycNum::zero(e);
                                for (kk, om) in omega.iter().enumerate() {
                                    let a = self.structure[i][j][kk];
                                    if a != 0 {
                                        rhs = &rhs + &(om * &CycNum::from_int(e, a as i64));
                                    }
                                }
                                if lhs != rhs {
                                    bad.push(format!("{} is not a central character", label));
                                    break 'outer;
                                }
                            }
                        }
                    }
                    _ => bad.push(format!("{} has no positive degree", label)),
                }
            }
        }
        for a in 0..values.len() {
            for b in a + 1..values.len() {
                if values[a] == values[b] {
                    bad.push(format!("rows {:?} and {:?} coincide", table.rows[a], table.rows[b]));
                }
            }
        }
        bad
    }
}
