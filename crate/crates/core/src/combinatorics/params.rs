use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::partition::{enumerate_epartitions, EPartition};
use crate::arith::CycNum;
use crate::error::{Error, Result};

/// Parameters of W = G(e,p,n) together with the coset label q of sigma^q W.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupParams {
    pub e: u32,
    pub p: u32,
    pub n: u32,
    pub q: u32,
}

impl GroupParams {
    pub fn new(e: u32, p: u32, n: u32, q: u32) -> Result<GroupParams> {
        if e == 0 || p == 0 {
            return Err(Error::InvalidParameter("e and p must be positive".into()));
        }
        if n == 0 {
            return Err(Error::InvalidParameter("n must be positive".into()));
        }
        if e % p != 0 {
            return Err(Error::InvalidParameter(format!("p = {} does not divide e = {}", p, e)));
        }
        if q != 0 {
            if e % q != 0 {
                return Err(Error::InvalidParameter(format!("q = {} does not divide e = {}", q, e)));
            }
            if (e / q).gcd(&(e / p)) != 1 {
                return Err(Error::InvalidParameter(format!(
                    "e/q = {} and e/p = {} are not coprime",
                    e / q,
                    e / p
                )));
            }
        }
        Ok(GroupParams { e, p, n, q })
    }

    /// The same group with the untwisted coset.
    pub fn untwisted(&self) -> GroupParams {
        GroupParams { q: 0, ..*self }
    }

    pub fn d(&self) -> u32 {
        self.e / self.p
    }

    /// |G(e,p,n)| = e^n n! / p.
    pub fn group_order(&self) -> u128 {
        let mut o: u128 = (self.e as u128).pow(self.n);
        for k in 1..=self.n as u128 {
            o *= k;
        }
        o / self.p as u128
    }

    /// j_1 = gcd(j, p).
    pub fn j1(&self, j: u32) -> u32 {
        j.gcd(&self.p)
    }

    /// h_j, the order of j in Z/pZ.
    pub fn h(&self, j: u32) -> u32 {
        self.p / self.j1(j)
    }

    /// Number of colors j_1 d of the variables X_j.
    pub fn colors(&self, j: u32) -> u32 {
        self.j1(j) * self.d()
    }

    /// Whether component j of tuple functions is present, i.e. h_j divides n.
    pub fn component_present(&self, j: u32) -> bool {
        self.n % self.h(j) == 0
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{},{}) q={}", self.e, self.p, self.n, self.q)
    }
}

/// theta(alpha) = (alpha^(k-d)).
pub fn theta(alpha: &EPartition, p: u32) -> EPartition {
    let e = alpha.e();
    let d = e / p as usize;
    let parts = (0..e).map(|k| alpha.component((k + e - d) % e).clone()).collect();
    EPartition::new(parts).expect("valid")
}

/// The representative of a theta-orbit: most trailing empty components, then largest by `weight_cmp`.
pub fn canonical_rep(alpha: &EPartition, p: u32) -> EPartition {
    let mut best = alpha.clone();
    let mut cur = theta(alpha, p);
    while &cur != alpha {
        let better = cur
            .trailing_empty()
            .cmp(&best.trailing_empty())
            .then_with(|| cur.weight_cmp(&best))
            .is_gt();
        if better {
            best = cur.clone();
        }
        cur = theta(&cur, p);
    }
    best
}

/// The theta-orbit listed from the canonical representative, and its size c.
pub fn orbit_data(alpha: &EPartition, p: u32) -> (Vec<EPartition>, u32) {
    let rep = canonical_rep(alpha, p);
    let mut orbit = vec![rep.clone()];
    let mut cur = theta(&rep, p);
    while cur != rep {
        orbit.push(cur.clone());
        cur = theta(&cur, p);
    }
    let c = orbit.len() as u32;
    (orbit, c)
}

/// Delta(alpha) = sum_k l(alpha^(k)) k.
pub fn delta(alpha: &EPartition) -> u32 {
    alpha.parts().iter().enumerate().map(|(k, p)| (k * p.len()) as u32).sum()
}

/// h divides every part and every index of a nonempty component.
pub fn divisible_by(beta: &EPartition, h: u32) -> bool {
    beta.parts().iter().enumerate().all(|(k, p)| {
        p.is_empty() || (k as u32 % h == 0 && p.iter().all(|&x| x % h == 0))
    })
}

/// alpha[j]: the j_1 d-partition of n/h obtained by dividing parts and indices by h.
pub fn alpha_divide(alpha: &EPartition, j: u32, params: &GroupParams) -> Option<EPartition> {
    let h = params.h(j);
    if !divisible_by(alpha, h) {
        return None;
    }
    let colors = params.colors(j) as usize;
    let mut parts = vec![Vec::new(); colors];
    for (k, p) in alpha.parts().iter().enumerate() {
        if !p.is_empty() {
            parts[k / h as usize] = p.iter().map(|x| x / h).collect();
        }
    }
    Some(EPartition::new(parts).expect("valid"))
}

/// alpha{j}: the first j_1 d components, defined when c divides j.
pub fn alpha_truncate(alpha: &EPartition, j: u32, params: &GroupParams) -> Option<EPartition> {
    let (_, c) = orbit_data(alpha, params.p);
    if j % c != 0 {
        return None;
    }
    let colors = params.colors(j) as usize;
    Some(EPartition::new(alpha.parts()[..colors].to_vec()).expect("valid"))
}

/// f_j(w_beta(b)).
pub fn f_invariant(beta: &EPartition, b: u32, j: u32, params: &GroupParams) -> u32 {
    if divisible_by(beta, params.h(j)) {
        (b * j) % params.p
    } else {
        0
    }
}

/// An irreducible character of W stable under sigma^q: a canonical orbit representative and a label of Gamma_alpha.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CharParam {
    pub alpha: EPartition,
    pub phi: u32,
    /// Orbit size c.
    #[serde(skip)]
    pub c: u32,
}

impl CharParam {
    /// |Gamma_alpha| = p / c.
    pub fn gamma_order(&self, params: &GroupParams) -> u32 {
        params.p / self.c
    }

    /// phi(tau^j) = zeta^{phi j d}, defined when c divides j.
    pub fn phi_value(&self, j: u32, params: &GroupParams) -> Option<CycNum> {
        if j % self.c != 0 {
            return None;
        }
        Some(CycNum::zeta_pow(params.e, (self.phi * j * params.d()) as i64))
    }

    /// Label such as "(1;1;1)" or "(1;1;1)'" with primes counting phi.
    pub fn label(&self, params: &GroupParams) -> String {
        if self.gamma_order(params) == 1 {
            self.alpha.label()
        } else {
            format!("{}{}", self.alpha.label(), "'".repeat(self.phi as usize))
        }
    }
}

impl fmt::Debug for CharParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.alpha.label(), self.phi)
    }
}

/// A W-orbit on sigma^q W: the class of w_beta(b).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassParam {
    pub beta: EPartition,
    pub b: u32,
    /// Number of W-orbits inside the class of beta in G(e,1,n).
    #[serde(skip)]
    pub r: u32,
}

impl ClassParam {
    pub fn label(&self) -> String {
        if self.r == 1 {
            self.beta.label()
        } else {
            format!("{}b{}", self.beta.label(), self.b)
        }
    }
}

impl fmt::Debug for ClassParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.beta.label(), self.b)
    }
}

/// All sigma^q-stable characters, ordered by representative then label.
pub fn enumerate_char_params(params: &GroupParams) -> Vec<CharParam> {
    let mut reps = BTreeMap::new();
    for a in enumerate_epartitions(params.n, params.e as usize) {
        let (orbit, c) = orbit_data(&a, params.p);
        reps.entry(orbit[0].clone()).or_insert(c);
    }
    let mut out = Vec::new();
    for (alpha, c) in reps {
        if (params.q * c) % params.p != 0 {
            continue;
        }
        for phi in 0..params.p / c {
            out.push(CharParam { alpha: alpha.clone(), phi, c });
        }
    }
    out
}

/// All W-orbits on sigma^q W as canonical (beta, b) with the least b in each f-class.
pub fn enumerate_class_params(params: &GroupParams) -> Vec<ClassParam> {
    let mut out = Vec::new();
    for beta in enumerate_epartitions(params.n, params.e as usize) {
        if (delta(&beta) + params.p - params.q % params.p) % params.p != 0 {
            continue;
        }
        let mut seen: Vec<(Vec<u32>, u32)> = Vec::new();
        for b in 0..params.e {
            let f: Vec<u32> = (0..params.p).map(|j| f_invariant(&beta, b, j, params)).collect();
            if !seen.iter().any(|(g, _)| *g == f) {
                seen.push((f, b));
            }
        }
        let r = seen.len() as u32;
        for (_, b) in seen {
            out.push(ClassParam { beta: beta.clone(), b, r });
        }
    }
    out
}
