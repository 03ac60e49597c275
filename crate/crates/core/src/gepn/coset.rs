use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::tuple::{TVec, TupleBasis, TupleSpace};
use crate::arith::{CycNum, Mat, TPoly, TRat};
use crate::combinatorics::{
    enumerate_char_params, enumerate_class_params, similarity_order, CharParam, ClassParam, GroupParams,
    SimilarityPartition,
};
use crate::error::{Error, Result};
use crate::symfunc::Sign;
use crate::wreath::{z_alpha, z_series_root};

/// Character table of sigma^q W: entry (z, xi) is the value of the extended character z on w_beta(b).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CosetTable {
    pub params: GroupParams,
    pub rows: Vec<CharParam>,
    pub cols: Vec<ClassParam>,
    #[serde(with = "crate::labeled::mat_serde")]
    pub entries: Mat<CycNum>,
}

/// Centralizer data of the W-orbit xi = (beta, b).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZCoset {
    pub beta: crate::combinatorics::EPartition,
    pub b: u32,
    pub value: TRat,
    pub centralizer: BigInt,
}

/// z_{beta,b} = (r/p) z_beta and z_{beta,b}(t) = z_{beta,b} prod (1 - zeta^k t^a)^{-1}.
pub fn z_coset(xi: &ClassParam, params: &GroupParams) -> ZCoset {
    let zb = z_alpha(&xi.beta) * BigInt::from(xi.r);
    let centralizer = zb / BigInt::from(params.p);
    let ratio = CycNum::from_rational(params.e, BigRational::new(xi.r.into(), params.p.into()));
    ZCoset {
        beta: xi.beta.clone(),
        b: xi.b,
        value: z_series_root(&xi.beta, crate::arith::Root::primitive(params.e)).scale(&ratio),
        centralizer,
    }
}

/// det(t - w) = prod_{k,j} (t^{beta_j^(k)} - zeta^k) for w in the class of beta.
pub fn char_poly(xi: &ClassParam, e: u32) -> TPoly {
    let mut acc = TPoly::one();
    for (k, part) in xi.beta.parts().iter().enumerate() {
        for &a in part {
            let f = &TPoly::monomial(CycNum::one(e), a as usize) - &TPoly::constant(CycNum::zeta_pow(e, k as i64));
            acc = &acc * &f;
        }
    }
    acc
}

/// det(w) = (-1)^{n - l(beta)} zeta^{Delta(beta)}.
pub fn det_value(xi: &ClassParam, params: &GroupParams) -> CycNum {
    let sign = if (params.n as usize - xi.beta.length()) % 2 == 0 { 1 } else { -1 };
    let z = CycNum::zeta_pow(params.e, crate::combinatorics::delta(&xi.beta) as i64);
    &z * &CycNum::from_int(params.e, sign)
}

/// M(from, to): from_i = sum_j M[i][j] to_j, by a consistent overdetermined solve.
pub fn transition(from: &[TVec], to: &[TVec]) -> Result<Mat<TRat>> {
    let dim = to.first().map_or(0, |v| v.len());
    let a = Mat::from_fn(dim, to.len(), |g, j| to[j][g].clone());
    let b = Mat::from_fn(dim, from.len(), |g, i| from[i][g].clone());
    Ok(a.solve_consistent(&b)?.transpose())
}

/// Coordinates and matrices attached to sigma^q W, with characters in the similarity order for r.
#[derive(Clone, Debug)]
pub struct GepnSystem {
    pub params: GroupParams,
    pub r: u32,
    pub order: SimilarityPartition<CharParam>,
    pub classes: Vec<ClassParam>,
    pub space: TupleSpace,
    pub schur: Vec<TVec>,
    pub powersum: Vec<TVec>,
    pub plus: Vec<TVec>,
    pub minus: Vec<TVec>,
}

impl GepnSystem {
    pub fn new(params: &GroupParams, r: u32) -> Result<GepnSystem> {
        let space = TupleSpace::with_hall_littlewood(params, r)?;
        let order = similarity_order(params, r);
        let classes = enumerate_class_params(params);
        if classes.len() != order.items.len() {
            return Err(Error::Invariant(format!(
                "{} characters but {} classes for {}",
                order.items.len(),
                classes.len(),
                params
            )));
        }
        let build = |which: TupleBasis| -> Result<Vec<TVec>> {
            order.items.par_iter().map(|z| space.assemble(z, which)).collect()
        };
        let schur = build(TupleBasis::Schur)?;
        let plus = build(TupleBasis::Hl(Sign::Plus))?;
        let minus = build(TupleBasis::Hl(Sign::Minus))?;
        let powersum = classes.iter().map(|xi| space.powersum(xi)).collect();
        Ok(GepnSystem {
            params: *params,
            r,
            order,
            classes,
            space,
            schur,
            powersum,
            plus,
            minus,
        })
    }

    pub fn hl(&self, sign: Sign) -> &[TVec] {
        match sign {
            Sign::Plus => &self.plus,
            Sign::Minus => &self.minus,
        }
    }

    pub fn labels(&self) -> Vec<String> {
        self.order.items.iter().map(|z| z.label(&self.params)).collect()
    }

    /// X(0) = M(Bp, Bs), rows xi and columns z.
    pub fn coset_matrix(&self) -> Result<Mat<TRat>> {
        transition(&self.powersum, &self.schur)
    }

    /// X_sign(t) = M(Bp, BP^sign).
    pub fn x_matrix(&self, sign: Sign) -> Result<Mat<TRat>> {
        transition(&self.powersum, self.hl(sign))
    }

    /// K_sign = M(Bs, BP^sign), by a direct solve.
    pub fn kostka_direct(&self, sign: Sign) -> Result<Mat<TRat>> {
        transition(&self.schur, self.hl(sign))
    }

    /// Lambda(t) with entry (z, z') = <BP+_{z'}, BP-_z>.
    pub fn lambda(&self) -> Mat<TRat> {
        let k = self.order.items.len();
        let rows: Vec<Vec<TRat>> = (0..k)
            .into_par_iter()
            .map(|z| (0..k).map(|w| self.space.ip(&self.plus[w], &self.minus[z])).collect())
            .collect();
        Mat::from_rows(rows)
    }

    /// Z(t) = diag(z_xi(t)).
    pub fn z_matrix(&self) -> Mat<TRat> {
        let k = self.classes.len();
        let zs: Vec<TRat> = self.classes.iter().map(|xi| z_coset(xi, &self.params).value).collect();
        Mat::from_fn(k, k, |i, j| if i == j { zs[i].clone() } else { TRat::zero() })
    }
}

/// Solves Bp_xi = sum_z X_{xi,z} Bs_z over the given tuple space.
pub fn coset_char_table(params: &GroupParams) -> Result<CosetTable> {
    let space = TupleSpace::new(params)?;
    let rows = enumerate_char_params(params);
    let cols = enumerate_class_params(params);
    if rows.len() != cols.len() {
        return Err(Error::Invariant(format!("{} characters but {} classes", rows.len(), cols.len())));
    }
    let s: Vec<TVec> = rows.iter().map(|z| space.assemble(z, TupleBasis::Schur)).collect::<Result<_>>()?;
    let p: Vec<TVec> = cols.iter().map(|xi| space.powersum(xi)).collect();
    let x = transition(&p, &s)
        .map_err(|e| Error::Invariant(format!("coset character table for {}: {}", params, e)))?;
    let entries = Mat::from_fn(rows.len(), cols.len(), |z, xi| {
        x.get(xi, z).as_constant().expect("constant entries")
    });
    Ok(CosetTable {
        params: *params,
        rows,
        cols,
        entries,
    })
}

impl CosetTable {
    pub fn value(&self, z: &CharParam, xi: &ClassParam) -> Option<&CycNum> {
        let i = self.rows.iter().position(|r| r == z)?;
        let j = self.cols.iter().position(|c| c == xi)?;
        Some(self.entries.get(i, j))
    }

    /// tX H conj(X) with X indexed (xi, z) and H = diag(1/z_xi); the identity for a character table.
    pub fn orthogonality_matrix(&self) -> Mat<CycNum> {
        let e = self.params.e;
        let k = self.rows.len();
        let h: Vec<CycNum> = self
            .cols
            .iter()
            .map(|xi| CycNum::from_rational(e, BigRational::new(1.into(), z_coset(xi, &self.params).centralizer)))
            .collect();
        Mat::from_fn(k, k, |z, w| {
            let mut acc = CycNum::zero(e);
            for (xi, hx) in h.iter().enumerate() {
                acc = &acc + &(&(self.entries.get(z, xi) * &self.entries.get(w, xi).conj()) * hx);
            }
            acc
        })
    }

    pub fn is_orthonormal(&self) -> bool {
        let m = self.orthogonality_matrix();
        (0..m.rows()).all(|i| (0..m.cols()).all(|j| if i == j { m.get(i, j).is_one() } else { m.get(i, j).is_zero() }))
    }
}
