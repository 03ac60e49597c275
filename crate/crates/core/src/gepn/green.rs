use std::collections::BTreeMap;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::coset::{char_poly, det_value, z_coset, GepnSystem};
use crate::arith::{CycNum, Mat, TPoly, TRat};
use crate::combinatorics::GroupParams;
use crate::error::{Error, Result};
use crate::labeled::LabeledMatrix;
use crate::symfunc::Sign;

/// Number of reflections N* = e n(n-1)/2 + n(d-1).
pub fn reflection_count(params: &GroupParams) -> u32 {
    params.e * params.n * (params.n - 1) / 2 + params.n * (params.d() - 1)
}

/// (zeta^{qd} t^{dn} - 1) prod_{i<n} (t^{ei} - 1).
pub fn degree_factor(params: &GroupParams) -> TPoly {
    let e = params.e;
    let one = TPoly::constant(CycNum::one(e));
    let mut acc = &TPoly::monomial(CycNum::zeta_pow(e, (params.q * params.d()) as i64), (params.d() * params.n) as usize) - &one;
    for i in 1..params.n {
        acc = &acc * &(&TPoly::monomial(CycNum::one(e), (e * i) as usize) - &one);
    }
    acc
}

/// G(t) = t^{N*} (zeta^{qd} t^{dn} - 1) prod_{i<n} (t^{ei} - 1).
pub fn big_g(params: &GroupParams) -> TPoly {
    degree_factor(params).shift(reflection_count(params) as usize)
}

/// Green-function matrices of sigma^q W for symbols of type (r,0).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GreenSuite {
    pub params: GroupParams,
    pub r: u32,
    pub a_diag: Vec<u64>,
    pub ktilde_plus: LabeledMatrix,
    pub ktilde_minus: LabeledMatrix,
    pub lambda_tilde: LabeledMatrix,
    pub omega_prime: LabeledMatrix,
    /// conj(K~-) Lambda~ tK~+ - Omega'.
    pub residual: LabeledMatrix,
    /// Omega with entries t^{N*} R_q(chi^z chi^z' conj det), no conjugation on chi^z'.
    pub omega: LabeledMatrix,
    /// P^{-1} Omega tP^{-1} with P = K~-, the middle factor for Omega.
    pub lambda_omega: LabeledMatrix,
}

impl GreenSuite {
    pub fn residual_is_zero(&self) -> bool {
        self.residual.entries.is_zero()
    }
}

fn t_pow(k: i64) -> TRat {
    TRat::t_pow(k)
}

/// K~(t) = K(t^{-1}) T with T = diag(t^{a(z)}).
pub fn ktilde(k: &Mat<TRat>, a: &[u64]) -> Mat<TRat> {
    Mat::from_fn(k.rows(), k.cols(), |i, j| {
        let x = k.get(i, j);
        if x.is_zero() {
            TRat::zero()
        } else {
            &x.subst_tinv() * &t_pow(a[j] as i64)
        }
    })
}

/// sum_xi X[xi][z] w(X[xi][z']) / (z_xi det(t - w_xi)), times G(t); w is conj or the identity.
fn omega_matrix(sys: &GepnSystem, x0: &Mat<CycNum>, conj: bool) -> Mat<TRat> {
    let params = &sys.params;
    let e = params.e;
    let g = big_g(params);
    let weights: Vec<TRat> = sys
        .classes
        .iter()
        .map(|xi| {
            let z = z_coset(xi, params).centralizer;
            let den = char_poly(xi, e).scale(&CycNum::from_rational(e, BigRational::from_integer(z)));
            TRat::normalize(g.clone(), den).expect("nonzero")
        })
        .collect();
    let k = sys.order.items.len();
    let rows: Vec<Vec<TRat>> = (0..k)
        .into_par_iter()
        .map(|z| {
            (0..k)
                .map(|w| {
                    let mut acc = TRat::zero();
                    for (xi, wt) in weights.iter().enumerate() {
                        let b = if conj { x0.get(xi, w).conj() } else { x0.get(xi, w).clone() };
                        let c = x0.get(xi, z) * &b;
                        if !c.is_zero() {
                            acc = &acc + &wt.scale(&c);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    Mat::from_rows(rows)
}

fn constant_matrix(x: &Mat<TRat>) -> Result<Mat<CycNum>> {
    let mut bad = false;
    let m = Mat::from_fn(x.rows(), x.cols(), |i, j| {
        x.get(i, j).as_constant().unwrap_or_else(|| {
            bad = true;
            CycNum::zero(1)
        })
    });
    if bad {
        return Err(Error::Invariant("character table entries must be constants".into()));
    }
    Ok(m)
}

impl GepnSystem {
    /// X(0) as constants, rows xi and columns z (this system's order).
    pub fn character_values(&self) -> Result<Mat<CycNum>> {
        constant_matrix(&self.coset_matrix()?)
    }

    pub fn a_values(&self) -> Vec<u64> {
        (0..self.order.items.len()).map(|i| self.order.a_of(i)).collect()
    }

    /// Lambda~ = t^{-n} G(t) T^{-1} Lambda(t^{-1}) T^{-1}.
    pub fn lambda_tilde(&self, lambda: &Mat<TRat>) -> Mat<TRat> {
        let a = self.a_values();
        let g = TRat::from_poly(big_g(&self.params));
        let n = self.params.n as i64;
        Mat::from_fn(lambda.rows(), lambda.cols(), |i, j| {
            let x = lambda.get(i, j);
            if x.is_zero() {
                return TRat::zero();
            }
            let s = t_pow(-n - a[i] as i64 - a[j] as i64);
            &(&x.subst_tinv() * &s) * &g
        })
    }

    /// Omega' with entries t^{N*} R_q(chi^z conj(chi^z') conj det).
    pub fn omega_prime(&self) -> Result<Mat<TRat>> {
        Ok(omega_matrix(self, &self.character_values()?, true))
    }

    /// R_q(chi^z) for every z, via the class sum.
    pub fn fake_degrees(&self) -> Result<Vec<TRat>> {
        let params = &self.params;
        let e = params.e;
        let x0 = self.character_values()?;
        let g0 = degree_factor(params);
        let k = self.order.items.len();
        let mut out = vec![TRat::zero(); k];
        for (xi, cls) in self.classes.iter().enumerate() {
            let z = z_coset(cls, params).centralizer;
            let den = char_poly(cls, e).scale(&CycNum::from_rational(e, BigRational::from_integer(z)));
            let wt = TRat::normalize(g0.scale(&det_value(cls, params)), den)?;
            for (zi, acc) in out.iter_mut().enumerate() {
                let v = x0.get(xi, zi);
                if !v.is_zero() {
                    *acc = &*acc + &wt.scale(v);
                }
            }
        }
        Ok(out)
    }
}

fn labeled(sys: &GepnSystem, title: &str, m: Mat<TRat>) -> LabeledMatrix {
    LabeledMatrix::square(title, sys.labels(), sys.order.classes.clone(), m)
}

/// Computes K~+-, Lambda~, Omega' and the residual of conj(K~-) Lambda~ tK~+ = Omega'.
pub fn green_suite(params: &GroupParams, r: u32) -> Result<GreenSuite> {
    let sys = GepnSystem::new(params, r)?;
    green_suite_from(&sys)
}

pub fn green_suite_from(sys: &GepnSystem) -> Result<GreenSuite> {
    let params = &sys.params;
    let a = sys.a_values();
    let kp = ktilde(&sys.kostka_assembled(Sign::Plus)?, &a);
    let km = ktilde(&sys.kostka_assembled(Sign::Minus)?, &a);
    let lt = sys.lambda_tilde(&sys.lambda());
    let x0 = sys.character_values()?;
    let op = omega_matrix(sys, &x0, true);
    let lhs = km.conj().mul(&lt).mul(&kp.transpose());
    let residual = lhs.sub(&op);
    let om = omega_matrix(sys, &x0, false);
    let pinv = km.inverse()?;
    let lam_om = pinv.mul(&om).mul(&pinv.transpose());
    let tag = format!("{} (r = {})", params, sys.r);
    Ok(GreenSuite {
        params: *params,
        r: sys.r,
        a_diag: a,
        ktilde_plus: labeled(sys, &format!("K~+ for {}", tag), kp),
        ktilde_minus: labeled(sys, &format!("K~- for {}", tag), km),
        lambda_tilde: labeled(sys, &format!("Lambda~ for {}", tag), lt),
        omega_prime: labeled(sys, &format!("Omega' for {}", tag), op),
        residual: labeled(sys, &format!("residual for {}", tag), residual),
        omega: labeled(sys, &format!("Omega for {}", tag), om),
        lambda_omega: labeled(sys, &format!("Lambda from Omega for {}", tag), lam_om),
    })
}

/// R_0(chi^z) keyed by character label, in the similarity order for r.
pub fn fake_degrees(params: &GroupParams, r: u32) -> Result<BTreeMap<String, TRat>> {
    let sys = GepnSystem::new(params, r)?;
    let vals = sys.fake_degrees()?;
    Ok(sys.labels().into_iter().zip(vals).collect())
}
