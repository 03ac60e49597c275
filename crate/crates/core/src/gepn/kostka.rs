use std::collections::BTreeMap;

use num_rational::BigRational;

use super::coset::GepnSystem;
use super::tuple::TupleSpace;
use crate::arith::{CycNum, Mat, TRat};
use crate::combinatorics::{orbit_data, theta, CharParam, EPartition, GroupParams};
use crate::error::{Error, Result};
use crate::labeled::LabeledMatrix;
use crate::symfunc::Sign;

fn truncate(alpha: &EPartition, colors: u32) -> EPartition {
    EPartition::new(alpha.parts()[..colors as usize].to_vec()).expect("valid")
}

/// K^sign over character parameters, assembled block by block from the base Kostka matrices:
/// (K_{phi,phi'}) = |Gamma_{alpha'}| / |Gamma_alpha| F L F'^{-1}.
pub fn kostka_assembled(space: &TupleSpace, items: &[CharParam], sign: Sign) -> Result<Mat<TRat>> {
    let params = space.params;
    let e = params.e;
    let p = params.p;
    let d = params.d();
    // Base Kostka matrices per present component.
    let mut base: BTreeMap<u32, Mat<TRat>> = BTreeMap::new();
    for j in 0..p {
        if let Some(comp) = space.component(j) {
            let hl = comp.hl.as_ref().ok_or_else(|| Error::InvalidParameter("Hall-Littlewood data missing".into()))?;
            base.insert(j, hl.kostka(sign)?);
        }
    }
    let base_entry = |j: u32, a: &EPartition, b: &EPartition| -> TRat {
        let comp = space.component(j).expect("present");
        let hl = comp.hl.as_ref().expect("loaded");
        let i = hl.index_of(&truncate(a, comp.colors)).expect("label");
        let k = hl.index_of(&truncate(b, comp.colors)).expect("label");
        base[&j].get(i, k).clone()
    };

    let mut reps: Vec<(EPartition, u32, Vec<usize>)> = Vec::new();
    for (idx, z) in items.iter().enumerate() {
        match reps.iter_mut().find(|(a, _, _)| *a == z.alpha) {
            Some(entry) => entry.2.push(idx),
            None => {
                let (_, c) = orbit_data(&z.alpha, p);
                reps.push((z.alpha.clone(), c, vec![idx]));
            }
        }
    }

    let k = items.len();
    let mut out = Mat::filled(k, k, TRat::zero());
    for (alpha, c, rows) in &reps {
        for (alpha2, c2, cols) in &reps {
            let g2 = (p / c2) as usize;
            let mut orbit2 = Vec::new();
            let mut cur = alpha2.clone();
            for _ in 0..*c2 {
                orbit2.push(cur.clone());
                cur = theta(&cur, p);
            }
            // L: diagonal, entry i at j = c' i.
            let l: Vec<TRat> = (0..g2 as u32)
                .map(|i| {
                    let j = c2 * i;
                    if j % c != 0 {
                        return TRat::zero();
                    }
                    let mut acc = TRat::zero();
                    for (s, b) in orbit2.iter().enumerate() {
                        let w = CycNum::zeta_pow(e, -((params.q * s as u32 * d) as i64));
                        acc = &acc + &base_entry(j, alpha, b).scale(&w);
                    }
                    acc
                })
                .collect();
            if l.iter().all(|x| x.is_zero()) {
                continue;
            }
            let phi_at = |z: &CharParam, j: u32| -> TRat {
                z.phi_value(j, &params).map(TRat::constant).unwrap_or_else(TRat::zero)
            };
            let f = Mat::from_fn(rows.len(), g2, |a, i| phi_at(&items[rows[a]], c2 * i as u32));
            let f2 = Mat::from_fn(g2, g2, |a, i| phi_at(&items[cols[a]], c2 * i as u32));
            let lmat = Mat::from_fn(g2, g2, |a, b| if a == b { l[a].clone() } else { TRat::zero() });
            let ratio = CycNum::from_rational(e, BigRational::new((*c).into(), (*c2).into()));
            let block = f.mul(&lmat).mul(&f2.inverse()?);
            for (a, &r) in rows.iter().enumerate() {
                for (b, &col) in cols.iter().enumerate() {
                    out.set(r, col, block.get(a, b).scale(&ratio));
                }
            }
        }
    }
    Ok(out)
}

/// K^sign for sigma^q W as a labelled matrix in the similarity order: Bs_z = sum_z' K_{z,z'} BP_z'.
pub fn kostka_gepn(params: &GroupParams, r: u32, sign: Sign) -> Result<LabeledMatrix> {
    let space = TupleSpace::with_hall_littlewood(params, r)?;
    let order = crate::combinatorics::similarity_order(params, r);
    let m = kostka_assembled(&space, &order.items, sign)?;
    let labels = order.items.iter().map(|z| z.label(params)).collect();
    Ok(LabeledMatrix::square(
        &format!("K{} for {} (r = {})", sign.symbol(), params, r),
        labels,
        order.classes.clone(),
        m,
    ))
}

impl GepnSystem {
    /// K^sign from the block formula, in this system's order.
    pub fn kostka_assembled(&self, sign: Sign) -> Result<Mat<TRat>> {
        kostka_assembled(&self.space, &self.order.items, sign)
    }
}
