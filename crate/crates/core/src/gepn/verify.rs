//! The invariant suite run by `reflgreen verify`.

use serde::{Deserialize, Serialize};

use super::brute::{brute_force_oracle, BRUTE_FORCE_LIMIT};
use super::coset::{coset_char_table, transition, GepnSystem};
use super::green::green_suite_from;
use super::is_block_unitriangular;
use crate::arith::{CycNum, Mat, TRat};
use crate::combinatorics::GroupParams;
use crate::error::{Error, Result};
use crate::symfunc::Sign;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> CheckResult {
        CheckResult {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

fn at_zero(m: &Mat<TRat>) -> Result<Mat<TRat>> {
    let zero = CycNum::zero(1);
    let mut out = Mat::filled(m.rows(), m.cols(), TRat::zero());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let x = m.get(i, j);
            let v = &x.num().eval(&zero) * &x.den().eval(&zero).inv()?;
            out.set(i, j, TRat::constant(v));
        }
    }
    Ok(out)
}

/// Runs every check for sigma^q W and symbols of type (r,0). Fails early only on size limits.
pub fn verify_suite(params: &GroupParams, r: u32) -> Result<Vec<CheckResult>> {
    if params.group_order() > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeLimit(format!(
            "|W| = {} exceeds {} for the brute-force checks",
            params.group_order(),
            BRUTE_FORCE_LIMIT
        )));
    }
    let mut out = Vec::new();
    let table = coset_char_table(params)?;
    out.push(CheckResult::new(
        "orthogonality",
        table.is_orthonormal(),
        "tX H conj(X) = I for the coset table",
    ));
    let report = brute_force_oracle(params)?;
    let bad = report.check_classes();
    out.push(CheckResult::new(
        "class parameters",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} orbits, centralizers and determinants agree", report.coset_orbit_sizes.len())
        } else {
            bad.join("; ")
        },
    ));
    let bad = report.check_table(&table);
    out.push(CheckResult::new(
        "group oracle",
        bad.is_empty(),
        if bad.is_empty() { "rows are the characters found by enumeration".to_string() } else { bad.join("; ") },
    ));

    let sys = GepnSystem::new(params, r)?;
    let x0 = sys.coset_matrix()?;
    let xp = sys.x_matrix(Sign::Plus)?;
    let xm = sys.x_matrix(Sign::Minus)?;
    out.push(CheckResult::new(
        "X(0)",
        at_zero(&xp)? == x0 && at_zero(&xm)? == x0,
        "X+(0) = X-(0) = coset table",
    ));
    let lambda = sys.lambda();
    out.push(CheckResult::new(
        "scalar products",
        xm.conj().mul(&lambda).mul(&xp.transpose()) == sys.z_matrix(),
        "conj(X-) Lambda tX+ = Z",
    ));
    let blocks = &sys.order.classes;
    let tri = [Sign::Plus, Sign::Minus]
        .iter()
        .map(|&s| transition(sys.hl(s), &sys.schur).map(|u| is_block_unitriangular(&u, blocks)))
        .collect::<Result<Vec<bool>>>()?;
    out.push(CheckResult::new(
        "triangularity",
        tri.iter().all(|&b| b),
        "BP+- = Bs + lower similarity classes",
    ));
    let k = sys.order.items.len();
    let orth = (0..k).all(|a| (0..k).all(|b| sys.order.class_of(a) == sys.order.class_of(b) || lambda.get(a, b).is_zero()));
    out.push(CheckResult::new("cross orthogonality", orth, "<BP+, BP-> vanishes across similarity classes"));
    let mut same = true;
    for sign in [Sign::Plus, Sign::Minus] {
        same &= sys.kostka_assembled(sign)? == sys.kostka_direct(sign)?;
    }
    out.push(CheckResult::new("kostka assembly", same, "block formula equals M(Bs, BP+-)"));
    let suite = green_suite_from(&sys)?;
    out.push(CheckResult::new(
        "green residual",
        suite.residual_is_zero(),
        "conj(K~-) Lambda~ tK~+ = Omega'",
    ));
    if params.q == 0 {
        let fd = sys.fake_degrees()?;
        let col: Vec<TRat> = (0..k).map(|i| suite.ktilde_minus.get(i, 0).clone()).collect();
        out.push(CheckResult::new("fake degrees", fd == col, "first column of K~- = fake degrees"));
    }
    Ok(out)
}
