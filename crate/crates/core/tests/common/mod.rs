#![allow(dead_code)]

use num_rational::BigRational;

use reflgreen::arith::{CycNum, Root};
use reflgreen::combinatorics::{enumerate_char_params, enumerate_class_params, enumerate_epartitions, GroupParams};
use reflgreen::gepn::{tuple_powersum, tuple_q_m, z_coset, TupleBasis, TupleFun, TupleSpace};
use reflgreen::symfunc::{powersum_root, Sign, SymPoly};
use reflgreen::wreath::z_series_root;

pub fn gp(e: u32, p: u32, n: u32, q: u32) -> GroupParams {
    GroupParams::new(e, p, n, q).unwrap()
}

/// The four expansions of the kernel in component j: q+ (x) conj m, m (x) conj q-, the Bp sum,
/// and the twisting operator applied to the base power-sum kernel in X_j.
pub fn kernel_component(params: &GroupParams, j: u32) -> [SymPoly; 4] {
    let space = TupleSpace::new(params).unwrap();
    let comp = space.component(j).unwrap();
    let mv = comp.n;
    let colors = comp.colors as usize;
    let one = vec![mv; colors];
    let both = [one.clone(), one.clone()].concat();
    let poly = |f: &TupleFun| f.component_poly(j as usize, mv, params).unwrap().unwrap();

    let mut a = SymPoly::zero(&both);
    let mut b = SymPoly::zero(&both);
    for z in enumerate_char_params(params) {
        let qp = poly(&tuple_q_m(&z, params, TupleBasis::Q(Sign::Plus)).unwrap());
        let qm = poly(&tuple_q_m(&z, params, TupleBasis::Q(Sign::Minus)).unwrap());
        let m = poly(&tuple_q_m(&z, params, TupleBasis::Monomial).unwrap());
        a = a.add(&qp.tensor(&m.conj()));
        b = b.add(&m.tensor(&qm.conj()));
    }

    let mut c = SymPoly::zero(&both);
    for xi in enumerate_class_params(params) {
        let f = tuple_powersum(&xi, params).unwrap();
        let Some(p) = f.component_poly(j as usize, mv, params).unwrap() else { continue };
        let zinv = z_coset(&xi, params).value.inv().unwrap();
        c = c.add(&p.tensor(&p.conj()).scale(&zinv));
    }

    let h = comp.h;
    let root = Root { field: params.e, step: h };
    let mut kernel = SymPoly::zero(&both);
    for beta in enumerate_epartitions(comp.n, colors) {
        let p = powersum_root(&beta, &one, root);
        let zinv = z_series_root(&beta, root).subst_pow(h as usize).inv().unwrap();
        let mut twisted = SymPoly::zero(&one);
        for i in 0..params.p {
            let w = CycNum::zeta_pow(params.e, (params.q * i * params.d()) as i64);
            twisted = twisted.add(&p.shift_colors((i * params.d()) as usize % colors).scale_cyc(&w));
        }
        kernel = kernel.add(&twisted.tensor(&p.conj()).scale(&zinv));
    }
    [a, b, c, kernel]
}

/// sum_i x_i^{r+delta} prod_j (x_i - t y_j) / prod_{j != i} (x_i - x_j), delta = |x| - 1 - |y|.
pub fn q_closed_form(r: u32, x: &[BigRational], y: &[BigRational], t: &BigRational) -> BigRational {
    let delta = x.len() as i64 - 1 - y.len() as i64;
    let mut acc = BigRational::from_integer(0.into());
    for (i, xi) in x.iter().enumerate() {
        let mut term = rat_pow(xi, r as i64 + delta);
        for yj in y {
            term *= xi - t * yj;
        }
        for (j, xj) in x.iter().enumerate() {
            if j != i {
                term /= xi - xj;
            }
        }
        acc += term;
    }
    acc
}

pub fn rat_pow(x: &BigRational, k: i64) -> BigRational {
    let mut acc = BigRational::from_integer(1.into());
    for _ in 0..k.unsigned_abs() {
        acc *= x;
    }
    if k < 0 {
        acc.recip()
    } else {
        acc
    }
}
