//! Characters, Hall-Littlewood functions and Green functions for the coset sigma^q W of G(e,p,n).

pub mod brute;
pub mod coset;
pub mod green;
pub mod kostka;
pub mod tuple;
pub mod verify;

pub use brute::{brute_force_oracle, class_rep, Elem, GroupReport, BRUTE_FORCE_LIMIT};
pub use coset::{char_poly, coset_char_table, det_value, transition, z_coset, CosetTable, GepnSystem, ZCoset};
pub use green::{big_g, degree_factor, fake_degrees, green_suite, green_suite_from, ktilde, reflection_count, GreenSuite};
pub use kostka::{kostka_assembled, kostka_gepn};
pub use tuple::{
    tuple_hall_littlewood, tuple_powersum, tuple_q_m, tuple_schur, xj_variables, Component, ComponentInfo, TVec,
    TupleBasis, TupleFun, TupleSpace, XjVariables,
};

pub use verify::{verify_suite, CheckResult};

use crate::arith::{Mat, TRat};

/// Lower block triangular with identity diagonal blocks; `blocks` are intervals [start, end).
pub fn is_block_unitriangular(m: &Mat<TRat>, blocks: &[(usize, usize)]) -> bool {
    let mut block_of = vec![0; m.rows()];
    for (b, &(s, e)) in blocks.iter().enumerate() {
        for x in &mut block_of[s..e] {
            *x = b;
        }
    }
    (0..m.rows()).all(|i| {
        (0..m.cols()).all(|j| {
            let x = m.get(i, j);
            if i == j {
                x == &TRat::one()
            } else if block_of[i] == block_of[j] || block_of[j] > block_of[i] {
                x.is_zero()
            } else {
                true
            }
        })
    })
}
