mod common;

use common::{gp, kernel_component};
use reflgreen::arith::{CycNum, TRat};
use reflgreen::combinatorics::{enumerate_char_params, orbit_data};
use reflgreen::gepn::{TupleBasis, TupleSpace};
use reflgreen::symfunc::Sign;

#[test]
fn tuple_cauchy_expansions() {
    let grid = [
        gp(2, 2, 1, 0),
        gp(2, 2, 1, 1),
        gp(2, 2, 2, 0),
        gp(2, 2, 2, 1),
        gp(2, 1, 2, 0),
        gp(4, 2, 2, 0),
        gp(3, 3, 2, 1),
    ];
    for params in grid {
        for j in 0..params.p {
            if !params.component_present(j) {
                continue;
            }
            let [a, b, c, kernel] = kernel_component(&params, j);
            assert_eq!(c, kernel, "{} j={}: power sums", params, j);
            assert_eq!(a, kernel, "{} j={}: q+ and m", params, j);
            assert_eq!(b, kernel, "{} j={}: m and q-", params, j);
        }
    }
}

#[test]
fn q_m_pairing() {
    for params in [gp(2, 2, 2, 0), gp(2, 2, 2, 1), gp(2, 2, 3, 0), gp(3, 3, 2, 0), gp(3, 3, 2, 1), gp(4, 4, 2, 0)] {
        let space = TupleSpace::new(&params).unwrap();
        let chars = enumerate_char_params(&params);
        let q: Vec<_> = chars.iter().map(|z| space.assemble(z, TupleBasis::Q(Sign::Plus)).unwrap()).collect();
        let m: Vec<_> = chars.iter().map(|z| space.assemble(z, TupleBasis::Monomial).unwrap()).collect();
        for (a, z) in chars.iter().enumerate() {
            let (_, c) = orbit_data(&z.alpha, params.p);
            for (b, w) in chars.iter().enumerate() {
                for j in 0..params.p {
                    let Some(v) = space.ip_component(j, &q[a], &m[b]) else { continue };
                    let want = if z.alpha == w.alpha && j % c == 0 {
                        let f = z.phi_value(j, &params).unwrap();
                        let g = w.phi_value(j, &params).unwrap();
                        TRat::constant(&(&f * &g.conj()) * &CycNum::from_int(params.e, c as i64))
                    } else {
                        TRat::zero()
                    };
                    assert_eq!(v, want, "{} {:?} {:?} j={}", params, z, w, j);
                }
                let want = if a == b { TRat::one() } else { TRat::zero() };
                assert_eq!(space.ip(&q[a], &m[b]), want, "{} {:?} {:?}", params, z, w);
            }
        }
    }
}
