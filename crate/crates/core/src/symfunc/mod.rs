//! Symmetric polynomials in colored variables and the bases s, m, p, q.

mod bases;
mod expansion;
mod sympoly;

pub use bases::{monomial, powersum, powersum_root, powersum_row, q_product, q_row, schur, Sign};
pub use expansion::{
    basis_poly, cauchy_truncated, expand, expand_root, scalar_product, scalar_product_root, to_powersum,
    BasisExpansion, BasisTag, CauchyReport,
};
pub use sympoly::SymPoly;
