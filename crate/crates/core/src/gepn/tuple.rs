use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::arith::{CycNum, Root, TRat};
use crate::combinatorics::{
    alpha_divide, delta, orbit_data, theta, CharParam, ClassParam, EPartition, GroupParams,
};
use crate::error::{Error, Result};
use crate::symfunc::{expand, monomial, q_product, BasisExpansion, BasisTag, Sign, SymPoly};
use crate::wreath::{char_table_root, hall_littlewood_root, z_alpha, z_series_root, CharTable, HLBasis};

/// The variables X_j: X_i^(k) = prod_{s<h} x_i^(k + s j d) for 0 <= k < j_1 d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XjVariables {
    pub j: u32,
    pub h: u32,
    /// factors[k] lists the colors of x multiplied together in X^(k).
    pub factors: Vec<Vec<u32>>,
    /// Number of variables X_i^(k) per color.
    pub m: u32,
}

pub fn xj_variables(j: u32, params: &GroupParams, m: u32) -> XjVariables {
    let h = params.h(j);
    let step = j * params.d();
    let factors = (0..params.colors(j))
        .map(|k| (0..h).map(|s| (k + s * step) % params.e).collect())
        .collect();
    XjVariables { j, h, factors, m }
}

impl XjVariables {
    /// Rewrites a polynomial in the X_j variables as a polynomial in x with m variables per color.
    pub fn substitute(&self, f: &SymPoly, e: u32) -> Result<SymPoly> {
        if f.e() != self.factors.len() || f.m().iter().any(|&mk| mk != self.m) {
            return Err(Error::InvalidParameter("polynomial does not live in the X_j variables".into()));
        }
        let mx = vec![self.m; e as usize];
        let mut out = SymPoly::zero(&mx);
        let m = self.m as usize;
        for (ex, c) in f.terms() {
            let mut target = vec![0u16; m * e as usize];
            for (k, colors) in self.factors.iter().enumerate() {
                for i in 0..m {
                    let a = ex[k * m + i];
                    for &col in colors {
                        target[col as usize * m + i] += a;
                    }
                }
            }
            out.add_term(target, c.clone());
        }
        Ok(out)
    }
}

/// Data for component j: the group G(e/h, 1, n/h) written with the root zeta^h and parameter t^h.
#[derive(Clone, Debug)]
pub struct Component {
    pub j: u32,
    pub h: u32,
    pub colors: u32,
    pub n: u32,
    pub root: Root,
    pub table: CharTable,
    /// z_g(t^h) per class of `table`.
    series: Vec<TRat>,
    zinv: Vec<CycNum>,
    /// Hall-Littlewood data at parameter t^h.
    pub hl: Option<Arc<HLBasis>>,
    /// Position in `table.rows` of each label of `hl`.
    hl_pos: Vec<usize>,
}

impl Component {
    fn new(params: &GroupParams, j: u32, r: Option<u32>) -> Result<Component> {
        let h = params.h(j);
        let n = params.n / h;
        let root = Root { field: params.e, step: h };
        let table = char_table_root(root, n);
        let series = table
            .cols
            .iter()
            .map(|g| z_series_root(g, root).subst_pow(h as usize))
            .collect();
        let zinv = table
            .cols
            .iter()
            .map(|g| CycNum::from_rational(params.e, BigRational::new(1.into(), z_alpha(g))))
            .collect();
        let (hl, hl_pos) = match r {
            Some(r) => {
                let base = hall_littlewood_root(root, n, r)?;
                let hl = Arc::new(if h == 1 { (*base).clone() } else { base.subst_pow(h as usize) });
                let pos = hl
                    .labels()
                    .iter()
                    .map(|a| table.rows.iter().position(|b| b == a).expect("same labels"))
                    .collect();
                (Some(hl), pos)
            }
            None => (None, Vec::new()),
        };
        Ok(Component {
            j,
            h,
            colors: params.colors(j),
            n,
            root,
            table,
            series,
            zinv,
            hl,
            hl_pos,
        })
    }

    pub fn dim(&self) -> usize {
        self.table.cols.len()
    }

    fn row_of(&self, alpha: &EPartition) -> usize {
        self.table.rows.iter().position(|b| b == alpha).expect("label of this component")
    }

    /// Power-sum coordinates of sum_a coeffs[a] s_a, coefficients given in `table.rows` order.
    fn schur_to_p(&self, coeffs: &[(usize, TRat)]) -> Vec<TRat> {
        (0..self.dim())
            .map(|g| {
                let mut acc = TRat::zero();
                for (a, c) in coeffs {
                    let chi = self.table.entries.get(*a, g);
                    if !chi.is_zero() && !c.is_zero() {
                        acc = &acc + &c.scale(&(&chi.conj() * &self.zinv[g]));
                    }
                }
                acc
            })
            .collect()
    }

    /// Schur coordinates (in `table.rows` order) of a power-sum coordinate vector.
    fn p_to_schur(&self, u: &[TRat]) -> Vec<TRat> {
        (0..self.dim())
            .map(|a| {
                let mut acc = TRat::zero();
                for (g, x) in u.iter().enumerate() {
                    if !x.is_zero() {
                        acc = &acc + &x.scale(self.table.entries.get(a, g));
                    }
                }
                acc
            })
            .collect()
    }

    fn ip(&self, u: &[TRat], v: &[TRat]) -> TRat {
        let mut acc = TRat::zero();
        for ((a, b), z) in u.iter().zip(v).zip(&self.series) {
            if !a.is_zero() && !b.is_zero() {
                acc = &acc + &(&(a * &b.conj()) * z);
            }
        }
        acc
    }

    fn hl_row(&self, sign: Sign, dual: bool, alpha: &EPartition) -> Vec<TRat> {
        let hl = self.hl.as_ref().expect("Hall-Littlewood data requested");
        let a = hl.index_of(alpha).expect("label of this component");
        let m = if dual { hl.duals(sign) } else { hl.functions(sign) };
        let coeffs: Vec<(usize, TRat)> = (0..hl.labels().len())
            .map(|b| (self.hl_pos[b], m.get(a, b).clone()))
            .collect();
        self.schur_to_p(&coeffs)
    }

    /// Schur coordinates of a SymPoly-defined basis element (q or m) in X_j with parameter t^h.
    fn symbolic_row(&self, which: TupleBasis, alpha: &EPartition) -> Result<Vec<TRat>> {
        let m = vec![self.n; self.colors as usize];
        let f = match which {
            TupleBasis::Monomial => monomial(alpha, &m)?,
            TupleBasis::Q(sign) => subst_poly(&q_product(alpha, sign, &m), self.h),
            _ => unreachable!("only q and m are built symbolically"),
        };
        let ex = expand(&f, BasisTag::Schur, self.n)?;
        let coeffs: Vec<(usize, TRat)> = ex.coeffs.iter().map(|(a, c)| (self.row_of(a), c.clone())).collect();
        Ok(self.schur_to_p(&coeffs))
    }

    fn basic(&self, which: TupleBasis, alpha: &EPartition) -> Result<Vec<TRat>> {
        Ok(match which {
            TupleBasis::Schur => self.schur_to_p(&[(self.row_of(alpha), TRat::one())]),
            TupleBasis::Hl(sign) => self.hl_row(sign, false, alpha),
            TupleBasis::HlDual(sign) => self.hl_row(sign, true, alpha),
            other => self.symbolic_row(other, alpha)?,
        })
    }
}

fn subst_poly(f: &SymPoly, h: u32) -> SymPoly {
    if h == 1 {
        return f.clone();
    }
    let mut out = SymPoly::zero(f.m());
    for (ex, c) in f.terms() {
        out.add_term(ex.clone(), c.subst_pow(h as usize));
    }
    out
}

/// Families of tuple functions indexed by character parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TupleBasis {
    Schur,
    Monomial,
    Q(Sign),
    /// P^sign of the truncated symbols.
    Hl(Sign),
    /// Q^sign, the duals of the P^sign.
    HlDual(Sign),
}

/// A tuple (f^j)_{0 <= j < p}; `None` marks components absent for this n.
#[derive(Clone, Debug, PartialEq)]
pub struct TupleFun {
    pub components: Vec<Option<BasisExpansion>>,
}

impl TupleFun {
    /// Component j as a polynomial in the X_j variables, m variables per color.
    pub fn component_poly(&self, j: usize, m: u32, params: &GroupParams) -> Result<Option<SymPoly>> {
        let Some(ex) = &self.components[j] else {
            return Ok(None);
        };
        let h = params.h(j as u32);
        let root = Root { field: params.e, step: h };
        let mv = vec![m; params.colors(j as u32) as usize];
        if ex.coeffs.is_empty() {
            return Ok(Some(SymPoly::zero(&mv)));
        }
        Ok(Some(ex.to_sympoly(&mv, root)?))
    }
}

/// All present components of sigma^q W, with vectors flattened in power-sum coordinates.
#[derive(Clone, Debug)]
pub struct TupleSpace {
    pub params: GroupParams,
    pub r: Option<u32>,
    pub comps: Vec<Option<Component>>,
    offsets: Vec<usize>,
    dim: usize,
}

/// A tuple function in flattened power-sum coordinates.
pub type TVec = Vec<TRat>;

fn truncate(alpha: &EPartition, colors: u32) -> EPartition {
    EPartition::new(alpha.parts()[..colors as usize].to_vec()).expect("valid")
}

impl TupleSpace {
    pub fn new(params: &GroupParams) -> Result<TupleSpace> {
        TupleSpace::build(params, None)
    }

    /// Also loads the base Hall-Littlewood functions for every component.
    pub fn with_hall_littlewood(params: &GroupParams, r: u32) -> Result<TupleSpace> {
        if r == 0 {
            return Err(Error::InvalidParameter("r must be positive".into()));
        }
        TupleSpace::build(params, Some(r))
    }

    fn build(params: &GroupParams, r: Option<u32>) -> Result<TupleSpace> {
        let mut comps = Vec::new();
        let mut offsets = Vec::new();
        let mut dim = 0;
        let mut by_j1: BTreeMap<u32, Component> = BTreeMap::new();
        for j in 0..params.p {
            offsets.push(dim);
            if !params.component_present(j) {
                comps.push(None);
                continue;
            }
            let j1 = params.j1(j);
            let c = match by_j1.get(&j1) {
                Some(c) => Component { j, ..c.clone() },
                None => {
                    let c = Component::new(params, j, r)?;
                    by_j1.insert(j1, c.clone());
                    c
                }
            };
            dim += c.dim();
            comps.push(Some(c));
        }
        Ok(TupleSpace {
            params: *params,
            r,
            comps,
            offsets,
            dim,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn component(&self, j: u32) -> Option<&Component> {
        self.comps[j as usize].as_ref()
    }

    /// phi(tau^j) sum_{i<c} zeta^{qid} f(theta^i(alpha){j}) in every component with c | j.
    pub fn assemble(&self, z: &CharParam, which: TupleBasis) -> Result<TVec> {
        let params = &self.params;
        let e = params.e;
        let (_, c) = orbit_data(&z.alpha, params.p);
        let mut out = vec![TRat::zero(); self.dim];
        let mut cur = z.alpha.clone();
        let mut orbit = Vec::new();
        for _ in 0..c {
            orbit.push(cur.clone());
            cur = theta(&cur, params.p);
        }
        for (j, comp) in self.comps.iter().enumerate() {
            let Some(comp) = comp else { continue };
            let j = j as u32;
            if j % c != 0 {
                continue;
            }
            let phi = z.phi_value(j, params).expect("c divides j");
            let off = self.offsets[j as usize];
            for (i, a) in orbit.iter().enumerate() {
                let coef = &phi * &CycNum::zeta_pow(e, (params.q * i as u32 * params.d()) as i64);
                let v = comp.basic(which, &truncate(a, comp.colors))?;
                for (g, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        out[off + g] = &out[off + g] + &x.scale(&coef);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Bp_xi: component j is h^{l(beta[j])} zeta^{-(Delta(beta)+b)jd} p_{beta[j]}(X_j) when beta[j] is defined.
    pub fn powersum(&self, xi: &ClassParam) -> TVec {
        let params = &self.params;
        let mut out = vec![TRat::zero(); self.dim];
        for (j, comp) in self.comps.iter().enumerate() {
            let Some(comp) = comp else { continue };
            let j = j as u32;
            let Some(bj) = alpha_divide(&xi.beta, j, params) else {
                continue;
            };
            let g = comp.table.cols.iter().position(|x| *x == bj).expect("class of this component");
            let exp = -(((delta(&xi.beta) + xi.b) * j * params.d()) as i64);
            let coef = CycNum::zeta_pow(params.e, exp)
                .scale(&BigRational::from_integer((comp.h as i64).pow(bj.length() as u32).into()));
            out[self.offsets[j as usize] + g] = TRat::constant(coef);
        }
        out
    }

    /// (1/p) sum_j <u^j, v^j>_j.
    pub fn ip(&self, u: &[TRat], v: &[TRat]) -> TRat {
        let mut acc = TRat::zero();
        for (j, comp) in self.comps.iter().enumerate() {
            let Some(comp) = comp else { continue };
            let off = self.offsets[j];
            let d = comp.dim();
            acc = &acc + &comp.ip(&u[off..off + d], &v[off..off + d]);
        }
        acc.scale(&CycNum::from_rational(self.params.e, BigRational::new(1.into(), self.params.p.into())))
    }

    /// <u^j, v^j>_j for a single present component.
    pub fn ip_component(&self, j: u32, u: &[TRat], v: &[TRat]) -> Option<TRat> {
        let comp = self.component(j)?;
        let off = self.offsets[j as usize];
        let d = comp.dim();
        Some(comp.ip(&u[off..off + d], &v[off..off + d]))
    }

    /// Converts flattened coordinates into per-component expansions.
    pub fn to_tuple_fun(&self, v: &[TRat], basis: BasisTag) -> TupleFun {
        let components = self
            .comps
            .iter()
            .enumerate()
            .map(|(j, comp)| {
                let comp = comp.as_ref()?;
                let off = self.offsets[j];
                let slice = &v[off..off + comp.dim()];
                let (labels, vals) = match basis {
                    BasisTag::Powersum => (&comp.table.cols, slice.to_vec()),
                    _ => (&comp.table.rows, comp.p_to_schur(slice)),
                };
                let coeffs = labels
                    .iter()
                    .zip(vals)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(a, c)| (a.clone(), c))
                    .collect();
                Some(BasisExpansion {
                    basis: if basis == BasisTag::Powersum { BasisTag::Powersum } else { BasisTag::Schur },
                    coeffs,
                })
            })
            .collect();
        TupleFun { components }
    }
}

fn check_char(z: &CharParam, params: &GroupParams) -> Result<()> {
    if z.alpha.e() != params.e as usize || z.alpha.size() != params.n {
        return Err(Error::InvalidParameter(format!("{:?} is not an e-partition of n", z)));
    }
    let (orbit, c) = orbit_data(&z.alpha, params.p);
    if orbit[0] != z.alpha || (params.q * c) % params.p != 0 || z.phi >= params.p / c {
        return Err(Error::InvalidParameter(format!("{:?} does not label a sigma^q-stable character", z)));
    }
    Ok(())
}

/// Bs_z as Schur expansions per component.
pub fn tuple_schur(z: &CharParam, params: &GroupParams) -> Result<TupleFun> {
    check_char(z, params)?;
    let space = TupleSpace::new(params)?;
    Ok(space.to_tuple_fun(&space.assemble(z, TupleBasis::Schur)?, BasisTag::Schur))
}

/// Bp_xi as power-sum expansions per component.
pub fn tuple_powersum(xi: &ClassParam, params: &GroupParams) -> Result<TupleFun> {
    if (delta(&xi.beta) + params.p - params.q % params.p) % params.p != 0 {
        return Err(Error::InvalidParameter(format!("{:?} does not lie in sigma^q W", xi)));
    }
    let space = TupleSpace::new(params)?;
    Ok(space.to_tuple_fun(&space.powersum(xi), BasisTag::Powersum))
}

/// The tuples Bq_{z,sign} or Bm_z, as Schur expansions per component.
pub fn tuple_q_m(z: &CharParam, params: &GroupParams, which: TupleBasis) -> Result<TupleFun> {
    check_char(z, params)?;
    if !matches!(which, TupleBasis::Monomial | TupleBasis::Q(_)) {
        return Err(Error::InvalidParameter("expected the q or m family".into()));
    }
    let space = TupleSpace::new(params)?;
    Ok(space.to_tuple_fun(&space.assemble(z, which)?, BasisTag::Schur))
}

/// BP^sign_z assembled from the base Hall-Littlewood functions.
pub fn tuple_hall_littlewood(z: &CharParam, params: &GroupParams, r: u32, sign: Sign) -> Result<TupleFun> {
    check_char(z, params)?;
    let space = TupleSpace::with_hall_littlewood(params, r)?;
    Ok(space.to_tuple_fun(&space.assemble(z, TupleBasis::Hl(sign))?, BasisTag::Schur))
}

/// Serializable summary of which components are present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentInfo {
    pub j: u32,
    pub h: u32,
    pub colors: u32,
    pub n: u32,
}

impl TupleSpace {
    pub fn component_info(&self) -> Vec<ComponentInfo> {
        self.comps
            .iter()
            .flatten()
            .map(|c| ComponentInfo {
                j: c.j,
                h: c.h,
                colors: c.colors,
                n: c.n,
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_char_params;

    fn ep(s: &str) -> EPartition {
        EPartition::parse(s).unwrap()
    }

    fn gp(e: u32, p: u32, n: u32, q: u32) -> GroupParams {
        GroupParams::new(e, p, n, q).unwrap()
    }

    #[test]
    fn xj_examples() {
        let x = xj_variables(0, &gp(3, 3, 2, 0), 2);
        assert_eq!(x.factors, vec![vec![0], vec![1], vec![2]]);
        let x = xj_variables(1, &gp(2, 2, 2, 0), 2);
        assert_eq!(x.factors, vec![vec![0, 1]]);
        let x = xj_variables(1, &gp(4, 2, 2, 0), 2);
        assert_eq!(x.h, 2);
        assert_eq!(x.factors, vec![vec![0, 2], vec![1, 3]]);
        let f = SymPoly::var(&[2], 0, 1);
        let g = x_sub(&xj_variables(1, &gp(2, 2, 2, 0), 2), &f, 2);
        assert_eq!(g.coeff(&[0, 1, 0, 1]), TRat::one());
    }

    fn x_sub(x: &XjVariables, f: &SymPoly, e: u32) -> SymPoly {
        x.substitute(f, e).unwrap()
    }

    #[test]
    fn single_component_when_p_is_one() {
        let params = gp(2, 1, 2, 0);
        let z = enumerate_char_params(&params).into_iter().find(|z| z.alpha == ep("(1;1)")).unwrap();
        let t = tuple_schur(&z, &params).unwrap();
        assert_eq!(t.components.len(), 1);
        assert_eq!(t.components[0].as_ref().unwrap(), &BasisExpansion::single(BasisTag::Schur, ep("(1;1)")));
    }

    #[test]
    fn type_d_stable_character() {
        let params = gp(2, 2, 2, 0);
        for z in enumerate_char_params(&params).into_iter().filter(|z| z.alpha == ep("(1;1)")) {
            let t = tuple_schur(&z, &params).unwrap();
            let c1 = t.components[1].as_ref().unwrap();
            let sign = if z.phi == 0 { 1 } else { -1 };
            assert_eq!(c1.coeffs.len(), 1);
            assert_eq!(c1.coeff(&ep("(1)")), TRat::from_int(sign));
        }
    }

    #[test]
    fn type_d_twisted_orbit() {
        let params = gp(2, 2, 2, 1);
        let z = enumerate_char_params(&params).into_iter().find(|z| z.alpha == ep("(2;-)")).unwrap();
        let t = tuple_schur(&z, &params).unwrap();
        let c0 = t.components[0].as_ref().unwrap();
        assert_eq!(c0.coeff(&ep("(2;-)")), TRat::one());
        assert_eq!(c0.coeff(&ep("(-;2)")), TRat::from_int(-1));
        assert!(t.components[1].as_ref().unwrap().coeffs.is_empty());
    }

    #[test]
    fn powersum_components() {
        let params = gp(2, 2, 2, 0);
        for xi in crate::combinatorics::enumerate_class_params(&params) {
            let t = tuple_powersum(&xi, &params).unwrap();
            assert_eq!(
                t.components[0].as_ref().unwrap(),
                &BasisExpansion::single(BasisTag::Powersum, xi.beta.clone())
            );
        }
        for b in 0..2 {
            let xi = ClassParam { beta: ep("(2;-)"), b, r: 2 };
            let t = tuple_powersum(&xi, &params).unwrap();
            let expect = if b == 0 { 2 } else { -2 };
            assert_eq!(t.components[1].as_ref().unwrap().coeff(&ep("(1)")), TRat::from_int(expect));
        }
        let xi = ClassParam { beta: ep("(11;-)"), b: 0, r: 1 };
        assert!(tuple_powersum(&xi, &params).unwrap().components[1].as_ref().unwrap().coeffs.is_empty());
        let params = gp(4, 4, 2, 0);
        for b in 0..2 {
            let xi = ClassParam { beta: ep("(2;-;-;-)"), b, r: 2 };
            let t = tuple_powersum(&xi, &params).unwrap();
            let c = t.components[2].as_ref().unwrap();
            assert_eq!(c.coeff(&ep("(1;-)")), TRat::from_int(if b == 0 { 2 } else { -2 }));
        }
    }

    #[test]
    fn hall_littlewood_at_zero_is_schur() {
        let params = gp(2, 2, 2, 0);
        let space = TupleSpace::with_hall_littlewood(&params, 2).unwrap();
        for z in enumerate_char_params(&params) {
            for sign in [Sign::Plus, Sign::Minus] {
                let p = space.to_tuple_fun(&space.assemble(&z, TupleBasis::Hl(sign)).unwrap(), BasisTag::Schur);
                let s = space.to_tuple_fun(&space.assemble(&z, TupleBasis::Schur).unwrap(), BasisTag::Schur);
                for (a, b) in p.components.iter().zip(&s.components) {
                    let (Some(a), Some(b)) = (a, b) else { continue };
                    for (lab, c) in &a.coeffs {
                        let at0 = c.num().coeff(0).clone();
                        let den0 = c.den().coeff(0).clone();
                        let v = &at0 * &den0.inv().unwrap();
                        assert_eq!(TRat::constant(v), b.coeff(lab));
                    }
                }
            }
        }
    }
}
