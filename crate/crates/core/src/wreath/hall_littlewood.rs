use std::collections::{BTreeMap, HashMap};
use std::path::PathBuf;
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::chartable::char_table_root;
use super::zseries::{z_alpha, z_series_root};
use crate::arith::{CycNum, Mat, Root, TPoly, TRat};
use crate::combinatorics::{similarity_order_epartitions, EPartition, SimilarityPartition};
use crate::error::{Error, Result};
use crate::labeled::{mat_serde, LabeledMatrix};
use crate::symfunc::{BasisExpansion, BasisTag, Sign};

/// Environment variable naming a directory for cached Hall-Littlewood data.
pub const CACHE_ENV: &str = "REFLGREEN_CACHE_DIR";

/// Hall-Littlewood functions of G(e,1,n) attached to symbols of type (r,0).
///
/// All matrices are indexed by `order.items` in both directions; row a holds
/// the Schur coordinates of the function labelled by item a.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HLBasis {
    pub root: Root,
    pub n: u32,
    pub r: u32,
    pub order: SimilarityPartition<EPartition>,
    #[serde(with = "mat_serde")]
    pub plus: Mat<TRat>,
    #[serde(with = "mat_serde")]
    pub minus: Mat<TRat>,
    #[serde(with = "mat_serde")]
    pub qplus: Mat<TRat>,
    #[serde(with = "mat_serde")]
    pub qminus: Mat<TRat>,
    /// <P+_z, P-_z'>, zero outside similarity classes.
    #[serde(with = "mat_serde")]
    pub gram: Mat<TRat>,
}

impl HLBasis {
    pub fn labels(&self) -> &[EPartition] {
        &self.order.items
    }

    pub fn index_of(&self, alpha: &EPartition) -> Option<usize> {
        self.order.items.iter().position(|a| a == alpha)
    }

    pub fn functions(&self, sign: Sign) -> &Mat<TRat> {
        match sign {
            Sign::Plus => &self.plus,
            Sign::Minus => &self.minus,
        }
    }

    pub fn duals(&self, sign: Sign) -> &Mat<TRat> {
        match sign {
            Sign::Plus => &self.qplus,
            Sign::Minus => &self.qminus,
        }
    }

    /// P^sign_alpha as a Schur expansion.
    pub fn expansion(&self, sign: Sign, alpha: &EPartition) -> Option<BasisExpansion> {
        let a = self.index_of(alpha)?;
        Some(row_expansion(self.functions(sign), a, self.labels()))
    }

    /// Q^sign_alpha as a Schur expansion.
    pub fn dual_expansion(&self, sign: Sign, alpha: &EPartition) -> Option<BasisExpansion> {
        let a = self.index_of(alpha)?;
        Some(row_expansion(self.duals(sign), a, self.labels()))
    }

    /// K^sign with s_alpha = sum_beta K_{alpha,beta} P_beta.
    pub fn kostka(&self, sign: Sign) -> Result<Mat<TRat>> {
        self.functions(sign).inverse()
    }

    /// The same data with t replaced by t^h.
    pub fn subst_pow(&self, h: usize) -> HLBasis {
        let f = |m: &Mat<TRat>| m.map(|x| x.subst_pow(h));
        HLBasis {
            root: self.root,
            n: self.n,
            r: self.r,
            order: self.order.clone(),
            plus: f(&self.plus),
            minus: f(&self.minus),
            qplus: f(&self.qplus),
            qminus: f(&self.qminus),
            gram: f(&self.gram),
        }
    }
}

fn row_expansion(m: &Mat<TRat>, a: usize, labels: &[EPartition]) -> BasisExpansion {
    let coeffs: BTreeMap<EPartition, TRat> = labels
        .iter()
        .enumerate()
        .filter(|(j, _)| !m.get(a, *j).is_zero())
        .map(|(j, l)| (l.clone(), m.get(a, j).clone()))
        .collect();
    BasisExpansion {
        basis: BasisTag::Schur,
        coeffs,
    }
}

/// A vector of power-sum coordinates over one common denominator.
#[derive(Clone)]
struct PVec {
    num: Vec<TPoly>,
    den: TPoly,
}

impl PVec {
    fn constants(v: Vec<CycNum>) -> PVec {
        PVec {
            num: v.into_iter().map(TPoly::constant).collect(),
            den: TPoly::one(),
        }
    }

    /// self += c x
    fn add_scaled(&mut self, c: &TRat, x: &PVec) {
        if c.is_zero() {
            return;
        }
        let other = c.den() * &x.den;
        let l = self.den.lcm(&other);
        let fa = l.div_exact(&self.den).expect("lcm");
        let fb = c.num() * &l.div_exact(&other).expect("lcm");
        for (a, b) in self.num.iter_mut().zip(&x.num) {
            let scaled = if fa.is_one() { a.clone() } else { &*a * &fa };
            *a = if b.is_zero() { scaled } else { &scaled + &(&fb * b) };
        }
        self.den = l;
        self.reduce();
    }

    fn reduce(&mut self) {
        if self.den.is_constant() {
            return;
        }
        let mut g = self.den.clone();
        for a in &self.num {
            if !a.is_zero() {
                g = g.gcd(a);
                if g.is_constant() {
                    return;
                }
            }
        }
        for a in self.num.iter_mut() {
            *a = a.div_exact(&g).expect("gcd");
        }
        self.den = self.den.div_exact(&g).expect("gcd");
    }

    /// sum_g num_g c_g over den.
    fn combine(&self, coeffs: impl Iterator<Item = CycNum>) -> TRat {
        let mut acc = TPoly::zero();
        for (a, c) in self.num.iter().zip(coeffs) {
            if !a.is_zero() && !c.is_zero() {
                acc = &acc + &a.scale(&c);
            }
        }
        TRat::normalize(acc, self.den.clone()).expect("nonzero denominator")
    }
}

/// The form sum_g u_g conj(v_g) z_g(t), with z_g(t) = weights_g / common.
struct PSpace {
    weights: Vec<TPoly>,
    common: TPoly,
}

impl PSpace {
    fn new(series: &[TRat]) -> PSpace {
        let common = series.iter().fold(TPoly::one(), |acc, z| acc.lcm(z.den()));
        let weights = series
            .iter()
            .map(|z| z.num() * &common.div_exact(z.den()).expect("lcm"))
            .collect();
        PSpace { weights, common }
    }

    fn ip(&self, u: &PVec, v: &PVec) -> TRat {
        let mut acc = TPoly::zero();
        for ((a, b), w) in u.num.iter().zip(&v.num).zip(&self.weights) {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            acc = &acc + &(&(a * &b.conj()) * w);
        }
        let den = &(&u.den * &v.den.conj()) * &self.common;
        TRat::normalize(acc, den).expect("nonzero denominator")
    }
}

/// Runs the class-by-class induction without caching.
pub fn compute_hall_littlewood(root: Root, n: u32, r: u32) -> Result<HLBasis> {
    let table = char_table_root(root, n);
    let order = similarity_order_epartitions(&table.rows, r);
    let k = order.items.len();
    let pos: Vec<usize> = order
        .items
        .iter()
        .map(|a| table.rows.iter().position(|b| b == a).expect("same labels"))
        .collect();
    let series: Vec<TRat> = table.cols.iter().map(|g| z_series_root(g, root)).collect();
    let space = PSpace::new(&series);
    // s_a = sum_g conj(chi^a(g)) / z_g p_g
    let s: Vec<PVec> = pos
        .iter()
        .map(|&i| {
            PVec::constants(
                table
                    .cols
                    .iter()
                    .enumerate()
                    .map(|(g, beta)| {
                        let zinv = CycNum::from_rational(root.field, BigRational::new(1.into(), z_alpha(beta)));
                        &table.entries.get(i, g).conj() * &zinv
                    })
                    .collect(),
            )
        })
        .collect();

    let mut pp: Vec<PVec> = vec![PVec::constants(Vec::new()); k];
    let mut pm: Vec<PVec> = vec![PVec::constants(Vec::new()); k];
    let mut gram = Mat::filled(k, k, TRat::zero());
    let mut done: Vec<((usize, usize), Mat<TRat>)> = Vec::new();
    for &(start, end) in &order.classes {
        let built: Vec<(PVec, PVec)> = (start..end)
            .into_par_iter()
            .map(|a| {
                let mut vp = s[a].clone();
                let mut vm = s[a].clone();
                for ((gs, ge), ginv) in &done {
                    let len = ge - gs;
                    let b: Vec<TRat> = (*gs..*ge).map(|y| space.ip(&s[a], &pm[y])).collect();
                    let c: Vec<TRat> = (*gs..*ge).map(|y| space.ip(&pp[y], &s[a])).collect();
                    for x in 0..len {
                        let mut d = TRat::zero();
                        let mut ec = TRat::zero();
                        for y in 0..len {
                            d = &d - &(&b[y] * ginv.get(y, x));
                            ec = &ec - &(ginv.get(x, y) * &c[y]);
                        }
                        vp.add_scaled(&d, &pp[gs + x]);
                        vm.add_scaled(&ec.conj(), &pm[gs + x]);
                    }
                }
                (vp, vm)
            })
            .collect();
        for (off, (vp, vm)) in built.into_iter().enumerate() {
            pp[start + off] = vp;
            pm[start + off] = vm;
        }
        let block = Mat::from_fn(end - start, end - start, |i, j| space.ip(&pp[start + i], &pm[start + j]));
        let ginv = block.inverse().map_err(|_| {
            let labels: Vec<String> = order.items[start..end].iter().map(|a| a.label()).collect();
            Error::Singular(format!(
                "Gram matrix of the similarity class {:?} is singular (root {:?}, n = {}, r = {})",
                labels, root, n, r
            ))
        })?;
        for i in 0..end - start {
            for j in 0..end - start {
                gram.set(start + i, start + j, block.get(i, j).clone());
            }
        }
        done.push(((start, end), ginv));
    }

    let to_schur = |v: &PVec| -> Vec<TRat> {
        pos.iter()
            .map(|&i| v.combine((0..table.cols.len()).map(|g| table.entries.get(i, g).clone())))
            .collect()
    };
    let plus = Mat::from_rows(pp.par_iter().map(|v| to_schur(v)).collect());
    let minus = Mat::from_rows(pm.par_iter().map(|v| to_schur(v)).collect());
    let mut qplus = Mat::filled(k, k, TRat::zero());
    let mut qminus = Mat::filled(k, k, TRat::zero());
    for ((start, end), ginv) in &done {
        for z in *start..*end {
            for w in *start..*end {
                let cp = ginv.get(z - start, w - start);
                let cm = ginv.get(w - start, z - start).conj();
                for col in 0..k {
                    let vp = &qplus.get(z, col).clone() + &(cp * plus.get(w, col));
                    qplus.set(z, col, vp);
                    let vm = &qminus.get(z, col).clone() + &(&cm * minus.get(w, col));
                    qminus.set(z, col, vm);
                }
            }
        }
    }
    Ok(HLBasis {
        root,
        n,
        r,
        order,
        plus,
        minus,
        qplus,
        qminus,
        gram,
    })
}

type CacheKey = (Root, u32, u32);

fn memory_cache() -> &'static Mutex<HashMap<CacheKey, Arc<HLBasis>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<HLBasis>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cache_file(key: &CacheKey) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_ENV)?;
    let (root, n, r) = key;
    Some(PathBuf::from(dir).join(format!("hl-v1-f{}-s{}-n{}-r{}.json", root.field, root.step, n, r)))
}

fn load(path: &PathBuf, key: &CacheKey) -> Option<HLBasis> {
    let text = std::fs::read_to_string(path).ok()?;
    let hl: HLBasis = serde_json::from_str(&text).ok()?;
    (hl.root == key.0 && hl.n == key.1 && hl.r == key.2 && hl.plus.rows() == hl.order.items.len()).then_some(hl)
}

fn store(path: &PathBuf, hl: &HLBasis) {
    let Ok(text) = serde_json::to_string(hl) else { return };
    if let Some(dir) = path.parent() {
        let _ = std::fs::create_dir_all(dir);
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    if std::fs::write(&tmp, text).is_ok() {
        let _ = std::fs::rename(&tmp, path);
    }
}

/// Hall-Littlewood data for the root of order e' = root.order(), memoized in memory and optionally on disk.
pub fn hall_littlewood_root(root: Root, n: u32, r: u32) -> Result<Arc<HLBasis>> {
    let key = (root, n, r);
    if let Some(hl) = memory_cache().lock().expect("cache lock").get(&key) {
        return Ok(hl.clone());
    }
    let file = cache_file(&key);
    let hl = match file.as_ref().and_then(|f| load(f, &key)) {
        Some(hl) => hl,
        None => {
            let hl = compute_hall_littlewood(root, n, r)?;
            if let Some(f) = &file {
                store(f, &hl);
            }
            hl
        }
    };
    let hl = Arc::new(hl);
    memory_cache().lock().expect("cache lock").insert(key, hl.clone());
    Ok(hl)
}

/// Hall-Littlewood data of G(e,1,n) with the primitive root.
pub fn hall_littlewood(e: u32, n: u32, r: u32) -> Result<Arc<HLBasis>> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be positive".into()));
    }
    hall_littlewood_root(Root::primitive(e), n, r)
}

/// The Kostka matrix K^sign of G(e,1,n) with labels and similarity blocks.
pub fn kostka(e: u32, n: u32, r: u32, sign: Sign) -> Result<LabeledMatrix> {
    let hl = hall_littlewood(e, n, r)?;
    Ok(LabeledMatrix::square(
        &format!("K{} for G({},1,{}), r = {}", sign.symbol(), e, n, r),
        hl.labels().iter().map(|a| a.label()).collect(),
        hl.order.classes.clone(),
        hl.kostka(sign)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::TPoly;
    use crate::combinatorics::{enumerate_epartitions, partitions};
    use crate::labeled::is_block_lower_triangular;
    use crate::symfunc::scalar_product;

    /// Semistandard tableaux of shape lam and content mu, as reading words (rows bottom to top).
    fn reading_words(lam: &[u32], mu: &[u32]) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let cells: Vec<(usize, usize)> = lam
            .iter()
            .enumerate()
            .flat_map(|(i, &l)| (0..l as usize).map(move |j| (i, j)))
            .collect();
        let mut grid: Vec<Vec<u32>> = lam.iter().map(|&l| vec![0; l as usize]).collect();
        let mut left: Vec<u32> = mu.to_vec();
        fn rec(
            idx: usize,
            cells: &[(usize, usize)],
            grid: &mut Vec<Vec<u32>>,
            left: &mut Vec<u32>,
            out: &mut Vec<Vec<u32>>,
        ) {
            if idx == cells.len() {
                out.push(grid.iter().rev().flatten().copied().collect());
                return;
            }
            let (i, j) = cells[idx];
            let lo = (if j > 0 { grid[i][j - 1] } else { 1 }).max(if i > 0 { grid[i - 1][j] + 1 } else { 1 });
            for v in lo..=left.len() as u32 {
                if left[v as usize - 1] == 0 {
                    continue;
                }
                left[v as usize - 1] -= 1;
                grid[i][j] = v;
                rec(idx + 1, cells, grid, left, out);
                left[v as usize - 1] += 1;
            }
        }
        rec(0, &cells, &mut grid, &mut left, &mut out);
        out
    }

    /// Lascoux-Schutzenberger charge of a word with partition content.
    fn charge(word: &[u32]) -> u32 {
        let mut w: Vec<Option<u32>> = word.iter().map(|&x| Some(x)).collect();
        let mut total = 0;
        while w.iter().any(|x| x.is_some()) {
            let top = w.iter().flatten().copied().max().unwrap();
            let mut pos = w.len();
            let mut index = 0;
            for letter in 1..=top {
                // scan leftwards cyclically from pos for `letter`
                let mut wrapped = false;
                let mut p = pos;
                loop {
                    if p == 0 {
                        p = w.len();
                        wrapped = true;
                    }
                    p -= 1;
                    if w[p] == Some(letter) {
                        break;
                    }
                }
                if letter > 1 && wrapped {
                    index += 1;
                }
                total += index;
                w[p] = None;
                pos = p;
            }
        }
        total
    }

    fn kostka_foulkes(lam: &[u32], mu: &[u32]) -> TPoly {
        let mut coeffs = vec![0i64; 32];
        for word in reading_words(lam, mu) {
            coeffs[charge(&word) as usize] += 1;
        }
        TPoly::from_ints(&coeffs)
    }

    #[test]
    fn charge_examples() {
        assert_eq!(charge(&[1, 2]), 1);
        assert_eq!(charge(&[2, 1]), 0);
        assert_eq!(kostka_foulkes(&[3], &[1, 1, 1]), TPoly::from_ints(&[0, 0, 0, 1]));
        assert_eq!(kostka_foulkes(&[2, 1], &[1, 1, 1]), TPoly::from_ints(&[0, 1, 1]));
    }

    #[test]
    fn classical_kostka_foulkes() {
        for n in 1..=4 {
            for r in [1, 2] {
                let hl = hall_littlewood(1, n, r).unwrap();
                let k = hl.kostka(Sign::Plus).unwrap();
                let km = hl.kostka(Sign::Minus).unwrap();
                assert_eq!(k, km);
                for lam in partitions(n) {
                    for mu in partitions(n) {
                        let a = hl.index_of(&EPartition::new(vec![lam.clone()]).unwrap()).unwrap();
                        let b = hl.index_of(&EPartition::new(vec![mu.clone()]).unwrap()).unwrap();
                        assert_eq!(k.get(a, b), &TRat::from_poly(kostka_foulkes(&lam, &mu)), "{:?} {:?}", lam, mu);
                    }
                }
            }
        }
    }

    #[test]
    fn triangularity_and_t_zero() {
        for (e, n, r) in [(2, 2, 1), (2, 3, 2), (3, 2, 2), (3, 3, 2)] {
            let hl = hall_littlewood(e, n, r).unwrap();
            let k = hl.items_len();
            for sign in [Sign::Plus, Sign::Minus] {
                let p = hl.functions(sign);
                assert!(is_block_lower_triangular(p, &hl.order.classes));
                for a in 0..k {
                    assert!(p.get(a, a).is_one());
                    for b in 0..k {
                        let x = p.get(a, b);
                        let zero = CycNum::zero(1);
                        let at_zero = &x.num().eval(&zero) * &x.den().eval(&zero).inv().unwrap();
                        let expect = if a == b { 1 } else { 0 };
                        assert_eq!(at_zero, CycNum::from_int(1, expect), "P(x;0) at {} {}", a, b);
                    }
                    for &(s, end) in &hl.order.classes {
                        if s <= a && a < end {
                            for b in s..end {
                                if b != a {
                                    assert!(p.get(a, b).is_zero());
                                }
                            }
                        }
                    }
                }
                let kk = hl.kostka(sign).unwrap();
                assert!(is_block_lower_triangular(&kk, &hl.order.classes));
            }
            let (s0, e0) = hl.order.classes[0];
            for a in s0..e0 {
                for b in 0..k {
                    let expect = if a == b { TRat::one() } else { TRat::zero() };
                    assert_eq!(hl.plus.get(a, b), &expect);
                }
            }
        }
    }

    #[test]
    fn orthogonality_and_duality_via_symfunc() {
        for (e, n) in [(2, 2), (3, 2), (2, 3)] {
            let hl = hall_littlewood(e, n, 2).unwrap();
            let labels = hl.labels().to_vec();
            let cls = |i: usize| hl.order.class_of(i);
            for (i, a) in labels.iter().enumerate() {
                for (j, b) in labels.iter().enumerate() {
                    let pp = hl.expansion(Sign::Plus, a).unwrap();
                    let pm = hl.expansion(Sign::Minus, b).unwrap();
                    let qm = hl.dual_expansion(Sign::Minus, b).unwrap();
                    let qp = hl.dual_expansion(Sign::Plus, a).unwrap();
                    let v = scalar_product(&pp, &pm).unwrap();
                    if cls(i) != cls(j) {
                        assert!(v.is_zero(), "<P+{:?}, P-{:?}>", a, b);
                    } else {
                        assert_eq!(&v, hl.gram.get(i, j));
                    }
                    let delta = if i == j { TRat::one() } else { TRat::zero() };
                    assert_eq!(scalar_product(&pp, &qm).unwrap(), delta);
                    assert_eq!(scalar_product(&qp, &pm).unwrap(), delta);
                }
            }
        }
    }

    #[test]
    fn labeled_kostka_and_cache() {
        let dir = tempfile::tempdir().unwrap();
        std::env::set_var(CACHE_ENV, dir.path());
        let k = kostka(2, 2, 1, Sign::Minus).unwrap();
        assert_eq!(k.row_labels.len(), enumerate_epartitions(2, 2).len());
        for i in 0..k.row_labels.len() {
            assert!(k.get(i, i).is_one());
        }
        let root = Root { field: 6, step: 3 };
        let fresh = compute_hall_littlewood(root, 2, 2).unwrap();
        let key = (root, 2, 2);
        let path = cache_file(&key).unwrap();
        store(&path, &fresh);
        assert_eq!(load(&path, &key).unwrap(), fresh);
        std::env::remove_var(CACHE_ENV);
    }

    impl HLBasis {
        fn items_len(&self) -> usize {
            self.order.items.len()
        }
    }
}
