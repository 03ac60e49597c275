use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Reduction data for Q(zeta_e): Phi_e and the reduced power basis images of zeta^k.
#[derive(Debug)]
struct Field {
    phi: usize,
    /// powers[k] = zeta^k written in the basis 1, zeta, ..., zeta^(phi-1).
    powers: Vec<Vec<i64>>,
}

fn poly_divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // both ascending, den monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; num.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q
}

/// Coefficients of the e-th cyclotomic polynomial, ascending.
pub fn cyclotomic_polynomial(e: u32) -> Vec<i64> {
    let e = e as usize;
    let mut num = vec![0i64; e + 1];
    num[0] = -1;
    num[e] = 1;
    for d in 1..e {
        if e % d == 0 {
            let sub = cyclotomic_polynomial(d as u32);
            num = poly_divide_exact(&num, &sub);
        }
    }
    num
}

fn build_field(e: u32) -> Field {
    let phi_poly = cyclotomic_polynomial(e);
    let phi = phi_poly.len() - 1;
    let mut powers = Vec::with_capacity(e as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..e {
        powers.push(cur.clone());
        // multiply by x and reduce
        let top = cur[phi - 1];
        let mut next = vec![0i64; phi];
        next[1..phi].copy_from_slice(&cur[..(phi - 1)]);
        for (i, n) in next.iter_mut().enumerate() {
            *n -= top * phi_poly[i];
        }
        cur = next;
    }
    Field { phi, powers }
}

fn field(e: u32) -> Arc<Field> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Field>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(f) = cache.read().unwrap().get(&e) {
        return f.clone();
    }
    let f = Arc::new(build_field(e));
    cache.write().unwrap().entry(e).or_insert(f).clone()
}

/// Euler's totient, the degree of Q(zeta_e).
pub fn totient(e: u32) -> usize {
    field(e).phi
}

/// An element of the cyclotomic field Q(zeta_e) in the reduced power basis.
#[derive(Clone)]
pub struct CycNum {
    e: u32,
    coeffs: Vec<BigRational>,
}

impl CycNum {
    /// Build from (exponent, coefficient) pairs; exponents are taken mod e.
    pub fn make(e: u32, raw: &[(i64, BigRational)]) -> Result<CycNum> {
        if e == 0 {
            return Err(Error::InvalidParameter("cyclotomic order must be positive".into()));
        }
        let f = field(e);
        let mut c = vec![BigRational::zero(); f.phi];
        for (k, v) in raw {
            let k = k.rem_euclid(e as i64) as usize;
            for (i, &p) in f.powers[k].iter().enumerate() {
                if p != 0 {
                    c[i] += v * BigRational::from_integer(BigInt::from(p));
                }
            }
        }
        Ok(CycNum { e, coeffs: c })
    }

    pub fn from_rational(e: u32, r: BigRational) -> CycNum {
        let phi = totient(e);
        let mut c = vec![BigRational::zero(); phi];
        c[0] = r;
        CycNum { e, coeffs: c }
    }

    pub fn from_int(e: u32, n: i64) -> CycNum {
        CycNum::from_rational(e, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero(e: u32) -> CycNum {
        CycNum::from_int(e, 0)
    }

    pub fn one(e: u32) -> CycNum {
        CycNum::from_int(e, 1)
    }

    /// zeta_e^k.
    pub fn zeta_pow(e: u32, k: i64) -> CycNum {
        let f = field(e);
        let k = k.rem_euclid(e as i64) as usize;
        let coeffs = f.powers[k]
            .iter()
            .map(|&p| BigRational::from_integer(BigInt::from(p)))
            .collect();
        CycNum { e, coeffs }
    }

    /// Builds from raw power-basis coefficients of length phi(e).
    pub fn from_coeffs(e: u32, coeffs: Vec<BigRational>) -> Result<CycNum> {
        if e == 0 {
            return Err(Error::InvalidParameter("cyclotomic order must be positive".into()));
        }
        if coeffs.len() != totient(e) {
            return Err(Error::InvalidParameter(format!(
                "expected {} coefficients for order {}, got {}",
                totient(e),
                e,
                coeffs.len()
            )));
        }
        Ok(CycNum { e, coeffs })
    }

    pub fn order(&self) -> u32 {
        self.e
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value when the element lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Rewrites a rational element in Q(zeta_e); other elements must already live there.
    fn lift_to(&self, e: u32) -> CycNum {
        if self.e == e {
            return self.clone();
        }
        assert!(
            self.is_rational(),
            "mixing elements of Q(zeta_{}) and Q(zeta_{})",
            self.e,
            e
        );
        CycNum::from_rational(e, self.coeffs[0].clone())
    }

    fn common(a: &CycNum, b: &CycNum) -> u32 {
        if a.e == b.e {
            a.e
        } else if a.is_rational() {
            b.e
        } else {
            a.e
        }
    }

    /// The automorphism zeta -> zeta^{-1}.
    pub fn conj(&self) -> CycNum {
        if self.is_rational() {
            return self.clone();
        }
        let f = field(self.e);
        let mut c = vec![BigRational::zero(); f.phi];
        for (i, v) in self.coeffs.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let k = (self.e as usize - i) % self.e as usize;
            for (j, &p) in f.powers[k].iter().enumerate() {
                if p != 0 {
                    c[j] += v * BigRational::from_integer(BigInt::from(p));
                }
            }
        }
        CycNum { e: self.e, coeffs: c }
    }

    /// Applies zeta -> zeta^k for k coprime to e.
    pub fn galois(&self, k: i64) -> CycNum {
        let f = field(self.e);
        let mut c = vec![BigRational::zero(); f.phi];
        for (i, v) in self.coeffs.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let idx = (i as i64 * k).rem_euclid(self.e as i64) as usize;
            for (j, &p) in f.powers[idx].iter().enumerate() {
                if p != 0 {
                    c[j] += v * BigRational::from_integer(BigInt::from(p));
                }
            }
        }
        CycNum { e: self.e, coeffs: c }
    }

    pub fn scale(&self, r: &BigRational) -> CycNum {
        CycNum {
            e: self.e,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn inv(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(CycNum::from_rational(self.e, r.recip()));
        }
        // Solve (multiplication by self) x = 1 over Q.
        let phi = self.coeffs.len();
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(phi);
        for i in 0..phi {
            let basis = CycNum::zeta_pow(self.e, i as i64);
            cols.push((self * &basis).coeffs);
        }
        let mut m: Vec<Vec<BigRational>> = (0..phi)
            .map(|r| {
                let mut row: Vec<BigRational> = (0..phi).map(|c| cols[c][r].clone()).collect();
                row.push(if r == 0 { BigRational::one() } else { BigRational::zero() });
                row
            })
            .collect();
        for col in 0..phi {
            let piv = (col..phi).find(|&r| !m[r][col].is_zero()).ok_or(Error::DivisionByZero)?;
            m.swap(col, piv);
            let pv = m[col][col].recip();
            for x in m[col].iter_mut() {
                *x *= &pv;
            }
            for r in 0..phi {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..=phi {
                        let sub = &f * &m[col][c];
                        m[r][c] -= sub;
                    }
                }
            }
        }
        Ok(CycNum {
            e: self.e,
            coeffs: m.into_iter().map(|mut row| row.pop().unwrap()).collect(),
        })
    }

    pub fn pow(&self, k: u32) -> CycNum {
        let mut acc = CycNum::one(self.e);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Numerical value with zeta = exp(2 pi i / e).
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let ang = 2.0 * std::f64::consts::PI * i as f64 / self.e as f64;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }

    /// Renders as a sum of rational multiples of z^k.
    pub fn render(&self) -> String {
        let mut terms: Vec<(bool, String)> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            let body = match (i, a.is_one()) {
                (0, _) => a.to_string(),
                (1, true) => "z".to_string(),
                (1, false) => format!("{}*z", a),
                (_, true) => format!("z^{}", i),
                (_, false) => format!("{}*z^{}", a, i),
            };
            terms.push((neg, body));
        }
        if terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (idx, (neg, body)) in terms.iter().enumerate() {
            if idx == 0 {
                if *neg {
                    s.push('-');
                }
            } else {
                s.push_str(if *neg { " - " } else { " + " });
            }
            s.push_str(body);
        }
        s
    }

    /// Number of nonzero power-basis coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &CycNum) -> bool {
        if self.e == other.e {
            self.coeffs == other.coeffs
        } else {
            self.is_rational() && other.is_rational() && self.coeffs[0] == other.coeffs[0]
        }
    }
}
impl Eq for CycNum {}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        if self.e != rhs.e {
            let e = CycNum::common(self, rhs);
            return &self.lift_to(e) + &rhs.lift_to(e);
        }
        CycNum {
            e: self.e,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        if self.e != rhs.e {
            let e = CycNum::common(self, rhs);
            return &self.lift_to(e) - &rhs.lift_to(e);
        }
        CycNum {
            e: self.e,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        if self.e != rhs.e {
            if let Some(r) = self.as_rational() {
                return rhs.scale(r);
            }
            if let Some(r) = rhs.as_rational() {
                return self.scale(r);
            }
            panic!("mixing elements of Q(zeta_{}) and Q(zeta_{})", self.e, rhs.e);
        }
        if self.is_rational() {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.is_rational() {
            return self.scale(&rhs.coeffs[0]);
        }
        let f = field(self.e);
        let phi = f.phi;
        let mut conv = vec![BigRational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    conv[i + j] += a * b;
                }
            }
        }
        let mut out: Vec<BigRational> = conv[..phi].to_vec();
        for (k, v) in conv.iter().enumerate().skip(phi) {
            if v.is_zero() {
                continue;
            }
            for (j, &p) in f.powers[k % self.e as usize].iter().enumerate() {
                if p != 0 {
                    out[j] += v * BigRational::from_integer(BigInt::from(p));
                }
            }
        }
        CycNum { e: self.e, coeffs: out }
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            e: self.e,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($t:ty, $tr:ident, $m:ident) => {
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(CycNum, Add, add);
forward_owned!(CycNum, Sub, sub);
forward_owned!(CycNum, Mul, mul);

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

pub(crate) use forward_owned;

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn phi_polys() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn make_reduces() {
        let m = CycNum::make(4, &[(2, q(1, 1))]).unwrap();
        assert_eq!(m, CycNum::from_int(4, -1));
        let s = CycNum::make(3, &[(0, q(1, 1)), (1, q(1, 1)), (2, q(1, 1))]).unwrap();
        assert!(s.is_zero());
        let z6 = CycNum::make(6, &[(1, q(1, 1))]).unwrap();
        assert_eq!(z6.coeffs(), &[q(0, 1), q(1, 1)]);
        assert!(CycNum::make(0, &[]).is_err());
    }

    #[test]
    fn inverses() {
        for e in 1..9 {
            let z = CycNum::zeta_pow(e, 1);
            assert_eq!(z.inv().unwrap(), CycNum::zeta_pow(e, e as i64 - 1));
        }
        assert_eq!(CycNum::from_int(5, 2).inv().unwrap(), CycNum::from_rational(5, q(1, 2)));
        let a = &CycNum::one(3) + &CycNum::zeta_pow(3, 1);
        // 1 + z = -z^2, so the inverse is -z
        assert_eq!(a.inv().unwrap(), -CycNum::zeta_pow(3, 1));
        assert_ne!(&a * &(-CycNum::zeta_pow(3, 2)), CycNum::one(3));
        assert!(matches!(CycNum::zero(3).inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn conjugation() {
        assert_eq!(CycNum::zeta_pow(7, 1).conj(), CycNum::zeta_pow(7, 6));
        let r = CycNum::from_rational(5, q(5, 3));
        assert_eq!(r.conj(), r);
        assert_eq!(CycNum::from_int(2, -1).conj(), CycNum::from_int(2, -1));
    }

    #[test]
    fn rational_mixing() {
        let a = CycNum::zeta_pow(3, 1);
        let two = CycNum::from_int(1, 2);
        assert_eq!(&a * &two, &a + &a);
        assert_eq!(CycNum::from_int(1, 3), CycNum::from_int(4, 3));
    }

    #[test]
    fn render_terms() {
        let a = CycNum::make(4, &[(0, q(1, 1)), (1, q(-2, 1))]).unwrap();
        assert_eq!(a.render(), "1 - 2*z");
        assert_eq!(CycNum::zero(3).render(), "0");
    }
}
