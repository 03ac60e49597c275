use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::cyclotomic::{forward_owned, CycNum};
use crate::error::{Error, Result};

/// Polynomial in t with coefficients in Q(zeta), ascending, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TPoly {
    coeffs: Vec<CycNum>,
}

impl TPoly {
    pub fn zero() -> TPoly {
        TPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: CycNum) -> TPoly {
        TPoly::from_coeffs(vec![c])
    }

    pub fn one() -> TPoly {
        TPoly::constant(CycNum::one(1))
    }

    /// c * t^k.
    pub fn monomial(c: CycNum, k: usize) -> TPoly {
        let mut v = vec![CycNum::zero(1); k];
        v.push(c);
        TPoly::from_coeffs(v)
    }

    pub fn t() -> TPoly {
        TPoly::monomial(CycNum::one(1), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<CycNum>) -> TPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    /// Integer-coefficient polynomial, ascending.
    pub fn from_ints(c: &[i64]) -> TPoly {
        TPoly::from_coeffs(c.iter().map(|&x| CycNum::from_int(1, x)).collect())
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&CycNum> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> CycNum {
        self.coeffs.get(k).cloned().unwrap_or_else(|| CycNum::zero(1))
    }

    /// Lowest power of t with nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &CycNum) -> TPoly {
        if c.is_zero() {
            return TPoly::zero();
        }
        TPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiply by t^k.
    pub fn shift(&self, k: usize) -> TPoly {
        if self.is_zero() {
            return TPoly::zero();
        }
        let mut v = vec![CycNum::zero(1); k];
        v.extend(self.coeffs.iter().cloned());
        TPoly { coeffs: v }
    }

    /// Divide by t^k, assuming the low coefficients vanish.
    pub fn unshift(&self, k: usize) -> TPoly {
        TPoly::from_coeffs(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// t^deg * f(1/t) for deg >= degree.
    pub fn reversed(&self, deg: usize) -> TPoly {
        let mut v = vec![CycNum::zero(1); deg + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[deg - i] = c.clone();
        }
        TPoly::from_coeffs(v)
    }

    /// f(t^h).
    pub fn subst_pow(&self, h: usize) -> TPoly {
        if h == 1 || self.is_constant() {
            return self.clone();
        }
        let mut v = vec![CycNum::zero(1); (self.coeffs.len() - 1) * h + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * h] = c.clone();
        }
        TPoly::from_coeffs(v)
    }

    /// Applies a coefficient map, e.g. conjugation.
    pub fn map_coeffs(&self, f: impl Fn(&CycNum) -> CycNum) -> TPoly {
        TPoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn conj(&self) -> TPoly {
        self.map_coeffs(|c| c.conj())
    }

    pub fn monic(&self) -> TPoly {
        match self.leading() {
            None => TPoly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn div_rem(&self, d: &TPoly) -> Result<(TPoly, TPoly)> {
        let dl = d.leading().ok_or(Error::DivisionByZero)?;
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((TPoly::zero(), self.clone()));
        }
        let inv = if dl.is_one() { None } else { Some(dl.inv()?) };
        let mut rem = self.coeffs.clone();
        let mut quo = vec![CycNum::zero(1); rem.len() - dd];
        for i in (0..quo.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let c = match &inv {
                None => top.clone(),
                Some(v) => top * v,
            };
            for (j, dj) in d.coeffs.iter().enumerate() {
                if !dj.is_zero() {
                    rem[i + j] = &rem[i + j] - &(&c * dj);
                }
            }
            quo[i] = c;
        }
        rem.truncate(dd);
        Ok((TPoly::from_coeffs(quo), TPoly::from_coeffs(rem)))
    }

    /// Exact division; errors if there is a remainder.
    pub fn div_exact(&self, d: &TPoly) -> Result<TPoly> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::Invariant("inexact polynomial division".into()));
        }
        Ok(q)
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &TPoly) -> TPoly {
        let mut a = self.monic();
        let mut b = other.monic();
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.is_constant() {
                return TPoly::one();
            }
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn lcm(&self, other: &TPoly) -> TPoly {
        if self.is_zero() || other.is_zero() {
            return TPoly::zero();
        }
        let g = self.gcd(other);
        (self * &other.div_exact(&g).expect("gcd divides")).monic()
    }

    pub fn eval(&self, x: &CycNum) -> CycNum {
        let mut acc = CycNum::zero(1);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Descending powers of t with zeta written as z.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.render();
            let compound = c.weight() > 1;
            let (neg, body) = if !compound && cs.starts_with('-') {
                (true, cs[1..].to_string())
            } else {
                (false, cs)
            };
            let tpart = match k {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{}", k),
            };
            let term = if k == 0 {
                if compound { format!("({})", body) } else { body }
            } else if body == "1" {
                tpart
            } else if compound {
                format!("({})*{}", body, tpart)
            } else {
                format!("{}*{}", body, tpart)
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        out
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl<'a> Add<&'a TPoly> for &'a TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut v = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            v[i] = &v[i] + c;
        }
        TPoly::from_coeffs(v)
    }
}

impl<'a> Sub<&'a TPoly> for &'a TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b,
                (None, None) => unreachable!(),
            });
        }
        TPoly::from_coeffs(v)
    }
}

impl<'a> Mul<&'a TPoly> for &'a TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let mut v = vec![CycNum::zero(1); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = &v[i + j] + &(a * b);
                }
            }
        }
        TPoly::from_coeffs(v)
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

forward_owned!(TPoly, Add, add);
forward_owned!(TPoly, Sub, sub);
forward_owned!(TPoly, Mul, mul);
