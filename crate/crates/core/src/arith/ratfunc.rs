use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::cyclotomic::{forward_owned, CycNum};
use super::poly::TPoly;
use crate::error::{Error, Result};

/// Rational function in t over Q(zeta): gcd-reduced with monic denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct TRat {
    num: TPoly,
    den: TPoly,
}

impl TRat {
    pub fn normalize(num: TPoly, den: TPoly) -> Result<TRat> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(TRat::zero());
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g)?, den.div_exact(&g)?)
            }
        };
        let lc = den.leading().expect("nonzero").clone();
        if lc.is_one() {
            Ok(TRat { num, den })
        } else {
            let inv = lc.inv()?;
            Ok(TRat {
                num: num.scale(&inv),
                den: den.scale(&inv),
            })
        }
    }

    pub fn zero() -> TRat {
        TRat {
            num: TPoly::zero(),
            den: TPoly::one(),
        }
    }

    pub fn one() -> TRat {
        TRat::from_poly(TPoly::one())
    }

    pub fn from_poly(p: TPoly) -> TRat {
        TRat { num: p, den: TPoly::one() }
    }

    pub fn constant(c: CycNum) -> TRat {
        TRat::from_poly(TPoly::constant(c))
    }

    pub fn from_int(n: i64) -> TRat {
        TRat::constant(CycNum::from_int(1, n))
    }

    /// t^k for any integer k.
    pub fn t_pow(k: i64) -> TRat {
        if k >= 0 {
            TRat::from_poly(TPoly::monomial(CycNum::one(1), k as usize))
        } else {
            TRat {
                num: TPoly::one(),
                den: TPoly::monomial(CycNum::one(1), (-k) as usize),
            }
        }
    }

    pub fn num(&self) -> &TPoly {
        &self.num
    }

    pub fn den(&self) -> &TPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&TPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<CycNum> {
        if self.den.is_one() && self.num.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<TRat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lc = self.num.leading().expect("nonzero").inv()?;
        Ok(TRat {
            num: self.den.scale(&lc),
            den: self.num.scale(&lc),
        })
    }

    pub fn div(&self, other: &TRat) -> Result<TRat> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, c: &CycNum) -> TRat {
        if c.is_zero() {
            return TRat::zero();
        }
        TRat {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn conj(&self) -> TRat {
        TRat {
            num: self.num.conj(),
            den: self.den.conj(),
        }
    }

    /// g(t) = f(1/t).
    pub fn subst_tinv(&self) -> TRat {
        if self.is_zero() {
            return TRat::zero();
        }
        let a = self.num.degree().unwrap();
        let b = self.den.degree().unwrap();
        let nr = self.num.reversed(a);
        let dr = self.den.reversed(b);
        let (n, d) = if b >= a {
            (nr.shift(b - a), dr)
        } else {
            (nr, dr.shift(a - b))
        };
        TRat::normalize(n, d).expect("nonzero denominator")
    }

    /// g(t) = f(t^h).
    pub fn subst_pow(&self, h: usize) -> TRat {
        TRat {
            num: self.num.subst_pow(h),
            den: self.den.subst_pow(h),
        }
    }

    pub fn pow(&self, k: u32) -> TRat {
        let mut acc = TRat::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn render(&self) -> String {
        if self.den.is_one() {
            return self.num.render();
        }
        let n = self.num.render();
        let n = if self.num.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
            format!("({})", n)
        } else {
            n
        };
        format!("{}/({})", n, self.den.render())
    }
}

impl fmt::Debug for TRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for TRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl<'a> Add<&'a TRat> for &'a TRat {
    type Output = TRat;
    fn add(self, rhs: &TRat) -> TRat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return TRat::from_poly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return TRat::normalize(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        let g = self.den.gcd(&rhs.den);
        let d1 = self.den.div_exact(&g).unwrap();
        let d2 = rhs.den.div_exact(&g).unwrap();
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        if num.is_zero() {
            return TRat::zero();
        }
        let den = &self.den * &d2;
        if g.is_one() {
            return TRat { num, den };
        }
        let g2 = num.gcd(&g);
        if g2.is_one() {
            TRat { num, den }
        } else {
            TRat {
                num: num.div_exact(&g2).unwrap(),
                den: den.div_exact(&g2).unwrap(),
            }
        }
    }
}

impl<'a> Sub<&'a TRat> for &'a TRat {
    type Output = TRat;
    fn sub(self, rhs: &TRat) -> TRat {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a TRat> for &'a TRat {
    type Output = TRat;
    fn mul(self, rhs: &TRat) -> TRat {
        if self.is_zero() || rhs.is_zero() {
            return TRat::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return TRat::from_poly(&self.num * &rhs.num);
        }
        let cancel = |n: &TPoly, d: &TPoly| -> (TPoly, TPoly) {
            if d.is_one() {
                return (n.clone(), d.clone());
            }
            let g = n.gcd(d);
            if g.is_one() {
                (n.clone(), d.clone())
            } else {
                (n.div_exact(&g).unwrap(), d.div_exact(&g).unwrap())
            }
        };
        let (n1, d2) = cancel(&self.num, &rhs.den);
        let (n2, d1) = cancel(&rhs.num, &self.den);
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        TRat { num, den }
    }
}

impl Neg for &TRat {
    type Output = TRat;
    fn neg(self) -> TRat {
        TRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for TRat {
    type Output = TRat;
    fn neg(self) -> TRat {
        -&self
    }
}

forward_owned!(TRat, Add, add);
forward_owned!(TRat, Sub, sub);
forward_owned!(TRat, Mul, mul);

impl From<TPoly> for TRat {
    fn from(p: TPoly) -> TRat {
        TRat::from_poly(p)
    }
}

impl From<CycNum> for TRat {
    fn from(c: CycNum) -> TRat {
        TRat::constant(c)
    }
}
