use std::str::FromStr;

use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::cyclotomic::CycNum;
use super::poly::TPoly;
use super::ratfunc::TRat;

#[derive(Serialize, Deserialize)]
struct CycRepr {
    e: u32,
    coeffs: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct RatRepr {
    num: Vec<CycNum>,
    den: Vec<CycNum>,
}

impl Serialize for CycNum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycRepr {
            e: self.order(),
            coeffs: self.coeffs().iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<CycNum, D::Error> {
        let r = CycRepr::deserialize(d)?;
        let coeffs = r
            .coeffs
            .iter()
            .map(|s| BigRational::from_str(s).map_err(|e| D::Error::custom(format!("{}: {}", s, e))))
            .collect::<Result<Vec<_>, _>>()?;
        CycNum::from_coeffs(r.e, coeffs).map_err(D::Error::custom)
    }
}

impl Serialize for TRat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RatRepr {
            num: self.num().coeffs().to_vec(),
            den: self.den().coeffs().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<TRat, D::Error> {
        let r = RatRepr::deserialize(d)?;
        TRat::normalize(TPoly::from_coeffs(r.num), TPoly::from_coeffs(r.den)).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shapes() {
        let z = CycNum::zeta_pow(3, 1);
        let v = serde_json::to_value(&z).unwrap();
        assert_eq!(v, serde_json::json!({"e": 3, "coeffs": ["0", "1"]}));
        let back: CycNum = serde_json::from_value(v).unwrap();
        assert_eq!(back, z);
        let f = TRat::normalize(TPoly::from_ints(&[1, 1]), TPoly::from_ints(&[0, 2])).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        let g: TRat = serde_json::from_str(&s).unwrap();
        assert_eq!(f, g);
    }
}
