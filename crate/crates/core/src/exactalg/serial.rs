//! JSON form shared by the CLI witness output:
//! `{"offset": <int>, "coeffs": ["num/den", ...]}`, coefficient `i` being
//! the coefficient of `q^(offset + i)`. Rational functions serialize as
//! `{"num": <poly>, "den": <poly>}`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{LaurentPoly, Poly, RatFunc, Rational};
use crate::error::{Error, Result};

/// Always `num/den`, including integers (`3/1`) and zero (`0/1`).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `num/den` or a bare integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let parse_int =
        |t: &str| t.trim().parse::<BigInt>().map_err(|e| Error::Parse(format!("{t:?}: {e}")));
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(parse_int(n)?, d))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    offset: i64,
    coeffs: Vec<String>,
}

impl PolyRepr {
    fn from_laurent(l: &LaurentPoly) -> Self {
        PolyRepr { offset: l.offset(), coeffs: l.body().coeffs().iter().map(format_rational).collect() }
    }

    fn to_laurent(&self) -> Result<LaurentPoly> {
        let coeffs = self.coeffs.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>>>()?;
        Ok(LaurentPoly::new(Poly::from_coeffs(coeffs), self.offset))
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr { offset: 0, coeffs: self.coeffs().iter().map(format_rational).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let l = PolyRepr::deserialize(d)?.to_laurent().map_err(D::Error::custom)?;
        l.to_poly().ok_or_else(|| D::Error::custom("negative exponent in polynomial"))
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr::from_laurent(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        PolyRepr::deserialize(d)?.to_laurent().map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct RatFuncRepr {
    num: Poly,
    den: Poly,
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RatFuncRepr { num: self.num(), den: self.den() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RatFuncRepr::deserialize(d)?;
        RatFunc::new(&r.num, &r.den).map_err(D::Error::custom)
    }
}
