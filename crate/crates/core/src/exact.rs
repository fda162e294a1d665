//! Exact rationals with the text and JSON forms used in reports.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// A reduced fraction with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Rational {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn into_big(self) -> BigRational {
        self.0
    }

    /// Decimal expansion rounded half away from zero.
    pub fn decimal(&self, places: usize) -> String {
        let scale = BigInt::from(10u32).pow(places as u32);
        let scaled = self.0.numer().abs() * &scale;
        let (q, r) = scaled.div_rem(self.0.denom());
        let q = if r * 2u32 >= *self.0.denom() {
            q + 1u32
        } else {
            q
        };
        let (int, frac) = q.div_rem(&scale);
        let sign = if self.0.is_negative() && !q.is_zero() {
            "-"
        } else {
            ""
        };
        if places == 0 {
            return format!("{sign}{int}");
        }
        format!("{sign}{int}.{:0>places$}", frac.to_string())
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl From<BigUint> for Rational {
    fn from(n: BigUint) -> Self {
        Rational::from_integer(BigInt::from_biguint(Sign::Plus, n))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

/// Integer that serializes as a JSON number when it fits `i64` and as a
/// decimal string otherwise.
pub(crate) struct BigNumber<'a>(pub &'a BigInt);

impl Serialize for BigNumber<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Rational", 3)?;
        st.serialize_field("num", &BigNumber(self.0.numer()))?;
        st.serialize_field("den", &BigNumber(self.0.denom()))?;
        st.serialize_field("decimal", &self.decimal(6))?;
        st.end()
    }
}
