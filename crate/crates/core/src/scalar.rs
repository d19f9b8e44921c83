//! Scalar traits shared by the linear algebra and polyhedral code.
//!
//! Everything geometric in this crate is exact. The linear algebra is
//! written against [`Field`], which any ordered field satisfies; the
//! polyhedral layer additionally needs [`RationalField`] so that it can
//! reach the integer numerator/denominator of a coordinate when it builds
//! lattice bases.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive, Zero};

/// An ordered field with exact zero tests.
pub trait Field:
    Clone + PartialOrd + Debug + Num + Signed + FromPrimitive + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("integer fits the scalar type")
    }
}

impl<T> Field for T where
    T: Clone + PartialOrd + Debug + Num + Signed + FromPrimitive + Send + Sync + 'static
{
}

/// A field of fractions of the integers, with access to the fraction.
pub trait RationalField: Field + Ord {
    fn to_big(&self) -> BigRational;
    fn from_big(q: &BigRational) -> Self;

    fn numer_denom(&self) -> (BigInt, BigInt) {
        let q = self.to_big();
        (q.numer().clone(), q.denom().clone())
    }

    fn is_integral(&self) -> bool {
        self.to_big().is_integer()
    }
}

impl RationalField for BigRational {
    fn to_big(&self) -> BigRational {
        self.clone()
    }

    fn from_big(q: &BigRational) -> Self {
        q.clone()
    }
}

impl RationalField for Ratio<i64> {
    fn to_big(&self) -> BigRational {
        BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }

    fn from_big(q: &BigRational) -> Self {
        let n = q.numer().to_i64().expect("numerator fits i64");
        let d = q.denom().to_i64().expect("denominator fits i64");
        Ratio::new(n, d)
    }
}

/// Renders a rational as the canonical `p/q` string used by all JSON output.
pub fn fmt_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Shorthand for an integer-valued rational.
pub fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Shorthand for `n/d`.
pub fn qf(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub mod serde_q {
    //! Serde adapters that store rationals as `p/q` strings.

    use num_rational::BigRational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::fmt_rational(v))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_rational(&s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}")))
    }

    pub mod vec {
        use num_rational::BigRational;
        use serde::{de::Error, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for x in v {
                seq.serialize_element(&crate::scalar::fmt_rational(x))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
            let raw = Vec::<String>::deserialize(d)?;
            raw.iter()
                .map(|s| {
                    crate::scalar::parse_rational(s)
                        .ok_or_else(|| D::Error::custom(format!("bad rational {s:?}")))
                })
                .collect()
        }
    }
}
