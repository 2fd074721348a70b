//! Exact quantities: small rationals, ratios `e / √p`, and signed values that
//! mix both, compared without floating point.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::{BigRational, Ratio};
use num_traits::ToPrimitive;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

/// Rational with machine-word parts; used for θ, ι and mad.
pub type Rational = Ratio<i64>;

/// Serializes a [`Rational`] as `{"num": …, "den": …}`.
pub fn serialize_rational<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(2))?;
    map.serialize_entry("num", q.numer())?;
    map.serialize_entry("den", q.denom())?;
    map.end()
}

pub fn rational_to_f64(q: &Rational) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

/// The nonnegative number `e / √p`, compared by value: `4/√4 == 2/√1`.
#[derive(Clone, Copy, Debug)]
pub struct SqrtRatio {
    pub e: u64,
    pub p: u64,
}

impl SqrtRatio {
    pub const ZERO: SqrtRatio = SqrtRatio { e: 0, p: 1 };

    pub fn new(e: u64, p: u64) -> Self {
        assert!(p > 0, "radicand must be positive");
        SqrtRatio { e, p }
    }

    pub fn to_f64(self) -> f64 {
        self.e as f64 / (self.p as f64).sqrt()
    }
}

impl Ord for SqrtRatio {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.e as u128 * self.e as u128 * other.p as u128;
        let rhs = other.e as u128 * other.e as u128 * self.p as u128;
        lhs.cmp(&rhs)
    }
}

impl PartialEq for SqrtRatio {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for SqrtRatio {}

impl PartialOrd for SqrtRatio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for SqrtRatio {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(3))?;
        map.serialize_entry("e", &self.e)?;
        map.serialize_entry("p", &self.p)?;
        map.serialize_entry("value", &self.to_f64())?;
        map.end()
    }
}

impl fmt::Display for SqrtRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/sqrt({})", self.e, self.p)
    }
}

/// A signed exact real: either a rational or `num / √radicand`. Equality is
/// by value, so `-3/√4` equals `-3/2`.
#[derive(Clone, Debug)]
pub enum ExactValue {
    Rational(BigRational),
    Surd { num: BigInt, radicand: BigInt },
}

impl ExactValue {
    pub fn rational(q: BigRational) -> Self {
        ExactValue::Rational(q)
    }

    pub fn from_small(q: Rational) -> Self {
        ExactValue::Rational(BigRational::new((*q.numer()).into(), (*q.denom()).into()))
    }

    /// `-(e / √p)`.
    pub fn neg_sqrt_ratio(r: SqrtRatio) -> Self {
        ExactValue::Surd { num: -BigInt::from(r.e), radicand: BigInt::from(r.p) }
    }

    fn sign(&self) -> Sign {
        match self {
            ExactValue::Rational(q) => q.numer().sign(),
            ExactValue::Surd { num, .. } => num.sign(),
        }
    }

    /// Square of the absolute value, as a rational.
    fn square(&self) -> BigRational {
        match self {
            ExactValue::Rational(q) => q * q,
            ExactValue::Surd { num, radicand } => BigRational::new(num * num, radicand.clone()),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExactValue::Rational(q) => q.to_f64().unwrap_or(f64::NAN),
            ExactValue::Surd { num, radicand } => {
                num.to_f64().unwrap_or(f64::NAN) / radicand.to_f64().unwrap_or(f64::NAN).sqrt()
            }
        }
    }

    /// Whether this value is exactly the integer `k`.
    pub fn is_integer(&self, k: i64) -> bool {
        self.as_rational() == Some(BigRational::from_integer(k.into()))
    }

    /// The value as a rational, if it is one (a surd over a perfect square counts).
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            ExactValue::Rational(q) => Some(q.clone()),
            ExactValue::Surd { num, radicand } => {
                let root = radicand.sqrt();
                (&root * &root == *radicand).then(|| BigRational::new(num.clone(), root))
            }
        }
    }
}

impl Ord for ExactValue {
    fn cmp(&self, other: &Self) -> Ordering {
        let rank = |s: Sign| match s {
            Sign::Minus => 0,
            Sign::NoSign => 1,
            Sign::Plus => 2,
        };
        let (sa, sb) = (self.sign(), other.sign());
        match rank(sa).cmp(&rank(sb)) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mag = self.square().cmp(&other.square());
        match sa {
            Sign::Minus => mag.reverse(),
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => mag,
        }
    }
}

impl PartialEq for ExactValue {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for ExactValue {}

impl PartialOrd for ExactValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for ExactValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(3))?;
        match self {
            ExactValue::Rational(q) => {
                map.serialize_entry("num", &q.numer().to_string())?;
                map.serialize_entry("den", &q.denom().to_string())?;
            }
            ExactValue::Surd { num, radicand } => {
                map.serialize_entry("e", &num.to_string())?;
                map.serialize_entry("p", &radicand.to_string())?;
            }
        }
        map.serialize_entry("value", &self.to_f64())?;
        map.end()
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactValue::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            ExactValue::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            ExactValue::Surd { num, radicand } => write!(f, "{num}/sqrt({radicand})"),
        }
    }
}
