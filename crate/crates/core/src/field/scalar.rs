use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Coordinate field of a reflection model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    /// The rationals.
    Rational,
    /// `Q(sqrt 5)`, needed for the icosahedral group.
    Sqrt5,
}

impl Field {
    pub fn join(self, other: Field) -> Field {
        self.max(other)
    }
}

/// Exact element `a + b*sqrt(5)` with rational `a`, `b`.
///
/// Values with `b = 0` are always stored as `Rational`, so equal values have
/// identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldScalar {
    Rational(BigRational),
    /// `b` is nonzero.
    Quadratic(BigRational, BigRational),
}

impl FieldScalar {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        if b.is_zero() {
            FieldScalar::Rational(a)
        } else {
            FieldScalar::Quadratic(a, b)
        }
    }

    pub fn zero() -> Self {
        FieldScalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        FieldScalar::Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        FieldScalar::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        FieldScalar::Rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// `sqrt(5)`.
    pub fn sqrt5() -> Self {
        FieldScalar::Quadratic(BigRational::zero(), BigRational::one())
    }

    /// The golden ratio `(1 + sqrt 5) / 2`.
    pub fn golden() -> Self {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        FieldScalar::Quadratic(half.clone(), half)
    }

    pub fn rational_part(&self) -> BigRational {
        match self {
            FieldScalar::Rational(a) | FieldScalar::Quadratic(a, _) => a.clone(),
        }
    }

    pub fn sqrt5_part(&self) -> BigRational {
        match self {
            FieldScalar::Rational(_) => BigRational::zero(),
            FieldScalar::Quadratic(_, b) => b.clone(),
        }
    }

    pub fn field(&self) -> Field {
        match self {
            FieldScalar::Rational(_) => Field::Rational,
            FieldScalar::Quadratic(..) => Field::Sqrt5,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, FieldScalar::Rational(a) if a.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, FieldScalar::Rational(a) if a.is_one())
    }

    /// Exact sign: -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        fn sign(r: &BigRational) -> i32 {
            if r.is_zero() {
                0
            } else if r.is_positive() {
                1
            } else {
                -1
            }
        }
        match self {
            FieldScalar::Rational(a) => sign(a),
            FieldScalar::Quadratic(a, b) => {
                let (sa, sb) = (sign(a), sign(b));
                if sa == 0 || sa == sb {
                    return sb;
                }
                // opposite signs: compare a^2 with 5 b^2
                let five = BigRational::from_integer(BigInt::from(5));
                match (a * a).cmp(&(five * b * b)) {
                    Ordering::Greater => sa,
                    _ => sb,
                }
            }
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        match self {
            FieldScalar::Rational(a) if a.is_zero() => None,
            FieldScalar::Rational(a) => Some(FieldScalar::Rational(a.recip())),
            FieldScalar::Quadratic(a, b) => {
                // 1/(a + b r) = (a - b r) / (a^2 - 5 b^2); the norm is nonzero since r is irrational
                let five = BigRational::from_integer(BigInt::from(5));
                let norm = a * a - five * b * b;
                Some(FieldScalar::new(a / &norm, -(b / &norm)))
            }
        }
    }

    /// Exact string `p/q` or `p/q+r/s√5`.
    pub fn to_exact_string(&self) -> String {
        self.to_string()
    }

    pub fn parse_exact(text: &str) -> Option<Self> {
        fn rat(s: &str) -> Option<BigRational> {
            let s = s.trim();
            match s.split_once('/') {
                Some((p, q)) => {
                    let q: BigInt = q.parse().ok()?;
                    if q.is_zero() {
                        return None;
                    }
                    Some(BigRational::new(p.parse().ok()?, q))
                }
                None => Some(BigRational::from_integer(s.parse().ok()?)),
            }
        }
        match text.strip_suffix("√5") {
            Some(head) => {
                // split at the sign that starts the surd coefficient (not at position 0)
                let idx = head.char_indices().skip(1).filter(|(_, c)| *c == '+' || *c == '-').last()?.0;
                let (a, b) = head.split_at(idx);
                let b = b.strip_prefix('+').unwrap_or(b);
                Some(FieldScalar::new(rat(a)?, rat(b)?))
            }
            None => rat(text).map(FieldScalar::Rational),
        }
    }
}

fn fmt_rat(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldScalar::Rational(a) => fmt_rat(a, f),
            FieldScalar::Quadratic(a, b) => {
                fmt_rat(a, f)?;
                if b.is_positive() {
                    write!(f, "+")?;
                }
                fmt_rat(b, f)?;
                write!(f, "√5")
            }
        }
    }
}

impl Add for &FieldScalar {
    type Output = FieldScalar;
    fn add(self, rhs: &FieldScalar) -> FieldScalar {
        use FieldScalar::*;
        match (self, rhs) {
            (Rational(a), Rational(c)) => Rational(a + c),
            (Rational(a), Quadratic(c, d)) | (Quadratic(c, d), Rational(a)) => Quadratic(a + c, d.clone()),
            (Quadratic(a, b), Quadratic(c, d)) => FieldScalar::new(a + c, b + d),
        }
    }
}

impl Neg for &FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        match self {
            FieldScalar::Rational(a) => FieldScalar::Rational(-a),
            FieldScalar::Quadratic(a, b) => FieldScalar::Quadratic(-a, -b),
        }
    }
}

impl Sub for &FieldScalar {
    type Output = FieldScalar;
    fn sub(self, rhs: &FieldScalar) -> FieldScalar {
        self + &(-rhs)
    }
}

impl Mul for &FieldScalar {
    type Output = FieldScalar;
    fn mul(self, rhs: &FieldScalar) -> FieldScalar {
        use FieldScalar::*;
        match (self, rhs) {
            (Rational(a), Rational(c)) => Rational(a * c),
            (Rational(a), Quadratic(c, d)) | (Quadratic(c, d), Rational(a)) => {
                if a.is_zero() {
                    FieldScalar::zero()
                } else {
                    Quadratic(a * c, a * d)
                }
            }
            (Quadratic(a, b), Quadratic(c, d)) => {
                let five = BigRational::from_integer(BigInt::from(5));
                FieldScalar::new(a * c + five * b * d, a * d + b * c)
            }
        }
    }
}

impl Div for &FieldScalar {
    type Output = FieldScalar;
    /// Panics on division by zero.
    fn div(self, rhs: &FieldScalar) -> FieldScalar {
        self * &rhs.inverse().expect("division by zero")
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for FieldScalar {
            type Output = FieldScalar;
            fn $m(self, rhs: FieldScalar) -> FieldScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FieldScalar> for FieldScalar {
            type Output = FieldScalar;
            fn $m(self, rhs: &FieldScalar) -> FieldScalar {
                (&self).$m(rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        -&self
    }
}

impl From<i64> for FieldScalar {
    fn from(n: i64) -> Self {
        FieldScalar::from_int(n)
    }
}

impl From<BigRational> for FieldScalar {
    fn from(r: BigRational) -> Self {
        FieldScalar::Rational(r)
    }
}

impl Serialize for FieldScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FieldScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        FieldScalar::parse_exact(&s).ok_or_else(|| serde::de::Error::custom(format!("bad scalar {s:?}")))
    }
}
