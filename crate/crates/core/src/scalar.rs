//! Exact number types.
//!
//! [`Scalar`] is an arbitrary-precision rational kept in lowest terms.
//! [`Root2Scalar`] extends it to the field `Q(sqrt 2)`, which is all that is
//! needed to place rotated cube centers exactly.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::Error;

/// Exact rational number, always normalized (lowest terms, positive denominator).
pub type Scalar = BigRational;

/// `p / q` as a [`Scalar`]. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(v: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(v))
}

/// Parses `"p/q"` or `"p"` into a normalized [`Scalar`].
pub fn parse_scalar(s: &str) -> Result<Scalar, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| format!("invalid rational numerator in {s:?}"))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| format!("invalid rational denominator in {s:?}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(num, den))
}

/// Writes `p/q`, or just `p` for integers.
pub fn format_scalar(v: &Scalar) -> String {
    v.to_string()
}

/// Sign of `a + b*sqrt(2)` for integers, decided exactly.
pub fn sign_root2_int(a: &BigInt, b: &BigInt) -> Ordering {
    let sa = a.sign();
    let sb = b.sign();
    use num_bigint::Sign::*;
    match (sa, sb) {
        (NoSign, NoSign) => Ordering::Equal,
        (Plus, Plus) | (Plus, NoSign) | (NoSign, Plus) => Ordering::Greater,
        (Minus, Minus) | (Minus, NoSign) | (NoSign, Minus) => Ordering::Less,
        // opposite signs: compare a^2 with 2 b^2
        (Plus, Minus) => (a * a).cmp(&(b * b * 2u32)),
        (Minus, Plus) => (b * b * 2u32).cmp(&(a * a)),
    }
}

/// An exact number `a + b*sqrt(2)` with rational `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Root2Scalar {
    pub a: Scalar,
    pub b: Scalar,
}

impl Root2Scalar {
    pub fn new(a: Scalar, b: Scalar) -> Self {
        Root2Scalar { a, b }
    }

    pub fn rational(a: Scalar) -> Self {
        Root2Scalar { a, b: Scalar::zero() }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Exact sign of the value.
    pub fn signum(&self) -> Ordering {
        // Multiply through by the common denominator (positive), then decide on integers.
        let den = self.a.denom() * self.b.denom();
        let an = self.a.numer() * self.b.denom();
        let bn = self.b.numer() * self.a.denom();
        debug_assert!(den.is_positive());
        sign_root2_int(&an, &bn)
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Floating-point approximation, for diagnostics and bucketing hints only.
    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * 2f64.sqrt()
    }

    /// Largest integer not exceeding the value, computed exactly.
    pub fn floor(&self) -> BigInt {
        let mut k = BigInt::from(self.approx().floor() as i64);
        while Root2Scalar::rational(BigRational::from_integer(k.clone())) > *self {
            k -= 1;
        }
        while Root2Scalar::rational(BigRational::from_integer(&k + 1)) <= *self {
            k += 1;
        }
        k
    }
}

impl From<Scalar> for Root2Scalar {
    fn from(a: Scalar) -> Self {
        Root2Scalar::rational(a)
    }
}

impl Ord for Root2Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl PartialOrd for Root2Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Root2Scalar {
    type Output = Root2Scalar;
    fn add(self, rhs: &Root2Scalar) -> Root2Scalar {
        Root2Scalar::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &Root2Scalar {
    type Output = Root2Scalar;
    fn sub(self, rhs: &Root2Scalar) -> Root2Scalar {
        Root2Scalar::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Add for Root2Scalar {
    type Output = Root2Scalar;
    fn add(self, rhs: Root2Scalar) -> Root2Scalar {
        &self + &rhs
    }
}

impl Sub for Root2Scalar {
    type Output = Root2Scalar;
    fn sub(self, rhs: Root2Scalar) -> Root2Scalar {
        &self - &rhs
    }
}

impl Neg for Root2Scalar {
    type Output = Root2Scalar;
    fn neg(self) -> Root2Scalar {
        Root2Scalar::new(-self.a, -self.b)
    }
}

impl Mul<&Scalar> for &Root2Scalar {
    type Output = Root2Scalar;
    fn mul(self, rhs: &Scalar) -> Root2Scalar {
        Root2Scalar::new(&self.a * rhs, &self.b * rhs)
    }
}

/// `p/q+r/s*sqrt2`; the `b` part is always written, even when zero.
impl fmt::Display for Root2Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}*sqrt2", self.a, self.b)
    }
}

impl FromStr for Root2Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = |m: String| Error::parse(0, m);
        let Some(body) = s.strip_suffix("*sqrt2") else {
            // A bare rational is accepted as a + 0*sqrt2.
            return parse_scalar(s).map(Root2Scalar::rational).map_err(bad);
        };
        let (a, b) = body
            .rsplit_once('+')
            .ok_or_else(|| bad(format!("missing '+' in {s:?}")))?;
        Ok(Root2Scalar::new(
            parse_scalar(a).map_err(bad)?,
            parse_scalar(b).map_err(bad)?,
        ))
    }
}
