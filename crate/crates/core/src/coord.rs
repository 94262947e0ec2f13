//! Exact rational coordinates.
//!
//! Every value is kept in canonical reduced form. Values whose numerator and
//! denominator fit in an `i64` live inline and compare through `i128`
//! cross-multiplication; everything else falls back to a boxed
//! [`BigRational`]. Canonical form means the two representations never
//! overlap, so structural equality is value equality.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone)]
enum Repr {
    /// `den > 0`, `gcd(num, den) == 1`.
    Small { num: i64, den: i64 },
    /// Only used when the reduced value does not fit `Small`.
    Big(Box<BigRational>),
}

/// An exact rational number used for every geometric coordinate.
#[derive(Clone)]
pub struct Coordinate(Repr);

/// Failure to read a coordinate from text.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid numeric literal {literal:?}: {reason}")]
pub struct CoordinateParseError {
    pub literal: String,
    pub reason: &'static str,
}

impl Coordinate {
    pub fn zero() -> Self {
        Coordinate(Repr::Small { num: 0, den: 1 })
    }

    pub fn from_integer(v: i64) -> Self {
        Coordinate(Repr::Small { num: v, den: 1 })
    }

    /// `num / den`, reduced. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    pub fn from_big(value: BigRational) -> Self {
        let (num, den) = value.into_raw();
        let value = BigRational::new(num, den);
        match (value.numer().to_i64(), value.denom().to_i64()) {
            (Some(num), Some(den)) => Coordinate(Repr::Small { num, den }),
            _ => Coordinate(Repr::Big(Box::new(value))),
        }
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        match (i64::try_from(num), i64::try_from(den)) {
            (Ok(num), Ok(den)) => Coordinate(Repr::Small { num, den }),
            _ => Self::from_big(BigRational::new(BigInt::from(num), BigInt::from(den))),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small { num, den } => {
                BigRational::new_raw(BigInt::from(*num), BigInt::from(*den))
            }
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn numerator(&self) -> BigInt {
        match &self.0 {
            Repr::Small { num, .. } => BigInt::from(*num),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denominator(&self) -> BigInt {
        match &self.0 {
            Repr::Small { den, .. } => BigInt::from(*den),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small { den, .. } => *den == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    /// Whether the value is stored inline (no heap allocation).
    pub fn is_small(&self) -> bool {
        matches!(self.0, Repr::Small { .. })
    }

    /// The value as an `i64`, if it is an integer in range.
    pub fn as_i64(&self) -> Option<i64> {
        match self.0 {
            Repr::Small { num, den: 1 } => Some(num),
            _ => None,
        }
    }

    /// `(self + other) / 2`, exactly.
    pub fn midpoint(&self, other: &Coordinate) -> Coordinate {
        if let (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) =
            (&self.0, &other.0)
        {
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            if b == d {
                return Self::from_i128(a + c, 2 * b);
            }
            if let Some(num) = a
                .checked_mul(d)
                .and_then(|ad| c.checked_mul(b).and_then(|cb| ad.checked_add(cb)))
            {
                if let Some(den) = b.checked_mul(d).and_then(|bd| bd.checked_mul(2)) {
                    return Self::from_i128(num, den);
                }
            }
        }
        Self::from_big((self.to_big() + other.to_big()) / BigInt::from(2))
    }

    /// Lossy conversion for rendering only.
    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small { num, den } => *num as f64 / *den as f64,
            Repr::Big(b) => b.to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small { num, .. } => num.signum() as i32,
            Repr::Big(b) => {
                if b.is_positive() {
                    1
                } else if b.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    fn binary_op(
        &self,
        other: &Coordinate,
        small: impl Fn(i128, i128, i128, i128) -> Option<(i128, i128)>,
        big: impl Fn(BigRational, BigRational) -> BigRational,
    ) -> Coordinate {
        if let (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) =
            (&self.0, &other.0)
        {
            if let Some((n, dd)) = small(*a as i128, *b as i128, *c as i128, *d as i128) {
                return Self::from_i128(n, dd);
            }
        }
        Self::from_big(big(self.to_big(), other.to_big()))
    }
}

impl Default for Coordinate {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Coordinate {
    fn from(v: i64) -> Self {
        Self::from_integer(v)
    }
}

impl From<i32> for Coordinate {
    fn from(v: i32) -> Self {
        Self::from_integer(v as i64)
    }
}

impl From<BigRational> for Coordinate {
    fn from(v: BigRational) -> Self {
        Self::from_big(v)
    }
}

impl PartialEq for Coordinate {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => a == c && b == d,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Coordinate {}

impl Hash for Coordinate {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small { num, den } => {
                0u8.hash(state);
                num.hash(state);
                den.hash(state);
            }
            Repr::Big(b) => {
                1u8.hash(state);
                b.hash(state);
            }
        }
    }
}

impl Ord for Coordinate {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: 1 }, Repr::Small { num: c, den: 1 }) => a.cmp(c),
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Coordinate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Coordinate {
    type Output = Coordinate;
    fn add(self, rhs: &Coordinate) -> Coordinate {
        self.binary_op(
            rhs,
            |a, b, c, d| {
                if b == d {
                    return a.checked_add(c).map(|n| (n, b));
                }
                let n = a.checked_mul(d)?.checked_add(c.checked_mul(b)?)?;
                Some((n, b.checked_mul(d)?))
            },
            |x, y| x + y,
        )
    }
}

impl Sub for &Coordinate {
    type Output = Coordinate;
    fn sub(self, rhs: &Coordinate) -> Coordinate {
        self.binary_op(
            rhs,
            |a, b, c, d| {
                if b == d {
                    return a.checked_sub(c).map(|n| (n, b));
                }
                let n = a.checked_mul(d)?.checked_sub(c.checked_mul(b)?)?;
                Some((n, b.checked_mul(d)?))
            },
            |x, y| x - y,
        )
    }
}

impl Mul for &Coordinate {
    type Output = Coordinate;
    fn mul(self, rhs: &Coordinate) -> Coordinate {
        self.binary_op(
            rhs,
            |a, b, c, d| Some((a.checked_mul(c)?, b.checked_mul(d)?)),
            |x, y| x * y,
        )
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Coordinate {
            type Output = Coordinate;
            fn $method(self, rhs: Coordinate) -> Coordinate {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Coordinate> for Coordinate {
            type Output = Coordinate;
            fn $method(self, rhs: &Coordinate) -> Coordinate {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for &Coordinate {
    type Output = Coordinate;
    fn neg(self) -> Coordinate {
        match &self.0 {
            Repr::Small { num, den } => match num.checked_neg() {
                Some(n) => Coordinate(Repr::Small { num: n, den: *den }),
                None => Coordinate::from_big(-self.to_big()),
            },
            Repr::Big(b) => Coordinate::from_big(-(**b).clone()),
        }
    }
}

impl Neg for Coordinate {
    type Output = Coordinate;
    fn neg(self) -> Coordinate {
        -&self
    }
}

impl fmt::Display for Coordinate {
    /// Integers print bare, everything else as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den: 1 } => write!(f, "{num}"),
            Repr::Small { num, den } => write!(f, "{num}/{den}"),
            Repr::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Coordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_integer(s: &str, literal: &str) -> Result<BigInt, CoordinateParseError> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(CoordinateParseError {
            literal: literal.to_string(),
            reason: "expected decimal digits",
        });
    }
    // digits validated above, so this cannot fail
    Ok(s.trim_start_matches('+')
        .parse::<BigInt>()
        .expect("validated digits"))
}

impl FromStr for Coordinate {
    type Err = CoordinateParseError;

    /// Accepts `123`, `-0.25`, `.5`, `7.` and `p/q`.
    fn from_str(raw: &str) -> Result<Self, Self::Err> {
        let s = raw.trim();
        let err = |reason| CoordinateParseError {
            literal: raw.to_string(),
            reason,
        };
        if s.is_empty() {
            return Err(err("empty"));
        }
        if let Some((p, q)) = s.split_once('/') {
            let num = parse_integer(p.trim(), raw)?;
            let q = q.trim();
            if q.starts_with(['+', '-']) {
                return Err(err("denominator must be an unsigned integer"));
            }
            let den = parse_integer(q, raw)?;
            if den.is_zero() {
                return Err(err("zero denominator"));
            }
            return Ok(Coordinate::from_big(BigRational::new(num, den)));
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            let negative = int_part.starts_with('-');
            let unsigned = int_part.strip_prefix(['+', '-']).unwrap_or(int_part);
            if unsigned.is_empty() && frac_part.is_empty() {
                return Err(err("no digits"));
            }
            if !unsigned.bytes().all(|b| b.is_ascii_digit())
                || !frac_part.bytes().all(|b| b.is_ascii_digit())
            {
                return Err(err("expected decimal digits"));
            }
            let mut digits = String::with_capacity(unsigned.len() + frac_part.len());
            digits.push_str(unsigned);
            digits.push_str(frac_part);
            let mut num: BigInt = if digits.is_empty() {
                BigInt::zero()
            } else {
                digits.parse().map_err(|_| err("expected decimal digits"))?
            };
            if negative {
                num = -num;
            }
            let den = num_traits::pow(BigInt::from(10u8), frac_part.len());
            return Ok(Coordinate::from_big(BigRational::new(num, den)));
        }
        let num = parse_integer(s, raw)?;
        Ok(Coordinate::from_big(BigRational::new(num, BigInt::one())))
    }
}

impl serde::Serialize for Coordinate {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Coordinate {
    /// Numeric strings are the canonical form; bare JSON integers are also
    /// accepted. Bare JSON floats are rejected because they are not exact.
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct Visitor;
        impl serde::de::Visitor<'_> for Visitor {
            type Value = Coordinate;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an exact numeric string or an integer")
            }
            fn visit_str<E: serde::de::Error>(self, v: &str) -> Result<Coordinate, E> {
                v.parse().map_err(E::custom)
            }
            fn visit_i64<E: serde::de::Error>(self, v: i64) -> Result<Coordinate, E> {
                Ok(Coordinate::from_integer(v))
            }
            fn visit_u64<E: serde::de::Error>(self, v: u64) -> Result<Coordinate, E> {
                Ok(Coordinate::from_big(BigRational::from_integer(
                    BigInt::from(v),
                )))
            }
        }
        deserializer.deserialize_any(Visitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Coordinate {
        s.parse().unwrap()
    }

    #[test]
    fn parses_all_literal_forms() {
        assert_eq!(c("0.5"), Coordinate::from_ratio(1, 2));
        assert_eq!(c("-0.25"), Coordinate::from_ratio(-1, 4));
        assert_eq!(c(".5"), Coordinate::from_ratio(1, 2));
        assert_eq!(c("7."), Coordinate::from_integer(7));
        assert_eq!(c("2/4"), Coordinate::from_ratio(1, 2));
        assert_eq!(c("-3/6"), Coordinate::from_ratio(-1, 2));
        assert_eq!(c("+12"), Coordinate::from_integer(12));
        assert_eq!(c("1.000"), Coordinate::from_integer(1));
        assert_eq!(c("0/5"), Coordinate::zero());
    }

    #[test]
    fn rejects_garbage() {
        for bad in [
            "", "abc", "1/0", "1/-2", "--1", "1.2.3", ".", "1e5", "0x10", "1/", "/2", "- 1",
        ] {
            assert!(bad.parse::<Coordinate>().is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn zero_is_canonical() {
        let z = c("0/7");
        assert_eq!(z.numerator(), BigInt::zero());
        assert_eq!(z.denominator(), BigInt::one());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn big_values_round_trip_and_collapse() {
        let huge = c("123456789012345678901234567890/3");
        assert!(!huge.is_small());
        assert_eq!(huge.to_string(), "41152263004115226300411522630");
        let back = &huge - &huge;
        assert!(back.is_small());
        assert_eq!(back, Coordinate::zero());
    }

    #[test]
    fn overflow_falls_back_to_big() {
        let a = Coordinate::from_integer(i64::MAX);
        let b = &a + &a;
        assert!(!b.is_small());
        assert!(b > a);
        assert_eq!(&b - &a, a);
        let m = Coordinate::from_integer(i64::MIN);
        assert_eq!(-(-&m), m);
        let third = Coordinate::from_ratio(1, i64::MAX);
        let prod = &third * &third;
        assert!(prod > Coordinate::zero());
        assert!(prod < third);
    }

    #[test]
    fn midpoint_is_exact() {
        assert_eq!(c("3").midpoint(&c("1")), c("2"));
        assert_eq!(c("5").midpoint(&c("4")), c("9/2"));
        assert_eq!(c("1/3").midpoint(&c("1/2")), c("5/12"));
        let big = Coordinate::from_integer(i64::MAX);
        assert_eq!(big.midpoint(&big), big);
    }

    #[test]
    fn mixed_representation_ordering() {
        let small = Coordinate::from_integer(5);
        let big = c("100000000000000000000000");
        assert!(small < big);
        assert!(-&big < small);
        assert_eq!(small.cmp(&small.clone()), Ordering::Equal);
    }

    #[test]
    fn serde_forms() {
        let v: Coordinate = serde_json::from_str("\"1/3\"").unwrap();
        assert_eq!(v, Coordinate::from_ratio(1, 3));
        let v: Coordinate = serde_json::from_str("-4").unwrap();
        assert_eq!(v, Coordinate::from_integer(-4));
        assert!(serde_json::from_str::<Coordinate>("0.5").is_err());
        assert_eq!(
            serde_json::to_string(&Coordinate::from_ratio(-3, 9)).unwrap(),
            "\"-1/3\""
        );
    }
}
