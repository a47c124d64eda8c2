//! Exact rationals and rational coordinate vectors.
//!
//! Coordinates are `i64` fractions kept in lowest terms. Every arithmetic
//! operation is checked; an overflow panics with a message instead of
//! wrapping, so a result is either exact or the computation aborts.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::RootError;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(Ratio<i64>);

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));

    /// Panics when `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "rational with zero denominator");
        Rational(Ratio::new(num, den))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i64 {
        match self.0.cmp(&Ratio::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    /// Integer value when the rational is integral.
    pub fn to_integer(&self) -> Option<i64> {
        self.is_integer().then(|| self.numer())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational::ONE / *self
    }
}

fn overflow(op: &str) -> ! {
    panic!("exact rational overflow in {op}: value exceeds the i64 range")
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0.checked_add(&rhs.0).unwrap_or_else(|| overflow("add")))
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0.checked_sub(&rhs.0).unwrap_or_else(|| overflow("sub")))
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0.checked_mul(&rhs.0).unwrap_or_else(|| overflow("mul")))
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(self.0.checked_div(&rhs.0).unwrap_or_else(|| overflow("div")))
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        let n = self.numer().checked_neg().unwrap_or_else(|| overflow("neg"));
        Rational(Ratio::new_raw(n, self.denom()))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = RootError;

    /// Accepts `p`, `p/q` and `-p/q`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RootError::Parse(format!("not a rational: {s:?}"));
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: i64 = num.parse().map_err(|_| bad())?;
        let den: i64 = den.parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        Ok(Rational::new(num, den))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Text(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Int(n) => Ok(Rational::from_int(n)),
            Repr::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// A vector of exact rational coordinates in a fixed ambient dimension.
///
/// Ordering is lexicographic on the coordinate tuple; every set-valued output
/// in the crate is sorted by it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RationalVector(Vec<Rational>);

impl RationalVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        RationalVector(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RationalVector(coords.iter().map(|&c| Rational::from_int(c)).collect())
    }

    /// Every coordinate is `numerators[i] / den`.
    pub fn from_fracs(numerators: &[i64], den: i64) -> Self {
        RationalVector(numerators.iter().map(|&c| Rational::new(c, den)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        RationalVector(vec![Rational::ZERO; dim])
    }

    /// The `i`-th standard basis vector.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = Rational::ONE;
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    /// First nonzero coordinate is positive.
    pub fn is_lex_positive(&self) -> bool {
        self.0
            .iter()
            .find(|c| !c.is_zero())
            .is_some_and(Rational::is_positive)
    }

    pub fn scale(&self, k: Rational) -> Self {
        RationalVector(self.0.iter().map(|&c| c * k).collect())
    }

    /// Standard dot product. Panics on a dimension mismatch; use [`inner`]
    /// for the checked form.
    pub fn dot(&self, other: &Self) -> Rational {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in dot product");
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::ZERO, |acc, (&a, &b)| acc + a * b)
    }

    pub fn norm2(&self) -> Rational {
        self.dot(self)
    }

    /// Concatenate coordinates (block embedding used by direct sums).
    pub fn concat(parts: &[&RationalVector]) -> Self {
        RationalVector(parts.iter().flat_map(|p| p.0.iter().copied()).collect())
    }

    /// `Some(k)` when `self = k * other`.
    pub fn multiple_of(&self, other: &Self) -> Option<Rational> {
        if self.dim() != other.dim() || other.is_zero() {
            return None;
        }
        let pivot = other.0.iter().position(|c| !c.is_zero())?;
        let k = self.0[pivot] / other.0[pivot];
        (other.scale(k) == *self).then_some(k)
    }
}

impl fmt::Debug for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add for &RationalVector {
    type Output = RationalVector;
    fn add(self, rhs: &RationalVector) -> RationalVector {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch in vector add");
        RationalVector(self.0.iter().zip(&rhs.0).map(|(&a, &b)| a + b).collect())
    }
}

impl Sub for &RationalVector {
    type Output = RationalVector;
    fn sub(self, rhs: &RationalVector) -> RationalVector {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch in vector sub");
        RationalVector(self.0.iter().zip(&rhs.0).map(|(&a, &b)| a - b).collect())
    }
}

impl Neg for &RationalVector {
    type Output = RationalVector;
    fn neg(self) -> RationalVector {
        RationalVector(self.0.iter().map(|&c| -c).collect())
    }
}

/// Checked inner product.
pub fn inner(u: &RationalVector, v: &RationalVector) -> Result<Rational, RootError> {
    if u.dim() != v.dim() {
        return Err(RootError::DimensionMismatch { left: u.dim(), right: v.dim() });
    }
    Ok(u.dot(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inner_examples() {
        let e1 = RationalVector::from_ints(&[1, 0, 0]);
        let e2 = RationalVector::from_ints(&[0, 1, 0]);
        assert_eq!(inner(&e1, &e2).unwrap(), Rational::ZERO);
        let a = RationalVector::from_ints(&[1, -1, 0]);
        assert_eq!(inner(&a, &a).unwrap(), Rational::from_int(2));
        let u = RationalVector::from_ints(&[1, 1, 1]);
        let v = RationalVector::from_ints(&[1, 1, -1]);
        assert_eq!(inner(&u, &v).unwrap(), Rational::ONE);
    }

    #[test]
    fn inner_dimension_mismatch() {
        let u = RationalVector::from_ints(&[1, 0]);
        let v = RationalVector::from_ints(&[1, 0, 0]);
        assert!(matches!(inner(&u, &v), Err(RootError::DimensionMismatch { left: 2, right: 3 })));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3/4".parse::<Rational>().unwrap(), Rational::new(3, 4));
        assert_eq!("-2/4".parse::<Rational>().unwrap(), Rational::new(-1, 2));
        assert_eq!("5".parse::<Rational>().unwrap(), Rational::from_int(5));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
        assert_eq!(Rational::new(6, -4).to_string(), "-3/2");
        assert_eq!(Rational::from_int(2).to_string(), "2");
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_aborts() {
        let big = Rational::from_int(i64::MAX);
        let _ = big + Rational::ONE;
    }

    #[test]
    fn lexicographic_order() {
        let a = RationalVector::from_fracs(&[-1, 1], 2);
        let b = RationalVector::from_ints(&[0, -1]);
        assert!(a < b);
        assert!(!a.is_lex_positive());
        assert!((-&a).is_lex_positive());
    }

    #[test]
    fn multiples() {
        let a = RationalVector::from_ints(&[1, -1, 0]);
        let b = RationalVector::from_ints(&[-2, 2, 0]);
        assert_eq!(b.multiple_of(&a), Some(Rational::from_int(-2)));
        assert_eq!(RationalVector::from_ints(&[1, 0, 0]).multiple_of(&a), None);
    }
}
