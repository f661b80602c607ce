use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// An element of `Q ∪ {-inf}` under `⊕ = max` and `⊙ = +`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TropicalValue {
    /// The additive identity `-inf`.
    Bottom,
    Finite(Rational),
}

impl TropicalValue {
    /// The multiplicative identity `0`.
    pub fn one() -> Self {
        TropicalValue::Finite(Rational::zero())
    }

    pub fn finite(r: Rational) -> Self {
        TropicalValue::Finite(r)
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, TropicalValue::Bottom)
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            TropicalValue::Finite(r) => Some(r),
            TropicalValue::Bottom => None,
        }
    }

    /// `a ⊕ b = max(a, b)`.
    pub fn tadd(&self, other: &Self) -> Self {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// `a ⊙ b = a + b`, with `-inf` absorbing.
    pub fn tmul(&self, other: &Self) -> Self {
        match (self, other) {
            (TropicalValue::Finite(a), TropicalValue::Finite(b)) => TropicalValue::Finite(a + b),
            _ => TropicalValue::Bottom,
        }
    }

    /// `a ⊘ b = a - b`; `-inf` has no multiplicative inverse.
    pub fn tdiv(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (_, TropicalValue::Bottom) => Err(Error::Domain(
                "-inf has no tropical multiplicative inverse".into(),
            )),
            (TropicalValue::Bottom, _) => Ok(TropicalValue::Bottom),
            (TropicalValue::Finite(a), TropicalValue::Finite(b)) => {
                Ok(TropicalValue::Finite(a - b))
            }
        }
    }

    /// `a^{⊙k} = k·a`. `(-inf)^0 = 0`, `(-inf)^k = -inf` for `k > 0` and is
    /// undefined for `k < 0`.
    pub fn tpow(&self, k: i64) -> Result<Self> {
        match self {
            TropicalValue::Finite(a) => Ok(TropicalValue::Finite(a * Rational::from_integer(k.into()))),
            TropicalValue::Bottom if k == 0 => Ok(TropicalValue::one()),
            TropicalValue::Bottom if k > 0 => Ok(TropicalValue::Bottom),
            TropicalValue::Bottom => Err(Error::Domain(
                "negative tropical power of -inf is undefined".into(),
            )),
        }
    }
}

impl From<Rational> for TropicalValue {
    fn from(r: Rational) -> Self {
        TropicalValue::Finite(r)
    }
}

impl PartialOrd for TropicalValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TropicalValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (TropicalValue::Bottom, TropicalValue::Bottom) => Ordering::Equal,
            (TropicalValue::Bottom, _) => Ordering::Less,
            (_, TropicalValue::Bottom) => Ordering::Greater,
            (TropicalValue::Finite(a), TropicalValue::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for TropicalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropicalValue::Bottom => f.write_str("-inf"),
            TropicalValue::Finite(r) => write!(f, "{r}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn v(n: i64) -> TropicalValue {
        TropicalValue::Finite(int(n))
    }

    #[test]
    fn scalar_examples() {
        assert_eq!(v(3).tadd(&v(5)), v(5));
        assert_eq!(TropicalValue::Bottom.tmul(&v(7)), TropicalValue::Bottom);
        assert_eq!(TropicalValue::Bottom.tpow(0).unwrap(), v(0));
        assert_eq!(TropicalValue::Bottom.tpow(4).unwrap(), TropicalValue::Bottom);
        assert_eq!(v(3).tpow(-2).unwrap(), v(-6));
        assert_eq!(v(3).tdiv(&v(5)).unwrap(), v(-2));
    }

    #[test]
    fn bottom_has_no_inverse() {
        assert!(matches!(v(1).tdiv(&TropicalValue::Bottom), Err(Error::Domain(_))));
        assert!(matches!(TropicalValue::Bottom.tpow(-1), Err(Error::Domain(_))));
    }

    #[test]
    fn identities() {
        let x = v(-4);
        assert_eq!(TropicalValue::Bottom.tadd(&x), x);
        assert_eq!(TropicalValue::one().tmul(&x), x);
        assert_eq!(x.tadd(&x), x);
    }
}
