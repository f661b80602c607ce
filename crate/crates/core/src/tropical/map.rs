use std::fmt;

use super::TropicalPolynomial;
use crate::error::{check_dim, Error, Result};
use crate::rational::Rational;

/// The tropical quotient `num ⊘ den`, i.e. the function `num(x) - den(x)`.
///
/// Neither part may be the constant `-inf` polynomial, so evaluation is total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalRationalFn {
    num: TropicalPolynomial,
    den: TropicalPolynomial,
}

impl TropicalRationalFn {
    pub fn new(num: TropicalPolynomial, den: TropicalPolynomial) -> Result<Self> {
        check_dim(num.dim(), den.dim())?;
        if num.is_bottom() || den.is_bottom() {
            return Err(Error::EmptyPolynomial);
        }
        Ok(TropicalRationalFn { num, den })
    }

    /// `f = f ⊘ 0`.
    pub fn from_polynomial(f: TropicalPolynomial) -> Result<Self> {
        let dim = f.dim();
        Self::new(f, TropicalPolynomial::one(dim))
    }

    pub fn num(&self) -> &TropicalPolynomial {
        &self.num
    }

    pub fn den(&self) -> &TropicalPolynomial {
        &self.den
    }

    pub fn dim(&self) -> usize {
        self.num.dim()
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        let n = self.num.eval_finite(x).expect("numerator is nonempty");
        let d = self.den.eval_finite(x).expect("denominator is nonempty");
        n - d
    }

    /// `p ⊙ q`, the pointwise sum.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        Self::new(self.num.mul(&other.num)?, self.den.mul(&other.den)?)
    }

    /// `p ⊘ q`, the pointwise difference.
    pub fn div(&self, other: &Self) -> Result<Self> {
        Self::new(self.num.mul(&other.den)?, self.den.mul(&other.num)?)
    }

    /// `p ⊕ q = (p₁q₂ ⊕ q₁p₂) ⊘ (p₂q₂)`, the pointwise max.
    pub fn max(&self, other: &Self) -> Result<Self> {
        let num = self.num.mul(&other.den)?.add(&other.num.mul(&self.den)?)?;
        Self::new(num, self.den.mul(&other.den)?)
    }

    /// The pointwise min via `min{p, q} = (p ⊙ q) ⊘ (p ⊕ q)`, which reduces to
    /// `(p₁q₁) ⊘ (p₁q₂ ⊕ q₁p₂)`.
    pub fn min(&self, other: &Self) -> Result<Self> {
        let num = self.num.mul(&other.num)?;
        let den = self.num.mul(&other.den)?.add(&other.num.mul(&self.den)?)?;
        Self::new(num, den)
    }

    /// Removes redundant monomials from both parts.
    pub fn canonicalize(&self) -> Result<Self> {
        Self::new(self.num.canonicalize()?, self.den.canonicalize()?)
    }
}

impl fmt::Display for TropicalRationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// A vector of tropical rational functions sharing one input dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalMap {
    dim: usize,
    components: Vec<TropicalRationalFn>,
}

impl TropicalMap {
    pub fn new(dim: usize, components: Vec<TropicalRationalFn>) -> Result<Self> {
        for c in &components {
            check_dim(dim, c.dim())?;
        }
        Ok(TropicalMap { dim, components })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Codomain dimension.
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[TropicalRationalFn] {
        &self.components
    }

    pub fn eval(&self, x: &[Rational]) -> Vec<Rational> {
        self.components.iter().map(|c| c.eval(x)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int, point};

    fn var(dim: usize, i: usize) -> TropicalRationalFn {
        TropicalRationalFn::from_polynomial(TropicalPolynomial::variable(dim, i)).unwrap()
    }

    #[test]
    fn rejects_bottom_parts() {
        let b = TropicalPolynomial::bottom(2);
        assert_eq!(
            TropicalRationalFn::new(b.clone(), TropicalPolynomial::one(2)),
            Err(Error::EmptyPolynomial)
        );
        assert!(TropicalRationalFn::new(TropicalPolynomial::one(2), b).is_err());
    }

    #[test]
    fn eval_examples() {
        let f = TropicalPolynomial::variable(2, 0)
            .add(&TropicalPolynomial::variable(2, 1))
            .unwrap();
        let r = TropicalRationalFn::from_polynomial(f.clone()).unwrap();
        assert_eq!(r.eval(&point(&[3, 5])), int(5));
        let s = TropicalRationalFn::new(f.clone(), f).unwrap();
        assert_eq!(s.eval(&[frac(7, 3), int(-2)]), int(0));
    }

    #[test]
    fn min_max_examples() {
        let x1 = var(2, 0);
        let x2 = var(2, 1);
        let m = x1.min(&x2).unwrap();
        assert_eq!(m.eval(&point(&[3, 5])), int(3));
        let pts = [point(&[3, 5]), point(&[-1, 4]), vec![frac(1, 2), frac(-7, 3)], point(&[0, 0])];
        let mm = x1.min(&x1).unwrap();
        let absorb = x1.max(&x1.min(&x2).unwrap()).unwrap();
        for p in &pts {
            assert_eq!(mm.eval(p), x1.eval(p));
            assert_eq!(absorb.eval(p), x1.eval(p));
        }
    }

    #[test]
    fn map_dimension_checked() {
        assert!(TropicalMap::new(3, vec![var(2, 0)]).is_err());
        let m = TropicalMap::new(2, vec![var(2, 0), var(2, 1)]).unwrap();
        assert_eq!(m.eval(&point(&[4, 9])), vec![int(4), int(9)]);
    }
}
