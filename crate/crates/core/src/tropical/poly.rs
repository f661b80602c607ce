use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::TropicalValue;
use crate::error::{check_dim, Error, Result};
use crate::polytope::{self, Polytope};
use crate::rational::{Point, Rational};

/// A single term `c ⊙ x^α`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coeff: Rational,
    pub exponent: Vec<u64>,
}

impl Monomial {
    pub fn eval(&self, x: &[Rational]) -> Rational {
        let mut acc = self.coeff.clone();
        for (a, xi) in self.exponent.iter().zip(x) {
            if *a != 0 {
                acc += xi * Rational::from_integer((*a).into());
            }
        }
        acc
    }

    /// The point `(α, c)` in `R^{d+1}`.
    pub fn lift(&self) -> Point {
        self.exponent
            .iter()
            .map(|&a| Rational::from_integer(a.into()))
            .chain(std::iter::once(self.coeff.clone()))
            .collect()
    }
}

/// A finite tropical sum of monomials with pairwise distinct exponents.
///
/// Monomials with coefficient `-inf` are never stored; the empty polynomial is
/// the constant `-inf`. Terms are kept in lexicographic exponent order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TropicalPolynomial {
    dim: usize,
    terms: BTreeMap<Vec<u64>, Rational>,
}

impl TropicalPolynomial {
    /// The constant `-inf` polynomial in `dim` variables.
    pub fn bottom(dim: usize) -> Self {
        TropicalPolynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        let mut p = Self::bottom(dim);
        p.terms.insert(vec![0; dim], c);
        p
    }

    /// The multiplicative identity, the constant `0`.
    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Rational::zero())
    }

    /// The variable `x_{index}` (zero-based index).
    pub fn variable(dim: usize, index: usize) -> Self {
        let mut e = vec![0; dim];
        e[index] = 1;
        Self::monomial(c0(), e)
    }

    pub fn monomial(coeff: Rational, exponent: Vec<u64>) -> Self {
        let mut terms = BTreeMap::new();
        let dim = exponent.len();
        terms.insert(exponent, coeff);
        TropicalPolynomial { dim, terms }
    }

    /// Builds a polynomial from `(coefficient, exponent)` pairs.
    ///
    /// Bottom coefficients are dropped, repeated exponents keep the larger
    /// coefficient, negative exponents are rejected.
    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (TropicalValue, Vec<i64>)>,
    {
        let mut p = Self::bottom(dim);
        for (c, e) in terms {
            check_dim(dim, e.len())?;
            let mut exponent = Vec::with_capacity(dim);
            for (var, &a) in e.iter().enumerate() {
                if a < 0 {
                    return Err(Error::NegativeExponent { var: var + 1, exponent: a });
                }
                exponent.push(a as u64);
            }
            if let TropicalValue::Finite(c) = c {
                p.insert_max(exponent, c);
            }
        }
        Ok(p)
    }

    fn insert_max(&mut self, exponent: Vec<u64>, c: Rational) {
        match self.terms.get_mut(&exponent) {
            Some(existing) => {
                if c > *existing {
                    *existing = c;
                }
            }
            None => {
                self.terms.insert(exponent, c);
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_bottom(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_bottom()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u64], &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn monomials(&self) -> Vec<Monomial> {
        self.terms
            .iter()
            .map(|(e, c)| Monomial {
                coeff: c.clone(),
                exponent: e.clone(),
            })
            .collect()
    }

    pub fn coefficient(&self, exponent: &[u64]) -> TropicalValue {
        match self.terms.get(exponent) {
            Some(c) => TropicalValue::Finite(c.clone()),
            None => TropicalValue::Bottom,
        }
    }

    /// Lifted points `(α_i, c_i)` in monomial order.
    pub fn lifted_points(&self) -> Vec<Point> {
        self.monomials().iter().map(Monomial::lift).collect()
    }

    /// Exponent vectors as rational points in monomial order.
    pub fn exponent_points(&self) -> Vec<Point> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&a| Rational::from_integer(a.into())).collect())
            .collect()
    }

    /// `f ⊕ g`: union of the terms, keeping the larger coefficient on collisions.
    pub fn add(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_max(e.clone(), c.clone());
        }
        Ok(out)
    }

    /// `f ⊙ g`: all pairwise products, merged by max.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut out = Self::bottom(self.dim);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_max(e, c1 + c2);
            }
        }
        Ok(out)
    }

    /// `f^{⊙a}` as `{(a·c_i, a·α_i)}`; the scaled polytope `aP(f)` with the same
    /// function as repeated multiplication.
    pub fn pow(&self, a: u64) -> Self {
        if a == 0 {
            return Self::one(self.dim);
        }
        let k = Rational::from_integer(a.into());
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().map(|x| x * a).collect(), c * &k))
            .collect();
        TropicalPolynomial {
            dim: self.dim,
            terms,
        }
    }

    /// `c ⊙ f`: shifts every coefficient by `c`.
    pub fn shift(&self, c: &Rational) -> Self {
        TropicalPolynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v + c)).collect(),
        }
    }

    /// `max_i (c_i + α_i·x)`, or `-inf` for the empty polynomial.
    pub fn eval(&self, x: &[Rational]) -> TropicalValue {
        debug_assert_eq!(x.len(), self.dim);
        let mut best: Option<Rational> = None;
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (a, xi) in e.iter().zip(x) {
                if *a == 1 {
                    v += xi;
                } else if *a != 0 {
                    v += xi * Rational::from_integer((*a).into());
                }
            }
            if best.as_ref().is_none_or(|b| v > *b) {
                best = Some(v);
            }
        }
        best.map_or(TropicalValue::Bottom, TropicalValue::Finite)
    }

    /// Evaluates a polynomial known to be nonempty.
    pub fn eval_finite(&self, x: &[Rational]) -> Result<Rational> {
        match self.eval(x) {
            TropicalValue::Finite(v) => Ok(v),
            TropicalValue::Bottom => Err(Error::EmptyPolynomial),
        }
    }

    /// Exponents of the monomials attaining the max at `x`.
    pub fn maximizers(&self, x: &[Rational]) -> Vec<Vec<u64>> {
        let Some(best) = self.eval(x).as_finite().cloned() else {
            return Vec::new();
        };
        self.monomials()
            .into_iter()
            .filter(|m| m.eval(x) == best)
            .map(|m| m.exponent)
            .collect()
    }

    /// True iff the max at `x` is attained by at least two monomials.
    pub fn is_tie(&self, x: &[Rational]) -> bool {
        self.maximizers(x).len() >= 2
    }

    /// Keeps only the monomials whose lifts are vertices of `P(f)`.
    ///
    /// Both the function and the lifted polytope are unchanged.
    pub fn prune_to_vertices(&self) -> Result<Self> {
        if self.terms.len() <= 2 {
            return Ok(self.clone());
        }
        let hull = polytope::convex_hull(&self.lifted_points())?;
        Ok(self.restrict_to_lifts(hull.vertices()))
    }

    /// Keeps exactly the monomials whose lifts are vertices of the upper hull of
    /// `P(f)`. The result is functionally equal to `f`.
    pub fn canonicalize(&self) -> Result<Self> {
        if self.terms.len() <= 1 {
            return Ok(self.clone());
        }
        let hull = polytope::convex_hull(&self.lifted_points())?;
        Ok(self.restrict_to_lifts(&hull.upper_hull_vertices()))
    }

    fn restrict_to_lifts(&self, keep: &[Point]) -> Self {
        let dim = self.dim;
        let terms = keep
            .iter()
            .map(|p| {
                let e = p[..dim]
                    .iter()
                    .map(|a| u64::try_from(a.to_integer()).expect("lifted exponent"))
                    .collect::<Vec<_>>();
                (e, p[dim].clone())
            })
            .collect();
        TropicalPolynomial { dim, terms }
    }

    /// The lifted polytope `P(f) = Conv{(α_i, c_i)}`.
    pub fn lifted_polytope(&self) -> Result<Polytope> {
        if self.is_bottom() {
            return Err(Error::EmptyPolynomial);
        }
        polytope::convex_hull(&self.lifted_points())
    }
}

fn c0() -> Rational {
    Rational::zero()
}

impl fmt::Display for TropicalPolynomial {
    /// Expression syntax: `+` is `⊕`, `*` is `⊙`, variables are one-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("-inf");
        }
        // Highest degree first reads more naturally.
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, a)| **a > 0)
                .map(|(v, a)| {
                    if *a == 1 {
                        format!("x{}", v + 1)
                    } else {
                        format!("x{}^{}", v + 1, a)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_zero() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{c}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl TropicalPolynomial {
    /// True iff `self` is the constant `0` polynomial.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| e.iter().all(|a| *a == 0) && c.is_zero())
    }

    /// Total degree of the highest-degree monomial.
    pub fn degree(&self) -> u64 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int, point};

    fn poly(dim: usize, terms: &[(i64, &[i64])]) -> TropicalPolynomial {
        TropicalPolynomial::from_terms(
            dim,
            terms
                .iter()
                .map(|(c, e)| (TropicalValue::Finite(int(*c)), e.to_vec())),
        )
        .unwrap()
    }

    fn conic() -> TropicalPolynomial {
        poly(
            2,
            &[
                (1, &[2, 0]),
                (1, &[0, 2]),
                (2, &[1, 1]),
                (2, &[1, 0]),
                (2, &[0, 1]),
                (2, &[0, 0]),
            ],
        )
    }

    #[test]
    fn add_merges_by_max() {
        let f = poly(1, &[(2, &[1])]);
        let g = poly(1, &[(3, &[1])]);
        assert_eq!(f.add(&g).unwrap(), g);
        assert_eq!(f.add(&f).unwrap(), f);
        let a = poly(2, &[(1, &[2, 0])]);
        let b = poly(2, &[(2, &[1, 1])]);
        assert_eq!(a.add(&b).unwrap().len(), 2);
    }

    #[test]
    fn add_rejects_dimension_mismatch() {
        let a = TropicalPolynomial::one(1);
        let b = TropicalPolynomial::one(2);
        assert_eq!(
            a.add(&b),
            Err(Error::DimensionMismatch { expected: 1, found: 2 })
        );
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn mul_expands() {
        let x1 = poly(2, &[(0, &[1, 0]), (0, &[0, 0])]);
        let x2 = poly(2, &[(0, &[0, 1]), (0, &[0, 0])]);
        let expected = poly(2, &[(0, &[1, 1]), (0, &[1, 0]), (0, &[0, 1]), (0, &[0, 0])]);
        assert_eq!(x1.mul(&x2).unwrap(), expected);
        assert_eq!(x1.mul(&TropicalPolynomial::one(2)).unwrap(), x1);
    }

    #[test]
    fn mul_square_of_factor() {
        let q = poly(2, &[(-1, &[1, 0]), (0, &[0, 3])]);
        let sq = q.mul(&q).unwrap();
        let expected = poly(2, &[(-2, &[2, 0]), (-1, &[1, 3]), (0, &[0, 6])]);
        assert_eq!(sq, expected);
        // sampling against 2·max(-1 + x1, 3 x2)
        for (a, b) in [(0, 0), (3, 1), (-2, 5), (7, -3), (1, 0)] {
            let x = vec![frac(a, 3), frac(b, 2)];
            let direct = std::cmp::max(int(-1) + &x[0], int(3) * &x[1]) * int(2);
            assert_eq!(sq.eval_finite(&x).unwrap(), direct);
        }
    }

    #[test]
    fn pow_examples() {
        let f = conic();
        assert_eq!(f.pow(0), TropicalPolynomial::one(2));
        let x23 = poly(2, &[(0, &[0, 3])]);
        assert_eq!(x23.pow(2), poly(2, &[(0, &[0, 6])]));
        let g = poly(2, &[(-2, &[3, 2]), (0, &[0, 0])]);
        let g3 = g.pow(3);
        assert_eq!(g3, poly(2, &[(-6, &[9, 6]), (0, &[0, 0])]));
        for (a, b) in [(0, 0), (1, 1), (-1, 2), (5, -7)] {
            let x = vec![int(a), frac(b, 5)];
            let direct =
                std::cmp::max(int(-2) + int(3) * &x[0] + int(2) * &x[1], int(0)) * int(3);
            assert_eq!(g3.eval_finite(&x).unwrap(), direct);
        }
    }

    #[test]
    fn eval_examples() {
        assert_eq!(conic().eval(&point(&[0, 0])), TropicalValue::Finite(int(2)));
        let f = poly(2, &[(0, &[1, 0]), (0, &[0, 1])]);
        assert_eq!(f.eval(&point(&[3, 5])), TropicalValue::Finite(int(5)));
        assert_eq!(
            TropicalPolynomial::bottom(2).eval(&point(&[1, 1])),
            TropicalValue::Bottom
        );
    }

    #[test]
    fn from_terms_rejects_negative_exponents_and_drops_bottom() {
        let err = TropicalPolynomial::from_terms(2, vec![(TropicalValue::one(), vec![1, -2])]);
        assert_eq!(err, Err(Error::NegativeExponent { var: 2, exponent: -2 }));
        let p = TropicalPolynomial::from_terms(
            1,
            vec![(TropicalValue::Bottom, vec![3]), (TropicalValue::one(), vec![0])],
        )
        .unwrap();
        assert_eq!(p, TropicalPolynomial::one(1));
    }

    #[test]
    fn canonicalize_examples() {
        // x1 ⊕ x1 ⊕ 0 merges to x1 ⊕ 0 and stays.
        let p = poly(1, &[(0, &[1]), (0, &[1]), (0, &[0])]);
        assert_eq!(p.len(), 2);
        assert_eq!(p.canonicalize().unwrap(), p);

        // The middle lift (1,3,-1) is the midpoint of (2,0,-2) and (0,6,0).
        let lifts = [point(&[2, 0, -2]), point(&[1, 3, -1]), point(&[0, 6, 0])];
        let mid: Vec<Rational> = lifts[0]
            .iter()
            .zip(&lifts[2])
            .map(|(a, b)| (a + b) / int(2))
            .collect();
        assert_eq!(mid, lifts[1]);
        let sq = poly(2, &[(-2, &[2, 0]), (-1, &[1, 3]), (0, &[0, 6])]);
        assert_eq!(
            sq.canonicalize().unwrap(),
            poly(2, &[(-2, &[2, 0]), (0, &[0, 6])])
        );

        assert_eq!(conic().canonicalize().unwrap(), conic());
    }

    #[test]
    fn canonicalize_drops_lower_vertices_of_vertical_hulls() {
        // max(0, x - 5, 2x): the lift (1, -5) is a lower vertex only.
        let p = poly(1, &[(0, &[0]), (-5, &[1]), (0, &[2])]);
        assert_eq!(p.canonicalize().unwrap(), poly(1, &[(0, &[0]), (0, &[2])]));
    }

    #[test]
    fn display_round_trips_through_text() {
        assert_eq!(
            conic().to_string(),
            "1*x1^2 + 2*x1*x2 + 2*x1 + 1*x2^2 + 2*x2 + 2"
        );
        assert_eq!(poly(2, &[(0, &[0, 3])]).to_string(), "x2^3");
        assert_eq!(TropicalPolynomial::bottom(1).to_string(), "-inf");
    }
}
