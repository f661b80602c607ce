use super::{convex_hull, Polytope};
use crate::error::{check_dim, Error, Result};
use crate::rational::{Point, Rational};

/// Upper limit on `|V(P)|·|V(Q)|` candidate sums.
pub const MINKOWSKI_CANDIDATE_CAP: usize = 1_000_000;

/// `P + Q = Conv(V(P) + V(Q))`.
pub fn minkowski_sum(p: &Polytope, q: &Polytope) -> Result<Polytope> {
    check_dim(p.ambient_dim(), q.ambient_dim())?;
    let count = p.vertices().len() * q.vertices().len();
    if count > MINKOWSKI_CANDIDATE_CAP {
        return Err(Error::CandidateCap { count, cap: MINKOWSKI_CANDIDATE_CAP });
    }
    let mut candidates: Vec<Point> = Vec::with_capacity(count);
    for a in p.vertices() {
        for b in q.vertices() {
            candidates.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
        }
    }
    convex_hull(&candidates)
}

/// `λ₁P₁ + … + λ_kP_k`, folded left pairwise.
pub fn weighted_minkowski(terms: &[(Rational, &Polytope)]) -> Result<Polytope> {
    let mut iter = terms.iter();
    let (l0, p0) = iter.next().ok_or(Error::EmptyInput)?;
    let mut acc = p0.scale(l0)?;
    for (l, p) in iter {
        acc = minkowski_sum(&acc, &p.scale(l)?)?;
    }
    Ok(acc)
}
