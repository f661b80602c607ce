use itertools::Itertools;

use super::{convex_hull, linalg, minkowski_sum, Polytope};
use crate::error::{check_dim, Error, Result};
use crate::rational::{Point, Rational};

/// Largest number of generators accepted when building a zonotope.
pub const MAX_GENERATORS: usize = 20;

/// A line segment given by its two endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub start: Point,
    pub end: Point,
}

impl Segment {
    pub fn new(start: Point, end: Point) -> Result<Self> {
        check_dim(start.len(), end.len())?;
        Ok(Segment { start, end })
    }

    pub fn direction(&self) -> Point {
        self.end.iter().zip(&self.start).map(|(a, b)| a - b).collect()
    }

    pub fn midpoint(&self) -> Point {
        let two = Rational::from_integer(2.into());
        self.start.iter().zip(&self.end).map(|(a, b)| (a + b) / &two).collect()
    }
}

/// The Minkowski sum of a list of segments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Zonotope {
    generators: Vec<Segment>,
}

impl Zonotope {
    pub fn new(generators: Vec<Segment>) -> Result<Self> {
        let first = generators.first().ok_or(Error::EmptyInput)?;
        let dim = first.start.len();
        for g in &generators {
            check_dim(dim, g.start.len())?;
        }
        Ok(Zonotope { generators })
    }

    pub fn generators(&self) -> &[Segment] {
        &self.generators
    }

    pub fn ambient_dim(&self) -> usize {
        self.generators[0].start.len()
    }

    /// The center of symmetry, the sum of the segment midpoints.
    pub fn center(&self) -> Point {
        let dim = self.ambient_dim();
        self.generators.iter().fold(vec![Rational::from_integer(0.into()); dim], |acc, g| {
            acc.iter().zip(g.midpoint()).map(|(a, b)| a + b).collect()
        })
    }

    /// The polytope, built by adding one segment at a time.
    pub fn polytope(&self) -> Result<Polytope> {
        zonotope_from_generators(&self.generators)
    }
}

/// Hull of all `2^m` endpoint-choice sums, built incrementally.
pub fn zonotope_from_generators(segments: &[Segment]) -> Result<Polytope> {
    if segments.len() > MAX_GENERATORS {
        return Err(Error::CandidateCap { count: segments.len(), cap: MAX_GENERATORS });
    }
    let first = segments.first().ok_or(Error::EmptyInput)?;
    let mut acc = convex_hull(&[first.start.clone(), first.end.clone()])?;
    for s in &segments[1..] {
        let seg = convex_hull(&[s.start.clone(), s.end.clone()])?;
        acc = minkowski_sum(&acc, &seg)?;
    }
    Ok(acc)
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

/// `Σ_{j=0}^{d} C(m, j)`: upper-face vertices of a generic zonotope in
/// `R^{d+1}` with `m` generators.
pub fn zonotope_upper_vertex_count(m: u64, d: u64) -> u128 {
    (0..=d).map(|j| binomial(m, j)).sum()
}

/// `2 Σ_{j=0}^{n-1} C(m-1, j)`: the maximal vertex count of a zonotope with `m`
/// pairwise nonparallel generators in `R^n`.
pub fn zonotope_vertex_bound(m: u64, n: u64) -> u128 {
    if m == 0 {
        return 1;
    }
    2 * (0..n).map(|j| binomial(m - 1, j)).sum::<u128>()
}

/// Whether the generators of a zonotope in `R^{d+1}` are in general position.
///
/// Two conditions are checked on the generator directions:
/// every `min(m, d+1)` of them are linearly independent, and after dropping
/// the last coordinate every `min(m, d)` of the projected directions are
/// linearly independent. The second condition is what makes the projected
/// zonotope itself generic.
pub fn general_position_check(segments: &[Segment]) -> bool {
    let Some(first) = segments.first() else {
        return true;
    };
    let n = first.start.len();
    if segments.iter().any(|s| s.start.len() != n) {
        return false;
    }
    let dirs: Vec<Point> = segments.iter().map(Segment::direction).collect();
    let projected: Vec<Point> = dirs.iter().map(|d| d[..n - 1].to_vec()).collect();
    all_subsets_independent(&dirs, n) && (n == 1 || all_subsets_independent(&projected, n - 1))
}

fn all_subsets_independent(vectors: &[Point], dim: usize) -> bool {
    let size = vectors.len().min(dim);
    if size == 0 {
        return true;
    }
    (0..vectors.len()).combinations(size).all(|idx| {
        let rows: Vec<Point> = idx.iter().map(|&i| vectors[i].clone()).collect();
        linalg::rank(&rows) == size
    })
}
