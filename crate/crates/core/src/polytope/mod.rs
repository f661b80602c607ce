//! Exact polytopes: convex hulls, Minkowski sums, zonotopes, upper hulls and
//! the dual subdivisions they project to.
//!
//! Everything works over exact rationals in ambient dimension at most
//! [`MAX_AMBIENT_DIM`], which covers lifted polytopes of polynomials in up to
//! three variables.

mod hull;
pub mod linalg;
mod minkowski;
mod subdivision;
mod zonotope;

pub use hull::convex_hull;
pub use minkowski::{minkowski_sum, weighted_minkowski, MINKOWSKI_CANDIDATE_CAP};
pub use subdivision::{dual_subdivision, lift_polytope, newton_polygon, Cell, DualSubdivision};
pub use zonotope::{
    binomial, general_position_check, zonotope_from_generators, zonotope_upper_vertex_count,
    zonotope_vertex_bound, Segment, Zonotope, MAX_GENERATORS,
};

use std::collections::{BTreeSet, VecDeque};

use fixedbitset::FixedBitSet;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{dot, format_rational, parse_rational, Point, Rational};

/// Largest supported ambient dimension.
pub const MAX_AMBIENT_DIM: usize = 4;

/// An affine hyperplane `normal · x = offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    pub normal: Point,
    pub offset: Rational,
}

/// A facet `normal · x ≤ offset` of a polytope, relative to its affine hull.
///
/// `vertices` indexes into [`Polytope::vertices`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub normal: Point,
    pub offset: Rational,
    pub vertices: Vec<usize>,
}

/// A face given by its vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub vertices: Vec<usize>,
    pub dim: usize,
    /// Whether some outer normal of the face has positive last coordinate.
    pub upper: bool,
}

/// A convex polytope with its vertices, facets and affine hull.
///
/// Vertices are sorted lexicographically, so two polytopes with the same vertex
/// set compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Point>,
    facets: Vec<Facet>,
    equations: Vec<Hyperplane>,
    affine_dim: usize,
}

impl Polytope {
    pub(crate) fn from_parts(
        dim: usize,
        vertices: Vec<Point>,
        facets: Vec<Facet>,
        equations: Vec<Hyperplane>,
        affine_dim: usize,
    ) -> Self {
        Polytope { dim, vertices, facets, equations, affine_dim }
    }

    /// A single point.
    pub fn point(p: Point) -> Result<Self> {
        convex_hull(&[p])
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Equations of the affine hull; empty for full-dimensional polytopes.
    pub fn equations(&self) -> &[Hyperplane] {
        &self.equations
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim == self.dim
    }

    /// Exact membership test.
    pub fn contains(&self, p: &[Rational]) -> bool {
        p.len() == self.dim
            && self.equations.iter().all(|h| dot(&h.normal, p) == h.offset)
            && self.facets.iter().all(|f| dot(&f.normal, p) <= f.offset)
    }

    /// True iff the affine hull is not vertical, in which case every face has an
    /// outer normal pointing up.
    fn hull_is_non_vertical(&self) -> bool {
        self.equations.iter().any(|h| !h.normal[self.dim - 1].is_zero())
    }

    fn facet_is_upper(&self, f: &Facet) -> bool {
        f.normal[self.dim - 1].is_positive()
    }

    /// Vertices lying on at least one upper face.
    ///
    /// For a full-dimensional polytope these are the vertices incident to a
    /// facet whose outer normal has positive last coordinate. For lower
    /// dimensional polytopes the same normal-cone test is applied inside the
    /// affine hull.
    pub fn upper_hull_vertices(&self) -> Vec<Point> {
        if self.hull_is_non_vertical() {
            return self.vertices.clone();
        }
        let mut upper = vec![false; self.vertices.len()];
        for f in self.facets.iter().filter(|f| self.facet_is_upper(f)) {
            for &v in &f.vertices {
                upper[v] = true;
            }
        }
        self.vertices
            .iter()
            .zip(upper)
            .filter(|(_, u)| *u)
            .map(|(v, _)| v.clone())
            .collect()
    }

    /// All nonempty faces, including the polytope itself, ordered by dimension
    /// and then by vertex indices.
    pub fn faces(&self) -> Vec<Face> {
        let nv = self.vertices.len();
        let all: Vec<usize> = (0..nv).collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        seen.insert(all.clone());
        let facet_sets: Vec<FixedBitSet> = self
            .facets
            .iter()
            .map(|f| {
                let mut s = FixedBitSet::with_capacity(nv);
                for &v in &f.vertices {
                    s.insert(v);
                }
                s
            })
            .collect();
        let mut queue: VecDeque<FixedBitSet> = facet_sets.iter().cloned().collect();
        while let Some(s) = queue.pop_front() {
            let key: Vec<usize> = s.ones().collect();
            if key.is_empty() || !seen.insert(key) {
                continue;
            }
            for f in &facet_sets {
                let mut t = s.clone();
                t.intersect_with(f);
                if t.count_ones(..) > 0 && t != s {
                    queue.push_back(t);
                }
            }
        }
        let non_vertical = self.hull_is_non_vertical();
        let mut faces: Vec<Face> = seen
            .into_iter()
            .map(|vs| {
                let upper = non_vertical
                    || self.facets.iter().any(|f| {
                        self.facet_is_upper(f) && vs.iter().all(|v| f.vertices.contains(v))
                    });
                let dim = self.affine_rank(&vs);
                Face { vertices: vs, dim, upper }
            })
            .collect();
        faces.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.vertices.cmp(&b.vertices)));
        faces
    }

    /// Faces with an upward outer normal.
    pub fn upper_faces(&self) -> Vec<Face> {
        self.faces().into_iter().filter(|f| f.upper).collect()
    }

    fn affine_rank(&self, ids: &[usize]) -> usize {
        let base = &self.vertices[ids[0]];
        let dirs: Vec<Point> = ids[1..]
            .iter()
            .map(|&i| self.vertices[i].iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        linalg::rank(&dirs)
    }

    /// `λP` for `λ ≥ 0`.
    pub fn scale(&self, lambda: &Rational) -> Result<Self> {
        if lambda.is_negative() {
            return Err(Error::Domain("Minkowski weights must be nonnegative".into()));
        }
        let pts: Vec<Point> = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|x| x * lambda).collect())
            .collect();
        convex_hull(&pts)
    }

    /// `P + {t}`.
    pub fn translate(&self, t: &[Rational]) -> Result<Self> {
        crate::error::check_dim(self.dim, t.len())?;
        let pts: Vec<Point> = self
            .vertices
            .iter()
            .map(|v| v.iter().zip(t).map(|(a, b)| a + b).collect())
            .collect();
        convex_hull(&pts)
    }

    /// Drops the last coordinate of every vertex.
    pub fn project(&self) -> Result<Self> {
        let pts: Vec<Point> = self
            .vertices
            .iter()
            .map(|v| v[..self.dim - 1].to_vec())
            .collect();
        convex_hull(&pts)
    }

    pub fn to_json(&self) -> PolytopeJson {
        PolytopeJson {
            dim: self.dim,
            vertices: self
                .vertices
                .iter()
                .map(|v| v.iter().map(format_rational).collect())
                .collect(),
        }
    }

    pub fn from_json(json: &PolytopeJson) -> Result<Self> {
        let pts = json
            .vertices
            .iter()
            .map(|v| v.iter().map(|s| parse_rational(s)).collect::<Result<Point>>())
            .collect::<Result<Vec<Point>>>()?;
        for p in &pts {
            crate::error::check_dim(json.dim, p.len())?;
        }
        convex_hull(&pts)
    }
}

/// Serialized form `{"dim": n, "vertices": [["p/q", ...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeJson {
    pub dim: usize,
    pub vertices: Vec<Vec<String>>,
}
