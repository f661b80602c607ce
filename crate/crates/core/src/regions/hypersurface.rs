use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polytope::{dual_subdivision, linalg, Cell};
use crate::rational::{dot, format_rational, primitive_integer, sub, Point, Rational};
use crate::tropical::TropicalPolynomial;

/// One edge of a plane tropical curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveEdge {
    /// Dual to an interior edge of the subdivision.
    Segment { from: Point, to: Point },
    /// Dual to a boundary edge of the Newton polygon.
    Ray { from: Point, direction: Point },
    /// Dual to an edge of a one-dimensional Newton polygon.
    Line { through: Point, direction: Point },
}

impl CurveEdge {
    /// A point in the relative interior of the edge.
    pub fn sample_point(&self) -> Point {
        match self {
            CurveEdge::Segment { from, to } => {
                from.iter().zip(to).map(|(a, b)| (a + b) / Rational::from_integer(2.into())).collect()
            }
            CurveEdge::Ray { from, direction } | CurveEdge::Line { through: from, direction } => {
                from.iter().zip(direction).map(|(a, b)| a + b).collect()
            }
        }
    }
}

/// The 1-skeleton of a tropical curve in the plane.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TropicalCurve {
    pub vertices: Vec<Point>,
    pub edges: Vec<CurveEdge>,
}

impl TropicalCurve {
    pub fn bounded_edges(&self) -> impl Iterator<Item = &CurveEdge> {
        self.edges.iter().filter(|e| matches!(e, CurveEdge::Segment { .. }))
    }

    pub fn rays(&self) -> impl Iterator<Item = &CurveEdge> {
        self.edges.iter().filter(|e| matches!(e, CurveEdge::Ray { .. }))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let pt = |p: &Point| p.iter().map(format_rational).collect::<Vec<_>>();
        let edges: Vec<serde_json::Value> = self
            .edges
            .iter()
            .map(|e| match e {
                CurveEdge::Segment { from, to } => {
                    serde_json::json!({"kind": "segment", "from": pt(from), "to": pt(to)})
                }
                CurveEdge::Ray { from, direction } => {
                    serde_json::json!({"kind": "ray", "from": pt(from), "direction": pt(direction)})
                }
                CurveEdge::Line { through, direction } => {
                    serde_json::json!({"kind": "line", "through": pt(through), "direction": pt(direction)})
                }
            })
            .collect();
        serde_json::json!({
            "vertices": self.vertices.iter().map(pt).collect::<Vec<_>>(),
            "edges": edges,
        })
    }
}

/// `T(f)`: the points where the maximum in `f` is attained at least twice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalHypersurface {
    poly: TropicalPolynomial,
    curve: Option<TropicalCurve>,
}

impl TropicalHypersurface {
    pub fn polynomial(&self) -> &TropicalPolynomial {
        &self.poly
    }

    pub fn dim(&self) -> usize {
        self.poly.dim()
    }

    /// Exact membership.
    pub fn contains(&self, x: &[Rational]) -> bool {
        self.poly.is_tie(x)
    }

    /// The explicit curve; only available in the plane.
    pub fn curve(&self) -> Result<&TropicalCurve> {
        self.curve.as_ref().ok_or(Error::NotPlanar(self.poly.dim()))
    }
}

/// Builds `T(f)`. For two variables the curve is read off the dual
/// subdivision: a vertex per 2-cell, a segment per interior edge and a ray per
/// boundary edge.
pub fn hypersurface(f: &TropicalPolynomial) -> Result<TropicalHypersurface> {
    if f.is_bottom() {
        return Err(Error::EmptyPolynomial);
    }
    let curve = if f.dim() == 2 { Some(plane_curve(f)?) } else { None };
    Ok(TropicalHypersurface { poly: f.clone(), curve })
}

fn to_rational(v: Vec<num_bigint::BigInt>) -> Point {
    v.into_iter().map(Rational::from_integer).collect()
}

/// `(-e₂, e₁)`.
fn perp(e: &[Rational]) -> Point {
    vec![-e[1].clone(), e[0].clone()]
}

/// The point where the monomials of a 2-cell tie.
fn cell_vertex(cell: &Cell) -> Point {
    let p0 = &cell.lifted[0];
    let e1 = sub(&cell.lifted[1][..2], &p0[..2]);
    let e2 = cell.lifted[2..]
        .iter()
        .map(|p| (p, sub(&p[..2], &p0[..2])))
        .find(|(_, e)| !(&e1[0] * &e[1] - &e1[1] * &e[0]).is_zero())
        .expect("a 2-cell has three affinely independent points");
    // c_k + α_k·x = c_0 + α_0·x  ⇔  (α_k − α_0)·x = c_0 − c_k
    let rhs = [&p0[2] - &cell.lifted[1][2], &p0[2] - &e2.0[2]];
    linalg::solve(&[e1, e2.1], &rhs).expect("independent rows")
}

fn plane_curve(f: &TropicalPolynomial) -> Result<TropicalCurve> {
    let subdiv = dual_subdivision(f)?;
    let mut curve = TropicalCurve::default();
    match subdiv.support().affine_dim() {
        0 => {}
        1 => {
            for cell in subdiv.cells_of_dim(1) {
                let (p, q) = (&cell.lifted[0], &cell.lifted[1]);
                let e = sub(&q[..2], &p[..2]);
                // (α_q − α_p)·x = c_p − c_q, nearest point to the origin
                let norm: Rational = e.iter().map(|v| v * v).sum();
                let k = (&p[2] - &q[2]) / norm;
                let through = e.iter().map(|v| v * &k).collect();
                curve.edges.push(CurveEdge::Line { through, direction: to_rational(primitive_integer(&perp(&e))) });
            }
        }
        _ => {
            let cells: Vec<&Cell> = subdiv.cells_of_dim(2).collect();
            let vertices: Vec<Point> = cells.iter().map(|c| cell_vertex(c)).collect();
            for edge in subdiv.cells_of_dim(1) {
                let owners: Vec<usize> =
                    (0..cells.len()).filter(|&i| cells[i].contains_all(edge)).collect();
                match owners.as_slice() {
                    [a, b] => curve.edges.push(CurveEdge::Segment {
                        from: vertices[*a].clone(),
                        to: vertices[*b].clone(),
                    }),
                    [a] => {
                        let e = sub(&edge.points[1], &edge.points[0]);
                        let mut n = perp(&e);
                        let inside = cells[*a]
                            .points
                            .iter()
                            .map(|r| dot(&n, &sub(r, &edge.points[0])))
                            .find(|v| !v.is_zero())
                            .expect("a 2-cell is not contained in an edge");
                        if inside > Rational::zero() {
                            n = n.into_iter().map(|v| -v).collect();
                        }
                        curve.edges.push(CurveEdge::Ray {
                            from: vertices[*a].clone(),
                            direction: to_rational(primitive_integer(&n)),
                        });
                    }
                    _ => unreachable!("an edge of a planar subdivision borders one or two cells"),
                }
            }
            curve.vertices = vertices;
        }
    }
    Ok(curve)
}
