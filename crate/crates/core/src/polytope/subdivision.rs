use super::{convex_hull, Polytope};
use crate::error::{Error, Result};
use crate::rational::Point;
use crate::tropical::TropicalPolynomial;

/// `P(f) = Conv{(α_i, c_i)}`.
pub fn lift_polytope(f: &TropicalPolynomial) -> Result<Polytope> {
    f.lifted_polytope()
}

/// `Δ(f) = Conv{α_i}`.
pub fn newton_polygon(f: &TropicalPolynomial) -> Result<Polytope> {
    if f.is_bottom() {
        return Err(Error::EmptyPolynomial);
    }
    convex_hull(&f.exponent_points())
}

/// One cell of a dual subdivision: the projection of an upper face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub dim: usize,
    /// Projected vertices, sorted.
    pub points: Vec<Point>,
    /// The same vertices before projection, in matching order.
    pub lifted: Vec<Point>,
}

impl Cell {
    pub fn contains_all(&self, other: &Cell) -> bool {
        other.points.iter().all(|p| self.points.contains(p))
    }
}

/// The regular subdivision of the Newton polytope induced by the coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualSubdivision {
    cells: Vec<Cell>,
    support: Polytope,
}

impl DualSubdivision {
    /// Cells ordered by dimension.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// The Newton polytope `Δ(f)`.
    pub fn support(&self) -> &Polytope {
        &self.support
    }

    pub fn cells_of_dim(&self, dim: usize) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(move |c| c.dim == dim)
    }

    /// Number of 0-cells; equals the number of linear regions of the polynomial.
    pub fn vertex_count(&self) -> usize {
        self.cells_of_dim(0).count()
    }

    /// 1-cells lying on the boundary of the support.
    pub fn boundary_edges(&self) -> Vec<&Cell> {
        let top = self.support.affine_dim();
        self.cells_of_dim(1)
            .filter(|e| self.cells_of_dim(top).filter(|c| c.contains_all(e)).count() < 2)
            .collect()
    }
}

/// `δ(f)`: projections of the upper faces of `P(f)`.
pub fn dual_subdivision(f: &TropicalPolynomial) -> Result<DualSubdivision> {
    let lifted = lift_polytope(f)?;
    let support = newton_polygon(f)?;
    let d = f.dim();
    let mut cells: Vec<Cell> = lifted
        .upper_faces()
        .into_iter()
        .map(|face| {
            let mut pairs: Vec<(Point, Point)> = face
                .vertices
                .iter()
                .map(|&i| {
                    let v = lifted.vertices()[i].clone();
                    (v[..d].to_vec(), v)
                })
                .collect();
            pairs.sort();
            let (points, lifted) = pairs.into_iter().unzip();
            Cell { dim: face.dim, points, lifted }
        })
        .collect();
    cells.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.points.cmp(&b.points)));
    Ok(DualSubdivision { cells, support })
}
