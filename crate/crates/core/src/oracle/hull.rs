use num_traits::{One, Zero};

use super::lp::feasible;
use crate::error::{check_dim, Error, Result};
use crate::rational::{Point, Rational};

/// Largest input accepted by the brute-force hull.
pub const BRUTE_FORCE_POINT_CAP: usize = 200;
pub const BRUTE_FORCE_DIM_CAP: usize = 4;

fn prepare(points: &[Point]) -> Result<Vec<Point>> {
    if points.len() > BRUTE_FORCE_POINT_CAP {
        return Err(Error::CandidateCap { count: points.len(), cap: BRUTE_FORCE_POINT_CAP });
    }
    let first = points.first().ok_or(Error::EmptyInput)?;
    if first.len() > BRUTE_FORCE_DIM_CAP {
        return Err(Error::DimensionCap { dim: first.len(), max: BRUTE_FORCE_DIM_CAP });
    }
    for p in points {
        check_dim(first.len(), p.len())?;
    }
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    Ok(pts)
}

/// Is `target` in `conv(others) + cone(rays)`?
fn in_hull_plus_cone(target: &[Rational], others: &[&Point], rays: &[Point]) -> bool {
    if others.is_empty() {
        return false;
    }
    let dim = target.len();
    // Rows: one per coordinate plus the convexity row; columns: λ then μ.
    let mut m: Vec<Vec<Rational>> = (0..dim)
        .map(|k| {
            others
                .iter()
                .map(|p| p[k].clone())
                .chain(rays.iter().map(|r| r[k].clone()))
                .collect()
        })
        .collect();
    m.push(
        std::iter::repeat_n(Rational::one(), others.len())
            .chain(std::iter::repeat_n(Rational::zero(), rays.len()))
            .collect(),
    );
    let mut rhs = target.to_vec();
    rhs.push(Rational::one());
    feasible(&m, &rhs)
}

fn extreme(points: &[Point], rays: &[Point]) -> Vec<Point> {
    (0..points.len())
        .filter(|&i| {
            let others: Vec<&Point> =
                points.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p).collect();
            !in_hull_plus_cone(&points[i], &others, rays)
        })
        .map(|i| points[i].clone())
        .collect()
}

/// Vertices of `conv(points)`, found by asking one linear program per point
/// whether it is a convex combination of the others. Sorted lexicographically.
pub fn brute_force_hull(points: &[Point]) -> Result<Vec<Point>> {
    let pts = prepare(points)?;
    Ok(extreme(&pts, &[]))
}

/// Vertices of `conv(points)` that lie on an upper face: exactly the vertices
/// of `conv(points) − cone(e)` with `e` the last unit vector.
pub fn brute_force_upper_vertices(points: &[Point]) -> Result<Vec<Point>> {
    let pts = prepare(points)?;
    let dim = pts[0].len();
    let mut down = vec![Rational::zero(); dim];
    down[dim - 1] = -Rational::one();
    Ok(extreme(&pts, &[down]))
}
