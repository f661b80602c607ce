//! Exact convex hulls in dimension at most [`MAX_AMBIENT_DIM`].
//!
//! The hull is computed inside the affine span of the input: points are
//! projected onto pivot coordinates of the span, facets are enumerated with the
//! double description method on the homogenized cone
//! `{(a, b) : a·y ≤ b for every point y}`, and lifted back. All arithmetic is
//! exact.

use fixedbitset::FixedBitSet;
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::Zero;

use super::linalg;
use super::{Facet, Hyperplane, Polytope, MAX_AMBIENT_DIM};
use crate::error::{Error, Result};
use crate::rational::{denominator_lcm, dot, primitive_integer, Point, Rational};

/// Convex hull of a finite point set.
pub fn convex_hull(points: &[Point]) -> Result<Polytope> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let dim = first.len();
    if dim > MAX_AMBIENT_DIM {
        return Err(Error::DimensionCap { dim, max: MAX_AMBIENT_DIM });
    }
    if dim == 0 {
        return Err(Error::Domain("points must have at least one coordinate".into()));
    }
    for p in points {
        if p.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: p.len() });
        }
    }
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();

    let base = pts[0].clone();
    let dirs: Vec<Point> = pts[1..]
        .iter()
        .map(|p| p.iter().zip(&base).map(|(a, b)| a - b).collect())
        .collect();
    let (span, pivots) = linalg::rref(dirs, dim);
    let equations: Vec<Hyperplane> = linalg::null_space(&span, dim)
        .into_iter()
        .map(|n| {
            let n = to_rational(&primitive_integer(&n));
            let offset = dot(&n, &base);
            Hyperplane { normal: n, offset }
        })
        .collect();
    let k = pivots.len();

    if k == 0 {
        return Ok(Polytope::from_parts(dim, pts, Vec::new(), equations, 0));
    }

    let projected: Vec<Point> = pts
        .iter()
        .map(|p| pivots.iter().map(|&c| p[c].clone()).collect())
        .collect();

    // Facets as (projected normal, offset, tight point set).
    let raw_facets: Vec<(Point, Rational, FixedBitSet)> = if k == 1 {
        let (lo, hi) = extreme_indices(&projected);
        let n = projected.len();
        let mut lo_set = FixedBitSet::with_capacity(n);
        lo_set.insert(lo);
        let mut hi_set = FixedBitSet::with_capacity(n);
        hi_set.insert(hi);
        vec![
            (vec![Rational::from_integer(1.into())], projected[hi][0].clone(), hi_set),
            (vec![Rational::from_integer((-1).into())], -projected[lo][0].clone(), lo_set),
        ]
    } else {
        double_description(&projected, k)
    };

    // A point is a vertex iff the normals of its tight facets span the space.
    let mut vertex_ids = Vec::new();
    for i in 0..pts.len() {
        let tight: Vec<Point> = raw_facets
            .iter()
            .filter(|(_, _, z)| z.contains(i))
            .map(|(a, _, _)| a.clone())
            .collect();
        if tight.len() >= k && linalg::rank(&tight) == k {
            vertex_ids.push(i);
        }
    }
    let vertices: Vec<Point> = vertex_ids.iter().map(|&i| pts[i].clone()).collect();

    let mut facets: Vec<Facet> = raw_facets
        .into_iter()
        .map(|(a, b, z)| {
            let mut normal = vec![Rational::zero(); dim];
            for (&c, v) in pivots.iter().zip(a) {
                normal[c] = v;
            }
            let incident = vertex_ids
                .iter()
                .enumerate()
                .filter(|(_, &pi)| z.contains(pi))
                .map(|(vi, _)| vi)
                .collect();
            Facet { normal, offset: b, vertices: incident }
        })
        .collect();
    facets.sort_by(|a, b| a.normal.cmp(&b.normal).then(a.offset.cmp(&b.offset)));

    Ok(Polytope::from_parts(dim, vertices, facets, equations, k))
}

fn extreme_indices(projected: &[Point]) -> (usize, usize) {
    let mut lo = 0;
    let mut hi = 0;
    for (i, p) in projected.iter().enumerate() {
        if p[0] < projected[lo][0] {
            lo = i;
        }
        if p[0] > projected[hi][0] {
            hi = i;
        }
    }
    (lo, hi)
}

fn to_rational(v: &[BigInt]) -> Point {
    v.iter().map(|x| Rational::from_integer(x.clone())).collect()
}

struct Ray {
    z: Vec<BigInt>,
    zeros: FixedBitSet,
}

fn int_dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
    v
}

/// Facets of the full-dimensional hull of `points` in `Q^k`, `k ≥ 2`.
fn double_description(points: &[Point], k: usize) -> Vec<(Point, Rational, FixedBitSet)> {
    let n = points.len();
    // Constraint rows (y, -1) scaled to integers: r·(a, b) ≤ 0 ⟺ a·y ≤ b.
    let rows: Vec<Vec<BigInt>> = points
        .iter()
        .map(|y| {
            let l = denominator_lcm(y);
            let lr = Rational::from_integer(l.clone());
            y.iter()
                .map(|v| (v * &lr).to_integer())
                .chain(std::iter::once(-l))
                .collect()
        })
        .collect();

    // Greedy choice of k + 1 independent rows for the initial simplicial cone.
    let mut chosen: Vec<usize> = Vec::with_capacity(k + 1);
    let mut chosen_rows: Vec<Point> = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let mut trial = chosen_rows.clone();
        trial.push(to_rational(r));
        if linalg::rank(&trial) == trial.len() {
            chosen.push(i);
            chosen_rows = trial;
            if chosen.len() == k + 1 {
                break;
            }
        }
    }
    assert_eq!(chosen.len(), k + 1, "points must affinely span the space");
    let inv = linalg::inverse(&chosen_rows).expect("independent rows");

    let mut rays: Vec<Ray> = (0..=k)
        .map(|j| {
            let col: Point = inv.iter().map(|row| -row[j].clone()).collect();
            let z = primitive_integer(&col);
            let mut zeros = FixedBitSet::with_capacity(n);
            for (jj, &ri) in chosen.iter().enumerate() {
                if jj != j {
                    zeros.insert(ri);
                }
            }
            Ray { z, zeros }
        })
        .collect();

    let mut processed = FixedBitSet::with_capacity(n);
    for &c in &chosen {
        processed.insert(c);
    }

    for i in 0..n {
        if processed.contains(i) {
            continue;
        }
        processed.insert(i);
        let row = &rows[i];
        let values: Vec<BigInt> = rays.iter().map(|r| int_dot(row, &r.z)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&j| values[j].sign() == Sign::Plus).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&j| values[j].sign() == Sign::Minus).collect();

        let mut created = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let mut common = rays[p].zeros.clone();
                common.intersect_with(&rays[q].zeros);
                if common.count_ones(..) + 1 < k {
                    continue;
                }
                let dominated = rays.iter().enumerate().any(|(j, r)| {
                    j != p && j != q && common.is_subset(&r.zeros)
                });
                if dominated {
                    continue;
                }
                let sp = &values[p];
                let sq = -&values[q];
                let z: Vec<BigInt> = rays[q]
                    .z
                    .iter()
                    .zip(&rays[p].z)
                    .map(|(a, b)| sp * a + &sq * b)
                    .collect();
                common.insert(i);
                created.push(Ray { z: normalize(z), zeros: common });
            }
        }

        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
        for (j, mut r) in rays.into_iter().enumerate() {
            match values[j].sign() {
                Sign::Plus => {}
                Sign::NoSign => {
                    r.zeros.insert(i);
                    next.push(r);
                }
                Sign::Minus => next.push(r),
            }
        }
        next.extend(created);
        rays = next;
    }

    rays.into_iter()
        .filter(|r| r.z[..k].iter().any(|v| !v.is_zero()))
        .map(|r| {
            let a = to_rational(&r.z[..k]);
            let b = Rational::from_integer(r.z[k].clone());
            (a, b, r.zeros)
        })
        .collect()
}
