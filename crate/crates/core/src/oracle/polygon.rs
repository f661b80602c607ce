//! Exact planar region counting by polygon clipping.
//!
//! The box is cut along every kink of the function, one kink at a time, so
//! that each piece carries the exact affine function the input takes there.
//! Pieces with the same function that share an edge of positive length are
//! then merged. Everything is rational; nothing is sampled.

use std::collections::{BTreeMap, VecDeque};

use num_traits::{Signed, Zero};

use super::grid::{GridBox, PlFunction};
use crate::error::Result;
use crate::rational::{Point, Rational};
use crate::tropical::{TropicalPolynomial, TropicalValue};

type Pt = [Rational; 2];

/// `g · x + c` on the plane.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Affine {
    g: [Rational; 2],
    c: Rational,
}

impl Affine {
    fn constant(c: Rational) -> Self {
        Affine { g: [Rational::zero(), Rational::zero()], c }
    }

    fn coordinate(k: usize) -> Self {
        let mut g = [Rational::zero(), Rational::zero()];
        g[k] = Rational::from_integer(1.into());
        Affine { g, c: Rational::zero() }
    }

    fn at(&self, p: &Pt) -> Rational {
        &self.g[0] * &p[0] + &self.g[1] * &p[1] + &self.c
    }

    fn add_scaled(&mut self, k: &Rational, other: &Affine) {
        self.g[0] += k * &other.g[0];
        self.g[1] += k * &other.g[1];
        self.c += k * &other.c;
    }

    fn minus(&self, other: &Affine) -> Affine {
        let mut out = self.clone();
        out.add_scaled(&Rational::from_integer((-1).into()), other);
        out
    }
}

/// A convex polygon, vertices counter-clockwise.
type Polygon = Vec<Pt>;

/// Splits `poly` by the sign of `h`: returns the parts where `h ≥ 0` and
/// `h ≤ 0`, dropping parts without interior.
fn split(poly: &Polygon, h: &Affine) -> (Option<Polygon>, Option<Polygon>) {
    let vals: Vec<Rational> = poly.iter().map(|p| h.at(p)).collect();
    if vals.iter().all(|v| !v.is_negative()) {
        return (Some(poly.clone()), None);
    }
    if vals.iter().all(|v| !v.is_positive()) {
        return (None, Some(poly.clone()));
    }
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let n = poly.len();
    for i in 0..n {
        let (p, vp) = (&poly[i], &vals[i]);
        let (q, vq) = (&poly[(i + 1) % n], &vals[(i + 1) % n]);
        if !vp.is_negative() {
            pos.push(p.clone());
        }
        if !vp.is_positive() {
            neg.push(p.clone());
        }
        if (vp.is_positive() && vq.is_negative()) || (vp.is_negative() && vq.is_positive()) {
            let t = vp / (vp - vq);
            let x = [&p[0] + &t * (&q[0] - &p[0]), &p[1] + &t * (&q[1] - &p[1])];
            pos.push(x.clone());
            neg.push(x);
        }
    }
    (solid(pos), solid(neg))
}

fn cross(o: &Pt, a: &Pt, b: &Pt) -> Rational {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

fn solid(poly: Polygon) -> Option<Polygon> {
    let n = poly.len();
    let area2: Rational = (0..n).map(|i| cross(&poly[0], &poly[i], &poly[(i + 1) % n])).sum();
    area2.is_positive().then_some(poly)
}

/// A piece of the box and the values of the current layer on it.
#[derive(Clone)]
struct Piece {
    poly: Polygon,
    values: Vec<Affine>,
}

/// Refines every piece so that `max(values[i], t)` is affine on each part.
fn relu_step(pieces: Vec<Piece>, node: usize, t: &Rational) -> Vec<Piece> {
    let mut out = Vec::with_capacity(pieces.len());
    for p in pieces {
        let h = p.values[node].minus(&Affine::constant(t.clone()));
        let (above, below) = split(&p.poly, &h);
        if let Some(poly) = above {
            out.push(Piece { poly, values: p.values.clone() });
        }
        if let Some(poly) = below {
            let mut values = p.values;
            values[node] = Affine::constant(t.clone());
            out.push(Piece { poly, values });
        }
    }
    out
}

/// Refines every piece by which term of `f` is largest; the result carries
/// that term's affine function.
fn max_pieces(pieces: Vec<Piece>, f: &TropicalPolynomial) -> Vec<Piece> {
    let terms: Vec<Affine> = f
        .terms()
        .map(|(e, c)| Affine {
            g: [Rational::from_integer(e[0].into()), Rational::from_integer(e[1].into())],
            c: c.clone(),
        })
        .collect();
    let mut current: Vec<Piece> =
        pieces.into_iter().map(|p| Piece { poly: p.poly, values: vec![terms[0].clone()] }).collect();
    for term in &terms[1..] {
        let mut next = Vec::with_capacity(current.len());
        for p in current {
            let (above, below) = split(&p.poly, &term.minus(&p.values[0]));
            if let Some(poly) = above {
                next.push(Piece { poly, values: vec![term.clone()] });
            }
            if let Some(poly) = below {
                next.push(Piece { poly, values: p.values });
            }
        }
        current = next;
    }
    current
}

fn pieces_of(f: &PlFunction, bbox: &GridBox) -> Vec<Piece> {
    let (lo, hi) = (&bbox.lo, &bbox.hi);
    let square = vec![
        [lo[0].clone(), lo[1].clone()],
        [hi[0].clone(), lo[1].clone()],
        [hi[0].clone(), hi[1].clone()],
        [lo[0].clone(), hi[1].clone()],
    ];
    let start = Piece { poly: square, values: vec![Affine::coordinate(0), Affine::coordinate(1)] };
    match f {
        PlFunction::Network(net) => {
            let mut pieces = vec![start];
            for layer in net.layers() {
                for p in &mut pieces {
                    p.values = layer
                        .a
                        .iter()
                        .zip(&layer.b)
                        .map(|(row, b)| {
                            let mut z = Affine::constant(b.clone());
                            for (w, v) in row.iter().zip(&p.values) {
                                z.add_scaled(&Rational::from_integer((*w).into()), v);
                            }
                            z
                        })
                        .collect();
                }
                for (node, t) in layer.t.iter().enumerate() {
                    if let TropicalValue::Finite(t) = t {
                        pieces = relu_step(pieces, node, t);
                    }
                }
            }
            pieces
        }
        PlFunction::Polynomial(p) => max_pieces(vec![start], p),
        PlFunction::Quotient(r) => {
            let num = max_pieces(vec![start], r.num());
            let mut out = Vec::new();
            for p in num {
                let top = p.values[0].clone();
                for q in max_pieces(vec![p], r.den()) {
                    out.push(Piece { poly: q.poly, values: vec![top.minus(&q.values[0])] });
                }
            }
            out
        }
    }
}

/// Whether two polygons share a boundary segment of positive length.
fn share_edge(a: &Polygon, b: &Polygon) -> bool {
    let edges = |p: &Polygon| -> Vec<(Pt, Pt)> {
        (0..p.len()).map(|i| (p[i].clone(), p[(i + 1) % p.len()].clone())).collect()
    };
    for (p, q) in edges(a) {
        for (r, s) in edges(b) {
            if !cross(&p, &q, &r).is_zero() || !cross(&p, &q, &s).is_zero() {
                continue;
            }
            // Collinear: compare positions along the edge direction.
            let dir = [&q[0] - &p[0], &q[1] - &p[1]];
            let along = |x: &Pt| &dir[0] * (&x[0] - &p[0]) + &dir[1] * (&x[1] - &p[1]);
            let (lo1, hi1) = (Rational::zero(), along(&q));
            let (r1, s1) = (along(&r), along(&s));
            let (lo2, hi2) = if r1 < s1 { (r1, s1) } else { (s1, r1) };
            let lo = if lo1 > lo2 { lo1 } else { lo2 };
            let hi = if hi1 < hi2 { hi1 } else { hi2 };
            if lo < hi {
                return true;
            }
        }
    }
    false
}

/// Number of components of the union of `polys`, where polygons meeting in a
/// segment are connected.
fn edge_components(polys: &[&Polygon]) -> usize {
    let mut seen = vec![false; polys.len()];
    let mut count = 0;
    for s in 0..polys.len() {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in 0..polys.len() {
                if !seen[v] && share_edge(polys[u], polys[v]) {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    count
}

/// Exact number of linear regions of `f` inside `bbox`: maximal sets on which
/// `f` is one affine function, connected through shared edges.
pub fn exact_region_count(f: &PlFunction, bbox: &GridBox) -> Result<usize> {
    f.check()?;
    let pieces = pieces_of(f, bbox);
    let mut by_function: BTreeMap<&Affine, Vec<&Polygon>> = BTreeMap::new();
    for p in &pieces {
        by_function.entry(p.values.last().expect("scalar output")).or_default().push(&p.poly);
    }
    Ok(by_function.values().map(|group| edge_components(group)).sum())
}

/// Exact numbers of connected components of `{f > c}` and `{f < c}` inside
/// `bbox`.
pub fn exact_sign_components(f: &PlFunction, c: &Rational, bbox: &GridBox) -> Result<(usize, usize)> {
    f.check()?;
    let mut positive = Vec::new();
    let mut negative = Vec::new();
    for p in pieces_of(f, bbox) {
        let h = p.values.last().expect("scalar output").minus(&Affine::constant(c.clone()));
        if h.g.iter().all(Zero::is_zero) && h.c.is_zero() {
            continue;
        }
        let (above, below) = split(&p.poly, &h);
        positive.extend(above);
        negative.extend(below);
    }
    let pos: Vec<&Polygon> = positive.iter().collect();
    let neg: Vec<&Polygon> = negative.iter().collect();
    Ok((edge_components(&pos), edge_components(&neg)))
}

/// The set `{f = c}` inside `bbox` as a list of segments, each sorted and
/// listed once. Pieces where `f` is identically `c` contribute nothing.
pub fn level_set_segments(f: &PlFunction, c: &Rational, bbox: &GridBox) -> Result<Vec<[Point; 2]>> {
    f.check()?;
    let mut out = Vec::new();
    for p in pieces_of(f, bbox) {
        let h = p.values.last().expect("scalar output").minus(&Affine::constant(c.clone()));
        if h.g.iter().all(Zero::is_zero) {
            continue;
        }
        let vals: Vec<Rational> = p.poly.iter().map(|v| h.at(v)).collect();
        let n = p.poly.len();
        let mut hits: Vec<Point> = Vec::new();
        for i in 0..n {
            let (a, va) = (&p.poly[i], &vals[i]);
            let (b, vb) = (&p.poly[(i + 1) % n], &vals[(i + 1) % n]);
            if va.is_zero() {
                hits.push(a.to_vec());
            } else if (va.is_positive() && vb.is_negative()) || (va.is_negative() && vb.is_positive()) {
                let t = va / (va - vb);
                hits.push(vec![&a[0] + &t * (&b[0] - &a[0]), &a[1] + &t * (&b[1] - &a[1])]);
            }
        }
        hits.sort();
        hits.dedup();
        if let [a, b] = &hits[..] {
            out.push([a.clone(), b.clone()]);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}
