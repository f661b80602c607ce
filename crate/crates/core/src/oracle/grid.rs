//! Flood-fill counting of linear regions and sign regions on a planar grid.
//!
//! Functions are evaluated here by a private integer forward pass: with `λ` a
//! common multiple of every denominator involved, `λ·φ(x)` at a lattice point
//! is an integer computed from integer weights, so no rational arithmetic (and
//! no code from the tropical modules) is needed per point.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::network::Network;
use crate::rational::{format_rational, Point, Rational};
use crate::tropical::{TropicalPolynomial, TropicalRationalFn, TropicalValue};

/// A scalar piecewise-linear function on the plane.
#[derive(Debug, Clone)]
pub enum PlFunction {
    Network(Network),
    Polynomial(TropicalPolynomial),
    Quotient(TropicalRationalFn),
}

impl PlFunction {
    pub(super) fn check(&self) -> Result<()> {
        let dim = match self {
            PlFunction::Network(n) => {
                check_dim(1, n.output_dim())?;
                n.input_dim()
            }
            PlFunction::Polynomial(p) => {
                if p.is_bottom() {
                    return Err(Error::EmptyPolynomial);
                }
                p.dim()
            }
            PlFunction::Quotient(r) => r.dim(),
        };
        if dim != 2 {
            return Err(Error::NotPlanar(dim));
        }
        Ok(())
    }

    fn constants(&self) -> Vec<Rational> {
        match self {
            PlFunction::Network(n) => n
                .layers()
                .iter()
                .flat_map(|l| l.b.iter().cloned().chain(l.t.iter().filter_map(|t| t.as_finite().cloned())))
                .collect(),
            PlFunction::Polynomial(p) => p.terms().map(|(_, c)| c.clone()).collect(),
            PlFunction::Quotient(r) => r.num().terms().chain(r.den().terms()).map(|(_, c)| c.clone()).collect(),
        }
    }

    fn scaled(&self, lambda: &Rational) -> Result<Scaled> {
        let s = |v: &Rational| to_i128(&(v * lambda));
        let max_affine = |p: &TropicalPolynomial| -> Result<Vec<([i128; 2], i128)>> {
            p.terms()
                .map(|(e, c)| Ok(([e[0] as i128, e[1] as i128], s(c)?)))
                .collect()
        };
        Ok(match self {
            PlFunction::Network(n) => Scaled::Net(
                n.layers()
                    .iter()
                    .map(|l| {
                        Ok(ScaledLayer {
                            a: l.a.iter().map(|r| r.iter().map(|&w| i128::from(w)).collect()).collect(),
                            b: l.b.iter().map(s).collect::<Result<_>>()?,
                            t: l.t
                                .iter()
                                .map(|t| match t {
                                    TropicalValue::Bottom => Ok(None),
                                    TropicalValue::Finite(v) => s(v).map(Some),
                                })
                                .collect::<Result<_>>()?,
                        })
                    })
                    .collect::<Result<_>>()?,
            ),
            PlFunction::Polynomial(p) => Scaled::Max(max_affine(p)?),
            PlFunction::Quotient(r) => Scaled::Diff(max_affine(r.num())?, max_affine(r.den())?),
        })
    }
}

fn to_i128(v: &Rational) -> Result<i128> {
    if !v.is_integer() {
        return Err(Error::Domain("scale does not clear a denominator".into()));
    }
    v.to_integer().to_i128().ok_or(Error::Overflow("grid evaluation"))
}

struct ScaledLayer {
    a: Vec<Vec<i128>>,
    b: Vec<i128>,
    t: Vec<Option<i128>>,
}

enum Scaled {
    Net(Vec<ScaledLayer>),
    Max(Vec<([i128; 2], i128)>),
    Diff(Vec<([i128; 2], i128)>, Vec<([i128; 2], i128)>),
}

fn max_affine(terms: &[([i128; 2], i128)], x: [i128; 2]) -> Option<i128> {
    let mut best: Option<i128> = None;
    for (e, c) in terms {
        let v = e[0].checked_mul(x[0])?.checked_add(e[1].checked_mul(x[1])?)?.checked_add(*c)?;
        best = Some(best.map_or(v, |b| b.max(v)));
    }
    best
}

impl Scaled {
    fn eval(&self, x: [i128; 2]) -> Option<i128> {
        match self {
            Scaled::Net(layers) => {
                let mut v: Vec<i128> = x.to_vec();
                for l in layers {
                    let mut next = Vec::with_capacity(l.a.len());
                    for ((row, b), t) in l.a.iter().zip(&l.b).zip(&l.t) {
                        let mut z = *b;
                        for (w, xi) in row.iter().zip(&v) {
                            z = z.checked_add(w.checked_mul(*xi)?)?;
                        }
                        next.push(match t {
                            Some(t) => z.max(*t),
                            None => z,
                        });
                    }
                    v = next;
                }
                Some(v[0])
            }
            Scaled::Max(terms) => max_affine(terms, x),
            Scaled::Diff(num, den) => max_affine(num, x)?.checked_sub(max_affine(den, x)?),
        }
    }
}

/// An axis-aligned box `[lo, hi]` in the plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridBox {
    pub lo: Point,
    pub hi: Point,
}

impl GridBox {
    pub fn new(lo: Point, hi: Point) -> Result<Self> {
        check_dim(2, lo.len())?;
        check_dim(2, hi.len())?;
        if lo.iter().zip(&hi).any(|(a, b)| a >= b) {
            return Err(Error::Domain("box corners must satisfy lo < hi".into()));
        }
        Ok(GridBox { lo, hi })
    }

    /// `[-r, r]²`.
    pub fn square(r: Rational) -> Result<Self> {
        Self::new(vec![-r.clone(), -r.clone()], vec![r.clone(), r])
    }
}

/// Resolutions tried, doubling from `start` up to `max` cells per axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Schedule {
    pub start: usize,
    pub max: usize,
}

impl Default for Schedule {
    fn default() -> Self {
        Schedule { start: 32, max: 512 }
    }
}

impl Schedule {
    fn resolutions(&self) -> impl Iterator<Item = usize> {
        let max = self.max;
        std::iter::successors(Some(self.start.max(1)), |n| n.checked_mul(2)).take_while(move |n| *n <= max)
    }
}

/// Function values on an `n × n` lattice, scaled by `lambda`.
struct Lattice {
    n: usize,
    values: Vec<i128>,
}

impl Lattice {
    fn new(f: &PlFunction, bbox: &GridBox, n: usize, offset: &Rational) -> Result<(Self, Rational, [Rational; 2])> {
        let steps = [0, 1].map(|k| (&bbox.hi[k] - &bbox.lo[k]) / Rational::from_integer(BigInt::from(n - 1)));
        let lambda = f
            .constants()
            .iter()
            .chain(&bbox.lo)
            .chain(&steps)
            .chain(std::iter::once(offset))
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let lambda = Rational::from_integer(lambda);
        let scaled = f.scaled(&lambda)?;
        let origin = [to_i128(&(&bbox.lo[0] * &lambda))?, to_i128(&(&bbox.lo[1] * &lambda))?];
        let step = [to_i128(&(&steps[0] * &lambda))?, to_i128(&(&steps[1] * &lambda))?];
        let shift = to_i128(&(offset * &lambda))?;
        let overflow = Error::Overflow("grid evaluation");
        let mut values = Vec::with_capacity(n * n);
        for j in 0..n as i128 {
            for i in 0..n as i128 {
                let x = [
                    origin[0].checked_add(i.checked_mul(step[0]).ok_or(overflow.clone())?).ok_or(overflow.clone())?,
                    origin[1].checked_add(j.checked_mul(step[1]).ok_or(overflow.clone())?).ok_or(overflow.clone())?,
                ];
                let v = scaled.eval(x).and_then(|v| v.checked_sub(shift)).ok_or(overflow.clone())?;
                values.push(v);
            }
        }
        Ok((Lattice { n, values }, lambda, steps))
    }

    fn at(&self, i: usize, j: usize) -> i128 {
        self.values[j * self.n + i]
    }
}

/// Connected components of `keep` cells on an `n × n` grid, where neighbours
/// must also satisfy `same`. With `diagonal` set, cells sharing only a corner
/// are neighbours too.
fn components(
    n: usize,
    diagonal: bool,
    keep: impl Fn(usize) -> bool,
    same: impl Fn(usize, usize) -> bool,
) -> (Vec<Option<u32>>, usize) {
    const STRAIGHT: [(isize, isize); 4] = [(-1, 0), (1, 0), (0, -1), (0, 1)];
    const CORNERS: [(isize, isize); 4] = [(-1, -1), (1, -1), (-1, 1), (1, 1)];
    let offsets: Vec<(isize, isize)> =
        STRAIGHT.iter().chain(if diagonal { &CORNERS[..] } else { &[] }).copied().collect();
    let mut labels: Vec<Option<u32>> = vec![None; n * n];
    let mut count = 0u32;
    let mut queue = VecDeque::new();
    for start in 0..n * n {
        if labels[start].is_some() || !keep(start) {
            continue;
        }
        labels[start] = Some(count);
        queue.push_back(start);
        while let Some(c) = queue.pop_front() {
            let (i, j) = ((c % n) as isize, (c / n) as isize);
            for &(di, dj) in &offsets {
                let (a, b) = (i + di, j + dj);
                if a < 0 || b < 0 || a >= n as isize || b >= n as isize {
                    continue;
                }
                let nb = b as usize * n + a as usize;
                if labels[nb].is_none() && keep(nb) && same(c, nb) {
                    labels[nb] = Some(count);
                    queue.push_back(nb);
                }
            }
        }
        count += 1;
    }
    (labels, count as usize)
}

/// Per-cell affine data and region labels at one resolution.
///
/// A cell gets a signature only when the function is affine on its nine
/// sample points (corners, edge midpoints, centre); cells cut by a
/// non-linearity stay unlabelled. Cells with equal signatures that share an
/// edge or a corner get the same label, so a thin diagonal region still forms
/// one component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridRegionMap {
    pub bbox: GridBox,
    pub resolution: usize,
    lambda: Rational,
    half_steps: [Rational; 2],
    /// Lattice gradient and lattice-origin intercept, scaled by `lambda`.
    signatures: Vec<Option<[i128; 3]>>,
    labels: Vec<Option<u32>>,
    pub count: usize,
}

impl GridRegionMap {
    fn build(f: &PlFunction, bbox: &GridBox, n: usize) -> Result<Self> {
        let (lat, lambda, half_steps) = Lattice::new(f, bbox, 2 * n + 1, &Rational::from_integer(0.into()))?;
        let mut signatures = Vec::with_capacity(n * n);
        for cj in 0..n {
            for ci in 0..n {
                let (a, b) = (2 * ci + 1, 2 * cj + 1);
                let vc = lat.at(a, b);
                let d1 = lat.at(a + 1, b) - vc;
                let d2 = lat.at(a, b + 1) - vc;
                let affine = (0..3).all(|di| {
                    (0..3).all(|dj| {
                        let expect = vc + d1 * (di as i128 - 1) + d2 * (dj as i128 - 1);
                        lat.at(a - 1 + di, b - 1 + dj) == expect
                    })
                });
                signatures.push(if affine {
                    Some([d1, d2, vc - d1 * a as i128 - d2 * b as i128])
                } else {
                    None
                });
            }
        }
        let (labels, count) =
            components(n, true, |c| signatures[c].is_some(), |c, d| signatures[c] == signatures[d]);
        Ok(GridRegionMap { bbox: bbox.clone(), resolution: n, lambda, half_steps, signatures, labels, count })
    }

    /// Number of components of `self` that contain, with an equal gradient,
    /// a cell that is affine in `coarse`, a map four times coarser.
    fn persistent_count(&self, coarse: &GridRegionMap) -> Result<usize> {
        let (n, k) = (self.resolution, coarse.resolution);
        if n != 4 * k {
            return Err(Error::Domain("persistence needs a map four times coarser".into()));
        }
        // Lattice gradients carry the factor `lambda * half_step`, which
        // differs between the two maps.
        let ratio: Vec<(i128, i128)> = (0..2)
            .map(|a| {
                let r = (&coarse.lambda * &coarse.half_steps[a]) / (&self.lambda * &self.half_steps[a]);
                Ok((to_i128(&Rational::from_integer(r.numer().clone()))?, to_i128(&Rational::from_integer(r.denom().clone()))?))
            })
            .collect::<Result<_>>()?;
        let mut kept = std::collections::BTreeSet::new();
        for cj in 0..k {
            for ci in 0..k {
                let Some(sc) = coarse.signatures[cj * k + ci] else {
                    continue;
                };
                for j in 4 * cj..4 * cj + 4 {
                    for i in 4 * ci..4 * ci + 4 {
                        let c = j * n + i;
                        if let (Some(sf), Some(l)) = (self.signatures[c], self.labels[c]) {
                            // coarse = ratio * fine
                            if (0..2).all(|a| sc[a] * ratio[a].1 == sf[a] * ratio[a].0) {
                                kept.insert(l);
                            }
                        }
                    }
                }
            }
        }
        Ok(kept.len())
    }

    /// Region label of cell `(i, j)`, counted from the lower-left corner.
    pub fn label(&self, i: usize, j: usize) -> Option<u32> {
        self.labels[j * self.resolution + i]
    }

    /// Exact gradient and value at the centre of cell `(i, j)`, if affine there.
    pub fn signature(&self, i: usize, j: usize) -> Option<(Point, Rational)> {
        let s = self.signatures[j * self.resolution + i]?;
        let r = |v: i128| Rational::from_integer(BigInt::from(v));
        let gradient = vec![r(s[0]) / (&self.lambda * &self.half_steps[0]), r(s[1]) / (&self.lambda * &self.half_steps[1])];
        let (a, b) = (2 * i as i128 + 1, 2 * j as i128 + 1);
        let value = r(s[2] + s[0] * a + s[1] * b) / &self.lambda;
        Some((gradient, value))
    }

    /// Whether every region meets each grid row and each grid column in a
    /// contiguous run of cells, as a convex region must.
    pub fn regions_row_column_convex(&self) -> bool {
        let n = self.resolution;
        let runs_ok = |line: &dyn Fn(usize) -> Option<u32>| {
            let mut closed = std::collections::HashSet::new();
            let mut current: Option<u32> = None;
            for k in 0..n {
                let l = line(k);
                if l != current {
                    if let Some(c) = current {
                        closed.insert(c);
                    }
                    if let Some(nl) = l {
                        if closed.contains(&nl) {
                            return false;
                        }
                    }
                    current = l;
                }
            }
            true
        };
        (0..n).all(|j| runs_ok(&|i| self.label(i, j))) && (0..n).all(|i| runs_ok(&|j| self.label(i, j)))
    }
}

/// Count at one resolution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResolutionCount {
    pub resolution: usize,
    /// Flood-fill components.
    pub count: usize,
    /// Components that contain a cell already affine, with the same gradient,
    /// two doublings earlier. `None` for the first two resolutions.
    pub persistent: Option<usize>,
}

/// JSON-ready summary of a flood-fill run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridReport {
    pub lo: Vec<String>,
    pub hi: Vec<String>,
    pub schedule: Vec<ResolutionCount>,
    /// The settled count, or `None` when the schedule ran out first.
    pub count: Option<usize>,
}

impl GridReport {
    pub fn stable(&self) -> bool {
        self.count.is_some()
    }
}

/// The report plus the finest map computed.
#[derive(Debug, Clone)]
pub struct GridOutcome {
    pub report: GridReport,
    pub map: GridRegionMap,
}

/// The count once the last three raw counts agree and every component at the
/// finest resolution is persistent.
fn settled(steps: &[ResolutionCount]) -> Option<usize> {
    let raw: Vec<usize> = steps.iter().map(|s| s.count).collect();
    let last = steps.last()?;
    (three_equal(&raw) && last.persistent == Some(last.count)).then_some(last.count)
}

fn three_equal<T: PartialEq>(v: &[T]) -> bool {
    v.len() >= 3 && v[v.len() - 3..].windows(2).all(|w| w[0] == w[1])
}

/// Counts linear regions of `f` inside `bbox` by flood fill, doubling the
/// resolution until three successive counts agree and the finest one has no
/// fragments.
///
/// A region thinner than a cell shows up as scattered fragments, and near the
/// apex of a thin wedge the number of fragments barely changes under
/// refinement, so raw counts can settle on a wrong value. Fragments that are
/// new at the current resolution are therefore not counted: only components
/// holding a refined cell from two doublings earlier are, and a count is
/// only accepted when no other components remain.
pub fn grid_region_count(f: &PlFunction, bbox: &GridBox, schedule: Schedule) -> Result<GridOutcome> {
    f.check()?;
    let mut steps: Vec<ResolutionCount> = Vec::new();
    let mut maps: VecDeque<GridRegionMap> = VecDeque::new();
    for n in schedule.resolutions() {
        let map = GridRegionMap::build(f, bbox, n)?;
        let persistent = match maps.len() {
            2 => Some(map.persistent_count(&maps[0])?),
            _ => None,
        };
        steps.push(ResolutionCount { resolution: n, count: map.count, persistent });
        if maps.len() == 2 {
            maps.pop_front();
        }
        maps.push_back(map);
        if settled(&steps).is_some() {
            break;
        }
    }
    let map = maps.pop_back().ok_or_else(|| Error::Domain("empty resolution schedule".into()))?;
    let count = settled(&steps);
    let report = GridReport {
        lo: bbox.lo.iter().map(format_rational).collect(),
        hi: bbox.hi.iter().map(format_rational).collect(),
        schedule: steps,
        count,
    };
    Ok(GridOutcome { report, map })
}

/// Positive and negative component counts at one resolution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignCount {
    pub resolution: usize,
    pub positive: usize,
    pub negative: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignReport {
    pub threshold: String,
    pub schedule: Vec<SignCount>,
    /// Stabilized `(positive, negative)` counts.
    pub counts: Option<(usize, usize)>,
}

/// Counts connected components of `{f > c}` and `{f < c}` inside `bbox`,
/// sampled on a lattice with 4-adjacency, until three resolutions agree.
pub fn sign_components(f: &PlFunction, threshold: &Rational, bbox: &GridBox, schedule: Schedule) -> Result<SignReport> {
    f.check()?;
    let mut steps = Vec::new();
    for n in schedule.resolutions() {
        let (lat, _, _) = Lattice::new(f, bbox, n + 1, threshold)?;
        let m = n + 1;
        let (_, positive) = components(m, false, |c| lat.values[c] > 0, |_, _| true);
        let (_, negative) = components(m, false, |c| lat.values[c] < 0, |_, _| true);
        steps.push(SignCount { resolution: n, positive, negative });
        let pairs: Vec<(usize, usize)> = steps.iter().map(|s| (s.positive, s.negative)).collect();
        if three_equal(&pairs) {
            break;
        }
    }
    let pairs: Vec<(usize, usize)> = steps.iter().map(|s| (s.positive, s.negative)).collect();
    let counts = if three_equal(&pairs) { pairs.last().copied() } else { None };
    Ok(SignReport { threshold: format_rational(threshold), schedule: steps, counts })
}
