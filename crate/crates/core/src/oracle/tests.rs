use super::*;
use crate::fixtures;
use crate::network::{forward_eval, Layer, Network};
use crate::rational::{frac, int, point, Point, Rational};
use crate::tropical::{TropicalPolynomial, TropicalRationalFn};

fn poly(dim: usize, terms: &[(i64, &[u64])]) -> TropicalPolynomial {
    let mut p = TropicalPolynomial::bottom(dim);
    for (c, e) in terms {
        p = p.add(&TropicalPolynomial::monomial(int(*c), e.to_vec())).unwrap();
    }
    p
}

fn pts(list: &[&[i64]]) -> Vec<Point> {
    list.iter().map(|p| point(p)).collect()
}

fn box5() -> GridBox {
    GridBox::square(int(5)).unwrap()
}

#[test]
fn hull_oracle_examples() {
    let mut sq = pts(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2]]);
    sq.push(point(&[1, 1]));
    assert_eq!(brute_force_hull(&sq).unwrap(), pts(&[&[0, 0], &[0, 2], &[2, 0], &[2, 2]]));
    let line = pts(&[&[0, 0, 0], &[1, 1, 1], &[2, 2, 2]]);
    assert_eq!(brute_force_hull(&line).unwrap(), pts(&[&[0, 0, 0], &[2, 2, 2]]));
    assert_eq!(brute_force_hull(&pts(&[&[4, 4]])).unwrap(), pts(&[&[4, 4]]));
    let many: Vec<Point> = (0..201).map(|i| point(&[i, 0])).collect();
    assert!(brute_force_hull(&many).is_err());
    assert!(brute_force_hull(&[]).is_err());
}

#[test]
fn upper_oracle_examples() {
    let f = fixtures::conic_polynomial();
    assert_eq!(brute_force_upper_vertices(&f.lifted_points()).unwrap().len(), 6);
    // (0,0), (1,-5), (2,0): the middle point is only a lower vertex
    let v = brute_force_upper_vertices(&pts(&[&[0, 0], &[1, -5], &[2, 0]])).unwrap();
    assert_eq!(v, pts(&[&[0, 0], &[2, 0]]));
}

#[test]
fn zonotope_vertices_by_brute_force() {
    // four generic generators in R^3: 2·(1 + 3 + 3) = 14 vertices
    let gens = [[2, 3, 5], [7, -1, 2], [-3, 4, 1], [1, 1, -6]];
    let mut sums = Vec::new();
    for mask in 0..16u32 {
        let mut s = [0i64; 3];
        for (k, g) in gens.iter().enumerate() {
            if mask & (1 << k) != 0 {
                for i in 0..3 {
                    s[i] += g[i];
                }
            }
        }
        sums.push(point(&s));
    }
    assert_eq!(brute_force_hull(&sums).unwrap().len(), 14);
}

#[test]
fn grid_counts_simple_functions() {
    let linear = PlFunction::Polynomial(poly(2, &[(1, &[1, 2])]));
    let out = grid_region_count(&linear, &box5(), Schedule::default()).unwrap();
    assert_eq!(out.report.count, Some(1));
    let relu = PlFunction::Polynomial(poly(2, &[(0, &[1, 0]), (0, &[0, 0])]));
    let out = grid_region_count(&relu, &box5(), Schedule::default()).unwrap();
    assert_eq!(out.report.count, Some(2));
    let (grad, value) = out.map.signature(out.map.resolution - 1, 0).unwrap();
    assert_eq!(grad, point(&[1, 0]));
    assert!(value > int(4));
}

#[test]
fn grid_counts_conic() {
    let f = PlFunction::Polynomial(fixtures::conic_polynomial());
    let out = grid_region_count(&f, &box5(), Schedule::default()).unwrap();
    assert_eq!(out.report.count, Some(6));
    assert!(out.map.regions_row_column_convex());
}

#[test]
fn grid_counts_network_and_quotient() {
    let net = Network::new(
        2,
        vec![
            Layer::relu(vec![vec![1, 0], vec![0, 1]], vec![int(0), int(0)]),
            Layer::affine(vec![vec![1, 1]], vec![int(0)]),
        ],
    )
    .unwrap();
    let out = grid_region_count(&PlFunction::Network(net), &box5(), Schedule::default()).unwrap();
    assert_eq!(out.report.count, Some(4));
    let r = TropicalRationalFn::new(fixtures::pyramid_numerator(), fixtures::pyramid_denominator()).unwrap();
    let out = grid_region_count(&PlFunction::Quotient(r), &box5(), Schedule::default()).unwrap();
    assert_eq!(out.report.count, Some(5));
    assert!(!out.map.regions_row_column_convex());
}

#[test]
fn exact_counts_match_known_examples() {
    let relu_sum = |a: Vec<Vec<i64>>, b: Vec<Rational>, out: Vec<i64>| {
        let net = Network::new(2, vec![Layer::relu(a, b), Layer::affine(vec![out], vec![int(0)])]).unwrap();
        exact_region_count(&PlFunction::Network(net), &box5()).unwrap()
    };
    assert_eq!(relu_sum(vec![vec![1, 0], vec![0, 1]], vec![int(0), int(0)], vec![1, 1]), 4);
    // A strip of width 1/√10 between two parallel kinks.
    assert_eq!(relu_sum(vec![vec![1, -3], vec![-1, 3]], vec![int(-3), int(2)], vec![1, 1]), 3);
    // Kinks that cancel leave a single region.
    assert_eq!(relu_sum(vec![vec![1, 0], vec![1, 0]], vec![int(0), int(0)], vec![1, -1]), 1);
    let f = PlFunction::Polynomial(fixtures::conic_polynomial());
    assert_eq!(exact_region_count(&f, &box5()).unwrap(), 6);
    let r = TropicalRationalFn::new(fixtures::pyramid_numerator(), fixtures::pyramid_denominator()).unwrap();
    assert_eq!(exact_region_count(&PlFunction::Quotient(r), &box5()).unwrap(), 5);
}

#[test]
fn exact_sign_components_examples() {
    // max(x, y, 0) - 1: positive in one L-shaped piece, negative in one square.
    let f = PlFunction::Polynomial(poly(2, &[(0, &[1, 0]), (0, &[0, 1]), (0, &[0, 0])]));
    assert_eq!(exact_sign_components(&f, &int(1), &box5()).unwrap(), (1, 1));
    // |x| - 1 via max(x, -x) is not a tropical polynomial; use a network.
    let net = Network::new(
        2,
        vec![
            Layer::relu(vec![vec![1, 0], vec![-1, 0]], vec![int(0), int(0)]),
            Layer::affine(vec![vec![1, 1]], vec![int(0)]),
        ],
    )
    .unwrap();
    let f = PlFunction::Network(net);
    assert_eq!(exact_sign_components(&f, &int(1), &box5()).unwrap(), (2, 1));
    assert_eq!(sign_components(&f, &int(1), &box5(), Schedule::default()).unwrap().counts, Some((2, 1)));
}

#[test]
fn grid_rejects_wrong_dimension() {
    let f = PlFunction::Polynomial(poly(3, &[(0, &[1, 0, 0])]));
    assert!(grid_region_count(&f, &box5(), Schedule::default()).is_err());
    assert!(GridBox::new(point(&[1, 0]), point(&[0, 1])).is_err());
}

#[test]
fn sign_components_of_max() {
    let f = PlFunction::Polynomial(poly(2, &[(0, &[1, 0]), (0, &[0, 1])]));
    let r = sign_components(&f, &int(0), &box5(), Schedule::default()).unwrap();
    assert_eq!(r.counts, Some((1, 1)));
}

#[test]
fn sampling_examples() {
    let lo = [int(-3), int(-3)];
    let hi = [int(3), int(3)];
    let f = poly(2, &[(0, &[1, 0]), (0, &[0, 1])]);
    let same = sample_equality(|x| vec![f.eval_finite(x).unwrap()], |x| vec![f.eval_finite(x).unwrap()], 100, &lo, &hi, 7);
    assert!(same.equal);
    // max(x1, x2) = (x1 ⊙ x2) ⊘ min(x1, x2)
    let x1 = TropicalRationalFn::from_polynomial(poly(2, &[(0, &[1, 0])])).unwrap();
    let x2 = TropicalRationalFn::from_polynomial(poly(2, &[(0, &[0, 1])])).unwrap();
    let via_min = x1.mul(&x2).unwrap().div(&x1.min(&x2).unwrap()).unwrap();
    let r = sample_equality(|x| vec![f.eval_finite(x).unwrap()], |x| vec![via_min.eval(x)], 200, &lo, &hi, 11);
    assert!(r.equal);
    let diff = sample_equality(|x| vec![x[0].clone()], |x| vec![x[1].clone()], 100, &lo, &hi, 3);
    assert!(!diff.equal);
    let ce = diff.counterexample.clone().unwrap();
    assert_ne!(ce.left, ce.right);
    assert_eq!(sample_points(&lo, &hi, 5, 9), sample_points(&lo, &hi, 5, 9));
    let json = serde_json::to_value(&diff).unwrap();
    assert_eq!(json["seed"], 3);
}

#[test]
fn crossings_are_exact() {
    let net = fixtures::two_layer_network();
    let phi = |x: &[Rational]| forward_eval(&net, x).unwrap()[0].clone() - int(2);
    let p = point(&[0, 0]);
    let q = vec![frac(7, 3), frac(5, 4)];
    assert!(phi(&p) > int(0));
    assert!(phi(&q) <= int(0));
    let x = locate_crossing(phi, &p, &q).unwrap();
    assert_eq!(phi(&x), int(0));
    assert!(locate_crossing(phi, &q, &p).is_none());
    // a kink exactly at the root: |x1| - 1 crossing at x1 = 1 from x1 = 1/3 side
    let kink = |x: &[Rational]| {
        let a = if x[0] > int(1) { &x[0] - int(1) } else { int(1) - &x[0] };
        int(1) - a * int(3)
    };
    let y = locate_crossing(kink, &[int(1), int(0)], &[frac(17, 7), int(0)]).unwrap();
    assert_eq!(kink(&y), int(0));
}

#[test]
fn level_set_segments_examples() {
    let f = PlFunction::Polynomial(poly(2, &[(0, &[1, 0]), (0, &[0, 1]), (0, &[0, 0])]));
    let segs = level_set_segments(&f, &int(1), &box5()).unwrap();
    // Pieces may cut the two arms into several segments; they cover x = 1,
    // y ≤ 1 and y = 1, x ≤ 1.
    let (mut vertical, mut horizontal) = (int(0), int(0));
    for [a, b] in &segs {
        if a[0] == int(1) && b[0] == int(1) {
            vertical += &b[1] - &a[1];
        } else {
            assert!(a[1] == int(1) && b[1] == int(1));
            horizontal += &b[0] - &a[0];
        }
    }
    assert_eq!((vertical, horizontal), (int(6), int(6)));
    let net = Network::new(
        2,
        vec![
            Layer::relu(vec![vec![1, 0], vec![-1, 0]], vec![int(0), int(0)]),
            Layer::affine(vec![vec![1, 1]], vec![int(0)]),
        ],
    )
    .unwrap();
    let segs = level_set_segments(&PlFunction::Network(net), &int(2), &box5()).unwrap();
    assert_eq!(segs, vec![[point(&[-2, -5]), point(&[-2, 5])], [point(&[2, -5]), point(&[2, 5])]]);
    // Constant pieces equal to the level are skipped.
    let flat = PlFunction::Polynomial(poly(2, &[(3, &[0, 0])]));
    assert!(level_set_segments(&flat, &int(3), &box5()).unwrap().is_empty());
}
