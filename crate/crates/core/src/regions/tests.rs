use super::*;
use crate::fixtures;
use crate::network::{Layer, Network};
use crate::rational::{frac, int, point, Point};
use crate::tropical::TropicalPolynomial;
use crate::Error;

fn poly(dim: usize, terms: &[(i64, &[u64])]) -> TropicalPolynomial {
    let mut p = TropicalPolynomial::bottom(dim);
    for (c, e) in terms {
        p = p.add(&TropicalPolynomial::monomial(int(*c), e.to_vec())).unwrap();
    }
    p
}

fn tline() -> TropicalPolynomial {
    poly(2, &[(0, &[1, 0]), (0, &[0, 1]), (0, &[0, 0])])
}

fn sorted(mut v: Vec<Point>) -> Vec<Point> {
    v.sort();
    v
}

#[test]
fn tropical_line() {
    let t = hypersurface(&tline()).unwrap();
    let c = t.curve().unwrap();
    assert_eq!(c.vertices, vec![point(&[0, 0])]);
    let dirs: Vec<Point> = c
        .rays()
        .map(|e| match e {
            CurveEdge::Ray { from, direction } => {
                assert_eq!(from, &point(&[0, 0]));
                direction.clone()
            }
            _ => unreachable!(),
        })
        .collect();
    assert_eq!(sorted(dirs), sorted(vec![point(&[1, 1]), point(&[-1, 0]), point(&[0, -1])]));
    assert!(t.contains(&point(&[5, 5])));
    assert!(!t.contains(&point(&[5, 4])));
}

#[test]
fn conic_curve() {
    let t = hypersurface(&fixtures::conic_polynomial()).unwrap();
    let c = t.curve().unwrap();
    assert_eq!(sorted(c.vertices.clone()), vec![point(&[0, 0]), point(&[0, 1]), point(&[1, 0])]);
    assert_eq!(c.bounded_edges().count(), 2);
    assert_eq!(c.rays().count(), 6);
    for v in &c.vertices {
        assert!(t.contains(v));
    }
    for e in &c.edges {
        assert!(t.contains(&e.sample_point()), "{e:?}");
    }
}

#[test]
fn monomial_has_empty_curve() {
    let t = hypersurface(&poly(2, &[(3, &[1, 2])])).unwrap();
    assert!(t.curve().unwrap().edges.is_empty());
    assert!(t.curve().unwrap().vertices.is_empty());
}

#[test]
fn collinear_support_gives_lines() {
    // max(2x1 + 2x2, x1 + x2 + 3, 0): two parallel lines x1 + x2 = 3 and x1 + x2 = -3
    let f = poly(2, &[(0, &[2, 2]), (3, &[1, 1]), (0, &[0, 0])]);
    let t = hypersurface(&f).unwrap();
    let c = t.curve().unwrap();
    assert_eq!(c.edges.len(), 2);
    for e in &c.edges {
        assert!(matches!(e, CurveEdge::Line { .. }));
        assert!(t.contains(&e.sample_point()));
        if let CurveEdge::Line { through, .. } = e {
            assert!(t.contains(through));
        }
    }
}

#[test]
fn curve_requires_the_plane() {
    let t = hypersurface(&poly(3, &[(0, &[1, 0, 0]), (0, &[0, 0, 0])])).unwrap();
    assert_eq!(t.curve(), Err(Error::NotPlanar(3)));
    assert!(t.contains(&point(&[0, 4, -1])));
    assert!(hypersurface(&TropicalPolynomial::bottom(2)).is_err());
}

#[test]
fn polynomial_region_counts() {
    assert_eq!(poly_region_count(&poly(2, &[(5, &[1, 1])])).unwrap(), 1);
    assert_eq!(poly_region_count(&fixtures::conic_polynomial()).unwrap(), 6);
    assert_eq!(poly_region_count(&tline()).unwrap(), 3);
    // max(0, x − 5, 2x): the middle monomial never wins
    assert_eq!(poly_region_count(&poly(1, &[(0, &[0]), (-5, &[1]), (0, &[2])])).unwrap(), 2);
    assert!(poly_region_count(&poly(4, &[(0, &[1, 0, 0, 0])])).is_err());
}

fn relu_net(widths: &[usize], d: usize, output_relu: bool) -> Network {
    let mut layers = Vec::new();
    let mut prev = d;
    for (l, &n) in widths.iter().enumerate() {
        let a = (0..n).map(|i| (0..prev).map(|j| ((i + 2 * j + l) % 3) as i64 - 1).collect()).collect();
        let b = vec![int(0); n];
        let last = l + 1 == widths.len();
        layers.push(if last && !output_relu { Layer::affine(a, b) } else { Layer::relu(a, b) });
        prev = n;
    }
    Network::new(d, layers).unwrap()
}

#[test]
fn product_bounds() {
    let r = region_bound(&relu_net(&[5, 1], 2, false)).unwrap();
    assert_eq!(r.upper_bound, 16);
    assert!(r.hypotheses_hold());
    let r = region_bound(&relu_net(&[3, 3, 1], 2, false)).unwrap();
    assert_eq!(r.upper_bound, 49);
    assert_eq!(r.layer_terms, vec![7, 7]);
    let r = region_bound(&fixtures::two_layer_network()).unwrap();
    assert_eq!(r.upper_bound, 16);
    assert!(!r.hypotheses_hold());
    let narrow = region_bound(&relu_net(&[1, 1], 2, false)).unwrap();
    assert_eq!(narrow.upper_bound, 2);
    assert_eq!(narrow.caveats.len(), 1);
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["upper_bound"], 16);
}

#[test]
fn boundary_examples() {
    let x1 = poly(2, &[(0, &[1, 0])]);
    let zero = TropicalPolynomial::one(2);
    let db = decision_boundary(&x1, &zero, &int(0)).unwrap();
    assert!(db.certified);
    assert!(db.hypersurface.contains(&point(&[0, 7])));
    assert!(!db.hypersurface.contains(&point(&[1, 7])));
    let m = poly(2, &[(0, &[1, 0]), (0, &[0, 1])]);
    let db = decision_boundary(&m, &zero, &int(0)).unwrap();
    assert_eq!((db.positive_bound, db.negative_bound), (2, 1));
    assert!(db.hypersurface.contains(&point(&[0, -3])));
    // same exponent, coefficients 3 and 1, threshold 2: not certified
    let f = poly(2, &[(3, &[1, 0])]);
    let g = poly(2, &[(1, &[1, 0]), (0, &[0, 0])]);
    assert!(!decision_boundary(&f, &g, &int(2)).unwrap().certified);
    assert!(decision_boundary(&f, &g, &frac(5, 2)).unwrap().certified);
    let f3 = poly(3, &[(0, &[1, 0, 0])]);
    assert!(matches!(
        decision_boundary(&f3, &TropicalPolynomial::one(3), &int(0)),
        Err(Error::NotPlanar(3))
    ));
}
