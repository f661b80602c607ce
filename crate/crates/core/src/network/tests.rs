use super::*;
use crate::fixtures;
use crate::polytope::{convex_hull, weighted_minkowski};
use crate::rational::{frac, int, point, Point};
use crate::tropical::{TropicalPolynomial, TropicalRationalFn};
use num_traits::Zero;

fn poly(dim: usize, terms: &[(i64, &[u64])]) -> TropicalPolynomial {
    let mut p = TropicalPolynomial::bottom(dim);
    for (c, e) in terms {
        p = p.add(&TropicalPolynomial::monomial(int(*c), e.to_vec())).unwrap();
    }
    p
}

fn samples() -> Vec<Point> {
    let mut out = Vec::new();
    for i in -4..=4 {
        for j in -3..=3 {
            out.push(vec![frac(i * 7, 5), frac(j * 11, 3)]);
        }
    }
    out
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

#[test]
fn split_examples() {
    let (p, n) = split_weights(&[vec![-1, 2]]);
    assert_eq!(p, vec![vec![0, 2]]);
    assert_eq!(n, vec![vec![1, 0]]);
    let (p, n) = split_weights(&[vec![0, 0], vec![0, 0]]);
    assert!(p.iter().chain(&n).flatten().all(|&x| x == 0));
    let (p, n) = split_weights(&[vec![i64::MIN, i64::MAX]]);
    assert_eq!(n[0][0], 1u64 << 63);
    assert_eq!(p[0][1], i64::MAX as u64);
}

#[test]
fn validation_rejects_bad_shapes() {
    assert!(Network::new(2, vec![]).is_err());
    assert!(Network::new(0, vec![Layer::affine(vec![vec![]], ints(&[0]))]).is_err());
    assert!(Network::new(2, vec![Layer::affine(vec![vec![1, 2, 3]], ints(&[0]))]).is_err());
    assert!(Network::new(2, vec![Layer::affine(vec![vec![1, 2]], ints(&[0, 1]))]).is_err());
    let ok = Network::new(2, vec![Layer::relu(vec![vec![1, 2]], ints(&[0]))]).unwrap();
    assert_eq!(ok.widths(), vec![1]);
}

#[test]
fn forward_examples() {
    let net = fixtures::two_layer_network();
    assert_eq!(forward_eval(&net, &point(&[0, 0])).unwrap(), vec![int(3)]);
    let zero = Network::new(2, vec![Layer::relu(vec![vec![0, 0]], ints(&[0]))]).unwrap();
    assert_eq!(forward_eval(&zero, &point(&[5, -9])).unwrap(), vec![int(0)]);
    let id = Layer::affine(vec![vec![1, 0], vec![0, 1]], ints(&[0, 0]));
    let chain = Network::new(2, vec![id.clone(), id.clone(), id]).unwrap();
    let x = vec![frac(-3, 7), int(4)];
    assert_eq!(forward_eval(&chain, &x).unwrap(), x);
    assert!(forward_eval(&chain, &point(&[1])).is_err());
}

#[test]
fn identity_layer_keeps_triple() {
    let net = fixtures::two_layer_network();
    let t1 = network_triples(&net).unwrap().remove(0);
    let id = Layer::affine(
        (0..5).map(|i| (0..5).map(|j| i64::from(i == j)).collect()).collect(),
        vec![Rational::zero(); 5],
    );
    let t2 = layer_step(&t1, &id).unwrap();
    assert_eq!(t2.f, t1.f);
    assert_eq!(t2.h, t1.f);
    assert_eq!(t2.g, t1.g);
}

#[test]
fn single_relu_node() {
    let net = Network::new(2, vec![Layer::relu(vec![vec![1, -1]], ints(&[1]))]).unwrap();
    let t = network_triples(&net).unwrap().remove(0);
    assert_eq!(t.f[0], poly(2, &[(1, &[1, 0]), (0, &[0, 1])]));
    assert_eq!(t.g[0], poly(2, &[(0, &[0, 1])]));
}

#[test]
fn first_layer_of_two_layer_example() {
    let t = network_triples(&fixtures::two_layer_network()).unwrap().remove(0);
    let g = [
        poly(2, &[(0, &[1, 0])]),
        poly(2, &[(0, &[0, 3])]),
        poly(2, &[(0, &[0, 0])]),
        poly(2, &[(0, &[4, 0])]),
        poly(2, &[(0, &[0, 0])]),
    ];
    let h = [
        poly(2, &[(1, &[0, 1])]),
        poly(2, &[(-1, &[1, 0])]),
        poly(2, &[(2, &[1, 2])]),
        poly(2, &[(0, &[0, 1])]),
        poly(2, &[(-2, &[3, 2])]),
    ];
    assert_eq!(t.g, g);
    assert_eq!(t.h, h);
    for i in 0..5 {
        assert_eq!(t.f[i], h[i].add(&g[i]).unwrap());
    }
}

#[test]
fn second_layer_matches_factored_forms() {
    let net = fixtures::two_layer_network();
    let t = network_triples(&net).unwrap().remove(1);
    // (x2 ⊕ x1^4) ⊙ ((-2)⊙x1^3x2^2 ⊕ 0)^3 ⊙ x1 ⊙ (x2^3)^2
    let g = poly(2, &[(0, &[0, 1]), (0, &[4, 0])])
        .mul(&poly(2, &[(-2, &[3, 2]), (0, &[0, 0])]).pow(3))
        .unwrap()
        .mul(&poly(2, &[(0, &[1, 6])]))
        .unwrap();
    // (1⊙x2 ⊕ x1) ⊙ ((-1)⊙x1 ⊕ x2^3)^2 ⊙ (2⊙x1x2^2 ⊕ 0) ⊙ x1^4
    let h = poly(2, &[(1, &[0, 1]), (0, &[1, 0])])
        .mul(&poly(2, &[(-1, &[1, 0]), (0, &[0, 3])]).pow(2))
        .unwrap()
        .mul(&poly(2, &[(2, &[1, 2]), (0, &[0, 0])]))
        .unwrap()
        .mul(&poly(2, &[(0, &[4, 0])]))
        .unwrap();
    let map = network_to_tropical(&net).unwrap();
    for x in samples() {
        assert_eq!(t.g[0].eval(&x), g.eval(&x));
        assert_eq!(t.h[0].eval(&x), h.eval(&x));
        assert_eq!(t.f[0].eval(&x), g.add(&h).unwrap().eval(&x));
        assert_eq!(map.eval(&x), forward_eval(&net, &x).unwrap());
    }
}

#[test]
fn structural_polytopes_match_the_printed_sums() {
    let net = fixtures::two_layer_network();
    let polys = layer_polytopes(&net).unwrap();
    let l1 = &polys[0];
    for node in l1 {
        assert_eq!(node.g.vertices().len(), 1);
        assert_eq!(node.h.vertices().len(), 1);
        assert_eq!(node.f.vertices().len(), 2);
    }
    let w = |k: i64| int(k);
    let g2 = weighted_minkowski(&[
        (w(1), &l1[3].f),
        (w(3), &l1[4].f),
        (w(1), &l1[0].g),
        (w(2), &l1[1].g),
        (w(1), &l1[2].g),
    ])
    .unwrap();
    let h2 = weighted_minkowski(&[
        (w(1), &l1[0].f),
        (w(2), &l1[1].f),
        (w(1), &l1[2].f),
        (w(1), &l1[3].g),
        (w(3), &l1[4].g),
    ])
    .unwrap();
    assert_eq!(polys[1][0].g, g2);
    assert_eq!(polys[1][0].h, h2);
    let triples = network_triples(&net).unwrap();
    assert_eq!(triples[1].g[0].lifted_polytope().unwrap(), g2);
    assert_eq!(triples[1].h[0].lifted_polytope().unwrap(), h2);
    let union: Vec<Point> = g2.vertices().iter().chain(h2.vertices()).cloned().collect();
    assert_eq!(polys[1][0].f, convex_hull(&union).unwrap());
}

#[test]
fn layer_polytopes_dimension_cap() {
    let net = Network::new(4, vec![Layer::relu(vec![vec![1, 0, 0, 0]], ints(&[0]))]).unwrap();
    assert!(matches!(layer_polytopes(&net), Err(crate::Error::DimensionCap { .. })));
}

#[test]
fn synthesized_monomial_is_one_affine_layer() {
    let r = TropicalRationalFn::from_polynomial(poly(1, &[(2, &[3])])).unwrap();
    let net = tropical_to_network(&r).unwrap();
    assert_eq!(net.depth(), 1);
    assert_eq!(net.layers()[0], Layer::affine(vec![vec![3]], vec![int(2)]));
}

#[test]
fn synthesized_max_of_two_variables() {
    let r = TropicalRationalFn::from_polynomial(poly(2, &[(0, &[1, 0]), (0, &[0, 1])])).unwrap();
    let net = tropical_to_network(&r).unwrap();
    assert!(net.depth() <= 3);
    for x in samples() {
        let m = if x[0] > x[1] { x[0].clone() } else { x[1].clone() };
        assert_eq!(forward_eval(&net, &x).unwrap(), vec![m]);
    }
    assert_eq!(layer_count_bound(4, 2), 4);
    assert_eq!(layer_count_bound(1, 1), 2);
    assert_eq!(layer_count_bound(5, 8), 5);
}

#[test]
fn synthesized_quotient_round_trips() {
    let f = fixtures::conic_polynomial();
    let g = poly(2, &[(3, &[0, 0]), (-1, &[2, 1]), (0, &[0, 4])]);
    let r = TropicalRationalFn::new(f, g).unwrap();
    let net = tropical_to_network(&r).unwrap();
    assert!(net.depth() <= layer_count_bound(6, 3));
    let back = network_to_tropical(&net).unwrap();
    for x in samples() {
        assert_eq!(forward_eval(&net, &x).unwrap(), vec![r.eval(&x)]);
        assert_eq!(back.eval(&x), vec![r.eval(&x)]);
    }
}

#[test]
fn clearing_denominators_scales_outputs() {
    let layers = vec![
        RationalLayer {
            a: vec![vec![frac(1, 2), frac(-1, 3)], vec![int(2), frac(1, 4)]],
            b: vec![frac(1, 5), int(-1)],
            t: vec![TropicalValue::Finite(int(0)), TropicalValue::Finite(frac(-1, 2))],
        },
        RationalLayer {
            a: vec![vec![frac(3, 2), int(-1)]],
            b: vec![int(1)],
            t: vec![TropicalValue::Bottom],
        },
    ];
    let (net, c) = clear_denominators(2, &layers).unwrap();
    assert_eq!(c, int(24));
    let reference = |x: &[Rational]| -> Rational {
        let mut y = Vec::new();
        for i in 0..2 {
            let z = &layers[0].a[i][0] * &x[0] + &layers[0].a[i][1] * &x[1] + &layers[0].b[i];
            let t = layers[0].t[i].as_finite().unwrap().clone();
            y.push(if z > t { z } else { t });
        }
        &layers[1].a[0][0] * &y[0] + &layers[1].a[0][1] * &y[1] + &layers[1].b[0]
    };
    for x in samples() {
        assert_eq!(forward_eval(&net, &x).unwrap(), vec![reference(&x) * &c]);
    }
}

#[test]
fn scaling_network_scales_outputs() {
    let net = fixtures::two_layer_network();
    let scaled = scale_network(&net, 3).unwrap();
    for x in samples() {
        let a = forward_eval(&net, &x).unwrap();
        let b = forward_eval(&scaled, &x).unwrap();
        assert_eq!(b[0], &a[0] * int(3));
    }
    assert!(scale_network(&net, 0).is_err());
}
