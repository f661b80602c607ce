//! Proptest strategies shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use tropnet::network::{Layer, Network};
use tropnet::tropical::{TropicalPolynomial, TropicalValue};
use tropnet::{Point, Rational};

pub fn rational(max_num: i64, max_den: i64) -> impl Strategy<Value = Rational> {
    (-max_num..=max_num, 1..=max_den).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

pub fn point(dim: usize, max_num: i64, max_den: i64) -> impl Strategy<Value = Point> {
    proptest::collection::vec(rational(max_num, max_den), dim)
}

/// A nonempty polynomial with up to `max_terms` terms (fewer after merging).
pub fn polynomial(dim: usize, max_terms: usize, max_exp: u64, max_coeff: i64) -> impl Strategy<Value = TropicalPolynomial> {
    proptest::collection::vec((rational(max_coeff, 2), proptest::collection::vec(0..=max_exp as i64, dim)), 1..=max_terms)
        .prop_map(move |terms| {
            let terms = terms.into_iter().map(|(c, e)| (TropicalValue::Finite(c), e));
            TropicalPolynomial::from_terms(dim, terms).expect("exponents have length dim")
        })
}

fn matrix(rows: usize, cols: usize, max_weight: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec(proptest::collection::vec(-max_weight..=max_weight, cols), rows)
}

/// ReLU hidden layers of the given widths and an affine output of `out`
/// nodes. Biases are halves in `[-2, 2]`.
pub fn network_with(dim: usize, widths: Vec<usize>, out: usize, max_weight: i64) -> impl Strategy<Value = Network> {
    let mut shapes = Vec::new();
    let mut prev = dim;
    for &w in &widths {
        shapes.push((w, prev));
        prev = w;
    }
    shapes.push((out, prev));
    let hidden = widths.len();
    shapes
        .into_iter()
        .map(|(rows, cols)| (matrix(rows, cols, max_weight), proptest::collection::vec(rational(4, 2), rows)))
        .collect::<Vec<_>>()
        .prop_map(move |layers| {
            let layers = layers
                .into_iter()
                .enumerate()
                .map(|(l, (a, b))| if l < hidden { Layer::relu(a, b) } else { Layer::affine(a, b) })
                .collect();
            Network::new(dim, layers).expect("shapes are consistent")
        })
}

/// A network with `1..=max_hidden` hidden layers of width `1..=max_width`.
pub fn network(dim: usize, max_hidden: usize, max_width: usize, out: usize) -> impl Strategy<Value = Network> {
    proptest::collection::vec(1..=max_width, 1..=max_hidden)
        .prop_flat_map(move |widths| network_with(dim, widths, out, 3))
}
