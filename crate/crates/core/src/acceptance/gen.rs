//! Seeded random instances.

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::network::{Layer, Network};
use crate::rational::{Point, Rational};
use crate::tropical::{TropicalPolynomial, TropicalValue};

pub fn rational(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rational {
    let n = rng.gen_range(-max_num..=max_num);
    let d = rng.gen_range(1..=max_den);
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn value(rng: &mut ChaCha8Rng) -> TropicalValue {
    if rng.gen_ratio(1, 10) {
        TropicalValue::Bottom
    } else {
        TropicalValue::Finite(rational(rng, 50, 12))
    }
}

pub fn polynomial(rng: &mut ChaCha8Rng, dim: usize, max_terms: usize, max_exp: u64) -> TropicalPolynomial {
    let k = rng.gen_range(1..=max_terms);
    let mut p = TropicalPolynomial::bottom(dim);
    for _ in 0..k {
        let e: Vec<u64> = (0..dim).map(|_| rng.gen_range(0..=max_exp)).collect();
        let c = rational(rng, 12, 3);
        p = p.add(&TropicalPolynomial::monomial(c, e)).expect("same dimension");
    }
    p
}

/// A polynomial with exactly `terms` distinct exponents.
pub fn polynomial_with_terms(rng: &mut ChaCha8Rng, dim: usize, terms: usize, max_exp: u64) -> TropicalPolynomial {
    let mut p = TropicalPolynomial::bottom(dim);
    while p.len() < terms {
        let e: Vec<u64> = (0..dim).map(|_| rng.gen_range(0..=max_exp)).collect();
        if p.coefficient(&e).is_bottom() {
            p = p.add(&TropicalPolynomial::monomial(rational(rng, 12, 3), e)).expect("same dimension");
        }
    }
    p
}

pub fn point(rng: &mut ChaCha8Rng, dim: usize, max_num: i64, max_den: i64) -> Point {
    (0..dim).map(|_| rational(rng, max_num, max_den)).collect()
}

/// Hidden ReLU layers of the given widths followed by an affine output of
/// width one. Biases are halves in `[-bias, bias]`.
pub fn network(rng: &mut ChaCha8Rng, dim: usize, widths: &[usize], max_weight: i64, bias: i64) -> Network {
    let mut layers = Vec::new();
    let mut prev = dim;
    for &n in widths {
        let a = (0..n).map(|_| (0..prev).map(|_| rng.gen_range(-max_weight..=max_weight)).collect()).collect();
        let b = (0..n).map(|_| rational(rng, 2 * bias, 2)).collect();
        layers.push(Layer::relu(a, b));
        prev = n;
    }
    let a = vec![(0..prev).map(|_| rng.gen_range(-max_weight..=max_weight)).collect()];
    layers.push(Layer::affine(a, vec![rational(rng, 2 * bias, 2)]));
    Network::new(dim, layers).expect("generated shapes are consistent")
}
