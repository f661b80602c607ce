use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::rational::{format_rational, Point, Rational};

/// Seed used when the caller has no preference.
pub const DEFAULT_SEED: u64 = 0x7a0c_5eed;

/// Deterministic pseudorandom rational points in the box `[lo, hi]`.
///
/// Each coordinate is `lo + (hi − lo)·k/q` with `q` drawn from `1..=1000` and
/// `k` from `0..=q`.
pub fn sample_points(lo: &[Rational], hi: &[Rational], n: usize, seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            lo.iter()
                .zip(hi)
                .map(|(a, b)| {
                    let q: i64 = rng.gen_range(1..=1000);
                    let k: i64 = rng.gen_range(0..=q);
                    a + (b - a) * Rational::new(BigInt::from(k), BigInt::from(q))
                })
                .collect()
        })
        .collect()
}

/// A point where two functions disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub point: Vec<String>,
    pub left: Vec<String>,
    pub right: Vec<String>,
}

/// Outcome of [`sample_equality`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampleReport {
    pub seed: u64,
    pub samples: usize,
    pub equal: bool,
    pub counterexample: Option<Counterexample>,
}

/// Compares two exactly evaluable functions at `n` seeded points of a box and
/// stops at the first disagreement.
pub fn sample_equality<F, G>(f: F, g: G, n: usize, lo: &[Rational], hi: &[Rational], seed: u64) -> SampleReport
where
    F: Fn(&[Rational]) -> Vec<Rational>,
    G: Fn(&[Rational]) -> Vec<Rational>,
{
    let fmt = |v: &[Rational]| v.iter().map(format_rational).collect::<Vec<_>>();
    for x in sample_points(lo, hi, n, seed) {
        let (a, b) = (f(&x), g(&x));
        if a != b {
            return SampleReport {
                seed,
                samples: n,
                equal: false,
                counterexample: Some(Counterexample { point: fmt(&x), left: fmt(&a), right: fmt(&b) }),
            };
        }
    }
    SampleReport { seed, samples: n, equal: true, counterexample: None }
}
