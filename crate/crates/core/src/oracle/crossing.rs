use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::{Point, Rational};

/// Bisection stops refining once the bracket is shorter than `2^-MAX_BITS`.
const MAX_BITS: u32 = 120;
/// Exact recovery of the root is first attempted at this bracket width.
const FIRST_BITS: u32 = 40;

fn lerp(p: &[Rational], q: &[Rational], s: &Rational) -> Point {
    p.iter().zip(q).map(|(a, b)| a + (b - a) * s).collect()
}

/// The point `x` on the segment `[p, q]` where `φ` stops being positive,
/// given `φ(p) > 0 ≥ φ(q)`. At that point `φ(x) = 0` exactly.
///
/// The bracket `φ(lo) > 0 ≥ φ(hi)` is bisected to width `2^-40`. Since `φ` is
/// piecewise linear along the segment, the end of the positive stretch is
/// then recovered exactly by interpolating across the bracket or
/// extrapolating from its left side; a candidate is accepted when `φ`
/// vanishes there and is affine from `lo` up to it. A zero in the middle of a
/// stretch where `φ` is identically zero is never returned. If no candidate
/// passes, the bracket keeps shrinking, up to `2^-120`. Returns `None` when
/// the signs at the endpoints are not as required or nothing was recovered.
pub fn locate_crossing<F>(phi: F, p: &[Rational], q: &[Rational]) -> Option<Point>
where
    F: Fn(&[Rational]) -> Rational,
{
    let at = |s: &Rational| phi(&lerp(p, q, s));
    let (mut lo, mut hi) = (Rational::zero(), Rational::one());
    let (mut f_lo, mut f_hi) = (at(&lo), at(&hi));
    if !f_lo.is_positive() || f_hi.is_positive() {
        return None;
    }
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    // φ vanishes at s and is affine on [lo, s].
    let ends_positive_stretch = |lo: &Rational, f_lo: &Rational, s: &Rational| {
        let quarter = &half * &half;
        at(s).is_zero()
            && at(&((lo + s) * &half)) == f_lo * &half
            && at(&(lo + (s - lo) * &quarter)) == f_lo * (Rational::one() - &quarter)
    };
    for bits in 1..=MAX_BITS {
        let mid = (&lo + &hi) * &half;
        let f_mid = at(&mid);
        if f_mid.is_positive() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
        if bits >= FIRST_BITS {
            let left = &lo - (&hi - &lo);
            let candidates = [secant_root(&lo, &f_lo, &hi, &f_hi), secant_root(&left, &at(&left), &lo, &f_lo)];
            for s in candidates.into_iter().flatten() {
                if s > lo && s <= hi && ends_positive_stretch(&lo, &f_lo, &s) {
                    return Some(lerp(p, q, &s));
                }
            }
        }
    }
    None
}

/// Root of the line through `(a, fa)` and `(b, fb)`.
fn secant_root(a: &Rational, fa: &Rational, b: &Rational, fb: &Rational) -> Option<Rational> {
    let denom = fa - fb;
    if denom.is_zero() {
        return None;
    }
    Some(a + fa * (b - a) / denom)
}
