use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use super::{Layer, Network};
use crate::error::{Error, Result};
use crate::rational::{denominator_lcm, Rational};
use crate::tropical::TropicalValue;

/// A layer whose weights may be rational. Not accepted by [`Network`] directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalLayer {
    pub a: Vec<Vec<Rational>>,
    pub b: Vec<Rational>,
    pub t: Vec<TropicalValue>,
}

fn scale_t(t: &TropicalValue, k: &Rational) -> TropicalValue {
    match t {
        TropicalValue::Bottom => TropicalValue::Bottom,
        TropicalValue::Finite(v) => TropicalValue::Finite(v * k),
    }
}

fn to_i64(v: &Rational) -> Result<i64> {
    v.to_integer().to_i64().ok_or(Error::Overflow("integer weight"))
}

/// Clears weight denominators layer by layer.
///
/// With `s_l` the lcm of the denominators in `A^{(l)}` and `c_l = s_1⋯s_l`, the
/// returned network has weights `s_l A^{(l)}`, biases `c_l b^{(l)}` and
/// thresholds `c_l t^{(l)}`; since `max{·,·}` commutes with positive scaling, it
/// computes `c_L ν`. The factor `c_L` is returned alongside.
pub fn clear_denominators(input_dim: usize, layers: &[RationalLayer]) -> Result<(Network, Rational)> {
    let mut c = Rational::one();
    let mut out = Vec::with_capacity(layers.len());
    for layer in layers {
        let s = Rational::from_integer(denominator_lcm(layer.a.iter().flatten()));
        c *= &s;
        let a = layer
            .a
            .iter()
            .map(|row| row.iter().map(|w| to_i64(&(w * &s))).collect())
            .collect::<Result<_>>()?;
        let b = layer.b.iter().map(|v| v * &c).collect();
        let t = layer.t.iter().map(|v| scale_t(v, &c)).collect();
        out.push(Layer::new(a, b, t));
    }
    Ok((Network::new(input_dim, out)?, c))
}

/// Multiplies the first layer's `(A, b, t)` and every later `(b, t)` by `k`, so
/// the new network computes `k ν`.
pub fn scale_network(net: &Network, k: u64) -> Result<Network> {
    if k == 0 {
        return Err(Error::Domain("scale factor must be positive".into()));
    }
    let kr = Rational::from_integer(BigInt::from(k));
    let ki = i64::try_from(k).map_err(|_| Error::Overflow("scale factor"))?;
    let layers = net
        .layers()
        .iter()
        .enumerate()
        .map(|(l, layer)| {
            let a = if l == 0 {
                layer
                    .a
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|w| w.checked_mul(ki).ok_or(Error::Overflow("scaled weight")))
                            .collect()
                    })
                    .collect::<Result<_>>()?
            } else {
                layer.a.clone()
            };
            let b = layer.b.iter().map(|v| v * &kr).collect();
            let t = layer.t.iter().map(|v| scale_t(v, &kr)).collect();
            Ok(Layer::new(a, b, t))
        })
        .collect::<Result<_>>()?;
    Network::new(net.input_dim(), layers)
}
