use num_traits::Zero;

use super::{split_weights, Network};
use crate::error::{Error, Result};
use crate::polytope::{convex_hull, weighted_minkowski, Polytope, MAX_AMBIENT_DIM};
use crate::rational::{Point, Rational};
use crate::tropical::TropicalValue;

/// `P(f_i)`, `P(g_i)` and `P(h_i)` for one node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodePolytopes {
    pub f: Polytope,
    pub g: Polytope,
    pub h: Polytope,
}

fn vertical(dim: usize, c: &Rational) -> Point {
    let mut p = vec![Rational::zero(); dim + 1];
    p[dim] = c.clone();
    p
}

/// Builds the lifted polytopes of every node directly from the weights:
/// `P(g') = Σ a⁺P(g) + a⁻P(f)`, `P(h') = Σ a⁺P(f) + a⁻P(g) + {b e}` and
/// `P(f') = Conv(P(g') + {t e} ∪ P(h'))`, where `e` is the last unit vector.
///
/// Entry `[l][i]` belongs to node `i` of layer `l + 1`.
pub fn layer_polytopes(net: &Network) -> Result<Vec<Vec<NodePolytopes>>> {
    let d = net.input_dim();
    if d + 1 > MAX_AMBIENT_DIM {
        return Err(Error::DimensionCap { dim: d + 1, max: MAX_AMBIENT_DIM });
    }
    let origin = Polytope::point(vec![Rational::zero(); d + 1])?;
    let mut prev: Vec<NodePolytopes> = (0..d)
        .map(|j| {
            let mut e = vec![Rational::zero(); d + 1];
            e[j] = Rational::from_integer(1.into());
            let x = Polytope::point(e)?;
            Ok(NodePolytopes { f: x.clone(), g: origin.clone(), h: x })
        })
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(net.depth());
    for layer in net.layers() {
        let (pos, neg) = split_weights(&layer.a);
        let mut cur = Vec::with_capacity(layer.width());
        for i in 0..layer.width() {
            let weight = |w: u64| Rational::from_integer(w.into());
            let mut g_terms: Vec<(Rational, &Polytope)> = Vec::new();
            let mut h_terms: Vec<(Rational, &Polytope)> = Vec::new();
            for (j, node) in prev.iter().enumerate() {
                if pos[i][j] > 0 {
                    g_terms.push((weight(pos[i][j]), &node.g));
                    h_terms.push((weight(pos[i][j]), &node.f));
                }
                if neg[i][j] > 0 {
                    g_terms.push((weight(neg[i][j]), &node.f));
                    h_terms.push((weight(neg[i][j]), &node.g));
                }
            }
            let g = if g_terms.is_empty() { origin.clone() } else { weighted_minkowski(&g_terms)? };
            let h = if h_terms.is_empty() { origin.clone() } else { weighted_minkowski(&h_terms)? }
                .translate(&vertical(d, &layer.b[i]))?;
            let f = match &layer.t[i] {
                TropicalValue::Bottom => h.clone(),
                TropicalValue::Finite(t) => {
                    let shifted = g.translate(&vertical(d, t))?;
                    let pts: Vec<Point> =
                        shifted.vertices().iter().chain(h.vertices()).cloned().collect();
                    convex_hull(&pts)?
                }
            };
            cur.push(NodePolytopes { f, g, h });
        }
        out.push(cur.clone());
        prev = cur;
    }
    Ok(out)
}
