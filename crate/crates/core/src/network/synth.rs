use num_traits::Zero;

use super::{Layer, Network};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::tropical::{TropicalPolynomial, TropicalRationalFn, TropicalValue};

/// An affine form over the outputs of the previous layer.
#[derive(Debug, Clone)]
struct Affine {
    coeffs: Vec<i64>,
    bias: Rational,
}

impl Affine {
    fn minus(&self, other: &Affine) -> Result<Affine> {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_sub(*b).ok_or(Error::Overflow("synthesized weight")))
            .collect::<Result<_>>()?;
        Ok(Affine { coeffs, bias: &self.bias - &other.bias })
    }
}

struct Node {
    form: Affine,
    t: TropicalValue,
}

fn monomials(p: &TropicalPolynomial) -> Result<Vec<Affine>> {
    p.terms()
        .map(|(e, c)| {
            let coeffs = e
                .iter()
                .map(|&a| i64::try_from(a).map_err(|_| Error::Overflow("exponent")))
                .collect::<Result<_>>()?;
            Ok(Affine { coeffs, bias: c.clone() })
        })
        .collect()
}

/// Emits one level of the pairwise max tree. Each pair `(u, v)` becomes the
/// nodes `max{u − v, 0}` and `v`, whose sum is `max{u, v}`; an unpaired value is
/// passed through. Returns, per surviving value, the node indices to sum.
fn reduce(values: &[Affine], nodes: &mut Vec<Node>) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for chunk in values.chunks(2) {
        let k = nodes.len();
        match chunk {
            [u, v] => {
                nodes.push(Node { form: u.minus(v)?, t: TropicalValue::Finite(Rational::zero()) });
                nodes.push(Node { form: v.clone(), t: TropicalValue::Bottom });
                out.push(vec![k, k + 1]);
            }
            [u] => {
                nodes.push(Node { form: u.clone(), t: TropicalValue::Bottom });
                out.push(vec![k]);
            }
            _ => unreachable!("chunks of two"),
        }
    }
    Ok(out)
}

fn sums(groups: Vec<Vec<usize>>, width: usize) -> Vec<Affine> {
    groups
        .into_iter()
        .map(|g| {
            let mut coeffs = vec![0; width];
            for i in g {
                coeffs[i] = 1;
            }
            Affine { coeffs, bias: Rational::zero() }
        })
        .collect()
}

fn ceil_log2(r: usize) -> usize {
    r.max(1).next_power_of_two().trailing_zeros() as usize
}

/// `max{⌈log₂ r_f⌉, ⌈log₂ r_g⌉} + 2`.
pub fn layer_count_bound(r_f: usize, r_g: usize) -> usize {
    ceil_log2(r_f).max(ceil_log2(r_g)) + 2
}

/// A network computing `num(x) − den(x)` exactly.
///
/// The monomials of each part, in lexicographic exponent order, are combined by
/// a balanced binary tree of maxima, one layer per tree level, and the final
/// subtraction is an affine output layer. The depth is
/// `max{⌈log₂ r_f⌉, ⌈log₂ r_g⌉} + 1`.
pub fn tropical_to_network(r: &TropicalRationalFn) -> Result<Network> {
    let dim = r.dim();
    let mut f = monomials(r.num())?;
    let mut g = monomials(r.den())?;
    let mut layers = Vec::new();
    while f.len() > 1 || g.len() > 1 {
        let mut nodes = Vec::new();
        let fg = reduce(&f, &mut nodes)?;
        let gg = reduce(&g, &mut nodes)?;
        let width = nodes.len();
        let a = nodes.iter().map(|n| n.form.coeffs.clone()).collect();
        let b = nodes.iter().map(|n| n.form.bias.clone()).collect();
        let t = nodes.into_iter().map(|n| n.t).collect();
        layers.push(Layer::new(a, b, t));
        f = sums(fg, width);
        g = sums(gg, width);
    }
    let out = f[0].minus(&g[0])?;
    layers.push(Layer::affine(vec![out.coeffs], vec![out.bias]));
    Network::new(dim, layers)
}
