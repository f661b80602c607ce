use super::{split_weights, Layer, Network};
use crate::error::{check_dim, Result};
use crate::polytope::MAX_AMBIENT_DIM;
use crate::tropical::{TropicalMap, TropicalPolynomial, TropicalRationalFn, TropicalValue};

/// Tropical polynomials `F, G, H` for one layer's nodes, with
/// `ν_i = F_i ⊘ G_i` and `F_i = H_i ⊕ (G_i ⊙ t_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerTriple {
    pub f: Vec<TropicalPolynomial>,
    pub g: Vec<TropicalPolynomial>,
    pub h: Vec<TropicalPolynomial>,
}

impl LayerTriple {
    pub fn width(&self) -> usize {
        self.f.len()
    }

    pub fn dim(&self) -> usize {
        self.f.first().map_or(0, TropicalPolynomial::dim)
    }

    /// `F_i ⊘ G_i` for every node.
    pub fn to_map(&self, dim: usize) -> Result<TropicalMap> {
        let comps = self
            .f
            .iter()
            .zip(&self.g)
            .map(|(f, g)| TropicalRationalFn::new(f.clone(), g.clone()))
            .collect::<Result<Vec<_>>>()?;
        TropicalMap::new(dim, comps)
    }
}

/// The input layer: `F = H = x`, `G = 0`.
pub fn initial_triple(dim: usize) -> LayerTriple {
    let x: Vec<TropicalPolynomial> = (0..dim).map(|i| TropicalPolynomial::variable(dim, i)).collect();
    LayerTriple { f: x.clone(), g: vec![TropicalPolynomial::one(dim); dim], h: x }
}

/// Drops monomials whose lifts are not vertices of `P(p)`. Neither the
/// function nor the polytope changes, but products stay small.
fn tidy(p: TropicalPolynomial) -> Result<TropicalPolynomial> {
    if p.dim() < MAX_AMBIENT_DIM {
        p.prune_to_vertices()
    } else {
        Ok(p)
    }
}

fn product(
    dim: usize,
    factors: impl Iterator<Item = (u64, TropicalPolynomial)>,
) -> Result<TropicalPolynomial> {
    let mut acc = TropicalPolynomial::one(dim);
    for (a, p) in factors {
        if a > 0 {
            acc = tidy(acc.mul(&p.pow(a))?)?;
        }
    }
    Ok(acc)
}

/// Pushes a triple through one layer:
/// `G' = A₊G + A₋F`, `H' = A₊F + A₋G + b`, `F' = H' ⊕ (G' ⊙ t)`, where the
/// matrix products are read tropically (`+` as `⊙`, scalar weights as powers).
pub fn layer_step(prev: &LayerTriple, layer: &Layer) -> Result<LayerTriple> {
    check_dim(prev.width(), layer.input_width())?;
    let dim = prev.dim();
    let (pos, neg) = split_weights(&layer.a);
    let mut next = LayerTriple { f: Vec::new(), g: Vec::new(), h: Vec::new() };
    for i in 0..layer.width() {
        let g = product(
            dim,
            (0..prev.width()).flat_map(|j| {
                [(pos[i][j], prev.g[j].clone()), (neg[i][j], prev.f[j].clone())]
            }),
        )?;
        let h = product(
            dim,
            (0..prev.width()).flat_map(|j| {
                [(pos[i][j], prev.f[j].clone()), (neg[i][j], prev.g[j].clone())]
            }),
        )?
        .shift(&layer.b[i]);
        let f = match &layer.t[i] {
            TropicalValue::Bottom => h.clone(),
            TropicalValue::Finite(t) => tidy(h.add(&g.shift(t))?)?,
        };
        next.f.push(f);
        next.g.push(g);
        next.h.push(h);
    }
    Ok(next)
}

/// Triples for every layer, starting with the first hidden layer.
pub fn network_triples(net: &Network) -> Result<Vec<LayerTriple>> {
    let mut cur = initial_triple(net.input_dim());
    let mut out = Vec::with_capacity(net.depth());
    for layer in net.layers() {
        cur = layer_step(&cur, layer)?;
        out.push(cur.clone());
    }
    Ok(out)
}

/// `ν = F ⊘ G` for the output layer.
pub fn network_to_tropical(net: &Network) -> Result<TropicalMap> {
    let triples = network_triples(net)?;
    triples.last().expect("networks have at least one layer").to_map(net.input_dim())
}
