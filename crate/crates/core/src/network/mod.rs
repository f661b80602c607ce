//! Feedforward networks with integer weights and `max{x, t}` activations, and
//! their conversion to and from tropical rational maps.

mod convert;
mod polytopes;
mod scale;
mod synth;

pub use convert::{initial_triple, layer_step, network_to_tropical, network_triples, LayerTriple};
pub use polytopes::{layer_polytopes, NodePolytopes};
pub use scale::{clear_denominators, scale_network, RationalLayer};
pub use synth::{layer_count_bound, tropical_to_network};

use num_traits::Zero;

use crate::error::{check_dim, Error, Result};
use crate::rational::Rational;
use crate::tropical::TropicalValue;

/// Integer weight matrix, one row per output node.
pub type Matrix = Vec<Vec<i64>>;

/// One `(ρ, σ)` pair: `x ↦ max{A x + b, t}` with `t_i = -inf` meaning identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layer {
    pub a: Matrix,
    pub b: Vec<Rational>,
    pub t: Vec<TropicalValue>,
}

impl Layer {
    pub fn new(a: Matrix, b: Vec<Rational>, t: Vec<TropicalValue>) -> Self {
        Layer { a, b, t }
    }

    /// A ReLU layer (`t = 0`).
    pub fn relu(a: Matrix, b: Vec<Rational>) -> Self {
        let n = a.len();
        Layer { a, b, t: vec![TropicalValue::Finite(Rational::zero()); n] }
    }

    /// An affine layer with no activation (`t = -inf`).
    pub fn affine(a: Matrix, b: Vec<Rational>) -> Self {
        let n = a.len();
        Layer { a, b, t: vec![TropicalValue::Bottom; n] }
    }

    pub fn width(&self) -> usize {
        self.a.len()
    }

    pub fn input_width(&self) -> usize {
        self.a.first().map_or(0, Vec::len)
    }

    fn forward(&self, x: &[Rational]) -> Vec<Rational> {
        self.a
            .iter()
            .zip(&self.b)
            .zip(&self.t)
            .map(|((row, b), t)| {
                let mut z = b.clone();
                for (w, xi) in row.iter().zip(x) {
                    if *w != 0 {
                        z += xi * Rational::from_integer((*w).into());
                    }
                }
                match t {
                    TropicalValue::Finite(t) if *t > z => t.clone(),
                    _ => z,
                }
            })
            .collect()
    }
}

/// A validated network `ν = σ^{(L)} ∘ ρ^{(L)} ∘ … ∘ σ^{(1)} ∘ ρ^{(1)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Network {
    input_dim: usize,
    layers: Vec<Layer>,
}

impl Network {
    pub fn new(input_dim: usize, layers: Vec<Layer>) -> Result<Self> {
        if input_dim == 0 {
            return Err(Error::InvalidNetwork("input dimension must be positive".into()));
        }
        if layers.is_empty() {
            return Err(Error::InvalidNetwork("a network needs at least one layer".into()));
        }
        let mut width = input_dim;
        for (l, layer) in layers.iter().enumerate() {
            let n = layer.a.len();
            if n == 0 {
                return Err(Error::InvalidNetwork(format!("layer {} has no nodes", l + 1)));
            }
            if let Some(i) = layer.a.iter().position(|row| row.len() != width) {
                return Err(Error::InvalidNetwork(format!(
                    "layer {} row {} has {} columns, expected {}",
                    l + 1,
                    i + 1,
                    layer.a[i].len(),
                    width
                )));
            }
            if layer.b.len() != n || layer.t.len() != n {
                return Err(Error::InvalidNetwork(format!(
                    "layer {} has {} rows but {} biases and {} thresholds",
                    l + 1,
                    n,
                    layer.b.len(),
                    layer.t.len()
                )));
            }
            width = n;
        }
        Ok(Network { input_dim, layers })
    }

    pub fn input_dim(&self) -> usize {
        self.input_dim
    }

    pub fn output_dim(&self) -> usize {
        self.layers.last().map_or(0, Layer::width)
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    /// Number of `(ρ, σ)` pairs, counting the output layer.
    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    /// Layer widths `n_1, …, n_L`.
    pub fn widths(&self) -> Vec<usize> {
        self.layers.iter().map(Layer::width).collect()
    }

    pub fn into_layers(self) -> Vec<Layer> {
        self.layers
    }
}

/// Exact forward pass.
pub fn forward_eval(net: &Network, x: &[Rational]) -> Result<Vec<Rational>> {
    check_dim(net.input_dim, x.len())?;
    let mut v = x.to_vec();
    for layer in &net.layers {
        v = layer.forward(&v);
    }
    Ok(v)
}

/// `A = A₊ − A₋` with both parts nonnegative and disjointly supported.
pub fn split_weights(a: &[Vec<i64>]) -> (Vec<Vec<u64>>, Vec<Vec<u64>>) {
    let pos = a
        .iter()
        .map(|row| row.iter().map(|&w| if w > 0 { w.unsigned_abs() } else { 0 }).collect())
        .collect();
    let neg = a
        .iter()
        .map(|row| row.iter().map(|&w| if w < 0 { w.unsigned_abs() } else { 0 }).collect())
        .collect();
    (pos, neg)
}

#[cfg(test)]
mod tests;
