use serde::Serialize;

use crate::error::{Error, Result};
use crate::network::Network;
use crate::polytope::{binomial, MAX_AMBIENT_DIM};
use crate::tropical::TropicalPolynomial;

/// Number of linear regions of a tropical polynomial, i.e. the number of
/// upper-hull vertices of `P(f)`. Exact because those regions are convex.
pub fn poly_region_count(f: &TropicalPolynomial) -> Result<usize> {
    if f.dim() + 1 > MAX_AMBIENT_DIM {
        return Err(Error::DimensionCap { dim: f.dim() + 1, max: MAX_AMBIENT_DIM });
    }
    Ok(f.lifted_polytope()?.upper_hull_vertices().len())
}

/// Region counts and bounds for one network or polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegionReport {
    /// Exact count when one is known.
    pub exact_count: Option<u64>,
    /// `∏_{l<L} Σ_{i≤d} C(n_l, i)`.
    pub upper_bound: u128,
    /// The per-layer factors of `upper_bound`.
    pub layer_terms: Vec<u128>,
    /// How each number was obtained.
    pub methods: Vec<String>,
    /// Hypotheses of the bound that the network violates.
    pub caveats: Vec<String>,
}

impl RegionReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.caveats.is_empty()
    }
}

/// The product bound on the number of linear regions of a network, one factor
/// per hidden layer.
///
/// The bound assumes an affine output layer and hidden widths of at least the
/// input dimension; violations are listed in `caveats` and the bound is still
/// reported.
pub fn region_bound(net: &Network) -> Result<RegionReport> {
    let d = net.input_dim() as u64;
    let layers = net.layers();
    let mut caveats = Vec::new();
    let last = layers.last().expect("networks have at least one layer");
    if last.t.iter().any(|t| !t.is_bottom()) {
        caveats.push("output layer has a finite threshold".to_string());
    }
    let mut terms = Vec::with_capacity(layers.len().saturating_sub(1));
    for (l, layer) in layers[..layers.len() - 1].iter().enumerate() {
        let n = layer.width() as u64;
        if n < d {
            caveats.push(format!("layer {} has width {} < input dimension {}", l + 1, n, d));
        }
        let mut term: u128 = 0;
        for i in 0..=d {
            term = term.checked_add(binomial(n, i)).ok_or(Error::Overflow("region bound"))?;
        }
        terms.push(term);
    }
    let bound = terms
        .iter()
        .try_fold(1u128, |acc, t| acc.checked_mul(*t))
        .ok_or(Error::Overflow("region bound"))?;
    Ok(RegionReport {
        exact_count: None,
        upper_bound: bound,
        layer_terms: terms,
        methods: vec!["product bound".to_string()],
        caveats,
    })
}
