//! Small worked examples shared by tests, the acceptance suite and the CLI.

use crate::network::{Layer, Network};
use crate::rational::int;
use crate::tropical::TropicalPolynomial;

fn poly(dim: usize, terms: &[(i64, &[u64])]) -> TropicalPolynomial {
    let mut p = TropicalPolynomial::bottom(dim);
    for (c, e) in terms {
        p = p.add(&TropicalPolynomial::monomial(int(*c), e.to_vec())).expect("fixture dims agree");
    }
    p
}

/// `1⊙x1² ⊕ 1⊙x2² ⊕ 2⊙x1x2 ⊕ 2⊙x1 ⊕ 2⊙x2 ⊕ 2`.
///
/// All six lifted points are upper vertices; the dual subdivision is a unit
/// square and two triangles.
pub fn conic_polynomial() -> TropicalPolynomial {
    poly(2, &[(1, &[2, 0]), (1, &[0, 2]), (2, &[1, 1]), (2, &[1, 0]), (2, &[0, 1]), (2, &[0, 0])])
}

/// Numerator of a rational function whose region `{num > den}` is a
/// nonconvex, non-simply-shaped union of cones.
pub fn pyramid_numerator() -> TropicalPolynomial {
    poly(2, &[(0, &[2, 1]), (0, &[0, 1]), (0, &[1, 2]), (0, &[1, 0]), (1, &[1, 1])])
}

pub fn pyramid_denominator() -> TropicalPolynomial {
    poly(2, &[(0, &[2, 1]), (0, &[0, 1]), (0, &[1, 2]), (0, &[1, 0])])
}

/// The 2-5-1 ReLU network with first layer
/// `A = [[-1,1],[1,-3],[1,2],[-4,1],[3,2]]`, `b = (1,-1,2,0,-2)` and output
/// `max{y1 + 2y2 + y3 - y4 - 3y5, 0}`.
pub fn two_layer_network() -> Network {
    let layer1 = Layer::relu(
        vec![vec![-1, 1], vec![1, -3], vec![1, 2], vec![-4, 1], vec![3, 2]],
        [1, -1, 2, 0, -2].iter().map(|&v| int(v)).collect(),
    );
    let layer2 = Layer::relu(vec![vec![1, 2, 1, -1, -3]], vec![int(0)]);
    Network::new(2, vec![layer1, layer2]).expect("fixture is valid")
}
