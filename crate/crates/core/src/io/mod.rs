//! Text formats: tropical expressions and network JSON.

mod expr;
mod network_json;

pub use expr::{parse_expression, parse_polynomial, parse_rational_fn, Expression};
pub use network_json::{network_to_json, parse_network_json, LayerJson, NetworkJson};
