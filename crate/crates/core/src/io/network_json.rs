use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::network::{Layer, Network};
use crate::rational::{format_rational, parse_rational};
use crate::tropical::TropicalValue;

/// `{"input_dim": d, "layers": [{"A": [[int]], "b": [str], "t": [str]}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkJson {
    pub input_dim: usize,
    pub layers: Vec<LayerJson>,
}

/// Biases are rational or decimal strings; thresholds are rationals or `"-inf"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LayerJson {
    #[serde(rename = "A")]
    pub a: Vec<Vec<i64>>,
    pub b: Vec<String>,
    pub t: Vec<String>,
}

fn threshold(s: &str) -> Result<TropicalValue> {
    if s.trim() == "-inf" {
        Ok(TropicalValue::Bottom)
    } else {
        parse_rational(s).map(TropicalValue::Finite)
    }
}

impl NetworkJson {
    pub fn from_network(net: &Network) -> Self {
        NetworkJson {
            input_dim: net.input_dim(),
            layers: net
                .layers()
                .iter()
                .map(|l| LayerJson {
                    a: l.a.clone(),
                    b: l.b.iter().map(format_rational).collect(),
                    t: l.t.iter().map(|t| t.to_string()).collect(),
                })
                .collect(),
        }
    }

    pub fn to_network(&self) -> Result<Network> {
        let layers = self
            .layers
            .iter()
            .map(|l| {
                let b = l.b.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?;
                let t = l.t.iter().map(|s| threshold(s)).collect::<Result<_>>()?;
                Ok(Layer::new(l.a.clone(), b, t))
            })
            .collect::<Result<_>>()?;
        Network::new(self.input_dim, layers)
    }
}

/// Strict parse: unknown fields, non-integer weights and malformed literals
/// are errors, with the position for syntax and schema problems.
pub fn parse_network_json(text: &str) -> Result<Network> {
    let json: NetworkJson = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    json.to_network()
}

/// Pretty-printed JSON with a trailing newline.
pub fn network_to_json(net: &Network) -> String {
    let mut s = serde_json::to_string_pretty(&NetworkJson::from_network(net)).expect("plain data serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn round_trips_the_two_layer_example() {
        let net = fixtures::two_layer_network();
        let text = network_to_json(&net);
        assert_eq!(parse_network_json(&text).unwrap(), net);
        assert!(text.contains("\"A\""));
    }

    #[test]
    fn reads_thresholds_and_decimals() {
        let text = r#"{"input_dim": 1, "layers": [{"A": [[2]], "b": ["0.5"], "t": ["-inf"]}]}"#;
        let net = parse_network_json(text).unwrap();
        assert!(net.layers()[0].t[0].is_bottom());
        assert_eq!(net.layers()[0].b[0], crate::rational::frac(1, 2));
    }

    #[test]
    fn strict_schema() {
        let extra = r#"{"input_dim": 1, "layers": [], "name": "x"}"#;
        assert!(matches!(parse_network_json(extra), Err(Error::Parse { .. })));
        let float = r#"{"input_dim": 1, "layers": [{"A": [[0.5]], "b": ["0"], "t": ["0"]}]}"#;
        assert!(matches!(parse_network_json(float), Err(Error::Parse { .. })));
        let shape = r#"{"input_dim": 2, "layers": [{"A": [[1]], "b": ["0"], "t": ["0"]}]}"#;
        assert!(matches!(parse_network_json(shape), Err(Error::InvalidNetwork(_))));
        let lit = r#"{"input_dim": 1, "layers": [{"A": [[1]], "b": ["one"], "t": ["0"]}]}"#;
        assert!(matches!(parse_network_json(lit), Err(Error::RationalLiteral(_))));
        match parse_network_json("{\n  \"input_dim\": 1,\n  oops\n}") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }
}
