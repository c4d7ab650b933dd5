//! JSON network files and weight assignments.
//!
//! ```json
//! {
//!   "vertices": ["j1", "j2", "i1", "i2"],
//!   "edges": [["j1", "i1"], ["j1", "i2"], ["j2", "i1"], ["j2", "i2"], ["i1", "i2"]],
//!   "boundary": {"j1": 1, "j2": "-1"},
//!   "conductances": {"i1-j1": "1/2", "i2-j1": 1, "i1-j2": 1, "i2-j2": 1, "i1-i2": 1}
//! }
//! ```
//!
//! Weight maps are exact when every value is an integer or a rational string,
//! and floating point as soon as one value is a non-integer JSON number.

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::graph::{edge_key, Graph};
use crate::harmonic::EdgeWeights;
use crate::network::{validate_network, NetworkInstance};
use crate::rational::{format_rational, parse_rational, to_f64};

#[derive(Debug, Clone)]
pub struct NetworkFile {
    pub net: NetworkInstance,
    pub conductances: Option<EdgeWeights>,
    pub energies: Option<EdgeWeights>,
}

fn parse_error(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn string_list(value: &Value, what: &str) -> Result<Vec<String>> {
    value
        .as_array()
        .ok_or_else(|| parse_error(format!("`{what}` must be an array")))?
        .iter()
        .map(|v| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| parse_error(format!("`{what}` entries must be strings")))
        })
        .collect()
}

enum Number {
    Exact(BigRational),
    Float(f64),
}

fn number(value: &Value, context: &str) -> Result<Number> {
    match value {
        Value::String(s) => Ok(Number::Exact(parse_rational(s)?)),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Number::Exact(BigRational::from_integer(i.into())))
            } else if let Some(u) = n.as_u64() {
                Ok(Number::Exact(BigRational::from_integer(u.into())))
            } else {
                let f = n.as_f64().ok_or_else(|| parse_error(format!("bad number for {context}")))?;
                Ok(Number::Float(f))
            }
        }
        _ => Err(parse_error(format!("{context} must be a number or rational string"))),
    }
}

/// Normalizes a `"v-w"` key (either order) to the graph's edge index.
fn edge_for_key(graph: &Graph, key: &str) -> Result<usize> {
    let (a, b) = key
        .split_once('-')
        .ok_or_else(|| parse_error(format!("edge key `{key}` is not of the form v-w")))?;
    graph
        .edge_by_key(&edge_key(a, b))
        .ok_or_else(|| Error::UnknownVertex(format!("edge {key}")))
}

fn collect_weights(graph: &Graph, entries: Vec<(usize, Number)>) -> Result<EdgeWeights> {
    let k = graph.edge_count();
    let mut slots: Vec<Option<Number>> = (0..k).map(|_| None).collect();
    for (e, n) in entries {
        if slots[e].is_some() {
            return Err(Error::DuplicateEdge(graph.edge_key(e)));
        }
        slots[e] = Some(n);
    }
    if let Some(e) = slots.iter().position(Option::is_none) {
        return Err(Error::MissingWeight(graph.edge_key(e)));
    }
    let values: Vec<Number> = slots.into_iter().flatten().collect();
    if values.iter().all(|n| matches!(n, Number::Exact(_))) {
        Ok(EdgeWeights::Exact(
            values
                .into_iter()
                .map(|n| match n {
                    Number::Exact(q) => q,
                    Number::Float(_) => unreachable!(),
                })
                .collect(),
        ))
    } else {
        Ok(EdgeWeights::Float(
            values
                .into_iter()
                .map(|n| match n {
                    Number::Exact(q) => to_f64(&q),
                    Number::Float(f) => f,
                })
                .collect(),
        ))
    }
}

/// Weights from a JSON object keyed by edge.
pub fn weights_from_json(graph: &Graph, value: &Value) -> Result<EdgeWeights> {
    let map = value
        .as_object()
        .ok_or_else(|| parse_error("weights must be an object keyed by edge"))?;
    let entries = map
        .iter()
        .map(|(key, v)| Ok((edge_for_key(graph, key)?, number(v, key)?)))
        .collect::<Result<Vec<_>>>()?;
    collect_weights(graph, entries)
}

/// Weights from `key=value,key=value`. Values are read exactly when they are
/// integers, `p/q` or plain decimals; anything else that parses as a float
/// makes the whole assignment floating point.
pub fn weights_from_assignments(graph: &Graph, text: &str) -> Result<EdgeWeights> {
    let mut entries = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, raw) = item
            .split_once('=')
            .ok_or_else(|| parse_error(format!("`{item}` is not of the form key=value")))?;
        let value = match parse_rational(raw) {
            Ok(q) => Number::Exact(q),
            Err(e) => Number::Float(raw.trim().parse::<f64>().map_err(|_| e)?),
        };
        entries.push((edge_for_key(graph, key.trim())?, value));
    }
    collect_weights(graph, entries)
}

/// Parses and validates a network file.
pub fn parse_network_json(text: &str) -> Result<NetworkFile> {
    let root: Value = serde_json::from_str(text).map_err(|e| parse_error(e.to_string()))?;
    let obj = root
        .as_object()
        .ok_or_else(|| parse_error("network file must be a JSON object"))?;
    let field = |name: &str| obj.get(name).ok_or_else(|| parse_error(format!("missing `{name}`")));
    let vertices = string_list(field("vertices")?, "vertices")?;
    let edges: Vec<(String, String)> = field("edges")?
        .as_array()
        .ok_or_else(|| parse_error("`edges` must be an array"))?
        .iter()
        .map(|pair| {
            let list = string_list(pair, "edges")?;
            match <[String; 2]>::try_from(list) {
                Ok([a, b]) => Ok((a, b)),
                Err(_) => Err(parse_error("each edge must list exactly two vertices")),
            }
        })
        .collect::<Result<_>>()?;
    let graph = Graph::new(vertices, edges)?;
    let boundary = field("boundary")?
        .as_object()
        .ok_or_else(|| parse_error("`boundary` must be an object"))?;
    let mut labels = Vec::with_capacity(boundary.len());
    let mut values = Vec::with_capacity(boundary.len());
    for (label, v) in boundary {
        labels.push(label.clone());
        match number(v, label)? {
            Number::Exact(q) => values.push(q),
            Number::Float(_) => {
                return Err(parse_error(format!(
                    "boundary value of `{label}` must be an integer or a rational string"
                )))
            }
        }
    }
    let weights = |name: &str| -> Result<Option<EdgeWeights>> {
        obj.get(name).map(|v| weights_from_json(&graph, v)).transpose()
    };
    let conductances = weights("conductances")?;
    let energies = weights("energies")?;
    let net = validate_network(graph, &labels, &values)?;
    Ok(NetworkFile {
        net,
        conductances,
        energies,
    })
}

/// Exact values as canonical rational strings, floats as JSON numbers.
pub fn weights_to_json(graph: &Graph, weights: &EdgeWeights) -> Value {
    let map: Map<String, Value> = (0..graph.edge_count())
        .map(|e| {
            let v = match weights {
                EdgeWeights::Exact(w) => Value::String(format_rational(&w[e])),
                EdgeWeights::Float(w) => json!(w[e]),
            };
            (graph.edge_key(e), v)
        })
        .collect();
    Value::Object(map)
}

/// The network in file form.
pub fn network_to_json(file: &NetworkFile) -> Value {
    let net = &file.net;
    let g = net.graph();
    let boundary: BTreeMap<&str, String> = net
        .boundary()
        .iter()
        .zip(net.boundary_values())
        .map(|(&b, u)| (g.label(b), format_rational(u)))
        .collect();
    let mut root = json!({
        "vertices": g.labels(),
        "edges": g.edges().iter().map(|&(a, b)| [g.label(a), g.label(b)]).collect::<Vec<_>>(),
        "boundary": boundary,
    });
    if let Some(w) = &file.conductances {
        root["conductances"] = weights_to_json(g, w);
    }
    if let Some(w) = &file.energies {
        root["energies"] = weights_to_json(g, w);
    }
    root
}
