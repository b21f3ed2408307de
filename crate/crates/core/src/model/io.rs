//! JSON wire format for instances.

use serde::Deserialize;
use serde_json::Value;
use thiserror::Error;

use super::instance::{GeometricTree, Instance};
use crate::geom::COORD_LIMIT;

#[derive(Debug, Error, PartialEq)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("empty forest: at least one tree is required")]
    EmptyForest,
    #[error("tree {tree} has no vertices")]
    EmptyTree { tree: usize },
    #[error("tree {tree}, vertex {vertex}: coordinate out of range (|c| <= 2^30)")]
    CoordinateOutOfRange { tree: usize, vertex: usize },
    #[error("tree {tree}, edge {edge}: vertex index out of range")]
    BadEdgeIndex { tree: usize, edge: usize },
    #[error("coordinate scale must be finite and positive")]
    BadScale,
}

impl From<serde_json::Error> for ParseError {
    fn from(e: serde_json::Error) -> Self {
        let message = e.to_string();
        // serde_json appends " at line L column C"; keep just the cause
        let message = match message.rfind(" at line ") {
            Some(i) => message[..i].to_string(),
            None => message,
        };
        ParseError::Syntax { line: e.line(), column: e.column(), message }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    trees: Vec<GeometricTree>,
}

fn check(instance: Instance) -> Result<Instance, ParseError> {
    if instance.trees.is_empty() {
        return Err(ParseError::EmptyForest);
    }
    for (t, tree) in instance.trees.iter().enumerate() {
        if tree.vertices.is_empty() {
            return Err(ParseError::EmptyTree { tree: t });
        }
        if let Some(v) = tree.vertices.iter().position(|p| !p.in_range()) {
            return Err(ParseError::CoordinateOutOfRange { tree: t, vertex: v });
        }
        let n = tree.vertices.len();
        if let Some(e) = tree.edges.iter().position(|&[i, j]| i >= n || j >= n) {
            return Err(ParseError::BadEdgeIndex { tree: t, edge: e });
        }
    }
    Ok(instance)
}

/// Parses an instance with integer coordinates. Decimal coordinates are a
/// syntax error; see [`parse_instance_scaled`].
pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let raw: RawInstance = serde_json::from_str(text)?;
    check(Instance::new(raw.trees))
}

/// Parses an instance whose coordinates may be decimal, multiplying every
/// coordinate by `scale` and rounding to the nearest integer.
pub fn parse_instance_scaled(text: &str, scale: f64) -> Result<Instance, ParseError> {
    if !(scale.is_finite() && scale > 0.0) {
        return Err(ParseError::BadScale);
    }
    let mut value: Value = serde_json::from_str(text)?;
    let out_of_range = (COORD_LIMIT as f64) * 2.0;
    if let Some(trees) = value.get_mut("trees").and_then(Value::as_array_mut) {
        for (t, tree) in trees.iter_mut().enumerate() {
            let Some(vs) = tree.get_mut("vertices").and_then(Value::as_array_mut) else {
                continue;
            };
            for (v, vertex) in vs.iter_mut().enumerate() {
                let Some(coords) = vertex.as_array_mut() else { continue };
                for c in coords.iter_mut() {
                    if let Some(f) = c.as_f64() {
                        let scaled = (f * scale).round();
                        if !scaled.is_finite() || scaled.abs() > out_of_range {
                            return Err(ParseError::CoordinateOutOfRange { tree: t, vertex: v });
                        }
                        *c = Value::from(scaled as i64);
                    }
                }
            }
        }
    }
    let raw: RawInstance = serde_json::from_value(value)?;
    check(Instance::new(raw.trees))
}

pub fn serialize_instance(instance: &Instance) -> String {
    serde_json::to_string(instance).expect("instance serializes")
}
