//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export takes plain strings or numbers and returns a JSON string, so
//! the page needs no generated types. The `*_json` functions are ordinary Rust
//! and are what the native tests exercise.

use gorenstein_core::circulant::{classify_quartic, predict_two_connection, Family, Prediction, QuarticClass};
use gorenstein_core::sqc::{find_sqc_partition, sqc_gorenstein};
use gorenstein_core::{io, is_gorenstein, CharSpec, CirculantSpec, Error, Graph};
use serde::Serialize;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// The browser runs single-threaded; keep demo graphs small enough to stay responsive.
pub const DEMO_VERTEX_CAP: usize = 20;

#[derive(Serialize)]
struct Drawing {
    n: usize,
    edges: Vec<(usize, usize)>,
}

fn drawing(g: &Graph) -> Drawing {
    Drawing { n: g.n(), edges: g.edges().collect() }
}

fn parse_connections(text: &str) -> Result<Vec<usize>, Error> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Error::InvalidCirculant(format!("connection {t:?} is not a number")))
        })
        .collect()
}

fn closed_form(spec: &CirculantSpec) -> Option<Prediction> {
    match *spec.connections() {
        [a, b] => predict_two_connection(spec.n(), a, b).ok(),
        ref s if !s.is_empty() && s.iter().copied().eq(1..=s.len()) => Family::Band.predict(spec).ok(),
        _ => None,
    }
}

/// Classifies `C_n(S)` and reports the closed-form prediction when one applies.
pub fn classify_circulant_json(n: usize, connections: &str, characteristic: &str) -> Result<Value, Error> {
    let spec = CirculantSpec::new(n, parse_connections(connections)?)?;
    let k: CharSpec = characteristic.parse()?;
    let g = Graph::circulant(&spec)?.with_vertex_cap(DEMO_VERTEX_CAP)?;
    let verdict = is_gorenstein(&g, k)?;
    Ok(json!({
        "spec": spec.to_string(),
        "graph": drawing(&g),
        "verdict": verdict,
        "prediction": closed_form(&spec),
    }))
}

/// SQC partition of an edge list (or graph6 string) plus both Gorenstein verdicts.
pub fn sqc_json(input: &str) -> Result<Value, Error> {
    let trimmed = input.trim();
    let g = if !trimmed.is_empty() && !trimmed.contains(char::is_whitespace) && !trimmed.starts_with("n=") {
        io::parse_graph6(trimmed)?
    } else {
        io::parse_edge_list(input)?
    };
    let g = g.with_vertex_cap(DEMO_VERTEX_CAP)?;
    let partition = find_sqc_partition(&g)?;
    let rule = match sqc_gorenstein(&g) {
        Ok(v) => json!(v),
        Err(e @ (Error::NotSqc | Error::IsolatedVertex(_) | Error::Precondition(_))) => json!(e.to_string()),
        Err(e) => return Err(e),
    };
    let engine = is_gorenstein(&g, CharSpec::All)?;
    Ok(json!({
        "graph": drawing(&g),
        "partition": partition,
        "sqcGorenstein": rule,
        "engineGorenstein": engine.gorenstein,
    }))
}

/// For each `1 <= a < b < n/2`, the closed-form class next to the brute-force one.
pub fn quartic_grid_json(n: usize) -> Result<Value, Error> {
    if !(5..=DEMO_VERTEX_CAP).contains(&n) {
        return Err(Error::Precondition(format!("n must lie in 5..={DEMO_VERTEX_CAP}")));
    }
    let mut cells = Vec::new();
    for a in 1..n {
        for b in a + 1..n {
            if 2 * b >= n {
                break;
            }
            let predicted = classify_quartic(n, a, b)?;
            let v = is_gorenstein(&Graph::circulant(&CirculantSpec::new(n, [a, b])?)?, CharSpec::All)?;
            let observed = if v.gorenstein {
                QuarticClass::Gorenstein
            } else if v.w2 {
                QuarticClass::W2Only
            } else {
                QuarticClass::Neither
            };
            cells.push(json!({ "a": a, "b": b, "predicted": predicted, "observed": observed }));
        }
    }
    Ok(json!({ "n": n, "cells": cells }))
}

fn to_js(r: Result<Value, Error>) -> Result<String, JsValue> {
    r.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e.to_string()))
}

#[wasm_bindgen(js_name = classifyCirculant)]
pub fn classify_circulant(n: usize, connections: &str, characteristic: &str) -> Result<String, JsValue> {
    to_js(classify_circulant_json(n, connections, characteristic))
}

#[wasm_bindgen(js_name = sqcPartition)]
pub fn sqc_partition(input: &str) -> Result<String, JsValue> {
    to_js(sqc_json(input))
}

#[wasm_bindgen(js_name = quarticGrid)]
pub fn quartic_grid(n: usize) -> Result<String, JsValue> {
    to_js(quartic_grid_json(n))
}
