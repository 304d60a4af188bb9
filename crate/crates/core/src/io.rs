//! Graph ingestion: a plain edge-list text format and graph6.
//!
//! Edge lists hold one edge per line as two whitespace-separated 0-based
//! labels. Blank lines and `#` comments are skipped. The vertex count is one
//! more than the largest label unless a header line `n=<k>` fixes it.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        if let Some(rest) = line.strip_prefix("n=").or_else(|| line.strip_prefix("n =")) {
            if declared.is_some() {
                return Err(err("duplicate n= header".into()));
            }
            let k = rest
                .trim()
                .parse::<usize>()
                .map_err(|e| err(format!("bad vertex count: {e}")))?;
            declared = Some((k, line_no));
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err(format!("expected two labels, got {line:?}")));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|e| err(format!("bad label {s:?}: {e}")))
        };
        let (u, v) = (parse(a)?, parse(b)?);
        if u == v {
            return Err(err(format!("self-loop at {u}")));
        }
        edges.push((u, v, line_no));
    }
    let max_label = edges.iter().map(|&(u, v, _)| u.max(v)).max();
    let n = match declared {
        Some((k, _)) => k,
        None => max_label.map_or(0, |m| m + 1),
    };
    if let Some(&(u, v, line)) = edges.iter().find(|&&(u, v, _)| u.max(v) >= n) {
        return Err(Error::Parse {
            line,
            message: format!("edge {u} {v} exceeds declared n={n}"),
        });
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    Graph::from_edges(n, edges.into_iter().map(|(u, v, _)| (u, v)))
}

/// Writes the edge-list format, always with an `n=` header.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

// Reference: https://users.cecs.anu.edu.au/~bdm/data/formats.txt
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let err = |message: String| Error::Parse { line: 1, message };
    let bytes: Vec<u8> = s
        .bytes()
        .map(|b| {
            if (63..=126).contains(&b) {
                Ok(b - 63)
            } else {
                Err(err(format!("byte {b:#x} outside graph6 range")))
            }
        })
        .collect::<Result<_>>()?;
    if bytes.is_empty() {
        return Err(err("empty graph6 string".into()));
    }
    let (n, header) = if bytes[0] != 63 {
        (bytes[0] as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != 63 {
        if bytes.len() < 4 {
            return Err(err("truncated size field".into()));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | b as usize);
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(err("truncated size field".into()));
        }
        let n = bytes[2..8].iter().fold(0usize, |acc, &b| acc << 6 | b as usize);
        (n, 8)
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let body = &bytes[header..];
    if body.len() != bits.div_ceil(6) {
        return Err(err(format!(
            "expected {} data bytes for n={n}, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if body[k / 6] >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = if n <= 62 {
        vec![n as u8]
    } else {
        vec![63, (n >> 12 & 63) as u8, (n >> 6 & 63) as u8, (n & 63) as u8]
    };
    let bits = n * n.saturating_sub(1) / 2;
    let mut body = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                body[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    out.extend(body);
    out.into_iter().map(|b| (b + 63) as char).collect()
}
