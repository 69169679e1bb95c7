//! graph6 codec (short form, `n <= 62`).
//!
//! Format: one byte `n + 63`, then the upper triangle of the adjacency
//! matrix read in column order (`(0,1), (0,2), (1,2), (0,3), ...`), packed
//! big-endian into 6-bit groups, each stored as `value + 63`. An optional
//! `>>graph6<<` header is accepted and ignored.

use crate::error::{AlgError, Result};
use crate::graph::SimpleGraph;

const HEADER: &str = ">>graph6<<";

/// Decodes a single short-form graph6 string.
pub fn from_graph6(text: &str) -> Result<SimpleGraph> {
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(AlgError::parse(0, "empty graph6 string"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(AlgError::parse(
                i,
                format!("byte 0x{b:02x} outside graph6 alphabet 0x3f..0x7e"),
            ));
        }
    }
    if bytes[0] == 126 {
        return Err(AlgError::parse(
            0,
            "long-form graph6 (n > 62) is not supported",
        ));
    }
    let n = (bytes[0] - 63) as usize;
    let bit_count = n * (n.saturating_sub(1)) / 2;
    let group_count = bit_count.div_ceil(6);
    if bytes.len() != 1 + group_count {
        return Err(AlgError::parse(
            bytes.len().min(1 + group_count),
            format!(
                "expected {} data bytes for n={}, found {}",
                group_count,
                n,
                bytes.len() - 1
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = bytes[1 + bit / 6] - 63;
            if group >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    SimpleGraph::from_edge_list(&edges, Some(n))
}

/// Encodes a graph in short form. Fails for `n > 62`.
pub fn to_graph6(g: &SimpleGraph) -> Result<String> {
    let n = g.vertex_count();
    if n > 62 {
        return Err(AlgError::invalid(format!(
            "graph6 short form supports n <= 62, got {n}"
        )));
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let mut out = vec![n as u8 + 63];
    out.resize(1 + bit_count.div_ceil(6), 63);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                out[1 + bit / 6] += 1 << (5 - bit % 6);
            }
            bit += 1;
        }
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
