//! Plain-text graph formats: edge lists and signed edge lists.
//!
//! Edge list: one `u v` pair per line, `#` starts a comment, and an optional
//! first data line `n=<count>` pins the vertex count. Signed edge list: the
//! same with a third token `+1` or `-1` per line.

use crate::error::{AlgError, Result};
use crate::graph::SimpleGraph;
use crate::signed::SignedGraph;

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parses the edge-list text format.
pub fn parse_edge_list(text: &str) -> Result<SimpleGraph> {
    let mut pairs = Vec::new();
    let mut n: Option<usize> = None;
    let mut seen_data = false;
    let mut offset = 0usize;
    for raw in text.lines() {
        let line_offset = offset;
        offset += raw.len() + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("n=") {
            if seen_data || n.is_some() {
                return Err(AlgError::parse(
                    line_offset,
                    "n=<count> must be the first data line",
                ));
            }
            n = Some(
                rest.trim()
                    .parse::<usize>()
                    .map_err(|e| AlgError::parse(line_offset, format!("bad vertex count: {e}")))?,
            );
            continue;
        }
        seen_data = true;
        let mut it = line.split_whitespace();
        let (a, b) = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(AlgError::parse(
                    line_offset,
                    format!("expected 'u v', got {line:?}"),
                ))
            }
        };
        let u = a
            .parse::<usize>()
            .map_err(|e| AlgError::parse(line_offset, format!("bad vertex {a:?}: {e}")))?;
        let v = b
            .parse::<usize>()
            .map_err(|e| AlgError::parse(line_offset, format!("bad vertex {b:?}: {e}")))?;
        pairs.push((u, v));
    }
    SimpleGraph::from_edge_list(&pairs, n)
}

/// Writes the edge-list text format, including the `n=` header so isolated
/// vertices round-trip.
pub fn write_edge_list(g: &SimpleGraph) -> String {
    let mut out = format!("n={}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the signed edge-list format: `u v s` with `s` in `{+1, -1}`.
pub fn parse_signed_edge_list(text: &str) -> Result<SignedGraph> {
    let mut pairs = Vec::new();
    let mut pair_signs = Vec::new();
    let mut n: Option<usize> = None;
    let mut offset = 0usize;
    for raw in text.lines() {
        let line_offset = offset;
        offset += raw.len() + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("n=") {
            n = Some(
                rest.trim()
                    .parse::<usize>()
                    .map_err(|e| AlgError::parse(line_offset, format!("bad vertex count: {e}")))?,
            );
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(AlgError::parse(
                line_offset,
                format!("expected 'u v s', got {line:?}"),
            ));
        }
        let u = toks[0]
            .parse::<usize>()
            .map_err(|e| AlgError::parse(line_offset, format!("bad vertex: {e}")))?;
        let v = toks[1]
            .parse::<usize>()
            .map_err(|e| AlgError::parse(line_offset, format!("bad vertex: {e}")))?;
        let s = match toks[2] {
            "+1" | "1" => 1i8,
            "-1" => -1i8,
            other => {
                return Err(AlgError::parse(
                    line_offset,
                    format!("sign must be +1 or -1, got {other:?}"),
                ))
            }
        };
        pairs.push((u, v));
        pair_signs.push(s);
    }
    let g = SimpleGraph::from_edge_list(&pairs, n)?;
    if g.edge_count() != pairs.len() {
        return Err(AlgError::invalid(
            "duplicate edges are not allowed in signed edge lists",
        ));
    }
    // map the input order onto the canonical edge order
    let mut signs = vec![0i8; g.edge_count()];
    for (&(u, v), &s) in pairs.iter().zip(&pair_signs) {
        let e = g.edge_index(u, v).expect("edge present by construction");
        signs[e] = s;
    }
    SignedGraph::new(g, signs)
}

/// Writes the signed edge-list format in canonical edge order.
pub fn write_signed_edge_list(s: &SignedGraph) -> String {
    let g = s.underlying();
    let mut out = format!("n={}\n", g.vertex_count());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let sign = if s.sign(e) == 1 { "+1" } else { "-1" };
        out.push_str(&format!("{u} {v} {sign}\n"));
    }
    out
}

/// JSON export of the sign vector, keyed by canonical edge index.
pub fn sign_vector_json(s: &SignedGraph) -> String {
    let body: Vec<String> = s
        .signs()
        .iter()
        .enumerate()
        .map(|(e, sign)| format!("\"{e}\":{sign}"))
        .collect();
    format!("{{{}}}", body.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip_with_comments() {
        let text = "# a triangle plus an isolated vertex\nn=4\n0 1\n1 2 # chord\n0 2\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(parse_edge_list("0 1\nn=5\n").is_err());
        assert!(parse_edge_list("0\n").is_err());
        assert!(parse_edge_list("0 x\n").is_err());
        assert!(parse_edge_list("n=2\n0 5\n").is_err());
    }

    #[test]
    fn signed_round_trip() {
        let text = "0 1 +1\n1 2 -1\n0 2 -1\n";
        let s = parse_signed_edge_list(text).unwrap();
        assert_eq!(s.signs(), &[1, -1, -1]);
        let back = parse_signed_edge_list(&write_signed_edge_list(&s)).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn signed_rejects_bad_sign() {
        assert!(parse_signed_edge_list("0 1 2\n").is_err());
        assert!(parse_signed_edge_list("0 1\n").is_err());
    }

    #[test]
    fn sign_vector_json_is_keyed_by_edge_index() {
        let s = parse_signed_edge_list("0 1 +1\n1 2 -1\n0 2 -1\n").unwrap();
        assert_eq!(sign_vector_json(&s), r#"{"0":1,"1":-1,"2":-1}"#);
    }
}
