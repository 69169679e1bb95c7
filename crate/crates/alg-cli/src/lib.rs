//! Library backing the `alg` command-line tool: report construction, batch
//! sweeps, identity verification, and family tables.

pub mod family;
pub mod jsonfmt;
pub mod report;
pub mod samples;
pub mod sweep;
pub mod verify;

use alg_core::{from_graph6, io, Result, SimpleGraph};

/// Parses a single-graph input, auto-detecting the format: lines of integer
/// pairs (or an `n=` header) are treated as an edge list, anything else as
/// graph6.
pub fn parse_graph_auto(text: &str) -> Result<SimpleGraph> {
    let looks_like_edge_list = text.lines().any(|raw| {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            return false;
        }
        line.starts_with("n=")
            || line
                .split_whitespace()
                .take(2)
                .filter(|tok| tok.parse::<usize>().is_ok())
                .count()
                == 2
    });
    if looks_like_edge_list {
        io::parse_edge_list(text)
    } else {
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty())
            .unwrap_or("");
        from_graph6(line)
    }
}
