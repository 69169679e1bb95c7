//! Triangle-level signed invariants of the antisymmetric line graph, with
//! two independent computation paths.
//!
//! Combinatorially, every triangle of the line graph comes either from three
//! edges at a common vertex (positive) or from a triangle of the base graph
//! (negative), so `t+ = sum_v C(d(v), 3)` and `t- = #triangles`. The trace
//! path computes the same census from exact integer powers of the signed
//! adjacency matrix: `delta3 = tr(S^3)/6` and `T = tr(U^3)/6` with `U = |S|`.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{AlgError, Result};
use crate::graph::SimpleGraph;
use crate::matrix::{int_matmul, int_trace};
use crate::signed::{self, SignedGraph};

/// Census of signed triangles: counts, imbalance `delta3 = t+ - t-`, and
/// the normalized imbalance `tau3 = delta3 / total` (defined when there is
/// at least one triangle).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleCensus {
    pub t_plus: u64,
    pub t_minus: u64,
    pub total: u64,
    pub delta3: i64,
    pub tau3: Option<Ratio<i64>>,
}

impl TriangleCensus {
    fn from_counts(t_plus: u64, t_minus: u64) -> Self {
        let total = t_plus + t_minus;
        let delta3 = t_plus as i64 - t_minus as i64;
        let tau3 = if total > 0 {
            Some(Ratio::new(delta3, total as i64))
        } else {
            None
        };
        TriangleCensus {
            t_plus,
            t_minus,
            total,
            delta3,
            tau3,
        }
    }
}

fn binom3(d: usize) -> u64 {
    if d < 3 {
        0
    } else {
        (d as u64) * (d as u64 - 1) * (d as u64 - 2) / 6
    }
}

/// Census from degree sequence and triangle count of the base graph.
pub fn triangle_census_combinatorial(g: &SimpleGraph) -> TriangleCensus {
    let t_plus: u64 = g.degrees().into_iter().map(binom3).sum();
    let t_minus = g.triangle_count();
    TriangleCensus::from_counts(t_plus, t_minus)
}

/// Census from exact traces of the signed adjacency matrix. For signed
/// graphs that are not antisymmetric line graphs, the census refers to their
/// own signed triangles.
pub fn triangle_census_trace(s: &SignedGraph) -> Result<TriangleCensus> {
    let (dim, sm) = signed::signed_adjacency_int(s);
    let um: Vec<i64> = sm.iter().map(|v| v.abs()).collect();
    let tr_s3 = {
        let s2 = int_matmul(dim, &sm, &sm);
        int_trace(dim, &int_matmul(dim, &s2, &sm))
    };
    let tr_u3 = {
        let u2 = int_matmul(dim, &um, &um);
        int_trace(dim, &int_matmul(dim, &u2, &um))
    };
    if tr_s3 % 6 != 0 || tr_u3 % 6 != 0 {
        return Err(AlgError::Numeric(format!(
            "triangle traces not divisible by 6: tr(S^3)={tr_s3}, tr(U^3)={tr_u3}"
        )));
    }
    let delta3 = tr_s3 / 6;
    let total = tr_u3 / 6;
    if (total + delta3) % 2 != 0 || delta3.abs() > total {
        return Err(AlgError::Numeric(format!(
            "inconsistent triangle counts: delta3={delta3}, total={total}"
        )));
    }
    let t_plus = ((total + delta3) / 2) as u64;
    let t_minus = ((total - delta3) / 2) as u64;
    Ok(TriangleCensus::from_counts(t_plus, t_minus))
}

/// Fourth trace invariant `tr(S^4) / m^2` as an exact rational, where `m`
/// is the edge count of the base graph.
pub fn fourth_trace_invariant(s: &SignedGraph, m: usize) -> Result<Ratio<i64>> {
    if m == 0 {
        return Err(AlgError::invalid(
            "fourth trace invariant undefined for edgeless graphs",
        ));
    }
    let (dim, sm) = signed::signed_adjacency_int(s);
    let s2 = int_matmul(dim, &sm, &sm);
    // tr(S^4) = sum of squares of S^2 entries
    let tr_s4: i64 = s2.iter().map(|v| v * v).sum();
    Ok(Ratio::new(tr_s4, (m * m) as i64))
}

/// For bipartite `g`: checks that the antisymmetric line graph is
/// switching-equivalent to the all-positive line graph and that the
/// imbalance collapses to `sum_v C(d(v), 3)`.
pub fn bipartite_collapse_check(g: &SimpleGraph) -> Result<bool> {
    if !g.is_bipartite() {
        return Err(AlgError::invalid(
            "bipartite collapse check requires a bipartite graph",
        ));
    }
    let alg = signed::build_alg(g, &crate::graph::Orientation::reference(g.edge_count()))?;
    let all_pos = SignedGraph::all_positive(g.line_graph());
    let equivalent = signed::switching_equivalent(&alg, &all_pos)?;
    let census = triangle_census_trace(&alg)?;
    let star_sum: i64 = g.degrees().into_iter().map(|d| binom3(d) as i64).sum();
    Ok(equivalent && census.delta3 == star_sum)
}
