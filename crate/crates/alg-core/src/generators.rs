//! Standard graph families with documented canonical labelings.

use crate::error::{AlgError, Result};
use crate::graph::SimpleGraph;

/// Cycle `C_k` on vertices `0..k` with edges `(i, i+1 mod k)`. Requires
/// `k >= 3` (smaller cycles would need loops or parallel edges).
pub fn cycle(k: usize) -> Result<SimpleGraph> {
    if k < 3 {
        return Err(AlgError::invalid(format!("cycle requires k >= 3, got {k}")));
    }
    let pairs: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    SimpleGraph::from_edge_list(&pairs, Some(k))
}

/// Path `P_k` on `k >= 1` vertices.
pub fn path(k: usize) -> Result<SimpleGraph> {
    if k < 1 {
        return Err(AlgError::invalid("path requires k >= 1"));
    }
    let pairs: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    SimpleGraph::from_edge_list(&pairs, Some(k))
}

/// Star `K_{1,k}`: center 0, leaves `1..=k`.
pub fn star(k: usize) -> Result<SimpleGraph> {
    if k < 1 {
        return Err(AlgError::invalid("star requires k >= 1"));
    }
    let pairs: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    SimpleGraph::from_edge_list(&pairs, Some(k + 1))
}

/// Complete graph `K_k`.
pub fn complete(k: usize) -> Result<SimpleGraph> {
    if k < 1 {
        return Err(AlgError::invalid("complete requires k >= 1"));
    }
    let mut pairs = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            pairs.push((i, j));
        }
    }
    SimpleGraph::from_edge_list(&pairs, Some(k))
}

/// Complete multipartite graph with the given part sizes. Parts are numbered
/// in input order and occupy consecutive vertex ranges.
pub fn complete_multipartite(parts: &[usize]) -> Result<SimpleGraph> {
    if parts.is_empty() {
        return Err(AlgError::invalid("part list must be nonempty"));
    }
    if parts.contains(&0) {
        return Err(AlgError::invalid("part sizes must be >= 1"));
    }
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (idx, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(idx, size));
    }
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if part_of[i] != part_of[j] {
                pairs.push((i, j));
            }
        }
    }
    SimpleGraph::from_edge_list(&pairs, Some(n))
}

/// Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`
/// (`5+i ~ 5+(i+2 mod 5)`), spokes `(i, 5+i)`.
pub fn petersen() -> SimpleGraph {
    let mut pairs = Vec::new();
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((5 + i, 5 + (i + 2) % 5));
        pairs.push((i, 5 + i));
    }
    SimpleGraph::from_edge_list(&pairs, Some(10)).expect("petersen edges are loop-free")
}

/// Prism over `C_k` (circular ladder): outer cycle `0..k`, inner cycle
/// `k..2k`, rungs `(i, k+i)`. Cubic for every `k >= 3`.
pub fn prism(k: usize) -> Result<SimpleGraph> {
    if k < 3 {
        return Err(AlgError::invalid(format!("prism requires k >= 3, got {k}")));
    }
    let mut pairs = Vec::new();
    for i in 0..k {
        pairs.push((i, (i + 1) % k));
        pairs.push((k + i, k + (i + 1) % k));
        pairs.push((i, k + i));
    }
    SimpleGraph::from_edge_list(&pairs, Some(2 * k))
}
