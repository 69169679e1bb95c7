//! Exhaustive desk-scale catalogs: all graphs on up to 8 vertices, one per
//! isomorphism class.
//!
//! Enumeration extends each (n-1)-vertex class by a new vertex attached in
//! every possible way, then dedupes by a canonical form: the minimum edge
//! bitmask over all relabelings that sort the degree sequence in
//! non-increasing order. Minimizing over that canonically defined set of
//! permutations is isomorphism-invariant, and restricting to it keeps the
//! permutation search small for irregular graphs.

use std::collections::HashSet;

use crate::error::{AlgError, Result};
use crate::graph::SimpleGraph;

const MAX_CATALOG_N: usize = 8;

/// Pair slot of `{i, j}` (`i < j`) in the column-order triangle used for
/// masks: `(0,1), (0,2), (1,2), (0,3), ...`
fn pair_slot(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

fn mask_degrees(n: usize, mask: u32) -> Vec<usize> {
    let mut deg = vec![0usize; n];
    for j in 1..n {
        for i in 0..j {
            if mask >> pair_slot(i, j) & 1 == 1 {
                deg[i] += 1;
                deg[j] += 1;
            }
        }
    }
    deg
}

fn apply_perm(n: usize, mask: u32, perm: &[usize]) -> u32 {
    let mut out = 0u32;
    for j in 1..n {
        for i in 0..j {
            if mask >> pair_slot(i, j) & 1 == 1 {
                let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                out |= 1 << pair_slot(a, b);
            }
        }
    }
    out
}

/// Minimum mask over all relabelings `perm` such that the relabeled degree
/// sequence is non-increasing.
fn canonical_mask(n: usize, mask: u32) -> u32 {
    if n <= 1 {
        return mask;
    }
    let deg = mask_degrees(n, mask);
    // vertices grouped by degree, descending; new labels are assigned block
    // by block, all orders within a block
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| deg[b].cmp(&deg[a]).then(a.cmp(&b)));
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match blocks.last_mut() {
            Some(block) if deg[block[0]] == deg[v] => block.push(v),
            _ => blocks.push(vec![v]),
        }
    }

    let mut best = u32::MAX;
    let mut perm = vec![0usize; n];
    fn assign(
        n: usize,
        mask: u32,
        blocks: &[Vec<usize>],
        block_idx: usize,
        next_label: usize,
        perm: &mut Vec<usize>,
        best: &mut u32,
    ) {
        if block_idx == blocks.len() {
            let candidate = apply_perm(n, mask, perm);
            if candidate < *best {
                *best = candidate;
            }
            return;
        }
        let block = &blocks[block_idx];
        // permute the block's vertices over labels next_label..next_label+len
        let mut chosen = vec![false; block.len()];
        #[allow(clippy::too_many_arguments)]
        fn rec(
            n: usize,
            mask: u32,
            blocks: &[Vec<usize>],
            block_idx: usize,
            next_label: usize,
            pos: usize,
            chosen: &mut Vec<bool>,
            perm: &mut Vec<usize>,
            best: &mut u32,
        ) {
            let block = &blocks[block_idx];
            if pos == block.len() {
                assign(n, mask, blocks, block_idx + 1, next_label + pos, perm, best);
                return;
            }
            for k in 0..block.len() {
                if chosen[k] {
                    continue;
                }
                chosen[k] = true;
                perm[block[k]] = next_label + pos;
                rec(
                    n,
                    mask,
                    blocks,
                    block_idx,
                    next_label,
                    pos + 1,
                    chosen,
                    perm,
                    best,
                );
                chosen[k] = false;
            }
        }
        rec(
            n,
            mask,
            blocks,
            block_idx,
            next_label,
            0,
            &mut chosen,
            perm,
            best,
        );
    }
    assign(n, mask, &blocks, 0, 0, &mut perm, &mut best);
    best
}

fn mask_to_graph(n: usize, mask: u32) -> SimpleGraph {
    let mut pairs = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if mask >> pair_slot(i, j) & 1 == 1 {
                pairs.push((i, j));
            }
        }
    }
    SimpleGraph::from_edge_list(&pairs, Some(n)).expect("mask pairs are loop-free")
}

/// All graphs on exactly `n` vertices, one representative per isomorphism
/// class, in a deterministic order (edge count, then canonical mask).
pub fn all_graphs(n: usize) -> Result<Vec<SimpleGraph>> {
    if n > MAX_CATALOG_N {
        return Err(AlgError::ResourceLimit {
            stage: "graph catalog enumeration",
            limit: MAX_CATALOG_N,
            actual: n,
        });
    }
    let mut masks: Vec<u32> = vec![0];
    for k in 2..=n {
        let mut next: HashSet<u32> = HashSet::new();
        for &mask in &masks {
            for attach in 0u32..1 << (k - 1) {
                let mut extended = mask;
                for i in 0..k - 1 {
                    if attach >> i & 1 == 1 {
                        extended |= 1 << pair_slot(i, k - 1);
                    }
                }
                next.insert(canonical_mask(k, extended));
            }
        }
        masks = next.into_iter().collect();
    }
    masks.sort_by_key(|&m| (m.count_ones(), m));
    Ok(masks.into_iter().map(|m| mask_to_graph(n, m)).collect())
}

/// Connected graphs on exactly `n` vertices, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Result<Vec<SimpleGraph>> {
    Ok(all_graphs(n)?
        .into_iter()
        .filter(|g| g.is_connected())
        .collect())
}

/// Connected graphs on `1..=n_max` vertices, one per isomorphism class.
pub fn connected_graphs_up_to(n_max: usize) -> Result<Vec<SimpleGraph>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(connected_graphs(n)?);
    }
    Ok(out)
}
