//! Shared helpers for the integration tests: cached catalogs and seeded
//! random graph generation.

#![allow(dead_code)]

use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use alg_core::graph::{Orientation, SimpleGraph};
use alg_core::{catalog, signed};

/// Connected graphs on 1..=7 vertices, one per isomorphism class.
pub fn connected_up_to_7() -> &'static [SimpleGraph] {
    static CACHE: OnceLock<Vec<SimpleGraph>> = OnceLock::new();
    CACHE.get_or_init(|| catalog::connected_graphs_up_to(7).unwrap())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random graph on `n` vertices with `m` edges drawn without replacement.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, m: usize) -> SimpleGraph {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    pairs.shuffle(rng);
    pairs.truncate(m.min(pairs.len()));
    SimpleGraph::from_edge_list(&pairs, Some(n)).unwrap()
}

/// Random connected graph: a uniform random spanning tree plus extra edges.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, extra_edges: usize) -> SimpleGraph {
    assert!(n >= 1);
    let mut pairs = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        pairs.push((order[i], parent));
    }
    let mut candidates = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            candidates.push((i, j));
        }
    }
    candidates.shuffle(rng);
    let mut g = SimpleGraph::from_edge_list(&pairs, Some(n)).unwrap();
    for (u, v) in candidates {
        if pairs.len() >= n - 1 + extra_edges {
            break;
        }
        if !g.has_edge(u, v) {
            pairs.push((u, v));
            g = SimpleGraph::from_edge_list(&pairs, Some(n)).unwrap();
        }
    }
    g
}

pub fn random_orientation(rng: &mut ChaCha8Rng, m: usize) -> Orientation {
    let signs: Vec<i8> = (0..m)
        .map(|_| if rng.gen::<bool>() { 1 } else { -1 })
        .collect();
    Orientation::new(signs).unwrap()
}

pub fn random_switching_set(rng: &mut ChaCha8Rng, n: usize) -> signed::SwitchingSet {
    let indices: Vec<usize> = (0..n).filter(|_| rng.gen::<bool>()).collect();
    signed::SwitchingSet::from_indices(n, &indices)
}

/// Sign vector of the antisymmetric line graph computed straight from the
/// incidence definition: for each line-graph edge, the product of the two
/// incidence entries at the shared vertex. Used as an oracle independent of
/// `signed::build_alg`'s internals for switching-class enumeration tests.
pub fn alg_signs_from_incidence(g: &SimpleGraph, o: &Orientation) -> Vec<i8> {
    let d = alg_core::incidence_matrix(g, o).unwrap();
    let lg = g.line_graph();
    lg.edges()
        .iter()
        .map(|&(e, f)| {
            let (a, b) = g.edges()[e];
            let (c, dd) = g.edges()[f];
            let shared = if a == c || a == dd { a } else { b };
            (d.get(shared, e) * d.get(shared, f)) as i8
        })
        .collect()
}
