//! Named instance sets: the worked example graphs, the enumerated atlas
//! sample, the cubic catalog, and seeded random graphs for verification
//! sweeps.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use alg_core::graph::SimpleGraph;
use alg_core::{catalog, generators, Result};

fn graph(pairs: &[(usize, usize)]) -> SimpleGraph {
    SimpleGraph::from_edge_list(pairs, None).expect("static edge list")
}

/// The 7-vertex, 10-edge pair with equal censuses but different signed
/// inertias: (4,6,0) versus (4,5,1).
pub fn inertia_separated_pair() -> (SimpleGraph, SimpleGraph) {
    (
        graph(&[
            (0, 1),
            (0, 2),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 5),
            (2, 3),
            (2, 5),
            (2, 6),
            (3, 4),
        ]),
        graph(&[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 2),
            (2, 3),
            (2, 5),
            (3, 4),
            (4, 6),
        ]),
    )
}

/// The 7-vertex, 7-edge pair where even the signed spectrum fails to
/// separate: both inertias are (3,3,1).
pub fn inertia_blind_pair() -> (SimpleGraph, SimpleGraph) {
    (
        graph(&[(0, 1), (0, 2), (0, 5), (1, 4), (2, 3), (3, 5), (3, 6)]),
        graph(&[(0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 5), (2, 6)]),
    )
}

/// The 7-vertex, 9-edge witness pair: equal Max-Cut defect 2, frustration
/// indices 2 and 4.
pub fn defect_blind_pair() -> (SimpleGraph, SimpleGraph) {
    (
        graph(&[
            (0, 1),
            (0, 2),
            (1, 2),
            (1, 4),
            (2, 3),
            (3, 4),
            (3, 5),
            (3, 6),
            (5, 6),
        ]),
        graph(&[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 3),
            (2, 3),
            (5, 6),
        ]),
    )
}

/// All four example graphs, in pair order.
pub fn example_pair_graphs() -> Vec<SimpleGraph> {
    let (g1, g2) = inertia_separated_pair();
    let (h1, h2) = inertia_blind_pair();
    vec![g1, g2, h1, h2]
}

/// The repository's enumerated sample: connected graphs on at most `n_max`
/// vertices (one per isomorphism class) with at most `m_max` edges,
/// optionally restricted to non-bipartite ones.
pub fn atlas_sample(
    n_max: usize,
    m_max: usize,
    non_bipartite_only: bool,
) -> Result<Vec<SimpleGraph>> {
    Ok(catalog::connected_graphs_up_to(n_max)?
        .into_iter()
        .filter(|g| g.edge_count() <= m_max)
        .filter(|g| !non_bipartite_only || !g.is_bipartite())
        .collect())
}

/// Moebius ladder: the cycle C_{2k} plus its k antipodal chords; cubic for
/// k >= 3 (k = 3 is K_{3,3}).
pub fn moebius_ladder(k: usize) -> Result<SimpleGraph> {
    let n = 2 * k;
    let mut pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    pairs.extend((0..k).map(|i| (i, i + k)));
    SimpleGraph::from_edge_list(&pairs, Some(n))
}

/// Named connected cubic graphs with at most `n_max` vertices.
pub fn cubic_catalog(n_max: usize) -> Vec<(String, SimpleGraph)> {
    let mut out: Vec<(String, SimpleGraph)> = Vec::new();
    out.push(("K4".into(), generators::complete(4).expect("K4")));
    out.push((
        "K3,3".into(),
        generators::complete_multipartite(&[3, 3]).expect("K3,3"),
    ));
    for k in 3..=6 {
        out.push((format!("prism-{k}"), generators::prism(k).expect("prism")));
    }
    for k in 4..=6 {
        out.push((
            format!("moebius-{}", 2 * k),
            moebius_ladder(k).expect("ladder"),
        ));
    }
    out.push(("petersen".into(), generators::petersen()));
    out.retain(|(_, g)| g.vertex_count() <= n_max);
    out.sort_by_key(|(_, g)| g.vertex_count());
    out
}

/// Seeded random graph on `n` vertices with exactly `m` edges.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, m: usize) -> SimpleGraph {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    pairs.shuffle(rng);
    pairs.truncate(m.min(pairs.len()));
    SimpleGraph::from_edge_list(&pairs, Some(n)).expect("sampled pairs are loop-free")
}

/// Seeded sample of random graphs with edge counts up to `m_max`.
pub fn random_sample(seed: u64, count: usize, n_max: usize, m_max: usize) -> Vec<SimpleGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=n_max);
            let cap = (n * (n - 1) / 2).min(m_max);
            let m = rng.gen_range(0..=cap);
            random_graph(&mut rng, n, m)
        })
        .collect()
}
