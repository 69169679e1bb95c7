//! Randomized structural properties via proptest.

use proptest::prelude::*;

use alg_core::graph::{Orientation, SimpleGraph};
use alg_core::invariants::{triangle_census_combinatorial, triangle_census_trace};
use alg_core::signed::{build_alg, switch, SwitchingSet};
use alg_core::{from_graph6, to_graph6};

/// Arbitrary graph on up to 10 vertices as (n, edge bitmask).
fn graph_strategy() -> impl Strategy<Value = SimpleGraph> {
    (1usize..=10).prop_flat_map(|n| {
        let bits = n * (n - 1) / 2;
        (Just(n), 0u64..(1u64 << bits)).prop_map(|(n, mask)| {
            let mut pairs = Vec::new();
            let mut bit = 0;
            for j in 1..n {
                for i in 0..j {
                    if mask >> bit & 1 == 1 {
                        pairs.push((i, j));
                    }
                    bit += 1;
                }
            }
            SimpleGraph::from_edge_list(&pairs, Some(n)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graph6_round_trips(g in graph_strategy()) {
        let enc = to_graph6(&g).unwrap();
        prop_assert_eq!(from_graph6(&enc).unwrap(), g);
    }

    #[test]
    fn switching_is_an_involution(g in graph_strategy(), f_mask in any::<u64>()) {
        let alg = build_alg(&g, &Orientation::reference(g.edge_count())).unwrap();
        let n = alg.underlying().vertex_count();
        let idx: Vec<usize> = (0..n).filter(|&v| f_mask >> (v % 64) & 1 == 1).collect();
        let f = SwitchingSet::from_indices(n, &idx);
        prop_assert_eq!(switch(&switch(&alg, &f), &f), alg);
    }

    #[test]
    fn census_paths_agree(g in graph_strategy(), o_mask in any::<u64>()) {
        let o = Orientation::from_mask(g.edge_count(), o_mask);
        let alg = build_alg(&g, &o).unwrap();
        prop_assert_eq!(
            triangle_census_trace(&alg).unwrap(),
            triangle_census_combinatorial(&g)
        );
    }

    #[test]
    fn line_graph_degree_identity(g in graph_strategy()) {
        let lg = g.line_graph();
        let deg = g.degrees();
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            prop_assert_eq!(lg.degrees()[e], deg[u] + deg[v] - 2);
        }
    }
}
