//! Triangle census invariants: dual-path agreement, degree-sequence
//! dependence, switching invariance, and the line-graph triangle identity.

mod support;

use alg_core::graph::{Orientation, SimpleGraph};
use alg_core::invariants::{triangle_census_combinatorial, triangle_census_trace};
use alg_core::signed::{build_alg, switch};

#[test]
fn dual_census_agreement_up_to_7() {
    let mut rng = support::rng(0xd0c5);
    for g in support::connected_up_to_7() {
        let o = support::random_orientation(&mut rng, g.edge_count());
        let alg = build_alg(g, &o).unwrap();
        assert_eq!(
            triangle_census_trace(&alg).unwrap(),
            triangle_census_combinatorial(g),
            "census mismatch on {g:?}"
        );
    }
}

#[test]
fn dual_census_agreement_random_larger() {
    let mut rng = support::rng(0xd0c6);
    for _ in 0..500 {
        let n = rand::Rng::gen_range(&mut rng, 2..11);
        let m_max = n * (n - 1) / 2;
        let m = rand::Rng::gen_range(&mut rng, 0..=m_max);
        let g = support::random_graph(&mut rng, n, m);
        let o = support::random_orientation(&mut rng, g.edge_count());
        let alg = build_alg(&g, &o).unwrap();
        assert_eq!(
            triangle_census_trace(&alg).unwrap(),
            triangle_census_combinatorial(&g)
        );
    }
}

#[test]
fn census_depends_only_on_degrees_and_triangles() {
    // pairs of non-isomorphic graphs sharing degree sequence and triangle
    // count must share the whole census
    let pairs = [
        (
            SimpleGraph::from_edge_list(
                &[
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
                ],
                None,
            )
            .unwrap(),
            SimpleGraph::from_edge_list(
                &[
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
                ],
                None,
            )
            .unwrap(),
        ),
        (
            SimpleGraph::from_edge_list(
                &[(0, 1), (0, 2), (0, 5), (1, 4), (2, 3), (3, 5), (3, 6)],
                None,
            )
            .unwrap(),
            SimpleGraph::from_edge_list(
                &[(0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 5), (2, 6)],
                None,
            )
            .unwrap(),
        ),
    ];
    for (a, b) in &pairs {
        assert_ne!(a, b);
        let mut da = a.degrees();
        let mut db = b.degrees();
        da.sort_unstable();
        db.sort_unstable();
        assert_eq!(da, db);
        assert_eq!(a.triangle_count(), b.triangle_count());
        assert_eq!(
            triangle_census_combinatorial(a),
            triangle_census_combinatorial(b)
        );
    }
}

#[test]
fn census_is_switching_invariant_random() {
    let mut rng = support::rng(0x5e5e);
    for _ in 0..50 {
        let n = rand::Rng::gen_range(&mut rng, 3..8);
        let m_max = n * (n - 1) / 2;
        let m = rand::Rng::gen_range(&mut rng, 1..=m_max);
        let g = support::random_graph(&mut rng, n, m);
        let alg = build_alg(&g, &Orientation::reference(g.edge_count())).unwrap();
        let base = triangle_census_trace(&alg).unwrap();
        let f = support::random_switching_set(&mut rng, alg.underlying().vertex_count());
        assert_eq!(triangle_census_trace(&switch(&alg, &f)).unwrap(), base);
    }
}

#[test]
fn total_equals_line_graph_triangle_count_up_to_6() {
    for g in support::connected_up_to_7() {
        if g.vertex_count() > 6 {
            continue;
        }
        let c = triangle_census_combinatorial(g);
        assert_eq!(c.total, g.line_graph().triangle_count());
    }
}
