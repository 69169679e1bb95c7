//! Signed-graph invariants over exhaustive desk-scale catalogs: the
//! underlying graph of the antisymmetric line graph, orientation/switching
//! commutation, switching-class enumeration, balance, and cycle-sign audits.

mod support;

use std::collections::HashSet;

use alg_core::graph::Orientation;
use alg_core::signed::{
    self, audit_induced_cycle_signs, build_alg, cycle_sign, is_balanced, lifted_cycle_parity_check,
    switch, switching_class_size,
};
use alg_core::{catalog, cycles, generators};
use num_bigint::BigUint;

#[test]
fn underlying_graph_is_the_line_graph() {
    let mut rng = support::rng(0xa161);
    for g in support::connected_up_to_7() {
        let o = support::random_orientation(&mut rng, g.edge_count());
        let alg = build_alg(g, &o).unwrap();
        assert_eq!(alg.underlying(), &g.line_graph());
        // |S| equals the line-graph adjacency matrix
        let s = signed::signed_adjacency_matrix(&alg);
        let a = g.line_graph().adjacency_matrix();
        for i in 0..s.dim() {
            for j in 0..s.dim() {
                assert_eq!(s.get(i, j).abs(), a.get(i, j));
            }
        }
    }
}

#[test]
fn shifted_adjacency_is_the_incidence_gram_matrix() {
    // S + 2I == D^T D entrywise, over random graphs and orientations
    let mut rng = support::rng(0x2a2a);
    for _ in 0..50 {
        let n = rand::Rng::gen_range(&mut rng, 1..9);
        let m_max = n * (n - 1) / 2;
        let m = rand::Rng::gen_range(&mut rng, 0..=m_max);
        let g = support::random_graph(&mut rng, n, m);
        let o = support::random_orientation(&mut rng, g.edge_count());
        let alg = build_alg(&g, &o).unwrap();
        let shifted = signed::signed_adjacency_matrix(&alg).shift_diagonal(2.0);
        let d = alg_core::incidence_matrix(&g, &o).unwrap();
        for e in 0..m {
            for f in 0..m {
                let gram: i64 = (0..n).map(|v| d.get(v, e) * d.get(v, f)).sum();
                assert_eq!(shifted.get(e, f), gram as f64, "entry ({e}, {f}) of {g:?}");
            }
        }
    }
}

#[test]
fn orientation_switch_commutation_random() {
    let mut rng = support::rng(0xc0c0);
    for _ in 0..200 {
        let n = rand::Rng::gen_range(&mut rng, 2..8);
        let m_max = n * (n - 1) / 2;
        let m = rand::Rng::gen_range(&mut rng, 1..=m_max);
        let g = support::random_graph(&mut rng, n, m);
        let o = support::random_orientation(&mut rng, g.edge_count());
        let f: Vec<usize> = (0..g.edge_count())
            .filter(|_| rand::Rng::gen::<bool>(&mut rng))
            .collect();
        assert!(signed::orientation_switch_consistency(&g, &o, &f).unwrap());
    }
}

#[test]
fn orientations_reach_exactly_the_switching_class() {
    // over all orientations, the number of distinct sign vectors equals
    // 2^(m - c(L(g))); signs computed from the incidence oracle. The
    // disconnected graphs matter here: the quotient is per line-graph
    // component.
    let mut instances: Vec<_> = support::connected_up_to_7().to_vec();
    for n in 1..=6 {
        instances.extend(
            catalog::all_graphs(n)
                .unwrap()
                .into_iter()
                .filter(|g| !g.is_connected()),
        );
    }
    for g in &instances {
        let m = g.edge_count();
        if m > 8 {
            continue;
        }
        let mut reachable: HashSet<Vec<i8>> = HashSet::new();
        for mask in 0u64..1 << m {
            let o = Orientation::from_mask(m, mask);
            reachable.insert(support::alg_signs_from_incidence(g, &o));
        }
        assert_eq!(
            BigUint::from(reachable.len()),
            switching_class_size(g),
            "class size mismatch on {g:?}"
        );
    }
}

#[test]
fn balance_equals_bipartiteness_up_to_7() {
    for g in support::connected_up_to_7() {
        let alg = build_alg(g, &Orientation::reference(g.edge_count())).unwrap();
        assert_eq!(
            is_balanced(&alg),
            g.is_bipartite(),
            "balance mismatch on {g:?}"
        );
    }
}

#[test]
fn cycle_sign_is_switching_invariant() {
    let mut rng = support::rng(0x5151);
    let mut tested = 0;
    while tested < 100 {
        let n = rand::Rng::gen_range(&mut rng, 3..8);
        let extra = rand::Rng::gen_range(&mut rng, 1..4);
        let g = support::random_connected_graph(&mut rng, n, extra);
        let all_cycles = cycles::simple_cycles_up_to(&g, n);
        if all_cycles.is_empty() {
            continue;
        }
        let o = support::random_orientation(&mut rng, g.edge_count());
        let alg = build_alg(&g, &o).unwrap();
        let cyc = &all_cycles[rand::Rng::gen_range(&mut rng, 0..all_cycles.len())];
        let lifted: Vec<usize> = (0..cyc.len())
            .map(|i| g.edge_index(cyc[i], cyc[(i + 1) % cyc.len()]).unwrap())
            .collect();
        let base = cycle_sign(&alg, &lifted).unwrap();
        let f = support::random_switching_set(&mut rng, alg.underlying().vertex_count());
        assert_eq!(cycle_sign(&switch(&alg, &f), &lifted).unwrap(), base);
        tested += 1;
    }
}

#[test]
fn cycle_parity_up_to_7() {
    for g in support::connected_up_to_7() {
        assert!(
            lifted_cycle_parity_check(g).unwrap(),
            "parity failed on {g:?}"
        );
    }
}

#[test]
fn induced_cycle_audit_clean_up_to_7() {
    let mut rng = support::rng(0xadce);
    for g in support::connected_up_to_7() {
        let o = support::random_orientation(&mut rng, g.edge_count());
        let alg = build_alg(g, &o).unwrap();
        let violations = audit_induced_cycle_signs(&alg, 7).unwrap();
        assert!(
            violations.is_empty(),
            "audit violations on {g:?}: {violations:?}"
        );
    }
}

#[test]
fn normal_form_is_canonical_across_the_class() {
    // all orientations of a graph produce the same normal form
    let g = generators::complete(4).unwrap();
    let mut forms = HashSet::new();
    for mask in 0u64..1 << 6 {
        let o = Orientation::from_mask(6, mask);
        let alg = build_alg(&g, &o).unwrap();
        forms.insert(signed::switching_normal_form(&alg).0.signs().to_vec());
    }
    assert_eq!(forms.len(), 1);
}

#[test]
fn catalog_counts_are_stable() {
    // pin the catalog sizes the sweeps below rely on
    assert_eq!(support::connected_up_to_7().len(), 996);
    assert_eq!(catalog::connected_graphs(7).unwrap().len(), 853);
}
