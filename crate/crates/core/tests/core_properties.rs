mod common;

use std::collections::BTreeSet;

use berge::detect::{contains_berge, count_f_copies_in_shadow, verify_certificate};
use berge::embed::Embedder;
use berge::hypergraph::blowup;
use berge::invariants::{chromatic_number, clique_number, delete_edge, ramsey_number, RamseyOptions, RamseyValue};
use berge::patterns::named_pattern;
use berge::{Graph, Hypergraph, VertexPartition};
use common::{naive_chromatic_number, naive_clique_number};
use proptest::prelude::*;

fn hypergraph_strategy(max_n: usize, max_edges: usize) -> impl Strategy<Value = Hypergraph> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(0u32..1 << n, 0..=max_edges).prop_map(move |masks| {
            let edges: BTreeSet<Vec<usize>> = masks
                .into_iter()
                .filter(|m| m.count_ones() >= 2)
                .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
                .collect();
            Hypergraph::new(n, edges).unwrap()
        })
    })
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        prop::collection::vec(any::<bool>(), pairs.len())
            .prop_map(move |keep| Graph::new(n, pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(&p, _)| p)).unwrap())
    })
}

fn small_patterns() -> Vec<Graph> {
    ["K3", "P3", "P4", "C4", "K1,3", "K211"].iter().map(|p| named_pattern(p).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn blowup_keeps_hyperedge_count_and_completes_shadow(
        h in hypergraph_strategy(6, 5),
        seed in prop::collection::vec(1usize..=3, 6),
    ) {
        let factors = &seed[..h.n()];
        let b = blowup(&h, factors).unwrap();
        prop_assert_eq!(b.hypergraph.len(), h.len());
        prop_assert_eq!(b.hyperedge_origin.len(), h.len());
        let shadow = b.hypergraph.shadow();
        let base = h.shadow();
        let copies = |v: usize| -> Vec<usize> {
            (0..b.hypergraph.n()).filter(|&x| b.vertex_origin[x] == v).collect()
        };
        for &(u, v) in base.edges() {
            for &x in &copies(u) {
                for &y in &copies(v) {
                    prop_assert!(shadow.has_edge(x, y));
                }
            }
        }
        for v in 0..h.n() {
            if h.hyperedges().iter().any(|e| e.contains(&v)) {
                let cs = copies(v);
                for (i, &x) in cs.iter().enumerate() {
                    for &y in &cs[i + 1..] {
                        prop_assert!(shadow.has_edge(x, y));
                    }
                }
            }
        }
    }

    #[test]
    fn linear_means_one_hyperedge_per_shadow_edge(h in hypergraph_strategy(7, 6)) {
        let cover = h.pair_cover();
        prop_assert_eq!(cover.len(), h.shadow().edge_count());
        prop_assert_eq!(h.is_linear(), cover.values().all(|hs| hs.len() == 1));
    }

    #[test]
    fn contract_singletons_is_identity(g in graph_strategy(7)) {
        prop_assert_eq!(g.contract(&VertexPartition::singletons(g.n())).unwrap(), g);
    }

    #[test]
    fn clique_and_chromatic_match_brute_force(g in graph_strategy(7)) {
        let omega = clique_number(&g);
        let chi = chromatic_number(&g);
        prop_assert!(omega <= chi);
        prop_assert_eq!(omega, naive_clique_number(&g));
        prop_assert_eq!(chi, naive_chromatic_number(&g));
    }

    #[test]
    fn detection_is_sound_and_monotone(
        h in hypergraph_strategy(7, 6),
        extra in 0u32..128,
        which in 0usize..6,
    ) {
        let f = &small_patterns()[which];
        let before = contains_berge(&h, f).unwrap();
        if let Some(cert) = &before {
            prop_assert!(verify_certificate(&h, f, cert));
        }
        if count_f_copies_in_shadow(&h, f) == 0 {
            prop_assert!(before.is_none());
        }
        let n = h.n();
        let e: Vec<usize> = (0..n).filter(|&i| extra >> i & 1 == 1).collect();
        if e.len() >= 2 && !h.hyperedges().contains(&e) {
            let mut edges = h.hyperedges().to_vec();
            edges.push(e);
            let bigger = Hypergraph::new(n, edges).unwrap();
            let after = contains_berge(&bigger, f).unwrap();
            prop_assert!(before.is_none() || after.is_some());
        }
    }

    #[test]
    fn heavily_covered_shadow_copy_gives_certificate(h in hypergraph_strategy(6, 6), which in 0usize..6) {
        let f = &small_patterns()[which];
        let cover = h.pair_cover();
        let m = f.edge_count();
        let host = berge::embed::Host::new(&h.shadow());
        let pattern = berge::embed::Pattern::new(f);
        let mut rich = false;
        let _ = Embedder::new(&pattern, &host).for_each(&[], |map| {
            let ok = f.edges().iter().all(|&(u, v)| {
                let key = (map[u].min(map[v]), map[u].max(map[v]));
                cover.get(&key).map_or(0, Vec::len) >= m
            });
            if ok {
                rich = true;
                std::ops::ControlFlow::Break(())
            } else {
                std::ops::ControlFlow::Continue(())
            }
        });
        if rich {
            prop_assert!(contains_berge(&h, f).unwrap().is_some());
        }
    }
}

#[test]
fn ramsey_symmetry_swaps_colours() {
    let opts = RamseyOptions::default();
    let pats: Vec<Graph> = ["K3", "P3", "P4", "C4", "K1,3"].iter().map(|p| named_pattern(p).unwrap()).collect();
    for a in &pats {
        for b in &pats {
            let ab = ramsey_number(a, b, &opts).unwrap();
            let ba = ramsey_number(b, a, &opts).unwrap();
            assert_eq!(ab.value, ba.value, "{a} {b}");
            if let (Some(x), Some(y)) = (&ab.witness, &ba.witness) {
                // swapping colours turns a witness for (a, b) into one for (b, a)
                let (red, blue) = (&x.blue, &x.red);
                assert!(!common::naive_contains_subgraph(b, red));
                assert!(!common::naive_contains_subgraph(a, blue));
                assert_eq!(x.red.n(), y.red.n());
            }
        }
    }
}

#[test]
fn ramsey_monotone_under_edge_deletion() {
    let opts = RamseyOptions::default();
    let exact = |g1: &Graph, g2: &Graph| match ramsey_number(g1, g2, &opts).unwrap().value {
        RamseyValue::Exact(n) => n,
        RamseyValue::GreaterThan(n) => panic!("unresolved up to {n}"),
    };
    for (a, b) in [("K3", "K3"), ("K3", "C4"), ("C4", "C4"), ("K211", "K3"), ("P4", "K3")] {
        let g1 = named_pattern(a).unwrap();
        let g2 = named_pattern(b).unwrap();
        let full = exact(&g1, &g2);
        for &e in g1.edges() {
            let smaller = delete_edge(&g1, e).unwrap();
            if smaller.edge_count() > 0 {
                assert!(exact(&smaller, &g2) <= full, "R({a} - {e:?}, {b})");
            }
        }
    }
}

#[test]
fn ramsey_witness_avoids_both_patterns() {
    let k3 = Graph::complete(3);
    let res = ramsey_number(&k3, &k3, &RamseyOptions::default()).unwrap();
    let w = res.witness.unwrap();
    assert_eq!(w.red.n(), 5);
    assert_eq!(w.red.edge_count() + w.blue.edge_count(), 10);
    assert!(!common::naive_contains_subgraph(&k3, &w.red));
    assert!(!common::naive_contains_subgraph(&k3, &w.blue));
}
