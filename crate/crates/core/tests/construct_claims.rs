use berge::construct::{
    admissible_blowup_construction, c4_construction, check_claims, clique_blowup_construction, linear_construction,
    rpartite_construction, Construction,
};
use berge::detect::DetectOptions;
use berge::oracle::{search, Caps, Mode};
use berge::patterns::named_pattern;
use berge::projective::projective_incidence_graph;
use berge::Graph;

fn assert_claims(label: &str, c: &Construction) {
    let check = check_claims(c, &DetectOptions::default()).unwrap();
    assert!(check.all_ok(), "{label}: {check:?}");
}

#[test]
fn linear_grid() {
    for n in [24, 48, 96] {
        for r in 2..=5 {
            let c = linear_construction(n, r).unwrap();
            assert_claims(&format!("linear({n}, {r})"), &c);
            let class = n / r;
            for e in c.hypergraph.hyperedges() {
                for (i, &v) in e.iter().enumerate() {
                    assert_eq!(v / class, i, "one vertex per class");
                }
            }
        }
    }
}

#[test]
fn clique_blowup_grid() {
    for s in [3, 4] {
        for r in 2..=(s - 1) * (s - 1) {
            let c = clique_blowup_construction(4 * r, s, r, None).unwrap();
            assert_claims(&format!("clique_blowup(s = {s}, r = {r})"), &c);
        }
    }
    let explicit = clique_blowup_construction(24, 4, 5, Some(&[1, 3, 1])).unwrap();
    assert_claims("clique_blowup explicit factors", &explicit);
}

#[test]
fn admissible_blowup_grid() {
    for (c, t) in [(3, 1), (3, 2), (3, 3), (4, 2)] {
        for r in 2..=(c - 1) * t {
            let con = admissible_blowup_construction(4 * r, c, t, r, None).unwrap();
            assert_claims(&format!("admissible_blowup(c = {c}, t = {t}, r = {r})"), &con);
        }
    }
}

#[test]
fn rpartite_grid() {
    for (n, r) in [(6, 2), (9, 3), (8, 4), (10, 5), (7, 3)] {
        let c = rpartite_construction(n, r).unwrap();
        assert_claims(&format!("rpartite({n}, {r})"), &c);
    }
}

#[test]
fn c4_grid() {
    for q in [2, 3] {
        let base = projective_incidence_graph(q).unwrap();
        for i in 1..=3 {
            for j in 1..=3 {
                let c = c4_construction(&base, i, j).unwrap();
                assert_claims(&format!("c4(q = {q}, {i}, {j})"), &c);
            }
        }
    }
    let c6 = Graph::cycle(6).unwrap();
    assert_claims("c4(C6, 3, 2)", &c4_construction(&c6, 3, 2).unwrap());
}

#[test]
fn constructions_never_beat_the_oracle() {
    let caps = Caps::default();
    let cases: Vec<(Construction, Mode, &str)> = vec![
        (linear_construction(6, 3).unwrap(), Mode::LinearHypergraph, "K4"),
        (linear_construction(7, 3).unwrap(), Mode::LinearHypergraph, "K4"),
        (linear_construction(8, 2).unwrap(), Mode::Graph, "K3"),
        (rpartite_construction(6, 3).unwrap(), Mode::Hypergraph, "K4"),
        (rpartite_construction(4, 2).unwrap(), Mode::Graph, "K3"),
        (rpartite_construction(6, 2).unwrap(), Mode::Graph, "K3"),
        (clique_blowup_construction(8, 3, 2, None).unwrap(), Mode::Graph, "K3"),
        (c4_construction(&Graph::cycle(6).unwrap(), 1, 1).unwrap(), Mode::Graph, "C4"),
    ];
    for (c, mode, pat) in cases {
        let h = &c.hypergraph;
        let f = named_pattern(pat).unwrap();
        let r = c.claims.uniform;
        let best = search(mode, h.n(), r, &f, &caps).unwrap();
        assert!(best.value >= h.len() as u64, "{mode} n = {} r = {r} {pat}: {} < {}", h.n(), best.value, h.len());
    }
}
