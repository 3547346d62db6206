mod common;

use std::collections::BTreeSet;

use berge::bounds::{enumerate_admissible_partitions, min_contracted_chromatic, threshold_report};
use berge::invariants::{chromatic_number, clique_number, RamseyOptions};
use berge::patterns::named_pattern;
use berge::{Graph, VertexPartition};
use common::{naive_chromatic_number, random_graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Every set partition of `0..n`, as sorted block lists.
fn all_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(v: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if v == n {
            out.push(blocks.clone());
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(v);
            go(v + 1, n, blocks, out);
            blocks[i].pop();
        }
        blocks.push(vec![v]);
        go(v + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

fn naive_admissible(f: &Graph, t: usize) -> BTreeSet<Vec<Vec<usize>>> {
    all_partitions(f.n())
        .into_iter()
        .filter(|blocks| {
            blocks.iter().all(|b| b.len() <= t)
                && blocks.iter().enumerate().all(|(i, a)| {
                    blocks[i + 1..].iter().all(|b| {
                        let between = f.edges().iter().filter(|&&(u, v)| {
                            (a.contains(&u) && b.contains(&v)) || (a.contains(&v) && b.contains(&u))
                        });
                        between.count() <= 1
                    })
                })
        })
        .collect()
}

fn as_set(parts: &[VertexPartition]) -> BTreeSet<Vec<Vec<usize>>> {
    parts.iter().map(|p| p.blocks().to_vec()).collect()
}

fn corpus() -> Vec<Graph> {
    let mut out: Vec<Graph> = ["K3", "K4", "K211", "C4", "C5", "C6", "P3", "P4", "K1,3", "K2,3"]
        .iter()
        .map(|p| named_pattern(p).unwrap())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 3..=7 {
        for _ in 0..4 {
            let g = random_graph(&mut rng, n, 0.5);
            if g.edge_count() > 0 {
                out.push(g);
            }
        }
    }
    out
}

#[test]
fn partitions_match_brute_force_and_grow_with_t() {
    for f in corpus() {
        let mut previous = BTreeSet::new();
        for t in 1..f.n() {
            let fast = enumerate_admissible_partitions(&f, t).unwrap();
            let set = as_set(&fast);
            assert_eq!(set.len(), fast.len(), "duplicates for {f}, t = {t}");
            assert_eq!(set, naive_admissible(&f, t), "{f}, t = {t}");
            assert!(previous.is_subset(&set), "{f}: t = {t} lost a partition");
            let brute_c = set
                .iter()
                .map(|b| naive_chromatic_number(&f.contract(&VertexPartition::new(f.n(), b.clone()).unwrap()).unwrap()))
                .min()
                .unwrap();
            assert_eq!(min_contracted_chromatic(&f, t).unwrap(), brute_c, "{f}, t = {t}");
            previous = set;
        }
    }
}

#[test]
fn c5_rows_cross_checked() {
    let c5 = named_pattern("C5").unwrap();
    let two = enumerate_admissible_partitions(&c5, 2).unwrap();
    assert_eq!(as_set(&two), naive_admissible(&c5, 2));
    // pairing the two ends of an edge contracts C5 to C4
    assert_eq!(min_contracted_chromatic(&c5, 2).unwrap(), 2);
}

#[test]
fn report_invariants_on_corpus() {
    let opts = RamseyOptions { n_max: 7, node_limit: Some(2_000_000) };
    for f in corpus() {
        let rep = threshold_report(&f, Some(&opts)).unwrap();
        let chi = chromatic_number(&f);
        let omega = clique_number(&f);
        if chi >= 3 {
            assert_eq!(rep.rows[0].bound, Some(chi), "{f}");
        }
        if omega >= 3 {
            let row = &rep.rows[omega - 2];
            assert_eq!(row.t, omega - 1);
            assert!(row.bound.unwrap() > (omega - 1) * (omega - 1), "{f}");
        }
        if let Some(upper) = &rep.final_upper {
            assert!(rep.final_lower.value <= upper.value, "{f}");
        }
    }
}

#[test]
fn known_thresholds() {
    let opts = RamseyOptions::default();
    let k3 = threshold_report(&Graph::complete(3), Some(&opts)).unwrap();
    assert_eq!((k3.final_lower.value, k3.final_upper.unwrap().value), (5, 5));
    let k211 = threshold_report(&named_pattern("K211").unwrap(), Some(&opts)).unwrap();
    assert_eq!(k211.final_lower.value, 7);
    let row = &k211.rows[2];
    assert_eq!((row.t, row.admissible_partition_count, row.c_t), (3, 1, 3));
}
