//! Slow, direct reference implementations used to cross-check the library.

#![allow(dead_code)]

use berge::{Graph, Hypergraph};
use rand::Rng;

/// Calls `visit` with every injective map `0..k -> 0..n`.
pub fn injections(n: usize, k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn go(n: usize, k: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return visit(cur);
        }
        for x in 0..n {
            if !cur.contains(&x) {
                cur.push(x);
                if go(n, k, cur, visit) {
                    return true;
                }
                cur.pop();
            }
        }
        false
    }
    go(n, k, &mut Vec::new(), visit)
}

/// Berge-F by definition: some injective psi on vertices and injective phi on
/// edges with both endpoint images inside the assigned hyperedge.
pub fn naive_contains_berge(h: &Hypergraph, f: &Graph) -> bool {
    let m = f.edge_count();
    if f.n() > h.n() || m > h.len() {
        return false;
    }
    let edges = f.edges().to_vec();
    let hyper = h.hyperedges().to_vec();
    injections(h.n(), f.n(), &mut |psi| {
        let mut used = vec![false; hyper.len()];
        assign_edges(&edges, &hyper, psi, &mut used)
    })
}

/// Tries every injective choice of hyperedge for the remaining pattern edges.
fn assign_edges(edges: &[(usize, usize)], hyper: &[Vec<usize>], psi: &[usize], used: &mut [bool]) -> bool {
    let Some((&(u, v), rest)) = edges.split_first() else {
        return true;
    };
    for i in 0..hyper.len() {
        if used[i] || !hyper[i].contains(&psi[u]) || !hyper[i].contains(&psi[v]) {
            continue;
        }
        used[i] = true;
        let ok = assign_edges(rest, hyper, psi, used);
        used[i] = false;
        if ok {
            return true;
        }
    }
    false
}

pub fn naive_contains_subgraph(f: &Graph, g: &Graph) -> bool {
    if f.n() > g.n() {
        return false;
    }
    injections(g.n(), f.n(), &mut |psi| f.edges().iter().all(|&(u, v)| g.has_edge(psi[u], psi[v])))
}

pub fn naive_chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let total = k.pow(n as u32);
        for code in 0..total {
            let mut col = vec![0; n];
            let mut rest = code;
            for c in col.iter_mut() {
                *c = rest % k;
                rest /= k;
            }
            if g.edges().iter().all(|&(u, v)| col[u] != col[v]) {
                return k;
            }
        }
    }
    n
}

pub fn naive_clique_number(g: &Graph) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|&mask| {
            (0..n).all(|u| (u + 1..n).all(|v| mask >> u & 1 == 0 || mask >> v & 1 == 0 || g.has_edge(u, v)))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// All `k`-subsets of `0..n`, lexicographic.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize == k {
            out.push((0..n).filter(|&i| mask >> i & 1 == 1).collect());
        }
    }
    out.sort();
    out
}

pub fn clique_count(g: &Graph, r: usize) -> u64 {
    k_subsets(g.n(), r)
        .iter()
        .filter(|s| s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| g.has_edge(u, v))))
        .count() as u64
}

/// `ex_r(n, F)` (or the linear version) over every family of `r`-sets.
pub fn naive_ex_r(n: usize, r: usize, f: &Graph, linear: bool) -> u64 {
    let sets = k_subsets(n, r);
    let mut best = 0;
    for mask in 0u64..1 << sets.len() {
        let size = mask.count_ones() as u64;
        if size <= best {
            continue;
        }
        let chosen: Vec<Vec<usize>> =
            (0..sets.len()).filter(|&i| mask >> i & 1 == 1).map(|i| sets[i].clone()).collect();
        if linear && !pairwise_linear(&chosen) {
            continue;
        }
        let h = Hypergraph::new(n, chosen).unwrap();
        if !naive_contains_berge(&h, f) {
            best = size;
        }
    }
    best
}

fn pairwise_linear(sets: &[Vec<usize>]) -> bool {
    sets.iter().enumerate().all(|(i, a)| {
        sets[i + 1..].iter().all(|b| a.iter().filter(|x| b.contains(x)).count() <= 1)
    })
}

/// Max of `score` over all `F`-free graphs on `n` vertices.
pub fn naive_graph_max(n: usize, f: &Graph, score: impl Fn(&Graph) -> u64) -> u64 {
    let pairs = k_subsets(n, 2);
    let mut best = 0;
    for mask in 0u64..1 << pairs.len() {
        let g = Graph::new(
            n,
            (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| (pairs[i][0], pairs[i][1])),
        )
        .unwrap();
        let s = score(&g);
        if s > best && !naive_contains_subgraph(f, &g) {
            best = s;
        }
    }
    best
}

pub fn naive_turan(n: usize, f: &Graph) -> u64 {
    naive_graph_max(n, f, |g| g.edge_count() as u64)
}

pub fn naive_generalized(n: usize, r: usize, f: &Graph) -> u64 {
    naive_graph_max(n, f, |g| clique_count(g, r))
}

/// Random hypergraph on `n` vertices with `m` hyperedges of size 2..=max_size.
pub fn random_hypergraph(rng: &mut impl Rng, n: usize, m: usize, max_size: usize) -> Hypergraph {
    let edges: std::collections::BTreeSet<Vec<usize>> = (0..m)
        .map(|_| {
            let size = rng.gen_range(2..=max_size.min(n));
            let mut verts: Vec<usize> = (0..n).collect();
            for i in 0..size {
                let j = rng.gen_range(i..n);
                verts.swap(i, j);
            }
            verts.truncate(size);
            verts.sort_unstable();
            verts
        })
        .collect();
    Hypergraph::new(n, edges).unwrap()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).unwrap()
}
