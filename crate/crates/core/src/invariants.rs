//! Exact graph invariants: chromatic number, clique number and small
//! two-colour Ramsey numbers.

use rayon::prelude::*;
use serde::Serialize;

use crate::embed::{Embedder, Host, Pattern};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Exact chromatic number. Brackets `k` between a greedy clique and a greedy
/// colouring, then tests each `k` upward with backtracking.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    if g.edge_count() == 0 {
        return 1;
    }
    let adj = g.adjacency_matrix();
    let order = degree_order(g);
    let lower = greedy_clique(g, &adj, &order);
    let upper = greedy_colouring(&adj, &order);
    (lower..upper)
        .find(|&k| is_colourable(&adj, &order, k))
        .unwrap_or(upper)
}

/// True iff `g` has a proper colouring with `k` colours.
pub fn is_k_colourable(g: &Graph, k: usize) -> bool {
    if g.n() == 0 {
        return true;
    }
    is_colourable(&g.adjacency_matrix(), &degree_order(g), k)
}

fn degree_order(g: &Graph) -> Vec<usize> {
    let deg = g.degrees();
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by(|&a, &b| deg[b].cmp(&deg[a]).then(a.cmp(&b)));
    order
}

fn greedy_clique(g: &Graph, adj: &[Vec<bool>], order: &[usize]) -> usize {
    let mut best = 1;
    for &start in order {
        let mut clique = vec![start];
        for &v in order {
            if v != start && clique.iter().all(|&c| adj[v][c]) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best.min(g.n())
}

fn greedy_colouring(adj: &[Vec<bool>], order: &[usize]) -> usize {
    let n = adj.len();
    let mut colour = vec![usize::MAX; n];
    let mut used = 0;
    for &v in order {
        let mut c = 0;
        while (0..n).any(|w| adj[v][w] && colour[w] == c) {
            c += 1;
        }
        colour[v] = c;
        used = used.max(c + 1);
    }
    used
}

fn is_colourable(adj: &[Vec<bool>], order: &[usize], k: usize) -> bool {
    fn go(adj: &[Vec<bool>], order: &[usize], k: usize, i: usize, max_used: usize, colour: &mut [usize]) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        // a fresh colour is interchangeable with any other fresh colour
        let limit = k.min(max_used + 1);
        for c in 0..limit {
            if (0..adj.len()).any(|w| adj[v][w] && colour[w] == c) {
                continue;
            }
            colour[v] = c;
            if go(adj, order, k, i + 1, max_used.max(c + 1), colour) {
                return true;
            }
            colour[v] = usize::MAX;
        }
        false
    }
    if k == 0 {
        return adj.is_empty();
    }
    let mut colour = vec![usize::MAX; adj.len()];
    go(adj, order, k, 0, 0, &mut colour)
}

/// Exact clique number by branch and bound with a greedy colouring bound.
pub fn clique_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let adj = g.adjacency_matrix();
    let mut best = 1;
    let mut current = Vec::new();
    let candidates = degree_order(g);
    expand_clique(&adj, &mut current, candidates, &mut best);
    best
}

/// Orders `p` by greedy colour classes; returns vertices with the number of
/// colours used up to and including each one.
fn colour_sort(adj: &[Vec<bool>], p: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in p {
        match classes
            .iter_mut()
            .find(|class| class.iter().all(|&w| !adj[v][w]))
        {
            Some(class) => class.push(v),
            None => classes.push(vec![v]),
        }
    }
    let mut order = Vec::with_capacity(p.len());
    let mut bound = Vec::with_capacity(p.len());
    for (c, class) in classes.into_iter().enumerate() {
        for v in class {
            order.push(v);
            bound.push(c + 1);
        }
    }
    (order, bound)
}

fn expand_clique(adj: &[Vec<bool>], current: &mut Vec<usize>, p: Vec<usize>, best: &mut usize) {
    let (order, bound) = colour_sort(adj, &p);
    let mut alive: Vec<usize> = order.clone();
    for i in (0..order.len()).rev() {
        if current.len() + bound[i] <= *best {
            return;
        }
        let v = order[i];
        current.push(v);
        let next: Vec<usize> = alive.iter().copied().filter(|&w| adj[v][w]).collect();
        if next.is_empty() {
            *best = (*best).max(current.len());
        } else {
            expand_clique(adj, current, next, best);
        }
        current.pop();
        alive.retain(|&w| w != v);
    }
}

/// `F \ e`.
pub fn delete_edge(f: &Graph, e: (usize, usize)) -> Result<Graph> {
    f.delete_edge(e.0, e.1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "n")]
pub enum RamseyValue {
    Exact(usize),
    /// Every `n <= n_max` admits a colouring avoiding both patterns.
    GreaterThan(usize),
}

#[derive(Clone, Copy, Debug)]
pub struct RamseyOptions {
    pub n_max: usize,
    /// Bound on search nodes spent at any single `n`.
    pub node_limit: Option<u64>,
}

impl Default for RamseyOptions {
    fn default() -> Self {
        RamseyOptions {
            n_max: 8,
            node_limit: Some(50_000_000),
        }
    }
}

/// A red/blue colouring of `K_n`, stored as the two colour classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Colouring {
    pub red: Graph,
    pub blue: Graph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamseyLevel {
    pub n: usize,
    /// Whether some colouring of `K_n` avoids both patterns.
    pub avoidable: bool,
    pub nodes: u64,
    /// Leaves of the colouring search tree: partial colourings cut off by a
    /// monochromatic pattern, plus complete avoiding colourings reached.
    pub terminal_colourings: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamseyResult {
    pub value: RamseyValue,
    /// An avoiding colouring on the largest `n` where one was found.
    pub witness: Option<Colouring>,
    pub levels: Vec<RamseyLevel>,
}

/// Smallest `n <= n_max` such that every red/blue colouring of `K_n` has a red
/// `g1` or a blue `g2`, by exhaustive search over colourings.
///
/// The star at vertex 0 is coloured first and restricted to "all red edges
/// before all blue edges"; any colouring can be relabelled into that form by
/// permuting vertices `1..n`. Each of the `n` star prefixes is searched as an
/// independent task, so the statistics do not depend on the thread count.
pub fn ramsey_number(g1: &Graph, g2: &Graph, opts: &RamseyOptions) -> Result<RamseyResult> {
    if g1.edge_count() == 0 || g2.edge_count() == 0 {
        return Err(Error::InvalidParameter(
            "Ramsey numbers need patterns with at least one edge".into(),
        ));
    }
    let p1 = Pattern::new(g1);
    let p2 = Pattern::new(g2);
    let mut levels = Vec::new();
    let mut witness = None;
    for n in 1..=opts.n_max {
        let (level, found) = search_level(&p1, &p2, n, opts.node_limit)?;
        let avoidable = level.avoidable;
        levels.push(level);
        if !avoidable {
            return Ok(RamseyResult {
                value: RamseyValue::Exact(n),
                witness,
                levels,
            });
        }
        witness = found;
    }
    Ok(RamseyResult {
        value: RamseyValue::GreaterThan(opts.n_max),
        witness,
        levels,
    })
}

struct PrefixOutcome {
    nodes: u64,
    leaves: u64,
    witness: Option<Colouring>,
    exhausted: bool,
}

fn search_level(
    p1: &Pattern,
    p2: &Pattern,
    n: usize,
    node_limit: Option<u64>,
) -> Result<(RamseyLevel, Option<Colouring>)> {
    let edges: Vec<(usize, usize)> = Graph::complete(n).edges().to_vec();
    if edges.is_empty() {
        let witness = Colouring {
            red: Graph::empty(n),
            blue: Graph::empty(n),
        };
        let level = RamseyLevel {
            n,
            avoidable: true,
            nodes: 1,
            terminal_colourings: 1,
        };
        return Ok((level, Some(witness)));
    }
    let star = n - 1;
    let outcomes: Vec<PrefixOutcome> = (0..=star)
        .into_par_iter()
        .map(|reds| {
            let mut s = ColouringSearch::new(p1, p2, n, &edges, node_limit);
            s.run_prefix(reds, star);
            PrefixOutcome {
                nodes: s.nodes,
                leaves: s.leaves,
                witness: s.witness,
                exhausted: s.exhausted,
            }
        })
        .collect();
    let nodes: u64 = outcomes.iter().map(|o| o.nodes).sum();
    if outcomes.iter().any(|o| o.exhausted) || node_limit.is_some_and(|l| nodes > l) {
        return Err(Error::ResourceExhausted {
            what: format!("Ramsey colouring search at n = {n}"),
            limit: node_limit.unwrap_or(0),
        });
    }
    let leaves = outcomes.iter().map(|o| o.leaves).sum();
    let witness = outcomes.into_iter().find_map(|o| o.witness);
    let level = RamseyLevel {
        n,
        avoidable: witness.is_some(),
        nodes,
        terminal_colourings: leaves,
    };
    Ok((level, witness))
}

struct ColouringSearch<'a> {
    p1: &'a Pattern,
    p2: &'a Pattern,
    edges: &'a [(usize, usize)],
    red: Host,
    blue: Host,
    nodes: u64,
    leaves: u64,
    node_limit: Option<u64>,
    witness: Option<Colouring>,
    exhausted: bool,
}

impl<'a> ColouringSearch<'a> {
    fn new(p1: &'a Pattern, p2: &'a Pattern, n: usize, edges: &'a [(usize, usize)], node_limit: Option<u64>) -> Self {
        ColouringSearch {
            p1,
            p2,
            edges,
            red: Host::edgeless(n),
            blue: Host::edgeless(n),
            nodes: 0,
            leaves: 0,
            node_limit,
            witness: None,
            exhausted: false,
        }
    }

    /// Colours the first `star` edges (the star at vertex 0) with `reds` red
    /// edges followed by blue ones, then searches the rest.
    fn run_prefix(&mut self, reds: usize, star: usize) {
        for i in 0..star {
            self.nodes += 1;
            if !self.assign(i, i < reds) {
                self.leaves += 1;
                return;
            }
        }
        self.dfs(star);
    }

    /// Colours edge `i`; false if that creates a monochromatic pattern.
    fn assign(&mut self, i: usize, red: bool) -> bool {
        let (u, v) = self.edges[i];
        if red {
            self.red.add_edge(u, v);
            !creates_copy(self.p1, &self.red, u, v)
        } else {
            self.blue.add_edge(u, v);
            !creates_copy(self.p2, &self.blue, u, v)
        }
    }

    fn unassign(&mut self, i: usize, red: bool) {
        let (u, v) = self.edges[i];
        if red {
            self.red.remove_edge(u, v);
        } else {
            self.blue.remove_edge(u, v);
        }
    }

    /// Returns true once a witness has been found or the budget is gone.
    fn dfs(&mut self, i: usize) -> bool {
        if i == self.edges.len() {
            self.leaves += 1;
            self.witness = Some(self.snapshot());
            return true;
        }
        for red in [true, false] {
            self.nodes += 1;
            if self.node_limit.is_some_and(|l| self.nodes > l) {
                self.exhausted = true;
                return true;
            }
            let ok = self.assign(i, red);
            let done = if ok {
                self.dfs(i + 1)
            } else {
                self.leaves += 1;
                false
            };
            self.unassign(i, red);
            if done {
                return true;
            }
        }
        false
    }

    fn snapshot(&self) -> Colouring {
        let mut red = Vec::new();
        let mut blue = Vec::new();
        for &(u, v) in self.edges {
            if self.red.adjacent(u, v) {
                red.push((u, v));
            } else {
                blue.push((u, v));
            }
        }
        let n = self.red.n();
        Colouring {
            red: Graph::new(n, red).expect("edges of K_n"),
            blue: Graph::new(n, blue).expect("edges of K_n"),
        }
    }
}

/// Whether `host` has a copy of the pattern using the edge `uv`.
fn creates_copy(pattern: &Pattern, host: &Host, u: usize, v: usize) -> bool {
    let g = pattern.graph();
    g.edges().iter().any(|&(a, b)| {
        let mut e = Embedder::new(pattern, host);
        e.exists(&[(a, u), (b, v)]).expect("no node limit configured")
            || e.exists(&[(a, v), (b, u)]).expect("no node limit configured")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ramsey(g1: &Graph, g2: &Graph) -> RamseyValue {
        ramsey_number(g1, g2, &RamseyOptions::default()).unwrap().value
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&Graph::complete(3)), 3);
        assert_eq!(chromatic_number(&Graph::cycle(6).unwrap()), 2);
        assert_eq!(chromatic_number(&Graph::cycle(5).unwrap()), 3);
        assert_eq!(chromatic_number(&Graph::petersen()), 3);
        assert_eq!(chromatic_number(&Graph::empty(4)), 1);
        assert_eq!(chromatic_number(&Graph::complete(6)), 6);
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&Graph::empty(3)), 1);
        assert_eq!(clique_number(&Graph::complete_multipartite(&[2, 1, 1]).unwrap()), 3);
        assert_eq!(clique_number(&Graph::complete(5)), 5);
        assert_eq!(clique_number(&Graph::petersen()), 2);
    }

    #[test]
    fn small_ramsey_values() {
        let p3 = Graph::path(3);
        let k3 = Graph::complete(3);
        assert_eq!(ramsey(&p3, &p3), RamseyValue::Exact(3));
        assert_eq!(ramsey(&k3, &p3), RamseyValue::Exact(5));
        assert_eq!(ramsey(&k3, &k3), RamseyValue::Exact(6));
    }

    #[test]
    fn witness_avoids_both() {
        let k3 = Graph::complete(3);
        let p3 = Graph::path(3);
        let res = ramsey_number(&k3, &p3, &RamseyOptions::default()).unwrap();
        let w = res.witness.unwrap();
        assert_eq!(w.red.n(), 4);
        assert!(!crate::embed::contains_subgraph(&k3, &w.red));
        assert!(!crate::embed::contains_subgraph(&p3, &w.blue));
        assert_eq!(w.red.edge_count() + w.blue.edge_count(), 6);
    }

    #[test]
    fn bounded_search_reports_greater_than() {
        let k3 = Graph::complete(3);
        let opts = RamseyOptions {
            n_max: 5,
            node_limit: None,
        };
        let res = ramsey_number(&k3, &k3, &opts).unwrap();
        assert_eq!(res.value, RamseyValue::GreaterThan(5));
        assert_eq!(res.witness.unwrap().red.n(), 5);
    }

    #[test]
    fn node_budget_is_loud() {
        let k3 = Graph::complete(3);
        let opts = RamseyOptions {
            n_max: 6,
            node_limit: Some(20),
        };
        assert!(ramsey_number(&k3, &k3, &opts).unwrap_err().is_resource_limit());
    }

    #[test]
    fn rejects_edgeless() {
        assert!(ramsey_number(&Graph::empty(2), &Graph::path(2), &RamseyOptions::default()).is_err());
    }
}
