//! Backtracking enumeration of injective, edge-preserving maps from a small
//! pattern graph into a host graph (non-induced subgraph embeddings).
//!
//! Pattern vertices are assigned in a fixed order: pinned vertices first, then
//! the rest by descending degree with ties broken by label. Host candidates
//! are always tried in ascending label order, so enumeration order is fully
//! deterministic.

use std::ops::ControlFlow;

use crate::graph::Graph;

/// Host graph in a form suited to repeated adjacency queries.
#[derive(Clone, Debug)]
pub struct Host {
    n: usize,
    adj: Vec<Vec<bool>>,
    nbrs: Vec<Vec<usize>>,
}

impl Host {
    pub fn new(g: &Graph) -> Self {
        Host {
            n: g.n(),
            adj: g.adjacency_matrix(),
            nbrs: g.neighbors(),
        }
    }

    /// An edgeless host on `n` vertices, to be filled with [`Host::add_edge`].
    pub fn edgeless(n: usize) -> Self {
        Host {
            n,
            adj: vec![vec![false; n]; n],
            nbrs: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    /// Inserts `uv`, keeping neighbor lists sorted. No-op if present.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if self.adj[u][v] {
            return;
        }
        self.adj[u][v] = true;
        self.adj[v][u] = true;
        let pos = self.nbrs[u].binary_search(&v).unwrap_err();
        self.nbrs[u].insert(pos, v);
        let pos = self.nbrs[v].binary_search(&u).unwrap_err();
        self.nbrs[v].insert(pos, u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if !self.adj[u][v] {
            return;
        }
        self.adj[u][v] = false;
        self.adj[v][u] = false;
        if let Ok(pos) = self.nbrs[u].binary_search(&v) {
            self.nbrs[u].remove(pos);
        }
        if let Ok(pos) = self.nbrs[v].binary_search(&u) {
            self.nbrs[v].remove(pos);
        }
    }

    fn degree(&self, u: usize) -> usize {
        self.nbrs[u].len()
    }
}

/// Pattern graph with its precomputed default vertex order.
#[derive(Clone, Debug)]
pub struct Pattern {
    graph: Graph,
    nbrs: Vec<Vec<usize>>,
    deg: Vec<usize>,
    order: Vec<usize>,
}

impl Pattern {
    pub fn new(g: &Graph) -> Self {
        let deg = g.degrees();
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.sort_by(|&a, &b| deg[b].cmp(&deg[a]).then(a.cmp(&b)));
        Pattern {
            graph: g.clone(),
            nbrs: g.neighbors(),
            deg,
            order,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// The default assignment order (degree descending, ties by label).
    pub fn order(&self) -> &[usize] {
        &self.order
    }
}

/// Signals that an enumeration stopped because of its node limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LimitReached;

/// Stateful enumerator; tracks the number of search nodes visited.
pub struct Embedder<'a> {
    pattern: &'a Pattern,
    host: &'a Host,
    node_limit: Option<u64>,
    nodes: u64,
}

const UNMAPPED: usize = usize::MAX;

impl<'a> Embedder<'a> {
    pub fn new(pattern: &'a Pattern, host: &'a Host) -> Self {
        Embedder {
            pattern,
            host,
            node_limit: None,
            nodes: 0,
        }
    }

    pub fn with_node_limit(mut self, limit: Option<u64>) -> Self {
        self.node_limit = limit;
        self
    }

    /// Search nodes visited so far (one per tentative vertex assignment).
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    /// Calls `visit` with every embedding `map` (pattern vertex -> host vertex)
    /// that agrees with the pinned assignments in `pinned`. Stops early when
    /// `visit` breaks.
    pub fn for_each<F>(
        &mut self,
        pinned: &[(usize, usize)],
        mut visit: F,
    ) -> Result<ControlFlow<()>, LimitReached>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let pn = self.pattern.n();
        if pn > self.host.n {
            return Ok(ControlFlow::Continue(()));
        }
        let mut map = vec![UNMAPPED; pn];
        let mut used = vec![false; self.host.n];
        for &(p, h) in pinned {
            if h >= self.host.n || used[h] || map[p] != UNMAPPED {
                return Ok(ControlFlow::Continue(()));
            }
            map[p] = h;
            used[h] = true;
        }
        // Pinned vertices must already be consistent with each other.
        for &(p, h) in pinned {
            for &q in &self.pattern.nbrs[p] {
                if map[q] != UNMAPPED && !self.host.adj[h][map[q]] {
                    return Ok(ControlFlow::Continue(()));
                }
            }
        }
        let order: Vec<usize> = self
            .pattern
            .order
            .iter()
            .copied()
            .filter(|&p| map[p] == UNMAPPED)
            .collect();
        self.extend(&order, 0, &mut map, &mut used, &mut visit)
    }

    /// True iff at least one embedding agrees with `pinned`.
    pub fn exists(&mut self, pinned: &[(usize, usize)]) -> Result<bool, LimitReached> {
        Ok(self.for_each(pinned, |_| ControlFlow::Break(()))?.is_break())
    }

    /// Number of embeddings (labeled copies).
    pub fn count(&mut self) -> Result<u64, LimitReached> {
        let mut total = 0u64;
        let _ = self.for_each(&[], |_| {
            total += 1;
            ControlFlow::Continue(())
        })?;
        Ok(total)
    }

    fn extend<F>(
        &mut self,
        order: &[usize],
        depth: usize,
        map: &mut [usize],
        used: &mut [bool],
        visit: &mut F,
    ) -> Result<ControlFlow<()>, LimitReached>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if depth == order.len() {
            return Ok(visit(map));
        }
        let p = order[depth];
        let mapped: Vec<usize> = self.pattern.nbrs[p]
            .iter()
            .filter(|&&q| map[q] != UNMAPPED)
            .map(|&q| map[q])
            .collect();
        let host = self.host;
        let all: Vec<usize>;
        let candidates: &[usize] = match mapped.first() {
            Some(&anchor) => &host.nbrs[anchor],
            None => {
                all = (0..host.n).collect();
                &all
            }
        };
        let need = self.pattern.deg[p];
        for &h in candidates {
            if used[h] || host.degree(h) < need {
                continue;
            }
            if mapped.len() > 1 && !mapped[1..].iter().all(|&m| host.adj[h][m]) {
                continue;
            }
            self.nodes += 1;
            if let Some(limit) = self.node_limit {
                if self.nodes > limit {
                    return Err(LimitReached);
                }
            }
            map[p] = h;
            used[h] = true;
            let flow = self.extend(order, depth + 1, map, used, visit)?;
            map[p] = UNMAPPED;
            used[h] = false;
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

/// True iff `host` contains a (not necessarily induced) copy of `pattern`.
pub fn contains_subgraph(pattern: &Graph, host: &Graph) -> bool {
    let p = Pattern::new(pattern);
    let h = Host::new(host);
    Embedder::new(&p, &h)
        .exists(&[])
        .expect("no node limit configured")
}

/// Number of automorphisms of `g`, counted as embeddings of `g` into itself
/// (equal edge counts force each such embedding to be a bijection on edges).
pub fn automorphism_count(g: &Graph) -> u64 {
    let p = Pattern::new(g);
    let h = Host::new(g);
    Embedder::new(&p, &h).count().expect("no node limit configured")
}

/// All automorphisms of `g` as vertex permutations, in enumeration order.
pub fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let p = Pattern::new(g);
    let h = Host::new(g);
    let mut out = Vec::new();
    let _ = Embedder::new(&p, &h)
        .for_each(&[], |m| {
            out.push(m.to_vec());
            ControlFlow::Continue(())
        })
        .expect("no node limit configured");
    out
}

/// Edge orbits of `g` under its automorphism group, each listed as the sorted
/// set of edge indices; orbits are ordered by their smallest edge.
pub fn edge_orbits(g: &Graph) -> Vec<Vec<usize>> {
    let autos = automorphisms(g);
    let edges = g.edges();
    let mut orbit_of = vec![usize::MAX; edges.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for i in 0..edges.len() {
        if orbit_of[i] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut members = Vec::new();
        let (u, v) = edges[i];
        for a in &autos {
            let (x, y) = (a[u], a[v]);
            let j = edges
                .binary_search(&(x.min(y), x.max(y)))
                .expect("automorphism maps edges to edges");
            if orbit_of[j] == usize::MAX {
                orbit_of[j] = id;
                members.push(j);
            }
        }
        members.sort_unstable();
        orbits.push(members);
    }
    orbits
}
