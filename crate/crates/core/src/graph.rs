//! Simple undirected graphs, vertex partitions and contraction.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically and
/// free of duplicates, so two equal graphs always serialize identically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        Graph::new(raw.n, raw.edges)
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, out-of-range endpoints and
    /// duplicate edges (in either orientation).
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            let e = (u.min(v), u.max(v));
            if !set.insert(e) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge ({}, {})",
                    e.0, e.1
                )));
            }
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph { n, edges }
    }

    /// Path on `n` vertices (`n - 1` edges).
    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        Graph { n, edges }
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
        }
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// Complete multipartite graph with the given part sizes; parts occupy
    /// consecutive label ranges.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidParameter("part sizes must be positive".into()));
        }
        let part_of: Vec<usize> = parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| std::iter::repeat_n(i, p))
            .collect();
        let n = part_of.len();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    edges.push((u, v));
                }
            }
        }
        Ok(Graph { n, edges })
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, edges).expect("petersen graph is simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Sorted neighbor lists.
    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn adjacency_matrix(&self) -> Vec<Vec<bool>> {
        let mut m = vec![vec![false; self.n]; self.n];
        for &(u, v) in &self.edges {
            m[u][v] = true;
            m[v][u] = true;
        }
        m
    }

    /// Returns `F \ e`: same vertex set, one edge removed.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let e = (u.min(v), u.max(v));
        match self.edges.binary_search(&e) {
            Ok(pos) => {
                let mut edges = self.edges.clone();
                edges.remove(pos);
                Ok(Graph { n: self.n, edges })
            }
            Err(_) => Err(Error::InvalidParameter(format!(
                "edge ({}, {}) is not in the graph",
                e.0, e.1
            ))),
        }
    }

    /// A proper 2-colouring if one exists. Each component's smallest vertex
    /// gets colour 0.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let adj = self.neighbors();
        let mut colour: Vec<Option<u8>> = vec![None; self.n];
        for start in 0..self.n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(0);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                let cu = colour[u].unwrap();
                for &w in &adj[u] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(1 - cu);
                            stack.push(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.neighbors();
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Graph blowup: vertex `i` becomes `factors[i]` independent copies and
    /// every edge becomes a complete bipartite graph between copy sets.
    pub fn blowup(&self, factors: &[usize]) -> Result<Graph> {
        if factors.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "expected {} blowup factors, got {}",
                self.n,
                factors.len()
            )));
        }
        if factors.contains(&0) {
            return Err(Error::InvalidParameter("blowup factors must be >= 1".into()));
        }
        let mut offset = Vec::with_capacity(self.n);
        let mut total = 0;
        for &w in factors {
            offset.push(total);
            total += w;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            for a in 0..factors[u] {
                for b in 0..factors[v] {
                    edges.push((offset[u] + a, offset[v] + b));
                }
            }
        }
        Graph::new(total, edges)
    }

    /// Collapses each block of `partition` into one vertex. Blocks are
    /// numbered in the partition's canonical order; intra-block edges vanish.
    pub fn contract(&self, partition: &VertexPartition) -> Result<Graph> {
        if partition.n() != self.n {
            return Err(Error::InvalidPartition(format!(
                "partition covers {} vertices, graph has {}",
                partition.n(),
                self.n
            )));
        }
        let block_of = partition.block_index();
        let mut edges = BTreeSet::new();
        for &(u, v) in &self.edges {
            let (a, b) = (block_of[u], block_of[v]);
            if a != b {
                edges.insert((a.min(b), a.max(b)));
            }
        }
        Ok(Graph {
            n: partition.blocks().len(),
            edges: edges.into_iter().collect(),
        })
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter("permutation has wrong length".into()));
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Isomorphism-invariant relabelling: two graphs are isomorphic iff their
    /// canonical forms are equal.
    ///
    /// Vertices are placed one position at a time; the code is the sequence of
    /// adjacency rows to earlier positions, and the lexicographically largest
    /// code wins. Interchangeable twins are only tried once per position.
    pub fn canonical_form(&self) -> Graph {
        let adj = self.adjacency_matrix();
        let mut search = CanonSearch {
            adj: &adj,
            order: Vec::with_capacity(self.n),
            used: vec![false; self.n],
            code: Vec::new(),
            best: None,
        };
        search.run();
        let order = search.best.map(|(_, o)| o).unwrap_or_default();
        let mut perm = vec![0; self.n];
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos;
        }
        self.relabel(&perm).expect("placement order is a permutation")
    }
}

struct CanonSearch<'a> {
    adj: &'a [Vec<bool>],
    order: Vec<usize>,
    used: Vec<bool>,
    code: Vec<bool>,
    best: Option<(Vec<bool>, Vec<usize>)>,
}

impl CanonSearch<'_> {
    fn twins(&self, u: usize, v: usize) -> bool {
        (0..self.adj.len()).all(|x| x == u || x == v || self.adj[u][x] == self.adj[v][x])
    }

    fn run(&mut self) {
        let n = self.adj.len();
        if self.order.len() == n {
            if self.best.as_ref().is_none_or(|(b, _)| self.code > *b) {
                self.best = Some((self.code.clone(), self.order.clone()));
            }
            return;
        }
        let mut tried: Vec<usize> = Vec::new();
        for v in 0..n {
            if self.used[v] || tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let start = self.code.len();
            for i in 0..self.order.len() {
                self.code.push(self.adj[v][self.order[i]]);
            }
            let keep = match &self.best {
                None => true,
                Some((b, _)) => self.code[..] >= b[..self.code.len()],
            };
            if keep {
                self.order.push(v);
                self.used[v] = true;
                self.run();
                self.used[v] = false;
                self.order.pop();
            }
            self.code.truncate(start);
        }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// A partition of `0..n` into nonempty disjoint blocks.
///
/// Blocks are kept sorted internally and ordered by their smallest element,
/// which is the order a restricted-growth string produces.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct VertexPartition {
    #[serde(skip)]
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &v in b {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex {v} outside 0..{n}")));
                }
                if seen[v] {
                    return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(VertexPartition { n, blocks })
    }

    pub fn singletons(n: usize) -> Self {
        VertexPartition {
            n,
            blocks: (0..n).map(|v| vec![v]).collect(),
        }
    }

    /// Builds a partition from a restricted-growth string (`rgs[0] == 0`,
    /// `rgs[i] <= 1 + max(rgs[..i])`).
    pub fn from_rgs(rgs: &[usize]) -> Result<Self> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (v, &b) in rgs.iter().enumerate() {
            if b > blocks.len() {
                return Err(Error::InvalidPartition(format!(
                    "not a restricted-growth string at position {v}"
                )));
            }
            if b == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[b].push(v);
        }
        Ok(VertexPartition {
            n: rgs.len(),
            blocks,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// `block_index()[v]` is the position of `v`'s block.
    pub fn block_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                idx[v] = i;
            }
        }
        idx
    }

    pub fn max_block_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).max().unwrap_or(0)
    }
}
