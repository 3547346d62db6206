//! Hypergraphs, their 2-shadow, linearity, and vertex blowups.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A finite hypergraph on `0..n` with set semantics: no repeated hyperedges.
///
/// Each hyperedge is stored sorted and the hyperedge list is sorted
/// lexicographically, so hyperedge indices are canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawHypergraph")]
pub struct Hypergraph {
    n: usize,
    uniform: Option<usize>,
    hyperedges: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawHypergraph {
    n: usize,
    #[serde(default)]
    uniform: Option<usize>,
    hyperedges: Vec<Vec<usize>>,
}

impl TryFrom<RawHypergraph> for Hypergraph {
    type Error = Error;

    fn try_from(raw: RawHypergraph) -> Result<Self> {
        let h = Hypergraph::new(raw.n, raw.hyperedges)?;
        match raw.uniform {
            Some(r) => h.with_uniformity(r),
            None => Ok(h),
        }
    }
}

impl Hypergraph {
    /// Validates and canonicalizes. The uniformity tag is set automatically
    /// when the hypergraph is nonempty and all hyperedges share one size.
    pub fn new(n: usize, hyperedges: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for mut e in hyperedges {
            e.sort_unstable();
            if e.len() < 2 {
                return Err(Error::InvalidHypergraph(format!(
                    "hyperedge {e:?} has fewer than two vertices"
                )));
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidHypergraph(format!(
                    "hyperedge {e:?} repeats a vertex"
                )));
            }
            if let Some(&v) = e.last().filter(|&&v| v >= n) {
                return Err(Error::InvalidHypergraph(format!(
                    "vertex {v} outside 0..{n}"
                )));
            }
            if !set.insert(e.clone()) {
                return Err(Error::InvalidHypergraph(format!("duplicate hyperedge {e:?}")));
            }
        }
        let hyperedges: Vec<Vec<usize>> = set.into_iter().collect();
        let uniform = match hyperedges.first() {
            Some(first) if hyperedges.iter().all(|e| e.len() == first.len()) => Some(first.len()),
            _ => None,
        };
        Ok(Hypergraph {
            n,
            uniform,
            hyperedges,
        })
    }

    pub fn empty(n: usize) -> Self {
        Hypergraph {
            n,
            uniform: None,
            hyperedges: Vec::new(),
        }
    }

    /// Tags the hypergraph as `r`-uniform, failing if any hyperedge disagrees.
    pub fn with_uniformity(mut self, r: usize) -> Result<Self> {
        if let Some(e) = self.hyperedges.iter().find(|e| e.len() != r) {
            return Err(Error::InvalidHypergraph(format!(
                "hyperedge {e:?} does not have {r} vertices"
            )));
        }
        self.uniform = Some(r);
        Ok(self)
    }

    /// The edges of a graph as a 2-uniform hypergraph.
    pub fn from_graph(g: &Graph) -> Self {
        Hypergraph {
            n: g.n(),
            uniform: Some(2),
            hyperedges: g.edges().iter().map(|&(u, v)| vec![u, v]).collect(),
        }
    }

    /// Same hyperedges on a larger vertex set; the new vertices are isolated.
    pub fn with_isolated(mut self, n: usize) -> Result<Self> {
        if n < self.n {
            return Err(Error::InvalidParameter(format!(
                "cannot shrink vertex set from {} to {n}",
                self.n
            )));
        }
        self.n = n;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> Option<usize> {
        self.uniform
    }

    pub fn hyperedges(&self) -> &[Vec<usize>] {
        &self.hyperedges
    }

    pub fn len(&self) -> usize {
        self.hyperedges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperedges.is_empty()
    }

    /// The 2-shadow: `uv` is an edge iff some hyperedge contains both.
    pub fn shadow(&self) -> Graph {
        let mut pairs = BTreeSet::new();
        for e in &self.hyperedges {
            for (i, &u) in e.iter().enumerate() {
                for &v in &e[i + 1..] {
                    pairs.insert((u, v));
                }
            }
        }
        Graph::new(self.n, pairs).expect("shadow pairs come from valid hyperedges")
    }

    /// True iff any two distinct hyperedges share at most one vertex.
    pub fn is_linear(&self) -> bool {
        // A pair covered twice is exactly a violation.
        let mut seen = BTreeSet::new();
        for e in &self.hyperedges {
            for (i, &u) in e.iter().enumerate() {
                for &v in &e[i + 1..] {
                    if !seen.insert((u, v)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// For every shadow edge, the indices of the hyperedges containing it.
    pub fn pair_cover(&self) -> std::collections::BTreeMap<(usize, usize), Vec<usize>> {
        let mut cover: std::collections::BTreeMap<(usize, usize), Vec<usize>> = Default::default();
        for (idx, e) in self.hyperedges.iter().enumerate() {
            for (i, &u) in e.iter().enumerate() {
                for &v in &e[i + 1..] {
                    cover.entry((u, v)).or_default().push(idx);
                }
            }
        }
        cover
    }

    /// Whether hyperedge `idx` contains both `u` and `v`.
    pub fn contains_pair(&self, idx: usize, u: usize, v: usize) -> bool {
        let e = &self.hyperedges[idx];
        e.binary_search(&u).is_ok() && e.binary_search(&v).is_ok()
    }
}

/// Result of blowing up a hypergraph, with the "originates from" maps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Blowup {
    pub hypergraph: Hypergraph,
    /// `vertex_origin[v]` is the vertex of the original that `v` copies.
    pub vertex_origin: Vec<usize>,
    /// `hyperedge_origin[i]` is the index of the original hyperedge that
    /// blown-up hyperedge `i` comes from.
    pub hyperedge_origin: Vec<usize>,
}

/// Replaces vertex `u` by `factors[u]` fresh copies (labelled consecutively in
/// order of `u`) and each hyperedge by the union of its vertices' copies.
///
/// The result is tagged `r`-uniform when every hyperedge's factor sum is `r`.
pub fn blowup(h: &Hypergraph, factors: &[usize]) -> Result<Blowup> {
    if factors.len() != h.n() {
        return Err(Error::InvalidParameter(format!(
            "expected {} blowup factors, got {}",
            h.n(),
            factors.len()
        )));
    }
    if let Some(u) = factors.iter().position(|&w| w == 0) {
        return Err(Error::InvalidParameter(format!(
            "blowup factor for vertex {u} must be >= 1"
        )));
    }
    let mut offset = Vec::with_capacity(h.n());
    let mut vertex_origin = Vec::new();
    for (u, &w) in factors.iter().enumerate() {
        offset.push(vertex_origin.len());
        vertex_origin.extend(std::iter::repeat_n(u, w));
    }
    let expanded: Vec<Vec<usize>> = h
        .hyperedges()
        .iter()
        .map(|e| {
            e.iter()
                .flat_map(|&u| offset[u]..offset[u] + factors[u])
                .collect()
        })
        .collect();
    let mut order: Vec<usize> = (0..expanded.len()).collect();
    order.sort_by(|&a, &b| expanded[a].cmp(&expanded[b]));
    let hypergraph = Hypergraph::new(vertex_origin.len(), expanded)?;
    Ok(Blowup {
        hypergraph,
        vertex_origin,
        hyperedge_origin: order,
    })
}
