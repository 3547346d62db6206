//! Exact extremal numbers at tiny `n` by exhaustive branch and bound.
//!
//! All four searches share one scheme. Candidate objects (`r`-sets or pairs)
//! are listed in lexicographic order and the search grows a set of chosen
//! objects depth first. Freeness is hereditary, so after each insertion the
//! remaining candidates are filtered down to those that can individually be
//! added, and a branch is cut as soon as its optimistic bound cannot beat the
//! best value found. The first object is fixed to `{0, ..., r-1}` (or the
//! pair `{0, 1}`), which loses nothing up to relabelling.
//!
//! The search is serial, so node counts are reproducible. The witness is the
//! lexicographically smallest extremal object.

use std::fmt;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::detect::ThroughChecker;
use crate::embed::{Embedder, Host, Pattern};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// `ex_r(n, F)`.
    Hypergraph,
    /// `ex^L_r(n, F)`.
    LinearHypergraph,
    /// `ex(n, F)`.
    Graph,
    /// `ex(n, K_r, F)`.
    Generalized,
}

impl Mode {
    pub const ALL: [Mode; 4] = [
        Mode::Hypergraph,
        Mode::LinearHypergraph,
        Mode::Graph,
        Mode::Generalized,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mode::Hypergraph => "hypergraph",
            Mode::LinearHypergraph => "linear-hypergraph",
            Mode::Graph => "graph",
            Mode::Generalized => "generalized",
        }
    }

    pub fn parse(s: &str) -> Result<Mode> {
        match s {
            "hypergraph" => Ok(Mode::Hypergraph),
            "linear-hypergraph" | "linear" => Ok(Mode::LinearHypergraph),
            "graph" | "turan" => Ok(Mode::Graph),
            "generalized" => Ok(Mode::Generalized),
            _ => Err(Error::InvalidParameter(format!(
                "unknown search mode {s:?}; expected hypergraph, linear-hypergraph, graph or generalized"
            ))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    Hypergraph(Hypergraph),
    Graph(Graph),
}

/// One exact extremal value. `elapsed` is wall time and is left out of the
/// JSON form so that outputs are reproducible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub n: usize,
    pub r: usize,
    pub pattern: Graph,
    pub mode: Mode,
    pub value: u64,
    pub witness: Witness,
    pub nodes_explored: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Largest `n` each search accepts. Larger requests are refused.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Caps {
    /// `(r, max n)` for the Berge searches; `r` not listed uses `hypergraph_default`.
    pub hypergraph: Vec<(usize, usize)>,
    pub hypergraph_default: usize,
    pub graph: usize,
    pub generalized: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            hypergraph: vec![(2, 9), (3, 7), (4, 7)],
            hypergraph_default: 7,
            graph: 9,
            generalized: 8,
        }
    }
}

impl Caps {
    pub fn hypergraph_cap(&self, r: usize) -> usize {
        self.hypergraph
            .iter()
            .find(|&&(rr, _)| rr == r)
            .map_or(self.hypergraph_default, |&(_, n)| n)
    }

    fn check(&self, what: &str, n: usize, cap: usize) -> Result<()> {
        if n > cap {
            return Err(Error::CapExceeded(format!(
                "{what} with n = {n} exceeds the configured cap n <= {cap}"
            )));
        }
        Ok(())
    }
}

/// `ex_r(n, F)`, or `ex^L_r(n, F)` when `linear` is set.
pub fn exact_ex_r(n: usize, r: usize, f: &Graph, linear: bool, caps: &Caps) -> Result<SearchResult> {
    let mode = if linear { Mode::LinearHypergraph } else { Mode::Hypergraph };
    search(mode, n, r, f, caps)
}

/// `ex(n, F)`.
pub fn exact_turan(n: usize, f: &Graph, caps: &Caps) -> Result<SearchResult> {
    search(Mode::Graph, n, 2, f, caps)
}

/// `ex(n, K_r, F)`.
pub fn exact_generalized_turan(n: usize, r: usize, f: &Graph, caps: &Caps) -> Result<SearchResult> {
    search(Mode::Generalized, n, r, f, caps)
}

/// Runs the search for `mode`. For [`Mode::Graph`] the value of `r` is ignored
/// and reported as 2.
pub fn search(mode: Mode, n: usize, r: usize, f: &Graph, caps: &Caps) -> Result<SearchResult> {
    if f.edge_count() == 0 {
        return Err(Error::InvalidGraph("pattern must have at least one edge".into()));
    }
    let r = if mode == Mode::Graph { 2 } else { r };
    if r < 2 {
        return Err(Error::InvalidParameter(format!("need r >= 2, got {r}")));
    }
    match mode {
        Mode::Hypergraph | Mode::LinearHypergraph => {
            caps.check(&format!("{mode} search (r = {r})"), n, caps.hypergraph_cap(r))?
        }
        Mode::Graph => caps.check("graph search", n, caps.graph)?,
        Mode::Generalized => caps.check("generalized search", n, caps.generalized)?,
    }
    let start = Instant::now();
    let items = match mode {
        Mode::Hypergraph | Mode::LinearHypergraph => subsets(n, r),
        Mode::Graph | Mode::Generalized => subsets(n, 2),
    };
    let mut s = Search {
        mode,
        n,
        r,
        f,
        pattern: Pattern::new(f),
        through: ThroughChecker::new(f)?,
        host: Host::edgeless(n),
        items,
        chosen: Vec::new(),
        best_value: 0,
        best: Vec::new(),
        nodes: 0,
    };
    s.run()?;
    let chosen: Vec<Vec<usize>> = s.best.iter().map(|&i| s.items[i].clone()).collect();
    let witness = match mode {
        Mode::Hypergraph | Mode::LinearHypergraph => {
            Witness::Hypergraph(Hypergraph::new(n, chosen)?.with_uniformity(r)?)
        }
        Mode::Graph | Mode::Generalized => {
            Witness::Graph(Graph::new(n, chosen.iter().map(|e| (e[0], e[1])))?)
        }
    };
    Ok(SearchResult {
        n,
        r,
        pattern: f.clone(),
        mode,
        value: s.best_value,
        witness,
        nodes_explored: s.nodes,
        elapsed: start.elapsed(),
    })
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Number of `r`-cliques in the graph on `0..n` with the given edges.
pub fn count_cliques(n: usize, edges: impl IntoIterator<Item = (usize, usize)>, r: usize) -> u64 {
    let mut adj = vec![0u128; n];
    for (u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    fn extend(adj: &[u128], cand: u128, left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // only higher-labelled vertices, so each clique is counted once
            total += extend(adj, adj[v] & rest, left - 1);
        }
        total
    }
    if r == 0 {
        return 1;
    }
    assert!(n <= 128, "clique counting supports at most 128 vertices");
    let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    extend(&adj, all, r)
}

struct Search<'a> {
    mode: Mode,
    n: usize,
    r: usize,
    f: &'a Graph,
    pattern: Pattern,
    through: ThroughChecker,
    /// Shadow of the chosen pairs, graph modes only.
    host: Host,
    items: Vec<Vec<usize>>,
    chosen: Vec<usize>,
    best_value: u64,
    best: Vec<usize>,
    nodes: u64,
}

impl Search<'_> {
    fn run(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.items.is_empty() || !self.addable(0)? {
            return Ok(());
        }
        let rest: Vec<usize> = (1..self.items.len()).collect();
        self.descend(0, &rest)
    }

    fn is_graph_mode(&self) -> bool {
        matches!(self.mode, Mode::Graph | Mode::Generalized)
    }

    fn descend(&mut self, item: usize, rest: &[usize]) -> Result<()> {
        self.push(item);
        let mut next = Vec::with_capacity(rest.len());
        for &c in rest {
            if self.addable(c)? {
                next.push(c);
            }
        }
        self.explore(&next)?;
        self.pop();
        Ok(())
    }

    fn explore(&mut self, cands: &[usize]) -> Result<()> {
        self.nodes += 1;
        let value = self.value(&[]);
        if value > self.best_value {
            self.best_value = value;
            self.best = self.chosen.clone();
        }
        for i in 0..cands.len() {
            if self.value(&cands[i..]) <= self.best_value {
                break;
            }
            self.descend(cands[i], &cands[i + 1..])?;
        }
        Ok(())
    }

    /// Objective of the chosen set together with `extra`.
    fn value(&self, extra: &[usize]) -> u64 {
        match self.mode {
            Mode::Generalized => {
                let edges = self.chosen.iter().chain(extra).map(|&i| (self.items[i][0], self.items[i][1]));
                count_cliques(self.n, edges, self.r)
            }
            _ => (self.chosen.len() + extra.len()) as u64,
        }
    }

    fn push(&mut self, item: usize) {
        if self.is_graph_mode() {
            let e = &self.items[item];
            self.host.add_edge(e[0], e[1]);
        }
        self.chosen.push(item);
    }

    fn pop(&mut self) {
        let item = self.chosen.pop().expect("pop after push");
        if self.is_graph_mode() {
            let e = &self.items[item];
            self.host.remove_edge(e[0], e[1]);
        }
    }

    /// Whether the chosen set plus `c` is still free (and linear if required).
    fn addable(&mut self, c: usize) -> Result<bool> {
        let e = &self.items[c];
        match self.mode {
            Mode::Graph | Mode::Generalized => {
                let (x, y) = (e[0], e[1]);
                self.host.add_edge(x, y);
                let mut found = false;
                'edges: for &(a, b) in self.f.edges() {
                    for pins in [[(a, x), (b, y)], [(a, y), (b, x)]] {
                        let hit = Embedder::new(&self.pattern, &self.host)
                            .exists(&pins)
                            .expect("no node limit configured");
                        if hit {
                            found = true;
                            break 'edges;
                        }
                    }
                }
                self.host.remove_edge(x, y);
                Ok(!found)
            }
            Mode::Hypergraph | Mode::LinearHypergraph => {
                if self.mode == Mode::LinearHypergraph {
                    let shares_pair = self.chosen.iter().any(|&i| {
                        self.items[i].iter().filter(|v| e.contains(v)).count() > 1
                    });
                    if shares_pair {
                        return Ok(false);
                    }
                }
                if self.chosen.len() + 1 < self.f.edge_count() {
                    return Ok(true);
                }
                let edges = self.chosen.iter().chain(std::iter::once(&c)).map(|&i| self.items[i].clone());
                let h = Hypergraph::new(self.n, edges)?;
                let through = h.hyperedges().iter().position(|x| x == e).expect("just inserted");
                Ok(self.through.check(&h, through)?.is_none())
            }
        }
    }
}

/// The three values around `ex_r(n, F)` and whether
/// `ex(n, K_r, F) <= ex_r(n, F) <= ex(n, K_r, F) + ex(n, F)` holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sandwich {
    pub n: usize,
    pub r: usize,
    pub pattern: Graph,
    pub generalized: u64,
    pub hypergraph: u64,
    pub turan: u64,
    pub holds: bool,
}

impl Sandwich {
    pub fn triple(&self) -> (u64, u64, u64) {
        (self.generalized, self.hypergraph, self.turan)
    }
}

pub fn sandwich_check(n: usize, r: usize, f: &Graph, caps: &Caps) -> Result<Sandwich> {
    sandwich_with(n, r, f, |mode, n, r, f| search(mode, n, r, f, caps))
}

/// [`sandwich_check`] with a caller-supplied search, e.g. a cached one.
pub fn sandwich_with(
    n: usize,
    r: usize,
    f: &Graph,
    mut run: impl FnMut(Mode, usize, usize, &Graph) -> Result<SearchResult>,
) -> Result<Sandwich> {
    let generalized = run(Mode::Generalized, n, r, f)?.value;
    let hypergraph = run(Mode::Hypergraph, n, r, f)?.value;
    let turan = run(Mode::Graph, n, 2, f)?.value;
    Ok(Sandwich {
        n,
        r,
        pattern: f.clone(),
        generalized,
        hypergraph,
        turan,
        holds: generalized <= hypergraph && hypergraph <= generalized + turan,
    })
}

/// Content-addressed store of search results, keyed by `n`, `r`, the
/// canonical form of the pattern and the mode.
#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

pub const CACHE_DIR_ENV: &str = "BERGE_CACHE_DIR";

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `$BERGE_CACHE_DIR`, else `$XDG_CACHE_HOME/berge`, else
    /// `$HOME/.cache/berge`, else a directory under the system temp dir.
    pub fn from_env() -> Self {
        let var = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty()).map(PathBuf::from);
        let dir = var(CACHE_DIR_ENV)
            .or_else(|| var("XDG_CACHE_HOME").map(|d| d.join("berge")))
            .or_else(|| var("HOME").map(|d| d.join(".cache").join("berge")))
            .unwrap_or_else(|| std::env::temp_dir().join("berge-cache"));
        Cache::new(dir)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(mode: Mode, n: usize, r: usize, f: &Graph) -> String {
        let canon = f.canonical_form();
        let r = if mode == Mode::Graph { 2 } else { r };
        let mut hasher = Sha256::new();
        hasher.update(format!("berge-search-v1|{mode}|n={n}|r={r}|F={canon}").as_bytes());
        hex::encode(hasher.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// A stored result for the request, if present and well formed.
    pub fn load(&self, mode: Mode, n: usize, r: usize, f: &Graph) -> Option<SearchResult> {
        let key = Cache::key(mode, n, r, f);
        let text = std::fs::read_to_string(self.path(&key)).ok()?;
        let mut res: SearchResult = serde_json::from_str(&text).ok()?;
        let r = if mode == Mode::Graph { 2 } else { r };
        if res.mode != mode || res.n != n || res.r != r || res.pattern.canonical_form() != f.canonical_form() {
            return None;
        }
        // value, witness and node count do not depend on how F is labelled
        res.pattern = f.clone();
        Some(res)
    }

    pub fn store(&self, res: &SearchResult) -> Result<()> {
        std::fs::create_dir_all(&self.dir)?;
        let key = Cache::key(res.mode, res.n, res.r, &res.pattern);
        let tmp = self.dir.join(format!("{key}.{}.tmp", std::process::id()));
        std::fs::write(&tmp, serde_json::to_vec(res)?)?;
        std::fs::rename(&tmp, self.path(&key))?;
        Ok(())
    }

    /// Looks the request up and runs the search on a miss. A failure to write
    /// the cache does not fail the search.
    pub fn search(&self, mode: Mode, n: usize, r: usize, f: &Graph, caps: &Caps) -> Result<SearchResult> {
        if f.edge_count() > 0 {
            let start = Instant::now();
            if let Some(mut hit) = self.load(mode, n, r, f) {
                hit.elapsed = start.elapsed();
                return Ok(hit);
            }
        }
        let res = search(mode, n, r, f, caps)?;
        let _ = self.store(&res);
        Ok(res)
    }
}

/// Whether `res.witness` is a valid object for its mode, has exactly
/// `res.value` hyperedges, edges or cliques, and avoids the pattern.
pub fn verify_witness(res: &SearchResult) -> Result<bool> {
    let f = &res.pattern;
    Ok(match (&res.witness, res.mode) {
        (Witness::Hypergraph(h), Mode::Hypergraph | Mode::LinearHypergraph) => {
            let linear_ok = res.mode == Mode::Hypergraph || h.is_linear();
            h.n() == res.n
                && h.hyperedges().iter().all(|e| e.len() == res.r)
                && h.len() as u64 == res.value
                && linear_ok
                && crate::detect::contains_berge(h, f)?.is_none()
        }
        (Witness::Graph(g), Mode::Graph) => {
            g.n() == res.n
                && g.edge_count() as u64 == res.value
                && !crate::embed::contains_subgraph(f, g)
        }
        (Witness::Graph(g), Mode::Generalized) => {
            g.n() == res.n
                && count_cliques(g.n(), g.edges().iter().copied(), res.r) == res.value
                && !crate::embed::contains_subgraph(f, g)
        }
        _ => false,
    })
}
