//! Lower and upper bounds on the uniformity threshold of a pattern graph.
//!
//! Lower bounds come from three sources: the chromatic number (the linear
//! threshold, which also bounds the general one from below), the clique
//! number via `(ω - 1)^2 + 1`, and admissible partitions via `(c - 1)t + 1`.
//! Upper bounds come from `R(F, F \ e)` and, for bipartite `F`, `|V(F)|`.

use rayon::prelude::*;
use serde::Serialize;

use crate::embed::edge_orbits;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexPartition};
use crate::invariants::{chromatic_number, clique_number, ramsey_number, RamseyOptions, RamseyValue};

/// Every partition of `V(f)` into blocks of size at most `t` with at most one
/// edge of `f` between any two blocks, in restricted-growth-string order.
///
/// Whenever two vertices share a block, their common neighbours are forced
/// into the same block; that closure is applied as soon as the pair forms.
pub fn enumerate_admissible_partitions(f: &Graph, t: usize) -> Result<Vec<VertexPartition>> {
    let n = f.n();
    if t == 0 || t + 1 > n {
        return Err(Error::InvalidParameter(format!(
            "t must satisfy 1 <= t <= |V(F)| - 1 = {}, got {t}",
            n.saturating_sub(1)
        )));
    }
    let adj = f.adjacency_matrix();
    let mut out = Vec::new();
    let state = PartialPartition::new(n);
    extend_partition(&adj, t, state, &mut out);
    Ok(out)
}

#[derive(Clone)]
struct PartialPartition {
    block_of: Vec<usize>,
    sizes: Vec<usize>,
    /// Block an unassigned vertex has been forced into, if any.
    forced: Vec<Option<usize>>,
    /// Edge counts between block pairs, `n x n`.
    between: Vec<Vec<u8>>,
    next: usize,
}

const NONE: usize = usize::MAX;

impl PartialPartition {
    fn new(n: usize) -> Self {
        PartialPartition {
            block_of: vec![NONE; n],
            sizes: Vec::new(),
            forced: vec![None; n],
            between: vec![vec![0; n]; n],
            next: 0,
        }
    }

    fn pending(&self, b: usize) -> usize {
        (self.next..self.block_of.len())
            .filter(|&x| self.forced[x] == Some(b))
            .count()
    }

    /// Puts the next vertex into block `b`; `None` if that violates admissibility.
    fn place(mut self, adj: &[Vec<bool>], t: usize, b: usize) -> Option<Self> {
        let v = self.next;
        if b == self.sizes.len() {
            self.sizes.push(0);
        }
        self.block_of[v] = b;
        self.sizes[b] += 1;
        self.next += 1;
        for (u, &edge) in adj[v][..v].iter().enumerate() {
            if edge {
                let c = self.block_of[u];
                if c != b {
                    self.between[b][c] += 1;
                    self.between[c][b] += 1;
                    if self.between[b][c] > 1 {
                        return None;
                    }
                }
            }
        }
        for w in 0..v {
            if self.block_of[w] != b {
                continue;
            }
            for (x, row) in adj.iter().enumerate().skip(self.next) {
                if row[v] && row[w] {
                    match self.forced[x] {
                        Some(c) if c != b => return None,
                        _ => self.forced[x] = Some(b),
                    }
                }
            }
        }
        if self.sizes[b] + self.pending(b) > t {
            return None;
        }
        Some(self)
    }
}

fn extend_partition(adj: &[Vec<bool>], t: usize, state: PartialPartition, out: &mut Vec<VertexPartition>) {
    let v = state.next;
    if v == state.block_of.len() {
        let rgs = state.block_of.clone();
        out.push(VertexPartition::from_rgs(&rgs).expect("search builds restricted-growth strings"));
        return;
    }
    let choices: Vec<usize> = match state.forced[v] {
        Some(b) => vec![b],
        None => (0..=state.sizes.len()).collect(),
    };
    for b in choices {
        if b < state.sizes.len() && state.sizes[b] >= t {
            continue;
        }
        if let Some(next) = state.clone().place(adj, t, b) {
            extend_partition(adj, t, next, out);
        }
    }
}

/// Minimum chromatic number over the contractions of all `t`-admissible
/// partitions of `f`.
pub fn min_contracted_chromatic(f: &Graph, t: usize) -> Result<usize> {
    let partitions = enumerate_admissible_partitions(f, t)?;
    min_over(f, &partitions)
}

fn min_over(f: &Graph, partitions: &[VertexPartition]) -> Result<usize> {
    let values: Vec<usize> = partitions
        .par_iter()
        .map(|p| f.contract(p).map(|g| chromatic_number(&g)))
        .collect::<Result<_>>()?;
    values
        .into_iter()
        .min()
        .ok_or_else(|| Error::InvalidParameter("no admissible partition".into()))
}

/// `thres^L(F) = χ(F)`.
pub fn linear_threshold(f: &Graph) -> Result<usize> {
    if f.edge_count() == 0 {
        return Err(Error::InvalidParameter("pattern must have at least one edge".into()));
    }
    Ok(chromatic_number(f))
}

/// Where a bound in a [`PartitionBoundReport`] comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "source")]
pub enum Provenance {
    /// Every threshold is at least 2.
    Trivial,
    /// Linear threshold equals χ(F) and bounds the general threshold below.
    ChromaticNumber,
    /// `(ω(F) - 1)^2 + 1` from blowing up the linear construction.
    CliqueBlowup,
    /// `(c_t - 1)t + 1` from the `t`-admissible partitions.
    AdmissiblePartition { t: usize },
    /// `R(F, F \ e)` for the named edge.
    Ramsey { edge: (usize, usize) },
    /// `|V(F)|` for bipartite `F`.
    BipartiteVertexCount,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionRow {
    pub t: usize,
    pub admissible_partition_count: usize,
    /// Minimum chromatic number of the contracted graphs.
    pub c_t: usize,
    /// `(c_t - 1)t + 1` when `c_t >= 3`.
    pub bound: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum RamseyEntry {
    Exact { value: usize },
    /// Not resolved within the search budget.
    Unknown { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamseyOrbit {
    /// Smallest edge of the orbit, used as representative.
    pub edge: (usize, usize),
    pub orbit_size: usize,
    pub r: RamseyEntry,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: usize,
    /// Every source attaining `value`.
    pub sources: Vec<Provenance>,
}

/// Threshold bounds for one pattern, with the data behind each number.
///
/// The numbers bound the threshold as "least `r0` with `ex_r(n, F) = o(n^2)`
/// for every `r >= r0`". For some patterns `ex_r` is subquadratic for a small
/// `r` and superquadratic again above it, so this is not the same as the first
/// subquadratic uniformity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionBoundReport {
    pub pattern: Graph,
    pub chromatic_number: usize,
    pub clique_number: usize,
    pub rows: Vec<PartitionRow>,
    pub omega_bound: usize,
    pub chi_bound: usize,
    /// `None` when the pattern has fewer than two edges.
    pub ramsey_orbits: Option<Vec<RamseyOrbit>>,
    pub ramsey_upper: Option<Bound>,
    pub bipartite_upper: Option<usize>,
    pub final_lower: Bound,
    pub final_upper: Option<Bound>,
}

/// Builds the full report. Pass `None` for `ramsey` to skip the Ramsey search.
pub fn threshold_report(f: &Graph, ramsey: Option<&RamseyOptions>) -> Result<PartitionBoundReport> {
    if f.edge_count() == 0 {
        return Err(Error::InvalidParameter("pattern must have at least one edge".into()));
    }
    let chi = chromatic_number(f);
    let omega = clique_number(f);
    let rows = (1..f.n())
        .map(|t| partition_row(f, t))
        .collect::<Result<Vec<_>>>()?;
    let omega_bound = (omega - 1) * (omega - 1) + 1;

    let mut lower: Vec<(usize, Provenance)> = vec![
        (2, Provenance::Trivial),
        (chi, Provenance::ChromaticNumber),
        (omega_bound, Provenance::CliqueBlowup),
    ];
    for row in &rows {
        if let Some(b) = row.bound {
            lower.push((b, Provenance::AdmissiblePartition { t: row.t }));
        }
    }

    let ramsey_orbits = match (ramsey, f.edge_count() >= 2) {
        (Some(opts), true) => Some(ramsey_orbits(f, opts)?),
        (None, true) => Some(Vec::new()),
        (_, false) => None,
    };
    let mut upper: Vec<(usize, Provenance)> = Vec::new();
    let ramsey_upper = ramsey_orbits.as_ref().and_then(|orbits| {
        let known: Vec<(usize, Provenance)> = orbits
            .iter()
            .filter_map(|o| match o.r {
                RamseyEntry::Exact { value } => Some((value, Provenance::Ramsey { edge: o.edge })),
                RamseyEntry::Unknown { .. } => None,
            })
            .collect();
        upper.extend(known.iter().cloned());
        best(&known, false)
    });
    let bipartite_upper = f.is_bipartite().then_some(f.n());
    if let Some(b) = bipartite_upper {
        upper.push((b, Provenance::BipartiteVertexCount));
    }

    Ok(PartitionBoundReport {
        pattern: f.clone(),
        chromatic_number: chi,
        clique_number: omega,
        rows,
        omega_bound,
        chi_bound: chi,
        ramsey_orbits,
        ramsey_upper,
        bipartite_upper,
        final_lower: best(&lower, true).expect("lower bounds are never empty"),
        final_upper: best(&upper, false),
    })
}

fn partition_row(f: &Graph, t: usize) -> Result<PartitionRow> {
    let partitions = enumerate_admissible_partitions(f, t)?;
    let c_t = min_over(f, &partitions)?;
    Ok(PartitionRow {
        t,
        admissible_partition_count: partitions.len(),
        c_t,
        bound: (c_t >= 3).then(|| (c_t - 1) * t + 1),
    })
}

/// Max (lower bounds) or min (upper bounds) together with every source that
/// attains it.
fn best(values: &[(usize, Provenance)], max: bool) -> Option<Bound> {
    let target = if max {
        values.iter().map(|v| v.0).max()?
    } else {
        values.iter().map(|v| v.0).min()?
    };
    Some(Bound {
        value: target,
        sources: values
            .iter()
            .filter(|v| v.0 == target)
            .map(|v| v.1.clone())
            .collect(),
    })
}

/// `R(F, F \ e)` for one representative edge per automorphism orbit.
fn ramsey_orbits(f: &Graph, opts: &RamseyOptions) -> Result<Vec<RamseyOrbit>> {
    edge_orbits(f)
        .into_iter()
        .map(|orbit| {
            let edge = f.edges()[orbit[0]];
            let reduced = f.delete_edge(edge.0, edge.1)?;
            let r = match ramsey_number(f, &reduced, opts) {
                Ok(res) => match res.value {
                    RamseyValue::Exact(value) => RamseyEntry::Exact { value },
                    RamseyValue::GreaterThan(n) => RamseyEntry::Unknown {
                        reason: format!("greater than {n}"),
                    },
                },
                Err(e) if e.is_resource_limit() => RamseyEntry::Unknown {
                    reason: e.to_string(),
                },
                Err(e) => return Err(e),
            };
            Ok(RamseyOrbit {
                edge,
                orbit_size: orbit.len(),
                r,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorollaryKind {
    /// Blowup of `K_s` with the given class sizes (`s = factors.len() >= 3`).
    CliqueBlowup { factors: Vec<usize> },
    /// Blowup of a connected graph with class `i` (1-based) of size at least
    /// `i` and the first class of size at least 2.
    ConnectedBlowup { base: Graph, factors: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    pub blowup: Graph,
    pub t: usize,
    pub closed_form: usize,
    pub c_t: usize,
    /// `(c_t - 1)t + 1` from the partition machinery.
    pub generic: usize,
    /// Whether the partition theorem applies (`c_t >= 3`).
    pub certified: bool,
}

impl CorollaryReport {
    pub fn matches(&self) -> bool {
        self.closed_form == self.generic
    }
}

/// Builds the blowup pattern, evaluates the `t = |V(F)| - 1` partition row and
/// reports it next to the closed form the corollary predicts.
///
/// For a connected-graph blowup the closed form uses `χ(F)` of the blown-up
/// pattern (equal to that of the base graph).
pub fn corollary_bounds(kind: &CorollaryKind) -> Result<CorollaryReport> {
    let (blowup, closed_chi) = match kind {
        CorollaryKind::CliqueBlowup { factors } => {
            let s = factors.len();
            if s < 3 {
                return Err(Error::InvalidParameter(format!("need s >= 3, got {s}")));
            }
            (Graph::complete(s).blowup(factors)?, s)
        }
        CorollaryKind::ConnectedBlowup { base, factors } => {
            if !base.is_connected() || base.n() == 0 {
                return Err(Error::InvalidParameter("base graph must be connected".into()));
            }
            if factors.len() != base.n() {
                return Err(Error::InvalidParameter("one factor per base vertex".into()));
            }
            if factors[0] < 2 || factors.iter().enumerate().any(|(i, &w)| w < i + 1) {
                return Err(Error::InvalidParameter(
                    "factors must satisfy w(1) >= 2 and w(i) >= i".into(),
                ));
            }
            let blowup = base.blowup(factors)?;
            let chi = chromatic_number(&blowup);
            (blowup, chi)
        }
    };
    let t = blowup.n() - 1;
    let row = partition_row(&blowup, t)?;
    Ok(CorollaryReport {
        closed_form: (closed_chi - 1) * t + 1,
        generic: (row.c_t - 1) * t + 1,
        certified: row.c_t >= 3,
        c_t: row.c_t,
        t,
        blowup,
    })
}

impl PartitionBoundReport {
    /// Aligned human-readable table.
    pub fn to_table(&self) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        let _ = writeln!(s, "pattern: {}", self.pattern);
        let _ = writeln!(s, "chi = {}, omega = {}", self.chromatic_number, self.clique_number);
        let _ = writeln!(s, "{:>4}  {:>12}  {:>4}  {:>6}", "t", "admissible", "c_t", "bound");
        for row in &self.rows {
            let bound = row.bound.map_or("-".to_string(), |b| b.to_string());
            let _ = writeln!(
                s,
                "{:>4}  {:>12}  {:>4}  {:>6}",
                row.t, row.admissible_partition_count, row.c_t, bound
            );
        }
        let _ = writeln!(s, "omega bound       : {}", self.omega_bound);
        let _ = writeln!(s, "chi bound         : {}", self.chi_bound);
        match &self.ramsey_upper {
            Some(b) => {
                let _ = writeln!(s, "Ramsey upper      : {}", b.value);
            }
            None => {
                let _ = writeln!(s, "Ramsey upper      : unknown");
            }
        }
        if let Some(b) = self.bipartite_upper {
            let _ = writeln!(s, "bipartite upper   : {b}");
        }
        let _ = writeln!(s, "final lower bound : {}", self.final_lower.value);
        match &self.final_upper {
            Some(b) => {
                let _ = writeln!(s, "final upper bound : {}", b.value);
            }
            None => {
                let _ = writeln!(s, "final upper bound : unknown");
            }
        }
        s
    }
}
