//! Generators for the extremal constructions. Each returns the hypergraph
//! together with the claims it is supposed to satisfy, and [`check_claims`]
//! re-verifies those claims independently.

use serde::Serialize;

use crate::bounds::min_contracted_chromatic;
use crate::detect::{contains_berge_with, DetectOptions};
use crate::embed::contains_subgraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::{blowup, Hypergraph};
use crate::patterns::named_pattern;

/// What a construction promises about its output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claims {
    pub linear: bool,
    pub uniform: usize,
    /// Pattern names the hypergraph contains no Berge copy of.
    pub free_of: Vec<String>,
    /// Hyperedge count predicted by the closed-form formula.
    pub count_formula: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Construction {
    #[serde(flatten)]
    pub hypergraph: Hypergraph,
    pub claims: Claims,
}

/// Hyperedge count of [`linear_construction`].
pub fn linear_construction_count(n: usize, r: usize) -> usize {
    (n / (2 * r)) * (n / (2 * r * (r - 1)) + 1)
}

/// The `r`-uniform linear construction: classes `V_1..V_r` of `⌊n/r⌋` vertices
/// and hyperedges `{v_{1,x}, v_{2,x+m}, ..., v_{r,x+(r-1)m}}` for
/// `1 <= x <= ⌊n/2r⌋`, `0 <= m <= ⌊n/(2r(r-1))⌋`. Vertex `v_{i,j}` is labelled
/// `(i-1)⌊n/r⌋ + (j-1)`; leftover vertices are isolated.
///
/// No hyperedge meets a class twice, so the shadow is `r`-partite and has no
/// `K_{r+1}`.
pub fn linear_construction(n: usize, r: usize) -> Result<Construction> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!("need r >= 2, got {r}")));
    }
    if n < 2 * r {
        return Err(Error::InvalidParameter(format!("need n >= 2r = {}, got {n}", 2 * r)));
    }
    let class = n / r;
    let xs = n / (2 * r);
    let ms = n / (2 * r * (r - 1));
    let mut edges = Vec::with_capacity(xs * (ms + 1));
    for x in 1..=xs {
        for m in 0..=ms {
            let e: Vec<usize> = (1..=r)
                .map(|i| {
                    let j = x + (i - 1) * m;
                    debug_assert!(j <= class);
                    (i - 1) * class + (j - 1)
                })
                .collect();
            edges.push(e);
        }
    }
    let hypergraph = Hypergraph::new(n, edges)?.with_uniformity(r)?;
    Ok(Construction {
        hypergraph,
        claims: Claims {
            linear: true,
            uniform: r,
            free_of: vec![format!("K{}", r + 1)],
            count_formula: linear_construction_count(n, r),
        },
    })
}

/// As-equal-as-possible split of `r` into `k` parts, larger parts first.
pub fn balanced_factors(r: usize, k: usize) -> Vec<usize> {
    (0..k).map(|i| r / k + usize::from(i < r % k)).collect()
}

/// Blows up the `k`-uniform linear construction class by class (every vertex
/// of class `i` by `factors[i]`), sized so the result fits on `n` vertices.
fn classwise_blowup(n: usize, factors: &[usize]) -> Result<(Hypergraph, usize)> {
    let k = factors.len();
    let r: usize = factors.iter().sum();
    let class = n / r;
    if class < 2 {
        return Err(Error::InvalidParameter(format!(
            "n = {n} too small for uniformity {r}: need n >= {}",
            2 * r
        )));
    }
    let base = linear_construction(k * class, k)?;
    let vertex_factors: Vec<usize> = (0..k * class).map(|v| factors[v / class]).collect();
    let blown = blowup(&base.hypergraph, &vertex_factors)?;
    let h = blown.hypergraph.with_isolated(n)?.with_uniformity(r)?;
    Ok((h, base.claims.count_formula))
}

fn check_factors(factors: &[usize], k: usize, r: usize, max: usize) -> Result<()> {
    if factors.len() != k {
        return Err(Error::InvalidParameter(format!(
            "expected {k} blowup factors, got {}",
            factors.len()
        )));
    }
    if let Some(&w) = factors.iter().find(|&&w| w == 0 || w > max) {
        return Err(Error::InvalidParameter(format!("factor {w} outside [1, {max}]")));
    }
    let sum: usize = factors.iter().sum();
    if sum != r {
        return Err(Error::InvalidParameter(format!("factors sum to {sum}, expected {r}")));
    }
    Ok(())
}

/// `r`-uniform Berge-`K_s`-free hypergraph for `2 <= r <= (s-1)^2`: for
/// `r <= s-1` the linear construction itself, otherwise the `(s-1)`-uniform
/// linear construction with class `i` blown up by `w_i ∈ [1, s-1]`, `Σ w_i = r`.
pub fn clique_blowup_construction(
    n: usize,
    s: usize,
    r: usize,
    factors: Option<&[usize]>,
) -> Result<Construction> {
    if s < 3 {
        return Err(Error::InvalidParameter(format!("need s >= 3, got {s}")));
    }
    let k = s - 1;
    if r < 2 || r > k * k {
        return Err(Error::InvalidParameter(format!(
            "r must lie in [2, (s-1)^2] = [2, {}], got {r}",
            k * k
        )));
    }
    if r <= k {
        if factors.is_some() {
            return Err(Error::InvalidParameter(
                "blowup factors do not apply when r <= s - 1".into(),
            ));
        }
        let mut c = linear_construction(n, r)?;
        c.claims.free_of = vec![format!("K{s}")];
        return Ok(c);
    }
    let factors = factors.map_or_else(|| balanced_factors(r, k), <[usize]>::to_vec);
    check_factors(&factors, k, r, k)?;
    let (hypergraph, count) = classwise_blowup(n, &factors)?;
    Ok(Construction {
        hypergraph,
        claims: Claims {
            linear: factors.iter().all(|&w| w == 1),
            uniform: r,
            free_of: vec![format!("K{s}")],
            count_formula: count,
        },
    })
}

/// Builtin patterns considered when listing what an admissible blowup avoids.
const ADMISSIBLE_CANDIDATES: &[&str] = &["K3", "K4", "K5", "K6", "K211", "C5", "Petersen"];

/// Builtin patterns `F` whose every `t`-admissible contraction needs at least
/// `c` colours; the admissible blowup is Berge-`F`-free for each of them.
pub fn admissible_free_patterns(c: usize, t: usize) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for name in ADMISSIBLE_CANDIDATES {
        let f = named_pattern(name)?;
        if t + 1 > f.n() {
            continue;
        }
        if min_contracted_chromatic(&f, t)? >= c {
            out.push((*name).to_string());
        }
    }
    Ok(out)
}

/// `r`-uniform hypergraph avoiding every Berge-`F` whose `t`-admissible
/// contractions all have chromatic number at least `c`, for
/// `2 <= r <= (c-1)t`. Below `c` it is the linear construction; otherwise the
/// `(c-1)`-uniform linear construction blown up classwise by `w_i ∈ [1, t]`.
pub fn admissible_blowup_construction(
    n: usize,
    c: usize,
    t: usize,
    r: usize,
    factors: Option<&[usize]>,
) -> Result<Construction> {
    if c < 3 {
        return Err(Error::InvalidParameter(format!("need c >= 3, got {c}")));
    }
    if t == 0 {
        return Err(Error::InvalidParameter("need t >= 1".into()));
    }
    let k = c - 1;
    if r < 2 || r > k * t {
        return Err(Error::InvalidParameter(format!(
            "r must lie in [2, (c-1)t] = [2, {}], got {r}",
            k * t
        )));
    }
    if r < c {
        if factors.is_some() {
            return Err(Error::InvalidParameter(
                "blowup factors do not apply when r < c".into(),
            ));
        }
        return linear_construction(n, r);
    }
    let factors = factors.map_or_else(|| balanced_factors(r, k), <[usize]>::to_vec);
    check_factors(&factors, k, r, t)?;
    let (hypergraph, count) = classwise_blowup(n, &factors)?;
    Ok(Construction {
        hypergraph,
        claims: Claims {
            linear: factors.iter().all(|&w| w == 1),
            uniform: r,
            free_of: admissible_free_patterns(c, t)?,
            count_formula: count,
        },
    })
}

/// All transversals of `r` parts of size `⌊n/r⌋` (the `r`-cliques of the
/// complete `r`-partite graph). Leftover vertices are isolated.
pub fn rpartite_construction(n: usize, r: usize) -> Result<Construction> {
    if r < 2 || n < r {
        return Err(Error::InvalidParameter(format!("need n >= r >= 2, got n = {n}, r = {r}")));
    }
    let part = n / r;
    let total = part.pow(r as u32);
    let mut edges = Vec::with_capacity(total);
    for code in 0..total {
        let mut rest = code;
        let mut e = Vec::with_capacity(r);
        for i in (0..r).rev() {
            e.push(i * part + rest % part);
            rest /= part;
        }
        e.reverse();
        edges.push(e);
    }
    Ok(Construction {
        hypergraph: Hypergraph::new(n, edges)?.with_uniformity(r)?,
        claims: Claims {
            linear: r == 2 || part == 1,
            uniform: r,
            free_of: vec![format!("K{}", r + 1)],
            count_formula: total,
        },
    })
}

/// Replaces each vertex on one side of a bipartite C4-free graph by `i` copies
/// and each on the other side by `j` copies; edge `ab` becomes the
/// `(i + j)`-set of all copies of `a` and `b`. Berge-C4-free for `i, j <= 3`.
///
/// The side containing each component's smallest vertex gets `i`.
pub fn c4_construction(base: &Graph, i: usize, j: usize) -> Result<Construction> {
    if !(1..=3).contains(&i) || !(1..=3).contains(&j) {
        return Err(Error::InvalidParameter(format!("need 1 <= i, j <= 3, got i = {i}, j = {j}")));
    }
    let sides = base
        .bipartition()
        .ok_or_else(|| Error::InvalidParameter("base graph is not bipartite".into()))?;
    if contains_subgraph(&Graph::cycle(4)?, base) {
        return Err(Error::InvalidParameter("base graph contains a C4".into()));
    }
    if base.edge_count() == 0 {
        return Err(Error::InvalidParameter("base graph has no edges".into()));
    }
    let factors: Vec<usize> = sides.iter().map(|&s| if s == 0 { i } else { j }).collect();
    let blown = blowup(&Hypergraph::from_graph(base), &factors)?;
    Ok(Construction {
        hypergraph: blown.hypergraph.with_uniformity(i + j)?,
        claims: Claims {
            linear: i == 1 && j == 1,
            uniform: i + j,
            free_of: vec!["C4".to_string()],
            count_formula: base.edge_count(),
        },
    })
}

/// Outcome of re-checking a construction's claims.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimCheck {
    pub uniform_ok: bool,
    pub linear_ok: bool,
    pub count_ok: bool,
    /// `(pattern, verified free)` per claimed pattern.
    pub free_ok: Vec<(String, bool)>,
}

impl ClaimCheck {
    pub fn all_ok(&self) -> bool {
        self.uniform_ok && self.linear_ok && self.count_ok && self.free_ok.iter().all(|(_, ok)| *ok)
    }
}

/// Verifies every claim with the detector and the hypergraph primitives.
pub fn check_claims(c: &Construction, opts: &DetectOptions) -> Result<ClaimCheck> {
    let h = &c.hypergraph;
    let mut free_ok = Vec::new();
    for name in &c.claims.free_of {
        let f = named_pattern(name)?;
        free_ok.push((name.clone(), contains_berge_with(h, &f, opts)?.is_none()));
    }
    Ok(ClaimCheck {
        uniform_ok: h.is_empty() || h.uniformity() == Some(c.claims.uniform),
        linear_ok: !c.claims.linear || h.is_linear(),
        count_ok: h.len() == c.claims.count_formula,
        free_ok,
    })
}
