//! Berge-F containment: decision, certificates and shadow copy counting.
//!
//! A hypergraph contains a Berge-F exactly when its 2-shadow contains a copy
//! of F whose edges can be assigned pairwise distinct hyperedges, each
//! containing its edge. The decider enumerates copies of F in the shadow and
//! solves the distinct-representatives problem for each by bipartite matching.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::embed::{automorphism_count, edge_orbits, Embedder, Host, LimitReached, Pattern};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::matching::saturating_matching;

/// Witness of a Berge-F: `psi[v]` is the host vertex for pattern vertex `v`
/// and `phi[i]` pairs pattern edge `i` (canonical order) with a hyperedge index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BergeCertificate {
    pub psi: Vec<usize>,
    pub phi: Vec<((usize, usize), usize)>,
}

impl Serialize for BergeCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Psi<'a>(&'a [usize]);
        impl Serialize for Psi<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (v, h) in self.0.iter().enumerate() {
                    m.serialize_entry(&v.to_string(), h)?;
                }
                m.end()
            }
        }
        struct Phi<'a>(&'a [((usize, usize), usize)]);
        impl Serialize for Phi<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for ((u, v), idx) in self.0 {
                    m.serialize_entry(&format!("{u}-{v}"), idx)?;
                }
                m.end()
            }
        }
        let mut m = serializer.serialize_map(Some(2))?;
        m.serialize_entry("psi", &Psi(&self.psi))?;
        m.serialize_entry("phi", &Phi(&self.phi))?;
        m.end()
    }
}

impl<'de> Deserialize<'de> for BergeCertificate {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            psi: BTreeMap<String, usize>,
            phi: BTreeMap<String, usize>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut psi_pairs = Vec::with_capacity(raw.psi.len());
        for (k, h) in raw.psi {
            let v: usize = k
                .parse()
                .map_err(|_| D::Error::custom(format!("bad psi key `{k}`")))?;
            psi_pairs.push((v, h));
        }
        psi_pairs.sort_unstable();
        if psi_pairs.iter().enumerate().any(|(i, &(v, _))| i != v) {
            return Err(D::Error::custom("psi keys must be exactly 0..k"));
        }
        let psi = psi_pairs.into_iter().map(|(_, h)| h).collect();
        let mut phi = Vec::with_capacity(raw.phi.len());
        for (k, idx) in raw.phi {
            let (a, b) = k
                .split_once('-')
                .ok_or_else(|| D::Error::custom(format!("bad phi key `{k}`")))?;
            let u: usize = a.parse().map_err(|_| D::Error::custom(format!("bad phi key `{k}`")))?;
            let v: usize = b.parse().map_err(|_| D::Error::custom(format!("bad phi key `{k}`")))?;
            phi.push(((u.min(v), u.max(v)), idx));
        }
        phi.sort_unstable();
        Ok(BergeCertificate { psi, phi })
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct DetectOptions {
    /// Maximum number of embedding-search nodes before giving up.
    pub node_limit: Option<u64>,
}

/// Shadow of a hypergraph together with which hyperedges cover each pair.
struct CoveredShadow {
    host: Host,
    n: usize,
    cover: Vec<Vec<usize>>,
}

impl CoveredShadow {
    fn new(h: &Hypergraph) -> Self {
        let n = h.n();
        let mut cover = vec![Vec::new(); n * n];
        for (idx, e) in h.hyperedges().iter().enumerate() {
            for (i, &u) in e.iter().enumerate() {
                for &v in &e[i + 1..] {
                    cover[u * n + v].push(idx);
                }
            }
        }
        CoveredShadow {
            host: Host::new(&h.shadow()),
            n,
            cover,
        }
    }

    fn covering(&self, x: usize, y: usize) -> &[usize] {
        let (a, b) = (x.min(y), x.max(y));
        &self.cover[a * self.n + b]
    }

    /// Tries to certify the embedding `map` by choosing distinct hyperedges.
    fn certify(&self, f: &Graph, map: &[usize]) -> Option<BergeCertificate> {
        let options: Vec<Vec<usize>> = f
            .edges()
            .iter()
            .map(|&(u, v)| self.covering(map[u], map[v]).to_vec())
            .collect();
        let n_right = options.iter().flatten().max().map_or(0, |&m| m + 1);
        let chosen = saturating_matching(&options, n_right)?;
        Some(BergeCertificate {
            psi: map.to_vec(),
            phi: f.edges().iter().copied().zip(chosen).collect(),
        })
    }
}

fn require_edges(f: &Graph) -> Result<()> {
    if f.edge_count() == 0 {
        return Err(Error::InvalidParameter(
            "Berge-F is undefined for an edgeless pattern".into(),
        ));
    }
    Ok(())
}

fn exhausted(limit: Option<u64>) -> Error {
    Error::ResourceExhausted {
        what: "Berge-F search".into(),
        limit: limit.unwrap_or(0),
    }
}

/// Decides whether `h` contains a Berge-`f`, returning the first certificate
/// in enumeration order.
pub fn contains_berge(h: &Hypergraph, f: &Graph) -> Result<Option<BergeCertificate>> {
    contains_berge_with(h, f, &DetectOptions::default())
}

pub fn contains_berge_with(
    h: &Hypergraph,
    f: &Graph,
    opts: &DetectOptions,
) -> Result<Option<BergeCertificate>> {
    require_edges(f)?;
    if h.len() < f.edge_count() {
        return Ok(None);
    }
    let shadow = CoveredShadow::new(h);
    let pattern = Pattern::new(f);
    let mut found = None;
    let _ = Embedder::new(&pattern, &shadow.host)
        .with_node_limit(opts.node_limit)
        .for_each(&[], |map| match shadow.certify(f, map) {
            Some(cert) => {
                found = Some(cert);
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        })
        .map_err(|LimitReached| exhausted(opts.node_limit))?;
    Ok(found)
}

/// Looks only at copies of `f` in the shadow that have at least one edge
/// inside hyperedge `through`. Any Berge-`f` that uses `through` is found;
/// every returned certificate is valid for `h`.
///
/// When `h` minus `through` is known to be Berge-`f`-free this decides
/// containment for `h` itself, which is how the exact searches check each
/// insertion.
pub fn contains_berge_through(
    h: &Hypergraph,
    f: &Graph,
    through: usize,
) -> Result<Option<BergeCertificate>> {
    ThroughChecker::new(f)?.check(h, through)
}

/// [`contains_berge_through`] with the pattern preprocessed once, for
/// repeated queries against the same `f`.
#[derive(Clone, Debug)]
pub struct ThroughChecker {
    f: Graph,
    pattern: Pattern,
    /// One edge per orbit of the automorphism group: any copy with some edge
    /// inside `through` can be relabelled to have a representative there.
    reps: Vec<(usize, usize)>,
}

impl ThroughChecker {
    pub fn new(f: &Graph) -> Result<Self> {
        require_edges(f)?;
        let reps = edge_orbits(f).iter().map(|o| f.edges()[o[0]]).collect();
        Ok(ThroughChecker {
            f: f.clone(),
            pattern: Pattern::new(f),
            reps,
        })
    }

    pub fn check(&self, h: &Hypergraph, through: usize) -> Result<Option<BergeCertificate>> {
        let f = &self.f;
        if h.len() < f.edge_count() {
            return Ok(None);
        }
        let shadow = CoveredShadow::new(h);
        let e = &h.hyperedges()[through];
        let mut found = None;
        'outer: for &(a, b) in &self.reps {
            for &x in e {
                for &y in e {
                    if x == y {
                        continue;
                    }
                    let flow = Embedder::new(&self.pattern, &shadow.host)
                        .for_each(&[(a, x), (b, y)], |map| match shadow.certify(f, map) {
                            Some(cert) => {
                                found = Some(cert);
                                ControlFlow::Break(())
                            }
                            None => ControlFlow::Continue(()),
                        })
                        .expect("no node limit configured");
                    if flow.is_break() {
                        break 'outer;
                    }
                }
            }
        }
        Ok(found)
    }
}

/// Re-checks a certificate against the definition: both maps injective,
/// `phi` defined on exactly the edges of `f`, and each edge's image pair
/// inside its hyperedge.
pub fn verify_certificate(h: &Hypergraph, f: &Graph, cert: &BergeCertificate) -> bool {
    if cert.psi.len() != f.n() || cert.phi.len() != f.edge_count() {
        return false;
    }
    let mut used_v = vec![false; h.n()];
    for &x in &cert.psi {
        if x >= h.n() || used_v[x] {
            return false;
        }
        used_v[x] = true;
    }
    let mut used_e = vec![false; h.len()];
    let mut keys: Vec<(usize, usize)> = cert.phi.iter().map(|&(e, _)| e).collect();
    keys.sort_unstable();
    if keys != f.edges() {
        return false;
    }
    for &((u, v), idx) in &cert.phi {
        if idx >= h.len() || used_e[idx] {
            return false;
        }
        used_e[idx] = true;
        if !h.contains_pair(idx, cert.psi[u], cert.psi[v]) {
            return false;
        }
    }
    true
}

/// Number of (unlabeled) copies of `f` in the 2-shadow of `h`: labeled
/// embeddings divided by the automorphism count of `f`.
pub fn count_f_copies_in_shadow(h: &Hypergraph, f: &Graph) -> u64 {
    let host = Host::new(&h.shadow());
    let pattern = Pattern::new(f);
    let labeled = Embedder::new(&pattern, &host)
        .count()
        .expect("no node limit configured");
    labeled / automorphism_count(f)
}
