//! Point-line incidence graphs of small Desarguesian projective planes.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const SUPPORTED_ORDERS: &[usize] = &[2, 3, 4, 5, 7];

// GF(4) = {0, 1, a, a+1} encoded 0..3; addition is XOR.
const GF4_MUL: [[usize; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

#[derive(Clone, Copy, Debug)]
struct Field {
    q: usize,
}

impl Field {
    fn new(q: usize) -> Result<Self> {
        if !SUPPORTED_ORDERS.contains(&q) {
            return Err(Error::InvalidParameter(format!(
                "unsupported projective plane order {q}; supported: {SUPPORTED_ORDERS:?}"
            )));
        }
        Ok(Field { q })
    }

    fn add(self, a: usize, b: usize) -> usize {
        if self.q == 4 {
            a ^ b
        } else {
            (a + b) % self.q
        }
    }

    fn mul(self, a: usize, b: usize) -> usize {
        if self.q == 4 {
            GF4_MUL[a][b]
        } else {
            (a * b) % self.q
        }
    }

    fn dot(self, x: [usize; 3], y: [usize; 3]) -> usize {
        (0..3).fold(0, |acc, i| self.add(acc, self.mul(x[i], y[i])))
    }

    /// Representatives of the 1-dimensional subspaces of GF(q)^3, with the
    /// first nonzero coordinate equal to 1.
    fn normalized_vectors(self) -> Vec<[usize; 3]> {
        let q = self.q;
        let mut out = Vec::with_capacity(q * q + q + 1);
        for a in 0..q {
            for b in 0..q {
                out.push([1, a, b]);
            }
        }
        for b in 0..q {
            out.push([0, 1, b]);
        }
        out.push([0, 0, 1]);
        out
    }
}

/// Incidence graph of PG(2, q): points are vertices `0..N`, lines are
/// `N..2N` with `N = q^2 + q + 1`. The graph is bipartite and contains no C4.
pub fn projective_incidence_graph(q: usize) -> Result<Graph> {
    let field = Field::new(q)?;
    let vectors = field.normalized_vectors();
    let n = vectors.len();
    let mut edges = Vec::with_capacity(n * (q + 1));
    for (p, &x) in vectors.iter().enumerate() {
        for (l, &y) in vectors.iter().enumerate() {
            if field.dot(x, y) == 0 {
                edges.push((p, n + l));
            }
        }
    }
    Graph::new(2 * n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::contains_subgraph;

    #[test]
    fn fano_plane() {
        let g = projective_incidence_graph(2).unwrap();
        assert_eq!(g.n(), 14);
        assert_eq!(g.edge_count(), 21);
        assert!(g.degrees().iter().all(|&d| d == 3));
        assert!(!contains_subgraph(&Graph::cycle(4).unwrap(), &g));
        assert!(contains_subgraph(&Graph::cycle(6).unwrap(), &g));
    }

    #[test]
    fn all_orders_are_c4_free_and_regular() {
        let c4 = Graph::cycle(4).unwrap();
        for &q in SUPPORTED_ORDERS {
            let g = projective_incidence_graph(q).unwrap();
            let n = q * q + q + 1;
            assert_eq!(g.n(), 2 * n);
            assert_eq!(g.edge_count(), n * (q + 1));
            assert!(g.degrees().iter().all(|&d| d == q + 1));
            assert!(g.is_bipartite());
            assert!(!contains_subgraph(&c4, &g), "q = {q}");
        }
    }

    #[test]
    fn gf4_is_a_field() {
        let f = Field::new(4).unwrap();
        for a in 1..4 {
            assert!((1..4).any(|b| f.mul(a, b) == 1));
            for b in 0..4 {
                for c in 0..4 {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                }
            }
        }
    }

    #[test]
    fn unsupported_order() {
        assert!(projective_incidence_graph(6).is_err());
        assert!(projective_incidence_graph(8).is_err());
    }
}
