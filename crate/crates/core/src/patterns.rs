//! Named builtin pattern graphs.
//!
//! Accepted names: `K<n>` (complete), `P<n>` (path on n vertices), `C<n>`
//! (cycle), `K211`, `Petersen`, and complete bipartite `K<s>,<t>` (also
//! written `K_{s,t}`).

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Names the CLI advertises as builtins.
pub const BUILTIN_NAMES: &[&str] = &[
    "K2", "K3", "K4", "K5", "K6", "P3", "P4", "C4", "C5", "C6", "K211", "Petersen", "K1,1",
    "K1,2", "K1,3", "K1,4", "K2,2", "K2,3", "K2,4", "K3,3", "K3,4", "K4,4",
];

pub fn named_pattern(name: &str) -> Result<Graph> {
    let unknown = || Error::UnknownPattern(name.to_string());
    let trimmed = name.trim();
    match trimmed.to_ascii_lowercase().as_str() {
        "petersen" => return Ok(Graph::petersen()),
        "k211" | "k_{2,1,1}" | "k2,1,1" => return Graph::complete_multipartite(&[2, 1, 1]),
        "triangle" => return Ok(Graph::complete(3)),
        _ => {}
    }
    let mut chars = trimmed.chars();
    let kind = chars.next().ok_or_else(unknown)?;
    let rest = chars.as_str();
    let rest = rest.trim_start_matches('_').trim_start_matches('{').trim_end_matches('}');
    match kind {
        'K' | 'k' => {
            if let Some((s, t)) = rest.split_once(',') {
                let s: usize = s.trim().parse().map_err(|_| unknown())?;
                let t: usize = t.trim().parse().map_err(|_| unknown())?;
                if s == 0 || t == 0 {
                    return Err(unknown());
                }
                Graph::complete_multipartite(&[s, t])
            } else {
                let n: usize = rest.parse().map_err(|_| unknown())?;
                if n == 0 {
                    return Err(unknown());
                }
                Ok(Graph::complete(n))
            }
        }
        'P' | 'p' => {
            let n: usize = rest.parse().map_err(|_| unknown())?;
            if n < 2 {
                return Err(unknown());
            }
            Ok(Graph::path(n))
        }
        'C' | 'c' => {
            let n: usize = rest.parse().map_err(|_| unknown())?;
            Graph::cycle(n).map_err(|_| unknown())
        }
        _ => Err(unknown()),
    }
}
