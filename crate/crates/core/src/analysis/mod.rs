//! Girth, exact-length cycles, diameter, suspension-freeness and
//! isomorphism evidence.

mod cycles;
mod distance;
mod girth;
mod iso;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graphcore::GraphError;

pub use cycles::{
    cycles_through_edge, find_suspension, has_cycle_of_length, is_suspension_free, min_cycle_through_edge,
    Suspension,
};
pub use distance::{bfs_distances, diameter, eccentricity};
pub use girth::girth;
pub use iso::{compare, signature, signature_with, verify_iso_map, InvariantSignature, IsoError, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(u32, u32),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub type Result<T> = std::result::Result<T, AnalysisError>;

/// Outcome of a girth search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Girth {
    Exact(usize),
    /// Certificate from a capped search: no cycle of length below the bound.
    AtLeast(usize),
    /// The graph is a forest.
    Infinite,
}

impl Girth {
    pub fn exact(self) -> Option<usize> {
        match self {
            Girth::Exact(g) => Some(g),
            _ => None,
        }
    }

    /// Whether the girth is certainly at least `bound`.
    pub fn at_least(self, bound: usize) -> bool {
        match self {
            Girth::Exact(g) | Girth::AtLeast(g) => g >= bound,
            Girth::Infinite => true,
        }
    }
}

impl std::fmt::Display for Girth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Girth::Exact(g) => write!(f, "{g}"),
            Girth::AtLeast(g) => write!(f, ">={g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

#[cfg(test)]
pub(crate) mod oracle {
    //! Brute-force references for small graphs.

    use crate::graphcore::{Graph, GraphMeta};
    use proptest::prelude::*;

    pub fn graph(n: usize, edges: &[(u32, u32)]) -> Graph {
        Graph::from_edges(vec![n], edges, GraphMeta::default()).unwrap()
    }

    pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
        let n = g.n();
        let mut a = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            a[u as usize][v as usize] = true;
            a[v as usize][u as usize] = true;
        }
        a
    }

    /// Every cycle once, as a vertex sequence starting at its minimum
    /// vertex with the second vertex smaller than the last.
    pub fn all_cycles(g: &Graph) -> Vec<Vec<u32>> {
        let a = adjacency(g);
        let n = g.n();
        let mut out = Vec::new();
        fn extend(a: &[Vec<bool>], path: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<u32>>) {
            let (s, last) = (path[0], *path.last().unwrap());
            if path.len() >= 3 && a[last][s] && path[1] < last {
                out.push(path.iter().map(|&x| x as u32).collect());
            }
            for w in s + 1..a.len() {
                if a[last][w] && !used[w] {
                    used[w] = true;
                    path.push(w);
                    extend(a, path, used, out);
                    path.pop();
                    used[w] = false;
                }
            }
        }
        for s in 0..n {
            let mut used = vec![false; n];
            used[s] = true;
            extend(&a, &mut vec![s], &mut used, &mut out);
        }
        out
    }

    /// Floyd-Warshall distances; `usize::MAX` when unreachable.
    pub fn distances(g: &Graph) -> Vec<Vec<usize>> {
        let n = g.n();
        let a = adjacency(g);
        let mut d = vec![vec![usize::MAX; n]; n];
        for i in 0..n {
            d[i][i] = 0;
            for j in 0..n {
                if a[i][j] {
                    d[i][j] = 1;
                }
            }
        }
        for m in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if d[i][m] != usize::MAX && d[m][j] != usize::MAX && d[i][m] + d[m][j] < d[i][j] {
                        d[i][j] = d[i][m] + d[m][j];
                    }
                }
            }
        }
        d
    }

    pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n, 5u8..70)
            .prop_flat_map(|(n, density)| {
                let m = n * (n - 1) / 2;
                (Just(n), Just(density), proptest::collection::vec(0u8..100, m))
            })
            .prop_map(|(n, density, rolls)| {
                let pairs = (0..n as u32).flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)));
                let edges: Vec<(u32, u32)> = pairs
                    .zip(rolls)
                    .filter(|&(_, r)| r < density)
                    .map(|(e, _)| e)
                    .collect();
                graph(n, &edges)
            })
    }
}
