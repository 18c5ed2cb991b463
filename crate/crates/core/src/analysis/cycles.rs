use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::distance::UNREACHABLE;
use super::{AnalysisError, Result};
use crate::graphcore::{Graph, TripleSystem};

/// Simple paths `s = p0, p1, ..., p_len` with every `p_i > s` for `i >= 1`.
/// Calls `visit(path)` with the full vertex sequence.
fn paths_above(g: &Graph, s: u32, len: usize, visit: &mut dyn FnMut(&[u32])) {
    fn go(g: &Graph, s: u32, len: usize, path: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
        if path.len() == len + 1 {
            visit(path);
            return;
        }
        let last = *path.last().unwrap();
        for &w in g.nbrs(last) {
            if w > s && !path[1..].contains(&w) {
                path.push(w);
                go(g, s, len, path, visit);
                path.pop();
            }
        }
    }
    let mut path = vec![s];
    go(g, s, len, &mut path, visit);
}

/// Some cycle of length `len` whose minimum vertex is `s`.
fn cycle_at(g: &Graph, s: u32, len: usize) -> Option<Vec<u32>> {
    let a = len / 2;
    let b = len - a;
    // endpoint -> flattened interiors (a - 1 vertices each)
    let mut short: HashMap<u32, Vec<u32>> = HashMap::new();
    paths_above(g, s, a, &mut |p| {
        short.entry(p[a]).or_default().extend_from_slice(&p[1..a]);
    });
    if short.is_empty() {
        return None;
    }
    let mut found = None;
    let width = a - 1;
    let mut search = |p: &[u32]| {
        if found.is_some() {
            return;
        }
        let Some(bucket) = short.get(&p[b]) else { return };
        let inner = &p[1..b];
        let count = if width == 0 { 1 } else { bucket.len() / width };
        for i in 0..count {
            let other = &bucket[i * width..(i + 1) * width];
            // equal lengths: the same path twice is not a cycle
            if a == b && other == inner {
                continue;
            }
            if other.iter().all(|x| !inner.contains(x)) {
                let mut cyc = vec![s];
                cyc.extend_from_slice(other);
                cyc.push(p[b]);
                cyc.extend(inner.iter().rev());
                found = Some(cyc);
                return;
            }
        }
    };
    paths_above(g, s, b, &mut search);
    found
}

/// A cycle of length exactly `len`, or `None` after exhaustive search.
///
/// Each cycle is looked for from its minimum vertex `s`: the two arcs of the
/// cycle from `s` to the vertex `len / 2` steps away are enumerated as
/// simple paths through vertices above `s` and matched by endpoint. The
/// witness returned is the one at the smallest `s`, so the result does not
/// depend on the thread count.
pub fn has_cycle_of_length(g: &Graph, len: usize) -> Option<Vec<u32>> {
    if len < 3 || len > g.n() || (g.is_bipartite() && len % 2 == 1) {
        return None;
    }
    (0..g.n() as u32)
        .into_par_iter()
        .map(|s| if g.deg(s) < 2 { None } else { cycle_at(g, s, len) })
        .find_first(|c| c.is_some())
        .flatten()
}

fn check_edge(g: &Graph, u: u32, v: u32) -> Result<()> {
    g.degree(u)?;
    g.degree(v)?;
    if g.has_edge(u, v) {
        Ok(())
    } else {
        Err(AnalysisError::NotAnEdge(u, v))
    }
}

/// BFS distances to `target` in `g` minus the edge `{u, v}`.
fn distances_without_edge(g: &Graph, target: u32, u: u32, v: u32) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.n()];
    let mut queue = std::collections::VecDeque::from([target]);
    dist[target as usize] = 0;
    while let Some(x) = queue.pop_front() {
        for &w in g.nbrs(x) {
            if (x == u && w == v) || (x == v && w == u) {
                continue;
            }
            if dist[w as usize] == UNREACHABLE {
                dist[w as usize] = dist[x as usize] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Length of a shortest cycle through the edge `{u, v}`, if any.
pub fn min_cycle_through_edge(g: &Graph, u: u32, v: u32) -> Result<Option<usize>> {
    check_edge(g, u, v)?;
    let d = distances_without_edge(g, u, u, v)[v as usize];
    Ok((d != UNREACHABLE).then_some(d as usize + 1))
}

/// Number of cycles of length `len` through the edge `{u, v}`, each counted
/// once. Counted as simple `v`-`u` paths of length `len - 1`; the DFS is
/// pruned by the distance to `u` in the graph without the edge.
pub fn cycles_through_edge(g: &Graph, u: u32, v: u32, len: usize) -> Result<u64> {
    check_edge(g, u, v)?;
    if len < 3 {
        return Ok(0);
    }
    let dist = distances_without_edge(g, u, u, v);
    let bipartite = g.is_bipartite();
    let steps = len - 1;
    if dist[v as usize] == UNREACHABLE || dist[v as usize] as usize > steps {
        return Ok(0);
    }

    fn go(
        g: &Graph,
        x: u32,
        left: usize,
        target: u32,
        dist: &[u32],
        on_path: &mut [bool],
        bipartite: bool,
    ) -> u64 {
        if left == 0 {
            return (x == target) as u64;
        }
        let mut total = 0;
        for &w in g.nbrs(x) {
            if on_path[w as usize] {
                continue;
            }
            let dw = dist[w as usize];
            let rest = left - 1;
            if dw == UNREACHABLE || dw as usize > rest {
                continue;
            }
            if bipartite && (rest - dw as usize) % 2 == 1 {
                continue;
            }
            if w == target && rest > 0 {
                continue;
            }
            on_path[w as usize] = true;
            total += go(g, w, rest, target, dist, on_path, bipartite);
            on_path[w as usize] = false;
        }
        total
    }

    // split on the first step for parallelism; the sum is order independent
    let first: Vec<u32> = g.nbrs(v).iter().copied().filter(|&w| w != u).collect();
    let total = first
        .par_iter()
        .map(|&w| {
            let rest = steps - 1;
            let dw = dist[w as usize];
            if dw == UNREACHABLE || dw as usize > rest || (bipartite && (rest - dw as usize) % 2 == 1) {
                return 0;
            }
            if w == u {
                return 0;
            }
            let mut on_path = vec![false; g.n()];
            on_path[v as usize] = true;
            on_path[w as usize] = true;
            go(g, w, rest, u, &dist, &mut on_path, bipartite)
        })
        .sum();
    Ok(total)
}

/// A suspended cycle: `apex` together with a cycle in its link.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Suspension {
    pub apex: u32,
    pub cycle: Vec<u32>,
}

fn suspension_at(t: &TripleSystem, x: u32, k: usize) -> Result<Option<Suspension>> {
    let link = t.link_of(x)?;
    let Some(cyc) = has_cycle_of_length(&link, 2 * k) else {
        return Ok(None);
    };
    // back to global indices
    let global: Vec<u32> = if t.part_sizes().len() == 3 {
        let p1 = (t.part_of(x) + 1) % 3;
        let p2 = (p1 + 1) % 3;
        let size1 = t.part_sizes()[p1] as u32;
        cyc.iter()
            .map(|&c| {
                if c < size1 {
                    t.part_range(p1).start + c
                } else {
                    t.part_range(p2).start + (c - size1)
                }
            })
            .collect()
    } else {
        cyc
    };
    Ok(Some(Suspension { apex: x, cycle: global }))
}

/// The first vertex (by index) whose link contains a cycle of length `2k`,
/// with that cycle.
pub fn find_suspension(t: &TripleSystem, k: usize) -> Result<Option<Suspension>> {
    (0..t.n() as u32)
        .into_par_iter()
        .map(|x| suspension_at(t, x, k))
        .find_first(|r| !matches!(r, Ok(None)))
        .unwrap_or(Ok(None))
}

/// Whether no link contains a cycle of length `2k`.
pub fn is_suspension_free(t: &TripleSystem, k: usize) -> Result<bool> {
    Ok(find_suspension(t, k)?.is_none())
}
