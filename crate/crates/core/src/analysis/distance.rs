use rayon::prelude::*;

use super::{AnalysisError, Result};
use crate::graphcore::Graph;

pub const UNREACHABLE: u32 = u32::MAX;

/// Distances from `s`; `u32::MAX` marks unreachable vertices.
pub fn bfs_distances(g: &Graph, s: u32) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.n()];
    let mut queue = Vec::with_capacity(g.n());
    bfs_into(g, s, &mut dist, &mut queue);
    dist
}

/// BFS reusing buffers; returns the eccentricity of `s` within its component.
fn bfs_into(g: &Graph, s: u32, dist: &mut [u32], queue: &mut Vec<u32>) -> u32 {
    dist.fill(UNREACHABLE);
    queue.clear();
    queue.push(s);
    dist[s as usize] = 0;
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        let du = dist[u as usize] + 1;
        for &w in g.nbrs(u) {
            if dist[w as usize] == UNREACHABLE {
                dist[w as usize] = du;
                queue.push(w);
            }
        }
    }
    dist[*queue.last().unwrap() as usize]
}

/// Largest distance from `v` to a vertex of its component.
pub fn eccentricity(g: &Graph, v: u32) -> Result<usize> {
    g.degree(v)?;
    let mut dist = vec![UNREACHABLE; g.n()];
    Ok(bfs_into(g, v, &mut dist, &mut Vec::new()) as usize)
}

/// Eccentricities of up to 64 sources at once, one bit per source.
fn batch_eccentricities(g: &Graph, sources: &[u32], bufs: &mut [Vec<u64>; 3]) -> Vec<u32> {
    debug_assert!(sources.len() <= 64);
    let n = g.n();
    let [seen, frontier, next] = bufs;
    seen.clear();
    seen.resize(n, 0);
    frontier.clear();
    frontier.resize(n, 0);
    next.resize(n, 0);
    for (i, &s) in sources.iter().enumerate() {
        seen[s as usize] |= 1 << i;
        frontier[s as usize] |= 1 << i;
    }
    let mut ecc = vec![0u32; sources.len()];
    let mut level = 0;
    loop {
        level += 1;
        let mut any = 0u64;
        for v in 0..n {
            let mut x = 0u64;
            for &w in g.nbrs(v as u32) {
                x |= frontier[w as usize];
            }
            x &= !seen[v];
            next[v] = x;
            any |= x;
        }
        if any == 0 {
            return ecc;
        }
        for v in 0..n {
            seen[v] |= next[v];
        }
        while any != 0 {
            ecc[any.trailing_zeros() as usize] = level;
            any &= any - 1;
        }
        std::mem::swap(frontier, next);
    }
}

/// Exact diameter of a connected graph.
///
/// A double sweep gives a lower bound first. Every source `v` then has
/// `ecc(v) <= d(c, v) + ecc(c)` for the sweep start `c`, and sources whose
/// bound cannot beat the lower bound are skipped. The rest are searched 64 at
/// a time by a bit-parallel BFS.
pub fn diameter(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n == 0 {
        return Err(AnalysisError::Empty);
    }
    let mut queue = Vec::with_capacity(n);
    let mut from_c = vec![UNREACHABLE; n];
    let ecc_c = bfs_into(g, 0, &mut from_c, &mut queue);
    if queue.len() != n {
        return Err(AnalysisError::Disconnected);
    }
    let far = *queue.last().unwrap();
    let mut scratch = vec![UNREACHABLE; n];
    let lower = bfs_into(g, far, &mut scratch, &mut queue).max(ecc_c);

    let candidates: Vec<u32> = (0..n as u32)
        .filter(|&v| from_c[v as usize] + ecc_c > lower)
        .collect();
    let upper = candidates
        .par_chunks(64)
        .map_init(
            || [Vec::new(), Vec::new(), Vec::new()],
            |bufs, chunk| batch_eccentricities(g, chunk, bufs).into_iter().max().unwrap_or(0),
        )
        .max()
        .unwrap_or(0);
    Ok(lower.max(upper) as usize)
}

#[cfg(test)]
mod tests {
    use super::super::oracle;
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_examples() {
        let path = oracle::graph(3, &[(0, 1), (1, 2)]);
        assert_eq!(diameter(&path), Ok(2));
        assert_eq!(eccentricity(&path, 1), Ok(1));
        assert_eq!(diameter(&oracle::graph(1, &[])), Ok(0));
        assert_eq!(diameter(&oracle::graph(3, &[(0, 1)])), Err(AnalysisError::Disconnected));
        let c = oracle::graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        assert_eq!(diameter(&c), Ok(3));
        assert_eq!(bfs_distances(&c, 0), vec![0, 1, 2, 3, 2, 1]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(150))]
        #[test]
        fn matches_floyd_warshall(g in oracle::arb_graph(12)) {
            let d = oracle::distances(&g);
            let connected = d.iter().all(|row| row.iter().all(|&x| x != usize::MAX));
            match diameter(&g) {
                Ok(diam) => {
                    prop_assert!(connected);
                    prop_assert_eq!(diam, d.iter().flatten().copied().max().unwrap());
                }
                Err(e) => {
                    prop_assert!(!connected);
                    prop_assert_eq!(e, AnalysisError::Disconnected);
                }
            }
            for v in 0..g.n() {
                let ecc = d[v].iter().copied().filter(|&x| x != usize::MAX).max().unwrap();
                prop_assert_eq!(eccentricity(&g, v as u32).unwrap(), ecc);
            }
        }
    }
}
