use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::Girth;
use crate::graphcore::Graph;

/// Reusable BFS buffers. `mark[v]` packs the generation of the last search
/// that reached `v` (high half) with its distance (low half), so nothing is
/// cleared between sources.
pub(crate) struct Workspace {
    mark: Vec<u64>,
    queue: Vec<u32>,
    generation: u64,
}

impl Workspace {
    pub(crate) fn new(n: usize) -> Self {
        Workspace {
            mark: vec![0; n],
            queue: Vec::with_capacity(n),
            generation: 0,
        }
    }

    /// Shortest cycle seen by a BFS from `s`, considering only lengths
    /// `<= limit`. Every shortest cycle through `s` is found.
    ///
    /// A neighbor `w` of `u` with `dist(w) < dist(u)` is either the BFS
    /// parent or closes a cycle already reported when `w` was expanded, so
    /// only neighbors at the same or the next level are examined.
    fn shortest_cycle_from(&mut self, g: &Graph, s: u32, mut limit: usize, bipartite: bool) -> Option<usize> {
        self.generation += 1;
        let tag = self.generation << 32;
        self.queue.clear();
        self.queue.push(s);
        self.mark[s as usize] = tag;
        let mut best = None;
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            let d = self.mark[u as usize] & 0xffff_ffff;
            // shortest cycle detectable from here
            let floor = if bipartite { 2 * d + 2 } else { 2 * d + 1 };
            if floor as usize > limit {
                break;
            }
            for &w in g.nbrs(u) {
                let m = self.mark[w as usize];
                if m >> 32 == self.generation {
                    let dw = m & 0xffff_ffff;
                    if dw >= d {
                        let len = (d + dw + 1) as usize;
                        if len <= limit {
                            best = Some(len);
                            limit = len - 1;
                        }
                    }
                } else {
                    self.mark[w as usize] = tag | (d + 1);
                    self.queue.push(w);
                }
            }
        }
        best
    }
}

/// Length of a shortest cycle. With `cap`, only cycles of length at most
/// `cap` are searched for and `Girth::AtLeast(cap + 1)` certifies that none
/// exists.
///
/// Bipartite graphs are searched from one part only, since every cycle
/// meets both parts.
pub fn girth(g: &Graph, cap: Option<usize>) -> Girth {
    let n = g.n();
    if n == 0 {
        return Girth::Infinite;
    }
    let bipartite = g.is_bipartite();
    let limit = cap.unwrap_or(usize::MAX).min(n);
    let sources: Vec<u32> = if bipartite {
        g.part_range(0).collect()
    } else {
        (0..n as u32).collect()
    };

    // a cheap upper bound from the first source with an edge
    let mut first = Workspace::new(n);
    let seed = sources.iter().copied().find(|&s| g.deg(s) >= 2);
    let initial = seed
        .and_then(|s| first.shortest_cycle_from(g, s, limit, bipartite))
        .unwrap_or(usize::MAX);
    let best = AtomicUsize::new(initial);

    sources.par_iter().for_each_init(
        || Workspace::new(n),
        |ws, &s| {
            if g.deg(s) < 2 {
                return;
            }
            let cur = best.load(Ordering::Relaxed);
            let lim = if cur == usize::MAX { limit } else { limit.min(cur - 1) };
            if let Some(len) = ws.shortest_cycle_from(g, s, lim, bipartite) {
                best.fetch_min(len, Ordering::Relaxed);
            }
        },
    );

    match best.into_inner() {
        usize::MAX => match cap {
            Some(c) if c < n => Girth::AtLeast(c + 1),
            _ => Girth::Infinite,
        },
        g => Girth::Exact(g),
    }
}

#[cfg(test)]
mod tests {
    use super::super::oracle;
    use super::*;
    use crate::dseries::{build_bipartite, DFamily};
    use crate::field::Field;
    use proptest::prelude::*;

    fn cycle(n: u32) -> Graph {
        let edges: Vec<(u32, u32)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        oracle::graph(n as usize, &edges)
    }

    #[test]
    fn small_examples() {
        assert_eq!(girth(&cycle(4), None), Girth::Exact(4));
        assert_eq!(girth(&cycle(7), None), Girth::Exact(7));
        assert_eq!(girth(&cycle(7), Some(5)), Girth::AtLeast(6));
        assert_eq!(girth(&oracle::graph(4, &[(0, 1), (1, 2), (1, 3)]), None), Girth::Infinite);
        assert_eq!(girth(&oracle::graph(4, &[(0, 1), (1, 2), (1, 3)]), Some(3)), Girth::AtLeast(4));
        assert_eq!(girth(&oracle::graph(1, &[]), None), Girth::Infinite);
        // Petersen graph
        let outer: Vec<(u32, u32)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let inner: Vec<(u32, u32)> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
        let spokes: Vec<(u32, u32)> = (0..5).map(|i| (i, i + 5)).collect();
        let all: Vec<_> = [outer, inner, spokes].concat();
        assert_eq!(girth(&oracle::graph(10, &all), None), Girth::Exact(5));
    }

    #[test]
    fn d_graphs() {
        let f = Field::for_order(3).unwrap();
        assert_eq!(girth(&build_bipartite(DFamily::D, 2, &f).unwrap(), None), Girth::Exact(6));
        assert_eq!(girth(&build_bipartite(DFamily::D, 3, &f).unwrap(), None), Girth::Exact(8));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(150))]
        #[test]
        fn matches_cycle_enumeration(g in oracle::arb_graph(10)) {
            let expected = oracle::all_cycles(&g).iter().map(|c| c.len()).min();
            let got = girth(&g, None);
            match expected {
                Some(len) => prop_assert_eq!(got, Girth::Exact(len)),
                None => prop_assert_eq!(got, Girth::Infinite),
            }
            if let Some(len) = expected {
                let capped = girth(&g, Some(len - 1));
                prop_assert!(capped == Girth::AtLeast(len) || len - 1 >= g.n());
            }
        }
    }
}
