use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{GraphError, Result};
use crate::field::FieldSpec;

/// Family tag and parameters a graph was built from.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct GraphMeta {
    pub family: String,
    pub k: usize,
    pub field: Option<FieldSpec>,
    /// Declared common degree, checked against every vertex.
    pub regular: Option<usize>,
}

impl GraphMeta {
    pub fn new(family: impl Into<String>, k: usize, field: Option<FieldSpec>) -> Self {
        GraphMeta {
            family: family.into(),
            k,
            field,
            regular: None,
        }
    }
}

/// Labels for the vertices of one part: `width` integers per vertex,
/// strictly increasing in lexicographic order along the part.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LabelBlock {
    width: usize,
    data: Vec<u32>,
}

impl LabelBlock {
    pub fn new(width: usize, data: Vec<u32>) -> Self {
        LabelBlock { width, data }
    }

    /// Labels of the form `(i)`, used for unlabeled parts.
    pub fn indices(len: usize) -> Self {
        LabelBlock {
            width: 1,
            data: (0..len as u32).collect(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        if self.width == 0 {
            0
        } else {
            self.data.len() / self.width
        }
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn get(&self, i: usize) -> &[u32] {
        &self.data[i * self.width..(i + 1) * self.width]
    }

    fn validate(&self, part: usize, size: usize) -> Result<()> {
        if self.width == 0 || self.data.len() != size * self.width {
            return Err(GraphError::LabelCount { part });
        }
        for i in 1..size {
            if self.get(i - 1) >= self.get(i) {
                return Err(GraphError::LabelOrder { part, index: i });
            }
        }
        Ok(())
    }

    fn select(&self, rows: impl Iterator<Item = usize>) -> LabelBlock {
        let mut data = Vec::new();
        for r in rows {
            data.extend_from_slice(self.get(r));
        }
        LabelBlock {
            width: self.width,
            data,
        }
    }
}

/// A simple undirected graph whose vertex set is split into consecutive
/// parts. Two parts mean a bipartite graph and every edge must cross them;
/// a single part is an ordinary graph.
///
/// Adjacency is stored in compressed rows, each row sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    part_sizes: Vec<usize>,
    offsets: Vec<usize>,
    adj: Vec<u32>,
    labels: Option<Vec<LabelBlock>>,
    meta: GraphMeta,
}

impl Graph {
    /// Builds a graph from an edge list. Rejects loops, duplicate edges and,
    /// for two-part graphs, edges inside a part.
    pub fn from_edges(part_sizes: Vec<usize>, edges: &[(u32, u32)], meta: GraphMeta) -> Result<Self> {
        if part_sizes.is_empty() || part_sizes.len() > 3 {
            return Err(GraphError::PartCount(part_sizes.len()));
        }
        let n: usize = part_sizes.iter().sum();
        if n > u32::MAX as usize {
            return Err(GraphError::TooLarge(n));
        }
        let bounds = part_bounds(&part_sizes);
        let part_of = |v: u32| bounds.iter().rposition(|&b| b <= v as usize).unwrap();
        let mut deg = vec![0usize; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w as usize >= n {
                    return Err(GraphError::UnknownVertex(w as u64));
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if part_sizes.len() > 1 && part_of(u) == part_of(v) {
                return Err(GraphError::SamePart(u, v));
            }
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &deg {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut adj = vec![0u32; offsets[n]];
        for &(u, v) in edges {
            adj[fill[u as usize]] = v;
            fill[u as usize] += 1;
            adj[fill[v as usize]] = u;
            fill[v as usize] += 1;
        }
        for v in 0..n {
            let row = &mut adj[offsets[v]..offsets[v + 1]];
            row.sort_unstable();
            if let Some(w) = row.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (v as u32, w[0]);
                return Err(GraphError::DuplicateEdge(a.min(b), a.max(b)));
            }
        }
        let g = Graph {
            part_sizes,
            offsets,
            adj,
            labels: None,
            meta,
        };
        g.check_regularity()?;
        Ok(g)
    }

    /// Empty graph (no edges) with the given parts.
    pub fn empty(part_sizes: Vec<usize>) -> Result<Self> {
        Graph::from_edges(part_sizes, &[], GraphMeta::default())
    }

    pub fn with_labels(mut self, labels: Vec<LabelBlock>) -> Result<Self> {
        if labels.len() != self.part_sizes.len() {
            return Err(GraphError::LabelCount { part: labels.len() });
        }
        for (i, (block, &size)) in labels.iter().zip(&self.part_sizes).enumerate() {
            block.validate(i, size)?;
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn with_regularity(mut self, degree: usize) -> Result<Self> {
        self.meta.regular = Some(degree);
        self.check_regularity()?;
        Ok(self)
    }

    fn check_regularity(&self) -> Result<()> {
        if let Some(d) = self.meta.regular {
            if let Some(v) = (0..self.n()).find(|&v| self.deg(v as u32) != d) {
                return Err(GraphError::Regularity {
                    vertex: v as u32,
                    degree: self.deg(v as u32),
                    declared: d,
                });
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn num_edges(&self) -> usize {
        self.adj.len() / 2
    }

    pub fn part_sizes(&self) -> &[usize] {
        &self.part_sizes
    }

    pub fn is_bipartite(&self) -> bool {
        self.part_sizes.len() == 2
    }

    /// Global index range of part `p`.
    pub fn part_range(&self, p: usize) -> std::ops::Range<u32> {
        let start: usize = self.part_sizes[..p].iter().sum();
        start as u32..(start + self.part_sizes[p]) as u32
    }

    pub fn part_of(&self, v: u32) -> usize {
        let mut start = 0;
        for (p, &s) in self.part_sizes.iter().enumerate() {
            if (v as usize) < start + s {
                return p;
            }
            start += s;
        }
        panic!("vertex {v} out of range")
    }

    pub fn meta(&self) -> &GraphMeta {
        &self.meta
    }

    pub fn meta_mut(&mut self) -> &mut GraphMeta {
        &mut self.meta
    }

    pub fn labels(&self) -> Option<&[LabelBlock]> {
        self.labels.as_deref()
    }

    /// Label of global vertex `v`, if the graph carries labels.
    pub fn label(&self, v: u32) -> Option<&[u32]> {
        let labels = self.labels.as_ref()?;
        let p = self.part_of(v);
        let local = v - self.part_range(p).start;
        Some(labels[p].get(local as usize))
    }

    /// Global index of the vertex with label `label` in part `part`.
    pub fn find_label(&self, part: usize, label: &[u32]) -> Option<u32> {
        let block = &self.labels.as_ref()?[part];
        let (mut lo, mut hi) = (0usize, block.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match block.get(mid).cmp(label) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(self.part_range(part).start + mid as u32),
            }
        }
        None
    }

    fn check(&self, v: u32) -> Result<()> {
        if (v as usize) < self.n() {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v as u64))
        }
    }

    pub fn degree(&self, v: u32) -> Result<usize> {
        self.check(v)?;
        Ok(self.deg(v))
    }

    pub fn neighbors(&self, v: u32) -> Result<&[u32]> {
        self.check(v)?;
        Ok(self.nbrs(v))
    }

    /// Unchecked degree for inner loops.
    #[inline]
    pub fn deg(&self, v: u32) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    /// Unchecked neighbor row for inner loops.
    #[inline]
    pub fn nbrs(&self, v: u32) -> &[u32] {
        &self.adj[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        (u as usize) < self.n() && self.nbrs(u).binary_search(&v).is_ok()
    }

    /// Each edge once, as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.n() as u32).flat_map(move |u| {
            self.nbrs(u)
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
    }

    pub fn edge_list(&self) -> Vec<(u32, u32)> {
        self.edges().collect()
    }

    /// Sorted `(degree, count)` pairs.
    pub fn degree_multiset(&self) -> Vec<(usize, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for v in 0..self.n() as u32 {
            *counts.entry(self.deg(v)).or_insert(0usize) += 1;
        }
        counts.into_iter().collect()
    }

    /// Common degree, if every vertex has the same one.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = if self.n() == 0 { return None } else { self.deg(0) };
        (0..self.n() as u32).all(|v| self.deg(v) == d).then_some(d)
    }

    /// Vertices reachable from `v`, in ascending order.
    pub fn component_vertices(&self, v: u32) -> Result<Vec<u32>> {
        self.check(v)?;
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::from([v]);
        seen[v as usize] = true;
        let mut out = Vec::new();
        while let Some(u) = queue.pop_front() {
            out.push(u);
            for &w in self.nbrs(u) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    queue.push_back(w);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.component_vertices(0).map(|c| c.len() == self.n()).unwrap_or(false)
    }

    /// Induced subgraph on the connected component of `v`, with the map from
    /// new indices back to indices of `self`.
    pub fn component_of(&self, v: u32) -> Result<(Graph, Vec<u32>)> {
        let verts = self.component_vertices(v)?;
        Ok((self.induced(&verts), verts))
    }

    /// Induced subgraph on an ascending vertex list.
    pub fn induced(&self, verts: &[u32]) -> Graph {
        debug_assert!(verts.windows(2).all(|w| w[0] < w[1]));
        let mut new_index = vec![u32::MAX; self.n()];
        for (i, &v) in verts.iter().enumerate() {
            new_index[v as usize] = i as u32;
        }
        let mut part_sizes = vec![0usize; self.part_sizes.len()];
        for &v in verts {
            part_sizes[self.part_of(v)] += 1;
        }
        let mut offsets = Vec::with_capacity(verts.len() + 1);
        offsets.push(0);
        let mut adj = Vec::new();
        for &v in verts {
            adj.extend(
                self.nbrs(v)
                    .iter()
                    .filter_map(|&w| Some(new_index[w as usize]).filter(|&x| x != u32::MAX)),
            );
            offsets.push(adj.len());
        }
        let labels = self.labels.as_ref().map(|blocks| {
            blocks
                .iter()
                .enumerate()
                .map(|(p, block)| {
                    let start = self.part_range(p).start;
                    block.select(
                        verts
                            .iter()
                            .filter(|&&v| self.part_of(v) == p)
                            .map(|&v| (v - start) as usize),
                    )
                })
                .collect()
        });
        let mut meta = self.meta.clone();
        // still regular only if no edges were cut
        if meta.regular.is_some()
            && verts
                .iter()
                .any(|&v| self.nbrs(v).iter().any(|&w| new_index[w as usize] == u32::MAX))
        {
            meta.regular = None;
        }
        Graph {
            part_sizes,
            offsets,
            adj,
            labels,
            meta,
        }
    }

    /// Same graph with vertices renumbered by `perm` (old index -> new index),
    /// as a single-part graph without labels.
    pub fn permuted(&self, perm: &[u32]) -> Graph {
        let edges: Vec<(u32, u32)> = self
            .edges()
            .map(|(u, v)| (perm[u as usize], perm[v as usize]))
            .collect();
        Graph::from_edges(vec![self.n()], &edges, GraphMeta::default())
            .expect("a permutation preserves simplicity")
    }
}

pub(crate) fn part_bounds(part_sizes: &[usize]) -> Vec<usize> {
    let mut bounds = Vec::with_capacity(part_sizes.len());
    let mut start = 0;
    for &s in part_sizes {
        bounds.push(start);
        start += s;
    }
    bounds
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(vec![n], &edges, GraphMeta::default()).unwrap()
    }

    #[test]
    fn degrees_and_neighbors() {
        let g = path(3);
        assert_eq!(g.degree(1).unwrap(), 2);
        assert_eq!(g.neighbors(1).unwrap(), &[0, 2]);
        assert_eq!(g.degree(5), Err(GraphError::UnknownVertex(5)));
        let e = Graph::empty(vec![4]).unwrap();
        assert_eq!(e.degree(2).unwrap(), 0);
        assert_eq!(e.num_edges(), 0);
    }

    #[test]
    fn rejects_bad_edges() {
        let m = GraphMeta::default;
        assert_eq!(
            Graph::from_edges(vec![2, 2], &[(0, 2), (2, 0)], m()),
            Err(GraphError::DuplicateEdge(0, 2))
        );
        assert_eq!(
            Graph::from_edges(vec![2, 2], &[(0, 1)], m()),
            Err(GraphError::SamePart(0, 1))
        );
        assert_eq!(Graph::from_edges(vec![3], &[(1, 1)], m()), Err(GraphError::SelfLoop(1)));
        assert!(Graph::from_edges(vec![3], &[(1, 3)], m()).is_err());
    }

    #[test]
    fn regularity_is_checked() {
        let c4 = Graph::from_edges(vec![2, 2], &[(0, 2), (0, 3), (1, 2), (1, 3)], GraphMeta::default())
            .unwrap();
        assert!(c4.clone().with_regularity(2).is_ok());
        assert!(matches!(c4.with_regularity(3), Err(GraphError::Regularity { .. })));
    }

    #[test]
    fn labels_must_increase() {
        let g = Graph::empty(vec![2]).unwrap();
        assert!(g.clone().with_labels(vec![LabelBlock::new(1, vec![0, 1])]).is_ok());
        assert!(matches!(
            g.clone().with_labels(vec![LabelBlock::new(1, vec![1, 0])]),
            Err(GraphError::LabelOrder { .. })
        ));
        let g = g.with_labels(vec![LabelBlock::new(2, vec![0, 5, 1, 0])]).unwrap();
        assert_eq!(g.label(1), Some(&[1u32, 0][..]));
        assert_eq!(g.find_label(0, &[1, 0]), Some(1));
        assert_eq!(g.find_label(0, &[2, 0]), None);
    }

    #[test]
    fn components_partition_the_vertices() {
        // two triangles and an isolated vertex
        let edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)];
        let g = Graph::from_edges(vec![7], &edges, GraphMeta::default()).unwrap();
        let mut covered = vec![0; 7];
        for v in 0..7 {
            let c = g.component_vertices(v).unwrap();
            assert!(c.contains(&v));
            for &u in &c {
                assert_eq!(g.component_vertices(u).unwrap(), c);
                covered[u as usize] += 1;
            }
        }
        let (sub, map) = g.component_of(4).unwrap();
        assert_eq!(map, vec![3, 4, 5]);
        assert_eq!(sub.num_edges(), 3);
        assert!(!g.is_connected());
        let p = path(4);
        let (whole, _) = p.component_of(0).unwrap();
        assert_eq!(whole, p);
    }
}
