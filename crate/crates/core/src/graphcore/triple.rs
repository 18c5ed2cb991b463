use std::sync::{Arc, OnceLock};

use super::graph::{part_bounds, Graph, GraphMeta, LabelBlock};
use super::{GraphError, Result};

/// Hyperedges produced on demand instead of stored.
pub trait ImplicitTriples: Send + Sync + std::fmt::Debug {
    /// Total number of hyperedges.
    fn num_edges(&self) -> u64;

    /// Pairs `(u, w)` completing a hyperedge with the global vertex `x`,
    /// as global indices of the two other parts, in the cyclic part order
    /// `(part(x) + 1, part(x) + 2)`.
    fn link_pairs(&self, x: u32) -> Vec<(u32, u32)>;

    /// Visits every hyperedge as sorted global indices.
    fn for_each_edge(&self, f: &mut dyn FnMut([u32; 3]));
}

#[derive(Debug, Clone)]
pub enum TripleEdges {
    /// Sorted, duplicate-free triples, each sorted ascending.
    Explicit(Vec<[u32; 3]>),
    Implicit(Arc<dyn ImplicitTriples>),
}

/// A 3-uniform hypergraph. With three parts it is 3-partite and every triple
/// takes one vertex from each part; with one part it is an arbitrary 3-graph.
#[derive(Debug, Clone)]
pub struct TripleSystem {
    part_sizes: Vec<usize>,
    labels: Option<Vec<LabelBlock>>,
    edges: TripleEdges,
    meta: GraphMeta,
    incidence: OnceLock<Vec<Vec<u32>>>,
}

impl TripleSystem {
    pub fn explicit(part_sizes: Vec<usize>, mut edges: Vec<[u32; 3]>, meta: GraphMeta) -> Result<Self> {
        if part_sizes.len() != 1 && part_sizes.len() != 3 {
            return Err(GraphError::PartCount(part_sizes.len()));
        }
        let n: usize = part_sizes.iter().sum();
        let bounds = part_bounds(&part_sizes);
        let part_of = |v: u32| bounds.iter().rposition(|&b| b <= v as usize).unwrap();
        for e in edges.iter_mut() {
            e.sort_unstable();
            if let Some(&v) = e.iter().find(|&&v| v as usize >= n) {
                return Err(GraphError::UnknownVertex(v as u64));
            }
            if e[0] == e[1] || e[1] == e[2] {
                return Err(GraphError::DegenerateTriple(*e));
            }
            if part_sizes.len() == 3 && (part_of(e[0]), part_of(e[1]), part_of(e[2])) != (0, 1, 2) {
                return Err(GraphError::DegenerateTriple(*e));
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateTriple(w[0]));
        }
        Ok(TripleSystem {
            part_sizes,
            labels: None,
            edges: TripleEdges::Explicit(edges),
            meta,
            incidence: OnceLock::new(),
        })
    }

    pub fn implicit(part_sizes: Vec<usize>, source: Arc<dyn ImplicitTriples>, meta: GraphMeta) -> Self {
        TripleSystem {
            part_sizes,
            labels: None,
            edges: TripleEdges::Implicit(source),
            meta,
            incidence: OnceLock::new(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<LabelBlock>) -> Result<Self> {
        // reuse the graph-side validation
        let g = Graph::empty(self.part_sizes.clone())?.with_labels(labels)?;
        self.labels = g.labels().map(|l| l.to_vec());
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.part_sizes.iter().sum()
    }

    pub fn part_sizes(&self) -> &[usize] {
        &self.part_sizes
    }

    pub fn meta(&self) -> &GraphMeta {
        &self.meta
    }

    pub fn labels(&self) -> Option<&[LabelBlock]> {
        self.labels.as_deref()
    }

    pub fn edges(&self) -> &TripleEdges {
        &self.edges
    }

    pub fn is_explicit(&self) -> bool {
        matches!(self.edges, TripleEdges::Explicit(_))
    }

    pub fn num_edges(&self) -> u64 {
        match &self.edges {
            TripleEdges::Explicit(e) => e.len() as u64,
            TripleEdges::Implicit(src) => src.num_edges(),
        }
    }

    /// All hyperedges; materializes implicit systems.
    pub fn edge_list(&self) -> Vec<[u32; 3]> {
        match &self.edges {
            TripleEdges::Explicit(e) => e.clone(),
            TripleEdges::Implicit(src) => {
                let mut out = Vec::with_capacity(src.num_edges() as usize);
                src.for_each_edge(&mut |e| out.push(e));
                out.sort_unstable();
                out
            }
        }
    }

    pub fn contains(&self, mut e: [u32; 3]) -> bool {
        e.sort_unstable();
        match &self.edges {
            TripleEdges::Explicit(edges) => edges.binary_search(&e).is_ok(),
            TripleEdges::Implicit(src) => src
                .link_pairs(e[0])
                .iter()
                .any(|&(u, w)| (u.min(w), u.max(w)) == (e[1], e[2])),
        }
    }

    pub fn part_range(&self, p: usize) -> std::ops::Range<u32> {
        let start: usize = self.part_sizes[..p].iter().sum();
        start as u32..(start + self.part_sizes[p]) as u32
    }

    pub fn part_of(&self, v: u32) -> usize {
        let bounds = part_bounds(&self.part_sizes);
        bounds.iter().rposition(|&b| b <= v as usize).unwrap()
    }

    pub fn label(&self, v: u32) -> Option<&[u32]> {
        let labels = self.labels.as_ref()?;
        let p = self.part_of(v);
        Some(labels[p].get((v - self.part_range(p).start) as usize))
    }

    /// Global index of the vertex with `label` in `part`.
    pub fn find_label(&self, part: usize, label: &[u32]) -> Option<u32> {
        let block = self.labels.as_ref()?.get(part)?;
        (0..block.len())
            .find(|&i| block.get(i) == label)
            .map(|i| self.part_range(part).start + i as u32)
    }

    fn incidence(&self) -> &Vec<Vec<u32>> {
        self.incidence.get_or_init(|| {
            let mut inc = vec![Vec::new(); self.n()];
            if let TripleEdges::Explicit(edges) = &self.edges {
                for (i, e) in edges.iter().enumerate() {
                    for &v in e {
                        inc[v as usize].push(i as u32);
                    }
                }
            }
            inc
        })
    }

    /// Pairs completing a hyperedge with `x`, as global indices.
    pub fn link_pairs(&self, x: u32) -> Result<Vec<(u32, u32)>> {
        if x as usize >= self.n() {
            return Err(GraphError::UnknownVertex(x as u64));
        }
        Ok(match &self.edges {
            TripleEdges::Implicit(src) => src.link_pairs(x),
            TripleEdges::Explicit(edges) => {
                let cyclic = self.part_sizes.len() == 3;
                let px = if cyclic { self.part_of(x) } else { 0 };
                self.incidence()[x as usize]
                    .iter()
                    .map(|&i| {
                        let e = edges[i as usize];
                        let mut rest = e.iter().copied().filter(|&v| v != x);
                        let (u, w) = (rest.next().unwrap(), rest.next().unwrap());
                        // u < w; put the part following x's part first
                        if cyclic && self.part_of(u) != (px + 1) % 3 {
                            (w, u)
                        } else {
                            (u, w)
                        }
                    })
                    .collect()
            }
        })
    }

    /// The link of `x`. For a 3-partite system this is the bipartite graph on
    /// the parts `(part(x) + 1, part(x) + 2)` taken cyclically; otherwise it is
    /// a graph on all `n` vertices in which `x` is isolated.
    pub fn link_of(&self, x: u32) -> Result<Graph> {
        let pairs = self.link_pairs(x)?;
        let mut meta = GraphMeta::new(format!("link({})", self.meta.family), self.meta.k, self.meta.field.clone());
        if self.part_sizes.len() != 3 {
            meta.family = format!("link({})", self.meta.family);
            let edges: Vec<(u32, u32)> = pairs;
            return Graph::from_edges(vec![self.n()], &edges, meta);
        }
        let p1 = (self.part_of(x) + 1) % 3;
        let p2 = (p1 + 1) % 3;
        let (r1, r2) = (self.part_range(p1), self.part_range(p2));
        let size1 = self.part_sizes[p1] as u32;
        let edges: Vec<(u32, u32)> = pairs
            .into_iter()
            .map(|(u, w)| (u - r1.start, size1 + (w - r2.start)))
            .collect();
        let g = Graph::from_edges(vec![self.part_sizes[p1], self.part_sizes[p2]], &edges, meta)?;
        match &self.labels {
            Some(l) => g.with_labels(vec![l[p1].clone(), l[p2].clone()]),
            None => Ok(g),
        }
    }

    /// Same system with the given hyperedges removed (explicit systems only).
    pub fn without(&self, removed: &[[u32; 3]]) -> Result<TripleSystem> {
        let mut drop: Vec<[u32; 3]> = removed
            .iter()
            .map(|e| {
                let mut e = *e;
                e.sort_unstable();
                e
            })
            .collect();
        drop.sort_unstable();
        let kept: Vec<[u32; 3]> = self
            .edge_list()
            .into_iter()
            .filter(|e| drop.binary_search(e).is_err())
            .collect();
        let mut t = TripleSystem::explicit(self.part_sizes.clone(), kept, self.meta.clone())?;
        t.labels = self.labels.clone();
        Ok(t)
    }
}
