use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{cycles_through_edge, diameter, girth, min_cycle_through_edge, Girth, Result};
use crate::graphcore::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("graphs have {g} and {h} vertices")]
    OrderMismatch { g: usize, h: usize },
    #[error("map has {got} entries for {expected} vertices")]
    Length { expected: usize, got: usize },
    #[error("vertex {vertex} maps to {image}, outside the target")]
    OutOfRange { vertex: u32, image: u32 },
    #[error("vertices {a} and {b} both map to {image}")]
    Collision { a: u32, b: u32, image: u32 },
    #[error("edge {u}-{v} maps to a non-edge")]
    EdgeNotPreserved { u: u32, v: u32 },
    #[error("target edge {u}-{v} has a non-adjacent preimage")]
    EdgeNotReflected { u: u32, v: u32 },
    #[error("graphs have {g} and {h} edges")]
    EdgeCountMismatch { g: usize, h: usize },
}

/// Checks that `map` (indexed by vertices of `g`) is a bijection onto the
/// vertices of `h` with `uv` an edge of `g` iff `map(u)map(v)` is an edge of `h`.
pub fn verify_iso_map(g: &Graph, h: &Graph, map: &[u32]) -> std::result::Result<(), IsoError> {
    if g.n() != h.n() {
        return Err(IsoError::OrderMismatch { g: g.n(), h: h.n() });
    }
    if map.len() != g.n() {
        return Err(IsoError::Length {
            expected: g.n(),
            got: map.len(),
        });
    }
    let mut inverse = vec![u32::MAX; h.n()];
    for (v, &img) in map.iter().enumerate() {
        let v = v as u32;
        if img as usize >= h.n() {
            return Err(IsoError::OutOfRange { vertex: v, image: img });
        }
        let prev = inverse[img as usize];
        if prev != u32::MAX {
            return Err(IsoError::Collision { a: prev, b: v, image: img });
        }
        inverse[img as usize] = v;
    }
    if g.num_edges() != h.num_edges() {
        return Err(IsoError::EdgeCountMismatch {
            g: g.num_edges(),
            h: h.num_edges(),
        });
    }
    for (u, v) in g.edges() {
        if !h.has_edge(map[u as usize], map[v as usize]) {
            return Err(IsoError::EdgeNotPreserved { u, v });
        }
    }
    for (u, v) in h.edges() {
        if !g.has_edge(inverse[u as usize], inverse[v as usize]) {
            return Err(IsoError::EdgeNotReflected { u, v });
        }
    }
    Ok(())
}

/// Isomorphism invariants of a graph relative to a base vertex and edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantSignature {
    pub part_orders: Vec<usize>,
    pub degree_multiset: Vec<(usize, usize)>,
    pub girth: Girth,
    /// Diameter of the component containing the base vertex.
    pub diameter: usize,
    pub base_edge: (u32, u32),
    /// Shortest cycle length through the base edge.
    pub min_cycle_len: Option<usize>,
    /// Cycles of length `min_cycle_len` through the base edge.
    pub cycle_count: u64,
}

pub fn signature(g: &Graph, base_vertex: u32, base_edge: (u32, u32)) -> Result<InvariantSignature> {
    signature_with(g, base_vertex, base_edge, None)
}

/// [`signature`] with the girth search capped at `girth_cap`.
pub fn signature_with(
    g: &Graph,
    base_vertex: u32,
    base_edge: (u32, u32),
    girth_cap: Option<usize>,
) -> Result<InvariantSignature> {
    let (u, v) = base_edge;
    let min_cycle_len = min_cycle_through_edge(g, u, v)?;
    let cycle_count = match min_cycle_len {
        Some(len) => cycles_through_edge(g, u, v, len)?,
        None => 0,
    };
    let (component, _) = g.component_of(base_vertex)?;
    Ok(InvariantSignature {
        part_orders: g.part_sizes().to_vec(),
        degree_multiset: g.degree_multiset(),
        girth: girth(g, girth_cap),
        diameter: diameter(&component)?,
        base_edge,
        min_cycle_len,
        cycle_count,
    })
}

/// Result of comparing two signatures. Equal invariants never prove
/// isomorphism, so there is no "isomorphic" outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    NonIsomorphic { differing: Vec<String> },
    Indistinguishable,
}

fn girths_differ(a: Girth, b: Girth) -> bool {
    use Girth::*;
    match (a, b) {
        (Exact(x), Exact(y)) => x != y,
        (Exact(x), AtLeast(y)) | (AtLeast(y), Exact(x)) => x < y,
        (Infinite, Exact(_)) | (Exact(_), Infinite) => true,
        _ => false,
    }
}

pub fn compare(a: &InvariantSignature, b: &InvariantSignature) -> Verdict {
    let mut differing = Vec::new();
    if a.part_orders != b.part_orders {
        differing.push(format!("part orders {:?} vs {:?}", a.part_orders, b.part_orders));
    }
    if a.degree_multiset != b.degree_multiset {
        differing.push("degree multiset".to_string());
    }
    if girths_differ(a.girth, b.girth) {
        differing.push(format!("girth {} vs {}", a.girth, b.girth));
    }
    if a.diameter != b.diameter {
        differing.push(format!("diameter {} vs {}", a.diameter, b.diameter));
    }
    if a.min_cycle_len != b.min_cycle_len {
        differing.push(format!("min cycle length {:?} vs {:?}", a.min_cycle_len, b.min_cycle_len));
    }
    if a.cycle_count != b.cycle_count {
        differing.push(format!("cycle count {} vs {}", a.cycle_count, b.cycle_count));
    }
    if differing.is_empty() {
        Verdict::Indistinguishable
    } else {
        Verdict::NonIsomorphic { differing }
    }
}

#[cfg(test)]
mod tests {
    use super::super::oracle;
    use super::*;
    use crate::dseries::{build_bipartite, table2_map, DFamily, DVertex, Side};
    use crate::field::{Field, FieldElem};

    #[test]
    fn identity_and_failures() {
        let f = Field::for_order(3).unwrap();
        let d = build_bipartite(DFamily::D, 2, &f).unwrap();
        let id: Vec<u32> = (0..d.n() as u32).collect();
        assert_eq!(verify_iso_map(&d, &d, &id), Ok(()));
        let mut bad = id.clone();
        bad[1] = 0;
        assert_eq!(verify_iso_map(&d, &d, &bad), Err(IsoError::Collision { a: 0, b: 1, image: 0 }));
        let mut swapped = id.clone();
        swapped.swap(0, 1);
        assert!(matches!(
            verify_iso_map(&d, &d, &swapped),
            Err(IsoError::EdgeNotPreserved { .. })
        ));
        assert!(matches!(verify_iso_map(&d, &d, &id[1..]), Err(IsoError::Length { .. })));
        let p3 = oracle::graph(3, &[(0, 1), (1, 2)]);
        let p3b = oracle::graph(3, &[(0, 1)]);
        assert!(matches!(
            verify_iso_map(&p3, &p3b, &[0, 1, 2]),
            Err(IsoError::EdgeCountMismatch { .. })
        ));
    }

    #[test]
    fn table2_passes_on_small_case() {
        let f = Field::for_order(3).unwrap();
        let k = 4;
        let dp = build_bipartite(DFamily::Dprime, k, &f).unwrap();
        let d = build_bipartite(DFamily::D, k, &f).unwrap();
        let map: Vec<u32> = (0..dp.n() as u32)
            .map(|v| {
                let side = if dp.part_of(v) == 0 { Side::A } else { Side::B };
                let coords: Vec<FieldElem> = dp.label(v).unwrap().iter().map(|&x| FieldElem::from_raw(x)).collect();
                let img = table2_map(&f, &DVertex::new(side, coords)).unwrap();
                let raw: Vec<u32> = img.coords.iter().map(|c| c.value()).collect();
                d.find_label(side.index(), &raw).unwrap()
            })
            .collect();
        assert_eq!(verify_iso_map(&dp, &d, &map), Ok(()));
    }

    #[test]
    fn signatures() {
        let f = Field::for_order(3).unwrap();
        let d = build_bipartite(DFamily::D, 3, &f).unwrap();
        let s = signature(&d, 0, (0, 27)).unwrap();
        assert_eq!(compare(&s, &s), Verdict::Indistinguishable);
        assert_eq!(s.girth, Girth::Exact(8));
        assert_eq!(s.min_cycle_len, Some(8));
        let c6 = oracle::graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]);
        let c3 = oracle::graph(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        let (a, b) = (signature(&c6, 0, (0, 1)).unwrap(), signature(&c3, 0, (0, 1)).unwrap());
        assert_eq!(a.diameter, 3);
        match compare(&a, &b) {
            Verdict::NonIsomorphic { differing } => assert!(differing.iter().any(|d| d.starts_with("girth"))),
            v => panic!("{v:?}"),
        }
        assert!(!girths_differ(Girth::AtLeast(5), Girth::Exact(6)));
        assert!(girths_differ(Girth::AtLeast(7), Girth::Exact(6)));
    }
}
