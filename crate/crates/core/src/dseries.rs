//! The graphs D(k,q), D'(k,q) and the 3-partite 3-graph D3(k,q).
//!
//! Vertices are vectors in F_q^k indexed by the coordinate scheme
//! `(1), (1,1), (1,2), (2,1), (2,2), (2,2)', (2,3), (3,2), ...`. Adjacency is a
//! triangular system: relation `j` (for `1 <= j < k`, 0-based target
//! position) is linear in coordinate `j` of every vertex and otherwise only
//! reads earlier coordinates, so fixing one vertex and the first coordinate
//! of the other determines the rest.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{Field, FieldElem};
use crate::graphcore::{Graph, GraphError, GraphMeta, ImplicitTriples, LabelBlock, TripleSystem};

/// Bipartite builders refuse graphs with more vertices than this.
pub const MAX_GRAPH_VERTICES: u64 = 10_000_000;
/// Explicit triple systems refuse more hyperedges than this.
pub const MAX_EXPLICIT_TRIPLES: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DSeriesError {
    #[error("k must be at least 2, got {0}")]
    SmallK(usize),
    #[error("{what} would have {size} elements, above the limit {limit}")]
    TooLarge { what: &'static str, size: u64, limit: u64 },
    #[error("vector has {got} coordinates, expected {expected}")]
    Length { expected: usize, got: usize },
    #[error("the explicit isomorphism is only defined for k <= 6, got {0}")]
    Table2Range(usize),
    #[error("operation needs characteristic 3, field has characteristic {0}")]
    Characteristic(u32),
    #[error("vertex on side {0:?} where another side is required")]
    WrongSide(Side),
    #[error("cannot read vertex {0:?}")]
    BadVertex(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub type Result<T> = std::result::Result<T, DSeriesError>;

/// Name of a coordinate. `Diag(i)` is `(i,i)`, `DiagPrime(i)` is `(i,i)'`,
/// `Upper(i)` is `(i,i+1)` and `Lower(i)` is `(i+1,i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoordLabel {
    One,
    Diag(usize),
    DiagPrime(usize),
    Upper(usize),
    Lower(usize),
}

impl CoordLabel {
    /// 0-based position in the coordinate vector. `(1,1)'` has no position
    /// of its own; it is an alias of `(1,1)`.
    pub fn position(self) -> usize {
        match self {
            CoordLabel::One => 0,
            CoordLabel::Diag(1) | CoordLabel::DiagPrime(1) => 1,
            CoordLabel::Upper(1) => 2,
            CoordLabel::Lower(1) => 3,
            CoordLabel::Diag(i) => 4 * i - 4,
            CoordLabel::DiagPrime(i) => 4 * i - 3,
            CoordLabel::Upper(i) => 4 * i - 2,
            CoordLabel::Lower(i) => 4 * i - 1,
        }
    }

    /// Inverse of [`CoordLabel::position`].
    pub fn at(pos: usize) -> CoordLabel {
        match pos {
            0 => CoordLabel::One,
            1 => CoordLabel::Diag(1),
            2 => CoordLabel::Upper(1),
            3 => CoordLabel::Lower(1),
            _ => {
                let i = pos / 4 + 1;
                match pos % 4 {
                    0 => CoordLabel::Diag(i),
                    1 => CoordLabel::DiagPrime(i),
                    2 => CoordLabel::Upper(i),
                    _ => CoordLabel::Lower(i),
                }
            }
        }
    }
}

impl fmt::Display for CoordLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CoordLabel::One => write!(f, "(1)"),
            CoordLabel::Diag(i) => write!(f, "({i},{i})"),
            CoordLabel::DiagPrime(i) => write!(f, "({i},{i})'"),
            CoordLabel::Upper(i) => write!(f, "({},{})", i, i + 1),
            CoordLabel::Lower(i) => write!(f, "({},{})", i + 1, i),
        }
    }
}

/// The first `k` coordinate labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordScheme {
    labels: Vec<CoordLabel>,
}

impl CoordScheme {
    pub fn new(k: usize) -> Self {
        CoordScheme {
            labels: (0..k).map(CoordLabel::at).collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[CoordLabel] {
        &self.labels
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
    C,
}

impl Side {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Side {
        [Side::A, Side::B, Side::C][i % 3]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DVertex {
    pub side: Side,
    pub coords: Vec<FieldElem>,
}

impl DVertex {
    pub fn new(side: Side, coords: Vec<FieldElem>) -> Self {
        DVertex { side, coords }
    }

    pub fn zero(side: Side, k: usize) -> Self {
        DVertex {
            side,
            coords: vec![FieldElem::ZERO; k],
        }
    }

    /// `(a1, 0, ..., 0)`
    pub fn axis(side: Side, k: usize, a1: FieldElem) -> Self {
        let mut v = DVertex::zero(side, k);
        v.coords[0] = a1;
        v
    }

    pub fn k(&self) -> usize {
        self.coords.len()
    }

    /// Reads `A:(v1,...,vk)`, checking each scalar against the field.
    pub fn parse(field: &Field, s: &str) -> Result<Self> {
        let bad = || DSeriesError::BadVertex(s.to_string());
        let (name, body) = s.trim().split_once(':').ok_or_else(bad)?;
        let side = match name {
            "A" => Side::A,
            "B" => Side::B,
            "C" => Side::C,
            _ => return Err(bad()),
        };
        let inner = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')).ok_or_else(bad)?;
        let coords = crate::field::parse_list(inner)
            .ok_or_else(bad)?
            .into_iter()
            .map(|c| field.elem(c as u64).map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        if coords.is_empty() {
            return Err(bad());
        }
        Ok(DVertex { side, coords })
    }
}

/// `A:(v1,...,vk)`
impl fmt::Display for DVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "{:?}:({})", self.side, body.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DFamily {
    D,
    Dprime,
}

impl DFamily {
    pub fn tag(self) -> &'static str {
        match self {
            DFamily::D => "D",
            DFamily::Dprime => "Dprime",
        }
    }
}

/// One defining relation, for target position `target`:
///
/// `x[target] + y[target] + x[u]*y[v] + coeff*(x[s] + y[s]) = 0`
///
/// for the bipartite families (`coeff = 0` for D), and for D3
///
/// `a[t] + b[t] + c[t] + a[u]b[v] + b[u]c[v] + c[u]a[v] = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Relation {
    pub target: usize,
    pub u: usize,
    pub v: usize,
    /// Extra linear term of D': position and integer coefficient.
    pub partner: (usize, i64),
}

/// The first `k - 1` relations, checked to be triangular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationTable {
    k: usize,
    rels: Vec<Relation>,
}

impl RelationTable {
    pub fn new(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(DSeriesError::SmallK(k));
        }
        use CoordLabel::*;
        let rels: Vec<Relation> = (1..k)
            .map(|target| {
                let (u, v) = match CoordLabel::at(target) {
                    Diag(1) => (0, 0),
                    Diag(i) => (Upper(i - 1).position(), 0),
                    DiagPrime(i) => (0, Lower(i - 1).position()),
                    Upper(i) => (0, Diag(i).position()),
                    Lower(i) => (DiagPrime(i).position(), 0),
                    One => unreachable!(),
                };
                let partner = if target == 1 { (0, -1) } else { (u.max(v), 1) };
                Relation {
                    target,
                    u,
                    v,
                    partner,
                }
            })
            .collect();
        for r in &rels {
            assert!(
                r.u < r.target && r.v < r.target && r.partner.0 < r.target,
                "relation for position {} is not triangular",
                r.target
            );
        }
        Ok(RelationTable { k, rels })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn relations(&self) -> &[Relation] {
        &self.rels
    }
}

fn check_len(v: &[FieldElem], k: usize) -> Result<()> {
    if v.len() == k {
        Ok(())
    } else {
        Err(DSeriesError::Length {
            expected: k,
            got: v.len(),
        })
    }
}

/// Solver for D(k,q) / D'(k,q) adjacency over a fixed field.
#[derive(Debug, Clone)]
pub struct Bipartite<'f> {
    family: DFamily,
    field: &'f Field,
    table: RelationTable,
}

impl<'f> Bipartite<'f> {
    pub fn new(family: DFamily, k: usize, field: &'f Field) -> Result<Self> {
        Ok(Bipartite {
            family,
            field,
            table: RelationTable::new(k)?,
        })
    }

    pub fn k(&self) -> usize {
        self.table.k
    }

    fn linear(&self, rel: &Relation, x: &[FieldElem], y: &[FieldElem]) -> FieldElem {
        let f = self.field;
        match self.family {
            DFamily::D => FieldElem::ZERO,
            DFamily::Dprime => {
                let (s, c) = rel.partner;
                f.mul(f.from_int(c), f.add(x[s], y[s]))
            }
        }
    }

    /// The unique B-vertex with first coordinate `b1` adjacent to `a`.
    pub fn solve_neighbor(&self, a: &[FieldElem], b1: FieldElem) -> Vec<FieldElem> {
        let f = self.field;
        let mut b = vec![FieldElem::ZERO; self.k()];
        b[0] = b1;
        for rel in &self.table.rels {
            let rest = f.add(
                f.add(a[rel.target], f.mul(a[rel.u], b[rel.v])),
                self.linear(rel, a, &b),
            );
            b[rel.target] = f.neg(rest);
        }
        b
    }

    /// The unique A-vertex with first coordinate `a1` adjacent to `b`.
    pub fn solve_neighbor_of_b(&self, b: &[FieldElem], a1: FieldElem) -> Vec<FieldElem> {
        let f = self.field;
        let mut a = vec![FieldElem::ZERO; self.k()];
        a[0] = a1;
        for rel in &self.table.rels {
            let rest = f.add(
                f.add(b[rel.target], f.mul(a[rel.u], b[rel.v])),
                self.linear(rel, &a, b),
            );
            a[rel.target] = f.neg(rest);
        }
        a
    }

    /// Index of the first relation (1-based, as in "relation r") that
    /// fails, or `None` if `ab` is an edge.
    pub fn violated_relation(&self, a: &[FieldElem], b: &[FieldElem]) -> Option<usize> {
        let f = self.field;
        self.table.rels.iter().position(|rel| {
            let lhs = f.add(
                f.add(f.add(a[rel.target], b[rel.target]), f.mul(a[rel.u], b[rel.v])),
                self.linear(rel, a, b),
            );
            !lhs.is_zero()
        }).map(|i| i + 1)
    }

    pub fn is_edge(&self, a: &[FieldElem], b: &[FieldElem]) -> bool {
        self.violated_relation(a, b).is_none()
    }
}

/// `solve_neighbor` as a free function on [`DVertex`] values. Given a side-A
/// vertex returns the side-B neighbor with first coordinate `first`, and
/// vice versa.
pub fn solve_neighbor(family: DFamily, field: &Field, v: &DVertex, first: FieldElem) -> Result<DVertex> {
    let bip = Bipartite::new(family, v.k(), field)?;
    match v.side {
        Side::A => Ok(DVertex::new(Side::B, bip.solve_neighbor(&v.coords, first))),
        Side::B => Ok(DVertex::new(Side::A, bip.solve_neighbor_of_b(&v.coords, first))),
        Side::C => Err(DSeriesError::WrongSide(Side::C)),
    }
}

/// Lexicographic rank of a coordinate vector (first coordinate most significant).
pub fn index_of(coords: &[FieldElem], q: u32) -> u32 {
    coords.iter().fold(0u32, |acc, c| acc * q + c.value())
}

/// Inverse of [`index_of`].
pub fn coords_of(mut index: u32, k: usize, q: u32) -> Vec<FieldElem> {
    let mut out = vec![FieldElem::ZERO; k];
    for slot in out.iter_mut().rev() {
        *slot = FieldElem::from_raw(index % q);
        index /= q;
    }
    out
}

/// `q^k`, or an error when it passes `limit`.
pub(crate) fn checked_power(q: u32, k: usize, limit: u64, what: &'static str) -> Result<u64> {
    let mut size = 1u64;
    for _ in 0..k {
        size = size.saturating_mul(q as u64);
    }
    if size > limit {
        Err(DSeriesError::TooLarge { what, size, limit })
    } else {
        Ok(size)
    }
}

/// Labels enumerating F_q^k in index order.
pub(crate) fn full_labels(k: usize, q: u32) -> LabelBlock {
    let size = (q as usize).pow(k as u32);
    let mut data = Vec::with_capacity(size * k);
    for i in 0..size as u32 {
        data.extend(coords_of(i, k, q).into_iter().map(|c| c.value()));
    }
    LabelBlock::new(k, data)
}

/// Bipartite graph on two copies of F_q^k where `a` is joined to
/// `neighbor(a, t)` for every `t` in F_q.
pub(crate) fn build_coordinate_graph<F>(
    k: usize,
    field: &Field,
    meta: GraphMeta,
    neighbor: F,
) -> Result<Graph>
where
    F: Fn(&[FieldElem], FieldElem) -> Vec<FieldElem> + Sync,
{
    let q = field.q();
    let side = checked_power(q, k, MAX_GRAPH_VERTICES / 2, "each side")? as u32;
    let elems = field.elements();
    let edges: Vec<(u32, u32)> = (0..side)
        .into_par_iter()
        .flat_map_iter(|ia| {
            let a = coords_of(ia, k, q);
            elems
                .iter()
                .map(|&t| (ia, side + index_of(&neighbor(&a, t), q)))
                .collect::<Vec<_>>()
        })
        .collect();
    let labels = full_labels(k, q);
    let g = Graph::from_edges(vec![side as usize, side as usize], &edges, meta)?
        .with_labels(vec![labels.clone(), labels])?
        .with_regularity(q as usize)?;
    Ok(g)
}

/// D(k,q) or D'(k,q): parts A and B each F_q^k, q-regular.
pub fn build_bipartite(family: DFamily, k: usize, field: &Field) -> Result<Graph> {
    let bip = Bipartite::new(family, k, field)?;
    let meta = GraphMeta::new(family.tag(), k, Some(field.spec().clone()));
    build_coordinate_graph(k, field, meta, |a, t| bip.solve_neighbor(a, t))
}

/// Global vertex index of `v` in a graph or triple system built here.
pub fn vertex_index(v: &DVertex, q: u32) -> u32 {
    let side = (q as u64).pow(v.k() as u32) as u32;
    v.side.index() as u32 * side + index_of(&v.coords, q)
}

/// Hyperedge solver for D3(k,q).
#[derive(Debug, Clone)]
pub struct Triple<F: AsRef<Field>> {
    field: F,
    table: RelationTable,
}

impl AsRef<Field> for Field {
    fn as_ref(&self) -> &Field {
        self
    }
}

impl<F: AsRef<Field>> Triple<F> {
    pub fn new(k: usize, field: F) -> Result<Self> {
        Ok(Triple {
            field,
            table: RelationTable::new(k)?,
        })
    }

    pub fn k(&self) -> usize {
        self.table.k
    }

    pub fn field(&self) -> &Field {
        self.field.as_ref()
    }

    /// The unique `c` with first coordinate `c1` completing `{a, b, c}`.
    /// The relations are invariant under the cyclic shift of the three
    /// arguments, so this also solves for `a` given `(b, c)` and so on.
    pub fn solve_third(&self, a: &[FieldElem], b: &[FieldElem], c1: FieldElem) -> Vec<FieldElem> {
        let f = self.field.as_ref();
        let mut c = vec![FieldElem::ZERO; self.k()];
        c[0] = c1;
        for rel in &self.table.rels {
            let (t, u, v) = (rel.target, rel.u, rel.v);
            let mut s = f.add(a[t], b[t]);
            s = f.add(s, f.mul(a[u], b[v]));
            s = f.add(s, f.mul(b[u], c[v]));
            s = f.add(s, f.mul(c[u], a[v]));
            c[t] = f.neg(s);
        }
        c
    }

    /// First failing relation (1-based), or `None` for a hyperedge.
    pub fn violated_relation(&self, a: &[FieldElem], b: &[FieldElem], c: &[FieldElem]) -> Option<usize> {
        let f = self.field.as_ref();
        self.table
            .rels
            .iter()
            .position(|rel| {
                let (t, u, v) = (rel.target, rel.u, rel.v);
                let mut s = f.add(f.add(a[t], b[t]), c[t]);
                s = f.add(s, f.mul(a[u], b[v]));
                s = f.add(s, f.mul(b[u], c[v]));
                s = f.add(s, f.mul(c[u], a[v]));
                !s.is_zero()
            })
            .map(|i| i + 1)
    }

    pub fn is_hyperedge(&self, a: &[FieldElem], b: &[FieldElem], c: &[FieldElem]) -> bool {
        self.violated_relation(a, b, c).is_none()
    }
}

/// `solve_third` on [`DVertex`] values; `a` must lie in A and `b` in B.
pub fn solve_third(field: &Field, a: &DVertex, b: &DVertex, c1: FieldElem) -> Result<DVertex> {
    if a.side != Side::A {
        return Err(DSeriesError::WrongSide(a.side));
    }
    if b.side != Side::B {
        return Err(DSeriesError::WrongSide(b.side));
    }
    check_len(&b.coords, a.k())?;
    let t = Triple::new(a.k(), field)?;
    Ok(DVertex::new(Side::C, t.solve_third(&a.coords, &b.coords, c1)))
}

/// D3(k,q) represented by its solver; hyperedges are produced on demand.
#[derive(Debug)]
pub struct D3Source {
    triple: Triple<Arc<Field>>,
    side: u32,
}

impl D3Source {
    pub fn new(k: usize, field: Arc<Field>) -> Result<Self> {
        let side = checked_power(field.q(), k, u32::MAX as u64 / 3, "each part")? as u32;
        Ok(D3Source {
            triple: Triple::new(k, field)?,
            side,
        })
    }
}

impl ImplicitTriples for D3Source {
    fn num_edges(&self) -> u64 {
        self.side as u64 * self.side as u64 * self.triple.field().q() as u64
    }

    fn link_pairs(&self, x: u32) -> Vec<(u32, u32)> {
        let (k, q, side) = (self.triple.k(), self.triple.field().q(), self.side);
        let px = x / side;
        let xc = coords_of(x % side, k, q);
        let (p1, p2) = ((px + 1) % 3, (px + 2) % 3);
        let elems = self.triple.field().elements();
        let mut out = Vec::with_capacity(side as usize * q as usize);
        for iu in 0..side {
            let u = coords_of(iu, k, q);
            for &t in &elems {
                let w = self.triple.solve_third(&xc, &u, t);
                out.push((p1 * side + iu, p2 * side + index_of(&w, q)));
            }
        }
        out
    }

    fn for_each_edge(&self, f: &mut dyn FnMut([u32; 3])) {
        let (k, q, side) = (self.triple.k(), self.triple.field().q(), self.side);
        let elems = self.triple.field().elements();
        for ia in 0..side {
            let a = coords_of(ia, k, q);
            for ib in 0..side {
                let b = coords_of(ib, k, q);
                for &t in &elems {
                    let c = self.triple.solve_third(&a, &b, t);
                    f([ia, side + ib, 2 * side + index_of(&c, q)]);
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleMode {
    Explicit,
    Implicit,
}

/// D3(k,q): three parts of size q^k and q^(2k+1) hyperedges.
pub fn build_triple_system(k: usize, field: &Field, mode: TripleMode) -> Result<TripleSystem> {
    let q = field.q();
    let meta = GraphMeta::new("D3", k, Some(field.spec().clone()));
    let side = checked_power(q, k, u32::MAX as u64 / 3, "each part")? as u32;
    let labels = full_labels(k, q);
    let labels = vec![labels.clone(), labels.clone(), labels];
    let sizes = vec![side as usize; 3];
    match mode {
        TripleMode::Implicit => {
            let src = D3Source::new(k, Arc::new(field.clone()))?;
            Ok(TripleSystem::implicit(sizes, Arc::new(src), meta).with_labels(labels)?)
        }
        TripleMode::Explicit => {
            checked_power(q, 2 * k + 1, MAX_EXPLICIT_TRIPLES, "hyperedge set")?;
            let triple = Triple::new(k, field)?;
            let elems = field.elements();
            let edges: Vec<[u32; 3]> = (0..side)
                .into_par_iter()
                .flat_map_iter(|ia| {
                    let a = coords_of(ia, k, q);
                    let mut out = Vec::with_capacity(side as usize * q as usize);
                    for ib in 0..side {
                        let b = coords_of(ib, k, q);
                        for &t in &elems {
                            let c = triple.solve_third(&a, &b, t);
                            out.push([ia, side + ib, 2 * side + index_of(&c, q)]);
                        }
                    }
                    out
                })
                .collect();
            Ok(TripleSystem::explicit(sizes, edges, meta)?.with_labels(labels)?)
        }
    }
}

/// Link of `x` in D3(k,q) without building the triple system.
pub fn d3_link(k: usize, field: &Field, x: &DVertex) -> Result<Graph> {
    check_len(&x.coords, k)?;
    let triple = Triple::new(k, field)?;
    let meta = GraphMeta::new("link(D3)", k, Some(field.spec().clone()));
    build_coordinate_graph(k, field, meta, |u, t| triple.solve_third(&x.coords, u, t))
}

/// The linear map carrying D'(k,q) onto D(k,q) for `k <= 6`; the same rule
/// applies to both sides.
pub fn table2_map(field: &Field, v: &DVertex) -> Result<DVertex> {
    let k = v.k();
    if k > 6 {
        return Err(DSeriesError::Table2Range(k));
    }
    let f = field;
    let x = &v.coords;
    let get = |i: usize| if i < k { x[i] } else { FieldElem::ZERO };
    let (x1, x11, x12, x21, x22, x22p) = (get(0), get(1), get(2), get(3), get(4), get(5));
    let img = [
        x1,
        f.sub(x11, x1),
        f.add(x12, x1),
        f.add(x21, x1),
        f.sub(f.add(f.add(x22, x12), x11), x1),
        f.sub(f.add(f.add(x22p, x21), x11), x1),
    ];
    Ok(DVertex::new(v.side, img[..k].to_vec()))
}

/// Inverse of [`table2_map`].
pub fn table2_inverse(field: &Field, v: &DVertex) -> Result<DVertex> {
    let k = v.k();
    if k > 6 {
        return Err(DSeriesError::Table2Range(k));
    }
    let f = field;
    let y = &v.coords;
    let get = |i: usize| if i < k { y[i] } else { FieldElem::ZERO };
    let x1 = get(0);
    let x11 = f.add(get(1), x1);
    let x12 = f.sub(get(2), x1);
    let x21 = f.sub(get(3), x1);
    let x22 = f.add(f.sub(f.sub(get(4), x12), x11), x1);
    let x22p = f.add(f.sub(f.sub(get(5), x21), x11), x1);
    let pre = [x1, x11, x12, x21, x22, x22p];
    Ok(DVertex::new(v.side, pre[..k].to_vec()))
}

/// Direction of [`shift_map`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shift {
    Up,
    Down,
}

/// Shifts the first coordinate by `+1` or `-1`. Characteristic 3 only.
///
/// `Shift::Down` on both sides carries the link of `(1,0,...,0)` in D3(k,q)
/// onto D'(k,q); see the regression test `shift_direction_is_down`.
pub fn shift_map(field: &Field, v: &DVertex, dir: Shift) -> Result<DVertex> {
    if field.characteristic() != 3 {
        return Err(DSeriesError::Characteristic(field.characteristic()));
    }
    let mut out = v.clone();
    out.coords[0] = match dir {
        Shift::Up => field.add(v.coords[0], FieldElem::ONE),
        Shift::Down => field.sub(v.coords[0], FieldElem::ONE),
    };
    Ok(out)
}

/// The direction that turns the link of `(1,0,...,0)` into D'(k,q).
pub const LINK_TO_DPRIME: Shift = Shift::Down;
