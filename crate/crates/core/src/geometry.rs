//! Projective geometry over GF(q): points, lines and their Plücker
//! coordinates, arcs in the hyperplane at infinity, the arc incidence graphs,
//! Wenger graphs and the characteristic-2 family G(2^r, s).
//!
//! Points of PG(t,q) carry `t + 1` homogeneous coordinates. The hyperplane
//! `Σ₀` is `{first coordinate = 0}`; its points are identified with vectors
//! of F_q^t by dropping that coordinate.

use num_integer::gcd;
use thiserror::Error;

use crate::dseries::{build_coordinate_graph, checked_power, coords_of, index_of, DSeriesError};
use crate::field::{Field, FieldElem};
use crate::graphcore::{Graph, GraphError, GraphMeta, LabelBlock};

/// Arc graphs refuse more than this many affine points.
pub const MAX_ARC_POINTS: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("points have {0} and {1} coordinates")]
    DimensionMismatch(usize, usize),
    #[error("a line needs two distinct points")]
    DegenerateLine,
    #[error("dimension t must be at least 2, got {0}")]
    SmallDimension(usize),
    #[error("needs a field of characteristic 2, got characteristic {0}")]
    Characteristic(u32),
    #[error("needs GF(2^{r}), field has order {q}")]
    FieldOrder { r: u32, q: u32 },
    #[error("gcd(s, r) = gcd({s}, {r}) is not 1")]
    NotCoprime { s: u32, r: u32 },
    #[error("arc point {0:?} is not in the hyperplane at infinity")]
    NotAtInfinity(Vec<u32>),
    #[error("line does not meet the hyperplane at infinity in the expected arc")]
    LineOutsideFamily,
    #[error(transparent)]
    Size(#[from] DSeriesError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub type Result<T> = std::result::Result<T, GeometryError>;

/// Scales `v` so its first nonzero entry is 1. `None` for the zero vector.
fn normalize(field: &Field, v: &mut [FieldElem]) -> Option<()> {
    let lead = *v.iter().find(|c| !c.is_zero())?;
    let inv = field.inv(lead).ok()?;
    for c in v.iter_mut() {
        *c = field.mul(*c, inv);
    }
    Some(())
}

/// A point of PG(t,q) in its canonical representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: Vec<FieldElem>,
}

impl ProjPoint {
    pub fn new(field: &Field, mut coords: Vec<FieldElem>) -> Result<Self> {
        normalize(field, &mut coords).ok_or(GeometryError::ZeroPoint)?;
        Ok(ProjPoint { coords })
    }

    /// The affine point `[1 : a_1 : ... : a_t]`.
    pub fn affine(a: &[FieldElem]) -> Self {
        let mut coords = Vec::with_capacity(a.len() + 1);
        coords.push(FieldElem::ONE);
        coords.extend_from_slice(a);
        ProjPoint { coords }
    }

    /// The point `[0 : v]` of Σ₀.
    pub fn at_infinity(field: &Field, v: &[FieldElem]) -> Result<Self> {
        let mut coords = vec![FieldElem::ZERO];
        coords.extend_from_slice(v);
        ProjPoint::new(field, coords)
    }

    pub fn coords(&self) -> &[FieldElem] {
        &self.coords
    }

    /// The `t` of PG(t,q).
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn in_sigma0(&self) -> bool {
        self.coords[0].is_zero()
    }

    pub fn raw(&self) -> Vec<u32> {
        self.coords.iter().map(|c| c.value()).collect()
    }
}

/// Position of `w_ij` (1-based, `i < j <= t + 1`) in the Plücker vector.
pub fn plucker_index(t: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= t + 1);
    let m = t + 1;
    // rows 1..i-1 contribute (m - r) entries each
    (i - 1) * m - (i - 1) * i / 2 + (j - i - 1)
}

/// Normalized Plücker coordinates `w_ij = p_i r_j - p_j r_i` of the line
/// through `p` and `r`, ordered `w_12, w_13, ..., w_1m, w_23, ...`.
pub fn plucker_coords(field: &Field, p: &ProjPoint, r: &ProjPoint) -> Result<Vec<FieldElem>> {
    if p.coords.len() != r.coords.len() {
        return Err(GeometryError::DimensionMismatch(p.coords.len(), r.coords.len()));
    }
    let (a, b) = (&p.coords, &r.coords);
    let m = a.len();
    let mut w = Vec::with_capacity(m * (m - 1) / 2);
    for i in 0..m {
        for j in i + 1..m {
            w.push(field.sub(field.mul(a[i], b[j]), field.mul(a[j], b[i])));
        }
    }
    normalize(field, &mut w).ok_or(GeometryError::DegenerateLine)?;
    Ok(w)
}

/// A line of PG(t,q) with its Plücker coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjLine {
    span: [ProjPoint; 2],
    plucker: Vec<FieldElem>,
}

impl ProjLine {
    pub fn new(field: &Field, p: ProjPoint, r: ProjPoint) -> Result<Self> {
        let plucker = plucker_coords(field, &p, &r)?;
        Ok(ProjLine { span: [p, r], plucker })
    }

    pub fn span(&self) -> &[ProjPoint; 2] {
        &self.span
    }

    pub fn plucker(&self) -> &[FieldElem] {
        &self.plucker
    }

    /// `w_ij`, 1-based.
    pub fn w(&self, i: usize, j: usize) -> FieldElem {
        self.plucker[plucker_index(self.span[0].dim(), i, j)]
    }

    /// The `q + 1` points of the line.
    pub fn points(&self, field: &Field) -> Vec<ProjPoint> {
        let [p, r] = &self.span;
        let mut out = vec![r.clone()];
        for lambda in field.elements() {
            let c: Vec<FieldElem> = p
                .coords
                .iter()
                .zip(&r.coords)
                .map(|(&x, &y)| field.add(x, field.mul(lambda, y)))
                .collect();
            out.push(ProjPoint::new(field, c).expect("p is not a multiple of r"));
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcTag {
    Nrc,
    NrcMinus,
    Frobenius(u32),
}

/// A point set inside Σ₀ of PG(t,q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub t: usize,
    pub points: Vec<ProjPoint>,
    pub tag: ArcTag,
}

impl Arc {
    pub fn new(t: usize, points: Vec<ProjPoint>, tag: ArcTag) -> Result<Self> {
        for p in &points {
            if p.dim() != t {
                return Err(GeometryError::DimensionMismatch(p.dim(), t));
            }
            if !p.in_sigma0() {
                return Err(GeometryError::NotAtInfinity(p.raw()));
            }
        }
        Ok(Arc { t, points, tag })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// The normal rational curve `{[0:1:x:...:x^(t-1)]}` in Σ₀ of PG(t,q), with
/// `[0:...:0:1]` added when `include_infinity` is set.
pub fn nrc_arc(t: usize, field: &Field, include_infinity: bool) -> Result<Arc> {
    if t < 2 {
        return Err(GeometryError::SmallDimension(t));
    }
    let mut points: Vec<ProjPoint> = field
        .elements()
        .into_iter()
        .map(|x| {
            let v: Vec<FieldElem> = (0..t as u64).map(|e| field.pow(x, e)).collect();
            ProjPoint::at_infinity(field, &v).expect("leading entry is 1")
        })
        .collect();
    if include_infinity {
        let mut v = vec![FieldElem::ZERO; t];
        v[t - 1] = FieldElem::ONE;
        points.push(ProjPoint::at_infinity(field, &v)?);
    }
    let tag = if include_infinity { ArcTag::Nrc } else { ArcTag::NrcMinus };
    Arc::new(t, points, tag)
}

/// `{[0:1:x:x^(2^s)]}` in Σ₀ of PG(3, 2^r); `field` must be GF(2^r).
pub fn frobenius_arc(field: &Field, r: u32, s: u32) -> Result<Arc> {
    check_g2rs_params(field, r, s)?;
    let points = field
        .elements()
        .into_iter()
        .map(|x| ProjPoint::at_infinity(field, &[FieldElem::ONE, x, field.frob_pow(x, s)]))
        .collect::<Result<Vec<_>>>()?;
    Arc::new(3, points, ArcTag::Frobenius(s))
}

fn check_g2rs_params(field: &Field, r: u32, s: u32) -> Result<()> {
    if field.characteristic() != 2 {
        return Err(GeometryError::Characteristic(field.characteristic()));
    }
    if field.n() != r {
        return Err(GeometryError::FieldOrder { r, q: field.q() });
    }
    if gcd(s, r) != 1 {
        return Err(GeometryError::NotCoprime { s, r });
    }
    Ok(())
}

/// Rank of a list of vectors by Gaussian elimination.
pub fn rank(field: &Field, rows: &[Vec<FieldElem>]) -> usize {
    let mut m: Vec<Vec<FieldElem>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = field.inv(m[rank][c]).expect("pivot is nonzero");
        let pivot: Vec<FieldElem> = m[rank].iter().map(|&x| field.mul(x, inv)).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && !row[c].is_zero() {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = field.sub(*x, field.mul(f, y));
                }
            }
        }
        m[rank] = pivot;
        rank += 1;
    }
    rank
}

/// Whether every `subset`-element subset of `points` (all in Σ₀ of PG(t,q))
/// is linearly independent as vectors of F_q^t.
pub fn is_arc_with_threshold(field: &Field, points: &[ProjPoint], subset: usize) -> bool {
    let vecs: Vec<Vec<FieldElem>> = points.iter().map(|p| p.coords[1..].to_vec()).collect();
    let n = vecs.len();
    if subset > n {
        return true;
    }
    // iterate subsets as increasing index tuples
    let mut idx: Vec<usize> = (0..subset).collect();
    loop {
        let rows: Vec<Vec<FieldElem>> = idx.iter().map(|&i| vecs[i].clone()).collect();
        if rank(field, &rows) < subset {
            return false;
        }
        let Some(pos) = (0..subset).rev().find(|&p| idx[p] < n - subset + p) else {
            return true;
        };
        idx[pos] += 1;
        for p in pos + 1..subset {
            idx[p] = idx[p - 1] + 1;
        }
    }
}

/// The arc condition in Σ₀ ≅ PG(t-1,q): no `t` points on a hyperplane of
/// Σ₀, i.e. every `t` of them independent in F_q^t.
pub fn is_arc(field: &Field, points: &[ProjPoint], t: usize) -> bool {
    points.iter().all(|p| p.dim() == t && p.in_sigma0()) && is_arc_with_threshold(field, points, t)
}

/// An arc graph together with its line objects, in vertex order.
#[derive(Debug, Clone)]
pub struct ArcGraph {
    pub graph: Graph,
    /// `lines[i]` is line vertex `q^t + i`, spanned by an affine point and
    /// its arc point.
    pub lines: Vec<ProjLine>,
}

/// Incidence graph between the affine points `[1:a]` of PG(t,q) and the
/// lines through an arc point not contained in Σ₀.
///
/// Part 0 is the `q^t` points (labels `a`, index order); part 1 is the
/// `q^(t-1) |arc|` lines, sorted by Plücker label.
pub fn build_arc_graph(field: &Field, arc: &Arc) -> Result<ArcGraph> {
    let t = arc.t;
    let q = field.q();
    let n_points = checked_power(q, t, MAX_ARC_POINTS, "affine point set")? as u32;
    let elems = field.elements();

    struct Raw {
        label: Vec<u32>,
        line: ProjLine,
        members: Vec<u32>,
    }
    let mut raw = Vec::with_capacity(arc.len() * (n_points / q) as usize);
    for alpha in &arc.points {
        let dir = &alpha.coords[1..];
        let lead = dir.iter().position(|c| !c.is_zero()).expect("normalized point");
        // canonical coset representatives: coordinate `lead` is zero
        for rep_idx in 0..n_points {
            let rep = coords_of(rep_idx, t, q);
            if !rep[lead].is_zero() {
                continue;
            }
            let members: Vec<u32> = elems
                .iter()
                .map(|&lam| {
                    let p: Vec<FieldElem> =
                        rep.iter().zip(dir).map(|(&x, &d)| field.add(x, field.mul(lam, d))).collect();
                    index_of(&p, q)
                })
                .collect();
            let line = ProjLine::new(field, ProjPoint::affine(&rep), alpha.clone())?;
            let label = line.plucker.iter().map(|c| c.value()).collect();
            raw.push(Raw { label, line, members });
        }
    }
    raw.sort_by(|x, y| x.label.cmp(&y.label));

    let n_lines = raw.len() as u32;
    let mut edges = Vec::with_capacity(raw.len() * q as usize);
    let mut line_labels = Vec::with_capacity(raw.len() * raw.first().map_or(0, |r| r.label.len()));
    let mut lines = Vec::with_capacity(raw.len());
    for (i, r) in raw.into_iter().enumerate() {
        edges.extend(r.members.iter().map(|&p| (p, n_points + i as u32)));
        line_labels.extend(r.label);
        lines.push(r.line);
    }
    let family = match arc.tag {
        ArcTag::Nrc => "arc-nrc".to_string(),
        ArcTag::NrcMinus => "arc-nrcminus".to_string(),
        ArcTag::Frobenius(s) => format!("arc-frob-s{s}"),
    };
    let width = t * (t + 1) / 2;
    let graph = Graph::from_edges(
        vec![n_points as usize, n_lines as usize],
        &edges,
        GraphMeta::new(family, t, Some(field.spec().clone())),
    )?
    .with_labels(vec![
        crate::dseries::full_labels(t, q),
        LabelBlock::new(width, line_labels),
    ])?;
    Ok(ArcGraph { graph, lines })
}

/// Wenger coordinates of a line of `G_arc(k, q, α)` through `[1:a]` and
/// `[0:1:x:...]`: `b_1 = w_13` and `b_(j-1) = w_2j` for `3 <= j <= k + 1`.
pub fn arc_to_wenger_map(line: &ProjLine, k: usize) -> Result<Vec<FieldElem>> {
    let t = line.span[0].dim();
    if t != k || k < 2 {
        return Err(GeometryError::DimensionMismatch(t, k));
    }
    // lines of the family have w_12 = 1 (they meet Σ₀ in a point [0:1:...])
    if line.w(1, 2) != FieldElem::ONE {
        return Err(GeometryError::LineOutsideFamily);
    }
    let mut b = Vec::with_capacity(k);
    b.push(line.w(1, 3));
    for j in 3..=k + 1 {
        b.push(line.w(2, j));
    }
    Ok(b)
}

/// Relations of Plücker coordinates on lines through `[1:a]` and
/// `[0:1:x:...:x^(k-1)]`, with `x = w_13`:
/// `w_1j = x^(j-2)` and `w_ij = x^(i-2) w_2j - x^(j-2) w_2i` for `2 <= i < j`.
pub fn nrc_plucker_relations_hold(field: &Field, line: &ProjLine) -> bool {
    let t = line.span[0].dim();
    let x = line.w(1, 3);
    let xp = |e: usize| field.pow(x, e as u64);
    (2..=t + 1).all(|j| line.w(1, j) == xp(j - 2))
        && (2..=t + 1).all(|i| {
            (i + 1..=t + 1).all(|j| {
                let w2i = if i == 2 { FieldElem::ZERO } else { line.w(2, i) };
                let rhs = field.sub(field.mul(xp(i - 2), line.w(2, j)), field.mul(xp(j - 2), w2i));
                line.w(i, j) == rhs
            })
        })
}

/// Wenger graph H(k,q): `a ~ b` iff `a_i + b_i = a_1 b_1^(i-1)` for `2 <= i <= k`.
pub fn build_wenger(k: usize, field: &Field) -> Result<Graph> {
    if k < 2 {
        return Err(GeometryError::SmallDimension(k));
    }
    let meta = GraphMeta::new("wenger", k, Some(field.spec().clone()));
    Ok(build_coordinate_graph(k, field, meta, |a, b1| {
        let mut b = vec![b1];
        for i in 1..k {
            b.push(field.sub(field.mul(a[0], field.pow(b1, i as u64)), a[i]));
        }
        b
    })?)
}

/// G(2^r, s) on two copies of F_q^3, `q = 2^r`:
/// `a_2 + b_2 = a_1 b_1` and `a_3 + b_3 = a_1 b_1^(2^s)`.
pub fn build_g2rs(field: &Field, r: u32, s: u32) -> Result<Graph> {
    check_g2rs_params(field, r, s)?;
    let meta = GraphMeta::new(format!("g2rs-s{s}"), 3, Some(field.spec().clone()));
    Ok(build_coordinate_graph(3, field, meta, |a, b1| {
        vec![
            b1,
            field.sub(field.mul(a[0], b1), a[1]),
            field.sub(field.mul(a[0], field.frob_pow(b1, s)), a[2]),
        ]
    })?)
}

/// Vertex map `G_arc(k,q,α) -> H(k,q)` (or `G(2^r,s)` for Frobenius arcs):
/// points keep their affine coordinates, lines go through
/// [`arc_to_wenger_map`].
pub fn arc_graph_to_wenger_vertex_map(arc_graph: &ArcGraph, target: &Graph, q: u32) -> Result<Vec<u32>> {
    let g = &arc_graph.graph;
    let k = g.meta().k;
    let n_points = g.part_sizes()[0] as u32;
    let side = target.part_range(1).start;
    let mut map: Vec<u32> = (0..n_points).collect();
    for line in &arc_graph.lines {
        let b = arc_to_wenger_map(line, k)?;
        map.push(side + index_of(&b, q));
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{girth, verify_iso_map, Girth};

    fn gf(q: u64) -> Field {
        Field::for_order(q).unwrap()
    }

    fn el(v: u32) -> FieldElem {
        FieldElem::from_raw(v)
    }

    #[test]
    fn points_normalize() {
        let f = gf(5);
        let p = ProjPoint::new(&f, vec![el(0), el(2), el(4)]).unwrap();
        assert_eq!(p.coords(), &[el(0), el(1), el(2)]);
        assert_eq!(ProjPoint::new(&f, vec![el(0); 3]), Err(GeometryError::ZeroPoint));
        assert!(p.in_sigma0());
        assert_eq!(p.dim(), 2);
    }

    #[test]
    fn plucker_index_order() {
        let t = 3;
        let mut expected = 0;
        for i in 1..=t + 1 {
            for j in i + 1..=t + 1 {
                assert_eq!(plucker_index(t, i, j), expected);
                expected += 1;
            }
        }
    }

    #[test]
    fn plucker_hand_example() {
        let f = gf(5);
        let x = el(3);
        let p = ProjPoint::affine(&[el(0), el(0), el(0)]);
        let r = ProjPoint::at_infinity(&f, &[el(1), x, f.mul(x, x)]).unwrap();
        let line = ProjLine::new(&f, p.clone(), r.clone()).unwrap();
        assert_eq!(line.plucker(), &[el(1), x, f.mul(x, x), el(0), el(0), el(0)]);
        assert_eq!(arc_to_wenger_map(&line, 3).unwrap(), vec![x, el(0), el(0)]);
        assert_eq!(ProjLine::new(&f, p.clone(), p), Err(GeometryError::DegenerateLine));
        // swapping the span gives the same normalized coordinates
        let swapped = ProjLine::new(&f, r, ProjPoint::affine(&[el(0); 3])).unwrap();
        assert_eq!(swapped.plucker(), line.plucker());
    }

    #[test]
    fn plucker_independent_of_span() {
        let f = gf(4);
        let p = ProjPoint::affine(&[el(1), el(2), el(3)]);
        let r = ProjPoint::at_infinity(&f, &[el(1), el(2), el(3)]).unwrap();
        let line = ProjLine::new(&f, p, r).unwrap();
        let pts = line.points(&f);
        assert_eq!(pts.len(), 5);
        for a in &pts {
            for b in &pts {
                if a != b {
                    assert_eq!(plucker_coords(&f, a, b).unwrap(), line.plucker());
                }
            }
        }
    }

    #[test]
    fn arcs() {
        let f = gf(3);
        let a = nrc_arc(2, &f, true).unwrap();
        assert_eq!(a.len(), 4);
        assert!(is_arc(&f, &a.points, 2));
        let a = nrc_arc(3, &f, false).unwrap();
        assert_eq!(a.len(), 3);
        assert_eq!(a.points[0].coords(), &[el(0), el(1), el(0), el(0)]);
        let a = nrc_arc(4, &gf(5), true).unwrap();
        assert!(is_arc(&gf(5), &a.points, 4));
        // collinear points of Σ₀ in PG(3,3)
        let pts: Vec<ProjPoint> = [[1, 0, 0], [0, 1, 0], [1, 1, 0]]
            .iter()
            .map(|v| ProjPoint::at_infinity(&f, &v.map(el)).unwrap())
            .collect();
        assert!(!is_arc(&f, &pts, 3));
        assert!(is_arc_with_threshold(&f, &pts, 2));
    }

    #[test]
    fn frobenius_arcs() {
        let f8 = gf(8);
        let a = frobenius_arc(&f8, 3, 1).unwrap();
        assert_eq!(a, Arc { tag: ArcTag::Frobenius(1), ..nrc_arc(3, &f8, false).unwrap() });
        let a2 = frobenius_arc(&f8, 3, 2).unwrap();
        assert_eq!(a2.len(), 8);
        assert!(is_arc(&f8, &a2.points, 3));
        for (p, x) in a2.points.iter().zip(f8.elements()) {
            assert_eq!(p.coords()[3], f8.pow(x, 4));
        }
        assert_eq!(frobenius_arc(&gf(4), 2, 2), Err(GeometryError::NotCoprime { s: 2, r: 2 }));
        assert_eq!(frobenius_arc(&gf(9), 2, 1), Err(GeometryError::Characteristic(3)));
        assert!(matches!(frobenius_arc(&f8, 4, 1), Err(GeometryError::FieldOrder { .. })));
    }

    #[test]
    fn arc_graph_shape() {
        let f = gf(3);
        let arc = nrc_arc(3, &f, false).unwrap();
        let ag = build_arc_graph(&f, &arc).unwrap();
        assert_eq!(ag.graph.part_sizes(), &[27, 27]);
        for v in ag.graph.part_range(1) {
            assert_eq!(ag.graph.deg(v), 3);
        }
        for v in ag.graph.part_range(0) {
            assert_eq!(ag.graph.deg(v), arc.len());
        }
        let full = build_arc_graph(&f, &nrc_arc(3, &f, true).unwrap()).unwrap();
        assert_eq!(full.graph.part_sizes(), &[27, 36]);
        // every line vertex is incident with exactly the affine points of its line
        for (i, line) in ag.lines.iter().enumerate() {
            let v = 27 + i as u32;
            let mut pts: Vec<u32> = line
                .points(&f)
                .iter()
                .filter(|p| !p.in_sigma0())
                .map(|p| index_of(&p.coords()[1..], 3))
                .collect();
            pts.sort();
            assert_eq!(ag.graph.nbrs(v), &pts[..]);
            assert!(nrc_plucker_relations_hold(&f, line));
        }
    }

    #[test]
    fn wenger_and_g2rs() {
        let f = gf(3);
        let h = build_wenger(3, &f).unwrap();
        assert_eq!((h.n(), h.num_edges()), (54, 81));
        for t in 0..3 {
            assert!(h.has_edge(0, 27 + t * 9));
        }
        assert!(girth(&h, None).at_least(8));
        let f8 = gf(8);
        let g = build_g2rs(&f8, 3, 1).unwrap();
        assert_eq!(g.n(), 1024);
        assert_eq!(g.regular_degree(), Some(8));
        assert_eq!(g.edge_list(), build_wenger(3, &f8).unwrap().edge_list());
        assert_eq!(girth(&build_g2rs(&f8, 3, 2).unwrap(), Some(6)), Girth::AtLeast(7));
    }

    #[test]
    fn arc_graph_maps_onto_wenger() {
        let f = gf(3);
        let ag = build_arc_graph(&f, &nrc_arc(3, &f, false).unwrap()).unwrap();
        let h = build_wenger(3, &f).unwrap();
        let map = arc_graph_to_wenger_vertex_map(&ag, &h, 3).unwrap();
        assert_eq!(verify_iso_map(&ag.graph, &h, &map), Ok(()));
        let f8 = gf(8);
        let ag = build_arc_graph(&f8, &frobenius_arc(&f8, 3, 2).unwrap()).unwrap();
        let g = build_g2rs(&f8, 3, 2).unwrap();
        let map = arc_graph_to_wenger_vertex_map(&ag, &g, 8).unwrap();
        assert_eq!(verify_iso_map(&ag.graph, &g, &map), Ok(()));
    }
}
