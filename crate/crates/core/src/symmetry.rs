//! Coordinate automorphisms of D3(k,q) in characteristic 3, the
//! normalization chain that clears leading coordinates of a vertex, and the
//! scaling map between links of `(a1,0,...,0)` and `(1,0,...,0)`.
//!
//! Every automorphism adds `x` times an earlier coordinate (or a constant)
//! to some later coordinates, using the same rule on all three parts. The
//! boundary symbols read as `a_00 = a'_00 = -1`, `a_{0,-1} = a_{-1,0} = 0`,
//! `a_01 = a_10 = a_1` and `a'_11 = a_11`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dseries::{coords_of, CoordLabel, DSeriesError, DVertex, Triple};
use crate::field::{Field, FieldElem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetryError {
    #[error("needs characteristic 3, field has characteristic {0}")]
    Characteristic(u32),
    #[error("block index m = {m} is out of range for {kind}")]
    BadBlock { kind: AutoKind, m: usize },
    #[error("{spec} does not act on the first {k} coordinates")]
    Inapplicable { spec: String, k: usize },
    #[error("cannot parse automorphism chain: {0}")]
    Parse(String),
    #[error("scaling factor must be nonzero")]
    ZeroScale,
    #[error("s = {s} exceeds k - 1 = {}", .k - 1)]
    TooManyCoordinates { s: usize, k: usize },
    #[error("parameter {0} is not a field element")]
    BadParameter(u64),
    #[error(transparent)]
    DSeries(#[from] DSeriesError),
}

pub type Result<T> = std::result::Result<T, SymmetryError>;

/// The five automorphism families. `Upper` is `t_{m,m+1}`, `Lower` is
/// `t_{m+1,m}`, `Diag` is `t_{m,m}` and `DiagPrime` is `t'_{m,m}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AutoKind {
    T11,
    Upper,
    Lower,
    Diag,
    DiagPrime,
}

impl AutoKind {
    pub fn token(self) -> &'static str {
        match self {
            AutoKind::T11 => "t11",
            AutoKind::Upper => "t12",
            AutoKind::Lower => "t21",
            AutoKind::Diag => "t22",
            AutoKind::DiagPrime => "t22p",
        }
    }

    fn from_token(s: &str) -> Option<Self> {
        Some(match s {
            "t11" => AutoKind::T11,
            "t12" => AutoKind::Upper,
            "t21" => AutoKind::Lower,
            "t22" => AutoKind::Diag,
            "t22p" => AutoKind::DiagPrime,
            _ => return None,
        })
    }

    fn min_block(self) -> usize {
        match self {
            AutoKind::T11 => 1,
            AutoKind::Upper | AutoKind::Lower => 1,
            AutoKind::Diag | AutoKind::DiagPrime => 2,
        }
    }

    pub fn all() -> [AutoKind; 5] {
        [AutoKind::T11, AutoKind::Upper, AutoKind::Lower, AutoKind::Diag, AutoKind::DiagPrime]
    }
}

impl fmt::Display for AutoKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// One automorphism with its block index and parameter. `m` is ignored for
/// `T11` (stored as 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AutoSpec {
    pub kind: AutoKind,
    pub m: usize,
    pub x: FieldElem,
}

impl AutoSpec {
    pub fn new(kind: AutoKind, m: usize, x: FieldElem) -> Result<Self> {
        let m = if kind == AutoKind::T11 { 1 } else { m };
        if m < kind.min_block() {
            return Err(SymmetryError::BadBlock { kind, m });
        }
        Ok(AutoSpec { kind, m, x })
    }

    /// The coordinate this map moves by `-x`; all others it moves lie later.
    pub fn primary(&self) -> CoordLabel {
        let m = self.m;
        match self.kind {
            AutoKind::T11 => CoordLabel::Diag(1),
            AutoKind::Upper => CoordLabel::Upper(m),
            AutoKind::Lower => CoordLabel::Lower(m),
            AutoKind::Diag => CoordLabel::Diag(m),
            AutoKind::DiagPrime => CoordLabel::DiagPrime(m),
        }
    }

    /// Whether the map acts on the first `k` coordinates.
    pub fn applies_at(&self, k: usize) -> bool {
        self.primary().position() < k
    }

    pub fn with_x(self, x: FieldElem) -> Self {
        AutoSpec { x, ..self }
    }
}

impl fmt::Display for AutoSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            AutoKind::T11 => write!(f, "t11(;{})", self.x),
            k => write!(f, "{}({};{})", k.token(), self.m, self.x),
        }
    }
}

/// Automorphisms applied left to right: the first entry acts first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutoChain(pub Vec<AutoSpec>);

impl AutoChain {
    pub fn single(spec: AutoSpec) -> Self {
        AutoChain(vec![spec])
    }

    pub fn specs(&self) -> &[AutoSpec] {
        &self.0
    }
}

/// `kind(m;x)` tokens joined by `∘`, in application order.
impl fmt::Display for AutoChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join("∘"))
    }
}

impl FromStr for AutoChain {
    type Err = SymmetryError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(AutoChain::default());
        }
        let bad = || SymmetryError::Parse(s.to_string());
        s.split('∘')
            .map(|tok| {
                let tok = tok.trim();
                let (name, rest) = tok.split_once('(').ok_or_else(bad)?;
                let inner = rest.strip_suffix(')').ok_or_else(bad)?;
                let (m, x) = inner.split_once(';').ok_or_else(bad)?;
                let kind = AutoKind::from_token(name).ok_or_else(bad)?;
                let m = if m.is_empty() { 1 } else { m.parse().map_err(|_| bad())? };
                let x: u32 = x.parse().map_err(|_| bad())?;
                AutoSpec::new(kind, m, FieldElem::from_raw(x))
            })
            .collect::<Result<Vec<_>>>()
            .map(AutoChain)
    }
}

/// A coordinate symbol `a_{i,j}` (or `a'_{i,i}`) that a map reads.
#[derive(Debug, Clone, Copy)]
enum Source {
    Const(i64),
    Pos(usize),
}

fn sym(i: i64, j: i64, prime: bool) -> Source {
    match (i, j, prime) {
        (0, 0, _) => Source::Const(-1),
        (0, -1, false) | (-1, 0, false) => Source::Const(0),
        (0, 1, false) | (1, 0, false) => Source::Pos(0),
        (1, 1, true) => Source::Pos(1),
        (i, j, false) if i == j => Source::Pos(CoordLabel::Diag(i as usize).position()),
        (i, j, true) if i == j => Source::Pos(CoordLabel::DiagPrime(i as usize).position()),
        (i, j, false) if j == i + 1 => Source::Pos(CoordLabel::Upper(i as usize).position()),
        (i, j, false) if i == j + 1 => Source::Pos(CoordLabel::Lower(j as usize).position()),
        _ => unreachable!("no symbol a_({i},{j})"),
    }
}

/// `(target position, source)` pairs: the map adds `x * source` to the
/// target. Targets are distinct and sorted; every source precedes its target.
fn increments(spec: &AutoSpec, k: usize) -> Vec<(usize, Source)> {
    use CoordLabel::*;
    let m = spec.m as i64;
    let mut out = Vec::new();
    let mut push = |target: CoordLabel, src: Source| {
        let p = target.position();
        if p < k {
            out.push((p, src));
        }
    };
    // blocks beyond k contribute nothing; (k / 4 + 2) covers every position < k
    let top = k as i64 / 4 + 2;
    for i in 1..=top {
        let r = i - m;
        let iu = i as usize;
        match spec.kind {
            AutoKind::T11 => {
                push(Diag(iu), sym(i - 1, i - 1, false));
                push(Upper(iu), sym(i - 1, i, false));
                push(Lower(iu), sym(i, i - 1, false));
                if i >= 2 {
                    push(DiagPrime(iu), sym(i - 1, i - 1, true));
                }
            }
            AutoKind::Upper => {
                if r >= 1 {
                    push(Diag(iu), sym(r, r - 1, false));
                }
                if r >= 0 {
                    push(Upper(iu), sym(r, r, true));
                }
            }
            AutoKind::Lower => {
                if r >= 0 {
                    push(Lower(iu), sym(r, r, false));
                }
                if r >= 1 {
                    push(DiagPrime(iu), sym(r - 1, r, false));
                }
            }
            AutoKind::Diag => {
                if r >= 0 {
                    push(Diag(iu), sym(r, r, false));
                    push(Upper(iu), sym(r, r + 1, false));
                }
            }
            AutoKind::DiagPrime => {
                if r >= 0 {
                    push(Lower(iu), sym(r + 1, r, false));
                    push(DiagPrime(iu), sym(r, r, true));
                }
            }
        }
    }
    out.sort_by_key(|&(p, _)| p);
    debug_assert!(out.windows(2).all(|w| w[0].0 < w[1].0));
    debug_assert!(out.iter().all(|&(p, s)| !matches!(s, Source::Pos(q) if q >= p)));
    out
}

fn value(field: &Field, v: &[FieldElem], s: Source) -> FieldElem {
    match s {
        Source::Const(c) => field.from_int(c),
        Source::Pos(p) => v[p],
    }
}

fn check_field(field: &Field) -> Result<()> {
    if field.characteristic() != 3 {
        return Err(SymmetryError::Characteristic(field.characteristic()));
    }
    Ok(())
}

fn check_spec(field: &Field, spec: &AutoSpec, k: usize) -> Result<()> {
    check_field(field)?;
    if spec.m < spec.kind.min_block() {
        return Err(SymmetryError::BadBlock { kind: spec.kind, m: spec.m });
    }
    if spec.x.value() >= field.q() {
        return Err(SymmetryError::BadParameter(spec.x.value() as u64));
    }
    if !spec.applies_at(k) {
        return Err(SymmetryError::Inapplicable {
            spec: spec.to_string(),
            k,
        });
    }
    Ok(())
}

fn apply_raw(field: &Field, spec: &AutoSpec, v: &[FieldElem]) -> Vec<FieldElem> {
    let mut out = v.to_vec();
    for (t, src) in increments(spec, v.len()) {
        out[t] = field.add(out[t], field.mul(value(field, v, src), spec.x));
    }
    out
}

fn invert_raw(field: &Field, spec: &AutoSpec, y: &[FieldElem]) -> Vec<FieldElem> {
    // sources precede targets, so preimage coordinates are recovered in order
    let mut x = y.to_vec();
    for (t, src) in increments(spec, y.len()) {
        x[t] = field.sub(y[t], field.mul(value(field, &x, src), spec.x));
    }
    x
}

/// Image of `v` (on any part) under `spec`.
pub fn apply_auto(field: &Field, spec: &AutoSpec, v: &DVertex) -> Result<DVertex> {
    check_spec(field, spec, v.k())?;
    Ok(DVertex::new(v.side, apply_raw(field, spec, &v.coords)))
}

/// Preimage of `v` under `spec`.
///
/// This is computed by forward substitution. Replacing `x` by `-x` is not
/// always the inverse: for `t11` the composite moves `a_22` by `x^2`.
pub fn apply_auto_inverse(field: &Field, spec: &AutoSpec, v: &DVertex) -> Result<DVertex> {
    check_spec(field, spec, v.k())?;
    Ok(DVertex::new(v.side, invert_raw(field, spec, &v.coords)))
}

pub fn apply_chain(field: &Field, chain: &AutoChain, v: &DVertex) -> Result<DVertex> {
    chain.0.iter().try_fold(v.clone(), |acc, s| apply_auto(field, s, &acc))
}

pub fn apply_chain_inverse(field: &Field, chain: &AutoChain, v: &DVertex) -> Result<DVertex> {
    chain.0.iter().rev().try_fold(v.clone(), |acc, s| apply_auto_inverse(field, s, &acc))
}

/// The automorphism whose primary coordinate sits at position `pos >= 1`.
pub fn spec_for_position(pos: usize, x: FieldElem) -> AutoSpec {
    let (kind, m) = match CoordLabel::at(pos) {
        CoordLabel::Diag(1) => (AutoKind::T11, 1),
        CoordLabel::Upper(m) => (AutoKind::Upper, m),
        CoordLabel::Lower(m) => (AutoKind::Lower, m),
        CoordLabel::Diag(m) => (AutoKind::Diag, m),
        CoordLabel::DiagPrime(m) => (AutoKind::DiagPrime, m),
        CoordLabel::One => panic!("position 0 is fixed by every map"),
    };
    AutoSpec { kind, m, x }
}

/// A chain sending `a` to `(a_1, 0, ..., 0, *, ...)` with zeros at
/// coordinates `2..=s+1`. Built greedily: each map moves its primary
/// coordinate by minus its parameter and touches only later coordinates, so
/// the parameter is the current value of that coordinate.
pub fn normalize_vertex(field: &Field, a: &DVertex, s: usize) -> Result<AutoChain> {
    check_field(field)?;
    let k = a.k();
    if s + 1 > k {
        return Err(SymmetryError::TooManyCoordinates { s, k });
    }
    let mut image = a.coords.clone();
    let mut chain = Vec::with_capacity(s);
    for pos in 1..=s {
        let spec = spec_for_position(pos, image[pos]);
        image = apply_raw(field, &spec, &image);
        debug_assert!(image[pos].is_zero());
        chain.push(spec);
    }
    Ok(AutoChain(chain))
}

/// Power of `a1` dividing the coordinate at `pos` under [`link_scaling`].
pub fn scaling_exponent(pos: usize) -> u64 {
    match CoordLabel::at(pos) {
        CoordLabel::One => 1,
        CoordLabel::Diag(i) | CoordLabel::DiagPrime(i) => 2 * i as u64,
        CoordLabel::Upper(i) | CoordLabel::Lower(i) => 2 * i as u64 + 1,
    }
}

/// Divides each coordinate of `v` by `a1^e` with the exponents of
/// [`scaling_exponent`]; carries the link of `(a1,0,...,0)` onto the link
/// of `(1,0,...,0)`. Works in any characteristic.
pub fn link_scaling(field: &Field, a1: FieldElem, v: &DVertex) -> Result<DVertex> {
    let inv = field.inv(a1).map_err(|_| SymmetryError::ZeroScale)?;
    let coords = v
        .coords
        .iter()
        .enumerate()
        .map(|(p, &c)| field.mul(c, field.pow(inv, scaling_exponent(p))))
        .collect();
    Ok(DVertex::new(v.side, coords))
}

/// Outcome of [`verify_auto`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutoReport {
    pub chain: String,
    pub k: usize,
    pub q: u32,
    pub exhaustive: bool,
    pub hyperedges_checked: u64,
    /// First hyperedge whose image fails, with the failing relation (1-based).
    pub counterexample: Option<([Vec<u32>; 3], usize)>,
    /// Forward substitution recovered every checked vertex.
    pub inverse_ok: bool,
    /// Applying the chain with negated parameters also recovered every
    /// checked vertex.
    pub negated_parameters_invert: bool,
}

impl AutoReport {
    /// Hyperedges preserved and the map invertible on the checked set.
    pub fn passed(&self) -> bool {
        self.counterexample.is_none() && self.inverse_ok
    }
}

/// Hyperedge budget below which [`verify_auto`] checks every hyperedge.
pub const EXHAUSTIVE_LIMIT: u64 = 1_000_000;

/// Checks that `chain` maps hyperedges of D3(k,q) to hyperedges, on all of
/// them when there are at most [`EXHAUSTIVE_LIMIT`], else on `sample_size`
/// seeded random ones; also checks invertibility on their vertices.
pub fn verify_auto(field: &Field, chain: &AutoChain, k: usize, sample_size: usize, seed: u64) -> Result<AutoReport> {
    check_field(field)?;
    for spec in &chain.0 {
        check_spec(field, spec, k)?;
    }
    let q = field.q();
    let triple = Triple::new(k, field)?;
    let total = (q as u64).pow(2 * k as u32 + 1);
    let exhaustive = total <= EXHAUSTIVE_LIMIT;
    let negated = AutoChain(chain.0.iter().map(|s| s.with_x(field.neg(s.x))).collect());
    let map = |v: &[FieldElem]| chain.0.iter().fold(v.to_vec(), |acc, s| apply_raw(field, s, &acc));

    let mut report = AutoReport {
        chain: chain.to_string(),
        k,
        q,
        exhaustive,
        hyperedges_checked: 0,
        counterexample: None,
        inverse_ok: true,
        negated_parameters_invert: true,
    };
    let mut check = |a: Vec<FieldElem>, b: Vec<FieldElem>, c: Vec<FieldElem>| -> bool {
        report.hyperedges_checked += 1;
        let (ma, mb, mc) = (map(&a), map(&b), map(&c));
        if let Some(rel) = triple.violated_relation(&ma, &mb, &mc) {
            let raw = |v: &[FieldElem]| v.iter().map(|x| x.value()).collect::<Vec<u32>>();
            report.counterexample = Some(([raw(&a), raw(&b), raw(&c)], rel));
            return false;
        }
        for (orig, img) in [(&a, &ma), (&b, &mb), (&c, &mc)] {
            let back = chain.0.iter().rev().fold(img.clone(), |acc, s| invert_raw(field, s, &acc));
            report.inverse_ok &= &back == orig;
            let neg = negated.0.iter().rev().fold(img.clone(), |acc, s| apply_raw(field, s, &acc));
            report.negated_parameters_invert &= &neg == orig;
        }
        true
    };

    let elems = field.elements();
    let side = (q as u64).pow(k as u32) as u32;
    if exhaustive {
        'outer: for ia in 0..side {
            let a = coords_of(ia, k, q);
            for ib in 0..side {
                let b = coords_of(ib, k, q);
                for &t in &elems {
                    let c = triple.solve_third(&a, &b, t);
                    if !check(a.clone(), b.clone(), c) {
                        break 'outer;
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..sample_size {
            let a: Vec<FieldElem> = (0..k).map(|_| FieldElem::from_raw(rng.gen_range(0..q))).collect();
            let b: Vec<FieldElem> = (0..k).map(|_| FieldElem::from_raw(rng.gen_range(0..q))).collect();
            let c = triple.solve_third(&a, &b, FieldElem::from_raw(rng.gen_range(0..q)));
            if !check(a, b, c) {
                break;
            }
        }
    }
    Ok(report)
}

/// Every applicable single map at truncation `k` with parameter `x`: one per
/// coordinate position `1..k`.
pub fn applicable_specs(k: usize, x: FieldElem) -> Vec<AutoSpec> {
    (1..k).map(|pos| spec_for_position(pos, x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dseries::{build_bipartite, d3_link, index_of, DFamily, Side};
    use crate::analysis::verify_iso_map;
    use proptest::prelude::*;

    fn gf(q: u64) -> Field {
        Field::for_order(q).unwrap()
    }

    fn el(v: u32) -> FieldElem {
        FieldElem::from_raw(v)
    }

    fn t11(x: u32) -> AutoSpec {
        AutoSpec::new(AutoKind::T11, 1, el(x)).unwrap()
    }

    #[test]
    fn t11_by_hand() {
        let f = gf(3);
        let z = DVertex::zero(Side::A, 2);
        // a11 -> a11 + a00 x = -x
        assert_eq!(apply_auto(&f, &t11(1), &z).unwrap().coords, vec![el(0), el(2)]);
        // k = 4, a = (a1, a11, a12, a21): a12 += a1 x, a21 += a1 x
        let a = DVertex::new(Side::B, vec![el(1), el(1), el(0), el(0)]);
        assert_eq!(
            apply_auto(&f, &t11(1), &a).unwrap().coords,
            vec![el(1), el(0), el(1), el(1)]
        );
        for spec in applicable_specs(6, el(0)) {
            let v = DVertex::new(Side::C, coords_of(400, 6, 3));
            assert_eq!(apply_auto(&f, &spec, &v).unwrap(), v);
        }
    }

    #[test]
    fn gates() {
        let spec = AutoSpec::new(AutoKind::Upper, 1, el(1)).unwrap();
        assert_eq!(
            apply_auto(&gf(4), &spec, &DVertex::zero(Side::A, 3)),
            Err(SymmetryError::Characteristic(2))
        );
        assert!(matches!(
            apply_auto(&gf(3), &spec, &DVertex::zero(Side::A, 2)),
            Err(SymmetryError::Inapplicable { .. })
        ));
        assert_eq!(
            AutoSpec::new(AutoKind::Diag, 1, el(0)),
            Err(SymmetryError::BadBlock { kind: AutoKind::Diag, m: 1 })
        );
        assert!(verify_auto(&gf(4), &AutoChain::single(spec), 3, 10, 0).is_err());
    }

    #[test]
    fn chain_text_round_trip() {
        let chain: AutoChain = "t11(;2)∘t12(1;1)".parse().unwrap();
        assert_eq!(chain.0, vec![t11(2), AutoSpec::new(AutoKind::Upper, 1, el(1)).unwrap()]);
        assert_eq!(chain.to_string(), "t11(;2)∘t12(1;1)");
        let c2: AutoChain = "t22p(3;5)∘t21(2;0)∘t22(2;1)".parse().unwrap();
        assert_eq!(c2.to_string().parse::<AutoChain>().unwrap(), c2);
        assert!("t99(1;1)".parse::<AutoChain>().is_err());
        assert!("t11(;x)".parse::<AutoChain>().is_err());
        assert_eq!("".parse::<AutoChain>().unwrap(), AutoChain::default());
    }

    #[test]
    fn normalize_small_example() {
        let f = gf(3);
        let a = DVertex::new(Side::A, vec![el(1), el(2)]);
        let chain = normalize_vertex(&f, &a, 1).unwrap();
        assert_eq!(chain.0, vec![t11(2)]);
        assert_eq!(apply_chain(&f, &chain, &a).unwrap().coords, vec![el(1), el(0)]);
        assert!(normalize_vertex(&f, &a, 2).is_err());
    }

    #[test]
    fn negated_parameter_is_not_always_inverse() {
        let f = gf(3);
        let a = DVertex::new(Side::A, vec![el(1), el(0), el(0), el(0), el(0)]);
        let there = apply_auto(&f, &t11(1), &a).unwrap();
        let back = apply_auto(&f, &t11(2), &there).unwrap();
        // a22 picks up x^2
        assert_eq!(back.coords, vec![el(1), el(0), el(0), el(0), el(1)]);
        assert_eq!(apply_auto_inverse(&f, &t11(1), &there).unwrap(), a);
    }

    #[test]
    fn scaling_examples() {
        let f = gf(3);
        let v = DVertex::new(Side::B, vec![el(1), el(1)]);
        assert_eq!(link_scaling(&f, el(2), &v).unwrap().coords, vec![el(2), el(1)]);
        assert_eq!(link_scaling(&f, el(1), &v).unwrap(), v);
        assert_eq!(link_scaling(&f, el(0), &v), Err(SymmetryError::ZeroScale));
        let exps: Vec<u64> = (0..8).map(scaling_exponent).collect();
        assert_eq!(exps, vec![1, 2, 3, 3, 4, 4, 5, 5]);
    }

    #[test]
    fn exhaustive_small_verification() {
        let f = gf(3);
        for k in 2..=3 {
            for x in f.elements() {
                for spec in applicable_specs(k, x) {
                    let r = verify_auto(&f, &AutoChain::single(spec), k, 0, 0).unwrap();
                    assert!(r.passed() && r.exhaustive, "{r:?}");
                    assert!(r.negated_parameters_invert);
                }
            }
        }
    }

    #[test]
    fn sampled_verification_larger_k() {
        let f = gf(3);
        for x in [el(1), el(2)] {
            for spec in applicable_specs(8, x) {
                let r = verify_auto(&f, &AutoChain::single(spec), 8, 300, 7).unwrap();
                assert!(r.passed(), "{r:?}");
                assert!(!r.exhaustive);
            }
        }
        // t_{2,3} at k = 7
        let spec = AutoSpec::new(AutoKind::Upper, 2, el(1)).unwrap();
        assert!(verify_auto(&f, &AutoChain::single(spec), 7, 300, 1).unwrap().passed());
        // over GF(9)
        let f9 = gf(9);
        for spec in applicable_specs(5, el(5)) {
            assert!(verify_auto(&f9, &AutoChain::single(spec), 5, 200, 3).unwrap().passed());
        }
    }

    #[test]
    fn t11_negation_fails_from_k5() {
        let f = gf(3);
        let r = verify_auto(&f, &AutoChain::single(t11(1)), 5, 500, 11).unwrap();
        assert!(r.passed());
        assert!(!r.negated_parameters_invert);
    }

    #[test]
    fn scaling_carries_links() {
        for (q, k) in [(3u64, 2usize), (3, 3), (4, 3), (9, 3), (5, 2)] {
            let f = gf(q);
            let qq = q as u32;
            let target = d3_link(k, &f, &DVertex::axis(Side::A, k, FieldElem::ONE)).unwrap();
            let side = qq.pow(k as u32);
            for a1 in f.elements().into_iter().filter(|a| !a.is_zero()) {
                let link = d3_link(k, &f, &DVertex::axis(Side::A, k, a1)).unwrap();
                let map: Vec<u32> = (0..2 * side)
                    .map(|v| {
                        let (part, local) = (v / side, v % side);
                        let y = DVertex::new(Side::B, coords_of(local, k, qq));
                        part * side + index_of(&link_scaling(&f, a1, &y).unwrap().coords, qq)
                    })
                    .collect();
                assert_eq!(verify_iso_map(&link, &target, &map), Ok(()), "q={q} k={k}");
            }
        }
        // the (1,0,...) link is D' after the shift
        let f = gf(3);
        let _ = build_bipartite(DFamily::Dprime, 2, &f).unwrap();
    }

    proptest! {
        #[test]
        fn normalize_zeroes_leading_coordinates(
            q in prop::sample::select(vec![3u64, 9]),
            k in 2usize..=6,
            raw in prop::collection::vec(any::<u32>(), 6),
            s_frac in 0.0f64..1.0,
        ) {
            let f = gf(q);
            let coords: Vec<FieldElem> = raw[..k].iter().map(|r| el(r % q as u32)).collect();
            let a = DVertex::new(Side::A, coords);
            let s = ((k - 1) as f64 * s_frac).round() as usize;
            let chain = normalize_vertex(&f, &a, s).unwrap();
            let img = apply_chain(&f, &chain, &a).unwrap();
            prop_assert_eq!(img.coords[0], a.coords[0]);
            prop_assert!(img.coords[1..=s].iter().all(|c| c.is_zero()));
            prop_assert_eq!(apply_chain_inverse(&f, &chain, &img).unwrap(), a);
        }

        #[test]
        fn chains_preserve_hyperedges(
            xs in prop::collection::vec(0u32..3, 1..5),
            positions in prop::collection::vec(1usize..7, 1..5),
            seed in any::<u64>(),
        ) {
            let f = gf(3);
            let chain = AutoChain(
                positions.iter().zip(xs.iter()).map(|(&p, &x)| spec_for_position(p, el(x))).collect()
            );
            let r = verify_auto(&f, &chain, 7, 60, seed).unwrap();
            prop_assert!(r.passed(), "{:?}", r);
        }
    }
}
