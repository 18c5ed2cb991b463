//! Random 3-graphs and the deletion process that destroys every suspended
//! `2k`-cycle.
//!
//! Probabilities are exact rationals. Sampling compares a 64-bit draw with
//! `floor(p * 2^64)`, so dyadic `p = T / 2^64` is sampled exactly.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::has_cycle_of_length;
use crate::graphcore::{Graph, GraphError, GraphMeta, TripleSystem};

pub const MAX_SAMPLE_VERTICES: usize = 400;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RandomError {
    #[error("n = {0} exceeds the sampling limit of {MAX_SAMPLE_VERTICES}")]
    TooLarge(usize),
    #[error("probability {0} is outside [0, 1]")]
    BadProbability(String),
    #[error("need n >= 2 and k >= 2, got n = {n}, k = {k}")]
    BadParameters { n: usize, k: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub type Result<T> = std::result::Result<T, RandomError>;

fn two_pow_64() -> BigInt {
    BigInt::one() << 64
}

/// `floor(p * 2^64)`, or `None` when `p = 1` (every draw accepted).
fn threshold(p: &BigRational) -> Option<u64> {
    if p >= &BigRational::one() {
        return None;
    }
    let scaled = (p * BigRational::from_integer(two_pow_64())).floor().to_integer();
    Some(scaled.to_u64().expect("p < 1"))
}

/// Each triple of `0..n` independently with probability `p`. The generator
/// for triples with smallest vertex `i` is stream `i` of the seeded
/// ChaCha8, so the result does not depend on the thread count.
pub fn sample_g3(n: usize, p: &BigRational, seed: u64) -> Result<TripleSystem> {
    if n > MAX_SAMPLE_VERTICES {
        return Err(RandomError::TooLarge(n));
    }
    if p < &BigRational::zero() || p > &BigRational::one() {
        return Err(RandomError::BadProbability(p.to_string()));
    }
    let t = threshold(p);
    let edges: Vec<[u32; 3]> = (0..n as u32)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            let mut out = Vec::new();
            for j in i + 1..n as u32 {
                for k in j + 1..n as u32 {
                    let draw = rng.next_u64();
                    if t.is_none_or(|t| draw < t) {
                        out.push([i, j, k]);
                    }
                }
            }
            out
        })
        .collect();
    Ok(TripleSystem::explicit(vec![n], edges, GraphMeta::new("g3", 0, None))?)
}

/// The rate `coefficient * n^exponent` with `coefficient = 1/(10 k^100)` and
/// `exponent = -(2k-2)/(2k-1)`. Kept symbolic: the power is irrational in
/// general.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofRate {
    pub n: usize,
    pub k: usize,
    pub coefficient: BigRational,
    pub exponent: (i64, i64),
}

impl ProofRate {
    /// Natural logarithm of the rate; the value itself underflows `f64`.
    pub fn ln(&self) -> f64 {
        let (num, den) = self.exponent;
        let coeff = -(10f64.ln() + 100.0 * (self.k as f64).ln());
        coeff + num as f64 / den as f64 * (self.n as f64).ln()
    }
}

pub fn paper_rate_p(n: usize, k: usize) -> Result<ProofRate> {
    if n < 2 || k < 2 {
        return Err(RandomError::BadParameters { n, k });
    }
    let denom = BigInt::from(10) * BigInt::from(k).pow(100);
    Ok(ProofRate {
        n,
        k,
        coefficient: BigRational::new(BigInt::one(), denom),
        exponent: (-(2 * k as i64 - 2), 2 * k as i64 - 1),
    })
}

/// `c * n^{-(2k-2)/(2k-1)}` rounded down to a multiple of `2^-64`, clamped
/// to `[0, 1]`.
pub fn practical_p(n: usize, k: usize, c: f64) -> Result<BigRational> {
    if n < 2 || k < 2 {
        return Err(RandomError::BadParameters { n, k });
    }
    let e = (2 * k - 2) as f64 / (2 * k - 1) as f64;
    let p = (c * (n as f64).powf(-e)).clamp(0.0, 1.0);
    if p >= 1.0 {
        return Ok(BigRational::one());
    }
    // p < 1, so p * 2^64 fits after flooring
    let t = (p * 2f64.powi(64)).floor() as u64;
    Ok(BigRational::new(BigInt::from(t), two_pow_64()))
}

/// `p C(n,3) - (2k+1) n^{2k+1} p^{2k}`.
pub fn paper_expected_final_lb(n: usize, k: usize, p: &BigRational) -> BigRational {
    let c3 = BigRational::from_integer(binomial(BigInt::from(n), BigInt::from(3)));
    let nn = BigRational::from_integer(BigInt::from(n).pow(2 * k as u32 + 1));
    let lead = BigRational::from_integer(BigInt::from(2 * k + 1));
    p * c3 - lead * nn * num_traits::pow(p.clone(), 2 * k)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeletionReport {
    pub n: usize,
    pub k: usize,
    /// Exact, as `num/den`.
    pub p: String,
    pub seed: u64,
    pub initial_edges: u64,
    pub copies_found: u64,
    pub edges_deleted: u64,
    pub final_edges: u64,
    pub expected_initial: String,
    pub paper_expected_final_lb: String,
}

fn link_graph(n: usize, edges: &BTreeSet<[u32; 3]>, x: u32) -> Graph {
    let pairs: Vec<(u32, u32)> = edges
        .iter()
        .filter(|e| e.contains(&x))
        .map(|e| {
            let mut rest = e.iter().copied().filter(|&v| v != x);
            (rest.next().unwrap(), rest.next().unwrap())
        })
        .collect();
    Graph::from_edges(vec![n], &pairs, GraphMeta::default()).expect("link of a simple 3-graph")
}

fn sorted(mut e: [u32; 3]) -> [u32; 3] {
    e.sort_unstable();
    e
}

/// Deletes hyperedges until no link has a `2k`-cycle.
///
/// Apexes are processed in ascending order. While the link of the current
/// apex has a `2k`-cycle, the first one found is taken and one of its `2k`
/// hyperedges, chosen by a generator seeded with `seed`, is removed.
/// Deletions never create cycles, so finished apexes stay clean.
pub fn deletion_process(h: &TripleSystem, k: usize, p: &BigRational, seed: u64) -> Result<(TripleSystem, DeletionReport)> {
    let n = h.n();
    let mut edges: BTreeSet<[u32; 3]> = h.edge_list().into_iter().map(sorted).collect();
    let initial = edges.len() as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(u64::MAX);
    let mut copies = 0u64;
    for x in 0..n as u32 {
        while let Some(cycle) = has_cycle_of_length(&link_graph(n, &edges, x), 2 * k) {
            copies += 1;
            let i = rng.gen_range(0..cycle.len());
            let e = sorted([x, cycle[i], cycle[(i + 1) % cycle.len()]]);
            let removed = edges.remove(&e);
            debug_assert!(removed);
        }
    }
    let final_edges = edges.len() as u64;
    let out = TripleSystem::explicit(h.part_sizes().to_vec(), edges.into_iter().collect(), h.meta().clone())?;
    let c3 = BigRational::from_integer(binomial(BigInt::from(n), BigInt::from(3)));
    let report = DeletionReport {
        n,
        k,
        p: p.to_string(),
        seed,
        initial_edges: initial,
        copies_found: copies,
        edges_deleted: initial - final_edges,
        final_edges,
        expected_initial: (p * c3).to_string(),
        paper_expected_final_lb: paper_expected_final_lb(n, k, p).to_string(),
    };
    Ok((out, report))
}
