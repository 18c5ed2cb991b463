//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines always reach the console.
//! A criterion listed in `KNOWN_FAILURES` is reported as FAIL without
//! failing the run; the run fails if any other criterion fails or if a
//! listed one starts passing. `--extended` adds the larger G(32,s) cases.

use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::Value;

use girthlab::claims::{self, ClaimParams};

/// Criterion 4: no single cycle length reproduces 112 and 4 through the base
/// edge; the diameters do match.
const KNOWN_FAILURES: &[u32] = &[4];

const COUNT_KS: [u32; 3] = [2, 3, 4];
const COUNT_QS: [u64; 5] = [3, 4, 5, 8, 9];
const COUNT_MAX_SIDE: u64 = 100_000;

/// Exact girths of D(k,q), k = 2..=6 by row, q = 3, 4, 5, 9 by column.
const GIRTHS: [[usize; 4]; 5] = [[6, 6, 6, 6], [8, 8, 8, 8], [12, 8, 8, 8], [12, 10, 10, 10], [12, 10, 10, 10]];

const DIAMETERS: (u64, u64) = (22, 20);
const CYCLES_THROUGH_BASE_EDGE: (u64, u64) = (112, 4);

/// Deletion runs: (n, seed, initial hyperedges, final hyperedges).
const DELETION_BASELINE: [(u64, u64, u64, u64); 6] = [
    (30, 1, 221, 206),
    (30, 2, 195, 186),
    (30, 3, 190, 182),
    (60, 1, 1123, 1049),
    (60, 2, 1107, 1028),
    (60, 3, 1127, 1053),
];
const MIN_KEPT_FRACTION: f64 = 0.5;

struct Outcome {
    pass: bool,
    detail: String,
}

fn claim(id: &str, params: ClaimParams) -> claims::ClaimReport {
    claims::run(id, &params).unwrap_or_else(|e| panic!("{id}: {e}"))
}

fn rows(v: &Value) -> &Vec<Value> {
    v.as_array().expect("array of rows")
}

fn c1_counts() -> Outcome {
    let r = claim("counts", ClaimParams::default());
    let expected_cases: Vec<(u64, u64)> = COUNT_KS
        .iter()
        .flat_map(|&k| COUNT_QS.iter().map(move |&q| (k as u64, q)))
        .filter(|&(k, q)| q.pow(k as u32) <= COUNT_MAX_SIDE)
        .collect();
    let rows = rows(&r.measured);
    let mut pass = rows.len() == expected_cases.len();
    for (row, &(k, q)) in rows.iter().zip(&expected_cases) {
        pass &= row["k"] == k && row["q"] == q;
        for fam in ["D", "Dprime"] {
            pass &= row[fam]["vertices"] == 2 * q.pow(k as u32);
            pass &= row[fam]["regular"] == q;
        }
        pass &= row["D3"]["hyperedges"] == q.pow(2 * k as u32 + 1);
    }
    Outcome { pass, detail: format!("{} (k,q) cases", rows.len()) }
}

fn c2_girth() -> Outcome {
    let r = claim("girth-bounds", ClaimParams::default());
    let mut pass = true;
    let mut seen = 0;
    for row in rows(&r.measured) {
        let k = row["k"].as_u64().unwrap() as usize;
        let q = row["q"].as_u64().unwrap();
        let col = [3, 4, 5, 9].iter().position(|&x| x == q).unwrap();
        let g: usize = row["girth"].as_str().unwrap().parse().unwrap();
        let bound = if k % 2 == 0 { k + 4 } else { k + 5 };
        pass &= g >= bound && g == GIRTHS[k - 2][col];
        seen += 1;
    }
    pass &= seen == 20;
    Outcome { pass, detail: format!("{seen} graphs, girths {GIRTHS:?}") }
}

fn c3_table2() -> Outcome {
    let r = claim("thm7a", ClaimParams::default());
    let rows = rows(&r.measured);
    let pass = rows.len() == 8 && rows.iter().all(|x| x["iso"] == true);
    Outcome { pass, detail: "D'(k,3) for k=2..6, D'(k,9) for k=2..4".into() }
}

fn c4_separation() -> Outcome {
    let d = claim("thm7b-diameter", ClaimParams::default()).measured;
    let diam = (d["D"]["diameter"].as_u64().unwrap(), d["Dprime"]["diameter"].as_u64().unwrap());
    let c = claim("thm7b-cycles", ClaimParams::default()).measured;
    let sweep: Vec<(u64, u64, u64)> = rows(&c["sweep"])
        .iter()
        .map(|x| (x["length"].as_u64().unwrap(), x["D"].as_u64().unwrap(), x["Dprime"].as_u64().unwrap()))
        .collect();
    let matching = sweep.iter().find(|&&(_, a, b)| (a, b) == CYCLES_THROUGH_BASE_EDGE);
    Outcome {
        pass: diam == DIAMETERS && matching.is_some(),
        detail: format!(
            "diameters {diam:?} (want {DIAMETERS:?}); cycles through base edge (length, D, D') {sweep:?}, want {CYCLES_THROUGH_BASE_EDGE:?} at one length"
        ),
    }
}

fn c5_suspension() -> Outcome {
    let m = claim("thm2-suspension", ClaimParams::default()).measured;
    let pass = m["D3(3,3)"]["suspension_free"] == true
        && m["D3(2,3)"]["suspension_free"] == true
        && m["D3(2,3)"]["min_link_girth"] == "6"
        && rows(&m["link_of_zero"]).iter().all(|x| x["link_of_zero_is_D"] == true);
    Outcome { pass, detail: m.to_string() }
}

fn c6_two_links() -> Outcome {
    let m = claim("prop5", ClaimParams::default()).measured;
    // 3 parts of 27 vertices; those with first coordinate 0 give D
    let pass = m["failures"].as_array().unwrap().is_empty() && m["links_onto_D"] == 27 && m["links_onto_Dprime"] == 54;
    Outcome { pass, detail: format!("{} links onto D, {} onto D'", m["links_onto_D"], m["links_onto_Dprime"]) }
}

fn c7_automorphisms() -> Outcome {
    let m = claim("prop4", ClaimParams::default()).measured;
    let autos = rows(&m["automorphisms"]);
    // k=2: t11 for each x; k=3: t11 and t12(1) for each x
    let pass = autos.len() == 3 + 6
        && autos.iter().all(|a| a["pass"] == true && a["hyperedges"] == if a["k"] == 2 { 243 } else { 2187 })
        && m["normalized_vertex_cases"] == 27 * 3;
    Outcome { pass, detail: format!("{} maps checked exhaustively", autos.len()) }
}

fn c8_arc_wenger() -> Outcome {
    let m = claim("prop6", ClaimParams::default()).measured;
    let rows = rows(&m);
    let pass = rows.len() == 4 && rows.iter().all(|x| x["iso"] == true && x["plucker_relations"] == true);
    Outcome { pass, detail: "(k,q) in (3,3),(3,4),(3,5),(4,3)".into() }
}

fn c9_c6_free(extended: bool) -> Outcome {
    let mut cases = vec![(3, 1), (3, 2), (4, 1), (4, 3)];
    if extended {
        cases.extend([(5, 2), (5, 3)]);
    }
    let mut pass = true;
    for &(r, s) in &cases {
        let m = claim("thm10", ClaimParams { r: Some(r), s: Some(s), ..Default::default() }).measured;
        let row = &m[0];
        pass &= row["vertices"] == 2 * (1u64 << (3 * r));
        pass &= row["c6_free"] == true && row["power_map_bijective"] == true;
        if s == 1 {
            pass &= row["equals_wenger"] == true;
        }
    }
    Outcome { pass, detail: format!("(r,s) in {cases:?}") }
}

fn c10_c8() -> Outcome {
    let m = claim("arc-c8", ClaimParams::default()).measured;
    let rows = rows(&m);
    let pass = rows.len() == 2 && rows.iter().all(|x| x["c8"] == true);
    let witnesses: Vec<String> = rows.iter().map(|x| format!("q={}: {}", x["q"], x["witness"])).collect();
    Outcome { pass, detail: witnesses.join("; ") }
}

/// `p C(n,3) - (2k+1) n^(2k+1) p^(2k)` with `p = a/b`, over a common
/// denominator in integers.
fn lower_bound_by_integers(n: u64, k: u32, p: &BigRational) -> BigRational {
    let (a, b) = (p.numer().clone(), p.denom().clone());
    let c3 = BigInt::from(n * (n - 1) * (n - 2) / 6);
    let num = &a * c3 * b.pow(2 * k - 1) - BigInt::from(2 * k + 1) * BigInt::from(n).pow(2 * k + 1) * a.pow(2 * k);
    BigRational::new(num, b.pow(2 * k))
}

fn c11_deletion() -> Outcome {
    let m = claim("prop1", ClaimParams::default()).measured;
    let rows = rows(&m);
    let mut pass = rows.len() == DELETION_BASELINE.len();
    for (row, &(n, seed, initial, fin)) in rows.iter().zip(&DELETION_BASELINE) {
        let rep = &row["report"];
        pass &= rep["n"] == n && rep["seed"] == seed && rep["k"] == 2;
        pass &= rep["initial_edges"] == initial && rep["final_edges"] == fin;
        pass &= row["suspension_free"] == true;
        pass &= fin as f64 >= MIN_KEPT_FRACTION * initial as f64;
        let p = BigRational::from_str(rep["p"].as_str().unwrap()).unwrap();
        let lb = BigRational::from_str(rep["paper_expected_final_lb"].as_str().unwrap()).unwrap();
        pass &= lb == lower_bound_by_integers(n, 2, &p);
        pass &= p > BigRational::from_integer(0.into()) && p < BigRational::one();
    }
    Outcome { pass, detail: format!("{DELETION_BASELINE:?}") }
}

fn c12_oracles() -> Outcome {
    let m = claim("oracle", ClaimParams::default()).measured;
    let pass = m["mismatches"].as_array().unwrap().is_empty() && m["graphs"] == 200 && m["triple_systems"] == 50;
    Outcome {
        pass,
        detail: format!(
            "{} graphs ({} cycle counts), {} triple systems ({} suspension-free)",
            m["graphs"], m["cycle_count_checks"], m["triple_systems"], m["suspension_free_systems"]
        ),
    }
}

fn main() {
    let extended = std::env::args().any(|a| a == "--extended");
    let criteria: Vec<(u32, &str, Box<dyn Fn() -> Outcome>)> = vec![
        (1, "counts", Box::new(c1_counts)),
        (2, "girth bounds", Box::new(c2_girth)),
        (3, "D' to D isomorphism", Box::new(c3_table2)),
        (4, "D(11,3) vs D'(11,3) separation", Box::new(c4_separation)),
        (5, "suspension-freeness", Box::new(c5_suspension)),
        (6, "two-link classification", Box::new(c6_two_links)),
        (7, "automorphisms", Box::new(c7_automorphisms)),
        (8, "arc graph to Wenger", Box::new(c8_arc_wenger)),
        (9, "C6-free G(2^r,s)", Box::new(move || c9_c6_free(extended))),
        (10, "C8 in arc graph with infinity", Box::new(c10_c8)),
        (11, "probabilistic deletion", Box::new(c11_deletion)),
        (12, "oracle equivalence", Box::new(c12_oracles)),
    ];
    let mut unexpected = Vec::new();
    for (id, name, run) in criteria {
        let start = Instant::now();
        let out = run();
        let secs = start.elapsed().as_secs_f64();
        let known = KNOWN_FAILURES.contains(&id);
        let tag = if out.pass { "PASS" } else { "FAIL" };
        let note = match (out.pass, known) {
            (false, true) => " [known failure]",
            (true, true) => " [listed as known failure but passed]",
            _ => "",
        };
        println!("{tag} {id:>2} {name} ({secs:.1}s){note}: {}", out.detail);
        if out.pass == known {
            unexpected.push(id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
