//! `girthlab`: build the graph families, analyze edge-list files and check
//! the structural claims. Reports go to stdout as JSON lines, a short
//! summary to stderr.

use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use girthlab::analysis::{
    cycles_through_edge, diameter, girth, is_suspension_free, min_cycle_through_edge, signature_with, verify_iso_map,
    Girth,
};
use girthlab::claims::{self, ClaimParams, CLAIMS};
use girthlab::dseries::{
    build_bipartite, build_triple_system, coords_of, index_of, table2_map, DFamily, DVertex, Side, TripleMode,
};
use girthlab::field::Field;
use girthlab::geometry::{
    arc_graph_to_wenger_vertex_map, build_arc_graph, build_g2rs, build_wenger, frobenius_arc, nrc_arc,
};
use girthlab::graphcore::io::{self, Parsed};
use girthlab::graphcore::Graph;
use girthlab::random::{deletion_process, practical_p, sample_g3};
use girthlab::symmetry::{apply_chain, normalize_vertex};

#[derive(Parser)]
#[command(name = "girthlab", version, about = "High-girth algebraic graphs over finite fields")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "GIRTHLAB_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph or triple system and write it as an edge list.
    Construct(ConstructArgs),
    /// Girth, diameter, cycle counts or signature of an edge-list file.
    Analyze(AnalyzeArgs),
    /// Check a named claim (`list` shows them, `all` runs every one).
    Verify(VerifyArgs),
    /// Sample a random 3-graph and delete hyperedges until no link has a 2k-cycle.
    RandomDelete(RandomArgs),
    /// Automorphism chain clearing coordinates 2..s+1 of a D3 vertex.
    Normalize(NormalizeArgs),
    /// Check one of the explicit isomorphisms edge by edge.
    Isocheck(IsoArgs),
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Family {
    #[value(name = "D")]
    #[serde(rename = "D")]
    D,
    #[value(name = "Dprime")]
    #[serde(rename = "Dprime")]
    Dprime,
    #[value(name = "D3")]
    #[serde(rename = "D3")]
    D3,
    Wenger,
    /// Normal rational curve with its point at infinity.
    ArcNrc,
    /// Normal rational curve without the point at infinity.
    ArcNrcminus,
    /// Frobenius arc in PG(3, 2^r).
    ArcFrob,
    G2rs,
}

#[derive(Args, Serialize)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Dimension k (or t for arc graphs).
    #[arg(long)]
    k: Option<usize>,
    /// Field: a prime power such as `9`, or `3^2:1,0,1` for an explicit modulus.
    #[arg(long)]
    q: Option<String>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args, Serialize)]
struct AnalyzeArgs {
    input: PathBuf,
    #[arg(long)]
    girth: bool,
    /// Stop the girth search above this length and report a lower bound.
    #[arg(long)]
    girth_cap: Option<usize>,
    #[arg(long)]
    diameter: bool,
    /// `u,v,L`: cycles of length L through the edge uv (`L = auto` for the
    /// shortest). For two-part graphs u indexes part A and v part B.
    #[arg(long)]
    cycles: Option<String>,
    #[arg(long)]
    signature: bool,
    /// Restrict to the component of vertex 0 (or of u from `--cycles`).
    #[arg(long)]
    component: bool,
    /// For triple systems: check that no link has a 2k-cycle.
    #[arg(long, value_name = "K")]
    suspension_free: Option<usize>,
}

#[derive(Args, Serialize)]
struct VerifyArgs {
    claim: String,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args, Serialize)]
struct RandomArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long)]
    seed: u64,
    /// p = c * n^(-(2k-2)/(2k-1)).
    #[arg(long, default_value_t = claims::DELETION_C)]
    c: f64,
    /// Also write the final triple system here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Serialize)]
struct NormalizeArgs {
    #[arg(long, default_value = "3")]
    q: String,
    /// Vertex such as `A:(1,2,0)`.
    #[arg(long)]
    vertex: String,
    /// Coordinates to clear (default k - 1).
    #[arg(long)]
    s: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum IsoMap {
    /// D'(k,q) onto D(k,q).
    Table2,
    /// Arc graph of the normal rational curve (no point at infinity) onto H(k,q).
    ArcWenger,
    /// Frobenius arc graph onto G(2^r, s).
    Frobenius,
    /// Link of `--vertex` in D3(k,q) onto D(k,q) or D'(k,q).
    Link,
}

#[derive(Args, Serialize)]
struct IsoArgs {
    #[arg(long, value_enum)]
    map: IsoMap,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    q: Option<String>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long)]
    vertex: Option<String>,
}

/// Embedded in every report.
#[derive(Serialize)]
struct RunManifest {
    command: &'static str,
    parameters: Value,
    field: Option<String>,
    seed: Option<u64>,
    version: &'static str,
    wall_clock_ms: u128,
}

struct Run {
    command: &'static str,
    parameters: Value,
    field: Option<String>,
    seed: Option<u64>,
    start: Instant,
}

impl Run {
    fn new(command: &'static str, args: &impl Serialize) -> Self {
        Run {
            command,
            parameters: serde_json::to_value(args).unwrap_or(Value::Null),
            field: None,
            seed: None,
            start: Instant::now(),
        }
    }

    fn emit(&self, mut body: Value) {
        let manifest = RunManifest {
            command: self.command,
            parameters: self.parameters.clone(),
            field: self.field.clone(),
            seed: self.seed,
            version: env!("CARGO_PKG_VERSION"),
            wall_clock_ms: self.start.elapsed().as_millis(),
        };
        body["manifest"] = serde_json::to_value(manifest).unwrap();
        println!("{body}");
    }
}

fn field_of(q: Option<&str>, fallback: Option<u64>) -> Result<Field> {
    match (q, fallback) {
        (Some(s), _) => Ok(Field::parse(s)?),
        (None, Some(q)) => Ok(Field::for_order(q)?),
        (None, None) => bail!("--q is required"),
    }
}

fn need<T: Copy>(v: Option<T>, name: &str) -> Result<T> {
    v.with_context(|| format!("--{name} is required"))
}

fn construct(a: ConstructArgs) -> Result<bool> {
    let mut run = Run::new("construct", &a);
    let pow2 = a.r.map(|r| 1u64 << r);
    let f = field_of(a.q.as_deref(), pow2)?;
    run.field = Some(f.spec().to_string());
    // parameters are validated by the builders before the file is created
    let create = |path: &PathBuf| -> Result<BufWriter<File>> {
        Ok(BufWriter::new(File::create(path).with_context(|| format!("cannot create {}", path.display()))?))
    };
    let (family, counts) = match a.family {
        Family::D3 => {
            let t = build_triple_system(need(a.k, "k")?, &f, TripleMode::Explicit)?;
            io::write_triples(&t, create(&a.out)?)?;
            ("D3", json!({ "vertices": t.n(), "hyperedges": t.num_edges() }))
        }
        fam => {
            let g = match fam {
                Family::D => build_bipartite(DFamily::D, need(a.k, "k")?, &f)?,
                Family::Dprime => build_bipartite(DFamily::Dprime, need(a.k, "k")?, &f)?,
                Family::Wenger => build_wenger(need(a.k, "k")?, &f)?,
                Family::ArcNrc => build_arc_graph(&f, &nrc_arc(need(a.k, "k")?, &f, true)?)?.graph,
                Family::ArcNrcminus => build_arc_graph(&f, &nrc_arc(need(a.k, "k")?, &f, false)?)?.graph,
                Family::ArcFrob => build_arc_graph(&f, &frobenius_arc(&f, need(a.r, "r")?, need(a.s, "s")?)?)?.graph,
                Family::G2rs => build_g2rs(&f, need(a.r, "r")?, need(a.s, "s")?)?,
                Family::D3 => unreachable!(),
            };
            io::write_graph(&g, create(&a.out)?)?;
            let family = g.meta().family.clone();
            eprintln!("{}: {} vertices, {} edges -> {}", family, g.n(), g.num_edges(), a.out.display());
            run.emit(json!({ "family": family, "vertices": g.n(), "edges": g.num_edges(), "out": a.out }));
            return Ok(true);
        }
    };
    eprintln!("{family}: {counts} -> {}", a.out.display());
    run.emit(json!({ "family": family, "counts": counts, "out": a.out }));
    Ok(true)
}

fn read_file(path: &PathBuf) -> Result<Parsed> {
    let f = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    io::read(BufReader::new(f)).with_context(|| format!("reading {}", path.display()))
}

fn graph_id(g: &Graph, path: &PathBuf) -> String {
    let m = g.meta();
    match &m.field {
        Some(f) => format!("{}(k={},q={})", m.family, m.k, f.q()),
        None => path.display().to_string(),
    }
}

fn girth_json(out: &mut Value, g: Girth) {
    match g {
        Girth::Exact(n) => out["girth"] = json!(n),
        Girth::AtLeast(n) => out["girth_lb"] = json!(n),
        Girth::Infinite => out["girth"] = json!("infinite"),
    }
}

fn analyze(a: AnalyzeArgs) -> Result<bool> {
    let mut run = Run::new("analyze", &a);
    let g = match read_file(&a.input)? {
        Parsed::Graph(g) => g,
        Parsed::Triples(t) => {
            let k = need(a.suspension_free, "suspension-free")?;
            let free = is_suspension_free(&t, k)?;
            eprintln!("{}: suspension-free for k = {k}: {free}", a.input.display());
            run.emit(json!({ "graph_id": a.input, "hyperedges": t.num_edges(), "k": k, "suspension_free": free }));
            return Ok(true);
        }
    };
    run.field = g.meta().field.as_ref().map(|f| f.to_string());
    let mut out = json!({ "graph_id": graph_id(&g, &a.input) });

    // base edge in global indices
    let base = match &a.cycles {
        Some(spec) => {
            let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
            let [u, v, len] = parts[..] else { bail!("--cycles expects u,v,L") };
            let (u, v): (u32, u32) = (u.parse().context("bad u")?, v.parse().context("bad v")?);
            let (u, v) = if g.part_sizes().len() == 2 { (u, g.part_range(1).start + v) } else { (u, v) };
            let len = if len == "auto" { None } else { Some(len.parse::<usize>().context("bad L")?) };
            Some((u, v, len))
        }
        None => None,
    };
    let (g, base) = if a.component {
        let seed = base.map_or(0, |b| b.0);
        let (c, verts) = g.component_of(seed)?;
        let local = |x: u32| verts.binary_search(&x).map(|i| i as u32);
        let base = match base {
            Some((u, v, len)) => Some((local(u).unwrap(), local(v).map_err(|_| anyhow::anyhow!("{v} is not adjacent"))?, len)),
            None => None,
        };
        out["component_order"] = json!(c.n());
        (c, base)
    } else {
        (g, base)
    };

    if a.girth {
        girth_json(&mut out, girth(&g, a.girth_cap));
    }
    if a.diameter {
        out["diameter"] = match diameter(&g) {
            Ok(d) => json!(d),
            Err(e) => json!(e.to_string()),
        };
    }
    if let Some((u, v, len)) = base {
        out["base_edge"] = json!([u, v]);
        let min = min_cycle_through_edge(&g, u, v)?;
        out["min_cycle_len"] = json!(min);
        match len.or(min) {
            Some(l) => {
                out["L"] = json!(l);
                out["cycle_count"] = json!(cycles_through_edge(&g, u, v, l)?);
            }
            None => out["cycle_count"] = json!(0),
        }
    }
    if a.signature {
        let (u, v) = match base {
            Some((u, v, _)) => (u, v),
            None => g.edges().next().context("graph has no edges")?,
        };
        out["signature"] = serde_json::to_value(signature_with(&g, u, (u, v), a.girth_cap)?)?;
    }
    out["runtime_ms"] = json!(run.start.elapsed().as_millis());
    eprintln!("{}", out);
    run.emit(out);
    Ok(true)
}

fn verify(a: VerifyArgs) -> Result<bool> {
    let run = Run::new("verify", &a);
    if a.claim == "list" {
        for (id, what) in CLAIMS {
            eprintln!("{id:16} {what}");
        }
        run.emit(json!({ "claims": CLAIMS.iter().map(|c| c.0).collect::<Vec<_>>() }));
        return Ok(true);
    }
    let params = ClaimParams { k: a.k, q: a.q, r: a.r, s: a.s, seed: a.seed };
    let ids: Vec<&str> = if a.claim == "all" { CLAIMS.iter().map(|c| c.0).collect() } else { vec![&a.claim] };
    let mut all = true;
    for id in ids {
        let r = claims::run(id, &params)?;
        eprintln!("{} {} ({} ms)", if r.pass { "PASS" } else { "FAIL" }, r.claim, r.runtime_ms);
        all &= r.pass;
        run.emit(serde_json::to_value(&r)?);
    }
    Ok(all)
}

fn random_delete(a: RandomArgs) -> Result<bool> {
    let mut run = Run::new("random-delete", &a);
    run.seed = Some(a.seed);
    let p = practical_p(a.n, a.k, a.c)?;
    let h = sample_g3(a.n, &p, a.seed)?;
    let (out, report) = deletion_process(&h, a.k, &p, a.seed)?;
    let free = is_suspension_free(&out, a.k)?;
    if let Some(path) = &a.out {
        io::write_triples(&out, BufWriter::new(File::create(path)?))?;
    }
    eprintln!(
        "n={} k={} seed={}: {} -> {} hyperedges ({} deleted), suspension-free: {free}",
        a.n, a.k, a.seed, report.initial_edges, report.final_edges, report.edges_deleted
    );
    let mut body = serde_json::to_value(&report)?;
    body["suspension_free"] = json!(free);
    run.emit(body);
    Ok(free)
}

fn normalize(a: NormalizeArgs) -> Result<bool> {
    let mut run = Run::new("normalize", &a);
    let f = Field::parse(&a.q)?;
    run.field = Some(f.spec().to_string());
    let v = DVertex::parse(&f, &a.vertex)?;
    let s = a.s.unwrap_or(v.k() - 1);
    let chain = normalize_vertex(&f, &v, s)?;
    let image = apply_chain(&f, &chain, &v)?;
    eprintln!("{v} -> {image} via {chain}");
    run.emit(json!({ "vertex": v.to_string(), "s": s, "chain": chain.to_string(), "image": image.to_string() }));
    Ok(true)
}

fn isocheck(a: IsoArgs) -> Result<bool> {
    let mut run = Run::new("isocheck", &a);
    let pow2 = a.r.map(|r| 1u64 << r);
    let f = field_of(a.q.as_deref(), pow2)?;
    run.field = Some(f.spec().to_string());
    let q = f.q();
    let (source, target, map, label) = match a.map {
        IsoMap::Table2 => {
            let k = need(a.k, "k")?;
            let d = build_bipartite(DFamily::D, k, &f)?;
            let dp = build_bipartite(DFamily::Dprime, k, &f)?;
            let side = dp.part_sizes()[0] as u32;
            let map = (0..dp.n() as u32)
                .map(|v| {
                    let part = v / side;
                    let x = DVertex::new(Side::from_index(part as usize), coords_of(v % side, k, q));
                    Ok(part * side + index_of(&table2_map(&f, &x)?.coords, q))
                })
                .collect::<Result<Vec<u32>>>()?;
            (dp, d, map, "Dprime -> D")
        }
        IsoMap::ArcWenger => {
            let k = need(a.k, "k")?;
            let ag = build_arc_graph(&f, &nrc_arc(k, &f, false)?)?;
            let h = build_wenger(k, &f)?;
            let map = arc_graph_to_wenger_vertex_map(&ag, &h, q)?;
            (ag.graph, h, map, "arc graph -> wenger")
        }
        IsoMap::Frobenius => {
            let (r, s) = (need(a.r, "r")?, need(a.s, "s")?);
            let ag = build_arc_graph(&f, &frobenius_arc(&f, r, s)?)?;
            let g = build_g2rs(&f, r, s)?;
            let map = arc_graph_to_wenger_vertex_map(&ag, &g, q)?;
            (ag.graph, g, map, "frobenius arc graph -> g2rs")
        }
        IsoMap::Link => {
            let v = DVertex::parse(&f, a.vertex.as_deref().context("--vertex is required")?)?;
            let k = v.k();
            let t = build_triple_system(k, &f, TripleMode::Implicit)?;
            let x = v.side.index() as u32 * q.pow(k as u32) + index_of(&v.coords, q);
            let (family, link, map) = claims::link_classification(&f, &t, x)?;
            let target = build_bipartite(family, k, &f)?;
            let label = if family == DFamily::D { "link -> D" } else { "link -> Dprime" };
            (link, target, map, label)
        }
    };
    let res = verify_iso_map(&source, &target, &map);
    let ok = res.is_ok();
    eprintln!("{label}: {}", res.as_ref().map_or_else(|e| e.to_string(), |_| "isomorphism verified".into()));
    run.emit(json!({
        "map": label,
        "vertices": source.n(),
        "edges": source.num_edges(),
        "iso": res.is_ok(),
        "error": res.err().map(|e| e.to_string()),
    }));
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::Construct(a) => construct(a),
        Command::Analyze(a) => analyze(a),
        Command::Verify(a) => verify(a),
        Command::RandomDelete(a) => random_delete(a),
        Command::Normalize(a) => normalize(a),
        Command::Isocheck(a) => isocheck(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
