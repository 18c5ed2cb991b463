//! Edge-list files.
//!
//! ```text
//! # family=D k=2 p=3 n=1 modulus=0,1 part_sizes=9,9
//! A:(0,0) B:(0,0)
//! A:(0,0) B:(1,0)
//! ```
//!
//! One edge (or hyperedge, with a `C:(...)` column) per line, scalars as
//! canonical integers. A line holding a single vertex declares an isolated
//! vertex. Unlabeled vertices are written as `(index)`. Graphs without a
//! field write `p=0 n=0 modulus=-`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::io::{BufRead, Write};

use super::{Graph, GraphError, GraphMeta, LabelBlock, Result, TripleSystem};
use crate::field::{join, parse_list, FieldSpec};

const PART_NAMES: [char; 3] = ['A', 'B', 'C'];

/// What a file turned out to contain.
#[derive(Debug)]
pub enum Parsed {
    Graph(Graph),
    Triples(TripleSystem),
}

fn io_err(e: std::io::Error) -> GraphError {
    GraphError::Io(e.to_string())
}

pub fn header(meta: &GraphMeta, part_sizes: &[usize]) -> String {
    let (p, n, modulus) = match &meta.field {
        Some(f) => (f.p(), f.n(), f.modulus_string()),
        None => (0, 0, "-".to_string()),
    };
    let family = if meta.family.is_empty() { "-" } else { &meta.family };
    format!(
        "# family={} k={} p={} n={} modulus={} part_sizes={}",
        family,
        meta.k,
        p,
        n,
        modulus,
        join(part_sizes)
    )
}

fn vertex_token(part: usize, labels: Option<&[LabelBlock]>, local: usize) -> String {
    let body = match labels {
        Some(l) => join(l[part].get(local)),
        None => local.to_string(),
    };
    format!("{}:({})", PART_NAMES[part], body)
}

fn token_of_graph(g: &Graph, v: u32) -> String {
    let p = g.part_of(v);
    vertex_token(p, g.labels(), (v - g.part_range(p).start) as usize)
}

pub fn write_graph<W: Write>(g: &Graph, mut w: W) -> Result<()> {
    writeln!(w, "{}", header(g.meta(), g.part_sizes())).map_err(io_err)?;
    for (u, v) in g.edges() {
        writeln!(w, "{} {}", token_of_graph(g, u), token_of_graph(g, v)).map_err(io_err)?;
    }
    for v in 0..g.n() as u32 {
        if g.deg(v) == 0 {
            writeln!(w, "{}", token_of_graph(g, v)).map_err(io_err)?;
        }
    }
    w.flush().map_err(io_err)
}

pub fn write_triples<W: Write>(t: &TripleSystem, mut w: W) -> Result<()> {
    writeln!(w, "{}", header(t.meta(), t.part_sizes())).map_err(io_err)?;
    let token = |v: u32| {
        let p = t.part_of(v);
        vertex_token(p, t.labels(), (v - t.part_range(p).start) as usize)
    };
    let mut touched = vec![false; t.n()];
    for e in t.edge_list() {
        for &v in &e {
            touched[v as usize] = true;
        }
        writeln!(w, "{} {} {}", token(e[0]), token(e[1]), token(e[2])).map_err(io_err)?;
    }
    for (v, _) in touched.iter().enumerate().filter(|(_, &t)| !t) {
        writeln!(w, "{}", token(v as u32)).map_err(io_err)?;
    }
    w.flush().map_err(io_err)
}

fn parse_header(line: &str) -> Result<(GraphMeta, Vec<usize>)> {
    let bad = |msg: &str| GraphError::Parse {
        line: 1,
        msg: msg.to_string(),
    };
    let rest = line.strip_prefix('#').ok_or_else(|| bad("missing header"))?;
    let fields: HashMap<&str, &str> = rest
        .split_whitespace()
        .filter_map(|kv| kv.split_once('='))
        .collect();
    let get = |key: &str| fields.get(key).copied().ok_or_else(|| bad(&format!("header lacks {key}")));
    let family = get("family")?;
    let k: usize = get("k")?.parse().map_err(|_| bad("bad k"))?;
    let p: u32 = get("p")?.parse().map_err(|_| bad("bad p"))?;
    let n: u32 = get("n")?.parse().map_err(|_| bad("bad n"))?;
    let modulus = get("modulus")?;
    let field = if p == 0 {
        None
    } else {
        let m = parse_list(modulus).ok_or_else(|| bad("bad modulus"))?;
        Some(FieldSpec::new(p, n, m).map_err(|e| bad(&e.to_string()))?)
    };
    let part_sizes: Vec<usize> = get("part_sizes")?
        .split(',')
        .map(|s| s.parse().map_err(|_| bad("bad part_sizes")))
        .collect::<Result<_>>()?;
    let family = if family == "-" { String::new() } else { family.to_string() };
    Ok((GraphMeta::new(family, k, field), part_sizes))
}

fn parse_token(tok: &str, line: usize, parts: usize) -> Result<(usize, Vec<u32>)> {
    let bad = || GraphError::Parse {
        line,
        msg: format!("malformed vertex {tok:?}"),
    };
    let (name, body) = tok.split_once(':').ok_or_else(bad)?;
    let part = PART_NAMES
        .iter()
        .position(|&c| name.len() == 1 && name.starts_with(c))
        .filter(|&p| p < parts)
        .ok_or_else(bad)?;
    let inner = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')).ok_or_else(bad)?;
    let label = parse_list(inner).ok_or_else(bad)?;
    Ok((part, label))
}

/// Reads a graph or triple system. Errors carry the offending line number.
pub fn read<R: BufRead>(r: R) -> Result<Parsed> {
    let mut lines = r.lines().enumerate();
    let (_, first) = lines.next().ok_or(GraphError::Parse {
        line: 1,
        msg: "empty input".into(),
    })?;
    let (mut meta, part_sizes) = parse_header(&first.map_err(io_err)?)?;
    let parts = part_sizes.len();

    let mut rows: Vec<(usize, Vec<(usize, Vec<u32>)>)> = Vec::new();
    let mut arity = None;
    for (i, line) in lines {
        let line = line.map_err(io_err)?;
        let lineno = i + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<(usize, Vec<u32>)> = line
            .split_whitespace()
            .map(|t| parse_token(t, lineno, parts))
            .collect::<Result<_>>()?;
        if toks.len() > 1 {
            match arity {
                None => arity = Some(toks.len()),
                Some(a) if a != toks.len() => {
                    return Err(GraphError::Parse {
                        line: lineno,
                        msg: format!("expected {a} vertices per line"),
                    })
                }
                _ => {}
            }
        }
        if toks.len() > 3 {
            return Err(GraphError::Parse {
                line: lineno,
                msg: "too many vertices".into(),
            });
        }
        rows.push((lineno, toks));
    }
    let triples = arity.map_or(parts == 3, |a| a == 3);

    // vertex order within a part is label order
    let mut seen: Vec<BTreeSet<Vec<u32>>> = vec![BTreeSet::new(); parts];
    for (_, toks) in &rows {
        for (p, l) in toks {
            seen[*p].insert(l.clone());
        }
    }
    let mut blocks = Vec::with_capacity(parts);
    let mut index: Vec<HashMap<Vec<u32>, u32>> = Vec::with_capacity(parts);
    let mut start = 0u32;
    for (p, set) in seen.into_iter().enumerate() {
        if set.len() != part_sizes[p] {
            return Err(GraphError::Parse {
                line: 1,
                msg: format!(
                    "part {} declares {} vertices but {} appear",
                    PART_NAMES[p],
                    part_sizes[p],
                    set.len()
                ),
            });
        }
        let width = set.iter().next().map_or(1, |l| l.len());
        if set.iter().any(|l| l.len() != width) {
            return Err(GraphError::Parse {
                line: 1,
                msg: format!("labels of part {} have mixed lengths", PART_NAMES[p]),
            });
        }
        let mut data = Vec::with_capacity(set.len() * width);
        let mut map = HashMap::with_capacity(set.len());
        for (i, l) in set.into_iter().enumerate() {
            data.extend_from_slice(&l);
            map.insert(l, start + i as u32);
        }
        start += part_sizes[p] as u32;
        blocks.push(LabelBlock::new(width, data));
        index.push(map);
    }
    let resolve = |(p, l): &(usize, Vec<u32>)| index[*p][l];

    if triples {
        let mut set = HashSet::new();
        let mut edges = Vec::new();
        for (lineno, toks) in &rows {
            if toks.len() < 3 {
                continue;
            }
            let mut e = [resolve(&toks[0]), resolve(&toks[1]), resolve(&toks[2])];
            e.sort_unstable();
            if !set.insert(e) {
                return Err(GraphError::Parse {
                    line: *lineno,
                    msg: "duplicate triple".into(),
                });
            }
            edges.push(e);
        }
        let t = TripleSystem::explicit(part_sizes, edges, meta)
            .map_err(|e| GraphError::Parse { line: 0, msg: e.to_string() })?
            .with_labels(blocks)?;
        return Ok(Parsed::Triples(t));
    }

    let mut set = HashSet::new();
    let mut edges = Vec::new();
    for (lineno, toks) in &rows {
        if toks.len() < 2 {
            continue;
        }
        let (u, v) = (resolve(&toks[0]), resolve(&toks[1]));
        if !set.insert((u.min(v), u.max(v))) {
            return Err(GraphError::Parse {
                line: *lineno,
                msg: "duplicate edge".into(),
            });
        }
        if u == v || (parts == 2 && toks[0].0 == toks[1].0) {
            return Err(GraphError::Parse {
                line: *lineno,
                msg: "edge inside a part".into(),
            });
        }
        edges.push((u, v));
    }
    let g = Graph::from_edges(part_sizes, &edges, meta.clone())?.with_labels(blocks)?;
    meta.regular = if g.n() > 0 { g.regular_degree() } else { None };
    let mut g = g;
    *g.meta_mut() = meta;
    Ok(Parsed::Graph(g))
}

pub fn read_graph<R: BufRead>(r: R) -> Result<Graph> {
    match read(r)? {
        Parsed::Graph(g) => Ok(g),
        Parsed::Triples(_) => Err(GraphError::Parse {
            line: 1,
            msg: "expected a graph, found a triple system".into(),
        }),
    }
}

pub fn read_triples<R: BufRead>(r: R) -> Result<TripleSystem> {
    match read(r)? {
        Parsed::Triples(t) => Ok(t),
        Parsed::Graph(_) => Err(GraphError::Parse {
            line: 1,
            msg: "expected a triple system, found a graph".into(),
        }),
    }
}

pub fn graph_to_string(g: &Graph) -> String {
    let mut buf = Vec::new();
    write_graph(g, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("ascii output")
}

pub fn triples_to_string(t: &TripleSystem) -> String {
    let mut buf = Vec::new();
    write_triples(t, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("ascii output")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Graph {
        let meta = GraphMeta::new("test", 2, Some(FieldSpec::for_order(3).unwrap()));
        Graph::from_edges(vec![2, 2], &[(0, 2), (0, 3), (1, 3)], meta)
            .unwrap()
            .with_labels(vec![
                LabelBlock::new(2, vec![0, 0, 1, 2]),
                LabelBlock::new(2, vec![0, 1, 2, 2]),
            ])
            .unwrap()
    }

    #[test]
    fn header_format() {
        let g = sample();
        let text = graph_to_string(&g);
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "# family=test k=2 p=3 n=1 modulus=0,1 part_sizes=2,2"
        );
        assert_eq!(lines.next().unwrap(), "A:(0,0) B:(0,1)");
    }

    #[test]
    fn round_trip() {
        let g = sample();
        let back = read_graph(graph_to_string(&g).as_bytes()).unwrap();
        assert_eq!(back.edge_list(), g.edge_list());
        assert_eq!(back.labels(), g.labels());
        assert_eq!(back.meta().field, g.meta().field);
        assert_eq!(back.meta().family, "test");
    }

    #[test]
    fn isolated_vertices_survive() {
        let g = Graph::from_edges(vec![3], &[(0, 1)], GraphMeta::default()).unwrap();
        let text = graph_to_string(&g);
        assert!(text.contains("\nA:(2)\n"));
        let back = read_graph(text.as_bytes()).unwrap();
        assert_eq!(back.n(), 3);
        assert_eq!(back.edge_list(), vec![(0, 1)]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let hdr = "# family=x k=1 p=0 n=0 modulus=- part_sizes=2,2\n";
        let dup = format!("{hdr}A:(0) B:(0)\nA:(1) B:(1)\nA:(0) B:(0)\n");
        assert_eq!(
            read_graph(dup.as_bytes()).unwrap_err(),
            GraphError::Parse { line: 4, msg: "duplicate edge".into() }
        );
        let junk = format!("{hdr}A:(0) B:0\n");
        assert!(matches!(read_graph(junk.as_bytes()), Err(GraphError::Parse { line: 2, .. })));
        let missing = format!("{hdr}A:(0) B:(0)\n");
        assert!(read_graph(missing.as_bytes()).is_err());
        assert!(read_graph("A:(0) B:(0)\n".as_bytes()).is_err());
    }

    #[test]
    fn triple_round_trip() {
        let t = TripleSystem::explicit(vec![1, 2, 1], vec![[0, 1, 3], [0, 2, 3]], GraphMeta::new("t", 1, None))
            .unwrap();
        let text = triples_to_string(&t);
        assert!(text.lines().nth(1).unwrap().starts_with("A:(0) B:(0) C:(0)"));
        let back = read_triples(text.as_bytes()).unwrap();
        assert_eq!(back.edge_list(), t.edge_list());
    }
}
