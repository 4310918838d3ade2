//! One function per subcommand.

use std::fmt::Write as _;
use std::fs;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use chipfas::acyclic::{exact_memory_bytes, min_fas_exact_capped, min_fas_heuristic};
use chipfas::chipfire::{active_vertices, Configuration};
use chipfas::eulerianize::{certify, eulerianize as lift, min_fas_heuristic_lifted};
use chipfas::format::{
    configuration_to_json, parse_configuration, parse_configuration_json, parse_digraph,
    write_arc_set, write_configuration, write_digraph,
};
use chipfas::generate::{default_eulerian_arcs, random_digraph, random_eulerian};
use chipfas::recurrence::{
    burning_sequence, is_minimal_recurrent, is_recurrent, minrec_brute, minrec_exact_capped,
};
use chipfas::{ArcSet, Digraph, Error};

use crate::report::{digest, human_bytes, Failure, Output};

pub struct Context {
    pub max_exact_n: usize,
}

fn read_bytes(path: &Path) -> Result<Vec<u8>, Failure> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| Failure::invalid(format!("stdin: {e}")))?;
        return Ok(buf);
    }
    fs::read(path).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
}

fn utf8(path: &Path, bytes: &[u8]) -> Result<String, Failure> {
    String::from_utf8(bytes.to_vec())
        .map_err(|_| Failure::invalid(format!("{}: not valid UTF-8", path.display())))
}

fn parse_graph(path: &Path, bytes: &[u8]) -> Result<Digraph, Failure> {
    parse_digraph(&utf8(path, bytes)?).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

fn read_graph(path: &Path, input_digest: &mut Option<String>) -> Result<Digraph, Failure> {
    let bytes = read_bytes(path)?;
    *input_digest = Some(digest([bytes.as_slice()]));
    parse_graph(path, &bytes)
}

fn announce_exact(n: usize, cap: usize) {
    if n <= cap {
        eprintln!(
            "exact solver: {n} vertices, about {} of working memory",
            human_bytes(exact_memory_bytes(n))
        );
    }
}

fn arc_list(g: &Digraph, set: &ArcSet) -> Value {
    json!(g.pairs(set))
}

pub fn minfas(
    ctx: &Context,
    path: &Path,
    heuristic: bool,
    emit_witness: bool,
    input_digest: &mut Option<String>,
) -> Result<Output, Failure> {
    let g = read_graph(path, input_digest)?;
    let (mut text, mut result, witness) = if heuristic {
        let via_lift = !g.is_eulerian();
        let h = if via_lift {
            min_fas_heuristic_lifted(&g)?
        } else {
            min_fas_heuristic(&g)?
        };
        let text = format!(
            "min_fas_upper_bound {}\n# method heuristic\n# root {}\n# via_lift {via_lift}\n",
            h.upper_bound, h.root
        );
        let result = json!({
            "size": h.upper_bound,
            "method": "heuristic",
            "optimal": false,
            "root": h.root,
            "via_lift": via_lift,
        });
        (text, result, h.witness)
    } else {
        announce_exact(g.n(), ctx.max_exact_n);
        let sol = min_fas_exact_capped(&g, ctx.max_exact_n)?;
        let text = format!("min_fas {}\n# method exact\n", sol.size);
        let result = json!({"size": sol.size, "method": "exact", "optimal": true});
        (text, result, sol.witness)
    };
    if emit_witness {
        text.push_str("# witness\n");
        text.push_str(&write_arc_set(&g, &witness));
        result["witness"] = arc_list(&g, &witness);
    }
    Ok(Output::new(text, result))
}

pub fn eulerianize(
    ctx: &Context,
    path: &Path,
    solve: bool,
    input_digest: &mut Option<String>,
) -> Result<Output, Failure> {
    let g = read_graph(path, input_digest)?;
    let inst = lift(&g);
    let lifted = &inst.lifted;
    let mut text = write_digraph(lifted);
    let hub = inst
        .hub
        .map_or_else(|| "none".to_string(), |h| h.to_string());
    let _ = writeln!(text, "# d {}", inst.d);
    let _ = writeln!(text, "# s_new {hub}");
    let _ = writeln!(text, "# vertices {}", lifted.n());
    let _ = writeln!(text, "# arcs {}", lifted.arc_count());
    for (u, image) in inst.vertex_map.iter().enumerate() {
        let _ = writeln!(text, "# map {u}→{image}");
    }
    let mut result = json!({
        "d": inst.d,
        "s_new": inst.hub,
        "vertices": lifted.n(),
        "arcs": lifted.arc_count(),
        "map": inst.vertex_map,
        "lifted": {"n": lifted.n(), "arcs": lifted.arcs()},
    });
    if solve {
        announce_exact(lifted.n(), ctx.max_exact_n);
        let b = min_fas_exact_capped(lifted, ctx.max_exact_n)?.size;
        let cert = certify(&inst, b)?;
        let _ = writeln!(text, "# lifted_optimum {}", cert.lifted_optimum);
        let _ = writeln!(text, "# recovered_optimum {}", cert.recovered_optimum);
        result["certificate"] = serde_json::to_value(&cert).expect("certificate serializes");
    }
    Ok(Output::new(text, result))
}

pub fn minrec(
    ctx: &Context,
    path: &Path,
    sink: usize,
    exact: bool,
    brute: bool,
    emit_config: bool,
    input_digest: &mut Option<String>,
) -> Result<Output, Failure> {
    let g = read_graph(path, input_digest)?;
    g.check_vertex(sink)?;
    let (mut text, mut result, witness) = if brute {
        let m = minrec_brute(&g, sink)?;
        let text = format!("min_rec {}\n# route brute\n", m.chips);
        let result = json!({"chips": m.chips as u64, "route": "brute", "sink": sink});
        (text, result, m.witness)
    } else {
        if !g.is_eulerian() {
            let flag = if exact { "--exact" } else { "the default route" };
            return Err(Failure::precondition(format!(
                "digraph is not Eulerian, so {flag} does not apply; \
                 use --brute to enumerate recurrent configurations"
            )));
        }
        announce_exact(g.n(), ctx.max_exact_n);
        let m = minrec_exact_capped(&g, sink, ctx.max_exact_n)?;
        let outdeg_sum: usize = (0..g.n()).filter(|&v| v != sink).map(|v| g.outdeg(v)).sum();
        let k = outdeg_sum - m.chips as usize;
        let text = format!(
            "min_rec {}\n# route exact\n# max_acyclic {k}\n# outdeg_sum {outdeg_sum}\n",
            m.chips
        );
        let result = json!({
            "chips": m.chips as u64,
            "route": "exact",
            "sink": sink,
            "max_acyclic": k,
            "outdeg_sum": outdeg_sum,
        });
        (text, result, m.witness)
    };
    if emit_config {
        text.push_str("# witness\n");
        text.push_str(&write_configuration(&witness));
        result["witness"] = configuration_to_json(&witness);
    }
    Ok(Output::new(text, result))
}

fn read_configuration(
    path: &Path,
    text: &str,
    n: usize,
    sink: Option<usize>,
) -> Result<Configuration, Failure> {
    let located = |e: Error| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    };
    if text.trim_start().starts_with('{') {
        let c = parse_configuration_json(text, n).map_err(located)?;
        if let Some(s) = sink.filter(|&s| s != c.sink()) {
            return Err(Failure::invalid(format!(
                "--sink {s} disagrees with the configuration's sink {}",
                c.sink()
            )));
        }
        return Ok(c);
    }
    parse_configuration(text, n, sink.unwrap_or(0)).map_err(located)
}

#[derive(Serialize)]
struct Verdict {
    sink: usize,
    test: &'static str,
    recurrent: bool,
    minimal: bool,
    burning_order: Option<Vec<usize>>,
    unburnt: Option<Vec<usize>>,
}

pub fn check(
    graph: &Path,
    config: &Path,
    sink: Option<usize>,
    input_digest: &mut Option<String>,
) -> Result<Output, Failure> {
    let gbytes = read_bytes(graph)?;
    let cbytes = read_bytes(config)?;
    *input_digest = Some(digest([gbytes.as_slice(), cbytes.as_slice()]));
    let g = parse_graph(graph, &gbytes)?;
    let c = read_configuration(config, &utf8(config, &cbytes)?, g.n(), sink)?;
    let s = c.sink();
    if !g.is_global_sink_after_cut(s) {
        return Err(Error::NoGlobalSink { sink: s }.into());
    }
    let active = active_vertices(&g, &c);
    if !active.is_empty() {
        let mut f = Failure::from(Error::NotStable {
            active: active.clone(),
        });
        f.message = format!("configuration is not stable; active vertices: {active:?}");
        return Err(f);
    }
    let verdict = if g.is_eulerian() {
        match burning_sequence(&g, s, &c) {
            Ok(order) => Verdict {
                sink: s,
                test: "beta",
                recurrent: true,
                minimal: is_minimal_recurrent(&g, s, &c)?,
                burning_order: Some(order),
                unburnt: None,
            },
            Err(Error::NotRecurrent { unburnt }) => Verdict {
                sink: s,
                test: "beta",
                recurrent: false,
                minimal: false,
                burning_order: None,
                unburnt: Some(unburnt),
            },
            Err(e) => return Err(e.into()),
        }
    } else {
        let recurrent = is_recurrent(&g, s, &c)?;
        // Recurrent configurations are closed upwards among stable ones, so
        // minimality only needs the single-chip decrements.
        let mut minimal = recurrent;
        for (v, k) in c.iter().filter(|&(_, k)| k > 0) {
            if !minimal {
                break;
            }
            let mut less = c.clone();
            less.set(v, k - 1)?;
            minimal = !is_recurrent(&g, s, &less)?;
        }
        Verdict {
            sink: s,
            test: "epsilon",
            recurrent,
            minimal,
            burning_order: None,
            unburnt: None,
        }
    };
    let value = serde_json::to_value(&verdict).expect("verdict serializes");
    Ok(Output::new(format!("{value}\n"), value))
}

pub fn gen(n: usize, arcs: Option<usize>, seed: u64, eulerian: bool) -> Result<Output, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = arcs.unwrap_or_else(|| {
        if eulerian {
            default_eulerian_arcs(n)
        } else {
            (2 * n).min(n * n.saturating_sub(1))
        }
    });
    let g = if eulerian {
        random_eulerian(&mut rng, n, m)?
    } else {
        random_digraph(&mut rng, n, m)?
    };
    let result = json!({
        "n": g.n(),
        "m": g.arc_count(),
        "seed": seed,
        "eulerian": g.is_eulerian(),
        "arcs": g.arcs(),
    });
    Ok(Output::new(write_digraph(&g), result))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Cell {
    Value(usize),
    Cap,
    NotApplicable,
    Failed,
}

impl Cell {
    fn text(self) -> String {
        match self {
            Cell::Value(v) => v.to_string(),
            Cell::Cap => "cap".into(),
            Cell::NotApplicable => "n/a".into(),
            Cell::Failed => "error".into(),
        }
    }

    fn json(self) -> Value {
        match self {
            Cell::Value(v) => json!(v),
            other => json!(other.text()),
        }
    }
}

struct Row {
    instance: String,
    size: Option<(usize, usize)>,
    exact: Cell,
    heuristic: Cell,
    ms: f64,
    notes: Vec<String>,
    cap: Option<String>,
}

impl Row {
    fn gap(&self) -> Option<usize> {
        match (self.exact, self.heuristic) {
            (Cell::Value(e), Cell::Value(h)) => Some(h - e),
            _ => None,
        }
    }
}

fn bench_one(ctx: &Context, instance: String, parsed: Result<Digraph, String>) -> Row {
    let start = Instant::now();
    let mut row = Row {
        instance,
        size: None,
        exact: Cell::Failed,
        heuristic: Cell::Failed,
        ms: 0.0,
        notes: Vec::new(),
        cap: None,
    };
    let g = match parsed {
        Ok(g) => g,
        Err(message) => {
            row.notes.push(message);
            return row;
        }
    };
    row.size = Some((g.n(), g.arc_count()));
    row.exact = match min_fas_exact_capped(&g, ctx.max_exact_n) {
        Ok(sol) => Cell::Value(sol.size),
        Err(Error::SizeLimit { what, .. }) => {
            row.cap = Some(what.to_string());
            Cell::Cap
        }
        Err(e) => {
            row.notes.push(format!("{}: exact: {e}", row.instance));
            Cell::Failed
        }
    };
    let heuristic = if g.is_eulerian() {
        min_fas_heuristic(&g)
    } else {
        min_fas_heuristic_lifted(&g)
    };
    row.heuristic = match heuristic {
        Ok(h) => Cell::Value(h.upper_bound),
        Err(Error::NotStronglyConnected) => Cell::NotApplicable,
        Err(e) => {
            row.notes.push(format!("{}: heuristic: {e}", row.instance));
            Cell::Failed
        }
    };
    row.ms = start.elapsed().as_secs_f64() * 1e3;
    row
}

pub fn round_ms(ms: f64) -> f64 {
    (ms * 1e3).round() / 1e3
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn bench(
    ctx: &Context,
    dir: &Path,
    input_digest: &mut Option<String>,
) -> Result<Output, Failure> {
    let listing =
        fs::read_dir(dir).map_err(|e| Failure::invalid(format!("{}: {e}", dir.display())))?;
    let mut paths: Vec<PathBuf> = listing
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .filter(|p| {
            p.file_name()
                .and_then(|n| n.to_str())
                .is_some_and(|n| !n.starts_with('.'))
        })
        .collect();
    paths.sort();

    let mut inputs = Vec::with_capacity(paths.len());
    for p in &paths {
        let name = p.file_name().and_then(|n| n.to_str()).unwrap_or("?").to_string();
        let bytes = read_bytes(p)?;
        inputs.push((name, bytes));
    }
    *input_digest = Some(digest(
        inputs
            .iter()
            .flat_map(|(name, bytes)| [name.as_bytes(), bytes.as_slice()]),
    ));
    let parsed: Vec<(String, Result<Digraph, String>)> = inputs
        .iter()
        .zip(&paths)
        .map(|((name, bytes), p)| (name.clone(), parse_graph(p, bytes).map_err(|f| f.message)))
        .collect();
    if let Some(n) = parsed
        .iter()
        .filter_map(|(_, g)| g.as_ref().ok().map(Digraph::n))
        .filter(|&n| n <= ctx.max_exact_n)
        .max()
    {
        announce_exact(n, ctx.max_exact_n);
    }

    let rows: Vec<Row> = parsed
        .into_par_iter()
        .map(|(name, g)| bench_one(ctx, name, g))
        .collect();

    let mut text = String::from("instance,n,m,exact,heuristic,gap,ms\n");
    let mut json_rows = Vec::with_capacity(rows.len());
    let mut caps_hit = Vec::new();
    for row in &rows {
        for note in &row.notes {
            eprintln!("chipfas: {note}");
        }
        if let Some(what) = &row.cap {
            caps_hit.push(format!("{what} ({})", row.instance));
        }
        let (n, m) = match row.size {
            Some((n, m)) => (n.to_string(), m.to_string()),
            None => (String::new(), String::new()),
        };
        let gap = row.gap().map_or_else(|| "n/a".to_string(), |g| g.to_string());
        let _ = writeln!(
            text,
            "{},{n},{m},{},{},{gap},{:.3}",
            csv_field(&row.instance),
            row.exact.text(),
            row.heuristic.text(),
            row.ms
        );
        json_rows.push(json!({
            "instance": row.instance,
            "n": row.size.map(|s| s.0),
            "m": row.size.map(|s| s.1),
            "exact": row.exact.json(),
            "heuristic": row.heuristic.json(),
            "gap": row.gap(),
            "ms": round_ms(row.ms),
            "errors": row.notes,
        }));
    }
    let mut out = Output::new(text, json!({ "rows": json_rows }));
    out.caps_hit = caps_hit;
    Ok(out)
}
