use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sixblock_core::certify::{certificate_from_json, certificate_to_json, report_to_json};
use sixblock_core::graph::{generate_strong_oriented, to_dot, to_edge_list};
use sixblock_core::{
    certify, decompose, find_subdivision_bruteforce, generate_strong_digraph, palette_bound, parse_digraph,
    verify_certificate, ArcClass, Budget, Certificate, CertifyConfig, CertifyError, CyclePattern, NamedDigraph,
    OutTree, Search, Status,
};

#[derive(Parser)]
#[command(name = "sixblock", version, about = "Certify colourings or (k,1,1,1,1,1) subdivisions of strong digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Produce and verify a colouring or subdivision certificate.
    Certify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        /// Root vertex name; defaults to the first vertex.
        #[arg(long)]
        root: Option<String>,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        #[arg(long)]
        allow_antiparallel: bool,
        /// Also run an exhaustive witness search once a colouring is found.
        #[arg(long)]
        witness_search: bool,
        /// Report destination; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate or report against a digraph.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        certificate: PathBuf,
        /// Also require the pattern `(k,1,1,1,1,1)` and the matching palette bound.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Exhaustive subdivision search for an arbitrary block pattern.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated block lengths, e.g. `2,1,1,1,1,1`.
        #[arg(long)]
        pattern: String,
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
    },
    /// Generate a random strong digraph.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Never produce antiparallel pairs.
        #[arg(long)]
        oriented: bool,
        #[arg(long, value_enum, default_value_t = Format::Edges)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Show the final tree and the level-class decomposition.
    Decompose {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        root: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edges,
    Dot,
}

enum Failure {
    Input(anyhow::Error),
    Rejected(String),
    Incomplete(String),
    Verification(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Rejected(_) => 1,
            Failure::Input(_) => 2,
            Failure::Incomplete(_) => 3,
            Failure::Verification(_) => 4,
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

type Outcome = Result<(), Failure>;

fn read_graph(path: &Path) -> anyhow::Result<NamedDigraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_digraph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn resolve_root(g: &NamedDigraph, root: Option<&str>) -> anyhow::Result<usize> {
    match root {
        None => Ok(0),
        Some(name) => g.index_of(name).ok_or_else(|| anyhow!("unknown root vertex `{name}`")),
    }
}

/// Writes to stdout; a closed pipe is not an error.
fn say(text: &str) {
    let mut out = io::stdout().lock();
    let _ = writeln!(out, "{text}");
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            say(text);
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialise")
}

#[allow(clippy::too_many_arguments)]
fn run_certify(
    input: &Path,
    k: usize,
    root: Option<&str>,
    budget: u64,
    allow_antiparallel: bool,
    witness_search: bool,
    out: Option<&Path>,
) -> Outcome {
    let g = read_graph(input)?;
    let cfg = CertifyConfig {
        root: resolve_root(&g, root)?,
        strict_orientation: !allow_antiparallel,
        budget,
        witness_search,
        ..CertifyConfig::default()
    };
    let report = match certify(&g.digraph, k, &cfg) {
        Ok(r) => r,
        Err(CertifyError::Verification(e)) => return Err(Failure::Verification(e)),
        Err(CertifyError::Antiparallel(u, v)) => {
            return Err(Failure::Input(anyhow!(
                "antiparallel arcs between `{}` and `{}` (use --allow-antiparallel)",
                g.names[u],
                g.names[v]
            )))
        }
        Err(e) => return Err(Failure::Input(e.into())),
    };
    emit(out, &pretty(&report_to_json(&report, &g.names)))?;
    eprintln!("{:?} via {} in {:.1?}", report.status, report.route, report.elapsed);
    match report.status {
        Status::Incomplete => Err(Failure::Incomplete(report.reason.unwrap_or_default())),
        _ => Ok(()),
    }
}

fn run_verify(input: &Path, certificate: &Path, k: Option<usize>) -> Outcome {
    let g = read_graph(input)?;
    let text = fs::read_to_string(certificate).with_context(|| format!("reading {}", certificate.display()))?;
    let value: Value = serde_json::from_str(&text).with_context(|| format!("parsing {}", certificate.display()))?;
    let cert = certificate_from_json(&value, &g).map_err(|e| anyhow!(e))?;
    if let Some(k) = k {
        match &cert {
            Certificate::Colored { coloring, .. } if coloring.palette > palette_bound(k) => {
                return Err(Failure::Rejected(format!(
                    "palette {} exceeds bound {}",
                    coloring.palette,
                    palette_bound(k)
                )))
            }
            Certificate::Subdivided { pattern, .. } if *pattern != CyclePattern::six_block(k) => {
                return Err(Failure::Rejected(format!("pattern {:?} is not ({k},1,1,1,1,1)", pattern.blocks())))
            }
            _ => {}
        }
    }
    verify_certificate(&g.digraph, &cert).map_err(Failure::Rejected)?;
    say("valid");
    Ok(())
}

fn run_oracle(input: &Path, pattern: &str, budget: u64) -> Outcome {
    let g = read_graph(input)?;
    let blocks = pattern
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .with_context(|| format!("bad pattern `{pattern}`"))?;
    let p = CyclePattern::new(blocks).map_err(|e| anyhow!(e))?;
    let mut b = Budget::new(budget);
    let result = find_subdivision_bruteforce(&g.digraph, &p, &mut b);
    let (verdict, witness) = match result {
        Search::Found(w) => {
            let cert = Certificate::Subdivided { witness: w, pattern: p.clone() };
            verify_certificate(&g.digraph, &cert).map_err(Failure::Verification)?;
            ("found", Some(certificate_to_json(&cert, &g.names)))
        }
        Search::NotFound => ("not-found", None),
        Search::BudgetExceeded => ("budget-exceeded", None),
    };
    say(&pretty(&json!({ "verdict": verdict, "expansions": b.used, "witness": witness })));
    if verdict == "budget-exceeded" {
        return Err(Failure::Incomplete("search budget exhausted".into()));
    }
    Ok(())
}

fn run_gen(n: usize, density: f64, seed: u64, oriented: bool, format: Format, out: Option<&Path>) -> Outcome {
    if !(0.0..=1.0).contains(&density) {
        return Err(Failure::Input(anyhow!("density must lie in [0, 1]")));
    }
    let d = if oriented {
        generate_strong_oriented(n, density, seed).map_err(|e| anyhow!(e))?
    } else {
        generate_strong_digraph(n, density, seed)
    };
    let g = NamedDigraph::with_numeric_names(d);
    let text = match format {
        Format::Edges => to_edge_list(&g),
        Format::Dot => to_dot(&g),
    };
    emit(out, text.trim_end())?;
    Ok(())
}

fn run_decompose(input: &Path, k: usize, root: Option<&str>) -> Outcome {
    let g = read_graph(input)?;
    let d = &g.digraph;
    if k == 0 {
        return Err(Failure::Input(anyhow!("k must be at least 1")));
    }
    let mut t = OutTree::bfs(d, resolve_root(&g, root)?).context("building the out-tree")?;
    let rotations = t.finalize(d);
    let dec = decompose(d, &t, k).map_err(|e| anyhow!(e))?;
    let name = |v: usize| g.names[v].as_str();
    let classes: Vec<Value> = dec
        .classes
        .iter()
        .map(|c| {
            json!({
                "class": c.index,
                "vertices": c.vertices.iter().map(|&v| name(v)).collect::<Vec<_>>(),
                "forward_arcs": c.arcs[ArcClass::A1.index()].len(),
                "back_arcs": c.arcs[ArcClass::A2.index()].len(),
                "cross_arcs": c.arcs[ArcClass::A3.index()].len(),
            })
        })
        .collect();
    let tree: serde_json::Map<String, Value> = (0..d.n())
        .map(|v| (name(v).to_string(), json!({ "parent": t.parent(v).map(name), "level": t.level(v) })))
        .collect();
    let doc = json!({
        "k": k,
        "root": name(t.root()),
        "rotations": rotations,
        "depth": t.depth(),
        "tree": tree,
        "classes": classes,
        "inter_class_arcs": dec.cross_arcs.len(),
    });
    say(&pretty(&doc));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Certify { input, k, root, budget, allow_antiparallel, witness_search, out } => run_certify(
            input,
            *k,
            root.as_deref(),
            *budget,
            *allow_antiparallel,
            *witness_search,
            out.as_deref(),
        ),
        Command::Verify { input, certificate, k } => run_verify(input, certificate, *k),
        Command::Oracle { input, pattern, budget } => run_oracle(input, pattern, *budget),
        Command::Gen { n, density, seed, oriented, format, out } => {
            run_gen(*n, *density, *seed, *oriented, *format, out.as_deref())
        }
        Command::Decompose { input, k, root } => run_decompose(input, *k, root.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Input(e) => eprintln!("error: {e:#}"),
                Failure::Rejected(e) => eprintln!("rejected: {e}"),
                Failure::Incomplete(e) => eprintln!("incomplete: {e}"),
                Failure::Verification(e) => eprintln!("internal verification failure: {e}"),
            }
            ExitCode::from(f.code())
        }
    }
}
