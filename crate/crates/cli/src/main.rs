//! `hcolor`: exact H-coloring and cover search for cubic multigraphs.
//!
//! Exit codes: 0 witness found or property holds, 1 refuted or no witness,
//! 2 search budget exceeded, 3 input error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use hcolor_core::catalog::get;
use hcolor_core::certificate::{
    read_certificate, scan_entry_certificate, write_certificate, Certificate, TargetSpec,
};
use hcolor_core::conjectures::{conjecture_scan, rigidity_scan, Conjecture, RigidityTarget, ScanReport};
use hcolor_core::corpus::{connected_cubic, GraphFamily};
use hcolor_core::covers::{
    chromatic_index_cubic, find_berge_fulkerson, find_even_cover_5_2, find_parity_cover_4, pm_cover_number,
    CoverList,
};
use hcolor_core::hcoloring::{construct_fictive_triangle, solve_hcoloring, EdgeMap, EdgeOrder, SolverOptions};
use hcolor_core::invariants::{pullback_suite, CheckStatus, SuiteLimits};
use hcolor_core::io::{emit_corpus, emit_graph6, emit_mg, parse_corpus, resolve_graph};
use hcolor_core::normal::{normal_chromatic_index, MAX_NORMAL_COLORS};
use hcolor_core::{Error, MultiGraph, Named};
use serde_json::json;

#[derive(Parser)]
#[command(name = "hcolor", version, about = "Exact H-coloring and cover search for cubic multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Search for a TARGET-coloring of GRAPH
    Solve {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        target: String,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Re-check a certificate from its contents alone
    Verify {
        #[arg(long)]
        cert: PathBuf,
    },
    /// Chromatic index
    Chi {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Smallest cover by perfect matchings, up to MAX parts
    Kcover {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 6)]
        max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Normal chromatic index
    Normal {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Berge-Fulkerson, (5,2)-even or 4-join covers
    Covers {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum)]
        kind: CoverArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a graph in .mg form
    Construct(ConstructArgs),
    /// Run a rigidity or conjecture scan over a corpus file
    Scan {
        #[arg(long, value_enum)]
        mode: ScanMode,
        #[arg(long)]
        target: String,
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        report: PathBuf,
        #[arg(long, default_value_t = 0)]
        resume: usize,
        #[command(flatten)]
        search: SearchArgs,
        /// write one certificate per positive entry into this directory
        #[arg(long)]
        cert_dir: Option<PathBuf>,
    },
    /// Run the pullback checks against the map in a certificate
    Invariants {
        #[arg(long)]
        cert: PathBuf,
    },
    /// Generate all connected cubic graphs in a size range
    Corpus {
        #[arg(long, default_value_t = 2)]
        min: usize,
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value_t = FamilyArg::Multi)]
        family: FamilyArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Mg)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SearchArgs {
    /// maximum number of edge assignments
    #[arg(long)]
    budget: Option<u64>,
    /// shuffles the value order
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = OrderArg::Dfs)]
    order: OrderArg,
    #[arg(long)]
    symmetry_breaking: bool,
}

impl SearchArgs {
    fn options(&self) -> SolverOptions {
        SolverOptions {
            edge_order: match self.order {
                OrderArg::Dfs => EdgeOrder::Dfs,
                OrderArg::Index => EdgeOrder::Index,
                OrderArg::Constrained => EdgeOrder::Constrained,
            },
            triangle_free_shortcut: false,
            node_budget: self.budget,
            seed: self.seed,
            symmetry_breaking: self.symmetry_breaking,
        }
    }
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["name", "expand", "prop10b", "ring"])))]
struct ConstructArgs {
    /// a catalog graph
    #[arg(long)]
    name: Option<String>,
    /// replace vertices of this graph with triangles
    #[arg(long)]
    expand: Option<String>,
    /// comma-separated vertices to expand; all when omitted
    #[arg(long, requires = "expand", value_delimiter = ',')]
    vertices: Option<Vec<usize>>,
    /// the fictive-edge construction over a 3-edge-colorable graph
    #[arg(long)]
    prop10b: Option<String>,
    /// ring of K diamonds
    #[arg(long)]
    ring: Option<usize>,
    /// write the graph here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// certificate for the P12-coloring of the fictive-edge construction
    #[arg(long, requires = "prop10b")]
    cert: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoverArg {
    Bf,
    Even52,
    Parity4,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanMode {
    Rigidity,
    Conjecture,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Dfs,
    Index,
    Constrained,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Pseudo,
    Multi,
    Simple,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Mg,
    Graph6,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Holds = 0,
    Refuted = 1,
    Budget = 2,
    Input = 3,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(Status::Input as u8) } else { ExitCode::SUCCESS };
        }
    };
    let status = match run(cli.command) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<Error>() {
                Some(Error::BudgetExceeded(_)) => Status::Budget,
                Some(Error::VerificationFailed(_)) => Status::Refuted,
                _ => Status::Input,
            }
        }
    };
    ExitCode::from(status as u8)
}

fn load(spec: &str) -> anyhow::Result<MultiGraph> {
    resolve_graph(spec).with_context(|| format!("reading graph `{spec}`"))
}

/// Catalog name when `spec` is one, else the graph inline.
fn target_spec(spec: &str, g: &MultiGraph) -> TargetSpec {
    match spec.parse::<Named>() {
        Ok(n) => TargetSpec::Name(n.to_string()),
        Err(_) => TargetSpec::Inline(emit_mg(g)),
    }
}

fn save(cert: &Certificate, out: &Path) -> anyhow::Result<()> {
    // never write something the verifier would reject
    cert.verify().context("internal error: certificate does not verify")?;
    write_certificate(cert, out).with_context(|| format!("writing {}", out.display()))?;
    eprintln!("certificate: {}", out.display());
    Ok(())
}

fn save_opt(cert: &Certificate, out: Option<&PathBuf>) -> anyhow::Result<()> {
    match out {
        Some(p) => save(cert, p),
        None => Ok(()),
    }
}

fn cover_status(g: &MultiGraph, cover: Option<CoverList>, what: &str, out: Option<&PathBuf>) -> anyhow::Result<Status> {
    match cover {
        Some(c) => {
            println!("{what}: found, {} parts", c.parts.len());
            save_opt(&Certificate::cover(g, &c, json!({ "search": what })), out)?;
            Ok(Status::Holds)
        }
        None => {
            println!("{what}: none");
            Ok(Status::Refuted)
        }
    }
}

fn run(command: Command) -> anyhow::Result<Status> {
    match command {
        Command::Solve { graph, target, search, out } => {
            let g = load(&graph)?;
            let h = load(&target)?;
            let opts = search.options();
            match solve_hcoloring(&g, &h, &opts)? {
                Some(f) => {
                    println!("found: {target}-coloring of {graph}");
                    let cert = Certificate::hcoloring(&g, target_spec(&target, &h), &f, serde_json::to_value(&opts)?);
                    save(&cert, &out)?;
                    Ok(Status::Holds)
                }
                None => {
                    println!("none: {graph} admits no {target}-coloring");
                    Ok(Status::Refuted)
                }
            }
        }
        Command::Verify { cert } => {
            let verdict = read_certificate(&cert)?.verify()?;
            println!("pass: {}", verdict.summary);
            if let Some(u) = verdict.unused_edges {
                println!("unused target edges: {u:?}");
            }
            Ok(Status::Holds)
        }
        Command::Chi { graph, out } => {
            let g = load(&graph)?;
            let chi = chromatic_index_cubic(&g);
            println!("chromatic index: {}", chi.index);
            if let (3, Some(c)) = (chi.index, chi.coloring) {
                // a 3-edge-coloring is a THETA-coloring
                let f = EdgeMap::new(c.colors, 3);
                save_opt(&Certificate::hcoloring(&g, TargetSpec::Name("THETA".into()), &f, json!({})), out.as_ref())?;
            }
            Ok(Status::Holds)
        }
        Command::Kcover { graph, max, out } => {
            let g = load(&graph)?;
            cover_status(&g, pm_cover_number(&g, max), &format!("perfect-matching cover with at most {max} parts"), out.as_ref())
        }
        Command::Normal { graph, out } => {
            let g = load(&graph)?;
            match normal_chromatic_index(&g) {
                Some(c) => {
                    println!("normal chromatic index: {}", c.k());
                    save_opt(&Certificate::normal(&g, &c, json!({})), out.as_ref())?;
                    Ok(Status::Holds)
                }
                None => {
                    println!("no normal coloring with at most {MAX_NORMAL_COLORS} colors");
                    Ok(Status::Refuted)
                }
            }
        }
        Command::Covers { graph, kind, out } => {
            let g = load(&graph)?;
            let (cover, what) = match kind {
                CoverArg::Bf => (find_berge_fulkerson(&g), "Berge-Fulkerson cover"),
                CoverArg::Even52 => (find_even_cover_5_2(&g), "(5,2)-even cover"),
                CoverArg::Parity4 => (find_parity_cover_4(&g), "4-join cover"),
            };
            cover_status(&g, cover, what, out.as_ref())
        }
        Command::Construct(args) => construct(args),
        Command::Scan { mode, target, corpus, report, resume, search, cert_dir } => {
            let text = fs::read_to_string(&corpus).with_context(|| format!("reading {}", corpus.display()))?;
            let graphs = parse_corpus(&text)?;
            let opts = search.options();
            let r = match mode {
                ScanMode::Rigidity => rigidity_scan(target.parse::<RigidityTarget>()?, &graphs, resume, &opts),
                ScanMode::Conjecture => conjecture_scan(target.parse::<Conjecture>()?, &graphs, resume, &opts),
            };
            fs::write(&report, serde_json::to_string_pretty(&r)? + "\n")
                .with_context(|| format!("writing {}", report.display()))?;
            if let Some(dir) = cert_dir {
                write_scan_certificates(&r, &dir)?;
            }
            println!(
                "{} {}: {} entries, {} positive, {} skipped, {} budget, {} counterexamples ({} ms)",
                r.mode,
                r.subject,
                r.entries.len(),
                r.positives.len(),
                r.skipped.len(),
                r.budget_exhausted.len(),
                r.counterexamples.len(),
                r.elapsed_ms
            );
            if let Some(i) = r.halted_at {
                println!("halted at corpus entry {i}; resume with --resume {}", r.next_offset);
            }
            Ok(if !r.counterexamples.is_empty() {
                Status::Refuted
            } else if !r.budget_exhausted.is_empty() {
                Status::Budget
            } else {
                Status::Holds
            })
        }
        Command::Invariants { cert } => {
            let cert = read_certificate(&cert)?;
            cert.verify()?;
            let (g, h, f) = cert.edge_map()?;
            let report = pullback_suite(&g, &h, &f, &SuiteLimits::default())?;
            for c in &report.checks {
                match &c.status {
                    CheckStatus::Passed => println!("pass  {}", c.name),
                    CheckStatus::Skipped(why) => println!("skip  {} ({why})", c.name),
                    CheckStatus::Failed(why) => println!("FAIL  {} ({why})", c.name),
                }
            }
            Ok(if report.passed() { Status::Holds } else { Status::Refuted })
        }
        Command::Corpus { min, max, family, format, out } => {
            let family = match family {
                FamilyArg::Pseudo => GraphFamily::Pseudo,
                FamilyArg::Multi => GraphFamily::Multi,
                FamilyArg::Simple => GraphFamily::Simple,
            };
            let graphs = connected_cubic(min, max, family);
            let text = match format {
                FormatArg::Mg => emit_corpus(&graphs),
                FormatArg::Graph6 => {
                    let lines: Result<Vec<String>, Error> = graphs.iter().map(emit_graph6).collect();
                    lines.context("graph6 holds simple graphs only")?.join("\n") + "\n"
                }
            };
            emit_text(&text, out.as_ref())?;
            eprintln!("{} graphs", graphs.len());
            Ok(Status::Holds)
        }
    }
}

fn emit_text(text: &str, out: Option<&PathBuf>) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn construct(args: ConstructArgs) -> anyhow::Result<Status> {
    let g = if let Some(name) = &args.name {
        get(name.parse()?)
    } else if let Some(spec) = &args.expand {
        let base = load(spec)?;
        match &args.vertices {
            Some(vs) => base.expand_vertices_to_triangles(vs)?.graph,
            None => base.expand_all()?.graph,
        }
    } else if let Some(spec) = &args.prop10b {
        let h = load(spec)?;
        let c = construct_fictive_triangle(&h, None)?;
        if let Some(out) = &args.cert {
            let steps = vec![format!("fictive-edge construction over `{spec}`")];
            let cert = Certificate::pipeline_trace(&c.graph, TargetSpec::Name("P12".into()), steps, &c.coloring, true, json!({}));
            save(&cert, out)?;
        }
        c.graph
    } else if let Some(k) = args.ring {
        MultiGraph::ring_of_diamonds(k)?
    } else {
        bail!("nothing to construct");
    };
    emit_text(&emit_mg(&g), args.out.as_ref())?;
    Ok(Status::Holds)
}

fn write_scan_certificates(r: &ScanReport, dir: &Path) -> anyhow::Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for &i in &r.positives {
        let entry = r.entry(i).expect("positives index entries");
        if let Some(cert) = scan_entry_certificate(r, entry)? {
            save(&cert, &dir.join(format!("entry-{i}.json")))?;
        }
    }
    Ok(())
}
