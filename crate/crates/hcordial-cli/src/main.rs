//! Command-line front end: graph generation, constructive labeling,
//! verification, exhaustive search, catalog checks, Hamiltonicity, and DOT
//! export.
//!
//! Exit codes: 0 success / valid / witness found / Hamiltonian; 1 invalid /
//! exhausted / not Hamiltonian / failed claims; 2 documented obstruction or
//! precondition rejection; 3 search undecided within budget; 64 malformed
//! arguments or input.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use hcordial::catalog;
use hcordial::constructors::{self, ConstructError};
use hcordial::dot;
use hcordial::graph::Graph;
use hcordial::labeling::{verify, Labeling, LabelingKind};
use hcordial::oracle::{self, Decision, Pruning, SearchConfig};

#[derive(Parser)]
#[command(name = "hcordial", version, about = "Toolkit for H-cordial-family edge labelings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a family graph in the plain text format.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Size parameter: vertices (complete, path), rim size (wheel),
        /// cycle length (cycle), or leaf count (star).
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the constructive labeler for a kind; exits 2 on a documented
    /// obstruction.
    Label {
        #[arg(long, value_enum)]
        kind: LabelArg,
        /// Graph file ("-" or absent reads stdin) unless --family is given.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, requires = "n")]
        family: Option<Family>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a labeled graph against a definition; exit 0 valid, 1 invalid.
    Verify {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Magnitude bound for --kind hk; defaults to the largest magnitude
        /// present, with a notice.
        #[arg(long)]
        k: Option<u32>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive search for a valid labeling; exit 0 found, 1 exhausted,
    /// 3 undecided within budget.
    Search {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Enumerate up to LIMIT witnesses instead of deciding existence.
        #[arg(long, value_name = "LIMIT")]
        enumerate: Option<usize>,
        /// Report the lexicographically smallest witness.
        #[arg(long)]
        canonical: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Cap on counted search events (assignments + prunes).
        #[arg(long)]
        budget: Option<u64>,
        /// Enable all pruning rules (off by default, so statistics reflect
        /// the full label space).
        #[arg(long)]
        prune: bool,
    },
    /// Reference graphs with machine-checkable claims.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Spanning-cycle check; exit 0 iff Hamiltonian.
    Hamiltonian {
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// DOT rendering of a labeled graph (positive labels bold); plain graph
    /// files render without labels.
    ExportDot {
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Names and descriptions of all entries.
    List,
    /// Graph (and labeling, when published) of one entry.
    Show { name: String },
    /// Evaluate one entry's claims; exit 0 iff all pass.
    Check { name: String },
    /// Evaluate every claim of every entry; exit 0 iff all pass.
    CheckAll,
}

#[derive(Copy, Clone, ValueEnum)]
enum Family {
    Complete,
    Wheel,
    Cycle,
    Path,
    Star,
}

impl Family {
    fn build(self, n: usize) -> Result<Graph, CliError> {
        let g = match self {
            Family::Complete => Graph::complete(n),
            Family::Wheel => Graph::wheel(n),
            Family::Cycle => Graph::cycle(n),
            Family::Path => Graph::path(n),
            Family::Star => Graph::star(n),
        };
        g.map_err(|e| CliError::Usage(e.to_string()))
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum LabelArg {
    H,
    SemiH,
    NearSemiH,
    ZeroM,
    H2,
}

#[derive(Copy, Clone, ValueEnum)]
enum KindArg {
    H,
    SemiH,
    ZeroM,
    Hk,
}

enum CliError {
    /// Malformed flags or input files: exit 64.
    Usage(String),
    /// Documented obstruction/precondition rejection: exit 2.
    Rejected(String),
    /// A verifier, search, or claim said no: exit 1.
    Negative,
    /// Search ran out of budget: exit 3.
    Undecided,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let first_line = e.to_string().lines().next().unwrap_or("bad arguments").to_string();
            eprintln!("error: {first_line}");
            return ExitCode::from(64);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(64)
        }
        Err(CliError::Rejected(msg)) => {
            eprintln!("rejected: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Negative) => ExitCode::from(1),
        Err(CliError::Undecided) => ExitCode::from(3),
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, CliError> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn write_output(path: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_graph(text: &str) -> Result<Graph, CliError> {
    Graph::parse(text).map_err(|e| CliError::Usage(format!("bad graph file: {e}")))
}

fn parse_labeling(text: &str) -> Result<Labeling, CliError> {
    Labeling::parse(text).map_err(|e| CliError::Usage(format!("bad labeled-graph file: {e}")))
}

/// Resolves --kind/--k into a labeling kind; hk without --k falls back to the
/// largest magnitude present in `labels`, with a notice.
fn resolve_kind(
    kind: KindArg,
    k: Option<u32>,
    labels: Option<&[i32]>,
) -> Result<LabelingKind, CliError> {
    if !matches!(kind, KindArg::Hk) && k.is_some() {
        return Err(CliError::Usage("--k only applies to --kind hk".into()));
    }
    Ok(match kind {
        KindArg::H => LabelingKind::HCordial,
        KindArg::SemiH => LabelingKind::SemiHCordial,
        KindArg::ZeroM => LabelingKind::ZeroMCordial,
        KindArg::Hk => {
            let k = match (k, labels) {
                (Some(0), _) => return Err(CliError::Usage("--k must be at least 1".into())),
                (Some(k), _) => k,
                (None, Some(labels)) => {
                    let inferred = labels.iter().map(|l| l.unsigned_abs()).max().unwrap_or(1);
                    eprintln!(
                        "notice: --k omitted; using largest magnitude present, k = {inferred}"
                    );
                    inferred
                }
                (None, None) => {
                    return Err(CliError::Usage("--kind hk requires --k here".into()))
                }
            };
            LabelingKind::HkCordial(k)
        }
    })
}

fn is_complete(g: &Graph) -> bool {
    g.edge_count() == g.vertex_count() * (g.vertex_count() - 1) / 2
}

fn wheel_rim(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    if n >= 4 && Graph::wheel(n - 1).ok().as_ref() == Some(g) {
        Some(n - 1)
    } else {
        None
    }
}

fn run_constructor(kind: LabelArg, g: &Graph) -> Result<Labeling, ConstructError> {
    match kind {
        LabelArg::SemiH => constructors::semi_h_tree(g),
        LabelArg::NearSemiH => constructors::near_semi_h_tree(g),
        LabelArg::ZeroM => constructors::zero_m(g),
        // complete graphs take priority over wheels (W_3 is K_4)
        LabelArg::H => {
            if is_complete(g) {
                constructors::h_cordial_complete(g.vertex_count())
            } else {
                constructors::h_cordial_wheel(wheel_rim(g).expect("checked by caller"))
            }
        }
        LabelArg::H2 => {
            if is_complete(g) {
                constructors::h2_cordial_complete(g.vertex_count())
            } else {
                constructors::h2_cordial_wheel(wheel_rim(g).expect("checked by caller"))
            }
        }
    }
}

fn cmd_label(
    kind: LabelArg,
    input: Option<PathBuf>,
    family: Option<Family>,
    n: Option<usize>,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    let g = match (family, input) {
        (Some(f), None) => f.build(n.expect("clap enforces --n with --family"))?,
        (None, input) => parse_graph(&read_input(&input)?)?,
        (Some(_), Some(_)) => {
            return Err(CliError::Usage("--family and --in are mutually exclusive".into()))
        }
    };
    if matches!(kind, LabelArg::H | LabelArg::H2) && !is_complete(&g) && wheel_rim(&g).is_none() {
        return Err(CliError::Rejected(
            "no constructive labeler covers this graph (expected a complete graph or a wheel)"
                .into(),
        ));
    }
    let labeling = run_constructor(kind, &g).map_err(|e| CliError::Rejected(e.to_string()))?;
    write_output(&out, &labeling.to_text())
}

fn format_report(report: &hcordial::labeling::VerificationReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("kind: {}\n", report.kind));
    out.push_str(&format!("valid: {}\n", report.valid));
    if let Some(k) = report.inferred_k {
        out.push_str(&format!("inferred K: {k}\n"));
    }
    let fmt_tally = |map: &std::collections::BTreeMap<i32, usize>| {
        map.iter()
            .map(|(value, count)| format!("{value:+}: {count}"))
            .collect::<Vec<_>>()
            .join(", ")
    };
    out.push_str(&format!("edge tallies: {}\n", fmt_tally(&report.tally.edge)));
    out.push_str(&format!("vertex tallies: {}\n", fmt_tally(&report.tally.vertex)));
    for v in &report.violations {
        out.push_str(&format!("violation [{}]: {}\n", v.condition, v.detail));
    }
    out
}

fn cmd_verify(
    kind: KindArg,
    k: Option<u32>,
    input: Option<PathBuf>,
    json: bool,
) -> Result<(), CliError> {
    let labeling = parse_labeling(&read_input(&input)?)?;
    let kind = resolve_kind(kind, k, Some(labeling.labels()))?;
    let report = verify(&labeling, kind).map_err(|e| CliError::Usage(e.to_string()))?;
    if json {
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else {
        print!("{}", format_report(&report));
    }
    if report.valid {
        Ok(())
    } else {
        Err(CliError::Negative)
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    kind: KindArg,
    k: Option<u32>,
    input: Option<PathBuf>,
    enumerate: Option<usize>,
    canonical: bool,
    workers: usize,
    budget: Option<u64>,
    prune: bool,
) -> Result<(), CliError> {
    let g = parse_graph(&read_input(&input)?)?;
    let kind = resolve_kind(kind, k, None)?;
    let mut cfg = SearchConfig::new(kind);
    cfg.canonical = canonical;
    cfg.workers = workers.max(1);
    cfg.budget = budget;
    if prune {
        cfg.pruning = Pruning::all();
    }

    if let Some(limit) = enumerate {
        if limit == 0 {
            return Err(CliError::Usage("--enumerate needs a limit of at least 1".into()));
        }
        cfg.limit = Some(limit);
        let run = oracle::enumerate(&g, &cfg);
        println!(
            "witnesses: {} (complete: {}, assignments: {}, prunes: {}, elapsed: {:?})",
            run.witnesses.len(),
            run.complete,
            run.stats.assignments,
            run.stats.prunes,
            run.stats.elapsed
        );
        for (i, w) in run.witnesses.iter().enumerate() {
            println!("# witness {i}");
            print!("{}", w.to_text());
        }
        if !run.witnesses.is_empty() {
            Ok(())
        } else if run.complete {
            Err(CliError::Negative)
        } else {
            Err(CliError::Undecided)
        }
    } else {
        let out = oracle::decide(&g, &cfg);
        println!(
            "assignments: {}\nprunes: {}\nelapsed: {:?}",
            out.stats.assignments, out.stats.prunes, out.stats.elapsed
        );
        match out.decision {
            Decision::Found(w) => {
                println!("decision: found{}", if canonical { " (canonical)" } else { "" });
                print!("{}", w.to_text());
                Ok(())
            }
            Decision::Exhausted => {
                println!("decision: exhausted (no valid labeling)");
                Err(CliError::Negative)
            }
            Decision::Undecided => {
                println!("decision: undecided (budget ran out)");
                Err(CliError::Undecided)
            }
        }
    }
}

fn cmd_catalog(action: CatalogAction) -> Result<(), CliError> {
    match action {
        CatalogAction::List => {
            for e in catalog::entries() {
                println!("{:24} {}", e.name, e.description);
            }
            Ok(())
        }
        CatalogAction::Show { name } => {
            let e = catalog::entry(&name).map_err(|e| CliError::Usage(e.to_string()))?;
            println!("# {}", e.name);
            println!("# {}", e.description);
            println!("# source: {}", e.provenance);
            if let Some(kind) = e.claimed_kind {
                println!("# claimed kind: {kind}");
            }
            match &e.labeling {
                Some(l) => print!("{}", l.to_text()),
                None => print!("{}", e.graph.to_text()),
            }
            Ok(())
        }
        CatalogAction::Check { name } => {
            let bundle = catalog::check(&name).map_err(|e| CliError::Usage(e.to_string()))?;
            print_bundle(&bundle);
            if bundle.all_pass() {
                Ok(())
            } else {
                Err(CliError::Negative)
            }
        }
        CatalogAction::CheckAll => {
            let mut ok = true;
            for e in catalog::entries() {
                let bundle = e.check();
                print_bundle(&bundle);
                ok &= bundle.all_pass();
            }
            if ok {
                Ok(())
            } else {
                Err(CliError::Negative)
            }
        }
    }
}

fn print_bundle(bundle: &catalog::CheckBundle) {
    for (claim, result) in &bundle.results {
        let tag = if result.pass { "PASS" } else { "FAIL" };
        println!("{tag} {}/{claim}: {}", bundle.entry, result.detail);
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Gen { family, n, out } => {
            let g = family.build(n)?;
            write_output(&out, &g.to_text())
        }
        Command::Label { kind, input, family, n, out } => cmd_label(kind, input, family, n, out),
        Command::Verify { kind, k, input, json } => cmd_verify(kind, k, input, json),
        Command::Search { kind, k, input, enumerate, canonical, workers, budget, prune } => {
            cmd_search(kind, k, input, enumerate, canonical, workers, budget, prune)
        }
        Command::Catalog { action } => cmd_catalog(action),
        Command::Hamiltonian { input } => {
            let g = parse_graph(&read_input(&input)?)?;
            let ham = g.is_hamiltonian();
            println!("hamiltonian: {ham}");
            if ham {
                Ok(())
            } else {
                Err(CliError::Negative)
            }
        }
        Command::ExportDot { input } => {
            let text = read_input(&input)?;
            match Labeling::parse(&text) {
                Ok(l) => {
                    print!("{}", dot::labeling_to_dot(&l));
                    Ok(())
                }
                Err(labeled_err) => match Graph::parse(&text) {
                    Ok(g) => {
                        print!("{}", dot::graph_to_dot(&g));
                        Ok(())
                    }
                    Err(_) => Err(CliError::Usage(format!("bad input: {labeled_err}"))),
                },
            }
        }
    }
}
