//! `bipenum` — enumerate connected bipartite subgraphs from the command line.
//!
//! Two modes share one pipeline: the input graph is parsed, relabeled by a
//! degeneracy ordering (the order both enumerators want), enumerated, and
//! every solution is mapped back to the caller's own vertex labels or edge
//! ids before printing. Exit codes: 0 success, 1 verification mismatch,
//! 2 input error, 3 solution cap exceeded.

mod report;

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bipenum::oracle::{brute_force_edge, brute_force_induced, SolutionSet};
use bipenum::{
    degeneracy_ordering, enumerate_edge_subgraphs_with, enumerate_induced_with, families,
    CollectSink, DegeneracyOrdering, EnumOptions, EnumStats, Graph, SolutionSink, StopEnumeration,
};

use report::{BenchReport, BenchRow, RunReport};

/// Safety valve: solution spaces grow exponentially, so every run refuses to
/// emit more than this many solutions unless told otherwise.
const DEFAULT_CAP: u64 = 10_000_000;

#[derive(Parser)]
#[command(
    name = "bipenum",
    version,
    about = "Enumerate connected bipartite subgraphs of an undirected graph",
    long_about = "Enumerates, without duplication, all vertex sets whose induced subgraph is \
                  connected and bipartite (--mode induced) or all edge sets forming a connected \
                  bipartite subgraph (--mode edge). Solutions stream to stdout in depth-first \
                  order, one per line, in the input's own vertex labels (induced) or canonical \
                  edge ids (edge)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every solution, one per line
    Enumerate(EnumerateArgs),
    /// Cross-check the enumerator against an exhaustive subset sweep
    Verify(VerifyArgs),
    /// Sweep a graph family and tabulate amortized update costs
    Bench(BenchArgs),
    /// Print the degeneracy and the peeling order
    Degeneracy(DegeneracyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Connected bipartite induced subgraphs (vertex sets)
    Induced,
    /// Connected bipartite edge subgraphs (edge sets)
    Edge,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Induced => "induced",
            Mode::Edge => "edge",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// Two whitespace-separated vertex labels per line; `#` comments
    Edgelist,
    /// DIMACS: `p edge n m` header, `e u v` lines, 1-based vertices
    Dimacs,
}

#[derive(Args)]
struct InputArgs {
    /// Input file path, or `-` to read stdin
    input: String,
    /// Input format
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    format: Format,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    input: InputArgs,
    /// What to enumerate
    #[arg(long, value_enum, default_value_t = Mode::Induced)]
    mode: Mode,
    /// Print only the number of solutions
    #[arg(long)]
    count_only: bool,
    /// Stop with exit code 3 after this many solutions
    #[arg(long, default_value_t = DEFAULT_CAP, value_name = "N")]
    cap: u64,
    /// Print edge solutions as (u,v) endpoint pairs instead of edge ids
    #[arg(long)]
    expand_edges: bool,
    /// Write the run report as JSON here instead of a summary line on stderr
    #[arg(long, value_name = "PATH")]
    report_json: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// What to verify
    #[arg(long, value_enum, default_value_t = Mode::Induced)]
    mode: Mode,
    /// Deliberately corrupt the enumeration (test fixture)
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// Path graphs; size = vertex count
    Path,
    /// Cycle graphs; size = vertex count
    Cycle,
    /// Grid graphs; size = RxC
    Grid,
    /// Random graphs with a fixed edge count; size = N (m = n) or NxM
    Gnm,
    /// Random k-degenerate graphs; size = NxK (plain N means k = 2)
    KDegenerate,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Grid => "grid",
            Family::Gnm => "gnm",
            Family::KDegenerate => "k-degenerate",
        }
    }
}

#[derive(Args)]
struct BenchArgs {
    /// Graph family to sweep
    #[arg(long, value_enum)]
    family: Family,
    /// Comma-separated sizes, e.g. `8,10,12` or `3x3,3x4,4x4` for grids
    #[arg(long, value_delimiter = ',', required = true, value_name = "SIZES")]
    sizes: Vec<String>,
    /// What to enumerate
    #[arg(long, value_enum, default_value_t = Mode::Induced)]
    mode: Mode,
    /// RNG seed for the random families
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Refuse any size producing more than this many solutions
    #[arg(long, default_value_t = DEFAULT_CAP, value_name = "N")]
    cap: u64,
    /// Also write the sweep as JSON here
    #[arg(long, value_name = "PATH")]
    report_json: Option<PathBuf>,
}

#[derive(Args)]
struct DegeneracyArgs {
    #[command(flatten)]
    input: InputArgs,
}

/// Failures, ordered by exit code: mismatch → 1, input → 2, cap → 3.
enum CliError {
    Mismatch(String),
    Input(String),
    CapExceeded(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Degeneracy(args) => cmd_degeneracy(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let (code, message) = match err {
                CliError::Mismatch(m) => (1, m),
                CliError::Input(m) => (2, m),
                CliError::CapExceeded(m) => (3, m),
            };
            eprintln!("bipenum: {message}");
            ExitCode::from(code)
        }
    }
}

// ---------------------------------------------------------------------------
// Input loading and id-space bookkeeping
// ---------------------------------------------------------------------------

/// A parsed graph plus everything needed to translate enumerator output back
/// into the caller's id space.
struct Prepared {
    /// The graph exactly as parsed (compacted 0-based ids).
    parsed: Graph,
    /// `labels[v]` = the input's own label for parsed vertex `v`.
    labels: Vec<usize>,
    ordering: DegeneracyOrdering,
    /// The enumeration substrate: `parsed` with vertices renamed to ranks.
    relabeled: Graph,
    /// Inverse of `ordering.rank`: parsed vertex id at each rank.
    original_of_rank: Vec<usize>,
    /// Parsed edge id for each relabeled edge id.
    parsed_edge_of: Vec<usize>,
}

fn load_graph(args: &InputArgs) -> Result<(Graph, Vec<usize>), CliError> {
    let text = if args.input == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Input(format!("reading stdin: {e}")))?;
        buf
    } else {
        fs::read_to_string(&args.input)
            .map_err(|e| CliError::Input(format!("reading {}: {e}", args.input)))?
    };
    match args.format {
        Format::Edgelist => Graph::parse_edge_list_labeled(&text)
            .map_err(|e| CliError::Input(format!("{}: {e}", args.input))),
        Format::Dimacs => Graph::parse_dimacs(&text)
            .map(|g| {
                let labels = (1..=g.vertex_count()).collect();
                (g, labels)
            })
            .map_err(|e| CliError::Input(format!("{}: {e}", args.input))),
    }
}

fn prepare(args: &InputArgs) -> Result<Prepared, CliError> {
    let (parsed, labels) = load_graph(args)?;
    let ordering = degeneracy_ordering(&parsed);
    let relabeled = ordering.relabel(&parsed);
    let mut original_of_rank = vec![0usize; parsed.vertex_count()];
    for (v, &r) in ordering.rank.iter().enumerate() {
        original_of_rank[r] = v;
    }
    let parsed_edge_of = relabeled
        .edges()
        .iter()
        .map(|&(a, b)| {
            let (u, v) = (original_of_rank[a], original_of_rank[b]);
            parsed_edge_id(&parsed, u.min(v), u.max(v))
        })
        .collect();
    Ok(Prepared { parsed, labels, ordering, relabeled, original_of_rank, parsed_edge_of })
}

/// Edge id of `(u, v)` in `graph`; the pair must exist.
fn parsed_edge_id(graph: &Graph, u: usize, v: usize) -> usize {
    let list = graph.neighbors(u);
    let at = list
        .binary_search_by_key(&v, |&(w, _)| w)
        .expect("relabeled edges exist in the parsed graph");
    list[at].1
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

/// Streams solutions line by line, translating emitted ids and enforcing the
/// solution cap. Never buffers more than one line.
struct StreamSink<'a, W: io::Write> {
    /// `None` under `--count-only`.
    out: Option<W>,
    /// Sort key per emitted id (user label or parsed edge id).
    key_of: &'a [usize],
    /// Printed text per emitted id.
    text_of: &'a [String],
    scratch: Vec<(usize, usize)>,
    line: String,
    count: u64,
    cap: u64,
    capped: bool,
    io_error: Option<io::Error>,
}

impl<W: io::Write> SolutionSink for StreamSink<'_, W> {
    fn accept(&mut self, members: &[usize]) -> Result<(), StopEnumeration> {
        if self.count == self.cap {
            self.capped = true;
            return Err(StopEnumeration::new("solution cap reached"));
        }
        self.count += 1;
        if let Some(out) = self.out.as_mut() {
            self.scratch.clear();
            self.scratch.extend(members.iter().map(|&id| (self.key_of[id], id)));
            self.scratch.sort_unstable();
            self.line.clear();
            for (i, &(_, id)) in self.scratch.iter().enumerate() {
                if i > 0 {
                    self.line.push(' ');
                }
                self.line.push_str(&self.text_of[id]);
            }
            self.line.push('\n');
            if let Err(e) = out.write_all(self.line.as_bytes()) {
                self.io_error = Some(e);
                return Err(StopEnumeration::new("writing stdout failed"));
            }
        }
        Ok(())
    }
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<(), CliError> {
    if args.expand_edges && args.mode != Mode::Edge {
        return Err(CliError::Input("--expand-edges only applies to --mode edge".into()));
    }
    let p = prepare(&args.input)?;

    // Emitted induced ids are ranks; emitted edge ids are relabeled edge ids.
    // Precompute each id's user-facing sort key and printed form.
    let (key_of, text_of): (Vec<usize>, Vec<String>) = match args.mode {
        Mode::Induced => {
            let keys: Vec<usize> =
                (0..p.relabeled.vertex_count()).map(|r| p.labels[p.original_of_rank[r]]).collect();
            let texts = keys.iter().map(ToString::to_string).collect();
            (keys, texts)
        }
        Mode::Edge => {
            let keys = p.parsed_edge_of.clone();
            let texts = if args.expand_edges {
                p.relabeled
                    .edges()
                    .iter()
                    .map(|&(a, b)| {
                        let x = p.labels[p.original_of_rank[a]];
                        let y = p.labels[p.original_of_rank[b]];
                        format!("({},{})", x.min(y), x.max(y))
                    })
                    .collect()
            } else {
                keys.iter().map(ToString::to_string).collect()
            };
            (keys, texts)
        }
    };

    let stdout = io::stdout();
    let mut sink = StreamSink {
        out: (!args.count_only).then(|| io::BufWriter::new(stdout.lock())),
        key_of: &key_of,
        text_of: &text_of,
        scratch: Vec::new(),
        line: String::new(),
        count: 0,
        cap: args.cap,
        capped: false,
        io_error: None,
    };

    let options = EnumOptions::default();
    let started = Instant::now();
    let outcome = match args.mode {
        Mode::Induced => enumerate_induced_with(&p.relabeled, &options, &mut sink),
        Mode::Edge => enumerate_edge_subgraphs_with(&p.relabeled, &options, &mut sink),
    };
    let wall_ms = started.elapsed().as_secs_f64() * 1e3;

    match outcome {
        Ok(stats) => {
            flush_sink(&mut sink)?;
            if args.count_only {
                println!("{}", sink.count);
            }
            let report = RunReport::new(
                args.mode.name(),
                p.parsed.vertex_count(),
                p.parsed.edge_count(),
                p.ordering.degeneracy,
                &stats,
                wall_ms,
            );
            match &args.report_json {
                Some(path) => write_json(path, &report)?,
                None => eprintln!("{}", report.human_line()),
            }
            Ok(())
        }
        Err(_) if sink.capped => {
            flush_sink(&mut sink)?;
            if args.count_only {
                println!("{}", sink.count);
            }
            Err(CliError::CapExceeded(format!("solution cap of {} reached", args.cap)))
        }
        Err(_) => {
            let detail = sink
                .io_error
                .map(|e| e.to_string())
                .unwrap_or_else(|| "unknown sink failure".into());
            Err(CliError::Input(format!("writing stdout: {detail}")))
        }
    }
}

fn flush_sink<W: io::Write>(sink: &mut StreamSink<W>) -> Result<(), CliError> {
    if let Some(out) = sink.out.as_mut() {
        out.flush().map_err(|e| CliError::Input(format!("writing stdout: {e}")))?;
    }
    Ok(())
}

fn write_json(path: &PathBuf, value: &impl serde::Serialize) -> Result<(), CliError> {
    let body = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Input(format!("serializing report: {e}")))?;
    fs::write(path, body + "\n")
        .map_err(|e| CliError::Input(format!("writing {}: {e}", path.display())))
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let p = prepare(&args.input)?;
    // Oracle first: it refuses oversized inputs before any enumeration runs.
    let reference: SolutionSet = match args.mode {
        Mode::Induced => brute_force_induced(&p.parsed),
        Mode::Edge => brute_force_edge(&p.parsed),
    }
    .map_err(|e| CliError::Input(e.to_string()))?;

    let options = EnumOptions {
        fault_skip_conflict: args.inject_fault && args.mode == Mode::Induced,
        fault_skip_odd_edge: args.inject_fault && args.mode == Mode::Edge,
        ..EnumOptions::default()
    };
    let mut sink = CollectSink::default();
    match args.mode {
        Mode::Induced => enumerate_induced_with(&p.relabeled, &options, &mut sink),
        Mode::Edge => enumerate_edge_subgraphs_with(&p.relabeled, &options, &mut sink),
    }
    .map_err(|stop| CliError::Input(format!("enumeration aborted: {stop}")))?;

    // Map emitted solutions back to the parsed id space the oracle uses.
    let translate: &dyn Fn(usize) -> usize = match args.mode {
        Mode::Induced => &|r| p.original_of_rank[r],
        Mode::Edge => &|l| p.parsed_edge_of[l],
    };
    let emitted = sink.solutions.len();
    let got: SolutionSet = sink
        .solutions
        .iter()
        .map(|sol| {
            let mut mapped: Vec<usize> = sol.iter().map(|&id| translate(id)).collect();
            mapped.sort_unstable();
            mapped
        })
        .collect();

    // Solutions are rendered the way `enumerate` prints them.
    let show = |sol: &Vec<usize>| -> String {
        let mut keys: Vec<usize> = match args.mode {
            Mode::Induced => sol.iter().map(|&v| p.labels[v]).collect(),
            Mode::Edge => sol.clone(),
        };
        keys.sort_unstable();
        keys.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    };

    if emitted == got.len() && got == reference {
        println!(
            "verified ({}): {} solutions match the exhaustive reference",
            args.mode.name(),
            got.len()
        );
        return Ok(());
    }
    let mut problems = Vec::new();
    if emitted != got.len() {
        problems.push(format!("{} duplicate emissions", emitted - got.len()));
    }
    if let Some(missing) = reference.difference(&got).next() {
        problems.push(format!("first missing solution: {}", show(missing)));
    }
    if let Some(spurious) = got.difference(&reference).next() {
        problems.push(format!("first spurious solution: {}", show(spurious)));
    }
    Err(CliError::Mismatch(format!(
        "{} mismatch: enumerator produced {} distinct solutions, reference has {}; {}",
        args.mode.name(),
        got.len(),
        reference.len(),
        problems.join("; ")
    )))
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

/// Counts solutions and aborts at the cap; bench never prints them.
struct CapCountSink {
    count: u64,
    cap: u64,
    capped: bool,
}

impl SolutionSink for CapCountSink {
    fn accept(&mut self, _members: &[usize]) -> Result<(), StopEnumeration> {
        if self.count == self.cap {
            self.capped = true;
            return Err(StopEnumeration::new("solution cap reached"));
        }
        self.count += 1;
        Ok(())
    }
}

fn build_family(family: Family, token: &str, seed: u64) -> Result<Graph, CliError> {
    let bad = |why: &str| CliError::Input(format!("size {token:?} for family {}: {why}", family.name()));
    let parts: Vec<&str> = token.split('x').collect();
    let mut nums = Vec::new();
    for part in &parts {
        nums.push(part.parse::<usize>().map_err(|_| bad("expected an integer"))?);
    }
    match (family, nums.as_slice()) {
        (Family::Path, [n]) => Ok(families::path(*n)),
        (Family::Cycle, [n]) => Ok(families::cycle(*n)),
        (Family::Grid, [r, c]) => Ok(families::grid(*r, *c)),
        (Family::Gnm, [n]) => Ok(families::gnm(*n, *n, seed)),
        (Family::Gnm, [n, m]) => Ok(families::gnm(*n, *m, seed)),
        (Family::KDegenerate, [n]) => Ok(families::k_degenerate(*n, 2, seed)),
        (Family::KDegenerate, [n, k]) => Ok(families::k_degenerate(*n, *k, seed)),
        (Family::Grid, _) => Err(bad("expected RxC")),
        (Family::Path | Family::Cycle, _) => Err(bad("expected a single integer")),
        (Family::Gnm | Family::KDegenerate, _) => Err(bad("expected N or NxM")),
    }
}

fn cmd_bench(args: BenchArgs) -> Result<(), CliError> {
    let mut rows: Vec<BenchRow> = Vec::new();
    // Wall time varies run to run, so the stdout table carries only the
    // deterministic columns; timings live in the JSON report.
    println!(
        "{:<10} {:>6} {:>6} {:>3} {:>12} {:>14} {:>10} {:>12} {:>9}",
        "size", "n", "m", "k", "solutions", "edits", "edits/sol", "edits/(k·sol)", "peak_log"
    );
    for token in &args.sizes {
        let graph = build_family(args.family, token, args.seed)?;
        let ordering = degeneracy_ordering(&graph);
        let relabeled = ordering.relabel(&graph);
        let mut sink = CapCountSink { count: 0, cap: args.cap, capped: false };
        let options = EnumOptions::default();
        let started = Instant::now();
        let outcome = match args.mode {
            Mode::Induced => enumerate_induced_with(&relabeled, &options, &mut sink),
            Mode::Edge => enumerate_edge_subgraphs_with(&relabeled, &options, &mut sink),
        };
        let wall_ms = started.elapsed().as_secs_f64() * 1e3;
        let stats: EnumStats = match outcome {
            Ok(stats) => stats,
            Err(_) if sink.capped => {
                return Err(CliError::CapExceeded(format!(
                    "size {token}: more than {} solutions; raise --cap or shrink the sweep",
                    args.cap
                )));
            }
            Err(stop) => {
                return Err(CliError::Input(format!("size {token}: enumeration aborted: {stop}")))
            }
        };
        let report = RunReport::new(
            args.mode.name(),
            graph.vertex_count(),
            graph.edge_count(),
            ordering.degeneracy,
            &stats,
            wall_ms,
        );
        println!(
            "{:<10} {:>6} {:>6} {:>3} {:>12} {:>14} {:>10.2} {:>12.2} {:>9}",
            token,
            report.vertices,
            report.edges,
            report.degeneracy,
            report.solutions,
            report.edits.total,
            report.edits_per_solution,
            report.edits_per_degeneracy_solution,
            report.peak_log_entries,
        );
        rows.push(BenchRow { size: token.clone(), report });
    }
    if let Some(path) = &args.report_json {
        let sweep = BenchReport {
            family: args.family.name(),
            mode: args.mode.name(),
            seed: args.seed,
            cap: args.cap,
            rows,
        };
        write_json(path, &sweep)?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// degeneracy
// ---------------------------------------------------------------------------

fn cmd_degeneracy(args: DegeneracyArgs) -> Result<(), CliError> {
    let (parsed, labels) = load_graph(&args.input)?;
    let ordering = degeneracy_ordering(&parsed);
    let mut by_rank = vec![0usize; parsed.vertex_count()];
    for (v, &r) in ordering.rank.iter().enumerate() {
        by_rank[r] = v;
    }
    println!("degeneracy: {}", ordering.degeneracy);
    let order: String = by_rank.iter().map(|&v| format!(" {}", labels[v])).collect();
    println!("order:{order}");
    Ok(())
}
