//! `observa`: command-line front end for observability analysis of
//! edge-colored directed graphs.
//!
//! Exit codes: 0 affirmative verdict or success, 1 negative verdict,
//! 2 input error, 3 budget exceeded.

use clap::{Args, Parser, Subcommand, ValueEnum};
use observa_core::design::{
    self, DesignBudget, DesignProblem, DesignResult, DesignStatus, MinimumColorsOutcome,
};
use observa_core::generators::{
    self, reduce_monochromatic_triangle, reduce_three_colorability, ReductionArtifact,
    UndirectedGraph,
};
use observa_core::*;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_NEGATIVE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "observa",
    version,
    about = "Observability analysis for edge-colored directed graphs",
    long_about = "Decide whether an agent moving along colored edges can be localized \
                  from the observed color sequence, track position sets, compute minimal \
                  observation horizons, generate benchmark instances and search for \
                  colorings that make a graph observable.\n\n\
                  Graph documents are JSON (canonical) or DOT, detected by content; \
                  pass '-' to read standard input. Inputs carrying unobservable edges \
                  are closed (epsilon closure) before analysis and tracking.\n\n\
                  Exit codes: 0 affirmative/success, 1 negative verdict, 2 input error, \
                  3 budget exceeded.\n\
                  Environment: OBSERVA_BUDGET_NODES and OBSERVA_BUDGET_MS override the \
                  default design-search budget."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report structural problems in a graph document
    Validate(ValidateArgs),
    /// Decide observability notions; prints verdicts and witnesses
    Check(CheckArgs),
    /// Minimal number of observations guaranteeing localization
    MinTime(MinTimeArgs),
    /// Propagate the possible-position set along an observation word
    Track(TrackArgs),
    /// Eliminate unobservable edges (the epsilon closure of a DES)
    DesClose(EmitArgs),
    /// Generate named, family, random and reduction instances
    #[command(subcommand)]
    Gen(GenCommand),
    /// Search for a node or edge coloring achieving observability
    Design(DesignArgs),
    /// Convert a graph document between JSON and DOT
    Convert(ConvertArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
}

impl From<GraphFormat> for Format {
    fn from(f: GraphFormat) -> Format {
        match f {
            GraphFormat::Json => Format::Json,
            GraphFormat::Dot => Format::Dot,
        }
    }
}

#[derive(Args)]
struct ValidateArgs {
    /// Graph document (path or '-')
    input: String,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Args)]
struct CheckArgs {
    /// Graph document (path or '-')
    input: String,
    /// Verdict and exit code follow full observability (the default)
    #[arg(long, conflicts_with_all = ["partly", "aposteriori"])]
    observable: bool,
    /// Verdict and exit code follow partial observability
    #[arg(long, conflicts_with = "aposteriori")]
    partly: bool,
    /// Verdict and exit code follow a-posteriori observability
    #[arg(long)]
    aposteriori: bool,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Args)]
struct MinTimeArgs {
    /// Graph document (path or '-')
    input: String,
    /// Horizon for partial observability instead of full observability
    #[arg(long)]
    partial: bool,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Args)]
struct TrackArgs {
    /// Graph document (path or '-')
    input: String,
    /// Observation word: single-character color labels joined (e.g. SDS),
    /// or comma-separated labels (e.g. A1,B1)
    word: String,
    /// Start nodes as comma-separated labels (default: every node)
    #[arg(long)]
    start: Option<String>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Args)]
struct EmitArgs {
    /// Graph document (path or '-')
    input: String,
    #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
    format: GraphFormat,
    /// Output path (default: standard output)
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GenOutput {
    #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
    format: GraphFormat,
    /// Output path (default: standard output)
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GenCommand {
    /// Family with quadratic minimal horizon, on n >= 3 nodes
    WorstCase {
        n: usize,
        #[command(flatten)]
        out: GenOutput,
    },
    /// Star with k leaves: center->leaf edges S, leaf->center edges D
    Star {
        k: usize,
        #[command(flatten)]
        out: GenOutput,
    },
    /// Fixed instance: loop1, twocyc, chain, amb, shift or star(k)
    Named {
        name: String,
        #[command(flatten)]
        out: GenOutput,
    },
    /// Seeded random graph; every (from, to, color) triple is drawn
    /// independently
    Random {
        #[arg(long)]
        nodes: usize,
        #[arg(long)]
        colors: usize,
        #[arg(long)]
        prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: GenOutput,
    },
    /// Uncolored instance whose 3-node-colorability for observability
    /// matches 3-colorability of the undirected source
    #[command(name = "reduce-3col")]
    Reduce3col(ReduceArgs),
    /// Uncolored instance whose 2-edge-colorability for partial
    /// observability matches triangle-colorability of the source
    ReduceMonoTriangle(ReduceArgs),
}

#[derive(Args)]
struct ReduceArgs {
    /// Undirected source document (path or '-'); edges are read as
    /// unordered pairs
    #[arg(required_unless_present = "complete")]
    input: Option<String>,
    /// Use the complete graph on k nodes as the source
    #[arg(long, conflicts_with = "input")]
    complete: Option<usize>,
    /// Write the node-role sidecar JSON here (defaults to
    /// `<output>.roles.json` when --output is a path)
    #[arg(long)]
    roles: Option<PathBuf>,
    #[command(flatten)]
    out: GenOutput,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DesignTargetArg {
    Nodes,
    Edges,
}

#[derive(Args)]
struct DesignArgs {
    /// What to color
    target: DesignTargetArg,
    /// Graph document (path or '-'); colors of colored inputs are
    /// stripped first
    input: String,
    /// Try exactly k colors
    #[arg(long, conflicts_with = "min")]
    k: Option<usize>,
    /// Search for the minimal number of colors
    #[arg(long)]
    min: bool,
    /// With edges: demand full observability instead of partial
    /// (experimental mode, not covered by the hardness results)
    #[arg(long)]
    full: bool,
    /// Search budget: explored assignments
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Search budget: wall-clock milliseconds
    #[arg(long)]
    max_ms: Option<u64>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Args)]
struct ConvertArgs {
    /// Graph document (path or '-')
    input: String,
    /// Target format
    #[arg(long, value_enum)]
    to: GraphFormat,
    /// Output path (default: standard output)
    #[arg(short, long)]
    output: Option<PathBuf>,
}

/// A failure carrying its exit code; rendered on the diagnostic stream,
/// as JSON when the command's format flag says so.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, json_errors) = dispatch(cli);
    match result {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            if json_errors {
                eprintln!(
                    "{}",
                    serde_json::json!({ "error": { "message": failure.message } })
                );
            } else {
                eprintln!("error: {}", failure.message);
            }
            ExitCode::from(failure.code)
        }
    }
}

fn dispatch(cli: Cli) -> (Result<u8, Failure>, bool) {
    match cli.command {
        Command::Validate(args) => {
            let json = args.format == ReportFormat::Json;
            (run_validate(args), json)
        }
        Command::Check(args) => {
            let json = args.format == ReportFormat::Json;
            (run_check(args), json)
        }
        Command::MinTime(args) => {
            let json = args.format == ReportFormat::Json;
            (run_min_time(args), json)
        }
        Command::Track(args) => {
            let json = args.format == ReportFormat::Json;
            (run_track(args), json)
        }
        Command::DesClose(args) => {
            let json = args.format == GraphFormat::Json;
            (run_des_close(args), json)
        }
        Command::Gen(command) => (run_gen(command), false),
        Command::Design(args) => {
            let json = args.format == ReportFormat::Json;
            (run_design(args), json)
        }
        Command::Convert(args) => (run_convert(args), false),
    }
}

fn read_input(input: &str) -> Result<String, Failure> {
    if input == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::input(format!("cannot read standard input: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(input)
            .map_err(|e| Failure::input(format!("cannot read {input}: {e}")))
    }
}

/// Detects the document format: JSON documents start with '{'.
fn sniff_format(text: &str) -> Format {
    if text.trim_start().starts_with('{') {
        Format::Json
    } else {
        Format::Dot
    }
}

fn read_document(input: &str) -> Result<GraphDocument, Failure> {
    let text = read_input(input)?;
    GraphDocument::parse(&text, sniff_format(&text)).map_err(|e| Failure::input(e.to_string()))
}

/// Loads a colored graph for analysis: validates it and applies the
/// epsilon closure when unobservable edges are present. Uncolored
/// documents are read as single-color graphs.
fn load_for_analysis(input: &str) -> Result<ColoredDigraph, Failure> {
    let graph = read_document(input)?.into_colored();
    let report = graph.validate();
    if !report.ok {
        let mut message = String::from("invalid graph:");
        for issue in &report.issues {
            message.push_str(&format!("\n  {}: {}", issue.location, issue.message));
        }
        return Err(Failure::input(message));
    }
    if graph.unobservable_edges().is_empty() {
        Ok(graph)
    } else {
        eprintln!("note: unobservable edges eliminated before analysis");
        Ok(graph.epsilon_closure())
    }
}

fn write_output(path: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match path {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => std::fs::write(path, content)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display()))),
    }
}

fn run_validate(args: ValidateArgs) -> Result<u8, Failure> {
    let doc = read_document(&args.input)?;
    // uncolored documents are validated through their single-color view
    let graph = doc.into_colored();
    let report = graph.validate();
    match args.format {
        ReportFormat::Json => {
            let issues: Vec<serde_json::Value> = report
                .issues
                .iter()
                .map(|i| {
                    serde_json::json!({
                        "severity": match i.severity {
                            graph::Severity::Error => "error",
                            graph::Severity::Warning => "warning",
                        },
                        "message": i.message,
                        "location": i.location,
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::json!({ "ok": report.ok, "issues": issues })
            );
        }
        ReportFormat::Text => {
            if report.issues.is_empty() {
                println!("ok");
            } else {
                for issue in &report.issues {
                    let severity = match issue.severity {
                        graph::Severity::Error => "error",
                        graph::Severity::Warning => "warning",
                    };
                    println!("{severity} at {}: {}", issue.location, issue.message);
                }
                if report.ok {
                    println!("ok (warnings only)");
                }
            }
        }
    }
    Ok(if report.ok { 0 } else { EXIT_NEGATIVE })
}

fn describe_witness(witness: &Witness, graph: &ColoredDigraph) -> String {
    match witness {
        Witness::ColorSplit {
            node,
            color,
            targets,
        } => format!(
            "node {} has two {}-colored edges, toward {} and {}",
            graph.node_label(*node),
            graph.color_label(*color),
            graph.node_label(targets.0),
            graph.node_label(targets.1)
        ),
        Witness::PairCycle {
            kind,
            cycle,
            colors,
        } => {
            let mut path = String::new();
            for (i, &(v1, v2)) in cycle.iter().enumerate() {
                path.push_str(&format!(
                    "({}|{}) -{}-> ",
                    graph.node_label(v1),
                    graph.node_label(v2),
                    graph.color_label(colors[i])
                ));
            }
            path.push_str(&format!(
                "({}|{})",
                graph.node_label(cycle[0].0),
                graph.node_label(cycle[0].1)
            ));
            let kind = match kind {
                PairKind::Strict => "two separated synchronized cycles",
                PairKind::Relaxed => "an eternally ambiguous observation cycle",
                PairKind::Augmented => "a synchronized pair cycle",
            };
            format!("{kind}: {path}")
        }
    }
}

fn witness_json(witness: &Witness, graph: &ColoredDigraph) -> serde_json::Value {
    match witness {
        Witness::ColorSplit {
            node,
            color,
            targets,
        } => serde_json::json!({
            "type": "color_split",
            "node": graph.node_label(*node),
            "color": graph.color_label(*color),
            "targets": [graph.node_label(targets.0), graph.node_label(targets.1)],
        }),
        Witness::PairCycle {
            kind,
            cycle,
            colors,
        } => serde_json::json!({
            "type": "pair_cycle",
            "kind": match kind {
                PairKind::Strict => "strict",
                PairKind::Relaxed => "relaxed",
                PairKind::Augmented => "augmented",
            },
            "cycle": cycle
                .iter()
                .map(|&(v1, v2)| vec![
                    graph.node_label(v1).to_string(),
                    graph.node_label(v2).to_string(),
                ])
                .collect::<Vec<_>>(),
            "colors": colors
                .iter()
                .map(|&c| graph.color_label(c).to_string())
                .collect::<Vec<_>>(),
        }),
    }
}

fn run_check(args: CheckArgs) -> Result<u8, Failure> {
    let graph = load_for_analysis(&args.input)?;
    let report = analyze(&graph).expect("closed graphs analyze cleanly");
    match args.format {
        ReportFormat::Json => {
            println!(
                "{}",
                serde_json::json!({
                    "observable": report.observable,
                    "partly_observable": report.partly_observable,
                    "partly_aposteriori": report.partly_aposteriori,
                    "min_time": report.min_time,
                    "min_partial_time": report.min_partial_time,
                    "witness": report.witness.as_ref().map(|w| witness_json(w, &graph)),
                })
            );
        }
        ReportFormat::Text => {
            let yesno = |b: bool| if b { "yes" } else { "no" };
            match report.min_time {
                Some(t) => println!("observable:          yes (T = {t})"),
                None => println!("observable:          no"),
            }
            match report.min_partial_time {
                Some(t) => println!("partly observable:   yes (T = {t})"),
                None => println!("partly observable:   no"),
            }
            println!("partly a-posteriori: {}", yesno(report.partly_aposteriori));
            if let Some(witness) = &report.witness {
                println!("witness: {}", describe_witness(witness, &graph));
            }
        }
    }
    let verdict = if args.partly {
        report.partly_observable
    } else if args.aposteriori {
        report.partly_aposteriori
    } else {
        report.observable
    };
    Ok(if verdict { 0 } else { EXIT_NEGATIVE })
}

fn run_min_time(args: MinTimeArgs) -> Result<u8, Failure> {
    let graph = load_for_analysis(&args.input)?;
    let time = if args.partial {
        min_partial_observation_time(&graph)
    } else {
        min_observation_time(&graph)
    }
    .expect("closed graphs analyze cleanly");
    match args.format {
        ReportFormat::Json => println!(
            "{}",
            serde_json::json!({
                "partial": args.partial,
                "time": time,
            })
        ),
        ReportFormat::Text => match time {
            Some(t) => println!("{t}"),
            None => println!(
                "none ({} observable)",
                if args.partial { "not partly" } else { "not" }
            ),
        },
    }
    Ok(if time.is_some() { 0 } else { EXIT_NEGATIVE })
}

fn run_track(args: TrackArgs) -> Result<u8, Failure> {
    let graph = load_for_analysis(&args.input)?;
    let word = Word::parse(&args.word, &graph).map_err(Failure::input)?;
    let start = match &args.start {
        None => None,
        Some(labels) => {
            let mut set = NodeSet::empty(graph.node_count());
            for label in labels.split(',') {
                let v = graph
                    .node_by_label(label.trim())
                    .ok_or_else(|| Failure::input(format!("unknown node label {label:?}")))?;
                set.insert(v);
            }
            Some(set)
        }
    };
    let states = track(&graph, &word, start).map_err(|e| Failure::input(e.to_string()))?;
    let names = |set: &NodeSet| {
        set.iter()
            .map(|v| graph.node_label(v).to_string())
            .collect::<Vec<_>>()
    };
    let localized: Vec<usize> = states
        .iter()
        .skip(1)
        .filter(|s| s.possible.len() <= 1)
        .map(|s| s.step)
        .collect();
    match args.format {
        ReportFormat::Json => {
            println!(
                "{}",
                serde_json::json!({
                    "word": word.display(&graph),
                    "steps": states
                        .iter()
                        .map(|s| serde_json::json!({
                            "step": s.step,
                            "possible": names(&s.possible),
                        }))
                        .collect::<Vec<_>>(),
                    "localized_at": localized,
                    "final": names(&states.last().expect("track returns t=0").possible),
                })
            );
        }
        ReportFormat::Text => {
            for s in &states {
                let marker = if s.step > 0 && s.possible.len() <= 1 {
                    "  [localized]"
                } else {
                    ""
                };
                println!(
                    "t={}: {{{}}}{marker}",
                    s.step,
                    names(&s.possible).join(", ")
                );
            }
            if localized.is_empty() {
                println!("never localized");
            } else {
                println!(
                    "localized at: {}",
                    localized
                        .iter()
                        .map(usize::to_string)
                        .collect::<Vec<_>>()
                        .join(", ")
                );
            }
        }
    }
    Ok(0)
}

fn run_des_close(args: EmitArgs) -> Result<u8, Failure> {
    let graph = read_document(&args.input)?.into_colored();
    let report = graph.validate();
    if !report.ok {
        return Err(Failure::input("invalid graph; run `observa validate`"));
    }
    let closed = graph.epsilon_closure();
    let text = GraphDocument::Colored(closed).serialize(args.format.into());
    write_output(&args.output, &text)?;
    Ok(0)
}

fn emit_graph(g: ColoredDigraph, out: &GenOutput) -> Result<u8, Failure> {
    let text = GraphDocument::Colored(g).serialize(out.format.into());
    write_output(&out.output, &text)?;
    Ok(0)
}

fn run_gen(command: GenCommand) -> Result<u8, Failure> {
    match command {
        GenCommand::WorstCase { n, out } => {
            let g =
                generators::worst_case_family(n).map_err(|e| Failure::input(e.to_string()))?;
            emit_graph(g, &out)
        }
        GenCommand::Star { k, out } => {
            if k == 0 {
                return Err(Failure::input("star needs at least one leaf"));
            }
            emit_graph(generators::star(k), &out)
        }
        GenCommand::Named { name, out } => {
            let g =
                generators::named_example(&name).map_err(|e| Failure::input(e.to_string()))?;
            emit_graph(g, &out)
        }
        GenCommand::Random {
            nodes,
            colors,
            prob,
            seed,
            out,
        } => {
            let g = generators::random_colored_graph(nodes, colors, prob, seed)
                .map_err(|e| Failure::input(e.to_string()))?;
            emit_graph(g, &out)
        }
        GenCommand::Reduce3col(args) => {
            let source = reduction_source(&args)?;
            let artifact =
                reduce_three_colorability(&source).map_err(|e| Failure::input(e.to_string()))?;
            emit_reduction(artifact, &args)
        }
        GenCommand::ReduceMonoTriangle(args) => {
            let source = reduction_source(&args)?;
            let artifact = reduce_monochromatic_triangle(&source)
                .map_err(|e| Failure::input(e.to_string()))?;
            emit_reduction(artifact, &args)
        }
    }
}

/// Reads the undirected reduction source: either `--complete k` or a
/// graph document whose edges are taken as unordered pairs.
fn reduction_source(args: &ReduceArgs) -> Result<UndirectedGraph, Failure> {
    if let Some(k) = args.complete {
        return Ok(UndirectedGraph::complete(k));
    }
    let input = args
        .input
        .as_deref()
        .expect("clap enforces input XOR complete");
    let doc = read_document(input)?;
    let (n, pairs): (usize, Vec<(usize, usize)>) = match doc {
        GraphDocument::Uncolored(g) => (g.node_count(), g.edges().to_vec()),
        GraphDocument::Colored(g) => (
            g.node_count(),
            g.edges().iter().map(|e| (e.from, e.to)).collect(),
        ),
    };
    let mut dedup: Vec<(usize, usize)> = pairs
        .into_iter()
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();
    dedup.sort_unstable();
    dedup.dedup();
    UndirectedGraph::new(n, &dedup).map_err(|e| Failure::input(e.to_string()))
}

fn emit_reduction(artifact: ReductionArtifact, args: &ReduceArgs) -> Result<u8, Failure> {
    let roles_path = args
        .roles
        .clone()
        .or_else(|| args.out.output.as_ref().map(|p| sidecar_path(p)));
    if let Some(path) = roles_path {
        let mut map = serde_json::Map::new();
        for (label, role) in artifact.roles_by_label() {
            map.insert(label, serde_json::Value::from(role));
        }
        let text = serde_json::to_string_pretty(&serde_json::Value::Object(map))
            .expect("role maps serialize");
        std::fs::write(&path, text)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))?;
    }
    let text = GraphDocument::Uncolored(artifact.output).serialize(args.out.format.into());
    write_output(&args.out.output, &text)?;
    Ok(0)
}

fn sidecar_path(output: &Path) -> PathBuf {
    let mut name = output
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "reduction".to_string());
    name.push_str(".roles.json");
    output.with_file_name(name)
}

fn design_budget(args: &DesignArgs) -> DesignBudget {
    let mut budget = DesignBudget::default();
    if let Some(nodes) = args.max_nodes.or_else(|| parse_env("OBSERVA_BUDGET_NODES")) {
        budget.max_nodes = nodes;
    }
    if let Some(ms) = args.max_ms.or_else(|| parse_env("OBSERVA_BUDGET_MS")) {
        budget.max_time = std::time::Duration::from_millis(ms);
    }
    budget
}

fn parse_env(name: &str) -> Option<u64> {
    std::env::var(name).ok().and_then(|v| v.parse().ok())
}

fn run_design(args: DesignArgs) -> Result<u8, Failure> {
    let doc = read_document(&args.input)?;
    let uncolored = doc.into_uncolored();
    let problem = match (args.target, args.full) {
        (DesignTargetArg::Nodes, false) => DesignProblem::NodesForObservability,
        (DesignTargetArg::Nodes, true) => {
            return Err(Failure::input(
                "--full applies to edge coloring; node coloring always targets full observability",
            ))
        }
        (DesignTargetArg::Edges, false) => DesignProblem::EdgesForPartialObservability,
        (DesignTargetArg::Edges, true) => DesignProblem::EdgesForObservability,
    };
    let budget = design_budget(&args);

    if args.min {
        let outcome = design::minimum_colors(&uncolored, problem, &budget);
        return match outcome {
            MinimumColorsOutcome::Found {
                k,
                assignment,
                nodes_explored,
                elapsed,
            } => {
                let result = DesignResult {
                    status: DesignStatus::Feasible(assignment),
                    nodes_explored,
                    elapsed,
                };
                print_design(&result, &uncolored, args.format, Some(k));
                Ok(0)
            }
            MinimumColorsOutcome::BudgetExceeded {
                largest_infeasible,
                nodes_explored,
                elapsed,
            } => {
                match args.format {
                    ReportFormat::Json => println!(
                        "{}",
                        serde_json::json!({
                            "status": "budget_exceeded",
                            "largest_infeasible_k": largest_infeasible,
                            "nodes_explored": nodes_explored,
                            "elapsed_ms": elapsed.as_millis() as u64,
                        })
                    ),
                    ReportFormat::Text => match largest_infeasible {
                        Some(k) => println!("budget exceeded (infeasible up to k = {k})"),
                        None => println!("budget exceeded"),
                    },
                }
                Ok(EXIT_BUDGET)
            }
        };
    }

    let k = args.k.ok_or_else(|| Failure::input("pass --k <K> or --min"))?;
    let result = design::design(&uncolored, problem, k, &budget)
        .map_err(|e| Failure::input(e.to_string()))?;
    let code = match result.status {
        DesignStatus::Feasible(_) => 0,
        DesignStatus::Infeasible => EXIT_NEGATIVE,
        DesignStatus::BudgetExceeded => EXIT_BUDGET,
    };
    print_design(&result, &uncolored, args.format, None);
    Ok(code)
}

fn print_design(
    result: &DesignResult,
    g: &UncoloredDigraph,
    format: ReportFormat,
    k_min: Option<usize>,
) {
    match format {
        ReportFormat::Json => {
            let mut json = design::design_result_json(result, g);
            if let (Some(k), Some(object)) = (k_min, json.as_object_mut()) {
                object.insert("k_min".to_string(), serde_json::Value::from(k));
            }
            println!("{json}");
        }
        ReportFormat::Text => match &result.status {
            DesignStatus::Infeasible => println!("infeasible"),
            DesignStatus::BudgetExceeded => println!("budget exceeded"),
            DesignStatus::Feasible(assignment) => {
                match k_min {
                    Some(k) => println!("k_min: {k}"),
                    None => println!("feasible with {} colors", assignment.k.max(1)),
                }
                match assignment.target {
                    design::ColoringTarget::Nodes => {
                        for (v, &c) in assignment.colors.iter().enumerate() {
                            println!("{} -> c{c}", g.node_label(v));
                        }
                    }
                    design::ColoringTarget::Edges => {
                        for (i, &c) in assignment.colors.iter().enumerate() {
                            let (u, v) = g.edges()[i];
                            println!("{} -> {} : c{c}", g.node_label(u), g.node_label(v));
                        }
                    }
                }
            }
        },
    }
}

fn run_convert(args: ConvertArgs) -> Result<u8, Failure> {
    let doc = read_document(&args.input)?;
    let text = doc.serialize(args.to.into());
    write_output(&args.output, &text)?;
    Ok(0)
}
