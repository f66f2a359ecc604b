//! Command-line surface: group analysis, graph realizability decisions, and
//! corpus verification.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use codegree::analysis::{analyze, AnalysisConfig, AnalyzeError};
use codegree::checks::{corpus_from_dir, default_corpus, run_corpus};
use codegree::error::{BuildError, GraphError, GroupError};
use codegree::graph::{
    graph_from_json, graph_to_json, is_minimal_codegree_graph, is_realizable_codegree, to_dot,
    LabeledGraph,
};
use codegree::spec::{alias_spec, builtin_aliases, GroupSpec};

const EXIT_VERDICT: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "codegree",
    about = "Character codegree graphs, prime graphs, and Frobenius digraphs of finite groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct CommonOpts {
    /// Character table cache directory (populated on demand).
    #[arg(long, env = "CODEGREE_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    /// Element enumeration limit.
    #[arg(long, env = "CODEGREE_LIMIT", default_value_t = 2_000_000)]
    limit: usize,

    /// Conjugation retries in the Hall subgroup search.
    #[arg(long, env = "CODEGREE_HALL_RETRIES", default_value_t = 64)]
    hall_retries: usize,

    /// Write output to this file (atomically) instead of stdout.
    #[arg(long, env = "CODEGREE_OUT")]
    out: Option<PathBuf>,
}

impl CommonOpts {
    fn config(&self) -> AnalysisConfig {
        AnalysisConfig {
            limit: self.limit,
            hall_retries: self.hall_retries,
            cache_dir: self.cache_dir.clone(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a group from a spec file or builtin alias and report its order,
    /// classes, degrees, codegrees, graphs, and Frobenius digraph.
    Analyze {
        /// Spec file path or builtin alias (s3, s4, a4, a5, s5, d8, q8, z6,
        /// f21, f42, qian:Q,R, five-cycle).
        spec: String,

        #[arg(long, env = "CODEGREE_FORMAT", value_enum, default_value_t = Format::Text)]
        format: Format,

        #[command(flatten)]
        common: CommonOpts,
    },
    /// Decide whether a graph occurs as a codegree graph, with a witness and
    /// the minimality verdict.
    Realizable {
        /// Graph JSON file path, or an inline edge list like "2-3,3-5,7"
        /// (bare primes are isolated vertices).
        graph: String,

        /// Exit nonzero when the graph is not realizable.
        #[arg(long)]
        expect_realizable: bool,

        #[command(flatten)]
        common: CommonOpts,
    },
    /// Run every check over a corpus of spec files (or the default builtin
    /// corpus) and write the report.
    Verify {
        /// Directory of *.json spec files; the builtin corpus when omitted.
        corpus: Option<PathBuf>,

        #[command(flatten)]
        common: CommonOpts,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(classify_error(&e))
        }
    }
}

fn classify_error(e: &anyhow::Error) -> u8 {
    for cause in e.chain() {
        if let Some(g) = cause.downcast_ref::<GroupError>() {
            return match g {
                GroupError::LimitExceeded { .. } => EXIT_RESOURCE,
                GroupError::MixedRealization { .. } => EXIT_USAGE,
                _ => EXIT_VERDICT,
            };
        }
        if let Some(b) = cause.downcast_ref::<BuildError>() {
            return match b {
                BuildError::Parse(_) => EXIT_USAGE,
                BuildError::Group(GroupError::LimitExceeded { .. }) => EXIT_RESOURCE,
                _ => EXIT_VERDICT,
            };
        }
        if let Some(a) = cause.downcast_ref::<AnalyzeError>() {
            return match a {
                AnalyzeError::Build(BuildError::Parse(_)) => EXIT_USAGE,
                AnalyzeError::Build(BuildError::Group(GroupError::LimitExceeded { .. })) => {
                    EXIT_RESOURCE
                }
                AnalyzeError::Group(GroupError::LimitExceeded { .. }) => EXIT_RESOURCE,
                _ => EXIT_VERDICT,
            };
        }
        if cause.downcast_ref::<GraphError>().is_some()
            || cause.downcast_ref::<std::io::Error>().is_some()
        {
            return EXIT_USAGE;
        }
    }
    EXIT_VERDICT
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Analyze { spec, format, common } => cmd_analyze(&spec, format, &common),
        Command::Realizable { graph, expect_realizable, common } => {
            cmd_realizable(&graph, expect_realizable, &common)
        }
        Command::Verify { corpus, common } => cmd_verify(corpus.as_deref(), &common),
    }
}

fn load_spec(arg: &str) -> Result<(String, GroupSpec)> {
    if builtin_aliases().contains(&arg) || arg.starts_with("qian:") {
        return Ok((arg.to_string(), alias_spec(arg)?));
    }
    let path = Path::new(arg);
    if path.exists() {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading spec file {}", path.display()))?;
        let spec = GroupSpec::from_json(&text)
            .map_err(|e| anyhow!(e).context(format!("parsing spec file {}", path.display())))?;
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        return Ok((name, spec));
    }
    Err(anyhow!(BuildError::Parse(format!("no such spec file or alias: {arg}"))))
}

fn emit(common: &CommonOpts, text: &str) -> Result<()> {
    match &common.out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => write_atomic(path, text),
    }
}

fn write_atomic(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, text)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

fn fmt_set(values: &[u64]) -> String {
    let items: Vec<String> = values.iter().map(u64::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn fmt_graph(g: &LabeledGraph) -> String {
    let edges: Vec<String> = g.edges.iter().map(|(a, b)| format!("{{{a},{b}}}")).collect();
    format!("vertices {}, edges {{{}}}", fmt_set(&g.vertices), edges.join(", "))
}

fn cmd_analyze(spec_arg: &str, format: Format, common: &CommonOpts) -> Result<u8> {
    let (name, spec) = load_spec(spec_arg)?;
    let a = analyze(&spec, &common.config()).with_context(|| format!("analyzing {name}"))?;
    let arcs: Vec<String> =
        a.digraph.digraph.arcs.iter().map(|(x, y)| format!("{x}->{y}")).collect();
    let text = match format {
        Format::Text => {
            let mut s = String::new();
            s.push_str(&format!("group {name}\n"));
            s.push_str(&format!("  spec digest: {}\n", a.digest));
            s.push_str(&format!("  order: {}\n", a.order));
            s.push_str(&format!("  classes: {}\n", a.table.class_count()));
            s.push_str(&format!(
                "  character table: {}\n",
                if a.table_from_cache { "cache hit (0 computed)" } else { "computed (1 computed)" }
            ));
            s.push_str(&format!("  degrees: {:?}\n", a.table.degrees()));
            s.push_str(&format!("  cod = {}\n", fmt_set(&a.table.codegrees)));
            s.push_str(&format!("  prime graph:    {}\n", fmt_graph(&a.prime_graph)));
            s.push_str(&format!("  codegree graph: {}\n", fmt_graph(&a.codegree_graph)));
            s.push_str(&format!(
                "  comparison: {}\n",
                if a.prime_graph == a.codegree_graph { "Γ = Γe" } else { "Γe ⊊ Γ" }
            ));
            s.push_str(&format!("  frobenius digraph: {}\n", if arcs.is_empty() {
                "(no arcs)".to_string()
            } else {
                arcs.join(", ")
            }));
            if !a.digraph.skipped.is_empty() {
                s.push_str(&format!("  skipped pairs (no Hall subgroup): {:?}\n", a.digraph.skipped));
            }
            s
        }
        Format::Json => {
            let doc = serde_json::json!({
                "name": name,
                "digest": a.digest,
                "order": a.order,
                "class_count": a.table.class_count(),
                "table_from_cache": a.table_from_cache,
                "tables_computed": if a.table_from_cache { 0 } else { 1 },
                "solvable": a.solvable,
                "degrees": a.table.degrees(),
                "codegrees": a.table.codegrees,
                "kernel_orders": a.table.kernel_orders(),
                "prime_graph": serde_json::from_str::<serde_json::Value>(&graph_to_json(&a.prime_graph))?,
                "codegree_graph": serde_json::from_str::<serde_json::Value>(&graph_to_json(&a.codegree_graph))?,
                "digraph_arcs": a.digraph.digraph.arcs,
                "digraph_skipped": a.digraph.skipped,
            });
            let mut s = serde_json::to_string_pretty(&doc)?;
            s.push('\n');
            s
        }
        Format::Dot => to_dot(&a.codegree_graph, Some(&a.digraph.digraph), &name),
    };
    emit(common, &text)?;
    Ok(0)
}

fn parse_inline_graph(arg: &str) -> Result<LabeledGraph> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for token in arg.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match token.split_once('-') {
            Some((a, b)) => {
                let p: u64 = a.trim().parse().map_err(|_| {
                    anyhow!(GraphError::Parse(format!("bad vertex in edge: {token}")))
                })?;
                let q: u64 = b.trim().parse().map_err(|_| {
                    anyhow!(GraphError::Parse(format!("bad vertex in edge: {token}")))
                })?;
                vertices.push(p);
                vertices.push(q);
                edges.push((p, q));
            }
            None => vertices.push(token.parse().map_err(|_| {
                anyhow!(GraphError::Parse(format!("bad vertex: {token}")))
            })?),
        }
    }
    Ok(LabeledGraph::new(vertices, edges))
}

fn cmd_realizable(arg: &str, expect: bool, common: &CommonOpts) -> Result<u8> {
    let path = Path::new(arg);
    let graph = if path.exists() {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading graph file {}", path.display()))?;
        graph_from_json(&text).map_err(anyhow::Error::from)?
    } else {
        parse_inline_graph(arg)?
    };
    let decision = is_realizable_codegree(&graph);
    let mut s = String::new();
    s.push_str(&format!("graph: {}\n", fmt_graph(&graph)));
    if decision.realizable {
        s.push_str("realizable: yes\n");
        if let Some(coloring) = &decision.coloring {
            let w: Vec<String> = coloring.iter().map(|(v, c)| format!("{v}:{c}")).collect();
            s.push_str(&format!("  complement 3-coloring: {}\n", w.join(" ")));
        }
        let minimality = is_minimal_codegree_graph(&graph).expect("realizable input");
        s.push_str(&format!(
            "minimal: {}\n",
            if minimality.minimal { "yes" } else { "no" }
        ));
        if let Some(e) = minimality.witness_edge {
            s.push_str(&format!("  removable edge: {{{},{}}}\n", e.0, e.1));
        }
        if minimality.readings_disagree {
            s.push_str(&format!(
                "  note: vertex-pair-deletion reading disagrees (gives {})\n",
                minimality.vertex_deletion_verdict
            ));
        }
    } else {
        s.push_str("realizable: no\n");
        if let Some(t) = decision.complement_triangle {
            s.push_str(&format!("  complement triangle: {{{}, {}, {}}}\n", t[0], t[1], t[2]));
        }
        if decision.coloring_exhausted {
            s.push_str("  exhausted all 3-colorings of the complement\n");
        }
    }
    emit(common, &s)?;
    Ok(if expect && !decision.realizable { EXIT_VERDICT } else { 0 })
}

fn cmd_verify(corpus: Option<&Path>, common: &CommonOpts) -> Result<u8> {
    let entries = match corpus {
        Some(dir) => corpus_from_dir(dir)
            .with_context(|| format!("reading corpus directory {}", dir.display()))?,
        None => default_corpus(),
    };
    let report = run_corpus(&entries, &common.config());
    let out_path = common.out.clone().unwrap_or_else(|| PathBuf::from("codegree-report.json"));
    write_atomic(&out_path, &report.to_json())?;
    let mut summary = String::new();
    for entry in &report.entries {
        let (mut pass, mut fail, mut skip) = (0, 0, 0);
        for c in &entry.checks {
            match c.status {
                codegree::checks::CheckStatus::Pass => pass += 1,
                codegree::checks::CheckStatus::Fail => fail += 1,
                codegree::checks::CheckStatus::Skipped => skip += 1,
            }
        }
        match &entry.build_error {
            Some(e) => summary.push_str(&format!("{}: BUILD ERROR: {e}\n", entry.name)),
            None => summary.push_str(&format!(
                "{}: order {}, {} pass / {} fail / {} skipped\n",
                entry.name,
                entry.order.unwrap_or(0),
                pass,
                fail,
                skip
            )),
        }
    }
    summary.push_str(&format!(
        "tables computed: {}, cache hits: {}\n",
        report.stats.tables_computed, report.stats.cache_hits
    ));
    summary.push_str(&format!("report written to {}\n", out_path.display()));
    summary.push_str(&format!(
        "verdict: {}\n",
        if report.has_enforced_failure() { "FAIL" } else { "ok" }
    ));
    print!("{summary}");
    Ok(if report.has_enforced_failure() { EXIT_VERDICT } else { 0 })
}
