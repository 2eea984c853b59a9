//! `swapcrit`: generate instances, compute best swap edges and critical
//! sets, and run verification campaigns.
//!
//! Exit codes: 0 success, 1 a check failed or engines disagreed, 2 invalid
//! input.

mod corpus;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use swapcrit::bestswap::{best_swaps_for_edge, BestSwapRow, Engine};
use swapcrit::campaign::{
    exhaustive_corpus, parse_checks, run_campaign, CampaignConfig, LabeledInstance,
    VerificationReport,
};
use swapcrit::critical::{
    compute_pairs, construct_critical_set, min_critical_set_size, proof_trace, ProofTrace,
};
use swapcrit::instances::{
    export_dot, gen_instance, read_instance, write_instance, GenSpec, Highlight, Instance, Model,
    TreeMethod,
};
use swapcrit::stretch::stretch_factor;
use swapcrit::{CutContext, EdgeId, Graph, OrientedSwapEdge};

#[derive(Parser)]
#[command(
    name = "swapcrit",
    version,
    about = "Best swap edges and critical sets of spanning trees"
)]
struct Cli {
    /// Worker threads for campaigns (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random instance and write it as a .gts file.
    Gen(GenArgs),
    /// Run verification checks over a file, a random corpus, or an
    /// exhaustive enumeration.
    Verify(VerifyArgs),
    /// Best swap edges of every tree edge.
    BestSwaps(BestSwapsArgs),
    /// Critical set of one tree edge.
    CriticalSet(CriticalSetArgs),
    /// Stretch factor of the instance's tree.
    Stretch(StretchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    CycleChords,
    Augment,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeArg {
    Uniform,
    Bfs,
    Dfs,
}

#[derive(clap::Args)]
struct GenArgs {
    #[arg(long, value_enum, default_value = "cycle-chords")]
    model: ModelArg,
    #[arg(long)]
    n: usize,
    /// Chord count (cycle-chords).
    #[arg(long, default_value_t = 0)]
    chords: usize,
    /// Edge probability (augment).
    #[arg(long, default_value_t = 0.15)]
    density: f64,
    #[arg(long, value_enum, default_value = "uniform")]
    tree: TreeArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(clap::Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["input", "random", "exhaustive"])))]
struct VerifyArgs {
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// e.g. `n=8..40,chords=2..40,count=300,seed=1`
    #[arg(long)]
    random: Option<String>,
    /// e.g. `n=5,cap=50`
    #[arg(long)]
    exhaustive: Option<String>,
    /// Comma-separated: oracle, claim15, lemma, theorem, bestswap,
    /// proof-trace, phi, or all.
    #[arg(long, default_value = "all")]
    checks: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Print the JSON report instead of the text summary.
    #[arg(long)]
    json: bool,
    /// Directory for counterexample .gts files.
    #[arg(long, default_value = "counterexamples")]
    out_dir: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Oracle,
    Pairs,
    Both,
}

#[derive(clap::Args)]
struct BestSwapsArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "pairs")]
    engine: EngineArg,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(clap::Args)]
struct CriticalSetArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Tree edge as `u,v`.
    #[arg(long)]
    edge: String,
    /// Append the step-by-step replay of the construction argument.
    #[arg(long)]
    trace: bool,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(clap::Args)]
struct StretchArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    dot: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(err) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Verify(a) => cmd_verify(a),
        Command::BestSwaps(a) => cmd_best_swaps(a),
        Command::CriticalSet(a) => cmd_critical_set(a),
        Command::Stretch(a) => cmd_stretch(a),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> Result<Instance> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    read_instance(&text).with_context(|| format!("loading {}", path.display()))
}

fn write_dot(
    path: Option<&Path>,
    g: &Graph,
    inst: &Instance,
    highlights: &[Highlight<'_>],
) -> Result<()> {
    if let Some(path) = path {
        fs::write(path, export_dot(g, &inst.tree, highlights))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn label(g: &Graph, s: &OrientedSwapEdge) -> String {
    g.edge_label(s.edge)
}

fn labels(g: &Graph, set: &[OrientedSwapEdge]) -> Vec<String> {
    set.iter().map(|s| label(g, s)).collect()
}

fn cmd_gen(a: GenArgs) -> Result<ExitCode> {
    let model = match a.model {
        ModelArg::CycleChords => Model::CycleChords,
        ModelArg::Augment => Model::Augment,
    };
    let tree = match a.tree {
        TreeArg::Uniform => TreeMethod::UniformRandom,
        TreeArg::Bfs => TreeMethod::Bfs,
        TreeArg::Dfs => TreeMethod::Dfs,
    };
    let spec = GenSpec {
        model,
        n: a.n,
        chords: a.chords,
        density: a.density,
        tree,
        seed: a.seed,
    };
    let inst = gen_instance(&spec)?;
    fs::write(&a.out, write_instance(&inst.graph, &inst.tree))
        .with_context(|| format!("writing {}", a.out.display()))?;
    write_dot(a.dot.as_deref(), &inst.graph, &inst, &[])?;
    println!("{}", a.out.display());
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(a: VerifyArgs) -> Result<ExitCode> {
    let checks = parse_checks(&a.checks).map_err(|e| anyhow!(e))?;
    let config = CampaignConfig::new(checks, a.seed);
    let start = Instant::now();
    let mut report = if let Some(path) = &a.input {
        let instance = load(path)?;
        let label = path
            .file_stem()
            .map_or_else(|| "input".to_string(), |s| s.to_string_lossy().into_owned());
        run_campaign([LabeledInstance { label, instance }], &config)
    } else if let Some(spec) = &a.random {
        let spec = corpus::parse_random(spec, a.seed)?;
        run_campaign(spec.build()?, &config)
    } else if let Some(spec) = &a.exhaustive {
        let (n, cap) = corpus::parse_exhaustive(spec)?;
        run_campaign(exhaustive_corpus(n, cap)?, &config)
    } else {
        bail!("no corpus selected");
    };
    let wall_clock_ms = start.elapsed().as_millis() as u64;

    if !report.counterexamples.is_empty() {
        fs::create_dir_all(&a.out_dir)
            .with_context(|| format!("creating {}", a.out_dir.display()))?;
        for cx in &mut report.counterexamples {
            let path = a.out_dir.join(format!("{}-{}.gts", cx.instance, cx.check));
            let body = format!(
                "# {} failed on tree edge {}: {}\n{}",
                cx.check, cx.edge, cx.detail, cx.gts
            );
            fs::write(&path, body).with_context(|| format!("writing {}", path.display()))?;
            cx.file = Some(path.display().to_string());
        }
    }

    let mut doc = serde_json::to_value(&report)?;
    doc["wall_clock_ms"] = json!(wall_clock_ms);
    if let Some(path) = &a.report {
        fs::write(path, serde_json::to_string_pretty(&doc)? + "\n")
            .with_context(|| format!("writing {}", path.display()))?;
    }
    if a.json {
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        print_summary(&report, wall_clock_ms);
    }
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn print_summary(r: &VerificationReport, wall_clock_ms: u64) {
    println!(
        "instances {}  tree edges {}  swap pairs {}  ({} ms)",
        r.instances, r.tree_edges, r.swap_pairs, wall_clock_ms
    );
    println!("{:<12} {:>10} {:>10}", "check", "passed", "failed");
    for (name, t) in &r.tally {
        println!("{:<12} {:>10} {:>10}", name, t.passed, t.failed);
    }
    let names: Vec<&str> = r.checks.iter().map(|c| c.name()).collect();
    if names.contains(&"oracle") {
        let o = &r.oracle;
        println!(
            "oracle: {}/{} pairs agree; side-stretch decomposition failures {}; swap-edge-only disagreements {}",
            o.agree, o.pairs, o.decomposition_failures, o.cut_restricted_disagree
        );
    }
    if names.contains(&"claim15") {
        let c = &r.claim15;
        println!(
            "claim15: PASS-CANONICAL {}  PASS-ALTERNATIVE {}  VIOLATION {}",
            c.pass_canonical, c.pass_alternative, c.violation
        );
    }
    if names.contains(&"lemma") {
        let l = &r.lemma;
        println!(
            "lemma: {} mismatch edges (first {}, second {}, both {}, vacuous {}), violations {}",
            l.mismatch_edges, l.first, l.second, l.both, l.vacuous, l.violations
        );
    }
    if names.contains(&"theorem") {
        let th = &r.theorem;
        println!(
            "theorem: cases {:?}; min critical set sizes {:?}; max {}",
            th.case_histogram, th.min_size_histogram, th.max_min_size
        );
    }
    if names.contains(&"proof-trace") {
        println!(
            "proof-trace: cases {:?}; third mismatch {}",
            r.proof_trace.case_histogram, r.proof_trace.third_mismatch
        );
    }
    if names.contains(&"phi") {
        println!(
            "phi: {} samples, {} violations",
            r.phi.samples,
            r.phi.violations()
        );
    }
    for cx in &r.counterexamples {
        println!(
            "counterexample {} [{}] edge {}: {} -> {}",
            cx.instance,
            cx.check,
            cx.edge,
            cx.detail,
            cx.file.as_deref().unwrap_or("-")
        );
    }
}

fn row_json(g: &Graph, row: &BestSwapRow) -> Value {
    json!({
        "edge": g.edge_label(row.e),
        "value": row.value.to_string(),
        "argmin": labels(g, &row.argmin),
        "engine": row.engine,
    })
}

fn cmd_best_swaps(a: BestSwapsArgs) -> Result<ExitCode> {
    let inst = load(&a.input)?;
    let g = &*inst.graph;
    let t = &inst.tree;
    let mut rows = Vec::new();
    let mut disagreements = 0;
    for &e in t.edge_ids() {
        let (primary, verdict) = match a.engine {
            EngineArg::Oracle => (best_swaps_for_edge(g, t, e, Engine::Oracle)?, None),
            EngineArg::Pairs => (best_swaps_for_edge(g, t, e, Engine::Pairs)?, None),
            EngineArg::Both => {
                let oracle = best_swaps_for_edge(g, t, e, Engine::Oracle)?;
                let pairs = best_swaps_for_edge(g, t, e, Engine::Pairs)?;
                let agree = oracle.value == pairs.value && oracle.argmin == pairs.argmin;
                if !agree {
                    disagreements += 1;
                }
                (oracle, Some((agree, pairs)))
            }
        };
        rows.push((primary, verdict));
    }
    let argmin_ids: Vec<EdgeId> = rows
        .iter()
        .flat_map(|(r, _)| r.argmin.iter().map(|f| f.edge))
        .collect();
    write_dot(
        a.dot.as_deref(),
        g,
        &inst,
        &[Highlight {
            name: "best-swap",
            color: "red",
            edges: &argmin_ids,
        }],
    )?;
    if a.json {
        let doc: Vec<Value> = rows
            .iter()
            .map(|(r, v)| {
                let mut obj = row_json(g, r);
                if let Some((agree, pairs)) = v {
                    obj["pairs"] = row_json(g, pairs);
                    obj["verdict"] = json!(if *agree { "AGREE" } else { "DISAGREE" });
                }
                obj
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        for (r, v) in &rows {
            let mut line = format!(
                "{:<8} {:>6}  {}",
                g.edge_label(r.e),
                r.value.to_string(),
                labels(g, &r.argmin).join(" ")
            );
            if let Some((agree, _)) = v {
                line.push_str(if *agree { "  AGREE" } else { "  DISAGREE" });
            }
            println!("{line}");
        }
    }
    Ok(if disagreements == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn parse_edge(g: &Graph, spec: &str) -> Result<EdgeId> {
    let (u, v) = spec
        .split_once(',')
        .ok_or_else(|| anyhow!("--edge expects `u,v`, got `{spec}`"))?;
    let u: usize = u
        .trim()
        .parse()
        .with_context(|| format!("bad vertex `{u}`"))?;
    let v: usize = v
        .trim()
        .parse()
        .with_context(|| format!("bad vertex `{v}`"))?;
    g.edge_id(u, v)
        .ok_or_else(|| anyhow!("{u}-{v} is not an edge of the graph"))
}

fn cmd_critical_set(a: CriticalSetArgs) -> Result<ExitCode> {
    let inst = load(&a.input)?;
    let g = &*inst.graph;
    let t = &inst.tree;
    let e = parse_edge(g, &a.edge)?;
    let cut = CutContext::new(g, t, e)?;
    let pairs = compute_pairs(&cut, t)?;
    let built = construct_critical_set(&cut, t, &pairs)?;
    let min = min_critical_set_size(&cut, t)?;
    let trace = a.trace.then(|| proof_trace(&cut, t, &pairs));

    let set_ids: Vec<EdgeId> = built.edges.iter().map(|s| s.edge).collect();
    write_dot(
        a.dot.as_deref(),
        g,
        &inst,
        &[
            Highlight {
                name: "failed",
                color: "blue",
                edges: &[e],
            },
            Highlight {
                name: "critical",
                color: "red",
                edges: &set_ids,
            },
        ],
    )?;
    if a.json {
        let mut doc = json!({
            "edge": g.edge_label(e),
            "set": labels(g, &built.edges),
            "case": built.case,
            "iterations": built.iterations,
            "verified": built.verified,
            "min_size": min,
        });
        if let Some(tr) = &trace {
            doc["trace"] = serde_json::to_value(tr)?;
        }
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        println!("edge {}", g.edge_label(e));
        println!("set {}", labels(g, &built.edges).join(" "));
        println!(
            "case {}",
            serde_json::to_value(built.case)?.as_str().unwrap_or("?")
        );
        println!("iterations {}", built.iterations);
        println!("verified {}", built.verified);
        println!("min-size {min}");
        if let Some(tr) = &trace {
            print_trace(tr);
        }
    }
    Ok(if built.verified && min <= 6 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn print_trace(tr: &ProofTrace) {
    println!(
        "trace case {}",
        serde_json::to_value(tr.case)
            .ok()
            .and_then(|v| v.as_str().map(str::to_owned))
            .unwrap_or_default()
    );
    let step = |name: &str, s: &Option<swapcrit::critical::TraceStep>| match s {
        None => println!("trace {name} NONE"),
        Some(s) => println!(
            "trace {name} ({},{}) condition {:?} constancy-failures {:?}",
            s.keep, s.other, s.condition, s.constancy_failures
        ),
    };
    step("e'", &tr.first);
    step("e''", &tr.second);
    match tr.third {
        None => println!("trace e''' NONE"),
        Some((a, b)) => println!("trace e''' ({a},{b})"),
    }
    for a in &tr.anomalies {
        println!("trace anomaly {a}");
    }
}

fn cmd_stretch(a: StretchArgs) -> Result<ExitCode> {
    let inst = load(&a.input)?;
    write_dot(a.dot.as_deref(), &inst.graph, &inst, &[])?;
    println!("{}", stretch_factor(&inst.graph, &inst.tree));
    Ok(ExitCode::SUCCESS)
}
