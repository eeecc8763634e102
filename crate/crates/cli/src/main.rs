//! `limpack`: compute, verify, generate, reduce and theorem sweeps.
//!
//! Exit codes: 0 success, 1 verification or theorem failure, 2 usage or
//! parse error.

mod generate;
mod input;

use std::fmt;
use std::fs;
use std::io::Write;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use limpack::harness::{
    enumerate_labeled_graphs, run_check, CheckId, Execution, HarnessConfig, Source, Status,
};
use limpack::io::to_graph6;
use limpack::{reduction, verify, Graph, Invariant, InvariantResult, Solver, Value};
use serde_json::{json, Value as Json};

use generate::FamilyParams;
use input::{parse_certificate, read_text, Certificate, FormatArg, GraphInput};

/// Bad input or arguments; exits with code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

#[derive(Parser, Debug)]
#[command(name = "limpack", version, about = "Exact limited-packing and tuple-domination invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Node budget per solve; unset means unlimited
    #[arg(long, env = "LIMPACK_BUDGET")]
    budget: Option<u64>,
    /// Write output here instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<String>,
    /// Human-readable table instead of JSON lines
    #[arg(long)]
    table: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute an invariant with its certificate
    Compute {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        format: FormatArg,
        /// l_k, l_kt, gamma_xk, chi_xk, d_xk, chi2, rho, rho_o (or l2, l2t)
        #[arg(long)]
        invariant: String,
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Check a certificate against a predicate
    Verify {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        format: FormatArg,
        #[arg(long, value_enum)]
        predicate: Predicate,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// JSON file holding `[v, ...]` or `[[v, ...], ...]`
        #[arg(long, value_name = "FILE", conflicts_with = "cert")]
        certificate: Option<String>,
        /// Inline JSON certificate
        #[arg(long, value_name = "JSON")]
        cert: Option<String>,
        #[arg(long, value_name = "FILE")]
        out: Option<String>,
    },
    /// Build a named family or sharpness construction
    Generate {
        #[command(flatten)]
        params: FamilyParams,
        /// Write graph6 here and the sidecar to `<FILE>.json`
        #[arg(long, value_name = "FILE")]
        out: Option<String>,
    },
    /// Build the corona instance of the open-packing reduction
    Reduce {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        format: FormatArg,
        /// Open-packing threshold k of the source instance
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Also solve both sides and check the identity
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Run theorem checks over a graph stream
    Theorems {
        /// Comma-separated check ids or names, or `all`
        #[arg(long, default_value = "all")]
        ids: String,
        #[command(flatten)]
        source: SourceArgs,
        /// Run single-threaded
        #[arg(long)]
        sequential: bool,
        /// Record runtime in the summaries
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Predicate {
    Klp,
    Ktlp,
    Ktd,
    Packing,
    OpenPacking,
    KlpPartition,
    KtdPartition,
    TwoDistanceColoring,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("source").required(true).multiple(false)))]
struct SourceArgs {
    /// All labeled graphs on exactly N vertices (N ≤ 6)
    #[arg(long, value_name = "N", group = "source")]
    exhaustive: Option<usize>,
    /// All labeled graphs on 1..=N vertices (N ≤ 6)
    #[arg(long, value_name = "N", group = "source")]
    exhaustive_upto: Option<usize>,
    /// All unlabeled trees on 1..=N vertices
    #[arg(long, value_name = "N", group = "source")]
    trees: Option<usize>,
    /// Graph file (graph6 lines, or a single DIMACS / edge-list graph)
    #[arg(long, value_name = "FILE", group = "source")]
    graphs: Option<String>,
    /// COUNT seeded G(n, p) graphs
    #[arg(long, value_name = "COUNT", requires = "max_n", group = "source")]
    random: Option<usize>,
    /// COUNT seeded random trees
    #[arg(long, value_name = "COUNT", requires = "max_n", group = "source")]
    random_trees: Option<usize>,
    /// Largest order for --random and --random-trees
    #[arg(long, value_name = "N")]
    max_n: Option<usize>,
    /// Edge probability for --random
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl SourceArgs {
    fn graphs(&self) -> Result<Vec<Graph>> {
        let source = if let Some(n) = self.exhaustive {
            Source::Graphs(enumerate_labeled_graphs(n)?)
        } else if let Some(n) = self.exhaustive_upto {
            Source::Exhaustive { max_n: n }
        } else if let Some(n) = self.trees {
            Source::Trees { max_n: n }
        } else if let Some(path) = &self.graphs {
            Source::Graphs(input::parse_graphs(&read_text(path)?, input::Format::Auto)?)
        } else if let Some(count) = self.random {
            if !(0.0..=1.0).contains(&self.p) {
                return Err(UsageError("--p must lie in [0, 1]".into()).into());
            }
            Source::Random {
                count,
                max_n: self.max_n.unwrap(),
                p: self.p,
                seed: self.seed,
            }
        } else {
            Source::RandomTrees {
                count: self.random_trees.unwrap(),
                max_n: self.max_n.unwrap(),
                seed: self.seed,
            }
        };
        Ok(source.graphs()?)
    }
}

fn emit(out: &Option<String>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {path}")),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}

fn value_text(v: &Value) -> String {
    match v {
        Value::Exact { value } => value.to_string(),
        Value::Undefined => "undefined".into(),
        Value::Incomplete { lower, upper } => format!("[{lower}, {upper}]"),
    }
}

fn compute_record(g: &Graph, r: &InvariantResult) -> Json {
    let mut v = serde_json::to_value(r).expect("result serializes");
    v.as_object_mut()
        .unwrap()
        .insert("graph6".into(), json!(to_graph6(g)));
    v
}

fn cmd_compute(
    input: &GraphInput,
    format: &FormatArg,
    invariant: &str,
    k: Option<usize>,
    common: &Common,
) -> Result<ExitCode> {
    let (inv, implied_k) = Invariant::parse(invariant)
        .ok_or_else(|| UsageError(format!("unknown invariant `{invariant}`")))?;
    let k = match (implied_k, k) {
        (Some(a), Some(b)) if a != b => {
            return Err(UsageError(format!("`{invariant}` fixes k = {a}, got --k {b}")).into())
        }
        (Some(a), _) => a,
        (None, Some(b)) => b,
        (None, None) if inv.takes_k() => {
            return Err(UsageError(format!("`{invariant}` needs --k")).into())
        }
        (None, None) => 1,
    };
    let solver = Solver::with_budget(common.budget);
    let mut text = String::new();
    if common.table {
        text.push_str("graph6\tinvariant\tk\tvalue\tnodes\n");
    }
    for g in input.graphs(format.format)? {
        let r = solver.compute(inv, &g, k)?;
        if common.table {
            let kcol = r.k.map_or("-".to_string(), |k| k.to_string());
            text.push_str(&format!(
                "{}\t{}\t{kcol}\t{}\t{}\n",
                to_graph6(&g),
                inv.name(),
                value_text(&r.value),
                r.nodes_explored
            ));
        } else {
            text.push_str(&compute_record(&g, &r).to_string());
            text.push('\n');
        }
    }
    emit(&common.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    input: &GraphInput,
    format: &FormatArg,
    predicate: Predicate,
    k: usize,
    certificate: &Option<String>,
    cert: &Option<String>,
    out: &Option<String>,
) -> Result<ExitCode> {
    let g = input.graph(format.format)?;
    let text = match (certificate, cert) {
        (Some(path), _) => read_text(path)?,
        (None, Some(inline)) => inline.clone(),
        (None, None) => return Err(UsageError("pass --certificate or --cert".into()).into()),
    };
    let cert = parse_certificate(&text, g.n())?;
    let wrong_shape = |want: &str| UsageError(format!("{predicate:?} expects a {want} certificate"));
    let verdict = match (predicate, &cert) {
        (Predicate::Klp, Certificate::Set(s)) => verify::is_k_limited_packing(&g, s, k)?,
        (Predicate::Ktlp, Certificate::Set(s)) => verify::is_k_total_limited_packing(&g, s, k)?,
        (Predicate::Ktd, Certificate::Set(s)) => verify::is_k_tuple_dominating(&g, s, k)?,
        (Predicate::Packing, Certificate::Set(s)) => verify::is_k_limited_packing(&g, s, 1)?,
        (Predicate::OpenPacking, Certificate::Set(s)) => {
            verify::is_k_total_limited_packing(&g, s, 1)?
        }
        (Predicate::KlpPartition, Certificate::Partition(p)) => verify::is_klp_partition(&g, p, k)?,
        (Predicate::KtdPartition, Certificate::Partition(p)) => verify::is_ktd_partition(&g, p, k)?,
        (Predicate::TwoDistanceColoring, Certificate::Partition(p)) => {
            let ok = verify::is_2distance_coloring(&g, p)?;
            let record = json!({ "predicate": "two-distance-coloring", "result": if ok { "pass" } else { "fail" } });
            emit(out, &format!("{record}\n"))?;
            return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
        (Predicate::KlpPartition | Predicate::KtdPartition | Predicate::TwoDistanceColoring, _) => {
            return Err(wrong_shape("partition").into())
        }
        _ => return Err(wrong_shape("set").into()),
    };
    let name = predicate.to_possible_value().unwrap().get_name().to_string();
    let record = match verdict.violation() {
        None => json!({ "predicate": name, "k": k, "result": "pass" }),
        Some(v) => json!({ "predicate": name, "k": k, "result": "fail", "violation": v }),
    };
    emit(out, &format!("{record}\n"))?;
    Ok(if verdict.is_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_generate(params: &FamilyParams, out: &Option<String>) -> Result<ExitCode> {
    let g = generate::generate(params)?;
    let graph6 = to_graph6(&g.graph);
    match out {
        Some(path) => {
            fs::write(path, format!("{graph6}\n")).with_context(|| format!("writing {path}"))?;
            let sidecar = format!("{path}.json");
            fs::write(&sidecar, format!("{:#}\n", g.sidecar))
                .with_context(|| format!("writing {sidecar}"))?;
        }
        None => emit(&None, &format!("{graph6}\n{}\n", g.sidecar))?,
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_reduce(
    input: &GraphInput,
    format: &FormatArg,
    k: usize,
    check: bool,
    common: &Common,
) -> Result<ExitCode> {
    let solver = Solver::with_budget(common.budget);
    let mut text = String::new();
    let mut failed = false;
    for g in input.graphs(format.format)? {
        let inst = reduction::reduce_op_to_2tlp(&g);
        let mut record = json!({
            "source": to_graph6(&g),
            "target": to_graph6(&inst.target),
            "k": k,
            "k_prime": inst.threshold(k),
        });
        if check {
            let c = reduction::check_reduction_identity(&g, &solver)?;
            failed |= c.holds == Some(false);
            record["identity"] = serde_json::to_value(c)?;
        }
        if common.table {
            let holds = record
                .get("identity")
                .map_or("-".to_string(), |c| c["holds"].to_string());
            text.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                record["source"].as_str().unwrap(),
                record["target"].as_str().unwrap(),
                inst.threshold(k),
                holds
            ));
        } else {
            text.push_str(&record.to_string());
            text.push('\n');
        }
    }
    emit(&common.out, &text)?;
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn cmd_theorems(
    ids: &str,
    source: &SourceArgs,
    sequential: bool,
    timing: bool,
    common: &Common,
) -> Result<ExitCode> {
    let ids = CheckId::parse_list(ids).map_err(|e| UsageError(e.to_string()))?;
    let graphs = source.graphs()?;
    let cfg = HarnessConfig {
        budget: common.budget,
        execution: if sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        },
        timing,
    };
    let mut text = String::new();
    if common.table {
        text.push_str("id\tname\tstatus\ttested\tskipped\tbudget\tfailures\n");
    }
    let mut failed = false;
    for id in ids {
        let r = run_check(id, &graphs, &cfg);
        failed |= r.status == Status::Fail;
        if common.table {
            text.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                r.id,
                r.name,
                if r.passed() { "pass" } else { "FAIL" },
                r.graphs_tested,
                r.graphs_skipped,
                r.skipped_budget,
                r.failure_count
            ));
        } else {
            text.push_str(&r.to_jsonl());
        }
    }
    emit(&common.out, &text)?;
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Compute {
            input,
            format,
            invariant,
            k,
            common,
        } => cmd_compute(input, format, invariant, *k, common),
        Command::Verify {
            input,
            format,
            predicate,
            k,
            certificate,
            cert,
            out,
        } => cmd_verify(input, format, *predicate, *k, certificate, cert, out),
        Command::Generate { params, out } => cmd_generate(params, out),
        Command::Reduce {
            input,
            format,
            k,
            check,
            common,
        } => cmd_reduce(input, format, *k, *check, common),
        Command::Theorems {
            ids,
            source,
            sequential,
            timing,
            common,
        } => cmd_theorems(ids, source, *sequential, *timing, common),
    }
}

fn is_usage(e: &anyhow::Error) -> bool {
    use limpack::Error as E;
    if e.downcast_ref::<UsageError>().is_some() {
        return true;
    }
    matches!(
        e.downcast_ref::<E>(),
        Some(
            E::VertexOutOfRange { .. }
                | E::SelfLoop(_)
                | E::ZeroK
                | E::Unbound { .. }
                | E::InvalidPartition(_)
                | E::TooLarge(_)
                | E::NotATree
                | E::InvalidParameters(_)
                | E::Parse(_)
                | E::UnknownCheck(_)
        )
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(if is_usage(&e) { 2 } else { 1 })
        }
    }
}
