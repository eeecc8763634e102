//! Theorem sweeps over graph streams with JSON-lines reports.
//!
//! Each check classifies every graph as passed, failed (with the observed
//! values) or skipped (filter miss or exhausted budget). Results are
//! computed in parallel when enabled but always aggregated in input order,
//! so reports are byte-identical across runs and execution modes.

mod checks;
pub mod enumerate;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value as Json;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::to_graph6;
use crate::solve::Solver;

pub use enumerate::{enumerate_labeled_graphs, enumerate_trees, tree_canonical_form, Source};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    T10,
    T11,
    T12,
    T13,
    T14,
    T15,
}

impl CheckId {
    pub const ALL: [CheckId; 15] = [
        CheckId::T1,
        CheckId::T2,
        CheckId::T3,
        CheckId::T4,
        CheckId::T5,
        CheckId::T6,
        CheckId::T7,
        CheckId::T8,
        CheckId::T9,
        CheckId::T10,
        CheckId::T11,
        CheckId::T12,
        CheckId::T13,
        CheckId::T14,
        CheckId::T15,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::T1 => "duality-chain",
            CheckId::T2 => "omega-characterization",
            CheckId::T3 => "tree-formula",
            CheckId::T4 => "lambda-bound",
            CheckId::T5 => "chi2-half",
            CheckId::T6 => "ng-lower",
            CheckId::T7 => "lex-l2",
            CheckId::T8 => "lex-chi",
            CheckId::T9 => "reduction-identity",
            CheckId::T10 => "girth-bound",
            CheckId::T11 => "total-ng",
            CheckId::T12 => "tree-gap",
            CheckId::T13 => "leaf-lemma",
            CheckId::T14 => "l2-vs-gamma",
            CheckId::T15 => "cited-ng-l2",
        }
    }

    /// Parses a comma-separated list such as `T1,T3` or `all`.
    pub fn parse_list(s: &str) -> Result<Vec<CheckId>> {
        if s.trim().eq_ignore_ascii_case("all") {
            return Ok(CheckId::ALL.to_vec());
        }
        s.split(',').map(|p| p.trim().parse()).collect()
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<CheckId> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.to_string().eq_ignore_ascii_case(s) || c.name() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

impl Serialize for CheckId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SkipReason {
    Filter,
    Budget,
}

/// Per-graph result of a check.
#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    /// Tags name notable cases (e.g. a bound attained) and are tallied.
    Pass(Vec<&'static str>),
    Fail(Json),
    Skip(SkipReason),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Rayon work sharing; identical to `Sequential` without the `parallel` feature.
    #[default]
    Parallel,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct HarnessConfig {
    pub budget: Option<u64>,
    pub execution: Execution,
    /// Record wall-clock time in the summaries (breaks byte-identity).
    pub timing: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub graph6: String,
    pub observed: Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremReport {
    pub id: CheckId,
    pub name: &'static str,
    pub status: Status,
    pub graphs_tested: usize,
    pub graphs_skipped: usize,
    pub skipped_budget: usize,
    #[serde(skip)]
    pub failures: Vec<Failure>,
    pub failure_count: usize,
    /// Tag tallies over passing graphs.
    pub notes: BTreeMap<&'static str, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn note(&self, tag: &str) -> usize {
        self.notes.get(tag).copied().unwrap_or(0)
    }

    /// One `failure` object per failing graph, then the `summary` object.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for f in &self.failures {
            let line = serde_json::json!({
                "kind": "failure",
                "id": self.id,
                "graph6": f.graph6,
                "observed": f.observed,
            });
            out.push_str(&line.to_string());
            out.push('\n');
        }
        let mut summary = serde_json::to_value(self).expect("report serializes");
        summary
            .as_object_mut()
            .unwrap()
            .insert("kind".into(), Json::from("summary"));
        out.push_str(&summary.to_string());
        out.push('\n');
        out
    }
}

/// Solver access shared by all checks.
pub(crate) struct Ctx {
    pub solver: Solver,
}

fn map_outcomes<F>(graphs: &[Graph], execution: Execution, f: F) -> Vec<Outcome>
where
    F: Fn(&Graph) -> Outcome + Sync + Send,
{
    match execution {
        Execution::Sequential => graphs.iter().map(f).collect(),
        Execution::Parallel => {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                graphs.par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                graphs.iter().map(f).collect()
            }
        }
    }
}

/// Runs one check over `graphs`.
pub fn run_check(id: CheckId, graphs: &[Graph], config: &HarnessConfig) -> TheoremReport {
    let start = Instant::now();
    let ctx = Ctx {
        solver: Solver::with_budget(config.budget),
    };
    let outcomes = map_outcomes(graphs, config.execution, |g| checks::evaluate(id, g, &ctx));
    let mut report = TheoremReport {
        id,
        name: id.name(),
        status: Status::Pass,
        graphs_tested: 0,
        graphs_skipped: 0,
        skipped_budget: 0,
        failures: Vec::new(),
        failure_count: 0,
        notes: BTreeMap::new(),
        runtime_ms: None,
    };
    for (g, outcome) in graphs.iter().zip(outcomes) {
        match outcome {
            Outcome::Pass(tags) => {
                report.graphs_tested += 1;
                for t in tags {
                    *report.notes.entry(t).or_default() += 1;
                }
            }
            Outcome::Fail(observed) => {
                report.graphs_tested += 1;
                report.failures.push(Failure {
                    graph6: to_graph6(g),
                    observed,
                });
            }
            Outcome::Skip(reason) => {
                report.graphs_skipped += 1;
                if reason == SkipReason::Budget {
                    report.skipped_budget += 1;
                }
            }
        }
    }
    report.failure_count = report.failures.len();
    if !report.failures.is_empty() {
        report.status = Status::Fail;
    }
    if config.timing {
        report.runtime_ms = Some(start.elapsed().as_millis() as u64);
    }
    report
}

/// Runs every check in `ids` over the same stream.
pub fn run_checks(ids: &[CheckId], source: &Source, config: &HarnessConfig) -> Result<Vec<TheoremReport>> {
    let graphs = source.graphs()?;
    Ok(ids.iter().map(|&id| run_check(id, &graphs, config)).collect())
}

/// Evaluates one check on one graph.
pub fn evaluate(id: CheckId, g: &Graph, budget: Option<u64>) -> Outcome {
    checks::evaluate(
        id,
        g,
        &Ctx {
            solver: Solver::with_budget(budget),
        },
    )
}
