//! The `generate` subcommand: a graph plus a JSON sidecar of intended
//! invariant values and witness certificates.

use anyhow::Result;
use clap::{Args, ValueEnum};
use limpack::io::to_graph6;
use limpack::{families, generators, tree, Graph};
use serde_json::{json, Map, Value as Json};

use crate::UsageError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Path,
    Cycle,
    Star,
    Complete,
    Multipartite,
    CocktailParty,
    RandomTree,
    Gnp,
    Omega,
    Lambda,
    RandomLambda,
    NgCocktail,
    GirthPendantCycle,
    TreeDiff,
    Gap,
}

#[derive(Args, Debug)]
pub struct FamilyParams {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Vertex count (path, cycle, complete, cocktail-party, random-tree, gnp)
    /// or leaf count (star)
    #[arg(long)]
    pub n: Option<usize>,
    /// Edge probability for gnp
    #[arg(long)]
    pub prob: Option<f64>,
    /// Part sizes for multipartite, comma-separated
    #[arg(long, value_delimiter = ',')]
    pub parts: Vec<usize>,
    /// k for omega
    #[arg(long)]
    pub k: Option<usize>,
    /// Block count (omega) or path-length parameter (tree-diff)
    #[arg(long)]
    pub t: Option<usize>,
    /// Remainder (omega) or part count (lambda)
    #[arg(long)]
    pub r: Option<usize>,
    /// Part size for lambda
    #[arg(long)]
    pub s: Option<usize>,
    /// Size parameter for ng-cocktail and gap
    #[arg(long)]
    pub p: Option<usize>,
    /// Cycle length for girth-pendant-cycle
    #[arg(long)]
    pub c_len: Option<usize>,
    /// Pendant positions for girth-pendant-cycle, comma-separated
    #[arg(long, value_delimiter = ',')]
    pub positions: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

pub struct Generated {
    pub graph: Graph,
    pub sidecar: Json,
}

fn need<T: Copy>(v: Option<T>, name: &str, family: Family) -> Result<T> {
    v.ok_or_else(|| {
        let family = family.to_possible_value().unwrap();
        UsageError(format!("--{name} is required for --family {}", family.get_name())).into()
    })
}

fn set_json(s: &limpack::VertexSet) -> Json {
    json!(s.to_vec())
}

fn partition_json(p: &limpack::VertexPartition) -> Json {
    json!(p.classes())
}

pub fn generate(a: &FamilyParams) -> Result<Generated> {
    let f = a.family;
    let mut params = Map::new();
    let mut intended = Map::new();
    let mut certs = Map::new();
    let mut param = |k: &str, v: Json| {
        params.insert(k.to_string(), v);
    };
    let graph = match f {
        Family::Path => {
            let n = need(a.n, "n", f)?;
            param("n", json!(n));
            generators::path(n)?
        }
        Family::Cycle => {
            let n = need(a.n, "n", f)?;
            param("n", json!(n));
            generators::cycle(n)?
        }
        Family::Star => {
            let n = need(a.n, "n", f)?;
            param("n", json!(n));
            generators::star(n)
        }
        Family::Complete => {
            let n = need(a.n, "n", f)?;
            param("n", json!(n));
            generators::complete(n)
        }
        Family::Multipartite => {
            param("parts", json!(a.parts));
            generators::complete_multipartite(&a.parts)?
        }
        Family::CocktailParty => {
            let n = need(a.n, "n", f)?;
            param("n", json!(n));
            generators::complete_minus_perfect_matching(n)?
        }
        Family::RandomTree => {
            let n = need(a.n, "n", f)?;
            param("n", json!(n));
            param("seed", json!(a.seed));
            generators::random_tree(n, a.seed)?
        }
        Family::Gnp => {
            let n = need(a.n, "n", f)?;
            let p = need(a.prob, "prob", f)?;
            if !(0.0..=1.0).contains(&p) {
                return Err(UsageError("--prob must lie in [0, 1]".into()).into());
            }
            param("n", json!(n));
            param("prob", json!(p));
            param("seed", json!(a.seed));
            generators::random_gnp(n, p, a.seed)
        }
        Family::Omega => {
            let (k, t, r) = (need(a.k, "k", f)?, need(a.t, "t", f)?, need(a.r, "r", f)?);
            param("k", json!(k));
            param("t", json!(t));
            param("r", json!(r));
            let spec = families::build_canonical_omega(k, t, r)?;
            let g = spec.assemble()?;
            intended.insert("d_xk".into(), json!({ "k": k, "value": t }));
            certs.insert("d_xk".into(), partition_json(&spec.block_partition()));
            g
        }
        Family::Lambda | Family::RandomLambda => {
            let (r, s) = (need(a.r, "r", f)?, need(a.s, "s", f)?);
            param("r", json!(r));
            param("s", json!(s));
            let g = if f == Family::Lambda {
                families::build_lambda(r, s)?
            } else {
                param("seed", json!(a.seed));
                families::random_lambda(r, s, a.seed)?
            };
            intended.insert("chi_xk".into(), json!({ "k": 2, "value": r }));
            intended.insert("l_k".into(), json!({ "k": 2, "value": s }));
            intended.insert("gamma_xk".into(), json!({ "k": 2, "value": s }));
            certs.insert("chi_xk".into(), partition_json(&families::lambda_partition(r, s)?));
            g
        }
        Family::NgCocktail => {
            let p = need(a.p, "p", f)?;
            param("p", json!(p));
            intended.insert("chi_xk".into(), json!({ "k": 2, "value": p }));
            intended.insert("chi_xk_complement".into(), json!({ "k": 2, "value": 1 }));
            families::ng_cocktail(p)?
        }
        Family::GirthPendantCycle => {
            let c = need(a.c_len, "c-len", f)?;
            param("c_len", json!(c));
            param("positions", json!(a.positions));
            intended.insert("l_kt".into(), json!({ "k": 2, "value": c }));
            families::girth_pendant_cycle(c, &a.positions)?
        }
        Family::TreeDiff => {
            let t = need(a.t, "t", f)?;
            param("t", json!(t));
            let (s, s2) = families::tree_diff_certificates(t)?;
            intended.insert("l_kt".into(), json!({ "k": 2, "value": s.len() }));
            certs.insert("l_kt".into(), set_json(&s));
            // a feasible 2LP set, not a maximum one
            certs.insert("l_k_feasible".into(), set_json(&s2));
            families::tree_diff_sharp(t)?
        }
        Family::Gap => {
            let p = need(a.p, "p", f)?;
            param("p", json!(p));
            let (s, s2) = families::gap_certificates(p)?;
            intended.insert("l_kt".into(), json!({ "k": 2, "value": s.len() }));
            intended.insert("l_k".into(), json!({ "k": 2, "value": s2.len() }));
            certs.insert("l_kt".into(), set_json(&s));
            certs.insert("l_k".into(), set_json(&s2));
            families::gap_graph(p)?
        }
    };
    if graph.n() > 0 && graph.is_tree() && !intended.contains_key("chi_xk") {
        let p = tree::tree_2lp_partition(&graph)?;
        intended.insert("chi_xk".into(), json!({ "k": 2, "value": p.class_count() }));
        certs.insert("chi_xk".into(), partition_json(&p));
    }
    let sidecar = json!({
        "family": f.to_possible_value().unwrap().get_name(),
        "params": params,
        "graph6": to_graph6(&graph),
        "n": graph.n(),
        "m": graph.m(),
        "intended": intended,
        "certificates": certs,
    });
    Ok(Generated { graph, sidecar })
}
