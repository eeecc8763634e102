//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line (bypassing
//! the test harness's output capture) and then asserts.

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::Naive;
use limpack::families::{self, OmegaSpec};
use limpack::generators::{complete, path};
use limpack::harness::{
    enumerate_labeled_graphs, enumerate_trees, run_check, CheckId, HarnessConfig, Source,
};
use limpack::io::to_graph6;
use limpack::{ops, reduction, tree, verify, Graph, Invariant, Solver, VertexPartition};

fn line(id: u32, title: &str, ok: bool, detail: &str, elapsed: Duration) {
    let status = if ok { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    writeln!(
        out,
        "acceptance {id} [{status}] {title}: {detail} ({:.1}s)",
        elapsed.as_secs_f64()
    )
    .unwrap();
}

fn exact(s: &Solver, inv: Invariant, g: &Graph, k: usize) -> usize {
    s.compute(inv, g, k).unwrap().exact().unwrap()
}

/// Solver vs oracle on one graph; returns a mismatch description.
fn compare_with_oracle(g: &Graph, s: &Solver) -> Option<String> {
    let o = Naive::new(g);
    let parts = o.set_partitions();
    let mut checks: Vec<(String, Option<usize>, Option<usize>)> = vec![
        ("rho".into(), Some(o.rho()), s.rho(g).unwrap().exact()),
        ("rho_o".into(), Some(o.rho_o()), s.rho_o(g).unwrap().exact()),
        ("chi2".into(), Some(o.chi2(&parts)), s.chi2(g).unwrap().exact()),
    ];
    for k in 1..=3 {
        checks.push((format!("l_k{k}"), Some(o.l_k(k)), s.l_k(g, k).unwrap().exact()));
        checks.push((format!("l_kt{k}"), Some(o.l_kt(k)), s.l_kt(g, k).unwrap().exact()));
        checks.push((format!("gamma_x{k}"), o.gamma_xk(k), s.gamma_xk(g, k).unwrap().exact()));
        checks.push((format!("chi_x{k}"), Some(o.chi_xk(k, &parts)), s.chi_xk(g, k).unwrap().exact()));
        checks.push((format!("d_x{k}"), o.d_xk(k, &parts), s.d_xk(g, k).unwrap().exact()));
    }
    checks
        .into_iter()
        .find(|(_, a, b)| a != b)
        .map(|(name, a, b)| format!("{} {name}: oracle {a:?}, solver {b:?}", to_graph6(g)))
}

#[test]
fn criterion_1_oracle_equivalence() {
    let start = Instant::now();
    let s = Solver::new();
    let mut graphs = Vec::new();
    for n in 1..=5 {
        graphs.extend(enumerate_labeled_graphs(n).unwrap());
    }
    let all6 = enumerate_labeled_graphs(6).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..1000 {
        graphs.push(all6[rng.gen_range(0..all6.len())].clone());
    }
    let mismatch = graphs.iter().find_map(|g| compare_with_oracle(g, &s));
    let ok = mismatch.is_none();
    let detail = mismatch.unwrap_or_else(|| {
        format!("{} graphs x 17 invariant/k pairs match the oracle", graphs.len())
    });
    line(1, "oracle equivalence", ok, &detail, start.elapsed());
    assert!(ok, "{detail}");
}

#[test]
fn criterion_2_tree_theorem() {
    let start = Instant::now();
    let s = Solver::new();
    let mut trees = Vec::new();
    for n in 1..=12 {
        trees.extend(enumerate_trees(n).unwrap());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..100 {
        let n = rng.gen_range(1..=200);
        trees.push(limpack::generators::random_tree(n, rng.gen()).unwrap());
    }
    let mut problem = None;
    let mut exact_checked = 0;
    for t in &trees {
        let want = (t.max_degree() + 1).div_ceil(2);
        let p = match tree::tree_2lp_partition(t) {
            Ok(p) => p,
            Err(e) => {
                problem = Some(format!("{}: {e}", to_graph6(t)));
                break;
            }
        };
        let valid = verify::is_klp_partition(t, &p, 2).unwrap().is_pass();
        if !valid || p.class_count() != want {
            problem = Some(format!("{}: {} classes, want {want}", to_graph6(t), p.class_count()));
            break;
        }
        if t.n() <= 12 {
            let chi = exact(&s, Invariant::PartitionNumber, t, 2);
            if chi != want {
                problem = Some(format!("{}: exact chi_x2 {chi}, formula {want}", to_graph6(t)));
                break;
            }
            exact_checked += 1;
        }
    }
    let ok = problem.is_none();
    let detail = problem.unwrap_or_else(|| {
        format!(
            "{} trees valid with ceil((D+1)/2) classes, {exact_checked} matched exact chi_x2",
            trees.len()
        )
    });
    line(2, "tree theorem", ok, &detail, start.elapsed());
    assert!(ok, "{detail}");
}

#[test]
fn criterion_3_k8_pair_partition() {
    let start = Instant::now();
    let k8 = complete(8);
    let r = Solver::new().d_xk(&k8, 2).unwrap();
    let pairs = VertexPartition::from_classes(8, &[vec![0, 1], vec![2, 3], vec![4, 5], vec![6, 7]])
        .unwrap();
    let pairs_ok = verify::is_ktd_partition(&k8, &pairs, 2).unwrap().is_pass();
    let (spec, _) = OmegaSpec::from_partition(&k8, &pairs, 2).unwrap();
    let report = families::validate_omega(&spec).unwrap();
    let ok = r.exact() == Some(4)
        && (k8.min_degree() + 1) / 2 == 4
        && pairs_ok
        && report.accepted
        && (report.q, report.t) == (7, 4);
    let detail = format!(
        "d_x2(K8) = {:?}, floor(8/2) = 4, pair partition 2TD = {pairs_ok}, omega accepted = {} (q={}, t={})",
        r.exact(),
        report.accepted,
        report.q,
        report.t
    );
    line(3, "K8 pair partition", ok, &detail, start.elapsed());
    assert!(ok, "{detail}");
}

#[test]
fn criterion_4_lambda_3_4() {
    let start = Instant::now();
    let s = Solver::new();
    let g = families::build_lambda(3, 4).unwrap();
    let (n, m) = (g.n() as i64, g.m() as i64);
    let chi = exact(&s, Invariant::PartitionNumber, &g, 2) as i64;
    let l2 = exact(&s, Invariant::LimitedPacking, &g, 2) as i64;
    let gamma = exact(&s, Invariant::TupleDomination, &g, 2) as i64;
    // ½(1 + 2m/n) = 3  ⇔  n + 2m = 6n;  ½(1 + √(1 + (4m−2n)/L₂)) = 3  ⇔  L₂ + 4m − 2n = 25 L₂
    let lb1_is_3 = n + 2 * m == 2 * 3 * n;
    let lb2_is_3 = l2 + 4 * m - 2 * n == 25 * l2;
    let ok = chi == 3 && l2 == 4 && gamma == 4 && n / 3 == 4 && lb1_is_3 && lb2_is_3;
    let detail = format!(
        "n={n} m={m} chi_x2={chi} L2={l2} gamma_x2={gamma} lb1=3:{lb1_is_3} lb2=3:{lb2_is_3}"
    );
    line(4, "lambda(3, 4) instance", ok, &detail, start.elapsed());
    assert!(ok, "{detail}");
}

#[test]
fn criterion_5_theorem_sweep() {
    let start = Instant::now();
    let cfg = HarnessConfig::default();
    let small = Source::Exhaustive { max_n: 5 }.graphs().unwrap();
    let six = Source::Exhaustive { max_n: 6 }.graphs().unwrap();
    let trees = Source::Trees { max_n: 10 }.graphs().unwrap();
    let cheap = [CheckId::T1, CheckId::T10, CheckId::T11, CheckId::T14, CheckId::T15];
    let mut lines = Vec::new();
    let mut ok = true;
    for id in CheckId::ALL {
        let exhaustive = if cheap.contains(&id) { &six } else { &small };
        let a = run_check(id, exhaustive, &cfg);
        let b = run_check(id, &trees, &cfg);
        let failures = a.failure_count + b.failure_count;
        let skipped_budget = a.skipped_budget + b.skipped_budget;
        ok &= failures == 0 && skipped_budget == 0;
        lines.push(format!(
            "{id}: tested {}+{} failures {failures}",
            a.graphs_tested, b.graphs_tested
        ));
        match id {
            CheckId::T11 => {
                // C₅ is the only graph with sum n + 5: 12 labelings of C₅
                let c5 = a.note("c5_exception") + b.note("c5_exception");
                ok &= c5 == 12;
                lines.push(format!("T11 c5_exception labelings {c5}"));
            }
            CheckId::T7 => lines.push(format!(
                "T7 Gamma members tight {} loose {}",
                a.note("gamma_tight") + b.note("gamma_tight"),
                a.note("gamma_not_tight") + b.note("gamma_not_tight")
            )),
            CheckId::T3 => {
                let sharp = b.note("odd_delta_sharp");
                ok &= sharp > 0;
                lines.push(format!("T3 odd-delta trees at bound {sharp}"));
            }
            CheckId::T8 => {
                let sharp = a.note("odd_delta_sharp") + b.note("odd_delta_sharp");
                ok &= sharp > 0;
                lines.push(format!("T8 odd-delta trees at both bounds {sharp}"));
            }
            _ => {}
        }
    }
    let detail = lines.join("; ");
    line(5, "theorem sweep T1-T15", ok, &detail, start.elapsed());
    assert!(ok, "{detail}");
}

#[test]
fn criterion_6_reduction_identity() {
    let start = Instant::now();
    let mut graphs = Source::Exhaustive { max_n: 5 }.graphs().unwrap();
    graphs.extend(
        Source::Random {
            count: 100,
            max_n: 10,
            p: 0.4,
            seed: 606,
        }
        .graphs()
        .unwrap(),
    );
    let s = Solver::new();
    let mut problem = None;
    let (mut bip, mut chordal) = (0, 0);
    for g in &graphs {
        let c = reduction::check_reduction_identity(g, &s).unwrap();
        if c.holds != Some(true) {
            problem = Some(format!("{}: {c:?}", to_graph6(g)));
            break;
        }
        let target = reduction::reduce_op_to_2tlp(g).target;
        if ops::is_bipartite(g) {
            bip += 1;
            if !ops::is_bipartite(&target) {
                problem = Some(format!("{}: bipartiteness lost", to_graph6(g)));
                break;
            }
        }
        if ops::is_chordal(g) {
            chordal += 1;
            if !ops::is_chordal(&target) {
                problem = Some(format!("{}: chordality lost", to_graph6(g)));
                break;
            }
        }
    }
    let report = run_check(CheckId::T9, &graphs, &HarnessConfig::default());
    let ok = problem.is_none() && report.passed() && report.skipped_budget == 0;
    let detail = problem.unwrap_or_else(|| {
        format!(
            "{} graphs, identity holds; {bip} bipartite and {chordal} chordal preserved; T9 failures {}",
            graphs.len(),
            report.failure_count
        )
    });
    line(6, "reduction identity", ok, &detail, start.elapsed());
    assert!(ok, "{detail}");
}

/// Criteria 7 and 8 contain claims the exact solvers refute. Their tests
/// print FAIL and pin the observed counterexamples so any change shows up.
#[test]
fn criterion_7_sharpness() {
    let start = Instant::now();
    let s = Solver::new();
    let mut parts = Vec::new();
    let mut ok = true;

    let h = families::ng_cocktail(3).unwrap();
    let a = exact(&s, Invariant::PartitionNumber, &h, 2);
    let b = exact(&s, Invariant::PartitionNumber, &ops::complement(&h), 2);
    assert!(a + b == 4 && 2 * (a + b) == h.n() + 2);
    parts.push(format!("ng_cocktail(3) {a}+{b}=4"));

    for t in 1..=2 {
        let g = families::tree_diff_sharp(t).unwrap();
        let (sset, sprime) = families::tree_diff_certificates(t).unwrap();
        assert!(verify::is_k_total_limited_packing(&g, &sset, 2).unwrap().is_pass());
        assert!(verify::is_k_limited_packing(&g, &sprime, 2).unwrap().is_pass());
        let l2t = exact(&s, Invariant::TotalLimitedPacking, &g, 2);
        let l2 = exact(&s, Invariant::LimitedPacking, &g, 2);
        let oracle = Naive::new(&g);
        assert_eq!((oracle.l_kt(2), oracle.l_k(2)), (l2t, l2));
        let claimed = l2t - l2 == 3 * t - 1 && 3 * t - 1 == g.n() / 3;
        ok &= claimed;
        parts.push(format!(
            "tree_diff_sharp({t}) L2t={l2t} (certificate {}) L2={l2} (certificate {}), gap {} vs claimed {}",
            sset.len(),
            sprime.len(),
            l2t - l2,
            3 * t - 1
        ));
        // pinned: a 2LP set of size 6t beats the 6t−1 certificate
        assert_eq!((l2t, l2), (9 * t - 2, 6 * t));
    }

    let g = families::gap_graph(1).unwrap();
    let (sset, sprime) = families::gap_certificates(1).unwrap();
    let feasible = verify::is_k_total_limited_packing(&g, &sset, 2).unwrap().is_pass()
        && verify::is_k_limited_packing(&g, &sprime, 2).unwrap().is_pass()
        && sset.len() == 24
        && sprime.len() == 14;
    assert!(feasible);
    let l2t = exact(&s, Invariant::TotalLimitedPacking, &g, 2);
    let l2 = exact(&s, Invariant::LimitedPacking, &g, 2);
    assert!(l2t == 24 && l2 == 14 && l2t - l2 == g.n() / 3 + 1);
    parts.push(format!("gap_graph(1) certificates feasible, L2t={l2t} L2={l2}"));

    let detail = parts.join("; ");
    line(7, "sharpness constructions", ok, &detail, start.elapsed());
}

#[test]
fn criterion_8_lexicographic_tightness() {
    let start = Instant::now();
    let s = Solver::new();
    let k2 = complete(2);
    let p3 = path(3).unwrap();
    let prod = ops::lexicographic_product(&p3, &k2).unwrap();
    let l2 = exact(&s, Invariant::LimitedPacking, &prod, 2);
    let rho_p3 = exact(&s, Invariant::Packing, &p3, 1);
    let chi = exact(&s, Invariant::PartitionNumber, &prod, 2);
    let lower_chi = ((p3.max_degree() + 1) * k2.n()).div_ceil(2);
    assert!(l2 == 2 && 2 * rho_p3 == 2 && 2 * (3 - p3.max_degree()) == 2);
    assert!(chi == 3 && chi == lower_chi);

    let (mut members, mut tight, mut coincide) = (0, 0, 0);
    let mut first_loose = None;
    for n in 1..=5 {
        for g in enumerate_labeled_graphs(n).unwrap() {
            let rho = exact(&s, Invariant::Packing, &g, 1);
            let bound = g.n() - g.max_degree();
            let equal = [&k2, &p3].iter().all(|h| {
                let p = ops::lexicographic_product(&g, h).unwrap();
                let v = exact(&s, Invariant::LimitedPacking, &p, 2);
                v == 2 * rho && v == 2 * bound
            });
            if g.is_connected() && g.n() >= 2 && rho == bound {
                // when the two bounds meet, the product value is forced
                assert!(equal, "{}", to_graph6(&g));
                coincide += 1;
            }
            if !families::is_in_gamma(&g) {
                continue;
            }
            members += 1;
            if equal {
                tight += 1;
            } else {
                // pinned: every loose member has ρ < n − Δ
                assert_eq!(Naive::new(&g).rho(), rho);
                assert!(rho < bound, "{}", to_graph6(&g));
                first_loose.get_or_insert_with(|| {
                    format!("{} (rho={rho}, n-D={bound})", to_graph6(&g))
                });
            }
        }
    }
    let ok = tight == members;
    let mut detail = format!(
        "P3oK2 L2={l2} chi_x2={chi}; {tight} of {members} labeled Gamma members tight; \
         {coincide} connected graphs with rho = n-D all tight"
    );
    if let Some(g) = first_loose {
        detail.push_str(&format!("; first loose member {g}"));
    }
    line(8, "lexicographic tightness", ok, &detail, start.elapsed());
}
