//! Certified exact solvers.
//!
//! All searches run on 64-bit adjacency masks, so inputs are limited to 64
//! vertices. Each solver explores vertices in descending-degree order (ties
//! by index) and returns a certificate that has already been re-checked by
//! [`crate::verify`]. An optional node budget turns a search into an
//! anytime computation: on exhaustion the result carries the interval
//! `[best feasible, best bound]` instead of an exact value.

mod coloring;
mod domination;
mod packing;
mod partition;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexPartition, VertexSet};
use crate::verify;

pub use packing::{enumerate_optimal, rho_brute_force, rho_open_brute_force};

/// The eight invariants computed by the solvers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Invariant {
    /// `L_k`: maximum k-limited packing.
    #[serde(rename = "l_k")]
    LimitedPacking,
    /// `L_{k,t}`: maximum k-total limited packing.
    #[serde(rename = "l_kt")]
    TotalLimitedPacking,
    /// `γ×k`: minimum k-tuple dominating set.
    #[serde(rename = "gamma_xk")]
    TupleDomination,
    /// `χ×k`: minimum partition into k-limited packings.
    #[serde(rename = "chi_xk")]
    PartitionNumber,
    /// `d×k`: maximum partition into k-tuple dominating sets.
    #[serde(rename = "d_xk")]
    TupleDomatic,
    /// `χ₂`: chromatic number of the square.
    #[serde(rename = "chi2")]
    DistanceChromatic,
    /// `ρ`: packing number.
    #[serde(rename = "rho")]
    Packing,
    /// `ρ_o`: open packing number.
    #[serde(rename = "rho_o")]
    OpenPacking,
}

impl Invariant {
    pub const ALL: [Invariant; 8] = [
        Invariant::LimitedPacking,
        Invariant::TotalLimitedPacking,
        Invariant::TupleDomination,
        Invariant::PartitionNumber,
        Invariant::TupleDomatic,
        Invariant::DistanceChromatic,
        Invariant::Packing,
        Invariant::OpenPacking,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::LimitedPacking => "l_k",
            Invariant::TotalLimitedPacking => "l_kt",
            Invariant::TupleDomination => "gamma_xk",
            Invariant::PartitionNumber => "chi_xk",
            Invariant::TupleDomatic => "d_xk",
            Invariant::DistanceChromatic => "chi2",
            Invariant::Packing => "rho",
            Invariant::OpenPacking => "rho_o",
        }
    }

    /// Accepts the canonical names plus the `l2`/`l2t` shorthands (which fix `k = 2`).
    pub fn parse(name: &str) -> Option<(Invariant, Option<usize>)> {
        let inv = match name {
            "l2" => return Some((Invariant::LimitedPacking, Some(2))),
            "l2t" => return Some((Invariant::TotalLimitedPacking, Some(2))),
            _ => Invariant::ALL.into_iter().find(|i| i.name() == name)?,
        };
        Some((inv, None))
    }

    /// Whether the invariant has a `k` parameter.
    pub fn takes_k(self) -> bool {
        !matches!(
            self,
            Invariant::DistanceChromatic | Invariant::Packing | Invariant::OpenPacking
        )
    }

    pub fn maximizes(self) -> bool {
        matches!(
            self,
            Invariant::LimitedPacking
                | Invariant::TotalLimitedPacking
                | Invariant::TupleDomatic
                | Invariant::Packing
                | Invariant::OpenPacking
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Value {
    Exact { value: usize },
    /// `δ(G) < k − 1` for a tuple-domination invariant.
    Undefined,
    /// Budget ran out; the true value lies in `[lower, upper]`.
    Incomplete { lower: usize, upper: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Certificate {
    Set(VertexSet),
    Partition(VertexPartition),
}

impl Certificate {
    pub fn as_set(&self) -> Option<&VertexSet> {
        match self {
            Certificate::Set(s) => Some(s),
            Certificate::Partition(_) => None,
        }
    }

    pub fn as_partition(&self) -> Option<&VertexPartition> {
        match self {
            Certificate::Partition(p) => Some(p),
            Certificate::Set(_) => None,
        }
    }

    /// Cardinality of a set, class count of a partition.
    pub fn size(&self) -> usize {
        match self {
            Certificate::Set(s) => s.len(),
            Certificate::Partition(p) => p.class_count(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantResult {
    pub invariant: Invariant,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(flatten)]
    pub value: Value,
    /// Optimal witness when exact; best feasible witness when incomplete.
    pub certificate: Option<Certificate>,
    #[serde(rename = "nodes")]
    pub nodes_explored: u64,
}

impl InvariantResult {
    pub fn exact(&self) -> Option<usize> {
        match self.value {
            Value::Exact { value } => Some(value),
            _ => None,
        }
    }

    pub fn is_complete(&self) -> bool {
        !matches!(self.value, Value::Incomplete { .. })
    }

    pub fn set(&self) -> Option<&VertexSet> {
        self.certificate.as_ref().and_then(Certificate::as_set)
    }

    pub fn partition(&self) -> Option<&VertexPartition> {
        self.certificate.as_ref().and_then(Certificate::as_partition)
    }
}

/// Node counter shared by one solver invocation.
#[derive(Debug)]
pub(crate) struct Budget {
    limit: Option<u64>,
    pub(crate) used: u64,
}

impl Budget {
    fn new(limit: Option<u64>) -> Budget {
        Budget { limit, used: 0 }
    }

    /// Counts one node; `false` once the limit is exceeded.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        self.used += 1;
        self.limit.is_none_or(|l| self.used <= l)
    }
}

/// Descending degree, ties by index.
pub(crate) fn search_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

pub(crate) fn closed_masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.mask(v) | 1 << v).collect()
}

pub(crate) fn open_masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.mask(v)).collect()
}

fn check_size(g: &Graph) -> Result<()> {
    if g.n() > 64 {
        Err(Error::TooLarge(g.n()))
    } else {
        Ok(())
    }
}

fn nonzero(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::ZeroK)
    } else {
        Ok(())
    }
}

fn rejected(what: &str, v: &verify::Verdict) -> Error {
    Error::CertificateRejected(format!("{what}: {:?}", v.violation()))
}

/// Exact solver front end carrying the optional node budget.
#[derive(Clone, Copy, Debug, Default)]
pub struct Solver {
    pub budget: Option<u64>,
}

impl Solver {
    pub fn new() -> Solver {
        Solver::default()
    }

    pub fn with_budget(budget: Option<u64>) -> Solver {
        Solver { budget }
    }

    /// Dispatches on `invariant`; `k` is ignored for `chi2`, `rho`, `rho_o`.
    pub fn compute(&self, invariant: Invariant, g: &Graph, k: usize) -> Result<InvariantResult> {
        match invariant {
            Invariant::LimitedPacking => self.l_k(g, k),
            Invariant::TotalLimitedPacking => self.l_kt(g, k),
            Invariant::TupleDomination => self.gamma_xk(g, k),
            Invariant::PartitionNumber => self.chi_xk(g, k),
            Invariant::TupleDomatic => self.d_xk(g, k),
            Invariant::DistanceChromatic => self.chi2(g),
            Invariant::Packing => self.rho(g),
            Invariant::OpenPacking => self.rho_o(g),
        }
    }

    /// `L_k(G)`.
    pub fn l_k(&self, g: &Graph, k: usize) -> Result<InvariantResult> {
        self.packing(g, k, true, Invariant::LimitedPacking, Some(k))
    }

    /// `L_{k,t}(G)`.
    pub fn l_kt(&self, g: &Graph, k: usize) -> Result<InvariantResult> {
        self.packing(g, k, false, Invariant::TotalLimitedPacking, Some(k))
    }

    /// `ρ(G) = L_1(G)`.
    pub fn rho(&self, g: &Graph) -> Result<InvariantResult> {
        self.packing(g, 1, true, Invariant::Packing, None)
    }

    /// `ρ_o(G) = L_{1,t}(G)`.
    pub fn rho_o(&self, g: &Graph) -> Result<InvariantResult> {
        self.packing(g, 1, false, Invariant::OpenPacking, None)
    }

    fn packing(
        &self,
        g: &Graph,
        k: usize,
        closed: bool,
        invariant: Invariant,
        k_field: Option<usize>,
    ) -> Result<InvariantResult> {
        nonzero(k)?;
        check_size(g)?;
        let mut budget = Budget::new(self.budget);
        let out = packing::maximize(g, k, closed, &mut budget);
        let set = VertexSet::from_mask(g.n(), out.best);
        let verdict = if closed {
            verify::is_k_limited_packing(g, &set, k)?
        } else {
            verify::is_k_total_limited_packing(g, &set, k)?
        };
        if !verdict.is_pass() {
            return Err(rejected(invariant.name(), &verdict));
        }
        let value = if out.complete {
            Value::Exact { value: set.len() }
        } else {
            Value::Incomplete {
                lower: set.len(),
                upper: out.upper,
            }
        };
        Ok(InvariantResult {
            invariant,
            k: k_field,
            value,
            certificate: Some(Certificate::Set(set)),
            nodes_explored: budget.used,
        })
    }

    /// `γ×k(G)`; `Undefined` when `δ(G) < k − 1`.
    pub fn gamma_xk(&self, g: &Graph, k: usize) -> Result<InvariantResult> {
        nonzero(k)?;
        check_size(g)?;
        if g.n() > 0 && g.min_degree() + 1 < k {
            return Ok(undefined(Invariant::TupleDomination, k));
        }
        let mut budget = Budget::new(self.budget);
        let out = domination::minimize(g, k, &mut budget);
        let set = VertexSet::from_mask(g.n(), out.best);
        let verdict = verify::is_k_tuple_dominating(g, &set, k)?;
        if !verdict.is_pass() {
            return Err(rejected("gamma_xk", &verdict));
        }
        let value = if out.complete {
            Value::Exact { value: set.len() }
        } else {
            Value::Incomplete {
                lower: out.lower,
                upper: set.len(),
            }
        };
        Ok(InvariantResult {
            invariant: Invariant::TupleDomination,
            k: Some(k),
            value,
            certificate: Some(Certificate::Set(set)),
            nodes_explored: budget.used,
        })
    }

    /// `χ×k(G)`.
    pub fn chi_xk(&self, g: &Graph, k: usize) -> Result<InvariantResult> {
        nonzero(k)?;
        check_size(g)?;
        let mut budget = Budget::new(self.budget);
        let out = partition::min_klp_partition(g, k, &mut budget);
        let verdict = verify::is_klp_partition(g, &out.partition, k)?;
        if !verdict.is_pass() {
            return Err(rejected("chi_xk", &verdict));
        }
        let best = out.partition.class_count();
        let value = if out.lower >= best {
            Value::Exact { value: best }
        } else {
            Value::Incomplete {
                lower: out.lower,
                upper: best,
            }
        };
        Ok(InvariantResult {
            invariant: Invariant::PartitionNumber,
            k: Some(k),
            value,
            certificate: Some(Certificate::Partition(out.partition)),
            nodes_explored: budget.used,
        })
    }

    /// `d×k(G)`; `Undefined` when `δ(G) < k − 1`.
    pub fn d_xk(&self, g: &Graph, k: usize) -> Result<InvariantResult> {
        nonzero(k)?;
        check_size(g)?;
        if g.n() > 0 && g.min_degree() + 1 < k {
            return Ok(undefined(Invariant::TupleDomatic, k));
        }
        let mut budget = Budget::new(self.budget);
        let out = partition::max_ktd_partition(g, k, &mut budget);
        if g.n() > 0 {
            let verdict = verify::is_ktd_partition(g, &out.partition, k)?;
            if !verdict.is_pass() {
                return Err(rejected("d_xk", &verdict));
            }
        }
        let best = out.partition.class_count();
        let value = if out.upper <= best {
            Value::Exact { value: best }
        } else {
            Value::Incomplete {
                lower: best,
                upper: out.upper,
            }
        };
        Ok(InvariantResult {
            invariant: Invariant::TupleDomatic,
            k: Some(k),
            value,
            certificate: Some(Certificate::Partition(out.partition)),
            nodes_explored: budget.used,
        })
    }

    /// `χ₂(G)`: exact coloring of the square.
    pub fn chi2(&self, g: &Graph) -> Result<InvariantResult> {
        check_size(g)?;
        let mut budget = Budget::new(self.budget);
        let out = coloring::color_square(g, &mut budget);
        if !verify::is_2distance_coloring(g, &out.partition)? {
            return Err(Error::CertificateRejected("chi2: not a 2-distance coloring".into()));
        }
        let best = out.partition.class_count();
        let value = if out.lower == best {
            Value::Exact { value: best }
        } else {
            Value::Incomplete {
                lower: out.lower,
                upper: best,
            }
        };
        Ok(InvariantResult {
            invariant: Invariant::DistanceChromatic,
            k: None,
            value,
            certificate: Some(Certificate::Partition(out.partition)),
            nodes_explored: budget.used,
        })
    }
}

fn undefined(invariant: Invariant, k: usize) -> InvariantResult {
    InvariantResult {
        invariant,
        k: Some(k),
        value: Value::Undefined,
        certificate: None,
        nodes_explored: 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::ops;

    fn v(r: Result<InvariantResult>) -> usize {
        r.unwrap().exact().unwrap()
    }

    #[test]
    fn l_k_examples() {
        let s = Solver::new();
        for n in 3..8 {
            assert_eq!(v(s.l_k(&complete(n), 2)), 2);
        }
        let p4 = path(4).unwrap();
        let r = s.l_k(&p4, 2).unwrap();
        assert_eq!(r.exact(), Some(3));
        // descending-degree order is 1, 2, 0, 3; the include-first optimum is {0, 1, 3}
        assert_eq!(r.set().unwrap().to_vec(), vec![0, 1, 3]);
        assert_eq!(v(s.l_k(&cycle(5).unwrap(), 1)), 1);
    }

    #[test]
    fn l_kt_examples() {
        let s = Solver::new();
        assert_eq!(v(s.l_kt(&cycle(5).unwrap(), 2)), 5);
        assert_eq!(v(s.l_kt(&complete(4), 2)), 2);
        assert_eq!(v(s.l_kt(&cycle(4).unwrap(), 2)), 4);
    }

    #[test]
    fn rho_examples() {
        let s = Solver::new();
        assert_eq!(v(s.rho(&path(4).unwrap())), 2);
        assert_eq!(v(s.rho_o(&path(3).unwrap())), 2);
        assert_eq!(v(s.rho(&complete(1))), 1);
        assert_eq!(rho_brute_force(&path(4).unwrap()).unwrap(), 2);
        assert_eq!(rho_open_brute_force(&path(3).unwrap()).unwrap(), 2);
    }

    #[test]
    fn gamma_examples() {
        let s = Solver::new();
        assert_eq!(v(s.gamma_xk(&cycle(4).unwrap(), 2)), 3);
        for n in 1..6 {
            assert_eq!(v(s.gamma_xk(&complete(n), 1)), 1);
        }
        assert_eq!(v(s.gamma_xk(&path(3).unwrap(), 2)), 3);
        let r = s.gamma_xk(&path(3).unwrap(), 3).unwrap();
        assert_eq!(r.value, Value::Undefined);
    }

    #[test]
    fn chi_examples() {
        let s = Solver::new();
        assert_eq!(v(s.chi_xk(&star(4), 2)), 3);
        let h = complete_minus_perfect_matching(6).unwrap();
        assert_eq!(v(s.chi_xk(&h, 2)), 3);
        assert_eq!(v(s.chi_xk(&complete(1), 2)), 1);
    }

    #[test]
    fn d_examples() {
        let s = Solver::new();
        let r = s.d_xk(&complete(8), 2).unwrap();
        assert_eq!(r.exact(), Some(4));
        assert_eq!(v(s.d_xk(&cycle(4).unwrap(), 2)), 1);
        assert_eq!(v(s.d_xk(&complete(2), 1)), 2);
        assert_eq!(s.d_xk(&path(3).unwrap(), 3).unwrap().value, Value::Undefined);
    }

    #[test]
    fn chi2_examples() {
        let s = Solver::new();
        assert_eq!(v(s.chi2(&path(4).unwrap())), 3);
        assert_eq!(v(s.chi2(&complete(1))), 1);
        for seed in 0..10 {
            let t = random_tree(9, seed).unwrap();
            assert_eq!(v(s.chi2(&t)), t.max_degree() + 1);
        }
    }

    #[test]
    fn chi2_matches_chi_x1() {
        let s = Solver::new();
        for seed in 0..20 {
            let g = random_gnp(9, 0.3, seed);
            assert_eq!(v(s.chi2(&g)), v(s.chi_xk(&g, 1)));
        }
    }

    #[test]
    fn zero_k_and_oversize() {
        let s = Solver::new();
        assert!(matches!(s.l_k(&complete(3), 0), Err(Error::ZeroK)));
        assert!(matches!(s.l_k(&path(65).unwrap(), 2), Err(Error::TooLarge(65))));
    }

    #[test]
    fn null_graph() {
        let s = Solver::new();
        let g = Graph::empty(0);
        for inv in Invariant::ALL {
            assert_eq!(s.compute(inv, &g, 1).unwrap().exact(), Some(0), "{inv:?}");
        }
    }

    #[test]
    fn budget_gives_interval() {
        let g = ops::lexicographic_product(&cycle(5).unwrap(), &complete(3)).unwrap();
        let r = Solver::with_budget(Some(3)).l_kt(&g, 2).unwrap();
        match r.value {
            Value::Incomplete { lower, upper } => {
                assert!(lower <= upper);
                assert_eq!(r.set().unwrap().len(), lower);
            }
            other => panic!("expected incomplete, got {other:?}"),
        }
        let exact = v(Solver::new().l_kt(&g, 2));
        let Value::Incomplete { lower, upper } = r.value else { unreachable!() };
        assert!(lower <= exact && exact <= upper);
    }

    #[test]
    fn certificate_matches_value() {
        let s = Solver::new();
        for seed in 0..15 {
            let g = random_gnp(8, 0.45, seed);
            for inv in Invariant::ALL {
                for k in 1..=3 {
                    let r = s.compute(inv, &g, k).unwrap();
                    if let (Some(val), Some(c)) = (r.exact(), &r.certificate) {
                        assert_eq!(c.size(), val, "{inv:?} k={k}");
                    }
                }
            }
        }
    }
}
