//! Feasibility predicates for sets and partitions.
//!
//! Every predicate scans vertices in index order and reports the first
//! violation, so diagnostics are deterministic.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexPartition, VertexSet};
use crate::ops;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Predicate {
    LimitedPacking,
    TotalLimitedPacking,
    TupleDominating,
}

impl Predicate {
    pub fn name(self) -> &'static str {
        match self {
            Predicate::LimitedPacking => "k-limited packing",
            Predicate::TotalLimitedPacking => "k-total limited packing",
            Predicate::TupleDominating => "k-tuple dominating set",
        }
    }
}

/// `observed` breaks `bound` at `witness_vertex` (`≤` for packings, `≥` for
/// domination). `class` is set when the check was part of a partition test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredicateViolation {
    pub kind: Predicate,
    pub witness_vertex: usize,
    pub observed: usize,
    pub bound: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(PredicateViolation),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn violation(&self) -> Option<&PredicateViolation> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(v) => Some(v),
        }
    }
}

fn bound_to(g: &Graph, set: &VertexSet) -> Result<()> {
    if set.universe() != g.n() {
        return Err(Error::Unbound {
            set: set.universe(),
            graph: g.n(),
        });
    }
    Ok(())
}

fn nonzero(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::ZeroK)
    } else {
        Ok(())
    }
}

/// Requires `δ(G) ≥ k − 1`, the definitional guard of tuple domination.
pub(crate) fn domination_defined(g: &Graph, k: usize, invariant: &'static str) -> Result<()> {
    nonzero(k)?;
    let min_degree = g.min_degree();
    if g.n() > 0 && min_degree + 1 < k {
        return Err(Error::Undefined {
            invariant,
            k,
            min_degree,
        });
    }
    Ok(())
}

#[inline]
fn closed_count(g: &Graph, set: &VertexSet, v: usize) -> usize {
    set.count_in(g.row(v)) + set.contains(v) as usize
}

fn scan(
    g: &Graph,
    set: &VertexSet,
    k: usize,
    kind: Predicate,
    class: Option<usize>,
) -> Verdict {
    for v in 0..g.n() {
        let observed = match kind {
            Predicate::TotalLimitedPacking => set.count_in(g.row(v)),
            _ => closed_count(g, set, v),
        };
        let broken = match kind {
            Predicate::TupleDominating => observed < k,
            _ => observed > k,
        };
        if broken {
            return Verdict::Fail(PredicateViolation {
                kind,
                witness_vertex: v,
                observed,
                bound: k,
                class,
            });
        }
    }
    Verdict::Pass
}

/// `|B ∩ N[v]| ≤ k` for every vertex `v`.
pub fn is_k_limited_packing(g: &Graph, b: &VertexSet, k: usize) -> Result<Verdict> {
    nonzero(k)?;
    bound_to(g, b)?;
    Ok(scan(g, b, k, Predicate::LimitedPacking, None))
}

/// `|B ∩ N(v)| ≤ k` for every vertex `v`.
pub fn is_k_total_limited_packing(g: &Graph, b: &VertexSet, k: usize) -> Result<Verdict> {
    nonzero(k)?;
    bound_to(g, b)?;
    Ok(scan(g, b, k, Predicate::TotalLimitedPacking, None))
}

/// `|S ∩ N[v]| ≥ k` for every vertex `v`; undefined when `δ(G) < k − 1`.
pub fn is_k_tuple_dominating(g: &Graph, s: &VertexSet, k: usize) -> Result<Verdict> {
    domination_defined(g, k, "k-tuple domination")?;
    bound_to(g, s)?;
    Ok(scan(g, s, k, Predicate::TupleDominating, None))
}

/// Pairwise-disjoint closed neighborhoods.
pub fn is_packing(g: &Graph, b: &VertexSet) -> Result<bool> {
    bound_to(g, b)?;
    let members = b.to_vec();
    for (i, &u) in members.iter().enumerate() {
        let nu = g.closed_neighborhood(u);
        if members[i + 1..]
            .iter()
            .any(|&v| nu.intersects(&g.closed_neighborhood(v)))
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Pairwise-disjoint open neighborhoods.
pub fn is_open_packing(g: &Graph, b: &VertexSet) -> Result<bool> {
    bound_to(g, b)?;
    let members = b.to_vec();
    for (i, &u) in members.iter().enumerate() {
        let nu = g.open_neighborhood(u);
        if members[i + 1..]
            .iter()
            .any(|&v| nu.intersects(&g.open_neighborhood(v)))
        {
            return Ok(false);
        }
    }
    Ok(true)
}

fn partition_bound(g: &Graph, p: &VertexPartition) -> Result<()> {
    if p.len() != g.n() {
        return Err(Error::InvalidPartition(format!(
            "partition labels {} vertices but the graph has {}",
            p.len(),
            g.n()
        )));
    }
    Ok(())
}

/// Every class is a k-limited packing.
pub fn is_klp_partition(g: &Graph, p: &VertexPartition, k: usize) -> Result<Verdict> {
    nonzero(k)?;
    partition_bound(g, p)?;
    for (i, class) in p.class_sets().iter().enumerate() {
        if let v @ Verdict::Fail(_) = scan(g, class, k, Predicate::LimitedPacking, Some(i)) {
            return Ok(v);
        }
    }
    Ok(Verdict::Pass)
}

/// Every class is a k-tuple dominating set.
pub fn is_ktd_partition(g: &Graph, p: &VertexPartition, k: usize) -> Result<Verdict> {
    domination_defined(g, k, "k-tuple domatic partition")?;
    partition_bound(g, p)?;
    for (i, class) in p.class_sets().iter().enumerate() {
        if let v @ Verdict::Fail(_) = scan(g, class, k, Predicate::TupleDominating, Some(i)) {
            return Ok(v);
        }
    }
    Ok(Verdict::Pass)
}

/// Proper coloring of the square of `g`.
pub fn is_2distance_coloring(g: &Graph, p: &VertexPartition) -> Result<bool> {
    partition_bound(g, p)?;
    let sq = ops::square(g);
    Ok(sq.edges().iter().all(|&(u, v)| p.class_of(u) != p.class_of(v)))
}

/// Second route for [`is_2distance_coloring`]: every class is a packing.
pub fn classes_are_packings(g: &Graph, p: &VertexPartition) -> Result<bool> {
    partition_bound(g, p)?;
    for class in p.class_sets() {
        if !is_packing(g, &class)? {
            return Ok(false);
        }
    }
    Ok(true)
}
