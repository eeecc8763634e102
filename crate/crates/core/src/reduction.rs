//! Open packing to 2-total limited packing: `G ↦ G ⊙ K₁`, `k ↦ n + k`.
//!
//! `L_{2,t}(G ⊙ K₁) = ρ_o(G) + n`, so `G` has an open packing of size `k`
//! iff `G ⊙ K₁` has a 2TLP set of size `n + k`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::ops;
use crate::solve::{Solver, Value};
use crate::verify;

/// `target = source ⊙ K₁`; pendant `n + i` hangs on vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionInstance {
    pub source: Graph,
    pub target: Graph,
    /// `k′ = offset + k`, with `offset = |V(source)|`.
    pub offset: usize,
}

impl ReductionInstance {
    pub fn threshold(&self, k: usize) -> usize {
        self.offset + k
    }

    pub fn pendant(&self, v: usize) -> usize {
        self.offset + v
    }
}

pub fn reduce_op_to_2tlp(g: &Graph) -> ReductionInstance {
    ReductionInstance {
        source: g.clone(),
        target: ops::corona_k1(g),
        offset: g.n(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    /// `None` when the budget ran out before a side was settled.
    pub holds: Option<bool>,
    pub rho_o: Value,
    pub l2t_target: Value,
    pub n: usize,
}

/// Solves both sides and compares `L_{2,t}(G ⊙ K₁)` with `ρ_o(G) + n`.
pub fn check_reduction_identity(g: &Graph, solver: &Solver) -> Result<IdentityCheck> {
    let inst = reduce_op_to_2tlp(g);
    let rho_o = solver.rho_o(g)?.value;
    let l2t = solver.l_kt(&inst.target, 2)?.value;
    let holds = match (rho_o, l2t) {
        (Value::Exact { value: a }, Value::Exact { value: b }) => Some(b == a + g.n()),
        _ => None,
    };
    Ok(IdentityCheck {
        holds,
        rho_o,
        l2t_target: l2t,
        n: g.n(),
    })
}

/// `B ∪ {all pendants}`, a 2TLP set of `G ⊙ K₁` of size `|B| + n`.
/// `B` must be an open packing of `G`.
pub fn lift_certificate(g: &Graph, b: &VertexSet) -> Result<VertexSet> {
    if !verify::is_open_packing(g, b)? {
        return Err(Error::CertificateRejected(
            "lift needs an open packing of the source graph".into(),
        ));
    }
    let inst = reduce_op_to_2tlp(g);
    let n = g.n();
    let lifted = b.widen(2 * n).union(&VertexSet::from_members(2 * n, n..2 * n)?);
    let verdict = verify::is_k_total_limited_packing(&inst.target, &lifted, 2)?;
    if let Some(v) = verdict.violation() {
        return Err(Error::CertificateRejected(format!("lifted set: {v:?}")));
    }
    Ok(lifted)
}

/// Drops the pendant vertices of a subset of `G ⊙ K₁`.
pub fn strip_pendants(inst: &ReductionInstance, b: &VertexSet) -> VertexSet {
    VertexSet::from_members(inst.offset, b.iter().filter(|&v| v < inst.offset))
        .expect("indices below offset")
}
