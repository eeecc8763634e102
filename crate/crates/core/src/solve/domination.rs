//! Branch and bound for minimum k-tuple dominating sets.

use crate::graph::Graph;

use super::{closed_masks, search_order, Budget};

pub(super) struct Outcome {
    pub best: u64,
    pub lower: usize,
    pub complete: bool,
}

struct Search<'a> {
    n: usize,
    k: usize,
    nb: Vec<u64>,
    order: Vec<usize>,
    suffix: Vec<u64>,
    /// Maximum closed-neighborhood size, `Δ + 1`.
    reach: usize,
    budget: &'a mut Budget,
    cnt: [u8; 64],
    best: u64,
    best_size: usize,
    aborted: bool,
}

impl Search<'_> {
    /// Sum of remaining demands, or `None` if some vertex can no longer
    /// reach `k` even with every undecided neighbor.
    fn deficiency(&self, undecided: u64) -> Option<usize> {
        let mut total = 0;
        for w in 0..self.n {
            let have = self.cnt[w] as usize;
            if have >= self.k {
                continue;
            }
            let need = self.k - have;
            if ((undecided & self.nb[w]).count_ones() as usize) < need {
                return None;
            }
            total += need;
        }
        Some(total)
    }

    fn shift(&mut self, u: usize, up: bool) {
        let mut m = self.nb[u];
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            if up {
                self.cnt[w] += 1;
            } else {
                self.cnt[w] -= 1;
            }
        }
    }

    fn dfs(&mut self, pos: usize, chosen: u64, size: usize) {
        if self.aborted {
            return;
        }
        if !self.budget.tick() {
            self.aborted = true;
            return;
        }
        let Some(def) = self.deficiency(self.suffix[pos]) else {
            return;
        };
        if def == 0 {
            if size < self.best_size {
                self.best = chosen;
                self.best_size = size;
            }
            return;
        }
        if size + def.div_ceil(self.reach) >= self.best_size {
            return;
        }
        let u = self.order[pos];
        self.shift(u, true);
        self.dfs(pos + 1, chosen | 1 << u, size + 1);
        self.shift(u, false);
        self.dfs(pos + 1, chosen, size);
    }
}

/// Caller guarantees `δ(G) ≥ k − 1`, so `V(G)` itself is feasible.
pub(super) fn minimize(g: &Graph, k: usize, budget: &mut Budget) -> Outcome {
    let n = g.n();
    if n == 0 {
        return Outcome {
            best: 0,
            lower: 0,
            complete: true,
        };
    }
    let nb = closed_masks(g);
    let order = search_order(g);
    let mut suffix = vec![0u64; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] | 1 << order[i];
    }
    let all = suffix[0];
    let reach = g.max_degree() + 1;
    let mut s = Search {
        n,
        k,
        nb,
        order,
        suffix,
        reach,
        budget,
        cnt: [0; 64],
        // one more than n so that V(G) itself is recorded if nothing smaller exists
        best: all,
        best_size: n + 1,
        aborted: false,
    };
    let root_lower = (n * k).div_ceil(reach);
    s.dfs(0, 0, 0);
    if s.best_size > n {
        s.best_size = n;
    }
    Outcome {
        best: s.best,
        lower: if s.aborted { root_lower.min(s.best_size) } else { s.best_size },
        complete: !s.aborted,
    }
}
