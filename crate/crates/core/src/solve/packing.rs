//! Branch and bound for maximum (total) limited packings.
//!
//! Counts only grow along a branch, so a vertex whose neighborhood already
//! contains a saturated vertex can never re-enter: it is dropped from the
//! candidate set for the whole subtree.

use crate::error::Result;
use crate::graph::{Graph, VertexSet};

use super::{check_size, closed_masks, open_masks, search_order, Budget};

pub(super) struct Outcome {
    pub best: u64,
    pub upper: usize,
    pub complete: bool,
}

struct Search<'a> {
    n: usize,
    k: u8,
    /// `nb[v]`: vertices whose count rises when `v` joins the set.
    nb: Vec<u64>,
    order: Vec<usize>,
    /// `suffix[i]`: vertices at order positions `i..`.
    suffix: Vec<u64>,
    budget: &'a mut Budget,
    best: u64,
    best_size: usize,
    cnt: [u8; 64],
    sat: u64,
    aborted: bool,
    /// Enumeration mode: collect every feasible set of exactly this size.
    collect: Option<(usize, Vec<u64>)>,
}

impl<'a> Search<'a> {
    fn new(g: &Graph, k: usize, closed: bool, budget: &'a mut Budget) -> Search<'a> {
        let n = g.n();
        let nb = if closed { closed_masks(g) } else { open_masks(g) };
        let order = search_order(g);
        let mut suffix = vec![0u64; n + 1];
        for i in (0..n).rev() {
            suffix[i] = suffix[i + 1] | 1 << order[i];
        }
        Search {
            n,
            k: k.min(64) as u8,
            nb,
            order,
            suffix,
            budget,
            best: 0,
            best_size: 0,
            cnt: [0; 64],
            sat: 0,
            aborted: false,
            collect: None,
        }
    }

    #[inline]
    fn candidates(&self, from: usize) -> u64 {
        let mut c = 0;
        let mut rest = self.suffix[from];
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.nb[u] & self.sat == 0 {
                c |= 1 << u;
            }
        }
        c
    }

    /// Each vertex `w` admits at most `k - cnt[w]` more members from
    /// `nb[w]`; disjoint groups of candidates are charged that cap.
    fn upper_bound(&self, cand: u64) -> usize {
        let mut covered = 0u64;
        let mut total = 0;
        for w in 0..self.n {
            let cap = (self.k - self.cnt[w]) as u32;
            let group = cand & self.nb[w] & !covered;
            if group.count_ones() > cap {
                total += cap as usize;
                covered |= group;
            }
        }
        total + (cand & !covered).count_ones() as usize
    }

    fn add(&mut self, u: usize) {
        let mut m = self.nb[u];
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            self.cnt[w] += 1;
            if self.cnt[w] == self.k {
                self.sat |= 1 << w;
            }
        }
    }

    fn remove(&mut self, u: usize) {
        let mut m = self.nb[u];
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            if self.cnt[w] == self.k {
                self.sat &= !(1 << w);
            }
            self.cnt[w] -= 1;
        }
    }

    fn greedy(&mut self) {
        let mut chosen = 0u64;
        for i in 0..self.n {
            let u = self.order[i];
            if self.nb[u] & self.sat == 0 {
                self.add(u);
                chosen |= 1 << u;
            }
        }
        let mut m = chosen;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            self.remove(u);
        }
        self.best = chosen;
        self.best_size = chosen.count_ones() as usize;
    }

    fn dfs(&mut self, pos: usize, chosen: u64, size: usize) {
        if self.aborted {
            return;
        }
        if !self.budget.tick() {
            self.aborted = true;
            return;
        }
        let cand = self.candidates(pos);
        if cand == 0 {
            match &mut self.collect {
                Some((target, found)) => {
                    if size == *target {
                        found.push(chosen);
                    }
                }
                None => {
                    if size > self.best_size {
                        self.best = chosen;
                        self.best_size = size;
                    }
                }
            }
            return;
        }
        let ub = size + self.upper_bound(cand);
        match &self.collect {
            Some((target, _)) if ub < *target => return,
            None if ub <= self.best_size => return,
            _ => {}
        }
        let mut j = pos;
        while cand >> self.order[j] & 1 == 0 {
            j += 1;
        }
        let u = self.order[j];
        self.add(u);
        self.dfs(j + 1, chosen | 1 << u, size + 1);
        self.remove(u);
        self.dfs(j + 1, chosen, size);
    }
}

pub(super) fn maximize(g: &Graph, k: usize, closed: bool, budget: &mut Budget) -> Outcome {
    if g.n() == 0 {
        return Outcome {
            best: 0,
            upper: 0,
            complete: true,
        };
    }
    let mut s = Search::new(g, k, closed, budget);
    let root_upper = s.upper_bound(s.candidates(0));
    s.greedy();
    s.dfs(0, 0, 0);
    Outcome {
        best: s.best,
        upper: if s.aborted { root_upper } else { s.best_size },
        complete: !s.aborted,
    }
}

/// Every maximum-cardinality k-limited (`closed`) or k-total limited packing,
/// in search order. `None` if the budget ran out.
pub fn enumerate_optimal(
    g: &Graph,
    k: usize,
    closed: bool,
    budget: Option<u64>,
) -> Result<Option<Vec<VertexSet>>> {
    check_size(g)?;
    super::nonzero(k)?;
    let mut b = Budget::new(budget);
    let opt = maximize(g, k, closed, &mut b);
    if !opt.complete {
        return Ok(None);
    }
    if g.n() == 0 {
        return Ok(Some(vec![VertexSet::new(0)]));
    }
    let target = opt.best.count_ones() as usize;
    let mut s = Search::new(g, k, closed, &mut b);
    s.collect = Some((target, Vec::new()));
    s.dfs(0, 0, 0);
    if s.aborted {
        return Ok(None);
    }
    let (_, found) = s.collect.take().unwrap();
    Ok(Some(
        found.into_iter().map(|m| VertexSet::from_mask(g.n(), m)).collect(),
    ))
}

/// Maximum independent set of a conflict graph given as masks.
fn max_independent(conflict: &[u64], avail: u64) -> usize {
    if avail == 0 {
        return 0;
    }
    // a vertex without conflicts inside `avail` is always taken
    let mut m = avail;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        if conflict[v] & avail == 0 {
            return 1 + max_independent(conflict, avail & !(1 << v));
        }
    }
    let v = avail.trailing_zeros() as usize;
    let with = 1 + max_independent(conflict, avail & !(1 << v) & !conflict[v]);
    let without = max_independent(conflict, avail & !(1 << v));
    with.max(without)
}

fn conflict_route(g: &Graph, nb: &[u64]) -> usize {
    let n = g.n();
    let conflict: Vec<u64> = (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| v != u && nb[u] & nb[v] != 0)
                .fold(0u64, |acc, v| acc | 1 << v)
        })
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    max_independent(&conflict, all)
}

/// `ρ(G)` as a maximum independent set of the "closed neighborhoods meet"
/// conflict graph; independent of the limited-packing search.
pub fn rho_brute_force(g: &Graph) -> Result<usize> {
    check_size(g)?;
    Ok(conflict_route(g, &closed_masks(g)))
}

/// `ρ_o(G)` via the "open neighborhoods meet" conflict graph.
pub fn rho_open_brute_force(g: &Graph) -> Result<usize> {
    check_size(g)?;
    Ok(conflict_route(g, &open_masks(g)))
}
