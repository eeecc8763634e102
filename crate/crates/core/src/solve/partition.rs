//! Backtracking class assignment for `χ×k` (minimum kLP partition) and
//! `d×k` (maximum kTD partition).
//!
//! Both searches assign vertices in the fixed search order. A vertex may
//! open class `c + 1` only when it could not go into classes `1..=c`, which
//! removes the symmetry between class labels.

use crate::graph::{Graph, VertexPartition};

use super::{closed_masks, search_order, Budget};

pub(super) struct MinOutcome {
    pub partition: VertexPartition,
    /// Every partition with fewer classes has been refuted.
    pub lower: usize,
}

pub(super) struct MaxOutcome {
    pub partition: VertexPartition,
    /// Every partition with more classes has been refuted.
    pub upper: usize,
}

fn labels_to_partition(order_labels: &[u8]) -> VertexPartition {
    VertexPartition::from_labels(order_labels.iter().map(|&c| c as usize).collect())
        .expect("search assigns every vertex")
        .normalized()
}

struct KlpSearch<'a> {
    n: usize,
    k: u8,
    c: usize,
    nb: &'a [u64],
    /// Vertices whose available classes can change when `u` is placed.
    nb2: &'a [u64],
    order: &'a [usize],
    cnt: Vec<u8>,
    sat: Vec<u64>,
    class_of: [u8; 64],
    assigned: u64,
    used: usize,
    budget: &'a mut Budget,
    aborted: bool,
}

impl KlpSearch<'_> {
    fn place(&mut self, u: usize, j: usize, up: bool) {
        let mut m = self.nb[u];
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            let slot = &mut self.cnt[w * self.c + j];
            if up {
                *slot += 1;
                if *slot == self.k {
                    self.sat[j] |= 1 << w;
                }
            } else {
                if *slot == self.k {
                    self.sat[j] &= !(1 << w);
                }
                *slot -= 1;
            }
        }
    }

    fn domains_alive(&self, u: usize) -> bool {
        if self.used < self.c {
            return true;
        }
        let mut m = self.nb2[u] & !self.assigned;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if self.sat.iter().all(|&s| self.nb[v] & s != 0) {
                return false;
            }
        }
        true
    }

    fn dfs(&mut self, pos: usize) -> bool {
        if pos == self.n {
            return true;
        }
        if !self.budget.tick() {
            self.aborted = true;
            return false;
        }
        let u = self.order[pos];
        let limit = (self.used + 1).min(self.c);
        for j in 0..limit {
            if self.nb[u] & self.sat[j] != 0 {
                continue;
            }
            self.place(u, j, true);
            self.class_of[u] = j as u8;
            self.assigned |= 1 << u;
            let opened = j == self.used;
            if opened {
                self.used += 1;
            }
            if self.domains_alive(u) && self.dfs(pos + 1) {
                return true;
            }
            if self.aborted {
                return false;
            }
            if opened {
                self.used -= 1;
            }
            self.assigned &= !(1 << u);
            self.place(u, j, false);
        }
        false
    }
}

fn first_fit_klp(nb: &[u64], order: &[usize], k: usize) -> Vec<u8> {
    let n = nb.len();
    let mut classes: Vec<u64> = Vec::new();
    let mut class_of = vec![0u8; n];
    for &u in order {
        // joining class j is allowed iff every w in N[u] sees < k members of j
        let j = classes
            .iter()
            .position(|&cls| {
                let mut m = nb[u];
                while m != 0 {
                    let w = m.trailing_zeros() as usize;
                    m &= m - 1;
                    if (nb[w] & cls).count_ones() as usize >= k {
                        return false;
                    }
                }
                true
            })
            .unwrap_or_else(|| {
                classes.push(0);
                classes.len() - 1
            });
        classes[j] |= 1 << u;
        class_of[u] = j as u8;
    }
    class_of
}

pub(super) fn min_klp_partition(g: &Graph, k: usize, budget: &mut Budget) -> MinOutcome {
    let n = g.n();
    if n == 0 {
        return MinOutcome {
            partition: VertexPartition::from_labels(Vec::new()).unwrap(),
            lower: 0,
        };
    }
    let nb = closed_masks(g);
    let nb2: Vec<u64> = (0..n)
        .map(|u| {
            let mut acc = 0;
            let mut m = nb[u];
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                acc |= nb[w];
            }
            acc
        })
        .collect();
    let order = search_order(g);
    let greedy = first_fit_klp(&nb, &order, k);
    let upper = greedy.iter().map(|&c| c as usize + 1).max().unwrap();
    let lower = (g.max_degree() + 1).div_ceil(k).max(1);
    for c in lower..upper {
        let mut s = KlpSearch {
            n,
            k: k.min(64) as u8,
            c,
            nb: &nb,
            nb2: &nb2,
            order: &order,
            cnt: vec![0; n * c],
            sat: vec![0; c],
            class_of: [0; 64],
            assigned: 0,
            used: 0,
            budget,
            aborted: false,
        };
        if s.dfs(0) {
            return MinOutcome {
                partition: labels_to_partition(&s.class_of[..n]),
                lower: c,
            };
        }
        if s.aborted {
            return MinOutcome {
                partition: labels_to_partition(&greedy),
                lower: c,
            };
        }
    }
    MinOutcome {
        partition: labels_to_partition(&greedy),
        lower: upper,
    }
}

struct KtdSearch<'a> {
    n: usize,
    k: usize,
    t: usize,
    nb: &'a [u64],
    order: &'a [usize],
    cnt: Vec<u8>,
    class_of: [u8; 64],
    undecided: u64,
    used: usize,
    budget: &'a mut Budget,
    aborted: bool,
}

impl KtdSearch<'_> {
    /// Remaining demand at `w` must be coverable by its undecided neighbors.
    fn demands_ok(&self, u: usize) -> bool {
        let mut m = self.nb[u];
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            let row = &self.cnt[w * self.t..(w + 1) * self.t];
            let demand: usize = row
                .iter()
                .map(|&c| self.k.saturating_sub(c as usize))
                .sum();
            if demand > (self.undecided & self.nb[w]).count_ones() as usize {
                return false;
            }
        }
        true
    }

    fn shift(&mut self, u: usize, j: usize, up: bool) {
        let mut m = self.nb[u];
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            let slot = &mut self.cnt[w * self.t + j];
            if up {
                *slot += 1;
            } else {
                *slot -= 1;
            }
        }
    }

    fn dfs(&mut self, pos: usize) -> bool {
        if pos == self.n {
            return true;
        }
        if !self.budget.tick() {
            self.aborted = true;
            return false;
        }
        let u = self.order[pos];
        let limit = (self.used + 1).min(self.t);
        self.undecided &= !(1 << u);
        for j in 0..limit {
            self.shift(u, j, true);
            self.class_of[u] = j as u8;
            let opened = j == self.used;
            if opened {
                self.used += 1;
            }
            if self.demands_ok(u) && self.dfs(pos + 1) {
                return true;
            }
            if self.aborted {
                return false;
            }
            if opened {
                self.used -= 1;
            }
            self.shift(u, j, false);
        }
        self.undecided |= 1 << u;
        false
    }
}

/// Caller guarantees `δ(G) ≥ k − 1`.
pub(super) fn max_ktd_partition(g: &Graph, k: usize, budget: &mut Budget) -> MaxOutcome {
    let n = g.n();
    if n == 0 {
        return MaxOutcome {
            partition: VertexPartition::from_labels(Vec::new()).unwrap(),
            upper: 0,
        };
    }
    let nb = closed_masks(g);
    let order = search_order(g);
    let upper = (g.min_degree() + 1) / k;
    let single = VertexPartition::from_labels(vec![0; n]).unwrap();
    for t in (2..=upper).rev() {
        let mut s = KtdSearch {
            n,
            k,
            t,
            nb: &nb,
            order: &order,
            cnt: vec![0; n * t],
            class_of: [0; 64],
            undecided: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            used: 0,
            budget,
            aborted: false,
        };
        if s.dfs(0) {
            return MaxOutcome {
                partition: labels_to_partition(&s.class_of[..n]),
                upper: t,
            };
        }
        if s.aborted {
            return MaxOutcome {
                partition: single,
                upper: t,
            };
        }
    }
    MaxOutcome {
        partition: single,
        upper: 1,
    }
}
