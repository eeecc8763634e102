//! Exact coloring of `G²` by DSATUR backtracking.

use crate::graph::{Graph, VertexPartition};

use super::Budget;

pub(super) struct Outcome {
    pub partition: VertexPartition,
    /// Every coloring with fewer colors has been refuted.
    pub lower: usize,
}

/// Open neighborhoods in `G²`.
fn square_masks(g: &Graph) -> Vec<u64> {
    let n = g.n();
    (0..n)
        .map(|v| {
            let mut acc = g.mask(v);
            let mut m = g.mask(v);
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                acc |= g.mask(w);
            }
            acc & !(1 << v)
        })
        .collect()
}

fn greedy_clique(sq: &[u64]) -> usize {
    let n = sq.len();
    let mut best = 0;
    for start in 0..n {
        let mut clique = 1;
        let mut cand = sq[start];
        while cand != 0 {
            // keep the candidate with the most neighbors among candidates
            let mut pick = 0;
            let mut deg = 0;
            let mut m = cand;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                let d = (sq[v] & cand).count_ones() + 1;
                if d > deg {
                    deg = d;
                    pick = v;
                }
            }
            clique += 1;
            cand &= sq[pick];
        }
        best = best.max(clique);
    }
    best
}

fn first_fit(sq: &[u64]) -> Vec<u8> {
    let n = sq.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(sq[v].count_ones()), v));
    let mut classes: Vec<u64> = Vec::new();
    let mut color = vec![0u8; n];
    for v in order {
        let j = classes
            .iter()
            .position(|&c| c & sq[v] == 0)
            .unwrap_or_else(|| {
                classes.push(0);
                classes.len() - 1
            });
        classes[j] |= 1 << v;
        color[v] = j as u8;
    }
    color
}

struct Dsatur<'a> {
    sq: &'a [u64],
    c: usize,
    classes: Vec<u64>,
    color: [u8; 64],
    uncolored: u64,
    used: usize,
    budget: &'a mut Budget,
    aborted: bool,
}

impl Dsatur<'_> {
    fn available(&self, v: usize) -> u32 {
        let limit = (self.used + 1).min(self.c);
        (0..limit).filter(|&j| self.classes[j] & self.sq[v] == 0).count() as u32
    }

    fn dfs(&mut self) -> bool {
        if self.uncolored == 0 {
            return true;
        }
        if !self.budget.tick() {
            self.aborted = true;
            return false;
        }
        let mut pick = usize::MAX;
        let mut key = (u32::MAX, 0u32);
        let mut m = self.uncolored;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let k = (self.available(v), u32::MAX - (self.sq[v] & self.uncolored).count_ones());
            if k < key {
                key = k;
                pick = v;
            }
        }
        if key.0 == 0 {
            return false;
        }
        let v = pick;
        self.uncolored &= !(1 << v);
        let limit = (self.used + 1).min(self.c);
        for j in 0..limit {
            if self.classes[j] & self.sq[v] != 0 {
                continue;
            }
            self.classes[j] |= 1 << v;
            self.color[v] = j as u8;
            let opened = j == self.used;
            if opened {
                self.used += 1;
            }
            if self.dfs() {
                return true;
            }
            if self.aborted {
                return false;
            }
            if opened {
                self.used -= 1;
            }
            self.classes[j] &= !(1 << v);
        }
        self.uncolored |= 1 << v;
        false
    }
}

fn to_partition(color: &[u8]) -> VertexPartition {
    VertexPartition::from_labels(color.iter().map(|&c| c as usize).collect())
        .expect("every vertex colored")
        .normalized()
}

pub(super) fn color_square(g: &Graph, budget: &mut Budget) -> Outcome {
    let n = g.n();
    if n == 0 {
        return Outcome {
            partition: VertexPartition::from_labels(Vec::new()).unwrap(),
            lower: 0,
        };
    }
    let sq = square_masks(g);
    let greedy = first_fit(&sq);
    let upper = greedy.iter().map(|&c| c as usize + 1).max().unwrap();
    let lower = greedy_clique(&sq).max(g.max_degree() + 1);
    for c in lower..upper {
        let mut s = Dsatur {
            sq: &sq,
            c,
            classes: vec![0; c],
            color: [0; 64],
            uncolored: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            used: 0,
            budget,
            aborted: false,
        };
        if s.dfs() {
            return Outcome {
                partition: to_partition(&s.color[..n]),
                lower: c,
            };
        }
        if s.aborted {
            return Outcome {
                partition: to_partition(&greedy),
                lower: c,
            };
        }
    }
    Outcome {
        partition: to_partition(&greedy),
        lower: upper,
    }
}
