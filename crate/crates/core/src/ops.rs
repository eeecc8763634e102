//! Graph operators and structural queries.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Shortest cycle length, or `Acyclic` for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Girth {
    Cycle(usize),
    Acyclic,
}

impl Girth {
    pub fn length(self) -> Option<usize> {
        match self {
            Girth::Cycle(g) => Some(g),
            Girth::Acyclic => None,
        }
    }
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let mut h = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                h.add_edge(u, v);
            }
        }
    }
    h
}

/// Breadth-first distances from `s`; `None` marks unreachable vertices.
pub fn distances_from(g: &Graph, s: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        for u in g.neighbors(v) {
            if dist[u].is_none() {
                dist[u] = Some(d + 1);
                queue.push_back(u);
            }
        }
    }
    dist
}

/// `u ~ v` iff `1 <= dist(u, v) <= 2`.
pub fn square(g: &Graph) -> Graph {
    let n = g.n();
    let mut h = Graph::empty(n);
    for u in 0..n {
        for v in g.neighbors(u) {
            if u < v {
                h.add_edge(u, v);
            }
            for w in g.neighbors(v) {
                if u < w {
                    h.add_edge(u, w);
                }
            }
        }
    }
    h
}

/// Lexicographic product `G ∘ H`; vertex `(g, h)` is `g * |V(H)| + h`.
pub fn lexicographic_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.n() == 0 || h.n() == 0 {
        return Err(Error::InvalidParameters(
            "lexicographic product needs non-empty factors".into(),
        ));
    }
    let nh = h.n();
    let mut out = Graph::empty(g.n() * nh);
    for a in 0..g.n() {
        for b in 0..nh {
            let x = a * nh + b;
            for a2 in g.neighbors(a).filter(|&a2| a2 > a) {
                for b2 in 0..nh {
                    out.add_edge(x, a2 * nh + b2);
                }
            }
            for b2 in h.neighbors(b).filter(|&b2| b2 > b) {
                out.add_edge(x, a * nh + b2);
            }
        }
    }
    Ok(out)
}

/// `G ⊙ K₁`: pendant `n + i` attached to vertex `i`.
pub fn corona_k1(g: &Graph) -> Graph {
    let n = g.n();
    let mut out = Graph::empty(2 * n);
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for i in 0..n {
        out.add_edge(i, n + i);
    }
    out
}

/// Shortest cycle via one breadth-first search per root.
pub fn girth(g: &Graph) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.fill(usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            if 2 * dist[v] + 1 >= best {
                break;
            }
            for u in g.neighbors(v) {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else if parent[v] != u {
                    best = best.min(dist[u] + dist[v] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Acyclic
    } else {
        Girth::Cycle(best)
    }
}

pub fn is_bipartite(g: &Graph) -> bool {
    let mut side = vec![u8::MAX; g.n()];
    for s in 0..g.n() {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for u in g.neighbors(v) {
                if side[u] == u8::MAX {
                    side[u] = 1 - side[v];
                    queue.push_back(u);
                } else if side[u] == side[v] {
                    return false;
                }
            }
        }
    }
    true
}

/// Chordality via maximum cardinality search: the reverse visit order is a
/// perfect elimination ordering iff the graph is chordal.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        visited[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !visited[u] {
                weight[u] += 1;
            }
        }
    }
    // position in elimination order = reverse of visit order
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().rev().enumerate() {
        pos[v] = i;
    }
    for v in 0..n {
        // later neighbors of v in elimination order must form a clique;
        // enough to check they are all adjacent to the earliest of them
        let later: Vec<usize> = g.neighbors(v).filter(|&u| pos[u] > pos[v]).collect();
        if let Some(&first) = later.iter().min_by_key(|&&u| pos[u]) {
            if later.iter().any(|&u| u != first && !g.has_edge(first, u)) {
                return false;
            }
        }
    }
    true
}
