//! Graph streams: exhaustive labeled graphs, unlabeled trees, seeded random
//! graphs.

use std::collections::BTreeSet;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::generators;
use crate::graph::Graph;

/// Vertex pairs in graph6 bit order: `(0,1), (0,2), (1,2), (0,3), …`.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

/// All `2^(n(n−1)/2)` labeled graphs on `n ≤ 6` vertices. Graph number `i`
/// contains pair `j` (graph6 order) iff bit `j` of `i` is set.
pub fn enumerate_labeled_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > 6 {
        return Err(Error::InvalidParameters(format!(
            "exhaustive enumeration covers 1 ≤ n ≤ 6, got {n}"
        )));
    }
    let pairs = pairs(n);
    Ok((0u64..1 << pairs.len())
        .map(|mask| {
            let mut g = Graph::empty(n);
            for (j, &(u, v)) in pairs.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            g
        })
        .collect())
}

/// AHU encoding of the subtree at `v` away from `parent`.
fn encode(g: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .filter(|&w| Some(w) != parent)
        .map(|w| encode(g, w, Some(v)))
        .collect();
    kids.sort();
    let mut s = String::from("(");
    for k in kids {
        s.push_str(&k);
    }
    s.push(')');
    s
}

fn centers(t: &Graph) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg = t.degrees();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        for &v in &layer {
            removed[v] = true;
        }
        let mut next = Vec::new();
        for &v in &layer {
            for w in t.neighbors(v) {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Canonical string of a tree: the least AHU encoding over its centers.
pub fn tree_canonical_form(t: &Graph) -> String {
    centers(t)
        .into_iter()
        .map(|c| encode(t, c, None))
        .min()
        .unwrap_or_default()
}

/// Rebuilds a tree from its encoding, numbering vertices in preorder.
fn decode(code: &str) -> Graph {
    let mut edges = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0;
    for c in code.bytes() {
        if c == b'(' {
            if let Some(&p) = stack.last() {
                edges.push((p, next));
            }
            stack.push(next);
            next += 1;
        } else {
            stack.pop();
        }
    }
    Graph::new(next, &edges).expect("well-formed encoding")
}

/// One representative of every unlabeled tree on `n ≥ 1` vertices, ordered
/// by canonical form; vertices are numbered in preorder from a center.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::InvalidParameters("trees need n ≥ 1".into()));
    }
    let mut level: BTreeSet<String> = BTreeSet::from([String::from("()")]);
    for _ in 1..n {
        let mut next = BTreeSet::new();
        for code in &level {
            let t = decode(code);
            for v in 0..t.n() {
                let mut edges = t.edges();
                edges.push((v, t.n()));
                let bigger = Graph::new(t.n() + 1, &edges).unwrap();
                next.insert(tree_canonical_form(&bigger));
            }
        }
        level = next;
    }
    Ok(level.iter().map(|c| decode(c)).collect())
}

/// Where a sweep draws its graphs from.
#[derive(Clone, Debug)]
pub enum Source {
    /// Every labeled graph with `1 ≤ n ≤ max_n` (`max_n ≤ 6`).
    Exhaustive { max_n: usize },
    /// Every unlabeled tree with `1 ≤ n ≤ max_n`.
    Trees { max_n: usize },
    /// `count` graphs `G(n, p)` with `n` uniform in `1..=max_n`.
    Random {
        count: usize,
        max_n: usize,
        p: f64,
        seed: u64,
    },
    /// `count` random trees with `n` uniform in `1..=max_n`.
    RandomTrees { count: usize, max_n: usize, seed: u64 },
    Graphs(Vec<Graph>),
}

impl Source {
    pub fn graphs(&self) -> Result<Vec<Graph>> {
        match self {
            Source::Exhaustive { max_n } => {
                let mut out = Vec::new();
                for n in 1..=*max_n {
                    out.extend(enumerate_labeled_graphs(n)?);
                }
                Ok(out)
            }
            Source::Trees { max_n } => {
                let mut out = Vec::new();
                for n in 1..=*max_n {
                    out.extend(enumerate_trees(n)?);
                }
                Ok(out)
            }
            Source::Random {
                count,
                max_n,
                p,
                seed,
            } => {
                if *max_n == 0 {
                    return Err(Error::InvalidParameters("random graphs need max_n ≥ 1".into()));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                Ok((0..*count)
                    .map(|_| {
                        let n = rng.gen_range(1..=*max_n);
                        generators::random_gnp(n, *p, rng.next_u64())
                    })
                    .collect())
            }
            Source::RandomTrees {
                count,
                max_n,
                seed,
            } => {
                if *max_n == 0 {
                    return Err(Error::InvalidParameters("random trees need max_n ≥ 1".into()));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                (0..*count)
                    .map(|_| {
                        let n = rng.gen_range(1..=*max_n);
                        generators::random_tree(n, rng.next_u64())
                    })
                    .collect()
            }
            Source::Graphs(g) => Ok(g.clone()),
        }
    }
}
