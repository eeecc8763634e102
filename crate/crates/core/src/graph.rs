//! Finite simple graphs with packed adjacency rows.
//!
//! Every vertex owns a row of 64-bit words; bit `u` of row `v` is set iff
//! `uv` is an edge. Neighborhood intersection counts, the inner loop of
//! every predicate and solver, are then word-wise `popcount`s.

use serde::Serialize;

use crate::error::{Error, Result};

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Immutable simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    words: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to one edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        let words = words_for(n);
        Graph {
            n,
            m: 0,
            words,
            adj: vec![0; n * words],
        }
    }

    pub(crate) fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !self.has_edge(u, v) {
            self.adj[u * self.words + v / 64] |= 1 << (v % 64);
            self.adj[v * self.words + u / 64] |= 1 << (u % 64);
            self.m += 1;
        }
        Ok(())
    }

    /// Panicking variant for internal constructors whose indices are known valid.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("internal edge out of range");
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Packed open neighborhood of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.row(v))
    }

    /// Closed neighborhood as a fresh vertex set.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.open_neighborhood(v);
        s.insert(v);
        s
    }

    pub fn open_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet {
            n: self.n,
            words: self.row(v).to_vec(),
        }
    }

    /// Edge list with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// `(Δ, δ, m)`; all zero for the null graph.
    pub fn degree_stats(&self) -> DegreeStats {
        let d = self.degrees();
        DegreeStats {
            max: d.iter().copied().max().unwrap_or(0),
            min: d.iter().copied().min().unwrap_or(0),
            edges: self.m,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.degree_stats().max
    }

    pub fn min_degree(&self) -> usize {
        self.degree_stats().min
    }

    /// Single 64-bit adjacency mask; only valid for `n <= 64`.
    #[inline]
    pub(crate) fn mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        if self.words == 0 {
            0
        } else {
            self.adj[v * self.words]
        }
    }

    /// Induced subgraph on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Connected components, each sorted, in order of their least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m + 1 == self.n && self.is_connected()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub max: usize,
    pub min: usize,
    pub edges: usize,
}

pub(crate) fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            }
        })
    })
}

/// Subset of the vertices of a graph on `n` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl VertexSet {
    pub fn new(n: usize) -> VertexSet {
        VertexSet {
            n,
            words: vec![0; words_for(n)],
        }
    }

    pub fn full(n: usize) -> VertexSet {
        let mut s = VertexSet::new(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_members(n: usize, members: impl IntoIterator<Item = usize>) -> Result<VertexSet> {
        let mut s = VertexSet::new(n);
        for v in members {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub(crate) fn from_mask(n: usize, mask: u64) -> VertexSet {
        let mut s = VertexSet::new(n);
        if !s.words.is_empty() {
            s.words[0] = mask;
        }
        s
    }

    /// Size of the vertex range this set is bound to.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range {}", self.n);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        bits(&self.words)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// `|self ∩ row|` for a packed row of the same width.
    #[inline]
    pub fn count_in(&self, row: &[u64]) -> usize {
        self.words
            .iter()
            .zip(row)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            n: self.n.max(other.n),
            words: (0..self.words.len().max(other.words.len()))
                .map(|i| self.words.get(i).unwrap_or(&0) | other.words.get(i).unwrap_or(&0))
                .collect(),
        }
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Same members, rebound to a larger vertex range.
    pub fn widen(&self, n: usize) -> VertexSet {
        assert!(n >= self.n);
        let mut words = self.words.clone();
        words.resize(words_for(n), 0);
        VertexSet { n, words }
    }
}

/// Total labelling of `0..n` into non-empty classes `0..c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexPartition {
    class_of: Vec<usize>,
    classes: usize,
}

impl Serialize for VertexPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.classes())
    }
}

impl VertexPartition {
    /// From a class label per vertex. Labels must be exactly `0..c`, each used.
    pub fn from_labels(class_of: Vec<usize>) -> Result<VertexPartition> {
        let classes = class_of.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut used = vec![false; classes];
        for &c in &class_of {
            used[c] = true;
        }
        if let Some(empty) = used.iter().position(|u| !u) {
            return Err(Error::InvalidPartition(format!("class {empty} is empty")));
        }
        Ok(VertexPartition { class_of, classes })
    }

    /// From explicit classes; they must be disjoint, non-empty and cover `0..n`.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<VertexPartition> {
        let mut class_of = vec![usize::MAX; n];
        for (i, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::InvalidPartition(format!("class {i} is empty")));
            }
            for &v in class {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if class_of[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} appears in more than one class"
                    )));
                }
                class_of[v] = i;
            }
        }
        if let Some(v) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::InvalidPartition(format!("vertex {v} is unassigned")));
        }
        Ok(VertexPartition {
            class_of,
            classes: classes.len(),
        })
    }

    /// Relabels classes by first occurrence so vertex 0 is in class 0, etc.
    pub fn normalized(&self) -> VertexPartition {
        let mut map = vec![usize::MAX; self.classes];
        let mut next = 0;
        let class_of = self
            .class_of
            .iter()
            .map(|&c| {
                if map[c] == usize::MAX {
                    map[c] = next;
                    next += 1;
                }
                map[c]
            })
            .collect();
        VertexPartition {
            class_of,
            classes: self.classes,
        }
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn class_count(&self) -> usize {
        self.classes
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.classes];
        for (v, &c) in self.class_of.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    pub fn class_sets(&self) -> Vec<VertexSet> {
        let n = self.class_of.len();
        let mut out = vec![VertexSet::new(n); self.classes];
        for (v, &c) in self.class_of.iter().enumerate() {
            out[c].insert(v);
        }
        out
    }
}
