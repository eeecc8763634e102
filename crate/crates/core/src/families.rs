//! Extremal families and sharpness constructions.
//!
//! * `Ω`: graphs with `d×k(G) = ⌊(δ+1)/k⌋`, described by a block
//!   decomposition. [`validate_omega`] checks a proposed decomposition.
//! * `Λ`: `r` equal even parts, a perfect matching inside each part and a
//!   2-regular bipartite graph between any two parts.
//! * `Γ`: graphs with `ρ(G) = n − Δ(G)`.
//! * Triple-common-neighbor graphs: every three vertices have a common
//!   neighbor (`L_{2,t} = 2`).

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators;
use crate::graph::{Graph, VertexPartition, VertexSet};

/// A proposed `Ω` decomposition. `cross_edges` use global indices, with the
/// blocks laid out consecutively in order.
#[derive(Clone, Debug)]
pub struct OmegaSpec {
    pub k: usize,
    pub blocks: Vec<Graph>,
    pub cross_edges: Vec<(usize, usize)>,
    pub target_q: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaReport {
    pub accepted: bool,
    pub q: usize,
    pub t: usize,
    pub r: usize,
    /// One line per failed condition; empty iff accepted.
    pub violations: Vec<String>,
}

impl OmegaSpec {
    /// Start index of every block plus the total order.
    fn offsets(&self) -> Vec<usize> {
        let mut off = vec![0];
        for b in &self.blocks {
            off.push(off.last().unwrap() + b.n());
        }
        off
    }

    fn block_of(off: &[usize], v: usize) -> usize {
        off.partition_point(|&o| o <= v) - 1
    }

    /// The assembled graph `G`. Cross edges inside a block are rejected.
    pub fn assemble(&self) -> Result<Graph> {
        let off = self.offsets();
        let n = *off.last().unwrap();
        let mut g = Graph::empty(n);
        for (i, b) in self.blocks.iter().enumerate() {
            for (u, v) in b.edges() {
                g.add_edge(off[i] + u, off[i] + v);
            }
        }
        for &(u, v) in &self.cross_edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if Self::block_of(&off, u) == Self::block_of(&off, v) {
                return Err(Error::InvalidParameters(format!(
                    "cross edge ({u}, {v}) lies inside block {}",
                    Self::block_of(&off, u)
                )));
            }
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// The blocks as a partition of the assembled graph.
    pub fn block_partition(&self) -> VertexPartition {
        let off = self.offsets();
        let labels = (0..*off.last().unwrap())
            .map(|v| Self::block_of(&off, v))
            .collect();
        VertexPartition::from_labels(labels).expect("blocks are non-empty")
    }

    /// Reads a decomposition off a partition of `g`: the classes become the
    /// blocks (in class order, vertices ascending) and `target_q = δ(g)`.
    /// Also returns the map from new index to original vertex.
    pub fn from_partition(
        g: &Graph,
        partition: &VertexPartition,
        k: usize,
    ) -> Result<(OmegaSpec, Vec<usize>)> {
        if partition.len() != g.n() {
            return Err(Error::InvalidPartition(format!(
                "partition covers {} vertices, graph has {}",
                partition.len(),
                g.n()
            )));
        }
        let classes = partition.classes();
        let order: Vec<usize> = classes.iter().flatten().copied().collect();
        let mut pos = vec![0; g.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let blocks = classes.iter().map(|c| g.induced(c)).collect();
        let cross_edges = g
            .edges()
            .into_iter()
            .filter(|&(u, v)| partition.class_of(u) != partition.class_of(v))
            .map(|(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
            .collect();
        let spec = OmegaSpec {
            k,
            blocks,
            cross_edges,
            target_q: g.min_degree(),
        };
        Ok((spec, order))
    }
}

/// Checks a decomposition against the definition of `Ω`: with
/// `q + 1 = tk + r`, `0 ≤ r < k`, there are exactly `t` blocks, every block
/// has `δ ≥ k − 1`, some block has `δ ≤ 2k − 2`, `δ(G) = q`, and every vertex
/// has at least `k` neighbors in each other block.
pub fn validate_omega(spec: &OmegaSpec) -> Result<OmegaReport> {
    if spec.k == 0 {
        return Err(Error::ZeroK);
    }
    if spec.blocks.is_empty() || spec.blocks.iter().any(|b| b.n() == 0) {
        return Err(Error::InvalidParameters("Ω needs at least one non-empty block".into()));
    }
    let k = spec.k;
    let q = spec.target_q;
    let t = (q + 1) / k;
    let r = (q + 1) % k;
    let g = spec.assemble()?;
    let mut violations = Vec::new();
    if spec.blocks.len() != t {
        violations.push(format!(
            "{} blocks but q + 1 = {} gives t = {t}",
            spec.blocks.len(),
            q + 1
        ));
    }
    for (i, b) in spec.blocks.iter().enumerate() {
        if b.min_degree() + 1 < k {
            violations.push(format!("block {i} has minimum degree {} < k − 1", b.min_degree()));
        }
    }
    if !spec.blocks.iter().any(|b| b.min_degree() <= 2 * k - 2) {
        violations.push("no block has minimum degree ≤ 2k − 2".into());
    }
    if g.min_degree() != q {
        violations.push(format!("δ(G) = {} but q = {q}", g.min_degree()));
    }
    let part = spec.block_partition();
    let sets = part.class_sets();
    'outer: for v in 0..g.n() {
        for (j, set) in sets.iter().enumerate() {
            if j == part.class_of(v) {
                continue;
            }
            let c = set.count_in(g.row(v));
            if c < k {
                violations.push(format!(
                    "vertex {v} of block {} has {c} < k neighbors in block {j}",
                    part.class_of(v)
                ));
                break 'outer;
            }
        }
    }
    Ok(OmegaReport {
        accepted: violations.is_empty(),
        q,
        t,
        r,
        violations,
    })
}

/// A `(tk + r − 1)`-regular member of `Ω`: `t` copies of `K_{k+r}`, where
/// vertex `a` of block `i` is joined to vertices `a, …, a+k−1 (mod k+r)` of
/// every later block `j`. Each vertex then has exactly `k` neighbors in
/// every other block.
pub fn build_canonical_omega(k: usize, t: usize, r: usize) -> Result<OmegaSpec> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if t == 0 || r >= k {
        return Err(Error::InvalidParameters(format!(
            "need t ≥ 1 and 0 ≤ r < k, got t = {t}, r = {r}, k = {k}"
        )));
    }
    let s = k + r;
    let blocks = vec![generators::complete(s); t];
    let mut cross_edges = Vec::new();
    for i in 0..t {
        for j in i + 1..t {
            for a in 0..s {
                for d in 0..k {
                    cross_edges.push((i * s + a, j * s + (a + d) % s));
                }
            }
        }
    }
    Ok(OmegaSpec {
        k,
        blocks,
        cross_edges,
        target_q: t * k + r - 1,
    })
}

fn lambda_params(r: usize, s: usize) -> Result<()> {
    if r < 2 || s < 2 || s % 2 == 1 {
        return Err(Error::InvalidParameters(format!(
            "Λ needs r ≥ 2 parts of even size s ≥ 2, got r = {r}, s = {s}"
        )));
    }
    Ok(())
}

/// The circulant `Λ` member: parts `V_i = {is, …, is+s−1}`, vertex `a` of
/// `V_i` joined to vertices `a` and `a+1 (mod s)` of every other part, and the
/// matching `{2a, 2a+1}` inside each part. `(2r−1)`-regular on `rs` vertices.
pub fn build_lambda(r: usize, s: usize) -> Result<Graph> {
    lambda_params(r, s)?;
    let mut g = Graph::empty(r * s);
    for i in 0..r {
        for a in (0..s).step_by(2) {
            g.add_edge(i * s + a, i * s + a + 1);
        }
        for j in i + 1..r {
            for a in 0..s {
                g.add_edge(i * s + a, j * s + a);
                g.add_edge(i * s + a, j * s + (a + 1) % s);
            }
        }
    }
    Ok(g)
}

/// A random `Λ` member on the same vertex layout: each inter-part graph is
/// the union of two perfect matchings `σ` and `σ∘τ` with `τ` a derangement,
/// and each part gets a random perfect matching.
pub fn random_lambda(r: usize, s: usize, seed: u64) -> Result<Graph> {
    lambda_params(r, s)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(r * s);
    for i in 0..r {
        let mut part: Vec<usize> = (0..s).collect();
        part.shuffle(&mut rng);
        for pair in part.chunks(2) {
            g.add_edge(i * s + pair[0], i * s + pair[1]);
        }
        for j in i + 1..r {
            let mut sigma: Vec<usize> = (0..s).collect();
            sigma.shuffle(&mut rng);
            let tau = loop {
                let mut p: Vec<usize> = (0..s).collect();
                p.shuffle(&mut rng);
                if p.iter().enumerate().all(|(a, &b)| a != b) {
                    break p;
                }
            };
            for a in 0..s {
                g.add_edge(i * s + a, j * s + sigma[a]);
                g.add_edge(i * s + a, j * s + sigma[tau[a]]);
            }
        }
    }
    Ok(g)
}

/// Parts `{is, …, is+s−1}` of a `Λ` member built by this module.
pub fn lambda_partition(r: usize, s: usize) -> Result<VertexPartition> {
    lambda_params(r, s)?;
    VertexPartition::from_labels((0..r * s).map(|v| v / s).collect())
}

/// Whether `partition` exhibits `Λ` structure on `g`: every vertex has
/// exactly one neighbor in its own class and exactly two in every other
/// class. Single-class partitions (perfect matchings) are accepted.
pub fn is_lambda_structure(g: &Graph, partition: &VertexPartition) -> bool {
    if partition.len() != g.n() || g.n() == 0 {
        return false;
    }
    let sets = partition.class_sets();
    (0..g.n()).all(|v| {
        sets.iter().enumerate().all(|(j, set)| {
            let want = if j == partition.class_of(v) { 1 } else { 2 };
            set.count_in(g.row(v)) == want
        })
    })
}

/// Every three vertices have a common neighbor. Requires `n ≥ 3`.
pub fn is_triple_common_neighbor_family(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n < 3 {
        return Err(Error::InvalidParameters(format!(
            "triple-common-neighbor test needs n ≥ 3, got {n}"
        )));
    }
    for a in 0..n {
        for b in a + 1..n {
            let ab: Vec<u64> = g.row(a).iter().zip(g.row(b)).map(|(x, y)| x & y).collect();
            for c in b + 1..n {
                if ab.iter().zip(g.row(c)).all(|(x, y)| x & y == 0) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Membership in `Γ`: some maximum-degree `u` and some `v ∈ N(u)` with
/// `N[v] ⊆ N[u]`, `V ∖ N[u]` independent, and every vertex of
/// `N[u] ∖ N[v]` having at most one neighbor outside `N[u]`.
pub fn is_in_gamma(g: &Graph) -> bool {
    let n = g.n();
    let delta = g.max_degree();
    for u in (0..n).filter(|&u| g.degree(u) == delta) {
        let nu = g.closed_neighborhood(u);
        let outside: Vec<usize> = (0..n).filter(|&w| !nu.contains(w)).collect();
        let outside_set = VertexSet::from_members(n, outside.iter().copied()).unwrap();
        if outside.iter().any(|&w| outside_set.count_in(g.row(w)) > 0) {
            continue;
        }
        for v in g.neighbors(u) {
            let nv = g.closed_neighborhood(v);
            if !nv.is_subset(&nu) {
                continue;
            }
            if nu
                .iter()
                .filter(|&w| !nv.contains(w))
                .all(|w| outside_set.count_in(g.row(w)) <= 1)
            {
                return true;
            }
        }
    }
    false
}

/// Named sharpness constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sharpness {
    /// `K_{2p}` minus a perfect matching, `p ≥ 3`.
    NgCocktail { p: usize },
    /// Cycle `0..c_len` with a pendant `c_len + i` on `positions[i]`.
    GirthPendantCycle { c_len: usize, positions: Vec<usize> },
    /// Three paths joined to a new vertex, `t ≥ 1`.
    TreeDiffSharp { t: usize },
    /// Path `u₁…u_{3p}` with two pendant 4-cycles per path vertex.
    GapGraph { p: usize },
}

pub fn build_sharpness(kind: &Sharpness) -> Result<Graph> {
    match kind {
        Sharpness::NgCocktail { p } => ng_cocktail(*p),
        Sharpness::GirthPendantCycle { c_len, positions } => girth_pendant_cycle(*c_len, positions),
        Sharpness::TreeDiffSharp { t } => tree_diff_sharp(*t),
        Sharpness::GapGraph { p } => gap_graph(*p),
    }
}

pub fn ng_cocktail(p: usize) -> Result<Graph> {
    if p < 3 {
        return Err(Error::InvalidParameters(format!("ng_cocktail needs p ≥ 3, got {p}")));
    }
    generators::complete_minus_perfect_matching(2 * p)
}

/// Pendant positions must be distinct and at cyclic distance at least 3.
pub fn girth_pendant_cycle(c_len: usize, positions: &[usize]) -> Result<Graph> {
    let mut g = generators::cycle(c_len)?;
    for (i, &a) in positions.iter().enumerate() {
        if a >= c_len {
            return Err(Error::VertexOutOfRange { vertex: a, n: c_len });
        }
        for &b in &positions[..i] {
            let d = a.abs_diff(b);
            if d.min(c_len - d) < 3 {
                return Err(Error::InvalidParameters(format!(
                    "pendant positions {b} and {a} are closer than 3 on the cycle"
                )));
            }
        }
    }
    let mut edges = g.edges();
    edges.extend(positions.iter().enumerate().map(|(i, &a)| (a, c_len + i)));
    g = Graph::new(c_len + positions.len(), &edges)?;
    Ok(g)
}

/// Vertex indices of [`tree_diff_sharp`]: `u = 0`, `x_i = i`,
/// `y_i = 3t−1+i`, `z_i = 6t−1+i` (1-based `i`).
struct TreeDiffLayout {
    t: usize,
}

impl TreeDiffLayout {
    fn x(&self, i: usize) -> usize {
        i
    }
    fn y(&self, i: usize) -> usize {
        3 * self.t - 1 + i
    }
    fn z(&self, i: usize) -> usize {
        6 * self.t - 1 + i
    }
}

/// Paths `x₁…x_{3t−1}`, `y₁…y_{3t}`, `z₁…z_{3t−1}` and a vertex `u` joined to
/// `x₁, y₁, z₁`; `9t − 1` vertices.
pub fn tree_diff_sharp(t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::InvalidParameters("tree_diff_sharp needs t ≥ 1".into()));
    }
    let l = TreeDiffLayout { t };
    let mut edges = vec![(0, l.x(1)), (0, l.y(1)), (0, l.z(1))];
    for i in 1..3 * t - 1 {
        edges.push((l.x(i), l.x(i + 1)));
        edges.push((l.z(i), l.z(i + 1)));
    }
    for i in 1..3 * t {
        edges.push((l.y(i), l.y(i + 1)));
    }
    Graph::new(9 * t - 1, &edges)
}

/// `(V ∖ {x₁}, the 2LP set of size 6t − 1)` for [`tree_diff_sharp`].
pub fn tree_diff_certificates(t: usize) -> Result<(VertexSet, VertexSet)> {
    let g = tree_diff_sharp(t)?;
    let l = TreeDiffLayout { t };
    let n = g.n();
    let mut total = VertexSet::full(n);
    total.remove(l.x(1));
    let mut closed = Vec::new();
    for i in 1..t {
        closed.extend([l.x(3 * i - 1), l.x(3 * i), l.z(3 * i), l.z(3 * i + 1)]);
    }
    for i in 1..=t {
        closed.extend([l.y(3 * i - 1), l.y(3 * i)]);
    }
    closed.extend([0, l.x(3 * t - 1), l.z(1)]);
    Ok((total, VertexSet::from_members(n, closed)?))
}

/// Vertex indices of [`gap_graph`]: `u_i = i − 1`; the 4-cycles at `u_i`
/// occupy `3p + 8(i−1) + 0..4` (x) and `+ 4..8` (y).
fn gap_x(p: usize, i: usize, j: usize) -> usize {
    3 * p + 8 * (i - 1) + (j - 1)
}

fn gap_y(p: usize, i: usize, j: usize) -> usize {
    gap_x(p, i, j) + 4
}

/// `27p` vertices.
pub fn gap_graph(p: usize) -> Result<Graph> {
    if p == 0 {
        return Err(Error::InvalidParameters("gap_graph needs p ≥ 1".into()));
    }
    let mut edges = Vec::new();
    for i in 1..=3 * p {
        if i > 1 {
            edges.push((i - 2, i - 1));
        }
        for c in [gap_x, gap_y] {
            for j in 1..=4 {
                edges.push((c(p, i, j), c(p, i, j % 4 + 1)));
            }
            edges.push((i - 1, c(p, i, 1)));
        }
    }
    Graph::new(27 * p, &edges)
}

/// `(S, S′)`: all 4-cycle vertices (a 2TLP set) and
/// `{u_{3i−2}, u_{3i−1}} ∪ {x_{i2}, x_{i3}, y_{i2}, y_{i3}}` (a 2LP set).
pub fn gap_certificates(p: usize) -> Result<(VertexSet, VertexSet)> {
    let n = gap_graph(p)?.n();
    let total = VertexSet::from_members(n, 3 * p..n)?;
    let mut closed = Vec::new();
    for i in 1..=p {
        closed.extend([3 * i - 3, 3 * i - 2]);
    }
    for i in 1..=3 * p {
        closed.extend([gap_x(p, i, 2), gap_x(p, i, 3), gap_y(p, i, 2), gap_y(p, i, 3)]);
    }
    Ok((total, VertexSet::from_members(n, closed)?))
}
