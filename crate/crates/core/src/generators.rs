//! Canonically labelled standard graphs and seeded random instances.
//!
//! Random stream: every seeded generator draws from
//! `ChaCha8Rng::seed_from_u64(seed)` (rand_chacha 0.3) using raw
//! `next_u64()` outputs. `random_tree(n, seed)` draws the `n - 2` Prüfer
//! entries as `next_u64() % n`, in order, and decodes them by repeatedly
//! joining the smallest current leaf to the next entry.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn need(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameters(msg.into()))
    }
}

pub fn path(n: usize) -> Result<Graph> {
    need(n >= 1, "path needs at least one vertex")?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    need(n >= 3, "cycle needs at least three vertices")?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

/// `K_{1,leaves}` with the center at vertex 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::new(leaves + 1, &edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// Parts occupy consecutive index ranges in the given order.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    need(
        !parts.is_empty() && parts.iter().all(|&p| p >= 1),
        "every part needs at least one vertex",
    )?;
    let n = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, p));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// `K_n` minus the matching `{2i, 2i+1}`.
pub fn complete_minus_perfect_matching(n: usize) -> Result<Graph> {
    need(n >= 2 && n.is_multiple_of(2), "perfect matching removal needs even order >= 2")?;
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if !(u % 2 == 0 && v == u + 1) {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Uniform labelled tree from a seeded Prüfer sequence (see module docs).
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    need(n >= 1, "tree needs at least one vertex")?;
    if n <= 2 {
        return path(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2)
        .map(|_| (rng.next_u64() % n as u64) as usize)
        .collect();
    Ok(prufer_decode(n, &code))
}

pub(crate) fn prufer_decode(n: usize, code: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut g = Graph::empty(n);
    for &c in code {
        let Reverse(leaf) = leaves.pop().expect("Prüfer code admits a leaf");
        g.add_edge(leaf, c);
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.push(Reverse(c));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    g.add_edge(a, b);
    g
}

/// Erdős–Rényi `G(n, p)`; pairs visited in graph6 order `(i, j)`, `i < j`, by column.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_shapes() {
        assert_eq!(path(1).unwrap(), Graph::empty(1));
        assert!(path(0).is_err());
        assert!(cycle(2).is_err());
        assert_eq!(star(4).degree_stats().max, 4);
        assert_eq!(complete(5).m(), 10);
        assert_eq!(complete_multipartite(&[2, 3]).unwrap().m(), 6);
        assert!(complete_multipartite(&[2, 0]).is_err());
    }

    #[test]
    fn cocktail_party() {
        let g = complete_minus_perfect_matching(6).unwrap();
        assert_eq!(g.n(), 6);
        assert!((0..6).all(|v| g.degree(v) == 4));
        assert!(complete_minus_perfect_matching(5).is_err());
    }

    #[test]
    fn random_tree_is_deterministic_tree() {
        let a = random_tree(10, 1).unwrap();
        let b = random_tree(10, 1).unwrap();
        assert_eq!(a.edges(), b.edges());
        assert!(a.is_tree());
        for n in 1..40 {
            assert!(random_tree(n, n as u64 * 7).unwrap().is_tree());
        }
        assert_ne!(random_tree(30, 1).unwrap(), random_tree(30, 2).unwrap());
    }

    #[test]
    fn prufer_star() {
        // code of a star centred at 0 is all zeros
        assert_eq!(prufer_decode(5, &[0, 0, 0]), star(4));
    }
}
