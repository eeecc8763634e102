//! Linear-time 2-limited-packing partition of a tree into `⌈(Δ+1)/2⌉`
//! classes.
//!
//! Labels `1..=p` are assigned top-down from a maximum-degree root. When the
//! children of `v` are labeled, the only labels already present in `N[v]`
//! are those of `v` and of its parent, so each label has a remaining
//! capacity of 2 minus its uses there. Children take labels in pairs from the
//! labels still at full capacity (ascending), and the last one or two
//! children take the labels of `v` and its parent, following the parity
//! cases of the construction.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexPartition};
use crate::verify;

/// A tree rooted at its lowest-index vertex of maximum degree.
#[derive(Clone, Debug)]
pub struct RootedTree {
    pub underlying: Graph,
    pub root: usize,
    pub parent: Vec<Option<usize>>,
    /// Children in ascending index order.
    pub children: Vec<Vec<usize>>,
    /// Vertices in breadth-first order from the root.
    pub bfs: Vec<usize>,
}

impl RootedTree {
    pub fn new(t: &Graph) -> Result<RootedTree> {
        if !t.is_tree() {
            return Err(Error::NotATree);
        }
        let n = t.n();
        let delta = t.max_degree();
        let root = (0..n).find(|&v| t.degree(v) == delta).unwrap();
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut bfs = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        seen[root] = true;
        bfs.push(root);
        let mut head = 0;
        while head < bfs.len() {
            let v = bfs[head];
            head += 1;
            for w in t.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    children[v].push(w);
                    bfs.push(w);
                }
            }
        }
        Ok(RootedTree {
            underlying: t.clone(),
            root,
            parent,
            children,
            bfs,
        })
    }

    pub fn max_degree(&self) -> usize {
        self.underlying.max_degree()
    }
}

/// Which branch of the construction labeled a vertex's children.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    /// Leaf: nothing to label.
    Leaf,
    /// Root, `Δ` even: children in pairs.
    RootEven,
    /// Root, `Δ` odd: last child shares the root's label.
    RootOdd,
    /// `Δ` even: children in pairs, an odd one out takes the parent's label.
    EvenDescend,
    /// `Δ` odd, vertex shares its parent's label: children in pairs.
    SharedLabel,
    /// `Δ` odd, distinct from its parent: odd count ends with the parent's
    /// label, even count ends with (own label, parent's label).
    DistinctLabel,
}

#[derive(Clone, Debug)]
pub struct TreeLabeling {
    /// Label in `1..=p` per vertex.
    pub labels: Vec<usize>,
    pub cases: Vec<CaseTag>,
    pub classes: usize,
}

/// `χ×2(T) = ⌈(Δ(T)+1)/2⌉`; 1 for `K₁`.
pub fn chi_x2_tree_value(t: &Graph) -> Result<usize> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    Ok((t.max_degree() + 1).div_ceil(2))
}

/// Full-capacity labels (ascending, not in `skip`) handed out in pairs.
fn pairs(p: usize, skip: &[usize], count: usize) -> impl Iterator<Item = usize> + '_ {
    (1..=p)
        .filter(move |l| !skip.contains(l))
        .flat_map(|l| [l, l])
        .take(count)
}

pub fn label_tree(tree: &RootedTree) -> Result<TreeLabeling> {
    let n = tree.underlying.n();
    let delta = tree.max_degree();
    let p = (delta + 1).div_ceil(2);
    let even = delta.is_multiple_of(2);
    let mut labels = vec![0usize; n];
    let mut cases = vec![CaseTag::Leaf; n];
    labels[tree.root] = p;
    for &v in &tree.bfs {
        let kids = &tree.children[v];
        if kids.is_empty() {
            continue;
        }
        let b = labels[v];
        let s = kids.len();
        let assigned: Vec<usize> = match tree.parent[v] {
            None if even => {
                cases[v] = CaseTag::RootEven;
                pairs(p, &[b], s).collect()
            }
            None => {
                cases[v] = CaseTag::RootOdd;
                pairs(p, &[b], s - 1).chain([b]).collect()
            }
            Some(par) => {
                let a = labels[par];
                if even {
                    cases[v] = CaseTag::EvenDescend;
                    let mut l: Vec<usize> = pairs(p, &[a, b], s - s % 2).collect();
                    if s % 2 == 1 {
                        l.push(a);
                    }
                    l
                } else if a == b {
                    cases[v] = CaseTag::SharedLabel;
                    pairs(p, &[b], s).collect()
                } else {
                    cases[v] = CaseTag::DistinctLabel;
                    if s % 2 == 1 {
                        pairs(p, &[a, b], s - 1).chain([a]).collect()
                    } else {
                        pairs(p, &[a, b], s - 2).chain([b, a]).collect()
                    }
                }
            }
        };
        if assigned.len() != s {
            return Err(Error::CertificateRejected(format!(
                "tree labeling ran out of labels at vertex {v}"
            )));
        }
        for (&w, l) in kids.iter().zip(assigned) {
            labels[w] = l;
        }
    }
    Ok(TreeLabeling {
        labels,
        cases,
        classes: p,
    })
}

/// A 2-limited-packing partition of `t` with exactly `⌈(Δ+1)/2⌉` classes;
/// class `i` holds the vertices labeled `i + 1`. The output is re-verified.
pub fn tree_2lp_partition(t: &Graph) -> Result<VertexPartition> {
    let tree = RootedTree::new(t)?;
    let lab = label_tree(&tree)?;
    let partition = VertexPartition::from_labels(lab.labels.iter().map(|l| l - 1).collect())
        .map_err(|e| Error::CertificateRejected(format!("tree labeling skipped a label: {e}")))?;
    if partition.class_count() != lab.classes {
        return Err(Error::CertificateRejected(format!(
            "tree labeling used {} classes, expected {}",
            partition.class_count(),
            lab.classes
        )));
    }
    let verdict = verify::is_klp_partition(t, &partition, 2)?;
    if let Some(v) = verdict.violation() {
        return Err(Error::CertificateRejected(format!("tree labeling: {v:?}")));
    }
    Ok(partition)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn values() {
        assert_eq!(chi_x2_tree_value(&path(4).unwrap()).unwrap(), 2);
        assert_eq!(chi_x2_tree_value(&star(5)).unwrap(), 3);
        assert_eq!(chi_x2_tree_value(&complete(1)).unwrap(), 1);
        assert!(matches!(chi_x2_tree_value(&cycle(4).unwrap()), Err(Error::NotATree)));
        assert!(matches!(tree_2lp_partition(&Graph::empty(2)), Err(Error::NotATree)));
    }

    #[test]
    fn star_k14() {
        let p = tree_2lp_partition(&star(4)).unwrap();
        assert_eq!(p.classes(), vec![vec![1, 2], vec![3, 4], vec![0]]);
    }

    #[test]
    fn path_and_trivial() {
        let p = tree_2lp_partition(&path(5).unwrap()).unwrap();
        assert_eq!(p.class_count(), 2);
        let t = RootedTree::new(&path(5).unwrap()).unwrap();
        assert_eq!(t.root, 1);
        let k1 = tree_2lp_partition(&complete(1)).unwrap();
        assert_eq!(k1.classes(), vec![vec![0]]);
        assert_eq!(tree_2lp_partition(&path(2).unwrap()).unwrap().class_count(), 1);
    }

    #[test]
    fn random_trees_all_cases() {
        let mut seen = std::collections::HashSet::new();
        for seed in 0..300 {
            let t = random_tree(2 + (seed as usize % 60), seed).unwrap();
            let tree = RootedTree::new(&t).unwrap();
            let lab = label_tree(&tree).unwrap();
            seen.extend(lab.cases.iter().copied());
            let p = tree_2lp_partition(&t).unwrap();
            assert_eq!(p.class_count(), (t.max_degree() + 1).div_ceil(2));
        }
        for c in [
            CaseTag::RootEven,
            CaseTag::RootOdd,
            CaseTag::EvenDescend,
            CaseTag::SharedLabel,
            CaseTag::DistinctLabel,
        ] {
            assert!(seen.contains(&c), "{c:?} never exercised");
        }
    }
}
