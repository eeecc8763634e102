//! Naive reference implementations: adjacency matrix, full subset scans and
//! set-partition enumeration. Shares no code with the solvers.

#![allow(dead_code)]

use limpack::Graph;

pub struct Naive {
    pub n: usize,
    adj: Vec<Vec<bool>>,
}

impl Naive {
    pub fn new(g: &Graph) -> Naive {
        let n = g.n();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Naive { n, adj }
    }

    fn count(&self, set: u32, v: usize, closed: bool) -> usize {
        (0..self.n)
            .filter(|&w| set >> w & 1 == 1 && (self.adj[v][w] || (closed && v == w)))
            .count()
    }

    fn min_degree(&self) -> usize {
        (0..self.n)
            .map(|v| self.adj[v].iter().filter(|&&a| a).count())
            .min()
            .unwrap_or(0)
    }

    pub fn is_packing_k(&self, set: u32, k: usize, closed: bool) -> bool {
        (0..self.n).all(|v| self.count(set, v, closed) <= k)
    }

    pub fn is_tuple_dom(&self, set: u32, k: usize) -> bool {
        (0..self.n).all(|v| self.count(set, v, true) >= k)
    }

    fn subsets(&self) -> impl Iterator<Item = u32> {
        0..1u32 << self.n
    }

    pub fn l_k(&self, k: usize) -> usize {
        self.subsets()
            .filter(|&s| self.is_packing_k(s, k, true))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    pub fn l_kt(&self, k: usize) -> usize {
        self.subsets()
            .filter(|&s| self.is_packing_k(s, k, false))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    pub fn gamma_xk(&self, k: usize) -> Option<usize> {
        if self.n > 0 && self.min_degree() + 1 < k {
            return None;
        }
        self.subsets()
            .filter(|&s| self.is_tuple_dom(s, k))
            .map(|s| s.count_ones() as usize)
            .min()
    }

    /// Pairwise-disjoint neighborhoods.
    fn pairwise(&self, set: u32, closed: bool) -> bool {
        let members: Vec<usize> = (0..self.n).filter(|&v| set >> v & 1 == 1).collect();
        members.iter().enumerate().all(|(i, &a)| {
            members[i + 1..].iter().all(|&b| {
                !(0..self.n).any(|w| {
                    let na = self.adj[a][w] || (closed && a == w);
                    let nb = self.adj[b][w] || (closed && b == w);
                    na && nb
                })
            })
        })
    }

    pub fn rho(&self) -> usize {
        self.subsets()
            .filter(|&s| self.pairwise(s, true))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    pub fn rho_o(&self) -> usize {
        self.subsets()
            .filter(|&s| self.pairwise(s, false))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    fn distances(&self) -> Vec<Vec<usize>> {
        let inf = usize::MAX / 4;
        let mut d = vec![vec![inf; self.n]; self.n];
        for (u, row) in d.iter_mut().enumerate() {
            row[u] = 0;
            for v in 0..self.n {
                if self.adj[u][v] {
                    row[v] = 1;
                }
            }
        }
        for m in 0..self.n {
            for u in 0..self.n {
                for v in 0..self.n {
                    if d[u][m] + d[m][v] < d[u][v] {
                        d[u][v] = d[u][m] + d[m][v];
                    }
                }
            }
        }
        d
    }

    /// Every set partition as a class mask list.
    pub fn set_partitions(&self) -> Vec<Vec<u32>> {
        fn go(v: usize, n: usize, classes: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if v == n {
                out.push(classes.clone());
                return;
            }
            for i in 0..classes.len() {
                classes[i] |= 1 << v;
                go(v + 1, n, classes, out);
                classes[i] &= !(1 << v);
            }
            classes.push(1 << v);
            go(v + 1, n, classes, out);
            classes.pop();
        }
        let mut out = Vec::new();
        go(0, self.n, &mut Vec::new(), &mut out);
        out
    }

    pub fn chi_xk(&self, k: usize, parts: &[Vec<u32>]) -> usize {
        parts
            .iter()
            .filter(|p| p.iter().all(|&c| self.is_packing_k(c, k, true)))
            .map(|p| p.len())
            .min()
            .unwrap()
    }

    pub fn d_xk(&self, k: usize, parts: &[Vec<u32>]) -> Option<usize> {
        if self.n > 0 && self.min_degree() + 1 < k {
            return None;
        }
        parts
            .iter()
            .filter(|p| p.iter().all(|&c| self.is_tuple_dom(c, k)))
            .map(|p| p.len())
            .max()
    }

    /// Classes must be pairwise at distance at least 3.
    pub fn chi2(&self, parts: &[Vec<u32>]) -> usize {
        let d = self.distances();
        parts
            .iter()
            .filter(|p| {
                p.iter().all(|&c| {
                    (0..self.n).all(|u| {
                        (u + 1..self.n).all(|v| c >> u & 1 == 0 || c >> v & 1 == 0 || d[u][v] >= 3)
                    })
                })
            })
            .map(|p| p.len())
            .min()
            .unwrap()
    }
}
