use std::collections::VecDeque;

use super::Graph;
use crate::{Error, Result};

/// All-pairs hop distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.d[i * self.n + j]
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    /// `1 / d_ij` off the diagonal, zero on it.
    #[inline]
    pub fn reciprocal(&self, i: usize, j: usize) -> f64 {
        if i == j {
            0.0
        } else {
            1.0 / f64::from(self.get(i, j))
        }
    }
}

/// BFS from every vertex. Disconnected graphs are rejected: a reciprocal
/// distance of an unreachable pair has no meaning here.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.order();
    if n == 0 {
        return Err(Error::InvalidParameter("graph has no vertices".into()));
    }
    let mut d = vec![u32::MAX; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            let dv = row[v];
            for u in g.neighbors(v) {
                if row[u] == u32::MAX {
                    row[u] = dv + 1;
                    queue.push_back(u);
                }
            }
        }
        if row.contains(&u32::MAX) {
            return Err(Error::NotConnected);
        }
    }
    Ok(DistanceMatrix { n, d })
}

/// Reciprocal transmissions `RTr(v) = Σ_{u≠v} 1/d(u,v)`, indexed by vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct Transmissions(Vec<f64>);

impl Transmissions {
    pub fn from_distances(dm: &DistanceMatrix) -> Self {
        let n = dm.order();
        Transmissions(
            (0..n)
                .map(|i| (0..n).map(|j| dm.reciprocal(i, j)).sum())
                .collect(),
        )
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    /// Largest reciprocal transmission `RTr_1`.
    pub fn max(&self) -> f64 {
        self.0.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Smallest reciprocal transmission `RTr_n`.
    pub fn min(&self) -> f64 {
        self.0.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn spread(&self) -> f64 {
        self.max() - self.min()
    }

    /// Transmissions in descending order, so entry `k-1` is `RTr_k`.
    pub fn sorted_desc(&self) -> Vec<f64> {
        let mut v = self.0.clone();
        v.sort_by(|a, b| b.total_cmp(a));
        v
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }
}

impl std::ops::Index<usize> for Transmissions {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

pub fn reciprocal_transmissions(g: &Graph) -> Result<Transmissions> {
    Ok(Transmissions::from_distances(&all_pairs_distances(g)?))
}

/// Harary index `H(G) = Σ_{i<j} 1/d_ij`.
pub fn harary_index(g: &Graph) -> Result<f64> {
    let dm = all_pairs_distances(g)?;
    let n = dm.order();
    let mut h = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            h += dm.reciprocal(i, j);
        }
    }
    Ok(h)
}

pub fn is_transmission_regular(g: &Graph, tol: f64) -> Result<bool> {
    Ok(reciprocal_transmissions(g)?.spread() <= tol)
}
