//! Dense matrices attached to a connected graph.

use std::fmt::Write as _;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::graph::{all_pairs_distances, DistanceMatrix, Graph, Transmissions};
use crate::{Error, Result};

/// Square dense matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![1.0; n])
    }

    pub fn diagonal(d: &[f64]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Matrix { n, data }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidParameter(
                "matrix rows must form a square".into(),
            ));
        }
        Ok(Matrix {
            n,
            data: rows.concat(),
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Largest `|m_ij - m_ji|`.
    pub fn asymmetry(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.n {
            for j in i + 1..self.n {
                worst = worst.max((self[(i, j)] - self[(j, i)]).abs());
            }
        }
        worst
    }

    pub fn scaled(&self, s: f64) -> Matrix {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: f64, other: &Matrix, b: f64) -> Matrix {
        assert_eq!(self.n, other.n);
        Matrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(x, y)| a * x + b * y)
                .collect(),
        }
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Largest entrywise difference.
    pub fn max_diff(&self, other: &Matrix) -> f64 {
        assert_eq!(self.n, other.n);
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (x, y)| m.max((x - y).abs()))
    }

    /// Plain-text dump: one row per line, 17 significant digits.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|x| format!("{x:.16e}")).collect();
            writeln!(s, "{}", row.join(" ")).unwrap();
        }
        s
    }

    pub fn parse_dump(text: &str) -> Result<Matrix> {
        let rows = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|t| {
                        t.parse::<f64>().map_err(|e| {
                            Error::InvalidParameter(format!("bad matrix entry {t:?}: {e}"))
                        })
                    })
                    .collect::<Result<Vec<f64>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(&rows)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.n + j]
    }
}

/// Convex weight `α ∈ [0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Alpha(f64);

impl Alpha {
    pub const ZERO: Alpha = Alpha(0.0);
    pub const HALF: Alpha = Alpha(0.5);
    pub const ONE: Alpha = Alpha(1.0);

    pub fn new(value: f64) -> Result<Alpha> {
        if (0.0..=1.0).contains(&value) {
            Ok(Alpha(value))
        } else {
            Err(Error::InvalidParameter(format!(
                "alpha must lie in [0, 1], got {value}"
            )))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    /// `1 − α`.
    pub fn complement(self) -> Alpha {
        Alpha(1.0 - self.0)
    }
}

impl TryFrom<f64> for Alpha {
    type Error = Error;
    fn try_from(v: f64) -> Result<Alpha> {
        Alpha::new(v)
    }
}

impl From<Alpha> for f64 {
    fn from(a: Alpha) -> f64 {
        a.0
    }
}

impl std::fmt::Display for Alpha {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// The matrices `RD`, `RT`, `RL = RT − RD`, `RQ = RT + RD`, the adjacency
/// matrix `A` and degree diagonal `D̄` of one connected graph.
#[derive(Debug, Clone)]
pub struct MatrixBundle {
    pub distances: DistanceMatrix,
    pub transmissions: Transmissions,
    pub rd: Matrix,
    pub rt: Matrix,
    pub rl: Matrix,
    pub rq: Matrix,
    pub adjacency: Matrix,
    pub degree: Matrix,
}

impl MatrixBundle {
    pub fn new(g: &Graph) -> Result<Self> {
        let distances = all_pairs_distances(g)?;
        let transmissions = Transmissions::from_distances(&distances);
        let n = g.order();
        let rd = Matrix::from_fn(n, |i, j| distances.reciprocal(i, j));
        let rt = Matrix::diagonal(transmissions.as_slice());
        let rl = rt.combine(1.0, &rd, -1.0);
        let rq = rt.combine(1.0, &rd, 1.0);
        let adjacency = Matrix::from_fn(n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
        let degree = Matrix::diagonal(&g.degrees().iter().map(|&d| d as f64).collect::<Vec<_>>());
        Ok(MatrixBundle {
            distances,
            transmissions,
            rd,
            rt,
            rl,
            rq,
            adjacency,
            degree,
        })
    }

    pub fn order(&self) -> usize {
        self.rd.order()
    }

    /// `RD_α = α·RT + (1 − α)·RD`.
    pub fn rd_alpha(&self, alpha: Alpha) -> Matrix {
        let a = alpha.value();
        // exact endpoints: no 0·x roundoff contamination
        if a == 0.0 {
            return self.rd.clone();
        }
        if a == 1.0 {
            return self.rt.clone();
        }
        self.rt.combine(a, &self.rd, 1.0 - a)
    }

    /// `A_α = α·D̄ + (1 − α)·A`.
    pub fn a_alpha(&self, alpha: Alpha) -> Matrix {
        let a = alpha.value();
        self.degree.combine(a, &self.adjacency, 1.0 - a)
    }
}

pub fn build_bundle(g: &Graph) -> Result<MatrixBundle> {
    MatrixBundle::new(g)
}

pub fn rd_alpha(g: &Graph, alpha: Alpha) -> Result<Matrix> {
    Ok(MatrixBundle::new(g)?.rd_alpha(alpha))
}

/// `A_α(G)`; unlike the distance matrices this needs no connectivity.
pub fn a_alpha(g: &Graph, alpha: Alpha) -> Matrix {
    let a = alpha.value();
    Matrix::from_fn(g.order(), |i, j| {
        if i == j {
            a * g.degree(i) as f64
        } else if g.has_edge(i, j) {
            1.0 - a
        } else {
            0.0
        }
    })
}
