//! Cyclic Jacobi eigensolver for dense symmetric matrices, plus the spectral
//! quantities built on it.

use crate::graph::{harary_index, Graph};
use crate::matrices::{Alpha, Matrix, MatrixBundle};
use crate::{Error, Result};

pub const MAX_SWEEPS: usize = 60;
/// Stop once the off-diagonal Frobenius norm is below this fraction of `‖M‖_F`.
pub const OFF_NORM_RTOL: f64 = 1e-13;
/// Absolute tolerance for grouping eigenvalues into multiplicities.
pub const MULTIPLICITY_TOL: f64 = 1e-7;

#[derive(Debug, Clone)]
pub struct Spectrum {
    /// `λ_1 ≥ … ≥ λ_n`.
    pub eigenvalues: Vec<f64>,
    /// Column `k` is the unit eigenvector of `eigenvalues[k]`.
    pub eigenvectors: Option<Matrix>,
    /// Off-diagonal Frobenius norm at termination.
    pub residual: f64,
    pub sweeps: usize,
}

impl Spectrum {
    pub fn largest(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    pub fn smallest(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    pub fn eigenvector(&self, k: usize) -> Option<Vec<f64>> {
        let v = self.eigenvectors.as_ref()?;
        Some((0..v.order()).map(|i| v[(i, k)]).collect())
    }

    pub fn grouped(&self) -> Vec<(f64, usize)> {
        group_eigenvalues(&self.eigenvalues, MULTIPLICITY_TOL)
    }

    pub fn multiplicity(&self, value: f64) -> usize {
        multiplicity_of(&self.eigenvalues, value, MULTIPLICITY_TOL)
    }
}

fn off_norm(a: &Matrix) -> f64 {
    let n = a.order();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)] * a[(i, j)];
            }
        }
    }
    s.sqrt()
}

/// Eigen-decomposition of a symmetric matrix.
pub fn sym_eigen(m: &Matrix, want_vectors: bool) -> Result<Spectrum> {
    let n = m.order();
    let asym = m.asymmetry();
    if asym > 1e-12 * m.max_abs().max(1.0) {
        return Err(Error::NotSymmetric(asym));
    }
    let mut a = Matrix::from_fn(n, |i, j| 0.5 * (m[(i, j)] + m[(j, i)]));
    let mut v = want_vectors.then(|| Matrix::identity(n));
    let target = OFF_NORM_RTOL * a.frobenius_norm();

    let mut sweeps = 0;
    let mut residual = off_norm(&a);
    while residual > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, residual });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
                        v[(k, p)] = c * vkp - s * vkq;
                        v[(k, q)] = s * vkp + c * vkq;
                    }
                }
            }
        }
        sweeps += 1;
        residual = off_norm(&a);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].total_cmp(&a[(i, i)]));
    let eigenvalues = order.iter().map(|&i| a[(i, i)]).collect();
    let eigenvectors = v.map(|v| Matrix::from_fn(n, |i, k| v[(i, order[k])]));
    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
        residual,
        sweeps,
    })
}

/// Eigenvalues only, descending.
pub fn eigenvalues(m: &Matrix) -> Result<Vec<f64>> {
    Ok(sym_eigen(m, false)?.eigenvalues)
}

/// `σ(RD_α(G))`.
pub fn rd_alpha_spectrum(g: &Graph, alpha: Alpha) -> Result<Spectrum> {
    sym_eigen(&MatrixBundle::new(g)?.rd_alpha(alpha), false)
}

/// `ρ(RD_α(G)) = λ_1`.
pub fn spectral_radius(g: &Graph, alpha: Alpha) -> Result<f64> {
    Ok(rd_alpha_spectrum(g, alpha)?.largest())
}

/// `(ρ, x)` with `x` the unit eigenvector of `ρ`, signed to be nonnegative.
/// Strictly positive when `α < 1`.
pub fn perron_vector(g: &Graph, alpha: Alpha) -> Result<(f64, Vec<f64>)> {
    perron_of(&MatrixBundle::new(g)?.rd_alpha(alpha))
}

pub fn perron_of(m: &Matrix) -> Result<(f64, Vec<f64>)> {
    let s = sym_eigen(m, true)?;
    let mut x = s.eigenvector(0).unwrap_or_default();
    if x.iter().sum::<f64>() < 0.0 {
        x.iter_mut().for_each(|e| *e = -*e);
    }
    Ok((s.largest(), x))
}

/// `E_{RD_α}(G) = Σ_i |λ_i − 2αH/n|`.
pub fn rd_alpha_energy(g: &Graph, alpha: Alpha) -> Result<f64> {
    let spectrum = rd_alpha_spectrum(g, alpha)?;
    let centre = 2.0 * alpha.value() * harary_index(g)? / g.order() as f64;
    Ok(energy_about(&spectrum.eigenvalues, centre))
}

pub fn energy_about(eigenvalues: &[f64], centre: f64) -> f64 {
    eigenvalues.iter().map(|l| (l - centre).abs()).sum()
}

/// Groups a descending sequence into `(value, multiplicity)` runs; each run
/// spans consecutive values within `tol` of their neighbour.
pub fn group_eigenvalues(values: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize, f64)> = Vec::new();
    for &x in values {
        match out.last_mut() {
            Some((sum, count, last)) if (*last - x).abs() <= tol => {
                *sum += x;
                *count += 1;
                *last = x;
            }
            _ => out.push((x, 1, x)),
        }
    }
    out.into_iter().map(|(s, c, _)| (s / c as f64, c)).collect()
}

pub fn multiplicity_of(values: &[f64], target: f64, tol: f64) -> usize {
    values
        .iter()
        .filter(|&&x| (x - target).abs() <= tol)
        .count()
}

/// Max-norm distance between two spectra after sorting; `∞` on length mismatch.
pub fn spectral_distance(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    a.iter().zip(&b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}
