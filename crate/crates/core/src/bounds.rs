//! Lower and upper bounds on the extreme eigenvalues of `RD_α(G)`.
//!
//! Each bound is reported as a [`BoundRecord`]. Records that do not apply
//! for the requested α are still emitted, with `applicable = false`, so the
//! shape of a report never depends on α.

use serde::Serialize;

use crate::eigen::eigenvalues;
use crate::graph::{bipartition, Graph};
use crate::matrices::{Alpha, MatrixBundle};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Lower,
    Upper,
}

/// Eigenvalue a bound refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    SpectralRadius,
    SmallestEigenvalue,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundRecord {
    pub name: &'static str,
    pub kind: BoundKind,
    pub target: Target,
    pub value: f64,
    pub formula: &'static str,
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl BoundRecord {
    fn new(name: &'static str, kind: BoundKind, formula: &'static str, value: f64) -> Self {
        BoundRecord {
            name,
            kind,
            target: Target::SpectralRadius,
            value,
            formula,
            applicable: true,
            reason: None,
        }
    }

    fn targeting(mut self, target: Target) -> Self {
        self.target = target;
        self
    }

    fn only_if(mut self, cond: bool, reason: &str) -> Self {
        if !cond {
            self.applicable = false;
            self.reason = Some(reason.to_string());
        }
        self
    }

    /// Whether `actual` respects the bound within `tol`. Inapplicable
    /// records always hold.
    pub fn holds(&self, actual: f64, tol: f64) -> bool {
        !self.applicable
            || match self.kind {
                BoundKind::Lower => self.value <= actual + tol,
                BoundKind::Upper => self.value >= actual - tol,
            }
    }

    /// `holds` against the matching entry of `(ρ, λ_min)`.
    pub fn holds_for(&self, rho: f64, lambda_min: f64, tol: f64) -> bool {
        match self.target {
            Target::SpectralRadius => self.holds(rho, tol),
            Target::SmallestEigenvalue => self.holds(lambda_min, tol),
        }
    }
}

/// Spectral-radius bounds computed from transmissions, distances and `σ(RD)`.
pub fn bound_report(g: &Graph, alpha: Alpha) -> Result<Vec<BoundRecord>> {
    let b = MatrixBundle::new(g)?;
    let a = alpha.value();
    let n = g.order();
    let rtr = b.transmissions.as_slice();
    let rd = &b.rd;
    let (rtr_max, rtr_min) = (b.transmissions.max(), b.transmissions.min());
    let nf = n as f64;

    // RT_i = Σ_j RD_ij RTr_j
    let rt_weighted = rd.mul_vec(rtr);
    let similarity: Vec<f64> = (0..n)
        .map(|i| a * rtr[i] + (1.0 - a) * rt_weighted[i] / rtr[i])
        .collect();
    let row_norm = (0..n)
        .map(|i| {
            let sq: f64 = (0..n).map(|k| rd[(k, i)] * rd[(k, i)]).sum();
            a * rtr[i] + (1.0 - a) * ((nf - 1.0) * sq).sqrt()
        })
        .fold(f64::NEG_INFINITY, f64::max);
    let weighted = (0..n)
        .map(|i| {
            let s: f64 = (0..n).map(|j| rd[(i, j)] * (rtr[j] / rtr[i]).sqrt()).sum();
            a * rtr[i] + (1.0 - a) * s
        })
        .fold(f64::NEG_INFINITY, f64::max);
    let rms = (rtr.iter().map(|x| x * x).sum::<f64>() / nf).sqrt();
    let rho_rd = eigenvalues(rd)?[0];

    use BoundKind::{Lower, Upper};
    Ok(vec![
        BoundRecord::new(
            "row_norm_upper",
            Upper,
            "max_i { a*RTr_i + (1-a)*sqrt((n-1) * sum_k RD_ki^2) }",
            row_norm,
        )
        .only_if(
            a < 1.0,
            "alpha = 1 makes RD_alpha diagonal, hence reducible",
        ),
        BoundRecord::new(
            "similarity_row_sum_lower",
            Lower,
            "min_i { a*RTr_i + (1-a)*RT_i/RTr_i }, RT_i = sum_j RD_ij RTr_j",
            similarity.iter().copied().fold(f64::INFINITY, f64::min),
        )
        .only_if(n >= 2, "needs n >= 2"),
        BoundRecord::new(
            "similarity_row_sum_upper",
            Upper,
            "max_i { a*RTr_i + (1-a)*RT_i/RTr_i }, RT_i = sum_j RD_ij RTr_j",
            similarity.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        )
        .only_if(n >= 2, "needs n >= 2"),
        BoundRecord::new(
            "transmission_rms_lower",
            Lower,
            "sqrt(sum_i RTr_i^2 / n)",
            rms,
        )
        .only_if(n >= 2, "needs n >= 2"),
        BoundRecord::new(
            "weighted_row_sum_upper",
            Upper,
            "max_i { a*RTr_i + (1-a)*sum_j RD_ij*sqrt(RTr_j/RTr_i) }",
            weighted,
        )
        .only_if(n >= 2, "needs n >= 2"),
        // 2H = Σ RTr_i
        BoundRecord::new("harary_lower", Lower, "2H/n", b.transmissions.sum() / nf)
            .only_if(n >= 2, "needs n >= 2"),
        BoundRecord::new("max_transmission_lower", Lower, "a*RTr_1", a * rtr_max),
        BoundRecord::new("max_transmission_upper", Upper, "RTr_1", rtr_max),
        BoundRecord::new(
            "rd_shift_lower",
            Lower,
            "a*RTr_n + (1-a)*rho(RD)",
            a * rtr_min + (1.0 - a) * rho_rd,
        ),
        BoundRecord::new(
            "rd_shift_upper",
            Upper,
            "a*RTr_1 + (1-a)*rho(RD)",
            a * rtr_max + (1.0 - a) * rho_rd,
        ),
        BoundRecord::new("min_transmission_upper", Upper, "a*RTr_n", a * rtr_min)
            .targeting(Target::SmallestEigenvalue),
    ])
}

/// Bounds relating `ρ(RD_α)` to `ρ(RQ)`, `ρ(RD)` and `ρ(RD_{1−α})`.
pub fn rq_relation_bounds(g: &Graph, alpha: Alpha) -> Result<Vec<BoundRecord>> {
    let b = MatrixBundle::new(g)?;
    let a = alpha.value();
    let rho_rq = eigenvalues(&b.rq)?[0];
    let rho_rd = eigenvalues(&b.rd)?[0];
    let rho_comp = eigenvalues(&b.rd_alpha(alpha.complement()))?[0];
    let rtr_max = b.transmissions.max();
    let towards_rt = (1.0 - a) * rho_rq + (2.0 * a - 1.0) * rtr_max;
    let towards_rd = a * rho_rq + (1.0 - 2.0 * a) * rho_rd;

    use BoundKind::{Lower, Upper};
    Ok(vec![
        BoundRecord::new(
            "rq_below_half_lower",
            Lower,
            "(1-a)*rho(RQ) + (2a-1)*RTr_1",
            towards_rt,
        )
        .only_if(a <= 0.5, "needs alpha <= 1/2"),
        BoundRecord::new(
            "rq_below_half_upper",
            Upper,
            "a*rho(RQ) + (1-2a)*rho(RD)",
            towards_rd,
        )
        .only_if(a <= 0.5, "needs alpha <= 1/2"),
        BoundRecord::new(
            "rq_above_half_lower",
            Lower,
            "a*rho(RQ) + (1-2a)*rho(RD)",
            towards_rd,
        )
        .only_if(a >= 0.5, "needs alpha >= 1/2"),
        BoundRecord::new(
            "rq_above_half_upper",
            Upper,
            "(1-a)*rho(RQ) + (2a-1)*RTr_1",
            towards_rt,
        )
        .only_if(a >= 0.5, "needs alpha >= 1/2"),
        BoundRecord::new(
            "complementary_lower",
            Lower,
            "rho(RQ) - rho(RD_{1-a})",
            rho_rq - rho_comp,
        ),
    ])
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BipartiteBound {
    pub record: BoundRecord,
    /// Smaller part size `a`.
    pub a: usize,
    /// `G ≅ K_{a,n−a}`, the case where the bound is attained.
    pub equality: bool,
}

/// Upper bound for bipartite graphs with parts `a ≤ n − a`.
pub fn bipartite_bound(g: &Graph, alpha: Alpha) -> Result<BipartiteBound> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let (p, q) = bipartition(g).ok_or(Error::NotBipartite)?;
    if g.order() < 2 {
        return Err(Error::InvalidParameter(
            "bipartite bound needs n >= 2".into(),
        ));
    }
    let n = g.order();
    let a_size = p.len().min(q.len());
    let (al, a, nf) = (alpha.value(), a_size as f64, n as f64);
    let disc =
        (al - 0.5).powi(2) * (2.0 * a - nf).powi(2) + 4.0 * (1.0 - al).powi(2) * a * (nf - a);
    let value = ((al + 0.5) * nf - 1.0 + disc.sqrt()) / 2.0;
    Ok(BipartiteBound {
        record: BoundRecord::new(
            "bipartite_upper",
            BoundKind::Upper,
            "((a+1/2)n - 1 + sqrt((a-1/2)^2 (2p-n)^2 + 4(1-a)^2 p(n-p))) / 2, p = smaller part",
            value,
        ),
        a: a_size,
        equality: g.edge_count() == a_size * (n - a_size),
    })
}
