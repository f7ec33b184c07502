//! Smallest α for which `RD_α(G)` is positive semidefinite.
//!
//! `f(α) = λ_min(RD_α)` is continuous and nondecreasing, negative at α = 0
//! for every connected graph with an edge, and nonnegative at α = ½ because
//! `RD_{1/2} = RQ/2`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::eigen::eigenvalues;
use crate::graph::Graph;
use crate::matrices::{Alpha, MatrixBundle};
use crate::{Error, Result};

pub const MAX_BISECTIONS: usize = 60;
/// Spread of transmissions below which a graph counts as transmission regular.
pub const REGULARITY_TOL: f64 = 1e-8;
/// Slack on `f(½) ≥ 0`; `λ_min(RQ)` can be an exact zero, e.g. for `K_2`.
const HALF_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Bisection,
    ClosedForm,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PsdThreshold {
    pub alpha0: f64,
    pub method: Method,
    /// `|λ_min(RD_{α₀})|`, or `0` when no graph was involved.
    pub residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl PsdThreshold {
    fn closed(alpha0: f64) -> Self {
        PsdThreshold {
            alpha0,
            method: Method::ClosedForm,
            residual: 0.0,
            note: None,
        }
    }
}

/// `λ_min(RD_α)` as a function of α for one graph.
pub struct SmallestEigenvalue {
    bundle: MatrixBundle,
}

impl SmallestEigenvalue {
    pub fn new(g: &Graph) -> Result<Self> {
        Ok(SmallestEigenvalue {
            bundle: MatrixBundle::new(g)?,
        })
    }

    pub fn at(&self, alpha: f64) -> Result<f64> {
        let m = self.bundle.rd_alpha(Alpha::new(alpha)?);
        Ok(*eigenvalues(&m)?.last().unwrap_or(&0.0))
    }
}

/// α₀ by bisection on `[0, ½]` down to an interval of width `tol`; returns
/// the upper end, where `RD_α` is known to be PSD.
pub fn alpha0_bisection(g: &Graph, tol: f64) -> Result<PsdThreshold> {
    if tol.is_nan() || tol < 1e-12 {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be >= 1e-12, got {tol}"
        )));
    }
    let f = SmallestEigenvalue::new(g)?;
    let at_zero = f.at(0.0)?;
    if at_zero >= 0.0 {
        return Ok(PsdThreshold {
            alpha0: 0.0,
            method: Method::Bisection,
            residual: at_zero.abs(),
            note: Some("already PSD at 0".into()),
        });
    }
    let at_half = f.at(0.5)?;
    if at_half < -HALF_SLACK {
        return Err(Error::Bracket(format!(
            "lambda_min(RD_1/2) = {at_half:e} < 0 contradicts RQ being PSD"
        )));
    }
    let (mut lo, mut hi, mut f_hi) = (0.0f64, 0.5f64, at_half);
    for _ in 0..MAX_BISECTIONS {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let v = f.at(mid)?;
        if v >= 0.0 {
            hi = mid;
            f_hi = v;
        } else {
            lo = mid;
        }
    }
    Ok(PsdThreshold {
        alpha0: hi,
        method: Method::Bisection,
        residual: f_hi.abs(),
        note: None,
    })
}

/// `α₀ = −λ_min(RD) / (k − λ_min(RD))` for a `k`-transmission-regular graph.
pub fn alpha0_transmission_regular(g: &Graph) -> Result<PsdThreshold> {
    if g.order() < 2 {
        return Err(Error::InvalidParameter("needs n >= 2".into()));
    }
    let b = MatrixBundle::new(g)?;
    let spread = b.transmissions.spread();
    if spread > REGULARITY_TOL {
        return Err(Error::NotTransmissionRegular(spread));
    }
    let k = b.transmissions.max();
    let lmin = *eigenvalues(&b.rd)?.last().unwrap();
    let alpha0 = -lmin / (k - lmin);
    let residual = eigenvalues(&b.rd_alpha(Alpha::new(alpha0)?))?
        .last()
        .unwrap()
        .abs();
    Ok(PsdThreshold {
        alpha0,
        method: Method::ClosedForm,
        residual,
        note: None,
    })
}

/// α₀ of `K_{a,n−a}`.
pub fn alpha0_complete_bipartite(a: usize, n: usize) -> Result<PsdThreshold> {
    if n < 4 || a < 1 || a > n / 2 {
        return Err(Error::InvalidParameter(format!(
            "needs n >= 4 and 1 <= a <= n/2, got a = {a}, n = {n}"
        )));
    }
    let (a, n) = (a as f64, n as f64);
    Ok(PsdThreshold::closed(
        (n - 1.0 + 3.0 * a * (n - a)) / (2.0 * n * (n - 1.0) + 4.0 * a * (n - a)),
    ))
}

/// α₀ of the wheel `W(n)`.
pub fn alpha0_wheel(n: usize) -> Result<PsdThreshold> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "wheel needs n >= 4, got {n}"
        )));
    }
    let nf = n as f64;
    if n % 2 == 1 {
        return Ok(PsdThreshold::closed(3.0 / (nf + 5.0)));
    }
    let k = ((n - 2) / 2) as f64;
    let c = 2.0 * (2.0 * k * PI / (2.0 * k + 1.0)).cos();
    Ok(PsdThreshold::closed((1.0 - c) / (nf + 3.0 - c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{complete, complete_bipartite, cycle, path, star, wheel};

    #[test]
    fn bisection_examples() {
        let t = alpha0_bisection(&star(4).unwrap(), 1e-12).unwrap();
        assert!((t.alpha0 - 1.0 / 3.0).abs() < 1e-8);
        assert!((alpha0_bisection(&wheel(5).unwrap(), 1e-12).unwrap().alpha0 - 0.3).abs() < 1e-8);
        assert!((alpha0_bisection(&cycle(4).unwrap(), 1e-12).unwrap().alpha0 - 0.375).abs() < 1e-8);
    }

    #[test]
    fn degenerate_inputs() {
        let t = alpha0_bisection(&complete(1).unwrap(), 1e-9).unwrap();
        assert_eq!(t.alpha0, 0.0);
        assert!(t.note.is_some());
        // λ_min(RQ(K_2)) = 0
        let t = alpha0_bisection(&complete(2).unwrap(), 1e-9).unwrap();
        assert_eq!(t.alpha0, 0.5);
        assert!(alpha0_bisection(&path(3).unwrap(), 1e-13).is_err());
    }

    #[test]
    fn transmission_regular_examples() {
        assert!(
            (alpha0_transmission_regular(&cycle(4).unwrap())
                .unwrap()
                .alpha0
                - 0.375)
                .abs()
                < 1e-12
        );
        for n in 2..8 {
            let t = alpha0_transmission_regular(&complete(n).unwrap()).unwrap();
            assert!((t.alpha0 - 1.0 / n as f64).abs() < 1e-12);
        }
        let lmin = 0.5 * (-1.0 + 2.0 * (4.0 * PI / 5.0).cos());
        let expect = -lmin / (3.0 - lmin);
        assert!(
            (alpha0_transmission_regular(&cycle(5).unwrap())
                .unwrap()
                .alpha0
                - expect)
                .abs()
                < 1e-12
        );
        assert!(matches!(
            alpha0_transmission_regular(&path(3).unwrap()),
            Err(Error::NotTransmissionRegular(_))
        ));
    }

    #[test]
    fn bipartite_formula() {
        assert!((alpha0_complete_bipartite(1, 4).unwrap().alpha0 - 1.0 / 3.0).abs() < 1e-15);
        assert!((alpha0_complete_bipartite(2, 4).unwrap().alpha0 - 0.375).abs() < 1e-15);
        assert!((alpha0_complete_bipartite(3, 6).unwrap().alpha0 - 1.0 / 3.0).abs() < 1e-15);
        assert!(alpha0_complete_bipartite(3, 5).is_err());
        assert!(alpha0_complete_bipartite(1, 3).is_err());
        let g = complete_bipartite(2, 5).unwrap();
        let b = alpha0_bisection(&g, 1e-12).unwrap();
        assert!((b.alpha0 - alpha0_complete_bipartite(2, 7).unwrap().alpha0).abs() < 1e-7);
    }

    #[test]
    fn wheel_formula() {
        assert!((alpha0_wheel(5).unwrap().alpha0 - 0.3).abs() < 1e-15);
        assert!((alpha0_wheel(7).unwrap().alpha0 - 0.25).abs() < 1e-15);
        let c = 2.0 * (4.0 * PI / 5.0).cos();
        assert!((alpha0_wheel(6).unwrap().alpha0 - (1.0 - c) / (9.0 - c)).abs() < 1e-15);
        assert!((alpha0_wheel(4).unwrap().alpha0 - 0.25).abs() < 1e-15);
        assert!(alpha0_wheel(3).is_err());
        for n in 4..=10 {
            let b = alpha0_bisection(&wheel(n).unwrap(), 1e-12).unwrap();
            assert!(
                (b.alpha0 - alpha0_wheel(n).unwrap().alpha0).abs() < 1e-7,
                "W({n})"
            );
        }
    }

    #[test]
    fn monotone_certificate() {
        let g = path(5).unwrap();
        let t = alpha0_bisection(&g, 1e-12).unwrap();
        let f = SmallestEigenvalue::new(&g).unwrap();
        assert!(f.at(t.alpha0 - 0.01).unwrap() < -1e-6);
        assert!(f.at(t.alpha0 + 0.01).unwrap() > -1e-9);
        assert!(t.alpha0 > 0.0 && t.alpha0 <= 0.5);
    }
}
