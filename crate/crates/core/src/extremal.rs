//! Exhaustive search for the graphs maximizing `ρ(RD_α)` within classes
//! fixed by one structural invariant.

use rayon::prelude::*;
use serde::Serialize;

use crate::eigen::spectral_radius;
use crate::graph::families::{complete, disjoint_union, join, turan};
use crate::graph::{
    canonical_form, canonical_labeling, enumerate_connected_graphs, graph_invariants, to_graph6,
    CanonicalForm, Graph, GraphInvariants,
};
use crate::matrices::Alpha;
use crate::{Error, Result};

/// Two spectral radii closer than this are treated as equal.
pub const TIE_TOL: f64 = 1e-9;
/// Largest α for which the Turán graph is guaranteed to be the maximizer.
pub const TURAN_ALPHA_LIMIT: f64 = 7.0 / 16.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Constraint {
    VertexConnectivity,
    EdgeConnectivity,
    ChromaticNumber,
    IndependenceNumber,
}

impl Constraint {
    pub fn of(self, inv: &GraphInvariants) -> usize {
        match self {
            Constraint::VertexConnectivity => inv.vertex_connectivity,
            Constraint::EdgeConnectivity => inv.edge_connectivity,
            Constraint::ChromaticNumber => inv.chromatic_number,
            Constraint::IndependenceNumber => inv.independence_number,
        }
    }
}

impl std::str::FromStr for Constraint {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vertex-connectivity" => Ok(Constraint::VertexConnectivity),
            "edge-connectivity" => Ok(Constraint::EdgeConnectivity),
            "chromatic-number" => Ok(Constraint::ChromaticNumber),
            "independence-number" => Ok(Constraint::IndependenceNumber),
            _ => Err(Error::InvalidParameter(format!("unknown constraint {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Confirmed,
    Refuted,
    Tie,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub constraint: Constraint,
    pub value: usize,
    pub alpha: f64,
    pub rho_max: f64,
    /// graph6 of every maximizer, canonically labelled.
    pub maximizers: Vec<String>,
    /// graph6 of the predicted extremal graph, canonically labelled.
    pub predicted: String,
    pub verdict: Verdict,
    /// α lies outside the range where the prediction is guaranteed.
    pub exploratory: bool,
    pub class_size: usize,
    /// Largest ρ among non-maximizers.
    pub runner_up: Option<f64>,
    /// Closed-form upper bound, for the independence-number class.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<f64>,
    /// Class members whose ρ exceeds `bound` by more than [`TIE_TOL`].
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_violations: Option<usize>,
}

/// `K_r ∨ (K_1 ∪ K_{n−r−1})`.
pub fn build_kite(n: usize, r: usize) -> Result<Graph> {
    if r < 1 || r + 2 > n {
        return Err(Error::InvalidParameter(format!(
            "kite needs 1 <= r <= n - 2, got n = {n}, r = {r}"
        )));
    }
    Ok(join(
        &complete(r)?,
        &disjoint_union(&complete(1)?, &complete(n - r - 1)?),
    ))
}

/// `K̄_k ∨ K_{n−k}`.
pub fn independence_extremal(n: usize, k: usize) -> Result<Graph> {
    if k < 1 || k >= n {
        return Err(Error::InvalidParameter(format!(
            "needs 1 <= k <= n - 1, got n = {n}, k = {k}"
        )));
    }
    Ok(join(&Graph::empty(k), &complete(n - k)?))
}

/// Closed-form upper bound on `ρ(RD_α)` for independence number `k`.
pub fn independence_bound(n: usize, k: usize, alpha: Alpha) -> f64 {
    let (a, n, k) = (alpha.value(), n as f64, k as f64);
    let lin = (1.0 - a) * n + 2.0 * a * k - 1.5 * k - 0.5;
    let disc = lin * lin + 4.0 * (1.0 - a).powi(2) * k * (n - k);
    ((1.0 + a) * n - k / 2.0 - 1.5 + disc.sqrt()) / 2.0
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub graph: Graph,
    pub canon: CanonicalForm,
    pub invariants: GraphInvariants,
}

/// Every connected graph of one order with its invariants.
#[derive(Debug, Clone)]
pub struct Catalog {
    pub n: usize,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn new(n: usize) -> Result<Catalog> {
        let graphs = enumerate_connected_graphs(n)?;
        let entries = graphs
            .into_par_iter()
            .map(|graph| {
                Ok(CatalogEntry {
                    canon: canonical_form(&graph)?,
                    invariants: graph_invariants(&graph)?,
                    graph,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Catalog { n, entries })
    }

    pub fn class(&self, constraint: Constraint, value: usize) -> Vec<&CatalogEntry> {
        self.entries
            .iter()
            .filter(|e| constraint.of(&e.invariants) == value)
            .collect()
    }

    fn radii(class: &[&CatalogEntry], alpha: Alpha) -> Result<Vec<f64>> {
        class
            .par_iter()
            .map(|e| spectral_radius(&e.graph, alpha))
            .collect()
    }

    pub fn verify(
        &self,
        constraint: Constraint,
        value: usize,
        alpha: Alpha,
    ) -> Result<ExtremalReport> {
        let n = self.n;
        let a = alpha.value();
        if a >= 1.0 {
            return Err(Error::InvalidParameter(
                "extremal search needs alpha < 1".into(),
            ));
        }
        let (predicted, exploratory) = match constraint {
            Constraint::VertexConnectivity | Constraint::EdgeConnectivity => {
                (build_kite(n, value)?, false)
            }
            Constraint::ChromaticNumber => {
                if value < 2 || value > n {
                    return Err(Error::InvalidParameter(format!(
                        "needs 2 <= chi <= n, got {value}"
                    )));
                }
                (turan(n, value)?, a > TURAN_ALPHA_LIMIT)
            }
            Constraint::IndependenceNumber => (independence_extremal(n, value)?, false),
        };
        let class = self.class(constraint, value);
        if class.is_empty() {
            return Err(Error::EmptyClass(format!(
                "{constraint:?} = {value} at n = {n}"
            )));
        }
        let radii = Self::radii(&class, alpha)?;
        let rho_max = radii.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let winners: Vec<usize> = (0..class.len())
            .filter(|&i| radii[i] >= rho_max - TIE_TOL)
            .collect();
        let runner_up = (0..class.len())
            .filter(|i| !winners.contains(i))
            .map(|i| radii[i])
            .reduce(f64::max);
        let predicted_canon = canonical_form(&predicted)?;

        let mut verdict = match winners.as_slice() {
            [only] if class[*only].canon == predicted_canon => Verdict::Confirmed,
            [_] => Verdict::Refuted,
            _ => Verdict::Tie,
        };
        let (mut bound, mut bound_violations) = (None, None);
        if constraint == Constraint::IndependenceNumber {
            let b = independence_bound(n, value, alpha);
            let violations = radii.iter().filter(|&&r| r > b + TIE_TOL).count();
            if violations > 0 || (verdict == Verdict::Confirmed && (rho_max - b).abs() > TIE_TOL) {
                verdict = Verdict::Refuted;
            }
            bound = Some(b);
            bound_violations = Some(violations);
        }

        let mut maximizers: Vec<(&CanonicalForm, String)> = winners
            .iter()
            .map(|&i| Ok((&class[i].canon, to_graph6(&class[i].graph)?)))
            .collect::<Result<_>>()?;
        maximizers.sort();
        Ok(ExtremalReport {
            n,
            constraint,
            value,
            alpha: a,
            rho_max,
            maximizers: maximizers.into_iter().map(|(_, s)| s).collect(),
            predicted: to_graph6(&predicted.permuted(&canonical_labeling(&predicted)?))?,
            verdict,
            exploratory,
            class_size: class.len(),
            runner_up,
            bound,
            bound_violations,
        })
    }
}

pub fn verify_vertex_connectivity_extremal(
    n: usize,
    r: usize,
    alpha: Alpha,
) -> Result<ExtremalReport> {
    Catalog::new(n)?.verify(Constraint::VertexConnectivity, r, alpha)
}

pub fn verify_edge_connectivity_extremal(
    n: usize,
    r: usize,
    alpha: Alpha,
) -> Result<ExtremalReport> {
    Catalog::new(n)?.verify(Constraint::EdgeConnectivity, r, alpha)
}

pub fn verify_chromatic_extremal(n: usize, chi: usize, alpha: Alpha) -> Result<ExtremalReport> {
    Catalog::new(n)?.verify(Constraint::ChromaticNumber, chi, alpha)
}

pub fn verify_independence_extremal(n: usize, k: usize, alpha: Alpha) -> Result<ExtremalReport> {
    Catalog::new(n)?.verify(Constraint::IndependenceNumber, k, alpha)
}

/// One chromatic-class report per `(χ, α)`; records only, nothing asserted.
pub fn chromatic_scan(catalog: &Catalog, alphas: &[Alpha]) -> Result<Vec<ExtremalReport>> {
    let mut out = Vec::new();
    for chi in 2..=catalog.n {
        for &a in alphas {
            out.push(catalog.verify(Constraint::ChromaticNumber, chi, a)?);
        }
    }
    Ok(out)
}
