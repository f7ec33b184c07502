//! Exact `RD_α` spectra of structured graphs.
//!
//! Every routine returns eigenvalues with multiplicities. The two-by-two
//! quotient roots go through [`quadratic_roots`], which never subtracts two
//! nearly equal quantities.

use std::f64::consts::PI;

use serde::Serialize;

use crate::eigen::{eigenvalues, sym_eigen};
use crate::graph::{all_pairs_distances, pendant_counts, reciprocal_transmissions, Graph};
use crate::matrices::{Alpha, Matrix, MatrixBundle};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Complete,
    RegularDiameterTwo,
    JoinOfRegular,
    CompleteBipartite,
    CompleteSplit,
    Wheel,
    Cluster,
    CompleteMultipartite,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClosedFormSpectrum {
    /// `(value, multiplicity)`; zero multiplicities are dropped.
    pub eigenvalues: Vec<(f64, usize)>,
    pub source: Source,
    pub parameters: String,
}

impl ClosedFormSpectrum {
    fn new(source: Source, parameters: String, families: Vec<(f64, usize)>) -> Self {
        ClosedFormSpectrum {
            eigenvalues: families.into_iter().filter(|&(_, m)| m > 0).collect(),
            source,
            parameters,
        }
    }

    pub fn order(&self) -> usize {
        self.eigenvalues.iter().map(|&(_, m)| m).sum()
    }

    /// All eigenvalues, descending, repeated by multiplicity.
    pub fn expanded(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self
            .eigenvalues
            .iter()
            .flat_map(|&(x, m)| std::iter::repeat_n(x, m))
            .collect();
        v.sort_by(|a, b| b.total_cmp(a));
        v
    }

    /// Largest eigenvalue; for two-root families this is the larger root.
    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues
            .iter()
            .map(|&(x, _)| x)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Roots of `λ² − sum·λ + product = 0`, larger first. `disc` is the
/// discriminant `sum² − 4·product` in whatever exact form the caller has.
pub fn quadratic_roots(sum: f64, disc: f64, product: f64) -> [f64; 2] {
    let s = disc.max(0.0).sqrt();
    let big = 0.5 * (sum + sum.signum() * s);
    let other = if big != 0.0 {
        product / big
    } else {
        0.5 * (sum - s)
    };
    if big >= other {
        [big, other]
    } else {
        [other, big]
    }
}

/// Eigenvalues of `[[a, c], [c, b]]`.
fn symmetric_pair(a: f64, b: f64, c: f64) -> [f64; 2] {
    let half_diff = 0.5 * (a - b);
    quadratic_roots(a + b, 4.0 * (half_diff * half_diff + c * c), a * b - c * c)
}

fn need(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

pub fn spectrum_complete(n: usize, alpha: Alpha) -> Result<ClosedFormSpectrum> {
    need(n >= 1, || "complete graph needs n >= 1".into())?;
    let a = alpha.value();
    let nf = n as f64;
    Ok(ClosedFormSpectrum::new(
        Source::Complete,
        format!("n={n}, alpha={a}"),
        vec![(nf - 1.0, 1), (a * nf - 1.0, n - 1)],
    ))
}

/// Adjacency spectrum of an `r`-regular graph on `n` vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularSpectrum {
    pub n: usize,
    pub r: usize,
    /// All `n` adjacency eigenvalues, descending, starting with `r`.
    pub eigenvalues: Vec<f64>,
}

const SPECTRUM_TOL: f64 = 1e-9;

impl RegularSpectrum {
    pub fn new(n: usize, r: usize, mut eigenvalues: Vec<f64>) -> Result<Self> {
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        let rf = r as f64;
        if eigenvalues.len() != n || n == 0 {
            return Err(Error::InconsistentSpectrum(format!(
                "expected {n} eigenvalues, got {}",
                eigenvalues.len()
            )));
        }
        if r >= n {
            return Err(Error::InconsistentSpectrum(format!(
                "degree {r} on {n} vertices"
            )));
        }
        if (eigenvalues[0] - rf).abs() > SPECTRUM_TOL {
            return Err(Error::InconsistentSpectrum(format!(
                "largest eigenvalue {} differs from r = {r}",
                eigenvalues[0]
            )));
        }
        if eigenvalues.iter().any(|l| l.abs() > rf + SPECTRUM_TOL) {
            return Err(Error::InconsistentSpectrum(format!(
                "an eigenvalue exceeds r = {r} in modulus"
            )));
        }
        Ok(RegularSpectrum { n, r, eigenvalues })
    }

    pub fn of_graph(g: &Graph) -> Result<Self> {
        let r = g
            .is_regular()
            .ok_or_else(|| Error::InconsistentSpectrum("graph is not regular".into()))?;
        let adj = Matrix::from_fn(g.order(), |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
        let mut ev = eigenvalues(&adj)?;
        // pin the principal eigenvalue to its exact value
        ev[0] = r as f64;
        RegularSpectrum::new(g.order(), r, ev)
    }

    pub fn complete(m: usize) -> Result<Self> {
        need(m >= 1, || "K_m needs m >= 1".into())?;
        let mut ev = vec![-1.0; m];
        ev[0] = m as f64 - 1.0;
        RegularSpectrum::new(m, m - 1, ev)
    }

    pub fn cycle(m: usize) -> Result<Self> {
        need(m >= 3, || "C_m needs m >= 3".into())?;
        let ev = (0..m)
            .map(|j| 2.0 * (2.0 * PI * j as f64 / m as f64).cos())
            .collect();
        RegularSpectrum::new(m, 2, ev)
    }

    pub fn edgeless(m: usize) -> Result<Self> {
        need(m >= 1, || "edgeless graph needs m >= 1".into())?;
        RegularSpectrum::new(m, 0, vec![0.0; m])
    }

    /// The eigenvalues other than one copy of `r`.
    fn non_principal(&self) -> &[f64] {
        &self.eigenvalues[1..]
    }
}

/// Spectrum of an `r`-regular graph of diameter 2.
pub fn spectrum_regular_diam2(g: &Graph, alpha: Alpha) -> Result<ClosedFormSpectrum> {
    let r = g
        .is_regular()
        .ok_or_else(|| Error::NotRegularDiameterTwo("graph is not regular".into()))?;
    let diameter = all_pairs_distances(g)?.diameter();
    if diameter != 2 {
        return Err(Error::NotRegularDiameterTwo(format!(
            "diameter is {diameter}"
        )));
    }
    let spec = RegularSpectrum::of_graph(g)?;
    let (a, n, rf) = (alpha.value(), g.order() as f64, r as f64);
    let mut families = vec![(0.5 * (n + rf - 1.0), 1)];
    families.extend(
        spec.non_principal()
            .iter()
            .map(|&l| (0.5 * ((a * n + a * rf - 1.0) + (1.0 - a) * l), 1)),
    );
    Ok(ClosedFormSpectrum::new(
        Source::RegularDiameterTwo,
        format!("n={}, r={r}, alpha={a}", g.order()),
        families,
    ))
}

/// Spectrum of `G1 ∨ G2` for regular `G1`, `G2`, from their adjacency spectra.
pub fn spectrum_join_regular(
    g1: &RegularSpectrum,
    g2: &RegularSpectrum,
    alpha: Alpha,
) -> Result<ClosedFormSpectrum> {
    let a = alpha.value();
    let (n1, n2) = (g1.n as f64, g2.n as f64);
    let (r1, r2) = (g1.r as f64, g2.r as f64);
    let n = n1 + n2;
    let mut families = Vec::with_capacity(g1.n + g2.n);
    for &l in g1.non_principal() {
        families.push((0.5 * (a * (n + n2 + r1) + (1.0 - a) * l - 1.0), 1));
    }
    for &l in g2.non_principal() {
        families.push((0.5 * (a * (n + n1 + r2) + (1.0 - a) * l - 1.0), 1));
    }
    let q11 = a * n2 + 0.5 * (n1 + r1 - 1.0);
    let q22 = a * n1 + 0.5 * (n2 + r2 - 1.0);
    let [hi, lo] = symmetric_pair(q11, q22, (1.0 - a) * (n1 * n2).sqrt());
    families.push((hi, 1));
    families.push((lo, 1));
    Ok(ClosedFormSpectrum::new(
        Source::JoinOfRegular,
        format!(
            "n1={}, r1={}, n2={}, r2={}, alpha={a}",
            g1.n, g1.r, g2.n, g2.r
        ),
        families,
    ))
}

pub fn spectrum_complete_bipartite(
    a_size: usize,
    b_size: usize,
    alpha: Alpha,
) -> Result<ClosedFormSpectrum> {
    need(a_size >= 1 && b_size >= 1, || {
        "K_{a,b} needs a, b >= 1".into()
    })?;
    let al = alpha.value();
    let (a, b) = (a_size as f64, b_size as f64);
    let n = a + b;
    let sum = (al + 0.5) * n - 1.0;
    let disc = (al - 0.5).powi(2) * (a - b).powi(2) + 4.0 * (1.0 - al).powi(2) * a * b;
    let product =
        (al * b + 0.5 * (a - 1.0)) * (al * a + 0.5 * (b - 1.0)) - (1.0 - al).powi(2) * a * b;
    let [hi, lo] = quadratic_roots(sum, disc, product);
    Ok(ClosedFormSpectrum::new(
        Source::CompleteBipartite,
        format!("a={a_size}, b={b_size}, alpha={al}"),
        vec![
            ((al * (n + b) - 1.0) / 2.0, a_size - 1),
            ((al * (n + a) - 1.0) / 2.0, b_size - 1),
            (hi, 1),
            (lo, 1),
        ],
    ))
}

/// Spectrum of `CS_{a,b} = K_a ∨ K̄_b`. `b = 1` gives `K_{a+1}`.
pub fn spectrum_complete_split(
    a_size: usize,
    b_size: usize,
    alpha: Alpha,
) -> Result<ClosedFormSpectrum> {
    need(a_size >= 1 && b_size >= 1, || {
        "CS_{a,b} needs a, b >= 1".into()
    })?;
    let al = alpha.value();
    let (a, b) = (a_size as f64, b_size as f64);
    let n = a + b;
    let sum = (al + 1.0) * n - b / 2.0 - 1.5;
    let disc = ((al - 1.0) * (a - b) - b / 2.0 + 0.5).powi(2) + 4.0 * (1.0 - al).powi(2) * a * b;
    let product = (al * b + a - 1.0) * (al * a + 0.5 * (b - 1.0)) - (1.0 - al).powi(2) * a * b;
    let [hi, lo] = quadratic_roots(sum, disc, product);
    Ok(ClosedFormSpectrum::new(
        Source::CompleteSplit,
        format!("a={a_size}, b={b_size}, alpha={al}"),
        vec![
            (al * n - 1.0, a_size - 1),
            ((al * (n + a) - 1.0) / 2.0, b_size - 1),
            (hi, 1),
            (lo, 1),
        ],
    ))
}

/// Spectrum of the wheel `W(n) = K_1 ∨ C_{n-1}`.
pub fn spectrum_wheel(n: usize, alpha: Alpha) -> Result<ClosedFormSpectrum> {
    need(n >= 4, || format!("wheel needs n >= 4, got {n}"))?;
    let a = alpha.value();
    let nf = n as f64;
    let mut families: Vec<(f64, usize)> = (1..n - 1)
        .map(|j| {
            let c = (2.0 * PI * j as f64 / (nf - 1.0)).cos();
            ((a * (nf + 3.0) - 1.0 + 2.0 * (1.0 - a) * c) / 2.0, 1)
        })
        .collect();
    let sum = (a + 0.5) * nf;
    let disc = (a * (nf - 2.0) - nf / 2.0).powi(2) + 4.0 * (1.0 - a).powi(2) * (nf - 1.0);
    let product = a * (nf - 1.0) * (nf / 2.0 + a) - (1.0 - a).powi(2) * (nf - 1.0);
    let [hi, lo] = quadratic_roots(sum, disc, product);
    families.push((hi, 1));
    families.push((lo, 1));
    Ok(ClosedFormSpectrum::new(
        Source::Wheel,
        format!("n={n}, alpha={a}"),
        families,
    ))
}

/// Square matrix together with a positive diagonal `s` such that
/// `S·Q·S⁻¹` is symmetric.
#[derive(Debug, Clone)]
pub struct QuotientMatrix {
    pub entries: Matrix,
    pub symmetrizer: Vec<f64>,
}

impl QuotientMatrix {
    pub fn dimension(&self) -> usize {
        self.entries.order()
    }

    pub fn symmetrized(&self) -> Matrix {
        let s = &self.symmetrizer;
        Matrix::from_fn(self.dimension(), |i, j| self.entries[(i, j)] * s[i] / s[j])
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        eigenvalues(&self.symmetrized())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClusterVariant {
    /// `C` is an independent set.
    Independent,
    /// `C` has been completed to a clique `K_c`.
    Clique,
}

/// Cluster `(C, S)`: vertices of `C` have neighbourhood exactly `S` outside
/// `C`. `t` is their common reciprocal transmission with `C` independent.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClusterSpec {
    pub members: Vec<usize>,
    pub shared: Vec<usize>,
    pub t: f64,
}

impl ClusterSpec {
    /// Builds the spec for `members` in `g`, where `C` is either independent
    /// or a clique in `g`.
    pub fn detect(g: &Graph, members: &[usize]) -> Result<(ClusterSpec, ClusterVariant)> {
        let n = g.order();
        let mut c = members.to_vec();
        c.sort_unstable();
        c.dedup();
        if c.len() != members.len() || c.len() < 2 || c.iter().any(|&v| v >= n) {
            return Err(Error::NotACluster(format!(
                "need at least two distinct vertices below {n}, got {members:?}"
            )));
        }
        let inside: Vec<bool> = (0..n).map(|v| c.binary_search(&v).is_ok()).collect();
        let outside = |v: usize| -> Vec<usize> { g.neighbors(v).filter(|&u| !inside[u]).collect() };
        let shared = outside(c[0]);
        if let Some(&v) = c.iter().find(|&&v| outside(v) != shared) {
            return Err(Error::NotACluster(format!(
                "vertices {} and {v} have different outside neighbourhoods",
                c[0]
            )));
        }
        let internal = c
            .iter()
            .enumerate()
            .flat_map(|(i, &u)| c[i + 1..].iter().map(move |&v| (u, v)));
        let edges = internal.clone().filter(|&(u, v)| g.has_edge(u, v)).count();
        let pairs = internal.count();
        let variant = match edges {
            0 => ClusterVariant::Independent,
            e if e == pairs => ClusterVariant::Clique,
            _ => {
                return Err(Error::NotACluster(
                    "members are neither independent nor a clique".into(),
                ))
            }
        };
        let rt = reciprocal_transmissions(g)?;
        let mut t = rt[c[0]];
        if variant == ClusterVariant::Clique {
            t -= (c.len() - 1) as f64 / 2.0;
        }
        Ok((
            ClusterSpec {
                members: c,
                shared,
                t,
            },
            variant,
        ))
    }
}

#[derive(Debug, Clone)]
pub struct ClusterQuotient {
    pub repeated: f64,
    pub multiplicity: usize,
    pub quotient: QuotientMatrix,
    /// Vertices indexing rows `1..` of the quotient; row 0 is `C`.
    pub rest: Vec<usize>,
}

impl ClusterQuotient {
    pub fn spectrum(&self) -> Result<ClosedFormSpectrum> {
        let mut families = vec![(self.repeated, self.multiplicity)];
        families.extend(self.quotient.eigenvalues()?.into_iter().map(|x| (x, 1)));
        Ok(ClosedFormSpectrum::new(
            Source::Cluster,
            format!("c={}, rest={}", self.multiplicity + 1, self.rest.len()),
            families,
        ))
    }
}

/// Repeated eigenvalue and quotient matrix of `RD_α(g)` for a cluster of `g`.
/// `variant` must describe how `C` sits inside `g`.
pub fn cluster_quotient(
    g: &Graph,
    cluster: &ClusterSpec,
    variant: ClusterVariant,
    alpha: Alpha,
) -> Result<ClusterQuotient> {
    let (found, actual) = ClusterSpec::detect(g, &cluster.members)?;
    if actual != variant {
        return Err(Error::NotACluster(format!(
            "variant mismatch: C is {actual:?} in the graph, {variant:?} requested"
        )));
    }
    if found.shared != cluster.shared || (found.t - cluster.t).abs() > 1e-9 {
        return Err(Error::NotACluster(
            "shared set or transmission does not match the graph".into(),
        ));
    }
    let a = alpha.value();
    let t = found.t;
    let c = found.members.len();
    let cf = c as f64;
    let (repeated, q00) = match variant {
        ClusterVariant::Independent => (
            a * t + (a - 1.0) / 2.0,
            a * (t + 0.5) - 0.5 + 0.5 * cf * (1.0 - a),
        ),
        ClusterVariant::Clique => (
            a * (t + 0.5 * cf + 0.5) - 1.0,
            a * (t + 0.5) - 1.0 + 0.5 * cf * (2.0 - a),
        ),
    };
    let bundle = MatrixBundle::new(g)?;
    let m = bundle.rd_alpha(alpha);
    let rest: Vec<usize> = (0..g.order())
        .filter(|v| found.members.binary_search(v).is_err())
        .collect();
    let rep = found.members[0];
    let dim = rest.len() + 1;
    let entries = Matrix::from_fn(dim, |i, j| match (i, j) {
        (0, 0) => q00,
        (0, j) => (1.0 - a) * bundle.distances.reciprocal(rep, rest[j - 1]),
        (i, 0) => cf * (1.0 - a) * bundle.distances.reciprocal(rest[i - 1], rep),
        (i, j) => m[(rest[i - 1], rest[j - 1])],
    });
    let mut symmetrizer = vec![1.0; dim];
    symmetrizer[0] = cf.sqrt();
    Ok(ClusterQuotient {
        repeated,
        multiplicity: c - 1,
        quotient: QuotientMatrix {
            entries,
            symmetrizer,
        },
        rest,
    })
}

/// Quotient matrix `T` of the complete multipartite graph.
pub fn multipartite_quotient(parts: &[usize], alpha: Alpha) -> Result<QuotientMatrix> {
    check_parts(parts)?;
    let a = alpha.value();
    let n: f64 = parts.iter().sum::<usize>() as f64;
    let entries = Matrix::from_fn(parts.len(), |i, j| {
        if i == j {
            let ni = parts[i] as f64;
            a * (n - ni) + 0.5 * (ni - 1.0)
        } else {
            (1.0 - a) * parts[j] as f64
        }
    });
    let symmetrizer = parts.iter().map(|&p| (p as f64).sqrt()).collect();
    Ok(QuotientMatrix {
        entries,
        symmetrizer,
    })
}

fn check_parts(parts: &[usize]) -> Result<()> {
    need(parts.len() >= 2, || {
        format!("need at least two parts, got {parts:?}")
    })?;
    need(parts.iter().all(|&p| p >= 1), || {
        format!("part sizes must be positive: {parts:?}")
    })?;
    need(parts.iter().sum::<usize>() >= 4, || {
        format!("need n >= 4, got parts {parts:?}")
    })
}

pub fn spectrum_multipartite(parts: &[usize], alpha: Alpha) -> Result<ClosedFormSpectrum> {
    let t = multipartite_quotient(parts, alpha)?;
    let a = alpha.value();
    let n: f64 = parts.iter().sum::<usize>() as f64;
    let mut families: Vec<(f64, usize)> = parts
        .iter()
        .map(|&p| (a * (n - p as f64 / 2.0) - 0.5, p - 1))
        .collect();
    families.extend(t.eigenvalues()?.into_iter().map(|x| (x, 1)));
    Ok(ClosedFormSpectrum::new(
        Source::CompleteMultipartite,
        format!("parts={parts:?}, alpha={a}"),
        families,
    ))
}

/// Guaranteed multiplicity `p − q` of `−½` in `σ(RD(G))`, for `p` pendant
/// and `q` quasi-pendant vertices.
pub fn pendant_multiplicity_bound(g: &Graph) -> usize {
    let (p, q) = pendant_counts(g);
    p - q
}

/// `true` when the numeric spectrum of `m` matches `cf` in sorted max-norm.
pub fn agrees_with(cf: &ClosedFormSpectrum, m: &Matrix, tol: f64) -> Result<bool> {
    let numeric = sym_eigen(m, false)?.eigenvalues;
    Ok(crate::eigen::spectral_distance(&cf.expanded(), &numeric) <= tol)
}
