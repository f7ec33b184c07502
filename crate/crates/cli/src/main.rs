//! `rdalpha`: spectra, bounds, PSD thresholds, closed forms and extremal
//! checks for the generalized reciprocal distance matrix `RD_α`.
//!
//! Exit status: 0 success or confirmed, 1 usage or parse error, 2 refuted,
//! 3 tie, 4 budget exceeded.

mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rdalpha::bounds::{
    bipartite_bound, bound_report, rq_relation_bounds, BoundKind, BoundRecord, Target,
};
use rdalpha::closed_forms::{
    spectrum_complete, spectrum_complete_bipartite, spectrum_complete_split, spectrum_multipartite,
    spectrum_regular_diam2, spectrum_wheel, ClosedFormSpectrum,
};
use rdalpha::eigen::{energy_about, rd_alpha_spectrum, sym_eigen};
use rdalpha::extremal::{Catalog, Constraint, ExtremalReport, Verdict};
use rdalpha::graph::families::turan_parts;
use rdalpha::graph::{bipartition, to_graph6};
use rdalpha::psd::{
    alpha0_bisection, alpha0_complete_bipartite, alpha0_transmission_regular, alpha0_wheel,
    PsdThreshold, REGULARITY_TOL,
};
use rdalpha::{Alpha, Error, Graph, MatrixBundle};

use input::{Construct, GraphSource, InputError};
use output::{fmt, fmt_list, sig12, sig12_all, Sink};

const EXIT_USAGE: u8 = 1;
const EXIT_REFUTED: u8 = 2;
const EXIT_TIE: u8 = 3;
const EXIT_BUDGET: u8 = 4;

/// Closed-form and numeric spectra may differ by at most this.
const CLOSED_FORM_TOL: f64 = 1e-8;
const BOUND_TOL: f64 = 1e-9;

#[derive(Debug, Parser)]
#[command(
    name = "rdalpha",
    version,
    about = "Spectral analysis of RD_alpha = alpha*RT + (1-alpha)*RD"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Eigenvalues, Harary index, transmissions and energy of RD_alpha
    Spectrum(GraphArgs),
    /// Spectral-radius bounds against the numeric spectrum
    Bounds(GraphArgs),
    /// Smallest alpha making RD_alpha positive semidefinite
    Psd(PsdArgs),
    /// Closed-form spectrum of a recognised family against the numeric one
    ClosedForm(GraphArgs),
    /// Exhaustive check of the predicted spectral-radius maximizer
    VerifyExtremal(ExtremalArgs),
    /// Dump one of the graph's matrices
    Matrix(MatrixArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write to PATH instead of stdout
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GraphArgs {
    #[command(flatten)]
    source: GraphSource,
    /// alpha in [0, 1]; repeat for several values
    #[arg(long = "alpha", value_parser = parse_alpha, default_value = "0")]
    alphas: Vec<Alpha>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct PsdArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Bisection interval width, at least 1e-12
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct ExtremalArgs {
    /// Order of the graphs searched
    #[arg(long)]
    n: usize,
    /// vertex-connectivity, edge-connectivity, chromatic-number or independence-number
    #[arg(long, value_parser = parse_constraint)]
    constraint: Constraint,
    /// Required value of the constraint
    #[arg(long)]
    value: usize,
    /// alpha in [0, 1); repeat for several values
    #[arg(long = "alpha", value_parser = parse_alpha, default_value = "0")]
    alphas: Vec<Alpha>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MatrixKind {
    Rd,
    Rt,
    Rl,
    Rq,
    RdAlpha,
    Adjacency,
    Distance,
}

#[derive(Debug, Args)]
struct MatrixArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long, value_enum, default_value_t = MatrixKind::RdAlpha)]
    kind: MatrixKind,
    /// Used by rd-alpha only
    #[arg(long, value_parser = parse_alpha, default_value = "0")]
    alpha: Alpha,
    #[command(flatten)]
    out: OutputArgs,
}

fn parse_alpha(s: &str) -> Result<Alpha, String> {
    let x: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("{s:?} is not a number"))?;
    Alpha::new(x).map_err(|e| e.to_string())
}

fn parse_constraint(s: &str) -> Result<Constraint, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug)]
enum Failure {
    Input(InputError),
    Core(Error),
    Io(std::io::Error),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Core(Error::BudgetExceeded { .. })
            | Failure::Input(InputError::Graph(Error::BudgetExceeded { .. })) => EXIT_BUDGET,
            _ => EXIT_USAGE,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Input(InputError::Io(p, e)) => format!("{}: {e}", p.display()),
            Failure::Input(InputError::Graph(e)) | Failure::Core(e) => e.to_string(),
            Failure::Io(e) => format!("output: {e}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("rdalpha: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Spectrum(a) => cmd_spectrum(a),
        Command::Bounds(a) => cmd_bounds(a),
        Command::Psd(a) => cmd_psd(a),
        Command::ClosedForm(a) => cmd_closed_form(a),
        Command::VerifyExtremal(a) => cmd_verify_extremal(a),
        Command::Matrix(a) => cmd_matrix(a),
    }
}

fn connected(g: Graph) -> Result<Graph, Failure> {
    if g.is_connected() {
        Ok(g)
    } else {
        Err(Error::NotConnected.into())
    }
}

// ─── spectrum ──────────────────────────────────────────────────────────────

#[derive(Serialize)]
struct SpectrumReport {
    n: usize,
    alpha: f64,
    eigenvalues: Vec<f64>,
    spectral_radius: f64,
    harary: f64,
    transmissions: Vec<f64>,
    energy: f64,
}

fn cmd_spectrum(args: GraphArgs) -> Result<u8, Failure> {
    let g = connected(args.source.load()?.graph)?;
    let bundle = MatrixBundle::new(&g)?;
    let n = g.order();
    let rtr = bundle.transmissions.as_slice().to_vec();
    let harary = bundle.transmissions.sum() / 2.0;
    let mean = 2.0 * harary / n as f64;
    let mut sink = Sink::open(args.out.output.as_deref())?;
    let mut rows = Vec::new();
    for &alpha in &args.alphas {
        let spectrum = sym_eigen(&bundle.rd_alpha(alpha), false)?;
        // trace(RD_α) = α·2H, so the spectrum is centred at α·2H/n
        let energy = energy_about(&spectrum.eigenvalues, alpha.value() * mean);
        let report = SpectrumReport {
            n,
            alpha: alpha.value(),
            eigenvalues: sig12_all(&spectrum.eigenvalues),
            spectral_radius: sig12(spectrum.largest()),
            harary: sig12(harary),
            transmissions: sig12_all(&rtr),
            energy: sig12(energy),
        };
        match args.out.format {
            Format::Json => sink.json(&report)?,
            Format::Table => rows.push(report),
        }
    }
    if args.out.format == Format::Table {
        sink.line(format!("n = {n}  harary = {}", fmt(harary)))?;
        sink.line(format!("transmissions: {}", fmt_list(&rtr)))?;
        let table: Vec<Vec<String>> = rows
            .iter()
            .map(|r| {
                vec![
                    fmt(r.alpha),
                    fmt(r.spectral_radius),
                    fmt(r.energy),
                    fmt_list(&r.eigenvalues),
                ]
            })
            .collect();
        sink.table(&["alpha", "rho", "energy", "eigenvalues"], &table)?;
    }
    sink.flush()?;
    Ok(0)
}

// ─── bounds ────────────────────────────────────────────────────────────────

#[derive(Serialize)]
struct CheckedBound {
    #[serde(flatten)]
    record: BoundRecord,
    holds: bool,
}

#[derive(Serialize)]
struct BoundsReport {
    n: usize,
    alpha: f64,
    spectral_radius: f64,
    smallest_eigenvalue: f64,
    records: Vec<CheckedBound>,
    violations: usize,
}

fn cmd_bounds(args: GraphArgs) -> Result<u8, Failure> {
    let g = connected(args.source.load()?.graph)?;
    let bipartite = g.order() >= 2 && bipartition(&g).is_some();
    let mut sink = Sink::open(args.out.output.as_deref())?;
    for &alpha in &args.alphas {
        let s = rd_alpha_spectrum(&g, alpha)?;
        let (rho, lmin) = (s.largest(), s.smallest());
        let mut records = bound_report(&g, alpha)?;
        records.extend(rq_relation_bounds(&g, alpha)?);
        if bipartite {
            records.push(bipartite_bound(&g, alpha)?.record);
        }
        let records: Vec<CheckedBound> = records
            .into_iter()
            .map(|mut record| {
                let holds = record.holds_for(rho, lmin, BOUND_TOL);
                record.value = sig12(record.value);
                CheckedBound { record, holds }
            })
            .collect();
        let report = BoundsReport {
            n: g.order(),
            alpha: alpha.value(),
            spectral_radius: sig12(rho),
            smallest_eigenvalue: sig12(lmin),
            violations: records.iter().filter(|r| !r.holds).count(),
            records,
        };
        match args.out.format {
            Format::Json => sink.json(&report)?,
            Format::Table => {
                sink.line(format!(
                    "alpha = {}  rho = {}  lambda_min = {}",
                    fmt(report.alpha),
                    fmt(rho),
                    fmt(lmin)
                ))?;
                let rows: Vec<Vec<String>> = report
                    .records
                    .iter()
                    .map(|c| {
                        let r = &c.record;
                        vec![
                            r.name.to_string(),
                            match (r.kind, r.target) {
                                (BoundKind::Lower, Target::SpectralRadius) => "rho >=",
                                (BoundKind::Upper, Target::SpectralRadius) => "rho <=",
                                (BoundKind::Lower, Target::SmallestEigenvalue) => "lambda_min >=",
                                (BoundKind::Upper, Target::SmallestEigenvalue) => "lambda_min <=",
                            }
                            .to_string(),
                            fmt(r.value),
                            if !r.applicable {
                                "n/a".to_string()
                            } else if c.holds {
                                "ok".to_string()
                            } else {
                                "VIOLATED".to_string()
                            },
                        ]
                    })
                    .collect();
                sink.table(&["bound", "relation", "value", "status"], &rows)?;
                sink.line("")?;
            }
        }
    }
    sink.flush()?;
    Ok(0)
}

// ─── psd ───────────────────────────────────────────────────────────────────

#[derive(Serialize)]
struct NamedThreshold {
    formula: &'static str,
    #[serde(flatten)]
    threshold: PsdThreshold,
    /// `|closed form − bisection|`
    deviation: f64,
}

#[derive(Serialize)]
struct PsdReport {
    n: usize,
    alpha0: f64,
    bisection: PsdThreshold,
    closed_forms: Vec<NamedThreshold>,
}

/// Wheel order if `g` is a hub joined to a cycle on the other vertices.
fn wheel_order(g: &Graph) -> Option<usize> {
    let n = g.order();
    if n < 4 {
        return None;
    }
    let hub = (0..n).find(|&v| g.degree(v) == n - 1)?;
    let rim: Vec<usize> = (0..n).filter(|&v| v != hub).collect();
    let c = g.induced(&rim);
    (c.is_regular() == Some(2) && c.is_connected()).then_some(n)
}

/// `(a, n)` if `g ≅ K_{a,n−a}` with `a ≤ n − a`.
fn complete_bipartite_shape(g: &Graph) -> Option<(usize, usize)> {
    let (p, q) = bipartition(g)?;
    let a = p.len().min(q.len());
    (a >= 1 && g.edge_count() == p.len() * q.len()).then_some((a, g.order()))
}

fn cmd_psd(args: PsdArgs) -> Result<u8, Failure> {
    let g = connected(args.source.load()?.graph)?;
    let bisection = alpha0_bisection(&g, args.tol)?;
    let mut closed = Vec::new();
    let b = MatrixBundle::new(&g)?;
    if g.order() >= 2 && b.transmissions.spread() <= REGULARITY_TOL {
        closed.push((
            "-lambda_min(RD) / (k - lambda_min(RD))",
            alpha0_transmission_regular(&g)?,
        ));
    }
    if let Some((a, n)) = complete_bipartite_shape(&g).filter(|&(_, n)| n >= 4) {
        closed.push((
            "(n-1+3a(n-a)) / (2n(n-1)+4a(n-a))",
            alpha0_complete_bipartite(a, n)?,
        ));
    }
    if let Some(n) = wheel_order(&g) {
        closed.push((
            if n % 2 == 1 {
                "3/(n+5)"
            } else {
                "(1-c)/(n+3-c), c = 2cos(2k*pi/(2k+1)), k = (n-2)/2"
            },
            alpha0_wheel(n)?,
        ));
    }
    let round = |mut t: PsdThreshold| {
        t.alpha0 = sig12(t.alpha0);
        t.residual = sig12(t.residual);
        t
    };
    let closed_forms: Vec<NamedThreshold> = closed
        .into_iter()
        .map(|(formula, t)| NamedThreshold {
            formula,
            deviation: sig12((t.alpha0 - bisection.alpha0).abs()),
            threshold: round(t),
        })
        .collect();
    let report = PsdReport {
        n: g.order(),
        alpha0: sig12(bisection.alpha0),
        bisection: round(bisection),
        closed_forms,
    };
    let mut sink = Sink::open(args.out.output.as_deref())?;
    match args.out.format {
        Format::Json => sink.json(&report)?,
        Format::Table => {
            sink.line(format!("alpha0 = {}", fmt(report.alpha0)))?;
            let mut rows = vec![vec![
                "bisection".to_string(),
                fmt(report.bisection.alpha0),
                fmt(report.bisection.residual),
                report.bisection.note.clone().unwrap_or_default(),
            ]];
            rows.extend(report.closed_forms.iter().map(|c| {
                vec![
                    c.formula.to_string(),
                    fmt(c.threshold.alpha0),
                    fmt(c.threshold.residual),
                    format!("deviation {}", fmt(c.deviation)),
                ]
            }));
            sink.table(&["method", "alpha0", "residual", "note"], &rows)?;
        }
    }
    sink.flush()?;
    Ok(0)
}

// ─── closed-form ───────────────────────────────────────────────────────────

#[derive(Serialize)]
struct ClosedFormReport {
    n: usize,
    alpha: f64,
    #[serde(flatten)]
    closed_form: ClosedFormSpectrum,
    expanded: Vec<f64>,
    numeric: Vec<f64>,
    max_deviation: f64,
    agrees: bool,
}

fn closed_form_for(
    construct: Option<&Construct>,
    g: &Graph,
    alpha: Alpha,
) -> Result<ClosedFormSpectrum, Error> {
    match construct {
        Some(Construct::Complete(n)) => spectrum_complete(*n, alpha),
        Some(Construct::Star(n)) if *n >= 2 => spectrum_complete_bipartite(1, n - 1, alpha),
        Some(Construct::Bipartite(a, b)) => spectrum_complete_bipartite(*a, *b, alpha),
        Some(Construct::Split(a, b)) => spectrum_complete_split(*a, *b, alpha),
        Some(Construct::Wheel(n)) => spectrum_wheel(*n, alpha),
        Some(Construct::Turan(n, r)) => spectrum_multipartite(&turan_parts(*n, *r)?, alpha),
        Some(Construct::Multipartite(parts)) => spectrum_multipartite(parts, alpha),
        _ => spectrum_regular_diam2(g, alpha).map_err(|e| {
            Error::InvalidParameter(format!(
                "no closed form for {}: not a named family and {e}",
                to_graph6(g).unwrap_or_else(|_| "graph".into())
            ))
        }),
    }
}

fn cmd_closed_form(args: GraphArgs) -> Result<u8, Failure> {
    let loaded = args.source.load()?;
    let g = connected(loaded.graph)?;
    let bundle = MatrixBundle::new(&g)?;
    let mut sink = Sink::open(args.out.output.as_deref())?;
    let mut rows = Vec::new();
    for &alpha in &args.alphas {
        let mut cf = closed_form_for(loaded.construct.as_ref(), &g, alpha)?;
        let expanded = cf.expanded();
        let numeric = sym_eigen(&bundle.rd_alpha(alpha), false)?.eigenvalues;
        let deviation = rdalpha::eigen::spectral_distance(&expanded, &numeric);
        for e in &mut cf.eigenvalues {
            e.0 = sig12(e.0);
        }
        let report = ClosedFormReport {
            n: g.order(),
            alpha: alpha.value(),
            closed_form: cf,
            expanded: sig12_all(&expanded),
            numeric: sig12_all(&numeric),
            max_deviation: sig12(deviation),
            agrees: deviation <= CLOSED_FORM_TOL,
        };
        match args.out.format {
            Format::Json => sink.json(&report)?,
            Format::Table => rows.push(report),
        }
    }
    if args.out.format == Format::Table {
        let table: Vec<Vec<String>> = rows
            .iter()
            .map(|r| {
                let families = r
                    .closed_form
                    .eigenvalues
                    .iter()
                    .map(|(v, m)| format!("{}^{m}", fmt(*v)))
                    .collect::<Vec<_>>()
                    .join(" ");
                vec![
                    fmt(r.alpha),
                    r.closed_form.parameters.clone(),
                    families,
                    fmt(r.max_deviation),
                ]
            })
            .collect();
        sink.table(&["alpha", "family", "eigenvalues", "max_deviation"], &table)?;
    }
    sink.flush()?;
    Ok(0)
}

// ─── verify-extremal ───────────────────────────────────────────────────────

fn cmd_verify_extremal(args: ExtremalArgs) -> Result<u8, Failure> {
    let catalog = Catalog::new(args.n)?;
    let mut reports = Vec::new();
    for &alpha in &args.alphas {
        let mut r = catalog.verify(args.constraint, args.value, alpha)?;
        r.rho_max = sig12(r.rho_max);
        r.runner_up = r.runner_up.map(sig12);
        r.bound = r.bound.map(sig12);
        reports.push(r);
    }
    let mut sink = Sink::open(args.out.output.as_deref())?;
    match args.out.format {
        Format::Json => {
            for r in &reports {
                sink.json(r)?;
            }
        }
        Format::Table => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    let verdict = match r.verdict {
                        Verdict::Confirmed => "confirmed",
                        Verdict::Refuted => "refuted",
                        Verdict::Tie => "tie",
                    };
                    vec![
                        fmt(r.alpha),
                        r.class_size.to_string(),
                        fmt(r.rho_max),
                        r.maximizers.join(","),
                        r.predicted.clone(),
                        format!(
                            "{verdict}{}",
                            if r.exploratory { " (exploratory)" } else { "" }
                        ),
                    ]
                })
                .collect();
            sink.table(
                &[
                    "alpha",
                    "class",
                    "rho_max",
                    "maximizers",
                    "predicted",
                    "verdict",
                ],
                &rows,
            )?;
        }
    }
    sink.flush()?;
    Ok(verdict_code(&reports))
}

/// Exploratory runs carry no claim, so they never fail the process.
fn verdict_code(reports: &[ExtremalReport]) -> u8 {
    let claimed: Vec<Verdict> = reports
        .iter()
        .filter(|r| !r.exploratory)
        .map(|r| r.verdict)
        .collect();
    if claimed.contains(&Verdict::Refuted) {
        EXIT_REFUTED
    } else if claimed.contains(&Verdict::Tie) {
        EXIT_TIE
    } else {
        0
    }
}

// ─── matrix ────────────────────────────────────────────────────────────────

#[derive(Serialize)]
struct MatrixReport {
    n: usize,
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<f64>,
    rows: Vec<Vec<f64>>,
}

fn cmd_matrix(args: MatrixArgs) -> Result<u8, Failure> {
    let g = connected(args.source.load()?.graph)?;
    let b = MatrixBundle::new(&g)?;
    let n = g.order();
    let (kind, m) = match args.kind {
        MatrixKind::Rd => ("rd", b.rd.clone()),
        MatrixKind::Rt => ("rt", b.rt.clone()),
        MatrixKind::Rl => ("rl", b.rl.clone()),
        MatrixKind::Rq => ("rq", b.rq.clone()),
        MatrixKind::RdAlpha => ("rd-alpha", b.rd_alpha(args.alpha)),
        MatrixKind::Adjacency => ("adjacency", b.adjacency.clone()),
        MatrixKind::Distance => (
            "distance",
            rdalpha::Matrix::from_fn(n, |i, j| b.distances.get(i, j) as f64),
        ),
    };
    let mut sink = Sink::open(args.out.output.as_deref())?;
    match args.out.format {
        Format::Json => sink.json(&MatrixReport {
            n,
            kind,
            alpha: (args.kind == MatrixKind::RdAlpha).then(|| args.alpha.value()),
            rows: (0..n).map(|i| sig12_all(m.row(i))).collect(),
        })?,
        Format::Table => {
            let rows: Vec<Vec<String>> = (0..n)
                .map(|i| m.row(i).iter().map(|&x| fmt(x)).collect())
                .collect();
            let header: Vec<String> = (0..n).map(|j| j.to_string()).collect();
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            sink.table(&header, &rows)?;
        }
    }
    sink.flush()?;
    Ok(0)
}
