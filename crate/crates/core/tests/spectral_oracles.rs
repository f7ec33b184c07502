//! Spectra, closed forms, bounds, PSD thresholds and extremal searches
//! checked against independent oracles: nalgebra's symmetric eigensolver,
//! circulant eigenvalues, hand-expanded characteristic polynomials and
//! published values.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use rdalpha::bounds::{bipartite_bound, bound_report};
use rdalpha::closed_forms::*;
use rdalpha::eigen::*;
use rdalpha::extremal::*;
use rdalpha::graph::families::*;
use rdalpha::graph::{canonical_form, graph_invariants, parse_graph6};
use rdalpha::psd::*;
use rdalpha::{Alpha, Graph, Matrix, MatrixBundle};

fn al(x: f64) -> Alpha {
    Alpha::new(x).unwrap()
}

fn nalgebra_eigenvalues(m: &Matrix) -> Vec<f64> {
    let n = m.order();
    let dm = DMatrix::from_fn(n, n, |i, j| m[(i, j)]);
    let mut ev: Vec<f64> = dm.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| b.partial_cmp(a).unwrap());
    ev
}

fn random_connected(rng: &mut StdRng, n: usize) -> Graph {
    loop {
        let p = rng.gen_range(0.15..0.9);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

fn sorted_desc(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| b.partial_cmp(a).unwrap());
    v
}

/// Largest root of a monic polynomial with all real roots, by bisection
/// from above the Cauchy bound.
fn largest_root(coeffs: &[f64]) -> f64 {
    let p = |x: f64| coeffs.iter().fold(1.0, |acc, &c| acc * x + c);
    let mut hi = 1.0 + coeffs.iter().map(|c| c.abs()).fold(0.0, f64::max);
    let mut lo = 0.0;
    // the largest root is positive for every polynomial used here
    assert!(p(lo) < 0.0 && p(hi) > 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if p(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

// ─── eigensolver ───────────────────────────────────────────────────────────

#[test]
fn jacobi_matches_nalgebra() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..60 {
        let n = rng.gen_range(2..=24);
        let g = random_connected(&mut rng, n);
        let a = al(rng.gen_range(0.0..=1.0));
        let m = rdalpha::matrices::rd_alpha(&g, a).unwrap();
        let ours = sym_eigen(&m, true).unwrap();
        let theirs = nalgebra_eigenvalues(&m);
        assert!(spectral_distance(&ours.eigenvalues, &theirs) < 1e-10);
        // A v = λ v, V orthonormal
        for k in 0..n {
            let v = ours.eigenvector(k).unwrap();
            let mv = m.mul_vec(&v);
            for i in 0..n {
                assert!((mv[i] - ours.eigenvalues[k] * v[i]).abs() < 1e-9);
            }
            for l in 0..n {
                let w = ours.eigenvector(l).unwrap();
                let dot: f64 = v.iter().zip(&w).map(|(x, y)| x * y).sum();
                assert!((dot - if k == l { 1.0 } else { 0.0 }).abs() < 1e-10);
            }
        }
    }
}

#[test]
fn cycles_match_circulant_eigenvalues() {
    for n in 3..=14 {
        let g = cycle(n).unwrap();
        let c: Vec<f64> = (0..n)
            .map(|k| {
                if k == 0 {
                    0.0
                } else {
                    1.0 / k.min(n - k) as f64
                }
            })
            .collect();
        let t: f64 = c.iter().sum();
        for x in [0.0, 0.3, 0.5, 0.8, 1.0] {
            let expected: Vec<f64> = (0..n)
                .map(|j| {
                    let lam: f64 = (0..n)
                        .map(|k| c[k] * (2.0 * PI * (j * k) as f64 / n as f64).cos())
                        .sum();
                    x * t + (1.0 - x) * lam
                })
                .collect();
            let ours = rd_alpha_spectrum(&g, al(x)).unwrap().eigenvalues;
            assert!(
                spectral_distance(&ours, &sorted_desc(expected)) < 1e-11,
                "C_{n} α={x}"
            );
        }
    }
}

#[test]
fn path_three_cubic() {
    // det(λI − RD(P_3)) = λ³ − (9/4)λ − 1
    let root = largest_root(&[0.0, -2.25, -1.0]);
    assert!((root - 1.68614).abs() < 1e-5);
    let g = parse_graph6("Bg").unwrap();
    assert!((spectral_radius(&g, Alpha::ZERO).unwrap() - root).abs() < 1e-12);
}

#[test]
fn perron_vector_is_positive_unit() {
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..20 {
        let n = rng.gen_range(2..=12);
        let g = random_connected(&mut rng, n);
        let (rho, v) = perron_vector(&g, al(0.4)).unwrap();
        assert!(v.iter().all(|&x| x > 0.0));
        assert!((v.iter().map(|x| x * x).sum::<f64>() - 1.0).abs() < 1e-12);
        assert!(
            (rho - nalgebra_eigenvalues(&rdalpha::matrices::rd_alpha(&g, al(0.4)).unwrap())[0])
                .abs()
                < 1e-10
        );
    }
}

#[test]
fn energy_of_complete_graph() {
    let k4 = complete(4).unwrap();
    assert!((rd_alpha_energy(&k4, Alpha::ZERO).unwrap() - 6.0).abs() < 1e-12);
    assert!((rd_alpha_energy(&k4, Alpha::HALF).unwrap() - 3.0).abs() < 1e-12);
}

// ─── closed forms ──────────────────────────────────────────────────────────

fn check(cf: &ClosedFormSpectrum, g: &Graph, a: Alpha) {
    let m = rdalpha::matrices::rd_alpha(g, a).unwrap();
    let d = spectral_distance(&cf.expanded(), &nalgebra_eigenvalues(&m));
    assert!(d < 1e-9, "{} deviates by {d:e}", cf.parameters);
}

#[test]
fn complete_graph_published_values() {
    let cf = spectrum_complete(4, Alpha::ZERO).unwrap();
    assert_eq!(cf.expanded(), vec![3.0, -1.0, -1.0, -1.0]);
    let cf = spectrum_complete(4, Alpha::HALF).unwrap();
    assert_eq!(cf.expanded(), vec![3.0, 1.0, 1.0, 1.0]);
}

#[test]
fn regular_diameter_two_published_values() {
    let c4 = spectrum_regular_diam2(&cycle(4).unwrap(), Alpha::ZERO).unwrap();
    assert!(spectral_distance(&c4.expanded(), &[2.5, -0.5, -0.5, -1.5]) < 1e-12);
    let c5 = spectrum_regular_diam2(&cycle(5).unwrap(), Alpha::ZERO).unwrap();
    let mut expected = vec![3.0];
    expected.extend((1..5).map(|j| 0.5 * (-1.0 + 2.0 * (2.0 * PI * j as f64 / 5.0).cos())));
    assert!(spectral_distance(&c5.expanded(), &sorted_desc(expected)) < 1e-12);
    let p = spectrum_regular_diam2(&petersen(), Alpha::ZERO).unwrap();
    let mut expected = vec![6.0];
    expected.extend([0.0; 5]);
    expected.extend([-1.5; 4]);
    assert!(spectral_distance(&p.expanded(), &expected) < 1e-12);
    for x in [0.0, 0.25, 0.5, 1.0] {
        check(
            &spectrum_regular_diam2(&petersen(), al(x)).unwrap(),
            &petersen(),
            al(x),
        );
    }
    assert!(spectrum_regular_diam2(&cycle(6).unwrap(), Alpha::ZERO).is_err());
}

#[test]
fn star_published_values() {
    let cf = spectrum_complete_bipartite(1, 3, Alpha::ZERO).unwrap();
    let s13 = 13f64.sqrt();
    assert!(
        spectral_distance(
            &cf.expanded(),
            &[(1.0 + s13) / 2.0, -0.5, -0.5, (1.0 - s13) / 2.0]
        ) < 1e-12
    );
}

#[test]
fn wheel_published_values() {
    let cf = spectrum_wheel(5, Alpha::ZERO).unwrap();
    let r = 22.25f64.sqrt();
    let expected = sorted_desc(vec![-0.5, -0.5, -1.5, (2.5 + r) / 2.0, (2.5 - r) / 2.0]);
    assert!(spectral_distance(&cf.expanded(), &expected) < 1e-12);
    check(
        &spectrum_wheel(7, al(0.25)).unwrap(),
        &wheel(7).unwrap(),
        al(0.25),
    );
}

#[test]
fn specializations_agree() {
    for x in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let a = al(x);
        let j = spectrum_join_regular(
            &RegularSpectrum::complete(1).unwrap(),
            &RegularSpectrum::cycle(4).unwrap(),
            a,
        )
        .unwrap();
        assert!(
            spectral_distance(&j.expanded(), &spectrum_wheel(5, a).unwrap().expanded()) < 1e-12
        );
        for (p, q) in [(1, 3), (2, 2), (2, 5), (4, 3)] {
            let j = spectrum_join_regular(
                &RegularSpectrum::edgeless(p).unwrap(),
                &RegularSpectrum::edgeless(q).unwrap(),
                a,
            )
            .unwrap();
            let kab = spectrum_complete_bipartite(p, q, a).unwrap();
            assert!(spectral_distance(&j.expanded(), &kab.expanded()) < 1e-12);
        }
        let cs = spectrum_complete_split(2, 2, a).unwrap();
        check(&cs, &complete_split(2, 2).unwrap(), a);
        check(
            &spectrum_multipartite(&[2, 2, 2], a).unwrap(),
            &complete_multipartite(&[2, 2, 2]).unwrap(),
            a,
        );
    }
}

#[test]
fn quadratic_discriminants_nonnegative() {
    for a_size in 1..=6 {
        for b_size in 1..=6 {
            for k in 0..=16 {
                let x = k as f64 / 16.0;
                let (a, b) = (a_size as f64, b_size as f64);
                let disc = (x - 0.5).powi(2) * (a - b).powi(2) + 4.0 * (1.0 - x).powi(2) * a * b;
                assert!(disc >= 0.0);
                let cs =
                    ((x - 1.0) * (a - b) - b / 2.0 + 0.5).powi(2) + 4.0 * (1.0 - x).powi(2) * a * b;
                assert!(cs >= 0.0);
            }
        }
    }
}

#[test]
fn cluster_quotients() {
    // K_{1,3} with its leaves as an independent cluster
    let s = star(4).unwrap();
    let (spec, variant) = ClusterSpec::detect(&s, &[1, 2, 3]).unwrap();
    assert_eq!(variant, ClusterVariant::Independent);
    let q = cluster_quotient(&s, &spec, variant, Alpha::ZERO).unwrap();
    assert_eq!((q.repeated, q.multiplicity), (-0.5, 2));
    check(&q.spectrum().unwrap(), &s, Alpha::ZERO);

    // the K_3 side of CS_{3,4} repeats the split family value αn − 1
    let cs = complete_split(3, 4).unwrap();
    for x in [0.0, 0.3, 0.7] {
        let (spec, variant) = ClusterSpec::detect(&cs, &[0, 1, 2]).unwrap();
        assert_eq!(variant, ClusterVariant::Clique);
        let q = cluster_quotient(&cs, &spec, variant, al(x)).unwrap();
        assert!((q.repeated - (7.0 * x - 1.0)).abs() < 1e-12);
        check(&q.spectrum().unwrap(), &cs, al(x));
    }

    // double star: two adjacent centres with three leaves each
    let ds =
        Graph::from_edges(8, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)]).unwrap();
    for x in [0.0, 0.5, 0.9] {
        let (spec, variant) = ClusterSpec::detect(&ds, &[2, 3, 4]).unwrap();
        check(
            &cluster_quotient(&ds, &spec, variant, al(x))
                .unwrap()
                .spectrum()
                .unwrap(),
            &ds,
            al(x),
        );
    }
    assert!(ClusterSpec::detect(&ds, &[2, 5]).is_err());
}

#[test]
fn pendant_multiplicity_double_star() {
    let ds =
        Graph::from_edges(8, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)]).unwrap();
    assert_eq!(pendant_multiplicity_bound(&ds), 4);
    let ev = rd_alpha_spectrum(&ds, Alpha::ZERO).unwrap().eigenvalues;
    assert!(multiplicity_of(&ev, -0.5, 1e-7) >= 4);
}

// ─── bounds ────────────────────────────────────────────────────────────────

#[test]
fn bound_values_by_hand() {
    let find = |rs: &[rdalpha::bounds::BoundRecord], name: &str| {
        rs.iter().find(|r| r.name == name).unwrap().value
    };
    let p3 = path(3).unwrap();
    let r = bound_report(&p3, Alpha::ZERO).unwrap();
    assert!((find(&r, "harary_lower") - 5.0 / 3.0).abs() < 1e-12);
    let k4 = complete(4).unwrap();
    let r = bound_report(&k4, Alpha::HALF).unwrap();
    assert!((find(&r, "row_norm_upper") - 3.0).abs() < 1e-12);
    for x in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let r = bound_report(&cycle(4).unwrap(), al(x)).unwrap();
        assert!((find(&r, "harary_lower") - 2.5).abs() < 1e-12);
        assert!((spectral_radius(&cycle(4).unwrap(), al(x)).unwrap() - 2.5).abs() < 1e-12);
    }
}

#[test]
fn bipartite_bound_equality() {
    let b = bipartite_bound(&complete_bipartite(2, 2).unwrap(), Alpha::ZERO).unwrap();
    assert!((b.record.value - 2.5).abs() < 1e-12 && b.equality);
    let b = bipartite_bound(&star(4).unwrap(), Alpha::ZERO).unwrap();
    assert!((b.record.value - (1.0 + 13f64.sqrt()) / 2.0).abs() < 1e-12 && b.equality);
    let p4 = path(4).unwrap();
    let b = bipartite_bound(&p4, Alpha::ZERO).unwrap();
    assert!(b.record.value > spectral_radius(&p4, Alpha::ZERO).unwrap() && !b.equality);
}

// ─── psd ───────────────────────────────────────────────────────────────────

#[test]
fn psd_published_values() {
    assert!((alpha0_bisection(&star(4).unwrap(), 1e-12).unwrap().alpha0 - 1.0 / 3.0).abs() < 1e-8);
    assert!((alpha0_bisection(&wheel(5).unwrap(), 1e-12).unwrap().alpha0 - 0.3).abs() < 1e-8);
    assert!((alpha0_bisection(&cycle(4).unwrap(), 1e-12).unwrap().alpha0 - 0.375).abs() < 1e-8);
    assert_eq!(alpha0_complete_bipartite(1, 4).unwrap().alpha0, 1.0 / 3.0);
    assert_eq!(alpha0_complete_bipartite(2, 4).unwrap().alpha0, 0.375);
    assert_eq!(alpha0_complete_bipartite(3, 6).unwrap().alpha0, 1.0 / 3.0);
    assert_eq!(alpha0_wheel(5).unwrap().alpha0, 0.3);
    assert_eq!(alpha0_wheel(7).unwrap().alpha0, 0.25);
    let c = 2.0 * (4.0 * PI / 5.0).cos();
    assert!((alpha0_wheel(6).unwrap().alpha0 - (1.0 - c) / (9.0 - c)).abs() < 1e-15);
}

#[test]
fn psd_transmission_regular_oracle() {
    for n in 2..=8 {
        assert!(
            (alpha0_transmission_regular(&complete(n).unwrap())
                .unwrap()
                .alpha0
                - 1.0 / n as f64)
                .abs()
                < 1e-12
        );
    }
    // circulant λ_min of RD(C_5)
    let lmin = 0.5 * (-1.0 + 2.0 * (4.0 * PI / 5.0).cos());
    let t = alpha0_transmission_regular(&cycle(5).unwrap()).unwrap();
    assert!((t.alpha0 - (-lmin / (3.0 - lmin))).abs() < 1e-12);
}

#[test]
fn psd_threshold_is_the_sign_change() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..15 {
        let n = rng.gen_range(3..=10);
        let g = random_connected(&mut rng, n);
        let t = alpha0_bisection(&g, 1e-10).unwrap();
        let f = |x: f64| {
            *nalgebra_eigenvalues(&rdalpha::matrices::rd_alpha(&g, al(x)).unwrap())
                .last()
                .unwrap()
        };
        assert!(f(t.alpha0) > -1e-9);
        assert!(f((t.alpha0 - 1e-6).max(0.0)) < 1e-9);
    }
}

// ─── extremal ──────────────────────────────────────────────────────────────

#[test]
fn kite_shapes() {
    let k = build_kite(5, 2).unwrap();
    assert_eq!(graph_invariants(&k).unwrap().vertex_connectivity, 2);
    let k = build_kite(4, 2).unwrap();
    assert_eq!(
        canonical_form(&k).unwrap(),
        canonical_form(&complete_split(2, 2).unwrap()).unwrap()
    );
}

#[test]
fn extremal_examples() {
    use Verdict::Confirmed;
    assert_eq!(
        verify_vertex_connectivity_extremal(5, 1, Alpha::ZERO)
            .unwrap()
            .verdict,
        Confirmed
    );
    assert_eq!(
        verify_vertex_connectivity_extremal(5, 3, Alpha::HALF)
            .unwrap()
            .verdict,
        Confirmed
    );
    let r = verify_vertex_connectivity_extremal(4, 2, al(0.25)).unwrap();
    assert_eq!(r.maximizers.len(), 1);
    let k4e = parse_graph6(&r.maximizers[0]).unwrap();
    assert_eq!(
        canonical_form(&k4e).unwrap(),
        canonical_form(&complete_split(2, 2).unwrap()).unwrap()
    );
    assert_eq!(
        verify_edge_connectivity_extremal(5, 1, Alpha::ZERO)
            .unwrap()
            .verdict,
        Confirmed
    );
    assert_eq!(
        verify_edge_connectivity_extremal(5, 2, al(0.75))
            .unwrap()
            .verdict,
        Confirmed
    );
    assert_eq!(
        verify_edge_connectivity_extremal(6, 2, Alpha::ZERO)
            .unwrap()
            .verdict,
        Confirmed
    );

    let r = verify_chromatic_extremal(6, 3, al(0.25)).unwrap();
    assert_eq!(r.verdict, Confirmed);
    let m = parse_graph6(&r.maximizers[0]).unwrap();
    assert_eq!(
        canonical_form(&m).unwrap(),
        canonical_form(&complete_multipartite(&[2, 2, 2]).unwrap()).unwrap()
    );
    let r = verify_chromatic_extremal(5, 2, Alpha::ZERO).unwrap();
    let m = parse_graph6(&r.maximizers[0]).unwrap();
    assert_eq!(
        canonical_form(&m).unwrap(),
        canonical_form(&complete_bipartite(2, 3).unwrap()).unwrap()
    );
    assert!(
        verify_chromatic_extremal(6, 3, al(0.6))
            .unwrap()
            .exploratory
    );

    let r = verify_independence_extremal(6, 3, Alpha::HALF).unwrap();
    assert_eq!((r.verdict, r.bound_violations), (Confirmed, Some(0)));
}

#[test]
fn independence_bound_published_value() {
    let b = independence_bound(4, 2, Alpha::ZERO);
    assert!((b - (1.5 + 16.25f64.sqrt()) / 2.0).abs() < 1e-12);
    assert!((b - 2.76556).abs() < 1e-5);
    let g = independence_extremal(4, 2).unwrap();
    assert!((spectral_radius(&g, Alpha::ZERO).unwrap() - b).abs() < 1e-12);
}

#[test]
fn bundle_endpoints_are_exact() {
    let g = path(5).unwrap();
    let b = MatrixBundle::new(&g).unwrap();
    assert_eq!(b.rd_alpha(Alpha::ZERO).max_diff(&b.rd), 0.0);
    assert_eq!(b.rd_alpha(Alpha::ONE).max_diff(&b.rt), 0.0);
    assert!(b.rd_alpha(Alpha::HALF).max_diff(&b.rq.scaled(0.5)) < 1e-15);
}
