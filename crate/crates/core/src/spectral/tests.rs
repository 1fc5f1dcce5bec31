use num_rational::Ratio;

use super::*;
use crate::families::{complete, cycle, gnk, path, star};
use crate::DEFAULT_ALPHA_GRID;

fn alpha(a: f64) -> AlphaParam<f64> {
    AlphaParam::new(a).unwrap()
}

/// Star on n vertices: (λ − α(n−1))(λ − α) = (1−α)²(n−1).
fn star_closed_form(n: usize, a: f64) -> f64 {
    let n = n as f64;
    (a * n + (a * a * n * n + 4.0 * (n - 1.0) * (1.0 - 2.0 * a)).sqrt()) / 2.0
}

#[test]
fn alpha_range() {
    assert!(AlphaParam::new(0.0).is_ok());
    assert!(AlphaParam::new(0.999).is_ok());
    assert!(AlphaParam::new(1.0).is_err());
    assert!(AlphaParam::new(-0.1).is_err());
    assert!(AlphaParam::new(f64::NAN).is_err());
    assert!(AlphaParam::new(Ratio::new(1i64, 1)).is_err());
    assert_eq!(AlphaParam::default_grid().len(), 5);
}

#[test]
fn alpha_matrix_entries() {
    let k2 = path(2).unwrap();
    assert_eq!(build_alpha_matrix(&k2, &alpha(0.0)), vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
    assert_eq!(build_alpha_matrix(&k2, &alpha(0.5)), vec![vec![0.5, 0.5], vec![0.5, 0.5]]);
    let m = build_alpha_matrix(&path(3).unwrap(), &alpha(0.25));
    assert_eq!(m, vec![vec![0.25, 0.75, 0.0], vec![0.75, 0.5, 0.75], vec![0.0, 0.75, 0.25]]);
    for (i, row) in m.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            assert_eq!(v, m[j][i]);
        }
    }
}

#[test]
fn regular_graphs_have_radius_equal_to_degree() {
    for &a in &DEFAULT_ALPHA_GRID {
        let r = spectral_radius(&cycle(6).unwrap(), &alpha(a)).unwrap();
        assert!((r.rho - 2.0).abs() <= 1e-10);
        let r = spectral_radius(&complete(5).unwrap(), &alpha(a)).unwrap();
        assert!((r.rho - 4.0).abs() <= 1e-10);
    }
    let r = spectral_radius(&cycle(6).unwrap(), &alpha(0.7)).unwrap();
    assert!((r.rho - 2.0).abs() <= 1e-10);
}

#[test]
fn path_and_star_closed_forms() {
    let r = spectral_radius(&path(4).unwrap(), &alpha(0.0)).unwrap();
    assert!((r.rho - 2.0 * (std::f64::consts::PI / 5.0).cos()).abs() < 1e-10);
    assert!((r.rho - 1.618_033_988_7).abs() < 1e-10);
    let r = spectral_radius(&star(5).unwrap(), &alpha(0.0)).unwrap();
    assert!((r.rho - 2.0).abs() < 1e-10);
    for n in 2..12 {
        for &a in &DEFAULT_ALPHA_GRID {
            let r = spectral_radius(&star(n).unwrap(), &alpha(a)).unwrap();
            assert!((r.rho - star_closed_form(n, a)).abs() < 1e-10, "S_{n} at {a}");
        }
    }
}

#[test]
fn result_postconditions() {
    let g = gnk(9, 4).unwrap();
    for &a in &DEFAULT_ALPHA_GRID {
        let r = spectral_radius(&g, &alpha(a)).unwrap();
        let norm: f64 = r.x.iter().map(|v| v * v).sum::<f64>().sqrt();
        assert!((norm - 1.0).abs() < 1e-12);
        assert!(r.x.iter().all(|&v| v > 0.0));
        assert!(r.residual <= 1e-12);
        assert!(eigen_residual(&g, &alpha(a), &r.x, r.rho).unwrap() <= 1e-12);
        let rq = rayleigh_quotient(&g, &alpha(a), &r.x).unwrap();
        assert!((rq - r.rho).abs() < 1e-12);
    }
}

#[test]
fn single_vertex_and_errors() {
    let r = spectral_radius(&Graph::empty(1), &alpha(0.3)).unwrap();
    assert_eq!((r.rho, r.x.clone()), (0.0, vec![1.0]));
    let two = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
    assert_eq!(spectral_radius(&two, &alpha(0.0)), Err(SpectralError::Disconnected));
    assert_eq!(spectral_radius(&Graph::empty(0), &alpha(0.0)), Err(SpectralError::EmptyGraph));
}

#[test]
fn non_convergence_reports_best_estimate() {
    let opts = PowerOptions { tol: 1e-12, max_iter: 3, polish_after: None };
    match spectral_radius_with(&path(9).unwrap(), &alpha(0.0), &opts) {
        Err(SpectralError::NotConverged { rho, residual, iterations }) => {
            assert_eq!(iterations, 3);
            assert!(rho > 1.0 && rho < 2.0);
            assert!(residual > 1e-12);
        }
        other => panic!("expected non-convergence, got {other:?}"),
    }
}

#[test]
fn near_degenerate_top_pair_is_polished() {
    // two degree-5 hubs joined by a path of length 3, slightly different
    // neighbourhoods: at α = 0.99 the two top eigenvalues nearly coincide
    let mut g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    for _ in 0..4 {
        g = g.attach_path(0, 1).unwrap();
    }
    for _ in 0..3 {
        g = g.attach_path(3, 1).unwrap();
    }
    g = g.attach_path(3, 2).unwrap();
    let a = alpha(0.99);
    let r = spectral_radius(&g, &a).unwrap();
    assert!(r.residual <= 1e-12);
    assert!(r.x.iter().all(|&v| v > 0.0));
    let plain = PowerOptions { tol: 1e-12, max_iter: 5_000, polish_after: None };
    assert!(spectral_radius_with(&g, &a, &plain).is_err());
}

#[test]
fn oracle_small_cases() {
    assert!((spectral_radius_oracle(&complete(3).unwrap(), &alpha(0.5)).unwrap() - 2.0).abs() < 1e-12);
    assert!((spectral_radius_oracle(&path(2).unwrap(), &alpha(0.0)).unwrap() - 1.0).abs() < 1e-12);
    assert!(spectral_radius_oracle(&Graph::empty(1), &alpha(0.0)).unwrap().abs() < 1e-12);
    assert!(matches!(
        spectral_radius_oracle(&path(13).unwrap(), &alpha(0.0)),
        Err(SpectralError::TooLarge { n: 13, .. })
    ));
    for n in 2..=12 {
        let want = 2.0 * (std::f64::consts::PI / (n as f64 + 1.0)).cos();
        let got = spectral_radius_oracle(&path(n).unwrap(), &alpha(0.0)).unwrap();
        assert!((got - want).abs() < 1e-12, "P_{n}");
    }
}

#[test]
fn tridiagonal_counts_match_known_spectrum() {
    // P_3 at α = 0 has eigenvalues −√2, 0, √2
    let (d, e) = oracle::tridiagonalize(build_alpha_matrix(&path(3).unwrap(), &alpha(0.0)));
    assert_eq!(oracle::count_below(&d, &e, -1.5), 0);
    assert_eq!(oracle::count_below(&d, &e, -1.0), 1);
    assert_eq!(oracle::count_below(&d, &e, 0.5), 2);
    assert_eq!(oracle::count_below(&d, &e, 1.5), 3);
}

#[test]
fn rayleigh_and_residual_examples() {
    let k2 = path(2).unwrap();
    assert_eq!(rayleigh_quotient(&k2, &alpha(0.0), &[1.0, 1.0]).unwrap(), 1.0);
    let c4 = cycle(4).unwrap();
    assert_eq!(rayleigh_quotient(&c4, &alpha(0.5), &[1.0, 0.0, 0.0, 0.0]).unwrap(), 1.0);
    assert_eq!(rayleigh_quotient(&c4, &alpha(0.5), &[0.0; 4]), Err(SpectralError::ZeroVector));
    assert!(matches!(
        rayleigh_quotient(&c4, &alpha(0.5), &[1.0]),
        Err(SpectralError::DimensionMismatch { expected: 4, found: 1 })
    ));

    let h = std::f64::consts::FRAC_1_SQRT_2;
    assert!(eigen_residual(&k2, &alpha(0.0), &[h, h], 1.0).unwrap() < 1e-15);

    let c5 = cycle(5).unwrap();
    let mut x = spectral_radius(&c5, &alpha(0.3)).unwrap().x;
    x[0] += 0.05;
    assert!(eigen_residual(&c5, &alpha(0.3), &x, 2.0).unwrap() > 1e-3);
}

#[test]
fn exact_rational_quadratic_form() {
    // P_3 at α = 1/4 with x = (1, 2, 3):
    // α Σ d x² = 1/4 (1 + 8 + 9) = 9/2, 2(1−α) Σ x_u x_v = 3/2 (2 + 6) = 12
    let a = AlphaParam::new(Ratio::new(1i64, 4)).unwrap();
    let x = [Ratio::from_integer(1), Ratio::from_integer(2), Ratio::from_integer(3)];
    let q = rayleigh_quotient(&path(3).unwrap(), &a, &x).unwrap();
    assert_eq!(q, Ratio::new(33, 28));
    let m = build_alpha_matrix(&path(3).unwrap(), &a);
    assert_eq!(m[1][1], Ratio::new(1, 2));
    assert_eq!(m[0][1], Ratio::new(3, 4));
}

#[test]
fn single_precision_path() {
    let a = AlphaParam::new(0.0f32).unwrap();
    let r = spectral_radius(&path(5).unwrap(), &a).unwrap();
    assert!((r.rho - 3f32.sqrt()).abs() < 1e-5);
    let o = spectral_radius_oracle(&path(5).unwrap(), &a).unwrap();
    assert!((o - 3f32.sqrt()).abs() < 1e-5);
}

mod props {
    use super::*;
    use proptest::prelude::*;

    fn connected_graph() -> impl Strategy<Value = Graph> {
        (2usize..9).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), pairs), proptest::collection::vec(0usize..1000, n))
                .prop_map(|(n, bits, parents)| {
                    // random spanning tree plus random extra edges
                    let mut edges: Vec<_> = (1..n).map(|v| (parents[v] % v, v)).collect();
                    let mut k = 0;
                    for i in 0..n {
                        for j in i + 1..n {
                            if bits[k] {
                                edges.push((i, j));
                            }
                            k += 1;
                        }
                    }
                    Graph::new(n, &edges).unwrap()
                })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn power_iteration_matches_oracle(g in connected_graph(), ai in 0usize..5) {
            let a = alpha(DEFAULT_ALPHA_GRID[ai]);
            let r = spectral_radius(&g, &a).unwrap();
            let o = spectral_radius_oracle(&g, &a).unwrap();
            prop_assert!((r.rho - o).abs() <= 1e-8);
        }

        #[test]
        fn degree_bounds(g in connected_graph(), ai in 0usize..5) {
            let a = alpha(DEFAULT_ALPHA_GRID[ai]);
            let r = spectral_radius(&g, &a).unwrap();
            let degs = g.degrees();
            let (lo, hi) = (*degs.iter().min().unwrap() as f64, *degs.iter().max().unwrap() as f64);
            prop_assert!(r.rho >= lo - 1e-10 && r.rho <= hi + 1e-10);
            if lo < hi {
                prop_assert!(hi - r.rho > 1e-9);
            }
        }

        #[test]
        fn rayleigh_never_exceeds_rho(g in connected_graph(), ai in 0usize..5,
                                      raw in proptest::collection::vec(-1.0f64..1.0, 8)) {
            let a = alpha(DEFAULT_ALPHA_GRID[ai]);
            let x: Vec<f64> = raw[..g.n()].to_vec();
            prop_assume!(x.iter().any(|v| v.abs() > 1e-6));
            let r = spectral_radius(&g, &a).unwrap();
            prop_assert!(rayleigh_quotient(&g, &a, &x).unwrap() <= r.rho + 1e-9);
        }
    }
}
