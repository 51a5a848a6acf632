use hamsub_core::matcore::{mat_pow, rank, singular_values, solve_linear, svd, Matrix};
use hamsub_core::ToleranceConfig;
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-10.0f64..10.0, rows * cols)
        .prop_map(move |v| Matrix::from_row_major(rows, cols, v).unwrap())
}

fn any_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=7, 1usize..=7).prop_flat_map(|(r, c)| matrix(r, c))
}

/// Random product of a tall and a wide factor, so the rank is usually short.
fn low_rank_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=6, 1usize..=6, 1usize..=3)
        .prop_flat_map(|(r, c, k)| (matrix(r, k), matrix(k, c)))
        .prop_map(|(l, r)| &l * &r)
}

fn square_with_rhs() -> impl Strategy<Value = (Matrix, Matrix)> {
    (1usize..=6, 1usize..=3).prop_flat_map(|(n, k)| (matrix(n, n), matrix(n, k)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn solve_residual_is_small((m, b) in square_with_rhs()) {
        let cfg = ToleranceConfig::default();
        let s = singular_values(&m, &cfg).unwrap();
        let smin = *s.last().unwrap();
        prop_assume!(smin > 0.0 && s[0] / smin < 1e8);
        let x = solve_linear(&m, &b, &cfg).unwrap();
        let r = (&(&m * &x) - &b).norm_fro();
        prop_assert!(r <= 1e-9 * m.norm_fro() * b.norm_fro(), "residual {r:e}");
    }

    #[test]
    fn rank_is_transpose_invariant(m in any_matrix()) {
        let cfg = ToleranceConfig::default();
        prop_assert_eq!(rank(&m, &cfg).unwrap(), rank(&m.transpose(), &cfg).unwrap());
    }

    #[test]
    fn rank_of_product_is_bounded_by_inner_dimension(m in low_rank_matrix()) {
        let cfg = ToleranceConfig::default();
        prop_assert_eq!(rank(&m, &cfg).unwrap(), rank(&m.transpose(), &cfg).unwrap());
        prop_assert!(rank(&m, &cfg).unwrap() <= 3);
    }

    #[test]
    fn singular_values_are_sorted_and_carry_the_frobenius_norm(m in any_matrix()) {
        let cfg = ToleranceConfig::default();
        let s = singular_values(&m, &cfg).unwrap();
        prop_assert!(s.iter().all(|&x| x >= 0.0));
        prop_assert!(s.windows(2).all(|w| w[0] >= w[1]));
        let sum: f64 = s.iter().map(|x| x * x).sum();
        let f2 = m.norm_fro().powi(2);
        prop_assert!((sum - f2).abs() <= 1e-10 * f2.max(f64::MIN_POSITIVE));
    }

    #[test]
    fn svd_reconstructs_input(m in any_matrix()) {
        let cfg = ToleranceConfig::default();
        let d = svd(&m, &cfg).unwrap();
        let us = &d.u * &Matrix::from_diag(&d.s);
        let back = &us * &d.v.transpose();
        prop_assert!((&back - &m).norm_fro() <= 1e-12 * (1.0 + m.norm_fro()));
    }

    #[test]
    fn powers_add_exponents(
        m in (1usize..=5).prop_flat_map(|n| matrix(n, n)),
        a in 0u32..=16,
        b in 0u32..=16,
    ) {
        // Spectral radius at most 1.1 keeps every power representable.
        let m = m.scale(1.1 / m.norm_fro().max(1.0));
        let lhs = mat_pow(&m, a + b);
        let rhs = &mat_pow(&m, a) * &mat_pow(&m, b);
        prop_assert!((&lhs - &rhs).norm_fro() <= 1e-10 * (lhs.norm_fro() + f64::MIN_POSITIVE) + 1e-300);
    }
}
