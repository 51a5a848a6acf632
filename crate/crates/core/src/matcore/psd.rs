use crate::config::ToleranceConfig;

use super::Matrix;

/// Positive semidefiniteness test.
///
/// Accepts `M` when it is symmetric to within `abs_zero_tol * ||M||_max` and
/// the Cholesky factorization of `M + shift I`, with
/// `shift = abs_zero_tol * ||M||_max`, runs to completion with positive pivots.
pub fn is_psd(m: &Matrix, cfg: &ToleranceConfig) -> bool {
    if !m.is_square() || !m.is_finite() {
        return false;
    }
    let scale = m.norm_max();
    if scale == 0.0 {
        return true;
    }
    let tol = cfg.abs_zero_tol * scale;
    let asym = (m - &m.transpose()).norm_max();
    if asym > tol {
        return false;
    }
    let mut shifted = m.symmetrize();
    for i in 0..m.rows() {
        shifted[(i, i)] += tol;
    }
    cholesky_min_pivot(&shifted) > 0.0
}

/// Smallest diagonal pivot met by an unshifted Cholesky sweep over the lower
/// triangle. Stops at the first non-positive pivot and returns it.
/// Returns `+inf` for an empty matrix.
pub fn cholesky_min_pivot(m: &Matrix) -> f64 {
    let n = m.rows();
    let mut l = Matrix::zeros(n, n);
    let mut min_pivot = f64::INFINITY;
    for j in 0..n {
        let mut d = m[(j, j)];
        for k in 0..j {
            d -= l[(j, k)] * l[(j, k)];
        }
        min_pivot = min_pivot.min(d);
        if d <= 0.0 || !d.is_finite() {
            return d;
        }
        let ljj = libm::sqrt(d);
        l[(j, j)] = ljj;
        for i in j + 1..n {
            let mut s = m[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)];
            }
            l[(i, j)] = s / ljj;
        }
    }
    min_pivot
}
