//! One-sided Jacobi singular value decomposition and the rank-revealing
//! helpers built on it (numerical rank, minimum-norm least squares,
//! principal angles).

use alloc::vec::Vec;

use crate::config::ToleranceConfig;
use crate::error::{Error, Result};

use super::Matrix;

/// Thin SVD `M = U diag(s) V'` with `s` sorted in descending order.
///
/// `u` is `rows x k` and `v` is `cols x k` with `k = min(rows, cols)`.
/// Columns of `u` that belong to a zero singular value are zero.
#[derive(Debug, Clone)]
pub struct Svd {
    pub u: Matrix,
    pub s: Vec<f64>,
    pub v: Matrix,
}

impl Svd {
    /// Rank under the threshold `s[0] * max(rows, cols) * factor`.
    pub fn rank_with(&self, factor: f64) -> usize {
        let thr = self.threshold(factor);
        self.s.iter().filter(|&&x| x > thr).count()
    }

    fn threshold(&self, factor: f64) -> f64 {
        let dim = self.u.rows().max(self.v.rows()) as f64;
        self.s.first().copied().unwrap_or(0.0) * dim * factor
    }
}

pub fn svd(m: &Matrix, cfg: &ToleranceConfig) -> Result<Svd> {
    if !m.is_finite() {
        return Err(Error::NonFinite { what: "svd input" });
    }
    if m.rows() >= m.cols() {
        jacobi_tall(m, cfg.max_iter)
    } else {
        let t = jacobi_tall(&m.transpose(), cfg.max_iter)?;
        Ok(Svd {
            u: t.v,
            s: t.s,
            v: t.u,
        })
    }
}

fn jacobi_tall(m: &Matrix, max_sweeps: usize) -> Result<Svd> {
    let (rows, cols) = m.shape();
    // Work column-major: each inner Vec is one column.
    let mut a: Vec<Vec<f64>> = (0..cols).map(|j| m.col_vec(j)).collect();
    let mut v: Vec<Vec<f64>> = (0..cols)
        .map(|j| {
            let mut e = alloc::vec![0.0; cols];
            e[j] = 1.0;
            e
        })
        .collect();

    // Columns below this squared norm are rounding noise; rotating them
    // against each other never settles.
    let negligible = {
        let f = f64::EPSILON * m.norm_fro();
        f * f
    };
    let orth_tol = f64::EPSILON * rows.max(1) as f64;
    let mut converged = cols < 2;
    let mut sweeps = 0;
    while !converged {
        if sweeps == max_sweeps {
            return Err(Error::ConvergenceFailure {
                routine: "jacobi svd",
                iterations: sweeps,
            });
        }
        sweeps += 1;
        let mut rotated = false;
        for p in 0..cols {
            for q in p + 1..cols {
                let (alpha, beta, gamma) = a[p]
                    .iter()
                    .zip(&a[q])
                    .fold((0.0, 0.0, 0.0), |(al, be, ga), (x, y)| {
                        (al + x * x, be + y * y, ga + x * y)
                    });
                if gamma == 0.0
                    || alpha <= negligible
                    || beta <= negligible
                    || gamma.abs() <= orth_tol * libm::sqrt(alpha * beta)
                {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + libm::sqrt(1.0 + zeta * zeta));
                let c = 1.0 / libm::sqrt(1.0 + t * t);
                let s = c * t;
                rotate(&mut a, p, q, c, s);
                rotate(&mut v, p, q, c, s);
            }
        }
        converged = !rotated;
    }

    let norms: Vec<f64> = a.iter().map(|col| super::matrix::vec_norm(col)).collect();
    let mut order: Vec<usize> = (0..cols).collect();
    // Stable sort keeps the lowest index first on ties.
    order.sort_by(|&i, &j| {
        norms[j]
            .partial_cmp(&norms[i])
            .unwrap_or(core::cmp::Ordering::Equal)
    });

    let mut u = Matrix::zeros(rows, cols);
    let mut vm = Matrix::zeros(cols, cols);
    let mut s = Vec::with_capacity(cols);
    for (k, &j) in order.iter().enumerate() {
        let sigma = norms[j];
        s.push(sigma);
        if sigma > 0.0 {
            for i in 0..rows {
                u[(i, k)] = a[j][i] / sigma;
            }
        }
        for i in 0..cols {
            vm[(i, k)] = v[j][i];
        }
    }
    Ok(Svd { u, s, v: vm })
}

fn rotate(cols: &mut [Vec<f64>], p: usize, q: usize, c: f64, s: f64) {
    let (lo, hi) = cols.split_at_mut(q);
    for (x, y) in lo[p].iter_mut().zip(hi[0].iter_mut()) {
        let xp = *x;
        let yq = *y;
        *x = c * xp - s * yq;
        *y = s * xp + c * yq;
    }
}

/// Singular values in descending order; length `min(rows, cols)`.
pub fn singular_values(m: &Matrix, cfg: &ToleranceConfig) -> Result<Vec<f64>> {
    Ok(svd(m, cfg)?.s)
}

/// Number of singular values above `sigma_max * max(rows, cols) * rank_tol_factor`.
pub fn rank(m: &Matrix, cfg: &ToleranceConfig) -> Result<usize> {
    if m.is_empty() {
        return Ok(0);
    }
    Ok(svd(m, cfg)?.rank_with(cfg.rank_tol_factor))
}

/// Minimum-norm least-squares solution of `M X = rhs`, truncating singular
/// values at the rank threshold.
pub fn lstsq_min_norm(m: &Matrix, rhs: &Matrix, cfg: &ToleranceConfig) -> Result<Matrix> {
    if rhs.rows() != m.rows() {
        return Err(Error::dims(
            "lstsq: rhs",
            (m.rows(), rhs.cols()),
            rhs.shape(),
        ));
    }
    if m.is_empty() {
        return Ok(Matrix::zeros(m.cols(), rhs.cols()));
    }
    let d = svd(m, cfg)?;
    let r = d.rank_with(cfg.rank_tol_factor);
    let mut x = Matrix::zeros(m.cols(), rhs.cols());
    for k in 0..r {
        let uk = d.u.col_vec(k);
        for c in 0..rhs.cols() {
            let coef: f64 = (0..m.rows()).map(|i| uk[i] * rhs[(i, c)]).sum::<f64>() / d.s[k];
            for i in 0..m.cols() {
                x[(i, c)] += d.v[(i, k)] * coef;
            }
        }
    }
    Ok(x)
}

/// Moore-Penrose pseudoinverse at the default rank threshold.
pub fn pinv(m: &Matrix, cfg: &ToleranceConfig) -> Result<Matrix> {
    lstsq_min_norm(m, &Matrix::identity(m.rows()), cfg)
}

/// Orthonormal basis of the column space (rank-truncated left singular vectors).
pub fn range_basis(m: &Matrix, cfg: &ToleranceConfig) -> Result<Matrix> {
    if m.is_empty() {
        return Ok(Matrix::zeros(m.rows(), 0));
    }
    let d = svd(m, cfg)?;
    let r = d.rank_with(cfg.rank_tol_factor);
    Ok(d.u.block(0, 0, m.rows(), r))
}

/// Orthonormal basis of the null space `{z : M z = 0}`.
pub fn null_basis(m: &Matrix, cfg: &ToleranceConfig) -> Result<Matrix> {
    let n = m.cols();
    if m.rows() == 0 || m.norm_max() == 0.0 {
        return Ok(Matrix::identity(n));
    }
    // Pad wide inputs with zero rows so the sweep returns a full V.
    let padded = if m.rows() < n {
        Matrix::vstack(&[m, &Matrix::zeros(n - m.rows(), n)])
    } else {
        m.clone()
    };
    let d = svd(&padded, cfg)?;
    let r = d.rank_with(cfg.rank_tol_factor);
    Ok(d.v.block(0, r, n, n - r))
}

/// Largest principal angle (radians) between the column spaces of `x` and
/// `y`. Spaces of different numerical dimension are `pi/2` apart.
pub fn largest_principal_angle(x: &Matrix, y: &Matrix, cfg: &ToleranceConfig) -> Result<f64> {
    if x.rows() != y.rows() {
        return Err(Error::dims(
            "principal angle",
            (x.rows(), y.cols()),
            y.shape(),
        ));
    }
    let qx = range_basis(x, cfg)?;
    let qy = range_basis(y, cfg)?;
    if qx.cols() != qy.cols() {
        return Ok(core::f64::consts::FRAC_PI_2);
    }
    if qx.cols() == 0 {
        return Ok(0.0);
    }
    // sin of the largest angle = ||(I - Qx Qx') Qy||_2
    let proj = &qx * &(&qx.transpose() * &qy);
    let resid = &qy - &proj;
    let s = singular_values(&resid, cfg)?;
    let sin_max = s.first().copied().unwrap_or(0.0).min(1.0);
    Ok(libm::asin(sin_max))
}
