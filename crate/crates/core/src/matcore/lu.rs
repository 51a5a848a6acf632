use crate::config::ToleranceConfig;
use crate::error::{Error, Result};

use super::Matrix;

/// Solves `M X = rhs` by Gaussian elimination with partial pivoting.
///
/// Pivot choice is the largest magnitude in the column, lowest row index on
/// ties. A pivot at or below `abs_zero_tol * ||M||_max` is reported as
/// [`Error::SingularMatrix`].
pub fn solve_linear(m: &Matrix, rhs: &Matrix, cfg: &ToleranceConfig) -> Result<Matrix> {
    let n = m.rows();
    if !m.is_square() {
        return Err(Error::dims("solve_linear: M", (n, n), m.shape()));
    }
    if rhs.rows() != n {
        return Err(Error::dims(
            "solve_linear: rhs",
            (n, rhs.cols()),
            rhs.shape(),
        ));
    }
    if !m.is_finite() || !rhs.is_finite() {
        return Err(Error::NonFinite {
            what: "solve_linear input",
        });
    }
    let threshold = cfg.abs_zero_tol * m.norm_max();
    let mut a = m.clone();
    let mut x = rhs.clone();
    let k = rhs.cols();

    for col in 0..n {
        let mut piv = col;
        let mut best = a[(col, col)].abs();
        for r in col + 1..n {
            let v = a[(r, col)].abs();
            if v > best {
                best = v;
                piv = r;
            }
        }
        if best <= threshold {
            return Err(Error::SingularMatrix {
                pivot: best,
                threshold,
            });
        }
        a.swap_rows(col, piv);
        x.swap_rows(col, piv);
        let d = a[(col, col)];
        for r in col + 1..n {
            let f = a[(r, col)] / d;
            if f == 0.0 {
                continue;
            }
            a[(r, col)] = 0.0;
            for c in col + 1..n {
                a[(r, c)] -= f * a[(col, c)];
            }
            for c in 0..k {
                x[(r, c)] -= f * x[(col, c)];
            }
        }
    }

    for col in (0..n).rev() {
        let d = a[(col, col)];
        for c in 0..k {
            let mut s = x[(col, c)];
            for j in col + 1..n {
                s -= a[(col, j)] * x[(j, c)];
            }
            x[(col, c)] = s / d;
        }
    }
    Ok(x)
}

pub fn inverse(m: &Matrix, cfg: &ToleranceConfig) -> Result<Matrix> {
    solve_linear(m, &Matrix::identity(m.rows()), cfg)
}

/// `M^j` by repeated squaring; `M^0 = I`.
pub fn mat_pow(m: &Matrix, mut j: u32) -> Matrix {
    assert!(m.is_square(), "mat_pow needs a square matrix");
    let mut result = Matrix::identity(m.rows());
    let mut base = m.clone();
    while j > 0 {
        if j & 1 == 1 {
            result = &result * &base;
        }
        j >>= 1;
        if j > 0 {
            base = &base * &base;
        }
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    #[test]
    fn solve_examples() {
        let b = Matrix::column(&[3.0, 7.0]);
        assert_eq!(solve_linear(&Matrix::identity(2), &b, &cfg()).unwrap(), b);

        let d = Matrix::from_diag(&[2.0, 4.0]);
        let x = solve_linear(&d, &Matrix::column(&[2.0, 4.0]), &cfg()).unwrap();
        assert_eq!(x, Matrix::column(&[1.0, 1.0]));

        let p = Matrix::from_rows(&[[0.0, 1.0], [1.0, 0.0]]);
        let x = solve_linear(&p, &b, &cfg()).unwrap();
        assert_eq!(x, Matrix::column(&[7.0, 3.0]));
    }

    #[test]
    fn singular_is_reported() {
        let m = Matrix::from_rows(&[[1.0, 2.0], [2.0, 4.0]]);
        let err = solve_linear(&m, &Matrix::column(&[1.0, 1.0]), &cfg()).unwrap_err();
        assert!(matches!(err, Error::SingularMatrix { .. }));
        assert!(solve_linear(&Matrix::zeros(2, 2), &Matrix::column(&[1.0, 1.0]), &cfg()).is_err());
    }

    #[test]
    fn shape_errors() {
        let m = Matrix::zeros(2, 3);
        assert!(matches!(
            solve_linear(&m, &Matrix::zeros(2, 1), &cfg()),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            solve_linear(&Matrix::identity(2), &Matrix::zeros(3, 1), &cfg()),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn powers() {
        let m = Matrix::from_rows(&[[1.0, 2.0], [3.0, 4.0]]);
        assert_eq!(mat_pow(&m, 0), Matrix::identity(2));
        let d = mat_pow(&Matrix::from_diag(&[0.5, 2.0]), 3);
        assert_eq!(d, Matrix::from_diag(&[0.125, 8.0]));
        let nil = Matrix::from_rows(&[[0.0, 1.0], [0.0, 0.0]]);
        assert_eq!(mat_pow(&nil, 2), Matrix::zeros(2, 2));
        assert_eq!(mat_pow(&m, 3), &(&m * &m) * &m);
    }
}
