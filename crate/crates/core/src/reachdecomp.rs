//! Orthogonal reachability decomposition of `(A, B)`.
//!
//! In the basis `T = [T1 T2]` with `im T1` the reachable subspace,
//!
//! ```text
//! T'AT = [A_c  A_cu]    T'B = [B_c]    CT = [C_c  C_u]
//!        [ 0   A_u ]          [ 0 ]
//! ```

use alloc::vec::Vec;

use crate::config::ToleranceConfig;
use crate::error::{Error, Result};
use crate::matcore::{pivoted_qr, svd, Matrix};

/// Plant `x+ = Ax + Bu`, `y = Cx + Du`.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemQuadruple {
    pub a: Matrix,
    pub b: Matrix,
    pub c: Matrix,
    pub d: Matrix,
}

impl SystemQuadruple {
    /// Validates shapes (`A: n x n`, `B: n x m`, `C: p x n`, `D: p x m`, all
    /// dimensions at least one) and finiteness.
    pub fn new(a: Matrix, b: Matrix, c: Matrix, d: Matrix) -> Result<Self> {
        let n = a.rows();
        if n == 0 || !a.is_square() {
            return Err(Error::dims("A", (n.max(1), n.max(1)), a.shape()));
        }
        let m = b.cols();
        if b.rows() != n || m == 0 {
            return Err(Error::dims("B", (n, m.max(1)), b.shape()));
        }
        let p = c.rows();
        if c.cols() != n || p == 0 {
            return Err(Error::dims("C", (p.max(1), n), c.shape()));
        }
        if d.shape() != (p, m) {
            return Err(Error::dims("D", (p, m), d.shape()));
        }
        for (what, mat) in [("A", &a), ("B", &b), ("C", &c), ("D", &d)] {
            if !mat.is_finite() {
                return Err(Error::NonFinite { what });
            }
        }
        Ok(Self { a, b, c, d })
    }

    pub fn n(&self) -> usize {
        self.a.rows()
    }

    pub fn m(&self) -> usize {
        self.b.cols()
    }

    pub fn p(&self) -> usize {
        self.c.rows()
    }

    /// State-space change of coordinates `x = T z`.
    pub fn transformed(&self, t: &Matrix) -> Self {
        let tt = t.transpose();
        Self {
            a: &(&tt * &self.a) * t,
            b: &tt * &self.b,
            c: &self.c * t,
            d: self.d.clone(),
        }
    }
}

/// `[B, AB, ..., A^{n-1} B]`.
pub fn krylov_matrix(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.rows();
    let m = b.cols();
    let mut k = Matrix::zeros(n, n * m);
    let mut block = b.clone();
    for i in 0..n {
        k.set_block(0, i * m, &block);
        if i + 1 < n {
            block = a * &block;
        }
    }
    k
}

#[derive(Debug, Clone)]
pub struct StaircaseForm {
    /// Orthogonal change of basis; the first `n_c` columns span the reachable subspace.
    pub t: Matrix,
    pub n_c: usize,
    pub a_c: Matrix,
    pub a_cu: Matrix,
    pub a_u: Matrix,
    pub b_c: Matrix,
    pub c_c: Matrix,
    pub c_u: Matrix,
    /// `T'AT` and `T'B` before block extraction; kept so the zero blocks can
    /// be audited.
    pub a_t: Matrix,
    pub b_t: Matrix,
}

impl StaircaseForm {
    pub fn n(&self) -> usize {
        self.t.rows()
    }

    pub fn n_u(&self) -> usize {
        self.n() - self.n_c
    }

    /// `T' M T`.
    pub fn to_basis(&self, m: &Matrix) -> Matrix {
        &(&self.t.transpose() * m) * &self.t
    }

    /// Largest entry of the blocks that must vanish: lower-left of `T'AT`
    /// and lower part of `T'B`.
    pub fn structural_residual(&self) -> f64 {
        let (n, nc, nu) = (self.n(), self.n_c, self.n_u());
        let ll = self.a_t.block(nc, 0, nu, nc).norm_max();
        let lb = self.b_t.block(nc, 0, nu, self.b_t.cols()).norm_max();
        debug_assert_eq!(nc + nu, n);
        ll.max(lb)
    }

    /// Reachable pair `(A_c, B_c)` as a system with the original `D`.
    pub fn reachable_part(&self, d: &Matrix) -> Result<SystemQuadruple> {
        if self.n_c == 0 {
            return Err(Error::EmptyReachablePart);
        }
        SystemQuadruple::new(
            self.a_c.clone(),
            self.b_c.clone(),
            self.c_c.clone(),
            d.clone(),
        )
    }
}

/// Computes the reachability staircase form.
///
/// `n_c` is the numerical rank of the Krylov matrix under
/// `staircase_tol_factor`. When that space is already spanned by the leading
/// `n_c` coordinate axes the identity basis is kept, so systems supplied in
/// staircase form are returned in their own coordinates. Otherwise `T` comes
/// from a column-pivoted Householder QR of the Krylov matrix.
pub fn staircase(sys: &SystemQuadruple, cfg: &ToleranceConfig) -> Result<StaircaseForm> {
    let n = sys.n();
    let kry = krylov_matrix(&sys.a, &sys.b);
    if !kry.is_finite() {
        return Err(Error::NonFinite {
            what: "Krylov matrix",
        });
    }
    let dec = svd(&kry, cfg)?;
    let n_c = dec.rank_with(cfg.staircase_tol_factor);
    let sigma_max = dec.s.first().copied().unwrap_or(0.0);
    let thr = sigma_max * (kry.rows().max(kry.cols()) as f64) * cfg.staircase_tol_factor;

    let trailing = kry.block(n_c, 0, n - n_c, kry.cols()).norm_max();
    let t = if trailing <= thr {
        Matrix::identity(n)
    } else {
        pivoted_qr(&kry).q
    };

    let tr = sys.transformed(&t);
    let n_u = n - n_c;
    Ok(StaircaseForm {
        n_c,
        a_c: tr.a.block(0, 0, n_c, n_c),
        a_cu: tr.a.block(0, n_c, n_c, n_u),
        a_u: tr.a.block(n_c, n_c, n_u, n_u),
        b_c: tr.b.block(0, 0, n_c, tr.b.cols()),
        c_c: tr.c.block(0, 0, tr.c.rows(), n_c),
        c_u: tr.c.block(0, n_c, tr.c.rows(), n_u),
        a_t: tr.a,
        b_t: tr.b,
        t,
    })
}

/// Zero-based indices of rows whose infinity norm is at most
/// `abs_zero_tol * (1 + ||M||_max)`.
pub fn zero_row_indices(m: &Matrix, cfg: &ToleranceConfig) -> Vec<usize> {
    let tol = cfg.abs_zero_tol * (1.0 + m.norm_max());
    (0..m.rows())
        .filter(|&i| m.row(i).iter().all(|x| x.abs() <= tol))
        .collect()
}
