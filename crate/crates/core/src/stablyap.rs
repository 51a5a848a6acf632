//! Stable discrete Lyapunov equations `A W A' + Q = W` by Smith doubling.

use alloc::vec::Vec;

use crate::config::ToleranceConfig;
use crate::error::{Error, Result};
use crate::matcore::{solve_linear, Matrix};
use crate::reachdecomp::{StaircaseForm, SystemQuadruple};
use crate::riccati::{RestrictedSolution, RiccatiSolution};

/// Growth bound on the doubled transition matrix past which the series is
/// declared divergent.
const DIVERGENCE_BOUND: f64 = 1e150;

#[derive(Debug, Clone)]
pub struct GramianSolution {
    pub w: Matrix,
    /// Number of doubling steps taken.
    pub iterations: usize,
    /// `||A W A' + Q - W||_F`.
    pub residual: f64,
}

/// `W = sum_i A^i Q (A')^i` via `W <- W + E W E'`, `E <- E^2`.
///
/// Stops once the update norm is at most `residual_tol * ||W||_F`, then takes
/// one further doubling step. Fails with [`Error::NotStable`] if the updates do
/// not decay within `max_iter` doublings or an iterate overflows.
pub fn solve_dlyap_stable(
    a: &Matrix,
    q: &Matrix,
    cfg: &ToleranceConfig,
) -> Result<GramianSolution> {
    let n = a.rows();
    if !a.is_square() {
        return Err(Error::dims("dlyap: A", (n, n), a.shape()));
    }
    if q.shape() != (n, n) {
        return Err(Error::dims("dlyap: Q", (n, n), q.shape()));
    }
    if !a.is_finite() || !q.is_finite() {
        return Err(Error::NonFinite {
            what: "dlyap input",
        });
    }

    let mut w = q.symmetrize();
    let mut e = a.clone();
    let mut trace = Vec::new();
    let mut converged_at = None;
    let mut polishing = false;
    for it in 1..=cfg.max_iter {
        let update = (&(&e * &w) * &e.transpose()).symmetrize();
        let un = update.norm_fro();
        trace.push(un);
        w = &w + &update;
        e = &e * &e;
        if !un.is_finite() || !w.is_finite() || e.norm_max() > DIVERGENCE_BOUND {
            return Err(Error::NotStable { trace });
        }
        if polishing || un == 0.0 {
            converged_at = Some(it);
            break;
        }
        polishing = un <= cfg.residual_tol * w.norm_fro();
    }
    let Some(iterations) = converged_at else {
        return Err(Error::NotStable { trace });
    };
    let residual = (&(&(a * &w) * &a.transpose()) + q - &w).norm_fro();
    Ok(GramianSolution {
        w,
        iterations,
        residual,
    })
}

/// Gramian of the closed loop: `A_K W A_K' + B Rw^{-1} B' = W`.
pub fn closed_loop_gramian(
    sys: &SystemQuadruple,
    ric: &RiccatiSolution,
    cfg: &ToleranceConfig,
) -> Result<GramianSolution> {
    let q = input_forcing(&sys.b, &ric.rw, cfg)?;
    solve_dlyap_stable(&ric.a_k, &q, cfg)
}

/// `W_c` from the restricted data `(A_c + B_c K_c, B_c Rw_c^{-1} B_c')`.
pub fn restricted_gramian(
    st: &StaircaseForm,
    res: &RestrictedSolution,
    cfg: &ToleranceConfig,
) -> Result<GramianSolution> {
    let q = input_forcing(&st.b_c, &res.rw_c, cfg)?;
    solve_dlyap_stable(&res.a_kc, &q, cfg)
}

/// `T'WT` split into the leading `n_c x n_c` block and the largest entry
/// outside it.
pub fn project_gramian(gram: &GramianSolution, st: &StaircaseForm) -> (Matrix, f64) {
    let wt = st.to_basis(&gram.w);
    let nc = st.n_c;
    let n = st.n();
    let w_c = wt.block(0, 0, nc, nc);
    let mut off = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            if i >= nc || j >= nc {
                off = off.max(wt[(i, j)].abs());
            }
        }
    }
    (w_c, off)
}

fn input_forcing(b: &Matrix, rw: &Matrix, cfg: &ToleranceConfig) -> Result<Matrix> {
    let rw_inv_bt = solve_linear(rw, &b.transpose(), cfg)?;
    Ok((b * &rw_inv_bt).symmetrize())
}

/// True iff the Smith series for `(M, I)` converges, i.e. `M` is Schur stable.
pub fn stability_certificate(m: &Matrix, cfg: &ToleranceConfig) -> bool {
    if !m.is_square() {
        return false;
    }
    if m.rows() == 0 {
        return true;
    }
    solve_dlyap_stable(m, &Matrix::identity(m.rows()), cfg).is_ok()
}
