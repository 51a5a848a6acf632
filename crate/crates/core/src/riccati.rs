//! Stabilizing solution of the discrete algebraic Riccati equation
//!
//! ```text
//! P = A'PA + C'C - (A'PB + C'D)(D'D + B'PB)^{-1}(B'PA + D'C)
//! ```
//!
//! with gain `K = -(D'D + B'PB)^{-1}(B'PA + D'C)` and closed loop
//! `A_K = A + BK`.
//!
//! `D'D` may be singular, which rules out doubling on the original data. The
//! solver runs structure-preserving doubling on a regularized problem (state
//! and input weights increased by the identity) only to obtain a stabilizing
//! initial gain, then refines with Newton (Hewer) steps on the true problem.
//! Each Newton step solves a Smith-doubling Lyapunov equation for the
//! correction `dP` driven by the current residual, so rounding in the solve
//! scales with `dP` rather than `P`. Convergence is quadratic.

use crate::config::ToleranceConfig;
use crate::error::{Error, Result};
use crate::matcore::{cholesky_min_pivot, inverse, is_psd, solve_linear, Matrix};
use crate::reachdecomp::{staircase, StaircaseForm, SystemQuadruple};
use crate::stablyap::{solve_dlyap_stable, stability_certificate};

/// Newton steps taken after the convergence test first passes.
const POLISH_STEPS: usize = 2;

#[derive(Debug, Clone)]
pub struct RiccatiSolution {
    /// Stabilizing solution `P+`.
    pub p: Matrix,
    /// Feedback gain with `A_K = A + BK`.
    pub k: Matrix,
    /// Innovation weight `D'D + B'PB`.
    pub rw: Matrix,
    pub a_k: Matrix,
    /// Doubling steps spent on the initial gain.
    pub doubling_steps: usize,
    /// Newton refinement steps.
    pub newton_steps: usize,
}

#[derive(Debug, Clone)]
pub struct RestrictedSolution {
    pub p_c: Matrix,
    pub k_c: Matrix,
    pub rw_c: Matrix,
    /// `A_c + B_c K_c`.
    pub a_kc: Matrix,
}

/// `||A'PA + C'C - (A'PB + C'D) Rw^{-1} (B'PA + D'C) - P||_F`.
pub fn dare_residual(sys: &SystemQuadruple, p: &Matrix, cfg: &ToleranceConfig) -> Result<f64> {
    let (a, b, c, d) = (&sys.a, &sys.b, &sys.c, &sys.d);
    let at = a.transpose();
    let pb = p * b;
    let rw = &(&d.transpose() * d) + &(&b.transpose() * &pb);
    let cross = &(&at * &pb) + &(&c.transpose() * d);
    let gain_rhs = cross.transpose();
    let x = solve_linear(&rw, &gain_rhs, cfg)?;
    let r = &(&(&(&at * p) * a) + &(&c.transpose() * c)) - &(&cross * &x);
    Ok((&r - p).norm_fro())
}

/// `A'PA + C'C + (A'PB + C'D)K - P` for the gain `K` induced by `P`.
fn residual_matrix(sys: &SystemQuadruple, p: &Matrix, k: &Matrix) -> Matrix {
    let (a, b, c, d) = (&sys.a, &sys.b, &sys.c, &sys.d);
    let at = a.transpose();
    let cross = &(&(&at * p) * b) + &(&c.transpose() * d);
    let r = &(&(&(&at * p) * a) + &(&c.transpose() * c)) + &(&cross * k);
    (&r - p).symmetrize()
}

/// `X = A_K' X A_K + Q`, with divergence reported as a stabilizability failure.
fn lyapunov_step(a_k: &Matrix, q: &Matrix, cfg: &ToleranceConfig) -> Result<Matrix> {
    solve_dlyap_stable(&a_k.transpose(), q, cfg)
        .map(|g| g.w.symmetrize())
        .map_err(|e| match e {
            Error::NotStable { .. } => Error::NotStabilizable,
            other => other,
        })
}

/// Gain and innovation weight induced by a symmetric `P`.
fn gain_for(sys: &SystemQuadruple, p: &Matrix, cfg: &ToleranceConfig) -> Result<(Matrix, Matrix)> {
    let (a, b, c, d) = (&sys.a, &sys.b, &sys.c, &sys.d);
    let bt = b.transpose();
    let rw = (&(&d.transpose() * d) + &(&(&bt * p) * b)).symmetrize();
    let rhs = &(&(&bt * p) * a) + &(&d.transpose() * c);
    let k = solve_linear(&rw, &rhs, cfg).map_err(|e| match e {
        Error::SingularMatrix { pivot, .. } => Error::SingularWeight { min_pivot: pivot },
        other => other,
    })?;
    Ok((k.scale(-1.0), rw))
}

/// Structure-preserving doubling for `X = A'X(I + GX)^{-1}A + H`.
fn doubling(a0: Matrix, g0: Matrix, h0: Matrix, cfg: &ToleranceConfig) -> Result<(Matrix, usize)> {
    let n = a0.rows();
    let eye = Matrix::identity(n);
    let (mut a, mut g, mut h) = (a0, g0, h0);
    for it in 1..=cfg.max_iter {
        let w = &eye + &(&g * &h);
        let winv = inverse(&w, cfg).map_err(|_| Error::NotStabilizable)?;
        let wa = &winv * &a;
        let a_next = &a * &wa;
        let g_next = (&g + &(&(&(&a * &winv) * &g) * &a.transpose())).symmetrize();
        let h_next = (&h + &(&(&a.transpose() * &h) * &wa)).symmetrize();
        if !a_next.is_finite() || !g_next.is_finite() || !h_next.is_finite() {
            return Err(Error::NotStabilizable);
        }
        let delta = (&h_next - &h).norm_fro();
        a = a_next;
        g = g_next;
        h = h_next;
        if delta <= cfg.residual_tol * (1.0 + h.norm_fro()) {
            return Ok((h, it));
        }
    }
    Err(Error::ConvergenceFailure {
        routine: "riccati doubling",
        iterations: cfg.max_iter,
    })
}

/// A stabilizing gain from the regularized problem with weights
/// `[C D]'[C D] + I`.
fn initial_gain(sys: &SystemQuadruple, cfg: &ToleranceConfig) -> Result<(Matrix, usize)> {
    let (a, b, c, d) = (&sys.a, &sys.b, &sys.c, &sys.d);
    let n = sys.n();
    let m = sys.m();
    let q = &(&c.transpose() * c) + &Matrix::identity(n);
    let s = &c.transpose() * d;
    let r = &(&d.transpose() * d) + &Matrix::identity(m);
    let rinv = inverse(&r, cfg)?;
    let a0 = a - &(&(b * &rinv) * &s.transpose());
    let g0 = (&(b * &rinv) * &b.transpose()).symmetrize();
    let h0 = (&q - &(&(&s * &rinv) * &s.transpose())).symmetrize();
    let (x, steps) = doubling(a0, g0, h0, cfg)?;

    let bt = b.transpose();
    let rw = &r + &(&(&bt * &x) * b);
    let rhs = &(&(&bt * &x) * a) + &s.transpose();
    let k0 = solve_linear(&rw, &rhs, cfg)?.scale(-1.0);
    if !stability_certificate(&(a + &(b * &k0)), cfg) {
        return Err(Error::NotStabilizable);
    }
    Ok((k0, steps))
}

/// Stabilizing DARE solution.
///
/// Unreachable modes outside the unit disc are reported as
/// [`Error::NotStabilizable`] before any iteration starts.
pub fn solve_dare(sys: &SystemQuadruple, cfg: &ToleranceConfig) -> Result<RiccatiSolution> {
    let st = staircase(sys, cfg)?;
    if !stability_certificate(&st.a_u, cfg) {
        return Err(Error::NotStabilizable);
    }
    let (a, b, c, d) = (&sys.a, &sys.b, &sys.c, &sys.d);
    let (mut k, doubling_steps) = initial_gain(sys, cfg)?;

    let a_k0 = a + &(b * &k);
    let ck = c + &(d * &k);
    let mut p = lyapunov_step(&a_k0, &(&ck.transpose() * &ck), cfg)?;
    let mut polish_left: Option<usize> = None;
    let mut newton_steps = 1;
    loop {
        if newton_steps == cfg.max_iter {
            return Err(Error::ConvergenceFailure {
                routine: "riccati newton",
                iterations: newton_steps,
            });
        }
        newton_steps += 1;
        k = gain_for(sys, &p, cfg)?.0;
        let a_k = a + &(b * &k);
        let delta = lyapunov_step(&a_k, &residual_matrix(sys, &p, &k), cfg)?;
        p = (&p + &delta).symmetrize();

        match polish_left {
            Some(0) => break,
            Some(left) => polish_left = Some(left - 1),
            None if delta.norm_fro() <= cfg.residual_tol * (1.0 + p.norm_fro()) => {
                polish_left = Some(POLISH_STEPS - 1);
            }
            None => {}
        }
    }

    if !is_psd(&p, cfg) {
        // Rounding left P slightly indefinite (typically P = 0 exactly). The
        // closed-loop form is a sum of semidefinite terms.
        let k = gain_for(sys, &p, cfg)?.0;
        let ck = c + &(d * &k);
        let hewer = lyapunov_step(&(a + &(b * &k)), &(&ck.transpose() * &ck), cfg)?;
        if is_psd(&hewer, cfg) {
            p = hewer;
        }
    }
    let (k, rw) = gain_for(sys, &p, cfg)?;
    let min_pivot = cholesky_min_pivot(&rw);
    if min_pivot.is_nan() || min_pivot <= cfg.abs_zero_tol {
        return Err(Error::SingularWeight { min_pivot });
    }
    let a_k = a + &(b * &k);
    if !stability_certificate(&a_k, cfg) {
        return Err(Error::NotStabilizable);
    }
    Ok(RiccatiSolution {
        p,
        k,
        rw,
        a_k,
        doubling_steps,
        newton_steps,
    })
}

/// DARE restricted to the reachable pair `(A_c, B_c)` with output map
/// `(C_c, D)`.
pub fn solve_dare_restricted(
    st: &StaircaseForm,
    d: &Matrix,
    cfg: &ToleranceConfig,
) -> Result<RestrictedSolution> {
    let sys_c = st.reachable_part(d)?;
    let sol = solve_dare(&sys_c, cfg)?;
    Ok(RestrictedSolution {
        p_c: sol.p,
        k_c: sol.k,
        rw_c: sol.rw,
        a_kc: sol.a_k,
    })
}

/// `[K_c K_u] = K T`.
pub fn gain_partition(sol: &RiccatiSolution, st: &StaircaseForm) -> (Matrix, Matrix) {
    let kt = &sol.k * &st.t;
    let m = kt.rows();
    (kt.block(0, 0, m, st.n_c), kt.block(0, st.n_c, m, st.n_u()))
}
