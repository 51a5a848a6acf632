//! Finite-horizon LQ trajectories.
//!
//! Minimizes `J = sum_{k < k_f} ||C x_k + D u_k||^2` subject to
//! `x_{k+1} = A x_k + B u_k`, a given `x_0`, and either a free endpoint
//! (`p_{k_f} = 0`) or a fixed one (`x_{k_f} = x_f`).
//!
//! [`solve_nonrecursive`] writes every optimal trajectory in closed form from
//! the invariant bases,
//!
//! ```text
//! [x_k; p_k] = V1' A_K^k alpha + V2bar (A_K')^{k_f - k} beta
//! u_k        = K A_K^k alpha + V2_u (A_K')^{k_f - 1 - k} beta
//! ```
//!
//! where `V1'` is the state/costate part of `V1` and `V2_u` the input rows
//! of `V2`. Only the `2n` boundary conditions need solving. Two independent
//! references are provided: the backward Riccati recursion (free endpoint)
//! and a dense equality-constrained least-squares solve (fixed endpoint).

use alloc::vec::Vec;

use crate::config::ToleranceConfig;
use crate::error::{Error, Result};
use crate::hamsubspace::{assemble_v2, assemble_vbar2};
use crate::matcore::{lstsq_min_norm, null_basis, vec_norm, Matrix};
use crate::reachdecomp::SystemQuadruple;
use crate::riccati::RiccatiSolution;
use crate::stablyap::GramianSolution;

#[derive(Debug, Clone, PartialEq)]
pub enum Terminal {
    /// Transversality: `p_{k_f} = 0`.
    Free,
    /// `x_{k_f} = x_f`.
    Fixed(Vec<f64>),
}

#[derive(Debug, Clone)]
pub struct TrajectoryProblem {
    pub sys: SystemQuadruple,
    pub x0: Vec<f64>,
    pub horizon: usize,
    pub terminal: Terminal,
}

impl TrajectoryProblem {
    pub fn new(
        sys: SystemQuadruple,
        x0: Vec<f64>,
        horizon: usize,
        terminal: Terminal,
    ) -> Result<Self> {
        let n = sys.n();
        if x0.len() != n {
            return Err(Error::dims("x0", (n, 1), (x0.len(), 1)));
        }
        if horizon == 0 {
            return Err(Error::dims("horizon", (1, 1), (0, 1)));
        }
        if let Terminal::Fixed(xf) = &terminal {
            if xf.len() != n {
                return Err(Error::dims("xf", (n, 1), (xf.len(), 1)));
            }
            if xf.iter().any(|v| !v.is_finite()) {
                return Err(Error::NonFinite { what: "xf" });
            }
        }
        if x0.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite { what: "x0" });
        }
        Ok(Self {
            sys,
            x0,
            horizon,
            terminal,
        })
    }
}

/// Causal and anticausal parameters of a nonrecursive solution.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryParameters {
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
    /// Residual of the boundary system at the returned parameters.
    pub residual: f64,
}

#[derive(Debug, Clone)]
pub struct Trajectory {
    /// `x_0 ..= x_{k_f}`.
    pub x: Vec<Vec<f64>>,
    /// `p_0 ..= p_{k_f}`.
    pub p: Vec<Vec<f64>>,
    /// `u_0 ..= u_{k_f - 1}`.
    pub u: Vec<Vec<f64>>,
    pub cost: f64,
    /// Present for nonrecursive solutions only.
    pub params: Option<BoundaryParameters>,
}

impl Trajectory {
    pub fn horizon(&self) -> usize {
        self.u.len()
    }

    /// `||C x_k + D u_k||^2` for `k < k_f`.
    pub fn stage_costs(&self, sys: &SystemQuadruple) -> Vec<f64> {
        self.u
            .iter()
            .zip(&self.x)
            .map(|(u, x)| {
                let y = add(&sys.c.mul_vec(x), &sys.d.mul_vec(u));
                y.iter().map(|v| v * v).sum()
            })
            .collect()
    }

    /// `max_k ||x_{k+1} - A x_k - B u_k||`.
    pub fn dynamics_residual(&self, sys: &SystemQuadruple) -> f64 {
        (0..self.horizon())
            .map(|k| {
                let pred = add(&sys.a.mul_vec(&self.x[k]), &sys.b.mul_vec(&self.u[k]));
                vec_norm(&sub(&self.x[k + 1], &pred))
            })
            .fold(0.0, f64::max)
    }

    /// Largest violations of the costate recursion and of input
    /// stationarity over `k < k_f`.
    pub fn hamiltonian_residual(&self, sys: &SystemQuadruple) -> (f64, f64) {
        let (a, b, c, d) = (&sys.a, &sys.b, &sys.c, &sys.d);
        let at = a.transpose();
        let bt = b.transpose();
        let ct = c.transpose();
        let dt = d.transpose();
        let mut costate = 0.0f64;
        let mut stationarity = 0.0f64;
        for k in 0..self.horizon() {
            let y = add(&c.mul_vec(&self.x[k]), &d.mul_vec(&self.u[k]));
            let pk = add(&ct.mul_vec(&y), &at.mul_vec(&self.p[k + 1]));
            costate = costate.max(vec_norm(&sub(&self.p[k], &pk)));
            let s = add(&dt.mul_vec(&y), &bt.mul_vec(&self.p[k + 1]));
            stationarity = stationarity.max(vec_norm(&s));
        }
        (costate, stationarity)
    }
}

/// `sum_{k < k_f} ||C x_k + D u_k||^2`, recomputed from the sequences.
pub fn cost(traj: &Trajectory, sys: &SystemQuadruple) -> f64 {
    traj.stage_costs(sys).iter().sum()
}

fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `A_K^j` for `j = 0..=k_f`.
fn closed_loop_powers(a_k: &Matrix, horizon: usize) -> Vec<Matrix> {
    let mut pows = Vec::with_capacity(horizon + 1);
    pows.push(Matrix::identity(a_k.rows()));
    for j in 1..=horizon {
        let next = &pows[j - 1] * a_k;
        pows.push(next);
    }
    pows
}

/// Closed-form optimal trajectory from the invariant bases.
///
/// The `2n x 2n` boundary system is solved in the minimum-norm least-squares
/// sense. It is singular whenever the optimal control is not unique; a
/// residual above `residual_tol * (1 + ||M||_F ||z|| + ||rhs||)` means the
/// endpoint cannot be attained and is reported as
/// [`Error::BoundaryInconsistent`].
pub fn solve_nonrecursive(
    prob: &TrajectoryProblem,
    ric: &RiccatiSolution,
    gram: &GramianSolution,
    cfg: &ToleranceConfig,
) -> Result<Trajectory> {
    let sys = &prob.sys;
    let n = sys.n();
    let kf = prob.horizon;
    let eye = Matrix::identity(n);

    let pows = closed_loop_powers(&ric.a_k, kf);
    let tpows: Vec<Matrix> = pows.iter().map(Matrix::transpose).collect();
    let vbar2 = assemble_vbar2(ric, gram);
    let w = vbar2.block(0, 0, n, n);
    let pw_i = vbar2.block(n, 0, n, n);
    let v2 = assemble_v2(sys, ric, gram, cfg)?;
    let v2_input = v2.block(2 * n, 0, sys.m(), n);

    let mut bmat = Matrix::zeros(2 * n, 2 * n);
    bmat.set_block(0, 0, &eye);
    bmat.set_block(0, n, &(&w * &tpows[kf]));
    let mut rhs = prob.x0.clone();
    match &prob.terminal {
        Terminal::Free => {
            bmat.set_block(n, 0, &(&ric.p * &pows[kf]));
            bmat.set_block(n, n, &pw_i);
            rhs.extend(core::iter::repeat_n(0.0, n));
        }
        Terminal::Fixed(xf) => {
            bmat.set_block(n, 0, &pows[kf]);
            bmat.set_block(n, n, &w);
            rhs.extend_from_slice(xf);
        }
    }
    let z = lstsq_min_norm(&bmat, &Matrix::column(&rhs), cfg)?.col_vec(0);
    let residual = vec_norm(&sub(&bmat.mul_vec(&z), &rhs));
    let tolerance = cfg.residual_tol * (1.0 + bmat.norm_fro() * vec_norm(&z) + vec_norm(&rhs));
    if residual.is_nan() || residual > tolerance {
        return Err(Error::BoundaryInconsistent {
            residual,
            tolerance,
        });
    }
    let alpha = z[..n].to_vec();
    let beta = z[n..].to_vec();

    let mut x = Vec::with_capacity(kf + 1);
    let mut p = Vec::with_capacity(kf + 1);
    let mut u = Vec::with_capacity(kf);
    for k in 0..=kf {
        let causal = pows[k].mul_vec(&alpha);
        let anti = tpows[kf - k].mul_vec(&beta);
        x.push(add(&causal, &w.mul_vec(&anti)));
        p.push(add(&ric.p.mul_vec(&causal), &pw_i.mul_vec(&anti)));
        if k < kf {
            let anti_u = tpows[kf - 1 - k].mul_vec(&beta);
            u.push(add(&ric.k.mul_vec(&causal), &v2_input.mul_vec(&anti_u)));
        }
    }
    let mut traj = Trajectory {
        x,
        p,
        u,
        cost: 0.0,
        params: Some(BoundaryParameters {
            alpha,
            beta,
            residual,
        }),
    };
    traj.cost = cost(&traj, sys);
    Ok(traj)
}

/// One stage of the backward recursion: `(P_k, K_k)` for `k = 0..k_f`
/// (index `k`), with `P_{k_f} = 0` appended last.
pub fn backward_riccati(
    sys: &SystemQuadruple,
    horizon: usize,
    cfg: &ToleranceConfig,
) -> Result<(Vec<Matrix>, Vec<Matrix>)> {
    let (a, b, c, d) = (&sys.a, &sys.b, &sys.c, &sys.d);
    let n = sys.n();
    let at = a.transpose();
    let bt = b.transpose();
    let ctc = &c.transpose() * c;
    let ctd = &c.transpose() * d;
    let dtd = &d.transpose() * d;

    let mut ps = alloc::vec![Matrix::zeros(n, n); horizon + 1];
    let mut ks = alloc::vec![Matrix::zeros(sys.m(), n); horizon];
    for k in (0..horizon).rev() {
        let next = &ps[k + 1];
        let weight = (&dtd + &(&(&bt * next) * b)).symmetrize();
        let cross_t = (&(&at * next) * b + &ctd).transpose();
        let gain = lstsq_min_norm(&weight, &cross_t, cfg)?.scale(-1.0);
        let pk = &(&(&(&at * next) * a) + &ctc) + &(&cross_t.transpose() * &gain);
        ps[k] = pk.symmetrize();
        ks[k] = gain;
    }
    Ok((ps, ks))
}

/// Backward Riccati recursion with pseudoinverse stage weights, then a
/// forward simulation. Only defined for a free endpoint.
pub fn riccati_recursion_oracle(
    prob: &TrajectoryProblem,
    cfg: &ToleranceConfig,
) -> Result<Trajectory> {
    if prob.terminal != Terminal::Free {
        return Err(Error::TerminalMismatch { expected: "free" });
    }
    let sys = &prob.sys;
    let kf = prob.horizon;
    let (ps, ks) = backward_riccati(sys, kf, cfg)?;
    let mut x = Vec::with_capacity(kf + 1);
    let mut p = Vec::with_capacity(kf + 1);
    let mut u = Vec::with_capacity(kf);
    x.push(prob.x0.clone());
    for k in 0..kf {
        let uk = ks[k].mul_vec(&x[k]);
        let next = add(&sys.a.mul_vec(&x[k]), &sys.b.mul_vec(&uk));
        p.push(ps[k].mul_vec(&x[k]));
        u.push(uk);
        x.push(next);
    }
    p.push(ps[kf].mul_vec(&x[kf]));
    let mut traj = Trajectory {
        x,
        p,
        u,
        cost: 0.0,
        params: None,
    };
    traj.cost = cost(&traj, sys);
    Ok(traj)
}

/// Dense fixed-endpoint reference: minimizes `||H u + h||^2` over the stacked
/// inputs subject to `G u = x_f - A^{k_f} x_0`, returning the minimum-norm
/// minimizer. Costates come from a least-squares fit of the terminal
/// multiplier to the stationarity conditions.
pub fn kkt_oracle(prob: &TrajectoryProblem, cfg: &ToleranceConfig) -> Result<Trajectory> {
    let Terminal::Fixed(xf) = &prob.terminal else {
        return Err(Error::TerminalMismatch { expected: "fixed" });
    };
    let sys = &prob.sys;
    let (a, b, c, d) = (&sys.a, &sys.b, &sys.c, &sys.d);
    let (n, m, pdim) = (sys.n(), sys.m(), sys.p());
    let kf = prob.horizon;

    // a_pows[j] = A^j
    let mut a_pows = Vec::with_capacity(kf + 1);
    a_pows.push(Matrix::identity(n));
    for j in 1..=kf {
        let next = &a_pows[j - 1] * a;
        a_pows.push(next);
    }
    let ab: Vec<Matrix> = a_pows.iter().map(|ap| ap * b).collect();

    // y_k = C x_k + D u_k, x_k = A^k x0 + sum_{j<k} A^{k-1-j} B u_j
    let mut h_mat = Matrix::zeros(kf * pdim, kf * m);
    let mut h_vec = Vec::with_capacity(kf * pdim);
    for k in 0..kf {
        h_vec.extend(c.mul_vec(&a_pows[k].mul_vec(&prob.x0)));
        for j in 0..k {
            h_mat.set_block(k * pdim, j * m, &(c * &ab[k - 1 - j]));
        }
        h_mat.set_block(k * pdim, k * m, d);
    }
    let mut g_mat = Matrix::zeros(n, kf * m);
    for j in 0..kf {
        g_mat.set_block(0, j * m, &ab[kf - 1 - j]);
    }
    let g_vec = sub(xf, &a_pows[kf].mul_vec(&prob.x0));

    let u_part = lstsq_min_norm(&g_mat, &Matrix::column(&g_vec), cfg)?.col_vec(0);
    let residual = vec_norm(&sub(&g_mat.mul_vec(&u_part), &g_vec));
    let tolerance =
        cfg.residual_tol * (1.0 + vec_norm(&g_vec) + g_mat.norm_fro() * vec_norm(&u_part));
    if residual.is_nan() || residual > tolerance {
        return Err(Error::Infeasible {
            residual,
            tolerance,
        });
    }
    let null = null_basis(&g_mat, cfg)?;
    let stacked = if null.cols() == 0 {
        u_part
    } else {
        let hn = &h_mat * &null;
        let offset = add(&h_mat.mul_vec(&u_part), &h_vec);
        let z = lstsq_min_norm(&hn, &Matrix::column(&offset), cfg)?.col_vec(0);
        sub(&u_part, &null.mul_vec(&z))
    };

    let u: Vec<Vec<f64>> = stacked.chunks(m).map(<[f64]>::to_vec).collect();
    let mut x = Vec::with_capacity(kf + 1);
    x.push(prob.x0.clone());
    for k in 0..kf {
        let next = add(&a.mul_vec(&x[k]), &b.mul_vec(&u[k]));
        x.push(next);
    }

    // p_k = g_k + (A')^{k_f - k} nu with g_{k_f} = 0.
    let at = a.transpose();
    let ct = c.transpose();
    let dt = d.transpose();
    let bt = b.transpose();
    let mut g = alloc::vec![alloc::vec![0.0; n]; kf + 1];
    for k in (0..kf).rev() {
        let y = add(&c.mul_vec(&x[k]), &d.mul_vec(&u[k]));
        g[k] = add(&ct.mul_vec(&y), &at.mul_vec(&g[k + 1]));
    }
    let mut lhs = Matrix::zeros(kf * m, n);
    let mut rhs = Vec::with_capacity(kf * m);
    for k in 0..kf {
        let at_pow = a_pows[kf - k - 1].transpose();
        lhs.set_block(k * m, 0, &(&bt * &at_pow));
        let y = add(&c.mul_vec(&x[k]), &d.mul_vec(&u[k]));
        let s = add(&dt.mul_vec(&y), &bt.mul_vec(&g[k + 1]));
        rhs.extend(s.iter().map(|v| -v));
    }
    let nu = lstsq_min_norm(&lhs, &Matrix::column(&rhs), cfg)?.col_vec(0);
    let p: Vec<Vec<f64>> = (0..=kf)
        .map(|k| add(&g[k], &a_pows[kf - k].transpose().mul_vec(&nu)))
        .collect();

    let mut traj = Trajectory {
        x,
        p,
        u,
        cost: 0.0,
        params: None,
    };
    traj.cost = cost(&traj, sys);
    Ok(traj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden;
    use crate::riccati::solve_dare;
    use crate::stablyap::closed_loop_gramian;

    fn cfg() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    fn solve(prob: &TrajectoryProblem) -> Result<Trajectory> {
        let c = cfg();
        let ric = solve_dare(&prob.sys, &c)?;
        let gram = closed_loop_gramian(&prob.sys, &ric, &c)?;
        solve_nonrecursive(prob, &ric, &gram, &c)
    }

    #[test]
    fn zero_initial_state_gives_zero_trajectory() {
        let sys = golden::example_system();
        for kf in [1, 3, 7] {
            let prob = TrajectoryProblem::new(sys.clone(), alloc::vec![0.0; 4], kf, Terminal::Free)
                .unwrap();
            let t = solve(&prob).unwrap();
            assert_eq!(t.cost, 0.0);
            let params = t.params.unwrap();
            assert!(params.alpha.iter().chain(&params.beta).all(|v| *v == 0.0));
            let o = riccati_recursion_oracle(&prob, &cfg()).unwrap();
            assert_eq!(o.cost, 0.0);
        }
    }

    #[test]
    fn single_step_fixed_endpoint_with_identity_input() {
        let a = Matrix::from_rows(&[[0.5, 0.1], [0.0, 0.8]]);
        let c = Matrix::from_rows(&[[1.0, 0.0], [0.0, 1.0]]);
        let d = Matrix::from_rows(&[[0.2, 0.0], [0.0, 0.3]]);
        let sys =
            SystemQuadruple::new(a.clone(), Matrix::identity(2), c.clone(), d.clone()).unwrap();
        let x0 = alloc::vec![1.0, -2.0];
        let xf = alloc::vec![0.5, 0.5];
        let prob = TrajectoryProblem::new(sys.clone(), x0.clone(), 1, Terminal::Fixed(xf.clone()))
            .unwrap();
        let t = solve(&prob).unwrap();
        let u0 = sub(&xf, &a.mul_vec(&x0));
        assert!(vec_norm(&sub(&t.u[0], &u0)) < 1e-12);
        let y = add(&c.mul_vec(&x0), &d.mul_vec(&u0));
        let j: f64 = y.iter().map(|v| v * v).sum();
        assert!((t.cost - j).abs() < 1e-12 * (1.0 + j));
        let k = kkt_oracle(&prob, &cfg()).unwrap();
        assert!((k.cost - j).abs() < 1e-12 * (1.0 + j));
    }

    #[test]
    fn one_stage_recursion_is_least_squares() {
        let sys = golden::example_system();
        let x0 = alloc::vec![1.0, -1.0, 0.5, 2.0];
        let prob = TrajectoryProblem::new(sys.clone(), x0.clone(), 1, Terminal::Free).unwrap();
        let o = riccati_recursion_oracle(&prob, &cfg()).unwrap();
        // u0 = -(D'D)^+ D'C x0
        let dtd = &sys.d.transpose() * &sys.d;
        let rhs = &(&sys.d.transpose() * &sys.c) * &Matrix::column(&x0);
        let u0 = lstsq_min_norm(&dtd, &rhs, &cfg())
            .unwrap()
            .scale(-1.0)
            .col_vec(0);
        assert!(vec_norm(&sub(&o.u[0], &u0)) < 1e-14);
        let y = add(&sys.c.mul_vec(&x0), &sys.d.mul_vec(&u0));
        let j: f64 = y.iter().map(|v| v * v).sum();
        assert!((o.cost - j).abs() < 1e-12 * j);
    }

    #[test]
    fn recursion_converges_to_dare_root() {
        let sys = SystemQuadruple::new(
            Matrix::from_rows(&[[0.5]]),
            Matrix::from_rows(&[[1.0]]),
            Matrix::from_rows(&[[1.0], [0.0]]),
            Matrix::from_rows(&[[0.0], [1.0]]),
        )
        .unwrap();
        let (ps, _) = backward_riccati(&sys, 60, &cfg()).unwrap();
        let root = (1.0 + libm::sqrt(65.0)) / 8.0;
        assert!((ps[0][(0, 0)] - root).abs() < 1e-8);
    }

    #[test]
    fn example_free_endpoint_matches_recursion_cost() {
        let sys = golden::example_system();
        let prob = TrajectoryProblem::new(
            sys.clone(),
            alloc::vec![1.0, 0.0, 0.0, 0.0],
            10,
            Terminal::Free,
        )
        .unwrap();
        let t = solve(&prob).unwrap();
        let o = riccati_recursion_oracle(&prob, &cfg()).unwrap();
        assert!((t.cost - o.cost).abs() <= 1e-8 * (1.0 + t.cost));
        assert!(t.dynamics_residual(&sys) <= 1e-9);
        let (hc, hs) = t.hamiltonian_residual(&sys);
        assert!(hc <= 1e-8 && hs <= 1e-8, "{hc:e} {hs:e}");
        assert!((cost(&t, &sys) - t.cost).abs() <= 1e-12 * t.cost);
    }

    #[test]
    fn unreachable_endpoint_is_rejected() {
        // The last state of the example has zero dynamics and no input.
        let sys = golden::example_system();
        let prob = TrajectoryProblem::new(
            sys,
            alloc::vec![0.0, 0.0, 1.0, 0.0],
            6,
            Terminal::Fixed(alloc::vec![0.0, 0.0, 0.0, 1.0]),
        )
        .unwrap();
        assert!(matches!(
            solve(&prob),
            Err(Error::BoundaryInconsistent { .. })
        ));
        assert!(matches!(
            kkt_oracle(&prob, &cfg()),
            Err(Error::Infeasible { .. })
        ));
    }

    #[test]
    fn kkt_is_no_worse_than_a_feasible_sequence() {
        let sys = golden::example_system();
        let x0 = alloc::vec![0.3, -0.2, 1.0, 0.5];
        let us = [[0.1, -0.4], [1.0, 0.2], [-0.3, 0.3], [0.0, 0.7], [0.2, 0.1]];
        let mut x = x0.clone();
        let mut j = 0.0;
        for u in &us {
            let y = add(&sys.c.mul_vec(&x), &sys.d.mul_vec(u));
            j += y.iter().map(|v| v * v).sum::<f64>();
            x = add(&sys.a.mul_vec(&x), &sys.b.mul_vec(u));
        }
        let prob = TrajectoryProblem::new(sys.clone(), x0, us.len(), Terminal::Fixed(x)).unwrap();
        let k = kkt_oracle(&prob, &cfg()).unwrap();
        assert!(k.cost <= j + 1e-12);
        let t = solve(&prob).unwrap();
        assert!((t.cost - k.cost).abs() <= 1e-8 * (1.0 + k.cost));
        let (hc, hs) = k.hamiltonian_residual(&sys);
        assert!(hc <= 1e-8 && hs <= 1e-8, "{hc:e} {hs:e}");
    }

    #[test]
    fn zero_to_zero_fixed() {
        let sys = golden::example_system();
        let prob = TrajectoryProblem::new(
            sys,
            alloc::vec![0.0; 4],
            4,
            Terminal::Fixed(alloc::vec![0.0; 4]),
        )
        .unwrap();
        let k = kkt_oracle(&prob, &cfg()).unwrap();
        assert_eq!(k.cost, 0.0);
        assert!(k.u.iter().flatten().all(|v| *v == 0.0));
    }

    #[test]
    fn cost_of_single_stage() {
        let sys = SystemQuadruple::new(
            Matrix::identity(2),
            Matrix::zeros(2, 1),
            Matrix::identity(2),
            Matrix::zeros(2, 1),
        )
        .unwrap();
        let t = Trajectory {
            x: alloc::vec![alloc::vec![3.0, 4.0], alloc::vec![3.0, 4.0]],
            p: alloc::vec![alloc::vec![0.0; 2]; 2],
            u: alloc::vec![alloc::vec![0.0]],
            cost: 0.0,
            params: None,
        };
        assert_eq!(cost(&t, &sys), 25.0);
    }

    #[test]
    fn problem_validation() {
        let sys = golden::example_system();
        assert!(
            TrajectoryProblem::new(sys.clone(), alloc::vec![0.0; 3], 2, Terminal::Free).is_err()
        );
        assert!(
            TrajectoryProblem::new(sys.clone(), alloc::vec![0.0; 4], 0, Terminal::Free).is_err()
        );
        assert!(TrajectoryProblem::new(
            sys,
            alloc::vec![0.0; 4],
            2,
            Terminal::Fixed(alloc::vec![1.0])
        )
        .is_err());
    }
}
