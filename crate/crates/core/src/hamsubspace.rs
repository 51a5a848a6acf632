//! Structural invariant subspace bases of the singular Hamiltonian system
//!
//! ```text
//! x_{k+1} = A x_k + B u_k
//! p_k     = C'C x_k + A' p_{k+1} + C'D u_k
//! 0       = D'C x_k + B' p_{k+1} + D'D u_k
//! ```
//!
//! Row blocks of every basis are ordered state, costate, input:
//!
//! ```text
//! V1    = [ I ; P ; K ]
//! V2    = [ W A_K' ; (PW - I) A_K' ; K W A_K' + Rw^{-1} B' ]
//! V2bar = [ W ; PW - I ]
//! ```
//!
//! The columns of `V1` propagate forward under `A_K`; the columns of `V2`
//! are one backward step onto `[W; PW - I; KW]` under `A_K'`. `V2bar` always
//! has full column rank `n`, while `V2` loses one rank for every zero row of
//! the unreachable block `A_u`.

use alloc::vec::Vec;

use crate::config::ToleranceConfig;
use crate::error::Result;
use crate::matcore::{rank, solve_linear, Matrix};
use crate::reachdecomp::{staircase, zero_row_indices, StaircaseForm, SystemQuadruple};
use crate::riccati::{solve_dare, RiccatiSolution};
use crate::stablyap::{closed_loop_gramian, GramianSolution};

#[derive(Debug, Clone)]
pub struct InvariantBases {
    pub v1: Matrix,
    pub v2: Matrix,
    pub vbar2: Matrix,
    pub rank_v1: usize,
    pub rank_v2: usize,
    pub rank_vbar2: usize,
}

/// `[I; P; K]`.
pub fn assemble_v1(ric: &RiccatiSolution) -> Matrix {
    let n = ric.p.rows();
    Matrix::vstack(&[&Matrix::identity(n), &ric.p, &ric.k])
}

/// `[W; PW - I]`.
pub fn assemble_vbar2(ric: &RiccatiSolution, gram: &GramianSolution) -> Matrix {
    let n = ric.p.rows();
    let costate = &(&ric.p * &gram.w) - &Matrix::identity(n);
    Matrix::vstack(&[&gram.w, &costate])
}

/// `Rw^{-1} B'`.
fn rw_inv_bt(
    sys: &SystemQuadruple,
    ric: &RiccatiSolution,
    cfg: &ToleranceConfig,
) -> Result<Matrix> {
    solve_linear(&ric.rw, &sys.b.transpose(), cfg)
}

/// `[W A_K'; (PW - I) A_K'; K W A_K' + Rw^{-1} B']`.
///
/// The state and costate rows are formed as `V2bar * A_K'`, so they equal
/// that product bit for bit.
pub fn assemble_v2(
    sys: &SystemQuadruple,
    ric: &RiccatiSolution,
    gram: &GramianSolution,
    cfg: &ToleranceConfig,
) -> Result<Matrix> {
    let n = sys.n();
    let akt = ric.a_k.transpose();
    let top = &assemble_vbar2(ric, gram) * &akt;
    let w_akt = top.block(0, 0, n, n);
    let input = &(&ric.k * &w_akt) + &rw_inv_bt(sys, ric, cfg)?;
    Ok(Matrix::vstack(&[&top, &input]))
}

/// Frobenius norms of the backward Hamiltonian identities applied to the
/// columns of `V2`:
///
/// 1. `A X + B U - W`
/// 2. `C'C X + A'(PW - I) + C'D U - (PW - I) A_K'`
/// 3. `D'C X + B'(PW - I) + D'D U`
///
/// with `X = W A_K'` and `U = K W A_K' + Rw^{-1} B'`.
pub fn residuals_v2(
    sys: &SystemQuadruple,
    ric: &RiccatiSolution,
    gram: &GramianSolution,
    cfg: &ToleranceConfig,
) -> Result<[f64; 3]> {
    let (a, b, c, d) = (&sys.a, &sys.b, &sys.c, &sys.d);
    let n = sys.n();
    let akt = ric.a_k.transpose();
    let x = &gram.w * &akt;
    let u = &(&ric.k * &x) + &rw_inv_bt(sys, ric, cfg)?;
    let pw_i = &(&ric.p * &gram.w) - &Matrix::identity(n);
    let ct = c.transpose();
    let dt = d.transpose();

    let r1 = &(&(a * &x) + &(b * &u)) - &gram.w;
    let r2 =
        &(&(&(&(&ct * c) * &x) + &(&a.transpose() * &pw_i)) + &(&(&ct * d) * &u)) - &(&pw_i * &akt);
    let r3 = &(&(&(&dt * c) * &x) + &(&b.transpose() * &pw_i)) + &(&(&dt * d) * &u);
    Ok([r1.norm_fro(), r2.norm_fro(), r3.norm_fro()])
}

/// Frobenius norms of the forward identities applied to the columns of `V1`:
///
/// 1. `A + BK - A_K`
/// 2. `C'C + A'P A_K + C'D K - P`
/// 3. `D'C + B'P A_K + D'D K`
pub fn residuals_v1(sys: &SystemQuadruple, ric: &RiccatiSolution) -> [f64; 3] {
    let (a, b, c, d) = (&sys.a, &sys.b, &sys.c, &sys.d);
    let ct = c.transpose();
    let dt = d.transpose();
    let p_ak = &ric.p * &ric.a_k;
    let r1 = &(a + &(b * &ric.k)) - &ric.a_k;
    let r2 = &(&(&(&ct * c) + &(&a.transpose() * &p_ak)) + &(&(&ct * d) * &ric.k)) - &ric.p;
    let r3 = &(&(&dt * c) + &(&b.transpose() * &p_ak)) + &(&(&dt * d) * &ric.k);
    [r1.norm_fro(), r2.norm_fro(), r3.norm_fro()]
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residuals {
    /// Identities on the columns of `V1`.
    pub forward: [f64; 3],
    /// Identities on the columns of `V2`.
    pub backward: [f64; 3],
}

impl Residuals {
    pub fn max(&self) -> f64 {
        self.forward
            .iter()
            .chain(&self.backward)
            .fold(0.0f64, |m, &x| m.max(x))
    }
}

pub fn invariant_bases(
    sys: &SystemQuadruple,
    ric: &RiccatiSolution,
    gram: &GramianSolution,
    cfg: &ToleranceConfig,
) -> Result<InvariantBases> {
    let v1 = assemble_v1(ric);
    let vbar2 = assemble_vbar2(ric, gram);
    let v2 = assemble_v2(sys, ric, gram, cfg)?;
    Ok(InvariantBases {
        rank_v1: rank(&v1, cfg)?,
        rank_v2: rank(&v2, cfg)?,
        rank_vbar2: rank(&vbar2, cfg)?,
        v1,
        v2,
        vbar2,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DimensionReport {
    pub n: usize,
    pub m: usize,
    pub p: usize,
    pub n_c: usize,
    pub n_u: usize,
    pub rank_v1: usize,
    pub rank_v2: usize,
    pub rank_vbar2: usize,
    /// Zero-based indices of the zero rows of `A_u`.
    pub zero_rows_au: Vec<usize>,
    /// `n - rank_v2`.
    pub rank_deficiency_v2: usize,
    pub tolerances: ToleranceConfig,
}

/// Every intermediate of the analysis pipeline.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub staircase: StaircaseForm,
    pub riccati: RiccatiSolution,
    pub gramian: GramianSolution,
    pub bases: InvariantBases,
    pub residuals: Residuals,
    pub report: DimensionReport,
}

/// Staircase, Riccati, Gramian, bases and ranks for `sys`.
pub fn analyze(sys: &SystemQuadruple, cfg: &ToleranceConfig) -> Result<Analysis> {
    let st = staircase(sys, cfg)?;
    let ric = solve_dare(sys, cfg)?;
    let gram = closed_loop_gramian(sys, &ric, cfg)?;
    let bases = invariant_bases(sys, &ric, &gram, cfg)?;
    let residuals = Residuals {
        forward: residuals_v1(sys, &ric),
        backward: residuals_v2(sys, &ric, &gram, cfg)?,
    };
    let n = sys.n();
    let report = DimensionReport {
        n,
        m: sys.m(),
        p: sys.p(),
        n_c: st.n_c,
        n_u: st.n_u(),
        rank_v1: bases.rank_v1,
        rank_v2: bases.rank_v2,
        rank_vbar2: bases.rank_vbar2,
        zero_rows_au: zero_row_indices(&st.a_u, cfg),
        rank_deficiency_v2: n.saturating_sub(bases.rank_v2),
        tolerances: *cfg,
    };
    Ok(Analysis {
        staircase: st,
        riccati: ric,
        gramian: gram,
        bases,
        residuals,
        report,
    })
}

pub fn dimension_report(sys: &SystemQuadruple, cfg: &ToleranceConfig) -> Result<DimensionReport> {
    Ok(analyze(sys, cfg)?.report)
}

/// `diag(T', T', I) V T`: a `(2n + m) x n` or `2n x n` basis expressed in the
/// staircase coordinates.
pub fn to_staircase_basis(v: &Matrix, st: &StaircaseForm) -> Matrix {
    let n = st.n();
    let tt = st.t.transpose();
    let mut out = Matrix::zeros(v.rows(), n);
    let state = &tt * &v.block(0, 0, n, n);
    let costate = &tt * &v.block(n, 0, n, n);
    out.set_block(0, 0, &state);
    out.set_block(n, 0, &costate);
    if v.rows() > 2 * n {
        out.set_block(2 * n, 0, &v.block(2 * n, 0, v.rows() - 2 * n, n));
    }
    &out * &st.t
}

/// Deviations of `V2` (staircase coordinates) from the partitioned pattern
///
/// ```text
/// [ W_c (A_c + B_c K_c)'   O    ]   state, reachable
/// [ O                      O    ]   state, unreachable
/// [ *                      O    ]   costate, reachable
/// [ *                     -A_u' ]   costate, unreachable
/// [ *                      O    ]   input
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockStructure {
    pub zero_blocks_max: f64,
    /// `||block + A_u'||_max` for the unreachable costate block.
    pub costate_unreachable_dev: f64,
    /// `||block - W_c (A_c + B_c K_c)'||_max`.
    pub top_left_dev: f64,
}

impl BlockStructure {
    pub fn max(&self) -> f64 {
        self.zero_blocks_max
            .max(self.costate_unreachable_dev)
            .max(self.top_left_dev)
    }
}

/// Checks the pattern above. `w_c` and `a_kc = A_c + B_c K_c` are supplied by
/// the caller so they can come from the restricted problem.
pub fn block_structure(
    v2_staircase: &Matrix,
    st: &StaircaseForm,
    w_c: &Matrix,
    a_kc: &Matrix,
) -> BlockStructure {
    let n = st.n();
    let (nc, nu) = (st.n_c, st.n_u());
    let rows = v2_staircase.rows();
    let blk = |r0: usize, c0: usize, r: usize, c: usize| v2_staircase.block(r0, c0, r, c);

    let zero_blocks = [
        blk(0, nc, nc, nu),
        blk(nc, 0, nu, n),
        blk(n, nc, nc, nu),
        blk(2 * n, nc, rows - 2 * n, nu),
    ];
    let zero_blocks_max = zero_blocks.iter().fold(0.0f64, |m, b| m.max(b.norm_max()));

    let costate_uu = blk(n + nc, nc, nu, nu);
    let costate_unreachable_dev = (&costate_uu + &st.a_u.transpose()).norm_max();

    let expected_top = w_c * &a_kc.transpose();
    let top_left_dev = (&blk(0, 0, nc, nc) - &expected_top).norm_max();

    BlockStructure {
        zero_blocks_max,
        costate_unreachable_dev,
        top_left_dev,
    }
}
