//! JSON analysis report.

use hamsub_core::riccati::dare_residual;
use hamsub_core::{Analysis, Matrix, SystemQuadruple, ToleranceConfig};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub rank_tol_factor: f64,
    pub staircase_tol_factor: f64,
    pub abs_zero_tol: f64,
    pub residual_tol: f64,
    pub max_iter: usize,
}

impl From<&ToleranceConfig> for Tolerances {
    fn from(c: &ToleranceConfig) -> Self {
        Self {
            rank_tol_factor: c.rank_tol_factor,
            staircase_tol_factor: c.staircase_tol_factor,
            abs_zero_tol: c.abs_zero_tol,
            residual_tol: c.residual_tol,
            max_iter: c.max_iter,
        }
    }
}

/// Frobenius norms of the identity residuals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualSummary {
    /// On the columns of `V1`.
    pub forward: [f64; 3],
    /// On the columns of `V2`.
    pub backward: [f64; 3],
    pub riccati: f64,
    pub lyapunov: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Iterations {
    pub riccati_doubling: usize,
    pub riccati_newton: usize,
    pub lyapunov_doubling: usize,
}

/// Input data and computed matrices, written at the top level so the
/// report can be read back as a system file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FullMatrices {
    #[serde(rename = "A")]
    pub a: Vec<Vec<f64>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<f64>>,
    #[serde(rename = "C")]
    pub c: Vec<Vec<f64>>,
    #[serde(rename = "D")]
    pub d: Vec<Vec<f64>>,
    #[serde(rename = "T")]
    pub t: Vec<Vec<f64>>,
    #[serde(rename = "P")]
    pub p: Vec<Vec<f64>>,
    #[serde(rename = "K")]
    pub k: Vec<Vec<f64>>,
    #[serde(rename = "Rw")]
    pub rw: Vec<Vec<f64>>,
    #[serde(rename = "W")]
    pub w: Vec<Vec<f64>>,
    #[serde(rename = "V1")]
    pub v1: Vec<Vec<f64>>,
    #[serde(rename = "V2")]
    pub v2: Vec<Vec<f64>>,
    #[serde(rename = "Vbar2")]
    pub vbar2: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub m: usize,
    pub p: usize,
    pub n_c: usize,
    pub n_u: usize,
    pub rank_v1: usize,
    pub rank_v2: usize,
    pub rank_vbar2: usize,
    pub rank_deficiency_v2: usize,
    /// 1-based rows of `A_u` that vanish.
    pub zero_rows_au: Vec<usize>,
    pub residuals: ResidualSummary,
    pub tolerances: Tolerances,
    pub iterations: Iterations,
    #[serde(flatten, default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<FullMatrices>,
}

fn rows(m: &Matrix) -> Vec<Vec<f64>> {
    m.to_rows()
}

impl AnalysisReport {
    pub fn build(
        sys: &SystemQuadruple,
        an: &Analysis,
        cfg: &ToleranceConfig,
        full: bool,
    ) -> Result<Self, CliError> {
        let r = &an.report;
        let matrices = full.then(|| FullMatrices {
            a: rows(&sys.a),
            b: rows(&sys.b),
            c: rows(&sys.c),
            d: rows(&sys.d),
            t: rows(&an.staircase.t),
            p: rows(&an.riccati.p),
            k: rows(&an.riccati.k),
            rw: rows(&an.riccati.rw),
            w: rows(&an.gramian.w),
            v1: rows(&an.bases.v1),
            v2: rows(&an.bases.v2),
            vbar2: rows(&an.bases.vbar2),
        });
        Ok(Self {
            n: r.n,
            m: r.m,
            p: r.p,
            n_c: r.n_c,
            n_u: r.n_u,
            rank_v1: r.rank_v1,
            rank_v2: r.rank_v2,
            rank_vbar2: r.rank_vbar2,
            rank_deficiency_v2: r.rank_deficiency_v2,
            zero_rows_au: r.zero_rows_au.iter().map(|i| i + 1).collect(),
            residuals: ResidualSummary {
                forward: an.residuals.forward,
                backward: an.residuals.backward,
                riccati: dare_residual(sys, &an.riccati.p, cfg)?,
                lyapunov: an.gramian.residual,
            },
            tolerances: Tolerances::from(cfg),
            iterations: Iterations {
                riccati_doubling: an.riccati.doubling_steps,
                riccati_newton: an.riccati.newton_steps,
                lyapunov_doubling: an.gramian.iterations,
            },
            matrices,
        })
    }
}
