//! Four-state, two-input worked example with reference `V2` and `V2bar`
//! matrices (five-digit fixed-point display), plus the comparison used by
//! the `golden` command.

use crate::config::ToleranceConfig;
use crate::error::Result;
use crate::hamsubspace::{analyze, Analysis};
use crate::matcore::{largest_principal_angle, Matrix};
use crate::reachdecomp::SystemQuadruple;

/// Entrywise tolerance matching the five-digit display.
pub const ENTRYWISE_TOL: f64 = 5e-5;
/// Largest principal angle accepted by the subspace-level fallback.
pub const ANGLE_TOL: f64 = 1e-6;
/// Residual bound (relative to `1 + ||W||_F`) for the fallback.
pub const RESIDUAL_TOL: f64 = 1e-8;

pub const A: [[f64; 4]; 4] = [
    [0.3, -0.4, 0.5, 0.6],
    [0.1, 0.2, 0.1, 0.1],
    [0.0, 0.0, 0.5, 0.0],
    [0.0, 0.0, 0.0, 0.0],
];

pub const B: [[f64; 2]; 4] = [[1.0, 0.2], [2.0, 3.0], [0.0, 0.0], [0.0, 0.0]];

pub const C: [[f64; 4]; 2] = [[1.0, 2.0, 3.0, 4.0], [2.0, 1.0, 5.0, 6.0]];

pub const D: [[f64; 2]; 2] = [[10.0, 0.0], [0.0, 0.0]];

pub const V2_PRINTED: [[f64; 4]; 10] = [
    [0.3661, -0.4314, 0.0, 0.0],
    [-0.7323, 0.8629, 0.0, 0.0],
    [0.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, 0.0],
    [-0.0000, 0.0000, 0.0, 0.0],
    [0.0000, -0.0000, 0.0, 0.0],
    [1.8443, -1.1885, -0.5000, 0.0],
    [-0.0000, 0.0000, 0.0, 0.0],
    [0.1098, -0.1294, 0.0, 0.0],
    [-0.2088, 0.4374, 0.0, 0.0],
];

pub const VBAR2_PRINTED: [[f64; 4]; 8] = [
    [0.4708, -0.5165, 0.0, 0.0],
    [-0.5165, 1.1828, 0.0, 0.0],
    [0.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, 0.0],
    [-0.0000, 0.0000, 0.0, 0.0],
    [0.0000, -0.0000, 0.0, 0.0],
    [3.6885, -2.3770, -1.0000, 0.0],
    [2.7295, 0.5411, 0.0, -1.0000],
];

pub fn example_system() -> SystemQuadruple {
    SystemQuadruple::new(
        Matrix::from_rows(&A),
        Matrix::from_rows(&B),
        Matrix::from_rows(&C),
        Matrix::from_rows(&D),
    )
    .expect("embedded example is well formed")
}

pub fn printed_v2() -> Matrix {
    Matrix::from_rows(&V2_PRINTED)
}

pub fn printed_vbar2() -> Matrix {
    Matrix::from_rows(&VBAR2_PRINTED)
}

/// Largest entrywise deviation and where it occurs (zero-based row, column).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Deviation {
    pub max_abs: f64,
    pub row: usize,
    pub col: usize,
}

impl Deviation {
    fn between(computed: &Matrix, printed: &Matrix) -> Self {
        let mut dev = Deviation {
            max_abs: 0.0,
            row: 0,
            col: 0,
        };
        for i in 0..printed.rows() {
            for j in 0..printed.cols() {
                let d = (computed[(i, j)] - printed[(i, j)]).abs();
                if d > dev.max_abs {
                    dev = Deviation {
                        max_abs: d,
                        row: i,
                        col: j,
                    };
                }
            }
        }
        dev
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Both matrices agree entrywise with the printed values.
    Entrywise,
    /// Entrywise comparison failed but the column spans agree and all
    /// residual identities hold.
    Subspace,
    Fail,
}

#[derive(Debug, Clone)]
pub struct GoldenOutcome {
    pub verdict: Verdict,
    pub v2: Deviation,
    pub vbar2: Deviation,
    /// Only evaluated when the entrywise test fails.
    pub angle_v2: Option<f64>,
    pub angle_vbar2: Option<f64>,
    /// `max(residuals) / (1 + ||W||_F)`.
    pub max_relative_residual: f64,
    pub analysis: Analysis,
}

/// Recomputes `V2` and `V2bar` for `sys` and compares them with the printed
/// matrices.
pub fn check_against_printed(
    sys: &SystemQuadruple,
    cfg: &ToleranceConfig,
) -> Result<GoldenOutcome> {
    let analysis = analyze(sys, cfg)?;
    let pv2 = printed_v2();
    let pvb = printed_vbar2();
    let v2 = Deviation::between(&analysis.bases.v2, &pv2);
    let vbar2 = Deviation::between(&analysis.bases.vbar2, &pvb);
    let scale = 1.0 + analysis.gramian.w.norm_fro();
    let max_relative_residual = analysis.residuals.max() / scale;

    if v2.max_abs <= ENTRYWISE_TOL && vbar2.max_abs <= ENTRYWISE_TOL {
        return Ok(GoldenOutcome {
            verdict: Verdict::Entrywise,
            v2,
            vbar2,
            angle_v2: None,
            angle_vbar2: None,
            max_relative_residual,
            analysis,
        });
    }

    let angle_v2 = largest_principal_angle(&analysis.bases.v2, &pv2, cfg)?;
    let angle_vbar2 = largest_principal_angle(&analysis.bases.vbar2, &pvb, cfg)?;
    let verdict = if angle_v2 <= ANGLE_TOL
        && angle_vbar2 <= ANGLE_TOL
        && max_relative_residual <= RESIDUAL_TOL
    {
        Verdict::Subspace
    } else {
        Verdict::Fail
    };
    Ok(GoldenOutcome {
        verdict,
        v2,
        vbar2,
        angle_v2: Some(angle_v2),
        angle_vbar2: Some(angle_vbar2),
        max_relative_residual,
        analysis,
    })
}
