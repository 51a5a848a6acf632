/// Numerical tolerances shared by every stage of the pipeline.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig {
    /// Relative factor in the rank threshold `sigma_max * max(rows, cols) * factor`.
    pub rank_tol_factor: f64,
    /// Same role as `rank_tol_factor`, used only for the reachability decision.
    pub staircase_tol_factor: f64,
    /// Absolute zero threshold, scaled by the matrix magnitude where noted.
    pub abs_zero_tol: f64,
    /// Relative stopping / acceptance threshold for iterative solvers.
    pub residual_tol: f64,
    pub max_iter: usize,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            rank_tol_factor: f64::EPSILON,
            staircase_tol_factor: 1e-10,
            abs_zero_tol: 1e-12,
            residual_tol: 1e-10,
            max_iter: 100,
        }
    }
}

impl ToleranceConfig {
    pub fn with_rank_tol(mut self, factor: f64) -> Self {
        self.rank_tol_factor = factor;
        self
    }

    pub fn is_valid(&self) -> bool {
        let nonneg = |x: f64| x.is_finite() && x >= 0.0;
        nonneg(self.rank_tol_factor)
            && nonneg(self.staircase_tol_factor)
            && nonneg(self.abs_zero_tol)
            && nonneg(self.residual_tol)
            && self.max_iter >= 1
    }
}
