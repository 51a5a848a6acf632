use alloc::vec::Vec;
use core::fmt;

/// Failure modes of the numerical pipeline.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Operand shapes do not agree.
    DimensionMismatch {
        what: &'static str,
        expected: (usize, usize),
        found: (usize, usize),
    },
    /// A NaN or infinity was supplied or produced.
    NonFinite { what: &'static str },
    /// Elimination met a pivot below the singularity threshold.
    SingularMatrix { pivot: f64, threshold: f64 },
    /// An iterative kernel exhausted its iteration budget.
    ConvergenceFailure {
        routine: &'static str,
        iterations: usize,
    },
    /// `(A, B)` has unreachable dynamics outside the open unit disc, or the
    /// Riccati iteration produced a non-stabilizing closed loop.
    NotStabilizable,
    /// The Smith series did not converge. `trace` holds the update norms.
    NotStable { trace: Vec<f64> },
    /// `D'D + B'PB` is not strictly positive definite.
    SingularWeight { min_pivot: f64 },
    /// The two-point boundary system has no solution within tolerance.
    BoundaryInconsistent { residual: f64, tolerance: f64 },
    /// The terminal state cannot be reached in the given number of steps.
    Infeasible { residual: f64, tolerance: f64 },
    /// The restricted problem needs at least one reachable direction.
    EmptyReachablePart,
    /// A trajectory oracle was given the wrong kind of endpoint condition.
    TerminalMismatch { expected: &'static str },
}

impl Error {
    pub(crate) fn dims(
        what: &'static str,
        expected: (usize, usize),
        found: (usize, usize),
    ) -> Self {
        Error::DimensionMismatch {
            what,
            expected,
            found,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch {
                what,
                expected,
                found,
            } => write!(
                f,
                "dimension mismatch in {what}: expected {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            Error::NonFinite { what } => write!(f, "non-finite value in {what}"),
            Error::SingularMatrix { pivot, threshold } => write!(
                f,
                "matrix is singular to working precision (pivot {pivot:e} <= {threshold:e})"
            ),
            Error::ConvergenceFailure {
                routine,
                iterations,
            } => write!(
                f,
                "{routine} did not converge after {iterations} iterations"
            ),
            Error::NotStabilizable => write!(f, "system is not stabilizable"),
            Error::NotStable { trace } => write!(
                f,
                "matrix is not discrete-time stable (last update norm {:e})",
                trace.last().copied().unwrap_or(f64::NAN)
            ),
            Error::SingularWeight { min_pivot } => write!(
                f,
                "innovation weight D'D + B'PB is not positive definite (min pivot {min_pivot:e})"
            ),
            Error::BoundaryInconsistent {
                residual,
                tolerance,
            } => write!(
                f,
                "endpoint not attainable: boundary residual {residual:e} exceeds {tolerance:e}"
            ),
            Error::Infeasible {
                residual,
                tolerance,
            } => write!(
                f,
                "endpoint not attainable: constraint residual {residual:e} exceeds {tolerance:e}"
            ),
            Error::EmptyReachablePart => write!(f, "reachable subspace is empty"),
            Error::TerminalMismatch { expected } => {
                write!(f, "this solver requires a {expected} endpoint")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
