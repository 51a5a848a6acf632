//! Dense real-matrix kernels.

mod lu;
mod matrix;
mod psd;
mod qr;
mod svd;

pub use lu::{inverse, mat_pow, solve_linear};
pub use matrix::Matrix;
pub use psd::{cholesky_min_pivot, is_psd};
pub use qr::{pivoted_qr, PivotedQr};
pub use svd::{
    largest_principal_angle, lstsq_min_norm, null_basis, pinv, range_basis, rank, singular_values,
    svd, Svd,
};

pub(crate) use matrix::vec_norm;
