//! Structural invariant subspaces of discrete-time singular Hamiltonian
//! systems arising from finite-horizon LQ problems.
//!
//! The pipeline for a plant `(A, B, C, D)`:
//!
//! 1. [`reachdecomp::staircase`] separates reachable and unreachable states.
//! 2. [`riccati::solve_dare`] gives the stabilizing `P`, gain `K` and `Rw`.
//! 3. [`stablyap::closed_loop_gramian`] gives the closed-loop Gramian `W`.
//! 4. [`hamsubspace`] assembles `V1`, `V2`, `V2bar` and reports their ranks.
//! 5. [`lqtraj`] turns the bases into finite-horizon trajectories.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod config;
pub mod error;
pub mod golden;
pub mod hamsubspace;
pub mod lqtraj;
pub mod matcore;
pub mod reachdecomp;
pub mod riccati;
pub mod stablyap;

pub use config::ToleranceConfig;
pub use error::{Error, Result};
pub use hamsubspace::{analyze, dimension_report, Analysis, DimensionReport, InvariantBases};
pub use matcore::Matrix;
pub use reachdecomp::{staircase, StaircaseForm, SystemQuadruple};
pub use riccati::{solve_dare, RiccatiSolution};
pub use stablyap::{closed_loop_gramian, GramianSolution};
