//! Randomized time stepping for dynamical systems whose increments solve
//! poorly conditioned least-squares problems.
//!
//! The crate provides: a dense linear-algebra kernel (`linalg`), seeded
//! Gaussian and Haar-unitary embeddings (`embed`), exact and regularized
//! increment functions with sketched randomized variants (`increment`),
//! explicit-Euler trajectory integration (`stepper`), a periodic neural
//! field with parameter and spatial derivatives (`nnfield`), two benchmark
//! PDE problems (`pde`), a Fourier-spectral adaptive-RK4 reference solver
//! (`spectral`), and error/replicate reporting (`metrics`).

pub mod error;
pub mod linalg;

pub use error::LinalgError;
pub use linalg::{cond, lstsq_minnorm, numerical_rank, qr_reduced, svd, tikhonov_solve, tsvd_solve};
pub use linalg::{DenseMatrix, QrFactors, SvdFactors};
