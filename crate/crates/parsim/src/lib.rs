//! Parsimonious subspace identification (PARSIM) for innovations-form
//! linear time-invariant systems, together with the finite-sample
//! quantities that govern its accuracy: persistence-of-excitation burn-in,
//! signal-to-noise ratio and high-probability error radii for the ARX
//! rows, the stacked range-space estimate and the realized system
//! matrices. A Monte Carlo harness verifies the `O(1/sqrt(N))` rate
//! empirically.
//!
//! The pipeline runs in four stages:
//!
//! 1. simulate an innovations-form model ([`model`]),
//! 2. assemble block-Hankel data and the causal regressor bank ([`hankel`]),
//! 3. solve the `f` ARX rows by OLS and stack them ([`estimate`]),
//! 4. realize `(A, B, C, K)` from the rank-`n_x` SVD ([`realize`]).
//!
//! ```
//! use parsim::model::StateSpaceModel;
//! use parsim::hankel::{build_hankels, build_regressor_bank};
//! use parsim::estimate::estimate_parsim_bank;
//! use parsim::realize::{svd_realize, align_similarity};
//!
//! let m = StateSpaceModel::s1();
//! let (p, f, n) = (2, 3, 2000);
//! let t = m.simulate(p + f + n - 1, 42, false).unwrap();
//! let h = build_hankels(&t, p, f, n).unwrap();
//! let est = estimate_parsim_bank(&build_regressor_bank(&h)).unwrap();
//! let r = svd_realize(&est.stacked_gamma_lp, m.nx()).unwrap();
//! let aligned = align_similarity(&m, p, f, &r).unwrap();
//! assert!(aligned.err_a < 0.05); // high SNR, N = 2000
//! ```

pub mod bounds;
pub mod error;
pub mod estimate;
pub mod hankel;
pub mod harness;
pub mod model;
pub mod realize;

pub use error::{Error, Result};
