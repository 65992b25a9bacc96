//! Gamma and q-gamma special functions with controlled truncation error,
//! the Laplace-type proof kernels behind a family of complete-monotonicity
//! results, and a numerical harness that checks those results.
//!
//! The crate is organised in four layers:
//!
//! - [`qspecial`]: `Γ`, `Γ_q`, `ψ`, `ψ_q`, their derivatives, and the auxiliary
//!   series `F(x) = Σ xⁿ/n²`. Every series evaluator returns a [`SeriesResult`]
//!   carrying an explicit bound on the discarded tail.
//! - [`kernels`]: the bracketed kernels `w(t)` of the integral representations
//!   `∫ e^{-xt} w(t) dγ_q(t)`, sign scans over `t`, and the registry of
//!   theorem cases tying kernels to concrete function families.
//! - [`cmcheck`]: alternating forward-difference tests for complete
//!   monotonicity, plus the constrained `Σ 1/Γ(x_k) ≤ n` sampler.
//! - [`bounds`]: two-sided gamma-ratio bounds and complex-plane modulus bounds.
//!
//! All operations are pure functions of their inputs and configuration.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod cmcheck;
mod error;
pub mod kernels;
pub mod qspecial;
pub mod sampling;

pub use error::{Error, Result};
pub use qspecial::{EvalConfig, QValue, SeriesResult, EULER_GAMMA};
