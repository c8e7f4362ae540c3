//! Jacobi and generalized Gegenbauer polynomials, Gauss–Jacobi quadrature,
//! and an empirical verification harness for the sup-norm growth of the
//! orthonormal generalized Gegenbauer family.
//!
//! The library is organized as:
//! - [`special`]: log-gamma, Pochhammer symbol, gamma ratios
//! - [`jacobi`]: P_n^{(α,β)} evaluation, endpoint values, norm constants
//! - [`geggen`]: C_n^{(λ,μ)}, the orthonormal C̃_n, weights, the
//!   connection integral
//! - [`quadrature`]: Gauss–Jacobi rules and orthonormality Gram matrices
//! - [`extrema`]: sup norms and weighted θ-maxima
//! - [`asymptotics`]: n-sweeps, exponent fits, and verification reports
//! - [`report`]: CSV/JSON emission
//!
//! All functions are pure; rules built by [`quadrature::gauss_jacobi_rule`]
//! are cached behind a lock and shared as `Arc`.

pub mod asymptotics;
pub mod error;
pub mod extrema;
pub mod geggen;
pub mod jacobi;
pub mod quadrature;
pub mod report;
pub mod special;

pub use error::{Error, Result};
pub use geggen::GegenParams;
pub use jacobi::JacobiParams;
