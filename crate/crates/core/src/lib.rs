//! High-precision and exact-symbolic verification of two evaluations of
//! Apéry-like central binomial series.
//!
//! The crate is organised bottom-up:
//!
//! - [`numkernel`]: arbitrary-precision reals/complexes and memoized constants.
//! - [`polylog`]: classical polylogarithms `Li_j`, `j <= 4`.
//! - [`svpolylog`]: the single-valued Zagier-type polylogarithms `D_m`, `D̃_m`.
//! - [`logsine`]: generalized log-sine-cosine integrals by tanh-sinh quadrature.
//! - [`series`]: exact partial sums and rigorous tails of the binomial series.
//! - [`identities`]: closed forms, derivative formulas and the identity registry.
//! - [`symtensor`]: exact `Sym ⊗ Λ²` tensor invariants of formal sums.
//! - [`runner`]: check reports, the unified check registry and suite execution.
//!
//! ```no_run
//! use apery_verify::runner;
//! let report = runner::run_check("conj2", 256);
//! assert_eq!(report.status, runner::Status::Pass);
//! ```

pub mod error;
pub mod identities;
pub mod logsine;
pub mod numkernel;
pub mod polylog;
pub mod runner;
pub mod series;
pub mod svpolylog;
pub mod symtensor;

pub use error::{Error, Result};
pub use numkernel::{PrecComplex, PrecReal};
