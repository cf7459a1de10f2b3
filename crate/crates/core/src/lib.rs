//! Large-`t` evaluation of the Hurwitz zeta function `ζ₁(x, s) = Σ_{n≥1} (n + x)^{−s}`
//! (and of `ζ(s)` at `x = 0`) by a finite asymptotic series of any order, with
//! exact operator coefficients, parameter admissibility checks, a certified
//! error bound, and two independent oracles.
//!
//! ```
//! use hurwitz_asym::{eval_zeta1_asym, AsymParams, CoeffTable, SPoint};
//!
//! let table = CoeffTable::build(4);
//! let s = SPoint::new(0.5, 300.0).unwrap();
//! let r = eval_zeta1_asym(s, &AsymParams::new(0.0, 900.0, 0.5, 3), &table).unwrap();
//! assert!(r.err_bound > 0.0);
//! ```

// `!(a > b)` is used on purpose so that NaN inputs fail the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod admissibility;
pub mod dn_engine;
pub mod error;
pub mod evaluator;
pub mod numerics;
pub mod oracles;
pub mod perf;

pub use admissibility::{
    brute_check_eta, check_eta, select_m, suggest_eta, AdmissibilityReport, MMode, MSelection,
};
pub use dn_engine::{eval_boundary_term, eval_dn, CoeffTable, GaussianInt};
pub use error::{Error, Result};
pub use evaluator::{
    error_bound, eval_leading_order, eval_riemann_asym, eval_zeta1_asym, k_n, AsymParams,
    EvalResult, Regime, TermCounts,
};
pub use numerics::{
    chi, complex_pow, double_factorial, log_gamma, principal_log, ComplexValue, Precision, SPoint,
};
pub use oracles::{zeta1_reference, EMConfig, QuadConfig};
