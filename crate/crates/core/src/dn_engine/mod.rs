//! Exact coefficients of the derivative operator `D_N` and stable evaluation
//! of `D_N` and of the integration-by-parts boundary terms.

mod eval;
mod gaussian;
mod table;

pub use eval::{eval_boundary_term, eval_dn, BoundaryEvaluator, SINGULAR_FLOOR};
pub use gaussian::GaussianInt;
pub use table::CoeffTable;
