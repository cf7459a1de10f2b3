//! Independent ground truth: an Euler–Maclaurin reference and quadrature of
//! the exact contour representations.

mod contour;
mod direct;
mod em;
pub mod quad;

pub use contour::{
    eval_gb_quad, eval_gl_quad, eval_gu_quad, exact_pieces, verify_alpha_representation,
    verify_exact_representation, verify_gl_expansion, ExactPieces, GlCheck, QuadConfig,
    Verification, POLE_CLEARANCE, T_MAX,
};
pub use direct::zeta1_direct_integral;
pub use em::{
    bernoulli_numbers, zeta1_reference, zeta1_reference_general, EMConfig, Reference, MAX_J,
    TARGET_REL,
};
