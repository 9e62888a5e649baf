//! Laguerre polynomials `L_n^α`, their linear combinations across a
//! parameter shift `t` (families R and S), real-zero computation, and
//! strict-interlacing checks for the zero sets involved.

pub mod error;
pub mod interlace;
pub mod laguerre;
pub mod repro;
pub mod rootfind;

pub use error::{Error, Result};
pub use interlace::{
    check_chain, check_negative_claims, check_theorem_r, check_theorem_s, default_tie_tol,
    interlace_check, ChainOutcome, ChainViolation, ClaimOutcome, InterlacingReport, Pattern,
    TheoremReport, Verdict,
};
pub use laguerre::{
    eval_combination, eval_laguerre, identity_residual, identity_sides, CombinationSpec, Family,
    Identity, ParamSet,
};
pub use repro::{run_all as run_repro, run_fixtures, ReproResult, FIXTURE_TOL};
pub use rootfind::{
    combination_zeros, laguerre_zero_bound, laguerre_zeros, oracle_zeros, Poly, ZeroSet,
};
