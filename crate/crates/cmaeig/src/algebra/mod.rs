//! Exact computer-algebra engine and the catalogue of identities behind the
//! constant-rank argument: sparse polynomials and rational-function pairs
//! over arbitrary-precision rationals, substitution regimes realising the
//! "modulo φ" relation, the coefficient-table and block-reduction checks,
//! and exact-arithmetic positivity sampling.

pub mod checks;
pub mod fexprs;
pub mod matrices;
pub mod poly;
pub mod rat;
pub mod regime;
pub mod sampling;

pub use checks::{
    identity_suite, identity_suite_with, verify_block_reduction, verify_claim1_quadratic,
    verify_claim2, verify_claim3, verify_coefficient_bullets, AlgebraCheckFailure,
};
pub use fexprs::{fexprs, FExprs};
pub use matrices::{build_matrix_a, build_matrix_a_raw, RatMat};
pub use poly::{PolyExpr, Var, NVARS};
pub use rat::RatExpr;
pub use regime::{Regime, RegimeTag};
pub use sampling::{positivity_sample_suite, AdmissibleSample, SampleSuiteReport};
