//! Solver-and-verifier toolkit for the Dirichlet eigenvalue problem of the
//! complex Monge-Ampère operator in C².
//!
//! The crate has three layers:
//!
//! * exact algebra — a small sparse-polynomial engine over arbitrary-precision
//!   rationals ([`algebra`]) that machine-checks the identity catalogue behind
//!   the constant-rank argument, plus the elementary symmetric calculus
//!   ([`symfun`]) and the real form of the operator ([`cmaop`]);
//! * numerics — radial shooting on balls ([`radial`]), support-function
//!   geometry of Reinhardt profile bodies ([`domain`]), and a damped-Newton /
//!   inverse-iteration eigensolver on 2D reductions ([`solver2d`]);
//! * certification — Hessian spectra, rank fields and deformation scans over
//!   computed solutions ([`analysis`]).
//!
//! Coordinate order is fixed repo-wide as (x₁, x₂, y₁, y₂): gradient slot k
//! and Hessian slot (i, j) always refer to that ordering.

pub mod algebra;
pub mod analysis;
pub mod cmaop;
pub mod domain;
pub mod linalg;
pub mod radial;
pub mod report;
pub mod solver2d;
pub mod symfun;

pub use analysis::SpectralReport;
pub use cmaop::{FullState, TransformedEigenvalue};
pub use domain::{DeformationPath, ReinhardtProfile};
pub use linalg::SymMat4;
pub use radial::RadialSolution;
pub use report::CheckResult;
pub use solver2d::Grid2DSolution;
pub use symfun::Spectrum;
