//! The named F-derivative expressions as exact polynomials over the CAS
//! universe, in the diagonal-Hessian frame:
//!
//! ```text
//! F¹¹ = d₂ + d₄ − (v₂²+v₄²)      F¹² = v₁v₂ + v₃v₄
//! F²² = d₁ + d₃ − (v₁²+v₃²)      F²³ = −(v₁v₄ − v₂v₃)
//! F³³ = F¹¹
//! ```

use super::poly::{pv, PolyExpr, Var};
use super::regime::{grad_sq_13, grad_sq_24};

#[derive(Debug, Clone)]
pub struct FExprs {
    pub f11: PolyExpr,
    pub f22: PolyExpr,
    pub f33: PolyExpr,
    pub f12: PolyExpr,
    pub f23: PolyExpr,
}

/// Builds the standard bundle.
pub fn fexprs() -> FExprs {
    let f11 = &(&pv(Var::D2) + &pv(Var::D4)) - &grad_sq_24();
    let f22 = &(&pv(Var::D1) + &pv(Var::D3)) - &grad_sq_13();
    let f12 = &(&pv(Var::V1) * &pv(Var::V2)) + &(&pv(Var::V3) * &pv(Var::V4));
    let f23 = (&(&pv(Var::V1) * &pv(Var::V4)) - &(&pv(Var::V2) * &pv(Var::V3))).neg_ref();
    FExprs {
        f33: f11.clone(),
        f11,
        f22,
        f12,
        f23,
    }
}
