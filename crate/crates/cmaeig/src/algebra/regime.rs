//! Substitution regimes realising the "modulo φ" relation.
//!
//! The ~ statements of the constant-rank argument are used at points where
//! the bad Hessian eigenvalues vanish and the equation pins λ; substituting
//! those facts exactly turns every ~ claim into a polynomial identity.
//!
//! * R2 (minimal rank 2): bad slots 3, 4 — d₃ ↦ 0, d₄ ↦ 0 and
//!   λ ↦ d₁d₂ − (v₁²+v₃²)d₂ − (v₂²+v₄²)d₁.
//! * R3 (minimal rank 3): bad slot 4 — d₄ ↦ 0 and
//!   λ ↦ (d₁+d₃)d₂ − (v₂²+v₄²)(d₁+d₃) − (v₁²+v₃²)d₂.

use super::poly::{pv, PolyExpr, Var};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegimeTag {
    R2,
    R3,
}

#[derive(Debug, Clone)]
pub struct Regime {
    pub tag: RegimeTag,
    subs: BTreeMap<Var, PolyExpr>,
}

/// v₁² + v₃².
pub fn grad_sq_13() -> PolyExpr {
    &(&pv(Var::V1) * &pv(Var::V1)) + &(&pv(Var::V3) * &pv(Var::V3))
}

/// v₂² + v₄².
pub fn grad_sq_24() -> PolyExpr {
    &(&pv(Var::V2) * &pv(Var::V2)) + &(&pv(Var::V4) * &pv(Var::V4))
}

impl Regime {
    pub fn r2() -> Self {
        let g1 = grad_sq_13();
        let g2 = grad_sq_24();
        let lam = &(&(&pv(Var::D1) * &pv(Var::D2)) - &(&g1 * &pv(Var::D2)))
            - &(&g2 * &pv(Var::D1));
        let mut subs = BTreeMap::new();
        subs.insert(Var::D3, PolyExpr::zero());
        subs.insert(Var::D4, PolyExpr::zero());
        subs.insert(Var::Lam, lam);
        Regime {
            tag: RegimeTag::R2,
            subs,
        }
    }

    pub fn r3() -> Self {
        let g1 = grad_sq_13();
        let g2 = grad_sq_24();
        let d13 = &pv(Var::D1) + &pv(Var::D3);
        let lam = &(&(&d13 * &pv(Var::D2)) - &(&g2 * &d13)) - &(&g1 * &pv(Var::D2));
        let mut subs = BTreeMap::new();
        subs.insert(Var::D4, PolyExpr::zero());
        subs.insert(Var::Lam, lam);
        Regime {
            tag: RegimeTag::R3,
            subs,
        }
    }

    /// Applies the regime's substitutions; p ~ q holds exactly when
    /// `normalize(p − q)` is the zero polynomial.
    pub fn normalize(&self, p: &PolyExpr) -> PolyExpr {
        p.substitute(&self.subs)
    }

    /// The polynomial the regime substitutes for λ.
    pub fn lambda_expr(&self) -> &PolyExpr {
        &self.subs[&Var::Lam]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn definitional_normalisations() {
        let r3 = Regime::r3();
        assert!(r3.normalize(&pv(Var::D4)).is_zero());
        let lam_minus_def = &pv(Var::Lam) - r3.lambda_expr();
        assert!(r3.normalize(&lam_minus_def).is_zero());

        let r2 = Regime::r2();
        assert!(r2.normalize(&pv(Var::D3)).is_zero());
        assert!(r2.normalize(&pv(Var::D4)).is_zero());
        let lam_minus_def = &pv(Var::Lam) - r2.lambda_expr();
        assert!(r2.normalize(&lam_minus_def).is_zero());
        // d1, d2 untouched
        assert_eq!(r2.normalize(&pv(Var::D1)), pv(Var::D1));
    }
}
