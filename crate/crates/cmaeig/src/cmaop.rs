//! Real form of the two-dimensional complex Monge-Ampère operator, the
//! transformed operator F and its derivatives, and the u ↔ v logarithmic
//! transform.
//!
//! With z_i = x_i + √−1·y_i and the frozen coordinate order
//! (x₁, x₂, y₁, y₂) — slots 0..3 below — the determinant of the complex
//! Hessian of a smooth real u is
//!
//! ```text
//! det(u_{i j̄}) = 1/16 [ (u₁₁+u₃₃)(u₂₂+u₄₄) − (u₁₂+u₃₄)² − (u₁₄−u₂₃)² ]
//! ```
//!
//! and under u = −4e^{−v} the eigen-equation det(u_{i j̄}) = λ(−u)² becomes
//! F(∇²v, ∇v) = 0 with the transformed constant Λ = 16λ:
//!
//! ```text
//! F = (v₁₁+v₃₃)(v₂₂+v₄₄) − (v₁₂+v₃₄)² − (v₁₄−v₂₃)²
//!     − (v₁²+v₃²)(v₂₂+v₄₄) − (v₂²+v₄²)(v₁₁+v₃₃)
//!     + 2(v₁v₂+v₃v₄)(v₁₂+v₃₄) + 2(v₁v₄−v₂v₃)(v₁₄−v₂₃) − Λ.
//! ```
//!
//! All module APIs take Λ; λ = Λ/16 is reported only at CLI boundaries.

use crate::linalg::{jacobi_eigenvalues, SymMat4};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum CmaopError {
    #[error("log transform requires u < 0, got {0}")]
    NonNegativeU(f64),
    #[error("transformed eigenvalue must be positive, got {0}")]
    NonPositiveLambda(f64),
}

/// Gradient and symmetric Hessian of v in coordinate order (x₁, x₂, y₁, y₂).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FullState {
    pub grad: [f64; 4],
    pub hess: SymMat4,
}

impl FullState {
    pub fn new(grad: [f64; 4], hess: SymMat4) -> Self {
        FullState { grad, hess }
    }
}

/// The constant Λ = 16λ appearing in the transformed equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformedEigenvalue(f64);

impl TransformedEigenvalue {
    pub fn new(big_lambda: f64) -> Result<Self, CmaopError> {
        if big_lambda > 0.0 {
            Ok(TransformedEigenvalue(big_lambda))
        } else {
            Err(CmaopError::NonPositiveLambda(big_lambda))
        }
    }

    pub fn from_eigenvalue(lambda: f64) -> Result<Self, CmaopError> {
        Self::new(16.0 * lambda)
    }

    /// Λ itself.
    pub fn value(&self) -> f64 {
        self.0
    }

    /// λ = Λ/16.
    pub fn eigenvalue(&self) -> f64 {
        self.0 / 16.0
    }
}

/// det(u_{i j̄}) evaluated from the real gradient/Hessian of u.
pub fn complex_det_real(u_state: &FullState) -> f64 {
    let h = &u_state.hess;
    let a = h.get(0, 0) + h.get(2, 2);
    let b = h.get(1, 1) + h.get(3, 3);
    let c = h.get(0, 1) + h.get(2, 3);
    let d = h.get(0, 3) - h.get(1, 2);
    (a * b - c * c - d * d) / 16.0
}

/// F(∇²v, ∇v) − Λ; zero exactly when v solves the transformed equation.
pub fn f_eval(state: &FullState, lambda: TransformedEigenvalue) -> f64 {
    let g = &state.grad;
    let h = &state.hess;
    let a = h.get(0, 0) + h.get(2, 2);
    let b = h.get(1, 1) + h.get(3, 3);
    let c = h.get(0, 1) + h.get(2, 3);
    let d = h.get(0, 3) - h.get(1, 2);
    let g13 = g[0] * g[0] + g[2] * g[2];
    let g24 = g[1] * g[1] + g[3] * g[3];
    let p = g[0] * g[1] + g[2] * g[3];
    let q = g[0] * g[3] - g[1] * g[2];
    a * b - c * c - d * d - g13 * b - g24 * a + 2.0 * p * c + 2.0 * q * d - lambda.value()
}

/// Derivative of F with respect to the symmetric Hessian entries.
///
/// Off-diagonal entries are perturbed jointly (δv_{ij} = δv_{ji}) and F^{ij}
/// is normalised so the first-order change of F is Σ_{i,j} F^{ij} δv_{ij}
/// over the full 4×4 index grid; a joint bump of one off-diagonal pair thus
/// changes F by 2·F^{ij}·δ. At diagonal-Hessian states this reproduces the
/// entries
///
/// ```text
/// F^{11} = v₂₂+v₄₄−(v₂²+v₄²)   F^{12} = F^{34} = v₁v₂+v₃v₄
/// F^{22} = v₁₁+v₃₃−(v₁²+v₃²)   F^{23} = −F^{14} = −(v₁v₄−v₂v₃)
/// F^{33} = F^{11},  F^{44} = F^{22},  F^{13} = F^{24} = 0.
/// ```
pub fn f_ij(state: &FullState) -> SymMat4 {
    let g = &state.grad;
    let h = &state.hess;
    let f11 = h.get(1, 1) + h.get(3, 3) - (g[1] * g[1] + g[3] * g[3]);
    let f22 = h.get(0, 0) + h.get(2, 2) - (g[0] * g[0] + g[2] * g[2]);
    let f12 = g[0] * g[1] + g[2] * g[3] - (h.get(0, 1) + h.get(2, 3));
    let f23 = (h.get(0, 3) - h.get(1, 2)) - (g[0] * g[3] - g[1] * g[2]);
    let mut m = SymMat4::zero();
    m.set(0, 0, f11);
    m.set(1, 1, f22);
    m.set(2, 2, f11);
    m.set(3, 3, f22);
    m.set(0, 1, f12);
    m.set(2, 3, f12);
    m.set(1, 2, f23);
    m.set(0, 3, -f23);
    m
}

/// Exact gradient of F with respect to (v₁, v₂, v₃, v₄).
pub fn f_vk(state: &FullState) -> [f64; 4] {
    let g = &state.grad;
    let h = &state.hess;
    let a = h.get(0, 0) + h.get(2, 2);
    let b = h.get(1, 1) + h.get(3, 3);
    let c = h.get(0, 1) + h.get(2, 3);
    let d = h.get(0, 3) - h.get(1, 2);
    [
        -2.0 * g[0] * b + 2.0 * g[1] * c + 2.0 * g[3] * d,
        -2.0 * g[1] * a + 2.0 * g[0] * c - 2.0 * g[2] * d,
        -2.0 * g[2] * b + 2.0 * g[3] * c - 2.0 * g[1] * d,
        -2.0 * g[3] * a + 2.0 * g[2] * c + 2.0 * g[0] * d,
    ]
}

/// Constant second derivative F^{ij,kl} in the independent-entry convention
/// (v_{ij} and v_{ji} treated as separate symbols; 0-based index pairs).
///
/// Nonzero values are ±1 and come from the three quadratic products in F.
pub fn f_second_partial(ij: (usize, usize), kl: (usize, usize)) -> f64 {
    // +1 from (v₁₁+v₃₃)(v₂₂+v₄₄)
    const PLUS_DIAG: [((usize, usize), (usize, usize)); 4] = [
        ((0, 0), (1, 1)),
        ((0, 0), (3, 3)),
        ((2, 2), (1, 1)),
        ((2, 2), (3, 3)),
    ];
    // −1 from −(v₁₂+v₃₄)(v₂₁+v₄₃)
    const MINUS_MIXED: [((usize, usize), (usize, usize)); 4] = [
        ((0, 1), (1, 0)),
        ((0, 1), (3, 2)),
        ((2, 3), (1, 0)),
        ((2, 3), (3, 2)),
    ];
    // signs from −(v₁₄−v₃₂)(v₄₁−v₂₃)
    const SKEW: [((usize, usize), (usize, usize), f64); 4] = [
        ((0, 3), (3, 0), -1.0),
        ((0, 3), (1, 2), 1.0),
        ((2, 1), (3, 0), 1.0),
        ((2, 1), (1, 2), -1.0),
    ];
    for (a, b) in PLUS_DIAG {
        if (ij, kl) == (a, b) || (ij, kl) == (b, a) {
            return 1.0;
        }
    }
    for (a, b) in MINUS_MIXED {
        if (ij, kl) == (a, b) || (ij, kl) == (b, a) {
            return -1.0;
        }
    }
    for (a, b, s) in SKEW {
        if (ij, kl) == (a, b) || (ij, kl) == (b, a) {
            return s;
        }
    }
    0.0
}

/// (v, state of v) from (u, ∇u, ∇²u); requires u < 0.
///
/// v = −log(−u/4), v_k = u_k/(−u), v_{ij} = u_{ij}/(−u) + v_i v_j.
pub fn log_transform_u_to_v(
    u: f64,
    grad_u: [f64; 4],
    hess_u: SymMat4,
) -> Result<(f64, FullState), CmaopError> {
    if u >= 0.0 {
        return Err(CmaopError::NonNegativeU(u));
    }
    let v = -(-u / 4.0).ln();
    let grad_v = grad_u.map(|gi| gi / (-u));
    let hess_v = hess_u.scale(1.0 / (-u)).add_outer(&grad_v, 1.0);
    Ok((v, FullState::new(grad_v, hess_v)))
}

/// Exact inverse of [`log_transform_u_to_v`]:
/// u = −4e^{−v}, u_k = (−u)v_k, u_{ij} = (−u)(v_{ij} − v_i v_j).
pub fn log_transform_v_to_u(v: f64, state: &FullState) -> (f64, [f64; 4], SymMat4) {
    let u = -4.0 * (-v).exp();
    let grad_u = state.grad.map(|vi| -u * vi);
    let hess_u = state.hess.add_outer(&state.grad, -1.0).scale(-u);
    (u, grad_u, hess_u)
}

/// Smallest eigenvalue of (F^{ij}); positive exactly when the linearised
/// operator is elliptic at the state.
pub fn ellipticity_min_eig(state: &FullState) -> f64 {
    let eigs = jacobi_eigenvalues(f_ij(state).to_dense());
    eigs[3]
}
