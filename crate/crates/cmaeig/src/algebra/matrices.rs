//! The five-variable quadratic form of the rank-3 argument: the raw form
//! assembled from the differentiated equation, the simplified coefficient
//! matrix A in variable order (v₁₁₄, v₃₃₄, v₁₃₄, v₁₂₄, v₂₃₄), the congruence
//! transformation to block-diagonal shape, and the blocks A₁, A₂ with their
//! leading principal minors.
//!
//! Third-derivative symbols are never CAS variables — they are the formal
//! coordinates of the quadratic form, and only the coefficients live in the
//! polynomial ring.

use super::fexprs::FExprs;
use super::poly::{pint, pv, PolyExpr, Var};
use super::rat::{det2, det3, RatExpr};
use super::regime::grad_sq_24;

pub const QDIM: usize = 5;

/// Symmetric matrix of rational-function entries.
#[derive(Debug, Clone)]
pub struct RatMat {
    pub n: usize,
    entries: Vec<RatExpr>,
}

impl RatMat {
    pub fn zeros(n: usize) -> Self {
        RatMat {
            n,
            entries: vec![RatExpr::zero(); n * n],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &RatExpr {
        &self.entries[i * self.n + j]
    }

    /// Sets entry (i, j) and mirrors it to (j, i).
    pub fn set_sym(&mut self, i: usize, j: usize, value: RatExpr) {
        self.entries[i * self.n + j] = value.clone();
        self.entries[j * self.n + i] = value;
    }

    pub fn set(&mut self, i: usize, j: usize, value: RatExpr) {
        self.entries[i * self.n + j] = value;
    }

    /// Congruence transform SᵀMS for a general square S.
    pub fn congruence(&self, s: &RatMat) -> RatMat {
        let n = self.n;
        let mut ms = RatMat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = RatExpr::zero();
                for k in 0..n {
                    acc = acc.add(&self.get(i, k).mul(s.get(k, j)));
                }
                ms.set(i, j, acc);
            }
        }
        let mut out = RatMat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = RatExpr::zero();
                for k in 0..n {
                    acc = acc.add(&s.get(k, i).mul(ms.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }
}

fn frac(num: PolyExpr, den: Vec<PolyExpr>) -> RatExpr {
    RatExpr::from_factors(num, den)
}

/// (v₂²+v₄²)·d_k + λ, the recurring numerator block.
fn g2_d_plus_lam(dk: Var) -> PolyExpr {
    &(&grad_sq_24() * &pv(dk)) + &pv(Var::Lam)
}

/// The simplified coefficient matrix A exactly as tabulated, with
/// v_{ii} ↦ dᵢ and F³³ = F¹¹.
pub fn build_matrix_a(f: &FExprs) -> RatMat {
    let g1 = super::regime::grad_sq_13();
    let g2 = grad_sq_24();
    let d1 = pv(Var::D1);
    let d2 = pv(Var::D2);
    let d3 = pv(Var::D3);
    let n13 = g2_d_plus_lam(Var::D3); // (v₂²+v₄²)d₃ + λ
    let n11 = g2_d_plus_lam(Var::D1); // (v₂²+v₄²)d₁ + λ

    let mut a = RatMat::zeros(QDIM);
    a.set_sym(
        0,
        0,
        frac(&f.f11 * &n13, vec![f.f22.clone(), d2.clone(), d1.clone()]),
    );
    a.set_sym(
        0,
        1,
        frac((&f.f11 * &g2).neg_ref(), vec![f.f22.clone(), d2.clone()]),
    );
    a.set_sym(0, 2, RatExpr::zero());
    a.set_sym(
        0,
        3,
        frac(&f.f12 * &n13, vec![f.f22.clone(), d2.clone(), d1.clone()]),
    );
    a.set_sym(
        0,
        4,
        frac((&f.f23 * &g2).neg_ref(), vec![f.f22.clone(), d2.clone()]),
    );
    a.set_sym(
        1,
        1,
        frac(&f.f33 * &n11, vec![f.f22.clone(), d2.clone(), d3.clone()]),
    );
    a.set_sym(1, 2, RatExpr::zero());
    a.set_sym(
        1,
        3,
        frac((&f.f12 * &g2).neg_ref(), vec![f.f22.clone(), d2.clone()]),
    );
    a.set_sym(
        1,
        4,
        frac(&f.f23 * &n11, vec![f.f22.clone(), d2.clone(), d3.clone()]),
    );
    a.set_sym(
        2,
        2,
        frac(&(&g1 * &d2) + &pv(Var::Lam), vec![d1.clone(), d3.clone()]),
    );
    a.set_sym(2, 3, frac(f.f23.clone(), vec![d1.clone()]));
    a.set_sym(2, 4, frac(f.f12.clone(), vec![d3.clone()]));
    a.set_sym(3, 3, frac(n13, vec![d1.clone(), d2.clone()]));
    a.set_sym(3, 4, RatExpr::zero());
    a.set_sym(4, 4, frac(n11, vec![d2, d3]));
    a
}

/// The raw coefficient matrix assembled from the twice-differentiated
/// equation: the six-variable form in
/// (v₁₁₄, v₂₂₄, v₃₃₄, v₁₃₄, v₁₂₄, v₂₃₄), with v₂₂₄ then eliminated through
/// the differentiated-equation relation
///
/// ```text
/// v₂₂₄ = −(F¹¹/F²²)v₁₁₄ − (F³³/F²²)v₃₃₄ − (2F¹²/F²²)v₁₂₄ − (2F²³/F²²)v₂₃₄
/// ```
///
/// and the result halved to match the tabulated normalisation.
pub fn build_matrix_a_raw(f: &FExprs) -> RatMat {
    let d1 = pv(Var::D1);
    let d2 = pv(Var::D2);
    let d3 = pv(Var::D3);
    let two = pint(2);

    // six-variable form; entry (i,j) is half the cross coefficient
    let mut q = RatMat::zeros(6);
    q.set_sym(0, 0, frac(&two * &f.f11, vec![d1.clone()]));
    q.set_sym(1, 1, frac(&two * &f.f22, vec![d2.clone()]));
    q.set_sym(2, 2, frac(&two * &f.f33, vec![d3.clone()]));
    q.set_sym(
        3,
        3,
        frac(&two * &f.f33, vec![d1.clone()]).add(&frac(&two * &f.f11, vec![d3.clone()])),
    );
    q.set_sym(
        4,
        4,
        RatExpr::from_poly(pint(-2))
            .add(&frac(&two * &f.f22, vec![d1.clone()]))
            .add(&frac(&two * &f.f11, vec![d2.clone()])),
    );
    q.set_sym(
        5,
        5,
        RatExpr::from_poly(pint(-2))
            .add(&frac(&two * &f.f33, vec![d2.clone()]))
            .add(&frac(&two * &f.f22, vec![d3.clone()])),
    );
    q.set_sym(0, 1, RatExpr::from_poly(pint(1)));
    q.set_sym(1, 2, RatExpr::from_poly(pint(1)));
    q.set_sym(0, 4, frac(&two * &f.f12, vec![d1.clone()]));
    q.set_sym(1, 4, frac(&two * &f.f12, vec![d2.clone()]));
    q.set_sym(1, 5, frac(&two * &f.f23, vec![d2.clone()]));
    q.set_sym(2, 5, frac(&two * &f.f23, vec![d3.clone()]));
    q.set_sym(3, 4, frac(&two * &f.f23, vec![d1.clone()]));
    q.set_sym(3, 5, frac(&two * &f.f12, vec![d3]));

    // elimination coefficients for x₁ = Σ c_k y_k over the surviving slots
    // (y order: x₀, x₂, x₃, x₄, x₅)
    let c = [
        frac(f.f11.neg_ref(), vec![f.f22.clone()]),
        frac(f.f33.neg_ref(), vec![f.f22.clone()]),
        RatExpr::zero(),
        frac((&two * &f.f12).neg_ref(), vec![f.f22.clone()]),
        frac((&two * &f.f23).neg_ref(), vec![f.f22.clone()]),
    ];
    let keep = [0usize, 2, 3, 4, 5];

    let mut out = RatMat::zeros(QDIM);
    for a in 0..QDIM {
        for b in a..QDIM {
            let ka = keep[a];
            let kb = keep[b];
            let entry = q
                .get(ka, kb)
                .add(&q.get(ka, 1).mul(&c[b]))
                .add(&q.get(kb, 1).mul(&c[a]))
                .add(&q.get(1, 1).mul(&c[a]).mul(&c[b]))
                .div_int(2);
            out.set_sym(a, b, entry);
        }
    }
    out
}

/// The congruence matrix S: identity plus the two recorded column
/// operations (column 1 scaled into column 4, column 2 into column 5, in
/// the tabulated variable order).
pub fn congruence_s(f: &FExprs) -> RatMat {
    let mut s = RatMat::zeros(QDIM);
    for i in 0..QDIM {
        s.set(i, i, RatExpr::from_poly(PolyExpr::one()));
    }
    s.set(0, 3, RatExpr::new(f.f12.neg_ref(), f.f11.clone()));
    s.set(1, 4, RatExpr::new(f.f23.neg_ref(), f.f11.clone()));
    s
}

/// S⁻¹ — the same nilpotent pattern with flipped signs.
pub fn congruence_s_inv(f: &FExprs) -> RatMat {
    let mut s = RatMat::zeros(QDIM);
    for i in 0..QDIM {
        s.set(i, i, RatExpr::from_poly(PolyExpr::one()));
    }
    s.set(0, 3, RatExpr::new(f.f12.clone(), f.f11.clone()));
    s.set(1, 4, RatExpr::new(f.f23.clone(), f.f11.clone()));
    s
}

/// The tabulated 2×2 block A₁.
pub fn block_a1(f: &FExprs) -> [[RatExpr; 2]; 2] {
    let g2 = grad_sq_24();
    let d1 = pv(Var::D1);
    let d2 = pv(Var::D2);
    let d3 = pv(Var::D3);
    let off = frac(
        (&f.f11 * &g2).neg_ref(),
        vec![f.f22.clone(), d2.clone()],
    );
    [
        [
            frac(
                &f.f11 * &g2_d_plus_lam(Var::D3),
                vec![f.f22.clone(), d2.clone(), d1],
            ),
            off.clone(),
        ],
        [
            off,
            frac(
                &f.f33 * &g2_d_plus_lam(Var::D1),
                vec![f.f22.clone(), d2, d3],
            ),
        ],
    ]
}

/// The tabulated 3×3 block A₂.
pub fn block_a2(f: &FExprs) -> [[RatExpr; 3]; 3] {
    let g1 = super::regime::grad_sq_13();
    let g2 = grad_sq_24();
    let d1 = pv(Var::D1);
    let d2 = pv(Var::D2);
    let d3 = pv(Var::D3);
    let w12 = &(&f.f11 * &f.f22) - &(&f.f12 * &f.f12);
    let w23 = &(&f.f22 * &f.f33) - &(&f.f23 * &f.f23);

    let e00 = frac(
        &(&g1 * &d2) + &pv(Var::Lam),
        vec![d1.clone(), d3.clone()],
    );
    let e01 = frac(f.f23.clone(), vec![d1.clone()]);
    let e02 = frac(f.f12.clone(), vec![d3.clone()]);
    let e11 = frac(
        &w12 * &g2_d_plus_lam(Var::D3),
        vec![f.f11.clone(), d1, f.f22.clone(), d2.clone()],
    );
    let e12 = frac(
        &(&f.f12 * &f.f23) * &g2,
        vec![f.f22.clone(), d2.clone(), f.f11.clone()],
    );
    let e22 = frac(
        &w23 * &g2_d_plus_lam(Var::D1),
        vec![f.f22.clone(), d2, f.f33.clone(), d3],
    );
    [
        [e00, e01.clone(), e02.clone()],
        [e01, e11, e12.clone()],
        [e02, e12, e22],
    ]
}

/// Leading principal minors of A₁: (P₁, P₂).
pub fn minors_a1(a1: &[[RatExpr; 2]; 2]) -> (RatExpr, RatExpr) {
    (a1[0][0].clone(), det2(a1))
}

/// Leading principal minors of A₂: (P₁, P₂, P₃).
pub fn minors_a2(a2: &[[RatExpr; 3]; 3]) -> (RatExpr, RatExpr, RatExpr) {
    let p2 = det2(&[
        [a2[0][0].clone(), a2[0][1].clone()],
        [a2[1][0].clone(), a2[1][1].clone()],
    ]);
    (a2[0][0].clone(), p2, det3(a2))
}
