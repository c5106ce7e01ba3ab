//! Rational functions as numerator/denominator pairs.
//!
//! Equality is decided by cross-multiplication, a/b = c/d ⟺ ad − cb = 0,
//! with no gcd normalisation. Denominators are kept as a multiset of small
//! factor polynomials (the tabulated entries only ever divide by products
//! of d₁, d₂, d₃ and the diagonal F's); shared factors are cancelled
//! before cross-multiplying, which keeps the zero checks cheap without
//! changing their meaning over an integral domain.

use super::poly::{PolyExpr, NVARS};
use super::regime::Regime;
use num::rational::BigRational;
use num::traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatExpr {
    num: PolyExpr,
    /// denominator factors, sorted for canonical form; empty = 1
    den: Vec<PolyExpr>,
}

impl RatExpr {
    /// Builds num/den; the denominator must be a nonzero polynomial.
    pub fn new(num: PolyExpr, den: PolyExpr) -> Self {
        Self::from_factors(num, vec![den])
    }

    /// Builds num / Π factors.
    pub fn from_factors(num: PolyExpr, factors: Vec<PolyExpr>) -> Self {
        let mut den: Vec<PolyExpr> = Vec::new();
        for f in factors {
            assert!(!f.is_zero(), "RatExpr denominator factor is zero");
            if f != PolyExpr::one() {
                den.push(f);
            }
        }
        den.sort();
        RatExpr { num, den }
    }

    pub fn from_poly(p: PolyExpr) -> Self {
        RatExpr {
            num: p,
            den: Vec::new(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(PolyExpr::zero())
    }

    pub fn num(&self) -> &PolyExpr {
        &self.num
    }

    /// The denominator as an expanded polynomial.
    pub fn den(&self) -> PolyExpr {
        let mut out = PolyExpr::one();
        for f in &self.den {
            out = out.mul_ref(f);
        }
        out
    }

    pub fn is_zero_poly(&self) -> bool {
        self.num.is_zero()
    }

    /// Splits the two denominators into (shared, only-self, only-other) by
    /// syntactic factor identity.
    fn split_factors(&self, other: &RatExpr) -> (Vec<PolyExpr>, Vec<PolyExpr>, Vec<PolyExpr>) {
        let mut shared = Vec::new();
        let mut left = self.den.clone();
        let mut right: Vec<Option<PolyExpr>> = other.den.iter().cloned().map(Some).collect();
        let mut only_left = Vec::new();
        for f in left.drain(..) {
            if let Some(slot) = right.iter_mut().find(|s| s.as_deref_eq(&f)) {
                *slot = None;
                shared.push(f);
            } else {
                only_left.push(f);
            }
        }
        let only_right: Vec<PolyExpr> = right.into_iter().flatten().collect();
        (shared, only_left, only_right)
    }

    pub fn add(&self, other: &RatExpr) -> RatExpr {
        let (shared, mine, theirs) = self.split_factors(other);
        let mut num_l = self.num.clone();
        for f in &theirs {
            num_l = num_l.mul_ref(f);
        }
        let mut num_r = other.num.clone();
        for f in &mine {
            num_r = num_r.mul_ref(f);
        }
        let mut den = shared;
        den.extend(mine);
        den.extend(theirs);
        den.sort();
        RatExpr {
            num: num_l.add_ref(&num_r),
            den,
        }
    }

    pub fn sub(&self, other: &RatExpr) -> RatExpr {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatExpr) -> RatExpr {
        let mut den = self.den.clone();
        den.extend(other.den.iter().cloned());
        den.sort();
        RatExpr {
            num: self.num.mul_ref(&other.num),
            den,
        }
    }

    pub fn neg(&self) -> RatExpr {
        RatExpr {
            num: self.num.neg_ref(),
            den: self.den.clone(),
        }
    }

    /// Multiplies the denominator by a constant k ≠ 0.
    pub fn div_int(&self, k: i64) -> RatExpr {
        let mut den = self.den.clone();
        den.push(PolyExpr::from_int(k));
        den.sort();
        RatExpr {
            num: self.num.clone(),
            den,
        }
    }

    /// Cross-multiplied equality as plain polynomials (shared denominator
    /// factors cancelled first; sound over an integral domain).
    pub fn eq_cross(&self, other: &RatExpr) -> bool {
        let (_, mine, theirs) = self.split_factors(other);
        let mut lhs = self.num.clone();
        for f in &theirs {
            lhs = lhs.mul_ref(f);
        }
        let mut rhs = other.num.clone();
        for f in &mine {
            rhs = rhs.mul_ref(f);
        }
        lhs.sub_ref(&rhs).is_zero()
    }

    /// Cross-multiplied difference normalised under a regime; `None` when a
    /// denominator factor collapses to zero under the substitution (the
    /// comparison is then meaningless and callers must treat it as failure).
    pub fn eq_under(&self, other: &RatExpr, regime: &Regime) -> Option<bool> {
        for f in self.den.iter().chain(other.den.iter()) {
            if regime.normalize(f).is_zero() {
                return None;
            }
        }
        let (_, mine, theirs) = self.split_factors(other);
        let mut lhs = regime.normalize(&self.num);
        for f in &theirs {
            lhs = lhs.mul_ref(&regime.normalize(f));
        }
        let mut rhs = regime.normalize(&other.num);
        for f in &mine {
            rhs = rhs.mul_ref(&regime.normalize(f));
        }
        Some(lhs.sub_ref(&rhs).is_zero())
    }

    /// The numerator normalised under a regime vanishes (with all
    /// denominator factors staying nonzero).
    pub fn is_zero_under(&self, regime: &Regime) -> Option<bool> {
        for f in &self.den {
            if regime.normalize(f).is_zero() {
                return None;
            }
        }
        Some(regime.normalize(&self.num).is_zero())
    }

    /// Exact evaluation; `None` when the denominator vanishes at the point.
    pub fn eval(&self, point: &[BigRational; NVARS]) -> Option<BigRational> {
        let mut den = BigRational::one();
        for f in &self.den {
            let v = f.eval(point);
            if v.is_zero() {
                return None;
            }
            den *= v;
        }
        Some(self.num.eval(point) / den)
    }
}

trait DerefEq {
    fn as_deref_eq(&self, f: &PolyExpr) -> bool;
}

impl DerefEq for Option<PolyExpr> {
    fn as_deref_eq(&self, f: &PolyExpr) -> bool {
        matches!(self, Some(g) if g == f)
    }
}

/// 2×2 determinant of rational-function entries.
pub fn det2(m: &[[RatExpr; 2]; 2]) -> RatExpr {
    m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0]))
}

/// 3×3 determinant by cofactor expansion.
pub fn det3(m: &[[RatExpr; 3]; 3]) -> RatExpr {
    let c0 = m[1][1].mul(&m[2][2]).sub(&m[1][2].mul(&m[2][1]));
    let c1 = m[1][0].mul(&m[2][2]).sub(&m[1][2].mul(&m[2][0]));
    let c2 = m[1][0].mul(&m[2][1]).sub(&m[1][1].mul(&m[2][0]));
    m[0][0]
        .mul(&c0)
        .sub(&m[0][1].mul(&c1))
        .add(&m[0][2].mul(&c2))
}

#[cfg(test)]
mod tests {
    use super::super::poly::{pv, Var};
    use super::*;

    #[test]
    fn cross_equality_without_gcd() {
        // (d1·v1)/(d1·d2) equals v1/d2 without any gcd computation
        let a = RatExpr::from_factors(
            &pv(Var::D1) * &pv(Var::V1),
            vec![pv(Var::D1), pv(Var::D2)],
        );
        let b = RatExpr::new(pv(Var::V1), pv(Var::D2));
        assert!(a.eq_cross(&b));
        assert!(!a.eq_cross(&RatExpr::new(pv(Var::V2), pv(Var::D2))));
    }

    #[test]
    fn arithmetic() {
        let half_v1 = RatExpr::new(pv(Var::V1), PolyExpr::from_int(2));
        let sum = half_v1.add(&half_v1);
        assert!(sum.eq_cross(&RatExpr::from_poly(pv(Var::V1))));
        let prod = half_v1.mul(&RatExpr::from_poly(PolyExpr::from_int(2)));
        assert!(prod.eq_cross(&RatExpr::from_poly(pv(Var::V1))));
        let diff = half_v1.sub(&half_v1);
        assert!(diff.is_zero_poly());
    }

    #[test]
    fn shared_factor_cancellation_in_add() {
        // v1/(d1 d2) + v2/(d1 d3) keeps a single d1 in the denominator
        let a = RatExpr::from_factors(pv(Var::V1), vec![pv(Var::D1), pv(Var::D2)]);
        let b = RatExpr::from_factors(pv(Var::V2), vec![pv(Var::D1), pv(Var::D3)]);
        let sum = a.add(&b);
        let expect = RatExpr::from_factors(
            &(&pv(Var::V1) * &pv(Var::D3)) + &(&pv(Var::V2) * &pv(Var::D2)),
            vec![pv(Var::D1), pv(Var::D2), pv(Var::D3)],
        );
        assert!(sum.eq_cross(&expect));
        assert_eq!(sum.den(), expect.den());
    }
}
