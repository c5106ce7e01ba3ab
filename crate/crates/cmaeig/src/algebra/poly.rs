//! Sparse multivariate polynomials over exact rationals.
//!
//! The variable universe is fixed: (v₁, v₂, v₃, v₄, d₁, d₂, d₃, d₄, lam),
//! where dᵢ stands for the diagonal Hessian entry v_{ii} and lam for the
//! eigenvalue constant. Off-diagonal Hessian symbols never appear: every
//! identity verified here is stated in a frame where ∇²v is diagonal.

use num::rational::BigRational;
use num::traits::{One, Zero};
use num::BigInt;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Number of variables in the fixed universe.
pub const NVARS: usize = 9;

/// The fixed variable universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Var {
    V1,
    V2,
    V3,
    V4,
    D1,
    D2,
    D3,
    D4,
    Lam,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::V1,
        Var::V2,
        Var::V3,
        Var::V4,
        Var::D1,
        Var::D2,
        Var::D3,
        Var::D4,
        Var::Lam,
    ];

    pub fn index(self) -> usize {
        match self {
            Var::V1 => 0,
            Var::V2 => 1,
            Var::V3 => 2,
            Var::V4 => 3,
            Var::D1 => 4,
            Var::D2 => 5,
            Var::D3 => 6,
            Var::D4 => 7,
            Var::Lam => 8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::V1 => "v1",
            Var::V2 => "v2",
            Var::V3 => "v3",
            Var::V4 => "v4",
            Var::D1 => "d1",
            Var::D2 => "d2",
            Var::D3 => "d3",
            Var::D4 => "d4",
            Var::Lam => "lam",
        }
    }
}

/// Exponent vector; always exactly [`NVARS`] slots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Mono([u8; NVARS]);

impl Mono {
    pub fn one() -> Self {
        Mono([0; NVARS])
    }

    pub fn var(v: Var) -> Self {
        let mut m = [0; NVARS];
        m[v.index()] = 1;
        Mono(m)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut m = [0; NVARS];
        for i in 0..NVARS {
            m[i] = self.0[i].checked_add(other.0[i]).expect("exponent overflow");
        }
        Mono(m)
    }

    pub fn exps(&self) -> &[u8; NVARS] {
        &self.0
    }
}

/// Sparse polynomial in canonical form: no stored zero coefficients, so
/// equality of term maps is equality of polynomials.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct PolyExpr {
    terms: BTreeMap<Mono, BigRational>,
}

impl PolyExpr {
    pub fn zero() -> Self {
        PolyExpr::default()
    }

    pub fn one() -> Self {
        PolyExpr::from_int(1)
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = PolyExpr::default();
        if !c.is_zero() {
            p.terms.insert(Mono::one(), c);
        }
        p
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(v: Var) -> Self {
        let mut p = PolyExpr::default();
        p.terms.insert(Mono::var(v), BigRational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert_term(&mut self, m: Mono, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_ref(&self, other: &PolyExpr) -> PolyExpr {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(*m, c.clone());
        }
        out
    }

    pub fn sub_ref(&self, other: &PolyExpr) -> PolyExpr {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(*m, -c.clone());
        }
        out
    }

    pub fn mul_ref(&self, other: &PolyExpr) -> PolyExpr {
        let mut out = PolyExpr::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn neg_ref(&self) -> PolyExpr {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> PolyExpr {
        if c.is_zero() {
            return PolyExpr::zero();
        }
        let mut out = self.clone();
        for coeff in out.terms.values_mut() {
            *coeff = &*coeff * c;
        }
        out
    }

    pub fn pow(&self, e: u32) -> PolyExpr {
        let mut out = PolyExpr::one();
        for _ in 0..e {
            out = out.mul_ref(self);
        }
        out
    }

    /// Exact evaluation at a full assignment of the 9 variables.
    pub fn eval(&self, point: &[BigRational; NVARS]) -> BigRational {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    term *= &point[i];
                }
            }
            total += term;
        }
        total
    }

    /// Simultaneous substitution of variables by polynomials. Variables not
    /// in the map are left untouched.
    pub fn substitute(&self, subs: &BTreeMap<Var, PolyExpr>) -> PolyExpr {
        let mut pow_cache: BTreeMap<(Var, u8), PolyExpr> = BTreeMap::new();
        let mut out = PolyExpr::zero();
        for (m, c) in &self.terms {
            let mut residual = [0u8; NVARS];
            let mut factor = PolyExpr::one();
            for v in Var::ALL {
                let e = m.exps()[v.index()];
                if e == 0 {
                    continue;
                }
                if let Some(rep) = subs.get(&v) {
                    let p = pow_cache
                        .entry((v, e))
                        .or_insert_with(|| rep.pow(e as u32))
                        .clone();
                    factor = factor.mul_ref(&p);
                } else {
                    residual[v.index()] = e;
                }
            }
            let mut term = PolyExpr::default();
            term.terms.insert(Mono(residual), c.clone());
            out = out.add_ref(&term.mul_ref(&factor));
        }
        out
    }
}

impl fmt::Display for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for v in Var::ALL {
                let e = m.exps()[v.index()];
                if e == 1 {
                    write!(f, "*{}", v.name())?;
                } else if e > 1 {
                    write!(f, "*{}^{}", v.name(), e)?;
                }
            }
        }
        Ok(())
    }
}

impl Add for &PolyExpr {
    type Output = PolyExpr;
    fn add(self, rhs: &PolyExpr) -> PolyExpr {
        self.add_ref(rhs)
    }
}

impl Sub for &PolyExpr {
    type Output = PolyExpr;
    fn sub(self, rhs: &PolyExpr) -> PolyExpr {
        self.sub_ref(rhs)
    }
}

impl Mul for &PolyExpr {
    type Output = PolyExpr;
    fn mul(self, rhs: &PolyExpr) -> PolyExpr {
        self.mul_ref(rhs)
    }
}

impl Neg for &PolyExpr {
    type Output = PolyExpr;
    fn neg(self) -> PolyExpr {
        self.neg_ref()
    }
}

/// Shorthand constructors used throughout the identity catalogue.
pub fn pv(v: Var) -> PolyExpr {
    PolyExpr::var(v)
}

pub fn pint(n: i64) -> PolyExpr {
    PolyExpr::from_int(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::rational::BigRational;
    use num::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn ring_identities() {
        let v1 = pv(Var::V1);
        let v2 = pv(Var::V2);
        let prod = &(&v1 + &v2) * &(&v1 - &v2);
        let expect = &(&v1 * &v1) - &(&v2 * &v2);
        assert_eq!(prod, expect);

        let p = &(&v1 * &v2) + &pint(3);
        assert!(p.sub_ref(&p).is_zero());
        assert_eq!(p.sub_ref(&p).num_terms(), 0);
    }

    #[test]
    fn eval_exact() {
        // v1^2 + d1 at v1 = 1/2, d1 = 3 → 13/4
        let p = &(&pv(Var::V1) * &pv(Var::V1)) + &pv(Var::D1);
        let mut point: [BigRational; NVARS] = Default::default();
        point[Var::V1.index()] = rat(1, 2);
        point[Var::D1.index()] = rat(3, 1);
        assert_eq!(p.eval(&point), rat(13, 4));
    }

    #[test]
    fn substitution() {
        // lam → d1*d2 inside lam² + v1·lam
        let lam = pv(Var::Lam);
        let p = &(&lam * &lam) + &(&pv(Var::V1) * &lam);
        let mut subs = BTreeMap::new();
        subs.insert(Var::Lam, &pv(Var::D1) * &pv(Var::D2));
        let q = p.substitute(&subs);
        let d1d2 = &pv(Var::D1) * &pv(Var::D2);
        let expect = &(&d1d2 * &d1d2) + &(&pv(Var::V1) * &d1d2);
        assert_eq!(q, expect);
    }
}
