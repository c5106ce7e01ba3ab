//! Elementary symmetric function calculus on 4×4 diagonal Hessians and the
//! quotient auxiliary function φ = σ_{l+1} + q.
//!
//! Everything here is fixed at n = 4. Conventions: σ₀ = 1 and
//! σ₋₁ = σ₅ = 0. `σ_k(λ|i)` means σ_k with the i-th eigenvalue zeroed.

use thiserror::Error;

/// Number of eigenvalues; the whole crate works in R⁴.
pub const N: usize = 4;

#[derive(Debug, Error, PartialEq)]
pub enum SymfunError {
    #[error("symmetric function order {0} outside supported range -1..=5")]
    InvalidOrder(i32),
    #[error("eigenvalue index {0} outside 0..4")]
    IndexOutOfRange(usize),
    #[error("at most two eigenvalues may be excluded, got {0}")]
    TooManyExclusions(usize),
    #[error("rank parameter {0} not in {{2, 3}}")]
    InvalidRank(usize),
    #[error("sigma_{0} is negative; spectrum is outside the convex-solution regime")]
    NegativeSigma(usize),
    #[error("derivative of q undefined where sigma_{0} vanishes")]
    DerivativeUndefined(usize),
}

/// Ordered spectrum of a symmetric 4×4 matrix, sorted descending.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spectrum {
    values: [f64; N],
}

impl Spectrum {
    /// Builds a spectrum, sorting the entries into descending order.
    pub fn new(mut values: [f64; N]) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues must not be NaN"));
        Spectrum { values }
    }

    pub fn values(&self) -> &[f64; N] {
        &self.values
    }

    pub fn get(&self, i: usize) -> f64 {
        self.values[i]
    }
}

fn check_index(i: usize) -> Result<(), SymfunError> {
    if i < N {
        Ok(())
    } else {
        Err(SymfunError::IndexOutOfRange(i))
    }
}

fn sigma_of(values: &[f64], k: i32) -> f64 {
    match k {
        -1 => 0.0,
        0 => 1.0,
        k if k as usize > values.len() => 0.0,
        k => {
            // Elementary symmetric polynomial via the product recurrence
            // Π(1 + λ_i t); e[j] tracks the degree-j coefficient.
            let k = k as usize;
            let mut e = vec![0.0; k + 1];
            e[0] = 1.0;
            for &v in values {
                for j in (1..=k).rev() {
                    e[j] += v * e[j - 1];
                }
            }
            e[k]
        }
    }
}

/// k-th elementary symmetric function of the spectrum; σ₀ = 1, σ₅ = 0.
pub fn sigma(spec: &Spectrum, k: i32) -> Result<f64, SymfunError> {
    if !(-1..=5).contains(&k) {
        return Err(SymfunError::InvalidOrder(k));
    }
    Ok(sigma_of(&spec.values, k))
}

/// σ_k with the excluded eigenvalues set to zero (σ_k(A|i), σ_k(A|ij)).
///
/// Indices are 0-based; at most two exclusions are supported.
pub fn sigma_excluding(spec: &Spectrum, k: i32, excluded: &[usize]) -> Result<f64, SymfunError> {
    if excluded.len() > 2 {
        return Err(SymfunError::TooManyExclusions(excluded.len()));
    }
    if !(-1..=5).contains(&k) {
        return Err(SymfunError::InvalidOrder(k));
    }
    for &i in excluded {
        check_index(i)?;
    }
    let mut vals = spec.values;
    for &i in excluded {
        vals[i] = 0.0;
    }
    Ok(sigma_of(&vals, k))
}

/// ∂σ_k(A)/∂A_{ij} at a diagonal matrix: σ_{k−1}(A|i) when i = j, else 0.
pub fn dsigma(diag: &Spectrum, k: i32, i: usize, j: usize) -> Result<f64, SymfunError> {
    check_index(i)?;
    check_index(j)?;
    if i == j {
        sigma_excluding(diag, k - 1, &[i])
    } else {
        Ok(0.0)
    }
}

/// ∂²σ_k(A)/∂A_{ij}∂A_{pq} at a diagonal matrix.
///
/// Three cases: σ_{k−2}(A|ip) for (i=j, p=q, i≠p), −σ_{k−2}(A|ip) for
/// (i=q, j=p, i≠p), and zero otherwise.
pub fn d2sigma(
    diag: &Spectrum,
    k: i32,
    i: usize,
    j: usize,
    p: usize,
    q: usize,
) -> Result<f64, SymfunError> {
    for idx in [i, j, p, q] {
        check_index(idx)?;
    }
    if i == j && p == q && i != p {
        sigma_excluding(diag, k - 2, &[i, p])
    } else if i == q && j == p && i != p {
        Ok(-sigma_excluding(diag, k - 2, &[i, p])?)
    } else {
        Ok(0.0)
    }
}

fn check_rank(l: usize) -> Result<(), SymfunError> {
    if l == 2 || l == 3 {
        Ok(())
    } else {
        Err(SymfunError::InvalidRank(l))
    }
}

/// Quotient q = σ_{l+2}/σ_{l+1} when σ_{l+1} > 0, exactly 0 when σ_{l+1} = 0.
pub fn q_value(diag: &Spectrum, l: usize) -> Result<f64, SymfunError> {
    check_rank(l)?;
    let s1 = sigma(diag, (l + 1) as i32)?;
    if s1 < 0.0 {
        return Err(SymfunError::NegativeSigma(l + 1));
    }
    if s1 == 0.0 {
        return Ok(0.0);
    }
    Ok(sigma(diag, (l + 2) as i32)? / s1)
}

/// φ = σ_{l+1} + q, the quotient-type auxiliary function.
pub fn phi_value(diag: &Spectrum, l: usize) -> Result<f64, SymfunError> {
    Ok(sigma(diag, (l + 1) as i32)? + q_value(diag, l)?)
}

/// Exact quotient-rule derivative ∂q/∂v_{ii} at a diagonal state.
///
/// Defined only where σ_{l+1} > 0; the q = 0 branch is not differentiable
/// and callers must stay away from it.
pub fn dq_exact(diag: &Spectrum, l: usize, i: usize) -> Result<f64, SymfunError> {
    check_rank(l)?;
    check_index(i)?;
    let s1 = sigma(diag, (l + 1) as i32)?;
    if s1 < 0.0 {
        return Err(SymfunError::NegativeSigma(l + 1));
    }
    if s1 == 0.0 {
        return Err(SymfunError::DerivativeUndefined(l + 1));
    }
    let s2 = sigma(diag, (l + 2) as i32)?;
    let ds1 = sigma_excluding(diag, l as i32, &[i])?;
    let ds2 = sigma_excluding(diag, (l + 1) as i32, &[i])?;
    Ok((ds2 * s1 - s2 * ds1) / (s1 * s1))
}
