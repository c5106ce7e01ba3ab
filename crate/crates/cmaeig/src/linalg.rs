//! Small fixed-size symmetric matrix helpers: upper-triangle storage for 4×4
//! symmetric matrices and a cyclic Jacobi eigensolver.

/// Symmetric 4×4 matrix stored as the upper triangle (10 slots, row-major:
/// (0,0),(0,1),(0,2),(0,3),(1,1),(1,2),(1,3),(2,2),(2,3),(3,3)).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SymMat4 {
    upper: [f64; 10],
}

const IDX: [[usize; 4]; 4] = [
    [0, 1, 2, 3],
    [1, 4, 5, 6],
    [2, 5, 7, 8],
    [3, 6, 8, 9],
];

impl SymMat4 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::from_diagonal([1.0; 4])
    }

    pub fn from_diagonal(d: [f64; 4]) -> Self {
        let mut m = Self::default();
        for i in 0..4 {
            m.set(i, i, d[i]);
        }
        m
    }

    /// Builds from the 10 upper-triangle entries in row-major order.
    pub fn from_upper(upper: [f64; 10]) -> Self {
        SymMat4 { upper }
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.upper[IDX[i][j]]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.upper[IDX[i][j]] = value;
    }

    pub fn upper(&self) -> &[f64; 10] {
        &self.upper
    }

    pub fn scale(&self, c: f64) -> SymMat4 {
        SymMat4 {
            upper: self.upper.map(|v| c * v),
        }
    }

    pub fn add(&self, other: &SymMat4) -> SymMat4 {
        let mut upper = self.upper;
        for (a, b) in upper.iter_mut().zip(other.upper.iter()) {
            *a += b;
        }
        SymMat4 { upper }
    }

    /// Rank-one update self + c·v·vᵀ.
    pub fn add_outer(&self, v: &[f64; 4], c: f64) -> SymMat4 {
        let mut m = *self;
        for i in 0..4 {
            for j in i..4 {
                m.set(i, j, m.get(i, j) + c * v[i] * v[j]);
            }
        }
        m
    }

    pub fn to_dense(&self) -> [[f64; 4]; 4] {
        let mut a = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                a[i][j] = self.get(i, j);
            }
        }
        a
    }

    /// Eigenvalues in descending order.
    pub fn eigenvalues(&self) -> [f64; 4] {
        jacobi_eigenvalues(self.to_dense())
    }
}

/// Eigenvalues of a symmetric 4×4 matrix by cyclic Jacobi rotations,
/// returned descending.
pub fn jacobi_eigenvalues(mut a: [[f64; 4]; 4]) -> [f64; 4] {
    let n = 4;
    let norm: f64 = a.iter().flatten().map(|v| v * v).sum::<f64>().sqrt();
    let tol = 1e-15 * norm.max(1.0);
    for _sweep in 0..64 {
        let mut off = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off += a[p][q].abs();
            }
        }
        if off <= tol {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() <= tol * 1e-2 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eigs = [a[0][0], a[1][1], a[2][2], a[3][3]];
    eigs.sort_by(|x, y| y.total_cmp(x));
    eigs
}

/// Eigenvalues of a symmetric 2×2 matrix, descending.
pub fn sym2_eigenvalues(a: f64, b: f64, d: f64) -> [f64; 2] {
    let mean = 0.5 * (a + d);
    let disc = (0.25 * (a - d) * (a - d) + b * b).sqrt();
    [mean + disc, mean - disc]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha20Rng;

    #[test]
    fn storage_is_symmetric_by_construction() {
        let mut m = SymMat4::zero();
        m.set(0, 3, 2.5);
        assert_eq!(m.get(3, 0), 2.5);
        m.set(2, 1, -1.0);
        assert_eq!(m.get(1, 2), -1.0);
    }

    #[test]
    fn eigenvalues_of_diagonal() {
        let m = SymMat4::from_diagonal([4.0, -1.0, 2.0, 0.5]);
        let e = m.eigenvalues();
        assert_eq!(e, [4.0, 2.0, 0.5, -1.0]);
    }

    #[test]
    fn eigenvalues_reproduce_characteristic_invariants() {
        // trace and sum of pairwise products match matrix invariants
        let mut rng = ChaCha20Rng::seed_from_u64(3);
        for _ in 0..100 {
            let mut m = SymMat4::zero();
            for i in 0..4 {
                for j in i..4 {
                    m.set(i, j, rng.random_range(-2.0..2.0));
                }
            }
            let e = m.eigenvalues();
            let trace: f64 = (0..4).map(|i| m.get(i, i)).sum();
            assert_relative_eq!(e.iter().sum::<f64>(), trace, epsilon = 1e-10, max_relative = 1e-10);
            let mut s2m = 0.0;
            for i in 0..4 {
                for j in i + 1..4 {
                    s2m += m.get(i, i) * m.get(j, j) - m.get(i, j) * m.get(i, j);
                }
            }
            let mut s2e = 0.0;
            for i in 0..4 {
                for j in i + 1..4 {
                    s2e += e[i] * e[j];
                }
            }
            assert_relative_eq!(s2e, s2m, epsilon = 1e-9, max_relative = 1e-9);
        }
    }

    #[test]
    fn sym2_matches_jacobi_block() {
        let e = sym2_eigenvalues(2.0, 1.0, 3.0);
        let m = SymMat4::from_upper([2.0, 1.0, 0.0, 0.0, 3.0, 0.0, 0.0, 1e3, 0.0, -1e3]);
        let full = m.eigenvalues();
        assert_relative_eq!(full[1], e[0], max_relative = 1e-12);
        assert_relative_eq!(full[2], e[1], max_relative = 1e-12);
    }
}
