//! Dense complex matrices at desk scale.
//!
//! Row-major storage; matrices with zero rows or columns are first-class,
//! which the degenerate types containing `0` require. All the backends'
//! matrices are products of permutations, Hadamard blocks and unit phases, so
//! double precision with a max-entry tolerance is ample.

use num_complex::Complex64;
use std::fmt;

/// Default tolerance for all approximate matrix equalities.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> CMatrix {
        CMatrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> CMatrix {
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Complex64) -> CMatrix {
        let mut m = CMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds a matrix from rows of `(re, im)` pairs; panics on ragged input.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> CMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = CMatrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = *v;
            }
        }
        m
    }

    /// The permutation matrix sending basis vector `j` to basis vector
    /// `image[j]`.
    pub fn permutation(image: &[usize]) -> CMatrix {
        let n = image.len();
        let mut m = CMatrix::zeros(n, n);
        for (j, &i) in image.iter().enumerate() {
            assert!(i < n, "permutation image out of range");
            m[(i, j)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = CMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    /// Applies `self` to a column vector.
    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    /// Kronecker product with the left factor major: entry
    /// `((i1,i2),(j1,j2))` lands at `(i1*r2+i2, j1*c2+j2)`.
    pub fn kron(&self, other: &CMatrix) -> CMatrix {
        let mut out = CMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self[(i1, j1)];
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        out[(i1 * other.rows + i2, j1 * other.cols + j2)] = a * other[(i2, j2)];
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &CMatrix) -> CMatrix {
        let mut out = CMatrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)];
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out[(self.rows + i, self.cols + j)] = other[(i, j)];
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> CMatrix {
        CMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].conj())
    }

    pub fn scale(&self, s: Complex64) -> CMatrix {
        CMatrix::from_fn(self.rows, self.cols, |i, j| s * self[(i, j)])
    }

    pub fn add(&self, other: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        CMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] + other[(i, j)])
    }

    pub fn sub(&self, other: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        CMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] - other[(i, j)])
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    /// The submatrix keeping columns `0..k`.
    pub fn first_columns(&self, k: usize) -> CMatrix {
        assert!(k <= self.cols);
        CMatrix::from_fn(self.rows, k, |i, j| self[(i, j)])
    }

    /// Largest entrywise absolute difference; matrices of different shape are
    /// never close.
    pub fn max_diff(&self, other: &CMatrix) -> f64 {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return f64::INFINITY;
        }
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &CMatrix, tol: f64) -> bool {
        self.max_diff(other) <= tol
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|a| a.norm()).fold(0.0, f64::max)
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        self.is_square() && self.approx_eq(&CMatrix::identity(self.rows), tol)
    }

    /// Checks U†U = UU† = I.
    pub fn is_unitary(&self, tol: f64) -> bool {
        if !self.is_square() {
            return false;
        }
        let d = self.dagger();
        d.mul(self).is_identity(tol) && self.mul(&d).is_identity(tol)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square() && self.approx_eq(&self.dagger(), tol)
    }

    /// Eigenvalues of a Hermitian matrix, ascending.
    pub fn hermitian_eigenvalues(&self) -> Vec<f64> {
        assert!(self.is_square());
        if self.rows == 0 {
            return Vec::new();
        }
        let m = nalgebra::DMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)]);
        let mut ev: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
        ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
        ev
    }

    /// Positive semidefiniteness via an eigenvalue floor.
    pub fn is_psd(&self, tol: f64) -> bool {
        self.is_hermitian(tol)
            && self
                .hermitian_eigenvalues()
                .first()
                .map_or(true, |&lo| lo >= -tol)
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "{:+.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn mul_and_kron() {
        let x = CMatrix::permutation(&[1, 0]);
        let i2 = CMatrix::identity(2);
        assert!(x.mul(&x).is_identity(0.0));
        let xi = x.kron(&i2);
        // left-major: X ⊗ I swaps the high bit
        assert_eq!(xi[(2, 0)], c(1.0, 0.0));
        assert_eq!(xi[(0, 2)], c(1.0, 0.0));
        assert_eq!(xi[(3, 1)], c(1.0, 0.0));
    }

    #[test]
    fn zero_dim_algebra() {
        let a = CMatrix::zeros(0, 3);
        let b = CMatrix::zeros(3, 0);
        let p = b.mul(&a); // 3x3 zero
        assert_eq!((p.rows(), p.cols()), (3, 3));
        assert_eq!(p.max_abs(), 0.0);
        let q = a.mul(&b); // 0x0
        assert_eq!((q.rows(), q.cols()), (0, 0));
        assert!(q.is_unitary(0.0));
        let k = a.kron(&CMatrix::identity(2));
        assert_eq!((k.rows(), k.cols()), (0, 6));
        assert!(CMatrix::identity(0).is_identity(0.0));
    }

    #[test]
    fn direct_sum_blocks() {
        let x = CMatrix::permutation(&[1, 0]);
        let s = CMatrix::identity(1).direct_sum(&x);
        assert_eq!(s.rows(), 3);
        assert_eq!(s[(0, 0)], c(1.0, 0.0));
        assert_eq!(s[(1, 2)], c(1.0, 0.0));
        assert_eq!(s[(2, 1)], c(1.0, 0.0));
    }

    #[test]
    fn hermitian_eigenvalues_psd() {
        // diag(2, -1) is Hermitian but not PSD
        let mut m = CMatrix::zeros(2, 2);
        m[(0, 0)] = c(2.0, 0.0);
        m[(1, 1)] = c(-1.0, 0.0);
        let ev = m.hermitian_eigenvalues();
        assert!((ev[0] + 1.0).abs() < 1e-12 && (ev[1] - 2.0).abs() < 1e-12);
        assert!(!m.is_psd(1e-9));
        // a projector is PSD
        let mut p = CMatrix::zeros(2, 2);
        p[(0, 0)] = c(0.5, 0.0);
        p[(0, 1)] = c(0.0, -0.5);
        p[(1, 0)] = c(0.0, 0.5);
        p[(1, 1)] = c(0.5, 0.0);
        assert!(p.is_psd(1e-9));
    }

    #[test]
    fn dagger_of_product() {
        let h = CMatrix::from_rows(&[
            vec![c(0.5f64.sqrt(), 0.0), c(0.5f64.sqrt(), 0.0)],
            vec![c(0.5f64.sqrt(), 0.0), c(-(0.5f64.sqrt()), 0.0)],
        ]);
        let s = CMatrix::from_rows(&[vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(0.0, 0.0), c(0.0, 1.0)]]);
        let hs = h.mul(&s);
        assert!(hs.dagger().approx_eq(&s.dagger().mul(&h.dagger()), 1e-15));
        assert!(hs.is_unitary(1e-12));
    }
}
