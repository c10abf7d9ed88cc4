//! Complex adjoint embedding of quaternion matrices.
//!
//! Each scalar `q = z1 + z2 j` (Cayley-Dickson split in the `{1, i}` plane)
//! maps to the 2x2 complex block
//!
//! ```text
//!   [  z1   z2  ]
//!   [ -z2*  z1* ]
//! ```
//!
//! and an `r x c` quaternion matrix maps to the `2r x 2c` complex matrix of
//! those blocks. The map is a ring homomorphism and commutes with the
//! Hermitian transpose, which is what lets the complex eigenvalue and
//! singular value kernels drive all quaternion factorisations. Every
//! eigen/singular value of the embedded matrix appears with even multiplicity;
//! column pairs `(2m, 2m+1)` carry the two copies.

use num_complex::Complex64;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::matrix::QuatMatrix;
use crate::quat::{cayley_dickson_join, cayley_dickson_split, Axis, Quaternion};

/// Dense complex matrix, row-major. Only used as the decomposition workspace.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        ComplexMatrix { rows, cols, data: vec![Complex64::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::ONE;
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn matmul(&self, rhs: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a == Complex64::ZERO {
                    continue;
                }
                for c in 0..rhs.cols {
                    out[(r, c)] += a * rhs[(k, c)];
                }
            }
        }
        Ok(out)
    }

    pub fn hermitian(&self) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)].conj();
            }
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn column(&self, c: usize) -> Vec<Complex64> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

/// Embed a quaternion matrix as its `2r x 2c` complex adjoint.
pub fn to_complex_adjoint(a: &QuatMatrix) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(2 * a.rows(), 2 * a.cols());
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            let (z1, z2) = cayley_dickson_split(a[(r, c)], Axis::I, Axis::J)
                .expect("fixed distinct axes");
            out[(2 * r, 2 * c)] = z1;
            out[(2 * r, 2 * c + 1)] = z2;
            out[(2 * r + 1, 2 * c)] = -z2.conj();
            out[(2 * r + 1, 2 * c + 1)] = z1.conj();
        }
    }
    out
}

/// Invert the adjoint embedding, validating the block structure.
pub fn from_complex_adjoint(m: &ComplexMatrix) -> Result<QuatMatrix> {
    if m.rows() % 2 != 0 || m.cols() % 2 != 0 {
        return Err(Error::NotAdjoint(format!(
            "dimensions {}x{} are not even",
            m.rows(),
            m.cols()
        )));
    }
    let scale = m.frobenius_norm().max(1e-300);
    let tol = 1e-10 * scale;
    let mut defect_sq = 0.0;
    let mut out = QuatMatrix::zeros(m.rows() / 2, m.cols() / 2);
    for r in 0..out.rows() {
        for c in 0..out.cols() {
            let m00 = m[(2 * r, 2 * c)];
            let m01 = m[(2 * r, 2 * c + 1)];
            let m10 = m[(2 * r + 1, 2 * c)];
            let m11 = m[(2 * r + 1, 2 * c + 1)];
            defect_sq += (m00 - m11.conj()).norm_sqr() + (m01 + m10.conj()).norm_sqr();
            let z1 = (m00 + m11.conj()) * 0.5;
            let z2 = (m01 - m10.conj()) * 0.5;
            out[(r, c)] = cayley_dickson_join(z1, z2, Axis::I, Axis::J)
                .expect("fixed distinct axes");
        }
    }
    if defect_sq.sqrt() > tol {
        return Err(Error::NotAdjoint(format!(
            "block structure defect {:.3e} exceeds {:.3e}",
            defect_sq.sqrt(),
            tol
        )));
    }
    Ok(out)
}

/// Rebuild one quaternion column from a complex column of the adjoint.
///
/// Entry `m` of the result is `u[2m] - conj(u[2m+1]) j`, the inverse of the
/// first-column convention in the per-scalar block.
pub(crate) fn collapse_column(u: &[Complex64]) -> Vec<Quaternion> {
    debug_assert!(u.len() % 2 == 0);
    (0..u.len() / 2)
        .map(|m| {
            cayley_dickson_join(u[2 * m], -u[2 * m + 1].conj(), Axis::I, Axis::J)
                .expect("fixed distinct axes")
        })
        .collect()
}
