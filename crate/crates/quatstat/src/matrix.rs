//! Dense quaternion vectors and matrices, row-major.
//!
//! The transpose here is the plain entry move with no conjugation, so for
//! quaternion matrices `(AB)^T != B^T A^T` in general while the Hermitian
//! transpose does reverse products, `(AB)^H = B^H A^H`. Involutions act
//! entrywise and distribute over products, `(AB)^alpha = A^alpha B^alpha`.

use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::quat::{Axis, Quaternion, Tolerance};

/// A quaternion column vector of length `>= 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuatVector {
    data: Vec<Quaternion>,
}

impl QuatVector {
    pub fn new(data: Vec<Quaternion>) -> Result<Self> {
        if data.is_empty() {
            return Err(Error::Domain("vector length must be at least 1".into()));
        }
        Ok(QuatVector { data })
    }

    pub fn zeros(len: usize) -> Result<Self> {
        Self::new(vec![Quaternion::zero(); len])
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.data.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn as_slice(&self) -> &[Quaternion] {
        &self.data
    }

    #[inline]
    pub fn as_mut_slice(&mut self) -> &mut [Quaternion] {
        &mut self.data
    }

    /// Inner product `<self, other> = sum conj(self_m) other_m`.
    pub fn dot(&self, other: &QuatVector) -> Result<Quaternion> {
        if self.len() != other.len() {
            return Err(Error::Shape(format!(
                "dot of lengths {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(dot_slices(&self.data, &other.data))
    }

    pub fn norm(&self) -> f64 {
        self.data.iter().map(|q| q.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scale_left(&self, s: Quaternion) -> QuatVector {
        QuatVector { data: self.data.iter().map(|&q| s * q).collect() }
    }

    /// Right scalar multiple `v * s`, the natural scaling for eigenvectors.
    pub fn scale_right(&self, s: Quaternion) -> QuatVector {
        QuatVector { data: self.data.iter().map(|&q| q * s).collect() }
    }
}

impl Index<usize> for QuatVector {
    type Output = Quaternion;
    #[inline]
    fn index(&self, i: usize) -> &Quaternion {
        &self.data[i]
    }
}

impl IndexMut<usize> for QuatVector {
    #[inline]
    fn index_mut(&mut self, i: usize) -> &mut Quaternion {
        &mut self.data[i]
    }
}

#[inline]
pub(crate) fn dot_slices(a: &[Quaternion], b: &[Quaternion]) -> Quaternion {
    let mut acc = Quaternion::zero();
    for (x, y) in a.iter().zip(b.iter()) {
        acc += x.conj() * *y;
    }
    acc
}

/// Dense quaternion matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct QuatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Quaternion>,
}

impl QuatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        QuatMatrix { rows, cols, data: vec![Quaternion::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Quaternion::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Quaternion) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Quaternion>]) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::Domain("matrix must have at least one entry".into()));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let data = rows.iter().flatten().copied().collect();
        Ok(QuatMatrix { rows: rows.len(), cols, data })
    }

    /// Real diagonal matrix.
    pub fn from_real_diag(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &v) in diag.iter().enumerate() {
            m[(i, i)] = Quaternion::from_real(v);
        }
        m
    }

    /// Rectangular diagonal with the given values on the main diagonal.
    pub fn rect_diag(rows: usize, cols: usize, diag: &[f64]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, &v) in diag.iter().enumerate().take(rows.min(cols)) {
            m[(i, i)] = Quaternion::from_real(v);
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

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn data(&self) -> &[Quaternion] {
        &self.data
    }

    pub fn matmul(&self, rhs: &QuatMatrix) -> Result<QuatMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = QuatMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a == Quaternion::zero() {
                    continue;
                }
                let lhs_row = r * rhs.cols;
                let rhs_row = k * rhs.cols;
                for c in 0..rhs.cols {
                    out.data[lhs_row + c] += a * rhs.data[rhs_row + c];
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &QuatVector) -> Result<QuatVector> {
        if self.cols != v.len() {
            return Err(Error::Shape(format!(
                "product of {}x{} and vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![Quaternion::zero(); self.rows];
        for r in 0..self.rows {
            let mut acc = Quaternion::zero();
            for c in 0..self.cols {
                acc += self[(r, c)] * v[c];
            }
            out[r] = acc;
        }
        QuatVector::new(out)
    }

    pub fn add(&self, rhs: &QuatMatrix) -> Result<QuatMatrix> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &QuatMatrix) -> Result<QuatMatrix> {
        self.zip_with(rhs, |a, b| a - b)
    }

    fn zip_with(
        &self,
        rhs: &QuatMatrix,
        f: impl Fn(Quaternion, Quaternion) -> Quaternion,
    ) -> Result<QuatMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Shape(format!(
                "elementwise op on {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(rhs.data.iter())
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(QuatMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, s: f64) -> QuatMatrix {
        self.map(|q| q.scale(s))
    }

    pub fn map(&self, f: impl Fn(Quaternion) -> Quaternion) -> QuatMatrix {
        QuatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&q| f(q)).collect(),
        }
    }

    /// Plain transpose, no conjugation.
    pub fn transpose(&self) -> QuatMatrix {
        QuatMatrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    /// Entrywise conjugate.
    pub fn conj(&self) -> QuatMatrix {
        self.map(|q| q.conj())
    }

    /// Hermitian transpose `A^H = (A^*)^T`.
    pub fn hermitian(&self) -> QuatMatrix {
        QuatMatrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    /// Entrywise involution `A^alpha`.
    pub fn involution(&self, axis: Axis) -> QuatMatrix {
        self.map(|q| q.involution(axis))
    }

    /// Entrywise partial conjugate `A^{alpha*}`.
    pub fn axis_conj(&self, axis: Axis) -> QuatMatrix {
        self.map(|q| q.axis_conj(axis))
    }

    /// `A^{alpha H} = (A^alpha)^H`.
    pub fn alpha_hermitian(&self, axis: Axis) -> QuatMatrix {
        QuatMatrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].axis_conj(axis))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|q| q.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Frobenius norm of the off-diagonal part.
    pub fn off_diagonal_norm(&self) -> f64 {
        let mut acc = 0.0;
        for r in 0..self.rows {
            for c in 0..self.cols {
                if r != c {
                    acc += self[(r, c)].norm_sqr();
                }
            }
        }
        acc.sqrt()
    }

    pub fn column(&self, c: usize) -> QuatVector {
        QuatVector::new((0..self.rows).map(|r| self[(r, c)]).collect())
            .expect("matrix has at least one row")
    }

    pub fn set_column(&mut self, c: usize, v: &QuatVector) {
        assert_eq!(v.len(), self.rows, "column length mismatch");
        for r in 0..self.rows {
            self[(r, c)] = v[r];
        }
    }

    pub fn row(&self, r: usize) -> QuatVector {
        QuatVector::new(self.data[r * self.cols..(r + 1) * self.cols].to_vec())
            .expect("matrix has at least one column")
    }

    pub fn from_columns(cols: &[QuatVector]) -> Result<QuatMatrix> {
        if cols.is_empty() {
            return Err(Error::Domain("matrix must have at least one column".into()));
        }
        let rows = cols[0].len();
        if cols.iter().any(|c| c.len() != rows) {
            return Err(Error::Shape("columns of unequal length".into()));
        }
        let mut m = QuatMatrix::zeros(rows, cols.len());
        for (c, col) in cols.iter().enumerate() {
            m.set_column(c, col);
        }
        Ok(m)
    }

    pub fn approx_eq(&self, other: &QuatMatrix, tol: Tolerance) -> bool {
        if self.rows != other.rows || self.cols != other.cols {
            return false;
        }
        let scale = self.frobenius_norm().max(other.frobenius_norm());
        let diff = self.sub(other).expect("shapes checked");
        diff.frobenius_norm() <= tol.abs + tol.rel * scale
    }

    pub fn is_hermitian(&self, rel_tol: f64) -> bool {
        self.is_square() && {
            let defect = self.sub(&self.hermitian()).expect("square").frobenius_norm();
            defect <= rel_tol * self.frobenius_norm().max(1e-300)
        }
    }

    pub fn is_alpha_hermitian(&self, axis: Axis, rel_tol: f64) -> bool {
        self.is_square() && {
            let defect = self
                .sub(&self.alpha_hermitian(axis))
                .expect("square")
                .frobenius_norm();
            defect <= rel_tol * self.frobenius_norm().max(1e-300)
        }
    }

    pub fn is_symmetric(&self, rel_tol: f64) -> bool {
        self.is_square() && {
            let defect = self.sub(&self.transpose()).expect("square").frobenius_norm();
            defect <= rel_tol * self.frobenius_norm().max(1e-300)
        }
    }

    /// `||A A^H - I||_F`, the unitarity defect.
    pub fn unitarity_defect(&self) -> f64 {
        assert!(self.is_square(), "unitarity is defined for square matrices");
        let prod = self.matmul(&self.hermitian()).expect("square");
        prod.sub(&QuatMatrix::identity(self.rows))
            .expect("square")
            .frobenius_norm()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|q| q.is_finite())
    }
}

impl Index<(usize, usize)> for QuatMatrix {
    type Output = Quaternion;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &Quaternion {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for QuatMatrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Quaternion {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::ONE;
    use proptest::prelude::*;

    fn q(a: f64, b: f64, c: f64, d: f64) -> Quaternion {
        Quaternion::new(a, b, c, d)
    }

    fn close(a: &QuatMatrix, b: &QuatMatrix) -> bool {
        a.approx_eq(b, Tolerance::default())
    }

    #[test]
    fn identity_is_neutral() {
        let a = QuatMatrix::from_rows(&[
            vec![q(1.0, 2.0, 0.0, -1.0), q(0.0, 1.0, 1.0, 0.0)],
            vec![q(-2.0, 0.5, 0.0, 0.0), q(3.0, 0.0, -1.0, 2.0)],
        ])
        .unwrap();
        let i = QuatMatrix::identity(2);
        assert_eq!(a.matmul(&i).unwrap(), a);
        assert_eq!(i.matmul(&a).unwrap(), a);
    }

    #[test]
    fn shape_mismatch_rejected() {
        let a = QuatMatrix::zeros(2, 3);
        let b = QuatMatrix::zeros(2, 3);
        assert!(matches!(a.matmul(&b), Err(Error::Shape(_))));
    }

    #[test]
    fn transpose_counterexample_1x1() {
        // A = [i], B = [j]: (AB)^T = [k] but B^T A^T = [-k].
        let a = QuatMatrix::from_rows(&[vec![Axis::I.unit()]]).unwrap();
        let b = QuatMatrix::from_rows(&[vec![Axis::J.unit()]]).unwrap();
        let ab_t = a.matmul(&b).unwrap().transpose();
        let bt_at = b.transpose().matmul(&a.transpose()).unwrap();
        assert_eq!(ab_t[(0, 0)], Axis::K.unit());
        assert_eq!(bt_at[(0, 0)], -Axis::K.unit());
    }

    #[test]
    fn hermitian_reverses_products() {
        let a = QuatMatrix::from_rows(&[
            vec![q(1.0, 1.0, 0.0, 0.0), q(0.0, 0.0, 2.0, 0.0)],
            vec![q(0.5, 0.0, 0.0, 1.0), q(1.0, -1.0, 1.0, -1.0)],
        ])
        .unwrap();
        let b = QuatMatrix::from_rows(&[
            vec![q(0.0, 1.0, 1.0, 0.0), q(2.0, 0.0, 0.0, 0.0)],
            vec![q(1.0, 0.0, 0.0, -1.0), q(0.0, 2.0, 0.0, 1.0)],
        ])
        .unwrap();
        let lhs = a.matmul(&b).unwrap().hermitian();
        let rhs = b.hermitian().matmul(&a.hermitian()).unwrap();
        assert!(close(&lhs, &rhs));
    }

    #[test]
    fn double_hermitian_is_identity() {
        let a = QuatMatrix::from_fn(3, 2, |r, c| q(r as f64, c as f64, 1.0, -1.0));
        assert_eq!(a.hermitian().hermitian(), a);
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = QuatMatrix> {
        proptest::collection::vec(-5.0..5.0f64, 4 * n * n).prop_map(move |vals| {
            QuatMatrix::from_fn(n, n, |r, c| {
                let base = 4 * (r * n + c);
                q(vals[base], vals[base + 1], vals[base + 2], vals[base + 3])
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn involution_distributes_over_products(a in arb_matrix(3), b in arb_matrix(3)) {
            for axis in Axis::ALL {
                let lhs = a.matmul(&b).unwrap().involution(axis);
                let rhs = a.involution(axis).matmul(&b.involution(axis)).unwrap();
                prop_assert!(close(&lhs, &rhs));
            }
        }

        #[test]
        fn alpha_hermitian_reverses_products(a in arb_matrix(3), b in arb_matrix(3)) {
            for axis in Axis::ALL {
                let lhs = a.matmul(&b).unwrap().alpha_hermitian(axis);
                let rhs = b.alpha_hermitian(axis).matmul(&a.alpha_hermitian(axis)).unwrap();
                prop_assert!(close(&lhs, &rhs));
            }
        }

        #[test]
        fn vector_dot_is_sesquilinear(v in proptest::collection::vec(-3.0..3.0f64, 12)) {
            let x = QuatVector::new(vec![
                q(v[0], v[1], v[2], v[3]),
                q(v[4], v[5], v[6], v[7]),
            ]).unwrap();
            let s = q(v[8], v[9], v[10], v[11]);
            // <x, x s> = <x, x> s
            let lhs = x.dot(&x.scale_right(s)).unwrap();
            let rhs = x.dot(&x).unwrap() * s;
            prop_assert!((lhs - rhs).modulus() <= 1e-10 * (1.0 + rhs.modulus()));
        }
    }

    #[test]
    fn column_round_trip() {
        let a = QuatMatrix::from_fn(3, 3, |r, c| q((r + c) as f64, 1.0, 0.0, 0.0));
        let cols: Vec<_> = (0..3).map(|c| a.column(c)).collect();
        assert_eq!(QuatMatrix::from_columns(&cols).unwrap(), a);
        assert_eq!(a.row(1).as_slice()[2], a[(1, 2)]);
        let _ = ONE;
    }
}
