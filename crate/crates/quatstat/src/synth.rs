//! Random structured quaternion matrices for tests and experiments.

use rand::Rng;

use crate::matrix::{dot_slices, QuatMatrix};
use crate::quat::{Axis, Quaternion};

pub fn random_quaternion(rng: &mut impl Rng) -> Quaternion {
    Quaternion::new(
        rng.random_range(-1.0..1.0),
        rng.random_range(-1.0..1.0),
        rng.random_range(-1.0..1.0),
        rng.random_range(-1.0..1.0),
    )
}

pub fn random_matrix(rows: usize, cols: usize, rng: &mut impl Rng) -> QuatMatrix {
    let mut m = QuatMatrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m[(r, c)] = random_quaternion(rng);
        }
    }
    m
}

/// `B + B^H` for random `B`.
pub fn random_hermitian(n: usize, rng: &mut impl Rng) -> QuatMatrix {
    let b = random_matrix(n, n, rng);
    b.add(&b.hermitian()).expect("square")
}

/// `B B^H + I`, Hermitian positive definite.
pub fn random_hermitian_pd(n: usize, rng: &mut impl Rng) -> QuatMatrix {
    let b = random_matrix(n, n, rng);
    b.matmul(&b.hermitian())
        .and_then(|m| m.add(&QuatMatrix::identity(n)))
        .expect("square")
}

/// `(B + B^{alpha H}) / 2` for random `B`, alpha-Hermitian by symmetrisation.
pub fn random_alpha_hermitian(n: usize, axis: Axis, rng: &mut impl Rng) -> QuatMatrix {
    let b = random_matrix(n, n, rng);
    b.add(&b.alpha_hermitian(axis)).expect("square").scale(0.5)
}

/// Random unitary matrix from modified Gram-Schmidt on a random matrix.
/// Redraws columns that fall into the span of earlier ones.
pub fn random_unitary(n: usize, rng: &mut impl Rng) -> QuatMatrix {
    let mut cols: Vec<Vec<Quaternion>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut cand: Vec<Quaternion> = (0..n).map(|_| random_quaternion(rng)).collect();
        for basis in &cols {
            let h = dot_slices(basis, &cand);
            for (c, b) in cand.iter_mut().zip(basis.iter()) {
                *c -= *b * h;
            }
        }
        let norm = cand.iter().map(|q| q.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-6 {
            continue;
        }
        for q in cand.iter_mut() {
            *q = q.scale(1.0 / norm);
        }
        cols.push(cand);
    }
    QuatMatrix::from_fn(n, n, |r, c| cols[c][r])
}

/// Which entries of a random symmetric 2x2 matrix are forced real.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetric2x2Family {
    RealDiagonal,
    RealOffDiagonal,
    Neither,
}

/// Random symmetric 2x2 quaternion matrix from one of the three families
/// used to probe the Takagi factorisation gate.
pub fn random_symmetric_2x2(family: Symmetric2x2Family, rng: &mut impl Rng) -> QuatMatrix {
    let (a, b, q) = match family {
        Symmetric2x2Family::RealDiagonal => (
            Quaternion::from_real(rng.random_range(-1.0..1.0)),
            Quaternion::from_real(rng.random_range(-1.0..1.0)),
            random_quaternion(rng),
        ),
        Symmetric2x2Family::RealOffDiagonal => (
            random_quaternion(rng),
            random_quaternion(rng),
            Quaternion::from_real(rng.random_range(-1.0..1.0)),
        ),
        Symmetric2x2Family::Neither => {
            // Imaginary parts along different axes, bounded away from zero,
            // so the commutation condition fails by a fixed margin.
            let a = Quaternion::new(
                rng.random_range(-1.0..1.0),
                0.2 + 0.8 * rng.random_range(0.0..1.0),
                0.0,
                0.0,
            );
            let b = Quaternion::new(
                rng.random_range(-1.0..1.0),
                0.0,
                0.2 + 0.8 * rng.random_range(0.0..1.0),
                0.0,
            );
            let q = Quaternion::new(
                rng.random_range(-1.0..1.0),
                0.0,
                0.0,
                0.2 + 0.8 * rng.random_range(0.0..1.0),
            );
            (a, b, q)
        }
    };
    QuatMatrix::from_rows(&[vec![a, q], vec![q, b]]).expect("2x2")
}
