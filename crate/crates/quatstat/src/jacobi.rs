//! Complex Jacobi kernels: cyclic Jacobi for Hermitian eigenproblems and
//! one-sided Jacobi for singular value decompositions.
//!
//! Both kernels are deterministic (fixed pivot order, no randomisation) so
//! that the quaternion factorisations built on top of them are reproducible
//! bit-for-bit across runs.

use num_complex::Complex64;

use crate::adjoint::ComplexMatrix;
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 60;

/// Unitary 2x2 rotation annihilating the off-diagonal entry of the Hermitian
/// block `[[app, apq], [conj(apq), aqq]]`. Returns `(c, s, phase)` for the
/// rotation `[[c, -s*phase], [s*conj(phase), c]]` with `c, s` real.
fn hermitian_rotation(app: f64, aqq: f64, apq: Complex64) -> (f64, f64, Complex64) {
    let abs = apq.norm();
    let phase = apq / abs;
    let tau = (aqq - app) / (2.0 * abs);
    // Small-magnitude root of t^2 - 2 tau t - 1 = 0.
    let t = if tau >= 0.0 {
        -1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    (c, t * c, phase)
}

/// Eigendecomposition of a complex Hermitian matrix by cyclic Jacobi.
///
/// Returns `(values, vectors)` with eigenvalues descending and eigenvectors
/// as the columns of `vectors`: `H = V diag(values) V^H`.
pub fn hermitian_eig(h: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    if h.rows() != h.cols() {
        return Err(Error::Shape(format!(
            "eigendecomposition of {}x{} matrix",
            h.rows(),
            h.cols()
        )));
    }
    let n = h.rows();
    let mut a = h.clone();
    // Work on the exact Hermitian part; inputs are Hermitian up to rounding.
    for p in 0..n {
        for q in 0..p {
            let avg = (a[(p, q)] + a[(q, p)].conj()) * 0.5;
            a[(p, q)] = avg;
            a[(q, p)] = avg.conj();
        }
        let d = a[(p, p)].re;
        a[(p, p)] = Complex64::new(d, 0.0);
    }
    let mut v = ComplexMatrix::identity(n);
    let scale = a.frobenius_norm().max(1e-300);
    let stop = 1e-15 * scale;

    for sweep in 0..MAX_SWEEPS {
        let mut off_sq = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off_sq += a[(p, q)].norm_sqr();
            }
        }
        if (2.0 * off_sq).sqrt() <= stop {
            break;
        }
        if sweep == MAX_SWEEPS - 1 {
            return Err(Error::Numeric(format!(
                "Jacobi eigensolver stalled at off-norm {:.3e}",
                (2.0 * off_sq).sqrt()
            )));
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq.norm() <= stop / (n as f64) {
                    continue;
                }
                let (c, s, phase) = hermitian_rotation(a[(p, p)].re, a[(q, q)].re, apq);
                // Columns: [ap, aq] <- [ap, aq] * R
                for r in 0..n {
                    let arp = a[(r, p)];
                    let arq = a[(r, q)];
                    a[(r, p)] = arp * c + arq * s * phase.conj();
                    a[(r, q)] = -arp * s * phase + arq * c;
                }
                // Rows: apply R^H from the left.
                for col in 0..n {
                    let apc = a[(p, col)];
                    let aqc = a[(q, col)];
                    a[(p, col)] = apc * c + aqc * s * phase;
                    a[(q, col)] = -apc * s * phase.conj() + aqc * c;
                }
                a[(p, q)] = Complex64::ZERO;
                a[(q, p)] = Complex64::ZERO;
                a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
                a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
                for r in 0..n {
                    let vrp = v[(r, p)];
                    let vrq = v[(r, q)];
                    v[(r, p)] = vrp * c + vrq * s * phase.conj();
                    v[(r, q)] = -vrp * s * phase + vrq * c;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let values: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    order.sort_by(|&i, &j| values[j].partial_cmp(&values[i]).unwrap().then(i.cmp(&j)));
    let sorted_values: Vec<f64> = order.iter().map(|&i| values[i]).collect();
    let mut sorted_v = ComplexMatrix::zeros(n, n);
    for (new, &old) in order.iter().enumerate() {
        for r in 0..n {
            sorted_v[(r, new)] = v[(r, old)];
        }
    }
    Ok((sorted_values, sorted_v))
}

/// Thin result of the one-sided Jacobi SVD: `a = u_cols * diag(sigma) * v^H`
/// where `u_cols` holds `min(m, n)`... see [`svd`] for the exact shapes.
pub struct ComplexSvd {
    /// `m x n`: column `k` is `sigma[k] * u_k` before normalisation, already
    /// normalised here (zero columns left as zero).
    pub u: ComplexMatrix,
    pub sigma: Vec<f64>,
    pub v: ComplexMatrix,
}

/// One-sided Jacobi SVD of an `m x n` complex matrix with `m >= n`.
///
/// Orthogonalises the columns by right rotations; at convergence the column
/// norms are the singular values. `sigma` is descending, `v` is `n x n`
/// unitary, and `u` is `m x n` with unit columns (columns whose singular
/// value underflows are zero and must be completed by the caller).
pub fn svd_tall(a: &ComplexMatrix) -> Result<ComplexSvd> {
    let (m, n) = (a.rows(), a.cols());
    if m < n {
        return Err(Error::Shape("svd_tall requires rows >= cols".into()));
    }
    let mut w = a.clone();
    let mut v = ComplexMatrix::identity(n);
    let eps = 1e-15;

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = 0usize;
        for p in 0..n {
            for q in (p + 1)..n {
                let mut gpp = 0.0;
                let mut gqq = 0.0;
                let mut gpq = Complex64::ZERO;
                for r in 0..m {
                    let wp = w[(r, p)];
                    let wq = w[(r, q)];
                    gpp += wp.norm_sqr();
                    gqq += wq.norm_sqr();
                    gpq += wp.conj() * wq;
                }
                if gpq.norm() <= eps * (gpp * gqq).sqrt() || gpp == 0.0 || gqq == 0.0 {
                    continue;
                }
                rotated += 1;
                let (c, s, phase) = hermitian_rotation(gpp, gqq, gpq);
                for r in 0..m {
                    let wp = w[(r, p)];
                    let wq = w[(r, q)];
                    w[(r, p)] = wp * c + wq * s * phase.conj();
                    w[(r, q)] = -wp * s * phase + wq * c;
                }
                for r in 0..n {
                    let vp = v[(r, p)];
                    let vq = v[(r, q)];
                    v[(r, p)] = vp * c + vq * s * phase.conj();
                    v[(r, q)] = -vp * s * phase + vq * c;
                }
            }
        }
        if rotated == 0 {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Numeric("one-sided Jacobi SVD did not converge".into()));
    }

    let mut sigma: Vec<f64> = (0..n)
        .map(|k| {
            (0..m).map(|r| w[(r, k)].norm_sqr()).sum::<f64>().sqrt()
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| sigma[j].partial_cmp(&sigma[i]).unwrap().then(i.cmp(&j)));

    let sigma_max = order.first().map_or(0.0, |&i| sigma[i]);
    let tiny = sigma_max * (m.max(n) as f64) * 1e-16;
    let mut u = ComplexMatrix::zeros(m, n);
    let mut vs = ComplexMatrix::zeros(n, n);
    let mut sorted_sigma = vec![0.0; n];
    for (new, &old) in order.iter().enumerate() {
        let s = sigma[old];
        sorted_sigma[new] = if s <= tiny { 0.0 } else { s };
        if s > tiny {
            for r in 0..m {
                u[(r, new)] = w[(r, old)] / s;
            }
        }
        for r in 0..n {
            vs[(r, new)] = v[(r, old)];
        }
    }
    sigma = sorted_sigma;
    Ok(ComplexSvd { u, sigma, v: vs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_complex(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            }
        }
        m
    }

    fn hermitianize(m: &ComplexMatrix) -> ComplexMatrix {
        let mut h = m.clone();
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                h[(r, c)] = (m[(r, c)] + m[(c, r)].conj()) * 0.5;
            }
        }
        h
    }

    #[test]
    fn eig_reconstructs_random_hermitian() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for n in [1, 2, 5, 12] {
            let h = hermitianize(&random_complex(n, n, &mut rng));
            let (vals, v) = hermitian_eig(&h).unwrap();
            assert!(vals.windows(2).all(|w| w[0] >= w[1]));
            // H V = V diag(vals)
            let hv = h.matmul(&v).unwrap();
            let mut defect: f64 = 0.0;
            for c in 0..n {
                for r in 0..n {
                    defect += (hv[(r, c)] - v[(r, c)] * vals[c]).norm_sqr();
                }
            }
            assert!(defect.sqrt() <= 1e-11 * h.frobenius_norm().max(1.0), "n={n}");
            // Unitarity.
            let vhv = v.hermitian().matmul(&v).unwrap();
            let mut udef: f64 = 0.0;
            for r in 0..n {
                for c in 0..n {
                    let expected = if r == c { Complex64::ONE } else { Complex64::ZERO };
                    udef += (vhv[(r, c)] - expected).norm_sqr();
                }
            }
            assert!(udef.sqrt() <= 1e-12 * n as f64);
        }
    }

    #[test]
    fn svd_reconstructs_random_rect() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for (m, n) in [(1, 1), (4, 4), (8, 3), (12, 12)] {
            let a = random_complex(m, n, &mut rng);
            let ComplexSvd { u, sigma, v } = svd_tall(&a).unwrap();
            assert!(sigma.windows(2).all(|w| w[0] >= w[1]));
            // A = U diag(sigma) V^H, checked as A V = U diag(sigma).
            let av = a.matmul(&v).unwrap();
            let mut defect: f64 = 0.0;
            for c in 0..n {
                for r in 0..m {
                    defect += (av[(r, c)] - u[(r, c)] * sigma[c]).norm_sqr();
                }
            }
            assert!(defect.sqrt() <= 1e-11 * a.frobenius_norm().max(1.0));
        }
    }

    #[test]
    fn svd_handles_rank_deficiency() {
        // Two identical columns: one singular value must vanish.
        let mut a = ComplexMatrix::zeros(3, 2);
        for r in 0..3 {
            a[(r, 0)] = Complex64::new(r as f64 + 1.0, -1.0);
            a[(r, 1)] = a[(r, 0)];
        }
        let ComplexSvd { sigma, .. } = svd_tall(&a).unwrap();
        assert!(sigma[1] == 0.0);
        assert!(sigma[0] > 1.0);
    }
}
