//! Quaternion matrix factorisations.
//!
//! Every decomposition routes through the complex adjoint: the embedded
//! `2N x 2N` matrix is factorised by the Jacobi kernels in [`crate::jacobi`]
//! and the paired complex columns are collapsed back into quaternion factors.
//! The adjoint spectrum carries each quaternion eigen/singular value twice;
//! after sorting, column `2m` pairs with `2m+1` and a pairing gap is a
//! numeric error.
//!
//! Gauge convention: each quaternion eigen/singular vector is scaled on the
//! right by a unit quaternion so that its largest-modulus entry is
//! real-positive (ties broken by first index). Alpha-Hermitian factors only
//! have a `{1, alpha}`-plane phase free, and the convention applies within
//! that freedom.

use crate::adjoint::{collapse_column, to_complex_adjoint};
use crate::error::{Error, Result};
use crate::jacobi::{hermitian_eig, svd_tall, ComplexSvd};
use crate::matrix::{dot_slices, QuatMatrix, QuatVector};
use crate::quat::{cayley_dickson_join, cayley_dickson_split, Axis, Quaternion};

/// Relative tolerance for structure checks (Hermitian, symmetric, ...).
pub const STRUCTURE_TOL: f64 = 1e-9;
/// Relative tolerance when matching the doubled adjoint spectrum into pairs.
const PAIR_TOL: f64 = 1e-8;
/// Residual declared converged for the alpha-Hermitian gauge refinement.
const ALPHA_RESIDUAL_TOL: f64 = 1e-10;
const ALPHA_MAX_SWEEPS: usize = 50;

/// Eigendecomposition `A = Q^H diag(lambda) Q` of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct EigResult {
    /// Unitary factor; row `k` is the conjugate-transposed eigenvector for
    /// `lambda[k]`.
    pub q: QuatMatrix,
    /// Real eigenvalues, non-increasing.
    pub lambda: Vec<f64>,
    /// `||Q^H diag(lambda) Q - A||_F / ||A||_F`.
    pub residual: f64,
}

/// Singular value decomposition `A = U diag(sigma) V^H`.
#[derive(Clone, Debug)]
pub struct SvdResult {
    pub u: QuatMatrix,
    pub v: QuatMatrix,
    /// Singular values, non-negative and non-increasing.
    pub sigma: Vec<f64>,
    pub residual: f64,
}

/// Alpha-Hermitian factorisation `A = Q^H diag(lambda) Q^alpha`.
#[derive(Clone, Debug)]
pub struct AlphaFactorResult {
    pub q_alpha: QuatMatrix,
    /// Non-negative diagonal, non-increasing: the singular values of `A`.
    pub lambda_alpha: Vec<f64>,
    pub axis: Axis,
    pub residual: f64,
}

/// Takagi factorisation `A = U diag(lambda) U^T` of a 2x2 symmetric matrix;
/// the implied right factor of the SVD is `V = U^*`.
#[derive(Clone, Debug)]
pub struct TakagiResult {
    pub u: QuatMatrix,
    /// Singular values of `A`, non-increasing.
    pub lambda: Vec<f64>,
    pub residual: f64,
}

// ---------------------------------------------------------------------------
// column utilities

fn col_norm(v: &[Quaternion]) -> f64 {
    v.iter().map(|q| q.norm_sqr()).sum::<f64>().sqrt()
}

fn col_scale_right(v: &mut [Quaternion], s: Quaternion) {
    for q in v.iter_mut() {
        *q = *q * s;
    }
}

fn col_scale(v: &mut [Quaternion], s: f64) {
    for q in v.iter_mut() {
        *q = q.scale(s);
    }
}

/// Right-module Gram-Schmidt step `cand - sum basis_i <basis_i, cand>`.
/// The coefficients are returned so a tandem column can be projected with
/// the exact same combination.
fn project_out(
    cand: &[Quaternion],
    accepted: &[Vec<Quaternion>],
) -> (Vec<Quaternion>, Vec<Quaternion>) {
    let mut res = cand.to_vec();
    let mut coeffs = Vec::with_capacity(accepted.len());
    for basis in accepted {
        let h = dot_slices(basis, &res);
        for (r, b) in res.iter_mut().zip(basis.iter()) {
            *r -= *b * h;
        }
        coeffs.push(h);
    }
    (res, coeffs)
}

fn apply_coeffs(
    cand: &[Quaternion],
    accepted: &[Vec<Quaternion>],
    coeffs: &[Quaternion],
) -> Vec<Quaternion> {
    let mut res = cand.to_vec();
    for (basis, &h) in accepted.iter().zip(coeffs.iter()) {
        for (r, b) in res.iter_mut().zip(basis.iter()) {
            *r -= *b * h;
        }
    }
    res
}

fn largest_entry(v: &[Quaternion]) -> Option<usize> {
    let mut best = None;
    let mut best_sq = 0.0;
    for (i, q) in v.iter().enumerate() {
        let n = q.norm_sqr();
        if n > best_sq {
            best_sq = n;
            best = Some(i);
        }
    }
    best
}

/// Unit right factor making the largest-modulus entry real-positive.
fn gauge_of(v: &[Quaternion]) -> Quaternion {
    match largest_entry(v) {
        Some(i) => v[i].conj().scale(1.0 / v[i].modulus()),
        None => Quaternion::one(),
    }
}

fn gauge_fix(v: &mut [Quaternion]) {
    let g = gauge_of(v);
    col_scale_right(v, g);
}

/// Fill `None` slots of a partial orthonormal system by scanning identity
/// candidates and taking the largest orthogonal residual each round.
fn complete_columns(cols: &mut [Option<Vec<Quaternion>>], dim: usize) -> Result<()> {
    loop {
        let slot = match cols.iter().position(|c| c.is_none()) {
            Some(s) => s,
            None => return Ok(()),
        };
        let accepted: Vec<Vec<Quaternion>> = cols.iter().flatten().cloned().collect();
        let mut best: Option<(f64, Vec<Quaternion>)> = None;
        for i in 0..dim {
            let mut e = vec![Quaternion::zero(); dim];
            e[i] = Quaternion::one();
            let (res, _) = project_out(&e, &accepted);
            let n = col_norm(&res);
            if best.as_ref().map_or(true, |(bn, _)| n > *bn) {
                best = Some((n, res));
            }
        }
        let (n, mut col) = best.expect("dim > 0");
        if n < 1e-8 {
            return Err(Error::Numeric("unitary completion found no direction".into()));
        }
        col_scale(&mut col, 1.0 / n);
        gauge_fix(&mut col);
        cols[slot] = Some(col);
    }
}

fn matrix_from_cols(cols: Vec<Vec<Quaternion>>) -> Result<QuatMatrix> {
    let vecs: Result<Vec<QuatVector>> = cols.into_iter().map(QuatVector::new).collect();
    QuatMatrix::from_columns(&vecs?)
}

/// Group sorted values into runs of nearly equal magnitude.
fn cluster_ranges(values: &[f64], tol: f64) -> Vec<(usize, usize)> {
    let mut ranges = Vec::new();
    let mut start = 0;
    for i in 1..=values.len() {
        if i == values.len() || (values[start] - values[i]).abs() > tol {
            ranges.push((start, i));
            start = i;
        }
    }
    ranges
}

// ---------------------------------------------------------------------------
// Hermitian eigendecomposition

/// Eigendecomposition of a Hermitian quaternion matrix, eigenvalues sorted
/// non-increasing.
pub fn eig_hermitian(a: &QuatMatrix) -> Result<EigResult> {
    if !a.is_square() {
        return Err(Error::Structure(format!(
            "eigendecomposition requires a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    if !a.is_hermitian(STRUCTURE_TOL) {
        return Err(Error::Structure("matrix is not Hermitian within tolerance".into()));
    }
    let n = a.rows();
    let (vals, vectors) = hermitian_eig(&to_complex_adjoint(a))?;

    let scale = vals.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1e-300);
    let mut pair_vals = Vec::with_capacity(n);
    for m in 0..n {
        let (v0, v1) = (vals[2 * m], vals[2 * m + 1]);
        if (v0 - v1).abs() > PAIR_TOL * scale {
            return Err(Error::Numeric(format!(
                "adjoint eigenvalue pairing failed: {v0:.6e} vs {v1:.6e}"
            )));
        }
        pair_vals.push(0.5 * (v0 + v1));
    }

    let mut accepted: Vec<Vec<Quaternion>> = Vec::with_capacity(n);
    for (c0, c1) in cluster_ranges(&pair_vals, PAIR_TOL * scale) {
        let candidates: Vec<Vec<Quaternion>> = (2 * c0..2 * c1)
            .map(|t| collapse_column(&vectors.column(t)))
            .collect();
        select_cluster(&candidates, c1 - c0, &mut accepted)?;
    }

    let v_cols = matrix_from_cols(accepted)?;
    let recon = v_cols
        .matmul(&QuatMatrix::from_real_diag(&pair_vals))?
        .matmul(&v_cols.hermitian())?;
    let residual = recon.sub(a)?.frobenius_norm() / a.frobenius_norm().max(1e-300);
    Ok(EigResult { q: v_cols.hermitian(), lambda: pair_vals, residual })
}

/// Greedily pick `count` orthonormal quaternion columns out of a collapsed
/// cluster, projecting against everything accepted so far. Exactly one
/// member of each symplectic pair survives the projection.
fn select_cluster(
    candidates: &[Vec<Quaternion>],
    count: usize,
    accepted: &mut Vec<Vec<Quaternion>>,
) -> Result<()> {
    let mut remaining: Vec<usize> = (0..candidates.len()).collect();
    for _ in 0..count {
        let mut best: Option<(f64, usize)> = None;
        for (slot, &idx) in remaining.iter().enumerate() {
            let (res, _) = project_out(&candidates[idx], accepted);
            let n = col_norm(&res);
            if best.as_ref().map_or(true, |(bn, _)| n > *bn) {
                best = Some((n, slot));
            }
        }
        let (n, slot) = best.ok_or_else(|| Error::Numeric("cluster exhausted".into()))?;
        if n < 1e-6 {
            return Err(Error::Numeric(
                "adjoint column collapse produced a rank-deficient cluster".into(),
            ));
        }
        let idx = remaining.remove(slot);
        let (mut col, _) = project_out(&candidates[idx], accepted);
        col_scale(&mut col, 1.0 / n);
        gauge_fix(&mut col);
        accepted.push(col);
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// singular value decomposition

/// SVD `A = U diag(sigma) V^H` with square unitary `U`, `V` and
/// `min(rows, cols)` singular values sorted non-increasing.
pub fn svd(a: &QuatMatrix) -> Result<SvdResult> {
    if a.frobenius_norm() == 0.0 {
        return Ok(SvdResult {
            u: QuatMatrix::identity(a.rows()),
            v: QuatMatrix::identity(a.cols()),
            sigma: vec![0.0; a.rows().min(a.cols())],
            residual: 0.0,
        });
    }
    if a.rows() >= a.cols() {
        svd_tall_quat(a)
    } else {
        let s = svd_tall_quat(&a.hermitian())?;
        let residual = svd_residual(a, &s.v, &s.sigma, &s.u);
        Ok(SvdResult { u: s.v, v: s.u, sigma: s.sigma, residual })
    }
}

fn svd_residual(a: &QuatMatrix, u: &QuatMatrix, sigma: &[f64], v: &QuatMatrix) -> f64 {
    let s = QuatMatrix::rect_diag(a.rows(), a.cols(), sigma);
    let recon = u
        .matmul(&s)
        .and_then(|m| m.matmul(&v.hermitian()))
        .expect("shapes consistent by construction");
    recon.sub(a).expect("same shape").frobenius_norm() / a.frobenius_norm().max(1e-300)
}

fn svd_tall_quat(a: &QuatMatrix) -> Result<SvdResult> {
    let (r, c) = (a.rows(), a.cols());
    let ComplexSvd { u: cu, sigma: csig, v: cv } = svd_tall(&to_complex_adjoint(a))?;

    let smax = csig.first().copied().unwrap_or(0.0).max(1e-300);
    let mut pair_sigma = Vec::with_capacity(c);
    for m in 0..c {
        let (s0, s1) = (csig[2 * m], csig[2 * m + 1]);
        if (s0 - s1).abs() > PAIR_TOL * smax {
            return Err(Error::Numeric(format!(
                "adjoint singular value pairing failed: {s0:.6e} vs {s1:.6e}"
            )));
        }
        pair_sigma.push(0.5 * (s0 + s1));
    }
    let tiny = smax * (2 * r.max(c)) as f64 * 1e-15;

    let mut v_accepted: Vec<Vec<Quaternion>> = Vec::with_capacity(c);
    let mut u_accepted: Vec<Option<Vec<Quaternion>>> = Vec::with_capacity(c);
    for (c0, c1) in cluster_ranges(&pair_sigma, PAIR_TOL * smax) {
        let v_cands: Vec<Vec<Quaternion>> =
            (2 * c0..2 * c1).map(|t| collapse_column(&cv.column(t))).collect();
        let with_u = pair_sigma[c0] > tiny;
        let u_cands: Vec<Vec<Quaternion>> = if with_u {
            (2 * c0..2 * c1).map(|t| collapse_column(&cu.column(t))).collect()
        } else {
            Vec::new()
        };
        let base = v_accepted.len();
        let mut remaining: Vec<usize> = (0..v_cands.len()).collect();
        for _ in c0..c1 {
            let mut best: Option<(f64, usize)> = None;
            for (slot, &idx) in remaining.iter().enumerate() {
                let (res, _) = project_out(&v_cands[idx], &v_accepted);
                let n = col_norm(&res);
                if best.as_ref().map_or(true, |(bn, _)| n > *bn) {
                    best = Some((n, slot));
                }
            }
            let (n, slot) = best.ok_or_else(|| Error::Numeric("cluster exhausted".into()))?;
            if n < 1e-6 {
                return Err(Error::Numeric(
                    "adjoint column collapse produced a rank-deficient cluster".into(),
                ));
            }
            let idx = remaining.remove(slot);
            let (mut v_col, coeffs) = project_out(&v_cands[idx], &v_accepted);
            col_scale(&mut v_col, 1.0 / n);
            if with_u {
                // The same combination keeps A v_k = sigma_k u_k inside the
                // cluster, where all sigmas agree.
                let u_prev: Vec<Vec<Quaternion>> = u_accepted[base..]
                    .iter()
                    .map(|o| o.clone().expect("positive-sigma cluster has u columns"))
                    .collect();
                let mut u_col = apply_coeffs(&u_cands[idx], &u_prev, &coeffs[base..]);
                let un = col_norm(&u_col);
                if un < 1e-6 {
                    return Err(Error::Numeric("left singular cluster collapsed".into()));
                }
                col_scale(&mut u_col, 1.0 / un);
                let g = gauge_of(&u_col);
                col_scale_right(&mut u_col, g);
                col_scale_right(&mut v_col, g);
                u_accepted.push(Some(u_col));
            } else {
                gauge_fix(&mut v_col);
                u_accepted.push(None);
            }
            v_accepted.push(v_col);
        }
    }

    // Columns for vanished singular values plus the rows - cols tail come
    // from unitary completion.
    let mut u_slots = u_accepted;
    u_slots.resize(r, None);
    complete_columns(&mut u_slots, r)?;
    let u = matrix_from_cols(u_slots.into_iter().map(|o| o.expect("completed")).collect())?;
    let v = matrix_from_cols(v_accepted)?;
    let residual = svd_residual(a, &u, &pair_sigma, &v);
    Ok(SvdResult { u, v, sigma: pair_sigma, residual })
}

// ---------------------------------------------------------------------------
// alpha-Hermitian factorisation

/// Factorise an alpha-Hermitian matrix as `A = Q^H diag(lambda) Q^alpha`,
/// `lambda` being the singular values of `A`.
///
/// Route: from the SVD `A = U S V^H`, a simple singular value satisfies
/// `v_k = u_k^alpha h_k` with unit `h_k`, and the gauge `g_k` solving
/// `g g^{alpha*} = conj(h_k)` makes `u_k g_k` the wanted column. Clustered
/// singular values are repaired by refinement sweeps on `U^H A U^alpha`,
/// declared converged at relative residual `1e-10`, failed after 50 sweeps.
pub fn alpha_hermitian_factor(a: &QuatMatrix, axis: Axis) -> Result<AlphaFactorResult> {
    if !a.is_square() {
        return Err(Error::Structure(format!(
            "alpha-Hermitian factorisation requires a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    if a.frobenius_norm() == 0.0 {
        return Ok(AlphaFactorResult {
            q_alpha: QuatMatrix::identity(n),
            lambda_alpha: vec![0.0; n],
            axis,
            residual: 0.0,
        });
    }
    if !a.is_alpha_hermitian(axis, STRUCTURE_TOL) {
        return Err(Error::Structure(format!(
            "matrix is not {axis}-Hermitian within tolerance"
        )));
    }

    let s = svd(a)?;
    let sigma = s.sigma;
    let tiny = sigma[0].max(1e-300) * n as f64 * 1e-14;
    let wing = axis.others().0;

    let mut cols: Vec<Vec<Quaternion>> =
        (0..n).map(|k| s.u.column(k).as_slice().to_vec()).collect();
    for k in 0..n {
        if sigma[k] <= tiny {
            continue;
        }
        let u_alpha: Vec<Quaternion> = cols[k].iter().map(|q| q.involution(axis)).collect();
        let h = dot_slices(&u_alpha, s.v.column(k).as_slice());
        let g = alpha_plane_gauge(h.conj(), axis, wing);
        col_scale_right(&mut cols[k], g);
    }

    let mut best = (alpha_residual(a, &cols, &sigma, axis), cols);
    if best.0 > ALPHA_RESIDUAL_TOL {
        refine_alpha_gauge(a, &sigma, axis, wing, tiny, &mut best)?;
    }
    let (residual, mut cols) = best;
    if residual > 1e-6 {
        return Err(Error::Numeric(format!(
            "alpha-Hermitian gauge refinement stalled at residual {residual:.3e}"
        )));
    }
    for col in cols.iter_mut() {
        alpha_gauge_convention(col, axis, wing);
    }
    let q_alpha = matrix_from_cols(cols)?.hermitian();
    Ok(AlphaFactorResult { q_alpha, lambda_alpha: sigma, axis, residual })
}

/// Unit gauge solving `g g^{alpha*} = w` for unit `w` with no `alpha`
/// component: the square root of `w` taken in the plane orthogonal to
/// `alpha` (any such `g` commutes with the constraint since `g^{alpha*} = g`).
fn alpha_plane_gauge(mut w: Quaternion, axis: Axis, wing: Axis) -> Quaternion {
    w.set_component(axis, 0.0);
    let m = w.modulus();
    if m < 1e-300 {
        return Quaternion::one();
    }
    w.scale(1.0 / m).unit_sqrt(wing)
}

/// Reproducibility gauge within the residual `{1, alpha}`-plane freedom:
/// rotate so the dominant Cayley-Dickson component of the largest-modulus
/// entry is real-positive.
fn alpha_gauge_convention(col: &mut [Quaternion], axis: Axis, wing: Axis) {
    let Some(i) = largest_entry(col) else { return };
    let (z1, z2) = cayley_dickson_split(col[i], axis, wing).expect("distinct axes");
    let g_plane = if z1.norm() >= z2.norm() {
        if z1.norm() < 1e-300 {
            return;
        }
        z1.conj() / z1.norm()
    } else {
        z2 / z2.norm()
    };
    let g = cayley_dickson_join(g_plane, num_complex::Complex64::ZERO, axis, wing)
        .expect("distinct axes");
    col_scale_right(col, g);
}

fn alpha_residual(a: &QuatMatrix, cols: &[Vec<Quaternion>], sigma: &[f64], axis: Axis) -> f64 {
    let u = matrix_from_cols(cols.to_vec()).expect("square system");
    let recon = u
        .matmul(&QuatMatrix::from_real_diag(sigma))
        .and_then(|m| m.matmul(&u.alpha_hermitian(axis)))
        .expect("square");
    recon.sub(a).expect("same shape").frobenius_norm() / a.frobenius_norm().max(1e-300)
}

fn refine_alpha_gauge(
    a: &QuatMatrix,
    sigma: &[f64],
    axis: Axis,
    wing: Axis,
    tiny: f64,
    best: &mut (f64, Vec<Vec<Quaternion>>),
) -> Result<()> {
    let smax = sigma[0].max(1e-300);
    let clusters = cluster_ranges(sigma, PAIR_TOL * smax);
    let mut cols = best.1.clone();
    for _ in 0..ALPHA_MAX_SWEEPS {
        let u = matrix_from_cols(cols.clone())?;
        let m = u.hermitian().matmul(a)?.matmul(&u.involution(axis))?;
        for &(c0, c1) in &clusters {
            if sigma[c0] <= tiny {
                continue;
            }
            if c1 - c0 == 1 {
                let d = m[(c0, c0)];
                if d.modulus() > 1e-300 {
                    let g = alpha_plane_gauge(d.scale(1.0 / d.modulus()), axis, wing);
                    col_scale_right(&mut cols[c0], g);
                }
            } else {
                let k = c1 - c0;
                let block = QuatMatrix::from_fn(k, k, |r, c| m[(c0 + r, c0 + c)]);
                let w = block.scale(1.0 / sigma[c0]);
                if let Some(g) = cluster_gauge(&w, wing)? {
                    let old: Vec<Vec<Quaternion>> = cols[c0..c1].to_vec();
                    for (j, col) in cols[c0..c1].iter_mut().enumerate() {
                        for (r, entry) in col.iter_mut().enumerate() {
                            let mut acc = Quaternion::zero();
                            for (i, src) in old.iter().enumerate() {
                                acc += src[r] * g[(i, j)];
                            }
                            *entry = acc;
                        }
                    }
                }
            }
        }
        let residual = alpha_residual(a, &cols, sigma, axis);
        let improved = residual < best.0;
        if improved {
            *best = (residual, cols.clone());
        }
        if best.0 <= ALPHA_RESIDUAL_TOL || !improved {
            return Ok(());
        }
    }
    Ok(())
}

/// Unitary block gauge `G` with `G G^{alpha H} = W` for a unitary
/// alpha-Hermitian `W`: `G = (I + W) S^{-1/2}`, `S = 2I + W + W^H`.
/// Falls back to a wing-axis conjugation when `S` is singular (`W` has
/// spectrum near `-1`); `None` when both attempts fail.
fn cluster_gauge(w: &QuatMatrix, wing: Axis) -> Result<Option<QuatMatrix>> {
    if let Some(g) = cluster_gauge_direct(w)? {
        return Ok(Some(g));
    }
    let beta = wing.unit();
    let w2 = w.map(|q| beta * q * beta);
    if let Some(g2) = cluster_gauge_direct(&w2)? {
        return Ok(Some(g2.map(|q| beta * q)));
    }
    Ok(None)
}

fn cluster_gauge_direct(w: &QuatMatrix) -> Result<Option<QuatMatrix>> {
    let n = w.rows();
    let eye = QuatMatrix::identity(n);
    let s = eye.scale(2.0).add(w)?.add(&w.hermitian())?;
    let eig = eig_hermitian(&s)?;
    let lmax = eig.lambda[0].max(1e-300);
    if eig.lambda[n - 1] <= 1e-6 * lmax {
        return Ok(None);
    }
    let inv_sqrt: Vec<f64> = eig.lambda.iter().map(|l| 1.0 / l.sqrt()).collect();
    let s_inv_sqrt = eig
        .q
        .hermitian()
        .matmul(&QuatMatrix::from_real_diag(&inv_sqrt))?
        .matmul(&eig.q)?;
    Ok(Some(eye.add(w)?.matmul(&s_inv_sqrt)?))
}

// ---------------------------------------------------------------------------
// 2x2 symmetric Takagi factorisation

/// True iff `||(A A^*)^* - A^* A||_F <= tol ||A||_F^2`, the commutation
/// condition under which a symmetric quaternion matrix admits a Takagi
/// factorisation. For a symmetric 2x2 matrix this holds exactly when either
/// the diagonal or the off-diagonal entries are real-valued (or all entries
/// share one complex plane).
pub fn commutation_check(a: &QuatMatrix) -> bool {
    assert!(a.is_square(), "commutation check requires a square matrix");
    let scale = a.frobenius_norm();
    if scale == 0.0 {
        return true;
    }
    let lhs = a.matmul(&a.conj()).expect("square").conj();
    let rhs = a.conj().matmul(a).expect("square");
    lhs.sub(&rhs).expect("same shape").frobenius_norm() <= STRUCTURE_TOL * scale * scale
}

/// Takagi factorisation `A = U diag(lambda) U^T` of a symmetric 2x2
/// quaternion matrix. Requires the commutation condition; rejects other
/// symmetric matrices as not factorable.
pub fn takagi_2x2_symmetric(a: &QuatMatrix) -> Result<TakagiResult> {
    if a.rows() != 2 || a.cols() != 2 {
        return Err(Error::Shape(format!(
            "Takagi factorisation is defined for 2x2 input, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let norm = a.frobenius_norm();
    if norm == 0.0 {
        return Ok(TakagiResult {
            u: QuatMatrix::identity(2),
            lambda: vec![0.0, 0.0],
            residual: 0.0,
        });
    }
    if !a.is_symmetric(STRUCTURE_TOL) {
        return Err(Error::NotFactorable("matrix is not symmetric".into()));
    }
    if !commutation_check(a) {
        return Err(Error::NotFactorable(
            "commutation condition fails: neither diagonal nor off-diagonal entries are real"
                .into(),
        ));
    }

    // Spectrum of A A^H in closed form.
    let p = a.matmul(&a.hermitian())?;
    let (p11, p22, m) = (p[(0, 0)].re(), p[(1, 1)].re(), p[(0, 1)]);
    let mid = 0.5 * (p11 + p22);
    let rad = (0.25 * (p11 - p22) * (p11 - p22) + m.norm_sqr()).sqrt();
    let (mu1, mu2) = (mid + rad, (mid - rad).max(0.0));
    let sig = [mu1.max(0.0).sqrt(), mu2.sqrt()];

    let (u, lambda) = if mu1 - mu2 <= 1e-8 * mu1.max(1e-300) {
        takagi_degenerate(a, sig[0])?
    } else {
        takagi_distinct(a, &p, [mu1, mu2], sig)?
    };

    let recon = u
        .matmul(&QuatMatrix::from_real_diag(&lambda))?
        .matmul(&u.transpose())?;
    let residual = recon.sub(a)?.frobenius_norm() / norm;
    if residual > 1e-6 {
        return Err(Error::Numeric(format!(
            "Takagi reconstruction residual {residual:.3e}"
        )));
    }
    Ok(TakagiResult { u, lambda, residual })
}

/// Degenerate spectrum: a real Givens rotation diagonalises `A` because the
/// diagonal difference is a real multiple of the off-diagonal entry, after
/// which per-entry unit square roots finish the job.
fn takagi_degenerate(a: &QuatMatrix, sigma: f64) -> Result<(QuatMatrix, Vec<f64>)> {
    let q_off = (a[(0, 1)] + a[(1, 0)]).scale(0.5);
    let scale = a.frobenius_norm();
    if q_off.modulus() <= 1e-12 * scale {
        return takagi_diagonal(a);
    }
    // b - a11 = q_off * tau with real tau.
    let t = q_off.conj() * (a[(1, 1)] - a[(0, 0)]);
    let tau = t.re() / q_off.norm_sqr();
    let theta = 0.5 * f64::atan2(-2.0, tau);
    let (c, s) = (theta.cos(), theta.sin());
    let rot = QuatMatrix::from_rows(&[
        vec![Quaternion::from_real(c), Quaternion::from_real(s)],
        vec![Quaternion::from_real(-s), Quaternion::from_real(c)],
    ])?;
    let rotated = rot.matmul(a)?.matmul(&rot.transpose())?;
    if rotated.off_diagonal_norm() > 1e-7 * scale {
        return Err(Error::Numeric(
            "degenerate Takagi rotation failed to diagonalise".into(),
        ));
    }
    let (gauges, lambda) = diag_entry_gauges(&rotated, sigma);
    let mut u = rot.transpose();
    for k in 0..2 {
        u[(0, k)] = u[(0, k)] * gauges[k];
        u[(1, k)] = u[(1, k)] * gauges[k];
    }
    Ok(sort_takagi_columns(u, lambda))
}

fn takagi_diagonal(a: &QuatMatrix) -> Result<(QuatMatrix, Vec<f64>)> {
    let (gauges, lambda) = diag_entry_gauges(a, 0.0);
    let mut u = QuatMatrix::zeros(2, 2);
    u[(0, 0)] = gauges[0];
    u[(1, 1)] = gauges[1];
    Ok(sort_takagi_columns(u, lambda))
}

/// Per-entry gauges for a diagonal symmetric matrix: `d = g |d| g` with
/// `g = sqrt(d / |d|)`.
fn diag_entry_gauges(diag: &QuatMatrix, sigma_hint: f64) -> ([Quaternion; 2], Vec<f64>) {
    let mut gauges = [Quaternion::one(); 2];
    let mut lambda = vec![0.0; 2];
    for k in 0..2 {
        let d = diag[(k, k)];
        let m = d.modulus();
        if m > 0.0 {
            gauges[k] = d.scale(1.0 / m).unit_sqrt(Axis::I);
            lambda[k] = m;
        } else {
            lambda[k] = if sigma_hint > 0.0 { 0.0 } else { 0.0 };
        }
    }
    (gauges, lambda)
}

fn sort_takagi_columns(u: QuatMatrix, lambda: Vec<f64>) -> (QuatMatrix, Vec<f64>) {
    if lambda[0] >= lambda[1] {
        (u, lambda)
    } else {
        let swapped = QuatMatrix::from_fn(2, 2, |r, c| u[(r, 1 - c)]);
        (swapped, vec![lambda[1], lambda[0]])
    }
}

/// Distinct spectrum: the Takagi columns are the eigenvectors of `A A^H` up
/// to per-column right gauges, which are recovered by solving the scalar
/// equations `g c g = t` read off from `U0^H A`.
fn takagi_distinct(
    a: &QuatMatrix,
    p: &QuatMatrix,
    mu: [f64; 2],
    sig: [f64; 2],
) -> Result<(QuatMatrix, Vec<f64>)> {
    let (p11, m) = (p[(0, 0)].re(), p[(0, 1)]);
    let scale = p.frobenius_norm();
    let mut u0_cols: Vec<Vec<Quaternion>> = Vec::with_capacity(2);
    if m.modulus() <= 1e-13 * scale.max(1e-300) {
        // A A^H already diagonal; order columns by descending eigenvalue.
        if p11 >= p[(1, 1)].re() {
            u0_cols.push(vec![Quaternion::one(), Quaternion::zero()]);
            u0_cols.push(vec![Quaternion::zero(), Quaternion::one()]);
        } else {
            u0_cols.push(vec![Quaternion::zero(), Quaternion::one()]);
            u0_cols.push(vec![Quaternion::one(), Quaternion::zero()]);
        }
    } else {
        for &lam in &mu {
            let mut col = vec![m, Quaternion::from_real(lam - p11)];
            let (res, _) = project_out(&col, &u0_cols);
            col = res;
            let n = col_norm(&col);
            if n < 1e-10 * scale.sqrt().max(1e-300) {
                return Err(Error::Numeric("eigenvector of A A^H degenerated".into()));
            }
            col_scale(&mut col, 1.0 / n);
            u0_cols.push(col);
        }
    }
    let u0 = matrix_from_cols(u0_cols)?;
    let t = u0.hermitian().matmul(a)?;

    let mut u = u0.clone();
    let mut lambda = vec![0.0; 2];
    let sig_max = sig[0].max(1e-300);
    for k in 0..2 {
        lambda[k] = sig[k];
        if sig[k] <= 1e-13 * sig_max {
            let mut col: Vec<Quaternion> = (0..2).map(|r| u0[(r, k)]).collect();
            gauge_fix(&mut col);
            for r in 0..2 {
                u[(r, k)] = col[r];
            }
            continue;
        }
        // Row k of T satisfies T[k, n] = g sig_k u0[n, k] g.
        let n_star = if u0[(0, k)].norm_sqr() >= u0[(1, k)].norm_sqr() { 0 } else { 1 };
        let coeff = u0[(n_star, k)].scale(sig[k]);
        let target = t[(k, n_star)];
        let g = solve_sandwich_gauge(coeff, target)?;
        for r in 0..2 {
            u[(r, k)] = u0[(r, k)] * g;
        }
    }
    Ok((u, lambda))
}

/// Solve `g c g = t` for a unit quaternion `g`, given `|c| = |t|`. With
/// `|g| = 1` the equation is the real-linear system `c g - conj(g) t = 0`;
/// the gauge is its unit null vector.
fn solve_sandwich_gauge(c: Quaternion, t: Quaternion) -> Result<Quaternion> {
    let lc = left_mul_matrix(c);
    let rt = right_mul_matrix(t);
    // M = L_c - R_t * C with C = diag(1, -1, -1, -1).
    let mut m = [[0.0f64; 4]; 4];
    for r in 0..4 {
        for cidx in 0..4 {
            let sign = if cidx == 0 { 1.0 } else { -1.0 };
            m[r][cidx] = lc[r][cidx] - rt[r][cidx] * sign;
        }
    }
    // Smallest-eigenvalue vector of M^T M.
    let mut mtm = crate::adjoint::ComplexMatrix::zeros(4, 4);
    for r in 0..4 {
        for cidx in 0..4 {
            let mut acc = 0.0;
            for k in 0..4 {
                acc += m[k][r] * m[k][cidx];
            }
            mtm[(r, cidx)] = num_complex::Complex64::new(acc, 0.0);
        }
    }
    let (_vals, vecs) = hermitian_eig(&mtm)?;
    let col = vecs.column(3);
    let mut g = Quaternion::new(col[0].re, col[1].re, col[2].re, col[3].re);
    let n = g.modulus();
    if n < 1e-8 {
        return Err(Error::Numeric("gauge null vector degenerated".into()));
    }
    g = g.scale(1.0 / n);
    let defect = (g * c * g - t).modulus();
    if defect > 1e-6 * t.modulus().max(1e-300) {
        return Err(Error::Numeric(format!(
            "sandwich gauge equation unsolved, defect {defect:.3e}"
        )));
    }
    Ok(g)
}

fn left_mul_matrix(p: Quaternion) -> [[f64; 4]; 4] {
    [
        [p.a, -p.b, -p.c, -p.d],
        [p.b, p.a, -p.d, p.c],
        [p.c, p.d, p.a, -p.b],
        [p.d, -p.c, p.b, p.a],
    ]
}

fn right_mul_matrix(t: Quaternion) -> [[f64; 4]; 4] {
    [
        [t.a, -t.b, -t.c, -t.d],
        [t.b, t.a, t.d, -t.c],
        [t.c, -t.d, t.a, t.b],
        [t.d, t.c, -t.b, t.a],
    ]
}

// ---------------------------------------------------------------------------
// joint-diagonalisation obstruction

/// True when no quaternion unitary matrix can simultaneously diagonalise the
/// Hermitian `cx` and alpha-Hermitian `cxa`: the products must satisfy
/// `Cx Cxa = (Cx Cxa)^{alpha H}` for such a transform to exist.
pub fn unitary_joint_diag_obstruction(
    cx: &QuatMatrix,
    cxa: &QuatMatrix,
    axis: Axis,
) -> Result<bool> {
    if !cx.is_square() || !cxa.is_square() || cx.rows() != cxa.rows() {
        return Err(Error::Structure("covariance matrices must be square and same size".into()));
    }
    if !cx.is_hermitian(STRUCTURE_TOL) {
        return Err(Error::Structure("covariance matrix is not Hermitian".into()));
    }
    if !cxa.is_alpha_hermitian(axis, STRUCTURE_TOL) {
        return Err(Error::Structure(format!(
            "complementary covariance is not {axis}-Hermitian"
        )));
    }
    let scale = cx.frobenius_norm() * cxa.frobenius_norm();
    if scale == 0.0 {
        return Ok(false);
    }
    let prod = cx.matmul(cxa)?;
    let defect = prod.sub(&prod.alpha_hermitian(axis))?.frobenius_norm();
    Ok(defect > STRUCTURE_TOL * scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(a: f64, b: f64, c: f64, d: f64) -> Quaternion {
        Quaternion::new(a, b, c, d)
    }

    #[test]
    fn eig_identity() {
        let res = eig_hermitian(&QuatMatrix::identity(3)).unwrap();
        assert_eq!(res.lambda, vec![1.0, 1.0, 1.0]);
        assert!(res.residual < 1e-12);
        assert!(res.q.unitarity_defect() < 1e-12);
    }

    #[test]
    fn eig_2x2_closed_form() {
        // [[2, i+j], [-(i+j), 2]] has eigenvalues 2 +- sqrt(2) from the
        // closed form (p+r)/2 +- sqrt(((p-r)/2)^2 + |q|^2).
        let ipj = q(0.0, 1.0, 1.0, 0.0);
        let a = QuatMatrix::from_rows(&[
            vec![q(2.0, 0.0, 0.0, 0.0), ipj],
            vec![-ipj, q(2.0, 0.0, 0.0, 0.0)],
        ])
        .unwrap();
        let res = eig_hermitian(&a).unwrap();
        let s2 = 2.0f64.sqrt();
        assert!((res.lambda[0] - (2.0 + s2)).abs() < 1e-12);
        assert!((res.lambda[1] - (2.0 - s2)).abs() < 1e-12);
        assert!(res.residual < 1e-12);
    }

    #[test]
    fn eig_random_hermitian() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let a = synth::random_hermitian(8, &mut rng);
        let res = eig_hermitian(&a).unwrap();
        assert!(res.residual < 1e-10, "residual {}", res.residual);
        assert!(res.q.unitarity_defect() < 1e-10);
        assert!(res.lambda.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn eig_rejects_bad_structure() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        let a = synth::random_matrix(3, 3, &mut rng);
        assert!(matches!(eig_hermitian(&a), Err(Error::Structure(_))));
        let r = synth::random_matrix(2, 3, &mut rng);
        assert!(matches!(eig_hermitian(&r), Err(Error::Structure(_))));
    }

    #[test]
    fn svd_identity_and_scalar() {
        let res = svd(&QuatMatrix::identity(4)).unwrap();
        assert_eq!(res.sigma, vec![1.0; 4]);
        assert!(res.residual < 1e-12);

        let i1 = QuatMatrix::from_rows(&[vec![Axis::I.unit()]]).unwrap();
        let res = svd(&i1).unwrap();
        assert!((res.sigma[0] - 1.0).abs() < 1e-12);
        // U * sigma * V^H = [i] in whatever gauge was chosen.
        let recon = res.u.matmul(&QuatMatrix::from_real_diag(&res.sigma)).unwrap()
            .matmul(&res.v.hermitian()).unwrap();
        assert!((recon[(0, 0)] - Axis::I.unit()).modulus() < 1e-12);
    }

    #[test]
    fn svd_random_rect_matches_adjoint_singular_values() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        let a = synth::random_matrix(6, 4, &mut rng);
        let res = svd(&a).unwrap();
        assert!(res.residual < 1e-10, "residual {}", res.residual);
        assert!(res.u.unitarity_defect() < 1e-10);
        assert!(res.v.unitarity_defect() < 1e-10);
        // Adjoint oracle: complex singular values, deduplicated pairs.
        let ComplexSvd { sigma: csig, .. } = svd_tall(&to_complex_adjoint(&a)).unwrap();
        for (k, s) in res.sigma.iter().enumerate() {
            assert!((csig[2 * k] - s).abs() < 1e-9 && (csig[2 * k + 1] - s).abs() < 1e-9);
        }
    }

    #[test]
    fn svd_wide_and_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        let a = synth::random_matrix(3, 7, &mut rng);
        let res = svd(&a).unwrap();
        assert_eq!(res.sigma.len(), 3);
        assert!(res.residual < 1e-10);

        let z = QuatMatrix::zeros(3, 2);
        let res = svd(&z).unwrap();
        assert_eq!(res.sigma, vec![0.0, 0.0]);
        assert_eq!(res.u, QuatMatrix::identity(3));
    }

    #[test]
    fn svd_sigma_invariant_under_unitary_factors() {
        let mut rng = ChaCha8Rng::seed_from_u64(35);
        let a = synth::random_matrix(5, 5, &mut rng);
        let base = svd(&a).unwrap();
        let u = synth::random_unitary(5, &mut rng);
        let w = synth::random_unitary(5, &mut rng);
        let rotated = u.matmul(&a).unwrap().matmul(&w).unwrap();
        let res = svd(&rotated).unwrap();
        for (x, y) in base.sigma.iter().zip(res.sigma.iter()) {
            assert!((x - y).abs() < 1e-9 * base.sigma[0].max(1.0));
        }
    }

    #[test]
    fn alpha_factor_zero_and_scalar() {
        let res = alpha_hermitian_factor(&QuatMatrix::zeros(3, 3), Axis::I).unwrap();
        assert_eq!(res.lambda_alpha, vec![0.0; 3]);
        assert_eq!(res.q_alpha, QuatMatrix::identity(3));

        // 1x1 [j] is i-Hermitian: j^{i*} = j.
        let a = QuatMatrix::from_rows(&[vec![Axis::J.unit()]]).unwrap();
        let res = alpha_hermitian_factor(&a, Axis::I).unwrap();
        assert!((res.lambda_alpha[0] - 1.0).abs() < 1e-12);
        assert!(res.residual < 1e-12);
        let recon = res.q_alpha.hermitian()
            .matmul(&QuatMatrix::from_real_diag(&res.lambda_alpha)).unwrap()
            .matmul(&res.q_alpha.involution(Axis::I)).unwrap();
        assert!((recon[(0, 0)] - Axis::J.unit()).modulus() < 1e-12);
    }

    #[test]
    fn alpha_factor_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(36);
        for axis in Axis::ALL {
            let a = synth::random_alpha_hermitian(6, axis, &mut rng);
            let res = alpha_hermitian_factor(&a, axis).unwrap();
            assert!(res.residual < 1e-10, "axis {axis} residual {}", res.residual);
            assert!(res.q_alpha.unitarity_defect() < 1e-10);
            assert!(res.lambda_alpha.iter().all(|&l| l >= 0.0));
            assert!(res.lambda_alpha.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn alpha_factor_identity_like_spectrum() {
        // Repeated singular values keep the pairing structure intact.
        let a = QuatMatrix::from_real_diag(&[2.0, 2.0, 2.0]);
        let res = alpha_hermitian_factor(&a, Axis::K).unwrap();
        assert!(res.residual < 1e-12);
        let d = QuatMatrix::from_fn(2, 2, |r, c| {
            if r == c { Axis::J.unit() } else { Quaternion::zero() }
        });
        let res = alpha_hermitian_factor(&d, Axis::I).unwrap();
        assert!(res.residual < 1e-10, "residual {}", res.residual);
    }

    #[test]
    fn alpha_factor_rejects_wrong_structure() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let a = synth::random_hermitian(4, &mut rng);
        // Hermitian is generically not alpha-Hermitian.
        assert!(matches!(
            alpha_hermitian_factor(&a, Axis::K),
            Err(Error::Structure(_))
        ));
    }

    #[test]
    fn alpha_factor_real_symmetric_matches_eig_magnitudes() {
        let mut rng = ChaCha8Rng::seed_from_u64(38);
        // Real symmetric matrices are Hermitian and alpha-Hermitian at once.
        let b = QuatMatrix::from_fn(5, 5, |r, c| {
            let _ = (r, c);
            Quaternion::from_real(rng.random_range(-1.0..1.0))
        });
        let a = b.add(&b.transpose()).unwrap();
        let eig = eig_hermitian(&a).unwrap();
        let fac = alpha_hermitian_factor(&a, Axis::J).unwrap();
        let mut mags: Vec<f64> = eig.lambda.iter().map(|l| l.abs()).collect();
        mags.sort_by(|x, y| y.partial_cmp(x).unwrap());
        for (m, l) in mags.iter().zip(fac.lambda_alpha.iter()) {
            assert!((m - l).abs() < 1e-9, "{m} vs {l}");
        }
    }

    #[test]
    fn takagi_identity_and_gate() {
        let res = takagi_2x2_symmetric(&QuatMatrix::identity(2)).unwrap();
        assert_eq!(res.lambda, vec![1.0, 1.0]);
        assert!(res.residual < 1e-12);

        // Real off-diagonal example from the commutation family.
        let a = QuatMatrix::from_rows(&[
            vec![Axis::I.unit(), Quaternion::one()],
            vec![Quaternion::one(), Axis::J.unit()],
        ])
        .unwrap();
        assert!(commutation_check(&a));
        let res = takagi_2x2_symmetric(&a).unwrap();
        assert!(res.residual < 1e-10, "residual {}", res.residual);
        assert!(res.u.unitarity_defect() < 1e-10);

        // Neither family: rejected.
        let bad = QuatMatrix::from_rows(&[
            vec![q(1.0, 1.0, 0.0, 0.0), Axis::J.unit()],
            vec![Axis::J.unit(), Quaternion::one()],
        ])
        .unwrap();
        assert!(!commutation_check(&bad));
        assert!(matches!(takagi_2x2_symmetric(&bad), Err(Error::NotFactorable(_))));
    }

    #[test]
    fn takagi_degenerate_cases() {
        // Diagonal with distinct axes: sigma = (1, 1).
        let d = QuatMatrix::from_rows(&[
            vec![Axis::I.unit(), Quaternion::zero()],
            vec![Quaternion::zero(), Axis::J.unit()],
        ])
        .unwrap();
        let res = takagi_2x2_symmetric(&d).unwrap();
        assert!(res.residual < 1e-12);

        // Coupled degenerate case with b - a parallel to the off-diagonal.
        let s2 = 2.0f64.sqrt();
        let off = q(0.0, 1.0 / s2, 1.0 / s2, 0.0);
        let a = QuatMatrix::from_rows(&[
            vec![Axis::I.unit(), off],
            vec![off, -Axis::J.unit()],
        ])
        .unwrap();
        assert!(commutation_check(&a));
        let res = takagi_2x2_symmetric(&a).unwrap();
        assert!(res.residual < 1e-10, "residual {}", res.residual);

        // Equal diagonal entries, real off-diagonal.
        let a = QuatMatrix::from_rows(&[
            vec![Axis::I.unit(), q(0.7, 0.0, 0.0, 0.0)],
            vec![q(0.7, 0.0, 0.0, 0.0), Axis::I.unit()],
        ])
        .unwrap();
        let res = takagi_2x2_symmetric(&a).unwrap();
        assert!(res.residual < 1e-10, "residual {}", res.residual);
    }

    #[test]
    fn takagi_random_families_match_svd() {
        let mut rng = ChaCha8Rng::seed_from_u64(39);
        for family in [
            synth::Symmetric2x2Family::RealDiagonal,
            synth::Symmetric2x2Family::RealOffDiagonal,
        ] {
            for _ in 0..25 {
                let a = synth::random_symmetric_2x2(family, &mut rng);
                assert!(commutation_check(&a), "family {family:?}");
                let res = takagi_2x2_symmetric(&a).unwrap();
                assert!(res.residual < 1e-10, "family {family:?} residual {}", res.residual);
                let sv = svd(&a).unwrap();
                for (l, s) in res.lambda.iter().zip(sv.sigma.iter()) {
                    assert!((l - s).abs() < 1e-10 * sv.sigma[0].max(1.0));
                }
            }
        }
        for _ in 0..25 {
            let a = synth::random_symmetric_2x2(synth::Symmetric2x2Family::Neither, &mut rng);
            assert!(!commutation_check(&a));
            assert!(takagi_2x2_symmetric(&a).is_err());
        }
    }

    #[test]
    fn commutation_check_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(40);
        // Any real symmetric matrix passes.
        let b = QuatMatrix::from_fn(3, 3, |_, _| {
            Quaternion::from_real(rng.random_range(-1.0..1.0))
        });
        let real_sym = b.add(&b.transpose()).unwrap();
        assert!(commutation_check(&real_sym));
    }

    #[test]
    fn obstruction_predicate() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        // Commuting construction: shared unitary, real diagonals.
        let u = synth::random_unitary(4, &mut rng);
        let l1 = QuatMatrix::from_real_diag(&[3.0, 2.5, 1.0, 0.5]);
        let l2 = QuatMatrix::from_real_diag(&[1.5, 1.0, 0.75, 0.25]);
        let cx = u.matmul(&l1).unwrap().matmul(&u.hermitian()).unwrap();
        let cxa = u
            .matmul(&l2)
            .unwrap()
            .matmul(&u.involution(Axis::K).hermitian())
            .unwrap();
        assert!(!unitary_joint_diag_obstruction(&cx, &cxa, Axis::K).unwrap());

        // Vanishing complementary covariance: no obstruction.
        let zero = QuatMatrix::zeros(4, 4);
        assert!(!unitary_joint_diag_obstruction(&cx, &zero, Axis::K).unwrap());

        // Independent factors: obstructed in the generic case.
        let v = synth::random_unitary(4, &mut rng);
        let cxb = v
            .matmul(&l2)
            .unwrap()
            .matmul(&v.involution(Axis::K).hermitian())
            .unwrap();
        assert!(unitary_joint_diag_obstruction(&cx, &cxb, Axis::K).unwrap());
    }

    #[test]
    fn decomposition_stress_32x32() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let h = synth::random_hermitian(32, &mut rng);
        let res = eig_hermitian(&h).unwrap();
        assert!(res.residual < 1e-10, "eig residual {}", res.residual);
        assert!(res.q.unitarity_defect() < 1e-10);

        let g = synth::random_matrix(32, 32, &mut rng);
        let res = svd(&g).unwrap();
        assert!(res.residual < 1e-10, "svd residual {}", res.residual);

        let aa = synth::random_alpha_hermitian(32, Axis::J, &mut rng);
        let res = alpha_hermitian_factor(&aa, Axis::J).unwrap();
        assert!(res.residual < 1e-10, "alpha residual {}", res.residual);
    }
}
