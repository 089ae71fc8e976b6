//! Minimal dense complex linear algebra on the 4x4 (and 2x2) Hermitian
//! matrices this problem lives in: spectra, entropies, partial traces over a
//! qubit, and a positive-semidefinite square root.  Backed by `nalgebra`'s
//! Hermitian eigensolver; everything else is direct arithmetic.

use nalgebra::linalg::SymmetricEigen;
use nalgebra::{Matrix2, Matrix4, Vector4};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol;

pub type CMat4 = Matrix4<Complex64>;
pub type CMat2 = Matrix2<Complex64>;
pub type CVec4 = nalgebra::Vector4<Complex64>;

/// Real number as a complex scalar.
#[inline]
pub fn cr(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Imaginary number as a complex scalar.
#[inline]
pub fn ci(x: f64) -> Complex64 {
    Complex64::new(0.0, x)
}

/// `x log2 x` with the `0 log 0 = 0` convention (values below the eigenvalue
/// clip count as zero).
#[inline]
pub(crate) fn xlog2x(x: f64) -> f64 {
    if x < tol::EIG_CLIP {
        0.0
    } else {
        x * x.log2()
    }
}

fn all_finite4(m: &CMat4) -> bool {
    m.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

fn all_finite2(m: &CMat2) -> bool {
    m.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

/// Largest entrywise modulus of the difference of two matrices.
pub fn max_abs_diff4(a: &CMat4, b: &CMat4) -> f64 {
    (a - b).iter().fold(0.0f64, |acc, z| acc.max(z.norm()))
}

pub fn max_abs_diff2(a: &CMat2, b: &CMat2) -> f64 {
    (a - b).iter().fold(0.0f64, |acc, z| acc.max(z.norm()))
}

/// Spectrum of a 4x4 Hermitian matrix, eigenvalues sorted descending.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianSpectrum {
    eigenvalues: [f64; 4],
}

impl HermitianSpectrum {
    /// Eigenvalues in descending order.
    pub fn eigenvalues(&self) -> [f64; 4] {
        self.eigenvalues
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues[3]
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }
}

/// Eigenvalues of a (nominally) Hermitian 4x4 matrix.  The input is
/// symmetrized as `(M + M+)/2` before decomposition, so mild non-Hermitian
/// round-off is tolerated; non-finite entries are rejected.
pub fn eig_hermitian(m: &CMat4) -> Result<HermitianSpectrum> {
    if !all_finite4(m) {
        return Err(Error::Input("eig_hermitian: non-finite entry".into()));
    }
    let h = (m + m.adjoint()).map(|z| 0.5 * z);
    let eig = SymmetricEigen::new(h);
    let mut vals = [
        eig.eigenvalues[0],
        eig.eigenvalues[1],
        eig.eigenvalues[2],
        eig.eigenvalues[3],
    ];
    vals.sort_by(|a, b| b.partial_cmp(a).expect("real eigenvalues"));
    Ok(HermitianSpectrum { eigenvalues: vals })
}

/// Eigenvalues and eigenvectors (columns, same order as the values, values
/// descending) of a Hermitian 4x4 matrix.
pub(crate) fn eig_hermitian_full(m: &CMat4) -> Result<(Vector4<f64>, CMat4)> {
    if !all_finite4(m) {
        return Err(Error::Input("eig_hermitian: non-finite entry".into()));
    }
    let h = (m + m.adjoint()).map(|z| 0.5 * z);
    let eig = SymmetricEigen::new(h);
    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&i, &j| {
        eig.eigenvalues[j]
            .partial_cmp(&eig.eigenvalues[i])
            .expect("real eigenvalues")
    });
    let vals = Vector4::new(
        eig.eigenvalues[order[0]],
        eig.eigenvalues[order[1]],
        eig.eigenvalues[order[2]],
        eig.eigenvalues[order[3]],
    );
    let mut vecs = CMat4::zeros();
    for (new_col, &old_col) in order.iter().enumerate() {
        vecs.set_column(new_col, &eig.eigenvectors.column(old_col));
    }
    Ok((vals, vecs))
}

/// Eigenvalues of a Hermitian 2x2 matrix in closed form, descending.
pub fn eig_hermitian2(m: &CMat2) -> Result<[f64; 2]> {
    if !all_finite2(m) {
        return Err(Error::Input("eig_hermitian2: non-finite entry".into()));
    }
    let a = m[(0, 0)].re;
    let d = m[(1, 1)].re;
    let b = 0.5 * (m[(0, 1)] + m[(1, 0)].conj());
    let mid = 0.5 * (a + d);
    let half_gap = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
    Ok([mid + half_gap, mid - half_gap])
}

fn entropy_of_spectrum(vals: &[f64]) -> Result<f64> {
    let total: f64 = vals.iter().sum();
    if (total - 1.0).abs() > tol::DENSITY_TOL {
        return Err(Error::State(format!(
            "entropy: trace {total:.3e} is not 1 within {:.0e}",
            tol::DENSITY_TOL
        )));
    }
    let mut s = 0.0;
    for &lam in vals {
        if lam < tol::NEG_EIG_ERR {
            return Err(Error::State(format!(
                "entropy: eigenvalue {lam:.3e} below {:.0e}",
                tol::NEG_EIG_ERR
            )));
        }
        s -= xlog2x(lam);
    }
    Ok(s.max(0.0))
}

/// Von Neumann entropy in bits of a 4x4 density matrix.  Eigenvalues below
/// the clip threshold are treated as zero; a trace away from one or an
/// eigenvalue below the negative-eigenvalue floor is an error.
pub fn von_neumann_entropy(rho: &CMat4) -> Result<f64> {
    let spec = eig_hermitian(rho)?;
    entropy_of_spectrum(&spec.eigenvalues())
}

/// Von Neumann entropy in bits of a 2x2 density matrix.
pub fn von_neumann_entropy2(rho: &CMat2) -> Result<f64> {
    let vals = eig_hermitian2(rho)?;
    entropy_of_spectrum(&vals)
}

/// Entropy of an already-normalized 2x2 state without re-validating the
/// trace (used in inner measurement loops where normalization is exact by
/// construction).
pub(crate) fn entropy2_unchecked(rho: &CMat2) -> f64 {
    let a = rho[(0, 0)].re;
    let d = rho[(1, 1)].re;
    let b = 0.5 * (rho[(0, 1)] + rho[(1, 0)].conj());
    let mid = 0.5 * (a + d);
    let half_gap = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
    (-xlog2x(mid + half_gap) - xlog2x(mid - half_gap)).max(0.0)
}

/// Entropy of a 4x4 Hermitian state without trace validation.
pub(crate) fn entropy4_unchecked(rho: &CMat4) -> f64 {
    let spec = eig_hermitian(rho).expect("finite matrix");
    let mut s = 0.0;
    for lam in spec.eigenvalues() {
        s -= xlog2x(lam);
    }
    s.max(0.0)
}

/// Reduced state of the first qubit: trace over the second tensor factor.
/// Basis ordering is `|q1 q2> -> 2*q1 + q2`.
pub fn reduce_to_a(rho: &CMat4) -> CMat2 {
    CMat2::new(
        rho[(0, 0)] + rho[(1, 1)],
        rho[(0, 2)] + rho[(1, 3)],
        rho[(2, 0)] + rho[(3, 1)],
        rho[(2, 2)] + rho[(3, 3)],
    )
}

/// Reduced state of the second qubit: trace over the first tensor factor.
pub fn reduce_to_b(rho: &CMat4) -> CMat2 {
    CMat2::new(
        rho[(0, 0)] + rho[(2, 2)],
        rho[(0, 1)] + rho[(2, 3)],
        rho[(1, 0)] + rho[(3, 2)],
        rho[(1, 1)] + rho[(3, 3)],
    )
}

/// Check that a matrix is a valid density matrix: finite, Hermitian, unit
/// trace, and positive semidefinite, all within [`tol::DENSITY_TOL`].
pub fn validate_density4(rho: &CMat4) -> Result<()> {
    if !all_finite4(rho) {
        return Err(Error::Input("density matrix: non-finite entry".into()));
    }
    let herm = max_abs_diff4(rho, &rho.adjoint());
    if herm > tol::DENSITY_TOL {
        return Err(Error::State(format!(
            "density matrix: Hermiticity residual {herm:.3e}"
        )));
    }
    let tr = rho.trace().re;
    if (tr - 1.0).abs() > tol::DENSITY_TOL {
        return Err(Error::State(format!("density matrix: trace {tr:.12}")));
    }
    let spec = eig_hermitian(rho)?;
    if spec.min() < -tol::DENSITY_TOL {
        return Err(Error::State(format!(
            "density matrix: negative eigenvalue {:.3e}",
            spec.min()
        )));
    }
    Ok(())
}

/// Positive-semidefinite square root via the spectral decomposition; small
/// negative eigenvalues are clamped to zero.
pub(crate) fn matrix_sqrt_psd(m: &CMat4) -> Result<CMat4> {
    let (vals, vecs) = eig_hermitian_full(m)?;
    let mut out = CMat4::zeros();
    for k in 0..4 {
        let lam = vals[k].max(0.0).sqrt();
        if lam > 0.0 {
            let v = vecs.column(k);
            // out += lam * v v+
            for i in 0..4 {
                for j in 0..4 {
                    out[(i, j)] += cr(lam) * v[i] * v[j].conj();
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag4(a: f64, b: f64, c: f64, d: f64) -> CMat4 {
        CMat4::from_diagonal(&CVec4::new(cr(a), cr(b), cr(c), cr(d)))
    }

    #[test]
    fn eigenvalues_of_diagonal_density() {
        let spec = eig_hermitian(&diag4(0.1, 0.7, 0.0, 0.2)).unwrap();
        let vals = spec.eigenvalues();
        assert!((vals[0] - 0.7).abs() < 1e-14);
        assert!((vals[1] - 0.2).abs() < 1e-14);
        assert!((vals[2] - 0.1).abs() < 1e-14);
        assert!(vals[3].abs() < 1e-14);
    }

    #[test]
    fn eigenvalues_of_maximally_mixed() {
        let spec = eig_hermitian(&diag4(0.25, 0.25, 0.25, 0.25)).unwrap();
        for v in spec.eigenvalues() {
            assert!((v - 0.25).abs() < 1e-14);
        }
    }

    #[test]
    fn eigenvalues_of_bell_projector() {
        // |psi+><psi+| with |psi+> = (|01> + |10>)/sqrt(2)
        let mut m = CMat4::zeros();
        for i in [1usize, 2] {
            for j in [1usize, 2] {
                m[(i, j)] = cr(0.5);
            }
        }
        let spec = eig_hermitian(&m).unwrap();
        let vals = spec.eigenvalues();
        assert!((vals[0] - 1.0).abs() < 1e-12);
        for v in &vals[1..] {
            assert!(v.abs() < 1e-12);
        }
    }

    #[test]
    fn eigen_reconstruction_residual_is_small() {
        // A dense Hermitian matrix with known construction.
        let mut m = CMat4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                let re = 0.1 * (i as f64 + 1.0) * (j as f64 + 1.0);
                let im = if i == j { 0.0 } else { 0.03 * (i as f64 - j as f64) };
                m[(i, j)] = Complex64::new(re, im);
            }
        }
        let h = (m + m.adjoint()).map(|z| 0.5 * z);
        let (vals, vecs) = eig_hermitian_full(&h).unwrap();
        let mut rec = CMat4::zeros();
        for k in 0..4 {
            let v = vecs.column(k);
            for i in 0..4 {
                for j in 0..4 {
                    rec[(i, j)] += cr(vals[k]) * v[i] * v[j].conj();
                }
            }
        }
        assert!(max_abs_diff4(&h, &rec) < 1e-10);
        // descending order
        assert!(vals[0] >= vals[1] && vals[1] >= vals[2] && vals[2] >= vals[3]);
    }

    #[test]
    fn entropy_known_values() {
        // pure state
        assert!(von_neumann_entropy(&diag4(1.0, 0.0, 0.0, 0.0)).unwrap() < 1e-12);
        // one classical bit
        let s = von_neumann_entropy(&diag4(0.5, 0.5, 0.0, 0.0)).unwrap();
        assert!((s - 1.0).abs() < 1e-12);
        // maximally mixed two-qubit state
        let s = von_neumann_entropy(&diag4(0.25, 0.25, 0.25, 0.25)).unwrap();
        assert!((s - 2.0).abs() < 1e-12);
    }

    #[test]
    fn entropy2_known_values() {
        let m = CMat2::new(cr(0.5), cr(0.0), cr(0.0), cr(0.5));
        assert!((von_neumann_entropy2(&m).unwrap() - 1.0).abs() < 1e-12);
        let pure = CMat2::new(cr(1.0), cr(0.0), cr(0.0), cr(0.0));
        assert!(von_neumann_entropy2(&pure).unwrap() < 1e-12);
    }

    #[test]
    fn entropy_rejects_bad_states() {
        assert!(von_neumann_entropy(&diag4(0.5, 0.5, 0.5, 0.0)).is_err());
        assert!(von_neumann_entropy(&diag4(1.1, -0.1, 0.0, 0.0)).is_err());
        let mut m = diag4(1.0, 0.0, 0.0, 0.0);
        m[(0, 0)] = Complex64::new(f64::NAN, 0.0);
        assert!(von_neumann_entropy(&m).is_err());
    }

    #[test]
    fn entropy_invariant_under_permutation() {
        let a = diag4(0.4, 0.3, 0.2, 0.1);
        let b = diag4(0.1, 0.2, 0.4, 0.3);
        let sa = von_neumann_entropy(&a).unwrap();
        let sb = von_neumann_entropy(&b).unwrap();
        assert!((sa - sb).abs() < 1e-13);
    }

    #[test]
    fn entropy_invariant_under_unitary_conjugation() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let rho = diag4(0.55, 0.25, 0.15, 0.05);
        for _ in 0..20 {
            // random unitary from the QR of a Ginibre matrix
            let g = CMat4::from_fn(|_, _| {
                Complex64::new(rng.gen range_hack(), rng.gen_range(-1.0..1.0))
            });
            let q = g.qr().q();
            let rotated = q * rho * q.adjoint();
            let s = von_neumann_entropy(&rotated).unwrap();
            let s0 = von_neumann_entropy(&rho).unwrap();
            assert!((s - s0).abs() < 1e-10, "entropy changed: {s} vs {s0}");
        }
    }

    #[test]
    fn partial_traces_of_product_state() {
        // |0><0| (x) I/2
        let m = diag4(0.5, 0.5, 0.0, 0.0);
        let a = reduce_to_a(&m);
        let b = reduce_to_b(&m);
        assert!((a[(0, 0)].re - 1.0).abs() < 1e-15 && a[(1, 1)].re.abs() < 1e-15);
        assert!((b[(0, 0)].re - 0.5).abs() < 1e-15 && (b[(1, 1)].re - 0.5).abs() < 1e-15);
    }

    #[test]
    fn sqrt_squares_back() {
        let m = diag4(0.4, 0.3, 0.2, 0.1);
        let s = matrix_sqrt_psd(&m).unwrap();
        assert!(max_abs_diff4(&(s * s), &m) < 1e-12);
    }
}
