//! Dense Hermitian eigendecomposition and derived operator norms.

use ndarray::{Array1, Array2};
use ndarray_linalg::{Eigh, UPLO};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Eigendecomposition result; eigenvalues ascending, eigenvector columns
/// orthonormal when present.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Option<Array2<Complex64>>,
}

impl Spectrum {
    /// First `k` eigenvalues (ascending).
    pub fn lowest(&self, k: usize) -> &[f64] {
        &self.eigenvalues[..k.min(self.eigenvalues.len())]
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues[0]
    }
}

fn max_abs(m: &Array2<Complex64>) -> f64 {
    m.iter().fold(0.0f64, |acc, z| acc.max(z.norm()))
}

/// Largest entry of `M - M^dag` relative to the largest entry of `M`.
pub fn hermitian_deviation(m: &Array2<Complex64>) -> f64 {
    let scale = max_abs(m);
    if scale == 0.0 {
        return 0.0;
    }
    let n = m.nrows();
    let mut dev = 0.0f64;
    for i in 0..n {
        for j in i..n {
            dev = dev.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    dev / scale
}

/// Full spectrum of a Hermitian matrix. Rejects matrices whose Hermitian
/// deviation exceeds `1e-8` relative; verifies the residual
/// `||Mv - lambda v|| <= 1e-8 ||M||` for every pair and the orthonormality of
/// the eigenvector columns.
pub fn hermitian_eigen(m: &Array2<Complex64>) -> Result<Spectrum> {
    hermitian_eigen_tol(m, 1e-8)
}

/// Same as [`hermitian_eigen`] with a caller-chosen Hermitian-deviation gate.
pub fn hermitian_eigen_tol(m: &Array2<Complex64>, dev_limit: f64) -> Result<Spectrum> {
    if m.nrows() != m.ncols() {
        return Err(Error::Invalid(format!(
            "matrix is {}x{}, expected square",
            m.nrows(),
            m.ncols()
        )));
    }
    let deviation = hermitian_deviation(m);
    if deviation > dev_limit {
        return Err(Error::NotHermitian {
            deviation,
            limit: dev_limit,
        });
    }
    // Symmetrize before factorizing so the deviation allowance cannot leak
    // into the spectrum.
    let n = m.nrows();
    let mut h = m.clone();
    for i in 0..n {
        for j in 0..n {
            h[(i, j)] = 0.5 * (m[(i, j)] + m[(j, i)].conj());
        }
    }
    let (vals, vecs) = h
        .eigh(UPLO::Lower)
        .map_err(|e| Error::Eigen(e.to_string()))?;
    // The backend hands row-major data to LAPACK unconjugated, so for complex
    // Hermitian input it factorizes A^T = conj(A); undo that here. The
    // residual loop below re-verifies M v_k = lambda_k v_k columnwise.
    let vecs = vecs.mapv(|z| z.conj());

    let scale = max_abs(&h) * (n as f64).sqrt();
    let mv = h.dot(&vecs);
    for (k, &lambda) in vals.iter().enumerate() {
        let mut resid = 0.0f64;
        for i in 0..n {
            resid += (mv[(i, k)] - vecs[(i, k)] * Complex64::from(lambda)).norm_sqr();
        }
        if resid.sqrt() > 1e-8 * scale.max(1e-300) {
            return Err(Error::Eigen(format!(
                "residual {:.3e} for eigenvalue {lambda}",
                resid.sqrt()
            )));
        }
    }
    let gram = vecs.t().mapv(|z| z.conj()).dot(&vecs);
    for i in 0..n {
        for j in 0..n {
            let expect = if i == j { 1.0 } else { 0.0 };
            if (gram[(i, j)] - Complex64::from(expect)).norm() > 1e-10 {
                return Err(Error::Eigen("eigenvector columns not orthonormal".into()));
            }
        }
    }
    Ok(Spectrum {
        eigenvalues: vals.to_vec(),
        eigenvectors: Some(vecs),
    })
}

/// Singular values in descending order, computed from the Hermitian Gram
/// matrix `M^dag M`.
pub fn singular_values(m: &Array2<Complex64>) -> Result<Vec<f64>> {
    let gram = m.t().mapv(|z| z.conj()).dot(m);
    let spec = hermitian_eigen_tol(&gram, 1e-10)?;
    let mut sv: Vec<f64> = spec
        .eigenvalues
        .iter()
        .map(|&l| l.max(0.0).sqrt())
        .collect();
    sv.reverse();
    Ok(sv)
}

/// Operator (spectral) norm: the largest singular value.
pub fn operator_norm(m: &Array2<Complex64>) -> Result<f64> {
    Ok(singular_values(m)?[0])
}

/// Least-squares line fit `y = slope * x + intercept`.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        num += (x - mx) * (y - my);
        den += (x - mx) * (x - mx);
    }
    let slope = num / den;
    (slope, my - slope * mx)
}

/// Dense matrix of the forward transform, `F[m, j] = h exp(-i v_m s_j)`.
pub fn dft_matrix(grid: &crate::numerics::grid::Grid) -> Array2<Complex64> {
    let n = grid.len();
    let dual = grid.dual();
    let h = grid.spacing();
    Array2::from_shape_fn((n, n), |(m, j)| {
        Complex64::from_polar(h, -dual.node(m) * grid.node(j))
    })
}

/// Applies an operator given as `values -> values` to the identity, producing
/// its dense matrix.
pub fn operator_matrix(
    n: usize,
    mut apply: impl FnMut(&Array1<Complex64>) -> Array1<Complex64>,
) -> Array2<Complex64> {
    let mut out = Array2::zeros((n, n));
    for j in 0..n {
        let mut e = Array1::zeros(n);
        e[j] = Complex64::from(1.0);
        let col = apply(&e);
        for i in 0..n {
            out[(i, j)] = col[i];
        }
    }
    out
}
