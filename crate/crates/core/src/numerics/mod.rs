//! Grids, transforms, interpolation and dense Hermitian linear algebra.

pub mod eigen;
pub mod fft;
pub mod grid;
pub mod interp;

pub use eigen::{
    hermitian_deviation, hermitian_eigen, hermitian_eigen_tol, linear_fit, operator_norm,
    singular_values, Spectrum,
};
pub use fft::{derivative, dft, dft_at, idft, shift};
pub use grid::{gaussian, Field1D, Field2D, Grid};

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::Array2;
    use num_complex::Complex64;

    // Discretized s^2 - d^2/ds^2 has the oscillator spectrum {1, 3, 5, ...}.
    #[test]
    fn harmonic_oscillator_spectrum() {
        let g = Grid::new(10.0, 512).unwrap();
        let n = g.len();
        let b = eigen::operator_matrix(n, |col| {
            let f = Field1D::new(g, col.clone()).unwrap();
            fft::derivative_unchecked(&f)
                .into_values()
                .mapv(|z| z * Complex64::new(0.0, -1.0))
        });
        let mut h = b.dot(&b);
        for j in 0..n {
            let s = g.node(j);
            h[(j, j)] += Complex64::from(s * s);
        }
        let spec = hermitian_eigen_tol(&h, 1e-10).unwrap();
        for (k, &lambda) in spec.lowest(10).iter().enumerate() {
            assert!(
                (lambda - (2 * k + 1) as f64).abs() < 1e-6,
                "mode {k}: {lambda}"
            );
        }
    }

    // Conjugating by the unitary scaled transform matrix leaves the spectrum
    // unchanged.
    #[test]
    fn spectrum_invariant_under_fourier_conjugation() {
        let g = Grid::new(6.0, 64).unwrap();
        let n = g.len();
        let mut m = Array2::<Complex64>::zeros((n, n));
        for j in 0..n {
            let s = g.node(j);
            m[(j, j)] = Complex64::from(s * s);
            if j + 1 < n {
                m[(j, j + 1)] = Complex64::new(0.3, 0.1);
                m[(j + 1, j)] = Complex64::new(0.3, -0.1);
            }
        }
        let f = eigen::dft_matrix(&g);
        let scale = (2.0 * g.half_width() * g.spacing()).sqrt();
        let u = f.mapv(|z| z / scale);
        let udag = u.t().mapv(|z| z.conj());
        let conj = udag.dot(&m).dot(&u);
        let s1 = hermitian_eigen_tol(&m, 1e-10).unwrap();
        let s2 = hermitian_eigen_tol(&conj, 1e-6).unwrap();
        for (a, b) in s1.eigenvalues.iter().zip(s2.eigenvalues.iter()) {
            assert!((a - b).abs() < 1e-8 * (1.0 + a.abs()));
        }
    }
}
