//! Uniform grids on `[-L, L)` and complex-valued sampled fields.
//!
//! Every discretized object in the crate lives on such a grid. The dual
//! grid (returned by [`Grid::dual`]) carries the discrete Fourier
//! frequencies `[-pi/h, pi/h)` and is itself a valid `Grid`, so transforms
//! map fields to fields.

use ndarray::{Array1, Array2};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Uniform grid of `n` nodes `s_j = -L + j*h`, `h = 2L/n`, `j = 0..n-1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    half_width: f64,
    n: usize,
}

impl Grid {
    /// Builds a grid; `n` must be a power of two and at least 8.
    pub fn new(half_width: f64, n: usize) -> Result<Self> {
        if !(half_width > 0.0 && half_width.is_finite()) {
            return Err(Error::NonPositiveLength(half_width));
        }
        if n < 8 {
            return Err(Error::GridTooSmall(n));
        }
        if !n.is_power_of_two() {
            return Err(Error::NonPowerOfTwo(n));
        }
        Ok(Grid { half_width, n })
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Node spacing `2L/n`.
    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / self.n as f64
    }

    pub fn node(&self, j: usize) -> f64 {
        -self.half_width + j as f64 * self.spacing()
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n).map(|j| self.node(j)).collect()
    }

    /// Frequency grid of the discrete transform: half-width `pi/h`, same `n`.
    pub fn dual(&self) -> Grid {
        Grid {
            half_width: std::f64::consts::PI / self.spacing(),
            n: self.n,
        }
    }

    /// True when `x` lies inside `[s_0, s_{n-1}]`.
    pub fn contains(&self, x: f64) -> bool {
        x >= -self.half_width && x <= self.node(self.n - 1)
    }

    /// Index of the node equal to `x` up to `1e-9 * h`, if any.
    pub fn index_of(&self, x: f64) -> Option<usize> {
        let h = self.spacing();
        let t = (x + self.half_width) / h;
        let j = t.round();
        if (t - j).abs() <= 1e-9 && j >= 0.0 && (j as usize) < self.n {
            Some(j as usize)
        } else {
            None
        }
    }

    /// Grids are interchangeable when both parameters agree to 1e-12 relative.
    pub fn approx_eq(&self, other: &Grid) -> bool {
        self.n == other.n
            && (self.half_width - other.half_width).abs()
                <= 1e-12 * self.half_width.max(other.half_width)
    }
}

/// Complex field sampled on a [`Grid`].
#[derive(Debug, Clone)]
pub struct Field1D {
    grid: Grid,
    values: Array1<Complex64>,
}

impl Field1D {
    pub fn new(grid: Grid, values: Array1<Complex64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::LengthMismatch {
                expected: grid.len(),
                actual: values.len(),
            });
        }
        if let Some(j) = values.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite(j));
        }
        Ok(Field1D { grid, values })
    }

    pub fn zeros(grid: Grid) -> Self {
        Field1D {
            grid,
            values: Array1::zeros(grid.len()),
        }
    }

    pub fn from_fn(grid: Grid, f: impl Fn(f64) -> Complex64) -> Self {
        let values = Array1::from_iter((0..grid.len()).map(|j| f(grid.node(j))));
        Field1D { grid, values }
    }

    pub fn grid(&self) -> &Grid {
        self.grid_ref()
    }

    fn grid_ref(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &Array1<Complex64> {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut Array1<Complex64> {
        &mut self.values
    }

    pub fn into_values(self) -> Array1<Complex64> {
        self.values
    }

    /// Riemann quadrature `h * sum f(s_j)`; spectrally accurate for smooth
    /// fields decaying inside the hull.
    pub fn quadrature(&self) -> Complex64 {
        self.values.sum() * Complex64::from(self.grid.spacing())
    }

    /// `h * sum conj(a_j) b_j`, the discrete L2 pairing.
    pub fn inner(&self, other: &Field1D) -> Result<Complex64> {
        if !self.grid.approx_eq(&other.grid) {
            return Err(Error::GridMismatch);
        }
        let s: Complex64 = self
            .values
            .iter()
            .zip(other.values.iter())
            .map(|(a, b)| a.conj() * b)
            .sum();
        Ok(s * Complex64::from(self.grid.spacing()))
    }

    pub fn norm_l2(&self) -> f64 {
        let s: f64 = self.values.iter().map(|z| z.norm_sqr()).sum();
        (s * self.grid.spacing()).sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, z| m.max(z.norm()))
    }

    /// Largest magnitude on the two boundary nodes.
    pub fn edge_magnitude(&self) -> f64 {
        let n = self.values.len();
        self.values[0].norm().max(self.values[n - 1].norm())
    }

    /// Errors when boundary values exceed `rel * max|f|`.
    pub fn require_edge_decay(&self, rel: f64) -> Result<()> {
        let limit = rel * self.max_abs();
        let edge = self.edge_magnitude();
        if edge > limit && limit > 0.0 {
            return Err(Error::EdgeLeakage { edge, limit });
        }
        Ok(())
    }

    pub fn map(&self, f: impl Fn(f64, Complex64) -> Complex64) -> Field1D {
        let values = Array1::from_iter(
            (0..self.grid.len()).map(|j| f(self.grid.node(j), self.values[j])),
        );
        Field1D {
            grid: self.grid,
            values,
        }
    }

    pub fn scaled(&self, c: Complex64) -> Field1D {
        Field1D {
            grid: self.grid,
            values: self.values.mapv(|z| z * c),
        }
    }

    pub fn add(&self, other: &Field1D) -> Result<Field1D> {
        if !self.grid.approx_eq(&other.grid) {
            return Err(Error::GridMismatch);
        }
        Ok(Field1D {
            grid: self.grid,
            values: &self.values + &other.values,
        })
    }

    pub fn sub(&self, other: &Field1D) -> Result<Field1D> {
        Ok(self.add(&other.scaled(Complex64::from(-1.0)))?)
    }
}

/// Complex field sampled on a tensor grid; axis 0 is the first variable,
/// axis 1 the second.
#[derive(Debug, Clone)]
pub struct Field2D {
    grid_a: Grid,
    grid_b: Grid,
    values: Array2<Complex64>,
}

impl Field2D {
    pub fn new(grid_a: Grid, grid_b: Grid, values: Array2<Complex64>) -> Result<Self> {
        if values.shape() != [grid_a.len(), grid_b.len()] {
            return Err(Error::LengthMismatch {
                expected: grid_a.len() * grid_b.len(),
                actual: values.len(),
            });
        }
        if let Some(j) = values
            .iter()
            .position(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite(j));
        }
        Ok(Field2D {
            grid_a,
            grid_b,
            values,
        })
    }

    pub fn zeros(grid_a: Grid, grid_b: Grid) -> Self {
        Field2D {
            grid_a,
            grid_b,
            values: Array2::zeros((grid_a.len(), grid_b.len())),
        }
    }

    pub fn from_fn(grid_a: Grid, grid_b: Grid, f: impl Fn(f64, f64) -> Complex64) -> Self {
        let values = Array2::from_shape_fn((grid_a.len(), grid_b.len()), |(i, j)| {
            f(grid_a.node(i), grid_b.node(j))
        });
        Field2D {
            grid_a,
            grid_b,
            values,
        }
    }

    pub fn grid_a(&self) -> &Grid {
        &self.grid_a
    }

    pub fn grid_b(&self) -> &Grid {
        &self.grid_b
    }

    pub fn values(&self) -> &Array2<Complex64> {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut Array2<Complex64> {
        &mut self.values
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, z| m.max(z.norm()))
    }

    /// Sup-norm of the difference; grids must agree.
    pub fn sup_distance(&self, other: &Field2D) -> Result<f64> {
        if !self.grid_a.approx_eq(&other.grid_a) || !self.grid_b.approx_eq(&other.grid_b) {
            return Err(Error::GridMismatch);
        }
        Ok(self
            .values
            .iter()
            .zip(other.values.iter())
            .fold(0.0f64, |m, (a, b)| m.max((a - b).norm())))
    }
}

/// Normalized Gaussian wave packet
/// `C exp(-(s-center)^2 / (2 width^2)) exp(i momentum s)` with unit L2 norm.
pub fn gaussian(grid: Grid, center: f64, width: f64, momentum: f64) -> Result<Field1D> {
    if !(width > 0.0) {
        return Err(Error::Invalid(format!("gaussian width {width} must be positive")));
    }
    if center.abs() + 6.0 * width >= grid.half_width() {
        return Err(Error::SupportOverflow(format!(
            "|center| + 6 width = {} exceeds half-width {}",
            center.abs() + 6.0 * width,
            grid.half_width()
        )));
    }
    let raw = Field1D::from_fn(grid, |s| {
        let env = (-(s - center).powi(2) / (2.0 * width * width)).exp();
        Complex64::from_polar(env, momentum * s)
    });
    let norm = raw.norm_l2();
    Ok(raw.scaled(Complex64::from(1.0 / norm)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_arithmetic() {
        let g = Grid::new(10.0, 512).unwrap();
        assert_eq!(g.spacing(), 0.0390625);
        assert_eq!(g.node(0), -10.0);
        let g2 = Grid::new(1.0, 8).unwrap();
        let nodes = g2.nodes();
        assert_eq!(nodes[0], -1.0);
        assert_eq!(nodes[1], -0.75);
        assert_eq!(nodes[7], 0.75);
    }

    #[test]
    fn grid_rejects_bad_input() {
        assert!(matches!(Grid::new(10.0, 500), Err(Error::NonPowerOfTwo(500))));
        assert!(matches!(Grid::new(0.0, 512), Err(Error::NonPositiveLength(_))));
        assert!(matches!(Grid::new(-1.0, 512), Err(Error::NonPositiveLength(_))));
        assert!(matches!(Grid::new(1.0, 4), Err(Error::GridTooSmall(4))));
    }

    #[test]
    fn dual_grid_is_involutive() {
        let g = Grid::new(10.0, 512).unwrap();
        let d = g.dual();
        assert!((d.spacing() * g.spacing() * g.len() as f64 - 2.0 * std::f64::consts::PI).abs() < 1e-12);
        assert!(g.dual().dual().approx_eq(&g));
    }

    #[test]
    fn quadrature_of_normalized_gaussian() {
        let g = Grid::new(10.0, 512).unwrap();
        // |pi^(-1/4) exp(-s^2/2)|^2 integrates to 1.
        let f = Field1D::from_fn(g, |s| {
            Complex64::from(std::f64::consts::PI.powf(-0.25) * (-s * s / 2.0).exp())
        });
        let sq = Field1D::from_fn(g, |s| {
            Complex64::from((std::f64::consts::PI.powf(-0.25) * (-s * s / 2.0).exp()).powi(2))
        });
        assert!((sq.quadrature().re - 1.0).abs() < 1e-12);
        assert!((f.norm_l2() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn quadrature_closed_forms() {
        let g = Grid::new(10.0, 512).unwrap();
        let f = Field1D::from_fn(g, |s| Complex64::from((-s * s).exp()));
        assert!((f.quadrature().re - std::f64::consts::PI.sqrt()).abs() < 1e-10);
        let z = Field1D::zeros(g);
        assert_eq!(z.quadrature(), Complex64::from(0.0));
    }

    #[test]
    fn gaussian_moments() {
        let g = Grid::new(10.0, 512).unwrap();
        let centered = gaussian(g, 0.0, 1.0, 0.0).unwrap();
        let x_mean: f64 = (0..g.len())
            .map(|j| g.node(j) * centered.values()[j].norm_sqr())
            .sum::<f64>()
            * g.spacing();
        assert!(x_mean.abs() < 1e-12);

        let shifted = gaussian(g, 2.0, 1.0, 0.0).unwrap();
        let x_mean: f64 = (0..g.len())
            .map(|j| g.node(j) * shifted.values()[j].norm_sqr())
            .sum::<f64>()
            * g.spacing();
        assert!((x_mean - 2.0).abs() < 1e-10);

        assert!(matches!(
            gaussian(g, 8.0, 1.0, 0.0),
            Err(Error::SupportOverflow(_))
        ));
    }
}
