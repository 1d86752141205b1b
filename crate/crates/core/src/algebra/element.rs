//! Deformed-algebra elements in their three coordinate pictures.
//!
//! An element is a sampled function of two variables together with the
//! deformation parameter `kappa`. The same abstract element can be presented
//! as `F(p0, p1)` (momentum), `f(p0, x1)` (mixed) or `f(x0, x1)` (space);
//! the pictures are related by partial Fourier transforms:
//!
//! - mixed from space: `(1/2pi) * dft` along the first axis,
//! - momentum from mixed: `(1/2pi) * dft` along the second axis,
//!
//! with the inverses carrying the matching `2pi`. Under these normalizations
//! the mixed-picture unit is the delta column at `p0 = 0`, the space unit is
//! the constant 1, and the discretized representations below reproduce the
//! mixed product exactly on the difference lattice.

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::fft::{dft_values, idft_values};
use crate::numerics::grid::{Field2D, Grid};
use crate::numerics::interp;

/// Coordinate picture an element is currently expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Picture {
    /// `F(p0, p1)`, both arguments momenta.
    Momentum,
    /// `f(p0, x1)`, first argument momentum, second spatial.
    Mixed,
    /// `f(x0, x1)`, both arguments spatial.
    Space,
}

impl Picture {
    pub fn name(&self) -> &'static str {
        match self {
            Picture::Momentum => "momentum",
            Picture::Mixed => "mixed",
            Picture::Space => "space",
        }
    }
}

/// Element of the deformed coordinate algebra.
#[derive(Debug, Clone)]
pub struct AlgebraElement {
    picture: Picture,
    data: Field2D,
    kappa: f64,
    hermitian: bool,
    second_axis_constant: bool,
}

fn detect_second_axis_constant(values: &Array2<Complex64>) -> bool {
    let scale = values.iter().fold(0.0f64, |m, z| m.max(z.norm()));
    if scale == 0.0 {
        return true;
    }
    for row in values.rows() {
        let first = row[0];
        for z in row.iter() {
            if (z - first).norm() > 1e-13 * scale {
                return false;
            }
        }
    }
    true
}

impl AlgebraElement {
    pub fn new(picture: Picture, data: Field2D, kappa: f64) -> Result<Self> {
        if !(kappa > 0.0 && kappa.is_finite()) {
            return Err(Error::Invalid(format!(
                "deformation parameter kappa = {kappa} must be positive"
            )));
        }
        let second_axis_constant = detect_second_axis_constant(data.values());
        Ok(AlgebraElement {
            picture,
            data,
            kappa,
            hermitian: false,
            second_axis_constant,
        })
    }

    pub fn mixed(data: Field2D, kappa: f64) -> Result<Self> {
        Self::new(Picture::Mixed, data, kappa)
    }

    pub fn space(data: Field2D, kappa: f64) -> Result<Self> {
        Self::new(Picture::Space, data, kappa)
    }

    pub fn momentum(data: Field2D, kappa: f64) -> Result<Self> {
        Self::new(Picture::Momentum, data, kappa)
    }

    pub fn with_hermitian_flag(mut self, flag: bool) -> Self {
        self.hermitian = flag;
        self
    }

    pub fn picture(&self) -> Picture {
        self.picture
    }

    pub fn data(&self) -> &Field2D {
        &self.data
    }

    pub fn grid_a(&self) -> &Grid {
        self.data.grid_a()
    }

    pub fn grid_b(&self) -> &Grid {
        self.data.grid_b()
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn is_hermitian_flagged(&self) -> bool {
        self.hermitian
    }

    /// True when the sampled data does not depend on the second variable
    /// (constant columns). Such elements are read without the compact-support
    /// zero extension, so e.g. the space unit acts exactly.
    pub fn second_axis_constant(&self) -> bool {
        self.second_axis_constant
    }

    /// True when every sample equals the corner value (e.g. the space unit).
    pub fn is_constant(&self) -> bool {
        if !self.second_axis_constant {
            return false;
        }
        let v = self.data.values();
        let first = v[(0, 0)];
        let scale = self.max_abs().max(1e-300);
        v.column(0).iter().all(|z| (z - first).norm() <= 1e-13 * scale)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.max_abs()
    }

    pub fn require_picture(&self, picture: Picture) -> Result<()> {
        if self.picture != picture {
            return Err(Error::WrongPicture {
                expected: picture.name(),
                actual: self.picture.name(),
            });
        }
        Ok(())
    }

    /// Same picture, grids and deformation parameter.
    pub fn require_same_frame(&self, other: &AlgebraElement) -> Result<()> {
        if self.picture != other.picture {
            return Err(Error::WrongPicture {
                expected: self.picture.name(),
                actual: other.picture.name(),
            });
        }
        if !self.grid_a().approx_eq(other.grid_a()) || !self.grid_b().approx_eq(other.grid_b()) {
            return Err(Error::GridMismatch);
        }
        if (self.kappa - other.kappa).abs() > 1e-12 * self.kappa.max(other.kappa) {
            return Err(Error::KappaMismatch(self.kappa, other.kappa));
        }
        Ok(())
    }

    /// Reads a row at an arbitrary second coordinate; sixth-order local
    /// interpolation with zero extension, except that second-axis-constant
    /// data is read directly.
    pub(crate) fn read_row_at(&self, row: usize, y: f64) -> Complex64 {
        let values = self.data.values();
        if self.second_axis_constant {
            return values[(row, 0)];
        }
        let r = values.row(row);
        interp::order6(self.grid_b(), r.as_slice().unwrap(), y)
    }

    /// General bicubic evaluation at an off-grid point point of the plane.
    pub fn eval(&self, a: f64, b: f64) -> Complex64 {
        if self.second_axis_constant {
            if let Some(i) = self.grid_a().index_of(a) {
                return self.data.values()[(i, 0)];
            }
        }
        interp::bicubic(&self.data, a, b)
    }

    pub fn sup_distance(&self, other: &AlgebraElement) -> Result<f64> {
        self.require_same_frame(other)?;
        self.data.sup_distance(&other.data)
    }

    pub fn scaled(&self, c: Complex64) -> AlgebraElement {
        let mut out = self.clone();
        out.data.values_mut().mapv_inplace(|z| z * c);
        out.hermitian = self.hermitian && c.im == 0.0;
        out
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.require_same_frame(other)?;
        let values = self.data.values() + other.data.values();
        let mut out = AlgebraElement::new(
            self.picture,
            Field2D::new(*self.grid_a(), *self.grid_b(), values)?,
            self.kappa,
        )?;
        out.hermitian = self.hermitian && other.hermitian;
        Ok(out)
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.add(&other.scaled(Complex64::from(-1.0)))
    }

    fn transform_axis0(&self, forward: bool, scale: f64) -> (Grid, Array2<Complex64>) {
        let ga = *self.grid_a();
        let (n0, n1) = (ga.len(), self.grid_b().len());
        let src = self.data.values();
        let mut out = Array2::<Complex64>::zeros((n0, n1));
        let primal = if forward { ga } else { ga.dual() };
        for m in 0..n1 {
            let col: Vec<Complex64> = (0..n0).map(|k| src[(k, m)]).collect();
            let tr = if forward {
                dft_values(&primal, &col)
            } else {
                idft_values(&primal, &col)
            };
            for (k, z) in tr.into_iter().enumerate() {
                out[(k, m)] = z * scale;
            }
        }
        (ga.dual(), out)
    }

    fn transform_axis1(&self, forward: bool, scale: f64) -> (Grid, Array2<Complex64>) {
        let gb = *self.grid_b();
        let (n0, n1) = (self.grid_a().len(), gb.len());
        let src = self.data.values();
        let mut out = Array2::<Complex64>::zeros((n0, n1));
        let primal = if forward { gb } else { gb.dual() };
        for k in 0..n0 {
            let row: Vec<Complex64> = (0..n1).map(|m| src[(k, m)]).collect();
            let tr = if forward {
                dft_values(&primal, &row)
            } else {
                idft_values(&primal, &row)
            };
            for (m, z) in tr.into_iter().enumerate() {
                out[(k, m)] = z * scale;
            }
        }
        (gb.dual(), out)
    }

    /// Presents the element in the mixed picture.
    pub fn to_mixed(&self) -> Result<AlgebraElement> {
        match self.picture {
            Picture::Mixed => Ok(self.clone()),
            Picture::Space => {
                let (gp, values) =
                    self.transform_axis0(true, 1.0 / (2.0 * std::f64::consts::PI));
                let mut out = AlgebraElement::new(
                    Picture::Mixed,
                    Field2D::new(gp, *self.grid_b(), values)?,
                    self.kappa,
                )?;
                out.hermitian = self.hermitian;
                Ok(out)
            }
            Picture::Momentum => {
                let (gx, values) = self.transform_axis1(false, 2.0 * std::f64::consts::PI);
                AlgebraElement::new(
                    Picture::Mixed,
                    Field2D::new(*self.grid_a(), gx, values)?,
                    self.kappa,
                )
            }
        }
    }

    /// Presents the element in the space picture.
    pub fn to_space(&self) -> Result<AlgebraElement> {
        match self.picture {
            Picture::Space => Ok(self.clone()),
            Picture::Mixed => {
                let (gx0, values) = self.transform_axis0(false, 2.0 * std::f64::consts::PI);
                let mut out = AlgebraElement::new(
                    Picture::Space,
                    Field2D::new(gx0, *self.grid_b(), values)?,
                    self.kappa,
                )?;
                out.hermitian = self.hermitian;
                Ok(out)
            }
            Picture::Momentum => self.to_mixed()?.to_space(),
        }
    }

    /// Presents the element in the momentum picture. The hermitian flag is
    /// dropped: the momentum-picture involution carries an extra modular
    /// weight, so flatness under the mixed/space involution does not
    /// transport.
    pub fn to_momentum(&self) -> Result<AlgebraElement> {
        match self.picture {
            Picture::Momentum => Ok(self.clone()),
            Picture::Mixed => {
                let (gp1, values) =
                    self.transform_axis1(true, 1.0 / (2.0 * std::f64::consts::PI));
                AlgebraElement::new(
                    Picture::Momentum,
                    Field2D::new(*self.grid_a(), gp1, values)?,
                    self.kappa,
                )
            }
            Picture::Space => self.to_mixed()?.to_momentum(),
        }
    }

    /// Picture-appropriate involution.
    ///
    /// Mixed: `f^dag(p0, x1) = conj(f(-p0, exp(-p0/kappa) x1))`, the form
    /// induced by the adjoint of the discretized representations; the space
    /// picture conjugates through the partial transform. Momentum follows the
    /// group-algebra formula with the modular weight,
    /// `F^dag(p0, p1) = conj(F(-p0, -exp(p0/kappa) p1)) exp(-p0/kappa)`.
    pub fn involution(&self) -> Result<AlgebraElement> {
        match self.picture {
            Picture::Mixed => {
                let ga = *self.grid_a();
                let gb = *self.grid_b();
                let (n0, n1) = (ga.len(), gb.len());
                let mut out = Array2::<Complex64>::zeros((n0, n1));
                for i in 0..n0 {
                    let p = ga.node(i);
                    let dil = (-p / self.kappa).exp();
                    if i == 0 {
                        // -p0 = +L is off the grid; the reflected row is zero
                        // by compact support.
                        continue;
                    }
                    let r = n0 - i;
                    for m in 0..n1 {
                        let y = dil * gb.node(m);
                        let v = self.read_row_at(r, y);
                        out[(i, m)] = v.conj();
                    }
                }
                let mut el = AlgebraElement::new(
                    Picture::Mixed,
                    Field2D::new(ga, gb, out)?,
                    self.kappa,
                )?;
                el.hermitian = self.hermitian;
                Ok(el)
            }
            Picture::Space => {
                let mut out = self.to_mixed()?.involution()?.to_space()?;
                out.hermitian = self.hermitian;
                Ok(out)
            }
            Picture::Momentum => {
                let ga = *self.grid_a();
                let gb = *self.grid_b();
                let (n0, n1) = (ga.len(), gb.len());
                let mut out = Array2::<Complex64>::zeros((n0, n1));
                for i in 0..n0 {
                    let p = ga.node(i);
                    let weight = (-p / self.kappa).exp();
                    let dil = (p / self.kappa).exp();
                    if i == 0 || !weight.is_finite() || !dil.is_finite() {
                        continue;
                    }
                    let r = n0 - i;
                    let row = self.data.values().row(r);
                    let slice = row.as_slice().unwrap();
                    for m in 0..n1 {
                        let v = interp::order6(&gb, slice, -dil * gb.node(m));
                        if v != Complex64::new(0.0, 0.0) {
                            out[(i, m)] = v.conj() * weight;
                        }
                    }
                }
                AlgebraElement::new(
                    Picture::Momentum,
                    Field2D::new(ga, gb, out)?,
                    self.kappa,
                )
            }
        }
    }

    /// Hermitian part `(f + f^dag)/2`; the returned element carries the
    /// hermitian flag.
    pub fn hermitized(&self) -> Result<AlgebraElement> {
        let dag = self.involution()?;
        let mut out = self.add(&dag)?.scaled(Complex64::from(0.5));
        out.hermitian = true;
        Ok(out)
    }

    /// Sup-norm distance to the own involution, relative to `max|f|`.
    pub fn hermitian_defect(&self) -> Result<f64> {
        let dag = self.involution()?;
        let scale = self.max_abs().max(1e-300);
        Ok(self.sup_distance(&dag)? / scale)
    }
}

/// Modular weight `exp(p0/kappa)` linking the two invariant measures.
pub fn modular_function(p0: f64, kappa: f64) -> f64 {
    (p0 / kappa).exp()
}

/// Unit of the unitized algebra in the given picture: the delta column at
/// `p0 = 0` (mixed) or the constant 1 (space). The momentum-picture unit is a
/// product of two deltas and is not representable on a sample grid.
pub fn unit_element(grid_a: Grid, grid_b: Grid, picture: Picture, kappa: f64) -> Result<AlgebraElement> {
    match picture {
        Picture::Mixed => {
            let mut values = Array2::<Complex64>::zeros((grid_a.len(), grid_b.len()));
            let zero_row = grid_a
                .index_of(0.0)
                .ok_or_else(|| Error::Invalid("grid has no p0 = 0 node".into()))?;
            let amp = Complex64::from(1.0 / grid_a.spacing());
            for m in 0..grid_b.len() {
                values[(zero_row, m)] = amp;
            }
            Ok(AlgebraElement::new(Picture::Mixed, Field2D::new(grid_a, grid_b, values)?, kappa)?
                .with_hermitian_flag(true))
        }
        Picture::Space => {
            let values = Array2::from_elem((grid_a.len(), grid_b.len()), Complex64::from(1.0));
            Ok(AlgebraElement::new(Picture::Space, Field2D::new(grid_a, grid_b, values)?, kappa)?
                .with_hermitian_flag(true))
        }
        Picture::Momentum => Err(Error::Invalid(
            "momentum-picture unit is a double delta and is not sampled".into(),
        )),
    }
}

/// Gaussian bump `exp(-(a-ca)^2/(2 wa^2)) exp(-(b-cb)^2/(2 wb^2))`, optionally
/// modulated by `exp(i (ma a + mb b))`, as raw 2D data.
#[allow(clippy::too_many_arguments)]
pub fn gaussian_bump(
    grid_a: Grid,
    grid_b: Grid,
    center_a: f64,
    width_a: f64,
    center_b: f64,
    width_b: f64,
    mod_a: f64,
    mod_b: f64,
) -> Field2D {
    Field2D::from_fn(grid_a, grid_b, |a, b| {
        let env = (-(a - center_a).powi(2) / (2.0 * width_a * width_a)
            - (b - center_b).powi(2) / (2.0 * width_b * width_b))
            .exp();
        Complex64::from_polar(env, mod_a * a + mod_b * b)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grids() -> (Grid, Grid) {
        (Grid::new(8.0, 128).unwrap(), Grid::new(8.0, 128).unwrap())
    }

    #[test]
    fn modular_values() {
        assert_eq!(modular_function(0.0, 1.0), 1.0);
        assert!((modular_function(1.0, 1.0) - std::f64::consts::E).abs() < 1e-15);
        assert!((modular_function(2.0, 2.0) - std::f64::consts::E).abs() < 1e-15);
    }

    #[test]
    fn involution_is_involutive_mixed() {
        let (gp, gx) = grids();
        let f = AlgebraElement::mixed(
            gaussian_bump(gp, gx, 0.3, 0.9, -0.2, 1.1, 0.4, -0.7),
            1.0,
        )
        .unwrap();
        let back = f.involution().unwrap().involution().unwrap();
        let rel = f.sup_distance(&back).unwrap() / f.max_abs();
        assert!(rel < 1e-6, "relative defect {rel}");
    }

    #[test]
    fn involution_is_involutive_space_and_momentum() {
        let (ga, gb) = grids();
        let f = AlgebraElement::space(
            gaussian_bump(ga, gb, 0.4, 1.0, 0.1, 1.2, 0.3, 0.2),
            1.0,
        )
        .unwrap();
        let back = f.involution().unwrap().involution().unwrap();
        assert!(f.sup_distance(&back).unwrap() / f.max_abs() < 1e-6);

        let fm = AlgebraElement::momentum(
            gaussian_bump(ga, gb, 0.0, 0.8, 0.0, 0.9, 0.0, 0.0),
            1.0,
        )
        .unwrap();
        let back = fm.involution().unwrap().involution().unwrap();
        assert!(fm.sup_distance(&back).unwrap() / fm.max_abs() < 1e-6);
    }

    #[test]
    fn commutative_limit_involution_is_conjugation() {
        let (ga, gb) = grids();
        let data = gaussian_bump(ga, gb, 0.4, 1.0, 0.1, 1.2, 0.5, -0.3);
        let f = AlgebraElement::space(data.clone(), 1e4).unwrap();
        let dag = f.involution().unwrap();
        let conj = AlgebraElement::space(
            Field2D::new(ga, gb, data.values().mapv(|z| z.conj())).unwrap(),
            1e4,
        )
        .unwrap();
        let sup = dag.sup_distance(&conj).unwrap();
        assert!(sup < 1e-3, "sup distance {sup}");
    }

    #[test]
    fn unit_is_hermitian_fixed_point() {
        let (gp, gx) = grids();
        let unit = unit_element(gp, gx, Picture::Mixed, 1.0).unwrap();
        let dag = unit.involution().unwrap();
        assert!(unit.sup_distance(&dag).unwrap() < 1e-8 * unit.max_abs());
        assert!(unit.second_axis_constant());
        assert!(unit_element(gp, gx, Picture::Momentum, 1.0).is_err());
    }

    #[test]
    fn picture_roundtrip() {
        let (ga, gb) = grids();
        let f = AlgebraElement::space(
            gaussian_bump(ga, gb, 0.2, 0.9, -0.4, 1.3, 0.6, 0.1),
            1.0,
        )
        .unwrap();
        let round = f
            .to_mixed()
            .unwrap()
            .to_momentum()
            .unwrap()
            .to_mixed()
            .unwrap()
            .to_space()
            .unwrap();
        let rel = f.sup_distance(&round).unwrap() / f.max_abs();
        assert!(rel < 1e-10, "relative roundtrip error {rel}");
    }

    #[test]
    fn kappa_must_be_positive() {
        let (ga, gb) = grids();
        assert!(AlgebraElement::mixed(Field2D::zeros(ga, gb), -1.0).is_err());
        assert!(AlgebraElement::mixed(Field2D::zeros(ga, gb), 0.0).is_err());
    }
}
