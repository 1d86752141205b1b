//! Action of the deformed translation generators and the twisted derivations.
//!
//! In the mixed picture the three generators act diagonally in `p0`:
//! `P0` multiplies by `p0`, `P` differentiates the spatial slot, and the
//! group-like `E^gamma` multiplies by `exp(-gamma p0 / kappa)`. The twisted
//! pair `X0 = kappa E^gamma (1 - E)`, `X = E^gamma P` satisfies a Leibniz
//! rule twisted by powers of `E` and fails to be real by the exact factor
//! `-E^{-2 gamma - 1}`.

use num_complex::Complex64;

use crate::algebra::element::{AlgebraElement, Picture};
use crate::algebra::star::star_mixed;
use crate::error::Result;
use crate::numerics::fft;
use crate::numerics::grid::{Field1D, Field2D};
use ndarray::Array2;

/// Generators of the deformed translation algebra.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HopfGenerator {
    /// Energy: multiplication by `p0`.
    P0,
    /// Spatial momentum: `-i d/dx1`.
    P,
    /// `E^gamma` with `E = exp(-P0/kappa)`; `EPower(0.0)` is the identity.
    EPower(f64),
}

/// Twisted derivation selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistedDerivation {
    /// `kappa E^gamma (1 - E)` (time direction).
    X0,
    /// `E^gamma P` (space direction).
    X1,
}

fn multiply_rows(f: &AlgebraElement, weight: impl Fn(f64) -> Complex64) -> Result<AlgebraElement> {
    let gp = *f.grid_a();
    let mut values = f.data().values().clone();
    for (k, mut row) in values.rows_mut().into_iter().enumerate() {
        let c = weight(gp.node(k));
        row.mapv_inplace(|z| z * c);
    }
    AlgebraElement::mixed(Field2D::new(gp, *f.grid_b(), values)?, f.kappa())
}

fn spatial_momentum(f: &AlgebraElement) -> Result<AlgebraElement> {
    let gp = *f.grid_a();
    let gx = *f.grid_b();
    if f.second_axis_constant() {
        return AlgebraElement::mixed(Field2D::zeros(gp, gx), f.kappa());
    }
    let (n0, n1) = (gp.len(), gx.len());
    let mut values = Array2::<Complex64>::zeros((n0, n1));
    for k in 0..n0 {
        let row: Vec<Complex64> = (0..n1).map(|m| f.data().values()[(k, m)]).collect();
        let field = Field1D::new(gx, row.into())?;
        let deriv = fft::derivative_unchecked(&field);
        for m in 0..n1 {
            values[(k, m)] = deriv.values()[m] * Complex64::new(0.0, -1.0);
        }
    }
    AlgebraElement::mixed(Field2D::new(gp, gx, values)?, f.kappa())
}

/// Left action of a translation-algebra generator on a mixed-picture element.
pub fn hopf_action(gen: HopfGenerator, f: &AlgebraElement) -> Result<AlgebraElement> {
    f.require_picture(Picture::Mixed)?;
    match gen {
        HopfGenerator::P0 => multiply_rows(f, |p| Complex64::from(p)),
        HopfGenerator::EPower(gamma) => {
            let kappa = f.kappa();
            multiply_rows(f, move |p| Complex64::from((-gamma * p / kappa).exp()))
        }
        HopfGenerator::P => spatial_momentum(f),
    }
}

/// Twisted derivation `X0` or `X` at twist `gamma`.
pub fn twisted_derivation(
    f: &AlgebraElement,
    which: TwistedDerivation,
    gamma: f64,
) -> Result<AlgebraElement> {
    f.require_picture(Picture::Mixed)?;
    let kappa = f.kappa();
    match which {
        TwistedDerivation::X0 => multiply_rows(f, move |p| {
            Complex64::from(kappa * (-gamma * p / kappa).exp() * (1.0 - (-p / kappa).exp()))
        }),
        TwistedDerivation::X1 => {
            let p = spatial_momentum(f)?;
            multiply_rows(&p, move |q| Complex64::from((-gamma * q / kappa).exp()))
        }
    }
}

/// Residual of the twisted Leibniz rule
/// `X(f ⋆ g) = X(f) ⋆ (E^gamma g) + (E^{1+gamma} f) ⋆ X(g)`,
/// relative to the sup-norm of the left side.
pub fn twisted_leibniz_residual(
    f: &AlgebraElement,
    g: &AlgebraElement,
    which: TwistedDerivation,
    gamma: f64,
) -> Result<f64> {
    let prod = star_mixed(f, g)?;
    let lhs = twisted_derivation(&prod, which, gamma)?;
    let term1 = star_mixed(
        &twisted_derivation(f, which, gamma)?,
        &hopf_action(HopfGenerator::EPower(gamma), g)?,
    )?;
    let term2 = star_mixed(
        &hopf_action(HopfGenerator::EPower(1.0 + gamma), f)?,
        &twisted_derivation(g, which, gamma)?,
    )?;
    let rhs = term1.add(&term2)?;
    let scale = lhs.max_abs().max(rhs.max_abs()).max(1e-300);
    Ok(lhs.sup_distance(&rhs)? / scale)
}

/// Residual of the non-reality identity
/// `(X f)^dag = -E^{-2 gamma - 1} (X (f^dag))`, relative sup-norm.
pub fn twisted_reality_residual(
    f: &AlgebraElement,
    which: TwistedDerivation,
    gamma: f64,
) -> Result<f64> {
    let lhs = twisted_derivation(f, which, gamma)?.involution()?;
    let inner = twisted_derivation(&f.involution()?, which, gamma)?;
    let rhs = hopf_action(HopfGenerator::EPower(-2.0 * gamma - 1.0), &inner)?
        .scaled(Complex64::from(-1.0));
    let scale = lhs.max_abs().max(rhs.max_abs());
    if scale < 1e-300 {
        return Ok(0.0);
    }
    Ok(lhs.sup_distance(&rhs)? / scale)
}
