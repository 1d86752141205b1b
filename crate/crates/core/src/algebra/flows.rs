//! One-parameter flows and the derivations they generate.
//!
//! The modular flow multiplies mixed-picture data by the phase
//! `exp(i t p0 / kappa)`; the dilation flow rescales the second argument.
//! Differentiating at `t = 0` produces the two basic derivations
//! `D0 = i p0 .` and `D1 = x1 d/dx1`, combined into the light-cone pair
//! `D± = D0 ± D1`.

use ndarray::Array2;
use num_complex::Complex64;

use crate::algebra::element::{AlgebraElement, Picture};
use crate::algebra::star::{star_space_left_profile, star_space_right_profile};
use crate::error::{Error, Result};
use crate::numerics::fft;
use crate::numerics::grid::{Field1D, Field2D};

/// Which derivation to apply in the mixed picture.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Derivation {
    /// `i p0 .` (time direction).
    D0,
    /// `x1 d/dx1` (dilation generator).
    D1,
    /// `D0 + D1`.
    Dplus,
    /// `D0 - D1`.
    Dminus,
}

/// Modular automorphism: multiply by `exp(i t p0 / kappa)`; a time
/// translation by `t/kappa` in the space picture.
pub fn automorphism_sigma(f: &AlgebraElement, t: f64) -> Result<AlgebraElement> {
    f.require_picture(Picture::Mixed)?;
    let gp = *f.grid_a();
    let kappa = f.kappa();
    let mut values = f.data().values().clone();
    for (k, mut row) in values.rows_mut().into_iter().enumerate() {
        let phase = Complex64::from_polar(1.0, t * gp.node(k) / kappa);
        row.mapv_inplace(|z| z * phase);
    }
    let out = AlgebraElement::mixed(Field2D::new(gp, *f.grid_b(), values)?, kappa)?;
    Ok(out.with_hermitian_flag(false))
}

/// Dilation automorphism: `f(p0, x1) -> f(p0, e^t x1)`.
pub fn automorphism_omega(f: &AlgebraElement, t: f64) -> Result<AlgebraElement> {
    f.require_picture(Picture::Mixed)?;
    let gp = *f.grid_a();
    let gx = *f.grid_b();
    let scale = t.exp();
    if t > 0.0 && !f.second_axis_constant() {
        // Reading at e^t x1 discards data beyond |x1| > L e^{-t}; refuse when
        // that region carries mass.
        let cutoff = gx.half_width() * (-t).exp();
        let max = f.max_abs();
        let mut lost: f64 = 0.0;
        for m in 0..gx.len() {
            if gx.node(m).abs() > cutoff {
                for k in 0..gp.len() {
                    lost = lost.max(f.data().values()[(k, m)].norm());
                }
            }
        }
        if lost > 1e-9 * max {
            return Err(Error::SupportOverflow(format!(
                "dilation by e^{t} pushes support past the hull (lost/max = {:.3e})",
                lost / max
            )));
        }
    }
    let (n0, n1) = (gp.len(), gx.len());
    let mut values = Array2::<Complex64>::zeros((n0, n1));
    for k in 0..n0 {
        for m in 0..n1 {
            values[(k, m)] = f.read_row_at(k, scale * gx.node(m));
        }
    }
    AlgebraElement::mixed(Field2D::new(gp, gx, values)?, f.kappa())
}

/// Applies a basic derivation to a mixed-picture element.
pub fn derivation(f: &AlgebraElement, which: Derivation) -> Result<AlgebraElement> {
    f.require_picture(Picture::Mixed)?;
    match which {
        Derivation::D0 => {
            let gp = *f.grid_a();
            let mut values = f.data().values().clone();
            for (k, mut row) in values.rows_mut().into_iter().enumerate() {
                let c = Complex64::new(0.0, gp.node(k));
                row.mapv_inplace(|z| z * c);
            }
            let out = AlgebraElement::mixed(Field2D::new(gp, *f.grid_b(), values)?, f.kappa())?;
            Ok(out)
        }
        Derivation::D1 => {
            let gp = *f.grid_a();
            let gx = *f.grid_b();
            if f.second_axis_constant() {
                // d/dx1 of constant columns is exactly zero.
                return AlgebraElement::mixed(Field2D::zeros(gp, gx), f.kappa());
            }
            let (n0, n1) = (gp.len(), gx.len());
            let mut values = Array2::<Complex64>::zeros((n0, n1));
            let max = f.max_abs();
            for k in 0..n0 {
                let row: Vec<Complex64> = (0..n1).map(|m| f.data().values()[(k, m)]).collect();
                let row_max = row.iter().fold(0.0f64, |a, z| a.max(z.norm()));
                let edge = row[0].norm().max(row[n1 - 1].norm());
                if edge > 1e-6 * max && row_max > 0.0 {
                    return Err(Error::EdgeLeakage {
                        edge,
                        limit: 1e-6 * max,
                    });
                }
                let field = Field1D::new(gx, row.into())?;
                let deriv = fft::derivative_unchecked(&field);
                for m in 0..n1 {
                    values[(k, m)] = deriv.values()[m] * Complex64::from(gx.node(m));
                }
            }
            AlgebraElement::mixed(Field2D::new(gp, gx, values)?, f.kappa())
        }
        Derivation::Dplus => derivation(f, Derivation::D0)?.add(&derivation(f, Derivation::D1)?),
        Derivation::Dminus => derivation(f, Derivation::D0)?.sub(&derivation(f, Derivation::D1)?),
    }
}

// Abramowitz-Stegun 7.1.26; |error| < 1.5e-7, exact saturation in the tails.
fn erf_approx(x: f64) -> f64 {
    let sign = if x < 0.0 { -1.0 } else { 1.0 };
    let x = x.abs();
    let t = 1.0 / (1.0 + 0.3275911 * x);
    let poly = t
        * (0.254829592
            + t * (-0.284496736 + t * (1.421413741 + t * (-1.453152027 + t * 1.061405429))));
    sign * (1.0 - poly * (-x * x).exp())
}

/// Smooth plateau window: 1 on `[-w, w]` (to machine precision), 0 beyond
/// `[-w-ramp, w+ramp]`, with Gaussian-mollified (erf) transitions. The erf
/// ramp keeps the window's spectrum decaying like a Gaussian, so the dual-
/// grid quadrature in the multiplier product resolves it fully.
pub fn plateau_window(x: f64, w: f64, ramp: f64) -> f64 {
    let sigma = 0.15 * ramp;
    let center = w + 0.5 * ramp;
    0.5 * (1.0 - erf_approx((x.abs() - center) / (std::f64::consts::SQRT_2 * sigma)))
}

/// Relative residual of the inner-derivation identity
/// `i x1 d1 f = kappa [x0 w, f]` with the coordinate realized as the windowed
/// multiplier `x0 w(x0)` (plateau half-width `w_halfwidth`, ramps of width 2).
///
/// The right multiplication by an `x1`-independent multiplier is exactly
/// pointwise, so only the left product involves the transform kernel.
pub fn inner_derivation_residual(f: &AlgebraElement, w_halfwidth: f64) -> Result<f64> {
    f.require_picture(Picture::Space)?;
    let gx0 = *f.grid_a();
    let gx1 = *f.grid_b();
    const RAMP: f64 = 2.0;
    if w_halfwidth + RAMP > gx0.half_width() {
        return Err(Error::SupportOverflow(format!(
            "window [{}, {}] plus ramps exceeds the x0 hull",
            -w_halfwidth, w_halfwidth
        )));
    }
    // The plateau must cover the support of f in x0.
    let max = f.max_abs();
    for j in 0..gx0.len() {
        if gx0.node(j).abs() > w_halfwidth {
            let row_max = f
                .data()
                .values()
                .row(j)
                .iter()
                .fold(0.0f64, |m, z| m.max(z.norm()));
            if row_max > 1e-9 * max {
                return Err(Error::SupportOverflow(
                    "field support leaks outside the window plateau".into(),
                ));
            }
        }
    }

    let coord = Field1D::from_fn(gx0, |x| {
        Complex64::from(x * plateau_window(x, w_halfwidth, RAMP))
    });

    // Left side: i x1 d/dx1 f.
    let (n0, n1) = (gx0.len(), gx1.len());
    let mut lhs = Array2::<Complex64>::zeros((n0, n1));
    for j in 0..n0 {
        let row: Vec<Complex64> = (0..n1).map(|m| f.data().values()[(j, m)]).collect();
        let field = Field1D::new(gx1, row.into())?;
        let deriv = fft::derivative_unchecked(&field);
        for m in 0..n1 {
            lhs[(j, m)] =
                Complex64::new(0.0, 1.0) * Complex64::from(gx1.node(m)) * deriv.values()[m];
        }
    }

    let left = star_space_left_profile(&coord, f)?;
    let right = star_space_right_profile(f, &coord)?;
    let commutator = left.sub(&right)?.scaled(Complex64::from(f.kappa()));

    let mut num: f64 = 0.0;
    let mut den: f64 = 0.0;
    for j in 0..n0 {
        for m in 0..n1 {
            num = num.max((lhs[(j, m)] - commutator.data().values()[(j, m)]).norm());
            den = den.max(lhs[(j, m)].norm());
        }
    }
    if den > 1e-9 {
        Ok(num / den)
    } else {
        Ok(num)
    }
}
