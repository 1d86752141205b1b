//! Deformed products in the three pictures.
//!
//! The mixed-picture product is the workhorse: a one-dimensional convolution
//! in the momentum argument whose second slot is dilated,
//!
//! `(f ⋆ g)(p0, x1) = ∫ dq0 f(q0, x1) g(p0 - q0, e^{-q0/κ} x1)`.
//!
//! On matching grids the difference `p0 - q0` is always a node, so only the
//! dilated second argument is interpolated. The space product pushes the left
//! factor through the partial transform and sums over the dual frequencies;
//! the momentum product is the group convolution with the modular weight.

use ndarray::Array2;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::algebra::element::{AlgebraElement, Picture};
use crate::error::{Error, Result};
use crate::numerics::grid::{Field1D, Field2D};
use crate::numerics::{fft, interp};

/// Relative level below which the convolution tail spilling past the hull is
/// considered representable; checked on the result's boundary rows.
const SUPPORT_TOL: f64 = 1e-6;

fn check_result_support(values: &Array2<Complex64>, axis0: bool) -> Result<()> {
    let max = values.iter().fold(0.0f64, |m, z| m.max(z.norm()));
    if max == 0.0 {
        return Ok(());
    }
    let n0 = values.nrows();
    let n1 = values.ncols();
    let edge = if axis0 {
        values
            .row(0)
            .iter()
            .chain(values.row(n0 - 1).iter())
            .fold(0.0f64, |m, z| m.max(z.norm()))
    } else {
        values
            .column(0)
            .iter()
            .chain(values.column(n1 - 1).iter())
            .fold(0.0f64, |m, z| m.max(z.norm()))
    };
    if edge > SUPPORT_TOL * max {
        return Err(Error::SupportOverflow(format!(
            "product support reaches the grid boundary (edge/max = {:.3e})",
            edge / max
        )));
    }
    Ok(())
}

/// Mixed-picture product.
pub fn star_mixed(f: &AlgebraElement, g: &AlgebraElement) -> Result<AlgebraElement> {
    f.require_picture(Picture::Mixed)?;
    f.require_same_frame(g)?;
    let gp = *f.grid_a();
    let gx = *f.grid_b();
    let (n0, n1) = (gp.len(), gx.len());
    let dp = gp.spacing();
    let kappa = f.kappa();
    let fv = f.data().values();

    let rows: Vec<Vec<Complex64>> = (0..n0)
        .into_par_iter()
        .map(|i| {
            let mut row = vec![Complex64::new(0.0, 0.0); n1];
            for k in 0..n0 {
                // p0_i - q0_k lands on the node with this offset index.
                let r = i + n0 / 2;
                if r < k || r - k >= n0 {
                    continue;
                }
                let r = r - k;
                let dil = (-gp.node(k) / kappa).exp();
                if !dil.is_finite() {
                    continue;
                }
                for (m, slot) in row.iter_mut().enumerate() {
                    let a = fv[(k, m)];
                    if a == Complex64::new(0.0, 0.0) {
                        continue;
                    }
                    let b = g.read_row_at(r, dil * gx.node(m));
                    *slot += a * b;
                }
            }
            for slot in row.iter_mut() {
                *slot *= dp;
            }
            row
        })
        .collect();

    let mut values = Array2::<Complex64>::zeros((n0, n1));
    for (i, row) in rows.into_iter().enumerate() {
        for (m, z) in row.into_iter().enumerate() {
            values[(i, m)] = z;
        }
    }
    check_result_support(&values, true)?;
    AlgebraElement::mixed(Field2D::new(gp, gx, values)?, kappa)
}

/// Space-picture product via the partial transform of the left factor.
pub fn star_space(f: &AlgebraElement, g: &AlgebraElement) -> Result<AlgebraElement> {
    f.require_picture(Picture::Space)?;
    f.require_same_frame(g)?;
    // The partial transform wraps periodically, so the left factor must die
    // out at the x0 boundary; exactly constant data wraps exactly and is
    // exempt (the space unit).
    if !f.is_constant() {
        let fv = f.data().values();
        let edge = fv
            .row(0)
            .iter()
            .chain(fv.row(fv.nrows() - 1).iter())
            .fold(0.0f64, |m, z| m.max(z.norm()));
        let limit = 1e-6 * f.max_abs();
        if edge > limit && limit > 0.0 {
            return Err(Error::EdgeLeakage { edge, limit });
        }
    }

    let f_mixed = f.to_mixed()?;
    let gx0 = *f.grid_a();
    let gx1 = *f.grid_b();
    let gv = gx0.dual();
    let (n0, n1) = (gx0.len(), gx1.len());
    let dv = gv.spacing();
    let kappa = f.kappa();
    let fm = f_mixed.data().values();

    let rows: Vec<Vec<Complex64>> = (0..n0)
        .into_par_iter()
        .map(|j| {
            let x0 = gx0.node(j);
            let mut row = vec![Complex64::new(0.0, 0.0); n1];
            for k in 0..n0 {
                let v = gv.node(k);
                let phase = Complex64::from_polar(dv, x0 * v);
                let dil = (-v / kappa).exp();
                if !dil.is_finite() {
                    continue;
                }
                for (m, slot) in row.iter_mut().enumerate() {
                    let a = fm[(k, m)];
                    if a == Complex64::new(0.0, 0.0) {
                        continue;
                    }
                    let b = g.read_row_at(j, dil * gx1.node(m));
                    *slot += phase * a * b;
                }
            }
            row
        })
        .collect();

    let mut values = Array2::<Complex64>::zeros((n0, n1));
    for (j, row) in rows.into_iter().enumerate() {
        for (m, z) in row.into_iter().enumerate() {
            values[(j, m)] = z;
        }
    }
    AlgebraElement::space(Field2D::new(gx0, gx1, values)?, kappa)
}

/// Left product by a multiplier profile `h(x0)` that is constant in `x1`
/// (e.g. the windowed coordinate function). The profile is transformed
/// exactly once and the right factor is read at the dilated argument.
pub fn star_space_left_profile(h: &Field1D, g: &AlgebraElement) -> Result<AlgebraElement> {
    g.require_picture(Picture::Space)?;
    let gx0 = *g.grid_a();
    let gx1 = *g.grid_b();
    if !h.grid().approx_eq(&gx0) {
        return Err(Error::GridMismatch);
    }
    let gv = gx0.dual();
    let (n0, n1) = (gx0.len(), gx1.len());
    let dv = gv.spacing();
    let kappa = g.kappa();
    let spec: Vec<Complex64> = fft::dft_values(&gx0, h.values().as_slice().unwrap())
        .into_iter()
        .map(|z| z / (2.0 * std::f64::consts::PI))
        .collect();

    let rows: Vec<Vec<Complex64>> = (0..n0)
        .into_par_iter()
        .map(|j| {
            let x0 = gx0.node(j);
            let mut row = vec![Complex64::new(0.0, 0.0); n1];
            for k in 0..n0 {
                let a = spec[k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let v = gv.node(k);
                let dil = (-v / kappa).exp();
                if !dil.is_finite() {
                    continue;
                }
                let phase = Complex64::from_polar(dv, x0 * v) * a;
                for (m, slot) in row.iter_mut().enumerate() {
                    *slot += phase * g.read_row_at(j, dil * gx1.node(m));
                }
            }
            row
        })
        .collect();

    let mut values = Array2::<Complex64>::zeros((n0, n1));
    for (j, row) in rows.into_iter().enumerate() {
        for (m, z) in row.into_iter().enumerate() {
            values[(j, m)] = z;
        }
    }
    AlgebraElement::space(Field2D::new(gx0, gx1, values)?, kappa)
}

/// Right product by an `x1`-independent multiplier profile: the dilation does
/// not see the profile, so the product is exactly pointwise.
pub fn star_space_right_profile(f: &AlgebraElement, h: &Field1D) -> Result<AlgebraElement> {
    f.require_picture(Picture::Space)?;
    if !h.grid().approx_eq(f.grid_a()) {
        return Err(Error::GridMismatch);
    }
    let mut values = f.data().values().clone();
    for (j, mut row) in values.rows_mut().into_iter().enumerate() {
        let c = h.values()[j];
        row.mapv_inplace(|z| z * c);
    }
    AlgebraElement::space(
        Field2D::new(*f.grid_a(), *f.grid_b(), values)?,
        f.kappa(),
    )
}

/// Momentum-picture group convolution with the modular weight.
pub fn convolve_momentum(f: &AlgebraElement, g: &AlgebraElement) -> Result<AlgebraElement> {
    f.require_picture(Picture::Momentum)?;
    f.require_same_frame(g)?;
    let gp0 = *f.grid_a();
    let gp1 = *f.grid_b();
    let (n0, n1) = (gp0.len(), gp1.len());
    let weight_step = gp0.spacing() * gp1.spacing();
    let kappa = f.kappa();
    let fv = f.data().values();
    let gv = g.data().values();

    let rows: Vec<Vec<Complex64>> = (0..n0)
        .into_par_iter()
        .map(|i| {
            let mut row = vec![Complex64::new(0.0, 0.0); n1];
            for k in 0..n0 {
                let r = i + n0 / 2;
                if r < k || r - k >= n0 {
                    continue;
                }
                let r = r - k;
                let q0 = gp0.node(k);
                let weight = (q0 / kappa).exp();
                let dil = weight;
                if !weight.is_finite() {
                    continue;
                }
                let grow = gv.row(r);
                let gslice = grow.as_slice().unwrap();
                for m in 0..n1 {
                    let pm = gp1.node(m);
                    let mut acc = Complex64::new(0.0, 0.0);
                    for n in 0..n1 {
                        let a = fv[(k, n)];
                        if a == Complex64::new(0.0, 0.0) {
                            continue;
                        }
                        let y = dil * (pm - gp1.node(n));
                        let b = interp::order6(&gp1, gslice, y);
                        acc += a * b;
                    }
                    row[m] += acc * weight;
                }
            }
            for slot in row.iter_mut() {
                *slot *= weight_step;
            }
            row
        })
        .collect();

    let mut values = Array2::<Complex64>::zeros((n0, n1));
    for (i, row) in rows.into_iter().enumerate() {
        for (m, z) in row.into_iter().enumerate() {
            values[(i, m)] = z;
        }
    }
    AlgebraElement::momentum(Field2D::new(gp0, gp1, values)?, kappa)
}
