//! Continuum-normalized discrete Fourier transforms.
//!
//! For a field sampled at `s_j = -L + j h` the forward transform is
//! `F(v_m) = h * sum_j exp(-i v_m s_j) f(s_j)` with frequencies
//! `v_m = -pi/h + m * 2pi/(n h)` living on [`Grid::dual`]. The inverse is
//! `f(s_j) = (h_v / 2pi) * sum_m exp(i v_m s_j) F(v_m)`; the pair is an exact
//! identity in floating point up to roundoff. Because the grid is centered,
//! both directions reduce to a standard FFT with alternating-sign twiddles.

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftDirection, FftPlanner};

use crate::error::Result;
use crate::numerics::grid::{Field1D, Grid};

thread_local! {
    static PLANS: RefCell<HashMap<(usize, bool), Arc<dyn Fft<f64>>>> =
        RefCell::new(HashMap::new());
}

fn plan(n: usize, forward: bool) -> Arc<dyn Fft<f64>> {
    PLANS.with(|cell| {
        cell.borrow_mut()
            .entry((n, forward))
            .or_insert_with(|| {
                let mut planner = FftPlanner::new();
                let dir = if forward {
                    FftDirection::Forward
                } else {
                    FftDirection::Inverse
                };
                planner.plan_fft(n, dir)
            })
            .clone()
    })
}

/// Forward transform of raw samples living on `grid`; output is ordered by
/// ascending frequency on `grid.dual()`.
pub fn dft_values(grid: &Grid, values: &[Complex64]) -> Vec<Complex64> {
    let n = grid.len();
    debug_assert_eq!(values.len(), n);
    let h = grid.spacing();
    // F(v_m) = h (-1)^m FFT_m[(-1)^j f_j] for power-of-two n (n % 4 == 0).
    let mut buf: Vec<Complex64> = values
        .iter()
        .enumerate()
        .map(|(j, z)| if j % 2 == 0 { *z } else { -*z })
        .collect();
    plan(n, true).process(&mut buf);
    for (m, z) in buf.iter_mut().enumerate() {
        *z *= if m % 2 == 0 { h } else { -h };
    }
    buf
}

/// Inverse of [`dft_values`]: input ordered by ascending frequency, output on
/// the primal grid.
pub fn idft_values(grid: &Grid, values: &[Complex64]) -> Vec<Complex64> {
    let n = grid.len();
    debug_assert_eq!(values.len(), n);
    let h = grid.spacing();
    let mut buf: Vec<Complex64> = values
        .iter()
        .enumerate()
        .map(|(m, z)| if m % 2 == 0 { *z } else { -*z })
        .collect();
    plan(n, false).process(&mut buf);
    let scale = 1.0 / (n as f64 * h);
    for (j, z) in buf.iter_mut().enumerate() {
        *z *= if j % 2 == 0 { scale } else { -scale };
    }
    buf
}

/// Forward transform of a field; the result lives on the dual grid.
pub fn dft(f: &Field1D) -> Field1D {
    let out = dft_values(f.grid(), f.values().as_slice().unwrap());
    Field1D::new(f.grid().dual(), out.into()).expect("dft output is finite")
}

/// Inverse transform; accepts a field on a dual grid and returns one on the
/// primal grid.
pub fn idft(f: &Field1D) -> Field1D {
    let primal = f.grid().dual();
    let out = idft_values(&primal, f.values().as_slice().unwrap());
    Field1D::new(primal, out.into()).expect("idft output is finite")
}

/// Spectral derivative `f'`; exact on band-limited data. Errors when the
/// field does not decay at the grid edges.
pub fn derivative(f: &Field1D) -> Result<Field1D> {
    f.require_edge_decay(1e-6)?;
    Ok(derivative_unchecked(f))
}

/// Spectral derivative without the edge-decay gate (for callers that have
/// already validated or explicitly window their data).
pub fn derivative_unchecked(f: &Field1D) -> Field1D {
    let dual = f.grid().dual();
    let mut spec = dft_values(f.grid(), f.values().as_slice().unwrap());
    for (m, z) in spec.iter_mut().enumerate() {
        *z *= Complex64::new(0.0, dual.node(m));
    }
    let out = idft_values(f.grid(), &spec);
    Field1D::new(*f.grid(), out.into()).expect("derivative output is finite")
}

/// Band-limited translation `f(s) -> f(s + shift)`.
pub fn shift(f: &Field1D, amount: f64) -> Field1D {
    let dual = f.grid().dual();
    let mut spec = dft_values(f.grid(), f.values().as_slice().unwrap());
    for (m, z) in spec.iter_mut().enumerate() {
        *z *= Complex64::from_polar(1.0, dual.node(m) * amount);
    }
    let out = idft_values(f.grid(), &spec);
    Field1D::new(*f.grid(), out.into()).expect("shift output is finite")
}

/// Evaluates the continuum-normalized transform at an arbitrary frequency by
/// direct summation (used for off-grid spectral queries).
pub fn dft_at(f: &Field1D, v: f64) -> Complex64 {
    let g = f.grid();
    let mut acc = Complex64::new(0.0, 0.0);
    for (j, z) in f.values().iter().enumerate() {
        acc += z * Complex64::from_polar(1.0, -v * g.node(j));
    }
    acc * Complex64::from(g.spacing())
}
