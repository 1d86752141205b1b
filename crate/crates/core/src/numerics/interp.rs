//! Local Lagrange interpolation on uniform grids.
//!
//! Queries outside the grid hull return zero: all sampled objects in this
//! crate represent functions that are compactly supported (or negligible)
//! inside the hull, and extension by zero is the faithful continuation.
//! Node queries reproduce stored values exactly.

use num_complex::Complex64;

use crate::numerics::grid::{Field2D, Grid};

/// Stencil layout for a query at `x`: starting index and normalized offset
/// `u = (x - s_start)/h`. Returns `None` outside the hull.
fn stencil(grid: &Grid, x: f64, width: usize) -> Option<(usize, f64)> {
    let n = grid.len();
    let h = grid.spacing();
    let t = (x + grid.half_width()) / h;
    if t < -1e-9 || t > (n - 1) as f64 + 1e-9 {
        return None;
    }
    let cell = (t.floor() as isize).clamp(0, n as isize - 2) as usize;
    // Center the stencil on the cell, clamped to the grid.
    let start = cell
        .saturating_sub(width / 2 - 1)
        .min(n - width);
    Some((start, t - start as f64))
}

fn lagrange_weights(u: f64, width: usize, out: &mut [f64]) {
    for (i, w) in out.iter_mut().enumerate().take(width) {
        let mut acc = 1.0;
        for k in 0..width {
            if k != i {
                acc *= (u - k as f64) / (i as f64 - k as f64);
            }
        }
        *w = acc;
    }
}

fn interp_row(grid: &Grid, row: &dyn Fn(usize) -> Complex64, x: f64, width: usize) -> Complex64 {
    // Exact node hit: return the stored value bit-for-bit.
    if let Some(j) = grid.index_of(x) {
        return row(j);
    }
    match stencil(grid, x, width) {
        None => Complex64::new(0.0, 0.0),
        Some((start, u)) => {
            let mut w = [0.0f64; 8];
            lagrange_weights(u, width, &mut w);
            let mut acc = Complex64::new(0.0, 0.0);
            for i in 0..width {
                acc += row(start + i) * w[i];
            }
            acc
        }
    }
}

/// Cubic (4-point) interpolation of a sampled row.
pub fn cubic(grid: &Grid, values: &[Complex64], x: f64) -> Complex64 {
    interp_row(grid, &|j| values[j], x, 4)
}

/// Sixth-order (6-point) interpolation; used inside integral kernels where
/// the dilated second argument must be resolved well below quadrature error.
pub fn order6(grid: &Grid, values: &[Complex64], x: f64) -> Complex64 {
    interp_row(grid, &|j| values[j], x, 6)
}

/// Bicubic tensor-product interpolation of a 2D field; zero outside the hull,
/// exact on nodes.
pub fn bicubic(field: &Field2D, a: f64, b: f64) -> Complex64 {
    let ga = field.grid_a();
    let gb = field.grid_b();
    if let (Some(i), Some(j)) = (ga.index_of(a), gb.index_of(b)) {
        return field.values()[(i, j)];
    }
    let (ia, ua) = match stencil(ga, a, 4) {
        Some(s) => s,
        None => return Complex64::new(0.0, 0.0),
    };
    if stencil(gb, b, 4).is_none() {
        return Complex64::new(0.0, 0.0);
    }
    let mut wa = [0.0f64; 8];
    lagrange_weights(ua, 4, &mut wa);
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..4 {
        let row = field.values().row(ia + i);
        let slice = row.as_slice().unwrap();
        acc += cubic(gb, slice, b) * wa[i];
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::grid::Field2D;

    #[test]
    fn nodes_reproduced_exactly() {
        let g = Grid::new(10.0, 512).unwrap();
        let f = Field2D::from_fn(g, g, |a, b| Complex64::new(a * b + 0.25, a - b));
        for &(i, j) in &[(0usize, 0usize), (17, 400), (511, 511), (256, 3)] {
            let v = bicubic(&f, g.node(i), g.node(j));
            assert_eq!(v, f.values()[(i, j)]);
        }
    }

    #[test]
    fn out_of_hull_is_zero() {
        let g = Grid::new(10.0, 512).unwrap();
        let f = Field2D::from_fn(g, g, |_, _| Complex64::from(1.0));
        assert_eq!(bicubic(&f, 11.0, 0.0), Complex64::from(0.0));
        assert_eq!(bicubic(&f, 0.0, -10.5), Complex64::from(0.0));
    }

    #[test]
    fn gaussian_midpoint_value() {
        let g = Grid::new(10.0, 512).unwrap();
        let f = Field2D::from_fn(g, g, |a, b| {
            Complex64::from((-(a * a + b * b) / 2.0).exp())
        });
        let h = g.spacing();
        let (a, b) = (0.5 * h + g.node(200), 0.5 * h + g.node(280));
        let exact = (-(a * a + b * b) / 2.0).exp();
        assert!((bicubic(&f, a, b).re - exact).abs() < 1e-6);
    }

    #[test]
    fn order6_beats_cubic_on_oscillatory_data() {
        let g = Grid::new(8.0, 256).unwrap();
        let vals: Vec<Complex64> = g
            .nodes()
            .iter()
            .map(|&s| Complex64::from((-s * s / 2.0).exp() * (3.0 * s).cos()))
            .collect();
        let x = 0.317;
        let exact = (-x * x / 2.0f64).exp() * (3.0 * x).cos();
        let e4 = (cubic(&g, &vals, x).re - exact).abs();
        let e6 = (order6(&g, &vals, x).re - exact).abs();
        assert!(e6 < e4);
        assert!(e6 < 1e-6);
    }
}
