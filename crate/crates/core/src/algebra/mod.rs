//! The deformed coordinate algebra: pictures, products, involutions, flows,
//! and the translation-algebra actions.

pub mod element;
pub mod flows;
pub mod hopf;
pub mod star;

pub use element::{
    gaussian_bump, modular_function, unit_element, AlgebraElement, Picture,
};
pub use flows::{
    automorphism_omega, automorphism_sigma, derivation, inner_derivation_residual,
    plateau_window, Derivation,
};
pub use hopf::{
    hopf_action, twisted_derivation, twisted_leibniz_residual, twisted_reality_residual,
    HopfGenerator, TwistedDerivation,
};
pub use star::{convolve_momentum, star_mixed, star_space};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::grid::Grid;
    use num_complex::Complex64;

    fn gp() -> Grid {
        Grid::new(8.0, 256).unwrap()
    }

    fn gx() -> Grid {
        Grid::new(8.0, 256).unwrap()
    }

    fn mixed(ca: f64, wa: f64, cb: f64, wb: f64, ma: f64, mb: f64) -> AlgebraElement {
        AlgebraElement::mixed(gaussian_bump(gp(), gx(), ca, wa, cb, wb, ma, mb), 1.0).unwrap()
    }

    #[test]
    fn associativity_mixed() {
        let f = mixed(0.3, 0.6, -0.2, 1.0, 0.0, 0.3);
        let g = mixed(-0.4, 0.7, 0.3, 1.2, 0.2, 0.0);
        let h = mixed(0.1, 0.8, 0.0, 0.9, -0.1, 0.1);
        let left = star_mixed(&star_mixed(&f, &g).unwrap(), &h).unwrap();
        let right = star_mixed(&f, &star_mixed(&g, &h).unwrap()).unwrap();
        let scale = left.max_abs().max(right.max_abs());
        let rel = left.sup_distance(&right).unwrap() / scale;
        assert!(rel < 1e-5, "associativity defect {rel}");
    }

    #[test]
    fn involution_antihomomorphism() {
        let f = mixed(0.3, 0.6, -0.2, 1.0, 0.1, 0.0);
        let g = mixed(-0.2, 0.7, 0.25, 1.1, 0.0, -0.2);
        let lhs = star_mixed(&f, &g).unwrap().involution().unwrap();
        let rhs = star_mixed(&g.involution().unwrap(), &f.involution().unwrap()).unwrap();
        let scale = lhs.max_abs().max(rhs.max_abs());
        let rel = lhs.sup_distance(&rhs).unwrap() / scale;
        assert!(rel < 1e-5, "anti-homomorphism defect {rel}");
    }

    #[test]
    fn commutative_limit_slope() {
        // sup|f*g - fg| ~ C/kappa: the log-log slope over three decades must
        // be -1 within 10%.
        let ga = Grid::new(8.0, 128).unwrap();
        let gb = Grid::new(8.0, 128).unwrap();
        let mut logs = Vec::new();
        for kappa in [1e2, 1e3, 1e4] {
            let f = AlgebraElement::space(
                gaussian_bump(ga, gb, 0.4, 1.1, -0.3, 1.3, 0.0, 0.0),
                kappa,
            )
            .unwrap();
            let g = AlgebraElement::space(
                gaussian_bump(ga, gb, -0.3, 1.3, 0.4, 1.0, 0.0, 0.0),
                kappa,
            )
            .unwrap();
            let prod = star_space(&f, &g).unwrap();
            let pointwise = AlgebraElement::space(
                crate::numerics::grid::Field2D::new(
                    ga,
                    gb,
                    f.data().values() * g.data().values(),
                )
                .unwrap(),
                kappa,
            )
            .unwrap();
            let dev = prod.sup_distance(&pointwise).unwrap();
            logs.push((kappa.ln(), dev.ln()));
        }
        let xs: Vec<f64> = logs.iter().map(|p| p.0).collect();
        let ys: Vec<f64> = logs.iter().map(|p| p.1).collect();
        let (slope, _) = crate::numerics::linear_fit(&xs, &ys);
        assert!((slope + 1.0).abs() < 0.1, "slope {slope}");
    }

    #[test]
    fn twisted_leibniz_rule() {
        let f = mixed(0.3, 0.6, -0.2, 1.0, 0.0, 0.0);
        let g = mixed(-0.4, 0.7, 0.3, 1.2, 0.0, 0.0);
        for gamma in [0.0, -0.5, 1.0] {
            for which in [TwistedDerivation::X0, TwistedDerivation::X1] {
                let r = twisted_leibniz_residual(&f, &g, which, gamma).unwrap();
                assert!(r < 1e-5, "gamma {gamma}, {which:?}: residual {r}");
            }
        }
    }

    #[test]
    fn twisted_reality_identity() {
        let f = mixed(0.3, 0.6, -0.2, 1.0, 0.0, 0.0);
        let fh = f.hermitized().unwrap();
        for gamma in [0.0, -0.5, 1.0] {
            for which in [TwistedDerivation::X0, TwistedDerivation::X1] {
                let r = twisted_reality_residual(&f, which, gamma).unwrap();
                assert!(r < 1e-5, "gamma {gamma}, {which:?}: residual {r}");
                let rh = twisted_reality_residual(&fh, which, gamma).unwrap();
                assert!(rh < 1e-5, "hermitized, gamma {gamma}: residual {rh}");
            }
        }
    }

    #[test]
    fn picture_coherence_of_products() {
        // The momentum convolution of the transforms matches the transform of
        // the space product.
        let ga = Grid::new(8.0, 64).unwrap();
        let gb = Grid::new(8.0, 64).unwrap();
        let f = AlgebraElement::space(
            gaussian_bump(ga, gb, 0.2, 1.4, -0.1, 1.3, 0.0, 0.0),
            1.0,
        )
        .unwrap();
        let g = AlgebraElement::space(
            gaussian_bump(ga, gb, -0.3, 1.3, 0.2, 1.5, 0.0, 0.0),
            1.0,
        )
        .unwrap();
        let lhs = convolve_momentum(&f.to_momentum().unwrap(), &g.to_momentum().unwrap()).unwrap();
        let rhs = star_space(&f, &g).unwrap().to_momentum().unwrap();
        let scale = lhs.max_abs().max(rhs.max_abs());
        let rel = lhs.sup_distance(&rhs).unwrap() / scale;
        assert!(rel < 1e-5, "coherence defect {rel}");
    }

    #[test]
    fn momentum_associativity() {
        let ga = Grid::new(8.0, 64).unwrap();
        let gb = Grid::new(8.0, 64).unwrap();
        let el = |ca: f64, cb: f64| {
            AlgebraElement::momentum(
                gaussian_bump(ga, gb, ca, 1.3, cb, 1.4, 0.0, 0.0),
                1.0,
            )
            .unwrap()
        };
        let (f, g, h) = (el(0.2, -0.1), el(-0.3, 0.2), el(0.0, 0.0));
        let left = convolve_momentum(&convolve_momentum(&f, &g).unwrap(), &h).unwrap();
        let right = convolve_momentum(&f, &convolve_momentum(&g, &h).unwrap()).unwrap();
        let scale = left.max_abs().max(right.max_abs());
        assert!(left.sup_distance(&right).unwrap() / scale < 1e-5);
    }

    #[test]
    fn hermitized_element_is_flat() {
        let f = mixed(0.2, 0.7, -0.1, 1.0, 0.3, 0.1);
        let h = f.hermitized().unwrap();
        assert!(h.hermitian_defect().unwrap() < 1e-8);
        assert!(h.is_hermitian_flagged());
    }

    #[test]
    fn unit_involution_identity() {
        let u = unit_element(gp(), gx(), Picture::Mixed, 1.0).unwrap();
        let dag = u.involution().unwrap();
        assert!(u.sup_distance(&dag).unwrap() < 1e-8 * u.max_abs());
        let one = unit_element(gp(), gx(), Picture::Space, 1.0).unwrap();
        let dag = one.involution().unwrap();
        assert!(one.sup_distance(&dag).unwrap() < 1e-8);
        let _ = Complex64::new(0.0, 0.0);
    }
}
