//! Numerical realization of a (1+1)-dimensional kappa-deformed Minkowski
//! geometry at desk scale.
//!
//! The crate discretizes the deformed coordinate algebra on uniform grids,
//! represents it by dense integral-kernel matrices on `L^2(R)`, assembles the
//! Dirac/Krein operator data on the doubled Hilbert space, and decides causal
//! order between wave-packet states from a sufficient transport certificate
//! and a necessary expectation-value constraint.
//!
//! Modules:
//! - [`numerics`]: grids, transforms, interpolation, Hermitian eigensolves;
//! - [`algebra`]: deformed products, involutions, flows, Hopf-type actions;
//! - [`representation`]: discretized representations and vector states;
//! - [`triple`]: Dirac operator, fundamental symmetry, Krein checks;
//! - [`causality`]: causal cone, transport certificate, witness search;
//! - [`suites`]: packaged verification suites with serializable reports;
//! - [`io`]: element/state serialization.

pub mod algebra;
pub mod causality;
pub mod error;
pub mod io;
pub mod numerics;
pub mod representation;
pub mod suites;
pub mod triple;

pub use error::{Error, Result};
