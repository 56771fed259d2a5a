//! Numerical laboratory for the mean field equation on the unit sphere,
//!
//! ```text
//!     (alpha/2) * Lap u + e^u - 1 = 0      on S^2,
//! ```
//!
//! normalized so that the average of e^u over the sphere is 1.
//!
//! The crate is organized around a Gauss-Legendre x equispaced-longitude
//! grid with real spherical-harmonic transforms (`grid`), the equation's
//! data model (`field`, `mfe`), Newton-Krylov solvers with deflation and
//! pseudo-arclength continuation (`solver`), geometric symmetry
//! diagnostics built on great-circle gradient profiles (`symmetry`), and
//! the stereographic transformation chain together with a numerical
//! Sphere Covering Inequality verifier (`stereo`).

pub mod error;
pub mod field;
pub mod grid;
pub mod io;
pub mod mfe;
pub mod solver;
pub mod stereo;
pub mod symmetry;

pub use error::{Error, Result};
pub use field::SphereField;
pub use grid::{HarmonicCoeffs, SphereContext, SphereGrid};
