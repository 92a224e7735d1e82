//! Exact computations with functions on the general linear supergroup.
//!
//! The crate models gl(m|n), its enveloping superalgebra, the Hopf
//! superalgebra of matrix-element functions ℂ(G) = ℂ[X, X̄]/J, supergroup
//! points over Grassmann algebras, translation actions, tensor invariants and
//! spherical functions on projective superspaces.
//!
//! Containers are generic over [`scalar::Coeff`]; the exact default field is
//! the Gaussian rationals, see [`Scalar`].

pub mod actions;
pub mod cg;
pub mod cli;
pub mod error;
pub mod expr;
pub mod grading;
pub mod grassmann;
pub mod linalg;
pub mod scalar;
pub mod spherical;
pub mod suites;
pub mod superpoly;
pub mod tensorinv;
pub mod ugl;

pub use error::{Error, Result};
pub use grading::{Gl, Parity};
pub use scalar::{Coeff, Rational, Scalar};

/// Polynomial over the exact field.
pub type Polynomial = superpoly::Poly<Scalar>;
/// Enveloping-algebra element over the exact field.
pub type UElement = ugl::UElement<Scalar>;


