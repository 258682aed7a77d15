//! Exact exterior calculus over rational polynomials, Hamiltonian
//! multivector fields of the Liouville volume form, generalized Nambu
//! brackets, and numeric integration of the resulting flows.
//!
//! All symbolic types are generic over their coefficient [`Scalar`]. The
//! aliases below fix the two instantiations used in practice: exact
//! rationals for identities and `f64` for numerics.

pub mod coords;
pub mod error;
pub mod exterior;
pub mod flows;
pub mod hamfields;
pub mod poly;
pub mod random;
pub mod scalar;

pub use coords::Coords;
pub use error::{Error, Result};
pub use exterior::{Form, Graded, KForm, KVector, Kind, Vector};
pub use poly::{Monomial, Polynomial};
pub use scalar::{rational, Rational, Scalar};

/// Polynomial with exact rational coefficients.
pub type QPoly = Polynomial<Rational>;
/// Differential form with exact rational coefficients.
pub type QForm = KForm<Rational>;
/// Multivector field with exact rational coefficients.
pub type QVector = KVector<Rational>;

pub type Poly64 = Polynomial<f64>;
pub type Form64 = KForm<f64>;
pub type Vector64 = KVector<f64>;
pub type Poly32 = Polynomial<f32>;
