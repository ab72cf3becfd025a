//! Height bounds and bounded solution search for Diophantine equations over
//! function fields `Q(t)` / `F_p(t)` and over the integers.
//!
//! The crate is layered bottom-up:
//!
//! * [`algebra`] exact rationals, prime fields, polynomials, resultants;
//! * [`groebner`] Buchberger bases and rational solving of zero-dimensional
//!   systems;
//! * [`fibration`] invariants `d, e, g, s, k` of a family `f(x, y, t) = 0`;
//! * [`bounds`] the height-bound calculators;
//! * [`geography`] checkers for Chern-number and fibration inequalities;
//! * [`solver`] integer and function-field searches, Frobenius twists;
//! * [`parse`] the polynomial text grammar used by the command line.

pub mod algebra;
pub mod bounds;
pub mod error;
pub mod fibration;
pub mod geography;
pub mod groebner;
pub mod parse;
pub mod solver;

pub use error::{Error, Result};
