//! Exact arithmetic: scalars, polynomials, gcds, resultants and rational roots.

pub mod field;
pub mod multipoly;
pub mod resultant;
pub mod roots;
pub mod unipoly;

pub use field::{floor, int, is_prime, rat, Field, PrimeField, Rational, Rationals};
pub use multipoly::{poly_arith, ArithOp, Monomial, MultiPoly};
pub use resultant::{discriminant, resultant, sylvester_matrix};
pub use roots::{rational_roots, split_rational_roots};
pub use unipoly::{squarefree_part, uni_gcd, UniPoly};
