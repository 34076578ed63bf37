//! Second Hankel determinant |a2*a4 - a3^2| for starlike and convex functions
//! of order alpha/2 - 1, with 1 <= alpha <= 2.
//!
//! The library has two halves that check each other:
//!
//! * closed-form machinery ([`bounds`]): the coefficient functionals, the
//!   triangle-inequality surrogates F(c, delta), their delta = 1 reductions
//!   G(c), and the resulting theorem bounds (plus a corrected convex
//!   envelope whose c^4 coefficient carries the modulus instead of a sign);
//! * brute force ([`search`]): grid maximization of the surrogates,
//!   exhaustive search over the (c1, x, z) coefficient-body parametrization,
//!   and seeded Monte-Carlo sampling of Caratheodory functions.
//!
//! Supporting modules: truncated complex power series ([`series`]),
//! Caratheodory coefficient generation and admissibility ([`caratheodory`]),
//! the class recursions ([`classes`]) and Hankel determinants ([`hankel`]).
//!
//! With the default `parallel` feature the searches run on rayon; disabling
//! it leaves the bit-identical sequential path.

pub mod bounds;
pub mod caratheodory;
pub mod classes;
mod error;
pub mod hankel;
mod linalg;
pub mod search;
pub mod series;

pub use error::{Error, Result};
