//! Exact sums of powers of integers.
//!
//! `S_m(n) = 1^m + ... + n^m` is produced in three bases: monomials in `n`,
//! the triangular number `u = n(n+1)/2`, and the shift `N = n + 1/2`.
//! Alongside sit Bernoulli numbers and polynomials and a set of checks that
//! tie all the routes together.

pub mod bernoulli;
pub mod cli;
pub mod error;
pub mod faulhaber;
pub mod poly;
pub mod powersum;
pub mod recurrence;
pub mod render;
pub mod report;
pub mod shifted;

pub use error::{Error, Result};
pub use poly::{Polynomial, Rational};
