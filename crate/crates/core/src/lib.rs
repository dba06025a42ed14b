//! Exact arithmetic for power-sum systems in which one degree is omitted.
//!
//! Everything here is computed over arbitrary-precision integers and
//! rationals; no floating point is used anywhere in a result. The crate is
//! `no_std` (with `alloc`): IO, timing and file formats live in the
//! companion CLI crate.
//!
//! Modules:
//! - [`symfunc`]: power sums, elementary symmetric functions, the auxiliary
//!   link polynomial, witness identity verification, divided differences.
//! - [`counting`]: exact solution counts (naive pair enumeration and the
//!   multiset/signature method), diagonal counts, witness extraction, and
//!   the variety split of the nondiagonal count.
//! - [`exponents`]: exact rational exponent formulas bounding nondiagonal
//!   growth, with square-comparison checks of the square-root bounds.
//! - [`cascade`]: gcd-cascade decomposition of product-balanced matrices
//!   and its reconstruction/pigeonhole verification.
//! - [`nrcount`]: counts of distinct link-polynomial value tuples over
//!   completions of a partially fixed tuple.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod budget;
pub mod cascade;
pub mod counting;
pub mod exponents;
pub mod nrcount;
pub mod symfunc;

pub use budget::Budget;
