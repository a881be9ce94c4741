//! Fermionic character formulas for spaces of `sl2` coinvariants.
//!
//! The crate computes, in exact integer arithmetic,
//!
//! - Gaussian binomials and the q-multinomial coefficients `F_{M,m}(q)` ([`qcomb`]),
//! - the level-`k` Verlinde ring and its dimension formulas ([`verlinde`]),
//! - restricted and unrestricted Kostka polynomials ([`kostka`]),
//! - fusion-product and coinvariant characters ([`characters`]),
//!
//! and carries an independent brute-force [`oracle`]: explicit matrix
//! representations, filtered tensor products at distinct evaluation points and
//! their graded quotients, computed by row reduction over a large prime field
//! (or over the rationals for small cases).
//!
//! All characters are [`LaurentPoly`] values. `q` exponents are integers;
//! weight variables (`z`, `z1`, `z2`) store their exponents in fixed fractional
//! steps (halves, or sixths for the `sl3` fusion character) so that every
//! exponent is an exact integer in storage.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod characters;
pub mod error;
pub mod kostka;
pub mod oracle;
pub mod poly;
pub mod qcomb;
pub mod verlinde;

pub use arith::{BigInt, BigRat, Field, PrimeField, PrimeFieldElt, RationalField, DEFAULT_PRIME};
pub use error::{Error, Result};
pub use poly::{Binding, LaurentPoly, Specialized, Var};
pub use qcomb::Composition;
pub use verlinde::VerlindeElt;
