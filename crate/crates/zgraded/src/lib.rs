//! Exact-arithmetic kernel for finite-dimensional ℤ-graded supercommutative
//! polynomial algebras.
//!
//! The local model is generated by a [`WeightSignature`]: a list of
//! zero-weight variables together with variables of nonzero integer weight.
//! Variables of odd weight anticommute and square to zero (Koszul sign rule),
//! so elements are finite sparse sums of [`Monomial`]s with exact rational
//! coefficients ([`GradedSeries`]). Series may carry a truncation tag marking
//! them as coset representatives modulo one of two filtrations:
//!
//! * `F` — the ideal generated by homogeneous elements of weight ≥ p; a
//!   monomial's order is its total positive-weight contribution.
//! * `UF` — powers of the augmentation ideal; a monomial's order is its total
//!   degree in nonzero-weight variables.
//!
//! On top of the arithmetic sit the filtration-order calculus with the
//! cofinal bound sequences relating the two flavors ([`filtration`]), the
//! Hilbert-basis machinery for the weight equation `α·p − β·q = r` and the
//! Borel normal form ([`diophantine`]), the Euler derivation and graded
//! morphisms with jet-prolongation substitution ([`euler`]), a text format
//! with parser and canonical printer ([`parse`], [`print`]), and independent
//! brute-force oracles used by the test suite and the `--verify` CLI flag
//! ([`oracle`]).
//!
//! See the crate `examples/` directory for a runnable tour of each
//! capability, and the `zgraded` binary for the command-line surface.

pub mod cli;
pub mod diophantine;
pub mod error;
pub mod euler;
pub mod filtration;
pub mod monomial;
pub mod oracle;
pub mod parse;
pub mod print;
pub mod series;
pub mod signature;

pub use diophantine::{BorelNormalForm, MinimalSolutionSet, SolutionVector};
pub use error::Error;
pub use euler::{Derivation, GradedMorphism};
pub use filtration::{Flavor, Order, Truncation};
pub use monomial::Monomial;
pub use series::GradedSeries;
pub use signature::WeightSignature;

/// Exact rational coefficient type used throughout the crate.
pub type Coeff = num_rational::BigRational;

/// Convenience constructor for small rational coefficients.
pub fn coeff(num: i64, den: i64) -> Coeff {
    Coeff::new(num.into(), den.into())
}
