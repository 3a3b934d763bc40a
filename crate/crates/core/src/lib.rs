//! Exact computer algebra for braid shuffles, Hecke and BMW symmetrizers,
//! baxterized Yang-Baxter elements, b-shuffle algebras and the spectral
//! theory of 1-shuffle operators.
//!
//! Everything is computed over exact coefficient fields (arbitrary-precision
//! rationals and rational functions of `q`, `s`, `nu`); there is no floating
//! point anywhere and every identity check compares canonical forms.
//!
//! Module map:
//! - [`coeff`] - big integers/rationals, multivariate polynomials, rational
//!   functions and q-combinatorics,
//! - [`braid`] - the positive braid monoid with Garside normal forms, the
//!   integer monoid ring and the shuffle/symmetrizer elements,
//! - [`hecke`] - the Hecke algebra in the permutation basis with baxterized
//!   elements, multiplicative/additive shuffles and symmetrizers,
//! - [`repmat`] - Yang-Baxter matrices, local representations on tensor
//!   powers, the Burau representation and flip-built operators,
//! - [`bmw`] - BMW-specific constructions verified inside validated
//!   representations,
//! - [`bshuffle`] - graded algebras on tensor spaces built from operator
//!   collections, their symmetrizers, dual and twist collections,
//! - [`spectral`] - left-regular representation, traces, minimal polynomials
//!   and eigenvalue multiplicities of the 1-shuffles.

pub mod braid;
pub mod bmw;
pub mod bshuffle;
pub mod coeff;
pub mod hecke;
pub mod matrix;
pub mod repmat;
pub mod sampling;
pub mod spectral;

pub use coeff::{BigInt, BigRat, RationalFunction};
