//! Exact coefficient arithmetic: arbitrary-precision integers and rationals,
//! multivariate polynomials in `q`, `s`, `nu`, rational functions in canonical
//! form, and the q-combinatorics used by every other module.

mod parse;
mod poly;
mod qnum;
mod ratfun;

pub use num_bigint::BigInt;
/// Ratio of two [`BigInt`] in lowest terms with positive denominator.
pub type BigRat = num_rational::BigRational;

pub use parse::ParseError;
pub use poly::{Mono, MultiPoly, Var, NVARS};
pub use qnum::{derangement_counts, q_factorial, q_int, q_superfactorial};
pub use ratfun::RationalFunction;

use num_traits::{One, Zero};

/// Shorthand for an integer-valued [`BigRat`].
pub fn rat(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `n/d` as a [`BigRat`].
pub fn ratio(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

/// `n!` as a [`BigInt`].
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial coefficient `C(n, k)` as a [`BigInt`].
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
