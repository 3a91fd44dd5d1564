//! Exact polynomial arithmetic over the rationals.
//!
//! [`UPoly`] is the dense univariate workhorse used for elimination,
//! [`HPoly`] holds homogeneous forms in `x, y, z`, [`NumberField`] gives
//! exact arithmetic in `Q[t]/(g)` for irreducible `g`, and [`AlgNum`] pins a
//! single complex root of a minimal polynomial with an isolating box.

mod algnum;
mod complex;
mod factor;
mod hpoly;
mod numfield;
mod upoly;

pub use algnum::{algnum_eq, isolate_roots, root_separation_sq_lower_bound, AlgNum};
pub use complex::{CBox, CRat, Interval};
pub use factor::{factor_rational, squarefree_decomposition};
pub use hpoly::{monomial_index, monomials_of_degree, HPoly, Monomial, Var};
pub use numfield::{minimal_polynomial, NfElem, NfPoly, NumberField};
pub use upoly::{upoly_resultant, UPoly};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Canonical arbitrary-precision rational; always stored in lowest terms
/// with a positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("undefined input: {0}")]
    UndefinedInput(&'static str),
    #[error("unsupported degree {degree} (at most {max} is handled)")]
    UnsupportedDegree { degree: usize, max: usize },
    #[error("root refinement budget exhausted for a polynomial of degree {0}")]
    RefinementExhausted(usize),
    #[error("polynomial is not squarefree")]
    NotSquarefree,
}

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d` in lowest terms. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `p` or `p/q`.
pub fn fmt_rational(q: &Rational) -> alloc::string::String {
    use alloc::string::ToString;
    if q.is_integer() {
        q.numer().to_string()
    } else {
        alloc::format!("{}/{}", q.numer(), q.denom())
    }
}

/// Rounds to the nearest integer (ties away from zero).
pub(crate) fn round_rational(q: &Rational) -> BigInt {
    q.round().to_integer()
}

/// Rounds `q` to a multiple of `2^-bits`.
pub(crate) fn round_dyadic(q: &Rational, bits: u32) -> Rational {
    let scale = BigInt::one() << bits;
    let scaled = q * Rational::from_integer(scale.clone());
    Rational::new(round_rational(&scaled), scale)
}

/// A dyadic rational `h >= sqrt(q)` that overshoots by a relative margin of
/// roughly `2^-30`.
pub(crate) fn sqrt_upper(q: &Rational) -> Rational {
    assert!(!q.is_negative(), "square root of a negative rational");
    if q.is_zero() {
        return Rational::zero();
    }
    // Choose k so that q * 4^k has about 64 integer bits.
    let num_bits = q.numer().bits() as i64;
    let den_bits = q.denom().bits() as i64;
    let k = ((64 - (num_bits - den_bits)) / 2).max(0) as u32;
    let scaled = q * Rational::from_integer(BigInt::one() << (2 * k));
    let floor = scaled.floor().to_integer();
    let root = floor.sqrt() + BigInt::one();
    Rational::new(root, BigInt::one() << k)
}

/// Least common multiple of the denominators.
pub(crate) fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Greatest common divisor of integers (nonnegative; zero for empty input).
pub(crate) fn integer_content<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    use num_integer::Integer;
    values.into_iter().fold(BigInt::zero(), |acc, v| acc.gcd(v))
}
