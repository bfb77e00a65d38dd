//! Exact rationals, dense univariate polynomials, reduced rational functions
//! and Sturm root counting.

mod poly;
mod ratfunc;
mod sturm;

pub use poly::UniPoly;
pub use ratfunc::RationalFunction;
pub use sturm::{cauchy_bound, count_roots_in_interval, sturm_sequence};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub(crate) fn from_usize(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rising factorial `(x)_k`.
pub fn pochhammer(x: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut t = x.clone();
    for _ in 0..k {
        acc *= &t;
        t += Rational::one();
    }
    acc
}

pub fn factorial(k: usize) -> Rational {
    pochhammer(&Rational::one(), k)
}

/// Generalized binomial `binom(top, k)` with rational `top`.
pub fn binomial(top: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut t = top.clone();
    for _ in 0..k {
        acc *= &t;
        t -= Rational::one();
    }
    acc / factorial(k)
}

pub(crate) fn sign_of(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
