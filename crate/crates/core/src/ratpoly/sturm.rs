use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::{sign_of, Rational, UniPoly};
use crate::{Error, Result};

/// Sturm chain `p, p′, −rem(p, p′), …` of the square-free part of `p`.
pub fn sturm_sequence(p: &UniPoly) -> Result<Vec<UniPoly>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let dp = p.derivative();
    let g = p.gcd(&dp);
    let sf = if g.is_constant() {
        p.clone()
    } else {
        p.div_exact(&g)?
    };
    let mut seq = vec![sf.clone(), sf.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let (_, r) = seq[n - 2].divrem(&seq[n - 1])?;
        if r.is_zero() {
            break;
        }
        // Any positive rescaling keeps the sign pattern; monic keeps numbers small.
        let lc = r.leading_coeff().expect("nonzero").abs();
        seq.push(-r.scale(&lc.recip()));
    }
    Ok(seq)
}

fn sign_changes(seq: &[UniPoly], x: &Rational) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for q in seq {
        let s = sign_of(&q.eval(x));
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Number of distinct real roots of `p` in `(lo, hi]`, or in `(lo, hi)` when
/// `open` is set.
pub fn count_roots_in_interval(
    p: &UniPoly,
    lo: &Rational,
    hi: &Rational,
    open: bool,
) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::EmptyInterval);
    }
    let seq = sturm_sequence(p)?;
    let count = sign_changes(&seq, lo) - sign_changes(&seq, hi);
    let hi_root = p.eval(hi).is_zero();
    Ok(if open && hi_root { count - 1 } else { count })
}

/// Cauchy bound `1 + max |a_i / a_n|`: every root lies strictly inside it.
pub fn cauchy_bound(p: &UniPoly) -> Result<Rational> {
    let lc = p.leading_coeff().ok_or(Error::ZeroPolynomial)?;
    let n = p.degree().unwrap_or(0);
    let m = p.coeffs()[..n]
        .iter()
        .map(|c| (c / lc).abs())
        .max()
        .unwrap_or_else(Rational::zero);
    Ok(m + Rational::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{int, rat};

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(c)
    }

    #[test]
    fn two_roots_of_eta_squared_minus_one() {
        assert_eq!(
            count_roots_in_interval(&p(&[-1, 0, 1]), &int(-2), &int(2), true),
            Ok(2)
        );
    }

    #[test]
    fn closed_right_endpoint_counts() {
        let q = p(&[-1, 0, 1]);
        assert_eq!(count_roots_in_interval(&q, &int(-1), &int(1), false), Ok(1));
        assert_eq!(count_roots_in_interval(&q, &int(-1), &int(1), true), Ok(0));
    }

    #[test]
    fn multiple_roots_counted_once() {
        // (η−1)³(η+2)
        let q = p(&[-1, 1]).pow(3) * p(&[2, 1]);
        assert_eq!(count_roots_in_interval(&q, &int(-5), &int(5), true), Ok(2));
    }

    #[test]
    fn shifted_root_outside_half_line() {
        let xi = UniPoly::linear(rat(5, 2), int(1));
        assert_eq!(
            count_roots_in_interval(&xi, &int(0), &int(1_000_000), true),
            Ok(0)
        );
        let xi_j = UniPoly::linear(rat(5, 2), int(1));
        assert_eq!(
            count_roots_in_interval(&xi_j, &int(-1), &int(1), true),
            Ok(0)
        );
    }

    #[test]
    fn errors() {
        assert_eq!(
            count_roots_in_interval(&UniPoly::zero(), &int(0), &int(1), true),
            Err(Error::ZeroPolynomial)
        );
        assert_eq!(
            count_roots_in_interval(&p(&[1, 1]), &int(1), &int(1), true),
            Err(Error::EmptyInterval)
        );
    }

    #[test]
    fn cauchy_bound_encloses_roots() {
        let q = p(&[-6, 1, 1]); // roots 2, −3
        let b = cauchy_bound(&q).unwrap();
        assert_eq!(b, int(7));
        assert_eq!(count_roots_in_interval(&q, &-b.clone(), &b, true), Ok(2));
    }
}
