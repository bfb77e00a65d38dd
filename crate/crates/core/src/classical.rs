//! Classical Laguerre and Jacobi polynomials and the stock identities the
//! exceptional construction relies on.

use alloc::format;

use num_traits::{One, Zero};

use crate::ratpoly::{binomial, factorial, from_usize, int, pochhammer, rat, Rational, UniPoly};
use crate::{Error, Perturbation, Report, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassicalKind {
    Laguerre { alpha: Rational },
    Jacobi { a: Rational, b: Rational },
}

impl ClassicalKind {
    pub fn laguerre(alpha: Rational) -> Self {
        ClassicalKind::Laguerre { alpha }
    }

    pub fn jacobi(a: Rational, b: Rational) -> Self {
        ClassicalKind::Jacobi { a, b }
    }

    /// Degree-`n` member; Jacobi falls back to the hypergeometric sum when
    /// the recurrence degenerates.
    pub fn poly(&self, n: usize) -> UniPoly {
        match self {
            ClassicalKind::Laguerre { alpha } => laguerre(n, alpha),
            ClassicalKind::Jacobi { a, b } => {
                jacobi(n, a, b).unwrap_or_else(|_| jacobi_hypergeometric(n, a, b))
            }
        }
    }

    /// Coefficients `(A_n, B_n, C_n)` of `x·p_n = A_n p_{n+1} + B_n p_n + C_n p_{n−1}`.
    pub fn recurrence(&self, n: usize) -> Result<(Rational, Rational, Rational)> {
        let nr = from_usize(n);
        match self {
            ClassicalKind::Laguerre { alpha } => Ok((
                -(&nr + int(1)),
                &nr * int(2) + alpha + int(1),
                -(&nr + alpha),
            )),
            ClassicalKind::Jacobi { a, b } => jacobi_recurrence(n, a, b),
        }
    }

    fn in_norm_range(&self) -> bool {
        let m1 = int(-1);
        match self {
            ClassicalKind::Laguerre { alpha } => *alpha > m1,
            ClassicalKind::Jacobi { a, b } => *a > m1 && *b > m1,
        }
    }
}

/// `L_n^{(α)}` from the three-term recurrence.
pub fn laguerre(n: usize, alpha: &Rational) -> UniPoly {
    let mut prev = UniPoly::zero();
    let mut cur = UniPoly::one();
    for k in 0..n {
        let kr = from_usize(k);
        let lin = UniPoly::linear(&kr * int(2) + alpha + int(1), int(-1));
        let next = (&lin * &cur - prev.scale(&(&kr + alpha))).scale(&(kr + int(1)).recip());
        prev = cur;
        cur = next;
    }
    cur
}

fn jacobi_recurrence(
    n: usize,
    a: &Rational,
    b: &Rational,
) -> Result<(Rational, Rational, Rational)> {
    let ab = a + b;
    if n == 0 {
        // Removable singularity at a+b = 0 and a+b = −1 handled by the closed form.
        let d = &ab + int(2);
        if d.is_zero() {
            return Err(Error::DegenerateJacobi { n });
        }
        return Ok((int(2) / &d, (b - a) / d, Rational::zero()));
    }
    let nr = from_usize(n);
    let s = &nr * int(2) + &ab;
    let (s1, s2) = (&s + int(1), &s + int(2));
    let a_num = int(2) * (&nr + int(1)) * (&nr + &ab + int(1));
    if s.is_zero() || s1.is_zero() || s2.is_zero() || a_num.is_zero() {
        return Err(Error::DegenerateJacobi { n });
    }
    Ok((
        a_num / (&s1 * &s2),
        (b * b - a * a) / (&s * &s2),
        int(2) * (&nr + a) * (&nr + b) / (&s * &s1),
    ))
}

/// `P_n^{(a,b)}` from the three-term recurrence.
pub fn jacobi(n: usize, a: &Rational, b: &Rational) -> Result<UniPoly> {
    let mut prev = UniPoly::zero();
    let mut cur = UniPoly::one();
    for k in 0..n {
        let (ak, bk, ck) = jacobi_recurrence(k, a, b)?;
        let lin = UniPoly::linear(-bk, int(1));
        let next = (&lin * &cur - prev.scale(&ck)).scale(&ak.recip());
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `P_n^{(a,b)} = Σ_k C(n+a, n−k) C(n+b, k) ((x−1)/2)^k ((x+1)/2)^{n−k}`,
/// polynomial-valued for every rational `(a, b)`.
pub fn jacobi_hypergeometric(n: usize, a: &Rational, b: &Rational) -> UniPoly {
    let nr = from_usize(n);
    let xm = UniPoly::linear(rat(-1, 2), rat(1, 2));
    let xp = UniPoly::linear(rat(1, 2), rat(1, 2));
    (0..=n).fold(UniPoly::zero(), |acc, k| {
        let c = binomial(&(&nr + a), n - k) * binomial(&(&nr + b), k);
        acc + (xm.pow(k as u32) * xp.pow((n - k) as u32)).scale(&c)
    })
}

/// `h_n / h_0` for the classical orthogonality measure.
pub fn norm_ratio(kind: &ClassicalKind, n: usize) -> Result<Rational> {
    if !kind.in_norm_range() {
        return Err(Error::OutOfRange(format!(
            "{kind:?} outside the orthogonality range"
        )));
    }
    Ok(match kind {
        ClassicalKind::Laguerre { alpha } => pochhammer(&(alpha + int(1)), n) / factorial(n),
        ClassicalKind::Jacobi { a, b } => {
            if n == 0 {
                return Ok(Rational::one());
            }
            let ab = a + b;
            let nr = from_usize(n);
            pochhammer(&(a + int(1)), n) * pochhammer(&(b + int(1)), n)
                / (factorial(n) * (nr * int(2) + &ab + int(1)) * pochhammer(&(ab + int(2)), n - 1))
        }
    })
}

fn record(report: &mut Report, identity: &str, n: usize, residual: UniPoly) {
    let passed = residual.is_zero();
    let detail = if passed {
        alloc::string::String::new()
    } else {
        format!("residual {residual}")
    };
    report.push(identity, Some(n), passed, detail);
}

fn bump(p: Perturbation) -> Rational {
    if p.is_active() {
        rat(1, 1000)
    } else {
        Rational::zero()
    }
}

pub fn verify_classical_identities(kind: &ClassicalKind, nmax: usize) -> Report {
    verify_classical_identities_with(kind, nmax, Perturbation::None)
}

/// Exact checks of the ODE, recurrence and the (Laguerre) differentiation and
/// Geronimus formulas or the (Jacobi) Christoffel, Geronimus, `(1+x)` and
/// parity formulas, for `n ≤ nmax`. Instances whose closed-form coefficients have
/// a vanishing denominator are omitted.
pub fn verify_classical_identities_with(
    kind: &ClassicalKind,
    nmax: usize,
    perturb: Perturbation,
) -> Report {
    let eps = bump(perturb);
    let mut report = Report::new(format!("classical {kind:?}"));
    let x = UniPoly::eta();
    match kind {
        ClassicalKind::Laguerre { alpha } => {
            let l = |n: usize, al: &Rational| laguerre(n, al);
            let a1 = alpha + int(1);
            for n in 0..=nmax {
                let p = l(n, alpha);
                let nr = from_usize(n);
                let deg_ok = p.degree() == Some(n)
                    && p.leading_coeff()
                        == Some(&(int(if n % 2 == 0 { 1 } else { -1 }) / factorial(n)));
                report.push("laguerre-degree", Some(n), deg_ok, "");
                let dp = p.derivative();
                let ode = &x * &dp.derivative()
                    + UniPoly::linear(&a1 + &eps, int(-1)) * &dp
                    + p.scale(&nr);
                record(&mut report, "laguerre-ode", n, ode);
                let prev = if n == 0 {
                    UniPoly::zero()
                } else {
                    l(n - 1, alpha)
                };
                let rec = l(n + 1, alpha).scale(&-(&nr + int(1)))
                    + p.scale(&(&nr * int(2) + alpha + int(1)))
                    - prev.scale(&(&nr + alpha))
                    - &x * &p;
                record(&mut report, "laguerre-recurrence", n, rec);
                let below = if n == 0 {
                    UniPoly::zero()
                } else {
                    l(n - 1, &a1)
                };
                record(&mut report, "laguerre-differentiation", n, &dp + &below);
                record(
                    &mut report,
                    "laguerre-geronimus",
                    n,
                    &p - &(l(n, &a1) - below),
                );
            }
        }
        ClassicalKind::Jacobi { a, b } => {
            let ab = a + b;
            let pj = |n: usize, a: &Rational, b: &Rational| jacobi_hypergeometric(n, a, b);
            let (a1, bm1) = (a + int(1), b - int(1));
            for n in 0..=nmax {
                let nr = from_usize(n);
                let p = pj(n, a, b);
                let dp = p.derivative();
                let ode = UniPoly::from_i64s(&[1, 0, -1]) * dp.derivative()
                    + UniPoly::linear(b - a + &eps, -(&ab + int(2))) * &dp
                    + p.scale(&(&nr * (&nr + &ab + int(1))));
                record(&mut report, "jacobi-ode", n, ode);

                if let Ok(rp) = jacobi(n, a, b) {
                    record(&mut report, "jacobi-recurrence-vs-sum", n, &rp - &p);
                }
                if let Ok((an, bn, cn)) = jacobi_recurrence(n, a, b) {
                    let prev = if n == 0 {
                        UniPoly::zero()
                    } else {
                        pj(n - 1, a, b)
                    };
                    let rec = pj(n + 1, a, b).scale(&an) + p.scale(&bn) + prev.scale(&cn) - &x * &p;
                    record(&mut report, "jacobi-recurrence", n, rec);
                }

                let s = &nr * int(2) + &ab;
                let s1 = &s + int(1);
                let s2 = &s + int(2);
                let xp1 = UniPoly::linear(int(1), int(1));
                let ct = (&xp1 * &p).scale(&s1)
                    - pj(n + 1, a, &bm1).scale(&(int(2) * (&nr + int(1))))
                    - pj(n, a, &bm1).scale(&(int(2) * (&nr + b)));
                record(&mut report, "jacobi-christoffel", n, ct);

                let below = if n == 0 {
                    UniPoly::zero()
                } else {
                    pj(n - 1, &a1, b)
                };
                let gt = p.scale(&s1) - pj(n, &a1, b).scale(&(&nr + &ab + int(1)))
                    + below.scale(&(&nr + b));
                record(&mut report, "jacobi-geronimus", n, gt);

                if !(s.is_zero() || s1.is_zero() || s2.is_zero()) {
                    let alpha_n = int(2) * (&nr + int(1)) * (&nr + &ab + int(1)) / (&s1 * &s2);
                    let beta_n = int(2) * &ab * (&nr + b) / (&s * &s2);
                    let gamma_n = -int(2) * (&nr + b) * (&nr + b - int(1)) / (&s * &s1);
                    let below = if n == 0 {
                        UniPoly::zero()
                    } else {
                        pj(n - 1, &a1, &bm1)
                    };
                    let e = &xp1 * &p
                        - pj(n + 1, &a1, &bm1).scale(&alpha_n)
                        - pj(n, &a1, &bm1).scale(&beta_n)
                        - below.scale(&gamma_n);
                    record(&mut report, "jacobi-one-plus-x", n, e);
                }

                let sign = if n % 2 == 0 { int(1) } else { int(-1) };
                let parity =
                    p.compose_affine(&int(-1), &Rational::zero()) - pj(n, b, a).scale(&sign);
                record(&mut report, "jacobi-parity", n, parity);
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn laguerre_low_orders() {
        let al = rat(1, 3);
        assert_eq!(laguerre(0, &al), UniPoly::one());
        assert_eq!(laguerre(1, &al), UniPoly::linear(&al + int(1), int(-1)));
        let l2 = UniPoly::from_coeffs(vec![
            (&al + int(1)) * (&al + int(2)),
            int(-2) * (&al + int(2)),
            int(1),
        ])
        .scale(&rat(1, 2));
        assert_eq!(laguerre(2, &al), l2);
    }

    #[test]
    fn jacobi_low_orders() {
        assert_eq!(jacobi(0, &int(1), &int(2)).unwrap(), UniPoly::one());
        assert_eq!(
            jacobi(1, &int(1), &int(2)).unwrap(),
            UniPoly::linear(rat(-1, 2), rat(5, 2))
        );
        let (a, b) = (rat(3, 2), rat(-7, 2));
        assert_eq!(
            jacobi_hypergeometric(1, &a, &b),
            UniPoly::linear((&a - &b) / int(2), (&a + &b + int(2)) / int(2))
        );
    }

    #[test]
    fn legendre_allowed_through_closed_first_step() {
        let p2 = jacobi(2, &int(0), &int(0)).unwrap();
        assert_eq!(
            p2,
            UniPoly::from_coeffs(vec![rat(-1, 2), int(0), rat(3, 2)])
        );
    }

    #[test]
    fn degenerate_recurrence_reported() {
        // 2n+a+b+1 = 0 at n = 1
        let err = jacobi(3, &rat(-1, 2), &rat(-5, 2)).unwrap_err();
        assert_eq!(err, Error::DegenerateJacobi { n: 1 });
        assert_eq!(
            jacobi_hypergeometric(3, &rat(-1, 2), &rat(-5, 2)).degree(),
            Some(3)
        );
    }

    #[test]
    fn norm_ratios() {
        let lag = ClassicalKind::laguerre(rat(1, 2));
        assert_eq!(norm_ratio(&lag, 0).unwrap(), int(1));
        assert_eq!(norm_ratio(&lag, 2).unwrap(), rat(15, 8));
        assert!(norm_ratio(&ClassicalKind::laguerre(int(-1)), 1).is_err());
    }

    /// Exact ∫_{-1}^{1} p(x) dx through the antiderivative.
    fn integrate(p: &UniPoly) -> Rational {
        let prim = UniPoly::from_coeffs(
            core::iter::once(Rational::zero())
                .chain(
                    p.coeffs()
                        .iter()
                        .enumerate()
                        .map(|(i, c)| c / from_usize(i + 1)),
                )
                .collect(),
        );
        prim.eval(&int(1)) - prim.eval(&int(-1))
    }

    #[test]
    fn jacobi_norm_ratio_against_direct_integration() {
        let (a, b) = (int(1), int(2));
        let w = UniPoly::from_i64s(&[1, -1]) * UniPoly::from_i64s(&[1, 1]).pow(2);
        let kind = ClassicalKind::jacobi(a.clone(), b.clone());
        let h0 = integrate(&w);
        for n in 0..5 {
            let p = jacobi(n, &a, &b).unwrap();
            let hn = integrate(&(&w * &p.pow(2)));
            assert_eq!(norm_ratio(&kind, n).unwrap(), hn / &h0, "n={n}");
        }
        assert_eq!(norm_ratio(&kind, 1).unwrap(), int(1));
    }

    #[test]
    fn christoffel_example() {
        let lhs =
            (UniPoly::linear(int(1), int(1)) * jacobi(1, &int(1), &int(2)).unwrap()).scale(&int(6));
        let rhs = jacobi(2, &int(1), &int(1)).unwrap().scale(&int(4))
            + jacobi(1, &int(1), &int(1)).unwrap().scale(&int(6));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn laguerre_identities_hold() {
        for alpha in [int(0), rat(1, 2), rat(7, 3), rat(-5, 2)] {
            let r = verify_classical_identities(&ClassicalKind::laguerre(alpha), 8);
            assert!(r.all_passed(), "{:?}", r.first_failure());
        }
    }

    #[test]
    fn jacobi_identities_hold() {
        for (a, b) in [
            (int(1), int(2)),
            (rat(1, 2), rat(-1, 2)),
            (rat(7, 2), rat(5, 2)),
            (rat(3, 2), rat(-7, 2)),
        ] {
            let r = verify_classical_identities(&ClassicalKind::jacobi(a, b), 8);
            assert!(r.all_passed(), "{:?}", r.first_failure());
        }
    }

    #[test]
    fn perturbation_is_detected() {
        let r = verify_classical_identities_with(
            &ClassicalKind::jacobi(int(1), int(2)),
            3,
            Perturbation::Active,
        );
        assert!(!r.all_passed());
        let r = verify_classical_identities_with(
            &ClassicalKind::laguerre(int(1)),
            3,
            Perturbation::Active,
        );
        assert!(!r.all_passed());
    }
}
