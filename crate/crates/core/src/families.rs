//! The four families L1, L2, J1, J2: parameters, deformation polynomials
//! `ξ_ℓ`, spectra and the coefficient data of the Fuchsian operator.

use alloc::format;
use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use num_traits::{Signed, Zero};

use crate::classical::{jacobi_hypergeometric, laguerre};
use crate::ratpoly::{
    cauchy_bound, count_roots_in_interval, factorial, from_usize, int, pochhammer, rat,
};
use crate::ratpoly::{Rational, UniPoly};
use crate::{Error, Report, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    L1,
    L2,
    J1,
    J2,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::L1, Family::L2, Family::J1, Family::J2];

    /// Laguerre side (`η = x²`) as opposed to Jacobi side (`η = cos 2x`).
    pub fn is_laguerre(self) -> bool {
        matches!(self, Family::L1 | Family::L2)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::L1 => "L1",
            Family::L2 => "L2",
            Family::J1 => "J1",
            Family::J2 => "J2",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "L1" => Ok(Family::L1),
            "L2" => Ok(Family::L2),
            "J1" => Ok(Family::J1),
            "J2" => Ok(Family::J2),
            _ => Err(Error::InvalidParams(format!(
                "unknown family {s:?} (expected L1, L2, J1 or J2)"
            ))),
        }
    }
}

/// Which Hamiltonian of the factorized pair, or the deformed Hamiltonian `H_ℓ`
/// (the partner with its additive constant removed).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tier {
    Plus,
    Minus,
    Os,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    pub family: Family,
    pub ell: usize,
    pub g: Rational,
    /// Ignored by the Laguerre families.
    pub h: Rational,
}

impl FamilyParams {
    /// Validated constructor.
    pub fn new(family: Family, ell: usize, g: Rational, h: Rational) -> Result<Self> {
        let p = FamilyParams { family, ell, g, h };
        p.validate()?;
        Ok(p)
    }

    pub fn laguerre(family: Family, ell: usize, g: Rational) -> Result<Self> {
        Self::new(family, ell, g, Rational::zero())
    }

    pub fn validate(&self) -> Result<()> {
        if self.ell < 1 {
            return Err(Error::InvalidParams("requires ell>=1".into()));
        }
        let zero = Rational::zero();
        let (ok, what) = match self.family {
            Family::L1 => (self.g > rat(1, 2), "requires g>1/2"),
            Family::L2 => (self.g > rat(-1, 2), "requires g>-1/2"),
            Family::J1 if self.h <= zero => (false, "requires h>0"),
            Family::J1 => (self.g > self.h, "requires g>h"),
            Family::J2 if self.g <= zero => (false, "requires g>0"),
            Family::J2 => (self.h > self.g, "requires h>g"),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParams(what.into()))
        }
    }

    /// Parameters shifted by `δ`: `g+1` (L) or `(g+1, h+1)` (J).
    pub fn shifted(&self) -> Self {
        let h = if self.family.is_laguerre() {
            self.h.clone()
        } else {
            &self.h + int(1)
        };
        FamilyParams {
            family: self.family,
            ell: self.ell,
            g: &self.g + int(1),
            h,
        }
    }

    pub fn label(&self) -> String {
        if self.family.is_laguerre() {
            format!("{} ell={} g={}", self.family, self.ell, self.g)
        } else {
            format!("{} ell={} g={} h={}", self.family, self.ell, self.g, self.h)
        }
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Deformation polynomial `ξ_ℓ(η)` (degree ℓ).
pub fn xi(params: &FamilyParams) -> UniPoly {
    let l = params.ell;
    let lr = from_usize(l);
    let (g, h) = (&params.g, &params.h);
    match params.family {
        Family::L1 => {
            laguerre(l, &(g + &lr - rat(3, 2))).compose_affine(&int(-1), &Rational::zero())
        }
        Family::L2 => laguerre(l, &(-(g + &lr) - rat(1, 2))),
        Family::J1 => jacobi_hypergeometric(l, &(g + &lr - rat(3, 2)), &(-(h + &lr) - rat(1, 2))),
        Family::J2 => jacobi_hypergeometric(l, &(-(g + &lr) - rat(1, 2)), &(h + &lr - rat(3, 2))),
    }
}

/// `E^{(±)}_{ℓ,n} − E_{ℓ,n}`.
pub fn eigenvalue_shift(params: &FamilyParams) -> Rational {
    let lr = from_usize(params.ell);
    let (g, h) = (&params.g, &params.h);
    match params.family {
        Family::L1 => int(2) * (int(2) * g + int(4) * &lr - int(1)),
        Family::L2 => int(2) * (int(2) * g + int(1)),
        Family::J1 => (int(2) * g + int(4) * &lr - int(1)) * (int(2) * h + int(1)),
        Family::J2 => (int(2) * h + int(4) * &lr - int(1)) * (int(2) * g + int(1)),
    }
}

pub fn eigenvalue(params: &FamilyParams, n: usize, tier: Tier) -> Rational {
    let nr = from_usize(n);
    let lr = from_usize(params.ell);
    let os = if params.family.is_laguerre() {
        int(4) * nr
    } else {
        int(4) * &nr * (&nr + &params.g + &params.h + int(2) * lr)
    };
    match tier {
        Tier::Os => os,
        Tier::Plus | Tier::Minus => os + eigenvalue_shift(params),
    }
}

/// Coefficients of the Fuchsian operator, already evaluated at the
/// parameters where the operator uses them: `c1` at `λ+ℓδ`, `etilde` at
/// `λ+δ`, `d1` at `λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlCoeffs {
    pub c1: UniPoly,
    pub c2: UniPoly,
    pub d1: Rational,
    pub d2: UniPoly,
    pub etilde: Rational,
}

impl SlCoeffs {
    /// `c2/d2`, a polynomial for every family.
    pub fn c2_over_d2(&self) -> UniPoly {
        self.c2.div_exact(&self.d2).expect("d2 divides c2")
    }
}

pub fn sl_coeffs(params: &FamilyParams) -> SlCoeffs {
    let lr = from_usize(params.ell);
    let g_l = &params.g + &lr;
    let h_l = &params.h + &lr;
    let (g, h) = (&params.g, &params.h);
    let half = rat(1, 2);
    let c1 = if params.family.is_laguerre() {
        UniPoly::linear(&g_l + &half, int(-1))
    } else {
        UniPoly::linear(&h_l - &g_l, -(&g_l + &h_l + int(1)))
    };
    let c2 = if params.family.is_laguerre() {
        UniPoly::eta()
    } else {
        UniPoly::from_i64s(&[1, 0, -1])
    };
    let four_l = int(4) * &lr;
    let (d1, d2, etilde) = match params.family {
        Family::L1 => (int(1), UniPoly::one(), -four_l),
        Family::L2 => (g + &half, UniPoly::from_i64s(&[0, -1]), four_l),
        Family::J1 => (
            h + &half,
            UniPoly::from_i64s(&[-1, -1]),
            four_l * (&lr + g - h - int(1)),
        ),
        Family::J2 => (
            g + &half,
            UniPoly::from_i64s(&[1, -1]),
            four_l * (&lr - g + h - int(1)),
        ),
    };
    SlCoeffs {
        c1,
        c2,
        d1,
        d2,
        etilde,
    }
}

/// The closed-form positivity sum for each family, as a polynomial in η.
pub fn positivity_sum(params: &FamilyParams) -> UniPoly {
    let l = params.ell;
    let lr = from_usize(l);
    let (g, h) = (&params.g, &params.h);
    let half = rat(1, 2);
    match params.family {
        Family::L1 | Family::L2 => (0..=l).fold(UniPoly::zero(), |acc, k| {
            let top = match params.family {
                Family::L1 => pochhammer(&(g + &lr + from_usize(k) - &half), l - k),
                _ => pochhammer(&(g + &half), l - k),
            };
            acc + UniPoly::monomial(top / (factorial(k) * factorial(l - k)), k)
        }),
        Family::J1 | Family::J2 => {
            let (p, q, base) = match params.family {
                Family::J1 => (
                    h,
                    g,
                    UniPoly::from_coeffs(alloc::vec![half.clone(), half.clone()]),
                ),
                _ => (
                    g,
                    h,
                    UniPoly::from_coeffs(alloc::vec![half.clone(), -half.clone()]),
                ),
            };
            let pref = pochhammer(&(p + &half), l) / factorial(l);
            (0..=l).fold(UniPoly::zero(), |acc, k| {
                let kr = from_usize(k);
                let c = pochhammer(&(&lr - &kr + int(1)), k)
                    * pochhammer(&(q - p + &lr - int(1)), k)
                    / (factorial(k) * pochhammer(&(p + &lr - &kr + &half), k));
                acc + base.pow(k as u32).scale(&(&pref * c))
            })
        }
    }
}

/// `σ ∈ {+1, −1}` with `positivity_sum = σ·ξ_ℓ`, if any.
pub fn positivity_sign(params: &FamilyParams) -> Option<i8> {
    let s = positivity_sum(params);
    let x = xi(params);
    if s == x {
        Some(1)
    } else if s == -x {
        Some(-1)
    } else {
        None
    }
}

/// Physical interval in η: `(0, B)` with `B` a Cauchy bound (L) or `(−1, 1)` (J).
pub fn physical_interval(params: &FamilyParams, p: &UniPoly) -> Result<(Rational, Rational)> {
    if params.family.is_laguerre() {
        Ok((Rational::zero(), cauchy_bound(p)?))
    } else {
        Ok((int(-1), int(1)))
    }
}

/// Structure of `ξ_ℓ`: degree, the closed-form positivity sum (up to a recorded
/// global sign), positivity of the sum's terms and exact zero-freeness on the
/// open physical interval.
pub fn xi_structure_check(params: &FamilyParams) -> Report {
    let mut report = Report::new(format!("xi structure {params}"));
    let x = xi(params);
    report.push(
        "xi-degree",
        None,
        x.degree() == Some(params.ell),
        format!("{x}"),
    );

    match positivity_sign(params) {
        Some(sign) => report.push(
            "xi-positivity-sum",
            None,
            true,
            format!("sum = {sign:+}·xi"),
        ),
        None => report.push("xi-positivity-sum", None, false, "sum is not ±xi"),
    }
    let terms_positive = positivity_sum_terms_positive(params);
    report.push("xi-positivity-terms", None, terms_positive, "");

    if params.family == Family::L1 {
        report.push(
            "xi-coefficients-positive",
            None,
            x.all_coeffs_positive(),
            "",
        );
    }

    let zero_free = physical_interval(params, &x)
        .and_then(|(lo, hi)| count_roots_in_interval(&x, &lo, &hi, true));
    match zero_free {
        Ok(0) => report.pass("xi-zero-free", None),
        Ok(k) => report.push(
            "xi-zero-free",
            None,
            false,
            format!("{k} roots on the physical interval"),
        ),
        Err(e) => report.push("xi-zero-free", None, false, format!("{e}")),
    }
    report
}

/// Every term of the closed-form sum is a positive multiple of a positive power
/// (`x^{2k}`, `cos^{2k}x` or `sin^{2k}x`).
fn positivity_sum_terms_positive(params: &FamilyParams) -> bool {
    let l = params.ell;
    let lr = from_usize(l);
    let (g, h) = (&params.g, &params.h);
    let half = rat(1, 2);
    (0..=l).all(|k| {
        let kr = from_usize(k);
        let c = match params.family {
            Family::L1 => pochhammer(&(g + &lr + &kr - &half), l - k),
            Family::L2 => pochhammer(&(g + &half), l - k),
            Family::J1 => {
                pochhammer(&(h + &half), l)
                    * pochhammer(&(&lr - &kr + int(1)), k)
                    * pochhammer(&(g - h + &lr - int(1)), k)
                    / pochhammer(&(h + &lr - &kr + &half), k)
            }
            Family::J2 => {
                pochhammer(&(g + &half), l)
                    * pochhammer(&(&lr - &kr + int(1)), k)
                    * pochhammer(&(h - g + &lr - int(1)), k)
                    / pochhammer(&(g + &lr - &kr + &half), k)
            }
        };
        c.is_positive()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn lp(f: Family, ell: usize, g: Rational) -> FamilyParams {
        FamilyParams::laguerre(f, ell, g).unwrap()
    }

    fn jp(f: Family, ell: usize, g: Rational, h: Rational) -> FamilyParams {
        FamilyParams::new(f, ell, g, h).unwrap()
    }

    #[test]
    fn validation() {
        assert!(FamilyParams::laguerre(Family::L1, 1, int(2)).is_ok());
        let e = FamilyParams::new(Family::J1, 1, int(1), int(1)).unwrap_err();
        assert_eq!(alloc::format!("{e}"), "requires g>h");
        assert!(FamilyParams::laguerre(Family::L2, 3, rat(-1, 4)).is_ok());
        assert!(FamilyParams::laguerre(Family::L1, 1, rat(1, 2)).is_err());
        assert!(FamilyParams::laguerre(Family::L2, 1, rat(-1, 2)).is_err());
        assert!(FamilyParams::new(Family::J2, 1, int(3), int(1)).is_err());
        assert!(FamilyParams::laguerre(Family::L1, 0, int(2)).is_err());
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(alloc::format!("{f}").parse::<Family>().unwrap(), f);
        }
        assert!("L3".parse::<Family>().is_err());
    }

    #[test]
    fn xi_examples() {
        assert_eq!(
            xi(&lp(Family::L1, 1, int(2))),
            UniPoly::linear(rat(5, 2), int(1))
        );
        assert_eq!(
            xi(&lp(Family::L2, 1, int(2))),
            UniPoly::linear(rat(-5, 2), int(-1))
        );
        assert_eq!(
            xi(&jp(Family::J1, 1, int(3), int(1))),
            UniPoly::linear(rat(5, 2), int(1))
        );
        // L1, ℓ=2, g=2: L_2^{(5/2)}(−η)
        assert_eq!(
            xi(&lp(Family::L1, 2, int(2))),
            UniPoly::from_coeffs(vec![rat(63, 8), rat(9, 2), rat(1, 2)])
        );
    }

    #[test]
    fn eigenvalue_examples() {
        let p = lp(Family::L1, 2, int(2));
        assert_eq!(eigenvalue(&p, 3, Tier::Os), int(12));
        let j = jp(Family::J1, 2, int(3), int(1));
        assert_eq!(eigenvalue(&j, 1, Tier::Os), int(36));
        let p = lp(Family::L1, 1, int(2));
        assert_eq!(eigenvalue(&p, 0, Tier::Plus), int(14));
        assert_eq!(eigenvalue(&p, 0, Tier::Minus), int(14));
        let j2 = jp(Family::J2, 1, int(1), int(3));
        assert_eq!(eigenvalue_shift(&j2), int(27));
    }

    #[test]
    fn sl_coeff_shapes() {
        let s = sl_coeffs(&jp(Family::J1, 2, int(3), int(1)));
        assert_eq!(s.c2, UniPoly::from_i64s(&[1, 0, -1]));
        assert_eq!(s.d2, UniPoly::from_i64s(&[-1, -1]));
        assert_eq!(s.c2_over_d2(), UniPoly::from_i64s(&[-1, 1]));
        assert_eq!(s.etilde, int(8) * int(3));
        let s = sl_coeffs(&lp(Family::L2, 1, int(2)));
        assert_eq!(s.c2_over_d2(), UniPoly::from_i64s(&[-1]));
        assert_eq!(s.c1, UniPoly::linear(rat(7, 2), int(-1)));
    }

    #[test]
    fn structure_examples() {
        for p in [
            lp(Family::L1, 2, int(2)),
            jp(Family::J1, 1, int(3), int(1)),
            lp(Family::L2, 1, int(2)),
        ] {
            let r = xi_structure_check(&p);
            assert!(r.all_passed(), "{p}: {:?}", r.first_failure());
        }
        assert_eq!(positivity_sign(&lp(Family::L2, 1, int(2))), Some(-1));
        assert_eq!(positivity_sign(&lp(Family::L1, 3, rat(7, 3))), Some(1));
    }

    #[test]
    fn jacobi_positivity_sum_signs() {
        for ell in 1..=4 {
            let mirrored = if ell % 2 == 0 { 1 } else { -1 };
            for (g, h) in [(int(3), int(1)), (rat(5, 2), rat(1, 2))] {
                assert_eq!(
                    positivity_sign(&jp(Family::J1, ell, g.clone(), h.clone())),
                    Some(1)
                );
                assert_eq!(positivity_sign(&jp(Family::J2, ell, h, g)), Some(mirrored));
            }
        }
    }

    #[test]
    fn eigenvalues_increase() {
        for f in Family::ALL {
            let p = FamilyParams::new(
                f,
                2,
                if f == Family::J2 { int(1) } else { int(3) },
                if f == Family::J2 { int(3) } else { int(1) },
            )
            .unwrap();
            for n in 0..10 {
                assert!(eigenvalue(&p, n + 1, Tier::Os) > eigenvalue(&p, n, Tier::Os));
            }
        }
    }
}
