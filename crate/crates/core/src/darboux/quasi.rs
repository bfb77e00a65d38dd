use alloc::vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::ratpoly::{int, rat, to_f64, Rational, RationalFunction, UniPoly};
use crate::{Error, Result};

/// Meaning of `η` and of the prefactor exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coordinate {
    /// `η = x²`, prefactor `e^{s x²/2} x^c`.
    Radial,
    /// `η = cos 2x`, prefactor `sin^c x · cos^d x`.
    Trig,
}

/// `prefactor(x) · body(η(x))`, closed under `d/dx` and products.
#[derive(Clone, PartialEq, Eq)]
pub struct QuasiRational {
    pub coord: Coordinate,
    /// Gaussian exponent `s` in `e^{s x²/2}` (radial only).
    pub gauss: i32,
    pub c: Rational,
    /// Power of `cos x` (trig only).
    pub d: Rational,
    pub body: RationalFunction,
}

fn is_even_integer(r: &Rational) -> bool {
    r.is_integer() && (r.to_integer() % 2u32).is_zero()
}

fn half_int(r: &Rational) -> i64 {
    use num_traits::ToPrimitive;
    (r / int(2)).to_integer().to_i64().expect("small exponent")
}

impl QuasiRational {
    pub fn radial(gauss: i32, c: Rational, body: RationalFunction) -> Self {
        QuasiRational {
            coord: Coordinate::Radial,
            gauss,
            c,
            d: Rational::zero(),
            body,
        }
    }

    pub fn trig(c: Rational, d: Rational, body: RationalFunction) -> Self {
        QuasiRational {
            coord: Coordinate::Trig,
            gauss: 0,
            c,
            d,
            body,
        }
    }

    pub fn zero(coord: Coordinate) -> Self {
        QuasiRational {
            coord,
            gauss: 0,
            c: Rational::zero(),
            d: Rational::zero(),
            body: RationalFunction::zero(),
        }
    }

    /// The function `x` (radial) or `sin 2x` (trig).
    pub fn coordinate_factor(coord: Coordinate) -> Self {
        match coord {
            Coordinate::Radial => Self::radial(0, int(1), RationalFunction::one()),
            Coordinate::Trig => Self::trig(int(1), int(1), RationalFunction::constant(int(2))),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        QuasiRational {
            body: self.body.scale(k),
            ..self.clone()
        }
    }

    pub fn mul_body(&self, r: &RationalFunction) -> Self {
        QuasiRational {
            body: &self.body * r,
            ..self.clone()
        }
    }

    /// `d/dx`, through the chain rule `dη/dx = 2x` or `−2 sin 2x`.
    pub fn derivative(&self) -> Self {
        let r = &self.body;
        let dr = r.derivative();
        match self.coord {
            Coordinate::Radial => {
                let lin = RationalFunction::from_poly(UniPoly::linear(
                    self.c.clone(),
                    int(self.gauss as i64),
                ));
                let two_eta =
                    RationalFunction::from_poly(UniPoly::from_coeffs(vec![int(0), int(2)]));
                QuasiRational {
                    c: &self.c - int(1),
                    body: &lin * r + &two_eta * &dr,
                    ..self.clone()
                }
            }
            Coordinate::Trig => {
                let half = rat(1, 2);
                let lin = UniPoly::linear((&self.c - &self.d) * &half, (&self.c + &self.d) * &half);
                let one_minus_eta2 = RationalFunction::from_poly(UniPoly::from_i64s(&[1, 0, -1]));
                QuasiRational {
                    c: &self.c - int(1),
                    d: &self.d - int(1),
                    body: &RationalFunction::from_poly(lin) * r - &one_minus_eta2 * &dr,
                    ..self.clone()
                }
            }
        }
    }

    fn check_coord(&self, other: &Self) -> Result<()> {
        if self.coord == other.coord {
            Ok(())
        } else {
            Err(Error::IncompatibleExponents)
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_coord(other)?;
        Ok(QuasiRational {
            coord: self.coord,
            gauss: self.gauss + other.gauss,
            c: &self.c + &other.c,
            d: &self.d + &other.d,
            body: &self.body * &other.body,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_coord(other)?;
        Ok(QuasiRational {
            coord: self.coord,
            gauss: self.gauss - other.gauss,
            c: &self.c - &other.c,
            d: &self.d - &other.d,
            body: self.body.checked_div(&other.body)?,
        })
    }

    /// `(sin² x)^k`, `(cos² x)^k` or `(x²)^k` as a function of η, `k` any integer.
    fn square_power(coord: Coordinate, which_cos: bool, k: i64) -> RationalFunction {
        let base = match (coord, which_cos) {
            (Coordinate::Radial, _) => UniPoly::eta(),
            (Coordinate::Trig, false) => UniPoly::linear(rat(1, 2), rat(-1, 2)),
            (Coordinate::Trig, true) => UniPoly::linear(rat(1, 2), rat(1, 2)),
        };
        let p = RationalFunction::from_poly(base.pow(k.unsigned_abs() as u32));
        if k >= 0 {
            p
        } else {
            p.recip().expect("nonzero power")
        }
    }

    /// Rewrite with exponents lowered by `(2i, 2j)`.
    fn lowered(&self, c: &Rational, d: &Rational) -> Self {
        let ki = half_int(&(&self.c - c));
        let kj = half_int(&(&self.d - d));
        let mut body = self.body.clone();
        if ki != 0 {
            body = &body * &Self::square_power(self.coord, false, ki);
        }
        if kj != 0 {
            body = &body * &Self::square_power(self.coord, true, kj);
        }
        QuasiRational {
            c: c.clone(),
            d: d.clone(),
            body,
            ..self.clone()
        }
    }

    /// Same function, both operands on common exponents; requires equal
    /// Gaussian factors and exponents differing by even integers.
    pub fn align(&self, other: &Self) -> Result<(Self, Self)> {
        self.check_coord(other)?;
        if self.is_zero() {
            return Ok((
                QuasiRational {
                    body: RationalFunction::zero(),
                    ..other.clone()
                },
                other.clone(),
            ));
        }
        if other.is_zero() {
            return Ok((
                self.clone(),
                QuasiRational {
                    body: RationalFunction::zero(),
                    ..self.clone()
                },
            ));
        }
        if self.gauss != other.gauss
            || !is_even_integer(&(&self.c - &other.c))
            || !is_even_integer(&(&self.d - &other.d))
        {
            return Err(Error::IncompatibleExponents);
        }
        let c = core::cmp::min(&self.c, &other.c).clone();
        let d = core::cmp::min(&self.d, &other.d).clone();
        Ok((self.lowered(&c, &d), other.lowered(&c, &d)))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.align(other)?;
        Ok(QuasiRational {
            body: &a.body + &b.body,
            ..a
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&int(-1)))
    }

    /// `Some(k)` with `self = k·other` exactly, `k ≠ 0`.
    pub fn proportionality(&self, other: &Self) -> Option<Rational> {
        let (a, b) = self.align(other).ok()?;
        a.body.ratio_constant(&b.body)
    }

    /// Exact equality as functions.
    pub fn same_function(&self, other: &Self) -> bool {
        match self.sub(other) {
            Ok(d) => d.is_zero(),
            Err(_) => false,
        }
    }

    /// The function as a rational function of η; needs no Gaussian and even
    /// integer exponents.
    pub fn to_rational_function(&self) -> Result<RationalFunction> {
        if self.is_zero() {
            return Ok(RationalFunction::zero());
        }
        if self.gauss != 0 || !is_even_integer(&self.c) || !is_even_integer(&self.d) {
            return Err(Error::IncompatibleExponents);
        }
        Ok(self.lowered(&Rational::zero(), &Rational::zero()).body)
    }

    /// Exponent of the leading power of `x` at the left end (`x → 0`):
    /// the prefactor exponent plus twice the order of the body at that point.
    pub fn exponent_at_origin(&self) -> Rational {
        let at = match self.coord {
            Coordinate::Radial => Rational::zero(),
            Coordinate::Trig => int(1),
        };
        &self.c + int(2 * body_order(&self.body, &at))
    }

    /// Exponent of `cos x` at `x → π/2` (trig only).
    pub fn exponent_at_half_pi(&self) -> Rational {
        &self.d + int(2 * body_order(&self.body, &int(-1)))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let q = |r: &Rational| to_f64(r);
        match self.coord {
            Coordinate::Radial => {
                libm::exp(self.gauss as f64 * x * x / 2.0)
                    * libm::pow(x, q(&self.c))
                    * self.body.eval_f64(x * x)
            }
            Coordinate::Trig => {
                libm::pow(libm::sin(x), q(&self.c))
                    * libm::pow(libm::cos(x), q(&self.d))
                    * self.body.eval_f64(libm::cos(2.0 * x))
            }
        }
    }
}

/// Order of vanishing (positive) or pole (negative) of `r` at `at`.
fn body_order(r: &RationalFunction, at: &Rational) -> i64 {
    let lin = UniPoly::linear(-at.clone(), Rational::one());
    let mult = |p: &UniPoly| {
        let mut p = p.clone();
        let mut k = 0;
        while !p.is_zero() {
            let (q, rem) = p.divrem(&lin).expect("nonzero divisor");
            if !rem.is_zero() {
                break;
            }
            p = q;
            k += 1;
        }
        k
    };
    mult(r.num()) - mult(r.den())
}

impl fmt::Debug for QuasiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QuasiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.coord {
            Coordinate::Radial => {
                write!(f, "exp({}x²/2)·x^({})·[{}]", self.gauss, self.c, self.body)
            }
            Coordinate::Trig => write!(f, "sin^({})·cos^({})·[{}]", self.c, self.d, self.body),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one() -> RationalFunction {
        RationalFunction::one()
    }

    #[test]
    fn gaussian_derivative() {
        let f = QuasiRational::radial(-1, int(0), one());
        let df = f.derivative();
        let expect = QuasiRational::radial(-1, int(1), RationalFunction::constant(int(-1)));
        assert!(df.same_function(&expect), "{df}");
        assert_eq!(df.c, int(-1));
    }

    #[test]
    fn power_derivative() {
        let f = QuasiRational::radial(0, int(2), one());
        let expect = QuasiRational::radial(0, int(1), RationalFunction::constant(int(2)));
        assert!(f.derivative().same_function(&expect));
    }

    #[test]
    fn half_sine_double_angle_derivative() {
        // d/dx (sin x cos x) = cos 2x
        let f = QuasiRational::trig(int(1), int(1), one());
        let df = f.derivative();
        assert_eq!(df.c, int(0));
        assert_eq!(df.body, RationalFunction::from_poly(UniPoly::eta()));
    }

    #[test]
    fn to_rational_function_rewrites_trig_powers() {
        // sin^{-2} cos^{-2} = 4/(1−η²)
        let f = QuasiRational::trig(int(-2), int(-2), one());
        let expect =
            RationalFunction::new(UniPoly::from_i64s(&[4]), UniPoly::from_i64s(&[1, 0, -1]))
                .unwrap();
        assert_eq!(f.to_rational_function().unwrap(), expect);
        assert!(QuasiRational::trig(rat(1, 2), int(0), one())
            .to_rational_function()
            .is_err());
    }

    #[test]
    fn alignment_and_proportionality() {
        let a = QuasiRational::radial(0, int(3), one());
        let b = QuasiRational::radial(
            0,
            int(1),
            RationalFunction::from_poly(UniPoly::eta().scale(&int(5))),
        );
        assert_eq!(b.proportionality(&a), Some(int(5)));
        assert!(QuasiRational::radial(0, rat(1, 2), one()).add(&a).is_err());
    }

    #[test]
    fn numeric_derivative_agrees() {
        let body = RationalFunction::new(UniPoly::from_i64s(&[1, 3]), UniPoly::from_i64s(&[5, 2]))
            .unwrap();
        for f in [
            QuasiRational::radial(-1, rat(5, 2), body.clone()),
            QuasiRational::trig(rat(7, 3), rat(3, 2), body),
        ] {
            let x = 0.7;
            let h = 1e-5;
            let fd = (f.eval_f64(x + h) - f.eval_f64(x - h)) / (2.0 * h);
            let ex = f.derivative().eval_f64(x);
            assert!((fd - ex).abs() < 1e-7 * ex.abs().max(1.0), "{fd} vs {ex}");
        }
    }

    #[test]
    fn endpoint_exponents() {
        // x^{-1}·(η+2)/η → leading power x^{-3}
        let f = QuasiRational::radial(
            0,
            int(-1),
            RationalFunction::new(UniPoly::from_i64s(&[2, 1]), UniPoly::eta()).unwrap(),
        );
        assert_eq!(f.exponent_at_origin(), int(-3));
        // sin·cos·(1+η) → cos^3 at π/2
        let g = QuasiRational::trig(
            int(1),
            int(1),
            RationalFunction::from_poly(UniPoly::from_i64s(&[1, 1])),
        );
        assert_eq!(g.exponent_at_half_pi(), int(3));
        assert_eq!(g.exponent_at_origin(), int(1));
    }
}
