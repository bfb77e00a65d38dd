use alloc::format;

use num_traits::Zero;

use super::{classical_system, ClassicalSystem, DarbouxPair, QuasiRational};
use crate::families::eigenvalue;
use crate::ratpoly::{from_usize, int, rat, Rational, RationalFunction, UniPoly};
use crate::{Error, FamilyParams, Perturbation, Report, Result, Tier};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderDir {
    Raise,
    Lower,
}

/// Apply the ladder operator of `system` to `f`. The trigonometric operators
/// carry the level `n` of the eigenfunction they act on.
pub fn classical_ladder_apply(
    system: &ClassicalSystem,
    f: &QuasiRational,
    n: usize,
    dir: LadderDir,
) -> Result<QuasiRational> {
    let sign = match dir {
        LadderDir::Raise => 1,
        LadderDir::Lower => -1,
    };
    let x = QuasiRational::coordinate_factor(system.coord());
    match system {
        ClassicalSystem::Radial { g } => {
            // a^{(±)} = ((d/dx ∓ x)² − g(g−1)/x²)/4
            let step = |u: &QuasiRational| -> Result<QuasiRational> {
                u.derivative().sub(&x.mul(u)?.scale(&int(sign)))
            };
            let twice = step(&step(f)?)?;
            let inv_x2 = QuasiRational::radial(0, int(-2), RationalFunction::one());
            let centrifugal = inv_x2.mul(f)?.scale(&(g * (g - int(1))));
            Ok(twice.sub(&centrifugal)?.scale(&rat(1, 4)))
        }
        ClassicalSystem::Dpt { g, h } => {
            // ±sin2x f′ + (2n+g+h) cos2x f + (α²−β²)/(2n+α+β+{2,0}) f
            let half = rat(1, 2);
            let (al, be) = (g - &half, h - &half);
            let nr = from_usize(n);
            let den = &nr * int(2) + &al + &be + if sign > 0 { int(2) } else { int(0) };
            if den.is_zero() {
                return Err(Error::OutOfRange(format!(
                    "ladder denominator vanishes at n={n}"
                )));
            }
            let k = (&al * &al - &be * &be) / den;
            let lin = UniPoly::linear(k, &nr * int(2) + g + h);
            let deriv = x.mul(&f.derivative())?.scale(&int(sign));
            deriv.add(&f.mul_body(&RationalFunction::from_poly(lin)))
        }
    }
}

/// Closed-form constant `c` in `a φ_n = c φ_{n±1}`.
pub fn closed_form_ladder_constant(system: &ClassicalSystem, n: usize, dir: LadderDir) -> Rational {
    let nr = from_usize(n);
    let half = rat(1, 2);
    match (system, dir) {
        (ClassicalSystem::Radial { g }, LadderDir::Lower) => -(&nr + g - half),
        (ClassicalSystem::Radial { .. }, LadderDir::Raise) => -(nr + int(1)),
        (ClassicalSystem::Dpt { g, h }, dir) => {
            let (al, be) = (g - &half, h - &half);
            match dir {
                LadderDir::Lower => int(4) * (&nr + &al) * (&nr + &be) / (&nr * int(2) + &al + &be),
                LadderDir::Raise => {
                    int(4) * (&nr + int(1)) * (&nr + &al + &be + int(1))
                        / (&nr * int(2) + &al + &be + int(2))
                }
            }
        }
    }
}

fn target_level(n: usize, dir: LadderDir) -> Option<usize> {
    match dir {
        LadderDir::Raise => Some(n + 1),
        LadderDir::Lower => n.checked_sub(1),
    }
}

/// `a^{(±)} φ_n` and its constant against `φ_{n±1}`. Lowering the ground
/// state gives the zero function with constant 0.
pub fn ladder_action(
    system: &ClassicalSystem,
    n: usize,
    dir: LadderDir,
) -> Result<(QuasiRational, Rational)> {
    let out = classical_ladder_apply(system, &system.phi(n), n, dir)?;
    match target_level(n, dir) {
        None if out.is_zero() => Ok((out, Rational::zero())),
        None => Err(Error::Inconsistent("ground state not annihilated".into())),
        Some(m) => {
            let c = out.proportionality(&system.phi(m)).ok_or_else(|| {
                Error::Inconsistent(format!("a phi_{n} is not a multiple of phi_{m}"))
            })?;
            Ok((out, c))
        }
    }
}

/// `A a^{(±)} A† φ⁽⁻⁾_n` with `φ⁽⁻⁾_n = Aφ⁽⁺⁾_n`, and its constant against
/// `φ⁽⁻⁾_{n±1}`.
pub fn deformed_ladder_action(
    params: &FamilyParams,
    n: usize,
    dir: LadderDir,
) -> Result<(QuasiRational, Rational)> {
    let sys = classical_system(params);
    let pair = DarbouxPair::new(params);
    let phi_minus = |k: usize| pair.a(&sys.phi(k));
    let inner = pair.adag(&phi_minus(n)?)?;
    let out = pair.a(&classical_ladder_apply(&sys, &inner, n, dir)?)?;
    match target_level(n, dir) {
        None if out.is_zero() => Ok((out, Rational::zero())),
        None => Err(Error::Inconsistent(
            "deformed ground state not annihilated".into(),
        )),
        Some(m) => {
            let c = out.proportionality(&phi_minus(m)?).ok_or_else(|| {
                Error::Inconsistent(format!(
                    "deformed ladder image of level {n} not proportional"
                ))
            })?;
            Ok((out, c))
        }
    }
}

pub fn verify_ladders(params: &FamilyParams, nmax: usize) -> Report {
    verify_ladders_with(params, nmax, Perturbation::None)
}

/// Classical constants against the closed forms on the family's plus-side
/// system, and the deformed ladder with constant `E⁽⁺⁾_n · c_n`.
pub fn verify_ladders_with(params: &FamilyParams, nmax: usize, perturb: Perturbation) -> Report {
    let mut report = Report::new(format!("ladder {params}"));
    let bump = if perturb.is_active() {
        rat(1, 1000)
    } else {
        Rational::zero()
    };
    let sys = classical_system(params);
    for n in 0..=nmax {
        for (dir, tag) in [(LadderDir::Lower, "lower"), (LadderDir::Raise, "raise")] {
            let expect = if target_level(n, dir).is_some() {
                closed_form_ladder_constant(&sys, n, dir) + &bump
            } else {
                Rational::zero()
            };
            match ladder_action(&sys, n, dir) {
                Ok((_, c)) => report.push(
                    format!("classical-{tag}"),
                    Some(n),
                    c == expect,
                    format!("constant {c}, expected {expect}"),
                ),
                Err(e) => report.push(format!("classical-{tag}"), Some(n), false, format!("{e}")),
            }
            let expect_def = &expect * eigenvalue(params, n, Tier::Plus);
            match deformed_ladder_action(params, n, dir) {
                Ok((f, c)) => {
                    let nonzero = target_level(n, dir).is_none() || !f.is_zero();
                    report.push(
                        format!("deformed-{tag}"),
                        Some(n),
                        nonzero && c == expect_def,
                        format!("constant {c}, expected {expect_def}"),
                    )
                }
                Err(e) => report.push(format!("deformed-{tag}"), Some(n), false, format!("{e}")),
            }
        }
    }
    report
}
