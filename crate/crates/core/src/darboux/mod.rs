//! Darboux–Crum transformations on quasi-rational wavefunctions: the
//! factorized pair `H⁽⁺⁾ = A†A`, `H⁽⁻⁾ = AA†` with `A = d/dx − W′`, their
//! potentials, shape invariance and ladder operators.

mod ladder;
mod quasi;

pub use ladder::{
    classical_ladder_apply, closed_form_ladder_constant, deformed_ladder_action, ladder_action,
    verify_ladders, verify_ladders_with, LadderDir,
};
pub use quasi::{Coordinate, QuasiRational};

use alloc::format;
use alloc::string::String;

use num_traits::Zero;

use crate::classical::{jacobi_hypergeometric, laguerre, ClassicalKind};
use crate::exceptional::exceptional_poly;
use crate::families::{eigenvalue, eigenvalue_shift, xi};
use crate::ratpoly::{from_usize, int, rat, Rational, RationalFunction, UniPoly};
use crate::{Family, FamilyParams, Perturbation, Report, Result, Tier};

/// Undeformed shape-invariant system: radial oscillator or trigonometric
/// Darboux–Pöschl–Teller.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassicalSystem {
    Radial { g: Rational },
    Dpt { g: Rational, h: Rational },
}

impl ClassicalSystem {
    pub fn coord(&self) -> Coordinate {
        match self {
            ClassicalSystem::Radial { .. } => Coordinate::Radial,
            ClassicalSystem::Dpt { .. } => Coordinate::Trig,
        }
    }

    /// `e^{w₀}`: `e^{−x²/2}x^g` or `sin^g x cos^h x`.
    pub fn ground(&self) -> QuasiRational {
        match self {
            ClassicalSystem::Radial { g } => {
                QuasiRational::radial(-1, g.clone(), RationalFunction::one())
            }
            ClassicalSystem::Dpt { g, h } => {
                QuasiRational::trig(g.clone(), h.clone(), RationalFunction::one())
            }
        }
    }

    pub fn poly(&self, n: usize) -> UniPoly {
        let half = rat(1, 2);
        match self {
            ClassicalSystem::Radial { g } => laguerre(n, &(g - &half)),
            ClassicalSystem::Dpt { g, h } => jacobi_hypergeometric(n, &(g - &half), &(h - &half)),
        }
    }

    /// Classical family of the polynomial parts.
    pub fn kind(&self) -> ClassicalKind {
        let half = rat(1, 2);
        match self {
            ClassicalSystem::Radial { g } => ClassicalKind::laguerre(g - &half),
            ClassicalSystem::Dpt { g, h } => ClassicalKind::jacobi(g - &half, h - &half),
        }
    }

    /// `φ_n = e^{w₀} P_n(η)`.
    pub fn phi(&self, n: usize) -> QuasiRational {
        self.ground()
            .mul_body(&RationalFunction::from_poly(self.poly(n)))
    }

    pub fn eigenvalue(&self, n: usize) -> Rational {
        let nr = from_usize(n);
        match self {
            ClassicalSystem::Radial { .. } => int(4) * nr,
            ClassicalSystem::Dpt { g, h } => int(4) * &nr * (&nr + g + h),
        }
    }

    pub fn shifted(&self) -> Self {
        match self {
            ClassicalSystem::Radial { g } => ClassicalSystem::Radial { g: g + int(1) },
            ClassicalSystem::Dpt { g, h } => ClassicalSystem::Dpt {
                g: g + int(1),
                h: h + int(1),
            },
        }
    }

    /// `x² + g(g−1)/x² − (2g+1)` or `g(g−1)/sin²x + h(h−1)/cos²x − (g+h)²`, in η.
    pub fn closed_form_potential(&self) -> RationalFunction {
        match self {
            ClassicalSystem::Radial { g } => {
                eta_rf() + inv(&UniPoly::eta()).scale(&(g * (g - int(1))))
                    - constant(int(2) * g + int(1))
            }
            ClassicalSystem::Dpt { g, h } => {
                dpt_terms(&(g * (g - int(1))), &(h * (h - int(1)))) - constant((g + h) * (g + h))
            }
        }
    }
}

impl core::fmt::Display for ClassicalSystem {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ClassicalSystem::Radial { g } => write!(f, "radial oscillator g={g}"),
            ClassicalSystem::Dpt { g, h } => write!(f, "DPT g={g} h={h}"),
        }
    }
}

fn eta_rf() -> RationalFunction {
    RationalFunction::from_poly(UniPoly::eta())
}

fn constant(c: Rational) -> RationalFunction {
    RationalFunction::constant(c)
}

fn inv(p: &UniPoly) -> RationalFunction {
    RationalFunction::new(UniPoly::one(), p.clone()).expect("nonzero")
}

/// `s/sin²x + t/cos²x = 2s/(1−η) + 2t/(1+η)`.
fn dpt_terms(s: &Rational, t: &Rational) -> RationalFunction {
    inv(&UniPoly::from_i64s(&[1, -1])).scale(&(int(2) * s))
        + inv(&UniPoly::from_i64s(&[1, 1])).scale(&(int(2) * t))
}

/// Classical system whose Hamiltonian is `H⁽⁺⁾_ℓ` up to a constant.
pub fn classical_system(params: &FamilyParams) -> ClassicalSystem {
    let lr = from_usize(params.ell);
    let (g, h) = (&params.g, &params.h);
    match params.family {
        Family::L1 => ClassicalSystem::Radial {
            g: g + &lr - int(1),
        },
        Family::L2 => ClassicalSystem::Radial {
            g: g + &lr + int(1),
        },
        Family::J1 => ClassicalSystem::Dpt {
            g: g + &lr - int(1),
            h: h + &lr + int(1),
        },
        Family::J2 => ClassicalSystem::Dpt {
            g: g + &lr + int(1),
            h: h + &lr - int(1),
        },
    }
}

/// Undeformed system at the family's own parameters `λ`.
pub fn base_system(params: &FamilyParams) -> ClassicalSystem {
    if params.family.is_laguerre() {
        ClassicalSystem::Radial {
            g: params.g.clone(),
        }
    } else {
        ClassicalSystem::Dpt {
            g: params.g.clone(),
            h: params.h.clone(),
        }
    }
}

fn coord_of(family: Family) -> Coordinate {
    if family.is_laguerre() {
        Coordinate::Radial
    } else {
        Coordinate::Trig
    }
}

/// `e^{W_ℓ}` for the prepotential of the factorized pair.
pub fn exp_w(params: &FamilyParams) -> QuasiRational {
    let lr = from_usize(params.ell);
    let (g, h) = (&params.g, &params.h);
    let body = RationalFunction::from_poly(xi(params));
    match params.family {
        Family::L1 => QuasiRational::radial(1, g + &lr - int(1), body),
        Family::L2 => QuasiRational::radial(-1, -(g + &lr), body),
        Family::J1 => QuasiRational::trig(g + &lr - int(1), -(h + &lr), body),
        Family::J2 => QuasiRational::trig(-(g + &lr), h + &lr - int(1), body),
    }
}

/// `e^{−W_ℓ}`.
pub fn exp_minus_w(params: &FamilyParams) -> QuasiRational {
    let e = exp_w(params);
    QuasiRational {
        gauss: -e.gauss,
        c: -e.c.clone(),
        d: -e.d.clone(),
        body: e.body.recip().expect("xi is nonzero"),
        ..e
    }
}

/// `e^{w_ℓ}`, ground state of the deformed Hamiltonian `H_ℓ`.
pub fn exp_w_os(params: &FamilyParams) -> QuasiRational {
    let lr = from_usize(params.ell);
    let body = RationalFunction::new(xi(&params.shifted()), xi(params)).expect("xi is nonzero");
    if params.family.is_laguerre() {
        QuasiRational::radial(-1, &params.g + &lr, body)
    } else {
        QuasiRational::trig(&params.g + &lr, &params.h + &lr, body)
    }
}

/// `f′/f`; for `f = e^W` this is `W′`.
pub fn log_derivative(f: &QuasiRational) -> QuasiRational {
    f.derivative().div(f).expect("same coordinate, nonzero")
}

/// `(W′)² + sign·W″` as a rational function of η.
pub fn potential_from_exp(exp_w: &QuasiRational, sign: i32) -> Result<RationalFunction> {
    let wp = log_derivative(exp_w);
    let sq = wp.mul(&wp)?;
    let v = sq.add(&wp.derivative().scale(&int(sign as i64)))?;
    v.to_rational_function()
}

/// `V` in `H = p² + V`, as a function of η.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Potential {
    pub coord: Coordinate,
    pub v: RationalFunction,
}

impl Potential {
    /// `V(x)` at a point of the physical domain.
    pub fn eval_x(&self, x: f64) -> f64 {
        match self.coord {
            Coordinate::Radial => self.v.eval_f64(x * x),
            Coordinate::Trig => self.v.eval_f64(libm::cos(2.0 * x)),
        }
    }

    /// `−f″ + V f`.
    pub fn apply(&self, f: &QuasiRational) -> Result<QuasiRational> {
        f.mul_body(&self.v).sub(&f.derivative().derivative())
    }
}

/// `H⁽⁺⁾ = p² + W′² + W″`, `H⁽⁻⁾ = p² + W′² − W″`, or the deformed Hamiltonian `H_ℓ`.
pub fn potential(params: &FamilyParams, side: Tier) -> Potential {
    let v = match side {
        Tier::Plus => potential_from_exp(&exp_w(params), 1),
        Tier::Minus => potential_from_exp(&exp_w(params), -1),
        Tier::Os => potential_from_exp(&exp_w_os(params), 1),
    }
    .expect("prepotential exponents are integers");
    Potential {
        coord: coord_of(params.family),
        v,
    }
}

/// The plus-side potential in closed form for each family.
pub fn closed_form_plus_potential(params: &FamilyParams) -> RationalFunction {
    let lr = from_usize(params.ell);
    let (g, h) = (&params.g, &params.h);
    let one = int(1);
    let two = int(2);
    match params.family {
        Family::L1 => {
            eta_rf()
                + inv(&UniPoly::eta()).scale(&((g + &lr - &one) * (g + &lr - &two)))
                + constant(&two * g + int(6) * &lr - &one)
        }
        Family::L2 => {
            eta_rf()
                + inv(&UniPoly::eta()).scale(&((g + &lr) * (g + &lr + &one)))
                + constant(&two * (g - &lr) - &one)
        }
        Family::J1 => {
            let k = &two * &lr + g - h - &one;
            dpt_terms(
                &((g + &lr - &one) * (g + &lr - &two)),
                &((h + &lr) * (h + &lr + &one)),
            ) - constant(&k * &k)
        }
        Family::J2 => {
            let k = &two * &lr + h - g - &one;
            dpt_terms(
                &((g + &lr) * (g + &lr + &one)),
                &((h + &lr - &one) * (h + &lr - &two)),
            ) - constant(&k * &k)
        }
    }
}

/// The partner potential in closed form for each family, with
/// `q = ∂_η ξ / ξ`. For L1 the second factor includes the `2x` term that the
/// factorization produces and that is easy to drop.
pub fn closed_form_partner_potential(params: &FamilyParams) -> RationalFunction {
    partner_potential_form(params, true)
}

/// L1 partner without the `2x` term (does not match the factorization).
pub fn uncorrected_partner_potential_l1(params: &FamilyParams) -> RationalFunction {
    partner_potential_form(params, false)
}

fn partner_potential_form(params: &FamilyParams, l1_corrected: bool) -> RationalFunction {
    let lr = from_usize(params.ell);
    let (g, h) = (&params.g, &params.h);
    let one = int(1);
    let two = int(2);
    let eight = int(8);
    let x = xi(params);
    let q = RationalFunction::new(x.derivative(), x).expect("xi nonzero");
    let q2 = &q * &q;
    let eta = eta_rf();
    let one_m_eta2 = RationalFunction::from_poly(UniPoly::from_i64s(&[1, 0, -1]));
    let gl = g + &lr;
    let hl = h + &lr;
    match params.family {
        Family::L1 => {
            let p = &gl - &one;
            let mut v = &eta
                + &inv(&UniPoly::eta()).scale(&(&gl * &p))
                + constant(&two * (g - &lr) - int(3))
                + q.scale(&(&eight * &p))
                + (&eta * &q2).scale(&eight);
            if l1_corrected {
                v = v + (&eta * &q).scale(&eight);
            }
            v
        }
        Family::L2 => {
            &eta + &inv(&UniPoly::eta()).scale(&(&gl * (&gl - &one)))
                + constant(&two * (g + int(3) * &lr) + &one)
                - (&eta * &q).scale(&eight)
                - q.scale(&(&eight * &gl))
                + (&eta * &q2).scale(&eight)
        }
        Family::J1 => {
            let k = &two * &lr + g - h - &one;
            let lin = UniPoly::linear(&gl - &one + &hl, &gl - &one - &hl);
            dpt_terms(&(&gl * (&gl - &one)), &(&hl * (&hl - &one)))
                - (&q * &RationalFunction::from_poly(lin)).scale(&eight)
                + (&one_m_eta2 * &q2).scale(&eight)
                - constant(&k * &k)
                + constant(&eight * &lr * (&lr + g - h - &one))
        }
        Family::J2 => {
            let k = &two * &lr + h - g - &one;
            let lin = UniPoly::linear(&gl + &hl - &one, &gl - (&hl - &one));
            dpt_terms(&(&gl * (&gl - &one)), &(&hl * (&hl - &one)))
                + (&q * &RationalFunction::from_poly(lin)).scale(&eight)
                + (&one_m_eta2 * &q2).scale(&eight)
                - constant(&k * &k)
                + constant(&eight * &lr * (&lr + h - g - &one))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    A,
    Adag,
}

/// `A = d/dx − W′` and `A† = −d/dx − W′` for one parameter point.
#[derive(Debug, Clone)]
pub struct DarbouxPair {
    pub params: FamilyParams,
    w_prime: QuasiRational,
}

impl DarbouxPair {
    pub fn new(params: &FamilyParams) -> Self {
        DarbouxPair {
            params: params.clone(),
            w_prime: log_derivative(&exp_w(params)),
        }
    }

    pub fn w_prime(&self) -> &QuasiRational {
        &self.w_prime
    }

    pub fn apply(&self, f: &QuasiRational, dir: Direction) -> Result<QuasiRational> {
        let df = f.derivative();
        let wf = self.w_prime.mul(f)?;
        match dir {
            Direction::A => df.sub(&wf),
            Direction::Adag => df.scale(&int(-1)).sub(&wf),
        }
    }

    pub fn a(&self, f: &QuasiRational) -> Result<QuasiRational> {
        self.apply(f, Direction::A)
    }

    pub fn adag(&self, f: &QuasiRational) -> Result<QuasiRational> {
        self.apply(f, Direction::Adag)
    }
}

pub fn apply_darboux(
    params: &FamilyParams,
    f: &QuasiRational,
    dir: Direction,
) -> Result<QuasiRational> {
    DarbouxPair::new(params).apply(f, dir)
}

/// `φ⁽⁺⁾_{ℓ,n}`, the eigenfunctions of `H⁽⁺⁾_ℓ`.
pub fn phi_plus(params: &FamilyParams, n: usize) -> QuasiRational {
    classical_system(params).phi(n)
}

/// `ψ_ℓ = e^{−x²/2}x^{g+ℓ}/ξ_ℓ` or `sin^{g+ℓ}x cos^{h+ℓ}x/ξ_ℓ`.
pub fn psi(params: &FamilyParams) -> QuasiRational {
    let lr = from_usize(params.ell);
    let body = inv(&xi(params));
    if params.family.is_laguerre() {
        QuasiRational::radial(-1, &params.g + &lr, body)
    } else {
        QuasiRational::trig(&params.g + &lr, &params.h + &lr, body)
    }
}

fn eps(p: Perturbation) -> Rational {
    if p.is_active() {
        rat(1, 1000)
    } else {
        Rational::zero()
    }
}

fn check_eq(
    report: &mut Report,
    identity: &str,
    n: Option<usize>,
    lhs: &RationalFunction,
    rhs: &RationalFunction,
) {
    let diff = lhs - rhs;
    let detail = if diff.is_zero() {
        String::new()
    } else {
        format!("difference {diff}")
    };
    report.push(identity, n, diff.is_zero(), detail);
}

/// Non-square-integrability of `e^{±W}` at the endpoint each family names.
fn non_normalizable(f: &QuasiRational, at_origin: bool) -> (bool, String) {
    let half = rat(-1, 2);
    match (f.coord, at_origin) {
        (Coordinate::Radial, false) => (f.gauss > 0, format!("gaussian exponent {}", f.gauss)),
        (Coordinate::Radial, true) | (Coordinate::Trig, true) => {
            let e = f.exponent_at_origin();
            (e <= half, format!("x^{e} at 0"))
        }
        (Coordinate::Trig, false) => {
            let e = f.exponent_at_half_pi();
            (e <= half, format!("cos^{e} at pi/2"))
        }
    }
}

pub fn verify_hamiltonian_identities(params: &FamilyParams) -> Report {
    verify_hamiltonian_identities_with(params, Perturbation::None)
}

/// Potentials of the factorized pair against their closed forms,
/// the shifted classical potential and the constant separating them from `H_ℓ`; annihilation
/// of `e^{±W}`; non-normalizability of `e^{±W}` at the stated endpoints.
pub fn verify_hamiltonian_identities_with(params: &FamilyParams, perturb: Perturbation) -> Report {
    let mut report = Report::new(format!("hamiltonian {params}"));
    let plus = potential(params, Tier::Plus).v;
    let minus = potential(params, Tier::Minus).v;
    let os = potential(params, Tier::Os).v;
    let closed = closed_form_plus_potential(params) + constant(eps(perturb));
    check_eq(
        &mut report,
        "plus-potential-closed-form",
        None,
        &plus,
        &closed,
    );
    let shifted =
        classical_system(params).closed_form_potential() + constant(eigenvalue_shift(params));
    check_eq(
        &mut report,
        "plus-potential-classical",
        None,
        &plus,
        &shifted,
    );
    check_eq(
        &mut report,
        "minus-potential-closed-form",
        None,
        &minus,
        &closed_form_partner_potential(params),
    );
    let diff = &minus - &os;
    let shift = eigenvalue_shift(params);
    report.push(
        "minus-minus-os-constant",
        None,
        diff.as_constant().as_ref() == Some(&shift),
        format!("difference {diff}, expected {shift}"),
    );

    let pair = DarbouxPair::new(params);
    let ew = exp_w(params);
    let emw = exp_minus_w(params);
    let a_ew = pair.a(&ew).map(|f| f.is_zero()).unwrap_or(false);
    report.push("annihilate-exp-w", None, a_ew, "");
    let ad_emw = pair.adag(&emw).map(|f| f.is_zero()).unwrap_or(false);
    report.push("annihilate-exp-minus-w", None, ad_emw, "");

    // e^{W} diverges at ∞ (L1), 0 (L2), π/2 (J1), 0 (J2); e^{−W} at the other end.
    let w_at_origin = matches!(params.family, Family::L2 | Family::J2);
    let (ok, d) = non_normalizable(&ew, w_at_origin);
    report.push("exp-w-not-normalizable", None, ok, d);
    let (ok, d) = non_normalizable(&emw, !w_at_origin);
    report.push("exp-minus-w-not-normalizable", None, ok, d);
    report
}

pub fn verify_darboux(params: &FamilyParams, nmax: usize) -> Report {
    verify_darboux_with(params, nmax, Perturbation::None)
}

/// For each `n ≤ nmax`: `H⁽⁺⁾φ⁺ = Eφ⁺` through the potential, `A†Aφ⁺ = Eφ⁺`,
/// `AA†(Aφ⁺) = E·Aφ⁺`, `H⁽⁻⁾(Aφ⁺) = E·Aφ⁺` through the partner potential, and
/// `Aφ⁺ ∝ ψ_ℓ P_{ℓ,n}` with the constant recorded.
pub fn verify_darboux_with(params: &FamilyParams, nmax: usize, perturb: Perturbation) -> Report {
    let mut report = Report::new(format!("darboux {params}"));
    let pair = DarbouxPair::new(params);
    let vp = potential(params, Tier::Plus);
    let vm = potential(params, Tier::Minus);
    let psi = psi(params);
    for n in 0..=nmax {
        let e = eigenvalue(params, n, Tier::Plus) + eps(perturb);
        let phi = phi_plus(params, n);
        let eig = |f: &QuasiRational, hf: Result<QuasiRational>| -> bool {
            hf.map(|hf| hf.same_function(&f.scale(&e))).unwrap_or(false)
        };
        report.push("plus-eigen", Some(n), eig(&phi, vp.apply(&phi)), "");
        let aphi = match pair.a(&phi) {
            Ok(f) => f,
            Err(err) => {
                report.push("apply-a", Some(n), false, format!("{err}"));
                continue;
            }
        };
        report.push("a-phi-nonzero", Some(n), !aphi.is_zero(), "");
        report.push("round-trip", Some(n), eig(&phi, pair.adag(&aphi)), "");
        let intertwine = pair.adag(&aphi).and_then(|f| pair.a(&f));
        report.push("intertwining", Some(n), eig(&aphi, intertwine), "");
        report.push("minus-eigen", Some(n), eig(&aphi, vm.apply(&aphi)), "");
        let target = psi.mul_body(&RationalFunction::from_poly(exceptional_poly(params, n)));
        match aphi.proportionality(&target) {
            Some(c) => report.push(
                "match-exceptional",
                Some(n),
                true,
                format!("A phi+ = ({c})·psi·P"),
            ),
            None => report.push("match-exceptional", Some(n), false, "not proportional"),
        }
    }
    report
}

/// `(w′)² − w″` at `λ` minus `(w′)² + w″` at `λ+δ`, if constant.
fn shape_constant(lower: &QuasiRational, upper: &QuasiRational) -> Option<Rational> {
    let a = potential_from_exp(lower, -1).ok()?;
    let b = potential_from_exp(upper, 1).ok()?;
    (a - b).as_constant()
}

/// Shape-invariance constant of the undeformed system (4 or `4(g+h+1)`).
pub fn classical_shape_constant(system: &ClassicalSystem) -> Option<Rational> {
    shape_constant(&system.ground(), &system.shifted().ground())
}

pub fn shape_invariance_check(params: &FamilyParams) -> Report {
    shape_invariance_check_with(params, Perturbation::None)
}

/// Classical layer at `λ` and deformed layer, each against `E₁`.
pub fn shape_invariance_check_with(params: &FamilyParams, perturb: Perturbation) -> Report {
    let mut report = Report::new(format!("shape invariance {params}"));
    let e = eps(perturb);
    for (label, sys) in [
        ("classical-base", base_system(params)),
        ("classical-plus", classical_system(params)),
    ] {
        let expect = sys.eigenvalue(1) + &e;
        let got = classical_shape_constant(&sys);
        report.push(
            label,
            None,
            got.as_ref() == Some(&expect),
            format!("{sys}: constant {got:?}, expected {expect}"),
        );
    }
    let got = shape_constant(&exp_w_os(params), &exp_w_os(&params.shifted()));
    let expect = eigenvalue(params, 1, Tier::Os) + e;
    report.push(
        "deformed",
        None,
        got.as_ref() == Some(&expect),
        format!("constant {got:?}, expected {expect}"),
    );
    report
}

#[cfg(test)]
mod tests;
