//! Verification suites over parameter grids, shared by the command line and
//! the acceptance tests.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::bispectral::{shifted_basis, verify_bispectral_with};
use crate::classical::verify_classical_identities_with;
use crate::darboux::{
    classical_system, shape_invariance_check_with, verify_darboux_with,
    verify_hamiltonian_identities_with, verify_ladders_with,
};
use crate::exceptional::{
    invariant_subspace_check, verify_alternative_forms, verify_degree_structure,
    verify_match_darboux, verify_sl_eigen_with,
};
use crate::families::xi_structure_check;
use crate::ratpoly::{int, rat};
use crate::{Error, Family, FamilyParams, Perturbation, Rational, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Classical,
    Hamiltonian,
    Sl,
    Bispectral,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::Classical,
        Suite::Hamiltonian,
        Suite::Sl,
        Suite::Bispectral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Classical => "classical",
            Suite::Hamiltonian => "hamiltonian",
            Suite::Sl => "sl",
            Suite::Bispectral => "bispectral",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidParams(alloc::format!("unknown suite '{s}'")))
    }
}

/// Sizes used by the suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteLimits {
    /// Highest `n` in the polynomial and Hamiltonian checks.
    pub nmax: usize,
    /// Truncation size of the recurrence matrices.
    pub dim: usize,
}

impl Default for SuiteLimits {
    fn default() -> Self {
        SuiteLimits { nmax: 8, dim: 12 }
    }
}

/// Two parameter points per family.
pub fn parameter_points(family: Family) -> [(Rational, Rational); 2] {
    match family {
        Family::L1 => [(int(2), int(0)), (rat(7, 3), int(0))],
        Family::L2 => [(int(2), int(0)), (rat(2, 3), int(0))],
        Family::J1 => [(int(3), int(1)), (rat(5, 2), rat(1, 2))],
        Family::J2 => [(int(1), int(3)), (rat(2, 3), int(2))],
    }
}

/// `families × ells × parameter_points`.
pub fn parameter_grid(
    families: &[Family],
    ells: impl Iterator<Item = usize> + Clone,
) -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for &family in families {
        for ell in ells.clone() {
            for (g, h) in parameter_points(family) {
                out.push(FamilyParams::new(family, ell, g, h).expect("grid points are valid"));
            }
        }
    }
    out
}

/// Runs one suite at one parameter point.
pub fn run_suite(
    suite: Suite,
    params: &FamilyParams,
    limits: SuiteLimits,
    perturb: Perturbation,
) -> Report {
    let nmax = limits.nmax;
    let mut report = Report::new(alloc::format!("{suite} {params}"));
    match suite {
        Suite::Classical => {
            report.extend(verify_classical_identities_with(
                &classical_system(params).kind(),
                nmax,
                perturb,
            ));
            match shifted_basis(params) {
                Ok(b) => report.extend(verify_classical_identities_with(&b.kind, nmax, perturb)),
                Err(e) => report.push("shifted-basis", None, false, alloc::format!("{e}")),
            }
        }
        Suite::Hamiltonian => {
            report.extend(verify_hamiltonian_identities_with(params, perturb));
            report.extend(verify_darboux_with(params, nmax, perturb));
            report.extend(shape_invariance_check_with(params, perturb));
            report.extend(verify_ladders_with(params, nmax.min(6), perturb));
        }
        Suite::Sl => {
            report.extend(verify_sl_eigen_with(params, nmax, perturb));
            report.extend(verify_degree_structure(params, nmax));
            report.extend(verify_alternative_forms(params, nmax));
            report.extend(verify_match_darboux(params, nmax));
            report.extend(invariant_subspace_check(params, nmax));
            report.extend(xi_structure_check(params));
        }
        Suite::Bispectral => report.extend(verify_bispectral_with(params, limits.dim, perturb)),
    }
    report
}
