//! Floating-point checks: Gauss rules for the exceptional orthogonality
//! relations and finite-difference spectra of the partner Hamiltonians.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bispectral::shifted_basis;
use crate::classical::ClassicalKind;
use crate::darboux::potential;
use crate::exceptional::exceptional_poly;
use crate::families::{eigenvalue, xi};
use crate::ratpoly::to_f64;
use crate::{Error, FamilyParams, Result, Tier};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RuleKind {
    /// Weight `(1−x)^a (1+x)^b` on `(−1, 1)`.
    GaussJacobi { a: f64, b: f64 },
    /// Weight `x^alpha e^{−x}` on `(0, ∞)`.
    GaussLaguerre { alpha: f64 },
}

impl RuleKind {
    pub fn from_classical(kind: &ClassicalKind) -> Self {
        match kind {
            ClassicalKind::Laguerre { alpha } => RuleKind::GaussLaguerre {
                alpha: to_f64(alpha),
            },
            ClassicalKind::Jacobi { a, b } => RuleKind::GaussJacobi {
                a: to_f64(a),
                b: to_f64(b),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub kind: RuleKind,
    pub order: usize,
}

impl QuadratureRule {
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Recurrence coefficients of the orthonormal polynomials and the total mass.
fn jacobi_coefficients(kind: RuleKind, order: usize) -> Result<(Vec<f64>, Vec<f64>, f64)> {
    let mut diag = vec![0.0; order];
    let mut off = vec![0.0; order];
    let mu0 = match kind {
        RuleKind::GaussJacobi { a, b } => {
            if a.is_nan() || b.is_nan() || a <= -1.0 || b <= -1.0 {
                return Err(Error::OutOfRange(format!(
                    "Jacobi weight needs a,b > -1, got ({a},{b})"
                )));
            }
            let s = a + b;
            for (k, d) in diag.iter_mut().enumerate() {
                let k = k as f64;
                *d = if k == 0.0 {
                    (b - a) / (s + 2.0)
                } else {
                    (b * b - a * a) / ((2.0 * k + s) * (2.0 * k + s + 2.0))
                };
            }
            for k in 1..order {
                let kf = k as f64;
                let t = 2.0 * kf + s;
                let sq = if k == 1 {
                    4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + s) * (2.0 + s) * (3.0 + s))
                } else {
                    4.0 * kf * (kf + a) * (kf + b) * (kf + s) / (t * t * (t + 1.0) * (t - 1.0))
                };
                off[k - 1] = libm::sqrt(sq);
            }
            libm::exp(
                (s + 1.0) * core::f64::consts::LN_2 + libm::lgamma(a + 1.0) + libm::lgamma(b + 1.0)
                    - libm::lgamma(s + 2.0),
            )
        }
        RuleKind::GaussLaguerre { alpha } => {
            if alpha.is_nan() || alpha <= -1.0 {
                return Err(Error::OutOfRange(format!(
                    "Laguerre weight needs alpha > -1, got {alpha}"
                )));
            }
            for (k, d) in diag.iter_mut().enumerate() {
                *d = 2.0 * k as f64 + alpha + 1.0;
            }
            for k in 1..order {
                let kf = k as f64;
                off[k - 1] = libm::sqrt(kf * (kf + alpha));
            }
            libm::exp(libm::lgamma(alpha + 1.0))
        }
    };
    Ok((diag, off, mu0))
}

/// Implicit QL on a symmetric tridiagonal matrix (`e[i]` couples `i`, `i+1`),
/// tracking the first components of the eigenvectors. Returns them sorted by
/// eigenvalue.
fn tridiagonal_eigen(mut d: Vec<f64>, mut e: Vec<f64>) -> (Vec<f64>, Vec<f64>) {
    let n = d.len();
    let mut z = vec![0.0; n];
    if n > 0 {
        z[0] = 1.0;
        e[n - 1] = 0.0;
    }
    let eps = f64::EPSILON;
    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }
        if m > l {
            loop {
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = libm::hypot(p, 1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let h = g - d[l];
                for di in d.iter_mut().skip(l + 2) {
                    *di -= h;
                }
                f += h;

                p = d[m];
                let (mut c, mut c2, mut c3) = (1.0, 1.0, 1.0);
                let el1 = e[l + 1];
                let (mut s, mut s2) = (0.0, 0.0);
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    let h = c * p;
                    r = libm::hypot(p, e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    let zh = z[i + 1];
                    z[i + 1] = s * z[i] + c * zh;
                    z[i] = c * z[i] - s * zh;
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| d[i].total_cmp(&d[j]));
    (
        idx.iter().map(|&i| d[i]).collect(),
        idx.iter().map(|&i| z[i]).collect(),
    )
}

/// Golub–Welsch.
pub fn gauss_rule(kind: RuleKind, order: usize) -> Result<QuadratureRule> {
    if order == 0 {
        return Err(Error::OutOfRange(
            "quadrature order must be at least 1".into(),
        ));
    }
    let (diag, off, mu0) = jacobi_coefficients(kind, order)?;
    let (nodes, first) = tridiagonal_eigen(diag, off);
    let weights = first.iter().map(|v| mu0 * v * v).collect();
    Ok(QuadratureRule {
        nodes,
        weights,
        kind,
        order,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Orthogonality {
    /// `G_{nm}` for `ℓ`-shifted indices `n, m ≤ nmax`.
    pub gram: Vec<Vec<f64>>,
    /// `|G_{nm}| / √(G_{nn} G_{mm})`.
    pub normalized: Vec<Vec<f64>>,
    pub max_residual: f64,
    /// `G_{nn} / G_{00}`.
    pub diagonal_ratios: Vec<f64>,
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

/// Gram matrix of `P̂_0..P̂_nmax` against the shifted classical weight
/// divided by `ξ²`, computed with the Gauss rule of that classical weight.
pub fn orthogonality_residual(
    params: &FamilyParams,
    nmax: usize,
    order: usize,
) -> Result<Orthogonality> {
    let basis = shifted_basis(params)?;
    let rule = gauss_rule(RuleKind::from_classical(&basis.kind), order)?;
    let xi_c = xi(params).to_f64_coeffs();
    let hats: Vec<Vec<f64>> = (0..=nmax)
        .map(|n| exceptional_poly(params, n).to_f64_coeffs())
        .collect();
    let values: Vec<Vec<f64>> = rule
        .nodes
        .iter()
        .map(|&x| {
            let s = horner(&xi_c, x);
            hats.iter().map(|p| horner(p, x) / s).collect()
        })
        .collect();
    let size = nmax + 1;
    let mut gram = vec![vec![0.0; size]; size];
    for (k, w) in rule.weights.iter().enumerate() {
        let row = &values[k];
        for n in 0..size {
            for m in n..size {
                gram[n][m] += w * row[n] * row[m];
            }
        }
    }
    for n in 1..size {
        let (upper, lower) = gram.split_at_mut(n);
        for (m, row) in upper.iter().enumerate() {
            lower[0][m] = row[n];
        }
    }
    let mut normalized = vec![vec![0.0; size]; size];
    let mut max_residual: f64 = 0.0;
    for n in 0..size {
        for m in 0..size {
            let r = libm::fabs(gram[n][m]) / libm::sqrt(gram[n][n] * gram[m][m]);
            normalized[n][m] = r;
            if n != m {
                max_residual = max_residual.max(r);
            }
        }
    }
    let diagonal_ratios = (0..size).map(|n| gram[n][n] / gram[0][0]).collect();
    Ok(Orthogonality {
        gram,
        normalized,
        max_residual,
        diagonal_ratios,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumResult {
    pub eigenvalues: Vec<f64>,
    pub grid: usize,
    pub domain: (f64, f64),
    /// Order of the difference scheme.
    pub order: u32,
}

impl SpectrumResult {
    pub fn relative_errors(&self, exact: &[f64]) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .zip(exact)
            .map(|(e, x)| libm::fabs(e - x) / libm::fabs(*x))
            .collect()
    }
}

/// `E^{(+)}_{ℓ,n}` for `n < levels` as floats.
pub fn closed_form_levels(params: &FamilyParams, levels: usize) -> Vec<f64> {
    (0..levels)
        .map(|n| to_f64(&eigenvalue(params, n, Tier::Plus)))
        .collect()
}

/// Number of eigenvalues below `x` of the symmetric tridiagonal matrix
/// with diagonal `d` and constant off-diagonal `o`.
fn sturm_count(d: &[f64], o: f64, x: f64) -> usize {
    let o2 = o * o;
    let mut q = 1.0;
    let mut count = 0;
    for (i, &di) in d.iter().enumerate() {
        q = di - x - if i == 0 { 0.0 } else { o2 / q };
        if q == 0.0 {
            q = f64::EPSILON * (libm::fabs(di) + libm::fabs(o) + 1.0);
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Lowest eigenvalues of the second-order central-difference Hamiltonian
/// `−d²/dx² + V` with Dirichlet conditions on the nodes `x_i = i·h`.
pub fn fd_spectrum(
    params: &FamilyParams,
    side: Tier,
    grid: usize,
    levels: usize,
) -> Result<SpectrumResult> {
    if grid < 2 {
        return Err(Error::OutOfRange("grid must be at least 2".into()));
    }
    let pot = potential(params, side);
    let upper = if params.family.is_laguerre() {
        let emax = closed_form_levels(params, levels.max(1))
            .last()
            .copied()
            .unwrap_or(0.0);
        (2.0 * libm::sqrt(emax.max(0.0))).max(8.0)
    } else {
        core::f64::consts::FRAC_PI_2
    };
    let h = upper / grid as f64;
    let inv = 1.0 / (h * h);
    let d: Vec<f64> = (1..grid)
        .map(|i| 2.0 * inv + pot.eval_x(i as f64 * h))
        .collect();
    let o = -inv;
    let (mut lo, mut hi) = d
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
            (lo.min(x - 2.0 * inv), hi.max(x + 2.0 * inv))
        });
    if !lo.is_finite() || !hi.is_finite() {
        return Err(Error::Inconsistent(
            "potential is not finite on the grid".into(),
        ));
    }
    lo -= 1.0;
    hi += 1.0;
    let levels = levels.min(d.len());
    let mut eigenvalues = Vec::with_capacity(levels);
    for k in 0..levels {
        let (mut a, mut b) = (eigenvalues.last().copied().unwrap_or(lo), hi);
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            if sturm_count(&d, o, mid) > k {
                b = mid;
            } else {
                a = mid;
            }
        }
        eigenvalues.push(0.5 * (a + b));
    }
    Ok(SpectrumResult {
        eigenvalues,
        grid,
        domain: (0.0, upper),
        order: 2,
    })
}
