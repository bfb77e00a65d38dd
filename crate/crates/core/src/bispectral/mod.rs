//! Bispectrality of the exceptional polynomials: the expansions `Ξ` (of `P̂_n`
//! in a shifted classical basis) and `H` (of `ξ²·B_n` in the `P̂` basis), the
//! `4ℓ+1`-diagonal recurrence matrix `K = ΞH`, and `π²(J) = HΞ` for the
//! Jacobi matrix `J` of the classical basis.

mod band;

pub use band::BandMatrix;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::classical::{norm_ratio, ClassicalKind};
use crate::exceptional::exceptional_poly;
use crate::families::xi;
use crate::ratpoly::{from_usize, int, rat, Rational, UniPoly};
use crate::{Error, Family, FamilyParams, Perturbation, Report, Result};

/// Sparse coefficient row `s ↦ c_s`.
pub type Row = BTreeMap<usize, Rational>;

/// Classical basis `{B_s}` in which `P̂_n` has a banded expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedBasis {
    pub kind: ClassicalKind,
    /// Offset of the parameters from those of the seed polynomial `P_n`
    /// entering `P̂_n` (second entry zero on the Laguerre side).
    pub shift: (i64, i64),
}

impl ShiftedBasis {
    pub fn poly(&self, s: usize) -> UniPoly {
        self.kind.poly(s)
    }

    pub fn describe(&self) -> String {
        match &self.kind {
            ClassicalKind::Laguerre { alpha } => format!("L^({alpha}) (shift {:+})", self.shift.0),
            ClassicalKind::Jacobi { a, b } => {
                format!("P^({a},{b}) (shift {:+},{:+})", self.shift.0, self.shift.1)
            }
        }
    }
}

fn seed_kind(params: &FamilyParams, da: i64, db: i64) -> ClassicalKind {
    let lr = from_usize(params.ell);
    let (g, h) = (&params.g, &params.h);
    let (lo, hi) = (rat(-3, 2), rat(1, 2));
    let (da, db) = (int(da), int(db));
    match params.family {
        Family::L1 => ClassicalKind::laguerre(g + &lr + lo + da),
        Family::L2 => ClassicalKind::laguerre(g + &lr + hi + da),
        Family::J1 => ClassicalKind::jacobi(g + &lr + lo + da, h + &lr + hi + db),
        Family::J2 => ClassicalKind::jacobi(g + &lr + hi + da, h + &lr + lo + db),
    }
}

/// Coefficients of `p` in a basis with one polynomial of each degree,
/// by descending elimination.
pub fn expand_in_basis(p: &UniPoly, basis: &dyn Fn(usize) -> UniPoly) -> Result<Row> {
    let mut rem = p.clone();
    let mut row = Row::new();
    while let Some(d) = rem.degree() {
        let b = basis(d);
        let lc = b
            .leading_coeff()
            .filter(|_| b.degree() == Some(d))
            .ok_or_else(|| {
                Error::Inconsistent(format!("basis polynomial {d} has the wrong degree"))
            })?;
        let c = rem.coeff(d) / lc;
        rem = &rem - &b.scale(&c);
        row.insert(d, c);
    }
    Ok(row)
}

fn row_support_within(row: &Row, lo: usize, hi: usize) -> bool {
    row.iter()
        .all(|(&s, c)| c.is_zero() || (lo..=hi).contains(&s))
}

/// Banded-basis discovery: the parameter offsets in `{−1,0,1}` (per
/// parameter) for which every `P̂_n`, `n ≤ rows`, expands on `[n−ℓ, n+ℓ]`.
pub fn discover_shifted_bases(params: &FamilyParams, rows: usize) -> Vec<ShiftedBasis> {
    let l = params.ell;
    let hats: Vec<UniPoly> = (0..=rows).map(|n| exceptional_poly(params, n)).collect();
    let dbs: &[i64] = if params.family.is_laguerre() {
        &[0]
    } else {
        &[-1, 0, 1]
    };
    let mut found = Vec::new();
    for da in [-1i64, 0, 1] {
        for &db in dbs {
            let kind = seed_kind(params, da, db);
            let banded = hats.iter().enumerate().all(|(n, p)| {
                expand_in_basis(p, &|s| kind.poly(s))
                    .map(|row| row_support_within(&row, n.saturating_sub(l), n + l))
                    .unwrap_or(false)
            });
            if banded {
                found.push(ShiftedBasis {
                    kind,
                    shift: (da, db),
                });
            }
        }
    }
    found
}

/// The unique banded basis, or an error when none or several qualify.
pub fn shifted_basis(params: &FamilyParams) -> Result<ShiftedBasis> {
    let mut found = discover_shifted_bases(params, 2 * params.ell + 3);
    match found.len() {
        1 => Ok(found.remove(0)),
        0 => Err(Error::NoBandedBasis),
        k => Err(Error::Inconsistent(format!("{k} candidate banded bases"))),
    }
}

/// Precomputed polynomials for one parameter point.
#[derive(Debug, Clone)]
pub struct Bispectral {
    pub params: FamilyParams,
    pub basis: ShiftedBasis,
    pub pi: UniPoly,
    pi2: UniPoly,
    hats: Vec<UniPoly>,
    classical: Vec<UniPoly>,
}

impl Bispectral {
    /// Caches `P̂_n` and `B_n` for `n < size`.
    pub fn new(params: &FamilyParams, size: usize) -> Result<Self> {
        let basis = shifted_basis(params)?;
        let pi = xi(params);
        Ok(Bispectral {
            params: params.clone(),
            pi2: pi.pow(2),
            pi,
            hats: (0..size).map(|n| exceptional_poly(params, n)).collect(),
            classical: (0..size).map(|n| basis.poly(n)).collect(),
            basis,
        })
    }

    fn ensure(&mut self, size: usize) {
        while self.hats.len() < size {
            self.hats
                .push(exceptional_poly(&self.params, self.hats.len()));
        }
        while self.classical.len() < size {
            self.classical.push(self.basis.poly(self.classical.len()));
        }
    }

    pub fn hat(&mut self, n: usize) -> &UniPoly {
        self.ensure(n + 1);
        &self.hats[n]
    }

    pub fn classical(&mut self, n: usize) -> &UniPoly {
        self.ensure(n + 1);
        &self.classical[n]
    }

    /// Row `ξ_{n,·}`: `P̂_n = Σ_s ξ_{ns} B_s`.
    pub fn xhat_row(&mut self, n: usize) -> Result<Row> {
        let l = self.params.ell;
        self.ensure(n + l + 1);
        let p = self.hats[n].clone();
        let classical = &self.classical;
        expand_in_basis(&p, &|s| classical[s].clone())
    }

    /// Expansion of `q` in `{P̂_s}`; the part of degree `< ℓ` must vanish.
    fn expand_in_hats(&mut self, q: &UniPoly, row_index: usize) -> Result<Row> {
        let l = self.params.ell;
        let top = q.degree().unwrap_or(0);
        if top >= l {
            self.ensure(top - l + 1);
        }
        let mut rem = q.clone();
        let mut row = Row::new();
        while let Some(d) = rem.degree() {
            if d < l {
                return Err(Error::ExpansionDoesNotExist { n: row_index });
            }
            let b = &self.hats[d - l];
            let c = rem.coeff(d) / b.leading_coeff().expect("nonzero");
            rem = &rem - &b.scale(&c);
            row.insert(d - l, c);
        }
        Ok(row)
    }

    /// Row `η_{n,·}`: `ξ² B_n = Σ_s η_{ns} P̂_s`.
    pub fn pi2_row(&mut self, n: usize) -> Result<Row> {
        self.ensure(n + 1);
        let q = &self.pi2 * &self.classical[n];
        self.expand_in_hats(&q, n)
    }

    /// Row `K_{n,·}`: `ξ² P̂_n = Σ_s K_{ns} P̂_s`.
    pub fn k_row(&mut self, n: usize) -> Result<Row> {
        self.ensure(n + 1);
        let q = &self.pi2 * &self.hats[n];
        self.expand_in_hats(&q, n)
    }

    fn matrix(
        &mut self,
        dim: usize,
        band: usize,
        row: impl Fn(&mut Self, usize) -> Result<Row>,
    ) -> Result<BandMatrix> {
        let mut m = BandMatrix::new(dim, band);
        for n in 0..dim {
            for (s, c) in row(self, n)? {
                m.set(n, s, c);
            }
        }
        Ok(m)
    }

    pub fn xi_matrix(&mut self, dim: usize) -> Result<BandMatrix> {
        let l = self.params.ell;
        self.matrix(dim, l, |b, n| b.xhat_row(n))
    }

    pub fn eta_matrix(&mut self, dim: usize) -> Result<BandMatrix> {
        let l = self.params.ell;
        self.matrix(dim, l, |b, n| b.pi2_row(n))
    }

    /// `K` from the direct expansion of `ξ² P̂_n`.
    pub fn k_matrix_direct(&mut self, dim: usize) -> Result<BandMatrix> {
        let l = self.params.ell;
        self.matrix(dim, 2 * l, |b, n| b.k_row(n))
    }

    /// Tridiagonal `J` with `x B_n = J_{n,n+1}B_{n+1} + J_{nn}B_n + J_{n,n−1}B_{n−1}`.
    pub fn jacobi_matrix(&self, dim: usize) -> Result<BandMatrix> {
        let mut j = BandMatrix::new(dim, 1);
        for n in 0..dim {
            let (a, b, c) = self.basis.kind.recurrence(n)?;
            j.set(n, n, b);
            if n + 1 < dim {
                j.set(n, n + 1, a);
            }
            if n > 0 {
                j.set(n, n - 1, c);
            }
        }
        Ok(j)
    }

    /// `π²(J)` on the truncation (exact on rows `≤ dim−1−2ℓ`).
    pub fn pi2_of_jacobi(&self, dim: usize) -> Result<BandMatrix> {
        let j = self.jacobi_matrix(dim)?;
        let coeffs = self.pi.coeffs();
        let mut acc = BandMatrix::new(dim, 0);
        for c in coeffs.iter().rev() {
            acc = acc.mul(&j).add(&BandMatrix::identity(dim).scale(c));
        }
        Ok(acc.mul(&acc))
    }
}

/// `ξ_{n,·}` for one row.
pub fn expand_xhat(params: &FamilyParams, n: usize) -> Result<Row> {
    Bispectral::new(params, n + params.ell + 1)?.xhat_row(n)
}

/// `η_{n,·}` for one row.
pub fn expand_pi2_classical(params: &FamilyParams, n: usize) -> Result<Row> {
    Bispectral::new(params, n + params.ell + 1)?.pi2_row(n)
}

/// `K` computed directly; rows `n < dim`, columns truncated to `dim`.
pub fn k_matrix(params: &FamilyParams, dim: usize) -> Result<BandMatrix> {
    Bispectral::new(params, dim + 2 * params.ell)?.k_matrix_direct(dim)
}

/// Mirror-relation ratios `r_s = h_n ξ_{sn} / η_{ns}` (one per `s`, checked
/// constant in `n`) normalized to `ĥ_s/ĥ_0`.
pub fn norm_ratio_consistency(
    params: &FamilyParams,
    nmax: usize,
) -> Result<(Report, Vec<Rational>)> {
    let mut bs = Bispectral::new(params, nmax + 2 * params.ell + 2)?;
    norm_ratios_from(&mut bs, nmax)
}

fn norm_ratios_from(bs: &mut Bispectral, nmax: usize) -> Result<(Report, Vec<Rational>)> {
    let l = bs.params.ell;
    let mut report = Report::new(format!("mirror relation {}", bs.params));
    let xi_rows: Vec<Row> = (0..=nmax).map(|s| bs.xhat_row(s)).collect::<Result<_>>()?;
    let eta_rows: Vec<Row> = (0..=nmax + l)
        .map(|n| bs.pi2_row(n))
        .collect::<Result<_>>()?;
    let mut ratios = Vec::new();
    for (s, xi_row) in xi_rows.iter().enumerate() {
        let mut r_s: Option<Rational> = None;
        let mut consistent = true;
        for (n, eta_row) in eta_rows
            .iter()
            .enumerate()
            .take(s + l + 1)
            .skip(s.saturating_sub(l))
        {
            let eta = eta_row.get(&s).cloned().unwrap_or_else(Rational::zero);
            let xi_sn = xi_row.get(&n).cloned().unwrap_or_else(Rational::zero);
            if eta.is_zero() {
                consistent &= xi_sn.is_zero();
                continue;
            }
            let r = norm_ratio(&bs.basis.kind, n)? * xi_sn / eta;
            match &r_s {
                None => r_s = Some(r),
                Some(prev) => consistent &= *prev == r,
            }
        }
        let r = r_s.unwrap_or_else(Rational::zero);
        let positive = r.is_positive();
        report.push(
            "mirror-ratio-constant",
            Some(s),
            consistent,
            format!("r = {r}"),
        );
        report.push("mirror-ratio-positive", Some(s), positive, "");
        ratios.push(r);
    }
    let r0 = ratios.first().cloned().unwrap_or_else(Rational::zero);
    if r0.is_zero() {
        return Err(Error::Inconsistent("vanishing mirror ratio at s=0".into()));
    }
    Ok((report, ratios.iter().map(|r| r / &r0).collect()))
}

fn record_support(report: &mut Report, identity: &str, m: &BandMatrix, band: usize) {
    let actual = m.actual_bandwidth();
    report.push(
        identity,
        None,
        actual <= band,
        format!("bandwidth {actual}, allowed {band}"),
    );
}

pub fn verify_bispectral(params: &FamilyParams, dim: usize) -> Report {
    verify_bispectral_with(params, dim, Perturbation::None)
}

/// Band supports of `Ξ`, `H`, `K`; `K` rows against `ξ²P̂_n` (exactly and at a
/// point); `K = ΞH` and `π²(J) = HΞ` on interior blocks; the mirror ratios.
pub fn verify_bispectral_with(params: &FamilyParams, dim: usize, perturb: Perturbation) -> Report {
    let mut report = Report::new(format!("bispectral {params} N={dim}"));
    if let Err(e) = bispectral_checks(params, dim, perturb, &mut report) {
        report.push("bispectral-construction", None, false, format!("{e}"));
    }
    report
}

fn bispectral_checks(
    params: &FamilyParams,
    dim: usize,
    perturb: Perturbation,
    report: &mut Report,
) -> Result<()> {
    let l = params.ell;
    if dim < 2 * l + 1 {
        return Err(Error::OutOfRange(format!("N={dim} below 2ell+1")));
    }
    let mut bs = Bispectral::new(params, dim + 2 * l)?;
    report.push("shifted-basis", None, true, bs.basis.describe());

    let xi_m = bs.xi_matrix(dim)?;
    let mut eta_m = bs.eta_matrix(dim)?;
    let k_direct = bs.k_matrix_direct(dim)?;
    record_support(report, "xi-band", &xi_m, l);
    record_support(report, "eta-band", &eta_m, l);
    record_support(report, "k-band", &k_direct, 2 * l);
    for n in 0..dim {
        let xs = bs.xhat_row(n)?;
        let lower = xs.keys().next().copied().unwrap_or(0);
        report.push(
            "xi-row-support",
            Some(n),
            lower + l >= n && xs.len() <= 2 * l + 1,
            format!("support {lower}..{}", n + l),
        );
        let es = bs.pi2_row(n)?;
        let lower = es.keys().next().copied().unwrap_or(0);
        report.push(
            "eta-row-support",
            Some(n),
            lower + l >= n,
            format!("lowest {lower}"),
        );
    }

    let eta0 = rat(1, 3);
    for n in 0..dim {
        let row = bs.k_row(n)?;
        let q = &bs.pi2 * &bs.hats[n].clone();
        let mut sum = UniPoly::zero();
        let mut at_point = Rational::zero();
        for (&s, c) in &row {
            let h = bs.hat(s).clone();
            at_point += c * h.eval(&eta0);
            sum = sum + h.scale(c);
        }
        report.push("k-row-identity", Some(n), sum == q, "");
        report.push(
            "k-row-at-point",
            Some(n),
            at_point == q.eval(&eta0),
            "eta0 = 1/3",
        );
    }

    if perturb.is_active() {
        let v = eta_m.get(0, 0) + rat(1, 1000);
        eta_m.set(0, 0, v);
    }
    let xh = xi_m.mul(&eta_m);
    let valid_k_rows = dim - 1 - l;
    match k_direct.first_block_difference(&xh, valid_k_rows, dim - 1) {
        None => report.pass("k-equals-xi-h", None),
        Some((i, j)) => report.push(
            "k-equals-xi-h",
            None,
            false,
            format!("first difference at ({i},{j})"),
        ),
    }

    let pj = bs.pi2_of_jacobi(dim)?;
    let hx = eta_m.mul(&xi_m);
    let valid_j_rows = dim - 1 - 2 * l;
    match pj.first_block_difference(&hx, valid_j_rows, dim - 1) {
        None => report.pass("pi2-of-j-equals-h-xi", None),
        Some((i, j)) => report.push(
            "pi2-of-j-equals-h-xi",
            None,
            false,
            format!("first difference at ({i},{j})"),
        ),
    }
    let mut interior_pj = BandMatrix::new(dim, 2 * l);
    for (&(i, j), v) in pj.entries() {
        if i <= valid_j_rows {
            interior_pj.set(i, j, v.clone());
        }
    }
    record_support(report, "pi2-of-j-band", &interior_pj, 2 * l);
    let refactored = k_direct
        .first_block_difference(&hx, valid_j_rows, dim - 1)
        .is_some();
    report.push(
        "refactorization-differs",
        None,
        refactored,
        "K = ΞH vs HΞ = π²(J)",
    );

    let nmax = dim - 1 - 2 * l;
    let (mirror, _) = norm_ratios_from(&mut bs, nmax)?;
    report.extend(mirror);
    Ok(())
}

#[cfg(test)]
mod tests;
