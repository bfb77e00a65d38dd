use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use xopkit_core::suite::Suite;
use xopkit_core::{Family, FamilyParams, Rational, Tier};

#[derive(Debug, Parser)]
#[command(
    name = "xopkit",
    version,
    about = "Exceptional Laguerre and Jacobi polynomials: generation and verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact coefficients of P_{ell,n} in powers of eta.
    Gen(GenArgs),
    /// Run verification suites over the built-in parameter grid.
    Check(CheckArgs),
    /// Write the recurrence matrices K, Xi and H as sparse CSV.
    Recur(RecurArgs),
    /// Lowest finite-difference eigenvalues of the partner Hamiltonians.
    Spectrum(SpectrumArgs),
    /// Gram matrix of the exceptional polynomials by Gauss quadrature.
    Ortho(OrthoArgs),
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub ell: usize,
    #[arg(long, value_parser = parse_rational)]
    pub g: Rational,
    /// Second coupling (Jacobi families only).
    #[arg(long, value_parser = parse_rational)]
    pub h: Option<Rational>,
}

impl ParamArgs {
    pub fn params(&self) -> xopkit_core::Result<FamilyParams> {
        let h = self.h.clone().unwrap_or_default();
        FamilyParams::new(self.family, self.ell, self.g.clone(), h)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Inclusive range `a..b` or a single index.
    #[arg(long, value_parser = parse_range, default_value = "0..4")]
    pub n: RangeInclusive<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Classical,
    Hamiltonian,
    Sl,
    Bispectral,
    All,
}

impl SuiteArg {
    pub fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Classical => vec![Suite::Classical],
            SuiteArg::Hamiltonian => vec![Suite::Hamiltonian],
            SuiteArg::Sl => vec![Suite::Sl],
            SuiteArg::Bispectral => vec![Suite::Bispectral],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    pub suite: SuiteArg,
    /// Comma-separated families; all four when omitted.
    #[arg(long, value_delimiter = ',')]
    pub family: Vec<Family>,
    #[arg(long, value_parser = parse_range, default_value = "1..3")]
    pub ell: RangeInclusive<usize>,
    #[arg(long, default_value_t = 8)]
    pub nmax: usize,
    /// Truncation size of the recurrence matrices.
    #[arg(long, default_value_t = 12)]
    pub dim: usize,
    /// Write the JSON report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Corrupt one coefficient inside the named suite.
    #[arg(long, value_enum, hide = true)]
    pub perturb: Option<SuiteArg>,
}

#[derive(Debug, Args)]
pub struct RecurArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Matrix size N.
    #[arg(long = "size", short = 'N', visible_alias = "N", default_value_t = 12)]
    pub size: usize,
    /// Output directory.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn tier(self) -> Tier {
        match self {
            Side::Plus => Tier::Plus,
            Side::Minus => Tier::Minus,
        }
    }
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_enum, default_value_t = Side::Plus)]
    pub side: Side,
    #[arg(long, default_value_t = 8000)]
    pub grid: usize,
    #[arg(long, default_value_t = 4)]
    pub levels: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OrthoArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, default_value_t = 6)]
    pub nmax: usize,
    #[arg(long, default_value_t = 200)]
    pub order: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| format!("not a rational number: {s:?}"))
}

pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad range bound in {s:?}"))
    };
    let range = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.trim_start_matches('='))?,
        None => {
            let k = num(s)?;
            k..=k
        }
    };
    if range.is_empty() {
        return Err(format!("empty range {s:?}"));
    }
    Ok(range)
}
