mod args;
mod check;
mod format;

use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::Parser;
use serde_json::json;
use xopkit_core::bispectral::Bispectral;
use xopkit_core::exceptional::exceptional_poly;
use xopkit_core::families::eigenvalue;
use xopkit_core::numerics::{closed_form_levels, fd_spectrum, orthogonality_residual};
use xopkit_core::{FamilyParams, Tier};

use args::{
    CheckArgs, Cli, Command, Format, GenArgs, OrthoArgs, ParamArgs, RecurArgs, Side, SpectrumArgs,
};
use format::GenRow;

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Gen(a) => with_params(&a.params, |p| gen(a, p)),
        Command::Check(a) => check(a),
        Command::Recur(a) => with_params(&a.params, |p| recur(a, p)),
        Command::Spectrum(a) => with_params(&a.params, |p| spectrum(a, p)),
        Command::Ortho(a) => with_params(&a.params, |p| ortho(a, p)),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_FAILED)
        }
    }
}

fn with_params(
    args: &ParamArgs,
    run: impl FnOnce(&FamilyParams) -> Result<ExitCode>,
) -> Result<ExitCode> {
    match args.params() {
        Ok(p) => run(&p),
        Err(e) => {
            eprintln!("error: {e}");
            Ok(ExitCode::from(EXIT_USAGE))
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json serializes");
    s.push('\n');
    s
}

fn gen(a: &GenArgs, p: &FamilyParams) -> Result<ExitCode> {
    let rows: Vec<GenRow> =
        a.n.clone()
            .map(|n| GenRow {
                n,
                poly: exceptional_poly(p, n),
                eigenvalue_os: eigenvalue(p, n, Tier::Os),
            })
            .collect();
    let text = match a.format {
        Format::Json => pretty(&format::gen_json(p, &rows)),
        Format::Csv => format::gen_csv(&rows),
    };
    emit(a.out.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn check(a: &CheckArgs) -> Result<ExitCode> {
    let cells = check::run(a);
    for line in check::summary(&cells) {
        println!("{line}");
    }
    if let Some(path) = &a.out {
        fs::write(path, pretty(&check::to_json(&cells)))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    match check::first_failure(&cells) {
        None => {
            println!("all checks passed");
            Ok(ExitCode::SUCCESS)
        }
        Some(line) => {
            println!("{line}");
            Ok(ExitCode::from(EXIT_FAILED))
        }
    }
}

fn recur(a: &RecurArgs, p: &FamilyParams) -> Result<ExitCode> {
    let l = p.ell;
    if a.size < 2 * l + 1 {
        eprintln!("error: N must be at least 2*ell+1 = {}", 2 * l + 1);
        return Ok(ExitCode::from(EXIT_USAGE));
    }
    let mut bs = Bispectral::new(p, a.size + 2 * l).context("building the recurrence matrices")?;
    let k = bs.k_matrix_direct(a.size)?;
    let xi = bs.xi_matrix(a.size)?;
    let h = bs.eta_matrix(a.size)?;
    fs::create_dir_all(&a.out).with_context(|| format!("creating {}", a.out.display()))?;
    for (name, m) in [("K.csv", &k), ("Xi.csv", &xi), ("H.csv", &h)] {
        fs::write(a.out.join(name), format::band_csv(m))?;
    }
    let meta = json!({
        "params": format::params_json(p),
        "size": a.size,
        "basis": bs.basis.describe(),
        "basis_shift": [bs.basis.shift.0, bs.basis.shift.1],
        "declared_bandwidth": { "K": k.declared_bandwidth(), "Xi": xi.declared_bandwidth(), "H": h.declared_bandwidth() },
        "actual_bandwidth": { "K": k.actual_bandwidth(), "Xi": xi.actual_bandwidth(), "H": h.actual_bandwidth() },
        "interior_rows": { "K=XiH": a.size - 1 - l, "pi2(J)=HXi": a.size - 1 - 2 * l },
    });
    fs::write(a.out.join("meta.json"), pretty(&meta))?;
    println!(
        "wrote K, Xi, H ({}x{}) to {}; basis {}",
        a.size,
        a.size,
        a.out.display(),
        bs.basis.describe()
    );
    Ok(ExitCode::SUCCESS)
}

fn spectrum(a: &SpectrumArgs, p: &FamilyParams) -> Result<ExitCode> {
    if a.grid < 1000 {
        eprintln!("error: grid must be at least 1000");
        return Ok(ExitCode::from(EXIT_USAGE));
    }
    let s = fd_spectrum(p, a.side.tier(), a.grid, a.levels)?;
    let exact = closed_form_levels(p, s.eigenvalues.len());
    let side = match a.side {
        Side::Plus => "plus",
        Side::Minus => "minus",
    };
    let text = match a.format {
        Format::Csv => format::spectrum_csv(&s, &exact),
        Format::Json => pretty(&format::spectrum_json(p, side, &s, &exact)),
    };
    emit(a.out.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn ortho(a: &OrthoArgs, p: &FamilyParams) -> Result<ExitCode> {
    if a.order == 0 {
        eprintln!("error: order must be at least 1");
        return Ok(ExitCode::from(EXIT_USAGE));
    }
    let o = orthogonality_residual(p, a.nmax, a.order)?;
    let text = match a.format {
        Format::Csv => format::ortho_csv(&o),
        Format::Json => pretty(&format::ortho_json(p, a.order, &o)),
    };
    emit(a.out.as_deref(), &text)?;
    eprintln!(
        "max normalized off-diagonal residual {}",
        format::sig15(o.max_residual)
    );
    Ok(ExitCode::SUCCESS)
}
