use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use serde_json::{json, Value};
use xopkit_core::suite::{parameter_grid, run_suite, Suite, SuiteLimits};
use xopkit_core::{Family, FamilyParams, Perturbation, Report};

use crate::args::CheckArgs;
use crate::format::params_json;

pub struct Cell {
    pub suite: Suite,
    pub params: FamilyParams,
    pub report: Report,
}

/// Worker count from `XOPKIT_THREADS`, else the available parallelism.
pub fn thread_count() -> usize {
    std::env::var("XOPKIT_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| thread::available_parallelism().map_or(1, |n| n.get()))
}

pub fn run(args: &CheckArgs) -> Vec<Cell> {
    let families = if args.family.is_empty() {
        Family::ALL.to_vec()
    } else {
        args.family.clone()
    };
    let limits = SuiteLimits {
        nmax: args.nmax,
        dim: args.dim,
    };
    let perturbed: Vec<Suite> = args.perturb.map(|s| s.suites()).unwrap_or_default();
    let jobs: Vec<(Suite, FamilyParams)> = args
        .suite
        .suites()
        .into_iter()
        .flat_map(|s| {
            parameter_grid(&families, args.ell.clone())
                .into_iter()
                .map(move |p| (s, p))
        })
        .collect();

    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Report>>> = Mutex::new(vec![None; jobs.len()]);
    thread::scope(|scope| {
        for _ in 0..thread_count().min(jobs.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some((suite, params)) = jobs.get(i) else {
                    break;
                };
                let perturb = if perturbed.contains(suite) {
                    Perturbation::Active
                } else {
                    Perturbation::None
                };
                let report = run_suite(*suite, params, limits, perturb);
                results.lock().unwrap()[i] = Some(report);
            });
        }
    });
    let results = results.into_inner().unwrap();
    jobs.into_iter()
        .zip(results)
        .map(|((suite, params), report)| Cell {
            suite,
            params,
            report: report.expect("every job ran"),
        })
        .collect()
}

pub fn summary(cells: &[Cell]) -> Vec<String> {
    let mut lines = Vec::new();
    for suite in Suite::ALL {
        let mine: Vec<&Cell> = cells.iter().filter(|c| c.suite == suite).collect();
        if mine.is_empty() {
            continue;
        }
        let checks: usize = mine.iter().map(|c| c.report.len()).sum();
        let failed: usize = mine
            .iter()
            .map(|c| c.report.checks.iter().filter(|k| !k.passed).count())
            .sum();
        lines.push(format!(
            "{suite}: {} parameter points, {checks} checks, {failed} failed",
            mine.len()
        ));
    }
    lines
}

/// `suite=… family=… ell=… n=… identity=…` for the first failing check.
pub fn first_failure(cells: &[Cell]) -> Option<String> {
    cells.iter().find_map(|c| {
        c.report.first_failure().map(|f| {
            let n = f.n.map_or_else(|| "-".to_string(), |n| n.to_string());
            let mut line = format!(
                "FAIL suite={} family={} ell={} params=[{}] n={} identity={}",
                c.suite, c.params.family, c.params.ell, c.params, n, f.identity
            );
            if !f.detail.is_empty() {
                line.push_str(&format!(" ({})", f.detail));
            }
            line
        })
    })
}

pub fn to_json(cells: &[Cell]) -> Value {
    let items: Vec<Value> = cells
        .iter()
        .map(|c| {
            let failures: Vec<Value> = c
                .report
                .checks
                .iter()
                .filter(|k| !k.passed)
                .map(|k| json!({ "identity": k.identity, "n": k.n, "detail": k.detail }))
                .collect();
            json!({
                "suite": c.suite.name(),
                "params": params_json(&c.params),
                "checks": c.report.len(),
                "passed": c.report.all_passed(),
                "failures": failures,
            })
        })
        .collect();
    json!({
        "passed": cells.iter().all(|c| c.report.all_passed()),
        "cells": items,
    })
}
