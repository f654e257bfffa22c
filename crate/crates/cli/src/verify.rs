//! Oracle comparisons behind the `verify` subcommand.

use progdisc::chains::all_chain_pairs;
use progdisc::discrim::{min_error, Priors};
use progdisc::jordan::{jordan_numeric, spectrum};
use progdisc::oracle::{global_jordan_svd, helstrom_numeric, rho_exact, rho_montecarlo};
use progdisc::{ProblemSize, Side};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::record::{float_cell, Emission, OutputRecord, Table, SCHEMA_VERSION};

/// Monte-Carlo tolerances above this are too loose to mean anything.
pub const MC_INCONCLUSIVE_ABOVE: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub n: u32,
    pub m: u32,
    pub deviation: f64,
    pub tolerance: f64,
    pub status: Status,
}

#[derive(Debug, Clone, Copy)]
pub struct Settings {
    pub n_max: u32,
    pub m_max: u32,
    pub samples: u64,
    pub seed: u64,
    pub tol: f64,
}

impl Settings {
    pub fn helstrom_tol(&self) -> f64 {
        10.0 * self.tol
    }

    pub fn montecarlo_tol(&self) -> f64 {
        5.0 / (self.samples as f64).sqrt()
    }
}

fn max_dev(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn check(name: &'static str, size: ProblemSize, deviation: f64, tolerance: f64) -> Check {
    Check {
        name,
        n: size.n(),
        m: size.m(),
        deviation,
        tolerance,
        status: if deviation <= tolerance {
            Status::Pass
        } else {
            Status::Fail
        },
    }
}

fn checks_for(size: ProblemSize, s: &Settings) -> Vec<Check> {
    let want = spectrum(size).abs_values_f64();
    let mut out = Vec::new();

    let global = global_jordan_svd(size);
    out.push(check("global_svd", size, max_dev(&global, &want), s.tol));

    let mut chained: Vec<f64> = all_chain_pairs(size)
        .expect("valid size")
        .iter()
        .flat_map(jordan_numeric)
        .collect();
    chained.sort_by(|a, b| b.total_cmp(a));
    out.push(check("chain_svd", size, max_dev(&chained, &want), s.tol));

    let units = global.iter().filter(|x| **x >= 1.0 - s.tol).count() as f64;
    out.push(check(
        "unit_count",
        size,
        (units - size.intersection_dim() as f64).abs(),
        0.0,
    ));

    let helstrom = (0..=10)
        .map(|i| {
            let p = Priors::float(i as f64 / 10.0).expect("grid prior");
            (helstrom_numeric(size, &p) - min_error(size, &p).float).abs()
        })
        .fold(0.0, f64::max);
    out.push(check("helstrom", size, helstrom, s.helstrom_tol()));

    let traces = [Side::H1, Side::H2]
        .map(|side| (rho_exact(side, size).trace() - 1.0).abs())
        .into_iter()
        .fold(0.0, f64::max);
    out.push(check("trace", size, traces, s.tol));

    let mc = [Side::H1, Side::H2]
        .into_iter()
        .map(|side| {
            rho_montecarlo(side, size, s.samples, s.seed)
                .expect("samples checked at parse time")
                .max_abs_diff(&rho_exact(side, size))
        })
        .fold(0.0, f64::max);
    let mut c = check("montecarlo", size, mc, s.montecarlo_tol());
    if s.montecarlo_tol() > MC_INCONCLUSIVE_ABOVE {
        c.status = Status::Inconclusive;
    }
    out.push(c);
    out
}

pub fn run_checks(s: &Settings) -> Vec<Check> {
    let sizes: Vec<ProblemSize> = (1..=s.n_max)
        .flat_map(|n| (1..=s.m_max).map(move |m| ProblemSize::new(n, m).expect("n, m >= 1")))
        .collect();
    sizes
        .par_iter()
        .flat_map_iter(|&size| checks_for(size, s))
        .collect()
}

pub fn verify_cmd(s: &Settings) -> (Emission, bool) {
    let checks = run_checks(s);
    let count = |st: Status| checks.iter().filter(|c| c.status == st).count();
    let passed = count(Status::Fail) == 0;
    let results = json!({
        "passed": passed,
        "summary": {
            "pass": count(Status::Pass),
            "fail": count(Status::Fail),
            "inconclusive": count(Status::Inconclusive),
        },
        "checks": checks,
    });
    let table = Table {
        header: vec!["check", "n", "m", "deviation", "tolerance", "status"],
        rows: checks
            .iter()
            .map(|c| {
                vec![
                    c.name.to_string(),
                    c.n.to_string(),
                    c.m.to_string(),
                    float_cell(c.deviation),
                    float_cell(c.tolerance),
                    c.status.as_str().to_string(),
                ]
            })
            .collect(),
    };
    let record = OutputRecord {
        schema_version: SCHEMA_VERSION,
        command: "verify",
        parameters: json!({"n_max": s.n_max, "m_max": s.m_max}),
        results,
        provenance: Some(json!({
            "seed": s.seed,
            "samples": s.samples,
            "tolerances": {
                "spectrum": s.tol,
                "helstrom": s.helstrom_tol(),
                "montecarlo": s.montecarlo_tol(),
            },
        })),
    };
    (Emission { record, table }, passed)
}
