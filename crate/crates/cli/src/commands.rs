use progdisc::chains::{all_chain_pairs, invariant_s, verify_mirror};
use progdisc::discrim::{report, DiscriminationReport, Priors};
use progdisc::exactnum::rat;
use progdisc::jordan::spectrum;
use progdisc::ProblemSize;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::record::{Emission, Number, OutputRecord, Table, SCHEMA_VERSION};
use crate::CliError;

fn record(
    command: &'static str,
    parameters: serde_json::Value,
    results: impl Serialize,
) -> OutputRecord {
    OutputRecord {
        schema_version: SCHEMA_VERSION,
        command,
        parameters,
        results: serde_json::to_value(results).expect("serializable results"),
        provenance: None,
    }
}

#[derive(Serialize)]
struct SpectrumRow {
    k: u32,
    kappa: Number,
    multiplicity: u64,
}

pub fn spectrum_cmd(size: ProblemSize) -> Emission {
    let sp = spectrum(size);
    let rows: Vec<SpectrumRow> = sp
        .entries
        .iter()
        .map(|e| SpectrumRow {
            k: e.k,
            kappa: Number::rational(&e.kappa),
            multiplicity: e.multiplicity,
        })
        .collect();
    let table = Table {
        header: vec!["k", "kappa_exact", "kappa_float", "multiplicity"],
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    r.k.to_string(),
                    r.kappa.exact_cell(),
                    r.kappa.float_cell(),
                    r.multiplicity.to_string(),
                ]
            })
            .collect(),
    };
    let results = json!({
        "rows": rows,
        "total_multiplicity": sp.total_multiplicity(),
        "intersection_dim": size.intersection_dim(),
    });
    Emission {
        record: record("spectrum", json!({"n": size.n(), "m": size.m()}), results),
        table,
    }
}

#[derive(Serialize)]
struct ChainRow {
    total: u32,
    size: usize,
    invariant_s: Number,
    mirror: bool,
    v: Vec<String>,
    v_prime: Vec<String>,
}

pub fn chains_cmd(size: ProblemSize) -> Result<Emission, CliError> {
    let pairs = all_chain_pairs(size).map_err(|e| CliError::Internal(e.to_string()))?;
    let rows: Vec<ChainRow> = pairs
        .iter()
        .map(|c| ChainRow {
            total: c.total(),
            size: c.len(),
            invariant_s: Number::rational(&invariant_s(c.total(), size).expect("total in range")),
            mirror: verify_mirror(c),
            v: c.elements_v().iter().map(|v| v.to_string()).collect(),
            v_prime: c.elements_vp().iter().map(|v| v.to_string()).collect(),
        })
        .collect();
    let table = Table {
        header: vec![
            "total",
            "size",
            "invariant_exact",
            "invariant_float",
            "mirror",
            "v",
            "v_prime",
        ],
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    r.total.to_string(),
                    r.size.to_string(),
                    r.invariant_s.exact_cell(),
                    r.invariant_s.float_cell(),
                    r.mirror.to_string(),
                    r.v.join(" | "),
                    r.v_prime.join(" | "),
                ]
            })
            .collect(),
    };
    Ok(Emission {
        record: record(
            "chains",
            json!({"n": size.n(), "m": size.m()}),
            json!({ "chains": rows }),
        ),
        table,
    })
}

#[derive(Serialize)]
struct PairRow {
    k: u32,
    kappa: Number,
    multiplicity: u64,
    q: Number,
    branch: String,
}

#[derive(Serialize)]
struct ReportOut {
    eta: Number,
    q_l: Number,
    p_success: Number,
    p_error: Number,
    validity_interval: [Number; 2],
    eta_in_validity: bool,
    status: &'static str,
    pairs: Vec<PairRow>,
}

fn eta_number(priors: &Priors) -> Number {
    match priors.eta1_exact() {
        Some(q) => Number::rational(q),
        None => Number::float(priors.eta1()),
    }
}

fn report_out(r: &DiscriminationReport) -> ReportOut {
    ReportOut {
        eta: eta_number(&r.priors),
        q_l: Number::value(&r.q_l),
        p_success: Number::value(&r.p_success),
        p_error: Number::value(&r.p_error),
        validity_interval: [
            Number::rational(&r.validity_interval.0),
            Number::rational(&r.validity_interval.1),
        ],
        eta_in_validity: r.eta_in_validity,
        status: if r.eta_in_validity {
            "optimal"
        } else {
            "per-pair bound"
        },
        pairs: r
            .per_pair
            .iter()
            .map(|p| PairRow {
                k: p.k,
                kappa: Number::rational(&p.kappa),
                multiplicity: p.multiplicity,
                q: Number::value(&p.q),
                branch: p.branch.to_string(),
            })
            .collect(),
    }
}

/// `unambiguous` and `min-error` share one report.
pub fn report_cmd(command: &'static str, size: ProblemSize, priors: &Priors) -> Emission {
    let out = report_out(&report(size, priors));
    let mut row = vec![size.n().to_string(), size.m().to_string()];
    for num in [&out.eta, &out.q_l, &out.p_success, &out.p_error] {
        row.push(num.exact_cell());
        row.push(num.float_cell());
    }
    row.push(out.validity_interval[0].exact_cell());
    row.push(out.validity_interval[1].exact_cell());
    row.push(out.eta_in_validity.to_string());
    let table = Table {
        header: vec![
            "n",
            "m",
            "eta_exact",
            "eta_float",
            "q_l_exact",
            "q_l_float",
            "p_success_exact",
            "p_success_float",
            "p_error_exact",
            "p_error_float",
            "validity_lo",
            "validity_hi",
            "eta_in_validity",
        ],
        rows: vec![row],
    };
    let params = json!({"n": size.n(), "m": size.m(), "eta": priors.to_string()});
    Emission {
        record: record(command, params, out),
        table,
    }
}

#[derive(Serialize)]
struct ScanRow {
    eta: Number,
    q_l: Number,
    p_success: Number,
    p_error: Number,
    eta_in_validity: bool,
}

/// `steps` evenly spaced priors from `from` to `to` (either direction).
pub fn scan_grid(from: &Priors, to: &Priors, steps: usize) -> Result<Vec<Priors>, CliError> {
    if steps < 2 {
        return Err(CliError::Argument(format!(
            "--steps must be at least 2, got {steps}"
        )));
    }
    if from.eta1() == to.eta1() {
        return Err(CliError::Argument(
            "--eta-min and --eta-max must differ".into(),
        ));
    }
    let descending = from.eta1() > to.eta1();
    let (lo, hi) = if descending { (to, from) } else { (from, to) };
    let last = (steps - 1) as i64;
    let mut grid: Vec<Priors> = match (lo.eta1_exact(), hi.eta1_exact()) {
        (Some(a), Some(b)) => (0..=last)
            .map(|i| Priors::exact(a + (b - a) * rat(i, last)).expect("inside [0, 1]"))
            .collect(),
        _ => {
            let (a, b) = (lo.eta1(), hi.eta1());
            (0..=last)
                .map(|i| {
                    let x = if i == last {
                        b
                    } else {
                        a + (b - a) * i as f64 / last as f64
                    };
                    Priors::float(x.clamp(0.0, 1.0)).expect("inside [0, 1]")
                })
                .collect()
        }
    };
    if descending {
        grid.reverse();
    }
    Ok(grid)
}

pub fn scan_cmd(
    size: ProblemSize,
    from: &Priors,
    to: &Priors,
    steps: usize,
) -> Result<Emission, CliError> {
    let grid = scan_grid(from, to, steps)?;
    let rows: Vec<ScanRow> = grid
        .par_iter()
        .map(|p| {
            let r = report(size, p);
            ScanRow {
                eta: eta_number(p),
                q_l: Number::value(&r.q_l),
                p_success: Number::value(&r.p_success),
                p_error: Number::value(&r.p_error),
                eta_in_validity: r.eta_in_validity,
            }
        })
        .collect();
    let table = Table {
        header: vec!["eta", "q_l", "p_success", "p_error", "eta_in_validity"],
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    r.eta.float_cell(),
                    r.q_l.float_cell(),
                    r.p_success.float_cell(),
                    r.p_error.float_cell(),
                    r.eta_in_validity.to_string(),
                ]
            })
            .collect(),
    };
    let params = json!({
        "n": size.n(),
        "m": size.m(),
        "eta_min": from.to_string(),
        "eta_max": to.to_string(),
        "steps": steps,
    });
    Ok(Emission {
        record: record("scan", params, json!({ "rows": rows })),
        table,
    })
}
