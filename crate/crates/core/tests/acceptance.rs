//! Acceptance suite. Every criterion prints one `PASS` or `FAIL` line; the
//! process exits nonzero if any criterion fails.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Signed;
use progdisc::chains::{build_chain_pair, chain_size, invariant_s, verify_mirror};
use progdisc::discrim::{min_error, success_bounds, unambiguous, validity_interval};
use progdisc::exactnum::{int, rat, to_f64};
use progdisc::jordan::{kappa_closed, kappa_from_invariants, multiplicity, spectrum};
use progdisc::oracle::{global_jordan_svd, helstrom_numeric, rho_exact, rho_montecarlo};
use progdisc::reference;
use progdisc::{BasisVector, Bracket, Priors, ProblemSize, Rational, Side};

type Criterion = (&'static str, Box<dyn FnOnce() -> Outcome>);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn size(n: u32, m: u32) -> ProblemSize {
    ProblemSize::new(n, m).unwrap()
}

fn exact(p: i64, q: i64) -> Priors {
    Priors::exact(rat(p, q)).unwrap()
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let took = start.elapsed();
    if let Some(limit) = limit {
        if took > limit {
            out.ok = false;
        }
        out.detail = format!("{}; {:.2?} (limit {:?})", out.detail, took, limit);
    }
    out
}

fn invariant_goldens() -> Outcome {
    let s = size(4, 3);
    let bad: Vec<u32> = (4..=7)
        .filter(|&t| invariant_s(t, s).unwrap() != rat(22, 35))
        .collect();
    outcome(
        bad.is_empty(),
        format!("S_N = 22/35 for N in 4..=7, mismatches at {bad:?}"),
    )
}

fn one_data_equal_prior() -> Outcome {
    let bad: Vec<u32> = (1..=10)
        .filter(|&n| {
            unambiguous(size(n, 1), &exact(1, 2)).p_success.exact()
                != Some(reference::one_data_equal_prior_success(n))
        })
        .collect();
    let first = unambiguous(size(1, 1), &exact(1, 2)).p_success.exact();
    outcome(
        bad.is_empty() && first == Some(rat(1, 6)),
        format!(
            "P(1/2) = n/(3(n+1)) for n = 1..10, mismatches at {bad:?}; n=1 gives {}",
            first.map(|q| q.to_string()).unwrap_or_default()
        ),
    )
}

fn small_program_families() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut exact_ok = true;
    let mut off = Vec::new();
    for m in 1..=10 {
        for (n, form) in [
            (1, reference::one_program_success(m)),
            (2, reference::two_program_success(m)),
        ] {
            let s = size(n, m);
            let half = unambiguous(s, &exact(1, 2)).p_success;
            exact_ok &= half.surd.as_ref() == Some(&form.exact(&rat(1, 2)));
            exact_ok &= half.exact().is_some();
            let quarter = unambiguous(s, &Priors::float(0.25).unwrap());
            let dev = (quarter.p_success.float - form.float(0.25)).abs();
            if dev > 1e-12 {
                off.push(format!(
                    "(n={n}, m={m}, in validity interval: {})",
                    quarter.eta_in_validity
                ));
            }
            worst = worst.max(dev);
        }
    }
    outcome(
        exact_ok && worst <= 1e-12,
        format!(
            "n in {{1,2}}, m = 1..10: exact at 1/2 = {exact_ok}, max deviation at 1/4 = {worst:.2e}, off at {off:?}"
        ),
    )
}

fn one_program_error() -> Outcome {
    let worst = (1..=10)
        .map(|m| {
            (min_error(size(1, m), &exact(1, 2)).float
                - reference::one_program_equal_prior_error(m))
            .abs()
        })
        .fold(0.0, f64::max);
    outcome(
        worst <= 1e-12,
        format!("m = 1..10, max deviation {worst:.2e}"),
    )
}

fn one_data_error() -> Outcome {
    let worst = (1..=10)
        .map(|n| {
            (min_error(size(n, 1), &exact(1, 2)).float - reference::one_data_equal_prior_error(n))
                .abs()
        })
        .fold(0.0, f64::max);
    let far = min_error(size(200, 1), &exact(1, 2)).float;
    let gap = (far - reference::ONE_DATA_ERROR_LIMIT).abs();
    outcome(
        worst <= 1e-12 && gap <= 2e-3,
        format!("n = 1..10 max deviation {worst:.2e}; n=200 distance to 1/6 = {gap:.2e}"),
    )
}

fn validity_golden() -> Outcome {
    let got = validity_interval(size(1, 1));
    outcome(
        got == (rat(1, 5), rat(4, 5)),
        format!("[{}, {}]", got.0, got.1),
    )
}

fn bracket_set(v: &BasisVector) -> BTreeSet<Bracket> {
    v.brackets().collect()
}

fn set(items: &[(u32, u32, u32)]) -> BTreeSet<Bracket> {
    items
        .iter()
        .map(|&(a, b, c)| Bracket::new(a, b, c))
        .collect()
}

fn worked_chain() -> Outcome {
    let c = build_chain_pair(4, size(4, 1)).unwrap();
    let want_v = [
        set(&[(4, 0, 0), (3, 1, 0)]),
        set(&[(0, 0, 4)]),
        set(&[(1, 0, 3), (0, 1, 3)]),
        set(&[(3, 0, 1), (2, 1, 1)]),
        set(&[(2, 0, 2), (1, 1, 2)]),
    ];
    let want_vp = [
        set(&[(0, 0, 4), (0, 1, 3)]),
        set(&[(4, 0, 0)]),
        set(&[(3, 0, 1), (3, 1, 0)]),
        set(&[(1, 0, 3), (1, 1, 2)]),
        set(&[(2, 0, 2), (2, 1, 1)]),
    ];
    let v_ok = c.elements_v().iter().map(bracket_set).eq(want_v);
    let vp_ok = c.elements_vp().iter().map(bracket_set).eq(want_vp);
    let mirror = verify_mirror(&c);
    outcome(
        v_ok && vp_ok && mirror,
        format!("n=4, m=1, N=4: v chain {v_ok}, v' chain {vp_ok}, mirror {mirror}"),
    )
}

fn global_svd() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut count_ok = true;
    for n in 1..=6 {
        for m in 1..=6 {
            let s = size(n, m);
            let sv = global_jordan_svd(s);
            let want = spectrum(s).abs_values_f64();
            count_ok &= sv.len() == want.len();
            for (a, b) in sv.iter().zip(&want) {
                worst = worst.max((a - b).abs());
            }
        }
    }
    outcome(
        count_ok && worst <= 1e-10,
        format!("36 sizes, max deviation {worst:.2e}"),
    )
}

fn helstrom_grid() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in 1..=5 {
        for m in 1..=5 {
            let s = size(n, m);
            for i in 0..=10 {
                let p = exact(i, 10);
                worst = worst.max((helstrom_numeric(s, &p) - min_error(s, &p).float).abs());
            }
        }
    }
    outcome(
        worst <= 1e-9,
        format!("n, m <= 5, 11 priors, max deviation {worst:.2e}"),
    )
}

fn montecarlo() -> Outcome {
    let s = size(1, 1);
    let worst = [Side::H1, Side::H2]
        .into_iter()
        .map(|side| {
            rho_montecarlo(side, s, 1_000_000, 42)
                .unwrap()
                .max_abs_diff(&rho_exact(side, s))
        })
        .fold(0.0, f64::max);
    outcome(
        worst <= 5e-3,
        format!("n=m=1, 10^6 samples, seed 42, max entry deviation {worst:.2e}"),
    )
}

fn dimension_sums() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=12 {
        for m in 1..=12 {
            let s = size(n, m);
            let chains: u64 = (0..=s.max_total())
                .map(|t| chain_size(t, s).unwrap() as u64)
                .sum();
            let (n64, m64) = (n as u64, m as u64);
            let identity = 2 * s.subspace_dim() - s.intersection_dim() == s.total_dim()
                && s.total_dim() == 2 * n64 * n64 + 2 * n64 * m64 + 2 * n64 + m64 + 1;
            if chains != s.subspace_dim() || !identity {
                bad.push((n, m));
            }
        }
    }
    outcome(bad.is_empty(), format!("n, m <= 12, failures {bad:?}"))
}

fn multiplicity_sums() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=12 {
        for m in 1..=12 {
            let s = size(n, m);
            let total: u64 = (0..=n).map(|k| multiplicity(k, s).unwrap()).sum();
            let sp = spectrum(s);
            let units: u64 = sp
                .entries
                .iter()
                .filter(|e| e.kappa.abs() == int(1))
                .map(|e| e.multiplicity)
                .sum();
            if total != s.subspace_dim() || units != s.intersection_dim() {
                bad.push((n, m));
            }
        }
    }
    outcome(bad.is_empty(), format!("n, m <= 12, failures {bad:?}"))
}

fn kappa_routes() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=8 {
        for m in 1..=8 {
            let s = size(n, m);
            for k in 1..=n {
                if kappa_closed(k, s).unwrap() != kappa_from_invariants(k, s).unwrap() {
                    bad.push((n, m, k));
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("all k, n, m <= 8, mismatches {bad:?}"),
    )
}

fn error_vs_failure() -> Outcome {
    let mut worst = f64::NEG_INFINITY;
    for n in 1..=8 {
        for m in 1..=8 {
            let s = size(n, m);
            for i in 0..=1000 {
                let p = Priors::float(i as f64 / 1000.0).unwrap();
                let gap = min_error(s, &p).float - 0.5 * unambiguous(s, &p).q_l.float;
                worst = worst.max(gap);
            }
        }
    }
    outcome(
        worst <= 0.0,
        format!("n, m <= 8, 1001 priors, max of P_E - Q_L/2 = {worst:.2e}"),
    )
}

fn strict_bounds() -> Outcome {
    let mut touching = BTreeSet::new();
    let mut crossing = BTreeSet::new();
    for n in 1..=8 {
        for m in 1..=8 {
            let s = size(n, m);
            let (lo, hi) = validity_interval(s);
            for i in 1..40 {
                let eta: Rational = &lo + (&hi - &lo) * rat(i, 40);
                let p = Priors::exact(eta).unwrap();
                let value = unambiguous(s, &p).p_success.surd.unwrap();
                let (lower, upper) = success_bounds(s, &p);
                let below = lower.surd.unwrap().checked_cmp(&value).unwrap();
                let above = value.checked_cmp(&upper.surd.unwrap()).unwrap();
                match (below, above) {
                    (Ordering::Less, Ordering::Less) => {}
                    (Ordering::Greater, _) | (_, Ordering::Greater) => {
                        crossing.insert((n, m));
                    }
                    _ => {
                        touching.insert((n, m));
                    }
                }
            }
        }
    }
    outcome(
        touching.is_empty() && crossing.is_empty(),
        format!(
            "n, m <= 8, 39 interior priors each: sizes with P equal to a bound {touching:?}, sizes outside the bounds {crossing:?}"
        ),
    )
}

fn large_copy_limit() -> Outcome {
    let r = unambiguous(size(40, 40), &exact(1, 2));
    let p = r.p_success.exact();
    let ok = p.as_ref().is_some_and(|q| *q > rat(9, 10));
    outcome(
        ok,
        format!(
            "n=m=40: P(1/2) = {:.6} (exact: {})",
            to_f64(&p.unwrap_or_default()),
            ok
        ),
    )
}

fn main() -> ExitCode {
    let second = Some(Duration::from_secs(1));
    let minute = Some(Duration::from_secs(60));
    let criteria: Vec<Criterion> = vec![
        (
            "1.1 invariant S_N golden",
            Box::new(move || timed(second, invariant_goldens)),
        ),
        (
            "1.2 equal-prior success, one data copy",
            Box::new(|| timed(None, one_data_equal_prior)),
        ),
        (
            "1.3 one and two program copy success families",
            Box::new(|| timed(None, small_program_families)),
        ),
        (
            "1.4 equal-prior error, one program copy",
            Box::new(|| timed(None, one_program_error)),
        ),
        (
            "1.5 equal-prior error, one data copy and 1/6 limit",
            Box::new(|| timed(None, one_data_error)),
        ),
        (
            "1.6 validity interval n=m=1",
            Box::new(|| timed(None, validity_golden)),
        ),
        (
            "1.7 worked chain n=4, m=1, N=4",
            Box::new(|| timed(None, worked_chain)),
        ),
        (
            "2.1 global SVD matches spectrum",
            Box::new(move || timed(minute, global_svd)),
        ),
        (
            "2.2 dense Helstrom matches closed form",
            Box::new(|| timed(None, helstrom_grid)),
        ),
        (
            "2.3 Monte-Carlo mean state",
            Box::new(move || timed(minute, montecarlo)),
        ),
        (
            "3.1 chain sizes and dimension identity",
            Box::new(|| timed(None, dimension_sums)),
        ),
        (
            "3.2 multiplicities and unit count",
            Box::new(|| timed(None, multiplicity_sums)),
        ),
        (
            "3.3 closed kappa equals invariant kappa",
            Box::new(|| timed(None, kappa_routes)),
        ),
        (
            "3.4 P_E <= Q_L / 2",
            Box::new(|| timed(None, error_vs_failure)),
        ),
        (
            "3.5 P strictly inside K-series bounds",
            Box::new(|| timed(None, strict_bounds)),
        ),
        (
            "3.6 P(1/2) > 0.9 at n=m=40",
            Box::new(|| timed(Some(Duration::from_secs(5)), large_copy_limit)),
        ),
    ];

    let mut failed = 0;
    for (name, run) in criteria {
        let out = run();
        if !out.ok {
            failed += 1;
        }
        println!(
            "{} {name}: {}",
            if out.ok { "PASS" } else { "FAIL" },
            out.detail
        );
    }
    println!("acceptance: {failed} failed");
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
