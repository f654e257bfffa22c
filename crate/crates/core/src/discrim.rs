//! Optimal unambiguous and minimum-error discrimination of the averaged
//! inputs.
//!
//! In the Jordan basis both mixed states are uniform (`alpha_i = beta_i =
//! 1/D`, `D = (n+1)(n+m+1)`) and decompose into independent two-dimensional
//! pairs with overlap `kappa_k`, repeated `2n+m+1-2k` times. Both strategies
//! then reduce to sums over the spectrum.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{int, parse_decimal, rat, rational_sqrt, to_f64, QuadSurd, Rational};
use crate::jordan::{spectrum, JordanSpectrum};
use crate::symbasis::ProblemSize;

/// Prior probability `eta1` of `rho_1`, either exact or floating.
#[derive(Debug, Clone, PartialEq)]
pub enum Eta {
    Exact(Rational),
    Float(f64),
}

/// Priors `eta1` (of `rho_1`) and `eta2 = 1 - eta1` (of `rho_2`).
#[derive(Debug, Clone, PartialEq)]
pub struct Priors {
    eta1: Eta,
}

impl Priors {
    pub fn exact(eta1: Rational) -> Result<Self> {
        if eta1.is_negative() || eta1 > Rational::one() {
            return Err(Error::InvalidPrior(eta1.to_string()));
        }
        Ok(Self {
            eta1: Eta::Exact(eta1),
        })
    }

    pub fn float(eta1: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&eta1) {
            return Err(Error::InvalidPrior(eta1.to_string()));
        }
        Ok(Self {
            eta1: Eta::Float(eta1),
        })
    }

    pub fn eta(&self) -> &Eta {
        &self.eta1
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.eta1, Eta::Exact(_))
    }

    pub fn eta1_exact(&self) -> Option<&Rational> {
        match &self.eta1 {
            Eta::Exact(q) => Some(q),
            Eta::Float(_) => None,
        }
    }

    pub fn eta1(&self) -> f64 {
        match &self.eta1 {
            Eta::Exact(q) => to_f64(q),
            Eta::Float(x) => *x,
        }
    }

    pub fn eta2(&self) -> f64 {
        match &self.eta1 {
            Eta::Exact(q) => to_f64(&(Rational::one() - q)),
            Eta::Float(x) => 1.0 - x,
        }
    }

    /// `c = eta2 - eta1`.
    pub fn c(&self) -> f64 {
        match &self.eta1 {
            Eta::Exact(q) => to_f64(&(Rational::one() - q * int(2))),
            Eta::Float(x) => 1.0 - 2.0 * x,
        }
    }

    /// `eta (1 - eta)` exactly, when available.
    fn product_exact(&self) -> Option<Rational> {
        self.eta1_exact().map(|q| q * (Rational::one() - q))
    }
}

impl FromStr for Priors {
    type Err = Error;

    /// `"p/q"` and finite decimals give an exact prior; anything else that
    /// parses as `f64` gives a floating one.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let parse = |t: &str| {
                t.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::InvalidArgument(format!("bad fraction literal {s:?}")))
            };
            let (p, q) = (parse(p)?, parse(q)?);
            if q.is_zero() {
                return Err(Error::InvalidArgument(format!("zero denominator in {s:?}")));
            }
            return Self::exact(Rational::new(p, q));
        }
        if let Some(q) = parse_decimal(s) {
            return Self::exact(q);
        }
        let x: f64 = s
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad prior {s:?}")))?;
        Self::float(x)
    }
}

impl fmt::Display for Priors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.eta1 {
            Eta::Exact(q) => write!(f, "{q}"),
            Eta::Float(x) => write!(f, "{x}"),
        }
    }
}

/// A probability: always available as `f64`, and exactly (as
/// `a + b sqrt(r)`) when the prior is exact.
#[derive(Debug, Clone, PartialEq)]
pub struct Value {
    pub float: f64,
    pub surd: Option<QuadSurd>,
}

impl Value {
    pub fn from_float(float: f64) -> Self {
        Self { float, surd: None }
    }

    pub fn from_surd(surd: QuadSurd) -> Self {
        Self {
            float: surd.to_f64(),
            surd: Some(surd),
        }
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::from_surd(QuadSurd::from_rational(q))
    }

    /// The exact rational value, if the quantity is rational.
    pub fn exact(&self) -> Option<Rational> {
        self.surd.as_ref().and_then(QuadSurd::as_rational)
    }

    /// `1 - self`.
    pub fn complement(&self) -> Self {
        match &self.surd {
            Some(s) => Self::from_surd(
                QuadSurd::from_rational(Rational::one())
                    .checked_sub(s)
                    .expect("rational minus surd"),
            ),
            None => Self::from_float(1.0 - self.float),
        }
    }

    /// Exact comparison when both sides are exact over a common radical,
    /// otherwise by `f64`.
    pub fn compare(&self, other: &Self) -> Option<Ordering> {
        match (&self.surd, &other.surd) {
            (Some(a), Some(b)) => a
                .checked_cmp(b)
                .or_else(|| self.float.partial_cmp(&other.float)),
            _ => self.float.partial_cmp(&other.float),
        }
    }
}

/// Which line of the per-pair optimum is active.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Left,
    Middle,
    Right,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Left => "left",
            Branch::Middle => "middle",
            Branch::Right => "right",
        })
    }
}

/// `[n^2 / ((n+m)^2 + n^2), (n+m)^2 / ((n+m)^2 + n^2)]`: the priors for which
/// every non-intersection pair sits on its middle branch.
pub fn validity_interval(size: ProblemSize) -> (Rational, Rational) {
    let (n, m) = (size.n() as i64, size.m() as i64);
    let den = (n + m) * (n + m) + n * n;
    (rat(n * n, den), rat((n + m) * (n + m), den))
}

pub fn in_validity(size: ProblemSize, priors: &Priors) -> bool {
    let (lo, hi) = validity_interval(size);
    match priors.eta() {
        Eta::Exact(q) => *q >= lo && *q <= hi,
        Eta::Float(x) => *x >= to_f64(&lo) && *x <= to_f64(&hi),
    }
}

/// Optimal failure probability of one Jordan pair with overlap `kappa` and
/// weights `alpha` (in `rho_1`) and `beta` (in `rho_2`).
pub fn q_pair_opt(
    kappa: &Rational,
    priors: &Priors,
    alpha: &Rational,
    beta: &Rational,
) -> Result<(Value, Branch)> {
    if kappa.abs() > Rational::one() {
        return Err(Error::InvalidArgument(format!(
            "|kappa| = |{kappa}| exceeds 1"
        )));
    }
    if !alpha.is_positive() || !beta.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "pair weights must be positive, got alpha={alpha}, beta={beta}"
        )));
    }
    let k2 = kappa * kappa;
    let lower = beta * &k2 / (alpha + beta * &k2);
    let upper = beta / (beta + alpha * &k2);

    let branch = match priors.eta() {
        Eta::Exact(eta) if *eta <= lower => Branch::Left,
        Eta::Exact(eta) if *eta <= upper => Branch::Middle,
        Eta::Exact(_) => Branch::Right,
        Eta::Float(eta) if *eta <= to_f64(&lower) => Branch::Left,
        Eta::Float(eta) if *eta <= to_f64(&upper) => Branch::Middle,
        Eta::Float(_) => Branch::Right,
    };

    let value = match priors.eta() {
        Eta::Exact(eta) => {
            let one_minus = Rational::one() - eta;
            Value::from_surd(match branch {
                Branch::Left => QuadSurd::from_rational(eta * alpha + one_minus * beta * &k2),
                Branch::Right => QuadSurd::from_rational(eta * alpha * &k2 + one_minus * beta),
                Branch::Middle => QuadSurd::new(
                    Rational::zero(),
                    kappa.abs() * int(2),
                    eta * one_minus * alpha * beta,
                ),
            })
        }
        Eta::Float(eta) => {
            let (a, b, k2, k) = (
                to_f64(alpha),
                to_f64(beta),
                to_f64(&k2),
                to_f64(&kappa.abs()),
            );
            Value::from_float(match branch {
                Branch::Left => eta * a + (1.0 - eta) * b * k2,
                Branch::Right => eta * a * k2 + (1.0 - eta) * b,
                Branch::Middle => 2.0 * (eta * (1.0 - eta) * a * b).sqrt() * k,
            })
        }
    };
    Ok((value, branch))
}

/// Per-pair contribution in a discrimination report.
#[derive(Debug, Clone, PartialEq)]
pub struct PairOutcome {
    pub k: u32,
    pub kappa: Rational,
    pub multiplicity: u64,
    /// Failure probability of a single pair.
    pub q: Value,
    pub branch: Branch,
}

#[derive(Debug, Clone, PartialEq)]
pub struct UnambiguousOutcome {
    pub q_l: Value,
    pub p_success: Value,
    pub eta_in_validity: bool,
    pub pairs: Vec<PairOutcome>,
}

fn weight(size: ProblemSize) -> Rational {
    rat(1, size.subspace_dim() as i64)
}

fn sum_values(values: impl IntoIterator<Item = (Value, u64)>, exact: bool) -> Value {
    let mut float = 0.0;
    let mut surd = exact.then(|| QuadSurd::from_rational(Rational::zero()));
    for (v, mult) in values {
        float += v.float * mult as f64;
        surd = match (surd, &v.surd) {
            (Some(acc), Some(s)) => acc.checked_add(&s.scale(&int(mult as i64))),
            _ => None,
        };
    }
    match surd {
        Some(s) => Value::from_surd(s),
        None => Value::from_float(float),
    }
}

/// Total failure probability `Q_L = sum_k mult_k Q_k` with each pair at its
/// own optimum, and `P = 1 - Q_L`.
///
/// Inside [`validity_interval`] this is the global optimum; outside it the
/// value is the per-pair bound and `eta_in_validity` is `false`.
pub fn unambiguous(size: ProblemSize, priors: &Priors) -> UnambiguousOutcome {
    unambiguous_from_spectrum(&spectrum(size), priors)
}

pub fn unambiguous_from_spectrum(spec: &JordanSpectrum, priors: &Priors) -> UnambiguousOutcome {
    let w = weight(spec.size);
    let pairs: Vec<PairOutcome> = spec
        .entries
        .iter()
        .map(|e| {
            let (q, branch) = q_pair_opt(&e.kappa, priors, &w, &w).expect("valid spectrum entry");
            PairOutcome {
                k: e.k,
                kappa: e.kappa.clone(),
                multiplicity: e.multiplicity,
                q,
                branch,
            }
        })
        .collect();
    let q_l = sum_values(
        pairs.iter().map(|p| (p.q.clone(), p.multiplicity)),
        priors.is_exact(),
    );
    UnambiguousOutcome {
        p_success: q_l.complement(),
        q_l,
        eta_in_validity: in_validity(spec.size, priors),
        pairs,
    }
}

/// Closed-form success probability valid inside the validity interval:
/// `1 - (2n+m+1)/D - (2 sqrt(eta(1-eta)) / D) sum_{k>=1} mult_k |kappa_k|`.
pub fn success_closed_form(size: ProblemSize, priors: &Priors) -> Value {
    let d = weight(size);
    let spec = spectrum(size);
    let weighted: Rational = spec.entries[1..]
        .iter()
        .map(|e| e.kappa.abs() * int(e.multiplicity as i64))
        .fold(Rational::zero(), |a, b| a + b);
    let head = Rational::one() - int(size.intersection_dim() as i64) * &d;
    surd_in_eta(priors, head, -(weighted * int(2) * d))
}

/// `head + coeff * sqrt(eta (1 - eta))`, exact when the prior is.
fn surd_in_eta(priors: &Priors, head: Rational, coeff: Rational) -> Value {
    match priors.product_exact() {
        Some(prod) => Value::from_surd(QuadSurd::new(head, coeff, prod)),
        None => {
            let r = (priors.eta1() * priors.eta2()).sqrt();
            Value::from_float(to_f64(&head) + to_f64(&coeff) * r)
        }
    }
}

/// `K(n, m) = sum_{k=1}^{n} prod_{t<k} (n-t)/(n+m-t) = sum_{k>=1} |kappa_k|`.
pub fn k_series(size: ProblemSize) -> Rational {
    let (n, m) = (size.n() as i64, size.m() as i64);
    let mut term = Rational::one();
    let mut sum = Rational::zero();
    for t in 0..n {
        term *= rat(n - t, n + m - t);
        sum += &term;
    }
    sum
}

/// `(lower, upper)` bounds on the success probability built from `K(n, m)`:
/// the extreme multiplicities `2n+m-1` and `m+1` replace the actual ones.
pub fn success_bounds(size: ProblemSize, priors: &Priors) -> (Value, Value) {
    let (n, m) = (size.n() as i64, size.m() as i64);
    let d = weight(size);
    let k = k_series(size);
    let head = Rational::one() - int(size.intersection_dim() as i64) * &d;
    let lower = surd_in_eta(priors, head.clone(), -(int(4 * n + 2 * m - 2) * &d * &k));
    let upper = surd_in_eta(priors, head, -(int(2 * m + 2) * &d * &k));
    (lower, upper)
}

/// Minimum (Helstrom) error probability
/// `P_E = (1 - Tr|eta2 rho_2 - eta1 rho_1|) / 2` with
/// `Tr|Lambda| = ((2n+m+1)|c| + sum_{k>=1} mult_k sqrt(1 - (1-c^2) kappa_k^2)) / D`.
pub fn min_error(size: ProblemSize, priors: &Priors) -> Value {
    min_error_from_spectrum(&spectrum(size), priors)
}

pub fn min_error_from_spectrum(spec: &JordanSpectrum, priors: &Priors) -> Value {
    let d = spec.size.subspace_dim() as f64;
    let c = priors.c();
    let mut trace = spec.size.intersection_dim() as f64 * c.abs();
    for e in &spec.entries[1..] {
        let k2 = to_f64(&(&e.kappa * &e.kappa));
        let s = (1.0 - (1.0 - c * c) * k2).sqrt();
        // |c + s| + |c - s| = 2s relies on s >= |c|
        assert!(s >= c.abs() - 1e-12, "s = {s} < |c| = {}", c.abs());
        trace += e.multiplicity as f64 * s;
    }
    let float = 0.5 * (1.0 - trace / d);

    let exact = priors.eta1_exact().and_then(|eta| {
        let c = Rational::one() - eta * int(2);
        let c2 = &c * &c;
        let mut trace = int(spec.size.intersection_dim() as i64) * c.abs();
        for e in &spec.entries[1..] {
            let s2 = Rational::one() - (Rational::one() - &c2) * &e.kappa * &e.kappa;
            trace += rational_sqrt(&s2)? * int(e.multiplicity as i64);
        }
        Some((Rational::one() - trace * weight(spec.size)) / int(2))
    });
    match exact {
        Some(q) => Value::from_rational(q),
        None => Value::from_float(float),
    }
}

/// Everything reported for one `(size, priors)` point.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscriminationReport {
    pub size: ProblemSize,
    pub priors: Priors,
    pub q_l: Value,
    pub p_success: Value,
    pub p_error: Value,
    pub validity_interval: (Rational, Rational),
    pub eta_in_validity: bool,
    pub per_pair: Vec<PairOutcome>,
}

pub fn report(size: ProblemSize, priors: &Priors) -> DiscriminationReport {
    let spec = spectrum(size);
    let ua = unambiguous_from_spectrum(&spec, priors);
    DiscriminationReport {
        size,
        priors: priors.clone(),
        q_l: ua.q_l,
        p_success: ua.p_success,
        p_error: min_error_from_spectrum(&spec, priors),
        validity_interval: validity_interval(size),
        eta_in_validity: ua.eta_in_validity,
        per_pair: ua.pairs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn size(n: u32, m: u32) -> ProblemSize {
        ProblemSize::new(n, m).unwrap()
    }

    fn exact(p: i64, q: i64) -> Priors {
        Priors::exact(rat(p, q)).unwrap()
    }

    #[test]
    fn priors_parse() {
        assert_eq!("1/2".parse::<Priors>().unwrap(), exact(1, 2));
        assert_eq!("0.25".parse::<Priors>().unwrap(), exact(1, 4));
        assert_eq!("1e-1".parse::<Priors>().unwrap(), exact(1, 10));
        assert!("nan".parse::<Priors>().is_err());
        assert!("3/2".parse::<Priors>().is_err());
        assert!("-0.1".parse::<Priors>().is_err());
        assert!("1/0".parse::<Priors>().is_err());
        assert!("abc".parse::<Priors>().is_err());
        let p = exact(1, 4);
        assert_eq!(p.c(), 0.5);
        assert_eq!(p.eta2(), 0.75);
    }

    #[test]
    fn validity_interval_examples() {
        assert_eq!(validity_interval(size(1, 1)), (rat(1, 5), rat(4, 5)));
        for n in 1..=9 {
            assert_eq!(validity_interval(size(n, n)), (rat(1, 5), rat(4, 5)));
        }
        let (lo, hi) = validity_interval(size(1, 10_000));
        assert!(to_f64(&lo) < 1e-7 && to_f64(&hi) > 1.0 - 1e-7);
    }

    #[test]
    fn pair_optimum_examples() {
        let d = rat(1, 18);
        // intersection pair: every branch gives alpha
        for eta in [rat(0, 1), rat(1, 3), rat(1, 2), rat(9, 10)] {
            let p = Priors::exact(eta).unwrap();
            let (q, _) = q_pair_opt(&int(1), &p, &d, &d).unwrap();
            assert_eq!(q.exact(), Some(d.clone()));
        }
        // orthogonal pair
        let (q, b) = q_pair_opt(&int(0), &exact(3, 7), &d, &d).unwrap();
        assert_eq!((q.exact(), b), (Some(int(0)), Branch::Middle));
        // n=2, m=3 first non-trivial pair at equal priors
        let (q, b) = q_pair_opt(&rat(-2, 5), &exact(1, 2), &d, &d).unwrap();
        assert_eq!((q.exact(), b), (Some(rat(1, 45)), Branch::Middle));
        // float path agrees
        let (qf, bf) = q_pair_opt(&rat(-2, 5), &Priors::float(0.5).unwrap(), &d, &d).unwrap();
        assert_eq!(bf, Branch::Middle);
        assert!((qf.float - 1.0 / 45.0).abs() < 1e-15);
        assert!(q_pair_opt(&rat(3, 2), &exact(1, 2), &d, &d).is_err());
        assert!(q_pair_opt(&rat(1, 2), &exact(1, 2), &int(0), &d).is_err());
    }

    #[test]
    fn pair_branches_follow_eta() {
        let d = rat(1, 18);
        let kappa = rat(-2, 5);
        // c = (4/25)/(1 + 4/25) = 4/29, d = 25/29
        assert_eq!(
            q_pair_opt(&kappa, &exact(1, 10), &d, &d).unwrap().1,
            Branch::Left
        );
        assert_eq!(
            q_pair_opt(&kappa, &exact(4, 29), &d, &d).unwrap().1,
            Branch::Left
        );
        assert_eq!(
            q_pair_opt(&kappa, &exact(25, 29), &d, &d).unwrap().1,
            Branch::Middle
        );
        assert_eq!(
            q_pair_opt(&kappa, &exact(9, 10), &d, &d).unwrap().1,
            Branch::Right
        );
        // the three lines agree at the boundaries
        let at = |p: Priors| q_pair_opt(&kappa, &p, &d, &d).unwrap().0.float;
        let c = 4.0 / 29.0;
        assert!(
            (at(Priors::float(c - 1e-12).unwrap()) - at(Priors::float(c + 1e-12).unwrap())).abs()
                < 1e-10
        );
    }

    #[test]
    fn equal_prior_success_one_data_copy() {
        for n in 1..=10i64 {
            let r = unambiguous(size(n as u32, 1), &exact(1, 2));
            assert_eq!(r.p_success.exact(), Some(rat(n, 3 * (n + 1))), "n={n}");
            assert!(r.eta_in_validity);
        }
    }

    #[test]
    fn closed_form_matches_pairwise_inside_interval() {
        for n in 1..=6 {
            for m in 1..=6 {
                let s = size(n, m);
                let (lo, hi) = validity_interval(s);
                for i in 0..=20 {
                    let eta = &lo + (&hi - &lo) * rat(i, 20);
                    let p = Priors::exact(eta).unwrap();
                    let a = unambiguous(s, &p).p_success;
                    let b = success_closed_form(s, &p);
                    assert_eq!(a.surd, b.surd, "{s} i={i}");
                    let pf = Priors::float(p.eta1()).unwrap();
                    let af = unambiguous(s, &pf).p_success.float;
                    assert!((af - b.float).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn k_series_examples() {
        for m in 1..=8 {
            assert_eq!(k_series(size(1, m)), rat(1, m as i64 + 1));
        }
        assert_eq!(k_series(size(2, 3)), rat(1, 2));
    }

    #[test]
    fn min_error_examples() {
        for m in 1..=10 {
            let pe = min_error(size(1, m), &exact(1, 2)).float;
            let mf = m as f64;
            assert!((pe - 0.5 * (1.0 - 0.5 * (mf / (mf + 2.0)).sqrt())).abs() < 1e-12);
        }
        let pe = min_error(size(2, 1), &exact(1, 2)).float;
        let expected = 0.5 * (1.0 - (2f64.sqrt() + 5f64.sqrt()) / 9.0);
        assert!((pe - expected).abs() < 1e-12);
        for p in [exact(0, 1), exact(1, 1)] {
            assert_eq!(min_error(size(3, 2), &p).exact(), Some(int(0)));
        }
        assert_eq!(
            min_error(size(3, 2), &Priors::float(1.0).unwrap()).float,
            0.0
        );
    }

    #[test]
    fn outside_validity_is_flagged() {
        let r = unambiguous(size(1, 1), &Priors::float(0.05).unwrap());
        assert!(!r.eta_in_validity);
        assert_eq!(r.pairs[1].branch, Branch::Left);
        let r = unambiguous(size(1, 1), &exact(1, 5));
        assert!(r.eta_in_validity);
    }

    #[test]
    fn intersection_floor() {
        for n in 1..=5 {
            for m in 1..=5 {
                let s = size(n, m);
                let floor = s.intersection_dim() as f64 / s.subspace_dim() as f64;
                for i in 0..=50 {
                    let q = unambiguous(s, &Priors::float(i as f64 / 50.0).unwrap())
                        .q_l
                        .float;
                    assert!(q >= floor - 1e-15);
                }
            }
        }
    }

    #[test]
    fn report_combines_everything() {
        let r = report(size(2, 3), &exact(1, 2));
        assert_eq!(r.per_pair.len(), 3);
        assert_eq!(r.validity_interval, validity_interval(size(2, 3)));
        assert_eq!(
            r.p_success.exact().unwrap() + r.q_l.exact().unwrap(),
            int(1)
        );
        assert!(r.p_error.float <= 0.5 * r.q_l.float);
    }

    proptest! {
        #[test]
        fn symmetric_in_eta(n in 1u32..7, m in 1u32..7, eta in 0.0f64..=1.0) {
            let s = size(n, m);
            let a = Priors::float(eta).unwrap();
            let b = Priors::float(1.0 - eta).unwrap();
            prop_assert!((unambiguous(s, &a).q_l.float - unambiguous(s, &b).q_l.float).abs() < 1e-12);
            prop_assert!((min_error(s, &a).float - min_error(s, &b).float).abs() < 1e-12);
        }

        #[test]
        fn report_ranges(n in 1u32..7, m in 1u32..7, eta in 0.0f64..=1.0) {
            let r = report(size(n, m), &Priors::float(eta).unwrap());
            prop_assert!((0.0..=0.5 + 1e-15).contains(&r.p_error.float));
            prop_assert!((0.0..=1.0 + 1e-15).contains(&r.q_l.float));
            prop_assert!((r.p_success.float + r.q_l.float - 1.0).abs() < 1e-15);
            prop_assert!(r.p_error.float <= 0.5 * r.q_l.float + 1e-15);
        }
    }
}
