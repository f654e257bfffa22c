//! Exact integer and rational arithmetic.
//!
//! All combinatorial quantities (binomial ratios, chain invariants, Jordan
//! inner products, probabilities at rational priors) are carried as
//! [`Rational`]. Overlaps between basis vectors are square roots of rationals
//! and live in [`SqrtRational`]; probabilities that pick up a single radical
//! `sqrt(eta (1 - eta))` live in [`QuadSurd`]. Conversion to `f64` only
//! happens at the edges.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision fraction, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// `num / den` as a [`Rational`]. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Binomial coefficient `C(n, k)`; zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc * (n - i) is always divisible by (i + 1)
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, k)` lifted to a [`Rational`].
pub fn binomial_q(n: u64, k: i64) -> Rational {
    Rational::from_integer(BigInt::from(binomial(n, k)))
}

/// Checks `C(n+m, k) = sum_i C(n, i) C(m, k-i)`.
pub fn vandermonde_check(n: u64, m: u64, k: u64) -> bool {
    let lhs = binomial(n + m, k as i64);
    let rhs: BigUint = (0..=k as i64)
        .map(|i| binomial(n, i) * binomial(m, k as i64 - i))
        .sum();
    lhs == rhs
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Exact value of a finite decimal literal such as `0.25`, `-3` or `1.5e-2`.
///
/// Returns `None` for anything else, including exponents beyond 400.
pub fn parse_decimal(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    if exp.abs() > 400 {
        return None;
    }
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole
        .chars()
        .chain(frac.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let num: BigInt = format!("{whole}{frac}").parse().ok()?;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10u32);
    let mut q = if scale >= 0 {
        Rational::from_integer(num * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(num, num_traits::pow(ten, (-scale) as usize))
    };
    if neg {
        q = -q;
    }
    Some(q)
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let num = q.numer();
    let den = q.denom();
    let rn = num.sqrt();
    let rd = den.sqrt();
    if &(&rn * &rn) == num && &(&rd * &rd) == den {
        Some(Rational::new(rn, rd))
    } else {
        None
    }
}

/// `sign * sqrt(square)` with `square >= 0`, held exactly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SqrtRational {
    sign: i8,
    square: Rational,
}

impl SqrtRational {
    pub fn zero() -> Self {
        Self {
            sign: 0,
            square: Rational::zero(),
        }
    }

    pub fn one() -> Self {
        Self {
            sign: 1,
            square: Rational::one(),
        }
    }

    /// `sign * sqrt(square)`. Returns `None` for a negative `square` or a
    /// sign outside `{-1, 0, 1}`.
    pub fn new(sign: i8, square: Rational) -> Option<Self> {
        if square.is_negative() || !(-1..=1).contains(&sign) {
            return None;
        }
        if square.is_zero() || sign == 0 {
            return Some(Self::zero());
        }
        Some(Self { sign, square })
    }

    /// Positive square root of a nonnegative rational.
    pub fn sqrt_of(square: Rational) -> Option<Self> {
        Self::new(1, square)
    }

    pub fn from_rational(q: &Rational) -> Self {
        let sign = match q.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        };
        Self {
            sign,
            square: q * q,
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn square(&self) -> &Rational {
        &self.square
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// Sum, defined only when both operands share the same radicand or one is
    /// zero.
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(other.clone());
        }
        if other.is_zero() {
            return Some(self.clone());
        }
        if self.square != other.square {
            return None;
        }
        let coeff = self.sign + other.sign;
        match coeff {
            0 => Some(Self::zero()),
            // (+-2) sqrt(q) = +- sqrt(4q)
            c => Some(Self {
                sign: c.signum(),
                square: &self.square * int(4),
            }),
        }
    }

    /// The value as a rational, when the radicand is a perfect square.
    pub fn as_rational(&self) -> Option<Rational> {
        rational_sqrt(&self.square).map(|r| if self.sign < 0 { -r } else { r })
    }

    pub fn to_f64(&self) -> f64 {
        f64::from(self.sign) * to_f64(&self.square).sqrt()
    }
}

impl Mul for &SqrtRational {
    type Output = SqrtRational;

    fn mul(self, rhs: &SqrtRational) -> SqrtRational {
        SqrtRational::new(self.sign * rhs.sign, &self.square * &rhs.square)
            .expect("product of nonnegative squares")
    }
}

impl Neg for SqrtRational {
    type Output = SqrtRational;

    fn neg(self) -> SqrtRational {
        SqrtRational {
            sign: -self.sign,
            square: self.square,
        }
    }
}

impl fmt::Display for SqrtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let sign = if self.sign < 0 { "-" } else { "" };
        write!(f, "{sign}sqrt({})", self.square)
    }
}

/// `rational + coeff * sqrt(radicand)` with `radicand >= 0`.
///
/// Perfect-square radicands are folded into the rational part on
/// construction, so `coeff == 0` iff the value is rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadSurd {
    rational: Rational,
    coeff: Rational,
    radicand: Rational,
}

impl QuadSurd {
    pub fn from_rational(q: Rational) -> Self {
        Self {
            rational: q,
            coeff: Rational::zero(),
            radicand: Rational::zero(),
        }
    }

    /// Panics on a negative radicand.
    ///
    /// The radicand is normalised to a square-free integer (square factors
    /// are moved into `coeff`), so equal values over equal radicals compare
    /// equal structurally.
    pub fn new(rational: Rational, coeff: Rational, radicand: Rational) -> Self {
        assert!(!radicand.is_negative(), "negative radicand {radicand}");
        if coeff.is_zero() || radicand.is_zero() {
            return Self::from_rational(rational);
        }
        if let Some(root) = rational_sqrt(&radicand) {
            return Self::from_rational(rational + coeff * root);
        }
        // sqrt(p/q) = sqrt(p q) / q, then pull squares out of p q
        let (p_out, p_in) = split_square(radicand.numer());
        let (q_out, q_in) = split_square(radicand.denom());
        let coeff = coeff * Rational::new(p_out, q_out * &q_in);
        let radicand = Rational::from_integer(p_in * q_in);
        Self {
            rational,
            coeff,
            radicand,
        }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.coeff.is_zero().then(|| self.rational.clone())
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.rational) + to_f64(&self.coeff) * to_f64(&self.radicand).sqrt()
    }

    /// Sum of two surds over the same radicand (or where either is rational).
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        let radicand = match (self.coeff.is_zero(), other.coeff.is_zero()) {
            (true, _) => other.radicand.clone(),
            (_, true) => self.radicand.clone(),
            _ if self.radicand == other.radicand => self.radicand.clone(),
            _ => return None,
        };
        Some(Self::new(
            &self.rational + &other.rational,
            &self.coeff + &other.coeff,
            radicand,
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.checked_add(&other.clone().neg())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(
            &self.rational * factor,
            &self.coeff * factor,
            self.radicand.clone(),
        )
    }

    /// Exact sign of the value.
    pub fn signum(&self) -> Ordering {
        let a = self.rational.numer().sign();
        let b = self.coeff.numer().sign();
        match (a, b) {
            (Sign::NoSign, s) | (s, Sign::NoSign) => sign_to_ordering(s),
            (sa, sb) if sa == sb => sign_to_ordering(sa),
            // opposite signs: compare a^2 with b^2 r
            (sa, _) => {
                let lhs = &self.rational * &self.rational;
                let rhs = &self.coeff * &self.coeff * &self.radicand;
                match lhs.cmp(&rhs) {
                    Ordering::Greater => sign_to_ordering(sa),
                    Ordering::Equal => Ordering::Equal,
                    Ordering::Less => sign_to_ordering(sa).reverse(),
                }
            }
        }
    }

    /// Exact comparison, when both surds share a radicand.
    pub fn checked_cmp(&self, other: &Self) -> Option<Ordering> {
        self.checked_sub(other).map(|d| d.signum())
    }
}

/// Writes `x = a^2 b` with `b` free of square factors below `10^6` (and not
/// itself a perfect square), returning `(a, b)`.
fn split_square(x: &BigInt) -> (BigInt, BigInt) {
    let mut outside = BigInt::one();
    let mut inside = x.clone();
    let mut d = BigInt::from(2u32);
    let limit = BigInt::from(1_000_000u32);
    while &d * &d <= inside && d <= limit {
        let dd = &d * &d;
        while (&inside % &dd).is_zero() {
            inside /= &dd;
            outside *= &d;
        }
        d += 1u32;
    }
    let root = inside.sqrt();
    if &root * &root == inside {
        outside *= root;
        inside = BigInt::one();
    }
    (outside, inside)
}

fn sign_to_ordering(s: Sign) -> Ordering {
    match s {
        Sign::Minus => Ordering::Less,
        Sign::NoSign => Ordering::Equal,
        Sign::Plus => Ordering::Greater,
    }
}

impl Neg for QuadSurd {
    type Output = QuadSurd;

    fn neg(self) -> QuadSurd {
        QuadSurd {
            rational: -self.rational,
            coeff: -self.coeff,
            radicand: self.radicand,
        }
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_zero() {
            return write!(f, "{}", self.rational);
        }
        write!(
            f,
            "{} + ({})*sqrt({})",
            self.rational, self.coeff, self.radicand
        )
    }
}
