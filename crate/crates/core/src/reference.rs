//! Closed forms for special families, kept as independent test targets.
//!
//! Nothing here is used by [`crate::discrim`]; each function is written
//! directly from its family formula rather than from the spectrum.

use crate::exactnum::{rat, to_f64, QuadSurd, Rational};
use num_traits::One;

/// Equal-prior minimum error for one data copy as `n -> infinity`.
pub const ONE_DATA_ERROR_LIMIT: f64 = 1.0 / 6.0;

/// `a + b sqrt(eta (1 - eta))`, the shape shared by the success families.
#[derive(Debug, Clone, PartialEq)]
pub struct SuccessForm {
    pub a: Rational,
    pub b: Rational,
}

impl SuccessForm {
    pub fn exact(&self, eta: &Rational) -> QuadSurd {
        QuadSurd::new(
            self.a.clone(),
            self.b.clone(),
            eta * (Rational::one() - eta),
        )
    }

    pub fn float(&self, eta: f64) -> f64 {
        to_f64(&self.a) + to_f64(&self.b) * (eta * (1.0 - eta)).sqrt()
    }
}

/// One program copy, `m` data copies:
/// `1 - (m+3)/(2(m+2)) - sqrt(eta(1-eta))/(m+2)`.
pub fn one_program_success(m: u32) -> SuccessForm {
    let m = m as i64;
    SuccessForm {
        a: Rational::one() - rat(m + 3, 2 * (m + 2)),
        b: -rat(1, m + 2),
    }
}

/// Two program copies, `m` data copies:
/// `1 - (m+5)/(3(m+3)) - 4(m+4)/(3(m+2)(m+3)) sqrt(eta(1-eta))`.
pub fn two_program_success(m: u32) -> SuccessForm {
    let m = m as i64;
    SuccessForm {
        a: Rational::one() - rat(m + 5, 3 * (m + 3)),
        b: -rat(4 * (m + 4), 3 * (m + 2) * (m + 3)),
    }
}

/// `n` program copies, one data copy, with the sum of squares
/// `1^2 + ... + n^2` kept literal.
pub fn one_data_success(n: u32) -> SuccessForm {
    let n = n as i64;
    let squares: i64 = (1..=n).map(|i| i * i).sum();
    SuccessForm {
        a: Rational::one() - rat(2, n + 2),
        b: -(rat(4, (n + 1) * (n + 2)) * rat(squares, n + 1)),
    }
}

/// `n / (3(n+1))`, the equal-prior success with one data copy.
pub fn one_data_equal_prior_success(n: u32) -> Rational {
    rat(n as i64, 3 * (n as i64 + 1))
}

/// `(1 - sqrt(m/(m+2))/2) / 2`, the equal-prior minimum error with one
/// program copy.
pub fn one_program_equal_prior_error(m: u32) -> f64 {
    let m = m as f64;
    0.5 * (1.0 - 0.5 * (m / (m + 2.0)).sqrt())
}

/// `(1 - 2/(n+2) sum_i sqrt(1 - (i/(n+1))^2) i/(n+1)) / 2`, the equal-prior
/// minimum error with one data copy.
pub fn one_data_equal_prior_error(n: u32) -> f64 {
    let n1 = n as f64 + 1.0;
    let sum: f64 = (1..=n)
        .map(|i| {
            let x = i as f64 / n1;
            (1.0 - x * x).sqrt() * x
        })
        .sum();
    0.5 * (1.0 - 2.0 / (n as f64 + 2.0) * sum)
}
