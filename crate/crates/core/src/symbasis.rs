//! Permutation-symmetric basis of the two averaged input subspaces.
//!
//! Register A holds `n` program qubits, B holds `m` data qubits and C holds
//! `n` program qubits; each register is restricted to its symmetric subspace
//! with basis `|e_i>` (i = number of ones). `H1` is spanned by
//! `|e_j>_{AB} |e_k>_C` and `H2` by `|e_j>_A |e_k>_{BC}`. Splitting the joint
//! symmetric vectors over the individual registers expresses every basis
//! vector as a short sum of product terms `[n1, n2, n3]`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{check_range, Error, Result};
use crate::exactnum::{binomial_q, Rational, SqrtRational};

/// Copy counts of the discrimination problem: `n` program copies in each of
/// registers A and C, `m` data copies in register B.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProblemSize {
    n: u32,
    m: u32,
}

impl ProblemSize {
    pub fn new(n: u32, m: u32) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidSize { n, m });
        }
        Ok(Self { n, m })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Dimension `(n+1)(n+m+1)` of each of `H1` and `H2`.
    pub fn subspace_dim(&self) -> u64 {
        let (n, m) = (self.n as u64, self.m as u64);
        (n + 1) * (n + m + 1)
    }

    /// Dimension of `H1 + H2`.
    pub fn total_dim(&self) -> u64 {
        let (n, m) = (self.n as u64, self.m as u64);
        2 * n * n + 2 * n * m + 2 * n + m + 1
    }

    /// Dimension `2n+m+1` of `H1 ∩ H2`.
    pub fn intersection_dim(&self) -> u64 {
        2 * self.n as u64 + self.m as u64 + 1
    }

    /// Largest bracket sum `N = n1 + n2 + n3`, i.e. `2n + m`.
    pub fn max_total(&self) -> u32 {
        2 * self.n + self.m
    }

    pub(crate) fn check_total(&self, total: u32) -> Result<()> {
        check_range("N", total as i64, 0, self.max_total() as i64)
    }
}

impl fmt::Display for ProblemSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}, m={}", self.n, self.m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    H1,
    H2,
}

/// Product term `|e_{n1}>_A |e_{n2}>_B |e_{n3}>_C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bracket {
    pub n1: u32,
    pub n2: u32,
    pub n3: u32,
}

impl Bracket {
    pub fn new(n1: u32, n2: u32, n3: u32) -> Self {
        Self { n1, n2, n3 }
    }

    pub fn total(&self) -> u32 {
        self.n1 + self.n2 + self.n3
    }

    /// The bracket with the program indices exchanged, `[n3, n2, n1]`.
    pub fn mirrored(&self) -> Self {
        Self::new(self.n3, self.n2, self.n1)
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.n1, self.n2, self.n3)
    }
}

/// A bracket together with its squared amplitude inside an `H1` vector
/// (`coeff_sq_v`) and inside an `H2` vector (`coeff_sq_vp`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketTerm {
    pub bracket: Bracket,
    pub coeff_sq_v: Rational,
    pub coeff_sq_vp: Rational,
}

impl BracketTerm {
    pub fn new(bracket: Bracket, size: ProblemSize) -> Self {
        let (n, m) = (size.n as u64, size.m as u64);
        let Bracket { n1, n2, n3 } = bracket;
        let coeff_sq_v = binomial_q(n, n1 as i64) * binomial_q(m, n2 as i64)
            / binomial_q(n + m, (n1 + n2) as i64);
        let coeff_sq_vp = binomial_q(m, n2 as i64) * binomial_q(n, n3 as i64)
            / binomial_q(n + m, (n2 + n3) as i64);
        Self {
            bracket,
            coeff_sq_v,
            coeff_sq_vp,
        }
    }

    pub fn coeff_sq(&self, side: Side) -> &Rational {
        match side {
            Side::H1 => &self.coeff_sq_v,
            Side::H2 => &self.coeff_sq_vp,
        }
    }
}

/// One term `(i, j, amp_sq)` of the split `|e_k>_{n+m} = sum sqrt(amp_sq) |e_i>_n |e_j>_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    pub i: u32,
    pub j: u32,
    pub amp_sq: Rational,
}

/// Splits the `(n+m)`-qubit symmetric vector `|e_k>` into products of an
/// `n`-qubit and an `m`-qubit symmetric vector, ordered by increasing `i`.
pub fn split_symmetric(k: u32, size: ProblemSize) -> Result<Vec<Split>> {
    let (n, m) = (size.n, size.m);
    check_range("k", k as i64, 0, (n + m) as i64)?;
    let whole = binomial_q((n + m) as u64, k as i64);
    let lo = k.saturating_sub(m);
    let hi = k.min(n);
    Ok((lo..=hi)
        .map(|i| {
            let j = k - i;
            let amp_sq = binomial_q(n as u64, i as i64) * binomial_q(m as u64, j as i64) / &whole;
            Split { i, j, amp_sq }
        })
        .collect())
}

/// A basis vector of `H1` (`|e_j>_{AB} |e_k>_C`) or `H2` (`|e_j>_A |e_k>_{BC}`)
/// in bracket form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisVector {
    side: Side,
    j: u32,
    k: u32,
    terms: Vec<BracketTerm>,
}

impl BasisVector {
    pub fn side(&self) -> Side {
        self.side
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn terms(&self) -> &[BracketTerm] {
        &self.terms
    }

    /// The index shared by every term: `n3` for `H1`, `n1` for `H2`.
    pub fn fixed_index(&self) -> u32 {
        match self.side {
            Side::H1 => self.k,
            Side::H2 => self.j,
        }
    }

    /// Common bracket sum `N` of all terms.
    pub fn total(&self) -> u32 {
        self.j + self.k
    }

    pub fn term(&self, bracket: &Bracket) -> Option<&BracketTerm> {
        self.terms.iter().find(|t| &t.bracket == bracket)
    }

    pub fn brackets(&self) -> impl Iterator<Item = Bracket> + '_ {
        self.terms.iter().map(|t| t.bracket)
    }

    /// Sum of squared amplitudes; exactly one for every constructed vector.
    pub fn norm_sq(&self) -> Rational {
        self.terms
            .iter()
            .map(|t| t.coeff_sq(self.side).clone())
            .fold(Rational::zero(), |a, b| a + b)
    }
}

impl fmt::Display for BasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, t) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str("+")?;
            }
            write!(f, "{}", t.bracket)?;
        }
        Ok(())
    }
}

/// Builds the basis vector keyed by `(side, j, k)`.
pub fn basis_vector(side: Side, j: u32, k: u32, size: ProblemSize) -> Result<BasisVector> {
    let (n, m) = (size.n, size.m);
    let terms = match side {
        Side::H1 => {
            check_range("j", j as i64, 0, (n + m) as i64)?;
            check_range("k", k as i64, 0, n as i64)?;
            split_symmetric(j, size)?
                .into_iter()
                .map(|s| BracketTerm::new(Bracket::new(s.i, s.j, k), size))
                .collect()
        }
        Side::H2 => {
            check_range("j", j as i64, 0, n as i64)?;
            check_range("k", k as i64, 0, (n + m) as i64)?;
            // |e_k>_{BC}: the n-qubit part sits in C, the m-qubit part in B
            split_symmetric(k, size)?
                .into_iter()
                .map(|s| BracketTerm::new(Bracket::new(j, s.j, s.i), size))
                .collect()
        }
    };
    Ok(BasisVector { side, j, k, terms })
}

/// All `(n+1)(n+m+1)` basis vectors of one side, ordered by `(j, k)`.
pub fn basis_vectors(side: Side, size: ProblemSize) -> Vec<BasisVector> {
    let (n, m) = (size.n, size.m);
    let (j_max, k_max) = match side {
        Side::H1 => (n + m, n),
        Side::H2 => (n, n + m),
    };
    let mut out = Vec::with_capacity(size.subspace_dim() as usize);
    for j in 0..=j_max {
        for k in 0..=k_max {
            out.push(basis_vector(side, j, k, size).expect("indices in range"));
        }
    }
    out
}

/// Inner product of two basis vectors (either side).
///
/// Vectors on the same side are orthonormal. Across sides each vector is
/// fixed by any one of its brackets, so two vectors share at most one
/// bracket and the overlap is a single square root.
pub fn overlap(a: &BasisVector, b: &BasisVector) -> SqrtRational {
    if a.side == b.side {
        return if (a.j, a.k) == (b.j, b.k) {
            SqrtRational::sqrt_of(a.norm_sq()).expect("norm is nonnegative")
        } else {
            SqrtRational::zero()
        };
    }
    if a.total() != b.total() {
        return SqrtRational::zero();
    }
    let mut shared = a
        .terms
        .iter()
        .filter_map(|ta| b.term(&ta.bracket).map(|tb| (ta, tb)));
    let Some((ta, tb)) = shared.next() else {
        return SqrtRational::zero();
    };
    assert!(
        shared.next().is_none(),
        "basis vectors {a} and {b} share more than one bracket"
    );
    SqrtRational::sqrt_of(ta.coeff_sq(a.side) * tb.coeff_sq(b.side))
        .expect("squared coefficients are nonnegative")
}

/// `true` iff the squared coefficients of `v` sum to exactly one.
pub fn is_unit(v: &BasisVector) -> bool {
    v.norm_sq().is_one()
}
