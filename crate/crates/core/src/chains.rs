//! Closed basis-vector chains.
//!
//! For a fixed bracket sum `N`, the `H1` vectors and `H2` vectors whose
//! brackets sum to `N` only overlap with each other, so `H1` and `H2` split
//! into orthogonal blocks ("chain pairs"). Ordering both chains so that the
//! cross-Gram matrix is symmetric lets one orthogonal transform diagonalise
//! the block, and the trace of the block is then an invariant `S_N`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use nalgebra::DMatrix;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::{Rational, SqrtRational};
use crate::symbasis::{basis_vector, overlap, BasisVector, ProblemSize, Side};

/// A mirror-ordered pair of closed chains for one bracket sum `N`, with the
/// exact cross-Gram matrix `gram[i][j] = <v_i | v'_j>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainPair {
    size: ProblemSize,
    total: u32,
    elements_v: Vec<BasisVector>,
    elements_vp: Vec<BasisVector>,
    gram: Vec<Vec<SqrtRational>>,
}

impl ChainPair {
    /// Assembles a chain pair from explicit element orderings.
    ///
    /// The two sequences must each contain every basis vector of bracket sum
    /// `total` on their side exactly once; the ordering is free, so the result
    /// need not be mirror-symmetric.
    pub fn from_parts(
        size: ProblemSize,
        total: u32,
        elements_v: Vec<BasisVector>,
        elements_vp: Vec<BasisVector>,
    ) -> Result<Self> {
        size.check_total(total)?;
        let expected = chain_size(total, size)?;
        for (side, elems) in [(Side::H1, &elements_v), (Side::H2, &elements_vp)] {
            let fixed: BTreeSet<u32> = elems.iter().map(BasisVector::fixed_index).collect();
            let ok = elems.len() == expected
                && fixed.len() == expected
                && elems.iter().all(|v| v.side() == side && v.total() == total)
                && fixed == admissible_fixed(total, size).collect();
            if !ok {
                return Err(Error::InvalidArgument(format!(
                    "{side:?} elements do not form the closed chain N={total} for {size}"
                )));
            }
        }
        let gram = elements_v
            .iter()
            .map(|v| elements_vp.iter().map(|vp| overlap(v, vp)).collect())
            .collect();
        Ok(Self {
            size,
            total,
            elements_v,
            elements_vp,
            gram,
        })
    }

    pub fn size(&self) -> ProblemSize {
        self.size
    }

    /// Bracket sum `N` shared by every element.
    pub fn total(&self) -> u32 {
        self.total
    }

    pub fn len(&self) -> usize {
        self.elements_v.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements_v.is_empty()
    }

    pub fn elements_v(&self) -> &[BasisVector] {
        &self.elements_v
    }

    pub fn elements_vp(&self) -> &[BasisVector] {
        &self.elements_vp
    }

    pub fn gram(&self) -> &[Vec<SqrtRational>] {
        &self.gram
    }

    pub fn gram_f64(&self) -> DMatrix<f64> {
        let l = self.len();
        DMatrix::from_fn(l, l, |i, j| self.gram[i][j].to_f64())
    }

    /// Reorders both chains by the same permutation: position `p` of the
    /// result holds the element previously at `order[p]`.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.len()];
        if order.len() != self.len()
            || !order
                .iter()
                .all(|&i| i < seen.len() && !std::mem::replace(&mut seen[i], true))
        {
            return Err(Error::InvalidArgument(format!(
                "{order:?} is not a permutation of 0..{}",
                self.len()
            )));
        }
        let pick = |elems: &[BasisVector]| order.iter().map(|&i| elems[i].clone()).collect();
        Self::from_parts(
            self.size,
            self.total,
            pick(&self.elements_v),
            pick(&self.elements_vp),
        )
    }
}

/// Admissible fixed indices (`n3` of `H1` elements, `n1` of `H2` elements)
/// for bracket sum `total`.
fn admissible_fixed(total: u32, size: ProblemSize) -> std::ops::RangeInclusive<u32> {
    let lo = total.saturating_sub(size.n() + size.m());
    let hi = total.min(size.n());
    lo..=hi
}

/// Number of elements in each chain of bracket sum `total`:
/// `min(N, 2n+m-N, n) + 1`.
pub fn chain_size(total: u32, size: ProblemSize) -> Result<usize> {
    size.check_total(total)?;
    let n = size.n();
    Ok(total.min(size.max_total() - total).min(n) as usize + 1)
}

/// Builds the mirror-symmetric chain pair for bracket sum `total`.
///
/// Elements are placed by a breadth-first walk: starting from the `H1`
/// vector with the smallest `n3`, each placed vector's brackets are visited
/// in order of decreasing `n1`, and for a bracket `[l1, l2, l3]` the `H1`
/// vector carrying `[l3, l2, l1]` (fixed index `l1`) is appended next. The
/// `H2` chain takes the same fixed-index sequence, so position `p` pairs the
/// `H1` vector with `n3 = f` and the `H2` vector with `n1 = f`; that layout
/// is symmetric because `<v_a | v'_b>` and `<v_b | v'_a>` are the overlaps
/// of a bracket and its mirror, which carry the same coefficients.
pub fn build_chain_pair(total: u32, size: ProblemSize) -> Result<ChainPair> {
    let len = chain_size(total, size)?;
    let range = admissible_fixed(total, size);
    let mut placed = BTreeSet::new();
    let mut order = Vec::with_capacity(len);
    let mut queue = VecDeque::new();

    while order.len() < len {
        let next = match queue.pop_front() {
            Some(k) => k,
            // the walk only stalls if the chain is disconnected; resume from
            // the smallest unplaced index
            None => {
                let k = range
                    .clone()
                    .find(|k| !placed.contains(k))
                    .expect("unplaced index");
                placed.insert(k);
                order.push(k);
                k
            }
        };
        let v = basis_vector(Side::H1, total - next, next, size)?;
        let mut brackets: Vec<_> = v.brackets().collect();
        brackets.sort_by_key(|b| std::cmp::Reverse(b.n1));
        for b in brackets {
            if placed.insert(b.n1) {
                order.push(b.n1);
                queue.push_back(b.n1);
            }
        }
    }

    let elements_v = order
        .iter()
        .map(|&f| basis_vector(Side::H1, total - f, f, size))
        .collect::<Result<Vec<_>>>()?;
    let elements_vp = order
        .iter()
        .map(|&f| basis_vector(Side::H2, f, total - f, size))
        .collect::<Result<Vec<_>>>()?;
    let chain = ChainPair::from_parts(size, total, elements_v, elements_vp)?;
    if !verify_mirror(&chain) {
        return Err(Error::Defect(format!(
            "chain N={total} for {size} is not mirror-symmetric"
        )));
    }
    Ok(chain)
}

/// All chain pairs `N = 0..=2n+m`, in order of `N`.
pub fn all_chain_pairs(size: ProblemSize) -> Result<Vec<ChainPair>> {
    (0..=size.max_total())
        .into_par_iter()
        .map(|total| build_chain_pair(total, size))
        .collect()
}

/// `true` iff the cross-Gram matrix is exactly symmetric.
pub fn verify_mirror(chain: &ChainPair) -> bool {
    let g = &chain.gram;
    (0..g.len()).all(|i| (0..i).all(|j| g[i][j] == g[j][i]))
}

/// `S_N`: the sum of squared coefficients of the self-mirrored brackets
/// `[i, j, i]` with `2i + j = N`.
pub fn invariant_s(total: u32, size: ProblemSize) -> Result<Rational> {
    size.check_total(total)?;
    let (n, m) = (size.n(), size.m());
    let mut sum = Rational::zero();
    for i in 0..=n.min(total / 2) {
        let j = total - 2 * i;
        if j <= m {
            sum += crate::symbasis::BracketTerm::new(crate::symbasis::Bracket::new(i, j, i), size)
                .coeff_sq_v;
        }
    }
    Ok(sum)
}

/// Trace of a mirror-symmetric cross-Gram matrix.
pub fn invariant_from_gram(chain: &ChainPair) -> Result<Rational> {
    if !verify_mirror(chain) {
        return Err(Error::InvalidArgument(format!(
            "chain N={} is not mirror-symmetric",
            chain.total
        )));
    }
    let mut sum = Rational::zero();
    for (i, row) in chain.gram.iter().enumerate() {
        let d = row[i].as_rational().ok_or_else(|| {
            Error::Defect(format!(
                "diagonal entry {i} of chain N={} is irrational: {}",
                chain.total, row[i]
            ))
        })?;
        sum += d;
    }
    Ok(sum)
}

/// `S_N` for every `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantTable {
    pub values: BTreeMap<u32, Rational>,
}

pub fn invariant_table(size: ProblemSize) -> InvariantTable {
    let values = (0..=size.max_total())
        .map(|t| (t, invariant_s(t, size).expect("N in range")))
        .collect();
    InvariantTable { values }
}
