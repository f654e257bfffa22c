//! Jordan inner products of the two averaged input subspaces.
//!
//! Within a chain pair of size `L` the Jordan inner products are
//! `kappa_0, ..., kappa_{L-1}` with
//! `kappa_k = (-1)^k prod_{t<k} (n-t)/(n+m-t)`. They are obtained three ways:
//! the closed product form, the invariant recurrence `S_k - S_{k-1}`, and
//! numerically from the chain's cross-Gram matrix (its singular values are
//! `|kappa_k|`; because the matrix is symmetric its eigenvalues are the
//! signed `kappa_k`).

use nalgebra::{DMatrix, SymmetricEigen};
use num_traits::{One, Zero};

use crate::chains::{chain_size, invariant_s, ChainPair};
use crate::error::{check_range, Error, Result};
use crate::exactnum::{int, rat, to_f64, Rational};
use crate::symbasis::ProblemSize;

/// `kappa_k = (-1)^k prod_{t=0}^{k-1} (n-t)/(n+m-t)`, for `0 <= k <= n`.
pub fn kappa_closed(k: u32, size: ProblemSize) -> Result<Rational> {
    check_range("k", k as i64, 0, size.n() as i64)?;
    let (n, m) = (size.n() as i64, size.m() as i64);
    let mut acc = Rational::one();
    for t in 0..k as i64 {
        acc *= rat(-(n - t), n + m - t);
    }
    Ok(acc)
}

/// `kappa_k` recovered as `S_k - S_{k-1}`, for `1 <= k <= n`.
pub fn kappa_from_invariants(k: u32, size: ProblemSize) -> Result<Rational> {
    check_range("k", k as i64, 1, size.n() as i64)?;
    Ok(invariant_s(k, size)? - invariant_s(k - 1, size)?)
}

/// Number of Jordan pairs with inner product `kappa_k`: `2n+m+1-2k`.
pub fn multiplicity(k: u32, size: ProblemSize) -> Result<u64> {
    check_range("k", k as i64, 0, size.n() as i64)?;
    Ok((2 * size.n() + size.m() + 1 - 2 * k) as u64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub k: u32,
    pub kappa: Rational,
    pub multiplicity: u64,
}

/// Distinct Jordan inner products with their multiplicities, `k = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanSpectrum {
    pub size: ProblemSize,
    pub entries: Vec<SpectrumEntry>,
}

impl JordanSpectrum {
    pub fn total_multiplicity(&self) -> u64 {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    /// Checks `kappa_0 = 1` with multiplicity `2n+m+1`, strictly decreasing
    /// `|kappa|` with alternating sign, and total multiplicity
    /// `(n+1)(n+m+1)`.
    pub fn is_consistent(&self) -> bool {
        let Some(first) = self.entries.first() else {
            return false;
        };
        let head = first.kappa.is_one() && first.multiplicity == self.size.intersection_dim();
        let decreasing = self.entries.windows(2).all(|w| {
            w[1].kappa.clone() * w[1].kappa.clone() < w[0].kappa.clone() * w[0].kappa.clone()
        });
        let alternating = self.entries.iter().all(|e| {
            let positive = e.kappa > Rational::zero();
            positive == (e.k % 2 == 0)
        });
        head && decreasing && alternating && self.total_multiplicity() == self.size.subspace_dim()
    }

    /// Every `|kappa_k|` repeated by its multiplicity, in descending order.
    pub fn abs_values_f64(&self) -> Vec<f64> {
        self.entries
            .iter()
            .flat_map(|e| std::iter::repeat_n(to_f64(&e.kappa).abs(), e.multiplicity as usize))
            .collect()
    }
}

pub fn spectrum(size: ProblemSize) -> JordanSpectrum {
    let entries = (0..=size.n())
        .map(|k| SpectrumEntry {
            k,
            kappa: kappa_closed(k, size).expect("k <= n"),
            multiplicity: multiplicity(k, size).expect("k <= n"),
        })
        .collect();
    JordanSpectrum { size, entries }
}

/// Signed sum `sum_{k < L} kappa_k` for the chain of bracket sum `total`;
/// equals the invariant `S_N`.
pub fn chain_kappa_sum(total: u32, size: ProblemSize) -> Result<Rational> {
    let len = chain_size(total, size)? as u32;
    (0..len).try_fold(int(0), |acc, k| Ok(acc + kappa_closed(k, size)?))
}

/// Rotates a symmetric 2x2 cross-Gram `g` by the angle that zeroes its
/// off-diagonal entries, returning the rotated diagonal `(kappa0, kappa1)`
/// with `kappa0 >= |kappa1|`.
///
/// With `t = tan(theta)` the off-diagonal condition is
/// `(g22 - g11) t + g12 (1 - t^2) = 0`.
pub fn rotate_pair(g: [[f64; 2]; 2]) -> (f64, f64) {
    let (g11, g12, g22) = (g[0][0], 0.5 * (g[0][1] + g[1][0]), g[1][1]);
    if g12 == 0.0 {
        return (g11, g22);
    }
    let diff = g22 - g11;
    let disc = (diff * diff + 4.0 * g12 * g12).sqrt();
    let rotated = |t: f64| {
        let c = 1.0 / (1.0 + t * t).sqrt();
        let s = t * c;
        let k0 = c * c * g11 + 2.0 * c * s * g12 + s * s * g22;
        let k1 = s * s * g11 - 2.0 * c * s * g12 + c * c * g22;
        (k0, k1)
    };
    let a = rotated((diff + disc) / (2.0 * g12));
    let b = rotated((diff - disc) / (2.0 * g12));
    if a.0 >= b.0 {
        a
    } else {
        b
    }
}

/// Explicit single-rotation Jordan decomposition of a two-element chain.
pub fn two_chain_rotation(chain: &ChainPair) -> Result<(f64, f64)> {
    if chain.len() != 2 {
        return Err(Error::InvalidArgument(format!(
            "two_chain_rotation needs a 2-element chain, got {}",
            chain.len()
        )));
    }
    let g = chain.gram_f64();
    Ok(rotate_pair([
        [g[(0, 0)], g[(0, 1)]],
        [g[(1, 0)], g[(1, 1)]],
    ]))
}

/// Singular values of the chain's cross-Gram matrix, descending and clipped
/// to `[0, 1]`.
pub fn jordan_numeric(chain: &ChainPair) -> Vec<f64> {
    singular_values_desc(chain.gram_f64())
}

/// Eigenvalues of the (symmetric) cross-Gram matrix ordered by decreasing
/// absolute value: the signed Jordan inner products of the chain.
pub fn jordan_signed_numeric(chain: &ChainPair) -> Vec<f64> {
    let g = chain.gram_f64();
    let sym = (&g + g.transpose()) * 0.5;
    let mut ev: Vec<f64> = SymmetricEigen::new(sym)
        .eigenvalues
        .iter()
        .copied()
        .collect();
    ev.sort_by(|a, b| b.abs().total_cmp(&a.abs()));
    ev
}

pub(crate) fn singular_values_desc(m: DMatrix<f64>) -> Vec<f64> {
    let mut sv: Vec<f64> = m
        .svd(false, false)
        .singular_values
        .iter()
        .map(|s| s.clamp(0.0, 1.0))
        .collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::{all_chain_pairs, build_chain_pair};

    fn size(n: u32, m: u32) -> ProblemSize {
        ProblemSize::new(n, m).unwrap()
    }

    #[test]
    fn kappa_closed_examples() {
        assert_eq!(kappa_closed(1, size(2, 3)).unwrap(), rat(-2, 5));
        assert_eq!(kappa_closed(2, size(2, 3)).unwrap(), rat(1, 10));
        assert_eq!(kappa_closed(0, size(5, 1)).unwrap(), int(1));
        assert_eq!(kappa_closed(1, size(7, 4)).unwrap(), rat(-7, 11));
        assert!(kappa_closed(3, size(2, 3)).is_err());
    }

    #[test]
    fn kappa_from_invariants_examples() {
        assert_eq!(kappa_from_invariants(1, size(2, 3)).unwrap(), rat(-2, 5));
        assert_eq!(kappa_from_invariants(2, size(4, 3)).unwrap(), rat(2, 7));
        assert!(kappa_from_invariants(0, size(4, 3)).is_err());
        // general third product: -n(n-1)(n-2)/((n+m)(n+m-1)(n+m-2))
        for n in 3..=7i64 {
            for m in 1..=6i64 {
                let s = size(n as u32, m as u32);
                let expected = rat(-n * (n - 1) * (n - 2), (n + m) * (n + m - 1) * (n + m - 2));
                assert_eq!(kappa_from_invariants(3, s).unwrap(), expected);
            }
        }
    }

    #[test]
    fn multiplicity_examples() {
        let s = size(2, 3);
        let mults: Vec<_> = (0..=2).map(|k| multiplicity(k, s).unwrap()).collect();
        assert_eq!(mults, vec![8, 6, 4]);
        assert_eq!(mults.iter().sum::<u64>(), 18);
        assert_eq!(multiplicity(0, size(4, 3)).unwrap(), 12);
        assert_eq!(multiplicity(4, size(4, 3)).unwrap(), 4);
    }

    #[test]
    fn spectrum_examples() {
        let e = |k, kappa, multiplicity| SpectrumEntry {
            k,
            kappa,
            multiplicity,
        };
        assert_eq!(
            spectrum(size(1, 1)).entries,
            vec![e(0, int(1), 4), e(1, rat(-1, 2), 2)]
        );
        assert_eq!(
            spectrum(size(2, 3)).entries,
            vec![e(0, int(1), 8), e(1, rat(-2, 5), 6), e(2, rat(1, 10), 4)]
        );
        for m in 1..=9u32 {
            assert_eq!(
                spectrum(size(1, m)).entries,
                vec![
                    e(0, int(1), m as u64 + 3),
                    e(1, rat(-1, m as i64 + 1), m as u64 + 1)
                ]
            );
        }
    }

    #[test]
    fn spectra_are_consistent() {
        for n in 1..=12 {
            for m in 1..=12 {
                assert!(spectrum(size(n, m)).is_consistent(), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn closed_form_matches_recurrence() {
        for n in 1..=8 {
            for m in 1..=8 {
                let s = size(n, m);
                for k in 1..=n {
                    assert_eq!(
                        kappa_closed(k, s).unwrap(),
                        kappa_from_invariants(k, s).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn signed_sum_equals_invariant() {
        for n in 1..=8 {
            for m in 1..=8 {
                let s = size(n, m);
                for t in 0..=s.max_total() {
                    assert_eq!(chain_kappa_sum(t, s).unwrap(), invariant_s(t, s).unwrap());
                }
            }
        }
    }

    #[test]
    fn multiplicity_counts_chains() {
        for n in 1..=12 {
            for m in 1..=12 {
                let s = size(n, m);
                for k in 0..=n {
                    let chains = (0..=s.max_total())
                        .filter(|&t| chain_size(t, s).unwrap() > k as usize)
                        .count() as u64;
                    assert_eq!(chains, multiplicity(k, s).unwrap());
                }
            }
        }
    }

    #[test]
    fn rotation_of_two_element_chains() {
        let s = size(2, 3);
        for t in [1, s.max_total() - 1] {
            let c = build_chain_pair(t, s).unwrap();
            let (k0, k1) = two_chain_rotation(&c).unwrap();
            assert!((k0 - 1.0).abs() < 1e-12, "N={t}: {k0}");
            assert!((k1 + 0.4).abs() < 1e-12, "N={t}: {k1}");
        }
        for m in 1..=6 {
            let s = size(1, m);
            for t in 1..=m + 1 {
                let c = build_chain_pair(t, s).unwrap();
                let (k0, k1) = two_chain_rotation(&c).unwrap();
                assert!((k0 - 1.0).abs() < 1e-12);
                assert!((k1 + 1.0 / (m as f64 + 1.0)).abs() < 1e-12);
            }
        }
        assert!(two_chain_rotation(&build_chain_pair(0, s).unwrap()).is_err());
    }

    #[test]
    fn rotation_zeroes_off_diagonal() {
        let g = [[0.6, 0.4f64.sqrt()], [0.4f64.sqrt(), 0.0]];
        let (k0, k1) = rotate_pair(g);
        // trace and determinant are rotation invariants
        assert!((k0 + k1 - 0.6).abs() < 1e-14);
        assert!((k0 * k1 + 0.4).abs() < 1e-14);
    }

    #[test]
    fn rotation_degenerate_off_diagonal() {
        assert_eq!(rotate_pair([[0.3, 0.0], [0.0, -0.2]]), (0.3, -0.2));
    }

    #[test]
    fn numeric_chain_spectra() {
        let s = size(2, 3);
        let sv = jordan_numeric(&build_chain_pair(1, s).unwrap());
        assert!((sv[0] - 1.0).abs() < 1e-12 && (sv[1] - 0.4).abs() < 1e-12);
        assert_eq!(jordan_numeric(&build_chain_pair(0, s).unwrap()), vec![1.0]);

        for n in 1..=6 {
            for m in 1..=6 {
                let s = size(n, m);
                for c in all_chain_pairs(s).unwrap() {
                    let sv = jordan_numeric(&c);
                    let signed = jordan_signed_numeric(&c);
                    for (k, (a, b)) in sv.iter().zip(&signed).enumerate() {
                        let kappa = to_f64(&kappa_closed(k as u32, s).unwrap());
                        assert!((a - kappa.abs()).abs() < 1e-10, "{s} N={} k={k}", c.total());
                        assert!((b - kappa).abs() < 1e-10, "{s} N={} k={k}", c.total());
                    }
                }
            }
        }
    }

    #[test]
    fn unit_singular_values_count_intersection() {
        for n in 1..=5 {
            for m in 1..=5 {
                let s = size(n, m);
                let units = all_chain_pairs(s)
                    .unwrap()
                    .iter()
                    .flat_map(jordan_numeric)
                    .filter(|v| *v > 1.0 - 1e-10)
                    .count() as u64;
                assert_eq!(units, s.intersection_dim());
            }
        }
    }
}
