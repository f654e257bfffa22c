//! Dense floating-point oracle.
//!
//! Everything here works in product coordinates `(i_A, i_B, i_C)` of the
//! three symmetric registers, flattened as
//! `i_A (m+1)(n+1) + i_B (n+1) + i_C`. Nothing depends on chains or on the
//! Jordan table, so agreement with them is a genuine cross-check.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::discrim::Priors;
use crate::error::{Error, Result};
use crate::exactnum::{binomial_q, to_f64};
use crate::jordan::singular_values_desc;
use crate::symbasis::{basis_vectors, BasisVector, ProblemSize, Side};

/// Samples per Monte-Carlo batch. Each batch owns one RNG stream.
pub const BATCH: usize = 4096;

pub type DenseVector = DVector<f64>;

pub fn dense_dim(size: ProblemSize) -> usize {
    let (n, m) = (size.n() as usize, size.m() as usize);
    (n + 1) * (m + 1) * (n + 1)
}

pub fn dense_index(size: ProblemSize, a: u32, b: u32, c: u32) -> usize {
    let (n, m) = (size.n() as usize, size.m() as usize);
    a as usize * (m + 1) * (n + 1) + b as usize * (n + 1) + c as usize
}

/// Amplitude `+sqrt(coeff_sq)` at every bracket of `v`.
pub fn embed_basis_vector(v: &BasisVector, size: ProblemSize) -> DenseVector {
    let mut out = DVector::zeros(dense_dim(size));
    for t in v.terms() {
        let b = t.bracket;
        out[dense_index(size, b.n1, b.n2, b.n3)] = to_f64(t.coeff_sq(v.side())).sqrt();
    }
    out
}

/// All `D` basis vectors of one side as columns.
pub fn embedding(side: Side, size: ProblemSize) -> DMatrix<f64> {
    let vs = basis_vectors(side, size);
    let mut out = DMatrix::zeros(dense_dim(size), vs.len());
    for (i, v) in vs.iter().enumerate() {
        out.set_column(i, &embed_basis_vector(v, size));
    }
    out
}

/// Hermitian matrix stored as real and imaginary parts.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    pub re: DMatrix<f64>,
    pub im: DMatrix<f64>,
}

impl DensityMatrix {
    pub fn real(re: DMatrix<f64>) -> Self {
        let im = DMatrix::zeros(re.nrows(), re.ncols());
        Self { re, im }
    }

    pub fn dim(&self) -> usize {
        self.re.nrows()
    }

    pub fn trace(&self) -> f64 {
        self.re.trace()
    }

    /// Largest entry of `|A - A^dagger|`.
    pub fn hermitian_defect(&self) -> f64 {
        let re = (&self.re - self.re.transpose()).amax();
        let im = (&self.im + self.im.transpose()).amax();
        re.max(im)
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let dr = &self.re - &other.re;
        let di = &self.im - &other.im;
        dr.iter()
            .zip(di.iter())
            .map(|(r, i)| r.hypot(*i))
            .fold(0.0, f64::max)
    }

    /// `a self + b other`.
    pub fn combine(&self, a: f64, other: &Self, b: f64) -> Self {
        Self {
            re: &self.re * a + &other.re * b,
            im: &self.im * a + &other.im * b,
        }
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = if self.im.amax() == 0.0 {
            SymmetricEigen::new(self.re.clone())
                .eigenvalues
                .iter()
                .copied()
                .collect()
        } else {
            // [[re, -im], [im, re]] carries each eigenvalue twice
            let d = self.dim();
            let mut big = DMatrix::zeros(2 * d, 2 * d);
            big.view_mut((0, 0), (d, d)).copy_from(&self.re);
            big.view_mut((d, d), (d, d)).copy_from(&self.re);
            big.view_mut((d, 0), (d, d)).copy_from(&self.im);
            big.view_mut((0, d), (d, d)).copy_from(&(-&self.im));
            let mut all: Vec<f64> = SymmetricEigen::new(big)
                .eigenvalues
                .iter()
                .copied()
                .collect();
            all.sort_by(f64::total_cmp);
            all.into_iter().step_by(2).collect()
        };
        ev.sort_by(f64::total_cmp);
        ev
    }

    pub fn trace_norm(&self) -> f64 {
        self.eigenvalues().iter().map(|x| x.abs()).sum()
    }

    /// Number of eigenvalues above `tol`.
    pub fn rank(&self, tol: f64) -> usize {
        self.eigenvalues().iter().filter(|x| **x > tol).count()
    }

    /// `Tr(self other)`, real for Hermitian arguments.
    pub fn overlap(&self, other: &Self) -> f64 {
        self.re.component_mul(&other.re).sum() + self.im.component_mul(&other.im).sum()
    }
}

/// `(1/D) V V^T` over the embedded basis of one side.
pub fn rho_exact(side: Side, size: ProblemSize) -> DensityMatrix {
    let v = embedding(side, size);
    let d = v.ncols() as f64;
    DensityMatrix::real(&v * v.transpose() / d)
}

/// Symmetric coordinates of `r` copies of the qubit at `(cos_theta, phi)`.
fn register_amplitudes(r: u32, cos_theta: f64, phi: f64) -> Vec<(f64, f64)> {
    let c = ((1.0 + cos_theta) / 2.0).max(0.0).sqrt();
    let s = ((1.0 - cos_theta) / 2.0).max(0.0).sqrt();
    (0..=r)
        .map(|k| {
            let mag = c.powi((r - k) as i32)
                * s.powi(k as i32)
                * to_f64(&binomial_q(r as u64, k as i64)).sqrt();
            let arg = k as f64 * phi;
            (mag * arg.cos(), mag * arg.sin())
        })
        .collect()
}

fn sample_state(
    side: Side,
    size: ProblemSize,
    rng: &mut ChaCha8Rng,
    out_re: &mut [f64],
    out_im: &mut [f64],
) {
    let draw = |rng: &mut ChaCha8Rng| {
        let ct = 2.0 * rng.random::<f64>() - 1.0;
        let phi = 2.0 * PI * rng.random::<f64>();
        (ct, phi)
    };
    let q1 = draw(rng);
    let q2 = draw(rng);
    let (n, m) = (size.n(), size.m());
    let a = register_amplitudes(n, q1.0, q1.1);
    let b = match side {
        Side::H1 => register_amplitudes(m, q1.0, q1.1),
        Side::H2 => register_amplitudes(m, q2.0, q2.1),
    };
    let c = register_amplitudes(n, q2.0, q2.1);
    let mut idx = 0;
    for &(ar, ai) in &a {
        for &(br, bi) in &b {
            let (abr, abi) = (ar * br - ai * bi, ar * bi + ai * br);
            for &(cr, ci) in &c {
                out_re[idx] = abr * cr - abi * ci;
                out_im[idx] = abr * ci + abi * cr;
                idx += 1;
            }
        }
    }
}

/// Sampled average of `|psi><psi|` over uniformly random qubits.
///
/// Batch `b` draws from `ChaCha8Rng::seed_from_u64(seed)` on stream `b`, and
/// batch sums are added in batch order, so the result depends only on
/// `(samples, seed)`.
pub fn rho_montecarlo(
    side: Side,
    size: ProblemSize,
    samples: u64,
    seed: u64,
) -> Result<DensityMatrix> {
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be at least 1".into()));
    }
    let dim = dense_dim(size);
    let batches = samples.div_ceil(BATCH as u64);
    let partial: Vec<(DMatrix<f64>, DMatrix<f64>)> = (0..batches)
        .into_par_iter()
        .map(|b| {
            let count = (samples - b * BATCH as u64).min(BATCH as u64) as usize;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b);
            let mut x = DMatrix::zeros(dim, count);
            let mut y = DMatrix::zeros(dim, count);
            let mut re = vec![0.0; dim];
            let mut im = vec![0.0; dim];
            for col in 0..count {
                sample_state(side, size, &mut rng, &mut re, &mut im);
                x.column_mut(col).copy_from_slice(&re);
                y.column_mut(col).copy_from_slice(&im);
            }
            let sum_re = &x * x.transpose() + &y * y.transpose();
            let sum_im = &y * x.transpose() - &x * y.transpose();
            (sum_re, sum_im)
        })
        .collect();
    let mut re = DMatrix::zeros(dim, dim);
    let mut im = DMatrix::zeros(dim, dim);
    for (r, i) in partial {
        re += r;
        im += i;
    }
    let scale = 1.0 / samples as f64;
    Ok(DensityMatrix {
        re: re * scale,
        im: im * scale,
    })
}

/// `D x D` matrix of inner products between the H1 and H2 bases.
pub fn cross_gram(size: ProblemSize) -> DMatrix<f64> {
    embedding(Side::H1, size).transpose() * embedding(Side::H2, size)
}

/// Singular values of [`cross_gram`], descending, clipped to `[0, 1]`.
pub fn global_jordan_svd(size: ProblemSize) -> Vec<f64> {
    singular_values_desc(cross_gram(size))
}

/// `(1 - Tr|eta2 rho_2 - eta1 rho_1|) / 2`.
pub fn helstrom_from(rho1: &DensityMatrix, rho2: &DensityMatrix, priors: &Priors) -> f64 {
    let lambda = rho2.combine(priors.eta2(), rho1, -priors.eta1());
    0.5 * (1.0 - lambda.trace_norm())
}

pub fn helstrom_numeric(size: ProblemSize, priors: &Priors) -> f64 {
    helstrom_from(
        &rho_exact(Side::H1, size),
        &rho_exact(Side::H2, size),
        priors,
    )
}

/// Conjugation by the register swap `A <-> C`.
pub fn swap_outer_registers(rho: &DensityMatrix, size: ProblemSize) -> DensityMatrix {
    let (n, m) = (size.n(), size.m());
    let mut perm = vec![0; dense_dim(size)];
    for a in 0..=n {
        for b in 0..=m {
            for c in 0..=n {
                perm[dense_index(size, a, b, c)] = dense_index(size, c, b, a);
            }
        }
    }
    let d = perm.len();
    let pick = |src: &DMatrix<f64>| DMatrix::from_fn(d, d, |i, j| src[(perm[i], perm[j])]);
    DensityMatrix {
        re: pick(&rho.re),
        im: pick(&rho.im),
    }
}
