//! Exact analysis of programmable discriminators for pairs of unknown qubits.
//!
//! The device receives `n` copies of each unknown qubit in two program
//! registers (A and C) and `m` copies of the data qubit in register B. After
//! averaging over the Bloch sphere the two possible inputs become the mixed
//! states `rho_1` and `rho_2`, each uniform on a `(n+1)(n+m+1)`-dimensional
//! subspace. This crate builds those subspaces in the permutation-symmetric
//! bracket representation, splits them into mirror-symmetric closed chains,
//! derives the Jordan inner-product spectrum exactly, and from it the optimal
//! unambiguous and minimum-error discrimination probabilities.
//!
//! Every exact quantity is cross-checked by the dense floating-point
//! [`oracle`] module.
//!
//! ```
//! use progdisc::{discrim, ProblemSize, Priors, Rational};
//!
//! let size = ProblemSize::new(2, 1).unwrap();
//! let priors = Priors::exact(Rational::new(1.into(), 2.into())).unwrap();
//! let report = discrim::unambiguous(size, &priors);
//! assert_eq!(report.p_success.exact().unwrap(), Rational::new(2.into(), 9.into()));
//! ```

pub mod chains;
pub mod discrim;
mod error;
pub mod exactnum;
pub mod jordan;
pub mod oracle;
pub mod reference;
pub mod symbasis;

pub use chains::ChainPair;
pub use discrim::{Branch, DiscriminationReport, Priors, Value};
pub use error::{Error, Result};
pub use exactnum::{QuadSurd, Rational, SqrtRational};
pub use jordan::JordanSpectrum;
pub use symbasis::{BasisVector, Bracket, BracketTerm, ProblemSize, Side};
