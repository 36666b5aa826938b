//! Exact computations with twisted generalized minors on double Bruhat cells.
//!
//! The crate is organised bottom-up:
//!
//! - [`cartan`]: Cartan data, symmetrizers and the invariant form on weights.
//! - [`weyl`]: Weyl group words, their action on weights, lengths, `w_0`.
//! - [`doubleword`]: double reduced words of `(u, v)` and the weights `γ^k`, `δ^k`.
//! - [`chart`]: Laurent-monomial calculus in the factorization chart and the
//!   bracket / commuting-family verifiers.
//! - [`leaves`]: the subtorus `H^{u,v}`, leaf dimensions, component counts and
//!   the monomial equations cutting out a leaf in the chart.
//! - [`sln`]: the concrete `SL_n` realization (Gaussian decomposition, twist,
//!   generalized minors, leaf sampling).
//! - [`sklyanin`]: an independent quadratic bracket on matrix entries with
//!   forward-mode jets, used as a numerical oracle.
//! - [`cli`]: the command-line front end behind the `twisted-minors` binary.
//!
//! All arithmetic is exact (`BigRational` / `i64`); there is no floating point.

pub mod cartan;
pub mod chart;
pub mod cli;
pub mod doubleword;
pub mod error;
pub mod intlin;
pub mod jet;
pub mod leaves;
pub mod matrix;
pub mod rational;
pub mod report;
pub mod sklyanin;
pub mod sln;
pub mod weyl;

pub use cartan::{CartanData, CartanLabel, Weight};
pub use chart::{LaurentMonomial, SkewPairing};
pub use doubleword::{AnchorWeights, DoubleWord, Letter};
pub use error::{Error, Result};
pub use rational::Rational;
pub use weyl::WeylWord;
