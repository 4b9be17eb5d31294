//! Exact computer algebra for motivic double zeta values.
//!
//! The crate decomposes a motivic double zeta value `ζ^m(a,b)` into the
//! f-alphabet, computes its motivic coaction both by brute force over
//! iterated-integral symbols and by closed formulas, derives the minimal
//! motive `M(a,b)` together with its Galois group `G(a,b)`, and checks the
//! resulting real-number identities with arbitrary-precision numerics.
//!
//! Module map:
//!
//! - [`scalars`]: exact rationals, binomials, Bernoulli numbers
//! - [`f_alphabet`]: the shuffle Hopf comodule `Q<f_3,f_5,...> ⊗ Q[f_2]`
//! - [`integral_words`]: symbols `I(ε_0; ε_1…ε_N; ε_{N+1})` and their reduction
//! - [`coaction`]: the operators `D_r`, derivations and full decompositions
//! - [`galois`]: index sets, minimal-motive bases, group presentations, dimensions
//! - [`numerics`]: high-precision zeta values, identity checks, period matrices
//! - [`cli`]: command-line front end and the verification harness

pub mod cli;
pub mod coaction;
mod error;
pub mod f_alphabet;
pub mod galois;
pub mod integral_words;
pub mod linalg;
pub mod numerics;
pub mod poly;
pub mod scalars;
pub mod suite;

pub use error::{Error, Result};
pub use scalars::Rational;
