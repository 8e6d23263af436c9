//! A small computer-algebra kernel for polynomial ideals over prime fields
//! `F_p` (odd primes below `2^31`).
//!
//! The crate computes Gröbner bases with either Buchberger's algorithm or
//! the matrix-based F4 algorithm, converts reduced bases between term orders
//! with the FGLM algorithm, and enumerates the rational solutions of
//! zero-dimensional systems by lexicographic back-substitution.
//!
//! # Layout
//!
//! * [`field`] — arithmetic in `F_p`.
//! * [`term`] — exponent vectors and the `lex`/`deglex`/`degrevlex` orders.
//! * [`poly`] — sparse polynomials in canonical descending form.
//! * [`reduction`] — multivariate division and interreduction.
//! * [`matrix`] — term-indexed Macaulay-style matrices and Gauss-Jordan
//!   elimination.
//! * [`buchberger`] — critical pairs, S-polynomials, the classic completion
//!   loop, and basis reduction.
//! * [`f4`] — the matrix-based completion loop with selection strategies and
//!   per-iteration statistics.
//! * [`fglm`] — staircase, multiplication matrices, and base conversion for
//!   zero-dimensional ideals.
//! * [`solver`] — rational solution sets of zero-dimensional systems.
//! * [`sysfile`] — the plain-text system format used by the CLI, plus
//!   canonical rendering.

pub mod buchberger;
pub mod error;
pub mod f4;
pub mod field;
pub mod fglm;
pub mod matrix;
pub mod poly;
pub mod reduction;
pub mod solver;
pub mod sysfile;
pub mod term;

pub use buchberger::{buchberger, is_groebner, reduce_basis, s_half, s_pol, CriticalPair};
pub use error::{Error, Result};
pub use f4::{f4, f4_with, F4Config, F4Run, F4Stats, SelectionStrategy};
pub use fglm::{fglm, fglm_detailed, min_poly_var, staircase, Staircase};
pub use field::{Fp, PrimeField};
pub use poly::{Polynomial, Ring};
pub use solver::{dimension_report, solve, SolutionSet};
pub use term::{Term, TermOrder};
