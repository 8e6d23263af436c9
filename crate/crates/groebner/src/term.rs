//! Monic terms (power products) and the three supported term orders.
//!
//! A [`Term`] is an exponent vector: `Term([2, 0, 1])` stands for `x^2*z` in
//! a three-variable ring. Individual exponents are capped at `2^20 - 1` as a
//! guard against runaway degree growth; the cap is asserted on every
//! constructing operation.

use crate::error::{Error, Result};
use std::cmp::Ordering;

/// Exclusive upper bound for a single exponent.
pub const MAX_EXPONENT: u32 = 1 << 20;

/// A power product of the ring variables, stored as one exponent per
/// variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    exps: Vec<u32>,
}

impl Term {
    pub fn new(exps: Vec<u32>) -> Self {
        assert!(
            exps.iter().all(|&e| e < MAX_EXPONENT),
            "exponent exceeds the 2^20 growth guard"
        );
        Term { exps }
    }

    /// The constant term `1` in an `n`-variable ring.
    pub fn one(n: usize) -> Self {
        Term { exps: vec![0; n] }
    }

    /// `x_i^e` in an `n`-variable ring (`i` is zero-based).
    pub fn var_pow(n: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; n];
        exps[i] = e;
        Term::new(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    /// Total degree.
    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// True when this term involves no variable other than `x_i`.
    pub fn is_pure_power_of(&self, i: usize) -> bool {
        self.exps.iter().enumerate().all(|(j, &e)| j == i || e == 0)
    }

    fn check_arity(&self, other: &Term) -> Result<()> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: other.arity(),
            });
        }
        Ok(())
    }

    pub fn divides(&self, other: &Term) -> bool {
        debug_assert_eq!(self.arity(), other.arity());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Term) -> Term {
        debug_assert_eq!(self.arity(), other.arity());
        Term::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Exact quotient `self / other`; `None` when `other` does not divide
    /// `self`.
    pub fn div(&self, other: &Term) -> Option<Term> {
        debug_assert_eq!(self.arity(), other.arity());
        if !other.divides(self) {
            return None;
        }
        Some(Term {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Term) -> Term {
        debug_assert_eq!(self.arity(), other.arity());
        Term {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Term) -> Term {
        debug_assert_eq!(self.arity(), other.arity());
        Term {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn is_coprime_with(&self, other: &Term) -> bool {
        debug_assert_eq!(self.arity(), other.arity());
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// The three supported monomial orders, all with `x_1 > x_2 > ... > x_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TermOrder {
    /// Pure lexicographic: compare exponents left to right.
    Lex,
    /// Total degree first, ties broken lexicographically.
    DegLex,
    /// Total degree first; ties broken by the *last* differing exponent,
    /// where the smaller exponent wins.
    DegRevLex,
}

impl TermOrder {
    /// Total order on terms of equal arity. Panics on mismatched arity; use
    /// [`TermOrder::compare`] at the API boundary.
    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        assert_eq!(a.arity(), b.arity(), "terms from different rings");
        match self {
            TermOrder::Lex => lex_cmp(a.exponents(), b.exponents()),
            TermOrder::DegLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| lex_cmp(a.exponents(), b.exponents())),
            TermOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
                    if x != y {
                        // Smaller exponent in the last differing position
                        // means the greater term.
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    /// Checked comparison for callers that cannot guarantee equal arity.
    pub fn compare(&self, a: &Term, b: &Term) -> Result<Ordering> {
        a.check_arity(b)?;
        Ok(self.cmp(a, b))
    }

    /// True for orders where larger total degree always means larger term.
    pub fn is_degree_compatible(&self) -> bool {
        !matches!(self, TermOrder::Lex)
    }

    pub fn name(&self) -> &'static str {
        match self {
            TermOrder::Lex => "lex",
            TermOrder::DegLex => "deglex",
            TermOrder::DegRevLex => "degrevlex",
        }
    }
}

fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}
