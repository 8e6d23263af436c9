//! S-polynomials, critical pairs, Buchberger's algorithm, and the
//! Buchberger-criterion Gröbner-basis checker.
//!
//! The pair queue is strictly FIFO and no pair-dropping shortcuts (coprime
//! or chain criteria) are applied: every queued S-polynomial is reduced.
//! That keeps this module a small, auditable baseline; the matrix-based
//! algorithm in [`crate::f4`] is the faster path.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::reduction::{interred, multi_var_div};
use crate::term::Term;

/// A queued pairing of two basis elements `(f_i, f_j)`, `i < j`, carrying
/// the data needed to cancel their leading terms.
///
/// `left - right` is exactly the S-polynomial of the pair, and both halves
/// share the leading term `lcm(LT(f_i), LT(f_j))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalPair {
    lcm: Term,
    left: Polynomial,
    right: Polynomial,
    degree: u64,
    origin: (usize, usize),
}

impl CriticalPair {
    /// Builds the pair for basis indices `i < j`.
    pub fn new(basis: &[Polynomial], i: usize, j: usize) -> Result<CriticalPair> {
        assert!(i < j, "pair indices must satisfy i < j");
        let f = &basis[i];
        let g = &basis[j];
        let lcm = f.leading_term()?.lcm(g.leading_term()?);
        let degree = lcm.degree();
        Ok(CriticalPair {
            lcm,
            left: s_half(f, g)?,
            right: s_half(g, f)?,
            degree,
            origin: (i, j),
        })
    }

    pub fn lcm(&self) -> &Term {
        &self.lcm
    }

    /// `s_half(f_i, f_j)` — the minuend of the S-polynomial.
    pub fn left(&self) -> &Polynomial {
        &self.left
    }

    /// `s_half(f_j, f_i)` — the subtrahend of the S-polynomial.
    pub fn right(&self) -> &Polynomial {
        &self.right
    }

    /// Total degree of the lcm.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// Basis indices `(i, j)`, `i < j`, the pair was built from.
    pub fn origin(&self) -> (usize, usize) {
        self.origin
    }

    /// The S-polynomial `left - right`; its leading terms cancel.
    pub fn s_polynomial(&self) -> Result<Polynomial> {
        self.left.sub(&self.right)
    }
}

/// The half-product `(LM(g) / gcd(LT(f), LT(g))) · f`.
///
/// Scaling `f` by this monomial lifts it to the common multiple
/// `lcm(LT(f), LT(g))` with coefficient `LC(f)·LC(g)`, so the two halves of
/// a pair cancel exactly at the top.
pub fn s_half(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.check_ring(g)?;
    let tf = f.leading_term()?;
    let tg = g.leading_term()?;
    let shift = tg
        .div(&tf.gcd(tg))
        .expect("gcd divides the leading term it was built from");
    f.mul_monomial(g.leading_coeff()?, &shift)
}

/// The S-polynomial `s_half(f,g) - s_half(g,f)`.
pub fn s_pol(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    s_half(f, g)?.sub(&s_half(g, f)?)
}

fn check_input(fs: &[Polynomial]) -> Result<()> {
    if fs.is_empty() {
        return Err(Error::EmptyInput);
    }
    for f in fs {
        fs[0].check_ring(f)?;
        if f.is_zero() {
            return Err(Error::ZeroDivisorPolynomial);
        }
    }
    Ok(())
}

/// Buchberger's algorithm: extends `fs` to a Gröbner basis of the ideal it
/// generates, under the ring's active order.
///
/// The queue is seeded with every index pair `(i, j)`, `i < j`, and
/// processed first-in-first-out; each nonzero S-polynomial remainder is
/// appended and paired against every earlier element. The output contains
/// the input polynomials unchanged and is generally not reduced — follow
/// with [`reduce_basis`] for the canonical form.
pub fn buchberger(fs: &[Polynomial]) -> Result<Vec<Polynomial>> {
    Ok(buchberger_trace(fs)?.0)
}

/// [`buchberger`] plus the lcm of every processed pair, in processing
/// order. The trace is what makes the algorithm comparable against the
/// matrix-based variant run with a one-pair-per-round selection.
pub fn buchberger_trace(fs: &[Polynomial]) -> Result<(Vec<Polynomial>, Vec<Term>)> {
    check_input(fs)?;
    let mut basis = fs.to_vec();
    let mut queue = VecDeque::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            queue.push_back(CriticalPair::new(&basis, i, j)?);
        }
    }
    let mut processed = Vec::new();
    while let Some(pair) = queue.pop_front() {
        processed.push(pair.lcm().clone());
        let spol = pair.s_polynomial()?;
        let remainder = multi_var_div(&spol, &basis, false)?.remainder;
        if remainder.is_zero() {
            continue;
        }
        let fresh = basis.len();
        basis.push(remainder);
        for i in 0..fresh {
            queue.push_back(CriticalPair::new(&basis, i, fresh)?);
        }
    }
    Ok((basis, processed))
}

/// Buchberger's criterion: true iff every S-polynomial of two basis
/// elements has complete-division remainder zero against the whole list.
///
/// The input is normalized to monic internally; the caller's list is not
/// modified.
pub fn is_groebner(gs: &[Polynomial]) -> Result<bool> {
    check_input(gs)?;
    let mut monic = Vec::with_capacity(gs.len());
    for g in gs {
        monic.push(g.make_monic()?);
    }
    for i in 0..monic.len() {
        for j in (i + 1)..monic.len() {
            let spol = s_pol(&monic[i], &monic[j])?;
            if spol.is_zero() {
                continue;
            }
            if !multi_var_div(&spol, &monic, false)?.remainder.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The unique reduced Gröbner basis of the ideal generated by the Gröbner
/// basis `gs`: monic, mutually irreducible, sorted ascending by leading
/// term.
pub fn reduce_basis(gs: &[Polynomial]) -> Result<Vec<Polynomial>> {
    if !is_groebner(gs)? {
        return Err(Error::NotAGroebnerBasis);
    }
    // Interreduction never drops ideal membership information out of a
    // Gröbner basis, so the result is the canonical reduced basis.
    let mut dedup: Vec<Polynomial> = Vec::new();
    for g in gs {
        if !dedup.contains(g) {
            dedup.push(g.clone());
        }
    }
    interred(&dedup)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::Ring;
    use crate::term::{Term, TermOrder};

    fn f101() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    fn t(exps: &[u32]) -> Term {
        Term::new(exps.to_vec())
    }

    fn poly(r: &Ring, terms: &[(i64, &[u32])]) -> Polynomial {
        r.polynomial(terms.iter().map(|(c, e)| (*c, t(e))).collect())
            .unwrap()
    }

    #[test]
    fn s_half_lifts_to_the_common_multiple() {
        // In F_101[x,y,z] under Lex: the pair of xyz+100 against y^3z+1
        // lifts the first to x*y^3*z with the shifted constant.
        let r = Ring::new(f101(), 3, TermOrder::Lex);
        let f = poly(&r, &[(1, &[1, 1, 1]), (100, &[0, 0, 0])]);
        let g = poly(&r, &[(1, &[0, 3, 1]), (1, &[0, 0, 0])]);
        let lifted = s_half(&f, &g).unwrap();
        assert_eq!(lifted, poly(&r, &[(1, &[1, 3, 1]), (100, &[0, 2, 0])]));
        let other = s_half(&g, &f).unwrap();
        assert_eq!(other, poly(&r, &[(1, &[1, 3, 1]), (1, &[1, 0, 0])]));

        // Against xz+y^2z the gcd of heads is xz, so f is untouched.
        let h = poly(&r, &[(1, &[1, 0, 1]), (1, &[0, 2, 1])]);
        assert_eq!(s_half(&f, &h).unwrap(), f);
    }

    #[test]
    fn s_half_of_a_monic_polynomial_with_itself() {
        let r = Ring::new(f101(), 2, TermOrder::DegRevLex);
        let f = poly(&r, &[(1, &[2, 0]), (1, &[1, 0]), (1, &[0, 0])]);
        assert_eq!(s_half(&f, &f).unwrap(), f);
    }

    #[test]
    fn s_half_multiplies_by_the_missing_variable() {
        let r = Ring::new(f101(), 2, TermOrder::DegRevLex);
        let f = poly(&r, &[(1, &[2, 0]), (1, &[1, 0]), (1, &[0, 0])]);
        let g = poly(&r, &[(1, &[1, 1]), (-1, &[1, 0])]);
        // y * (x^2+x+1)
        assert_eq!(
            s_half(&f, &g).unwrap(),
            poly(&r, &[(1, &[2, 1]), (1, &[1, 1]), (1, &[0, 1])])
        );
    }

    #[test]
    fn s_polynomial_cancels_leading_terms() {
        let r = Ring::new(f101(), 2, TermOrder::DegRevLex);
        let f1 = poly(&r, &[(1, &[2, 0]), (1, &[1, 0]), (1, &[0, 0])]);
        let f2 = poly(&r, &[(1, &[1, 1]), (-1, &[1, 0])]);
        let s = s_pol(&f1, &f2).unwrap();
        assert_eq!(s, poly(&r, &[(1, &[2, 0]), (1, &[1, 1]), (1, &[0, 1])]));
        assert!(s_pol(&f1, &f1).unwrap().is_zero());
    }

    #[test]
    fn coprime_head_pair_reduces_to_zero() {
        let r = Ring::new(f101(), 2, TermOrder::DegRevLex);
        let f = poly(&r, &[(1, &[2, 0]), (1, &[1, 0]), (1, &[0, 0])]);
        let g = poly(&r, &[(1, &[0, 1]), (-1, &[0, 0])]);
        let s = s_pol(&f, &g).unwrap();
        let rem = multi_var_div(&s, &[f, g], false).unwrap().remainder;
        assert!(rem.is_zero());
    }

    #[test]
    fn critical_pair_invariants() {
        let r = Ring::new(f101(), 2, TermOrder::DegRevLex);
        let f1 = poly(&r, &[(1, &[2, 0]), (1, &[1, 0]), (1, &[0, 0])]);
        let f2 = poly(&r, &[(1, &[1, 1]), (-1, &[1, 0])]);
        let pair = CriticalPair::new(&[f1.clone(), f2.clone()], 0, 1).unwrap();
        assert_eq!(pair.lcm(), &t(&[2, 1]));
        assert_eq!(pair.degree(), 3);
        assert_eq!(pair.origin(), (0, 1));
        assert_eq!(pair.left().leading_term().unwrap(), pair.lcm());
        assert_eq!(pair.right().leading_term().unwrap(), pair.lcm());
        assert_eq!(pair.s_polynomial().unwrap(), s_pol(&f1, &f2).unwrap());
    }

    #[test]
    fn buchberger_guided_example_degrevlex() {
        let r = Ring::new(f101(), 2, TermOrder::DegRevLex);
        let f1 = poly(&r, &[(1, &[2, 0]), (1, &[1, 0]), (1, &[0, 0])]);
        let f2 = poly(&r, &[(1, &[1, 1]), (-1, &[1, 0])]);
        let g = buchberger(&[f1.clone(), f2.clone()]).unwrap();
        assert!(g.len() >= 3);
        assert_eq!(&g[..2], &[f1.clone(), f2.clone()], "input is kept");
        assert!(is_groebner(&g).unwrap());
        let reduced = reduce_basis(&g).unwrap();
        let want = vec![
            poly(&r, &[(1, &[0, 1]), (-1, &[0, 0])]),
            poly(&r, &[(1, &[2, 0]), (1, &[1, 0]), (1, &[0, 0])]),
        ];
        assert_eq!(reduced, want);
    }

    #[test]
    fn buchberger_guided_example_deglex() {
        let r = Ring::new(f101(), 2, TermOrder::DegLex);
        let f1 = poly(&r, &[(1, &[2, 0]), (1, &[1, 1]), (1, &[1, 0]), (1, &[0, 0])]);
        let f2 = poly(&r, &[(1, &[1, 1]), (-1, &[1, 0])]);
        let reduced = reduce_basis(&buchberger(&[f1, f2]).unwrap()).unwrap();
        let want = vec![
            poly(&r, &[(1, &[0, 1]), (-1, &[0, 0])]),
            poly(&r, &[(1, &[2, 0]), (2, &[1, 0]), (1, &[0, 0])]),
        ];
        assert_eq!(reduced, want);
    }

    #[test]
    fn unit_ideal_fixpoint() {
        let r = Ring::new(f101(), 2, TermOrder::Lex);
        let one = poly(&r, &[(1, &[0, 0])]);
        let g = buchberger(std::slice::from_ref(&one)).unwrap();
        assert_eq!(g, vec![one.clone()]);
        assert_eq!(reduce_basis(&g).unwrap(), vec![one]);
    }

    #[test]
    fn groebner_checker_accepts_known_basis() {
        let r = Ring::new(f101(), 2, TermOrder::DegRevLex);
        let gb = vec![
            poly(&r, &[(1, &[1, 2]), (-1, &[0, 1])]),
            poly(&r, &[(1, &[0, 4]), (-1, &[2, 0])]),
            poly(&r, &[(1, &[3, 0]), (-1, &[0, 3])]),
        ];
        assert!(is_groebner(&gb).unwrap());
    }

    #[test]
    fn groebner_checker_rejects_non_basis() {
        let r = Ring::new(f101(), 2, TermOrder::Lex);
        // y^3 = y(x^2+y^2) - x(xy) lies in the ideal but is irreducible by
        // the two heads, so the criterion fails.
        let gs = vec![
            poly(&r, &[(1, &[2, 0]), (1, &[0, 2])]),
            poly(&r, &[(1, &[1, 1])]),
        ];
        assert!(!is_groebner(&gs).unwrap());
        assert_eq!(reduce_basis(&gs), Err(Error::NotAGroebnerBasis));
    }

    #[test]
    fn singleton_is_a_basis() {
        let r = Ring::new(f101(), 2, TermOrder::Lex);
        let f = poly(&r, &[(1, &[2, 0]), (1, &[0, 2])]);
        assert!(is_groebner(&[f]).unwrap());
    }

    #[test]
    fn reduce_basis_is_idempotent() {
        let r = Ring::new(f101(), 2, TermOrder::DegRevLex);
        let gb = vec![
            poly(&r, &[(1, &[1, 2]), (-1, &[0, 1])]),
            poly(&r, &[(1, &[0, 4]), (-1, &[2, 0])]),
            poly(&r, &[(1, &[3, 0]), (-1, &[0, 3])]),
        ];
        let once = reduce_basis(&gb).unwrap();
        assert_eq!(reduce_basis(&once).unwrap(), once);
    }

    #[test]
    fn reduce_basis_lex_cross_check() {
        // A redundant Lex basis collapses to the same reduced form as a
        // from-scratch run on two of its generators.
        let r = Ring::new(f101(), 3, TermOrder::Lex);
        let f1 = poly(&r, &[(1, &[1, 1, 1]), (100, &[0, 0, 0])]);
        let f2 = poly(&r, &[(1, &[1, 0, 1]), (1, &[0, 2, 1])]);
        let f3 = poly(&r, &[(1, &[0, 3, 1]), (1, &[0, 0, 0])]);
        let f4 = poly(&r, &[(1, &[1, 0, 0]), (1, &[0, 2, 0])]);
        let big = vec![f1.clone(), f2.clone(), f3.clone(), f4.clone()];
        assert!(is_groebner(&big).unwrap());
        let reduced = reduce_basis(&big).unwrap();
        assert_eq!(reduced, vec![f3.clone(), f4.clone()]);
        let oracle = reduce_basis(&buchberger(&[f1, f2]).unwrap()).unwrap();
        assert_eq!(reduced, oracle);
    }

    #[test]
    fn new_remainders_strictly_grow_the_head_ideal() {
        // Instrumented run: every appended remainder has a head no earlier
        // head divides.
        let r = Ring::new(f101(), 2, TermOrder::DegRevLex);
        let f1 = poly(&r, &[(1, &[2, 0]), (1, &[1, 1]), (1, &[1, 0]), (1, &[0, 0])]);
        let f2 = poly(&r, &[(1, &[1, 1]), (-1, &[1, 0])]);
        let g = buchberger(&[f1, f2]).unwrap();
        for k in 2..g.len() {
            let fresh = g[k].leading_term().unwrap();
            for old in &g[..k] {
                assert!(
                    !old.leading_term().unwrap().divides(fresh),
                    "head ideal failed to grow at step {k}"
                );
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        let r = Ring::new(f101(), 2, TermOrder::Lex);
        assert_eq!(buchberger(&[]), Err(Error::EmptyInput));
        let z = r.zero();
        assert_eq!(buchberger(std::slice::from_ref(&z)), Err(Error::ZeroDivisorPolynomial));
        let f = poly(&r, &[(1, &[1, 0])]);
        assert_eq!(s_half(&f, &z), Err(Error::ZeroPolynomial));
        assert_eq!(s_pol(&z, &f), Err(Error::ZeroPolynomial));
    }
}
