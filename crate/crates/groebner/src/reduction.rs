//! Multivariate division and interreduction.
//!
//! Two reduction flavours are used throughout the crate:
//!
//! * [`multi_var_red`] rewrites only the *leading* term of `f`, repeatedly,
//!   until it is no longer divisible by any divisor leading term. The first
//!   divisor (in list order) whose leading term divides is always the one
//!   applied.
//! * [`multi_var_div`] is complete division: it peels off irreducible
//!   leading monomials into the remainder and keeps reducing, so no term of
//!   the remainder is divisible by any divisor leading term. It can also
//!   report the quotient cofactors as a division certificate.
//!
//! [`interred`] brings a generator list into interreduced, monic form
//! without changing the generated ideal.

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Remainder plus optional quotients aligned with the divisor list, so that
/// `f = sum(quotients[i] * divisors[i]) + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionResult {
    pub remainder: Polynomial,
    pub quotients: Option<Vec<Polynomial>>,
}

fn check_divisors(f: &Polynomial, divisors: &[Polynomial]) -> Result<()> {
    for g in divisors {
        if g.ring() != f.ring() {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() {
            return Err(Error::ZeroDivisorPolynomial);
        }
    }
    Ok(())
}

/// Head reduction: repeatedly cancels the leading monomial of `f` against
/// the first divisor whose leading term divides it. Stops as soon as the
/// leading term is irreducible (or `f` reaches zero). Tail terms are left
/// untouched.
pub fn multi_var_red(f: &Polynomial, divisors: &[Polynomial]) -> Result<Polynomial> {
    check_divisors(f, divisors)?;
    let field = f.ring().field();
    let mut p = f.clone();
    'outer: while !p.is_zero() {
        let (lc, lt) = p.leading_monomial()?;
        let lt = lt.clone();
        for g in divisors {
            let (glc, glt) = g.leading_monomial()?;
            if let Some(t) = lt.div(glt) {
                // p -= (lm(p)/lm(g)) * g
                let q = field.div(lc, glc)?;
                p = p.sub(&g.mul_monomial(q, &t)?)?;
                continue 'outer;
            }
        }
        break;
    }
    Ok(p)
}

/// Complete division of `f` by `divisors`. No term of the remainder is
/// divisible by any divisor leading term; with `with_quotients` the
/// cofactors are returned and satisfy the division identity with
/// `lt(q_i * g_i) <= lt(f)`.
pub fn multi_var_div(
    f: &Polynomial,
    divisors: &[Polynomial],
    with_quotients: bool,
) -> Result<DivisionResult> {
    check_divisors(f, divisors)?;
    let ring = *f.ring();
    let field = ring.field();
    let mut quotients = if with_quotients {
        Some(vec![ring.zero(); divisors.len()])
    } else {
        None
    };
    let mut p = f.clone();
    let mut remainder = ring.zero();
    'outer: while !p.is_zero() {
        let (lc, lt) = p.leading_monomial()?;
        let lt = lt.clone();
        for (k, g) in divisors.iter().enumerate() {
            let (glc, glt) = g.leading_monomial()?;
            if let Some(t) = lt.div(glt) {
                let q = field.div(lc, glc)?;
                p = p.sub(&g.mul_monomial(q, &t)?)?;
                if let Some(qs) = quotients.as_mut() {
                    qs[k] = qs[k].add(&ring.polynomial_from_residues(vec![(q, t)])?)?;
                }
                continue 'outer;
            }
        }
        // Irreducible leading monomial: move it to the remainder.
        remainder = remainder.add(&ring.polynomial_from_residues(vec![(lc, lt.clone())])?)?;
        p = p.sub(&ring.polynomial_from_residues(vec![(lc, lt)])?)?;
    }
    Ok(DivisionResult {
        remainder,
        quotients,
    })
}

/// Convenience wrapper returning just the remainder (the normal form when
/// `divisors` is a Gröbner basis).
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Result<Polynomial> {
    Ok(multi_var_div(f, divisors, false)?.remainder)
}

/// Stable ascending sort by leading term. Zero polynomials are rejected.
pub fn asc_ord_lt(polys: &[Polynomial]) -> Result<Vec<Polynomial>> {
    if polys.is_empty() {
        return Ok(Vec::new());
    }
    let ring = *polys[0].ring();
    for p in polys {
        if p.ring() != &ring {
            return Err(Error::RingMismatch);
        }
        if p.is_zero() {
            return Err(Error::ZeroDivisorPolynomial);
        }
    }
    let order = ring.order();
    let mut out = polys.to_vec();
    out.sort_by(|a, b| {
        order.cmp(
            a.leading_term().expect("zero polynomials were rejected"),
            b.leading_term().expect("zero polynomials were rejected"),
        )
    });
    Ok(out)
}

/// Interreduction: returns a monic list generating the same ideal in which
/// no element's support term is divisible by another element's leading term.
/// Output is sorted ascending by leading term.
///
/// The loop head-reduces each element against the already-kept ones (which
/// all have smaller leading terms) and repeats until the multiset of leading
/// terms stabilizes; a final complete-division pass cleans the tails, and
/// every survivor is scaled monic.
pub fn interred(polys: &[Polynomial]) -> Result<Vec<Polynomial>> {
    if polys.is_empty() {
        return Err(Error::EmptyInput);
    }
    for (i, p) in polys.iter().enumerate() {
        if p.is_zero() {
            return Err(Error::ZeroDivisorPolynomial);
        }
        if polys[i + 1..].contains(p) {
            return Err(Error::DuplicatePolynomial);
        }
    }
    let ring = *polys[0].ring();
    let order = ring.order();

    let lt_multiset = |list: &[Polynomial]| -> Vec<crate::term::Term> {
        let mut lts: Vec<_> = list
            .iter()
            .map(|p| p.leading_term().expect("list holds nonzero polynomials").clone())
            .collect();
        lts.sort_by(|a, b| order.cmp(a, b));
        lts
    };

    let mut current = asc_ord_lt(polys)?;
    loop {
        let before = lt_multiset(&current);
        let mut kept: Vec<Polynomial> = Vec::with_capacity(current.len());
        for f in &current {
            let r = multi_var_red(f, &kept)?;
            if !r.is_zero() {
                kept.push(r);
            }
        }
        let after = lt_multiset(&kept);
        if before == after {
            current = asc_ord_lt(&kept)?;
            break;
        }
        current = asc_ord_lt(&kept)?;
    }

    // Tail pass: complete division against the already-finished prefix
    // (everything with a smaller leading term), then scale monic. Larger
    // leading terms cannot divide a tail term, so the prefix suffices.
    let mut finished: Vec<Polynomial> = Vec::with_capacity(current.len());
    for f in &current {
        let r = multi_var_div(f, &finished, false)?.remainder;
        debug_assert!(!r.is_zero(), "leading terms were already stable");
        finished.push(r.make_monic()?);
    }
    Ok(finished)
}
