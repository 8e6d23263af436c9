//! Sparse multivariate polynomials over a prime field.
//!
//! A [`Ring`] fixes the coefficient field, the number of variables and the
//! term order; a [`Polynomial`] stores its ring plus a coefficient/term list
//! kept in strictly descending term order with no zero coefficients and no
//! repeated terms. The zero polynomial is the empty list. Equality derives
//! directly from this canonical form.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::term::{Term, TermOrder};
use std::cmp::Ordering;

/// `F_p[x_1, ..., x_n]` with a fixed term order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ring {
    field: PrimeField,
    nvars: usize,
    order: TermOrder,
}

impl Ring {
    pub fn new(field: PrimeField, nvars: usize, order: TermOrder) -> Self {
        Ring {
            field,
            nvars,
            order,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    /// The same ring under a different term order.
    pub fn with_order(&self, order: TermOrder) -> Ring {
        Ring { order, ..*self }
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial {
            ring: *self,
            terms: Vec::new(),
        }
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        self.monomial(c, Term::one(self.nvars))
            .expect("constant term always has the right arity")
    }

    pub fn monomial(&self, c: i64, t: Term) -> Result<Polynomial> {
        self.polynomial(vec![(c, t)])
    }

    /// The variable `x_i` (zero-based).
    pub fn var(&self, i: usize) -> Polynomial {
        assert!(i < self.nvars, "variable index out of range");
        Polynomial {
            ring: *self,
            terms: vec![(1, Term::var_pow(self.nvars, i, 1))],
        }
    }

    /// Builds a polynomial from arbitrary (coefficient, term) pairs:
    /// coefficients are reduced mod p, terms sorted descending, duplicates
    /// merged, zeros dropped.
    pub fn polynomial(&self, pairs: Vec<(i64, Term)>) -> Result<Polynomial> {
        let reduced = pairs
            .into_iter()
            .map(|(c, t)| (self.field.from_i64(c), t))
            .collect();
        self.polynomial_from_residues(reduced)
    }

    pub fn polynomial_from_residues(&self, mut pairs: Vec<(u64, Term)>) -> Result<Polynomial> {
        for (_, t) in &pairs {
            if t.arity() != self.nvars {
                return Err(Error::ArityMismatch {
                    left: t.arity(),
                    right: self.nvars,
                });
            }
        }
        pairs.sort_by(|a, b| self.order.cmp(&b.1, &a.1));
        let mut terms: Vec<(u64, Term)> = Vec::with_capacity(pairs.len());
        for (c, t) in pairs {
            match terms.last_mut() {
                Some(last) if last.1 == t => last.0 = self.field.add(last.0, c),
                _ => terms.push((c, t)),
            }
        }
        terms.retain(|(c, _)| *c != 0);
        Ok(Polynomial { ring: *self, terms })
    }
}

/// A canonical-form sparse polynomial. See the module docs for the
/// representation invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    /// `(coefficient, term)` pairs, strictly descending in the ring's order.
    terms: Vec<(u64, Term)>,
}

impl Polynomial {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Coefficient/term pairs in descending term order.
    pub fn terms(&self) -> &[(u64, Term)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for a nonzero constant.
    pub fn is_unit_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    /// Largest total degree over the support; `None` for the zero
    /// polynomial. Under non-degree-compatible orders this need not be the
    /// degree of the leading term.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(_, t)| t.degree()).max()
    }

    pub fn leading_term(&self) -> Result<&Term> {
        self.terms
            .first()
            .map(|(_, t)| t)
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_coeff(&self) -> Result<u64> {
        self.terms
            .first()
            .map(|(c, _)| *c)
            .ok_or(Error::ZeroPolynomial)
    }

    /// Leading coefficient and leading term together.
    pub fn leading_monomial(&self) -> Result<(u64, &Term)> {
        self.terms
            .first()
            .map(|(c, t)| (*c, t))
            .ok_or(Error::ZeroPolynomial)
    }

    pub(crate) fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let field = self.ring.field;
        let order = self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ca, ta) = &self.terms[i];
            let (cb, tb) = &other.terms[j];
            match order.cmp(ta, tb) {
                Ordering::Greater => {
                    out.push((*ca, ta.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((*cb, tb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(*ca, *cb);
                    if c != 0 {
                        out.push((c, ta.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().cloned());
        Ok(Polynomial {
            ring: self.ring,
            terms: out,
        })
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field;
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(c, t)| (field.neg(*c), t.clone()))
                .collect(),
        }
    }

    /// Multiplication by a scalar (possibly zero).
    pub fn scale(&self, c: u64) -> Polynomial {
        let field = self.ring.field;
        let c = field.from_u64(c);
        if c == 0 {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(a, t)| (field.mul(*a, c), t.clone()))
                .collect(),
        }
    }

    /// Multiplication by the monomial `c * t`. Term order is compatible with
    /// multiplication, so the descending layout is preserved directly.
    pub fn mul_monomial(&self, c: u64, t: &Term) -> Result<Polynomial> {
        if t.arity() != self.ring.nvars {
            return Err(Error::ArityMismatch {
                left: t.arity(),
                right: self.ring.nvars,
            });
        }
        let field = self.ring.field;
        let c = field.from_u64(c);
        if c == 0 {
            return Ok(self.ring.zero());
        }
        Ok(Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(a, u)| (field.mul(*a, c), u.mul(t)))
                .collect(),
        })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let field = self.ring.field;
        let mut pairs = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ca, ta) in &self.terms {
            for (cb, tb) in &other.terms {
                pairs.push((field.mul(*ca, *cb), ta.mul(tb)));
            }
        }
        self.ring.polynomial_from_residues(pairs)
    }

    /// Divides by the leading coefficient. Fails on the zero polynomial.
    pub fn make_monic(&self) -> Result<Polynomial> {
        let lc = self.leading_coeff()?;
        if lc == 1 {
            return Ok(self.clone());
        }
        Ok(self.scale(self.ring.field.inv(lc)?))
    }

    /// The same polynomial re-canonicalized under another term order.
    pub fn with_order(&self, order: TermOrder) -> Polynomial {
        let ring = self.ring.with_order(order);
        ring.polynomial_from_residues(self.terms.clone())
            .expect("terms already have the right arity")
    }

    /// Evaluates at a point given as one residue per variable.
    pub fn eval(&self, point: &[u64]) -> Result<u64> {
        if point.len() != self.ring.nvars {
            return Err(Error::ArityMismatch {
                left: point.len(),
                right: self.ring.nvars,
            });
        }
        let field = self.ring.field;
        let mut acc = 0u64;
        for (c, t) in &self.terms {
            let mut v = *c;
            for (i, &e) in t.exponents().iter().enumerate() {
                if e > 0 {
                    v = field.mul(v, field.pow(field.from_u64(point[i]), e as u64));
                }
            }
            acc = field.add(acc, v);
        }
        Ok(acc)
    }
}

/// Union of the supports of `polys`, sorted descending in their common
/// ring's order. Zero polynomials contribute nothing.
pub fn merged_support(polys: &[Polynomial]) -> Result<Vec<Term>> {
    if polys.is_empty() {
        return Ok(Vec::new());
    }
    let ring = polys[0].ring;
    let mut all: Vec<Term> = Vec::new();
    for p in polys {
        if p.ring != ring {
            return Err(Error::RingMismatch);
        }
        all.extend(p.terms.iter().map(|(_, t)| t.clone()));
    }
    all.sort_by(|a, b| ring.order.cmp(b, a));
    all.dedup();
    Ok(all)
}
