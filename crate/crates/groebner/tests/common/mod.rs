//! Shared fixtures and generators for the integration suites.

#![allow(dead_code)]

pub mod props;

use groebner::field::PrimeField;
use groebner::{Polynomial, Ring, Term, TermOrder};
use rand::Rng;

pub fn f101() -> PrimeField {
    PrimeField::new(101).unwrap()
}

pub fn t(exps: &[u32]) -> Term {
    Term::new(exps.to_vec())
}

/// Builds a polynomial from `(signed coefficient, exponent vector)` pairs.
pub fn poly(r: &Ring, monomials: &[(i64, &[u32])]) -> Polynomial {
    r.polynomial(
        monomials
            .iter()
            .map(|(c, e)| (*c, Term::new(e.to_vec())))
            .collect(),
    )
    .unwrap()
}

/// Sorts a basis ascending by leading term so two bases can be compared as
/// sets of polynomials (reduced bases are monic, so this is a total key).
pub fn sorted_by_lt(polys: &[Polynomial]) -> Vec<Polynomial> {
    let mut out = polys.to_vec();
    out.sort_by(|a, b| {
        let ord = a.ring().order();
        ord.cmp(a.leading_term().unwrap(), b.leading_term().unwrap())
    });
    out
}

/// Random nonzero polynomial with at most `max_terms` monomials, each of
/// total degree at most `max_deg`.
pub fn random_poly(rng: &mut impl Rng, r: &Ring, max_terms: usize, max_deg: u32) -> Polynomial {
    loop {
        let nterms = rng.gen_range(1..=max_terms);
        let mut pairs = Vec::with_capacity(nterms);
        for _ in 0..nterms {
            let mut exps = vec![0u32; r.nvars()];
            let mut budget = max_deg;
            for e in exps.iter_mut() {
                let step = rng.gen_range(0..=budget);
                *e = step;
                budget -= step;
            }
            let coeff = rng.gen_range(1..r.field().modulus()) as i64;
            pairs.push((coeff, Term::new(exps)));
        }
        let p = r.polynomial(pairs).unwrap();
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random generating set: 1–3 distinct nonzero polynomials.
pub fn random_system(rng: &mut impl Rng, r: &Ring) -> Vec<Polynomial> {
    loop {
        let count = rng.gen_range(1..=3);
        let mut polys: Vec<Polynomial> = Vec::with_capacity(count);
        for _ in 0..count {
            let p = random_poly(rng, r, 3, 3);
            if !polys.contains(&p) {
                polys.push(p);
            }
        }
        if !polys.is_empty() {
            return polys;
        }
    }
}

/// Exhaustively enumerates the common zeros of `polys` over F_p^n,
/// returned sorted. Only sensible for tiny p^n.
pub fn brute_force_solutions(polys: &[Polynomial]) -> Vec<Vec<u64>> {
    assert!(!polys.is_empty());
    let ring = polys[0].ring();
    let p = ring.field().modulus();
    let n = ring.nvars();
    let total = (p as u128).pow(n as u32);
    assert!(total <= 2_000_000, "brute force domain too large");
    let mut out = Vec::new();
    let mut point = vec![0u64; n];
    for idx in 0..total {
        let mut k = idx;
        for slot in point.iter_mut() {
            *slot = (k % p as u128) as u64;
            k /= p as u128;
        }
        if polys.iter().all(|f| f.eval(&point).unwrap() == 0) {
            out.push(point.clone());
        }
    }
    out.sort();
    out
}

pub const ALL_ORDERS: [TermOrder; 3] = [TermOrder::Lex, TermOrder::DegLex, TermOrder::DegRevLex];
