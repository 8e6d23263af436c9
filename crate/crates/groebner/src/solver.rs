//! Enumeration of all F_p-rational solutions of a zero-dimensional system.
//!
//! Pipeline: compute a degree-order Gröbner basis with the matrix
//! algorithm, convert it to lexicographic order by linear algebra, then
//! walk the triangular lexicographic basis from its univariate end,
//! substituting partial points and scanning roots of the gcd of the
//! resulting univariates. Root scanning is exhaustive over the base
//! field, so the modulus is capped; every candidate point is verified
//! against the original inputs before it is reported.

use crate::error::{Error, Result};
use crate::f4::{f4, SelectionStrategy};
use crate::fglm::{fglm, staircase};
use crate::field::PrimeField;
use crate::poly::Polynomial;
use crate::term::TermOrder;

/// Largest modulus for which exhaustive root scanning is acceptable.
const MAX_SOLVE_MODULUS: u64 = 1 << 20;

/// All base-field solutions of a system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet {
    /// One residue tuple per solution, in variable order, sorted.
    pub points: Vec<Vec<u64>>,
    /// Always true here: the search is exhaustive over F_p, so absence
    /// from `points` proves there is no further F_p-solution (solutions in
    /// extension fields are out of scope).
    pub complete_over_base: bool,
}

fn check_polys(fs: &[Polynomial]) -> Result<()> {
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

/// True when the basis contains a nonzero constant, i.e. generates the
/// unit ideal (empty variety).
pub fn unit_ideal_check(gb: &[Polynomial]) -> bool {
    gb.iter()
        .any(|g| !g.is_zero() && g.leading_term().map(|t| t.is_one()).unwrap_or(false))
}

/// For a Gröbner basis: whether the ideal is zero-dimensional, and if so
/// the number of staircase cells (the vector-space dimension of the
/// quotient, counting solutions with multiplicity over the closure).
pub fn dimension_report(gb: &[Polynomial]) -> Result<(bool, Option<usize>)> {
    check_polys(gb)?;
    match staircase(gb) {
        Ok(sc) => Ok((true, Some(sc.len()))),
        Err(Error::NotZeroDimensional) => Ok((false, None)),
        Err(e) => Err(e),
    }
}

/// Dense univariate coefficients (index = exponent) of `f` with every
/// variable after `level` substituted from `point`. Variables before
/// `level` must not occur in `f`. An empty vector is the zero polynomial.
fn substituted_univariate(f: &Polynomial, level: usize, point: &[u64]) -> Vec<u64> {
    let field = f.ring().field();
    let mut coeffs: Vec<u64> = Vec::new();
    for (c, t) in f.terms() {
        let exps = t.exponents();
        debug_assert!(
            exps[..level].iter().all(|&e| e == 0),
            "stratification placed a polynomial below its level"
        );
        let mut val = *c;
        for (j, &e) in exps.iter().enumerate().skip(level + 1) {
            if e > 0 {
                val = field.mul(val, field.pow(point[j], e as u64));
            }
        }
        let e = exps[level] as usize;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, 0);
        }
        coeffs[e] = field.add(coeffs[e], val);
    }
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    coeffs
}

fn horner(field: PrimeField, coeffs: &[u64], x: u64) -> u64 {
    let mut acc = 0;
    for &c in coeffs.iter().rev() {
        acc = field.add(field.mul(acc, x), c);
    }
    acc
}

/// Remainder of `a` by nonzero `b`, both dense coefficient vectors.
fn univariate_rem(field: PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    debug_assert!(!b.is_empty());
    let mut r = a.to_vec();
    let lead = *b.last().expect("divisor is nonzero");
    let inv = field
        .inv(lead)
        .expect("leading coefficient of a nonzero polynomial is a unit");
    while r.len() >= b.len() {
        let factor = field.mul(*r.last().expect("trimmed below"), inv);
        let shift = r.len() - b.len();
        for (i, &bc) in b.iter().enumerate() {
            let sub = field.mul(factor, bc);
            r[shift + i] = field.sub(r[shift + i], sub);
        }
        while r.last() == Some(&0) {
            r.pop();
        }
        if r.is_empty() {
            break;
        }
    }
    r
}

/// Monic gcd of two dense univariate polynomials.
fn univariate_gcd(field: PrimeField, mut a: Vec<u64>, mut b: Vec<u64>) -> Vec<u64> {
    while !b.is_empty() {
        let r = univariate_rem(field, &a, &b);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        if lead != 1 {
            let inv = field.inv(lead).expect("nonzero leading coefficient");
            for c in &mut a {
                *c = field.mul(*c, inv);
            }
        }
    }
    a
}

fn field_roots(field: PrimeField, coeffs: &[u64]) -> Vec<u64> {
    if coeffs.len() <= 1 {
        // Zero or a nonzero constant: either everything or nothing
        // vanishes; callers never scan the zero polynomial.
        debug_assert!(!coeffs.is_empty(), "root scan of the zero polynomial");
        return Vec::new();
    }
    (0..field.modulus())
        .filter(|&a| horner(field, coeffs, a) == 0)
        .collect()
}

/// Depth-first back-substitution over the level-stratified lexicographic
/// basis. `levels[l]` holds the basis elements whose largest variable is
/// `x_l`; `point[l..]` is filled on the way down.
fn back_substitute(
    field: PrimeField,
    levels: &[Vec<Polynomial>],
    level: usize,
    point: &mut [u64],
    out: &mut Vec<Vec<u64>>,
) {
    let mut gcd: Vec<u64> = Vec::new();
    for f in &levels[level] {
        let uni = substituted_univariate(f, level, point);
        if uni.is_empty() {
            continue;
        }
        gcd = if gcd.is_empty() {
            uni
        } else {
            univariate_gcd(field, gcd, uni)
        };
        if gcd.len() == 1 {
            return; // branch died: a nonzero constant has no roots
        }
    }
    if gcd.is_empty() {
        // All level polynomials vanished identically; impossible over a
        // zero-dimensional ideal, whose pure-power head at this level
        // keeps its monic leading coefficient under substitution.
        unreachable!("no univariate constraint at level {level}");
    }
    for a in field_roots(field, &gcd) {
        point[level] = a;
        if level == 0 {
            out.push(point.to_vec());
        } else {
            back_substitute(field, levels, level - 1, point, out);
        }
    }
}

/// Direct evaluation for bases in shape form: one univariate in the last
/// variable plus one `x_i - g_i(last)` rewrite per other variable.
/// Returns `None` when the basis is not in that form.
fn shape_points(lex: &[Polynomial]) -> Option<Vec<Vec<u64>>> {
    let ring = lex[0].ring();
    let n = ring.nvars();
    let field = ring.field();
    if lex.len() != n {
        return None;
    }
    let last = n - 1;
    if !lex[0].terms().iter().all(|(_, t)| t.is_pure_power_of(last)) {
        return None;
    }
    for (i, g) in lex.iter().enumerate().skip(1) {
        let lt = g.leading_term().ok()?;
        if lt != &crate::term::Term::var_pow(n, last - i, 1) {
            return None;
        }
        if !g
            .terms()
            .iter()
            .skip(1)
            .all(|(_, t)| t.is_pure_power_of(last))
        {
            return None;
        }
    }
    let uni: Vec<u64> = {
        let mut coeffs = vec![0; lex[0].leading_term().ok()?.exponents()[last] as usize + 1];
        for (c, t) in lex[0].terms() {
            coeffs[t.exponents()[last] as usize] = *c;
        }
        coeffs
    };
    let mut points = Vec::new();
    for a in field_roots(field, &uni) {
        let mut point = vec![0; n];
        point[last] = a;
        for (i, g) in lex.iter().enumerate().skip(1) {
            let mut tail = 0;
            for (c, t) in g.terms().iter().skip(1) {
                let e = t.exponents()[last] as u64;
                tail = field.add(tail, field.mul(*c, field.pow(a, e)));
            }
            point[last - i] = field.neg(tail);
        }
        points.push(point);
    }
    Some(points)
}

/// All F_p-solutions of the system `fs`, each coordinate a least
/// non-negative residue, sorted; multiplicities are collapsed.
///
/// Errors with `ModulusTooLargeForSolve` when the field is too big for
/// exhaustive root scanning, and `NotZeroDimensional` when the solution
/// set is not finite over the closure.
pub fn solve(fs: &[Polynomial]) -> Result<SolutionSet> {
    check_polys(fs)?;
    let ring = *fs[0].ring();
    let field = ring.field();
    if field.modulus() >= MAX_SOLVE_MODULUS {
        return Err(Error::ModulusTooLargeForSolve(field.modulus()));
    }
    let drl: Vec<Polynomial> = fs
        .iter()
        .map(|f| f.with_order(TermOrder::DegRevLex))
        .collect();
    let gb = f4(&drl, SelectionStrategy::NormalDegree)?.basis;
    if unit_ideal_check(&gb) {
        return Ok(SolutionSet {
            points: Vec::new(),
            complete_over_base: true,
        });
    }
    let lex = fglm(&gb, TermOrder::Lex)?;

    let n = ring.nvars();
    let mut candidates = match shape_points(&lex) {
        Some(points) => points,
        None => {
            let mut levels: Vec<Vec<Polynomial>> = vec![Vec::new(); n];
            for g in &lex {
                let level = g
                    .leading_term()?
                    .exponents()
                    .iter()
                    .position(|&e| e > 0)
                    .expect("a non-unit basis has no constant element");
                levels[level].push(g.clone());
            }
            let mut out = Vec::new();
            let mut point = vec![0; n];
            back_substitute(field, &levels, n - 1, &mut point, &mut out);
            out
        }
    };

    candidates.retain(|pt| {
        fs.iter()
            .all(|f| f.eval(pt).map(|v| v == 0).unwrap_or(false))
    });
    candidates.sort();
    candidates.dedup();
    Ok(SolutionSet {
        points: candidates,
        complete_over_base: true,
    })
}
