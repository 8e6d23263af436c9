//! Order conversion for zero-dimensional ideals by linear algebra.
//!
//! A zero-dimensional ideal leaves a finite-dimensional quotient ring; the
//! terms outside the head ideal (the staircase) are a vector-space basis
//! of that quotient, and multiplication by each variable is a matrix on
//! it. Walking candidate terms of the target order in ascending order and
//! testing their normal-form vectors for linear dependence — with the
//! inverse-change-of-basis matrix `P` kept incrementally updated — emits
//! exactly the reduced Gröbner basis under the target order, without
//! running a second basis computation.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::buchberger::is_groebner;
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::poly::{Polynomial, Ring};
use crate::reduction::multi_var_div;
use crate::term::{Term, TermOrder};

/// The terms not divisible by any basis head, ascending under the ring's
/// order — a vector-space basis of the quotient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Staircase {
    ring: Ring,
    terms: Vec<Term>,
    index: HashMap<Term, usize>,
}

impl Staircase {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Cells in ascending term order; the constant term is first.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Number of cells — the dimension of the quotient as a vector space.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True only for the unit ideal.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Position of a cell, if `t` lies under the staircase.
    pub fn position(&self, t: &Term) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// The terms one variable step outside the staircase, ascending.
    pub fn border(&self) -> Vec<Term> {
        let n = self.ring.nvars();
        let mut out: Vec<Term> = Vec::new();
        for w in &self.terms {
            for i in 0..n {
                let t = w.mul(&Term::var_pow(n, i, 1));
                if self.index.contains_key(&t) || out.contains(&t) {
                    continue;
                }
                out.push(t);
            }
        }
        let order = self.ring.order();
        out.sort_by(|a, b| order.cmp(a, b));
        out
    }
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

/// The staircase of a Gröbner basis' head ideal.
///
/// Errors with `NotZeroDimensional` unless every variable has a pure power
/// among the heads — the finiteness criterion for the quotient.
pub fn staircase(gb: &[Polynomial]) -> Result<Staircase> {
    check_polys(gb)?;
    let ring = *gb[0].ring();
    let n = ring.nvars();
    let heads: Vec<&Term> = gb
        .iter()
        .map(|g| g.leading_term().expect("basis is nonzero"))
        .collect();
    for i in 0..n {
        if !heads.iter().any(|t| t.is_pure_power_of(i)) {
            return Err(Error::NotZeroDimensional);
        }
    }
    // Walk outward from the constant term; the staircase is closed under
    // division, so every cell is reachable by single variable steps.
    let mut seen = std::collections::HashSet::new();
    let mut stack = vec![Term::one(n)];
    let mut cells = Vec::new();
    while let Some(t) = stack.pop() {
        if !seen.insert(t.clone()) {
            continue;
        }
        if heads.iter().any(|h| h.divides(&t)) {
            continue;
        }
        for i in 0..n {
            stack.push(t.mul(&Term::var_pow(n, i, 1)));
        }
        cells.push(t);
    }
    let order = ring.order();
    cells.sort_by(|a, b| order.cmp(a, b));
    let index = cells
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i))
        .collect();
    Ok(Staircase {
        ring,
        terms: cells,
        index,
    })
}

/// One multiplication matrix per variable: column `j` of matrix `k` holds
/// the staircase coordinates of the normal form of `x_k · w_j`.
pub fn mult_matrices(gb: &[Polynomial], sc: &Staircase) -> Result<Vec<DenseMatrix>> {
    check_polys(gb)?;
    let ring = *gb[0].ring();
    let n = ring.nvars();
    let d = sc.len();
    let field = ring.field();
    let mut mats = Vec::with_capacity(n);
    for k in 0..n {
        let mut m = DenseMatrix::zeros(field, d, d);
        for (j, w) in sc.terms().iter().enumerate() {
            let shifted = ring.monomial(1, w.mul(&Term::var_pow(n, k, 1)))?;
            let nf = multi_var_div(&shifted, gb, false)?.remainder;
            for (c, t) in nf.terms() {
                let row = sc
                    .position(t)
                    .expect("normal forms are supported on the staircase");
                m.set(row, j, *c);
            }
        }
        mats.push(m);
    }
    Ok(mats)
}

/// Change-of-basis refresh: given `P` mapping the tracked vectors to the
/// first `r` unit vectors and the image `lambda = P·v` of a new
/// independent vector, returns `P'` that additionally maps `v` to unit
/// vector `r` (0-based) while preserving the first `r` images.
///
/// Errors with `NoPivot` when `lambda` vanishes beyond position `r`, i.e.
/// the new vector was dependent after all.
pub fn update(p: &DenseMatrix, r: usize, lambda: &[u64]) -> Result<DenseMatrix> {
    let d = p.nrows();
    assert_eq!(p.ncols(), d, "change-of-basis matrix must be square");
    assert_eq!(lambda.len(), d, "image vector length must match");
    let field = p.field();
    let k = (r..d).find(|&i| lambda[i] != 0).ok_or(Error::NoPivot)?;
    let mut out = p.clone();
    let mut lam = lambda.to_vec();
    out.swap_rows(r, k);
    lam.swap(r, k);
    out.scale_row(r, field.inv(lam[r])?);
    for (i, &l) in lam.iter().enumerate() {
        if i != r && l != 0 {
            out.sub_scaled_row(i, r, l);
        }
    }
    Ok(out)
}

/// Everything a conversion run exposes for inspection.
#[derive(Debug, Clone)]
pub struct FglmReport {
    /// The reduced Gröbner basis under the target order, ascending by
    /// leading term (= discovery order).
    pub basis: Vec<Polynomial>,
    /// Candidate terms actually examined by the main loop.
    pub steps: usize,
    /// `P` after each refresh, in refresh order.
    pub p_snapshots: Vec<DenseMatrix>,
    /// The target-order staircase, in discovery order (ascending).
    pub staircase: Vec<Term>,
}

/// An entry of the pending-term list: test `x_k · S[l]` next.
struct PendingTerm {
    k: usize,
    l: usize,
    realized: Term,
}

fn validate_reduced_basis(gb: &[Polynomial]) -> Result<()> {
    check_polys(gb)?;
    if !is_groebner(gb)? {
        return Err(Error::NotAGroebnerBasis);
    }
    for g in gb {
        if g.leading_coeff()? != 1 {
            return Err(Error::NotReduced);
        }
    }
    for (i, g) in gb.iter().enumerate() {
        for (_, t) in g.terms() {
            for (j, h) in gb.iter().enumerate() {
                if i != j && h.leading_term()?.divides(t) {
                    return Err(Error::NotReduced);
                }
            }
        }
    }
    Ok(())
}

/// Converts the reduced Gröbner basis `gb1` to the reduced Gröbner basis
/// of the same ideal under `ord2`.
pub fn fglm(gb1: &[Polynomial], ord2: TermOrder) -> Result<Vec<Polynomial>> {
    Ok(fglm_detailed(gb1, ord2)?.basis)
}

/// [`fglm`] with the full run report.
///
/// Candidate terms are tested ascending under the target order, starting
/// from the variables. A candidate whose normal-form vector is dependent
/// on the tracked ones yields a basis polynomial (and kills every pending
/// multiple of it); an independent one joins the target staircase and
/// spawns its variable multiples as new candidates.
pub fn fglm_detailed(gb1: &[Polynomial], ord2: TermOrder) -> Result<FglmReport> {
    validate_reduced_basis(gb1)?;
    if gb1.iter().any(|g| g.is_unit_constant()) {
        return Err(Error::UnitIdeal);
    }
    let ring1 = *gb1[0].ring();
    let ring2 = ring1.with_order(ord2);
    let sc = staircase(gb1)?;
    let d = sc.len();
    let mats = mult_matrices(gb1, &sc)?;
    let n = ring1.nvars();
    let field = ring1.field();

    let mut s_terms: Vec<Term> = vec![Term::one(n)];
    let mut vecs: Vec<Vec<u64>> = {
        let mut e0 = vec![0; d];
        e0[sc.position(&Term::one(n)).expect("1 is under the staircase")] = 1;
        vec![e0]
    };
    let mut p = DenseMatrix::identity(field, d);
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut snapshots = Vec::new();
    let mut steps = 0;

    let mut pending: Vec<PendingTerm> = (0..n)
        .map(|k| PendingTerm {
            k,
            l: 0,
            realized: Term::var_pow(n, k, 1),
        })
        .collect();
    pending.sort_by(|a, b| ord2.cmp(&a.realized, &b.realized));

    while !pending.is_empty() {
        let entry = pending.remove(0);
        let t = entry.realized;
        if basis
            .iter()
            .any(|h| h.leading_term().expect("basis is nonzero").divides(&t))
        {
            continue;
        }
        steps += 1;
        let v = mats[entry.k].mul_vec(&vecs[entry.l]);
        let lambda = p.mul_vec(&v);
        let r = s_terms.len();
        if lambda[r..].iter().all(|&c| c == 0) {
            // Dependent: t rewrites to a combination of smaller staircase
            // terms, giving the next basis element t - sum(lambda_i S_i).
            let mut parts: Vec<(u64, Term)> = vec![(1, t.clone())];
            for (i, w) in s_terms.iter().enumerate() {
                if lambda[i] != 0 {
                    parts.push((field.neg(lambda[i]), w.clone()));
                }
            }
            basis.push(ring2.polynomial_from_residues(parts)?);
            pending.retain(|e| !t.divides(&e.realized));
        } else {
            p = update(&p, r, &lambda)?;
            snapshots.push(p.clone());
            s_terms.push(t.clone());
            vecs.push(v);
            let fresh = s_terms.len() - 1;
            for k in 0..n {
                let realized = t.mul(&Term::var_pow(n, k, 1));
                if basis
                    .iter()
                    .any(|h| h.leading_term().expect("basis is nonzero").divides(&realized))
                {
                    continue;
                }
                if pending.iter().any(|e| e.realized == realized) {
                    continue;
                }
                let pos = pending
                    .partition_point(|e| ord2.cmp(&e.realized, &realized) == Ordering::Less);
                pending.insert(
                    pos,
                    PendingTerm {
                        k,
                        l: fresh,
                        realized,
                    },
                );
            }
        }
    }

    Ok(FglmReport {
        basis,
        steps,
        p_snapshots: snapshots,
        staircase: s_terms,
    })
}

/// The minimal polynomial of `x_var` in the quotient ring: the monic
/// univariate polynomial of least degree that the ideal absorbs.
///
/// Returned in the input ring; its degree is at most the staircase size.
pub fn min_poly_var(gb: &[Polynomial], var: usize) -> Result<Polynomial> {
    check_polys(gb)?;
    let ring = *gb[0].ring();
    let n = ring.nvars();
    assert!(var < n, "variable index out of range");
    if !is_groebner(gb)? {
        return Err(Error::NotAGroebnerBasis);
    }
    let sc = staircase(gb)?;
    let d = sc.len();
    if d == 0 {
        // Unit ideal: everything is zero in the quotient.
        return Ok(ring.constant(1));
    }
    let m = &mult_matrices(gb, &sc)?[var];
    let field = ring.field();
    let mut p = DenseMatrix::identity(field, d);
    let mut v = {
        let mut e0 = vec![0; d];
        e0[sc.position(&Term::one(n)).expect("1 is under the staircase")] = 1;
        e0
    };
    for j in 0..=d {
        let lambda = p.mul_vec(&v);
        if lambda[j..].iter().all(|&c| c == 0) {
            let mut parts: Vec<(u64, Term)> = vec![(1, Term::var_pow(n, var, j as u32))];
            for (e, &l) in lambda.iter().enumerate().take(j) {
                if l != 0 {
                    parts.push((field.neg(l), Term::var_pow(n, var, e as u32)));
                }
            }
            return ring.polynomial_from_residues(parts);
        }
        p = update(&p, j, &lambda)?;
        v = m.mul_vec(&v);
    }
    unreachable!("d+1 vectors in a d-dimensional space must be dependent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::term::TermOrder;

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

    /// Reduced basis with staircase {1, y, x, xy}.
    fn quartet_basis(r: &Ring) -> Vec<Polynomial> {
        vec![
            poly(r, &[(1, &[0, 2]), (34, &[1, 0]), (1, &[0, 1]), (2, &[0, 0])]),
            poly(r, &[(1, &[2, 0]), (1, &[1, 1]), (2, &[0, 1])]),
        ]
    }

    /// Reduced basis with an 8-cell staircase.
    fn octet_basis(r: &Ring) -> Vec<Polynomial> {
        vec![
            poly(r, &[(1, &[1, 2]), (-1, &[0, 1])]),
            poly(r, &[(1, &[0, 4]), (-1, &[2, 0])]),
            poly(r, &[(1, &[3, 0]), (-1, &[0, 3])]),
        ]
    }

    fn dense(field: PrimeField, rows: &[&[i64]]) -> DenseMatrix {
        let rows: Vec<Vec<u64>> = rows
            .iter()
            .map(|r| r.iter().map(|&c| field.from_i64(c)).collect())
            .collect();
        DenseMatrix::from_rows(field, &rows)
    }

    #[test]
    fn staircase_of_the_quartet() {
        let r = Ring::new(f101(), 2, TermOrder::DegRevLex);
        let sc = staircase(&quartet_basis(&r)).unwrap();
        assert_eq!(
            sc.terms(),
            &[t(&[0, 0]), t(&[0, 1]), t(&[1, 0]), t(&[1, 1])]
        );
        assert_eq!(sc.len(), 4);
        assert_eq!(sc.position(&t(&[1, 1])), Some(3));
        assert_eq!(sc.position(&t(&[0, 2])), None);
    }

    #[test]
    fn staircase_and_border_of_the_octet() {
        let r = Ring::new(f101(), 2, TermOrder::DegRevLex);
        let sc = staircase(&octet_basis(&r)).unwrap();
        assert_eq!(
            sc.terms(),
            &[
                t(&[0, 0]),
                t(&[0, 1]),
                t(&[1, 0]),
                t(&[0, 2]),
                t(&[1, 1]),
                t(&[2, 0]),
                t(&[0, 3]),
                t(&[2, 1]),
            ]
        );
        assert_eq!(
            sc.border(),
            vec![
                t(&[1, 2]),
                t(&[3, 0]),
                t(&[0, 4]),
                t(&[1, 3]),
                t(&[2, 2]),
                t(&[3, 1]),
            ]
        );
    }

    #[test]
    fn staircase_is_closed_under_division() {
        let r = Ring::new(f101(), 2, TermOrder::DegRevLex);
        let sc = staircase(&octet_basis(&r)).unwrap();
        for w in sc.terms() {
            for (i, &e) in w.exponents().iter().enumerate() {
                if e > 0 {
                    let mut down = w.exponents().to_vec();
                    down[i] -= 1;
                    assert!(sc.position(&Term::new(down)).is_some());
                }
            }
        }
    }

    #[test]
    fn positive_dimension_is_rejected() {
        let r = Ring::new(f101(), 2, TermOrder::DegRevLex);
        let gb = vec![poly(&r, &[(1, &[1, 0])])];
        assert_eq!(staircase(&gb).err(), Some(Error::NotZeroDimensional));
    }

    #[test]
    fn multiplication_matrices_of_the_quartet() {
        let f = f101();
        let r = Ring::new(f, 2, TermOrder::DegRevLex);
        let gb = quartet_basis(&r);
        let sc = staircase(&gb).unwrap();
        let mats = mult_matrices(&gb, &sc).unwrap();
        // Columns are images of (1, y, x, xy); rows are coordinates in the
        // same cell order.
        let m_x = dense(
            f,
            &[
                &[0, 0, 0, 4],
                &[0, 0, -2, 35],
                &[1, 0, 0, -31],
                &[0, 1, -1, -33],
            ],
        );
        let m_y = dense(
            f,
            &[
                &[0, -2, 0, 0],
                &[1, -1, 0, -33],
                &[0, -34, 0, -2],
                &[0, 0, 1, 33],
            ],
        );
        assert_eq!(mats[0], m_x);
        assert_eq!(mats[1], m_y);
    }

    #[test]
    fn multiplication_matrices_commute() {
        let r = Ring::new(f101(), 2, TermOrder::DegRevLex);
        let gb = octet_basis(&r);
        let sc = staircase(&gb).unwrap();
        let mats = mult_matrices(&gb, &sc).unwrap();
        assert_eq!(mats[0].mul(&mats[1]), mats[1].mul(&mats[0]));
    }

    #[test]
    fn update_golden_example() {
        let f = f101();
        let p = DenseMatrix::identity(f, 4);
        let lambda = [
            f.from_i64(-2),
            f.from_i64(-1),
            f.from_i64(-34),
            0,
        ];
        let next = update(&p, 2, &lambda).unwrap();
        let want = dense(
            f,
            &[
                &[1, 0, -6, 0],
                &[0, 1, -3, 0],
                &[0, 0, -3, 0],
                &[0, 0, 0, 1],
            ],
        );
        assert_eq!(next, want);
    }

    #[test]
    fn update_reports_missing_pivot() {
        let f = f101();
        let p = DenseMatrix::identity(f, 3);
        assert_eq!(update(&p, 1, &[5, 0, 0]).err(), Some(Error::NoPivot));
    }

    #[test]
    fn conversion_walkthrough() {
        let f = f101();
        let r = Ring::new(f, 2, TermOrder::DegRevLex);
        let gb = quartet_basis(&r);
        let report = fglm_detailed(&gb, TermOrder::Lex).unwrap();
        let r2 = r.with_order(TermOrder::Lex);
        let want = vec![
            poly(
                &r2,
                &[(1, &[0, 4]), (-32, &[0, 3]), (-29, &[0, 2]), (26, &[0, 1]), (4, &[0, 0])],
            ),
            poly(&r2, &[(1, &[1, 0]), (3, &[0, 2]), (3, &[0, 1]), (6, &[0, 0])]),
        ];
        assert_eq!(report.basis, want);
        assert_eq!(report.steps, 5);
        assert_eq!(
            report.staircase,
            vec![t(&[0, 0]), t(&[0, 1]), t(&[0, 2]), t(&[0, 3])]
        );
        assert_eq!(report.p_snapshots.len(), 3);
        assert_eq!(report.p_snapshots[0], DenseMatrix::identity(f, 4));
        let p2 = dense(
            f,
            &[
                &[1, 0, -6, 0],
                &[0, 1, -3, 0],
                &[0, 0, -3, 0],
                &[0, 0, 0, 1],
            ],
        );
        let p3 = dense(
            f,
            &[
                &[1, 0, -6, 0],
                &[0, 1, -3, -6],
                &[0, 0, -3, -3],
                &[0, 0, 0, -3],
            ],
        );
        assert_eq!(report.p_snapshots[1], p2);
        assert_eq!(report.p_snapshots[2], p3);
    }

    #[test]
    fn conversion_to_the_same_order_is_identity() {
        let r = Ring::new(f101(), 2, TermOrder::DegRevLex);
        let gb = quartet_basis(&r);
        assert_eq!(fglm(&gb, TermOrder::DegRevLex).unwrap(), gb);
    }

    #[test]
    fn converted_basis_is_reduced_and_groebner() {
        let r = Ring::new(f101(), 2, TermOrder::DegRevLex);
        let gb = octet_basis(&r);
        let lex = fglm(&gb, TermOrder::Lex).unwrap();
        assert!(is_groebner(&lex).unwrap());
        assert!(validate_reduced_basis(&lex).is_ok());
        for g in &lex {
            assert_eq!(g.ring().order(), TermOrder::Lex);
        }
    }

    #[test]
    fn rejects_improper_input() {
        let r = Ring::new(f101(), 2, TermOrder::DegRevLex);
        // Not a basis at all.
        let r_lex = Ring::new(f101(), 2, TermOrder::Lex);
        let gs = vec![
            poly(&r_lex, &[(1, &[2, 0]), (1, &[0, 2])]),
            poly(&r_lex, &[(1, &[1, 1])]),
        ];
        assert_eq!(
            fglm(&gs, TermOrder::DegLex).err(),
            Some(Error::NotAGroebnerBasis)
        );
        // A basis, but not monic.
        let scaled: Vec<Polynomial> = quartet_basis(&r).iter().map(|g| g.scale(2)).collect();
        assert_eq!(fglm(&scaled, TermOrder::Lex).err(), Some(Error::NotReduced));
        // A basis, but with a reducible tail.
        let gb = vec![
            poly(&r, &[(1, &[0, 1])]),
            poly(&r, &[(1, &[2, 0]), (1, &[0, 1])]),
        ];
        assert_eq!(fglm(&gb, TermOrder::Lex).err(), Some(Error::NotReduced));
        // The unit ideal.
        let one = vec![r.constant(1)];
        assert_eq!(fglm(&one, TermOrder::Lex).err(), Some(Error::UnitIdeal));
        // Positive dimension.
        let line = vec![poly(&r, &[(1, &[1, 0])])];
        assert_eq!(
            fglm(&line, TermOrder::Lex).err(),
            Some(Error::NotZeroDimensional)
        );
    }

    #[test]
    fn minimal_polynomial_of_a_variable() {
        let r = Ring::new(f101(), 2, TermOrder::DegRevLex);
        let gb = quartet_basis(&r);
        let mp_y = min_poly_var(&gb, 1).unwrap();
        let want = poly(
            &r,
            &[(1, &[0, 4]), (-32, &[0, 3]), (-29, &[0, 2]), (26, &[0, 1]), (4, &[0, 0])],
        );
        assert_eq!(mp_y, want);

        // For x, check the defining property instead of a fixed value:
        // monic, degree at most the staircase size, and its evaluation at
        // the multiplication matrix kills the class of 1.
        let mp_x = min_poly_var(&gb, 0).unwrap();
        assert_eq!(mp_x.leading_coeff().unwrap(), 1);
        let deg = mp_x.total_degree().unwrap();
        assert!(deg <= 4);
        let sc = staircase(&gb).unwrap();
        let mats = mult_matrices(&gb, &sc).unwrap();
        let f = r.field();
        let mut image = vec![0u64; sc.len()];
        for (c, term) in mp_x.terms() {
            let e = term.exponents()[0];
            let mut v = vec![0u64; sc.len()];
            v[0] = 1;
            for _ in 0..e {
                v = mats[0].mul_vec(&v);
            }
            for (acc, coord) in image.iter_mut().zip(v) {
                *acc = f.add(*acc, f.mul(*c, coord));
            }
        }
        assert!(image.iter().all(|&c| c == 0));
    }

    #[test]
    fn minimal_polynomial_over_the_unit_ideal() {
        let r = Ring::new(f101(), 1, TermOrder::Lex);
        let gb = vec![r.constant(1)];
        assert_eq!(min_poly_var(&gb, 0).unwrap(), r.constant(1));
    }
}
