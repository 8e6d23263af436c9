//! The randomized invariant checks shared by the standalone property suite
//! and the acceptance spot check. Each function panics (with context) on
//! the first violated instance.

use super::{brute_force_solutions, f101, random_poly, random_system};
use groebner::fglm::{mult_matrices, update};
use groebner::matrix::DenseMatrix;
use groebner::reduction::multi_var_div;
use groebner::solver::dimension_report;
use groebner::{buchberger, reduce_basis, staircase, Error, Polynomial, Ring, TermOrder};
use rand::Rng;

const ORDERS: [TermOrder; 3] = [TermOrder::Lex, TermOrder::DegLex, TermOrder::DegRevLex];

fn random_ring(rng: &mut impl Rng) -> Ring {
    let n = rng.gen_range(1..=3);
    let order = ORDERS[rng.gen_range(0..3)];
    Ring::new(f101(), n, order)
}

/// Nonzero dividend, 1-3 nonzero divisors, any order: full division must
/// write the dividend as `sum(q_i * g_i) + r`, and no nonzero product
/// `q_i * g_i` may have a leading term above the dividend's.
pub fn division_certificates(rng: &mut impl Rng, rounds: usize) {
    for _ in 0..rounds {
        let ring = random_ring(rng);
        let f = random_poly(rng, &ring, 4, 4);
        let divisors = random_system(rng, &ring);
        let result = multi_var_div(&f, &divisors, true).unwrap();
        let quotients = result.quotients.as_ref().unwrap();
        let mut recombined = result.remainder.clone();
        for (q, g) in quotients.iter().zip(&divisors) {
            recombined = recombined.add(&q.mul(g).unwrap()).unwrap();
            let product = q.mul(g).unwrap();
            if !product.is_zero() {
                let ord = ring.order();
                assert_ne!(
                    ord.cmp(
                        product.leading_term().unwrap(),
                        f.leading_term().unwrap()
                    ),
                    std::cmp::Ordering::Greater,
                    "quotient term exceeds the dividend: f={f:?} divisors={divisors:?}"
                );
            }
        }
        assert_eq!(
            recombined, f,
            "division identity broken: f={f:?} divisors={divisors:?}"
        );
    }
}

/// No term of a complete-division remainder is divisible by any divisor's
/// leading term.
pub fn remainder_support_disjoint(rng: &mut impl Rng, rounds: usize) {
    for _ in 0..rounds {
        let ring = random_ring(rng);
        let f = random_poly(rng, &ring, 4, 4);
        let divisors = random_system(rng, &ring);
        let result = multi_var_div(&f, &divisors, false).unwrap();
        for (_, term) in result.remainder.terms() {
            for g in &divisors {
                assert!(
                    !g.leading_term().unwrap().divides(term),
                    "reducible remainder term {term:?}: f={f:?} divisors={divisors:?}"
                );
            }
        }
    }
}

/// Draws random systems until one has a zero-dimensional, non-unit ideal,
/// returning its reduced basis. Panics if none shows up in a reasonable
/// number of draws (the generator makes them plentiful).
fn random_zero_dim_basis(rng: &mut impl Rng) -> Vec<Polynomial> {
    for _ in 0..400 {
        let ring = random_ring(rng);
        let system = random_system(rng, &ring);
        let gb = reduce_basis(&buchberger(&system).unwrap()).unwrap();
        let (zero_dim, dim) = dimension_report(&gb).unwrap();
        if zero_dim && dim.unwrap_or(0) > 0 {
            return gb;
        }
    }
    panic!("no zero-dimensional instance found in 400 draws");
}

/// Every divisor of a staircase term is itself in the staircase.
pub fn staircase_divisor_closed(rng: &mut impl Rng, rounds: usize) {
    for _ in 0..rounds {
        let gb = random_zero_dim_basis(rng);
        let sc = staircase(&gb).unwrap();
        for term in sc.terms() {
            let exps = term.exponents();
            // Walk every exponentwise-smaller vector via mixed-radix counting.
            let mut cursor = vec![0u32; exps.len()];
            loop {
                let divisor = groebner::Term::new(cursor.clone());
                assert!(
                    sc.terms().contains(&divisor),
                    "{divisor:?} divides staircase cell {term:?} but is missing"
                );
                let mut i = 0;
                while i < cursor.len() {
                    if cursor[i] < exps[i] {
                        cursor[i] += 1;
                        break;
                    }
                    cursor[i] = 0;
                    i += 1;
                }
                if i == cursor.len() {
                    break;
                }
            }
        }
    }
}

/// The multiplication matrices of a zero-dimensional quotient commute
/// pairwise (they represent multiplication by commuting ring elements).
pub fn multiplication_matrices_commute(rng: &mut impl Rng, rounds: usize) {
    for _ in 0..rounds {
        let gb = random_zero_dim_basis(rng);
        let sc = staircase(&gb).unwrap();
        let ms = mult_matrices(&gb, &sc).unwrap();
        for i in 0..ms.len() {
            for j in i + 1..ms.len() {
                assert_eq!(
                    ms[i].mul(&ms[j]),
                    ms[j].mul(&ms[i]),
                    "multiplication matrices {i} and {j} do not commute for {gb:?}"
                );
            }
        }
    }
}

/// Transition-matrix refreshes keep the established images: after feeding
/// vectors v_0, ..., v_r through `update`, the matrix maps each v_i to the
/// i-th standard basis vector; a vector dependent on the established ones
/// is rejected with `NoPivot`.
pub fn update_postconditions(rng: &mut impl Rng, rounds: usize) {
    let field = f101();
    for _ in 0..rounds {
        let d = rng.gen_range(2..=5);
        let mut p = DenseMatrix::identity(field, d);
        let mut established: Vec<Vec<u64>> = Vec::new();
        for r in 0..d {
            // With established vectors available, first feed a random
            // combination of them and demand rejection.
            if !established.is_empty() && rng.gen_bool(0.5) {
                let mut dependent = vec![0u64; d];
                for v in &established {
                    let c = rng.gen_range(0..101);
                    for (slot, &x) in dependent.iter_mut().zip(v) {
                        *slot = field.add(*slot, field.mul(c, x));
                    }
                }
                let lambda = p.mul_vec(&dependent);
                assert_eq!(
                    update(&p, r, &lambda).unwrap_err(),
                    Error::NoPivot,
                    "dependent vector accepted at rank {r}"
                );
            }
            // Now a fresh vector; retry the draw on the (rare) dependent one.
            loop {
                let v: Vec<u64> = (0..d).map(|_| rng.gen_range(0..101)).collect();
                let lambda = p.mul_vec(&v);
                match update(&p, r, &lambda) {
                    Ok(next) => {
                        p = next;
                        established.push(v);
                        break;
                    }
                    Err(Error::NoPivot) => continue,
                    Err(other) => panic!("unexpected update error: {other}"),
                }
            }
            for (i, v) in established.iter().enumerate() {
                let mut want = vec![0u64; d];
                want[i] = 1;
                assert_eq!(
                    p.mul_vec(v),
                    want,
                    "established image {i} lost after refresh {r}"
                );
            }
        }
    }
}

/// Round-trip sanity for the brute-force helper itself (used as the solver
/// oracle): a point reported as a solution must actually zero every input.
pub fn brute_force_is_sound(rng: &mut impl Rng, rounds: usize) {
    for _ in 0..rounds {
        let field = groebner::field::PrimeField::new(11).unwrap();
        let n = rng.gen_range(1..=2);
        let ring = Ring::new(field, n, TermOrder::DegRevLex);
        let system = random_system(rng, &ring);
        for point in brute_force_solutions(&system) {
            assert!(system.iter().all(|f| f.eval(&point).unwrap() == 0));
        }
    }
}
