//! Matrix-based Gröbner basis computation.
//!
//! Instead of reducing one S-polynomial at a time, each round drains a
//! batch of critical pairs, collects both halves of every selected pair,
//! pre-loads one reductor row for each non-leading term that some basis
//! head divides, and row-reduces the whole term-indexed matrix at once.
//! Rows of the echelon form whose leading term is new are the round's
//! basis candidates.

use std::collections::HashSet;

use crate::buchberger::{is_groebner, reduce_basis, CriticalPair};
use crate::error::{Error, Result};
use crate::matrix::{new_leading_rows, TermIndexedMatrix};
use crate::poly::Polynomial;
use crate::reduction::{interred, multi_var_div};
use crate::term::Term;

/// How many queued pairs one matrix round consumes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelectionStrategy {
    /// Every pending pair.
    All,
    /// Only the oldest pending pair, mirroring the classical one-pair loop.
    FirstOnly,
    /// Every pending pair whose lcm has minimal total degree.
    NormalDegree,
}

impl SelectionStrategy {
    pub fn name(&self) -> &'static str {
        match self {
            SelectionStrategy::All => "all",
            SelectionStrategy::FirstOnly => "first",
            SelectionStrategy::NormalDegree => "normal",
        }
    }
}

/// Knobs for [`f4_with`].
#[derive(Debug, Clone)]
pub struct F4Config {
    pub strategy: SelectionStrategy,
    /// Interreduce the input before seeding pairs. On by default; turn off
    /// to run on the generators exactly as given.
    pub interreduce_input: bool,
    /// Keep every round's built matrix and its echelon form in the run
    /// report (for diagnostics dumps).
    pub record_matrices: bool,
}

impl Default for F4Config {
    fn default() -> Self {
        F4Config {
            strategy: SelectionStrategy::NormalDegree,
            interreduce_input: true,
            record_matrices: false,
        }
    }
}

/// Per-round measurements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationRecord {
    /// 1-based round number.
    pub iter: usize,
    /// Largest total degree among the matrix rows of this round.
    pub step_degree: u64,
    /// Queue length when the round started.
    pub pairs_pending: usize,
    /// Pairs consumed by this round.
    pub pairs_selected: usize,
    /// Pairs enqueued by this round's new basis elements.
    pub pairs_new: usize,
    /// Built matrix dimensions.
    pub rows: usize,
    pub cols: usize,
}

impl IterationRecord {
    /// One JSON object per line, fixed key order.
    pub fn json_line(&self) -> String {
        format!(
            "{{\"iter\":{},\"step_degree\":{},\"pairs_pending\":{},\"pairs_selected\":{},\"pairs_new\":{},\"rows\":{},\"cols\":{}}}",
            self.iter,
            self.step_degree,
            self.pairs_pending,
            self.pairs_selected,
            self.pairs_new,
            self.rows,
            self.cols
        )
    }
}

/// All per-round measurements of a run.
#[derive(Debug, Clone, Default)]
pub struct F4Stats {
    pub iterations: Vec<IterationRecord>,
}

impl F4Stats {
    /// JSON-lines rendering, one round per line.
    pub fn json_lines(&self) -> String {
        let mut out = String::new();
        for rec in &self.iterations {
            out.push_str(&rec.json_line());
            out.push('\n');
        }
        out
    }
}

/// A round's built matrix and its reduced row echelon form.
#[derive(Debug, Clone)]
pub struct RoundMatrices {
    pub built: TermIndexedMatrix,
    pub echelon: TermIndexedMatrix,
}

/// Everything a run produces.
#[derive(Debug, Clone)]
pub struct F4Run {
    /// The reduced Gröbner basis, ascending by leading term.
    pub basis: Vec<Polynomial>,
    /// The accumulated basis exactly as the main loop left it, before the
    /// final interreduction.
    pub pre_reduction: Vec<Polynomial>,
    pub stats: F4Stats,
    /// The pairs each round consumed, in consumption order.
    pub selected_pairs: Vec<Vec<CriticalPair>>,
    /// Populated only when [`F4Config::record_matrices`] is set.
    pub matrices: Vec<RoundMatrices>,
}

fn selection_indices(strategy: SelectionStrategy, pairs: &[CriticalPair]) -> Vec<usize> {
    match strategy {
        SelectionStrategy::All => (0..pairs.len()).collect(),
        SelectionStrategy::FirstOnly => vec![0],
        SelectionStrategy::NormalDegree => {
            let d = pairs
                .iter()
                .map(|p| p.degree())
                .min()
                .expect("selection runs on a nonempty queue");
            (0..pairs.len())
                .filter(|&i| pairs[i].degree() == d)
                .collect()
        }
    }
}

/// The pairs a round would consume, in stored order.
pub fn select(strategy: SelectionStrategy, pairs: &[CriticalPair]) -> Result<Vec<CriticalPair>> {
    if pairs.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(selection_indices(strategy, pairs)
        .into_iter()
        .map(|i| pairs[i].clone())
        .collect())
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

/// Symbolic preprocessing: append one reductor row per reducible
/// non-leading term of `rows`.
///
/// The scan runs once over the merged support of `rows` in descending term
/// order, skipping the leading terms of `rows` themselves (those are what
/// elimination is supposed to cancel, not rewrite). For each remaining
/// term `t` divisible by some head in `basis`, the first such basis
/// element `g` in storage order contributes the row `(t / LT(g)) · g`.
/// Terms introduced by appended rows are not scanned again; the echelon
/// form may therefore leave some tails unreduced, which the caller's
/// interreduction pass cleans up.
pub fn sym_pre(rows: &[Polynomial], basis: &[Polynomial]) -> Result<Vec<Polynomial>> {
    check_polys(rows)?;
    check_polys(basis)?;
    rows[0].check_ring(&basis[0])?;
    let mut out = rows.to_vec();
    let heads: HashSet<&Term> = rows
        .iter()
        .map(|f| f.leading_term().expect("rows are nonzero"))
        .collect();
    for t in crate::poly::merged_support(rows)? {
        if heads.contains(&t) {
            continue;
        }
        if let Some(g) = basis
            .iter()
            .find(|g| g.leading_term().expect("basis is nonzero").divides(&t))
        {
            let shift = t
                .div(g.leading_term()?)
                .expect("head divides the scanned term");
            out.push(g.mul_monomial(1, &shift)?);
        }
    }
    Ok(out)
}

/// One matrix reduction: preprocess, row-reduce, keep the echelon rows
/// whose leading term is new. Returns those rows plus both matrices.
fn red_full(
    rows: &[Polynomial],
    basis: &[Polynomial],
) -> Result<(Vec<Polynomial>, TermIndexedMatrix, TermIndexedMatrix)> {
    let prepared = sym_pre(rows, basis)?;
    let built = TermIndexedMatrix::of(&prepared)?;
    let echelon = built.rref();
    let fresh = new_leading_rows(&echelon.nonzero_rows(), &prepared)?;
    Ok((fresh, built, echelon))
}

/// One matrix reduction round: the echelon rows with a leading term that
/// no row of the preprocessed input had.
pub fn red(rows: &[Polynomial], basis: &[Polynomial]) -> Result<Vec<Polynomial>> {
    Ok(red_full(rows, basis)?.0)
}

/// Matrix-based Gröbner basis run with default input interreduction.
pub fn f4(fs: &[Polynomial], strategy: SelectionStrategy) -> Result<F4Run> {
    f4_with(
        fs,
        &F4Config {
            strategy,
            ..F4Config::default()
        },
    )
}

/// Matrix-based Gröbner basis run with explicit configuration.
///
/// Pair bookkeeping: the queue is seeded with all index pairs of the
/// starting basis; each round's new elements are paired against the basis
/// as it stood when the round began, in storage order, grouped per new
/// element. New elements of the same round are not paired with each other
/// during the main loop — once the queue drains, the accumulated basis is
/// checked, and only if the check fails are the skipped combinations
/// enqueued and the loop resumed. The run ends with the criterion
/// certified, and the final interreduction yields the reduced basis.
pub fn f4_with(fs: &[Polynomial], config: &F4Config) -> Result<F4Run> {
    check_polys(fs)?;
    let mut g = if config.interreduce_input {
        let mut dedup: Vec<Polynomial> = Vec::new();
        for f in fs {
            if !dedup.contains(f) {
                dedup.push(f.clone());
            }
        }
        interred(&dedup)?
    } else {
        fs.to_vec()
    };

    let mut pairs: Vec<CriticalPair> = Vec::new();
    let mut enqueued: HashSet<(usize, usize)> = HashSet::new();
    for i in 0..g.len() {
        for j in (i + 1)..g.len() {
            pairs.push(CriticalPair::new(&g, i, j)?);
            enqueued.insert((i, j));
        }
    }

    let mut stats = F4Stats::default();
    let mut selected_pairs = Vec::new();
    let mut matrices = Vec::new();
    let mut iter = 0;

    loop {
        while !pairs.is_empty() {
            iter += 1;
            let pending = pairs.len();
            let chosen: HashSet<usize> =
                selection_indices(config.strategy, &pairs).into_iter().collect();
            let mut selected = Vec::with_capacity(chosen.len());
            let mut kept = Vec::with_capacity(pending - chosen.len());
            for (i, p) in pairs.drain(..).enumerate() {
                if chosen.contains(&i) {
                    selected.push(p);
                } else {
                    kept.push(p);
                }
            }
            pairs = kept;

            let mut l = Vec::with_capacity(2 * selected.len());
            for p in &selected {
                l.push(p.left().clone());
                l.push(p.right().clone());
            }
            let prepared = sym_pre(&l, &g)?;
            let step_degree = prepared
                .iter()
                .filter_map(|f| f.total_degree())
                .max()
                .unwrap_or(0);
            let built = TermIndexedMatrix::of(&prepared)?;
            let echelon = built.rref();
            let fresh_rows = new_leading_rows(&echelon.nonzero_rows(), &prepared)?;

            let old_len = g.len();
            let mut pairs_new = 0;
            for h in &fresh_rows {
                // Weak interreduction against the basis as grown so far,
                // including this round's earlier additions.
                let remainder = multi_var_div(h, &g, false)?.remainder;
                if remainder.is_zero() {
                    continue;
                }
                let fresh = g.len();
                g.push(remainder.make_monic()?);
                for i in 0..old_len {
                    pairs.push(CriticalPair::new(&g, i, fresh)?);
                    enqueued.insert((i, fresh));
                    pairs_new += 1;
                }
            }

            stats.iterations.push(IterationRecord {
                iter,
                step_degree,
                pairs_pending: pending,
                pairs_selected: selected.len(),
                pairs_new,
                rows: built.nrows(),
                cols: built.ncols(),
            });
            selected_pairs.push(selected);
            if config.record_matrices {
                matrices.push(RoundMatrices { built, echelon });
            }
        }

        if is_groebner(&g)? {
            break;
        }
        // The queue drained without certifying the criterion, which can
        // only happen when same-round pairs were skipped. Enqueue every
        // combination never seen and keep going.
        let mut added = false;
        for i in 0..g.len() {
            for j in (i + 1)..g.len() {
                if enqueued.insert((i, j)) {
                    pairs.push(CriticalPair::new(&g, i, j)?);
                    added = true;
                }
            }
        }
        if !added {
            // Every combination was already processed; reduce_basis below
            // will report the failure.
            break;
        }
    }

    let pre_reduction = g.clone();
    let basis = reduce_basis(&g)?;
    Ok(F4Run {
        basis,
        pre_reduction,
        stats,
        selected_pairs,
        matrices,
    })
}
