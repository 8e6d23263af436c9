//! Exact linear algebra over `F_p`.
//!
//! [`TermIndexedMatrix`] is the Macaulay-style coefficient matrix of a
//! polynomial list: one row per polynomial, one column per support term,
//! columns sorted in strictly descending term order. Its reduced row echelon
//! form ([`TermIndexedMatrix::rref`]) is computed by plain Gauss-Jordan
//! elimination with first-nonzero pivoting, which makes the result (and
//! everything the F4 loop derives from it) deterministic.
//!
//! [`DenseMatrix`] is a small unlabeled dense matrix used for the
//! multiplication and change-of-basis matrices in the FGLM machinery.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::poly::{merged_support, Polynomial, Ring};
use crate::term::Term;

/// Coefficient matrix of a polynomial list, with its column/term
/// correspondence retained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermIndexedMatrix {
    ring: Ring,
    cols: Vec<Term>,
    /// Row-major entries, `nrows * cols.len()` residues.
    data: Vec<u64>,
    nrows: usize,
    row_labels: Option<Vec<String>>,
}

impl TermIndexedMatrix {
    /// Builds the coefficient matrix of `polys` (one row each, in order)
    /// over the union of their supports. Zero polynomials become zero rows.
    pub fn of(polys: &[Polynomial]) -> Result<Self> {
        if polys.is_empty() {
            return Err(Error::EmptyInput);
        }
        let ring = *polys[0].ring();
        let cols = merged_support(polys)?;
        let index: std::collections::HashMap<&Term, usize> =
            cols.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut data = vec![0u64; polys.len() * cols.len()];
        for (r, p) in polys.iter().enumerate() {
            for (c, t) in p.terms() {
                data[r * cols.len() + index[t]] = *c;
            }
        }
        Ok(TermIndexedMatrix {
            ring,
            cols,
            data,
            nrows: polys.len(),
            row_labels: None,
        })
    }

    pub fn with_row_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.nrows, "one label per row");
        self.row_labels = Some(labels);
        self
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    /// Column terms, strictly descending.
    pub fn cols(&self) -> &[Term] {
        &self.cols
    }

    pub fn row_labels(&self) -> Option<&[String]> {
        self.row_labels.as_deref()
    }

    pub fn get(&self, row: usize, col: usize) -> u64 {
        self.data[row * self.cols.len() + col]
    }

    /// The rows as polynomials (zero rows become zero polynomials).
    pub fn rows(&self) -> Vec<Polynomial> {
        (0..self.nrows)
            .map(|r| {
                let pairs: Vec<(u64, Term)> = self
                    .cols
                    .iter()
                    .enumerate()
                    .filter_map(|(c, t)| {
                        let v = self.get(r, c);
                        (v != 0).then(|| (v, t.clone()))
                    })
                    .collect();
                self.ring
                    .polynomial_from_residues(pairs)
                    .expect("column terms share the matrix ring's arity")
            })
            .collect()
    }

    /// The nonzero rows as polynomials.
    pub fn nonzero_rows(&self) -> Vec<Polynomial> {
        self.rows().into_iter().filter(|p| !p.is_zero()).collect()
    }

    /// Reduced row echelon form: pivots are 1 and alone in their column,
    /// pivot selection scans top to bottom for the first nonzero entry,
    /// zero rows sink to the bottom, and the column list is unchanged.
    pub fn rref(&self) -> TermIndexedMatrix {
        let field = self.ring.field();
        let ncols = self.cols.len();
        let mut m = self.clone();
        m.row_labels = None; // rows no longer correspond to the inputs
        let mut pivot_row = 0usize;
        for col in 0..ncols {
            let Some(src) = (pivot_row..m.nrows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            m.swap_rows(pivot_row, src);
            let inv = field
                .inv(m.get(pivot_row, col))
                .expect("pivot entry is nonzero");
            m.scale_row(field, pivot_row, inv);
            for r in 0..m.nrows {
                if r != pivot_row {
                    let factor = m.get(r, col);
                    if factor != 0 {
                        m.sub_scaled_row(field, r, pivot_row, factor);
                    }
                }
            }
            pivot_row += 1;
            if pivot_row == m.nrows {
                break;
            }
        }
        m
    }

    /// Number of nonzero rows (meaningful after [`Self::rref`]).
    pub fn rank(&self) -> usize {
        (0..self.nrows)
            .filter(|&r| (0..self.cols.len()).any(|c| self.get(r, c) != 0))
            .count()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let n = self.cols.len();
        for c in 0..n {
            self.data.swap(a * n + c, b * n + c);
        }
    }

    fn scale_row(&mut self, field: PrimeField, r: usize, factor: u64) {
        let n = self.cols.len();
        for c in 0..n {
            self.data[r * n + c] = field.mul(self.data[r * n + c], factor);
        }
    }

    /// `row[r] -= factor * row[src]`
    fn sub_scaled_row(&mut self, field: PrimeField, r: usize, src: usize, factor: u64) {
        let n = self.cols.len();
        for c in 0..n {
            let delta = field.mul(self.data[src * n + c], factor);
            self.data[r * n + c] = field.sub(self.data[r * n + c], delta);
        }
    }

    /// Plain-text debug dump: a header row with the column terms, then one
    /// line of residues per row.
    pub fn dump(&self, names: &[String]) -> String {
        let mut out = String::new();
        let headers: Vec<String> = self
            .cols
            .iter()
            .map(|t| crate::sysfile::term_string(t, names))
            .collect();
        out.push_str(&headers.join(" "));
        out.push('\n');
        for r in 0..self.nrows {
            let row: Vec<String> = (0..self.cols.len())
                .map(|c| self.get(r, c).to_string())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Rows of `reduced` whose leading term is *not* a leading term of any
/// element of `original`: the genuinely new information produced by an
/// elimination step. Both lists must consist of nonzero polynomials.
pub fn new_leading_rows(
    reduced: &[Polynomial],
    original: &[Polynomial],
) -> Result<Vec<Polynomial>> {
    let mut old_lts: Vec<&Term> = Vec::with_capacity(original.len());
    for p in original {
        old_lts.push(p.leading_term().map_err(|_| Error::ZeroDivisorPolynomial)?);
    }
    let mut out = Vec::new();
    for p in reduced {
        let lt = p.leading_term().map_err(|_| Error::ZeroDivisorPolynomial)?;
        if !old_lts.contains(&lt) {
            out.push(p.clone());
        }
    }
    Ok(out)
}

/// A dense matrix over `F_p` without term labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    field: PrimeField,
    nrows: usize,
    ncols: usize,
    data: Vec<u64>,
}

impl DenseMatrix {
    pub fn zeros(field: PrimeField, nrows: usize, ncols: usize) -> Self {
        DenseMatrix {
            field,
            nrows,
            ncols,
            data: vec![0; nrows * ncols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<u64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(field, nrows, ncols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, field.from_u64(v));
            }
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.ncols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.ncols + c] = v;
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.ncols, "vector length mismatch");
        (0..self.nrows)
            .map(|r| {
                v.iter().enumerate().fold(0u64, |acc, (c, &x)| {
                    self.field.add(acc, self.field.mul(self.get(r, c), x))
                })
            })
            .collect()
    }

    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch");
        let mut out = Self::zeros(self.field, self.nrows, other.ncols);
        for r in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.ncols {
                    let v = self.field.add(out.get(r, c), self.field.mul(a, other.get(k, c)));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.ncols {
            self.data.swap(a * self.ncols + c, b * self.ncols + c);
        }
    }

    pub fn scale_row(&mut self, r: usize, factor: u64) {
        for c in 0..self.ncols {
            let v = self.field.mul(self.get(r, c), factor);
            self.set(r, c, v);
        }
    }

    /// `row[r] -= factor * row[src]`
    pub fn sub_scaled_row(&mut self, r: usize, src: usize, factor: u64) {
        for c in 0..self.ncols {
            let delta = self.field.mul(self.get(src, c), factor);
            let v = self.field.sub(self.get(r, c), delta);
            self.set(r, c, v);
        }
    }
}
