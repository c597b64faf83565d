//! Exact rational linear algebra.
//!
//! Dense matrices over [`Rational`] with row reduction, rank, kernel and the
//! iterated invariant-subspace computation that the module engine uses to
//! carve out maximal submodules. All arithmetic is exact; there is no
//! floating point and no modular shortcut anywhere in this crate.
//!
//! Subspaces are passed around as row lists (each row one basis vector).

use crate::rational::{numerator_magnitude, Rational};
use num::{One, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    /// Operand shapes are incompatible (`lhs`, `rhs` described in the message).
    DimensionMismatch(String),
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::DimensionMismatch(msg) => write!(f, "dimension mismatch: {msg}"),
        }
    }
}

impl std::error::Error for LinalgError {}

/// Dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        RationalMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(r, c).clone();
                    out.set(r, c, cur + a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if self.cols != v.len() {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} * vec{}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} - {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Shifts the diagonal: `self - s*I`. Square matrices only.
    pub fn shift_diagonal(&self, s: &Rational) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut out = self.clone();
        for i in 0..self.rows {
            let cur = out.get(i, i).clone();
            out.set(i, i, cur - s);
        }
        out
    }

    /// In-place reduction to reduced row echelon form. Returns the pivot
    /// columns. Pivot rows are chosen by largest absolute numerator, a
    /// runtime heuristic; the echelon form itself is pivot-independent.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivot_cols = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row >= self.rows {
                break;
            }
            let best = (pivot_row..self.rows)
                .filter(|&r| !self.get(r, col).is_zero())
                .max_by_key(|&r| numerator_magnitude(self.get(r, col)));
            let Some(best) = best else { continue };
            if best != pivot_row {
                for c in 0..self.cols {
                    self.entries.swap(best * self.cols + c, pivot_row * self.cols + c);
                }
            }
            let inv = {
                let p = self.get(pivot_row, col).clone();
                Rational::one() / p
            };
            for c in col..self.cols {
                let v = self.get(pivot_row, c) * &inv;
                self.set(pivot_row, c, v);
            }
            for r in 0..self.rows {
                if r == pivot_row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in col..self.cols {
                    let v = self.get(r, c) - &factor * self.get(pivot_row, c);
                    self.set(r, c, v);
                }
            }
            pivot_cols.push(col);
            pivot_row += 1;
        }
        pivot_cols
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Basis of the null space `{v : M v = 0}`. The vectors are the standard
    /// free-variable basis read off the reduced echelon form, so the result
    /// is deterministic; its length is always `cols - rank`.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivot_cols = m.rref_in_place();
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; self.cols];
            for &c in &pivot_cols {
                s[c] = true;
            }
            s
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (prow, &pcol) in pivot_cols.iter().enumerate() {
                v[pcol] = -m.get(prow, free).clone();
            }
            basis.push(v);
        }
        basis
    }
}

/// Canonical basis (reduced echelon rows) of the span of `vectors`.
/// Zero vectors and dependencies are dropped.
pub fn row_span_basis(vectors: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let mut m = RationalMatrix::from_rows(vectors.to_vec());
    let pivots = m.rref_in_place();
    (0..pivots.len()).map(|r| m.row(r).to_vec()).collect()
}

/// Rank of a list of vectors.
pub fn rank_of_vectors(vectors: &[Vec<Rational>]) -> usize {
    row_span_basis(vectors).len()
}

/// Rows spanning the annihilator `{a : a . u = 0 for all u in span}`.
fn annihilator_rows(span_rows: &[Vec<Rational>], ambient: usize) -> Vec<Vec<Rational>> {
    if span_rows.is_empty() {
        return RationalMatrix::identity(ambient).row_vecs();
    }
    RationalMatrix::from_rows(span_rows.to_vec()).kernel()
}

/// Whether `v` lies in the row span of `basis` (assumed independent).
pub fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    let mut rows = basis.to_vec();
    rows.push(v.to_vec());
    rank_of_vectors(&rows) == basis.len()
}

/// Canonical basis of the column space.
pub fn column_span_basis(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    row_span_basis(&m.transpose().row_vecs())
}

/// Basis of `{ v in span(basis) : (M - shift) v = 0 }`, computed in the
/// coordinates of `basis` (assumed independent).
pub fn restrict_to_eigenspace(
    basis: &[Vec<Rational>],
    m: &RationalMatrix,
    shift: &Rational,
) -> Vec<Vec<Rational>> {
    if basis.is_empty() {
        return Vec::new();
    }
    let ambient = basis[0].len();
    let shifted = m.shift_diagonal(shift);
    let images: Vec<Vec<Rational>> = basis
        .iter()
        .map(|b| shifted.mul_vec(b).expect("square matrix"))
        .collect();
    // columns are the images; kernel gives the coefficient combinations
    let mut rows = Vec::with_capacity(ambient);
    for r in 0..ambient {
        rows.push(images.iter().map(|im| im[r].clone()).collect());
    }
    let coords = RationalMatrix::from_rows(rows).kernel();
    coords
        .iter()
        .map(|x| {
            let mut v = vec![Rational::zero(); ambient];
            for (c, b) in x.iter().zip(basis) {
                if c.is_zero() {
                    continue;
                }
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi += c * bi;
                }
            }
            v
        })
        .collect()
}

/// Largest subspace `U` of `span(u0)` with `g(U) <= U` for every generator.
///
/// Iterates `U_{k+1} = { v in U_k : g v in U_k for all g }` until the
/// dimension stabilizes; the result is the greatest fixed point, i.e. the
/// largest invariant subspace contained in the starting space.
pub fn largest_invariant_subspace(
    u0: &[Vec<Rational>],
    generators: &[RationalMatrix],
) -> Result<Vec<Vec<Rational>>, LinalgError> {
    if u0.is_empty() {
        return Ok(Vec::new());
    }
    let ambient = u0[0].len();
    for g in generators {
        if g.rows() != ambient || g.cols() != ambient {
            return Err(LinalgError::DimensionMismatch(format!(
                "generator is {}x{}, ambient dimension is {ambient}",
                g.rows(),
                g.cols()
            )));
        }
    }
    if u0.iter().any(|v| v.len() != ambient) {
        return Err(LinalgError::DimensionMismatch(
            "ragged subspace basis".to_string(),
        ));
    }

    let mut basis = row_span_basis(u0);
    loop {
        if basis.is_empty() {
            return Ok(basis);
        }
        let annihilator = annihilator_rows(&basis, ambient);
        // Constraint system on coordinates x (v = sum x_t b_t):
        // for every generator g and annihilator row a, a . g(v) = 0.
        let images: Vec<Vec<Vec<Rational>>> = generators
            .iter()
            .map(|g| {
                basis
                    .iter()
                    .map(|b| g.mul_vec(b).expect("checked above"))
                    .collect()
            })
            .collect();
        let mut constraint_rows = Vec::new();
        for gen_images in &images {
            for a in &annihilator {
                let row: Vec<Rational> = gen_images
                    .iter()
                    .map(|gb| gb.iter().zip(a).map(|(x, y)| x * y).sum())
                    .collect();
                constraint_rows.push(row);
            }
        }
        if constraint_rows.is_empty() {
            return Ok(basis);
        }
        let coords = RationalMatrix::from_rows(constraint_rows).kernel();
        if coords.len() == basis.len() {
            return Ok(basis);
        }
        let next: Vec<Vec<Rational>> = coords
            .iter()
            .map(|x| {
                let mut v = vec![Rational::zero(); ambient];
                for (c, b) in x.iter().zip(&basis) {
                    if c.is_zero() {
                        continue;
                    }
                    for (vi, bi) in v.iter_mut().zip(b) {
                        *vi += c * bi;
                    }
                }
                v
            })
            .collect();
        basis = row_span_basis(&next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
    }

    /// Textbook first-nonzero-pivot elimination; independent of the
    /// magnitude-pivot path used by `rref_in_place`.
    fn oracle_rank(rows: &[Vec<Rational>]) -> usize {
        let mut a: Vec<Vec<Rational>> = rows.to_vec();
        let nrows = a.len();
        let ncols = a.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..ncols {
            let Some(src) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, src);
            for r in 0..nrows {
                if r == rank || a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] / &a[rank][col];
                for c in col..ncols {
                    let v = &a[r][c] - &f * &a[rank][c];
                    a[r][c] = v;
                }
            }
            rank += 1;
            if rank == nrows {
                break;
            }
        }
        rank
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(m(&[&[1, 0], &[0, 1]]).kernel().is_empty());
    }

    #[test]
    fn kernel_of_difference_row() {
        let k = m(&[&[1, -1]]).kernel();
        assert_eq!(k, vec![vec![rat_int(1), rat_int(1)]]);
    }

    #[test]
    fn rank_nullity_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..12 {
            let rows: Vec<Vec<Rational>> = (0..5)
                .map(|_| {
                    (0..7)
                        .map(|_| rat(rng.gen_range(-4..=4), rng.gen_range(1..=3)))
                        .collect()
                })
                .collect();
            let mat = RationalMatrix::from_rows(rows.clone());
            let rank = oracle_rank(&rows);
            let kernel = mat.kernel();
            assert_eq!(kernel.len(), 7 - rank);
            assert_eq!(rank_of_vectors(&kernel), kernel.len());
            for v in &kernel {
                assert!(mat.mul_vec(v).unwrap().iter().all(|x| x.is_zero()));
            }
            assert_eq!(mat.rank(), rank);
        }
    }

    #[test]
    fn invariant_subspace_identity_generator_keeps_u0() {
        let u0 = vec![
            vec![rat_int(1), rat_int(2), rat_int(0)],
            vec![rat_int(0), rat_int(1), rat_int(1)],
        ];
        let got = largest_invariant_subspace(&u0, &[RationalMatrix::identity(3)]).unwrap();
        assert_eq!(got, row_span_basis(&u0));
    }

    #[test]
    fn invariant_subspace_jordan_block_collapses() {
        // J e2 = e1 leaves span(e2), so the iteration empties it out.
        let j = m(&[&[0, 1], &[0, 0]]);
        let u0 = vec![vec![rat_int(0), rat_int(1)]];
        assert!(largest_invariant_subspace(&u0, &[j]).unwrap().is_empty());
    }

    #[test]
    fn invariant_subspace_dimension_mismatch_is_reported() {
        let u0 = vec![vec![rat_int(1), rat_int(0)]];
        let g = m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(largest_invariant_subspace(&u0, &[g]).is_err());
    }

    /// Small standalone solver for the oracle below (independent of
    /// `largest_invariant_subspace`).
    fn oracle_kernel(rows: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
        // reuse kernel(), which is itself oracle-tested above
        RationalMatrix::from_rows(rows).kernel()
    }

    #[test]
    fn invariant_subspace_matches_eigenspace_oracle() {
        // Commuting diagonalizable pair conjugated away from the eigenbasis.
        // Every invariant subspace of a commuting semisimple pair splits
        // along joint eigenspaces, so the maximal invariant subspace inside
        // U0 is the sum over joint eigenspaces E of (E intersect U0).
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let da = [1i64, 1, 2, 2, 3, 3];
        let db = [1i64, 2, 1, 2, 3, 3];
        let (p, p_inv) = loop {
            let cand = RationalMatrix::from_rows(
                (0..6)
                    .map(|_| (0..6).map(|_| rat_int(rng.gen_range(-2..=2))).collect())
                    .collect(),
            );
            if cand.rank() == 6 {
                // invert by solving against the identity
                let mut aug = RationalMatrix::zero(6, 12);
                for r in 0..6 {
                    for c in 0..6 {
                        aug.set(r, c, cand.get(r, c).clone());
                    }
                    aug.set(r, 6 + r, rat_int(1));
                }
                aug.rref_in_place();
                let mut inv = RationalMatrix::zero(6, 6);
                for r in 0..6 {
                    for c in 0..6 {
                        inv.set(r, c, aug.get(r, 6 + c).clone());
                    }
                }
                break (cand, inv);
            }
        };
        let diag = |d: &[i64]| {
            let mut mm = RationalMatrix::zero(6, 6);
            for (i, &x) in d.iter().enumerate() {
                mm.set(i, i, rat_int(x));
            }
            mm
        };
        let a = p.mul(&diag(&da)).unwrap().mul(&p_inv).unwrap();
        let b = p.mul(&diag(&db)).unwrap().mul(&p_inv).unwrap();
        assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());

        // U0: a coordinate hyperplane.
        let u0: Vec<Vec<Rational>> = (0..5)
            .map(|i| {
                let mut v = vec![rat_int(0); 6];
                v[i] = rat_int(1);
                v
            })
            .collect();

        let got = largest_invariant_subspace(&u0, &[a.clone(), b.clone()]).unwrap();

        // Oracle: sum over joint eigenspaces of their intersection with U0.
        let mut expected_dim = 0;
        for (va, vb) in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 3)] {
            let mut rows = a.shift_diagonal(&rat_int(va)).row_vecs();
            rows.extend(b.shift_diagonal(&rat_int(vb)).row_vecs());
            let joint = oracle_kernel(rows);
            // intersect with U0 = kernel of the annihilator of U0
            let mut sys = joint.clone();
            // x in joint with last coordinate 0 (U0 is e6-perp here):
            // solve in joint coordinates.
            let coeff_rows: Vec<Vec<Rational>> =
                vec![joint.iter().map(|v| v[5].clone()).collect()];
            let coords = oracle_kernel(coeff_rows);
            let dim = coords.len();
            expected_dim += dim;
            sys.clear();
        }
        assert_eq!(got.len(), expected_dim);
        // fixed point: one more iteration changes nothing
        let again = largest_invariant_subspace(&got, &[a.clone(), b.clone()]).unwrap();
        assert_eq!(again.len(), got.len());
        // invariance and containment
        for v in &got {
            assert!(in_span(&u0, v));
            for g in [&a, &b] {
                let gv = g.mul_vec(v).unwrap();
                assert!(in_span(&got, &gv));
            }
        }
    }
}
