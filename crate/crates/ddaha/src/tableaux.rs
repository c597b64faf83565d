//! Skew diagrams, tableaux, level restriction, and the bridge from
//! dominant weight pairs of affine sl_m to induced-module data of gl_N.
//!
//! A pair of level-`l` weights `(lambda, mu)` with
//! `lambda - mu = sum beta_a e_a` determines the ordered partition
//! `beta` (zeros allowed), a skew diagram whose row `a` holds cells at
//! rational positions `mu_a + 1, ..., mu_a + beta_a` (offsets are the
//! mean-centered tuple of `mu`, so they differ by integers across rows),
//! and the inducing weight built from the contents `p - a`. Tableaux are
//! bijections from the cells to `1..N`; standard ones increase along rows
//! and down columns, and the level restriction asks every partial weight
//! to stay dominant integral.
//!
//! The statistics `d_i(T)` (does `i+1` sit in a strictly lower row than
//! `i`?) and `d(T) = sum d_i (N - i)` grade the configuration sums of the
//! character module; `d(T)` is the pairing of the marker vector of `w_T`
//! with `e_1 + ... + e_N`.

use crate::rational::{format_rational, rat_int, Rational};
use crate::roots::{AffineRoot, OrderedPartition, Weight};
use crate::weyl::AffineWeylElement;
use num::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;

/// An integral weight of affine sl_m: an integer tuple representative
/// (defined up to adding a constant vector) plus the level.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SlmWeight {
    pub nu: Vec<i64>,
    pub level: i64,
}

impl SlmWeight {
    pub fn new(nu: Vec<i64>, level: i64) -> Self {
        SlmWeight { nu, level }
    }

    pub fn m(&self) -> usize {
        self.nu.len()
    }

    /// Dominant integral at its level: tuple non-increasing and the full
    /// gap at most the level.
    pub fn is_dominant_integral(&self) -> bool {
        self.nu.windows(2).all(|p| p[0] >= p[1])
            && self.nu[0] - self.nu[self.m() - 1] <= self.level
    }

    /// Tuple classes agree up to a constant shift (same level).
    pub fn same_class(&self, other: &SlmWeight) -> bool {
        if self.level != other.level || self.m() != other.m() {
            return false;
        }
        let d = self.nu[0] - other.nu[0];
        self.nu.iter().zip(&other.nu).all(|(a, b)| a - b == d)
    }

    /// Mean-centered rational representative (the pairing values with the
    /// vector representation's weights).
    pub fn offsets(&self) -> Vec<Rational> {
        let m = self.m() as i64;
        let sum: i64 = self.nu.iter().sum();
        let mean = Rational::new(sum.into(), m.into());
        self.nu.iter().map(|&x| rat_int(x) - &mean).collect()
    }
}

impl fmt::Display for SlmWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.nu.iter().map(i64::to_string).collect();
        write!(f, "({}; level {})", parts.join(","), self.level)
    }
}

/// Solves `lambda - mu = sum beta_a e_a` with `sum beta_a = N`. Returns
/// `None` when the difference is not a weight of the N-fold tensor power
/// of the vector representation (shift not integral or a part negative).
pub fn beta_from_weights(
    lambda: &SlmWeight,
    mu: &SlmWeight,
    n: usize,
) -> Option<OrderedPartition> {
    if lambda.m() != mu.m() {
        return None;
    }
    let m = lambda.m() as i64;
    let diff_sum: i64 = lambda
        .nu
        .iter()
        .zip(&mu.nu)
        .map(|(a, b)| a - b)
        .sum();
    let c_num = n as i64 - diff_sum;
    if c_num.rem_euclid(m) != 0 {
        return None;
    }
    let c = c_num.div_euclid(m);
    let parts: Vec<i64> = lambda
        .nu
        .iter()
        .zip(&mu.nu)
        .map(|(a, b)| a - b + c)
        .collect();
    if parts.iter().any(|&p| p < 0) {
        return None;
    }
    Some(OrderedPartition::new(
        parts.into_iter().map(|p| p as usize).collect(),
    ))
}

/// A cell of a skew diagram: 0-based row, 1-based column index within the
/// row (the rational position is `offset[row] + col`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

/// Skew diagram: row `a` holds `beta_a` cells starting after the offset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewDiagram {
    offsets: Vec<Rational>,
    beta: OrderedPartition,
}

impl SkewDiagram {
    pub fn new(offsets: Vec<Rational>, beta: OrderedPartition) -> Self {
        assert_eq!(offsets.len(), beta.num_blocks());
        SkewDiagram { offsets, beta }
    }

    /// The diagram of a dominant pair; `None` when `beta` does not exist.
    pub fn from_weights(lambda: &SlmWeight, mu: &SlmWeight, n: usize) -> Option<Self> {
        let beta = beta_from_weights(lambda, mu, n)?;
        Some(SkewDiagram::new(mu.offsets(), beta))
    }

    pub fn beta(&self) -> &OrderedPartition {
        &self.beta
    }

    pub fn offsets(&self) -> &[Rational] {
        &self.offsets
    }

    pub fn rows(&self) -> usize {
        self.offsets.len()
    }

    pub fn cell_count(&self) -> usize {
        self.beta.n()
    }

    /// Cells in reading order (row by row, left to right). The reading
    /// index plus one is the base filling `T_0`.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.cell_count());
        for (row, &len) in self.beta.parts().iter().enumerate() {
            for col in 1..=len {
                out.push(Cell { row, col });
            }
        }
        out
    }

    /// Rational column position `p = offset + col`.
    pub fn position(&self, cell: Cell) -> Rational {
        &self.offsets[cell.row] + rat_int(cell.col as i64)
    }

    /// Content `p - a` with 1-based row number.
    pub fn content(&self, cell: Cell) -> Rational {
        self.position(cell) - rat_int(cell.row as i64 + 1)
    }

    /// The cell directly below (same rational column, next row), if any.
    pub fn below(&self, cell: Cell) -> Option<Cell> {
        if cell.row + 1 >= self.rows() {
            return None;
        }
        let shift = &self.offsets[cell.row] - &self.offsets[cell.row + 1];
        if !shift.is_integer() {
            return None;
        }
        let col = cell.col as i64 + shift.to_integer().try_into().ok().unwrap_or(i64::MAX);
        if col >= 1 && col <= self.beta.parts()[cell.row + 1] as i64 {
            Some(Cell {
                row: cell.row + 1,
                col: col as usize,
            })
        } else {
            None
        }
    }

    /// The cell directly to the right, if any.
    pub fn right(&self, cell: Cell) -> Option<Cell> {
        if cell.col < self.beta.parts()[cell.row] {
            Some(Cell {
                row: cell.row,
                col: cell.col + 1,
            })
        } else {
            None
        }
    }
}

/// A bijection from the cells to `1..N`, stored in reading order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    diagram: SkewDiagram,
    entries: Vec<usize>,
}

impl Tableau {
    pub fn new(diagram: SkewDiagram, entries: Vec<usize>) -> Self {
        let n = diagram.cell_count();
        assert_eq!(entries.len(), n);
        let mut seen = vec![false; n];
        for &e in &entries {
            assert!(e >= 1 && e <= n && !seen[e - 1], "entries must be a bijection");
            seen[e - 1] = true;
        }
        Tableau { diagram, entries }
    }

    /// The base filling `T_0`: reading order.
    pub fn base(diagram: SkewDiagram) -> Self {
        let n = diagram.cell_count();
        Tableau {
            diagram,
            entries: (1..=n).collect(),
        }
    }

    pub fn diagram(&self) -> &SkewDiagram {
        &self.diagram
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// Value at a cell.
    pub fn value(&self, cell: Cell) -> usize {
        let idx = self
            .diagram
            .cells()
            .iter()
            .position(|&c| c == cell)
            .expect("cell not in diagram");
        self.entries[idx]
    }

    /// The cell holding `value`.
    pub fn cell_of(&self, value: usize) -> Cell {
        let idx = self
            .entries
            .iter()
            .position(|&e| e == value)
            .expect("value out of range");
        self.diagram.cells()[idx]
    }

    /// Row (0-based) of a value.
    pub fn row_of(&self, value: usize) -> usize {
        self.cell_of(value).row
    }

    pub fn is_standard(&self) -> bool {
        let cells = self.diagram.cells();
        for (idx, &cell) in cells.iter().enumerate() {
            let v = self.entries[idx];
            if let Some(r) = self.diagram.right(cell) {
                if v >= self.value(r) {
                    return false;
                }
            }
            if let Some(b) = self.diagram.below(cell) {
                if v >= self.value(b) {
                    return false;
                }
            }
        }
        true
    }

    /// The finite element with `T = w_T compose T_0` entrywise.
    pub fn w_t(&self) -> AffineWeylElement {
        let mut window = vec![0usize; self.n()];
        for (idx, &e) in self.entries.iter().enumerate() {
            // T_0 value at this cell is idx+1; w maps it to e
            window[idx] = e - 1;
        }
        AffineWeylElement::from_window(window)
    }

    /// Partial shape after the first `n` entries: cells per row.
    pub fn partial_shape(&self, n: usize) -> Vec<i64> {
        let cells = self.diagram.cells();
        let mut counts = vec![0i64; self.diagram.rows()];
        for (idx, &e) in self.entries.iter().enumerate() {
            if e <= n {
                counts[cells[idx].row] += 1;
            }
        }
        counts
    }

    /// The weight after placing `1..n`: `mu + partial shape` at level `l`
    /// (the mean shift is absorbed by the tuple representative).
    pub fn lambda_at(&self, n: usize, mu: &SlmWeight, level: i64) -> SlmWeight {
        let shape = self.partial_shape(n);
        let nu: Vec<i64> = mu.nu.iter().zip(&shape).map(|(a, b)| a + b).collect();
        SlmWeight::new(nu, level)
    }

    /// Level restriction: every partial weight stays dominant integral.
    pub fn is_restricted(&self, mu: &SlmWeight, level: i64) -> bool {
        (1..=self.n()).all(|n| self.lambda_at(n, mu, level).is_dominant_integral())
    }

    /// The statistics `d_i` (`1` when `i+1` lies in a strictly lower row)
    /// and `d(T) = sum_i d_i (N - i)`.
    pub fn d_statistics(&self) -> (Vec<u8>, i64) {
        let n = self.n();
        let ds: Vec<u8> = (1..n)
            .map(|i| u8::from(self.row_of(i) < self.row_of(i + 1)))
            .collect();
        let total = ds
            .iter()
            .enumerate()
            .map(|(idx, &d)| i64::from(d) * (n as i64 - (idx as i64 + 1)))
            .sum();
        (ds, total)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, cell) in self.diagram.cells().iter().enumerate() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "({},{})={}", cell.row + 1, cell.col, self.entries[idx])?;
        }
        Ok(())
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let offsets: Vec<String> = self.diagram.offsets.iter().map(format_rational).collect();
        let entries: Vec<[usize; 3]> = self
            .diagram
            .cells()
            .iter()
            .zip(&self.entries)
            .map(|(c, &e)| [c.row + 1, c.col, e])
            .collect();
        let mut s = serializer.serialize_struct("Tableau", 3)?;
        s.serialize_field("offsets", &offsets)?;
        s.serialize_field("beta", self.diagram.beta.parts())?;
        s.serialize_field("entries", &entries)?;
        s.end()
    }
}

/// Enumerates tableaux on the diagram of `(lambda, mu)` in a deterministic
/// order. `standard_only` restricts to standard fillings (enumerated as
/// linear extensions of the cell order); `restricted_level` further
/// filters by the level restriction.
pub fn enumerate_tableaux(
    lambda: &SlmWeight,
    mu: &SlmWeight,
    n: usize,
    standard_only: bool,
    restricted_level: Option<i64>,
) -> Vec<Tableau> {
    let Some(diagram) = SkewDiagram::from_weights(lambda, mu, n) else {
        return Vec::new();
    };
    let tableaux = if standard_only {
        enumerate_standard(&diagram)
    } else {
        enumerate_all(&diagram)
    };
    match restricted_level {
        None => tableaux,
        Some(level) => tableaux
            .into_iter()
            .filter(|t| t.is_restricted(mu, level))
            .collect(),
    }
}

fn enumerate_all(diagram: &SkewDiagram) -> Vec<Tableau> {
    use itertools::Itertools;
    let n = diagram.cell_count();
    (1..=n)
        .permutations(n)
        .map(|entries| Tableau::new(diagram.clone(), entries))
        .collect()
}

/// Standard tableaux as linear extensions: place `1, ..., N` one at a
/// time, always into a cell whose left and upper neighbors (when they
/// exist in the diagram) are already filled.
fn enumerate_standard(diagram: &SkewDiagram) -> Vec<Tableau> {
    let cells = diagram.cells();
    let n = cells.len();
    let index_of = |cell: Cell| cells.iter().position(|&c| c == cell).unwrap();
    // prerequisite indices per cell (left and above)
    let mut prereq: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (idx, &cell) in cells.iter().enumerate() {
        if let Some(r) = diagram.right(cell) {
            prereq[index_of(r)].push(idx);
        }
        if let Some(b) = diagram.below(cell) {
            prereq[index_of(b)].push(idx);
        }
    }
    let mut out = Vec::new();
    let mut entries = vec![0usize; n];
    let mut filled = vec![false; n];
    fn rec(
        value: usize,
        n: usize,
        prereq: &[Vec<usize>],
        entries: &mut Vec<usize>,
        filled: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if value > n {
            out.push(entries.clone());
            return;
        }
        for idx in 0..n {
            if filled[idx] || !prereq[idx].iter().all(|&p| filled[p]) {
                continue;
            }
            filled[idx] = true;
            entries[idx] = value;
            rec(value + 1, n, prereq, entries, filled, out);
            filled[idx] = false;
            entries[idx] = 0;
        }
    }
    let mut fillings = Vec::new();
    rec(1, n, &prereq, &mut entries, &mut filled, &mut fillings);
    fillings.sort();
    for f in fillings {
        out.push(Tableau::new(diagram.clone(), f));
    }
    out
}

/// The inducing weight of the pair: coordinates are the contents read
/// through the base filling plus the constant `(m^2 - N)/(2m)`; the level
/// is the shifted level `l + m`.
pub fn zeta_lambda_mu(lambda: &SlmWeight, mu: &SlmWeight, n: usize) -> Option<Weight> {
    if lambda.level != mu.level {
        return None;
    }
    let diagram = SkewDiagram::from_weights(lambda, mu, n)?;
    let m = lambda.m() as i64;
    let constant = Rational::new(
        (m * m - n as i64).into(),
        (2 * m).into(),
    );
    let mut coords = vec![Rational::zero(); n];
    for (idx, cell) in diagram.cells().iter().enumerate() {
        // T_0 maps this cell to idx + 1
        coords[idx] = diagram.content(*cell) + &constant;
    }
    let level = rat_int(lambda.level + m);
    Some(Weight::new(coords, level))
}

/// One verified inequality bundle for a restricted standard tableau.
#[derive(Debug, Clone, Serialize)]
pub struct WeightconReport {
    pub checked: usize,
    pub violations: Vec<String>,
}

impl WeightconReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verifies the pairing inequalities of the permuted inducing weight on a
/// restricted standard tableau:
///
/// * `(w_T zeta, alpha_i) = -1` when `i` and `i+1` share a row,
/// * `-(kappa-1) <= . <= -2` when `i+1` sits strictly higher,
/// * `1 <= . <= kappa-2` when `i+1` sits strictly lower,
/// * `(w_T zeta, alpha) <= kappa - 2` for every positive finite root.
pub fn weightcon_check(
    tableau: &Tableau,
    lambda: &SlmWeight,
    mu: &SlmWeight,
    n: usize,
) -> Option<WeightconReport> {
    let zeta = zeta_lambda_mu(lambda, mu, n)?;
    let kappa = zeta.level.clone();
    let w = tableau.w_t();
    let moved = w.act_weight(&zeta);
    let mut checked = 0;
    let mut violations = Vec::new();
    for i in 1..n {
        checked += 1;
        let val = moved.pair_root(&AffineRoot::finite(i - 1, i));
        let row_i = tableau.row_of(i);
        let row_next = tableau.row_of(i + 1);
        let ok = if row_i == row_next {
            val == rat_int(-1)
        } else if row_i > row_next {
            // i+1 strictly higher
            val >= -(&kappa - rat_int(1)) && val <= rat_int(-2)
        } else {
            val >= rat_int(1) && val <= &kappa - rat_int(2)
        };
        if !ok {
            violations.push(format!(
                "(w_T zeta, alpha_{i}) = {} out of range (rows {} vs {})",
                format_rational(&val),
                row_i + 1,
                row_next + 1
            ));
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            checked += 1;
            let val = moved.pair_root(&AffineRoot::finite(i, j));
            if val > &kappa - rat_int(2) {
                violations.push(format!(
                    "(w_T zeta, a[{},{}]) = {} exceeds kappa - 2",
                    i + 1,
                    j + 1,
                    format_rational(&val)
                ));
            }
        }
    }
    Some(WeightconReport {
        checked,
        violations,
    })
}
