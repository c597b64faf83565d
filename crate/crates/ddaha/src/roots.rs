//! The affine root system of type A_{N-1}^(1) and its weights.
//!
//! Roots are `e_i - e_j + k*delta` with `i != j`; the positive ones have
//! `k > 0`, or `k = 0` and `i < j`. Weights live in the level-kappa slice:
//! a rational coordinate vector plus the level, pairing with a root by
//! `coords[i] - coords[j] + k*level`. Coweights are the linear functionals
//! the algebra's polynomial part is generated by: a coordinate vector plus a
//! coefficient of the central element.
//!
//! Indices are 0-based internally; the JSON wire format is 1-based.

use crate::rational::{format_rational, Rational};
use num::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;

/// Affine root `e_i - e_j + k*delta` (`i != j`, 0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    pub i: usize,
    pub j: usize,
    pub k: i64,
}

impl AffineRoot {
    pub fn new(i: usize, j: usize, k: i64) -> Self {
        assert_ne!(i, j, "affine root needs i != j");
        AffineRoot { i, j, k }
    }

    /// Finite root `e_i - e_j`.
    pub fn finite(i: usize, j: usize) -> Self {
        Self::new(i, j, 0)
    }

    /// `alpha_i` for `i = 0, ..., n-1`; index 0 is `delta - (e_1 - e_n)`.
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i < n);
        if i == 0 {
            AffineRoot::new(n - 1, 0, 1)
        } else {
            AffineRoot::new(i - 1, i, 0)
        }
    }

    pub fn is_positive(&self) -> bool {
        self.k > 0 || (self.k == 0 && self.i < self.j)
    }

    pub fn negated(&self) -> Self {
        AffineRoot {
            i: self.j,
            j: self.i,
            k: -self.k,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.k == 0
    }

    /// The coroot: `(e_i - e_j + k delta)` corresponds to the coweight
    /// `e_i^ - e_j^ + k c`.
    pub fn coroot(&self, n: usize) -> Coweight {
        let mut coeffs = vec![Rational::zero(); n];
        coeffs[self.i] = Rational::from_integer(1.into());
        coeffs[self.j] = Rational::from_integer((-1).into());
        Coweight {
            coeffs,
            c: Rational::from_integer(self.k.into()),
        }
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a[{},{}]", self.i + 1, self.j + 1)?;
        match self.k {
            0 => Ok(()),
            1 => write!(f, "+d"),
            -1 => write!(f, "-d"),
            k => write!(f, "{k:+}d"),
        }
    }
}

impl Serialize for AffineRoot {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("AffineRoot", 3)?;
        s.serialize_field("i", &(self.i + 1))?;
        s.serialize_field("j", &(self.j + 1))?;
        s.serialize_field("k", &self.k)?;
        s.end()
    }
}

/// All positive finite roots `e_i - e_j`, `i < j`.
pub fn positive_finite_roots(n: usize) -> Vec<AffineRoot> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            out.push(AffineRoot::finite(i, j));
        }
    }
    out
}

/// A weight in the level slice: rational coordinates plus the level kappa.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<Rational>,
    pub level: Rational,
}

impl Weight {
    pub fn new(coords: Vec<Rational>, level: Rational) -> Self {
        Weight { coords, level }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    /// `(zeta, alpha) = coords[i] - coords[j] + k*level`.
    pub fn pair_root(&self, alpha: &AffineRoot) -> Rational {
        &self.coords[alpha.i] - &self.coords[alpha.j]
            + Rational::from_integer(alpha.k.into()) * &self.level
    }

    /// Evaluation on a coweight: `sum coords*coeffs + level*c`.
    pub fn eval(&self, xi: &Coweight) -> Rational {
        let mut acc = &self.level * &xi.c;
        for (a, b) in self.coords.iter().zip(&xi.coeffs) {
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
        acc
    }

    /// The coordinate multiset plus level; constant on finite Weyl orbits,
    /// so it labels central characters.
    pub fn orbit_label(&self) -> (Vec<Rational>, Rational) {
        let mut sorted = self.coords.clone();
        sorted.sort();
        (sorted, self.level.clone())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.coords.iter().map(format_rational).collect();
        write!(f, "({}; {})", coords.join(","), format_rational(&self.level))
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let coords: Vec<String> = self.coords.iter().map(format_rational).collect();
        let mut s = serializer.serialize_struct("Weight", 2)?;
        s.serialize_field("coords", &coords)?;
        s.serialize_field("level", &format_rational(&self.level))?;
        s.end()
    }
}

/// An element of the polynomial generators' span: `sum coeffs[i] e_i^ + c*c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coweight {
    pub coeffs: Vec<Rational>,
    pub c: Rational,
}

impl Coweight {
    pub fn new(coeffs: Vec<Rational>, c: Rational) -> Self {
        Coweight { coeffs, c }
    }

    /// `e_i^` as a coweight.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n];
        coeffs[i] = Rational::from_integer(1.into());
        Coweight {
            coeffs,
            c: Rational::zero(),
        }
    }

    /// The central element `c` alone.
    pub fn central(n: usize) -> Self {
        Coweight {
            coeffs: vec![Rational::zero(); n],
            c: Rational::from_integer(1.into()),
        }
    }

    /// A root evaluated on this coweight. Affine roots act through their
    /// finite part: `delta` vanishes on the polynomial generators.
    pub fn pair_root(&self, alpha: &AffineRoot) -> Rational {
        &self.coeffs[alpha.i] - &self.coeffs[alpha.j]
    }
}

/// Ordered partition `beta = (beta_1, ..., beta_m)` of N; zero parts allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct OrderedPartition {
    parts: Vec<usize>,
}

impl OrderedPartition {
    pub fn new(parts: Vec<usize>) -> Self {
        OrderedPartition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_blocks(&self) -> usize {
        self.parts.len()
    }

    /// Block index of the (0-based) position `idx`.
    pub fn block_of(&self, idx: usize) -> usize {
        let mut acc = 0;
        for (b, &p) in self.parts.iter().enumerate() {
            acc += p;
            if idx < acc {
                return b;
            }
        }
        panic!("index {idx} out of range for partition of {}", self.n());
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.block_of(i) == self.block_of(j)
    }

    /// Whether the finite root `e_i - e_j` lies in the block subsystem.
    pub fn contains_finite_root(&self, alpha: &AffineRoot) -> bool {
        alpha.is_finite() && self.same_block(alpha.i, alpha.j)
    }

    /// 0-based indices `i` with `alpha_{i+1} = e_i - e_{i+1}` a simple root
    /// of the block subsystem (positions `i`, `i+1` in one block).
    pub fn simple_indices(&self) -> Vec<usize> {
        (0..self.n().saturating_sub(1))
            .filter(|&i| self.same_block(i, i + 1))
            .collect()
    }

    /// 0-based first positions `k_a` of the nonempty blocks.
    pub fn block_leaders(&self) -> Vec<usize> {
        let mut leaders = Vec::new();
        let mut acc = 0;
        for &p in &self.parts {
            if p > 0 {
                leaders.push(acc);
            }
            acc += p;
        }
        leaders
    }

    /// Positive roots of the block subsystem.
    pub fn positive_block_roots(&self) -> Vec<AffineRoot> {
        positive_finite_roots(self.n())
            .into_iter()
            .filter(|a| self.same_block(a.i, a.j))
            .collect()
    }
}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All ordered partitions of `n` into positive parts.
pub fn ordered_partitions(n: usize) -> Vec<OrderedPartition> {
    fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<OrderedPartition>) {
        if rest == 0 {
            out.push(OrderedPartition::new(cur.clone()));
            return;
        }
        for p in 1..=rest {
            cur.push(p);
            rec(rest - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    #[test]
    fn positivity_convention() {
        assert!(AffineRoot::finite(0, 2).is_positive());
        assert!(!AffineRoot::finite(2, 0).is_positive());
        assert!(AffineRoot::new(2, 0, 1).is_positive());
        assert!(!AffineRoot::new(0, 2, -1).is_positive());
        // alpha_0 = delta - (e_1 - e_N)
        let a0 = AffineRoot::simple(4, 0);
        assert_eq!(a0, AffineRoot::new(3, 0, 1));
        assert!(a0.is_positive());
    }

    #[test]
    fn weight_root_pairing() {
        let zeta = Weight::new(vec![rat_int(3), rat_int(1)], rat_int(2));
        // (zeta, a_{12} + k delta) = 3 - 1 + 2k
        assert_eq!(zeta.pair_root(&AffineRoot::finite(0, 1)), rat_int(2));
        assert_eq!(zeta.pair_root(&AffineRoot::new(0, 1, -1)), rat_int(0));
        // alpha_0 at N=2: delta - a_{12}
        assert_eq!(zeta.pair_root(&AffineRoot::simple(2, 0)), rat_int(0));
    }

    #[test]
    fn partition_blocks() {
        let beta = OrderedPartition::new(vec![2, 0, 3]);
        assert_eq!(beta.n(), 5);
        assert_eq!(beta.simple_indices(), vec![0, 2, 3]);
        assert_eq!(beta.block_leaders(), vec![0, 2]);
        assert!(beta.same_block(2, 4));
        assert!(!beta.same_block(1, 2));
    }

    #[test]
    fn partitions_enumeration_counts() {
        // 2^(n-1) compositions of n
        assert_eq!(ordered_partitions(4).len(), 8);
    }

    #[test]
    fn json_shapes() {
        let root = AffineRoot::new(0, 2, -1);
        assert_eq!(
            serde_json::to_string(&root).unwrap(),
            r#"{"i":1,"j":3,"k":-1}"#
        );
        let zeta = Weight::new(vec![rat_int(1), crate::rational::rat(-1, 2)], rat_int(3));
        assert_eq!(
            serde_json::to_string(&zeta).unwrap(),
            r#"{"coords":["1","-1/2"],"level":"3"}"#
        );
    }
}
