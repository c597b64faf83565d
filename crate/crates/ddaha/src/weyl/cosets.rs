//! Parabolic cosets and double cosets.
//!
//! For an ordered partition `beta` of N, the parabolic subgroup is the
//! Young subgroup generated by the simple reflections inside the blocks.
//! This file computes:
//!
//! * minimal coset representatives `W^beta` and the factorization
//!   `x = w u` with additive lengths,
//! * the shortest sorting permutation `gamma_eta`,
//! * the antidominant marker `eta_w` attached to each finite minimal
//!   representative,
//! * the longest sorter `omega_eta` and the distinguished double-coset
//!   representatives `X^beta = { t_eta w }`, together with the mutually
//!   inverse maps `f`, `g` between them and the block-antidominant
//!   lattice vectors,
//! * `beta_of`, the partition whose block subsystem is the stabilizer of
//!   a double-coset representative.

use super::element::{enumerate_elements, enumerate_finite, AffineWeylElement};
use crate::roots::{positive_finite_roots, AffineRoot, OrderedPartition};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CosetError {
    /// The element was expected to be a minimal coset representative.
    NotMinimalRepresentative(String),
    /// The lattice vector violates antidominance on the block subsystem.
    NotBlockAntidominant(Vec<i64>),
    /// A finite-group operation received an element with translation part.
    NotFinite(String),
}

impl fmt::Display for CosetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CosetError::NotMinimalRepresentative(x) => {
                write!(f, "{x} is not a minimal coset representative")
            }
            CosetError::NotBlockAntidominant(eta) => {
                write!(f, "{eta:?} is not antidominant on the block subsystem")
            }
            CosetError::NotFinite(x) => write!(f, "{x} has a nonzero translation part"),
        }
    }
}

impl std::error::Error for CosetError {}

/// `x` lies in `W^beta`, i.e. `S(x)` avoids the positive block roots.
/// It suffices to test the block simple roots.
pub fn is_min_rep(x: &AffineWeylElement, beta: &OrderedPartition) -> bool {
    beta.simple_indices().iter().all(|&i| {
        let alpha = AffineRoot::finite(i, i + 1);
        x.act_root(&alpha).is_positive()
    })
}

/// Unique factorization `x = w u` with `w` in `W^beta`, `u` in the block
/// subgroup, and `l(x) = l(w) + l(u)`; computed by stripping right descents
/// at block simple roots (smallest index first).
pub fn min_coset_rep(
    x: &AffineWeylElement,
    beta: &OrderedPartition,
) -> (AffineWeylElement, AffineWeylElement) {
    let n = x.n();
    let simples = beta.simple_indices();
    let mut w = x.clone();
    let mut u = AffineWeylElement::identity(n);
    'outer: loop {
        for &i in &simples {
            let alpha = AffineRoot::finite(i, i + 1);
            if !w.act_root(&alpha).is_positive() {
                let s = AffineWeylElement::affine_reflection(n, &alpha);
                w = w.compose(&s);
                u = s.compose(&u);
                continue 'outer;
            }
        }
        break;
    }
    debug_assert!(is_min_rep(&w, beta));
    debug_assert_eq!(w.length() + u.length(), x.length());
    (w, u)
}

/// Entries non-decreasing: the antidominant cone of the lattice.
pub fn is_antidominant(eta: &[i64]) -> bool {
    eta.windows(2).all(|p| p[0] <= p[1])
}

/// Non-decreasing within every block of `beta`.
pub fn is_block_antidominant(eta: &[i64], beta: &OrderedPartition) -> bool {
    (0..eta.len().saturating_sub(1))
        .filter(|&i| beta.same_block(i, i + 1))
        .all(|i| eta[i] <= eta[i + 1])
}

/// The antidominant representative of the orbit: entries sorted ascending.
pub fn eta_minus(eta: &[i64]) -> Vec<i64> {
    let mut v = eta.to_vec();
    v.sort();
    v
}

/// Shortest finite element sorting `eta` into the antidominant chamber.
/// Stable: equal entries keep their relative order, which is exactly what
/// makes the inversion set `{ alpha > 0 : (eta, alpha) > 0 }`.
pub fn gamma_eta(eta: &[i64]) -> AffineWeylElement {
    let n = eta.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (eta[i], i));
    let mut window = vec![0usize; n];
    for (slot, &pos) in order.iter().enumerate() {
        window[pos] = slot;
    }
    AffineWeylElement::from_window(window)
}

/// Root set `w(R+ \ R_{beta,+}) cap R+` (finite roots), the strict
/// negativity conditions cutting out `P_-(w)`.
pub fn strict_negativity_roots(
    w: &AffineWeylElement,
    beta: &OrderedPartition,
) -> Vec<AffineRoot> {
    let n = w.n();
    positive_finite_roots(n)
        .into_iter()
        .filter(|alpha| !beta.contains_finite_root(alpha))
        .map(|alpha| w.act_root(&alpha))
        .filter(AffineRoot::is_positive)
        .collect()
}

/// The marker `eta_w` of a finite minimal representative: the antidominant
/// vector with `eta[0] = 0` whose simple pairings are `-1` exactly on
/// `w(R+ \ R_{beta,+})`.
pub fn eta_w(w: &AffineWeylElement, beta: &OrderedPartition) -> Result<Vec<i64>, CosetError> {
    if !w.is_finite() {
        return Err(CosetError::NotFinite(w.to_string()));
    }
    if !is_min_rep(w, beta) {
        return Err(CosetError::NotMinimalRepresentative(w.to_string()));
    }
    let n = w.n();
    let w_inv = w.inverse();
    let mut eta = vec![0i64; n];
    for i in 0..n - 1 {
        let alpha = AffineRoot::finite(i, i + 1);
        let pre = w_inv.act_root(&alpha);
        let in_set = pre.is_positive() && !beta.contains_finite_root(&pre);
        eta[i + 1] = eta[i] + i64::from(in_set);
    }
    Ok(eta)
}

/// Longest element of `W^beta` sending `eta` to its antidominant
/// representative; defined for block-antidominant `eta`.
pub fn omega_eta(
    eta: &[i64],
    beta: &OrderedPartition,
) -> Result<AffineWeylElement, CosetError> {
    if !is_block_antidominant(eta, beta) {
        return Err(CosetError::NotBlockAntidominant(eta.to_vec()));
    }
    let n = eta.len();
    // Longest sorter: within each equal-value class, reverse the original
    // order (the anti-stable sort).
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eta[a].cmp(&eta[b]).then(b.cmp(&a)));
    let mut window = vec![0usize; n];
    for (slot, &pos) in order.iter().enumerate() {
        window[pos] = slot;
    }
    let longest_sorter = AffineWeylElement::from_window(window);
    let (w, _) = min_coset_rep(&longest_sorter, beta);
    debug_assert_eq!(w.perm_vec(eta), eta_minus(eta));
    Ok(w)
}

/// The partition `beta(x)` with block simple roots
/// `Pi cap x(R_{beta,+})`.
pub fn beta_of(x: &AffineWeylElement, beta: &OrderedPartition) -> OrderedPartition {
    let n = x.n();
    let mut simple = vec![false; n.saturating_sub(1)];
    for alpha in beta.positive_block_roots() {
        let image = x.act_root(&alpha);
        if image.is_finite() && image.j == image.i + 1 {
            simple[image.i] = true;
        }
    }
    let mut parts = Vec::new();
    let mut current = 1usize;
    for (i, &linked) in simple.iter().enumerate() {
        let _ = i;
        if linked {
            current += 1;
        } else {
            parts.push(current);
            current = 1;
        }
    }
    parts.push(current);
    debug_assert_eq!(parts.iter().sum::<usize>(), n);
    OrderedPartition::new(parts)
}

/// `eta` lies in `P_-(w)`: antidominant and strictly negative on
/// `w(R+ \ R_{beta,+}) cap R+`.
pub fn in_p_minus_w(eta: &[i64], w: &AffineWeylElement, beta: &OrderedPartition) -> bool {
    is_antidominant(eta)
        && strict_negativity_roots(w, beta)
            .iter()
            .all(|alpha| eta[alpha.i] - eta[alpha.j] < 0)
}

/// All finite minimal representatives `W^beta cap W_fin`, sorted by length.
pub fn finite_min_reps(n: usize, beta: &OrderedPartition) -> Vec<AffineWeylElement> {
    enumerate_finite(n)
        .into_iter()
        .filter(|w| is_min_rep(w, beta))
        .collect()
}

/// Elements of `W^beta` with `length <= max_len` and trace in the window.
pub fn enumerate_min_reps(
    n: usize,
    beta: &OrderedPartition,
    max_len: usize,
    trace_min: i64,
    trace_max: i64,
) -> Vec<AffineWeylElement> {
    enumerate_elements(n, max_len, trace_min, trace_max)
        .into_iter()
        .filter(|x| is_min_rep(x, beta))
        .collect()
}

/// Non-decreasing integer vectors of length `n` with entries in
/// `[lo, hi]`, in lexicographic order.
pub fn enumerate_antidominant(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    fn rec(n: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let start = *cur.last().unwrap_or(&lo);
        for v in start.max(lo)..=hi {
            cur.push(v);
            rec(n, lo, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return out;
    }
    rec(n, lo, hi, &mut Vec::new(), &mut out);
    out
}

/// Antidominant vectors with `l(t_eta) <= max_t_len` and trace in
/// `[trace_min, trace_max]`. Enumerated through the gap vector: for
/// non-decreasing `eta` with gaps `g_k = eta[k+1] - eta[k]`,
/// `l(t_eta) = sum_k g_k (k+1)(n-1-k)`, which prunes exactly, and the
/// base entry is pinned by the trace window.
pub fn antidominant_in_window(
    n: usize,
    max_t_len: usize,
    trace_min: i64,
    trace_max: i64,
) -> Vec<Vec<i64>> {
    if n == 0 {
        return vec![];
    }
    let mut gap_vectors: Vec<Vec<i64>> = Vec::new();
    fn rec(n: usize, budget: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n - 1 {
            out.push(cur.clone());
            return;
        }
        let k = cur.len() as i64;
        let weight = (k + 1) * (n as i64 - 1 - k);
        let mut g = 0;
        loop {
            let cost = g * weight;
            if cost > budget {
                break;
            }
            cur.push(g);
            rec(n, budget - cost, cur, out);
            cur.pop();
            g += 1;
        }
    }
    rec(n, max_t_len as i64, &mut Vec::new(), &mut gap_vectors);
    let mut out = Vec::new();
    for gaps in gap_vectors {
        // trace = n*eta_1 + sum_k g_k (n-1-k)
        let shift: i64 = gaps
            .iter()
            .enumerate()
            .map(|(k, &g)| g * (n as i64 - 1 - k as i64))
            .sum();
        let lo = (trace_min - shift).div_euclid(n as i64)
            + i64::from((trace_min - shift).rem_euclid(n as i64) != 0);
        let hi = (trace_max - shift).div_euclid(n as i64);
        for base in lo..=hi {
            let mut eta = Vec::with_capacity(n);
            let mut v = base;
            eta.push(v);
            for &g in &gaps {
                v += g;
                eta.push(v);
            }
            debug_assert!({
                let t: i64 = eta.iter().sum();
                (trace_min..=trace_max).contains(&t)
            });
            out.push(eta);
        }
    }
    out.sort();
    out
}

/// Block-antidominant vectors with entries in `[lo, hi]`.
pub fn enumerate_block_antidominant(
    beta: &OrderedPartition,
    lo: i64,
    hi: i64,
) -> Vec<Vec<i64>> {
    fn rec(
        beta: &OrderedPartition,
        n: usize,
        lo: i64,
        hi: i64,
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let idx = cur.len();
        let start = if idx > 0 && beta.same_block(idx - 1, idx) {
            cur[idx - 1]
        } else {
            lo
        };
        for v in start.max(lo)..=hi {
            cur.push(v);
            rec(beta, n, lo, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(beta, beta.n(), lo, hi, &mut Vec::new(), &mut out);
    out
}

/// The distinguished double-coset representatives
/// `X^beta = { t_eta w : w in W^beta_fin, eta in P_-(w) }`, filtered to
/// `length <= max_len` and `trace(eta)` in `[trace_min, trace_max]`.
///
/// The trace window is what makes the set finite: the central translation
/// `t_{(1,...,1)}` (a power of `pi`) shifts representatives without
/// changing lengths, so a pure length cut would never terminate.
pub fn double_coset_reps(
    beta: &OrderedPartition,
    max_len: usize,
    trace_min: i64,
    trace_max: i64,
) -> Vec<AffineWeylElement> {
    let n = beta.n();
    let mut out = Vec::new();
    for w in finite_min_reps(n, beta) {
        let conditions = strict_negativity_roots(&w, beta);
        // l(t_eta) <= l(t_eta w) + l(w) bounds the translation part
        for eta in antidominant_in_window(n, max_len + w.length(), trace_min, trace_max) {
            if !conditions
                .iter()
                .all(|alpha| eta[alpha.i] - eta[alpha.j] < 0)
            {
                continue;
            }
            let x = AffineWeylElement::translation(eta).compose(&w);
            if x.length() <= max_len {
                out.push(x);
            }
        }
    }
    out.sort_by_key(|x| (x.length(), x.trace(), x.eta().to_vec(), x.window().to_vec()));
    out
}

/// `f : P_{beta,-} -> X^beta`, `eta -> t_{eta_-} omega_eta`.
pub fn f_map(eta: &[i64], beta: &OrderedPartition) -> Result<AffineWeylElement, CosetError> {
    let omega = omega_eta(eta, beta)?;
    Ok(AffineWeylElement::translation(eta_minus(eta)).compose(&omega))
}

/// `g : X^beta -> P_{beta,-}`, `t_eta w -> w^{-1}(eta)`.
pub fn g_map(x: &AffineWeylElement) -> Vec<i64> {
    let finite = x.finite_part();
    let inv = finite.inverse();
    inv.perm_vec(x.eta())
}
