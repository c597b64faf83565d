//! Elements of the extended affine Weyl group of gl_N.
//!
//! The group is the semidirect product of the symmetric group with the
//! weight lattice Z^N, with `w t_eta w^{-1} = t_{w(eta)}`. Every element is
//! kept in the normal form `t_eta * w` (translation on the left), stored as
//! the integer vector `eta` and the window `[w(1), ..., w(N)]`.
//!
//! Besides the group arithmetic this file carries the length/inversion-set
//! machinery, reduced words over the generators `pi, s_0, ..., s_{N-1}`, and
//! the Bruhat order.

use crate::rational::Rational;
use crate::roots::{AffineRoot, Coweight, Weight};
use num::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::HashSet;
use std::fmt;

/// Normal form `t_eta * w` of an extended affine Weyl group element.
///
/// `window[i] = w(i)` with 0-based positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeylElement {
    eta: Vec<i64>,
    window: Vec<usize>,
}

impl AffineWeylElement {
    pub fn new(eta: Vec<i64>, window: Vec<usize>) -> Self {
        assert_eq!(eta.len(), window.len(), "eta/window size mismatch");
        let n = window.len();
        let mut seen = vec![false; n];
        for &w in &window {
            assert!(w < n && !seen[w], "window is not a permutation");
            seen[w] = true;
        }
        AffineWeylElement { eta, window }
    }

    pub fn identity(n: usize) -> Self {
        AffineWeylElement {
            eta: vec![0; n],
            window: (0..n).collect(),
        }
    }

    pub fn translation(eta: Vec<i64>) -> Self {
        let n = eta.len();
        AffineWeylElement {
            eta,
            window: (0..n).collect(),
        }
    }

    pub fn from_window(window: Vec<usize>) -> Self {
        Self::new(vec![0; window.len()], window)
    }

    /// The simple reflection `s_i`, `i = 0, ..., N-1`; `s_0` carries the
    /// translation `t_{e_1 - e_N}`.
    pub fn simple_reflection(n: usize, i: usize) -> Self {
        assert!(i < n && n >= 2);
        if i == 0 {
            let mut eta = vec![0; n];
            eta[0] = 1;
            eta[n - 1] = -1;
            let mut window: Vec<usize> = (0..n).collect();
            window.swap(0, n - 1);
            AffineWeylElement { eta, window }
        } else {
            let mut window: Vec<usize> = (0..n).collect();
            window.swap(i - 1, i);
            Self::from_window(window)
        }
    }

    /// The length-zero generator `pi = t_{e_1} s_1 ... s_{N-1}`.
    pub fn pi(n: usize) -> Self {
        let mut eta = vec![0; n];
        eta[0] = 1;
        let window: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        AffineWeylElement { eta, window }
    }

    pub fn pi_power(n: usize, k: i64) -> Self {
        let base = if k >= 0 {
            Self::pi(n)
        } else {
            Self::pi(n).inverse()
        };
        let mut acc = Self::identity(n);
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&base);
        }
        acc
    }

    /// Reflection at an affine root: `s_{a + k delta} = t_{-k a} s_a`.
    pub fn affine_reflection(n: usize, alpha: &AffineRoot) -> Self {
        let mut eta = vec![0i64; n];
        eta[alpha.i] -= alpha.k;
        eta[alpha.j] += alpha.k;
        let mut window: Vec<usize> = (0..n).collect();
        window.swap(alpha.i, alpha.j);
        AffineWeylElement { eta, window }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn eta(&self) -> &[i64] {
        &self.eta
    }

    pub fn window(&self) -> &[usize] {
        &self.window
    }

    /// Whether the translation part vanishes.
    pub fn is_finite(&self) -> bool {
        self.eta.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_finite() && self.window.iter().enumerate().all(|(i, &w)| i == w)
    }

    /// The finite part as its own element.
    pub fn finite_part(&self) -> Self {
        Self::from_window(self.window.clone())
    }

    /// `sum eta`; a group homomorphism onto Z whose value is the power of
    /// `pi` in any expression of the element.
    pub fn trace(&self) -> i64 {
        self.eta.iter().sum()
    }

    /// Finite-part image of a lattice vector: `(w(v))[w(i)] = v[i]`.
    pub fn perm_vec(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (i, &x) in v.iter().enumerate() {
            out[self.window[i]] = x;
        }
        out
    }

    /// Group product `self * other` in normal form:
    /// `t_eta u * t_mu v = t_{eta + u(mu)} (uv)`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "rank mismatch");
        let shifted = self.perm_vec(&other.eta);
        let eta: Vec<i64> = self
            .eta
            .iter()
            .zip(&shifted)
            .map(|(a, b)| a + b)
            .collect();
        let window: Vec<usize> = other.window.iter().map(|&i| self.window[i]).collect();
        AffineWeylElement { eta, window }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut inv_window = vec![0; n];
        for (i, &w) in self.window.iter().enumerate() {
            inv_window[w] = i;
        }
        // (t_eta w)^{-1} = t_{-w^{-1}(eta)} w^{-1}, (w^{-1} eta)[k] = eta[w(k)]
        let eta: Vec<i64> = (0..n).map(|k| -self.eta[self.window[k]]).collect();
        AffineWeylElement {
            eta,
            window: inv_window,
        }
    }

    /// Dual action on roots:
    /// `a_{ij} + k delta -> a_{w(i) w(j)} + (k - (eta, a_{w(i) w(j)})) delta`.
    pub fn act_root(&self, alpha: &AffineRoot) -> AffineRoot {
        let i = self.window[alpha.i];
        let j = self.window[alpha.j];
        AffineRoot::new(i, j, alpha.k - (self.eta[i] - self.eta[j]))
    }

    /// Affine action on a weight: permute coordinates, then add
    /// `level * eta`.
    pub fn act_weight(&self, zeta: &Weight) -> Weight {
        assert_eq!(self.n(), zeta.n());
        let mut coords = vec![Rational::zero(); self.n()];
        for (i, c) in zeta.coords.iter().enumerate() {
            coords[self.window[i]] = c.clone();
        }
        for (c, &e) in coords.iter_mut().zip(&self.eta) {
            if e != 0 {
                *c += &zeta.level * Rational::from_integer(e.into());
            }
        }
        Weight::new(coords, zeta.level.clone())
    }

    /// Action on the polynomial generators' span: permute coordinates, then
    /// absorb the translation into the central coefficient
    /// (`t_eta(xi) = xi - eta(xi) c`).
    pub fn act_coweight(&self, xi: &Coweight) -> Coweight {
        assert_eq!(self.n(), xi.coeffs.len());
        let mut coeffs = vec![Rational::zero(); self.n()];
        for (i, c) in xi.coeffs.iter().enumerate() {
            coeffs[self.window[i]] = c.clone();
        }
        let mut c = xi.c.clone();
        for (co, &e) in coeffs.iter().zip(&self.eta) {
            if e != 0 {
                c -= Rational::from_integer(e.into()) * co;
            }
        }
        Coweight::new(coeffs, c)
    }

    /// The inversion set `S(x) = { alpha > 0 : x(alpha) < 0 }`, finite for
    /// every element. Deterministic order: by `(i, j, k)`.
    pub fn inversion_set(&self) -> Vec<AffineRoot> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let wi = self.window[i];
                let wj = self.window[j];
                let d = self.eta[wi] - self.eta[wj];
                let k_min = i64::from(i > j);
                let k_max = d - 1 + i64::from(wi > wj);
                for k in k_min..=k_max {
                    out.push(AffineRoot::new(i, j, k));
                }
            }
        }
        out.sort();
        out
    }

    pub fn length(&self) -> usize {
        let n = self.n();
        let mut total: i64 = 0;
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let wi = self.window[i];
                let wj = self.window[j];
                let d = self.eta[wi] - self.eta[wj];
                let cnt = d + i64::from(wi > wj) - i64::from(i > j);
                if cnt > 0 {
                    total += cnt;
                }
            }
        }
        total as usize
    }

    /// Left-descent test: `l(s_i x) < l(x)` iff `x^{-1}(alpha_i) < 0`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let alpha = AffineRoot::simple(self.n(), i);
        !self.inverse().act_root(&alpha).is_positive()
    }

    /// Right-descent test: `l(x s_i) < l(x)` iff `x(alpha_i) < 0`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let alpha = AffineRoot::simple(self.n(), i);
        !self.act_root(&alpha).is_positive()
    }

    /// A reduced word `x = pi^k s_{j_1} ... s_{j_m}`, built greedily by
    /// stripping the smallest left descent at each step.
    pub fn reduced_word(&self) -> (i64, Vec<usize>) {
        let n = self.n();
        let mut rest = self.clone();
        let mut letters = Vec::new();
        while rest.length() > 0 {
            let i = (0..n)
                .find(|&i| rest.has_left_descent(i))
                .expect("positive length forces a descent");
            letters.push(i);
            rest = Self::simple_reflection(n, i).compose(&rest);
        }
        let k = rest.trace();
        debug_assert_eq!(rest, Self::pi_power(n, k), "length-zero part must be a pi power");
        // s_j pi^k = pi^k s_{j-k}: move the pi power to the front.
        let shift = |j: usize| -> usize {
            (((j as i64 - k) % n as i64 + n as i64) % n as i64) as usize
        };
        (k, letters.into_iter().map(shift).collect())
    }

    /// Rebuilds an element from `pi^k s_{j_1} ... s_{j_m}`.
    pub fn from_word(n: usize, pi_power: i64, letters: &[usize]) -> Self {
        let mut acc = Self::pi_power(n, pi_power);
        for &j in letters {
            acc = acc.compose(&Self::simple_reflection(n, j));
        }
        acc
    }

    /// Bruhat comparison `self <= other`. Powers of `pi` must agree; the
    /// Coxeter parts are compared by the subword property, materialized as
    /// the set of all subword products of one fixed reduced word of `other`.
    pub fn bruhat_leq(&self, other: &Self) -> bool {
        if self.n() != other.n() {
            return false;
        }
        if self.trace() != other.trace() {
            return false;
        }
        if self == other {
            return true;
        }
        if self.length() >= other.length() {
            return false;
        }
        let n = self.n();
        let (k, letters) = other.reduced_word();
        let target = Self::pi_power(n, -k).compose(self);
        let mut reachable: HashSet<AffineWeylElement> = HashSet::new();
        reachable.insert(Self::identity(n));
        for &j in &letters {
            let s = Self::simple_reflection(n, j);
            let next: Vec<AffineWeylElement> =
                reachable.iter().map(|u| u.compose(&s)).collect();
            reachable.extend(next);
        }
        reachable.contains(&target)
    }
}

impl fmt::Display for AffineWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let eta: Vec<String> = self.eta.iter().map(i64::to_string).collect();
        let win: Vec<String> = self.window.iter().map(|&w| (w + 1).to_string()).collect();
        write!(f, "t[{}]*[{}]", eta.join(","), win.join(","))
    }
}

impl Serialize for AffineWeylElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let window: Vec<usize> = self.window.iter().map(|&w| w + 1).collect();
        let mut s = serializer.serialize_struct("AffineWeylElement", 2)?;
        s.serialize_field("eta", &self.eta)?;
        s.serialize_field("window", &window)?;
        s.end()
    }
}

/// Breadth-first enumeration of all elements with `length <= max_len` and
/// `trace` in `[trace_min, trace_max]`, over the generators
/// `s_0, ..., s_{N-1}, pi, pi^{-1}`. Output sorted by (length, trace, form).
pub fn enumerate_elements(
    n: usize,
    max_len: usize,
    trace_min: i64,
    trace_max: i64,
) -> Vec<AffineWeylElement> {
    let mut gens = vec![AffineWeylElement::pi(n), AffineWeylElement::pi(n).inverse()];
    if n >= 2 {
        for i in 0..n {
            gens.push(AffineWeylElement::simple_reflection(n, i));
        }
    }
    let mut seen: HashSet<AffineWeylElement> = HashSet::new();
    let mut queue = std::collections::VecDeque::new();
    let start = AffineWeylElement::identity(n);
    if (trace_min..=trace_max).contains(&0) {
        seen.insert(start.clone());
        queue.push_back(start);
    } else {
        // walk the pi direction into the window first
        let k = if trace_min > 0 { trace_min } else { trace_max };
        let s = AffineWeylElement::pi_power(n, k);
        seen.insert(s.clone());
        queue.push_back(s);
    }
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = x.compose(g);
            if y.length() > max_len || !(trace_min..=trace_max).contains(&y.trace()) {
                continue;
            }
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<AffineWeylElement> = seen.into_iter().collect();
    out.sort_by_key(|x| (x.length(), x.trace(), x.eta.clone(), x.window.clone()));
    out
}

/// All N! finite elements, sorted by (length, window).
pub fn enumerate_finite(n: usize) -> Vec<AffineWeylElement> {
    use itertools::Itertools;
    let mut out: Vec<AffineWeylElement> = (0..n)
        .permutations(n)
        .map(AffineWeylElement::from_window)
        .collect();
    out.sort_by_key(|x| (x.length(), x.window.clone()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat_int, Rational};
    use crate::roots::Weight;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn s(n: usize, i: usize) -> AffineWeylElement {
        AffineWeylElement::simple_reflection(n, i)
    }

    #[test]
    fn simple_reflection_is_involution() {
        for n in 2..=4 {
            for i in 0..n {
                assert!(s(n, i).compose(&s(n, i)).is_identity());
            }
        }
    }

    #[test]
    fn pi_matches_its_defining_word() {
        // pi = t_{e_1} s_1 ... s_{N-1}
        for n in 2..=5 {
            let mut eta = vec![0; n];
            eta[0] = 1;
            let mut x = AffineWeylElement::translation(eta);
            for i in 1..n {
                x = x.compose(&s(n, i));
            }
            assert_eq!(x, AffineWeylElement::pi(n));
        }
    }

    #[test]
    fn pi_to_the_n_is_the_diagonal_translation() {
        for n in 2..=5 {
            let mut acc = AffineWeylElement::identity(n);
            for _ in 0..n {
                acc = acc.compose(&AffineWeylElement::pi(n));
            }
            assert_eq!(acc, AffineWeylElement::translation(vec![1; n]));
        }
    }

    #[test]
    fn pi_conjugates_simple_reflections_cyclically() {
        for n in 2..=4 {
            let pi = AffineWeylElement::pi(n);
            for i in 0..n {
                let lhs = pi.compose(&s(n, i));
                let rhs = s(n, (i + 1) % n).compose(&pi);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn group_axioms_on_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let n = 4;
        let rand_el = |rng: &mut ChaCha8Rng| {
            let mut x = AffineWeylElement::identity(n);
            for _ in 0..8 {
                let pick = rng.gen_range(0..n + 1);
                let g = if pick == n {
                    AffineWeylElement::pi(n)
                } else {
                    s(n, pick)
                };
                x = x.compose(&g);
            }
            x
        };
        for _ in 0..30 {
            let a = rand_el(&mut rng);
            let b = rand_el(&mut rng);
            let c = rand_el(&mut rng);
            assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
            assert!(a.compose(&a.inverse()).is_identity());
            // conjugation law for translations
            let eta: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
            let t = AffineWeylElement::translation(eta.clone());
            let lhs = a.finite_part().compose(&t).compose(&a.finite_part().inverse());
            assert_eq!(lhs, AffineWeylElement::translation(a.perm_vec(&eta)));
        }
    }

    #[test]
    fn root_action_golden_cases() {
        // s_0(alpha_0) = -alpha_0
        for n in 2..=4 {
            let a0 = AffineRoot::simple(n, 0);
            assert_eq!(s(n, 0).act_root(&a0), a0.negated());
            let id = AffineWeylElement::identity(n);
            for i in 0..n {
                let a = AffineRoot::simple(n, i);
                assert_eq!(id.act_root(&a), a);
            }
        }
        // N=2: t_{e_1}(a_{12}) = a_{12} - delta
        let t = AffineWeylElement::translation(vec![1, 0]);
        assert_eq!(
            t.act_root(&AffineRoot::finite(0, 1)),
            AffineRoot::new(0, 1, -1)
        );
    }

    #[test]
    fn root_action_is_bijective_on_windows() {
        // images of a k-window of the root system are pairwise distinct
        // and recovered by the inverse
        let x = AffineWeylElement::new(vec![2, -1, 0], vec![1, 2, 0]);
        let inv = x.inverse();
        let mut images = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                if i == j {
                    continue;
                }
                for k in -3..=3 {
                    let alpha = AffineRoot::new(i, j, k);
                    let image = x.act_root(&alpha);
                    assert_eq!(inv.act_root(&image), alpha);
                    images.push(image);
                }
            }
        }
        let total = images.len();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), total);
    }

    #[test]
    fn root_action_respects_weight_pairing() {
        // (x(zeta), alpha) = (zeta, x^{-1}(alpha)) links act_weight and
        // act_root through the exact pairing; checked on random data.
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let n = 3;
        for _ in 0..40 {
            let x = AffineWeylElement::new(
                {
                    let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
                    v
                },
                {
                    use itertools::Itertools;
                    let idx = rng.gen_range(0..6);
                    (0..n).permutations(n).nth(idx).unwrap()
                },
            );
            let zeta = Weight::new(
                (0..n).map(|_| rat_int(rng.gen_range(-5..=5))).collect(),
                rat_int(rng.gen_range(1..=3)),
            );
            let alpha = AffineRoot::new(0, rng.gen_range(1..n), rng.gen_range(-2..=2));
            let lhs = x.act_weight(&zeta).pair_root(&alpha);
            let rhs = zeta.pair_root(&x.inverse().act_root(&alpha));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn weight_action_cases() {
        // t_eta(zeta) = zeta + kappa eta
        let zeta = Weight::new(vec![rat_int(3), rat_int(1)], rat_int(2));
        let t = AffineWeylElement::translation(vec![1, -1]);
        let moved = t.act_weight(&zeta);
        assert_eq!(moved.coords, vec![rat_int(5), rat_int(-1)]);
        assert_eq!(moved.level, rat_int(2));

        // s_1 fixes zeta when (zeta, alpha_1) = 0
        let sym = Weight::new(vec![rat_int(1), rat_int(1)], rat_int(2));
        assert_eq!(s(2, 1).act_weight(&sym), sym);

        // s_0 via s_alpha = t_{-k a} s_a (the reflection decomposition)
        let alpha0 = AffineRoot::simple(2, 0);
        let refl = AffineWeylElement::affine_reflection(2, &alpha0);
        assert_eq!(refl, s(2, 0));
        let direct = s(2, 0).act_weight(&zeta);
        let via = AffineWeylElement::translation(vec![1, -1])
            .act_weight(&s(2, 1).act_weight(&zeta));
        assert_eq!(direct, via);
        // (zeta, alpha_0) = 0 here, so s_0 fixes zeta
        assert_eq!(direct, zeta);
    }

    #[test]
    fn inversion_sets_and_length() {
        for n in 2..=4 {
            let id = AffineWeylElement::identity(n);
            assert_eq!(id.length(), 0);
            assert!(id.inversion_set().is_empty());
            assert_eq!(AffineWeylElement::pi(n).length(), 0);
        }
        let t = AffineWeylElement::translation(vec![1, 0]);
        assert_eq!(t.inversion_set(), vec![AffineRoot::finite(0, 1)]);
        assert_eq!(t.length(), 1);
    }

    #[test]
    fn length_equals_inversion_count_and_word_length() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 2..=4 {
            for _ in 0..25 {
                let mut x = AffineWeylElement::identity(n);
                for _ in 0..rng.gen_range(0..10) {
                    let pick = rng.gen_range(0..n + 2);
                    let g = match pick {
                        p if p < n => s(n, p),
                        p if p == n => AffineWeylElement::pi(n),
                        _ => AffineWeylElement::pi(n).inverse(),
                    };
                    x = x.compose(&g);
                }
                let (k, letters) = x.reduced_word();
                assert_eq!(letters.len(), x.length());
                assert_eq!(letters.len(), x.inversion_set().len());
                assert_eq!(AffineWeylElement::from_word(n, k, &letters), x);
            }
        }
    }

    #[test]
    fn inversion_set_from_reduced_word_formula() {
        // S(w) = { s_{j_l}...s_{j_2}(a_{j_1}), s_{j_l}...s_{j_3}(a_{j_2}),
        //          ..., a_{j_l} }
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let n = 3;
        for _ in 0..20 {
            let mut x = AffineWeylElement::identity(n);
            for _ in 0..rng.gen_range(0..8) {
                x = x.compose(&s(n, rng.gen_range(0..n)));
            }
            let (_, letters) = x.reduced_word();
            let mut expected = Vec::new();
            for (t, &jt) in letters.iter().enumerate() {
                let mut root = AffineRoot::simple(n, jt);
                for &jl in letters[t + 1..].iter() {
                    root = s(n, jl).act_root(&root);
                }
                expected.push(root);
            }
            expected.sort();
            assert_eq!(expected, x.inversion_set());
        }
    }

    #[test]
    fn reduced_word_golden_cases() {
        let id = AffineWeylElement::identity(3);
        assert_eq!(id.reduced_word(), (0, vec![]));
        let pi3 = AffineWeylElement::pi_power(3, 3);
        assert_eq!(pi3.reduced_word(), (3, vec![]));
        let t = AffineWeylElement::translation(vec![-1, 0, 1]);
        let (k, letters) = t.reduced_word();
        assert_eq!(letters.len(), 4);
        assert_eq!(t.length(), 4);
        assert_eq!(AffineWeylElement::from_word(3, k, &letters), t);
    }

    #[test]
    fn descent_lowers_length() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let n = 3;
        for _ in 0..20 {
            let mut x = AffineWeylElement::identity(n);
            for _ in 0..rng.gen_range(1..8) {
                x = x.compose(&s(n, rng.gen_range(0..n)));
            }
            for alpha in x.inversion_set() {
                let refl = AffineWeylElement::affine_reflection(n, &alpha);
                assert!(x.compose(&refl).length() < x.length());
            }
        }
    }

    #[test]
    fn bruhat_reflexive_and_identity_bottom() {
        let n = 3;
        for x in enumerate_elements(n, 3, 0, 0) {
            assert!(x.bruhat_leq(&x));
            assert!(AffineWeylElement::identity(n).bruhat_leq(&x));
        }
    }

    #[test]
    fn bruhat_matches_covering_relation_closure() {
        // Transitive closure of "multiply by a reflection, length drops
        // by one" on all N=3 elements of length <= 3 (pi power 0).
        let n = 3;
        let elements = enumerate_elements(n, 3, 0, 0);
        let index: std::collections::HashMap<&AffineWeylElement, usize> =
            elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let m = elements.len();
        let mut leq = vec![vec![false; m]; m];
        for (i, _) in elements.iter().enumerate() {
            leq[i][i] = true;
        }
        // covers: y covers x if x = y*s_alpha for alpha in S(y) with
        // l(x) = l(y) - 1
        let mut changed = true;
        let mut covers: Vec<(usize, usize)> = Vec::new(); // (lower, upper)
        for (yi, y) in elements.iter().enumerate() {
            for alpha in y.inversion_set() {
                let x = y.compose(&AffineWeylElement::affine_reflection(n, &alpha));
                if x.length() + 1 == y.length() {
                    if let Some(&xi) = index.get(&x) {
                        covers.push((xi, yi));
                    }
                }
            }
        }
        while changed {
            changed = false;
            for &(lo, hi) in &covers {
                for i in 0..m {
                    if leq[i][lo] && !leq[i][hi] {
                        leq[i][hi] = true;
                        changed = true;
                    }
                }
            }
        }
        for (xi, x) in elements.iter().enumerate() {
            for (yi, y) in elements.iter().enumerate() {
                assert_eq!(
                    x.bruhat_leq(y),
                    leq[xi][yi],
                    "bruhat mismatch for {x} vs {y}"
                );
            }
        }
    }

    #[test]
    fn serialization_shape() {
        let x = AffineWeylElement::new(vec![1, 0], vec![1, 0]);
        assert_eq!(
            serde_json::to_string(&x).unwrap(),
            r#"{"eta":[1,0],"window":[2,1]}"#
        );
    }

    #[test]
    fn coweight_action_absorbs_translation_into_central_part() {
        // t_eta(xi) = xi - eta(xi) c on the polynomial generators
        let t = AffineWeylElement::translation(vec![2, -1]);
        let xi = Coweight::basis(2, 0);
        let moved = t.act_coweight(&xi);
        assert_eq!(moved.coeffs, vec![rat_int(1), rat_int(0)]);
        assert_eq!(moved.c, rat_int(-2));
        // and the pairing dualizes the affine action on weights
        let zeta = Weight::new(vec![Rational::zero(), rat_int(5)], rat_int(3));
        let lhs = t.act_weight(&zeta).eval(&xi);
        let rhs = zeta.eval(&t.inverse().act_coweight(&xi));
        assert_eq!(lhs, rhs);
    }
}
