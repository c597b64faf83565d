//! q-series for the symmetric parts: q-multinomials, the restricted
//! tableau configuration sum, its alternating affine-Weyl form, and the
//! specialized characters.
//!
//! The configuration sum is `F(q) = sum q^{d(T)}` over level-restricted
//! standard tableaux. The lattice-model identity rewrites it as an
//! alternating sum over the affine Weyl group of sl_m acting on the
//! highest weight through the shifted (dot) action,
//!
//! ```text
//! F(q) = sum_w (-1)^{l(w)} q^{E(w o lambda)} [ N ; beta_{w o lambda, mu} ],
//! ```
//!
//! where the energy `E` grows quadratically with the translation part at
//! positive shifted level, so the sum truncates deterministically at any
//! q-cutoff. The energy normalization is pinned once by the smallest
//! nonzero case (two cells in a column at level one gives `F = q`), per
//! the calibration test in this module.

use crate::induced::{
    apply_power_sum, intertwiner_vector, is_generic, symmetrize, Flavor,
    InducedParams, ModuleVector, Truncation,
};
use crate::linalg::rank_of_vectors;
use crate::rational::{rat_int, Int, Rational};
use crate::roots::{AffineRoot, OrderedPartition, Weight};
use crate::tableaux::{beta_from_weights, enumerate_tableaux, zeta_lambda_mu, SlmWeight};
use crate::weyl::{antidominant_in_window, beta_of, in_p_minus_w, AffineWeylElement};
use itertools::Itertools;
use num::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CharacterError {
    /// The alternating sum terminates only at positive shifted level.
    NonPositiveShiftedLevel(i64),
    /// The weight pair admits no ordered partition.
    NoPartition,
}

impl fmt::Display for CharacterError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharacterError::NonPositiveShiftedLevel(k) => {
                write!(f, "shifted level {k} is not positive")
            }
            CharacterError::NoPartition => {
                write!(f, "weight difference is not a tensor-power weight")
            }
        }
    }
}

impl std::error::Error for CharacterError {}

/// Integer-coefficient polynomial in `q`, optionally truncated: when
/// `truncated_at = Some(D)` the coefficients of `q^e`, `e < D`, are exact
/// and everything above is dropped.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPolynomial {
    coeffs: BTreeMap<i64, Int>,
    pub truncated_at: Option<i64>,
    pub conjectural: bool,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Int::from(1))
    }

    pub fn monomial(exp: i64, coeff: Int) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, exp: i64) -> Int {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Int::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&i64, &Int)> {
        self.coeffs.iter()
    }

    pub fn degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i64, coeff: Int) {
        if coeff.is_zero() {
            return;
        }
        if let Some(d) = self.truncated_at {
            if exp >= d {
                return;
            }
        }
        match self.coeffs.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn join_truncation(a: Option<i64>, b: Option<i64>) -> Option<i64> {
        match (a, b) {
            (None, t) | (t, None) => t,
            (Some(x), Some(y)) => Some(x.min(y)),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = QPolynomial {
            coeffs: BTreeMap::new(),
            truncated_at: Self::join_truncation(self.truncated_at, other.truncated_at),
            conjectural: self.conjectural || other.conjectural,
        };
        for (&e, c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = QPolynomial {
            coeffs: BTreeMap::new(),
            truncated_at: Self::join_truncation(self.truncated_at, other.truncated_at),
            conjectural: self.conjectural || other.conjectural,
        };
        for (&e, c) in &self.coeffs {
            out.add_term(e, c.clone());
        }
        for (&e, c) in &other.coeffs {
            out.add_term(e, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = QPolynomial {
            coeffs: BTreeMap::new(),
            truncated_at: Self::join_truncation(self.truncated_at, other.truncated_at),
            conjectural: self.conjectural || other.conjectural,
        };
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &other.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn shift(&self, exp: i64) -> Self {
        let mut out = QPolynomial {
            coeffs: BTreeMap::new(),
            truncated_at: self.truncated_at.map(|d| d + exp),
            conjectural: self.conjectural,
        };
        for (&e, c) in &self.coeffs {
            out.add_term(e + exp, c.clone());
        }
        out
    }

    pub fn truncate(&self, cutoff: i64) -> Self {
        let mut out = QPolynomial {
            coeffs: BTreeMap::new(),
            truncated_at: Some(Self::join_truncation(self.truncated_at, Some(cutoff)).unwrap()),
            conjectural: self.conjectural,
        };
        for (&e, c) in &self.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }

    /// Coefficientwise equality below the cutoff.
    pub fn eq_mod(&self, other: &Self, cutoff: i64) -> bool {
        for e in 0..cutoff {
            if self.coefficient(e) != other.coefficient(e) {
                return false;
            }
        }
        true
    }

    /// Exact division; panics when the division leaves a remainder
    /// (callers divide q-factorial products that split evenly).
    pub fn div_exact(&self, divisor: &Self) -> Self {
        assert!(self.truncated_at.is_none() && divisor.truncated_at.is_none());
        let mut rem = self.coeffs.clone();
        let mut out = QPolynomial::zero();
        let (&dlead, dcoeff) = divisor.coeffs.iter().next_back().expect("divide by zero");
        let dcoeff = dcoeff.clone();
        while let Some((&rlead, _)) = rem.iter().next_back() {
            let rcoeff = rem[&rlead].clone();
            let e = rlead - dlead;
            assert!(e >= 0, "non-exact division");
            let q = &rcoeff / &dcoeff;
            assert_eq!(&q * &dcoeff, rcoeff, "non-exact division");
            out.add_term(e, q.clone());
            for (&de, dc) in &divisor.coeffs {
                let slot = rem.entry(de + e).or_insert_with(Int::zero);
                *slot -= &q * dc;
                if slot.is_zero() {
                    rem.remove(&(de + e));
                }
            }
        }
        out
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        } else {
            let parts: Vec<String> = self
                .coeffs
                .iter()
                .map(|(&e, c)| match e {
                    0 => c.to_string(),
                    1 if c.is_one() => "q".to_string(),
                    1 => format!("{c}*q"),
                    _ if c.is_one() => format!("q^{e}"),
                    _ => format!("{c}*q^{e}"),
                })
                .collect();
            write!(f, "{}", parts.join(" + "))?;
        }
        if let Some(d) = self.truncated_at {
            write!(f, " (mod q^{d})")?;
        }
        Ok(())
    }
}

impl Serialize for QPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let coeffs: BTreeMap<String, String> = self
            .coeffs
            .iter()
            .map(|(e, c)| (e.to_string(), c.to_string()))
            .collect();
        let mut s = serializer.serialize_struct("QPolynomial", 3)?;
        s.serialize_field("coeffs", &coeffs)?;
        s.serialize_field("truncated_at", &self.truncated_at)?;
        s.serialize_field("conjectural", &self.conjectural)?;
        s.end()
    }
}

/// `(q)_n = (1-q)(1-q^2)...(1-q^n)`.
pub fn q_pochhammer(n: usize) -> QPolynomial {
    let mut out = QPolynomial::one();
    for t in 1..=n as i64 {
        let mut factor = QPolynomial::one();
        factor.add_term(t, Int::from(-1));
        out = out.mul(&factor);
    }
    out
}

/// The q-multinomial `[N; beta] = (q)_N / prod (q)_{beta_a}`; always an
/// exact polynomial with non-negative coefficients.
pub fn q_multinomial(n: usize, beta: &OrderedPartition) -> QPolynomial {
    assert_eq!(beta.n(), n, "partition must sum to N");
    let mut out = q_pochhammer(n);
    for &p in beta.parts() {
        if p > 0 {
            out = out.div_exact(&q_pochhammer(p));
        }
    }
    out
}

/// Series expansion of `1/(q)_n` truncated below `cutoff`.
pub fn inv_pochhammer_series(n: usize, cutoff: i64) -> QPolynomial {
    let mut out = QPolynomial::one().truncate(cutoff);
    for t in 1..=n as i64 {
        let mut geometric = QPolynomial::zero().truncate(cutoff);
        let mut e = 0;
        while e < cutoff {
            geometric.add_term(e, Int::from(1));
            e += t;
        }
        out = out.mul(&geometric);
    }
    out
}

/// An element `t_alpha sigma` of the affine Weyl group of sl_m:
/// a window permutation of the tuple slots plus a translation by a
/// sum-zero integer vector. The length parity equals the permutation
/// sign (root-lattice translations have even length).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSlmElement {
    pub perm: Vec<usize>,
    pub alpha: Vec<i64>,
}

impl AffineSlmElement {
    pub fn new(perm: Vec<usize>, alpha: Vec<i64>) -> Self {
        assert_eq!(perm.len(), alpha.len());
        assert_eq!(alpha.iter().sum::<i64>(), 0, "translation must be sum-zero");
        AffineSlmElement { perm, alpha }
    }

    pub fn identity(m: usize) -> Self {
        AffineSlmElement {
            perm: (0..m).collect(),
            alpha: vec![0; m],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.alpha.iter().all(|&a| a == 0)
            && self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `(-1)^{l(w)}`: the sign of the finite part.
    pub fn sign(&self) -> i64 {
        let mut seen = vec![false; self.perm.len()];
        let mut sign = 1i64;
        for start in 0..self.perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                at = self.perm[at];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }
}

/// The rho tuple `(m-1, m-2, ..., 0)`.
fn rho_tuple(m: usize) -> Vec<i64> {
    (0..m).map(|a| (m - 1 - a) as i64).collect()
}

/// The shifted (dot) action `w o lambda = w(lambda + rho) - rho` together
/// with the energy exponent `E(w o lambda)`: for `w = t_alpha sigma`,
///
/// ```text
/// E = (alpha, sigma(lambda + rho)) + (alpha, alpha) (l + m) / 2,
/// ```
///
/// a non-negative integer growing quadratically in the translation when
/// the shifted level is positive. The orientation is the calibrated one
/// (see the module doc); finite elements have energy zero.
pub fn dot_action(w: &AffineSlmElement, lambda: &SlmWeight) -> (SlmWeight, i64) {
    let m = lambda.m();
    assert_eq!(w.perm.len(), m);
    let kappa = lambda.level + m as i64;
    let rho = rho_tuple(m);
    let nu: Vec<i64> = lambda.nu.iter().zip(&rho).map(|(a, b)| a + b).collect();
    // sigma permutes slots: moved[sigma(a)] = nu[a]
    let mut moved = vec![0i64; m];
    for (a, &v) in nu.iter().enumerate() {
        moved[w.perm[a]] = v;
    }
    // energy before translation is zero; t_alpha adds the pairing plus
    // the quadratic term (pairings taken mean-free: alpha sums to zero)
    let pairing: i64 = w.alpha.iter().zip(&moved).map(|(a, v)| a * v).sum();
    let quad: i64 = w.alpha.iter().map(|a| a * a).sum();
    debug_assert_eq!(quad % 2, 0);
    let energy = pairing + quad / 2 * kappa;
    let result: Vec<i64> = moved
        .iter()
        .zip(&w.alpha)
        .zip(&rho)
        .map(|((v, a), r)| v + kappa * a - r)
        .collect();
    (SlmWeight::new(result, lambda.level), energy)
}

/// All elements of the affine Weyl group of sl_m whose dot-action energy
/// on `lambda` stays below `cutoff`. Requires a strictly dominant shifted
/// weight (`lambda` dominant integral) and positive shifted level, which
/// make the energy coercive. Sorted by (energy, alpha, perm).
pub fn enumerate_wg_below(
    lambda: &SlmWeight,
    cutoff: i64,
) -> Result<Vec<(AffineSlmElement, SlmWeight, i64)>, CharacterError> {
    let m = lambda.m();
    let kappa = lambda.level + m as i64;
    if kappa <= 0 {
        return Err(CharacterError::NonPositiveShiftedLevel(kappa));
    }
    let rho = rho_tuple(m);
    let nu: Vec<i64> = lambda.nu.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mean = nu.iter().sum::<i64>() as f64 / m as f64;
    let norm: f64 = nu
        .iter()
        .map(|&v| (v as f64 - mean) * (v as f64 - mean))
        .sum::<f64>()
        .sqrt();
    // |alpha|_inf <= A from (1/2) kappa |alpha|^2 - |alpha| |nu0| <= cutoff
    let k = kappa as f64;
    let rad = (m as f64).sqrt() * norm;
    let bound = ((rad + (rad * rad + 2.0 * k * cutoff.max(0) as f64).sqrt()) / k).ceil() as i64 + 1;

    let mut alphas = Vec::new();
    fn rec(m: usize, bound: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == m - 1 {
            let partial: i64 = cur.iter().sum();
            let last = -partial;
            if last.abs() <= bound {
                let mut full = cur.clone();
                full.push(last);
                out.push(full);
            }
            return;
        }
        for v in -bound..=bound {
            cur.push(v);
            rec(m, bound, cur, out);
            cur.pop();
        }
    }
    rec(m, bound, &mut Vec::new(), &mut alphas);

    let mut out = Vec::new();
    for alpha in alphas {
        for perm in (0..m).permutations(m) {
            let w = AffineSlmElement::new(perm, alpha.clone());
            let (moved, energy) = dot_action(&w, lambda);
            if energy < cutoff {
                out.push((w, moved, energy));
            }
        }
    }
    out.sort_by_key(|(w, _, e)| (*e, w.alpha.clone(), w.perm.clone()));
    Ok(out)
}

/// The tableau configuration sum `F(q) = sum q^{d(T)}` over the
/// level-restricted standard tableaux of the pair.
pub fn f_tableaux(lambda: &SlmWeight, mu: &SlmWeight, n: usize) -> QPolynomial {
    let mut out = QPolynomial::zero();
    for t in enumerate_tableaux(lambda, mu, n, true, Some(lambda.level)) {
        let (_, d) = t.d_statistics();
        out.add_term(d, Int::from(1));
    }
    out
}

/// The alternating form of the configuration sum, truncated below
/// `cutoff`:
/// `sum_w (-1)^{l(w)} q^{E(w o lambda)} [N; beta_{w o lambda, mu}]`,
/// where terms whose dotted weight admits no partition contribute zero.
pub fn f_alternating(
    lambda: &SlmWeight,
    mu: &SlmWeight,
    n: usize,
    cutoff: i64,
) -> Result<QPolynomial, CharacterError> {
    let mut out = QPolynomial::zero().truncate(cutoff);
    for (w, moved, energy) in enumerate_wg_below(lambda, cutoff)? {
        let Some(beta) = beta_from_weights(&moved, mu, n) else {
            continue;
        };
        let bracket = q_multinomial(n, &beta);
        let term = bracket.shift(energy).truncate(cutoff);
        let signed = if w.sign() >= 0 {
            term
        } else {
            QPolynomial::zero().truncate(cutoff).sub(&term)
        };
        out = out.add(&signed);
    }
    Ok(out)
}

/// Conformal weight difference
/// `Delta_lambda - Delta_mu` with
/// `Delta = ((lambda, lambda) + 2 (rho, lambda)) / (2 (l + m))`,
/// computed on mean-centered representatives.
pub fn delta_difference(lambda: &SlmWeight, mu: &SlmWeight) -> Rational {
    let kappa = rat_int(lambda.level + lambda.m() as i64);
    let half = Rational::new(1.into(), 2.into());
    let delta = |w: &SlmWeight| -> Rational {
        let coords = w.offsets();
        let rho_offsets = SlmWeight::new(rho_tuple(w.m()), 0).offsets();
        let self_pair: Rational = coords.iter().map(|c| c * c).sum();
        let rho_pair: Rational = coords.iter().zip(&rho_offsets).map(|(c, r)| c * r).sum();
        (&self_pair + rat_int(2) * &rho_pair) * &half / &kappa
    };
    delta(lambda) - delta(mu)
}

/// The normalized symmetric character of the polynomial part of the big
/// module: the q-multinomial, with the prefactor exponent
/// `Delta_lambda - Delta_mu` reported separately.
pub fn ch_m_symmetric(
    lambda: &SlmWeight,
    mu: &SlmWeight,
    n: usize,
) -> Result<(QPolynomial, Rational), CharacterError> {
    let beta = beta_from_weights(lambda, mu, n).ok_or(CharacterError::NoPartition)?;
    Ok((q_multinomial(n, &beta), delta_difference(lambda, mu)))
}

/// The conjectural normalized symmetric character of the quotient:
/// `F(q) / (q)_N`, truncated; flagged conjectural in the output.
pub fn ch_v_symmetric_conjectural(
    lambda: &SlmWeight,
    mu: &SlmWeight,
    n: usize,
    cutoff: i64,
) -> Result<QPolynomial, CharacterError> {
    if lambda.level + lambda.m() as i64 <= 0 {
        return Err(CharacterError::NonPositiveShiftedLevel(
            lambda.level + lambda.m() as i64,
        ));
    }
    if beta_from_weights(lambda, mu, n).is_none() {
        return Err(CharacterError::NoPartition);
    }
    let f = f_tableaux(lambda, mu, n).truncate(cutoff);
    let mut out = f.mul(&inv_pochhammer_series(n, cutoff));
    out.conjectural = true;
    Ok(out)
}

/// One row of the independence evidence suite.
#[derive(Debug, Clone, Serialize)]
pub struct IndependenceItem {
    pub x: AffineWeylElement,
    pub length: usize,
    pub d_grade: i64,
    pub symmetrized_support: usize,
    pub non_zero: bool,
    pub block_generic: bool,
    pub antidominant_label: bool,
}

/// Outcome of the independence evidence suite.
#[derive(Debug, Clone, Serialize)]
pub struct IndependenceReport {
    pub count: usize,
    pub items: Vec<IndependenceItem>,
    pub all_non_zero: bool,
    pub labels_pairwise_distinct: bool,
    pub rank: usize,
    pub central_characters_verified: bool,
    pub pass: bool,
}

/// Evidence suite for the linear independence of the symmetrized
/// intertwiner vectors `Q phi_x 1` over
/// `x = t_eta w_T` (restricted standard `T`, `eta` in `P_-(w_T)`),
/// within a length bound and a trace window:
///
/// * each vector is nonzero,
/// * the central-character labels `[x(zeta)]` are pairwise distinct and
///   are realized exactly by the power sums acting on the vectors,
/// * the set is linearly independent by exact rank computation,
/// * each `x(zeta)` restricts to a block-generic weight for `beta(x)`,
///   and pairs non-positively with the finite simple roots.
pub fn independence_suite(
    lambda: &SlmWeight,
    mu: &SlmWeight,
    n: usize,
    length_bound: usize,
    trace_min: i64,
    trace_max: i64,
) -> Result<IndependenceReport, CharacterError> {
    let beta = beta_from_weights(lambda, mu, n).ok_or(CharacterError::NoPartition)?;
    let zeta = zeta_lambda_mu(lambda, mu, n).ok_or(CharacterError::NoPartition)?;
    let params = InducedParams::new(beta.clone(), zeta.clone(), Flavor::Affine)
        .expect("bridge weight lies in the inducing slice");

    // X^beta_l within the window
    let mut xs: Vec<AffineWeylElement> = Vec::new();
    for t in enumerate_tableaux(lambda, mu, n, true, Some(lambda.level)) {
        let w = t.w_t();
        for eta in antidominant_in_window(n, length_bound + w.length(), trace_min, trace_max) {
            if !in_p_minus_w(&eta, &w, &beta) {
                continue;
            }
            let x = AffineWeylElement::translation(eta).compose(&w);
            if x.length() <= length_bound {
                xs.push(x);
            }
        }
    }
    xs.sort_by_key(|x| (x.length(), x.trace(), x.eta().to_vec(), x.window().to_vec()));

    let trunc = Truncation::new(length_bound + n * (n - 1) / 2 + 1);
    let mut items = Vec::new();
    let mut vectors: Vec<ModuleVector> = Vec::new();
    let mut labels: Vec<(Vec<Rational>, Rational)> = Vec::new();
    let mut central_ok = true;
    for x in &xs {
        let phi = intertwiner_vector(&params, x, trunc).expect("bound chosen large enough");
        let q_phi = symmetrize(&params, &phi).expect("N <= 7 for the suite");
        let label_weight = x.act_weight(&zeta);
        let label = label_weight.orbit_label();
        // the central character acts on Q phi_x 1 by the label: power sums
        for k in 1..=2u32 {
            let got = apply_power_sum(&params, k, &q_phi);
            let eig: Rational = label_weight
                .coords
                .iter()
                .map(|c| num::pow::pow(c.clone(), k as usize))
                .sum();
            if got != q_phi.scale(&eig) {
                central_ok = false;
            }
        }
        // block genericity of the restricted label
        let bx = beta_of(x, &beta);
        let label_bar = Weight::new(label_weight.coords.clone(), Rational::zero());
        let block_generic = InducedParams::new(bx, label_bar, Flavor::Finite)
            .ok()
            .map(|p| is_generic(&p).unwrap_or(false))
            .unwrap_or(false);
        let antidominant_label = (0..n - 1).all(|i| {
            !label_weight
                .pair_root(&AffineRoot::finite(i, i + 1))
                .is_positive()
        });
        items.push(IndependenceItem {
            x: x.clone(),
            length: x.length(),
            d_grade: x.eta().iter().sum(),
            symmetrized_support: q_phi.support_len(),
            non_zero: !q_phi.is_zero(),
            block_generic,
            antidominant_label,
        });
        vectors.push(q_phi);
        labels.push(label);
    }

    let all_non_zero = items.iter().all(|i| i.non_zero);
    let mut sorted_labels = labels.clone();
    sorted_labels.sort();
    sorted_labels.dedup();
    let labels_pairwise_distinct = sorted_labels.len() == labels.len();

    // exact rank in the union of supports
    let mut index: BTreeMap<AffineWeylElement, usize> = BTreeMap::new();
    for v in &vectors {
        for (k, _) in v.terms() {
            let next = index.len();
            index.entry(k.clone()).or_insert(next);
        }
    }
    let dim = index.len();
    let rows: Vec<Vec<Rational>> = vectors.iter().map(|v| v.coords(&index, dim)).collect();
    let rank = rank_of_vectors(&rows);

    let pass = all_non_zero
        && labels_pairwise_distinct
        && rank == xs.len()
        && central_ok
        && items.iter().all(|i| i.block_generic && i.antidominant_label);
    Ok(IndependenceReport {
        count: xs.len(),
        items,
        all_non_zero,
        labels_pairwise_distinct,
        rank,
        central_characters_verified: central_ok,
        pass,
    })
}
