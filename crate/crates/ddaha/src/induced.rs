//! Parabolic induced modules and their finite analogues.
//!
//! For an ordered partition `beta` and a weight `zeta` with
//! `(zeta, alpha) = -1` on the block simple roots, the induced module has
//! basis `{ w . 1_zeta }` over the minimal coset representatives `W^beta`
//! (all of `W` in the affine flavor, the finite group in the finite one).
//! Vectors are finite rational combinations of reduced keys; the generators
//! act exactly:
//!
//! * group elements permute the coset basis (the block part is absorbed
//!   into the cyclic vector),
//! * a polynomial generator `xi` acts triangularly,
//!   `xi . w 1 = (w(zeta))(xi) w 1 + sum_{alpha in S(w)} (w alpha)(xi) (w s_alpha) 1`,
//!   with every correction key of strictly smaller length, so length
//!   truncations are exact rather than approximate,
//! * the central element acts by the scalar `kappa = (zeta, delta)`.
//!
//! On top of the raw actions sit the intertwiners `phi_i = 1 + s_i a_i^`,
//! the symmetrizer, weight decompositions, genericity and dominance tests,
//! and the irreducible-quotient dimension of the finite module.

use crate::linalg::{
    column_span_basis, largest_invariant_subspace, restrict_to_eigenspace, row_span_basis,
    LinalgError, RationalMatrix,
};
use crate::rational::{format_rational, Rational};
use crate::roots::{AffineRoot, Coweight, OrderedPartition, Weight};
use crate::weyl::{
    enumerate_finite, enumerate_min_reps, finite_min_reps, min_coset_rep, AffineWeylElement,
};
use num::{One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    /// The full module over the extended affine Weyl group basis.
    Affine,
    /// The finite analogue: translations ignored, basis the finite
    /// minimal representatives.
    Finite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleError {
    /// `zeta` fails `(zeta, alpha) = -1` on a block simple root.
    InvalidWeight(String),
    /// Applying a generator pushed a key past the length bound.
    TruncationOverflow { key_length: usize, bound: usize },
    /// The affine genericity scan needs `kappa != 0`.
    KappaZero,
    /// Operation requires the other flavor.
    WrongFlavor(&'static str),
    /// Exact symmetrization is capped at N <= 7.
    SymmetrizeTooLarge(usize),
    /// The finite module dimension exceeds the requested cap.
    DimensionTooLarge(usize),
    /// `dim Y_zeta != 1`, so the maximal submodule need not be unique.
    QuotientPrecondition(usize),
    Linalg(LinalgError),
}

impl fmt::Display for ModuleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleError::InvalidWeight(m) => write!(f, "invalid inducing weight: {m}"),
            ModuleError::TruncationOverflow { key_length, bound } => {
                write!(f, "key of length {key_length} exceeds truncation bound {bound}")
            }
            ModuleError::KappaZero => write!(f, "genericity scan requires nonzero level"),
            ModuleError::WrongFlavor(op) => write!(f, "{op} is not defined in this flavor"),
            ModuleError::SymmetrizeTooLarge(n) => {
                write!(f, "exact symmetrization capped at N <= 7, got N = {n}")
            }
            ModuleError::DimensionTooLarge(d) => write!(f, "module dimension {d} too large"),
            ModuleError::QuotientPrecondition(d) => {
                write!(f, "dim of the zeta weight space is {d}, expected 1")
            }
            ModuleError::Linalg(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ModuleError {}

impl From<LinalgError> for ModuleError {
    fn from(e: LinalgError) -> Self {
        ModuleError::Linalg(e)
    }
}

/// Length bound for the affine module's exact truncations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Truncation {
    pub max_length: usize,
}

impl Truncation {
    pub fn new(max_length: usize) -> Self {
        Truncation { max_length }
    }
}

/// Parameters of an induced module.
#[derive(Debug, Clone)]
pub struct InducedParams {
    pub beta: OrderedPartition,
    pub zeta: Weight,
    pub flavor: Flavor,
}

impl InducedParams {
    /// Validates membership of `zeta` in the inducing slice:
    /// `(zeta, alpha) = -1` for every block simple root.
    pub fn new(
        beta: OrderedPartition,
        zeta: Weight,
        flavor: Flavor,
    ) -> Result<Self, ModuleError> {
        if beta.n() != zeta.n() {
            return Err(ModuleError::InvalidWeight(format!(
                "partition of {} against weight of rank {}",
                beta.n(),
                zeta.n()
            )));
        }
        let minus_one = -Rational::one();
        for i in beta.simple_indices() {
            let p = zeta.pair_root(&AffineRoot::finite(i, i + 1));
            if p != minus_one {
                return Err(ModuleError::InvalidWeight(format!(
                    "(zeta, alpha_{}) = {}, expected -1",
                    i + 1,
                    format_rational(&p)
                )));
            }
        }
        Ok(InducedParams { beta, zeta, flavor })
    }

    pub fn n(&self) -> usize {
        self.beta.n()
    }

    pub fn kappa(&self) -> &Rational {
        &self.zeta.level
    }

    /// The weight on the basis line through `w . 1_zeta` (affine action).
    pub fn key_weight(&self, w: &AffineWeylElement) -> Weight {
        w.act_weight(&self.zeta)
    }

    fn check_key(&self, w: &AffineWeylElement) -> bool {
        match self.flavor {
            Flavor::Affine => true,
            Flavor::Finite => w.is_finite(),
        }
    }
}

/// A finite rational combination of reduced basis keys.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModuleVector {
    terms: BTreeMap<AffineWeylElement, Rational>,
}

impl ModuleVector {
    pub fn zero() -> Self {
        ModuleVector::default()
    }

    /// The cyclic vector `1_zeta`.
    pub fn one(params: &InducedParams) -> Self {
        let mut v = Self::zero();
        v.add_term(AffineWeylElement::identity(params.n()), Rational::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AffineWeylElement, &Rational)> {
        self.terms.iter()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, key: &AffineWeylElement) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn max_key_length(&self) -> usize {
        self.terms.keys().map(AffineWeylElement::length).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, key: AffineWeylElement, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        ModuleVector {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * s)).collect(),
        }
    }

    /// Coordinates of the vector in an indexed basis; keys outside the
    /// index panic (the caller chose too small a window).
    pub fn coords(
        &self,
        index: &BTreeMap<AffineWeylElement, usize>,
        dim: usize,
    ) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); dim];
        for (k, c) in &self.terms {
            let slot = index
                .get(k)
                .unwrap_or_else(|| panic!("key {k} outside the chosen basis window"));
            out[*slot] = c.clone();
        }
        out
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| format!("{}*{}", format_rational(c), k))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for ModuleVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            eta: &'a [i64],
            window: Vec<usize>,
            coeff: String,
        }
        let mut m = serializer.serialize_map(Some(1))?;
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(k, c)| Term {
                eta: k.eta(),
                window: k.window().iter().map(|&w| w + 1).collect(),
                coeff: format_rational(c),
            })
            .collect();
        m.serialize_entry("terms", &terms)?;
        m.end()
    }
}

/// Serializes a rational matrix as nested arrays of `p/q` strings.
pub fn matrix_json(m: &RationalMatrix) -> serde_json::Value {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|r| m.row(r).iter().map(format_rational).collect())
        .collect();
    serde_json::json!(rows)
}

fn reduce_key(params: &InducedParams, x: &AffineWeylElement) -> AffineWeylElement {
    min_coset_rep(x, &params.beta).0
}

/// Action of a polynomial generator. Never raises key lengths: the
/// correction terms come from the inversion set, and reflecting at an
/// inversion strictly shortens the key.
pub fn act_xi(params: &InducedParams, xi: &Coweight, v: &ModuleVector) -> ModuleVector {
    let n = params.n();
    let mut out = ModuleVector::zero();
    for (w, c) in v.terms() {
        debug_assert!(params.check_key(w));
        // diagonal part: (w(zeta))(xi) = zeta(w^{-1}(xi))
        let eigen = params.key_weight(w).eval(xi);
        out.add_term(w.clone(), c * &eigen);
        for alpha in w.inversion_set() {
            let scalar = xi.pair_root(&w.act_root(&alpha));
            if scalar.is_zero() {
                continue;
            }
            let refl = AffineWeylElement::affine_reflection(n, &alpha);
            let key = reduce_key(params, &w.compose(&refl));
            debug_assert!(key.length() < w.length());
            out.add_term(key, c * &scalar);
        }
    }
    out
}

/// Action of the group generator `s_i`; raises lengths by at most one, so
/// it checks the truncation bound. `i = 0` is affine-only.
pub fn act_simple(
    params: &InducedParams,
    i: usize,
    v: &ModuleVector,
    trunc: Truncation,
) -> Result<ModuleVector, ModuleError> {
    let n = params.n();
    if params.flavor == Flavor::Finite && i == 0 {
        return Err(ModuleError::WrongFlavor("s_0"));
    }
    let s = AffineWeylElement::simple_reflection(n, i);
    let mut out = ModuleVector::zero();
    for (w, c) in v.terms() {
        let key = reduce_key(params, &s.compose(w));
        if key.length() > trunc.max_length {
            return Err(ModuleError::TruncationOverflow {
                key_length: key.length(),
                bound: trunc.max_length,
            });
        }
        out.add_term(key, c.clone());
    }
    Ok(out)
}

/// Action of `pi` (`power = 1`) or `pi^{-1}` (`power = -1`). Affine only.
pub fn act_pi(
    params: &InducedParams,
    power: i64,
    v: &ModuleVector,
    trunc: Truncation,
) -> Result<ModuleVector, ModuleError> {
    if params.flavor == Flavor::Finite {
        return Err(ModuleError::WrongFlavor("pi"));
    }
    let g = AffineWeylElement::pi_power(params.n(), power);
    let mut out = ModuleVector::zero();
    for (w, c) in v.terms() {
        let key = reduce_key(params, &g.compose(w));
        if key.length() > trunc.max_length {
            return Err(ModuleError::TruncationOverflow {
                key_length: key.length(),
                bound: trunc.max_length,
            });
        }
        out.add_term(key, c.clone());
    }
    Ok(out)
}

/// Exact action of an arbitrary finite group element on the coset basis.
pub fn act_finite(
    params: &InducedParams,
    w: &AffineWeylElement,
    v: &ModuleVector,
) -> ModuleVector {
    assert!(w.is_finite(), "act_finite expects a finite element");
    let mut out = ModuleVector::zero();
    for (key, c) in v.terms() {
        out.add_term(reduce_key(params, &w.compose(key)), c.clone());
    }
    out
}

/// One intertwiner letter: `phi_i v = v + s_i (a_i^ . v)`.
pub fn apply_phi_letter(
    params: &InducedParams,
    i: usize,
    v: &ModuleVector,
    trunc: Truncation,
) -> Result<ModuleVector, ModuleError> {
    let coroot = AffineRoot::simple(params.n(), i).coroot(params.n());
    let moved = act_xi(params, &coroot, v);
    let reflected = act_simple(params, i, &moved, trunc)?;
    Ok(v.add(&reflected))
}

/// Applies the intertwiner `phi_w` (through one reduced word of `w`; the
/// result is word-independent) to an arbitrary vector.
pub fn apply_intertwiner(
    params: &InducedParams,
    w: &AffineWeylElement,
    v: &ModuleVector,
    trunc: Truncation,
) -> Result<ModuleVector, ModuleError> {
    let (pi_power, letters) = w.reduced_word();
    if pi_power != 0 && params.flavor == Flavor::Finite {
        return Err(ModuleError::WrongFlavor("phi_pi"));
    }
    let mut acc = v.clone();
    for &i in letters.iter().rev() {
        acc = apply_phi_letter(params, i, &acc, trunc)?;
    }
    if pi_power != 0 {
        let step = if pi_power > 0 { 1 } else { -1 };
        for _ in 0..pi_power.unsigned_abs() {
            acc = act_pi(params, step, &acc, trunc)?;
        }
    }
    Ok(acc)
}

/// The vector `phi_w . 1_zeta`.
pub fn intertwiner_vector(
    params: &InducedParams,
    w: &AffineWeylElement,
    trunc: Truncation,
) -> Result<ModuleVector, ModuleError> {
    apply_intertwiner(params, w, &ModuleVector::one(params), trunc)
}

/// The symmetrizer `Q = (1/N!) sum_w w`, summed exactly over the finite
/// group; idempotent. Capped at N <= 7.
pub fn symmetrize(params: &InducedParams, v: &ModuleVector) -> Result<ModuleVector, ModuleError> {
    let n = params.n();
    if n > 7 {
        return Err(ModuleError::SymmetrizeTooLarge(n));
    }
    let mut acc = ModuleVector::zero();
    for w in enumerate_finite(n) {
        acc = acc.add(&act_finite(params, &w, v));
    }
    let factorial: i64 = (1..=n as i64).product();
    Ok(acc.scale(&(Rational::one() / Rational::from_integer(factorial.into()))))
}

/// Applies `sum_i xi_i^k` (a power sum of the polynomial generators);
/// used to evaluate central characters on vectors.
pub fn apply_power_sum(params: &InducedParams, k: u32, v: &ModuleVector) -> ModuleVector {
    let n = params.n();
    let mut acc = ModuleVector::zero();
    for i in 0..n {
        let xi = Coweight::basis(n, i);
        let mut term = v.clone();
        for _ in 0..k {
            term = act_xi(params, &xi, &term);
        }
        acc = acc.add(&term);
    }
    acc
}

/// Exact genericity test: `(zeta, alpha)` avoids `{-1, 0, 1}` on every
/// positive root outside the block subsystem. In the affine flavor the
/// root families are scanned by solving `k kappa = target - (zeta, a)`
/// exactly, which needs `kappa != 0`.
pub fn is_generic(params: &InducedParams) -> Result<bool, ModuleError> {
    let n = params.n();
    let zeta = &params.zeta;
    let beta = &params.beta;
    let targets = [-Rational::one(), Rational::zero(), Rational::one()];
    match params.flavor {
        Flavor::Finite => {
            for i in 0..n {
                for j in (i + 1)..n {
                    if beta.same_block(i, j) {
                        continue;
                    }
                    let p = zeta.pair_root(&AffineRoot::finite(i, j));
                    if targets.contains(&p) {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        Flavor::Affine => {
            let kappa = params.kappa();
            if kappa.is_zero() {
                return Err(ModuleError::KappaZero);
            }
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    let base = zeta.pair_root(&AffineRoot::finite(i, j));
                    // admissible k for a positive root alpha + k delta
                    // outside the block subsystem
                    let k_min: i64 = if i < j {
                        i64::from(beta.same_block(i, j))
                    } else {
                        1
                    };
                    for target in &targets {
                        let k = (target - &base) / kappa;
                        if k.is_integer() && k.to_integer() >= k_min.into() {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        }
    }
}

/// The sufficient condition for a unique irreducible quotient: the level
/// avoids the non-positive rationals and the pairings of `zeta` with
/// `r delta +/- a_{k_a k_b}` (block leaders `k_a < k_b`) avoid the
/// non-positive integers in the stated ranges of `r`. Exact scan; for
/// positive level only finitely many `r` can land non-positive.
pub fn satisfies_dominance(params: &InducedParams) -> Result<bool, ModuleError> {
    if params.flavor != Flavor::Affine {
        return Err(ModuleError::WrongFlavor("dominance condition"));
    }
    let kappa = params.kappa();
    if !kappa.is_positive() {
        return Ok(false);
    }
    let leaders = params.beta.block_leaders();
    for (ai, &ka) in leaders.iter().enumerate() {
        for &kb in &leaders[ai + 1..] {
            let p = params.zeta.pair_root(&AffineRoot::finite(ka, kb));
            // r kappa + p in Z_{<=0} for some r >= 0?
            if bad_scan(kappa, &p, 0) {
                return Ok(false);
            }
            // r kappa - p in Z_{<=0} for some r >= 1?
            if bad_scan(kappa, &(-p), 1) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `r*kappa + p` hits a non-positive integer for some integer
/// `r >= r_from` (`kappa > 0` makes the scan window finite).
fn bad_scan(kappa: &Rational, p: &Rational, r_from: i64) -> bool {
    let bound = (-p) / kappa; // r kappa + p <= 0  <=>  r <= -p/kappa
    if bound < Rational::from_integer(r_from.into()) {
        return false;
    }
    let mut r = Rational::from_integer(r_from.into());
    while r <= bound {
        let val = &r * kappa + p;
        if !val.is_positive() && val.is_integer() {
            return true;
        }
        r += Rational::one();
    }
    false
}

/// Generalized weight multiplicities inside an enumeration window of the
/// basis: counts of `w(zeta)` over keys with `length <= trunc` and trace
/// in `[trace_min, trace_max]` (the trace window is ignored in the finite
/// flavor, where the whole basis is used). Exact by triangularity of the
/// polynomial action.
pub fn weight_decomposition(
    params: &InducedParams,
    trunc: Truncation,
    trace_min: i64,
    trace_max: i64,
) -> Vec<(Weight, usize)> {
    let keys = match params.flavor {
        Flavor::Affine => enumerate_min_reps(
            params.n(),
            &params.beta,
            trunc.max_length,
            trace_min,
            trace_max,
        ),
        Flavor::Finite => finite_min_reps(params.n(), &params.beta),
    };
    let mut counts: BTreeMap<Weight, usize> = BTreeMap::new();
    for w in &keys {
        if params.flavor == Flavor::Finite || w.length() <= trunc.max_length {
            *counts.entry(params.key_weight(w)).or_insert(0) += 1;
        }
    }
    counts.into_iter().collect()
}

/// The finite module with explicit matrices for the group generators
/// `s_1, ..., s_{N-1}` and the polynomial generators `e_1^, ..., e_N^`.
pub struct FiniteModule {
    pub basis: Vec<AffineWeylElement>,
    pub index: BTreeMap<AffineWeylElement, usize>,
    pub s_matrices: Vec<RationalMatrix>,
    pub xi_matrices: Vec<RationalMatrix>,
}

impl FiniteModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Builds the finite-flavor module matrices on the full basis. The basis
/// is ordered by length, so the polynomial matrices are triangular with
/// the weights `w(zeta)` on the diagonal.
pub fn finite_module_matrices(
    params: &InducedParams,
    dim_cap: usize,
) -> Result<FiniteModule, ModuleError> {
    if params.flavor != Flavor::Finite {
        return Err(ModuleError::WrongFlavor("finite module matrices"));
    }
    let n = params.n();
    let basis = finite_min_reps(n, &params.beta);
    let dim = basis.len();
    if dim > dim_cap {
        return Err(ModuleError::DimensionTooLarge(dim));
    }
    let index: BTreeMap<AffineWeylElement, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i))
        .collect();
    let trunc = Truncation::new(n * (n - 1) / 2);
    let vector_to_column =
        |v: &ModuleVector, m: &mut RationalMatrix, col: usize, index: &BTreeMap<_, usize>| {
            for (key, c) in v.terms() {
                m.set(index[key], col, c.clone());
            }
        };
    let mut s_matrices = Vec::new();
    for i in 1..n {
        let mut m = RationalMatrix::zero(dim, dim);
        for (col, w) in basis.iter().enumerate() {
            let mut v = ModuleVector::zero();
            v.add_term(w.clone(), Rational::one());
            let image = act_simple(params, i, &v, trunc)?;
            vector_to_column(&image, &mut m, col, &index);
        }
        s_matrices.push(m);
    }
    let mut xi_matrices = Vec::new();
    for i in 0..n {
        let xi = Coweight::basis(n, i);
        let mut m = RationalMatrix::zero(dim, dim);
        for (col, w) in basis.iter().enumerate() {
            let mut v = ModuleVector::zero();
            v.add_term(w.clone(), Rational::one());
            let image = act_xi(params, &xi, &v);
            vector_to_column(&image, &mut m, col, &index);
        }
        xi_matrices.push(m);
    }
    Ok(FiniteModule {
        basis,
        index,
        s_matrices,
        xi_matrices,
    })
}

/// Dimension of the unique irreducible quotient of the finite module.
///
/// Requires `dim Y_zeta = 1` (checked exactly); the maximal submodule is
/// then the largest invariant subspace inside the sum of the generalized
/// weight spaces away from `zeta`.
pub fn irreducible_quotient_dim(
    params: &InducedParams,
    dim_cap: usize,
) -> Result<usize, ModuleError> {
    let module = finite_module_matrices(params, dim_cap)?;
    let dim = module.dim();
    let n = params.n();

    // exact zeta weight space: iteratively intersect the eigenspaces
    let mut eigen: Vec<Vec<Rational>> = RationalMatrix::identity(dim).row_vecs();
    for (i, d) in module.xi_matrices.iter().enumerate() {
        eigen = restrict_to_eigenspace(&eigen, d, &params.zeta.coords[i]);
        if eigen.is_empty() {
            break;
        }
    }
    if eigen.len() != 1 {
        return Err(ModuleError::QuotientPrecondition(eigen.len()));
    }

    // diagonal weights with multiplicities
    let weights: Vec<Weight> = module.basis.iter().map(|w| params.key_weight(w)).collect();
    let mut mult: BTreeMap<Weight, usize> = BTreeMap::new();
    for w in &weights {
        *mult.entry(w.clone()).or_insert(0) += 1;
    }
    let zeta_label = params.key_weight(&AffineWeylElement::identity(n));

    // The sum of the generalized weight spaces away from zeta. When the
    // zeta multiplicity is one and some integer functional separates the
    // distinct diagonal weights, a single triangular matrix suffices:
    // U0 = im(A - theta) for A the Dunkl combination along the functional.
    let u0 = if mult[&zeta_label] == 1 {
        separating_functional(&mult, n).map(|xi| {
            let mut a = RationalMatrix::zero(dim, dim);
            for (i, d) in module.xi_matrices.iter().enumerate() {
                if xi[i].is_zero() {
                    continue;
                }
                for r in 0..dim {
                    for c in 0..dim {
                        if !d.get(r, c).is_zero() {
                            let cur = a.get(r, c).clone();
                            a.set(r, c, cur + &xi[i] * d.get(r, c));
                        }
                    }
                }
            }
            let theta: Rational = zeta_label
                .coords
                .iter()
                .zip(&xi)
                .map(|(c, x)| c * x)
                .sum();
            column_span_basis(&a.shift_diagonal(&theta))
        })
    } else {
        None
    };
    let u0 = match u0 {
        Some(u0) => u0,
        None => {
            // general path: powered kernels per weight
            let mut u0: Vec<Vec<Rational>> = Vec::new();
            for (label, &m) in &mult {
                if *label == zeta_label {
                    continue;
                }
                let mut rows = Vec::new();
                for (i, d) in module.xi_matrices.iter().enumerate() {
                    let shifted = d.shift_diagonal(&label.coords[i]);
                    let mut power = RationalMatrix::identity(dim);
                    for _ in 0..m {
                        power = power.mul(&shifted)?;
                    }
                    rows.extend(power.row_vecs());
                }
                let gen_space = RationalMatrix::from_rows(rows).kernel();
                debug_assert_eq!(gen_space.len(), m, "triangular multiplicity mismatch");
                u0.extend(gen_space);
            }
            row_span_basis(&u0)
        }
    };
    debug_assert_eq!(u0.len(), dim - mult[&zeta_label]);

    let mut generators: Vec<RationalMatrix> = module.s_matrices.clone();
    generators.extend(module.xi_matrices.iter().cloned());
    let maximal = largest_invariant_subspace(&u0, &generators)?;
    Ok(dim - maximal.len())
}

/// Searches `xi = (1, t, t^2, ...)` for an integer `t` whose evaluations
/// separate the distinct diagonal weights.
fn separating_functional(mult: &BTreeMap<Weight, usize>, n: usize) -> Option<Vec<Rational>> {
    for t in 1..=64i64 {
        let xi: Vec<Rational> = (0..n)
            .map(|i| Rational::from_integer(t.pow(i as u32).into()))
            .collect();
        let mut values: Vec<Rational> = mult
            .keys()
            .map(|w| w.coords.iter().zip(&xi).map(|(c, x)| c * x).sum())
            .collect();
        let total = values.len();
        values.sort();
        values.dedup();
        if values.len() == total {
            return Some(xi);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn beta(parts: &[usize]) -> OrderedPartition {
        OrderedPartition::new(parts.to_vec())
    }

    /// A weight in the inducing slice: within each block the coordinates
    /// ascend by one from the block's start value.
    fn slice_weight(b: &OrderedPartition, starts: &[Rational], kappa: Rational) -> Weight {
        let mut coords = Vec::new();
        for (bi, &p) in b.parts().iter().enumerate() {
            for t in 0..p {
                coords.push(&starts[bi] + rat_int(t as i64));
            }
        }
        Weight::new(coords, kappa)
    }

    fn generic_params(blocks: &[usize], kappa: Rational) -> InducedParams {
        let b = beta(blocks);
        let starts: Vec<Rational> = (0..blocks.len())
            .map(|i| rat(10 * (i as i64 + 1) * 2 + 1, 7))
            .collect();
        let zeta = slice_weight(&b, &starts, kappa);
        InducedParams::new(b, zeta, Flavor::Affine).unwrap()
    }

    #[test]
    fn params_validate_the_inducing_slice() {
        let b = beta(&[2, 1]);
        let good = Weight::new(vec![rat_int(0), rat_int(1), rat_int(5)], rat_int(2));
        assert!(InducedParams::new(b.clone(), good, Flavor::Affine).is_ok());
        let bad = Weight::new(vec![rat_int(0), rat_int(2), rat_int(5)], rat_int(2));
        assert!(InducedParams::new(b, bad, Flavor::Affine).is_err());
    }

    #[test]
    fn xi_acts_by_the_weight_on_the_cyclic_vector() {
        let params = generic_params(&[1, 1], rat_int(2));
        let one = ModuleVector::one(&params);
        for i in 0..2 {
            let xi = Coweight::basis(2, i);
            let got = act_xi(&params, &xi, &one);
            assert_eq!(got, one.scale(&params.zeta.coords[i]));
        }
        // the central element acts by kappa
        let c = Coweight::central(2);
        assert_eq!(act_xi(&params, &c, &one), one.scale(&rat_int(2)));
    }

    #[test]
    fn xi_commutation_single_relation_case() {
        // N=2, beta=(1,1), v = s_1 . 1, xi = e_1^:
        // xi v = zeta(e_2^) v - 1
        let params = generic_params(&[1, 1], rat_int(2));
        let trunc = Truncation::new(4);
        let one = ModuleVector::one(&params);
        let v = act_simple(&params, 1, &one, trunc).unwrap();
        let got = act_xi(&params, &Coweight::basis(2, 0), &v);
        let expected = v.scale(&params.zeta.coords[1]).sub(&one);
        assert_eq!(got, expected);
    }

    #[test]
    fn block_simple_fixes_cyclic_vector() {
        let b = beta(&[2]);
        let zeta = Weight::new(vec![rat_int(0), rat_int(1)], rat(7, 3));
        let params = InducedParams::new(b, zeta, Flavor::Affine).unwrap();
        let one = ModuleVector::one(&params);
        let got = act_simple(&params, 1, &one, Truncation::new(2)).unwrap();
        assert_eq!(got, one);
    }

    #[test]
    fn simple_action_is_involutive_and_braid_holds() {
        let params = generic_params(&[1, 1, 1], rat(7, 3));
        let trunc = Truncation::new(8);
        let keys = enumerate_min_reps(3, &params.beta, 4, -1, 1);
        for w in keys {
            let mut v = ModuleVector::zero();
            v.add_term(w, Rational::one());
            for i in 0..3 {
                let twice = act_simple(
                    &params,
                    i,
                    &act_simple(&params, i, &v, trunc).unwrap(),
                    trunc,
                )
                .unwrap();
                assert_eq!(twice, v);
            }
            for i in 0..3 {
                let j = (i + 1) % 3;
                let lhs = act_simple(
                    &params,
                    i,
                    &act_simple(&params, j, &act_simple(&params, i, &v, trunc).unwrap(), trunc)
                        .unwrap(),
                    trunc,
                )
                .unwrap();
                let rhs = act_simple(
                    &params,
                    j,
                    &act_simple(&params, i, &act_simple(&params, j, &v, trunc).unwrap(), trunc)
                        .unwrap(),
                    trunc,
                )
                .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn phi_kills_cyclic_vector_on_block_simples() {
        // (zeta, alpha_i) = -1 on block simples forces phi_i 1 = 0
        let b = beta(&[3]);
        let zeta = Weight::new(vec![rat_int(0), rat_int(1), rat_int(2)], rat(1, 2));
        let params = InducedParams::new(b, zeta, Flavor::Affine).unwrap();
        let one = ModuleVector::one(&params);
        for i in [1, 2] {
            let got = apply_phi_letter(&params, i, &one, Truncation::new(3)).unwrap();
            assert!(got.is_zero(), "phi_{i} 1 = {got}");
        }
    }

    #[test]
    fn intertwiner_leading_term_and_eigenvector_property() {
        let params = generic_params(&[2, 1], rat(7, 2));
        let trunc = Truncation::new(8);
        for w in enumerate_min_reps(3, &params.beta, 4, -1, 1) {
            let phi = intertwiner_vector(&params, &w, trunc).unwrap();
            // leading coefficient: product of (zeta, alpha) over S(w)
            let mut lead = Rational::one();
            for alpha in w.inversion_set() {
                lead *= params.zeta.pair_root(&alpha);
            }
            assert_eq!(phi.coefficient(&w), lead, "w = {w}");
            // all other keys are strictly Bruhat-below w
            for (key, _) in phi.terms() {
                assert!(key.bruhat_leq(&w), "key {key} not below {w}");
            }
            // phi_w 1 is a xi eigenvector of weight w(zeta)
            let target = params.key_weight(&w);
            for i in 0..3 {
                let xi = Coweight::basis(3, i);
                let got = act_xi(&params, &xi, &phi);
                assert_eq!(got, phi.scale(&target.eval(&xi)), "xi_{i} on phi_{w}");
            }
        }
    }

    #[test]
    fn intertwiner_round_trip_scalar() {
        let params = generic_params(&[1, 1], rat(7, 2));
        let trunc = Truncation::new(10);
        for w in enumerate_min_reps(2, &params.beta, 4, -1, 1) {
            let phi = intertwiner_vector(&params, &w, trunc).unwrap();
            let back = apply_intertwiner(&params, &w.inverse(), &phi, trunc).unwrap();
            let mut expected = Rational::one();
            for alpha in w.inversion_set() {
                let p = params.zeta.pair_root(&alpha);
                expected *= Rational::one() - &p * &p;
            }
            assert_eq!(back, ModuleVector::one(&params).scale(&expected), "w = {w}");
        }
    }

    #[test]
    fn intertwiner_is_reduced_word_independent() {
        // apply phi letters along two different reduced words of the
        // longest finite element of S_3 and compare
        let params = generic_params(&[1, 1, 1], rat(5, 3));
        let trunc = Truncation::new(6);
        let one = ModuleVector::one(&params);
        let apply_word = |word: &[usize]| {
            let mut acc = one.clone();
            for &i in word.iter().rev() {
                acc = apply_phi_letter(&params, i, &acc, trunc).unwrap();
            }
            acc
        };
        assert_eq!(apply_word(&[1, 2, 1]), apply_word(&[2, 1, 2]));
    }

    #[test]
    fn symmetrizer_is_idempotent_and_kills_sign_part() {
        let params = generic_params(&[1, 1], rat_int(3));
        let trunc = Truncation::new(6);
        let v = intertwiner_vector(
            &params,
            &AffineWeylElement::translation(vec![-1, 0]),
            trunc,
        )
        .unwrap();
        let q = symmetrize(&params, &v).unwrap();
        assert_eq!(symmetrize(&params, &q).unwrap(), q);
        // Q (1 - s_i) v = 0
        let diff = v.sub(&act_simple(&params, 1, &v, Truncation::new(8)).unwrap());
        assert!(symmetrize(&params, &diff).unwrap().is_zero());
        // and for beta = (N) the cyclic vector is already symmetric
        let full = InducedParams::new(
            beta(&[2]),
            Weight::new(vec![rat_int(0), rat_int(1)], rat_int(3)),
            Flavor::Affine,
        )
        .unwrap();
        let cyc = ModuleVector::one(&full);
        assert_eq!(symmetrize(&full, &cyc).unwrap(), cyc);
    }

    #[test]
    fn genericity_examples() {
        // spread-out coordinates with fractional kappa: generic
        let b = beta(&[3]);
        let zeta = slice_weight(&b, &[rat_int(0)], rat(7, 2));
        let params = InducedParams::new(b, zeta, Flavor::Affine).unwrap();
        assert!(is_generic(&params).unwrap());

        // (zeta, alpha_1) = 1 with alpha_1 outside the blocks: not generic
        let b = beta(&[1, 1]);
        let zeta = Weight::new(vec![rat_int(1), rat_int(0)], rat(7, 2));
        let params = InducedParams::new(b.clone(), zeta, Flavor::Affine).unwrap();
        assert!(!is_generic(&params).unwrap());

        // kappa = 0 is an explicit error
        let zeta = Weight::new(vec![rat(1, 3), rat_int(10)], rat_int(0));
        let params = InducedParams::new(b, zeta, Flavor::Affine).unwrap();
        assert!(matches!(is_generic(&params), Err(ModuleError::KappaZero)));

        // oracle: scan a window of affine roots directly
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..20 {
            let b = beta(&[2, 1]);
            let start = rat(rng.gen_range(-12..=12), rng.gen_range(1..=4));
            let other = rat(rng.gen_range(-12..=12), rng.gen_range(1..=4));
            let kappa = rat(rng.gen_range(1..=5), rng.gen_range(1..=3));
            let zeta = slice_weight(&b, &[start, other], kappa.clone());
            let params = InducedParams::new(b.clone(), zeta.clone(), Flavor::Affine).unwrap();
            let got = is_generic(&params).unwrap();
            let mut oracle = true;
            for i in 0..3usize {
                for j in 0..3usize {
                    if i == j {
                        continue;
                    }
                    for k in -60i64..=60 {
                        let root = AffineRoot::new(i, j, k);
                        if !root.is_positive() || b.contains_finite_root(&root) {
                            continue;
                        }
                        let p = zeta.pair_root(&root);
                        if p == rat_int(-1) || p.is_zero() || p == rat_int(1) {
                            oracle = false;
                        }
                    }
                }
            }
            assert_eq!(got, oracle, "zeta = {zeta}");
        }
    }

    #[test]
    fn dominance_examples() {
        // kappa <= 0: false
        let b = beta(&[1, 1]);
        let zeta = Weight::new(vec![rat_int(0), rat_int(5)], rat_int(-1));
        let params = InducedParams::new(b.clone(), zeta, Flavor::Affine).unwrap();
        assert!(!satisfies_dominance(&params).unwrap());

        // N=2, beta=(1,1), kappa=2, coords (0,-3):
        // (zeta, delta - a_{12}) = 2 - 3 = -1 violates the third condition
        let zeta = Weight::new(vec![rat_int(0), rat_int(-3)], rat_int(2));
        let params = InducedParams::new(b.clone(), zeta, Flavor::Affine).unwrap();
        assert!(!satisfies_dominance(&params).unwrap());

        // same shape but kappa large: passes
        let zeta = Weight::new(vec![rat_int(0), rat_int(-3)], rat_int(5));
        let params = InducedParams::new(b.clone(), zeta, Flavor::Affine).unwrap();
        assert!(satisfies_dominance(&params).unwrap());

        // exhaustive r-scan oracle on random data
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..25 {
            let zeta = Weight::new(
                vec![
                    rat(rng.gen_range(-9..=9), rng.gen_range(1..=3)),
                    rat(rng.gen_range(-9..=9), rng.gen_range(1..=3)),
                ],
                rat(rng.gen_range(1..=6), rng.gen_range(1..=2)),
            );
            let params = InducedParams::new(b.clone(), zeta.clone(), Flavor::Affine).unwrap();
            let got = satisfies_dominance(&params).unwrap();
            let mut oracle = true;
            let p = &zeta.coords[0] - &zeta.coords[1];
            for r in 0..100i64 {
                let v = rat_int(r) * &zeta.level + &p;
                if v.is_integer() && !v.is_positive() {
                    oracle = false;
                }
                if r > 0 {
                    let v = rat_int(r) * &zeta.level - &p;
                    if v.is_integer() && !v.is_positive() {
                        oracle = false;
                    }
                }
            }
            assert_eq!(got, oracle, "zeta = {zeta}");
        }
    }

    #[test]
    fn generic_weight_spaces_have_dimension_one() {
        let params = generic_params(&[2, 1], rat(7, 2));
        let decomposition = weight_decomposition(&params, Truncation::new(4), -1, 1);
        assert!(!decomposition.is_empty());
        for (_, dim) in decomposition {
            assert_eq!(dim, 1);
        }
    }

    #[test]
    fn finite_module_full_block_is_one_dimensional() {
        let b = beta(&[2]);
        let zeta = Weight::new(vec![rat_int(0), rat_int(1)], rat_int(0));
        let params = InducedParams::new(b, zeta.clone(), Flavor::Finite).unwrap();
        let m = finite_module_matrices(&params, 100).unwrap();
        assert_eq!(m.dim(), 1);
        for (i, d) in m.xi_matrices.iter().enumerate() {
            assert_eq!(d.get(0, 0), &zeta.coords[i]);
        }
    }

    #[test]
    fn finite_module_satisfies_defining_relations() {
        // s_i xi - s_i(xi) s_i = -alpha_i(xi) as exact matrix identities
        let b = beta(&[2, 1]);
        let zeta = Weight::new(vec![rat(1, 2), rat(3, 2), rat_int(8)], rat_int(0));
        let params = InducedParams::new(b, zeta, Flavor::Finite).unwrap();
        let m = finite_module_matrices(&params, 100).unwrap();
        assert_eq!(m.dim(), 3);
        let n = 3;
        for i in 1..n {
            let s = &m.s_matrices[i - 1];
            for j in 0..n {
                let xi = &m.xi_matrices[j];
                // s_i(e_j^) swaps slots i-1 and i
                let mut image = vec![0usize; n];
                for (t, slot) in image.iter_mut().enumerate() {
                    *slot = t;
                }
                image.swap(i - 1, i);
                let s_xi = &m.xi_matrices[image[j]];
                let lhs = s.mul(xi).unwrap().sub(&s_xi.mul(s).unwrap()).unwrap();
                // -alpha_i(e_j^) = -(delta_{j,i-1} - delta_{j,i})
                let scalar = -(i64::from(j == i - 1) - i64::from(j == i));
                let mut rhs = RationalMatrix::zero(3, 3);
                for t in 0..3 {
                    rhs.set(t, t, rat_int(scalar));
                }
                assert_eq!(lhs, rhs, "relation fails for s_{i}, e_{j}");
            }
        }
        // the polynomial generators commute
        for a in 0..n {
            for bb in 0..n {
                let ab = m.xi_matrices[a].mul(&m.xi_matrices[bb]).unwrap();
                let ba = m.xi_matrices[bb].mul(&m.xi_matrices[a]).unwrap();
                assert_eq!(ab, ba);
            }
        }
    }

    #[test]
    fn regular_representation_character() {
        // beta = (1,...,1): dimension N!, the group acts by its regular
        // representation: trace(s_i) = 0
        let b = beta(&[1, 1, 1]);
        let zeta = Weight::new(vec![rat(1, 5), rat_int(4), rat_int(9)], rat_int(0));
        let params = InducedParams::new(b, zeta, Flavor::Finite).unwrap();
        let m = finite_module_matrices(&params, 100).unwrap();
        assert_eq!(m.dim(), 6);
        for s in &m.s_matrices {
            let trace: Rational = (0..6).map(|i| s.get(i, i).clone()).sum();
            assert!(trace.is_zero());
        }
    }

    #[test]
    fn generic_finite_module_is_irreducible() {
        let b = beta(&[2, 1]);
        let zeta = Weight::new(vec![rat(1, 7), rat(8, 7), rat(100, 7)], rat_int(0));
        let params = InducedParams::new(b, zeta, Flavor::Finite).unwrap();
        assert!(is_generic(&params).unwrap());
        assert_eq!(irreducible_quotient_dim(&params, 100).unwrap(), 3);
    }

    #[test]
    fn weight_multiplicities_match_jordan_oracle_in_non_generic_case() {
        // repeated contents: beta = (1,1) with equal coordinates
        let b = beta(&[1, 1]);
        let zeta = Weight::new(vec![rat_int(2), rat_int(2)], rat_int(0));
        let params = InducedParams::new(b, zeta, Flavor::Finite).unwrap();
        let decomposition = weight_decomposition(&params, Truncation::new(10), 0, 0);
        // counting formula: both basis keys have the same weight
        assert_eq!(decomposition.len(), 1);
        assert_eq!(decomposition[0].1, 2);
        // Jordan oracle: generalized eigenspace of the stacked action
        let m = finite_module_matrices(&params, 10).unwrap();
        let mut rows = Vec::new();
        for (i, d) in m.xi_matrices.iter().enumerate() {
            let shifted = d.shift_diagonal(&decomposition[0].0.coords[i]);
            let squared = shifted.mul(&shifted).unwrap();
            rows.extend(squared.row_vecs());
        }
        let gen_space = RationalMatrix::from_rows(rows).kernel();
        assert_eq!(gen_space.len(), 2);
        // and the plain eigenspace is smaller: a genuine Jordan block
        let mut rows = Vec::new();
        for (i, d) in m.xi_matrices.iter().enumerate() {
            rows.extend(d.shift_diagonal(&decomposition[0].0.coords[i]).row_vecs());
        }
        assert_eq!(RationalMatrix::from_rows(rows).kernel().len(), 1);
    }

    #[test]
    fn truncation_overflow_is_reported() {
        let params = generic_params(&[1, 1], rat_int(2));
        let one = ModuleVector::one(&params);
        let v = act_simple(&params, 1, &one, Truncation::new(1)).unwrap();
        let res = act_simple(&params, 0, &v, Truncation::new(1));
        assert!(matches!(res, Err(ModuleError::TruncationOverflow { .. })));
    }

    #[test]
    fn power_sums_realize_central_characters_on_intertwiner_vectors() {
        let params = generic_params(&[1, 1], rat(5, 2));
        let trunc = Truncation::new(8);
        let w = AffineWeylElement::translation(vec![-1, 0]);
        let phi = intertwiner_vector(&params, &w, trunc).unwrap();
        let label = params.key_weight(&w);
        for k in 1..=2u32 {
            let got = apply_power_sum(&params, k, &phi);
            let eig: Rational = label
                .coords
                .iter()
                .map(|c| num::pow::pow(c.clone(), k as usize))
                .sum();
            assert_eq!(got, phi.scale(&eig));
        }
    }

    #[test]
    fn module_vector_json_shape() {
        let params = generic_params(&[1, 1], rat_int(2));
        let one = ModuleVector::one(&params);
        let json = serde_json::to_string(&one).unwrap();
        assert_eq!(json, r#"{"terms":[{"eta":[0,0],"window":[1,2],"coeff":"1"}]}"#);
    }

    #[test]
    fn affine_relations_on_window_keys() {
        // pi xi = pi(xi) pi on a window of basis keys
        let params = generic_params(&[2, 1], rat(7, 3));
        let trunc = Truncation::new(6);
        let pi = AffineWeylElement::pi(3);
        for w in enumerate_min_reps(3, &params.beta, 3, -1, 1) {
            let mut v = ModuleVector::zero();
            v.add_term(w, Rational::one());
            for i in 0..3usize {
                let xi = Coweight::basis(3, i);
                let lhs = act_pi(&params, 1, &act_xi(&params, &xi, &v), trunc).unwrap();
                let pi_xi = pi.act_coweight(&xi);
                let rhs = act_xi(&params, &pi_xi, &act_pi(&params, 1, &v, trunc).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }
}
