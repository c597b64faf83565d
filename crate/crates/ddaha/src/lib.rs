//! Exact-arithmetic toolkit for the degenerate double affine Hecke algebra
//! (DDAHA) of gl_N.
//!
//! The crate implements, over exact rationals:
//!
//! * the extended affine Weyl group of type A_{N-1}^(1): normal forms,
//!   root/weight actions, lengths, reduced words, Bruhat order, and the
//!   parabolic coset and double-coset combinatorics ([`weyl`]);
//! * parabolic induced modules and their finite analogues: exact generator
//!   actions on the coset basis, intertwiners, symmetrization, weight
//!   decompositions and irreducible-quotient dimensions ([`induced`]);
//! * the Cherednik-Dunkl difference-reflection operators on Laurent
//!   polynomials ([`dunkl`]);
//! * skew Young diagrams and tableaux with level restriction and the
//!   lattice-model statistics grading their generating functions
//!   ([`tableaux`]);
//! * q-series: q-multinomials, the tableau configuration sum, its
//!   alternating affine-Weyl-group form, and specialized characters
//!   ([`characters`]);
//! * the end-to-end verification suites behind the `verify` CLI command
//!   ([`verify`]).
//!
//! Everything is deterministic and exact; there is no floating point.

pub mod characters;
pub mod dunkl;
pub mod induced;
pub mod linalg;
pub mod rational;
pub mod roots;
pub mod tableaux;
pub mod verify;
pub mod weyl;
