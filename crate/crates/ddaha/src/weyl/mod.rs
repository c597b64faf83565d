//! The extended affine Weyl group of gl_N and its parabolic combinatorics.

mod cosets;
mod element;

pub use cosets::{
    antidominant_in_window, beta_of, double_coset_reps, enumerate_antidominant, enumerate_block_antidominant,
    enumerate_min_reps, eta_minus, eta_w, f_map, finite_min_reps, g_map, gamma_eta,
    in_p_minus_w, is_antidominant, is_block_antidominant, is_min_rep, min_coset_rep,
    omega_eta, strict_negativity_roots, CosetError,
};
pub use element::{enumerate_elements, enumerate_finite, AffineWeylElement};
