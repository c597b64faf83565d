//! Induced modules: exact generator actions on the coset basis,
//! intertwiner vectors with their leading terms and round-trip scalars,
//! weight decompositions, and the irreducible quotient of the finite
//! analogue.
//!
//! Run with `cargo run --example induced_modules`.

use ddaha::induced::{
    act_xi, apply_intertwiner, intertwiner_vector, irreducible_quotient_dim, is_generic,
    weight_decomposition, Flavor, InducedParams, ModuleVector, Truncation,
};
use ddaha::rational::{format_rational, rat, rat_int, Rational};
use ddaha::roots::{Coweight, OrderedPartition, Weight};
use ddaha::weyl::{enumerate_min_reps, AffineWeylElement};
use num::One;

fn main() {
    let n = 3;
    let beta = OrderedPartition::new(vec![2, 1]);
    // coordinates ascend by one inside each block: the inducing slice
    let zeta = Weight::new(vec![rat(1, 7), rat(8, 7), rat(52, 7)], rat(7, 2));
    let params = InducedParams::new(beta.clone(), zeta.clone(), Flavor::Affine).unwrap();
    println!("module over N = {n}, beta = {beta}, zeta = {zeta}");
    println!("generic: {}", is_generic(&params).unwrap());

    // the polynomial generators act triangularly
    let trunc = Truncation::new(8);
    let one = ModuleVector::one(&params);
    let xi = Coweight::basis(n, 0);
    println!("\nxi_1 . 1 = {}", act_xi(&params, &xi, &one));

    // intertwiners: leading coefficient and eigenweight
    println!("\nintertwiner vectors phi_w 1 (window of W^beta):");
    for w in enumerate_min_reps(n, &beta, 2, 0, 0) {
        let phi = intertwiner_vector(&params, &w, trunc).unwrap();
        let mut lead = Rational::one();
        for alpha in w.inversion_set() {
            lead *= zeta.pair_root(&alpha);
        }
        println!(
            "  w = {w}: support {}, leading coefficient {}",
            phi.support_len(),
            format_rational(&lead)
        );
        // the round trip produces the product of (1 - (zeta, alpha)^2)
        let back = apply_intertwiner(&params, &w.inverse(), &phi, trunc).unwrap();
        let scalar = back.coefficient(&AffineWeylElement::identity(n));
        println!("    phi_(w^-1) phi_w 1 = {} * 1", format_rational(&scalar));
    }

    // weight multiplicities in a truncation window: all one for generic
    let decomposition = weight_decomposition(&params, Truncation::new(3), 0, 0);
    println!(
        "\nweight decomposition (length <= 3, trace 0): {} weights, all multiplicity one: {}",
        decomposition.len(),
        decomposition.iter().all(|(_, d)| *d == 1)
    );

    // the finite analogue and its irreducible quotient
    let zeta_bar = Weight::new(
        vec![rat_int(0), rat_int(1), rat_int(1)],
        rat_int(0),
    );
    let finite = InducedParams::new(beta.clone(), zeta_bar, Flavor::Finite).unwrap();
    println!("\nfinite analogue with contents (0, 1, 1):");
    let dim = irreducible_quotient_dim(&finite, 100).unwrap();
    println!("  module dimension 3, irreducible quotient dimension {dim}");
}
