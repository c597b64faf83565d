//! Parabolic cosets: minimal representatives, the unique factorization
//! `x = w u`, and the distinguished double-coset representatives with
//! their round-trip bijection onto block-antidominant vectors.
//!
//! Run with `cargo run --example coset_representatives`.

use ddaha::roots::OrderedPartition;
use ddaha::weyl::{
    beta_of, double_coset_reps, enumerate_min_reps, eta_w, f_map, finite_min_reps, g_map,
    min_coset_rep, AffineWeylElement,
};

fn main() {
    let n = 4;
    let beta = OrderedPartition::new(vec![2, 2]);
    println!("N = {n}, beta = {beta}");

    // finite minimal representatives and their markers
    println!("\nfinite minimal representatives and eta_w markers:");
    for w in finite_min_reps(n, &beta) {
        let eta = eta_w(&w, &beta).unwrap();
        println!("  {w}   l = {}   eta_w = {eta:?}", w.length());
    }

    // the factorization of an arbitrary element
    let x = AffineWeylElement::translation(vec![0, -1, 1, 0])
        .compose(&AffineWeylElement::from_window(vec![2, 0, 3, 1]));
    let (w, u) = min_coset_rep(&x, &beta);
    println!("\nfactorization of x = {x} (length {}):", x.length());
    println!("  w = {w} (length {}), u = {u} (length {})", w.length(), u.length());
    assert_eq!(w.compose(&u), x);
    assert_eq!(w.length() + u.length(), x.length());

    // a window of W^beta
    let window = enumerate_min_reps(n, &beta, 3, 0, 0);
    println!("\n|W^beta| with length <= 3 and trace 0: {}", window.len());

    // double-coset representatives and the f/g round trip
    println!("\ndouble-coset representatives (length <= 4, trace in [-2, 0]):");
    for x in double_coset_reps(&beta, 4, -2, 0) {
        let eta = g_map(&x);
        let back = f_map(&eta, &beta).unwrap();
        assert_eq!(back, x);
        println!(
            "  x = {x}   l = {}   g(x) = {eta:?}   beta(x) = {}",
            x.length(),
            beta_of(&x, &beta)
        );
    }
    println!("round trip f(g(x)) = x verified on every row.");
}
