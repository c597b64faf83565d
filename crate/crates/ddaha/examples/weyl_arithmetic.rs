//! Extended affine Weyl group arithmetic: normal forms, reduced words,
//! inversion sets, actions on roots and weights, Bruhat order.
//!
//! Run with `cargo run --example weyl_arithmetic`.

use ddaha::rational::rat_int;
use ddaha::roots::{AffineRoot, Weight};
use ddaha::weyl::{gamma_eta, AffineWeylElement};

fn main() {
    let n = 3;
    let pi = AffineWeylElement::pi(n);
    let s = |i| AffineWeylElement::simple_reflection(n, i);

    println!("generators of the extended affine Weyl group, N = {n}:");
    println!("  pi  = {pi}   (length {})", pi.length());
    for i in 0..n {
        println!("  s_{i} = {}   (length {})", s(i), s(i).length());
    }

    // pi^N is the central translation by (1, ..., 1)
    let mut power = AffineWeylElement::identity(n);
    for _ in 0..n {
        power = power.compose(&pi);
    }
    println!("\npi^{n} = {power} = t_(1,...,1), still length {}", power.length());

    // a translation, its reduced word, and the recomposition
    let t = AffineWeylElement::translation(vec![-1, 0, 1]);
    let (k, letters) = t.reduced_word();
    println!("\nt_(-1,0,1) = {t}");
    println!("  length        = {}", t.length());
    println!("  reduced word  = pi^{k} * s_{letters:?}");
    println!("  recomposed    = {}", AffineWeylElement::from_word(n, k, &letters));
    println!("  inversion set = {:?}", t.inversion_set().iter().map(|a| a.to_string()).collect::<Vec<_>>());

    // dual action on roots and the affine action on weights
    let alpha = AffineRoot::finite(0, 1);
    println!("\nactions:");
    println!("  t_(-1,0,1)(a[1,2]) = {}", t.act_root(&alpha));
    let zeta = Weight::new(vec![rat_int(3), rat_int(1), rat_int(0)], rat_int(2));
    println!("  t_(-1,0,1) . {zeta} = {}", t.act_weight(&zeta));

    // Bruhat order on a small interval
    let x = s(1);
    let y = s(1).compose(&s(2)).compose(&s(1));
    println!("\nBruhat: {x} <= {y} ? {}", x.bruhat_leq(&y));
    println!("        {y} <= {x} ? {}", y.bruhat_leq(&x));

    // the shortest sorting permutation of a repeated-entry vector
    let eta = vec![9, 2, 2, 5, 5, 5, 2, 2, 2];
    let gamma = gamma_eta(&eta);
    let window: Vec<usize> = gamma.window().iter().map(|w| w + 1).collect();
    println!("\nshortest sorter of {eta:?}:");
    println!("  window {window:?}, length {}", gamma.length());
    println!("  sorted: {:?}", gamma.perm_vec(&eta));
}
