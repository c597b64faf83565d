//! q-characters: the multinomial as a length generating function, the
//! restricted configuration sum against its alternating affine-Weyl
//! form, and the specialized characters of the polynomial parts.
//!
//! Run with `cargo run --example q_characters`.

use ddaha::characters::{
    ch_m_symmetric, ch_v_symmetric_conjectural, f_alternating, f_tableaux, q_multinomial,
};
use ddaha::rational::format_rational;
use ddaha::roots::OrderedPartition;
use ddaha::tableaux::SlmWeight;

fn main() {
    // the q-multinomial of a composition
    let beta = OrderedPartition::new(vec![2, 2]);
    println!("[4; (2,2)] = {}", q_multinomial(4, &beta));

    // the central identity: tableau sum = alternating sum
    let cutoff = 20;
    println!("\nconfiguration sums (mod q^{cutoff}):");
    for (lambda, mu, n) in [
        (SlmWeight::new(vec![1, 1], 1), SlmWeight::new(vec![0, 0], 1), 2usize),
        (SlmWeight::new(vec![2, 1], 2), SlmWeight::new(vec![0, 0], 2), 5),
        (SlmWeight::new(vec![2, 2], 3), SlmWeight::new(vec![1, 0], 3), 7),
        (
            SlmWeight::new(vec![1, 1, 0], 1),
            SlmWeight::new(vec![1, 0, 0], 1),
            4,
        ),
    ] {
        let tab = f_tableaux(&lambda, &mu, n).truncate(cutoff);
        let alt = f_alternating(&lambda, &mu, n, cutoff).unwrap();
        println!(
            "  lambda = {lambda}, mu = {mu}, N = {n}:\n    F_tableaux    = {tab}\n    F_alternating = {alt}\n    agree: {}",
            tab.eq_mod(&alt, cutoff)
        );
    }

    // specialized characters of the polynomial parts
    let lambda = SlmWeight::new(vec![2, 1], 2);
    let mu = SlmWeight::new(vec![0, 0], 2);
    let n = 5;
    let (bracket, delta) = ch_m_symmetric(&lambda, &mu, n).unwrap();
    println!("\nsymmetric character data for lambda = {lambda}, mu = {mu}, N = {n}:");
    println!("  [N; beta]             = {bracket}");
    println!("  Delta_l - Delta_m     = {}", format_rational(&delta));
    let ch = ch_v_symmetric_conjectural(&lambda, &mu, n, 12).unwrap();
    println!("  ch V (conjectural)    = {ch}");
    println!("  conjectural flag set: {}", ch.conjectural);
}
