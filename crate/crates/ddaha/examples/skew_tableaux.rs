//! Skew diagrams and tableaux from dominant weight pairs: enumeration,
//! standardness, level restriction, the lattice statistics d_i(T), and
//! the inducing weight they pin down.
//!
//! Run with `cargo run --example skew_tableaux`.

use ddaha::tableaux::{
    beta_from_weights, enumerate_tableaux, weightcon_check, zeta_lambda_mu, SlmWeight,
};
use ddaha::weyl::eta_w;

fn main() {
    let m = 2;
    let level = 2;
    let lambda = SlmWeight::new(vec![3, 1], level);
    let mu = SlmWeight::new(vec![1, 0], level);
    let n = 3;
    println!("pair lambda = {lambda}, mu = {mu}, N = {n} (m = {m})");

    let beta = beta_from_weights(&lambda, &mu, n).unwrap();
    println!("row lengths beta = {beta}, offsets from mu: {:?}", mu.offsets()
        .iter().map(ddaha::rational::format_rational).collect::<Vec<_>>());

    let zeta = zeta_lambda_mu(&lambda, &mu, n).unwrap();
    println!("inducing weight zeta = {zeta} (shifted level {})", level + m as i64);

    let all = enumerate_tableaux(&lambda, &mu, n, false, None);
    let standard = enumerate_tableaux(&lambda, &mu, n, true, None);
    let restricted = enumerate_tableaux(&lambda, &mu, n, true, Some(level));
    println!(
        "\ntableaux: {} total, {} standard, {} level-{level}-restricted",
        all.len(),
        standard.len(),
        restricted.len()
    );

    println!("\nstandard tableaux with statistics:");
    for t in &standard {
        let (ds, d) = t.d_statistics();
        let w = t.w_t();
        let marker = eta_w(&w, &beta).unwrap();
        let restricted = t.is_restricted(&mu, level);
        println!(
            "  {t}\n    w_T = {w}, d_i = {ds:?}, d(T) = {d}, eta marker = {marker:?}, restricted: {restricted}"
        );
        if restricted {
            let report = weightcon_check(t, &lambda, &mu, n).unwrap();
            println!(
                "    pairing inequalities: {} ({} checked)",
                if report.pass() { "hold" } else { "VIOLATED" },
                report.checked
            );
        }
    }

    // restriction grows with the level and saturates
    print!("\nrestricted counts by level:");
    for l in level..level + 4 {
        let lam = SlmWeight::new(lambda.nu.clone(), l);
        let mu_l = SlmWeight::new(mu.nu.clone(), l);
        print!(" {}", enumerate_tableaux(&lam, &mu_l, n, true, Some(l)).len());
    }
    println!(" (saturating at {})", standard.len());
}
