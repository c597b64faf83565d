//! The Cherednik-Dunkl operators on Laurent polynomials: divided
//! differences, operator application, and the exact relation suite.
//!
//! Run with `cargo run --example dunkl_operators`.

use ddaha::dunkl::{
    divided_difference, dunkl_apply, relation_suite, DunklParams, LaurentPolynomial,
};
use ddaha::rational::{rat, Rational};
use num::Zero;

fn main() {
    let n = 2;
    let params = DunklParams::new(rat(3, 1));

    // divided differences telescope exactly
    let z1 = LaurentPolynomial::variable(n, 0);
    let z1_sq = z1.mul(&z1);
    println!("divided differences at the root a[1,2]:");
    println!("  dd(z1)   = {}", divided_difference(0, 1, &z1));
    println!("  dd(z1^2) = {}", divided_difference(0, 1, &z1_sq));

    // the operator in the e_1 direction
    let e1 = vec![Rational::from_integer(1.into()), Rational::zero()];
    println!("\nD_(e1) at kappa = 3:");
    println!("  D(1)    = {}", dunkl_apply(&e1, &LaurentPolynomial::one(n), &params));
    println!("  D(z1)   = {}", dunkl_apply(&e1, &z1, &params));
    println!("  D(z2)   = {}", dunkl_apply(&e1, &LaurentPolynomial::variable(n, 1), &params));
    println!(
        "  D(z1^-1) = {}",
        dunkl_apply(&e1, &LaurentPolynomial::monomial(vec![-1, 0], rat(1, 1)), &params)
    );

    // the sum of the operators is the Euler operator scaled by kappa
    let diag = vec![Rational::from_integer(1.into()); n];
    let f = LaurentPolynomial::monomial(vec![2, -1], rat(1, 1));
    println!("\nsum_i D_(e_i) on z1^2 z2^-1 = {}", dunkl_apply(&diag, &f, &params));

    // the relation suite: every defining relation, exactly
    for (n, kappa, degree) in [(2usize, rat(3, 1), 4i64), (3, rat(1, 2), 3)] {
        let report = relation_suite(&DunklParams::new(kappa.clone()), degree, n);
        println!(
            "\nrelation suite N = {n}, kappa = {}, degree <= {degree}: {} ({} relations on {} monomials)",
            report.kappa,
            if report.pass { "all hold" } else { "FAILED" },
            report.relations_checked,
            report.monomials_checked
        );
    }
}
