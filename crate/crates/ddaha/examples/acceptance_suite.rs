//! Runs the full verification suite and prints one line per criterion.
//! Exits nonzero when any criterion fails.
//!
//! Run with `cargo run --release --example acceptance_suite`.

fn main() {
    let reports = ddaha::verify::run_all();
    for report in &reports {
        println!("{}", report.line());
        for failure in report.failures.iter().take(5) {
            println!("    {failure}");
        }
    }
    if reports.iter().any(|r| !r.pass) {
        std::process::exit(1);
    }
}
