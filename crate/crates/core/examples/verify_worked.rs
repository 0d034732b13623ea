//! Runs every check on both worked examples and prints the report.

use quasiaffine::worked::{df_dataset, verify_all};

fn main() {
    let report = verify_all(&df_dataset(), None);
    println!("{report}");
    std::process::exit(if report.passed() { 0 } else { 1 });
}
