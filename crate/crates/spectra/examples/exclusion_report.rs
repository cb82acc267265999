//! Reproduce the headline finding: every sequence passing the spectrum
//! axioms with c2 <= 20 survives the count-of-ones obstruction, while at
//! c2 = 21 the first excluded sequences appear.
//!
//! Run with: cargo run --release --example exclusion_report

use spectra::report::{build_report, render_markdown};

fn main() {
    let report = build_report(21);
    print!("{}", render_markdown(&report));
}
