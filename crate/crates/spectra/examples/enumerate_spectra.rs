//! Enumerate every candidate spectrum for a few values of c2 and print the
//! axiom and obstruction verdicts.
//!
//! Run with: cargo run --example enumerate_spectra

use spectra::spectrum::{enumerate, ObstructionVerdict};

fn main() {
    for c2 in [1, 5, 9, 17, 21] {
        let all = enumerate(c2);
        println!("c2 = {c2}: {} valid spectra", all.len());
        for s in &all {
            let verdict = s.obstruction();
            let marker = match verdict {
                ObstructionVerdict::Violated => "  <-- excluded",
                ObstructionVerdict::ExceptionCase => "  (exception family)",
                _ => "",
            };
            if c2 <= 9 || verdict != ObstructionVerdict::NotApplicable {
                println!(
                    "  {:?}  m={} h1(E(-1))={}  {}{}",
                    s.tail(),
                    s.m(),
                    s.h1_table(-1).unwrap(),
                    verdict,
                    marker
                );
            }
        }
    }
}
