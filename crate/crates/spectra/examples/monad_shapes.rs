//! For a few spectra, list every monad shape (rho, b) that the bound
//! theorems and rank nonnegativity fail to exclude, and check the rank and
//! first-Chern identities on each.
//!
//! Run with: cargo run --example monad_shapes

use spectra::monad::{enumerate_admissible, rank_degree_identities, rho_bounds};
use spectra::spectrum::Spectrum;

fn main() {
    for tail in [vec![1], vec![1, 2, 2], vec![2, 2, 2], vec![3, 2, 1, 1]] {
        let s = Spectrum::from_tail(&tail).unwrap();
        let bounds = rho_bounds(&s);
        println!(
            "spectrum {:?} (c2 = {}): rho pinned to {} at degree {}",
            s.tail(),
            s.c2(),
            bounds.pinned_value(),
            bounds.pinned_degree()
        );
        for (rho, b) in enumerate_admissible(&s) {
            rank_degree_identities(&s, &rho, &b).expect("identities hold");
            let rho_vals: Vec<(i64, i64)> = rho.seq().iter().collect();
            let b_vals: Vec<(i64, i64)> = b.b_plus().iter().filter(|(_, v)| *v != 0).collect();
            println!("  rho = {rho_vals:?}  b0 = {}  b+ = {b_vals:?}", b.b0());
        }
    }
    println!();
    println!("Every shape above is 'not excluded'; none is claimed realizable.");
}
