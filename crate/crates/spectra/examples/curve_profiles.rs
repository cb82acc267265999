//! Closed-form second-difference profiles for the four curve families on a
//! quadric, the ACM resolution cross-check, and the reverse search from a
//! candidate spectrum tail back to curves.
//!
//! Run with: cargo run --example curve_profiles

use spectra::curves::{delta2_from_acm, tail_search, CurveFamily};
use spectra::seq::FinSuppSeq;

fn main() {
    let families = [
        CurveFamily::QuadricDivisor { a: 2, b: 3 },
        CurveFamily::ConeCurve { d: 7 },
        CurveFamily::TwoPlanesNoLine { d0: 2, d1: 3, r: 2 },
        CurveFamily::DoublePlane {
            sigma: 2,
            lambdas: vec![1, 3],
            r0: 5,
            r: 6,
        },
    ];
    for f in &families {
        let d2 = f.delta2_h0().unwrap();
        println!("{f:?}");
        println!("  delta2 h0 = {d2:?}  degree = {}", f.degree());
        println!("  h0 window  = {:?}", d2.cumsum2_window(0, 6));
    }

    // The resolution route recomputes the cone profile independently.
    let linked = delta2_from_acm(&[2, 4, 4], &[5, 5]).unwrap();
    let cone = CurveFamily::ConeCurve { d: 7 }.delta2_h0().unwrap();
    println!("\nACM route for the degree-7 cone curve: {linked:?} (matches: {})", linked == cone);

    // Reverse search: which curves produce the tail (1,2,2)? And the first
    // excluded tail at c2 = 21 matches nothing.
    for tail in [vec![1, 2, 2], vec![1, 2, 2, 4, 2]] {
        let t = FinSuppSeq::from_tail(&tail);
        let matches = tail_search(&t, 21);
        println!("\ntail {tail:?}: {} curve matches", matches.len());
        for m in matches.iter().take(4) {
            println!("  {:?} via {:?}", m.family, m.route);
        }
    }
}
