//! Cross-module oracle: build the saturated ideal of a curve in a double
//! plane with Groebner machinery, read its Hilbert value beyond regularity,
//! and compare with the binomial section count driven by the point scheme's
//! standard resolution. Exact agreement, no floats.
//!
//! Run with: cargo run --release --example double_plane_oracle

use spectra::curves::double_plane_h0_window;
use spectra::groebner::double_plane_ideal;

fn main() {
    for (r0, e, r) in [(2, 2, 2), (3, 2, 4), (4, 1, 4)] {
        let seed = (r0 * 100 + e * 10 + r) as u64;
        let ideal = double_plane_ideal(r0, e, r, seed).unwrap();
        let gamma = &ideal.gamma;
        let d = r0 + r + 5;

        let groebner_value = ideal.initial_ideal().quotient_hf(d);
        let window = double_plane_h0_window(gamma.sigma, &gamma.lambdas, r0, r, -2, d + 2);
        let curve_value = window.delta2().cumsum2_at(d);

        println!(
            "(r0, e, r) = ({r0}, {e}, {r}): Gamma has sigma = {}, lambdas = {:?}, degree {}",
            gamma.sigma,
            gamma.lambdas,
            gamma.deg_gamma()
        );
        println!(
            "  quotient Hilbert value at degree {d}: groebner = {groebner_value}, curve formula = {curve_value} ({})",
            if groebner_value == curve_value { "agree" } else { "DISAGREE" }
        );
        assert_eq!(groebner_value, curve_value);
    }
}
