//! Generic initial ideal of a point configuration in the projective plane,
//! with its standard resolution and Hilbert function.
//!
//! Run with: cargo run --example gin_points

use spectra::groebner::{
    gin, points_ideal, points_quotient_hf, standard_resolution, Field, Rationals,
};

fn main() {
    let field = Rationals;
    let pt = |x: i64, y: i64, z: i64| {
        vec![field.from_i64(x), field.from_i64(y), field.from_i64(z)]
    };

    // Six points, five of them general and one aligned with two others.
    let points = vec![
        pt(1, 0, 0),
        pt(0, 1, 0),
        pt(0, 0, 1),
        pt(1, 1, 1),
        pt(1, 2, 4),
        pt(2, 3, 5),
    ];
    let gb = points_ideal(&field, &points).unwrap();
    let g = gin(&field, &gb, 3, 42).unwrap();
    println!("gin = {:?}", g.gens_strings());
    println!("strongly stable: {}", g.is_strongly_stable());
    println!("saturated (T2 regular): {}", g.last_variable_regular());

    let res = standard_resolution(&g).unwrap();
    println!(
        "sigma = {}, lambdas = {:?}, generator degrees = {:?}, syzygy degrees = {:?}",
        res.sigma,
        res.lambdas,
        res.gen_degrees(),
        res.syz_degrees()
    );
    println!("deg Gamma = {} (should be {})", res.deg_gamma(), points.len());

    print!("Hilbert function of the quotient:");
    for d in 0..8 {
        let by_counting = g.quotient_hf(d);
        let by_rank = points_quotient_hf(&field, &points, 3, d);
        assert_eq!(by_counting, by_rank);
        print!(" {by_counting}");
    }
    println!();
}
