//! Saturated ideals of point configurations in the projective plane, and
//! generic initial ideals by random coordinate change.

use super::basis::{buchberger, GroebnerBasis, GroebnerError};
use super::field::Field;
use super::hilbert::{eval_monomial, evaluation_kernel};
use super::monomial::{Monomial, MonomialIdeal};
use super::poly::Poly;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// Groebner basis of the saturated ideal of distinct points in `P^2`,
/// assembled from the degreewise kernels of the evaluation maps
/// `S_d -> k^{#points}` for `d` up to the number of points (the ideal of
/// `n` points is generated in degrees `<= n`).
pub fn points_ideal<F: Field>(
    field: &F,
    points: &[Vec<F::Elem>],
) -> Result<GroebnerBasis<F>, GroebnerError> {
    let nvars = 3;
    for (i, p) in points.iter().enumerate() {
        if p.len() != nvars || p.iter().all(|c| field.is_zero(c)) {
            return Err(GroebnerError::BadPoint { index: i });
        }
        for q in &points[..i] {
            if projectively_equal(field, p, q) {
                return Err(GroebnerError::BadPoint { index: i });
            }
        }
    }
    let n = points.len() as i64;
    let mut gens: Vec<Poly<F>> = Vec::new();
    let mut d = 1u32;
    loop {
        let kernel = evaluation_kernel(field, points, nvars, d);
        let quotient_dim = super::monomial::ring_dim(nvars, d as i64) - kernel.len() as i64;
        gens.extend(kernel);
        // The kernel in degree d is the exact degree-d piece of the saturated
        // ideal; once the quotient dimension reaches n the ideal is generated
        // in degrees <= d+1 (regularity of a point scheme), and d <= n always
        // gets there.
        if quotient_dim == n {
            gens.extend(evaluation_kernel(field, points, nvars, d + 1));
            break;
        }
        d += 1;
    }
    Ok(buchberger(field, &gens))
}

/// Projective equality: all 2x2 minors of the coordinate pair vanish.
fn projectively_equal<F: Field>(field: &F, p: &[F::Elem], q: &[F::Elem]) -> bool {
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            let minor = field.sub(
                &field.mul(&p[i], &q[j]),
                &field.mul(&p[j], &q[i]),
            );
            if !field.is_zero(&minor) {
                return false;
            }
        }
    }
    true
}

/// Generic initial ideal: the initial ideal after a dense random coordinate
/// change, stabilized over `trials` independent draws. Every draw must give
/// the same monomial ideal and the result must be strongly stable; anything
/// else is reported as an error, never patched.
pub fn gin<F: Field>(
    field: &F,
    basis: &GroebnerBasis<F>,
    trials: u32,
    seed: u64,
) -> Result<MonomialIdeal, GroebnerError> {
    assert!(trials >= 1, "need at least one trial");
    let nvars = basis.nvars();
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut agreed: Option<MonomialIdeal> = None;
    for trial in 0..trials {
        let matrix = random_invertible(field, nvars, &mut rng);
        let forms: Vec<Poly<F>> = (0..nvars)
            .map(|j| {
                // Column j of the matrix defines the image of T_j.
                Poly::from_terms(
                    field,
                    nvars,
                    (0..nvars)
                        .map(|i| (Monomial::var(nvars, i), matrix[i][j].clone()))
                        .collect(),
                )
            })
            .collect();
        let moved: Vec<Poly<F>> = basis
            .gens()
            .iter()
            .map(|g| g.substitute(field, &forms))
            .collect();
        let in_ideal = buchberger(field, &moved).initial_ideal();
        match &agreed {
            None => agreed = Some(in_ideal),
            Some(prev) if *prev == in_ideal => {}
            Some(_) => return Err(GroebnerError::UnstableAcrossTrials { trial }),
        }
    }
    let result = agreed.expect("at least one trial ran");
    if !result.is_strongly_stable() {
        return Err(GroebnerError::NotStronglyStable {
            ideal: result.gens_strings(),
        });
    }
    Ok(result)
}

/// Dense matrix with entries from `[-10^4, 10^4]`, redrawn until invertible.
fn random_invertible<F: Field>(
    field: &F,
    n: usize,
    rng: &mut ChaCha12Rng,
) -> Vec<Vec<F::Elem>> {
    loop {
        let m: Vec<Vec<F::Elem>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| field.from_i64(rng.gen_range(-10_000..=10_000)))
                    .collect()
            })
            .collect();
        if !field.is_zero(&determinant(field, &m)) {
            return m;
        }
    }
}

fn determinant<F: Field>(field: &F, m: &[Vec<F::Elem>]) -> F::Elem {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    // Laplace expansion along the first row; n is at most 4 here.
    let mut det = field.zero();
    for j in 0..n {
        let minor: Vec<Vec<F::Elem>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let cof = field.mul(&m[0][j], &determinant(field, &minor));
        det = if j % 2 == 0 {
            field.add(&det, &cof)
        } else {
            field.sub(&det, &cof)
        };
    }
    det
}

/// Convenience: evaluate a polynomial at a point.
pub fn eval_poly<F: Field>(field: &F, p: &Poly<F>, point: &[F::Elem]) -> F::Elem {
    p.terms().iter().fold(field.zero(), |acc, (m, c)| {
        field.add(&acc, &field.mul(c, &eval_monomial(field, m, point)))
    })
}
