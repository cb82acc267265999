//! Degreewise linear algebra over an exact field: rank, kernel, and the
//! Hilbert function of a homogeneous ideal computed without Groebner bases.
//!
//! The rank route is deliberately independent of the division machinery so
//! that `hf(I) = hf(in(I))` is a genuine cross-check between two pipelines.

use super::field::Field;
use super::monomial::{monomials_of_degree, ring_dim, Monomial};
use super::poly::Poly;

/// Rank of the matrix with the given rows; dispatches to the field's
/// preferred elimination (fraction-free over the rationals).
pub fn rank<F: Field>(field: &F, rows: Vec<Vec<F::Elem>>) -> usize {
    field.matrix_rank(rows)
}

/// Basis of the kernel `{v : M v = 0}` of the matrix with the given rows.
#[allow(clippy::needless_range_loop)] // two rows touched per pass
pub fn kernel_basis<F: Field>(field: &F, mut rows: Vec<Vec<F::Elem>>, ncols: usize) -> Vec<Vec<F::Elem>> {
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(&rows[rank][col].clone());
        for c in 0..ncols {
            rows[rank][c] = field.mul(&rows[rank][c], &inv);
        }
        for r in 0..rows.len() {
            if r != rank && !field.is_zero(&rows[r][col]) {
                let factor = rows[r][col].clone();
                for c in 0..ncols {
                    let sub = field.mul(&rows[rank][c], &factor);
                    rows[r][c] = field.sub(&rows[r][c], &sub);
                }
            }
        }
        pivots.push((rank, col));
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for &(r, c) in &pivots {
            // Pivot variable = -(coefficient of the free column in that row).
            v[c] = field.neg(&rows[r][free]);
        }
        basis.push(v);
    }
    basis
}

/// Dimension of the degree-`d` piece of the ideal generated by `gens`,
/// as the rank of all monomial multiples of the generators.
pub fn ideal_dim_in_degree<F: Field>(field: &F, gens: &[Poly<F>], d: i64) -> usize {
    if d < 0 {
        return 0;
    }
    let nvars = gens.first().map_or(0, |g| g.nvars());
    let basis = monomials_of_degree(nvars, d as u32);
    let mut rows = Vec::new();
    for g in gens {
        let Some(gd) = g.degree() else { continue };
        if gd as i64 > d {
            continue;
        }
        for m in monomials_of_degree(nvars, (d - gd as i64) as u32) {
            let prod = g.mul_term(field, &m, &field.one());
            rows.push(prod.coefficient_vector(field, &basis));
        }
    }
    rank(field, rows)
}

/// Hilbert function of the quotient `S/I` in degree `d`, by rank.
pub fn quotient_hf<F: Field>(field: &F, gens: &[Poly<F>], d: i64) -> i64 {
    if d < 0 {
        return 0;
    }
    let nvars = gens.first().map_or(0, |g| g.nvars());
    ring_dim(nvars, d) - ideal_dim_in_degree(field, gens, d) as i64
}

/// Window of the quotient Hilbert function on `lo..=hi` as a sequence.
pub fn quotient_hf_window<F: Field>(
    field: &F,
    gens: &[Poly<F>],
    lo: i64,
    hi: i64,
) -> crate::seq::FinSuppSeq {
    crate::seq::FinSuppSeq::new(lo, (lo..=hi).map(|d| quotient_hf(field, gens, d)).collect())
}

/// Kernel of the evaluation of all degree-`d` monomials at the given points,
/// returned as polynomials: the degree-`d` piece of the points' ideal.
/// Coefficient vectors come back content-normalized.
pub fn evaluation_kernel<F: Field>(
    field: &F,
    points: &[Vec<F::Elem>],
    nvars: usize,
    d: u32,
) -> Vec<Poly<F>> {
    let basis = monomials_of_degree(nvars, d);
    let rows: Vec<Vec<F::Elem>> = points
        .iter()
        .map(|p| basis.iter().map(|m| eval_monomial(field, m, p)).collect())
        .collect();
    kernel_basis(field, rows, basis.len())
        .into_iter()
        .map(|coeffs| {
            Poly::from_terms(
                field,
                nvars,
                basis
                    .iter()
                    .cloned()
                    .zip(field.content_normalize(coeffs))
                    .filter(|(_, c)| !field.is_zero(c))
                    .collect(),
            )
        })
        .collect()
}

/// Hilbert function of the quotient by a points ideal, straight from the
/// rank of the degree-`d` evaluation matrix. This route never touches
/// division or Groebner machinery, so it is the independent side of the
/// Hilbert cross-check for point schemes.
pub fn points_quotient_hf<F: Field>(field: &F, points: &[Vec<F::Elem>], nvars: usize, d: i64) -> i64 {
    if d < 0 {
        return 0;
    }
    let basis = monomials_of_degree(nvars, d as u32);
    let rows: Vec<Vec<F::Elem>> = points
        .iter()
        .map(|p| basis.iter().map(|m| eval_monomial(field, m, p)).collect())
        .collect();
    rank(field, rows) as i64
}

pub fn eval_monomial<F: Field>(field: &F, m: &Monomial, point: &[F::Elem]) -> F::Elem {
    let mut acc = field.one();
    for (i, &e) in m.0.iter().enumerate() {
        for _ in 0..e {
            acc = field.mul(&acc, &point[i]);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::super::field::Rationals;
    use super::super::poly::poly_from_ints;
    use super::*;

    fn q() -> Rationals {
        Rationals
    }

    #[test]
    fn rank_and_kernel_small() {
        let f = q();
        let int = |n: i64| f.from_i64(n);
        let rows = vec![
            vec![int(1), int(2), int(3)],
            vec![int(2), int(4), int(6)],
            vec![int(0), int(1), int(1)],
        ];
        assert_eq!(rank(&f, rows.clone()), 2);
        let ker = kernel_basis(&f, rows, 3);
        assert_eq!(ker.len(), 1);
        // Kernel vector is proportional to (-1, -1, 1).
        let v = &ker[0];
        assert_eq!(f.add(&v[0], &v[2]), f.zero());
        assert_eq!(f.add(&v[1], &v[2]), f.zero());
    }

    #[test]
    fn hilbert_of_complete_intersection_2_2() {
        let f = q();
        // Two diagonal-ish quadrics in 3 variables cut a length-4 scheme:
        // quotient Hilbert function 1, 3, 4, 4, ...
        let gens = vec![
            poly_from_ints(&f, 3, &[(1, &[2, 0, 0]), (-1, &[0, 2, 0]), (1, &[0, 0, 2])]),
            poly_from_ints(&f, 3, &[(1, &[1, 1, 0]), (1, &[0, 1, 1]), (3, &[0, 0, 2])]),
        ];
        let hf: Vec<i64> = (0..6).map(|d| quotient_hf(&f, &gens, d)).collect();
        assert_eq!(hf, vec![1, 3, 4, 4, 4, 4]);
    }

    #[test]
    fn initial_ideal_preserves_hilbert_function() {
        use super::super::basis::buchberger;
        let f = q();
        let ideals: Vec<Vec<Poly<Rationals>>> = vec![
            vec![
                poly_from_ints(&f, 3, &[(1, &[2, 0, 0]), (-1, &[0, 2, 0]), (1, &[0, 0, 2])]),
                poly_from_ints(&f, 3, &[(1, &[1, 1, 0]), (1, &[0, 1, 1]), (3, &[0, 0, 2])]),
            ],
            vec![
                poly_from_ints(&f, 3, &[(2, &[3, 0, 0]), (1, &[1, 1, 1]), (-1, &[0, 0, 3])]),
                poly_from_ints(&f, 3, &[(1, &[0, 2, 0]), (5, &[1, 0, 1])]),
            ],
        ];
        for gens in &ideals {
            let gb = buchberger(&f, gens);
            let init = gb.initial_ideal();
            let maxdeg = gb.gens().iter().filter_map(|p| p.degree()).max().unwrap() as i64;
            for d in 0..=2 * maxdeg + 2 {
                assert_eq!(init.quotient_hf(d), quotient_hf(&f, gens, d), "degree {d}");
            }
        }
    }

    #[test]
    fn hilbert_of_zero_ideal_is_ring_dimension() {
        let f = q();
        let gens: Vec<Poly<Rationals>> = vec![Poly::zero(3)];
        for d in 0..6 {
            assert_eq!(quotient_hf(&f, &gens, d), (d + 2) * (d + 1) / 2);
        }
    }

    #[test]
    fn evaluation_kernel_single_point() {
        let f = q();
        let pt = vec![f.one(), f.zero(), f.zero()];
        let kers = evaluation_kernel(&f, &[pt], 3, 1);
        assert_eq!(kers.len(), 2);
        for k in &kers {
            // Every kernel element vanishes on T0, i.e. has no T0 term.
            assert!(k.coefficient(&Monomial::var(3, 0)).is_none());
        }
    }
}
