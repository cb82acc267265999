//! Exact-arithmetic polynomial and Groebner-basis engine over the rationals
//! and prime fields: grevlex division, Buchberger's algorithm, generic
//! initial ideals, standard resolutions of plane point schemes, and the
//! double-plane curve ideals used as an independent oracle for the
//! closed-form section counts in [`crate::curves`].

mod basis;
mod double_plane;
mod field;
mod hilbert;
mod monomial;
mod points;
mod poly;
mod resolution;

pub use basis::{buchberger, Division, GroebnerBasis, GroebnerError};
pub use double_plane::{double_plane_ideal, from_forms, DoublePlaneIdeal};
pub use field::{Field, FieldSpec, NotPrime, PrimeField, Rationals};
pub use hilbert::{
    evaluation_kernel, ideal_dim_in_degree, kernel_basis, points_quotient_hf, quotient_hf,
    quotient_hf_window, rank,
};
pub use monomial::{monomials_of_degree, ring_dim, Monomial, MonomialIdeal};
pub use points::{eval_poly, gin, points_ideal};
pub use poly::{poly_from_ints, Poly};
pub use resolution::{standard_resolution, StandardResolution};
