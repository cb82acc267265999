//! Exact-arithmetic calculus for spectra of stable rank-2 vector bundles on
//! projective 3-space with `c_1 = 0`.
//!
//! The library has three layers:
//!
//! * combinatorics of candidate spectra — axioms, cohomology tables,
//!   enumeration by `c_2`, and a count-of-ones obstruction whose smallest
//!   failures occur at `c_2 = 21` ([`spectrum`], on top of [`seq`]);
//! * monad-shape constraints relating a spectrum to the generator degrees of
//!   `H^1_*(E)` and to the splitting type of the minimal monad ([`monad`]);
//! * Hilbert-function profiles of the space curves that produce spectra with
//!   small leading values ([`curves`]), cross-checked by an exact
//!   Groebner-basis engine over the rationals ([`groebner`]).
//!
//! Everything is exact integer or rational arithmetic; there is no floating
//! point anywhere. The `spectra` binary exposes the same functionality as a
//! deterministic command-line tool, and [`report`] renders the headline
//! exclusion table.

pub mod config;
pub mod curves;
pub mod groebner;
pub mod monad;
pub mod report;
pub mod seq;
pub mod spectrum;
