//! Monad-shape constraints attached to a spectrum.
//!
//! For a stable rank-2 bundle with `c_1 = 0`, let `rho(i)` count the minimal
//! generators of degree `i` of the graded module `H^1_*(E)`, and let the
//! middle term of the minimal self-dual monad split as
//! `B_+ ⊕ b_0·O ⊕ B_+^dual` with `B_+ = ⊕_{i>0} b_i·O(i)`. The spectrum pins
//! `rho(-m-1) = s(m)` and bounds every other value:
//!
//! * `rho(i) <= s(-i-1) - 1` for `-m <= i <= m-1`;
//! * `rho(i) <= max(s(-i-1) - 2, 0)` for `i >= 0`;
//! * if `rho(i) = s(-i-1) - 1` for some `-m <= i <= -2`, then `s(j) = 1`
//!   for `-i <= j <= m`.
//!
//! Conversely `b` is determined by `(s, rho)`:
//!
//! * `b_i = 2 s(i) - (s(i-1) - rho(-i)) - (s(i+1) - rho(i))` for `i >= 1`;
//! * `b_0 / 2 = s(0) - (s(1) - rho(0)) + 1`.
//!
//! A negative `b_i` certifies that no bundle realizes the pair, so this
//! module is an exclusion engine: [`enumerate_admissible`] lists the shapes
//! that are *not yet excluded* — it never claims realizability.

use crate::seq::FinSuppSeq;
use crate::spectrum::Spectrum;
use serde::Serialize;
use thiserror::Error;

/// Generator-degree sequence `rho`, a nonnegative finitely supported function.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RhoSeq(FinSuppSeq);

impl RhoSeq {
    pub fn new(seq: FinSuppSeq) -> Self {
        assert!(
            seq.iter().all(|(_, v)| v >= 0),
            "rho values must be nonnegative"
        );
        RhoSeq(seq)
    }

    pub fn get(&self, i: i64) -> i64 {
        self.0.get(i)
    }

    pub fn seq(&self) -> &FinSuppSeq {
        &self.0
    }

    /// Total number of minimal generators.
    pub fn total(&self) -> i64 {
        self.0.mass()
    }
}

/// Splitting type of the monad's middle term: `b(0)` is the trivial-summand
/// rank (always even), `b(i)` for `i >= 1` the multiplicity of `O(i)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonadShape {
    b: FinSuppSeq,
}

impl MonadShape {
    pub fn b(&self, i: i64) -> i64 {
        self.b.get(i)
    }

    pub fn b0(&self) -> i64 {
        self.b.get(0)
    }

    /// The positive part `b(1), b(2), ...` as a sequence.
    pub fn b_plus(&self) -> FinSuppSeq {
        let hi = self.b.support_max().unwrap_or(0);
        FinSuppSeq::new(1, (1..=hi).map(|i| self.b.get(i)).collect())
    }
}

/// Per-degree admissible intervals for `rho`, relative to a spectrum.
#[derive(Clone, Debug)]
pub struct RhoBounds {
    m: i64,
    pinned_value: i64,
    /// Upper bounds for degrees `-m ..= m-1` (lower bounds are all zero).
    upper: Vec<i64>,
}

impl RhoBounds {
    /// Degree at which `rho` is pinned to `s(m)`.
    pub fn pinned_degree(&self) -> i64 {
        -self.m - 1
    }

    pub fn pinned_value(&self) -> i64 {
        self.pinned_value
    }

    /// The interval `[lo, hi]` allowed for `rho(i)`; degrees outside
    /// `[-m-1, m-1]` are forced to zero.
    pub fn interval(&self, i: i64) -> (i64, i64) {
        if i == self.pinned_degree() {
            return (self.pinned_value, self.pinned_value);
        }
        if i < -self.m || i > self.m - 1 {
            return (0, 0);
        }
        let k = (i + self.m) as usize;
        (0, self.upper[k])
    }

    /// Degrees with a nontrivial choice, i.e. upper bound positive.
    pub fn free_degrees(&self) -> Vec<i64> {
        (-self.m..=self.m - 1)
            .filter(|&i| self.interval(i).1 > 0)
            .collect()
    }

    pub fn contains(&self, rho: &RhoSeq) -> bool {
        let lo = rho.seq().support_min().unwrap_or(0).min(self.pinned_degree());
        let hi = rho.seq().support_max().unwrap_or(0).max(self.m);
        (lo..=hi).all(|i| {
            let (a, b) = self.interval(i);
            (a..=b).contains(&rho.get(i))
        })
    }
}

/// Exact per-degree intervals for `rho`: pinned at `-m-1`, bounded by
/// `s(-i-1) - 1` in negative degrees and by `max(s(-i-1) - 2, 0)` in
/// nonnegative ones, zero elsewhere. Spectrum symmetry reads `s(-i-1)`
/// as `s(|i+1|)`.
pub fn rho_bounds(s: &Spectrum) -> RhoBounds {
    let m = s.m();
    let upper = (-m..=m - 1)
        .map(|i| {
            let sv = s.s(-i - 1);
            if i < 0 {
                sv - 1
            } else {
                (sv - 2).max(0)
            }
        })
        .collect();
    RhoBounds {
        m,
        pinned_value: s.s(m),
        upper,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Error)]
#[error("rho({degree}) = s({s_index}) - 1 forces s(j) = 1 for {from} <= j <= {to}, but s({bad_j}) = {bad_value}")]
pub struct TheoremBViolation {
    pub degree: i64,
    pub s_index: i64,
    pub from: i64,
    pub to: i64,
    pub bad_j: i64,
    pub bad_value: i64,
}

/// Checks the implication attached to the negative-degree bound: whenever
/// `rho(i)` sits at its cap `s(-i-1) - 1` for some `-m <= i <= -2`, the
/// spectrum must end in ones from `-i` on.
pub fn check_theorem_b(s: &Spectrum, rho: &RhoSeq) -> Result<(), TheoremBViolation> {
    let m = s.m();
    for i in -m..=-2 {
        if rho.get(i) == s.s(-i - 1) - 1 {
            for j in -i..=m {
                if s.s(j) != 1 {
                    return Err(TheoremBViolation {
                        degree: i,
                        s_index: -i - 1,
                        from: -i,
                        to: m,
                        bad_j: j,
                        bad_value: s.s(j),
                    });
                }
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Error)]
#[error("rank b({index}) = {value} is negative; the pair (s, rho) is inadmissible")]
pub struct NegativeRank {
    pub index: i64,
    pub value: i64,
}

/// Splitting type from `(s, rho)`. Fails with [`NegativeRank`] when some
/// computed multiplicity is negative, which excludes the pair.
pub fn b_from(s: &Spectrum, rho: &RhoSeq) -> Result<MonadShape, NegativeRank> {
    let m = s.m();
    let b0 = 2 * (s.s(0) - (s.s(1) - rho.get(0)) + 1);
    if b0 < 0 {
        return Err(NegativeRank { index: 0, value: b0 });
    }
    let mut vals = vec![b0];
    for i in 1..=m {
        let bi = 2 * s.s(i) - (s.s(i - 1) - rho.get(-i)) - (s.s(i + 1) - rho.get(i));
        if bi < 0 {
            return Err(NegativeRank {
                index: i,
                value: bi,
            });
        }
        vals.push(bi);
    }
    Ok(MonadShape {
        b: FinSuppSeq::new(0, vals),
    })
}

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum IdentityFailure {
    #[error("rank identity fails: sum b_i + b0/2 = {lhs} but sum rho + 1 = {rhs}")]
    Rank { lhs: i64, rhs: i64 },
    #[error("first-Chern identity fails: c1(A_-^dual) - c1(B_+bar) = {lhs} but s(0) = {rhs}")]
    FirstChern { lhs: i64, rhs: i64 },
}

/// Bookkeeping identities that hold for every admissible pair:
/// `sum_{i>=1} b_i + b_0/2 = sum_i rho(i) + 1` (rank balance of the monad)
/// and `c1(A_-^dual) - c1(B_+bar) = s(0)`. A failure indicates a
/// transcription bug, never bad input.
pub fn rank_degree_identities(
    s: &Spectrum,
    rho: &RhoSeq,
    b: &MonadShape,
) -> Result<(), Vec<IdentityFailure>> {
    let m = s.m();
    let mut failures = Vec::new();

    let sum_b: i64 = (1..=m).map(|i| b.b(i)).sum();
    let lhs = sum_b + b.b0() / 2;
    let rhs = rho.total() + 1;
    if lhs != rhs {
        failures.push(IdentityFailure::Rank { lhs, rhs });
    }

    let lo = rho.seq().support_min().unwrap_or(0);
    let hi = rho.seq().support_max().unwrap_or(0);
    let c1_a_minus: i64 = (lo..0).map(|i| i * rho.get(i)).sum();
    let c1_b_plus_bar: i64 =
        (1..=m).map(|i| i * b.b(i)).sum::<i64>() - (0..=hi.max(0)).map(|i| i * rho.get(i)).sum::<i64>();
    let lhs_c1 = -c1_a_minus - c1_b_plus_bar;
    if lhs_c1 != s.s(0) {
        failures.push(IdentityFailure::FirstChern {
            lhs: lhs_c1,
            rhs: s.s(0),
        });
    }

    if failures.is_empty() {
        Ok(())
    } else {
        Err(failures)
    }
}

/// JSON row for one admissible pair.
#[derive(Serialize)]
pub struct MonadRecord {
    pub rho: FinSuppSeq,
    pub b0: i64,
    pub b: FinSuppSeq,
}

impl MonadRecord {
    pub fn new(rho: &RhoSeq, b: &MonadShape) -> Self {
        MonadRecord {
            rho: rho.seq().clone(),
            b0: b.b0(),
            b: b.b_plus(),
        }
    }
}

/// Every `(rho, b)` pair surviving the bounds, the trailing-ones implication
/// and nonnegativity of ranks. Deterministic order: lexicographic in the
/// chosen values over increasing free degrees.
pub fn enumerate_admissible(s: &Spectrum) -> Vec<(RhoSeq, MonadShape)> {
    let bounds = rho_bounds(s);
    let free = bounds.free_degrees();
    let mut out = Vec::new();
    let mut choice = vec![0i64; free.len()];
    loop {
        let mut lo = bounds.pinned_degree();
        let mut hi = lo;
        for (&d, _) in free.iter().zip(&choice) {
            lo = lo.min(d);
            hi = hi.max(d);
        }
        let vals = (lo..=hi)
            .map(|i| {
                if i == bounds.pinned_degree() {
                    bounds.pinned_value()
                } else if let Some(k) = free.iter().position(|&d| d == i) {
                    choice[k]
                } else {
                    0
                }
            })
            .collect();
        let rho = RhoSeq::new(FinSuppSeq::new(lo, vals));
        if check_theorem_b(s, &rho).is_ok() {
            if let Ok(b) = b_from(s, &rho) {
                out.push((rho, b));
            }
        }
        // Odometer over the free intervals.
        let mut k = free.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if choice[k] < bounds.interval(free[k]).1 {
                choice[k] += 1;
                break;
            }
            choice[k] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(t: &[i64]) -> Spectrum {
        Spectrum::from_tail(t).unwrap()
    }

    fn rho_from(pairs: &[(i64, i64)]) -> RhoSeq {
        let mut seq = FinSuppSeq::zero();
        for &(i, v) in pairs {
            seq = seq.add(&FinSuppSeq::indicator(i).scale(v));
        }
        RhoSeq::new(seq)
    }

    #[test]
    fn bounds_for_1_2_2() {
        let b = rho_bounds(&spec(&[1, 2, 2]));
        assert_eq!(b.pinned_degree(), -3);
        assert_eq!(b.pinned_value(), 2);
        assert_eq!(b.interval(-2), (0, 1));
        assert_eq!(b.interval(-1), (0, 0));
        assert_eq!(b.interval(0), (0, 0));
        assert_eq!(b.interval(1), (0, 0));
        assert_eq!(b.interval(5), (0, 0));
        assert_eq!(b.interval(-4), (0, 0));
    }

    #[test]
    fn bounds_for_width_zero() {
        let b = rho_bounds(&spec(&[1]));
        assert_eq!(b.pinned_degree(), -1);
        assert_eq!(b.pinned_value(), 1);
        assert!(b.free_degrees().is_empty());
    }

    #[test]
    fn bounds_for_2_2_2() {
        let b = rho_bounds(&spec(&[2, 2, 2]));
        assert_eq!(b.pinned_value(), 2);
        assert_eq!(b.interval(-2), (0, 1));
        assert_eq!(b.interval(-1), (0, 1));
        assert_eq!(b.interval(0), (0, 0));
        assert_eq!(b.interval(1), (0, 0));
    }

    #[test]
    fn bounds_membership() {
        let s = spec(&[2, 2, 2]);
        let b = rho_bounds(&s);
        assert!(b.contains(&rho_from(&[(-3, 2)])));
        assert!(b.contains(&rho_from(&[(-3, 2), (-2, 1), (-1, 1)])));
        // Wrong pinned value, out-of-range degree, and over-cap all fail.
        assert!(!b.contains(&rho_from(&[(-3, 1)])));
        assert!(!b.contains(&rho_from(&[(-3, 2), (1, 1)])));
        assert!(!b.contains(&rho_from(&[(-3, 2), (-1, 2)])));
        // Every enumerated admissible rho lies within the bounds.
        for (rho, _) in enumerate_admissible(&s) {
            assert!(b.contains(&rho));
        }
    }

    #[test]
    fn theorem_b_examples() {
        let s = spec(&[1, 2, 2]);
        // rho(-2) at its cap would force s(2) = 1: inadmissible here.
        let rho = rho_from(&[(-3, 2), (-2, 1)]);
        let err = check_theorem_b(&s, &rho).unwrap_err();
        assert_eq!(err.degree, -2);
        assert_eq!(err.bad_j, 2);

        // With trailing ones the cap is allowed.
        let s = spec(&[1, 2, 1, 1]);
        let rho = rho_from(&[(-4, 1), (-2, 1)]);
        assert!(check_theorem_b(&s, &rho).is_ok());

        // All free values zero: implication vacuous.
        let s = spec(&[1, 2, 2]);
        let rho = rho_from(&[(-3, 2)]);
        assert!(check_theorem_b(&s, &rho).is_ok());
    }

    #[test]
    fn b_from_hand_values() {
        let s = spec(&[1, 2, 2]);
        let rho = rho_from(&[(-3, 2)]);
        let b = b_from(&s, &rho).unwrap();
        assert_eq!(b.b0(), 0);
        assert_eq!(b.b(1), 1);
        // Forced by the rank identity: 1 + b2 + b0/2 = total rho + 1 = 3.
        assert_eq!(b.b(2), 2);
        rank_degree_identities(&s, &rho, &b).unwrap();
    }

    #[test]
    fn b_from_corollary_case_b() {
        let s = spec(&[2, 2, 2]);
        let rho = rho_from(&[(-3, 2), (-1, 1)]);
        let b = b_from(&s, &rho).unwrap();
        assert_eq!(b.b0(), 2);
        // b1 = rho(-1) + 2 - (s(2) - rho(1)) = 1 + 2 - 2 = 1.
        assert_eq!(b.b(1), 1);
        rank_degree_identities(&s, &rho, &b).unwrap();
    }

    #[test]
    fn width_zero_spectrum_shape() {
        for c2 in 1..=6 {
            let s = spec(&[c2]);
            let rho = rho_from(&[(-1, c2)]);
            let b = b_from(&s, &rho).unwrap();
            assert_eq!(b.b0() / 2, c2 + 1);
            assert_eq!(b.b(1), 0);
            rank_degree_identities(&s, &rho, &b).unwrap();
        }
    }

    #[test]
    fn admissible_for_single_spike() {
        let s = spec(&[1]);
        let pairs = enumerate_admissible(&s);
        assert_eq!(pairs.len(), 1);
        let (rho, b) = &pairs[0];
        assert_eq!(rho.get(-1), 1);
        assert_eq!(b.b0(), 4);
        assert_eq!(b.b(1), 0);
    }

    #[test]
    fn admissible_for_1_2_2_forces_rho_m2_zero() {
        let s = spec(&[1, 2, 2]);
        let pairs = enumerate_admissible(&s);
        assert!(!pairs.is_empty());
        for (rho, _) in &pairs {
            assert_eq!(rho.get(-2), 0, "cap at -2 is excluded by trailing-ones");
        }
    }

    #[test]
    fn identities_hold_exhaustively_to_c2_12() {
        for c2 in 1..=12 {
            for s in crate::spectrum::enumerate(c2) {
                for (rho, b) in enumerate_admissible(&s) {
                    rank_degree_identities(&s, &rho, &b).unwrap_or_else(|e| {
                        panic!("identity failed for {:?} rho={:?}: {:?}", s.tail(), rho, e)
                    });
                }
            }
        }
    }

    #[test]
    fn corollary_consequences_case_a() {
        // s(0) = 1, s(1) >= 2: rho(-1) = 0, rho(0) = s(1) - 2, b0 = 0,
        // b1 = 2 s(1) - 1 - (s(2) - rho(1)).
        for c2 in 1..=15 {
            for s in crate::spectrum::enumerate(c2) {
                if !(s.s(0) == 1 && s.s(1) >= 2) {
                    continue;
                }
                for (rho, b) in enumerate_admissible(&s) {
                    assert_eq!(rho.get(-1), 0, "tail {:?}", s.tail());
                    assert_eq!(rho.get(0), s.s(1) - 2, "tail {:?}", s.tail());
                    assert_eq!(b.b0(), 0, "tail {:?}", s.tail());
                    assert_eq!(b.b(1), 2 * s.s(1) - 1 - (s.s(2) - rho.get(1)));
                }
            }
        }
    }

    #[test]
    fn corollary_consequences_case_b() {
        // s(0) = 2, s(1) = 2, s(2) >= 2: rho(-2) = 0, rho(0) = 0, b0 = 2,
        // b1 <= rho(-1).
        for c2 in 1..=15 {
            for s in crate::spectrum::enumerate(c2) {
                if !(s.s(0) == 2 && s.s(1) == 2 && s.s(2) >= 2) {
                    continue;
                }
                for (rho, b) in enumerate_admissible(&s) {
                    assert_eq!(rho.get(-2), 0, "tail {:?}", s.tail());
                    assert_eq!(rho.get(0), 0, "tail {:?}", s.tail());
                    assert_eq!(b.b0(), 2, "tail {:?}", s.tail());
                    assert!(b.b(1) <= rho.get(-1), "tail {:?}", s.tail());
                }
            }
        }
    }

    #[test]
    fn corollary_consequences_case_c() {
        // Interior plateau s(i) = 2 with s(i+1) >= 2, 2 <= i <= m-1:
        // b_i = 0, rho(-i) = s(i-1) - 2, rho(i) = s(i+1) - 2.
        for c2 in 1..=15 {
            for s in crate::spectrum::enumerate(c2) {
                for i in 2..=s.m() - 1 {
                    if !(s.s(i) == 2 && s.s(i + 1) >= 2) {
                        continue;
                    }
                    for (rho, b) in enumerate_admissible(&s) {
                        assert_eq!(b.b(i), 0, "tail {:?} i={}", s.tail(), i);
                        assert_eq!(rho.get(-i), s.s(i - 1) - 2);
                        assert_eq!(rho.get(i), s.s(i + 1) - 2);
                        assert_eq!(rho.get(i - 1), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn b_support_stays_within_width() {
        for c2 in 1..=10 {
            for s in crate::spectrum::enumerate(c2) {
                for (_, b) in enumerate_admissible(&s) {
                    if let Some(hi) = b.b_plus().support_max() {
                        assert!(hi <= s.m());
                    }
                    assert_eq!(b.b0() % 2, 0, "b0 carries a symplectic form");
                }
            }
        }
    }
}
