//! Finitely supported integer sequences and their difference calculus.
//!
//! A [`FinSuppSeq`] is a function `Z -> Z` that vanishes outside a finite
//! window. It is the common carrier for Hilbert-function data: `h0_X`, its
//! second difference, spectra, generator-degree sequences and monad splitting
//! types all live here. The two workhorses are the difference operator
//! `(delta f)(i) = f(i) - f(i-1)` and its two-fold inverse [`FinSuppSeq::cumsum2_at`],
//! which reconstructs a Hilbert function from its second difference.

use serde::{Deserialize, Serialize};

/// A finitely supported function `Z -> Z`, stored dense over its support.
///
/// Canonical form: the first and last stored values are nonzero; the zero
/// sequence stores nothing. Two sequences are equal iff they agree at every
/// integer index, which on canonical representatives is structural equality.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "RawSeq")]
pub struct FinSuppSeq {
    offset: i64,
    values: Vec<i64>,
}

#[derive(Deserialize)]
struct RawSeq {
    offset: i64,
    values: Vec<i64>,
}

impl From<RawSeq> for FinSuppSeq {
    fn from(raw: RawSeq) -> Self {
        FinSuppSeq::new(raw.offset, raw.values)
    }
}

impl FinSuppSeq {
    /// Builds the sequence with `values[k]` placed at index `offset + k`,
    /// trimming zero margins so the representation is canonical.
    pub fn new(offset: i64, mut values: Vec<i64>) -> Self {
        let leading = values.iter().take_while(|v| **v == 0).count();
        values.drain(..leading);
        while values.last() == Some(&0) {
            values.pop();
        }
        if values.is_empty() {
            return FinSuppSeq { offset: 0, values };
        }
        FinSuppSeq {
            offset: offset + leading as i64,
            values,
        }
    }

    pub fn zero() -> Self {
        FinSuppSeq {
            offset: 0,
            values: Vec::new(),
        }
    }

    /// Sequence supported on `i >= 0` with the given values at `0, 1, ...`.
    pub fn from_tail(values: &[i64]) -> Self {
        Self::new(0, values.to_vec())
    }

    /// The characteristic function of `{i}`.
    pub fn indicator(i: i64) -> Self {
        Self::new(i, vec![1])
    }

    pub fn get(&self, i: i64) -> i64 {
        if i < self.offset {
            return 0;
        }
        let k = (i - self.offset) as usize;
        self.values.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Smallest index with a nonzero value, if any.
    pub fn support_min(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.offset)
    }

    /// Largest index with a nonzero value, if any.
    pub fn support_max(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.offset + self.values.len() as i64 - 1)
    }

    /// Iterates over the stored window as `(index, value)` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(move |(k, v)| (self.offset + k as i64, *v))
    }

    /// First difference `g(i) = f(i) - f(i-1)`.
    pub fn delta(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let n = self.values.len();
        let mut out = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let cur = if k < n { self.values[k] } else { 0 };
            let prev = if k > 0 { self.values[k - 1] } else { 0 };
            out.push(cur - prev);
        }
        Self::new(self.offset, out)
    }

    /// Second difference.
    pub fn delta2(&self) -> Self {
        self.delta().delta()
    }

    /// Value at `i` of the unique `f` with `delta2(f) = self` and `f` vanishing
    /// far to the left. `f` is not finitely supported, so only pointwise
    /// evaluation is offered.
    pub fn cumsum2_at(&self, i: i64) -> i64 {
        self.iter()
            .filter(|(k, _)| *k <= i)
            .map(|(k, v)| v * (i - k + 1))
            .sum()
    }

    /// Window evaluation of the second antidifference on `lo..=hi`.
    pub fn cumsum2_window(&self, lo: i64, hi: i64) -> Vec<i64> {
        assert!(lo <= hi, "empty window");
        (lo..=hi).map(|i| self.cumsum2_at(i)).collect()
    }

    /// Sum of all values.
    pub fn mass(&self) -> i64 {
        self.values.iter().sum()
    }

    /// Sequence `i -> f(i - k)`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self::new(self.offset + k, self.values.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(other.offset);
        let hi = (self.offset + self.values.len() as i64)
            .max(other.offset + other.values.len() as i64);
        let vals = (lo..hi).map(|i| self.get(i) + other.get(i)).collect();
        Self::new(lo, vals)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::new(self.offset, self.values.iter().map(|v| v * k).collect())
    }

    /// Reflects the positive part onto negative indices: the result takes the
    /// value `f(i)` at `i >= 0` and `f(-i)` at `i < 0`. Whatever the input held
    /// at negative indices is discarded.
    pub fn symmetrize(&self) -> Self {
        let hi = self.support_max().unwrap_or(0).max(0);
        let vals = (-hi..=hi).map(|i| self.get(i.abs())).collect();
        Self::new(-hi, vals)
    }
}

impl std::fmt::Debug for FinSuppSeq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "seq[0]");
        }
        write!(f, "seq[{}: {:?}]", self.offset, self.values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn delta_of_zero_is_zero() {
        assert_eq!(FinSuppSeq::zero().delta(), FinSuppSeq::zero());
    }

    #[test]
    fn delta_of_step_window() {
        // f with values (1,1,1) at 0..2 telescopes to (1,0,0,-1) at 0..3.
        let f = FinSuppSeq::from_tail(&[1, 1, 1]);
        let g = f.delta();
        assert_eq!(g, FinSuppSeq::new(0, vec![1, 0, 0, -1]));
    }

    #[test]
    fn delta2_of_p1_sections_concentrates() {
        // f(l) = h0(O_P1(i+l+1)) has second difference 1 at l = -i-1, 0 elsewhere.
        // Window [-i-2, K] evaluated exactly; interior of the window checked.
        for i in -3i64..=3 {
            let lo = -i - 2;
            let hi = 8;
            let vals: Vec<i64> = (lo..=hi).map(|l| (i + l + 1 + 1).max(0)).collect();
            let f = FinSuppSeq::new(lo, vals);
            let d2 = f.delta2();
            for j in lo + 2..=hi {
                let expected = if j == -i - 1 { 1 } else { 0 };
                assert_eq!(d2.get(j), expected, "i={i} j={j}");
            }
        }
    }

    #[test]
    fn delta2_of_conic_window_interior() {
        // h0 of a plane conic: h0(O_P2(i)) - h0(O_P2(i-2)) = 2i+1, i >= 0.
        let binom2 = |t: i64| if t >= 0 { (t + 2) * (t + 1) / 2 } else { 0 };
        let vals: Vec<i64> = (0..=5).map(|i| binom2(i) - binom2(i - 2)).collect();
        assert_eq!(&vals[..4], &[1, 3, 5, 7]);
        let f = FinSuppSeq::new(0, vals);
        let d2 = f.delta2();
        assert_eq!(d2.get(0), 1);
        assert_eq!(d2.get(1), 1);
        for j in 2..=5 {
            assert_eq!(d2.get(j), 0);
        }
    }

    #[test]
    fn constant_window_artifacts_only_at_edge() {
        let f = FinSuppSeq::new(3, vec![5, 5, 5, 5]);
        let d2 = f.delta2();
        assert_eq!(d2.get(3), 5);
        assert_eq!(d2.get(4), -5);
        assert_eq!(d2.get(5), 0);
        assert_eq!(d2.get(6), 0);
    }

    #[test]
    fn cumsum2_single_spike() {
        let g = FinSuppSeq::indicator(0);
        for i in 0..6 {
            assert_eq!(g.cumsum2_at(i), i + 1);
        }
        assert_eq!(g.cumsum2_at(-1), 0);
    }

    #[test]
    fn cumsum2_quadric_divisor_profile() {
        // Delta^2 h0 of a (2,3) divisor on a quadric, reconstructed h0 values.
        let g = FinSuppSeq::from_tail(&[1, 2, 2]);
        assert_eq!(g.cumsum2_window(0, 4), vec![1, 4, 9, 14, 19]);
    }

    #[test]
    fn cumsum2_slope_is_mass() {
        let g = FinSuppSeq::from_tail(&[1, 3, 2, 1]);
        let hi = 30;
        assert_eq!(
            g.cumsum2_at(hi + 1) - g.cumsum2_at(hi),
            g.mass(),
            "large-degree slope equals total mass"
        );
    }

    #[test]
    fn mass_and_symmetrize() {
        let f = FinSuppSeq::from_tail(&[1, 2, 2]);
        assert_eq!(f.mass(), 5);
        let s = FinSuppSeq::from_tail(&[1, 2]).symmetrize();
        assert_eq!(s, FinSuppSeq::new(-1, vec![2, 1, 2]));
        // mass of the symmetrization is s(0) + 2 * sum_{i>=1} s(i)
        assert_eq!(s.mass(), 1 + 2 * 2);
    }

    #[test]
    fn canonicalization_trims_margins() {
        let f = FinSuppSeq::new(-2, vec![0, 0, 3, 1, 0]);
        assert_eq!(f.offset(), 0);
        assert_eq!(f.values(), &[3, 1]);
        assert_eq!(f, FinSuppSeq::from_tail(&[3, 1]));
    }

    #[test]
    fn json_round_trip_canonicalizes() {
        let f: FinSuppSeq = serde_json::from_str(r#"{"offset":-1,"values":[0,4,0]}"#).unwrap();
        assert_eq!(f, FinSuppSeq::from_tail(&[4]));
        assert_eq!(
            serde_json::to_string(&f).unwrap(),
            r#"{"offset":0,"values":[4]}"#
        );
    }

    fn arb_seq() -> impl Strategy<Value = FinSuppSeq> {
        (-6i64..6, proptest::collection::vec(-9i64..10, 0..12))
            .prop_map(|(off, vals)| FinSuppSeq::new(off, vals))
    }

    proptest! {
        #[test]
        fn delta_then_cumsum_inverts(f in arb_seq()) {
            // cumsum2(delta2(f)) = f pointwise for f vanishing far left.
            let d2 = f.delta2();
            for i in -20..20 {
                prop_assert_eq!(d2.cumsum2_at(i), f.get(i));
            }
        }

        #[test]
        fn delta_has_zero_mass(f in arb_seq()) {
            prop_assert_eq!(f.delta().mass(), 0);
        }

        #[test]
        fn mass_is_additive(f in arb_seq(), g in arb_seq()) {
            prop_assert_eq!(f.add(&g).mass(), f.mass() + g.mass());
        }

        #[test]
        fn add_is_pointwise(f in arb_seq(), g in arb_seq()) {
            let h = f.add(&g);
            for i in -25..25 {
                prop_assert_eq!(h.get(i), f.get(i) + g.get(i));
            }
        }

        #[test]
        fn canonical_is_idempotent(f in arb_seq()) {
            let again = FinSuppSeq::new(f.offset(), f.values().to_vec());
            prop_assert_eq!(&again, &f);
        }

        #[test]
        fn symmetrize_reflects(f in arb_seq()) {
            let s = f.symmetrize();
            for i in 0..20 {
                prop_assert_eq!(s.get(i), f.get(i));
                prop_assert_eq!(s.get(-i), f.get(i));
            }
        }
    }
}
