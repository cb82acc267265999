//! Spectra of stable rank-2 bundles on `P^3` with `c_1 = 0`.
//!
//! The spectrum is a finite symmetric sequence of nonnegative integers
//! `s(-m), ..., s(m)` attached to such a bundle; it determines `h^1(E(l))`
//! for `l <= -1` and `h^2(E(l))` for `l >= -3`, and its total mass is `c_2`.
//! Only the tail `s(0), ..., s(m)` is stored; symmetry is structural.
//!
//! Three axioms cut out the candidate sequences:
//!
//! * S1 (symmetry) — built into the representation;
//! * S2 (connectedness) — `s(i) >= 1` for `0 <= i <= m`;
//! * S3 (trailing ones) — if `s(i) = 1` for some `i >= 1` then `s(j) = 1`
//!   for all `i <= j <= m`.
//!
//! On top of the axioms, [`Spectrum::obstruction`] evaluates a further
//! necessary condition that holds for every spectrum with `s(0) = 1`,
//! `s(1) = s(2) = 2`: outside one exceptional family, the number of indices
//! `i >= 1` with `s(i) = 1` is at least `sum_{i>=1} max(s(i)-2, 0) - 1`.
//! The smallest sequences failing it have `c_2 = 21`, so axiom-valid
//! sequences exist that are not spectra of any stable bundle.

use crate::seq::FinSuppSeq;
use serde::Serialize;
use thiserror::Error;

/// A validated spectrum tail `s(0), ..., s(m)`, every entry positive.
///
/// ```
/// use spectra::spectrum::{Spectrum, ObstructionVerdict};
///
/// let s = Spectrum::from_tail(&[1, 2, 2, 4, 2]).unwrap();
/// assert_eq!(s.c2(), 21);
/// assert_eq!(s.h1_table(-1).unwrap() - s.h2_table(-1).unwrap(), 21);
/// assert_eq!(s.obstruction(), ObstructionVerdict::Violated);
/// ```
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Spectrum {
    tail: Vec<i64>,
}

/// Axiom failures reported by [`Spectrum::validate`].
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum AxiomViolation {
    #[error("value {value} at index {index} is negative; spectra are nonnegative")]
    NegativeValue { index: i64, value: i64 },
    #[error("support at negative index {index}; only the tail i >= 0 may be given")]
    NegativeSupport { index: i64 },
    #[error("S2 violated: gap at i={index} inside the support")]
    Disconnected { index: i64 },
    #[error("S3 violated at i={one_at}: s({one_at})=1 but s({bad_at})={bad_value}")]
    TrailingNotOne {
        one_at: i64,
        bad_at: i64,
        bad_value: i64,
    },
}

/// Verdict of the count-of-ones necessary condition.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ObstructionVerdict {
    /// The hypotheses `s(0) = 1`, `s(1) = 2`, `s(2) = 2` do not hold, so the
    /// condition asserts nothing.
    NotApplicable,
    /// The exceptional family `s = (1, 2, ..., 2, s(m))` with `m >= 3` and
    /// `s(m) >= 4`, exempt from the inequality.
    ExceptionCase,
    /// Hypotheses hold and the inequality is satisfied.
    Satisfied,
    /// Hypotheses hold, the sequence is not exceptional, and the inequality
    /// fails: no stable bundle has this spectrum.
    Violated,
}

impl std::fmt::Display for ObstructionVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ObstructionVerdict::NotApplicable => "not-applicable",
            ObstructionVerdict::ExceptionCase => "exception-case",
            ObstructionVerdict::Satisfied => "satisfied",
            ObstructionVerdict::Violated => "violated",
        };
        f.write_str(s)
    }
}

/// Range error for the cohomology tables, which are only defined on the
/// stated twists.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Error)]
#[error("twist l={l} outside the validity range ({what} requires {range})")]
pub struct TableRangeError {
    pub l: i64,
    pub what: &'static str,
    pub range: &'static str,
}

impl Spectrum {
    /// Checks the axioms on a candidate tail. On failure every violated axiom
    /// is reported with the offending index.
    pub fn validate(tail: &FinSuppSeq) -> Result<Spectrum, Vec<AxiomViolation>> {
        let mut violations = Vec::new();
        for (i, v) in tail.iter() {
            if v < 0 {
                violations.push(AxiomViolation::NegativeValue { index: i, value: v });
            }
            if i < 0 && v != 0 {
                violations.push(AxiomViolation::NegativeSupport { index: i });
            }
        }
        match tail.support_max() {
            None => violations.push(AxiomViolation::Disconnected { index: 0 }),
            Some(m) => {
                for i in 0..=m {
                    if tail.get(i) == 0 {
                        violations.push(AxiomViolation::Disconnected { index: i });
                    }
                }
                // S3: after a 1 at i >= 1 everything up to m stays 1.
                for i in 1..=m {
                    if tail.get(i) == 1 {
                        if let Some(j) = (i + 1..=m).find(|&j| tail.get(j) > 1) {
                            violations.push(AxiomViolation::TrailingNotOne {
                                one_at: i,
                                bad_at: j,
                                bad_value: tail.get(j),
                            });
                        }
                        break;
                    }
                }
            }
        }
        if violations.is_empty() {
            let m = tail.support_max().unwrap();
            Ok(Spectrum {
                tail: (0..=m).map(|i| tail.get(i)).collect(),
            })
        } else {
            Err(violations)
        }
    }

    /// Convenience wrapper over [`Spectrum::validate`] for literal tails.
    pub fn from_tail(tail: &[i64]) -> Result<Spectrum, Vec<AxiomViolation>> {
        Self::validate(&FinSuppSeq::from_tail(tail))
    }

    /// Width: the largest index with `s(m) != 0`.
    pub fn m(&self) -> i64 {
        self.tail.len() as i64 - 1
    }

    /// Symmetric extension `s(i) = s(|i|)`, zero beyond the width.
    pub fn s(&self, i: i64) -> i64 {
        let k = i.unsigned_abs() as usize;
        self.tail.get(k).copied().unwrap_or(0)
    }

    pub fn tail(&self) -> &[i64] {
        &self.tail
    }

    pub fn tail_seq(&self) -> FinSuppSeq {
        FinSuppSeq::from_tail(&self.tail)
    }

    /// Second Chern class: `s(0) + 2 * sum_{i>=1} s(i)`.
    pub fn c2(&self) -> i64 {
        self.tail[0] + 2 * self.tail[1..].iter().sum::<i64>()
    }

    /// `h^1(E(l))` for `l <= -1`, read off the symmetrized spectrum:
    /// `sum_i s(i) * h0(O_P1(i + l + 1))`.
    pub fn h1_table(&self, l: i64) -> Result<i64, TableRangeError> {
        if l > -1 {
            return Err(TableRangeError {
                l,
                what: "h1",
                range: "l <= -1",
            });
        }
        let m = self.m();
        Ok((-m..=m).map(|i| self.s(i) * (i + l + 2).max(0)).sum())
    }

    /// `h^2(E(l))` for `l >= -3`: `sum_i s(i) * h1(O_P1(i + l + 1))`.
    pub fn h2_table(&self, l: i64) -> Result<i64, TableRangeError> {
        if l < -3 {
            return Err(TableRangeError {
                l,
                what: "h2",
                range: "l >= -3",
            });
        }
        let m = self.m();
        Ok((-m..=m).map(|i| self.s(i) * (-i - l - 2).max(0)).sum())
    }

    /// Evaluates the count-of-ones condition. The exceptional family is
    /// checked before the inequality because it is exempt from it.
    pub fn obstruction(&self) -> ObstructionVerdict {
        if !(self.s(0) == 1 && self.s(1) == 2 && self.s(2) == 2) {
            return ObstructionVerdict::NotApplicable;
        }
        let m = self.m();
        if m >= 3 && (1..m).all(|i| self.s(i) == 2) && self.s(m) >= 4 {
            return ObstructionVerdict::ExceptionCase;
        }
        let ones = (1..=m).filter(|&i| self.s(i) == 1).count() as i64;
        let excess: i64 = (1..=m).map(|i| (self.s(i) - 2).max(0)).sum();
        if ones >= excess - 1 {
            ObstructionVerdict::Satisfied
        } else {
            ObstructionVerdict::Violated
        }
    }
}

/// All valid spectra with the given `c_2`, in lexicographic order of tails.
///
/// Iterates over `s(0)` with the parity of `c_2`, then over connected tails
/// with budget `(c_2 - s(0)) / 2`, pruning by S3: once an entry equals 1 the
/// rest of the tail is forced to 1.
///
/// ```
/// let tails: Vec<_> = spectra::spectrum::enumerate(4)
///     .into_iter()
///     .map(|s| s.tail().to_vec())
///     .collect();
/// assert_eq!(tails, vec![vec![2, 1], vec![4]]);
/// ```
pub fn enumerate(c2: i64) -> Vec<Spectrum> {
    assert!(c2 >= 1, "c2 must be >= 1, got {c2}");
    let mut out = Vec::new();
    let start = if c2 % 2 == 0 { 2 } else { 1 };
    for s0 in (start..=c2).step_by(2) {
        let budget = (c2 - s0) / 2;
        let mut tail = vec![s0];
        extend_tails(budget, &mut tail, &mut out);
    }
    out.sort_by(|a, b| a.tail.cmp(&b.tail));
    out
}

fn extend_tails(budget: i64, tail: &mut Vec<i64>, out: &mut Vec<Spectrum>) {
    if budget == 0 {
        out.push(Spectrum { tail: tail.clone() });
        return;
    }
    // Entry 1 freezes the rest of the tail at 1 (S3), consuming the budget.
    let mut frozen = tail.clone();
    frozen.extend(std::iter::repeat_n(1, budget as usize));
    out.push(Spectrum { tail: frozen });
    for v in 2..=budget {
        tail.push(v);
        extend_tails(budget - v, tail, out);
        tail.pop();
    }
}

/// One enumerated spectrum with its verdicts, as exposed on the CLI.
#[derive(Clone, Debug, Serialize)]
pub struct SpectrumRecord {
    pub tail: Vec<i64>,
    pub c2: i64,
    pub m: i64,
    pub verdicts: Verdicts,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdicts {
    pub axioms: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<ObstructionVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curve_matches: Option<usize>,
}

impl SpectrumRecord {
    pub fn new(s: &Spectrum) -> Self {
        SpectrumRecord {
            tail: s.tail().to_vec(),
            c2: s.c2(),
            m: s.m(),
            verdicts: Verdicts {
                axioms: "ok".to_string(),
                obstruction: None,
                curve_matches: None,
            },
        }
    }

    pub fn with_obstruction(mut self, v: ObstructionVerdict) -> Self {
        self.verdicts.obstruction = Some(v);
        self
    }
}

/// For each `c2 <= c2_max`, every spectrum whose obstruction verdict is
/// `Violated`. The verdicts are recomputed, never hard-coded, so the table
/// reflects the actual exclusion set.
pub fn violated_spectra(c2_max: i64) -> Vec<Spectrum> {
    assert!(c2_max >= 1, "c2_max must be >= 1, got {c2_max}");
    let mut out = Vec::new();
    for c2 in 1..=c2_max {
        for s in enumerate(c2) {
            if s.obstruction() == ObstructionVerdict::Violated {
                out.push(s);
            }
        }
    }
    out
}
