//! Second-difference Hilbert functions of space curves lying on a quadric.
//!
//! A curve `X` in `P^3` with `h^0(I_X(2)) != 0` sits on a nonsingular quadric,
//! a quadric cone, a union of two planes, or a double plane. For each case the
//! function `i -> delta^2 h^0(O_X(i))` has a closed form, and these profiles
//! are exactly the candidate spectra produced by curves: if `E(c)` has a
//! section vanishing on a double structure over `X` (with the appropriate
//! `H^1` vanishing), then `s(i) = (delta^2 h^0_X)(i + c - 1)` for `i >= 0`.
//!
//! [`CurveFamily::delta2_h0`] evaluates the closed forms on their stated
//! domains. Two independent routes cross-check them: [`delta2_from_acm`]
//! recomputes the profile of an arithmetically Cohen-Macaulay curve from the
//! degrees of a free resolution of its ideal, and [`double_plane_h0`] counts
//! sections of a double-plane curve directly from binomial coefficients.
//! [`tail_search`] then answers the converse question: which families, if
//! any, reproduce a given candidate tail.

use crate::seq::FinSuppSeq;
use crate::spectrum::{AxiomViolation, Spectrum};
use serde::Serialize;
use thiserror::Error;

/// Tagged parameterization of the curve families with closed-form profiles.
///
/// ```
/// use spectra::curves::CurveFamily;
/// use spectra::seq::FinSuppSeq;
///
/// let f = CurveFamily::QuadricDivisor { a: 2, b: 3 };
/// let d2 = f.delta2_h0().unwrap();
/// assert_eq!(d2, FinSuppSeq::from_tail(&[1, 2, 2]));
/// assert_eq!(d2.mass(), f.degree());
/// ```
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "family")]
pub enum CurveFamily {
    /// Divisor of type `(a, b)` on a nonsingular quadric surface.
    QuadricDivisor { a: i64, b: i64 },
    /// Curve of degree `d` on a quadric cone.
    ConeCurve { d: i64 },
    /// Union of plane curves of degrees `d0 <= d1` in two distinct planes,
    /// meeting in a length-`r` scheme on the common line, which is not a
    /// component.
    TwoPlanesNoLine { d0: i64, d1: i64, r: i64 },
    /// Curve in two planes having the common line as a component; the curve
    /// is either the maximal ACM curve of its exponents or that curve plus a
    /// structure contributing one section in degree `mneg`.
    TwoPlanesWithLine {
        r0: i64,
        d0: i64,
        r1: i64,
        d1: i64,
        variant: TwoPlanesVariant,
    },
    /// Curve in a double plane, described by plane curves `C0 <= C` of
    /// degrees `r0 <= r` and a point scheme with standard-resolution data
    /// `(sigma, lambda_1 < ... < lambda_sigma)` inside `C0`. Requires
    /// `r0 > d_sigma` so that `H^1(I_X) = 0`.
    DoublePlane {
        sigma: i64,
        lambdas: Vec<i64>,
        r0: i64,
        r: i64,
    },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum TwoPlanesVariant {
    /// The maximal ACM curve with the given exponents.
    Xpp,
    /// ACM curve of exponents `r_i - 1` plus a line structure adding one
    /// section in degree `mneg >= 1`.
    XprimePlusLine { mneg: i64 },
}

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum CurveError {
    #[error("quadric divisor needs 1 <= a <= b, got a={a}, b={b}")]
    BadQuadric { a: i64, b: i64 },
    #[error("cone curve needs d >= 1, got {d}")]
    BadCone { d: i64 },
    #[error("two-planes curve needs 1 <= r <= d0 <= d1, got d0={d0}, d1={d1}, r={r}")]
    BadTwoPlanes { d0: i64, d1: i64, r: i64 },
    #[error("two-planes-with-line parameters out of range: r0={r0}, d0={d0}, r1={r1}, d1={d1}")]
    BadTwoPlanesLine { r0: i64, d0: i64, r1: i64, d1: i64 },
    #[error("mneg={mneg} invalid: need mneg >= 1 and either mneg = r1+d1 or mneg <= r0+d0")]
    BadLineDegree { mneg: i64 },
    #[error("double-plane lambdas must be strictly increasing positive, got {lambdas:?}")]
    BadLambdas { lambdas: Vec<i64> },
    #[error("double plane needs r0 > d_sigma = {d_sigma} (else H^1(I_X) != 0), got r0={r0}")]
    UnsaturatedDoublePlane { r0: i64, d_sigma: i64 },
    #[error("double plane needs r >= r0, got r={r}, r0={r0}")]
    BadDoublePlaneDegrees { r: i64, r0: i64 },
}

impl CurveFamily {
    pub fn validate(&self) -> Result<(), CurveError> {
        match self {
            CurveFamily::QuadricDivisor { a, b } => {
                // a = 0 is rejected: the closed form's i = 0 and i = a clauses
                // collide and the disjoint-line case has H^1(I_X) != 0.
                if *a < 1 || b < a {
                    return Err(CurveError::BadQuadric { a: *a, b: *b });
                }
            }
            CurveFamily::ConeCurve { d } => {
                if *d < 1 {
                    return Err(CurveError::BadCone { d: *d });
                }
            }
            CurveFamily::TwoPlanesNoLine { d0, d1, r } => {
                if *d0 < 1 || d1 < d0 || *r < 1 || r > d0 {
                    return Err(CurveError::BadTwoPlanes {
                        d0: *d0,
                        d1: *d1,
                        r: *r,
                    });
                }
            }
            CurveFamily::TwoPlanesWithLine {
                r0,
                d0,
                r1,
                d1,
                variant,
            } => {
                if *d0 < 1 || *d1 < 1 || *r0 < 0 || *r1 < 0 || r0 + d0 > r1 + d1 {
                    return Err(CurveError::BadTwoPlanesLine {
                        r0: *r0,
                        d0: *d0,
                        r1: *r1,
                        d1: *d1,
                    });
                }
                if let TwoPlanesVariant::XprimePlusLine { mneg } = variant {
                    if *r0 < 1 || *r1 < 1 {
                        return Err(CurveError::BadTwoPlanesLine {
                            r0: *r0,
                            d0: *d0,
                            r1: *r1,
                            d1: *d1,
                        });
                    }
                    // mneg >= 1 keeps H^1(I_X) = 0; the quotient structure
                    // only allows the extreme degree or anything at most the
                    // smaller one.
                    if *mneg < 1 || !(*mneg == r1 + d1 || *mneg <= r0 + d0) {
                        return Err(CurveError::BadLineDegree { mneg: *mneg });
                    }
                }
            }
            CurveFamily::DoublePlane {
                sigma,
                lambdas,
                r0,
                r,
            } => {
                let increasing = lambdas.windows(2).all(|w| w[0] < w[1]);
                if *sigma < 1
                    || lambdas.len() != *sigma as usize
                    || lambdas.first().is_some_and(|&l| l < 1)
                    || !increasing
                {
                    return Err(CurveError::BadLambdas {
                        lambdas: lambdas.clone(),
                    });
                }
                let d_sigma = *lambdas.last().unwrap();
                if r0 <= &d_sigma {
                    return Err(CurveError::UnsaturatedDoublePlane {
                        r0: *r0,
                        d_sigma,
                    });
                }
                if r < r0 {
                    return Err(CurveError::BadDoublePlaneDegrees { r: *r, r0: *r0 });
                }
            }
        }
        Ok(())
    }

    /// The closed-form second difference of `i -> h^0(O_X(i))`.
    pub fn delta2_h0(&self) -> Result<FinSuppSeq, CurveError> {
        self.validate()?;
        Ok(match self {
            CurveFamily::QuadricDivisor { a, b } => quadric_profile(*a, *b),
            CurveFamily::ConeCurve { d } => {
                // Even degree 2m: complete intersection, profile of type
                // (m, m); odd degree 2m-1: linked to a line, type (m-1, m).
                if d % 2 == 0 {
                    quadric_profile(d / 2, d / 2)
                } else {
                    let m = (d + 1) / 2;
                    quadric_profile(m - 1, m)
                }
            }
            CurveFamily::TwoPlanesNoLine { d0, d1, r } => {
                two_plane_base(*d0, *d1).add(&FinSuppSeq::indicator(*r))
            }
            CurveFamily::TwoPlanesWithLine {
                r0,
                d0,
                r1,
                d1,
                variant,
            } => match variant {
                TwoPlanesVariant::Xpp => xpp_profile(r0 + d0, r1 + d1),
                TwoPlanesVariant::XprimePlusLine { mneg } => {
                    xpp_profile(r0 - 1 + d0, r1 - 1 + d1).add(&FinSuppSeq::indicator(*mneg))
                }
            },
            CurveFamily::DoublePlane {
                sigma,
                lambdas,
                r0,
                r,
            } => {
                let ds: Vec<i64> = lambdas
                    .iter()
                    .enumerate()
                    .map(|(k, l)| sigma - (k as i64 + 1) + l)
                    .collect();
                let mut vals = vec![1i64];
                for i in 1..=r0 - sigma {
                    let card = ds.iter().filter(|&&d| d == r0 - i).count() as i64;
                    vals.push(2 + card);
                }
                for _i in r0 - sigma + 1..*r {
                    vals.push(1);
                }
                FinSuppSeq::new(0, vals)
            }
        })
    }

    /// Degree of the curve, computed from the parameters (not from the
    /// profile, so the mass law is a real check).
    pub fn degree(&self) -> i64 {
        match self {
            CurveFamily::QuadricDivisor { a, b } => a + b,
            CurveFamily::ConeCurve { d } => *d,
            CurveFamily::TwoPlanesNoLine { d0, d1, .. } => d0 + d1,
            CurveFamily::TwoPlanesWithLine {
                r0,
                d0,
                r1,
                d1,
                variant,
            } => {
                // The plane parts have degrees r_i + d_i plus the common line;
                // the X' variant drops one from each exponent and adds the
                // extra line structure back.
                match variant {
                    TwoPlanesVariant::Xpp => r0 + d0 + r1 + d1 + 1,
                    TwoPlanesVariant::XprimePlusLine { .. } => r0 + d0 + r1 + d1,
                }
            }
            CurveFamily::DoublePlane { r0, r, .. } => r0 + r,
        }
    }
}

/// Profile of a type-`(a, b)` divisor: `1, 2, ..., 2, b-a+1` supported on
/// `[0, a]`. The internal `a = 0` case (disjoint rulings) is only reachable
/// from degree-one cone curves, where it degenerates to a single line.
fn quadric_profile(a: i64, b: i64) -> FinSuppSeq {
    if a == 0 {
        return FinSuppSeq::new(0, vec![b]);
    }
    let mut vals = vec![1i64];
    vals.extend(std::iter::repeat_n(2, (a - 1) as usize));
    vals.push(b - a + 1);
    FinSuppSeq::new(0, vals)
}

/// `1; 2 for 1 <= i < d0; 1 for d0 <= i < d1` — the profile of two plane
/// curves glued along points, before the gluing correction at `i = r`.
fn two_plane_base(d0: i64, d1: i64) -> FinSuppSeq {
    let mut vals = vec![1i64];
    for i in 1..d1 {
        vals.push(if i < d0 { 2 } else { 1 });
    }
    FinSuppSeq::new(0, vals)
}

/// `1; 2 for 1 <= i <= e0; 1 for e0 < i <= e1` with `e_i = r_i + d_i`.
fn xpp_profile(e0: i64, e1: i64) -> FinSuppSeq {
    let mut vals = vec![1i64];
    for i in 1..=e1 {
        vals.push(if i <= e0 { 2 } else { 1 });
    }
    FinSuppSeq::new(0, vals)
}

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum AcmError {
    #[error("a curve resolution needs #syzygies = #generators - 1, got {gens} and {syz}")]
    SizeMismatch { gens: usize, syz: usize },
    #[error("twist mismatch: generator degrees sum to {gen_sum}, syzygies to {syz_sum}")]
    TwistMismatch { gen_sum: i64, syz_sum: i64 },
    #[error("resolution encodes degree {degree}, below 1")]
    NonpositiveDegree { degree: i64 },
}

/// Profile of an arithmetically Cohen-Macaulay curve from the degrees of a
/// free resolution `0 -> A -> B -> I_X -> 0`: restricting to a line,
/// `delta^2 h^0(i) = h^0(O_L(i)) - sum_g h^0(O_L(i-g)) + sum_y h^0(O_L(i-y))`.
pub fn delta2_from_acm(gen_degrees: &[i64], syz_degrees: &[i64]) -> Result<FinSuppSeq, AcmError> {
    if syz_degrees.len() + 1 != gen_degrees.len() {
        return Err(AcmError::SizeMismatch {
            gens: gen_degrees.len(),
            syz: syz_degrees.len(),
        });
    }
    let gen_sum: i64 = gen_degrees.iter().sum();
    let syz_sum: i64 = syz_degrees.iter().sum();
    if gen_sum != syz_sum {
        return Err(AcmError::TwistMismatch { gen_sum, syz_sum });
    }
    let degree: i64 = (syz_degrees.iter().map(|y| y * y).sum::<i64>()
        - gen_degrees.iter().map(|g| g * g).sum::<i64>())
        / 2;
    if degree < 1 {
        return Err(AcmError::NonpositiveDegree { degree });
    }
    let h0_line = |t: i64| (t + 1).max(0);
    let hi = gen_degrees
        .iter()
        .chain(syz_degrees)
        .copied()
        .max()
        .unwrap_or(0);
    let vals = (0..=hi + 1)
        .map(|i| {
            h0_line(i) - gen_degrees.iter().map(|g| h0_line(i - g)).sum::<i64>()
                + syz_degrees.iter().map(|y| h0_line(i - y)).sum::<i64>()
        })
        .collect();
    Ok(FinSuppSeq::new(0, vals))
}

/// Gluing formula for `X = X_0 ∪ X_1` meeting in a length-`r` scheme on a
/// line: the profile is the pointwise sum corrected by `-1` at `0` and `+1`
/// at `r`. The caller asserts the `H^1` vanishing hypotheses.
pub fn glue(f0: &FinSuppSeq, f1: &FinSuppSeq, r: i64) -> FinSuppSeq {
    assert!(r >= 1, "intersection length must be >= 1");
    f0.add(f1)
        .add(&FinSuppSeq::indicator(0).scale(-1))
        .add(&FinSuppSeq::indicator(r))
}

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum CurveSpectrumError {
    #[error("profile has support below 0")]
    NegativeSupport,
    #[error("tail {tail:?} fails the spectrum axioms: {violations:?}")]
    InvalidTail {
        tail: Vec<i64>,
        violations: Vec<AxiomViolation>,
    },
}

/// Tail read off a curve profile at twist `c`: `t(i) = d2(i + c - 1)`.
pub fn curve_tail(c: i64, d2: &FinSuppSeq) -> FinSuppSeq {
    let hi = d2.support_max().unwrap_or(0);
    FinSuppSeq::new(0, (0..=hi).map(|i| d2.get(i + c - 1)).collect())
}

/// Spectrum of a bundle whose twist-`c` section vanishes on a double
/// structure over a curve with profile `d2`; the tail is validated and
/// invalid results are reported, not dropped.
pub fn spectrum_from_curve(c: i64, d2: &FinSuppSeq) -> Result<Spectrum, CurveSpectrumError> {
    assert!(c >= 1, "twist must be >= 1");
    if d2.support_min().unwrap_or(0) < 0 {
        return Err(CurveSpectrumError::NegativeSupport);
    }
    let tail = curve_tail(c, d2);
    Spectrum::validate(&tail).map_err(|violations| CurveSpectrumError::InvalidTail {
        tail: tail.iter().map(|(_, v)| v).collect(),
        violations,
    })
}

/// Spectrum in the `s(0) = 2` regime: the leading value is pinned to 2 and
/// the rest is the profile of the inner curve `X'`.
pub fn spectrum_from_xprime(d2: &FinSuppSeq) -> Result<Spectrum, CurveSpectrumError> {
    if d2.support_min().unwrap_or(0) < 0 {
        return Err(CurveSpectrumError::NegativeSupport);
    }
    let hi = d2.support_max().unwrap_or(0).max(0);
    let mut vals = vec![2i64];
    vals.extend((1..=hi).map(|i| d2.get(i)));
    let tail = FinSuppSeq::new(0, vals);
    Spectrum::validate(&tail).map_err(|violations| CurveSpectrumError::InvalidTail {
        tail: tail.iter().map(|(_, v)| v).collect(),
        violations,
    })
}

/// How a family reproduces a tail: via the twist-`c` bridge or via the
/// pinned `s(0) = 2` bridge.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum MatchRoute {
    Twist(i64),
    XPrime,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TailMatch {
    #[serde(flatten)]
    pub family: CurveFamily,
    pub route: MatchRoute,
}

/// All family instances of degree up to `max_c2`, in a fixed canonical order
/// (quadric, cone, two planes, two planes with line, double plane; parameters
/// lexicographic).
pub fn enumerate_families(max_degree: i64) -> Vec<CurveFamily> {
    let mut out = Vec::new();
    for a in 1..=max_degree / 2 {
        for b in a..=max_degree - a {
            out.push(CurveFamily::QuadricDivisor { a, b });
        }
    }
    for d in 1..=max_degree {
        out.push(CurveFamily::ConeCurve { d });
    }
    for d0 in 1..=max_degree / 2 {
        for d1 in d0..=max_degree - d0 {
            for r in 1..=d0 {
                out.push(CurveFamily::TwoPlanesNoLine { d0, d1, r });
            }
        }
    }
    // Two planes with the common line as a component. Total degrees:
    // Xpp variant r0+d0+r1+d1+1, line variant r0+d0+r1+d1.
    for r0 in 0..=max_degree {
        for d0 in 1..=max_degree {
            for r1 in 0..=max_degree {
                for d1 in 1..=max_degree {
                    if r0 + d0 > r1 + d1 {
                        continue;
                    }
                    if r0 + d0 + r1 + d1 < max_degree {
                        out.push(CurveFamily::TwoPlanesWithLine {
                            r0,
                            d0,
                            r1,
                            d1,
                            variant: TwoPlanesVariant::Xpp,
                        });
                    }
                    if r0 >= 1 && r1 >= 1 && r0 + d0 + r1 + d1 <= max_degree {
                        let mut mnegs: Vec<i64> = (1..=r0 + d0).collect();
                        if r1 + d1 > r0 + d0 {
                            mnegs.push(r1 + d1);
                        }
                        for mneg in mnegs {
                            out.push(CurveFamily::TwoPlanesWithLine {
                                r0,
                                d0,
                                r1,
                                d1,
                                variant: TwoPlanesVariant::XprimePlusLine { mneg },
                            });
                        }
                    }
                }
            }
        }
    }
    for r0 in 2..=max_degree / 2 {
        for r in r0..=max_degree - r0 {
            // lambda runs over nonempty increasing subsets of 1..r0-1.
            let pool: Vec<i64> = (1..r0).collect();
            for mask in 1u64..(1 << pool.len()) {
                let lambdas: Vec<i64> = pool
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &l)| l)
                    .collect();
                out.push(CurveFamily::DoublePlane {
                    sigma: lambdas.len() as i64,
                    lambdas,
                    r0,
                    r,
                });
            }
        }
    }
    debug_assert!(out.iter().all(|f| f.validate().is_ok()));
    out
}

/// Precomputed family profiles for repeated tail matching.
pub struct TailSearcher {
    profiles: Vec<(CurveFamily, FinSuppSeq)>,
}

impl TailSearcher {
    pub fn new(max_c2: i64) -> Self {
        let profiles = enumerate_families(max_c2)
            .into_iter()
            .map(|f| {
                let d2 = f.delta2_h0().expect("enumerated families are valid");
                (f, d2)
            })
            .collect();
        TailSearcher { profiles }
    }

    /// Which curve families reproduce the candidate tail `t`, and by which
    /// bridge. An empty answer means no curve profile in range yields `t`,
    /// which excludes `t` whenever the curve bridge applies.
    pub fn matches(&self, t: &FinSuppSeq) -> Vec<TailMatch> {
        let mut out = Vec::new();
        for (family, d2) in &self.profiles {
            for c in [1, 2] {
                if &curve_tail(c, d2) == t {
                    out.push(TailMatch {
                        family: family.clone(),
                        route: MatchRoute::Twist(c),
                    });
                }
            }
            if t.get(0) == 2 {
                let hi = d2.support_max().unwrap_or(0).max(0);
                let mut vals = vec![2i64];
                vals.extend((1..=hi).map(|i| d2.get(i)));
                if &FinSuppSeq::new(0, vals) == t {
                    out.push(TailMatch {
                        family: family.clone(),
                        route: MatchRoute::XPrime,
                    });
                }
            }
        }
        out
    }
}

/// One-shot form of [`TailSearcher::matches`].
pub fn tail_search(t: &FinSuppSeq, max_c2: i64) -> Vec<TailMatch> {
    TailSearcher::new(max_c2).matches(t)
}

/// Direct binomial count of `h^0(O_X(i))` for a double-plane curve with
/// point-scheme data `(sigma, lambdas)` and plane degrees `r0 <= r`:
///
/// `h^0(O_C(i)) + [h^0(O_H(i-1)) - h^0(O_H(i+sigma-r0-1))]
///  + sum_j h^0(O_L(i + d_j - r0))`
///
/// with `h^0(O_C(i)) = h^0(O_H(i)) - h^0(O_H(i-r))`. This is the oracle route
/// for the piecewise profile, and it also evaluates the Euler characteristic
/// beyond regularity for parameters outside the `r0 > d_sigma` domain, where
/// the piecewise form does not apply.
pub fn double_plane_h0(sigma: i64, lambdas: &[i64], r0: i64, r: i64, i: i64) -> i64 {
    let h0_plane = |t: i64| if t >= 0 { (t + 2) * (t + 1) / 2 } else { 0 };
    let h0_line = |t: i64| (t + 1).max(0);
    let curve = h0_plane(i) - h0_plane(i - r);
    let bracket = h0_plane(i - 1) - h0_plane(i + sigma - r0 - 1);
    let lines: i64 = lambdas
        .iter()
        .enumerate()
        .map(|(k, l)| {
            let d = sigma - (k as i64 + 1) + l;
            h0_line(i + d - r0)
        })
        .sum();
    curve + bracket + lines
}

/// Window `[lo, hi]` of the binomial count as a sequence, ready for
/// difference calculus.
pub fn double_plane_h0_window(
    sigma: i64,
    lambdas: &[i64],
    r0: i64,
    r: i64,
    lo: i64,
    hi: i64,
) -> FinSuppSeq {
    let vals = (lo..=hi)
        .map(|i| double_plane_h0(sigma, lambdas, r0, r, i))
        .collect();
    FinSuppSeq::new(lo, vals)
}
