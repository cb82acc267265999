//! Standard resolutions of point schemes in the plane.
//!
//! The gin of a saturated ideal of a 0-dimensional subscheme of `P^2` is
//! generated by `T0^sigma, T0^(sigma-1) T1^(lambda_1), ..., T1^(lambda_sigma)`
//! with `0 = lambda_0 < lambda_1 < ... < lambda_sigma`. Writing
//! `d_i = sigma - i + lambda_i`, the relations `T0 * g_i = T1^(lambda_i -
//! lambda_(i-1)) * g_(i-1)` generate the syzygies, giving the free resolution
//!
//! `0 -> sum_j S(-d_j - 1) -> sum_i S(-d_i) -> I -> 0`  (j = 1..sigma),
//!
//! and the degree of the scheme is `d_1 + ... + d_sigma - sigma(sigma-1)/2`.

use super::basis::GroebnerError;
use super::monomial::MonomialIdeal;
use serde::Serialize;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct StandardResolution {
    pub sigma: i64,
    /// `lambda_1 < ... < lambda_sigma` (the trivial `lambda_0 = 0` is
    /// implicit).
    pub lambdas: Vec<i64>,
}

impl StandardResolution {
    /// `d_i = sigma - i + lambda_i` for `i = 0..=sigma`.
    pub fn d(&self, i: i64) -> i64 {
        if i == 0 {
            self.sigma
        } else {
            self.sigma - i + self.lambdas[(i - 1) as usize]
        }
    }

    /// Generator degrees `d_0, ..., d_sigma`.
    pub fn gen_degrees(&self) -> Vec<i64> {
        (0..=self.sigma).map(|i| self.d(i)).collect()
    }

    /// Syzygy degrees `d_1 + 1, ..., d_sigma + 1`.
    pub fn syz_degrees(&self) -> Vec<i64> {
        (1..=self.sigma).map(|i| self.d(i) + 1).collect()
    }

    /// Degree of the point scheme.
    pub fn deg_gamma(&self) -> i64 {
        (1..=self.sigma).map(|i| self.d(i)).sum::<i64>() - self.sigma * (self.sigma - 1) / 2
    }

    /// Hilbert function of the quotient in degree `t` read off the
    /// resolution by the alternating binomial sum.
    pub fn quotient_hf(&self, t: i64) -> i64 {
        let b2 = |x: i64| if x >= 0 { (x + 2) * (x + 1) / 2 } else { 0 };
        let gens: i64 = self.gen_degrees().iter().map(|&d| b2(t - d)).sum();
        let syz: i64 = self.syz_degrees().iter().map(|&d| b2(t - d)).sum();
        b2(t) - gens + syz
    }
}

/// Reads `(sigma, lambdas)` off a strongly stable saturated monomial ideal
/// in three variables, verifying the generator pattern exactly and checking
/// the resolution against the ideal's Hilbert function degree by degree.
pub fn standard_resolution(m: &MonomialIdeal) -> Result<StandardResolution, GroebnerError> {
    if m.nvars() != 3 {
        return Err(GroebnerError::ShapeMismatch {
            reason: format!("expected 3 variables, got {}", m.nvars()),
        });
    }
    if !m.last_variable_regular() {
        return Err(GroebnerError::ShapeMismatch {
            reason: "a generator involves T2, so the ideal is not saturated".into(),
        });
    }
    let mut gens = m.gens().to_vec();
    if gens.is_empty() {
        return Err(GroebnerError::ShapeMismatch {
            reason: "zero ideal".into(),
        });
    }
    // Sort by decreasing T0 exponent; the pattern forces exponents
    // sigma, sigma-1, ..., 0 with strictly increasing T1 exponents.
    gens.sort_by(|a, b| b.0[0].cmp(&a.0[0]));
    let sigma = gens[0].0[0] as i64;
    if gens.len() as i64 != sigma + 1 {
        return Err(GroebnerError::ShapeMismatch {
            reason: format!("expected {} generators, found {}", sigma + 1, gens.len()),
        });
    }
    let mut lambdas = Vec::new();
    for (k, g) in gens.iter().enumerate() {
        if g.0[0] as i64 != sigma - k as i64 {
            return Err(GroebnerError::ShapeMismatch {
                reason: format!("missing generator with T0-exponent {}", sigma - k as i64),
            });
        }
        let lam = g.0[1] as i64;
        if k == 0 {
            if lam != 0 {
                return Err(GroebnerError::ShapeMismatch {
                    reason: "top generator is not a pure power of T0".into(),
                });
            }
        } else {
            if lam <= *lambdas.last().unwrap_or(&0) {
                return Err(GroebnerError::ShapeMismatch {
                    reason: "T1 exponents fail to increase strictly".into(),
                });
            }
            lambdas.push(lam);
        }
    }
    let res = StandardResolution { sigma, lambdas };
    // Exactness bookkeeping: the alternating sum must reproduce the
    // monomial count in every degree through the last syzygy twist.
    let top = res.d(res.sigma) + 2;
    for t in 0..=top {
        if res.quotient_hf(t) != m.quotient_hf(t) {
            return Err(GroebnerError::ResolutionInexact { degree: t });
        }
    }
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::super::monomial::Monomial;
    use super::*;

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(3, gens.iter().map(|e| Monomial(e.to_vec())).collect())
    }

    #[test]
    fn three_points() {
        let m = ideal(&[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0]]);
        let r = standard_resolution(&m).unwrap();
        assert_eq!(r.sigma, 2);
        assert_eq!(r.lambdas, vec![1, 2]);
        assert_eq!(r.gen_degrees(), vec![2, 2, 2]);
        assert_eq!(r.syz_degrees(), vec![3, 3]);
        assert_eq!(r.deg_gamma(), 3);
    }

    #[test]
    fn ci_2_2_pattern() {
        let m = ideal(&[&[2, 0, 0], &[1, 1, 0], &[0, 3, 0]]);
        let r = standard_resolution(&m).unwrap();
        assert_eq!(r.sigma, 2);
        assert_eq!(r.lambdas, vec![1, 3]);
        assert_eq!(r.gen_degrees(), vec![2, 2, 3]);
        assert_eq!(r.deg_gamma(), 4);
    }

    #[test]
    fn collinear_points() {
        let m = ideal(&[&[1, 0, 0], &[0, 4, 0]]);
        let r = standard_resolution(&m).unwrap();
        assert_eq!(r.sigma, 1);
        assert_eq!(r.lambdas, vec![4]);
        assert_eq!(r.deg_gamma(), 4);
    }

    #[test]
    fn shape_mismatches() {
        // A line in the plane: no pure T1 power.
        let m = ideal(&[&[1, 0, 0]]);
        assert!(matches!(
            standard_resolution(&m),
            Err(GroebnerError::ShapeMismatch { .. })
        ));
        // Involves the last variable: not saturated.
        let m = ideal(&[&[1, 0, 0], &[0, 2, 1]]);
        assert!(matches!(
            standard_resolution(&m),
            Err(GroebnerError::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn resolution_hf_matches_counting() {
        let m = ideal(&[&[3, 0, 0], &[2, 2, 0], &[1, 3, 0], &[0, 5, 0]]);
        let r = standard_resolution(&m).unwrap();
        for t in 0..12 {
            assert_eq!(r.quotient_hf(t), m.quotient_hf(t));
        }
    }
}
