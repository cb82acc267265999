//! Monomials in `T_0, ..., T_n` under graded reverse lexicographic order,
//! and monomial ideals.
//!
//! The order: higher total degree wins; among monomials of the same degree,
//! the one with the *smaller* exponent at the last index where the exponent
//! vectors differ is the larger monomial. With it, `T_0 > T_1 > ... > T_n`.

use serde::Serialize;
use std::cmp::Ordering;

/// An exponent vector. The variable count is fixed per computation.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, defined when `self` divides `other`.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        Monomial(
            other
                .0
                .iter()
                .zip(&self.0)
                .map(|(b, a)| b.checked_sub(*a).expect("non-divisible quotient"))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Largest variable index with positive exponent; `None` for 1.
    pub fn max_var(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }

    /// Smallest variable index with positive exponent; `None` for 1.
    pub fn min_var(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0)
    }

    /// Graded reverse lexicographic comparison.
    pub fn grevlex_cmp(&self, other: &Monomial) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for k in (0..self.0.len()).rev() {
            match self.0[k].cmp(&other.0[k]) {
                Ordering::Equal => {}
                // Smaller exponent late in the vector means a larger monomial.
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grevlex_cmp(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "T{i}")?;
            } else {
                write!(f, "T{i}^{e}")?;
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

/// All monomials of the given degree, in decreasing grevlex order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fill(&mut out, &mut current, 0, degree);
    out.sort_by(|a, b| b.grevlex_cmp(a));
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u32>, var: usize, left: u32) {
    if var + 1 == current.len() {
        current[var] = left;
        out.push(Monomial(current.clone()));
        current[var] = 0;
        return;
    }
    for e in (0..=left).rev() {
        current[var] = e;
        fill(out, current, var + 1, left - e);
        current[var] = 0;
    }
}

/// Dimension of the degree-`d` piece of the polynomial ring in `nvars`
/// variables: `binom(d + nvars - 1, nvars - 1)`.
pub fn ring_dim(nvars: usize, d: i64) -> i64 {
    if d < 0 {
        return 0;
    }
    let n = nvars as i64 - 1;
    let mut num = 1i64;
    let mut den = 1i64;
    for k in 1..=n {
        num *= d + k;
        den *= k;
    }
    num / den
}

/// A monomial ideal given by its minimal generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal and minimalizes the generating set.
    pub fn new(nvars: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort_by(|a, b| a.grevlex_cmp(b));
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::new();
        for g in gens {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        MonomialIdeal {
            nvars,
            gens: minimal,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Strong stability: every exchange of a variable in a generator for an
    /// earlier (larger) variable stays in the ideal.
    pub fn is_strongly_stable(&self) -> bool {
        self.gens.iter().all(|g| {
            (0..self.nvars).all(|i| {
                if g.0[i] == 0 {
                    return true;
                }
                (0..i).all(|j| {
                    let mut swapped = g.clone();
                    swapped.0[i] -= 1;
                    swapped.0[j] += 1;
                    self.contains(&swapped)
                })
            })
        })
    }

    /// Whether the last variable is regular on the quotient, i.e. no
    /// generator involves it. For a strongly stable ideal this is the
    /// saturation test.
    pub fn last_variable_regular(&self) -> bool {
        self.gens
            .iter()
            .all(|g| g.0.last().copied().unwrap_or(0) == 0)
    }

    /// Hilbert function of the quotient ring in degree `d`, by counting the
    /// monomials outside the ideal.
    pub fn quotient_hf(&self, d: i64) -> i64 {
        if d < 0 {
            return 0;
        }
        monomials_of_degree(self.nvars, d as u32)
            .iter()
            .filter(|m| !self.contains(m))
            .count() as i64
    }

    /// Window of the quotient Hilbert function as a sequence.
    pub fn quotient_hf_window(&self, lo: i64, hi: i64) -> crate::seq::FinSuppSeq {
        crate::seq::FinSuppSeq::new(lo, (lo..=hi).map(|d| self.quotient_hf(d)).collect())
    }

    pub fn gens_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.to_string()).collect()
    }
}
