//! Multivariate polynomials with exact coefficients, terms kept strictly
//! sorted in decreasing grevlex order.

use super::field::Field;
use super::monomial::Monomial;
use std::collections::BTreeMap;

#[derive(Clone, PartialEq, Debug)]
pub struct Poly<F: Field> {
    nvars: usize,
    /// Sorted strictly descending by monomial; no zero coefficients.
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> Poly<F> {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn from_terms(field: &F, nvars: usize, terms: Vec<(Monomial, F::Elem)>) -> Self {
        let mut map: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            match map.entry(m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = field.add(e.get(), &c);
                    *e.get_mut() = sum;
                }
            }
        }
        let terms = map
            .into_iter()
            .rev()
            .filter(|(_, c)| !field.is_zero(c))
            .collect();
        Poly { nvars, terms }
    }

    pub fn term(field: &F, m: Monomial, c: F::Elem) -> Self {
        let nvars = m.nvars();
        if field.is_zero(&c) {
            return Self::zero(nvars);
        }
        Poly {
            nvars,
            terms: vec![(m, c)],
        }
    }

    pub fn constant(field: &F, nvars: usize, c: F::Elem) -> Self {
        Self::term(field, Monomial::one(nvars), c)
    }

    pub fn variable(field: &F, nvars: usize, i: usize) -> Self {
        Self::term(field, Monomial::var(nvars, i), field.one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, F::Elem)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    /// Total degree of the leading term (the maximum over terms).
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&F::Elem> {
        self.terms
            .binary_search_by(|(t, _)| m.grevlex_cmp(t))
            .ok()
            .map(|k| &self.terms[k].1)
    }

    pub fn add(&self, field: &F, other: &Self) -> Self {
        self.merge(field, other, false)
    }

    pub fn sub(&self, field: &F, other: &Self) -> Self {
        self.merge(field, other, true)
    }

    fn merge(&self, field: &F, other: &Self, subtract: bool) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take_left = match (self.terms.get(i), other.terms.get(j)) {
                (Some((a, _)), Some((b, _))) => match a.grevlex_cmp(b) {
                    std::cmp::Ordering::Greater => true,
                    std::cmp::Ordering::Less => false,
                    std::cmp::Ordering::Equal => {
                        let (m, ca) = &self.terms[i];
                        let cb = &other.terms[j].1;
                        let c = if subtract {
                            field.sub(ca, cb)
                        } else {
                            field.add(ca, cb)
                        };
                        if !field.is_zero(&c) {
                            out.push((m.clone(), c));
                        }
                        i += 1;
                        j += 1;
                        continue;
                    }
                },
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => break,
            };
            if take_left {
                out.push(self.terms[i].clone());
                i += 1;
            } else {
                let (m, c) = &other.terms[j];
                let c = if subtract { field.neg(c) } else { c.clone() };
                out.push((m.clone(), c));
                j += 1;
            }
        }
        Poly {
            nvars: self.nvars,
            terms: out,
        }
    }

    /// Multiplication by a single term, order-preserving.
    pub fn mul_term(&self, field: &F, m: &Monomial, c: &F::Elem) -> Self {
        if field.is_zero(c) {
            return Self::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), field.mul(tc, c)))
                .collect(),
        }
    }

    pub fn mul(&self, field: &F, other: &Self) -> Self {
        let mut acc: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        for (am, ac) in &self.terms {
            for (bm, bc) in &other.terms {
                let m = am.mul(bm);
                let c = field.mul(ac, bc);
                match acc.entry(m) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let sum = field.add(e.get(), &c);
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        let terms = acc
            .into_iter()
            .rev()
            .filter(|(_, c)| !field.is_zero(c))
            .collect();
        Poly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn scale(&self, field: &F, c: &F::Elem) -> Self {
        self.mul_term(field, &Monomial::one(self.nvars), c)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, field: &F) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = field.inv(lc);
                self.scale(field, &inv)
            }
        }
    }

    /// Rescales by the field's preferred content normalization (a nonzero
    /// scalar), e.g. to primitive integer coefficients over the rationals.
    pub fn content_normalized(&self, field: &F) -> Self {
        let coeffs: Vec<F::Elem> = self.terms.iter().map(|(_, c)| c.clone()).collect();
        let normalized = field.content_normalize(coeffs);
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, _)| m.clone())
                .zip(normalized)
                .collect(),
        }
    }

    /// Substitutes `vars[i]` for `T_i` and expands. Powers of the
    /// substituted forms are cached per variable.
    pub fn substitute(&self, field: &F, vars: &[Poly<F>]) -> Self {
        assert_eq!(vars.len(), self.nvars);
        let mut powers: Vec<Vec<Poly<F>>> = vars
            .iter()
            .map(|v| vec![Poly::constant(field, self.nvars, field.one()), v.clone()])
            .collect();
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut prod = Poly::constant(field, self.nvars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(field, &vars[i]);
                    powers[i].push(next);
                }
                if e > 0 {
                    prod = prod.mul(field, &powers[i][e as usize]);
                }
            }
            out = out.add(field, &prod);
        }
        out
    }

    /// Coefficient vector over the given monomial basis (typically all
    /// monomials of one degree, sorted).
    pub fn coefficient_vector(&self, field: &F, basis: &[Monomial]) -> Vec<F::Elem> {
        basis
            .iter()
            .map(|m| self.coefficient(m).cloned().unwrap_or_else(|| field.zero()))
            .collect()
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(m, c)| {
                if m.is_one() {
                    format!("{c:?}")
                } else {
                    format!("{c:?}*{m}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Builds a polynomial from integer-coefficient terms given as
/// `(coefficient, exponents)`.
pub fn poly_from_ints<F: Field>(field: &F, nvars: usize, terms: &[(i64, &[u32])]) -> Poly<F> {
    Poly::from_terms(
        field,
        nvars,
        terms
            .iter()
            .map(|(c, e)| {
                assert_eq!(e.len(), nvars);
                (Monomial(e.to_vec()), field.from_i64(*c))
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::super::field::Rationals;
    use super::*;

    #[test]
    fn arithmetic_and_ordering() {
        let f = Rationals;
        // (T0 + T1)^2 = T0^2 + 2 T0 T1 + T1^2, terms in grevlex order.
        let p = poly_from_ints(&f, 3, &[(1, &[1, 0, 0]), (1, &[0, 1, 0])]);
        let sq = p.mul(&f, &p);
        assert_eq!(
            sq,
            poly_from_ints(
                &f,
                3,
                &[(1, &[2, 0, 0]), (2, &[1, 1, 0]), (1, &[0, 2, 0])]
            )
        );
        assert_eq!(sq.leading_monomial().unwrap(), &Monomial(vec![2, 0, 0]));
        assert!(sq.is_homogeneous());

        let diff = sq.sub(&f, &sq);
        assert!(diff.is_zero());
    }

    #[test]
    fn substitution_expands() {
        let f = Rationals;
        // T0^2 under T0 -> T0 + T1 gives (T0+T1)^2.
        let p = poly_from_ints(&f, 2, &[(1, &[2, 0])]);
        let sub = p.substitute(
            &f,
            &[
                poly_from_ints(&f, 2, &[(1, &[1, 0]), (1, &[0, 1])]),
                Poly::variable(&f, 2, 1),
            ],
        );
        assert_eq!(
            sub,
            poly_from_ints(&f, 2, &[(1, &[2, 0]), (2, &[1, 1]), (1, &[0, 2])])
        );
    }

    #[test]
    fn monic_normalization() {
        let f = Rationals;
        let p = poly_from_ints(&f, 2, &[(3, &[1, 0]), (6, &[0, 1])]);
        let m = p.monic(&f);
        assert_eq!(m, poly_from_ints(&f, 2, &[(1, &[1, 0]), (2, &[0, 1])]));
    }
}
