//! Coefficient fields for the polynomial engine: exact rationals and prime
//! fields.
//!
//! The rationals are the default and the only field the cross-checks trust;
//! strong stability of generic initial ideals is a characteristic-0
//! statement, so prime-field mode is a fast pre-check only (with `p` larger
//! than every degree in sight).

use num::{BigInt, BigRational, One, Zero};
use std::fmt;

/// A field of coefficients, passed by value to every polynomial operation.
pub trait Field: Clone + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse of a nonzero element.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    /// Rescales a coefficient vector by a nonzero scalar of the field's
    /// choosing, to keep representations small. The default keeps the
    /// vector as is; the rationals clear denominators and divide by the
    /// integer content.
    fn content_normalize(&self, coeffs: Vec<Self::Elem>) -> Vec<Self::Elem> {
        coeffs
    }

    /// Rank of the matrix with the given rows. The default is plain
    /// Gaussian elimination; fields with expensive arithmetic may override
    /// with a fraction-free scheme.
    #[allow(clippy::needless_range_loop)] // two rows touched per pass
    fn matrix_rank(&self, mut rows: Vec<Vec<Self::Elem>>) -> usize {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for col in 0..ncols {
            let Some(pivot) = (rank..rows.len()).find(|&r| !self.is_zero(&rows[r][col])) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = self.inv(&rows[rank][col].clone());
            for c in col..ncols {
                rows[rank][c] = self.mul(&rows[rank][c], &inv);
            }
            for r in rank + 1..rows.len() {
                if !self.is_zero(&rows[r][col]) {
                    let factor = rows[r][col].clone();
                    for c in col..ncols {
                        let sub = self.mul(&rows[rank][c], &factor);
                        rows[r][c] = self.sub(&rows[r][c], &sub);
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }
}

/// The rational numbers with arbitrary-precision arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn content_normalize(&self, coeffs: Vec<BigRational>) -> Vec<BigRational> {
        use num::Integer;
        if coeffs.iter().all(|c| c.is_zero()) {
            return coeffs;
        }
        let mut denom_lcm = BigInt::one();
        for c in &coeffs {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for v in &ints {
            content = content.gcd(v);
        }
        // Fix the sign so the first nonzero entry is positive.
        if let Some(first) = ints.iter().find(|v| !v.is_zero()) {
            if first.sign() == num::bigint::Sign::Minus {
                content = -content;
            }
        }
        ints.iter()
            .map(|v| BigRational::from_integer(v / &content))
            .collect()
    }

    #[allow(clippy::needless_range_loop)]
    fn matrix_rank(&self, rows: Vec<Vec<BigRational>>) -> usize {
        use num::Integer;
        // Clear denominators rowwise, then run fraction-free elimination
        // over the integers (Bareiss): entries stay minors of the input,
        // and every division is exact.
        let mut m: Vec<Vec<BigInt>> = rows
            .into_iter()
            .map(|row| {
                let mut l = BigInt::one();
                for c in &row {
                    l = l.lcm(c.denom());
                }
                row.iter().map(|c| c.numer() * (&l / c.denom())).collect()
            })
            .collect();
        let ncols = m.first().map_or(0, |r| r.len());
        let mut prev = BigInt::one();
        let mut rank = 0;
        for col in 0..ncols {
            let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, pivot);
            for r in rank + 1..m.len() {
                for c in col + 1..ncols {
                    let num = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                    m[r][c] = num / &prev;
                }
                m[r][col] = BigInt::zero();
            }
            prev = m[rank][col].clone();
            rank += 1;
            if rank == m.len() {
                break;
            }
        }
        rank
    }
}

/// The prime field `F_p`, elements stored as canonical representatives in
/// `[0, p)`. Products go through `u128`, so any `p < 2^63` is safe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// The default modulus used for fast pre-checks.
    pub const DEFAULT_P: u64 = 32003;

    pub fn new(p: u64) -> Result<Self, NotPrime> {
        if p < 2 || !is_prime(p) {
            return Err(NotPrime { p });
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{p} is not prime")]
pub struct NotPrime {
    pub p: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= n) {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        // Fermat: a^(p-2) mod p.
        let mut base = *a as u128;
        let mut exp = self.p - 2;
        let m = self.p as u128;
        let mut acc: u128 = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            exp >>= 1;
        }
        acc as u64
    }

    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
}

/// Runtime field selection, as configured on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "rationals"),
            FieldSpec::Prime(p) => write!(f, "prime:{p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(PrimeField::DEFAULT_P).unwrap();
        for a in [1u64, 2, 17, 32002] {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        assert_eq!(f.add(&32002, &1), 0);
        assert_eq!(f.from_i64(-1), 32002);
    }

    #[test]
    fn primality_check() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(32003).is_ok());
        assert!(PrimeField::new(32001).is_err());
        assert!(PrimeField::new(1).is_err());
    }

    #[test]
    fn rational_arithmetic() {
        let f = Rationals;
        let half = f.div(&f.one(), &f.from_i64(2));
        assert_eq!(f.add(&half, &half), f.one());
    }
}
