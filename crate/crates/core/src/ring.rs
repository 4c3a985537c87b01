//! The negacyclic ring `F_{p^k}[X]/(X^n+1)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{num_integer_gcd, ExtField, FieldElem};
use crate::poly::Poly;

/// An element of `F_{p^k}[X]/(X^n+1)` stored as exactly `n` coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingElem {
    field: ExtField,
    coeffs: Vec<FieldElem>,
}

/// Ensure `n >= 1` and `gcd(n, p) = 1`.
pub fn check_length(field: &ExtField, n: usize) -> Result<()> {
    let p = field.characteristic() as u64;
    if n == 0 || num_integer_gcd(n as u64, p) != 1 {
        return Err(Error::NotCoprimeToP { n: n as u64, p });
    }
    Ok(())
}

/// Reduce a polynomial modulo `X^n + 1` into a coefficient vector of length `n`.
fn fold(field: &ExtField, coeffs: &[FieldElem], n: usize) -> Vec<FieldElem> {
    let mut out = vec![field.zero(); n];
    for (j, c) in coeffs.iter().enumerate() {
        let slot = j % n;
        // X^{qn + r} = (-1)^q X^r
        out[slot] = if (j / n).is_multiple_of(2) {
            &out[slot] + c
        } else {
            &out[slot] - c
        };
    }
    out
}

impl RingElem {
    pub fn from_poly(poly: &Poly, n: usize) -> Result<RingElem> {
        check_length(poly.field(), n)?;
        Ok(RingElem {
            field: *poly.field(),
            coeffs: fold(poly.field(), poly.coeffs(), n),
        })
    }

    pub fn zero(field: &ExtField, n: usize) -> Result<RingElem> {
        check_length(field, n)?;
        Ok(RingElem {
            field: *field,
            coeffs: vec![field.zero(); n],
        })
    }

    pub fn one(field: &ExtField, n: usize) -> Result<RingElem> {
        let mut r = RingElem::zero(field, n)?;
        r.coeffs[0] = field.one();
        Ok(r)
    }

    /// `X^j` reduced into the ring.
    pub fn x_pow(field: &ExtField, n: usize, j: usize) -> Result<RingElem> {
        let mut r = RingElem::zero(field, n)?;
        r.coeffs[j % n] = if (j / n).is_multiple_of(2) {
            field.one()
        } else {
            -&field.one()
        };
        Ok(r)
    }

    pub fn field(&self) -> &ExtField {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(&self.field, self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check(&self, other: &RingElem) -> Result<()> {
        if self.field.same(&other.field) && self.n() == other.n() {
            Ok(())
        } else {
            Err(Error::Mismatch)
        }
    }

    pub fn try_add(&self, other: &RingElem) -> Result<RingElem> {
        self.check(other)?;
        Ok(RingElem {
            field: self.field,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &RingElem) -> Result<RingElem> {
        self.try_add(&-other)
    }

    /// Negacyclic convolution.
    pub fn try_mul(&self, other: &RingElem) -> Result<RingElem> {
        self.check(other)?;
        let n = self.n();
        let mut out = vec![self.field.zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = a * b;
                let s = i + j;
                if s < n {
                    out[s] = &out[s] + &prod;
                } else {
                    out[s - n] = &out[s - n] - &prod;
                }
            }
        }
        Ok(RingElem {
            field: self.field,
            coeffs: out,
        })
    }

    pub fn scale(&self, c: &FieldElem) -> RingElem {
        RingElem {
            field: self.field,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> RingElem {
        let mut base = self.clone();
        let mut acc = RingElem::one(&self.field, self.n()).expect("length already checked");
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `u(-X)`.
    pub fn substitute_neg(&self) -> RingElem {
        RingElem {
            field: self.field,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// `u(X^{-1})`, using `X^{-1} = -X^{n-1}`.
    pub fn substitute_inv(&self) -> RingElem {
        let n = self.n();
        let mut out = vec![self.field.zero(); n];
        out[0] = self.coeffs[0].clone();
        for j in 1..n {
            out[n - j] = -&self.coeffs[j];
        }
        RingElem {
            field: self.field,
            coeffs: out,
        }
    }

    /// Coefficientwise `x -> x^{p^i}`.
    pub fn frobenius(&self, i: usize) -> RingElem {
        RingElem {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| c.frobenius(i)).collect(),
        }
    }
}

/// `u * v` in the ring, with a mismatch error instead of a panic.
pub fn ring_mul(u: &RingElem, v: &RingElem) -> Result<RingElem> {
    u.try_mul(v)
}

impl Add for &RingElem {
    type Output = RingElem;
    fn add(self, rhs: &RingElem) -> RingElem {
        self.try_add(rhs)
            .expect("ring elements from different rings")
    }
}

impl Sub for &RingElem {
    type Output = RingElem;
    fn sub(self, rhs: &RingElem) -> RingElem {
        self.try_sub(rhs)
            .expect("ring elements from different rings")
    }
}

impl Mul for &RingElem {
    type Output = RingElem;
    fn mul(self, rhs: &RingElem) -> RingElem {
        self.try_mul(rhs)
            .expect("ring elements from different rings")
    }
}

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod X^{}+1", self.to_poly(), self.n())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeModulus;

    fn ring(p: u64, k: usize) -> ExtField {
        ExtField::new(PrimeModulus::new(p).unwrap(), k).unwrap()
    }

    fn el(f: &ExtField, s: &str, n: usize) -> RingElem {
        RingElem::from_poly(&Poly::parse(f, s).unwrap(), n).unwrap()
    }

    #[test]
    fn x_to_the_n_is_minus_one() {
        let f = ring(3, 1);
        let x = RingElem::x_pow(&f, 4, 1).unwrap();
        assert_eq!(x.pow(4), el(&f, "2", 4));
        assert_eq!(x.pow(8), RingElem::one(&f, 4).unwrap());
    }

    #[test]
    fn rejects_length_divisible_by_p() {
        let f = ring(3, 1);
        assert!(matches!(
            RingElem::zero(&f, 6),
            Err(Error::NotCoprimeToP { n: 6, p: 3 })
        ));
    }

    #[test]
    fn substitute_inv_of_x() {
        let f = ring(5, 1);
        let x = el(&f, "X", 6);
        assert_eq!(x.substitute_inv(), el(&f, "4X^5", 6));
        assert_eq!(&x * &x.substitute_inv(), RingElem::one(&f, 6).unwrap());
    }

    #[test]
    fn mismatch_is_an_error() {
        let f = ring(3, 2);
        let a = RingElem::one(&f, 4).unwrap();
        let b = RingElem::one(&f, 5).unwrap();
        assert_eq!(ring_mul(&a, &b), Err(Error::Mismatch));
    }

    #[test]
    fn frobenius_power_reverses_when_n_divides_p_t_plus_one() {
        // 10 | 3^2 + 1 with odd quotient, so u^9 = sigma^2(u)(-X^{-1})
        let f = ring(3, 2);
        let u = el(&f, "eX^3+(e+1)X+2", 10);
        let lhs = u.pow(9);
        let rhs = u.frobenius(2).substitute_neg().substitute_inv();
        assert_eq!(lhs, rhs);
    }
}
