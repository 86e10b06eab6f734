use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::modulus::PrimeModulus;
use crate::error::{Error, Result};

/// A dense polynomial over `F_p`, coefficients stored constant term first.
///
/// The coefficient vector never has a trailing zero, so the zero polynomial is
/// the empty vector. Binary operations require both operands to share the
/// same modulus and panic otherwise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: PrimeModulus,
    coeffs: Vec<u64>,
}

impl FpPoly {
    /// Reduces and normalizes `coeffs` (constant term first).
    pub fn new(p: PrimeModulus, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c = p.reduce(*c);
        }
        Self::from_reduced(p, coeffs)
    }

    pub(crate) fn from_reduced(p: PrimeModulus, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn from_i64s(p: PrimeModulus, coeffs: &[i64]) -> Self {
        Self::from_reduced(p, coeffs.iter().map(|&c| p.reduce_i64(c)).collect())
    }

    /// Reduction of integer coefficients modulo `p`.
    pub fn from_bigints(p: PrimeModulus, coeffs: &[BigInt]) -> Self {
        let m = BigInt::from(p.get());
        let reduced = coeffs
            .iter()
            .map(|c| {
                let r = c % &m;
                let r = if r.is_negative() { r + &m } else { r };
                r.to_u64().expect("residue fits in u64")
            })
            .collect();
        Self::from_reduced(p, reduced)
    }

    pub fn zero(p: PrimeModulus) -> Self {
        FpPoly { p, coeffs: Vec::new() }
    }

    pub fn one(p: PrimeModulus) -> Self {
        FpPoly { p, coeffs: vec![1] }
    }

    /// The polynomial `x`.
    pub fn x(p: PrimeModulus) -> Self {
        FpPoly { p, coeffs: vec![0, 1] }
    }

    pub fn constant(p: PrimeModulus, c: u64) -> Self {
        Self::new(p, vec![c])
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub(crate) fn deg_or_zero(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Scales to leading coefficient 1; the zero polynomial stays zero.
    pub fn monic(&self) -> FpPoly {
        match self.coeffs.last() {
            None | Some(1) => self.clone(),
            Some(&lc) => {
                let inv = self.p.inv(lc);
                FpPoly { p: self.p, coeffs: self.coeffs.iter().map(|&c| self.p.mul(c, inv)).collect() }
            }
        }
    }

    fn check_modulus(&self, other: &FpPoly) {
        assert_eq!(self.p, other.p, "polynomials over different prime fields");
    }

    pub fn add(&self, other: &FpPoly) -> FpPoly {
        self.check_modulus(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                self.p.add(a, b)
            })
            .collect();
        FpPoly::from_reduced(self.p, c)
    }

    pub fn sub(&self, other: &FpPoly) -> FpPoly {
        self.check_modulus(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                self.p.sub(a, b)
            })
            .collect();
        FpPoly::from_reduced(self.p, c)
    }

    pub fn neg(&self) -> FpPoly {
        FpPoly { p: self.p, coeffs: self.coeffs.iter().map(|&c| self.p.neg(c)).collect() }
    }

    pub fn scale(&self, k: u64) -> FpPoly {
        let k = self.p.reduce(k);
        FpPoly::from_reduced(self.p, self.coeffs.iter().map(|&c| self.p.mul(c, k)).collect())
    }

    pub fn mul(&self, other: &FpPoly) -> FpPoly {
        self.check_modulus(other);
        FpPoly::from_reduced(self.p, mul_coeffs(&self.coeffs, &other.coeffs, self.p.get()))
    }

    /// Quotient and remainder of Euclidean division.
    pub fn div_rem(&self, divisor: &FpPoly) -> Result<(FpPoly, FpPoly)> {
        self.check_modulus(divisor);
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let p = self.p;
        if self.coeffs.len() <= dd {
            return Ok((FpPoly::zero(p), self.clone()));
        }
        let inv = p.inv(divisor.leading_coeff());
        let m = p.get();
        let mut r = self.coeffs.clone();
        let mut q = vec![0u64; r.len() - dd];
        let neg: Vec<u64> = divisor.coeffs[..dd].iter().map(|&b| p.neg(b)).collect();
        if lazy_ok(m, r.len()) {
            // entries of r accumulate unreduced products until they are read
            for i in (dd..r.len()).rev() {
                let c = p.mul(r[i] % m, inv);
                q[i - dd] = c;
                if c != 0 {
                    for (slot, &nb) in r[i - dd..i].iter_mut().zip(&neg) {
                        *slot += c * nb;
                    }
                }
            }
            for x in r[..dd].iter_mut() {
                *x %= m;
            }
        } else {
            for i in (dd..r.len()).rev() {
                let c = p.mul(r[i], inv);
                q[i - dd] = c;
                if c != 0 {
                    for (slot, &nb) in r[i - dd..i].iter_mut().zip(&neg) {
                        *slot = p.add(*slot, p.mul(c, nb));
                    }
                }
            }
        }
        r.truncate(dd);
        Ok((FpPoly::from_reduced(p, q), FpPoly::from_reduced(p, r)))
    }

    pub fn rem(&self, divisor: &FpPoly) -> Result<FpPoly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &FpPoly) -> FpPoly {
        self.check_modulus(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> FpPoly {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.p.mul(c, self.p.reduce(i as u64)))
            .collect();
        FpPoly::from_reduced(self.p, c)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let x = self.p.reduce(x);
        self.coeffs.iter().rev().fold(0, |acc, &c| self.p.add(self.p.mul(acc, x), c))
    }

    /// `self(inner)`, by Horner's rule.
    pub fn compose(&self, inner: &FpPoly) -> FpPoly {
        self.check_modulus(inner);
        let p = self.p;
        let mut acc: Vec<u64> = Vec::new();
        for &c in self.coeffs.iter().rev() {
            acc = mul_coeffs(&acc, &inner.coeffs, p.get());
            if acc.is_empty() {
                acc.push(c);
            } else {
                acc[0] = p.add(acc[0], c);
            }
        }
        FpPoly::from_reduced(p, acc)
    }
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpPoly[mod {}]({})", self.p, self)
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// True when `terms` products of two residues mod `m` can be summed in a `u64`.
#[inline]
pub(crate) fn lazy_ok(m: u64, terms: usize) -> bool {
    let sq = (m as u128 - 1) * (m as u128 - 1);
    sq.saturating_mul(terms as u128 + 1) < u64::MAX as u128
}

/// Schoolbook product of reduced coefficient vectors, result reduced mod `m`.
pub(crate) fn mul_coeffs(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let (a, b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = vec![0u64; a.len() + b.len() - 1];
    if lazy_ok(m, b.len()) {
        for (j, &bj) in b.iter().enumerate() {
            if bj == 0 {
                continue;
            }
            for (o, &ai) in out[j..j + a.len()].iter_mut().zip(a) {
                *o += ai * bj;
            }
        }
        for o in out.iter_mut() {
            *o %= m;
        }
    } else {
        for (j, &bj) in b.iter().enumerate() {
            for (i, &ai) in a.iter().enumerate() {
                let t = (ai as u128 * bj as u128 + out[i + j] as u128) % m as u128;
                out[i + j] = t as u64;
            }
        }
    }
    out
}
