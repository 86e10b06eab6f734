use super::modulus::PrimeModulus;
use super::poly::{lazy_ok, mul_coeffs, FpPoly};
use crate::error::{Error, Result};
use crate::partition::FactorizationType;

/// Arithmetic in `F_p[x] / (f)` for a fixed monic `f` of degree >= 1.
///
/// Residues are coefficient vectors of length exactly `deg f`.
#[derive(Debug, Clone)]
pub struct ModRing {
    p: PrimeModulus,
    degree: usize,
    // p - f_j for j < deg f
    neg_low: Vec<u64>,
    lazy: bool,
}

impl ModRing {
    pub fn new(f: &FpPoly) -> Result<Self> {
        let degree = match f.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::ConstantPolynomial),
        };
        let f = f.monic();
        let p = f.modulus();
        let neg_low = f.coeffs()[..degree].iter().map(|&c| p.neg(c)).collect();
        // a product buffer holds < deg products per slot and receives < 2 deg more
        let lazy = lazy_ok(p.get(), 3 * degree + 3);
        Ok(ModRing { p, degree, neg_low, lazy })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn pad(&self, mut v: Vec<u64>) -> Vec<u64> {
        v.resize(self.degree, 0);
        v
    }

    /// Residue of an arbitrary polynomial.
    pub fn residue(&self, a: &FpPoly) -> Vec<u64> {
        let mut buf = a.coeffs().to_vec();
        self.reduce_in_place(&mut buf);
        self.pad(buf)
    }

    pub fn to_poly(&self, r: &[u64]) -> FpPoly {
        FpPoly::from_reduced(self.p, r.to_vec())
    }

    pub fn x(&self) -> Vec<u64> {
        self.residue(&FpPoly::x(self.p))
    }

    pub fn one(&self) -> Vec<u64> {
        self.residue(&FpPoly::one(self.p))
    }

    /// Reduces `buf` modulo `f`, leaving `deg f` reduced coefficients.
    /// Entries of `buf` must be reduced mod p on entry.
    fn reduce_in_place(&self, buf: &mut Vec<u64>) {
        let m = self.p.get();
        let d = self.degree;
        if self.lazy && buf.len() < 2 * d {
            self.reduce_lazy(buf);
        } else {
            for i in (d..buf.len()).rev() {
                let c = buf[i] % m;
                if c == 0 {
                    continue;
                }
                for (j, &nf) in self.neg_low.iter().enumerate() {
                    buf[i - d + j] = self.p.add(buf[i - d + j], self.p.mul(c, nf));
                }
            }
        }
        buf.truncate(d);
    }

    /// Like `reduce_in_place` but entries may be unreduced sums of products.
    fn reduce_lazy(&self, buf: &mut [u64]) {
        let m = self.p.get();
        let d = self.degree;
        for i in (d..buf.len()).rev() {
            let c = buf[i] % m;
            if c == 0 {
                continue;
            }
            let (low, _) = buf.split_at_mut(i);
            for (slot, &nf) in low[i - d..].iter_mut().zip(&self.neg_low) {
                *slot += c * nf;
            }
        }
        let keep = d.min(buf.len());
        for x in buf[..keep].iter_mut() {
            *x %= m;
        }
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let m = self.p.get();
        if self.lazy {
            // unreduced schoolbook product, reduced once at the end
            let mut buf = vec![0u64; a.len() + b.len() - 1];
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                for (o, &ai) in buf[j..j + a.len()].iter_mut().zip(a) {
                    *o += ai * bj;
                }
            }
            self.reduce_lazy(&mut buf);
            buf.truncate(self.degree);
            self.pad(buf)
        } else {
            let mut buf = mul_coeffs(a, b, m);
            self.reduce_in_place(&mut buf);
            self.pad(buf)
        }
    }

    pub fn pow(&self, base: &[u64], mut e: u64) -> Vec<u64> {
        let mut result = self.one();
        let mut b = base.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &b);
            }
            e >>= 1;
            if e > 0 {
                b = self.mul(&b, &b);
            }
        }
        result
    }

    /// `h(g) mod f` by Brent-Kung baby-step giant-step.
    pub fn compose(&self, h: &[u64], g: &[u64]) -> Vec<u64> {
        let m = self.p.get();
        let len = h.iter().rposition(|&c| c != 0).map_or(0, |i| i + 1);
        if len == 0 {
            return vec![0; self.degree];
        }
        let block = ((len as f64).sqrt().ceil() as usize).max(1);
        let mut powers = Vec::with_capacity(block + 1);
        powers.push(self.one());
        for k in 1..=block {
            let next = self.mul(&powers[k - 1], g);
            powers.push(next);
        }
        let giant = powers[block].clone();
        let lazy = lazy_ok(m, block);
        let mut acc: Option<Vec<u64>> = None;
        for chunk_start in (0..len).step_by(block).rev() {
            let chunk = &h[chunk_start..(chunk_start + block).min(len)];
            let mut part = vec![0u64; self.degree];
            for (k, &c) in chunk.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                if lazy {
                    for (o, &x) in part.iter_mut().zip(&powers[k]) {
                        *o += c * x;
                    }
                } else {
                    for (o, &x) in part.iter_mut().zip(&powers[k]) {
                        *o = self.p.add(*o, self.p.mul(c, x));
                    }
                }
            }
            if lazy {
                for o in part.iter_mut() {
                    *o %= m;
                }
            }
            acc = Some(match acc {
                None => part,
                Some(a) => {
                    let mut t = self.mul(&a, &giant);
                    for (o, x) in t.iter_mut().zip(part) {
                        *o = self.p.add(*o, x);
                    }
                    t
                }
            });
        }
        acc.unwrap()
    }

    /// `x^(p^k) mod f`.
    pub fn frobenius(&self, k: u64) -> Vec<u64> {
        if k == 0 {
            return self.x();
        }
        let first = self.pow(&self.x(), self.p.get());
        self.frobenius_from(&first, k)
    }

    /// `x^(p^k)` given `x^p`, by doubling through composition:
    /// `x^(p^(a+b)) = (x^(p^a)) o (x^(p^b))`.
    fn frobenius_from(&self, first: &[u64], mut k: u64) -> Vec<u64> {
        let mut result: Option<Vec<u64>> = None;
        let mut base = first.to_vec();
        loop {
            if k & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => self.compose(&r, &base),
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = self.compose(&base, &base);
        }
        result.unwrap_or_else(|| self.x())
    }
}

impl FpPoly {
    /// `x^(p^k)` reduced modulo `self` (degree >= 1).
    pub fn frobenius_power(&self, k: u64) -> Result<FpPoly> {
        let ring = ModRing::new(self)?;
        Ok(ring.to_poly(&ring.frobenius(k)))
    }

    /// `gcd(f, f') = 1`. Nonzero constants count as squarefree.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.degree() == Some(0) {
            return true;
        }
        self.gcd(&self.derivative()).is_one()
    }

    /// Rabin's test: `f` of degree `n` is irreducible iff `x^(p^n) = x mod f`
    /// and `gcd(x^(p^(n/q)) - x, f) = 1` for every prime `q | n`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let n = self.degree().filter(|&d| d >= 1).ok_or(Error::ConstantPolynomial)?;
        if n == 1 {
            return Ok(true);
        }
        let f = self.monic();
        let ring = ModRing::new(&f)?;
        let x = ring.x();
        let first = ring.pow(&x, self.modulus().get());
        let mut full: Option<Vec<u64>> = None;
        for q in prime_divisors(n) {
            let part = ring.frobenius_from(&first, (n / q) as u64);
            let diff = ring.to_poly(&part).sub(&FpPoly::x(self.modulus()));
            if !diff.gcd(&f).is_one() {
                return Ok(false);
            }
            if full.is_none() {
                // x^(p^n) = (x^(p^(n/q))) composed q times
                let mut acc = part.clone();
                for _ in 1..q {
                    acc = ring.compose(&acc, &part);
                }
                full = Some(acc);
            }
        }
        Ok(full.expect("n >= 2 has a prime divisor") == x)
    }

    /// Decomposition type of a squarefree polynomial: the multiset of degrees
    /// of its irreducible factors, by distinct-degree factorization.
    pub fn ddf_type(&self) -> Result<FactorizationType> {
        if self.degree().filter(|&d| d >= 1).is_none() {
            return Err(Error::ConstantPolynomial);
        }
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree(self.modulus().get()));
        }
        let p = self.modulus();
        let x = FpPoly::x(p);
        let mut rest = self.monic();
        let mut parts = Vec::new();
        let mut h = x.clone();
        let mut d = 1;
        while 2 * d <= rest.deg_or_zero() {
            let ring = ModRing::new(&rest)?;
            h = ring.to_poly(&ring.pow(&ring.residue(&h), p.get()));
            let g = h.sub(&x).gcd(&rest);
            if let Some(gd) = g.degree().filter(|&gd| gd > 0) {
                parts.extend(std::iter::repeat_n(d, gd / d));
                rest = rest.div_rem(&g)?.0;
                if rest.deg_or_zero() > 0 {
                    h = h.rem(&rest)?;
                }
            }
            d += 1;
        }
        if rest.deg_or_zero() > 0 {
            parts.push(rest.deg_or_zero());
        }
        Ok(FactorizationType::new(parts))
    }
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64, c: &[i64]) -> FpPoly {
        FpPoly::from_i64s(PrimeModulus::new(p).unwrap(), c)
    }

    #[test]
    fn frobenius_hand_values() {
        let f = fp(3, &[-2, 0, 1]);
        assert_eq!(f.frobenius_power(0).unwrap(), fp(3, &[0, 1]));
        assert_eq!(f.frobenius_power(1).unwrap(), fp(3, &[0, 2]));
    }

    #[test]
    fn frobenius_twice_is_square_of_frobenius() {
        let f = fp(31, &[5, 3, 0, 7, 1, 0, 2, 1]);
        let ring = ModRing::new(&f).unwrap();
        let one = ring.frobenius(1);
        assert_eq!(ring.frobenius(2), ring.compose(&one, &one));
        assert_eq!(ring.frobenius(2), ring.pow(&one, 31));
        assert_eq!(ring.frobenius(5), ring.pow(&ring.frobenius(4), 31));
    }

    #[test]
    fn compose_matches_horner() {
        let f = fp(101, &[3, 1, 4, 1, 5, 9, 2, 6, 1]);
        let h = fp(101, &[2, 7, 1, 8, 2, 8, 1, 8, 2, 8, 4]);
        let g = fp(101, &[1, 4, 1, 4, 2, 1, 3, 5]);
        let ring = ModRing::new(&f).unwrap();
        let fast = ring.to_poly(&ring.compose(h.coeffs(), &ring.residue(&g)));
        assert_eq!(fast, h.compose(&g).rem(&f).unwrap());
    }

    #[test]
    fn irreducibility_examples() {
        assert!(fp(3, &[-2, 0, 1]).is_irreducible().unwrap());
        assert!(!fp(7, &[-2, 0, 1]).is_irreducible().unwrap());
        assert!(fp(7, &[5, 1]).is_irreducible().unwrap());
        assert!(fp(3, &[]).is_irreducible().is_err());
        // x^4 + 1 is reducible over every F_p
        for p in [3, 5, 7, 11, 13] {
            assert!(!fp(p, &[1, 0, 0, 0, 1]).is_irreducible().unwrap());
        }
        // product of two irreducible cubics over F_2-like degrees
        let a = fp(5, &[1, 1, 0, 1]);
        assert!(!a.mul(&a).is_irreducible().unwrap());
    }

    #[test]
    fn squarefree_examples() {
        assert!(!fp(5, &[0, 0, 1]).is_squarefree());
        assert!(fp(5, &[-2, 0, 1]).is_squarefree());
        // x^5 - x^0 ... f' = 0 case: x^5 over F_5 derivative vanishes
        assert!(!fp(5, &[1, 0, 0, 0, 0, 1]).is_squarefree());
    }

    #[test]
    fn ddf_examples() {
        assert_eq!(fp(7, &[-2, 0, 1]).ddf_type().unwrap().parts(), &[1, 1]);
        assert_eq!(fp(3, &[-2, 0, 1]).ddf_type().unwrap().parts(), &[2]);
        assert_eq!(fp(5, &[0, 0, 1]).ddf_type(), Err(Error::NotSquarefree(5)));
        let t = fp(29, &[2, 0, -4, 0, 1]).ddf_type().unwrap();
        assert_eq!(t.size(), 4);
    }

    #[test]
    fn large_prime_path() {
        let p = (1u64 << 61) - 1;
        // x^2 - 3: 3 is a nonresidue mod 2^61 - 1 iff legendre says so
        let f = fp(p, &[-3, 0, 1]);
        let expect = PrimeModulus::new(p).unwrap().legendre(3) == -1;
        assert_eq!(f.is_irreducible().unwrap(), expect);
        assert_eq!(f.ddf_type().unwrap().is_single(), expect);
    }

    #[test]
    fn prime_divisor_lists() {
        assert_eq!(prime_divisors(12), vec![2, 3]);
        assert_eq!(prime_divisors(256), vec![2]);
        assert_eq!(prime_divisors(97), vec![97]);
    }
}
