//! Fast certificate that `f_1(f_2)` has Galois group `D_4`.
//!
//! The group of a composition of two quadratics always sits inside
//! `S_2 ≀ S_2 = D_4`. A Frobenius of type `(4)` makes it transitive with a
//! 4-cycle and one of type `(2,1,1)` adds a transposition, which together
//! generate all of `D_4`.

use num_bigint::BigInt;

use super::galois::{galois_quartic, QuarticGaloisLabel};
use crate::polyseq::IntPoly;

/// Odd primes below 200.
const PRIMES: [u64; 45] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107,
    109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199,
];

/// Constant-first coefficients of `(x^2 + c1 x + c0) ∘ (x^2 + b1 x + b0)`
/// below the leading 1.
pub(crate) fn compose_quadratics(c0: i64, c1: i64, b0: i64, b1: i64) -> [i64; 4] {
    [b0 * b0 + c1 * b0 + c0, 2 * b0 * b1 + c1 * b1, b1 * b1 + 2 * b0 + c1, 2 * b1]
}

/// Discriminant of the monic quartic modulo a small prime `p`.
fn discriminant_mod(f: &[i64; 4], p: u64) -> i128 {
    let m = p as i128;
    let [d, c, b, a] = f.map(|x| i128::from(x).rem_euclid(m));
    let r = -b;
    let q = (a * c - 4 * d) % m;
    let s = -(a * a * d - 4 * b * d + c * c) % m;
    (r * r * q * q - 4 * q * q * q - 4 * r * r * r * s - 27 * s * s + 18 * r * q * s).rem_euclid(m)
}

/// Arithmetic in `F_p[x] / (x^4 + f3 x^3 + .. + f0)`.
struct Ring {
    p: u64,
    f: [u64; 4],
}

impl Ring {
    fn new(f: &[i64; 4], p: u64) -> Self {
        Ring { p, f: f.map(|c| c.rem_euclid(p as i64) as u64) }
    }

    fn mul(&self, a: &[u64; 4], b: &[u64; 4]) -> [u64; 4] {
        let p = self.p;
        let mut t = [0u64; 7];
        for i in 0..4 {
            for j in 0..4 {
                t[i + j] = (t[i + j] + a[i] * b[j]) % p;
            }
        }
        for k in (4..7).rev() {
            let c = t[k];
            for j in 0..4 {
                t[k - 4 + j] = (t[k - 4 + j] + (p - c) * self.f[j]) % p;
            }
        }
        [t[0], t[1], t[2], t[3]]
    }

    fn pow(&self, base: &[u64; 4], mut e: u64) -> [u64; 4] {
        let mut acc = [1, 0, 0, 0];
        let mut b = *base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        acc
    }

    fn root_count(&self) -> usize {
        let p = self.p;
        (0..p)
            .filter(|&x| {
                let v = self.f.iter().rev().fold(1u64, |acc, &c| (acc * x + c) % p);
                v == 0
            })
            .count()
    }

    /// No roots and `x^(p^2) != x`.
    fn is_irreducible_without_roots(&self) -> bool {
        let x = [0, 1, 0, 0];
        let xp = self.pow(&x, self.p);
        self.pow(&xp, self.p) != x
    }
}

/// `true` if some small prime certifies `D_4`; `false` means undecided.
pub(crate) fn certifies_d4(f: &[i64; 4]) -> bool {
    let (mut cycle, mut transposition) = (false, false);
    for p in PRIMES {
        if discriminant_mod(f, p) == 0 {
            continue;
        }
        let ring = Ring::new(f, p);
        match ring.root_count() {
            2 => transposition = true,
            0 if !cycle => cycle = ring.is_irreducible_without_roots(),
            _ => {}
        }
        if cycle && transposition {
            return true;
        }
    }
    false
}

/// The Galois group of `f_1(f_2)` for monic quadratics given by their lower
/// coefficients, trying the certificate before the exact classifier.
pub(crate) fn classify_composition(c0: i64, c1: i64, b0: i64, b1: i64) -> QuarticGaloisLabel {
    let f = compose_quadratics(c0, c1, b0, b1);
    if certifies_d4(&f) {
        return QuarticGaloisLabel::D4;
    }
    let mut coeffs: Vec<BigInt> = f.iter().map(|&c| BigInt::from(c)).collect();
    coeffs.push(BigInt::from(1));
    galois_quartic(&IntPoly::new(coeffs)).expect("monic quartic")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generic::quartic_discriminant;

    fn exact(c0: i64, c1: i64, b0: i64, b1: i64) -> QuarticGaloisLabel {
        let f = compose_quadratics(c0, c1, b0, b1);
        let g = IntPoly::from_i64s(&[f[0], f[1], f[2], f[3], 1]);
        galois_quartic(&g).unwrap()
    }

    #[test]
    fn composition_matches_intpoly() {
        let f1 = IntPoly::from_i64s(&[3, -2, 1]);
        let f2 = IntPoly::from_i64s(&[-5, 7, 1]);
        let c = compose_quadratics(3, -2, -5, 7);
        assert_eq!(f1.compose(&f2), IntPoly::from_i64s(&[c[0], c[1], c[2], c[3], 1]));
    }

    #[test]
    fn discriminant_matches_bigint() {
        for f in [[2, 0, -4, 0], [1, 1, 0, 0], [-7, 3, 5, -2], [1_000_003, -99_999, 12_345, 777]] {
            let g = IntPoly::from_i64s(&[f[0], f[1], f[2], f[3], 1]);
            let disc = quartic_discriminant(&g).unwrap();
            for p in PRIMES {
                let expect: BigInt = ((disc.clone() % p) + p) % p;
                assert_eq!(BigInt::from(discriminant_mod(&f, p)), expect, "{f:?} mod {p}");
            }
        }
    }

    #[test]
    fn certificate_is_sound_on_a_small_box() {
        for c0 in -3..=3 {
            for c1 in -3..=3 {
                for b0 in -3..=3 {
                    for b1 in -3..=3 {
                        let e = exact(c0, c1, b0, b1);
                        if certifies_d4(&compose_quadratics(c0, c1, b0, b1)) {
                            assert_eq!(e, QuarticGaloisLabel::D4, "{c0} {c1} {b0} {b1}");
                        }
                        assert_eq!(classify_composition(c0, c1, b0, b1), e);
                    }
                }
            }
        }
    }

    #[test]
    fn x2_minus_2_twice_is_not_certified() {
        // x^4 - 4x^2 + 2 has group C4
        assert!(!certifies_d4(&compose_quadratics(-2, 0, -2, 0)));
        assert_eq!(classify_composition(-2, 0, -2, 0), QuarticGaloisLabel::C4);
    }
}
