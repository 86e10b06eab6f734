use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::roots::{integer_roots, is_square};
use crate::error::{Error, Result};
use crate::polyseq::IntPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QuadraticGaloisLabel {
    S2,
    Reducible,
}

/// Galois group of an irreducible quartic as a transitive subgroup of `S_4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum QuarticGaloisLabel {
    S4,
    A4,
    D4,
    C4,
    V4,
    Reducible,
}

impl fmt::Display for QuadraticGaloisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Display for QuarticGaloisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn check_shape(f: &IntPoly, degree: usize) -> Result<()> {
    match f.degree() {
        Some(d) if d == degree => {}
        other => return Err(Error::DegreeMismatch { left: degree, right: other.unwrap_or(0) }),
    }
    if !f.is_monic() {
        return Err(Error::NotMonic(1));
    }
    Ok(())
}

/// `S2` iff the discriminant of the monic quadratic is not a square.
pub fn galois_quadratic(f: &IntPoly) -> Result<QuadraticGaloisLabel> {
    check_shape(f, 2)?;
    let (c, b) = (f.coeff(0), f.coeff(1));
    let disc = &b * &b - BigInt::from(4) * c;
    Ok(if is_square(&disc) { QuadraticGaloisLabel::Reducible } else { QuadraticGaloisLabel::S2 })
}

struct Quartic {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl Quartic {
    fn new(f: &IntPoly) -> Result<Self> {
        check_shape(f, 4)?;
        Ok(Quartic { d: f.coeff(0), c: f.coeff(1), b: f.coeff(2), a: f.coeff(3) })
    }

    /// Constant-first coefficients of the resolvent cubic, whose roots are
    /// `r1 r2 + r3 r4` and its conjugates.
    fn resolvent(&self) -> [BigInt; 4] {
        let Quartic { a, b, c, d } = self;
        let four = BigInt::from(4);
        [
            -(a * a * d - &four * b * d + c * c),
            a * c - &four * d,
            -b.clone(),
            BigInt::one(),
        ]
    }

    fn discriminant(&self) -> BigInt {
        let [s, q, p, _] = self.resolvent();
        let p2 = &p * &p;
        let q2 = &q * &q;
        &p2 * &q2 - BigInt::from(4) * &q2 * &q - BigInt::from(4) * &p2 * &p * &s - BigInt::from(27) * &s * &s
            + BigInt::from(18) * &p * &q * &s
    }

    fn has_integer_root(&self) -> bool {
        self.d.is_zero() || !integer_roots(&[self.d.clone(), self.c.clone(), self.b.clone(), self.a.clone(), BigInt::one()]).is_empty()
    }

    /// A factorization into two integer monic quadratics exists.
    fn splits_into_quadratics(&self, resolvent_roots: &[BigInt]) -> bool {
        let Quartic { a, b, c, d } = self;
        let four = BigInt::from(4);
        for t in resolvent_roots {
            // (x^2 + p x + q)(x^2 + r x + s) with q + s = t, q s = d, p + r = a, p r = b - t;
            // below q2 = 2q etc., and the x coefficient p s + r q must equal c
            let dq = t * t - &four * d;
            let dp = a * a - &four * (b - t);
            if !is_square(&dq) || !is_square(&dp) {
                continue;
            }
            let (rq, rp) = (dq.sqrt(), dp.sqrt());
            let (q2, s2) = (t + &rq, t - &rq);
            let (p2, r2) = (a + &rp, a - &rp);
            for (q2, s2) in [(&q2, &s2), (&s2, &q2)] {
                if &p2 * s2 + &r2 * q2 == &four * c {
                    return true;
                }
            }
        }
        false
    }
}

/// The resolvent cubic `x^3 - b x^2 + (ac - 4d) x - (a^2 d - 4bd + c^2)` of
/// `x^4 + a x^3 + b x^2 + c x + d`.
pub fn quartic_resolvent(f: &IntPoly) -> Result<IntPoly> {
    Ok(IntPoly::new(Quartic::new(f)?.resolvent().to_vec()))
}

/// Discriminant of a monic quartic, equal to that of its resolvent cubic.
pub fn quartic_discriminant(f: &IntPoly) -> Result<BigInt> {
    Ok(Quartic::new(f)?.discriminant())
}

/// Exact irreducibility over `Q` of a monic integer quartic.
pub fn is_irreducible_quartic_q(f: &IntPoly) -> Result<bool> {
    let q = Quartic::new(f)?;
    if q.has_integer_root() {
        return Ok(false);
    }
    let roots = integer_roots(&q.resolvent());
    Ok(!q.splits_into_quadratics(&roots))
}

/// `t` is a square in `Q(sqrt(disc))`.
fn square_over(t: &BigInt, disc: &BigInt) -> bool {
    is_square(t) || is_square(&(t * disc))
}

/// Galois group of a monic integer quartic via its resolvent cubic.
pub fn galois_quartic(f: &IntPoly) -> Result<QuarticGaloisLabel> {
    let q = Quartic::new(f)?;
    if q.has_integer_root() {
        return Ok(QuarticGaloisLabel::Reducible);
    }
    let roots = integer_roots(&q.resolvent());
    if q.splits_into_quadratics(&roots) {
        return Ok(QuarticGaloisLabel::Reducible);
    }
    let disc = q.discriminant();
    Ok(match roots.len() {
        0 if is_square(&disc) => QuarticGaloisLabel::A4,
        0 => QuarticGaloisLabel::S4,
        1 => {
            let r = &roots[0];
            let four = BigInt::from(4);
            let d1 = r * r - &four * &q.d;
            let d2 = &q.a * &q.a - &four * (&q.b - r);
            if square_over(&d1, &disc) && square_over(&d2, &disc) {
                QuarticGaloisLabel::C4
            } else {
                QuarticGaloisLabel::D4
            }
        }
        _ => QuarticGaloisLabel::V4,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn quadratics() {
        assert_eq!(galois_quadratic(&p("x^2-2")).unwrap(), QuadraticGaloisLabel::S2);
        assert_eq!(galois_quadratic(&p("x^2-4")).unwrap(), QuadraticGaloisLabel::Reducible);
        assert_eq!(galois_quadratic(&p("x^2+x+1")).unwrap(), QuadraticGaloisLabel::S2);
        assert!(galois_quadratic(&p("x^3-2")).is_err());
        assert!(galois_quadratic(&p("2*x^2-2")).is_err());
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible_quartic_q(&p("x^4-4x^2+2")).unwrap());
        assert!(!is_irreducible_quartic_q(&p("x^4-1")).unwrap());
        assert!(!is_irreducible_quartic_q(&p("x^4+2x^2+1")).unwrap());
        assert!(!is_irreducible_quartic_q(&p("x^4+4")).unwrap());
        assert!(!is_irreducible_quartic_q(&p("x^4+x^3+2x^2+x+1")).unwrap());
        assert!(is_irreducible_quartic_q(&p("x^4+x+1")).unwrap());
    }

    #[test]
    fn known_groups() {
        use QuarticGaloisLabel::*;
        let cases = [
            ("x^4-4x^2+2", C4),
            ("x^4-2", D4),
            ("x^4+x+1", S4),
            ("x^4+8x+12", A4),
            ("x^4+1", V4),
            ("x^4-10x^2+1", V4),
            ("x^4+x^3+x^2+x+1", C4),
            ("x^4-5", D4),
            ("x^4-x-1", S4),
            ("x^4-3", D4),
            ("x^4-1", Reducible),
        ];
        for (s, g) in cases {
            assert_eq!(galois_quartic(&p(s)).unwrap(), g, "{s}");
        }
    }

    #[test]
    fn resolvent_and_discriminant() {
        let f = p("x^4+x+1");
        assert_eq!(quartic_resolvent(&f).unwrap(), p("x^3-4x-1"));
        assert_eq!(quartic_discriminant(&f).unwrap(), BigInt::from(229));
        assert_eq!(quartic_discriminant(&p("x^4-2")).unwrap(), BigInt::from(-2048));
    }
}
