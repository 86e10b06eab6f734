use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

fn trim(f: &[BigInt]) -> &[BigInt] {
    let n = f.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1);
    &f[..n]
}

fn eval(f: &[BigInt], x: &BigInt) -> BigInt {
    f.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn sign(f: &[BigInt], x: &BigInt) -> Ordering {
    eval(f, x).cmp(&BigInt::zero())
}

fn derivative(f: &[BigInt]) -> Vec<BigInt> {
    f.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect()
}

/// Integer points splitting `[-bound, bound]` so that every real sign change
/// of `f` either sits at one of them or inside a unit interval between two of
/// them, and `f` has no sign change inside longer gaps.
fn breakpoints(f: &[BigInt], bound: &BigInt) -> BTreeSet<BigInt> {
    if f.len() <= 1 {
        return [-bound.clone(), bound.clone()].into();
    }
    let inner = breakpoints(&derivative(f), bound);
    let mut out = inner.clone();
    let pts: Vec<&BigInt> = inner.iter().collect();
    for w in pts.windows(2) {
        let (mut u, mut v) = (w[0].clone(), w[1].clone());
        let su = sign(f, &u);
        if su == Ordering::Equal {
            continue;
        }
        let sv = sign(f, &v);
        if sv == Ordering::Equal || sv == su {
            continue;
        }
        // f is monotone on [u, v]
        while &v - &u > BigInt::one() {
            let m: BigInt = (&u + &v).div_floor(&BigInt::from(2));
            match sign(f, &m) {
                Ordering::Equal => {
                    u = m.clone();
                    v = m;
                    break;
                }
                s if s == su => u = m,
                _ => v = m,
            }
        }
        out.insert(u);
        out.insert(v);
    }
    out
}

/// The distinct integer roots of `f` (constant term first), ascending.
pub(crate) fn integer_roots(f: &[BigInt]) -> Vec<BigInt> {
    let f = trim(f);
    if f.len() <= 1 {
        return Vec::new();
    }
    let lead = f.last().unwrap().abs();
    let max = f[..f.len() - 1].iter().map(|c| c.abs()).max().unwrap_or_default();
    let bound = BigInt::one() + max.div_ceil(&lead);
    breakpoints(f, &bound).into_iter().filter(|x| eval(f, x).is_zero()).collect()
}

/// `true` if `n` is the square of an integer.
pub(crate) fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}
