#![allow(dead_code)]

use std::collections::BTreeMap;

use arboreal::density::{frobenius_histogram, PrimeRange};
use arboreal::ffpoly::{FpPoly, PrimeModulus};
use arboreal::generic::QuarticGaloisLabel;
use arboreal::polyseq::{IntPoly, IntPolySeqSpec};
use arboreal::Partition;

/// Element counts per cycle type for each transitive subgroup of `S_4`.
pub fn quartic_group_types(label: QuarticGaloisLabel) -> Vec<(&'static str, u64)> {
    use QuarticGaloisLabel::*;
    let counts: [u64; 5] = match label {
        S4 => [1, 6, 3, 8, 6],
        A4 => [1, 0, 3, 8, 0],
        D4 => [1, 2, 3, 0, 2],
        C4 => [1, 0, 1, 0, 2],
        V4 => [1, 0, 3, 0, 0],
        Reducible => panic!("no group"),
    };
    ["(1,1,1,1)", "(2,1,1)", "(2,2)", "(3,1)", "(4)"].into_iter().zip(counts).collect()
}

/// Guesses the Galois group of an irreducible quartic from its Frobenius
/// statistics: candidates whose elements cover every observed type, then the
/// one closest in total variation.
pub fn frobenius_label(f: &IntPoly, range: &PrimeRange) -> QuarticGaloisLabel {
    use QuarticGaloisLabel::*;
    let spec = IntPolySeqSpec::explicit(vec![f.clone()]).unwrap();
    let hist = frobenius_histogram(&spec, 1, range, 1).unwrap();
    let observed: BTreeMap<String, f64> =
        hist.distribution.iter().map(|(t, _)| (t.to_string(), hist.distribution.frequency(t))).collect();
    let mut best = None;
    for g in [S4, A4, D4, C4, V4] {
        let types = quartic_group_types(g);
        let order: u64 = types.iter().map(|t| t.1).sum();
        let support_ok = observed.keys().all(|t| types.iter().any(|(s, c)| s == t && *c > 0));
        if !support_ok {
            continue;
        }
        let tv: f64 = 0.5
            * types
                .iter()
                .map(|(s, c)| (observed.get(*s).copied().unwrap_or(0.0) - *c as f64 / order as f64).abs())
                .sum::<f64>();
        if best.is_none_or(|(_, b)| tv < b) {
            best = Some((g, tv));
        }
    }
    best.expect("S4 covers every type").0
}

/// Every monic polynomial of degree `d` over `F_p`.
pub fn all_monic(p: PrimeModulus, d: usize) -> Vec<FpPoly> {
    let q = p.get() as usize;
    (0..q.pow(d as u32))
        .map(|mut k| {
            let mut c = Vec::with_capacity(d + 1);
            for _ in 0..d {
                c.push((k % q) as u64);
                k /= q;
            }
            c.push(1);
            FpPoly::new(p, c)
        })
        .collect()
}

/// Factorization type by repeated trial division with every monic
/// polynomial of increasing degree.
pub fn brute_factor_type(f: &FpPoly) -> Partition {
    let p = f.modulus();
    let mut rest = f.monic();
    let mut parts = Vec::new();
    let mut d = 1;
    while rest.degree().unwrap() > 0 {
        if 2 * d > rest.degree().unwrap() {
            parts.push(rest.degree().unwrap());
            break;
        }
        let mut found = false;
        for g in all_monic(p, d) {
            let (q, r) = rest.div_rem(&g).unwrap();
            if r.is_zero() {
                parts.push(d);
                rest = q;
                found = true;
                break;
            }
        }
        if !found {
            d += 1;
        }
    }
    Partition::new(parts)
}
