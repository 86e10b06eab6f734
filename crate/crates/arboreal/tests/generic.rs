mod common;

use arboreal::density::{frobenius_histogram, sieve_primes};
use arboreal::generic::{
    exceptional_growth_curve, galois_quadratic, galois_quartic, is_irreducible_quartic_q,
    sample_generic_density_seeded, ClassifierMode, QuadraticGaloisLabel, QuarticGaloisLabel,
};
use arboreal::polyseq::{IntPoly, IntPolySeqSpec};
use arboreal::wreath::SphericalIndex;
use arboreal::Partition;
use common::frobenius_label;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn idx(d: &[usize]) -> SphericalIndex {
    SphericalIndex::new(d.to_vec()).unwrap()
}

fn brute_is_square(n: i64) -> bool {
    (0..).take_while(|k: &i64| k * k <= n).any(|k| k * k == n)
}

fn quartic(c: [i64; 4]) -> IntPoly {
    IntPoly::from_i64s(&[c[0], c[1], c[2], c[3], 1])
}

fn compose(f1: [i64; 2], f2: [i64; 2]) -> IntPoly {
    IntPoly::from_i64s(&[f1[0], f1[1], 1]).compose(&IntPoly::from_i64s(&[f2[0], f2[1], 1]))
}

/// Reducibility of `x^4 + a x^3 + b x^2 + c x + d` by searching for integer
/// roots among the divisors of `d` and for quadratic factors with bounded
/// coefficients.
fn brute_reducible(f: [i64; 4]) -> bool {
    let [d, c, b, a] = f;
    let eval = |x: i64| (((x + a) * x + b) * x + c) * x + d;
    if d == 0 {
        return true;
    }
    let divisors: Vec<i64> = (1..=d.abs()).filter(|k| d % k == 0).flat_map(|k| [k, -k]).collect();
    if divisors.iter().any(|&r| eval(r) == 0) {
        return true;
    }
    let bound = 2 * (1 + [a, b, c, d].iter().map(|x| x.abs()).max().unwrap());
    for &q in &divisors {
        let s = d / q;
        for p in -bound..=bound {
            let r = a - p;
            if p * r + q + s == b && p * s + q * r == c {
                return true;
            }
        }
    }
    false
}

#[test]
fn quadratic_label_is_disc_squareness() {
    for b in -200i64..=200 {
        for c in -200i64..=200 {
            let f = IntPoly::from_i64s(&[c, b, 1]);
            let nonsquare = !brute_is_square(b * b - 4 * c);
            assert_eq!(galois_quadratic(&f).unwrap() == QuadraticGaloisLabel::S2, nonsquare, "x^2 + {b}x + {c}");
        }
    }
}

#[test]
fn quartic_irreducibility_matches_factor_search() {
    for a in -4..=4 {
        for b in -4..=4 {
            for c in -4..=4 {
                for d in -4..=4 {
                    let f = [d, c, b, a];
                    assert_eq!(is_irreducible_quartic_q(&quartic(f)).unwrap(), !brute_reducible(f), "{f:?}");
                }
            }
        }
    }
}

#[test]
fn random_quartics_agree_with_frobenius_statistics() {
    let range = sieve_primes(10_000).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut checked = 0;
    while checked < 200 {
        let f = quartic([(); 4].map(|_| rng.gen_range(-10..=10)));
        if !is_irreducible_quartic_q(&f).unwrap() {
            continue;
        }
        assert_eq!(galois_quartic(&f).unwrap(), frobenius_label(&f, &range), "{f}");
        checked += 1;
    }
}

#[test]
fn structured_quartics_agree_with_frobenius_statistics() {
    use QuarticGaloisLabel::*;
    let range = sieve_primes(10_000).unwrap();
    let mut seen = std::collections::BTreeSet::new();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut polys: Vec<IntPoly> = ["x^4-4x^2+2", "x^4+8x+12", "x^4-2", "x^4+1", "x^4+x^3+x^2+x+1", "x^4-x-1"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    for _ in 0..150 {
        let draw = |rng: &mut ChaCha8Rng| [rng.gen_range(-6..=6), rng.gen_range(-6..=6)];
        polys.push(compose(draw(&mut rng), draw(&mut rng)));
        // even quartics x^4 + A x^2 + B
        polys.push(quartic([rng.gen_range(-30..=30), 0, rng.gen_range(-12..=12), 0]));
    }
    for f in polys {
        let label = galois_quartic(&f).unwrap();
        if label == Reducible {
            assert!(!is_irreducible_quartic_q(&f).unwrap());
            continue;
        }
        assert_eq!(label, frobenius_label(&f, &range), "{f}");
        seen.insert(label);
    }
    assert_eq!(seen, [S4, A4, D4, C4, V4].into());
}

#[test]
fn d4_compositions_have_quarter_full_cycles() {
    let range = sieve_primes(10_000).unwrap();
    let index = idx(&[2, 2]);
    let mut found = 0;
    for seed in 0.. {
        let spec = IntPolySeqSpec::random_box(index.clone(), 25, seed).unwrap();
        let f = arboreal::polyseq::compose_prefix_exact(&spec, 2, 4).unwrap();
        if galois_quartic(&f).unwrap() != QuarticGaloisLabel::D4 {
            continue;
        }
        let hist = frobenius_histogram(&spec, 2, &range, 1).unwrap();
        let n = hist.distribution.total() as f64;
        let freq = hist.frequency(&Partition::single(4));
        assert!((freq - 0.25).abs() <= 3.0 * (0.25 * 0.75 / n).sqrt(), "{spec}: {freq}");
        found += 1;
        if found == 30 {
            break;
        }
    }
}

#[test]
fn quadratic_box_fraction_matches_exhaustive_count() {
    let n = 100i64;
    let square = (-n..=n)
        .flat_map(|b| (-n..=n).map(move |c| b * b - 4 * c))
        .filter(|&disc| brute_is_square(disc))
        .count() as f64;
    let exact = 1.0 - square / ((2 * n + 1) * (2 * n + 1)) as f64;
    let report = sample_generic_density_seeded(&idx(&[2]), 100, 10_000, ClassifierMode::Exact, 1, 0).unwrap();
    assert!((report.fraction - exact).abs() <= 4.0 * report.stderr, "{} vs {exact}", report.fraction);
    let curve = exceptional_growth_curve(&idx(&[2]), &[100], 1).unwrap();
    assert_eq!(curve.points[0].exceptional as f64, square);
}

#[test]
fn sampled_fraction_does_not_fall_with_the_box() {
    let fracs: Vec<(f64, f64)> = [5, 10, 15, 20, 25]
        .iter()
        .map(|&n| {
            let r = sample_generic_density_seeded(&idx(&[2, 2]), n, 20_000, ClassifierMode::Exact, 42, 0).unwrap();
            (r.fraction, r.stderr)
        })
        .collect();
    for w in fracs.windows(2) {
        let (a, b) = (w[0], w[1]);
        assert!(b.0 >= a.0 - 2.0 * (a.1 * a.1 + b.1 * b.1).sqrt(), "{fracs:?}");
    }
}

#[test]
fn sampling_is_reproducible() {
    let run = |threads| sample_generic_density_seeded(&idx(&[2, 2]), 12, 5_000, ClassifierMode::Exact, 7, threads);
    assert_eq!(run(1).unwrap(), run(1).unwrap());
    assert_eq!(run(1).unwrap(), run(3).unwrap());
    let heuristic = ClassifierMode::Heuristic { prime_bound: 800, tolerance: 0.2 };
    let h = |threads| sample_generic_density_seeded(&idx(&[2, 2, 2]), 8, 40, heuristic, 7, threads).unwrap();
    assert_eq!(h(1), h(2));
}

#[test]
fn heuristic_and_exact_modes_roughly_agree() {
    let exact = sample_generic_density_seeded(&idx(&[2, 2]), 10, 300, ClassifierMode::Exact, 5, 0).unwrap();
    let mode = ClassifierMode::Heuristic { prime_bound: 5_000, tolerance: 0.12 };
    let heuristic = sample_generic_density_seeded(&idx(&[2, 2]), 10, 300, mode, 5, 0).unwrap();
    assert_eq!(heuristic.samples, exact.samples);
    assert!((heuristic.fraction - exact.fraction).abs() < 0.05, "{} vs {}", heuristic.fraction, exact.fraction);
}

#[test]
fn growth_curve_shape() {
    let curve = exceptional_growth_curve(&idx(&[2, 2]), &[2, 4, 6, 8], 0).unwrap();
    for w in curve.points.windows(2) {
        assert!(w[0].exceptional <= w[1].exceptional);
    }
    for p in &curve.points {
        assert_eq!(p.denominator, (2 * p.bound + 1).pow(4));
        assert!((0.0..=1.0).contains(&p.fraction));
    }
    assert!(curve.slope.is_some());
    assert_eq!(curve.cohen_exponent, 3.5);
}
