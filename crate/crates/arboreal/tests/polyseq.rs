use arboreal::ffpoly::PrimeModulus;
use arboreal::polyseq::{compose_prefix_exact, compose_prefix_mod_p, CompositionCache, IntPoly, IntPolySeqSpec, PrefixesModP};
use arboreal::wreath::SphericalIndex;
use arboreal::Error;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PRIMES: [u64; 5] = [3, 5, 101, 65_537, 1_000_000_007];

fn random_monic(rng: &mut ChaCha8Rng) -> IntPoly {
    let d = rng.gen_range(1..=3);
    let mut c: Vec<i64> = (0..d).map(|_| rng.gen_range(-20..=20)).collect();
    c.push(1);
    IntPoly::from_i64s(&c)
}

fn random_spec(rng: &mut ChaCha8Rng) -> IntPolySeqSpec {
    match rng.gen_range(0..4) {
        0 => IntPolySeqSpec::constant(random_monic(rng)).unwrap(),
        1 => IntPolySeqSpec::fm_family([3, 5, 7][rng.gen_range(0..3)]).unwrap(),
        2 => {
            let d: Vec<usize> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(1..=3)).collect();
            IntPolySeqSpec::random_box(SphericalIndex::new(d).unwrap(), rng.gen_range(0..=30), rng.gen()).unwrap()
        }
        _ => IntPolySeqSpec::explicit((0..3).map(|_| random_monic(rng)).collect()).unwrap(),
    }
}

#[test]
fn mod_p_composition_matches_exact_reduction() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for case in 0..100 {
        let spec = random_spec(&mut rng);
        for n in 1..=3 {
            let exact = compose_prefix_exact(&spec, n, 64).unwrap();
            assert_eq!(exact.degree().unwrap(), spec.spherical_index(n).unwrap().leaf_count());
            assert!(exact.is_monic());
            for p in PRIMES {
                let p = PrimeModulus::new(p).unwrap();
                assert_eq!(compose_prefix_mod_p(&spec, n, p).unwrap(), exact.to_fp(p), "case {case}: {spec} n={n}");
            }
        }
    }
}

#[test]
fn prefixes_are_successive_compositions() {
    let spec: IntPolySeqSpec = "list:x^2+1;x^3-x+2;x^2-3x".parse().unwrap();
    let members = spec.first(3).unwrap();
    let p = PrimeModulus::new(101).unwrap();
    let prefixes: Vec<_> = PrefixesModP::new(&members, p).collect();
    assert_eq!(prefixes.len(), 3);
    for (n, f) in prefixes.iter().enumerate() {
        assert_eq!(*f, compose_prefix_exact(&spec, n + 1, 100).unwrap().to_fp(p));
    }
    assert_eq!(spec.nth_poly(4).unwrap_err(), Error::SequenceExhausted { len: 3, k: 4 });
}

#[test]
fn exact_composition_respects_degree_limit() {
    let spec: IntPolySeqSpec = "const:x^2-2".parse().unwrap();
    assert!(compose_prefix_exact(&spec, 5, 32).is_ok());
    assert_eq!(
        compose_prefix_exact(&spec, 6, 32).unwrap_err(),
        Error::DegreeLimitExceeded { degree: 64, limit: 32 }
    );
}

#[test]
fn cache_returns_the_same_polynomials() {
    let spec: IntPolySeqSpec = "fmf:3".parse().unwrap();
    let cache = CompositionCache::new(spec.clone(), 16);
    let p = PrimeModulus::new(7).unwrap();
    assert!(cache.is_empty());
    let a = cache.mod_p(3, p).unwrap();
    assert_eq!(cache.mod_p(3, p).unwrap(), a);
    assert_eq!(a, compose_prefix_mod_p(&spec, 3, p).unwrap());
    assert_eq!(cache.exact(2).unwrap(), compose_prefix_exact(&spec, 2, 16).unwrap());
    assert_eq!(cache.len(), 2);
}

#[test]
fn fm_family_members() {
    let spec = IntPolySeqSpec::fm_family(3).unwrap();
    // k = 1: (x - 27)^2 + 3
    assert_eq!(spec.nth_poly(1).unwrap(), "x^2 - 54x + 732".parse().unwrap());
    let f2 = spec.nth_poly(2).unwrap();
    assert_eq!(f2.coeff(1), BigInt::from(-2 * 243));
    assert_eq!(f2.coeff(0), BigInt::from(243 * 243 + 27));
    assert!(IntPolySeqSpec::fm_family(9).is_err());
}

#[test]
fn random_box_is_reproducible_and_bounded() {
    let index = SphericalIndex::new(vec![2, 3]).unwrap();
    let a = IntPolySeqSpec::random_box(index.clone(), 10, 99).unwrap();
    let b = IntPolySeqSpec::random_box(index, 10, 99).unwrap();
    assert_eq!(a.first(4).unwrap(), b.first(4).unwrap());
    for (k, f) in a.first(4).unwrap().iter().enumerate() {
        assert_eq!(f.degree().unwrap(), if k == 0 { 2 } else { 3 });
        assert!(f.is_monic());
        assert!(f.coeffs().iter().all(|c| c.magnitude() <= &10u32.into()));
    }
}

#[test]
fn spec_text_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let spec = random_spec(&mut rng);
        let back: IntPolySeqSpec = spec.to_string().parse().unwrap();
        assert_eq!(back, spec);
        let json: IntPolySeqSpec = serde_json::from_str(&serde_json::to_string(&spec).unwrap()).unwrap();
        assert_eq!(json, spec);
    }
}

#[test]
fn list_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("seq.txt");
    std::fs::write(&path, "# two members\n-2,0,1\n\nx^3 + x + 1\n").unwrap();
    let spec: IntPolySeqSpec = format!("file:{}", path.display()).parse().unwrap();
    assert_eq!(spec.len(), Some(2));
    assert_eq!(spec.nth_poly(2).unwrap(), IntPoly::from_i64s(&[1, 1, 0, 1]));
    std::fs::write(&path, "2,0,3\n").unwrap();
    assert!(IntPolySeqSpec::from_list_file(&path).is_err());
}
