use std::collections::HashMap;
use std::sync::Mutex;

use super::intpoly::IntPoly;
use super::spec::IntPolySeqSpec;
use crate::error::{Error, Result};
use crate::ffpoly::{FpPoly, PrimeModulus};

/// Exact `f^(n) = f_1 ∘ .. ∘ f_n`, with `f^(0) = x`.
///
/// Coefficients grow doubly exponentially in `n`, so callers bound the degree.
pub fn compose_prefix_exact(spec: &IntPolySeqSpec, n: usize, degree_limit: usize) -> Result<IntPoly> {
    let degree = leaf_degree(spec, n)?;
    if degree > degree_limit as u128 {
        return Err(Error::DegreeLimitExceeded { degree, limit: degree_limit as u128 });
    }
    let mut acc = IntPoly::x();
    for k in 1..=n {
        acc = acc.compose(&spec.nth_poly(k)?);
    }
    Ok(acc)
}

/// `f^(n) mod p`, composed directly over `F_p`.
pub fn compose_prefix_mod_p(spec: &IntPolySeqSpec, n: usize, p: PrimeModulus) -> Result<FpPoly> {
    let members = spec.first(n)?;
    Ok(PrefixesModP::new(&members, p).last().unwrap_or_else(|| FpPoly::x(p)))
}

fn leaf_degree(spec: &IntPolySeqSpec, n: usize) -> Result<u128> {
    (1..=n).try_fold(1u128, |acc, k| Ok(acc.saturating_mul(spec.degree(k)? as u128)))
}

/// Yields `f^(1) mod p, f^(2) mod p, ..` for the given members, each obtained
/// from the previous one as `f^(k) = f^(k-1) ∘ f_k`.
#[derive(Debug, Clone)]
pub struct PrefixesModP {
    members: Vec<FpPoly>,
    current: FpPoly,
    next: usize,
}

impl PrefixesModP {
    pub fn new(members: &[IntPoly], p: PrimeModulus) -> Self {
        PrefixesModP { members: members.iter().map(|f| f.to_fp(p)).collect(), current: FpPoly::x(p), next: 0 }
    }
}

impl Iterator for PrefixesModP {
    type Item = FpPoly;

    fn next(&mut self) -> Option<FpPoly> {
        let f = self.members.get(self.next)?;
        self.current = self.current.compose(f);
        self.next += 1;
        Some(self.current.clone())
    }
}

/// Memoized compositions of one sequence: `f^(n) mod p` per `(n, p)`, and
/// exact `f^(n)` below a degree limit.
#[derive(Debug)]
pub struct CompositionCache {
    spec: IntPolySeqSpec,
    exact_limit: usize,
    mod_p: Mutex<HashMap<(usize, u64), FpPoly>>,
    exact: Mutex<HashMap<usize, IntPoly>>,
}

impl CompositionCache {
    pub fn new(spec: IntPolySeqSpec, exact_limit: usize) -> Self {
        CompositionCache { spec, exact_limit, mod_p: Mutex::default(), exact: Mutex::default() }
    }

    pub fn spec(&self) -> &IntPolySeqSpec {
        &self.spec
    }

    pub fn mod_p(&self, n: usize, p: PrimeModulus) -> Result<FpPoly> {
        if let Some(f) = self.mod_p.lock().unwrap().get(&(n, p.get())) {
            return Ok(f.clone());
        }
        // computed outside the lock; a concurrent duplicate insert stores an equal value
        let f = compose_prefix_mod_p(&self.spec, n, p)?;
        self.mod_p.lock().unwrap().insert((n, p.get()), f.clone());
        Ok(f)
    }

    pub fn exact(&self, n: usize) -> Result<IntPoly> {
        if let Some(f) = self.exact.lock().unwrap().get(&n) {
            return Ok(f.clone());
        }
        let f = compose_prefix_exact(&self.spec, n, self.exact_limit)?;
        self.exact.lock().unwrap().insert(n, f.clone());
        Ok(f)
    }

    pub fn len(&self) -> usize {
        self.mod_p.lock().unwrap().len() + self.exact.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
