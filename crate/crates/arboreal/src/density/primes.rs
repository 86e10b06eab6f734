use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffpoly::PrimeModulus;

/// The odd primes up to a bound `X`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeRange {
    bound: u64,
    primes: Vec<u64>,
}

impl PrimeRange {
    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// `π(X) - 1`, the number of odd primes up to `X`.
    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn moduli(&self) -> impl Iterator<Item = PrimeModulus> + '_ {
        self.primes.iter().map(|&p| PrimeModulus::new(p).expect("sieved odd prime"))
    }
}

/// Sieve of Eratosthenes; `bound >= 3`.
pub fn sieve_primes(bound: u64) -> Result<PrimeRange> {
    if bound < 3 {
        return Err(Error::InvalidArgument(format!("prime bound must be at least 3, got {bound}")));
    }
    let n = usize::try_from(bound).map_err(|_| Error::InvalidArgument("prime bound too large".into()))?;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    let mut i = 3;
    while i <= n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += 2 * i;
            }
        }
        i += 2;
    }
    Ok(PrimeRange { bound, primes })
}
