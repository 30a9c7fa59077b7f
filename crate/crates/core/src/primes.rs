//! Prime arithmetic on group orders and finite/cofinite sets of primes.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{GroupError, ParseError};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// Product of the `p`-parts of `n` over primes `p` in `pi`.
pub fn pi_part(n: u64, pi: &PrimeSet) -> u64 {
    prime_divisors(n)
        .into_iter()
        .filter(|&p| pi.contains(p))
        .map(|p| p_part(n, p))
        .product()
}

pub fn is_p_power(n: u64, p: u64) -> bool {
    n >= 1 && p_part(n, p) == n
}

/// A set of primes, either finite or the complement of a finite set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PrimeSet {
    Finite(BTreeSet<u64>),
    Cofinite(BTreeSet<u64>),
}

impl PrimeSet {
    /// Finite set of the given primes. Panics on a non-prime; use
    /// [`PrimeSet::try_finite`] for unchecked input.
    pub fn of(primes: &[u64]) -> Self {
        Self::try_finite(primes.iter().copied()).expect("PrimeSet::of: non-prime entry")
    }

    pub fn try_finite(primes: impl IntoIterator<Item = u64>) -> Result<Self, GroupError> {
        Ok(PrimeSet::Finite(checked(primes)?))
    }

    pub fn try_cofinite(excluded: impl IntoIterator<Item = u64>) -> Result<Self, GroupError> {
        Ok(PrimeSet::Cofinite(checked(excluded)?))
    }

    pub fn single(p: u64) -> Self {
        Self::of(&[p])
    }

    /// All primes except `p`.
    pub fn all_but(p: u64) -> Self {
        Self::single(p).complement()
    }

    pub fn all() -> Self {
        PrimeSet::Cofinite(BTreeSet::new())
    }

    pub fn empty() -> Self {
        PrimeSet::Finite(BTreeSet::new())
    }

    pub fn contains(&self, p: u64) -> bool {
        match self {
            PrimeSet::Finite(s) => s.contains(&p),
            PrimeSet::Cofinite(s) => !s.contains(&p),
        }
    }

    pub fn complement(&self) -> Self {
        match self {
            PrimeSet::Finite(s) => PrimeSet::Cofinite(s.clone()),
            PrimeSet::Cofinite(s) => PrimeSet::Finite(s.clone()),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, PrimeSet::Finite(_))
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, PrimeSet::Finite(s) if s.is_empty())
    }

    /// The listed primes (members when finite, exclusions when cofinite).
    pub fn listed(&self) -> &BTreeSet<u64> {
        match self {
            PrimeSet::Finite(s) | PrimeSet::Cofinite(s) => s,
        }
    }

    /// Members of this set among the given primes, preserving order.
    pub fn restrict(&self, primes: &[u64]) -> Vec<u64> {
        primes.iter().copied().filter(|&p| self.contains(p)).collect()
    }

    /// Smallest member of the set, if any.
    pub fn first(&self) -> Option<u64> {
        match self {
            PrimeSet::Finite(s) => s.iter().next().copied(),
            PrimeSet::Cofinite(s) => (2..).find(|&p| is_prime(p) && !s.contains(&p)),
        }
    }

    /// Whether every prime divisor of `n` lies in the set.
    pub fn covers(&self, n: u64) -> bool {
        prime_divisors(n).into_iter().all(|p| self.contains(p))
    }
}

fn checked(primes: impl IntoIterator<Item = u64>) -> Result<BTreeSet<u64>, GroupError> {
    primes
        .into_iter()
        .map(|p| {
            if is_prime(p) {
                Ok(p)
            } else {
                Err(GroupError::NotPrime(p))
            }
        })
        .collect()
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.is_finite() {
            f.write_str("~")?;
        }
        f.write_str("{")?;
        for (i, p) in self.listed().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for PrimeSet {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = crate::fitting::Parser::new(s);
        let set = parser.prime_set()?;
        parser.finish()?;
        Ok(set)
    }
}
