use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{member, radical, ClassExpr};
use crate::error::ClassError;
use crate::perm::{PermGroup, Subgroup};
use crate::primes::{is_prime, PrimeSet};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Values {
    Invariable(ClassExpr),
    PerPrime(BTreeMap<u64, ClassExpr>),
}

/// A map from the primes of its support to nonempty Fitting classes.
///
/// The class `LH(h)` it defines is the intersection over `p` in the support
/// of `h(p) E_p' N_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HFunction {
    support: PrimeSet,
    values: Values,
}

impl HFunction {
    /// The same class `x` at every prime of `support`.
    pub fn invariable(x: ClassExpr, support: PrimeSet) -> Self {
        HFunction {
            support,
            values: Values::Invariable(x),
        }
    }

    /// Explicit values on a finite support.
    pub fn per_prime(values: BTreeMap<u64, ClassExpr>) -> Result<Self, ClassError> {
        if values.keys().any(|&p| !is_prime(p)) {
            return Err(ClassError::MalformedHFunction);
        }
        let support = PrimeSet::Finite(values.keys().copied().collect());
        Ok(HFunction {
            support,
            values: Values::PerPrime(values),
        })
    }

    pub fn support(&self) -> &PrimeSet {
        &self.support
    }

    pub fn value(&self, p: u64) -> Option<&ClassExpr> {
        if !self.support.contains(p) {
            return None;
        }
        match &self.values {
            Values::Invariable(x) => Some(x),
            Values::PerPrime(m) => m.get(&p),
        }
    }

    /// The common value when every prime of the support maps to the same
    /// class expression.
    pub fn invariable_value(&self) -> Option<&ClassExpr> {
        match &self.values {
            Values::Invariable(x) => Some(x),
            Values::PerPrime(m) => {
                let mut vals = m.values();
                let first = vals.next()?;
                vals.all(|v| v == first).then_some(first)
            }
        }
    }

    pub fn is_invariable(&self) -> bool {
        match &self.values {
            Values::Invariable(_) => true,
            Values::PerPrime(m) => m.is_empty() || self.invariable_value().is_some(),
        }
    }

    /// `LH(h)` as a class expression.
    pub fn class(&self) -> ClassExpr {
        match &self.values {
            Values::Invariable(x) => ClassExpr::hartley(x.clone(), self.support.clone()),
            Values::PerPrime(m) if m.is_empty() => ClassExpr::All,
            Values::PerPrime(m) => ClassExpr::Meet(
                m.iter()
                    .map(|(&p, x)| ClassExpr::hartley(x.clone(), PrimeSet::single(p)))
                    .collect(),
            ),
        }
    }

    /// Support primes among `candidates`.
    fn primes_among(&self, candidates: &BTreeSet<u64>) -> Vec<u64> {
        match (&self.values, &self.support) {
            (Values::PerPrime(m), _) => m.keys().copied().collect(),
            (Values::Invariable(_), PrimeSet::Finite(s)) => s.iter().copied().collect(),
            (Values::Invariable(_), PrimeSet::Cofinite(_)) => candidates
                .iter()
                .copied()
                .filter(|&p| self.support.contains(p))
                .collect(),
        }
    }
}

/// Whether `g` lies in `LH(h)`.
pub fn hartley_member(g: &PermGroup, h: &HFunction) -> Result<bool, ClassError> {
    member(g, &h.class())
}

/// The product of the `h(p)`-radicals over the support of an invariable `h`.
pub fn h_radical(g: &PermGroup, h: &HFunction) -> Result<Subgroup, ClassError> {
    if !h.is_invariable() {
        return Err(ClassError::NotInvariable);
    }
    let mut primes = h.support().restrict(g.prime_support());
    if primes.is_empty() {
        match h.support().first() {
            Some(p) => primes.push(p),
            None => return Ok(g.trivial()),
        }
    }
    let mut acc = g.trivial();
    for p in primes {
        let value = h.value(p).expect("prime in support");
        acc = acc.join(&radical(g, value)?);
    }
    if cfg!(debug_assertions) {
        let x = h.invariable_value().expect("nonempty invariable support");
        assert_eq!(acc, radical(g, x)?, "h-radical differs from the X-radical");
    }
    Ok(acc)
}

/// Empirical check of the integrated and full conditions over a catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HPredicates {
    /// Every catalog member of `h(p)` lies in `LH(h)`.
    pub integrated_ok: bool,
    /// Every catalog member of `h(p)` lies in `h(q) E_q'` for `q != p`.
    pub full_ok: bool,
    pub invariable: bool,
}

pub fn hfun_predicates(h: &HFunction, catalog: &[PermGroup]) -> Result<HPredicates, ClassError> {
    let catalog_primes: BTreeSet<u64> = catalog.iter().flat_map(|g| g.prime_support().iter().copied()).collect();
    let primes = h.primes_among(&catalog_primes);
    let lh = h.class();

    let mut integrated_ok = true;
    let mut full_ok = true;
    for g in catalog {
        let in_lh = member(g, &lh)?;
        for &p in &primes {
            let hp = h.value(p).expect("support prime");
            if !member(g, hp)? {
                continue;
            }
            integrated_ok &= in_lh;
            for &q in primes.iter().filter(|&&q| q != p) {
                let target = ClassExpr::product(
                    h.value(q).expect("support prime").clone(),
                    ClassExpr::PiGroups(PrimeSet::all_but(q)),
                );
                full_ok &= member(g, &target)?;
            }
        }
    }
    Ok(HPredicates {
        integrated_ok,
        full_ok,
        invariable: h.is_invariable(),
    })
}
