use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use super::lattice::{Lattice, LatticeData};
use super::permutation::Permutation;
use super::subgroup::Subgroup;
use crate::error::GroupError;
use crate::primes::prime_divisors;

pub const DEFAULT_MAX_ELEMENTS: usize = 5040;
pub const DEFAULT_MAX_SUBGROUP_ORDER: usize = 500;

// Multiplication tables are only materialized up to this order.
const TABLE_LIMIT: usize = 1024;

/// Size bounds for element closure and subgroup enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub max_elements: usize,
    pub max_subgroup_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: DEFAULT_MAX_ELEMENTS,
            max_subgroup_order: DEFAULT_MAX_SUBGROUP_ORDER,
        }
    }
}

struct GroupData {
    degree: usize,
    generators: Vec<Permutation>,
    // Sorted lexicographically by images, so index 0 is the identity.
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverse: Vec<u32>,
    table: Option<Vec<u32>>,
    gen_ids: Vec<usize>,
    prime_support: Vec<u64>,
    limits: Limits,
    lattice: OnceLock<LatticeData>,
}

/// A finite permutation group with its full element list.
///
/// Cloning is cheap; clones share elements and the cached subgroup lattice.
/// Elements are addressed by index into [`PermGroup::elements`].
#[derive(Clone)]
pub struct PermGroup {
    data: Arc<GroupData>,
    label: Arc<str>,
}

pub fn group_from_generators(degree: usize, gens: &[Permutation]) -> Result<PermGroup, GroupError> {
    PermGroup::with_limits(degree, gens, Limits::default())
}

impl PermGroup {
    pub fn new(degree: usize, gens: &[Permutation]) -> Result<Self, GroupError> {
        Self::with_limits(degree, gens, Limits::default())
    }

    pub fn with_limits(degree: usize, gens: &[Permutation], limits: Limits) -> Result<Self, GroupError> {
        if degree == 0 {
            return Err(GroupError::ZeroDegree);
        }
        for g in gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let elements = close(degree, gens, limits.max_elements)?;
        let n = elements.len();
        let index: HashMap<Permutation, usize> = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let inverse = elements.iter().map(|p| index[&p.inverse()] as u32).collect();
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(index[&a.then(b)] as u32);
                }
            }
            t
        });
        let gen_ids = gens.iter().map(|g| index[g]).collect();
        let data = GroupData {
            degree,
            generators: gens.to_vec(),
            prime_support: prime_divisors(n as u64),
            elements,
            index,
            inverse,
            table,
            gen_ids,
            limits,
            lattice: OnceLock::new(),
        };
        let label: Arc<str> = Arc::from(format!("group of order {n}").as_str());
        Ok(PermGroup {
            data: Arc::new(data),
            label,
        })
    }

    /// Same group under a new display label.
    pub fn named(mut self, label: impl AsRef<str>) -> Self {
        self.label = Arc::from(label.as_ref());
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn degree(&self) -> usize {
        self.data.degree
    }

    pub fn order(&self) -> usize {
        self.data.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.data.generators
    }

    pub fn generator_ids(&self) -> &[usize] {
        &self.data.gen_ids
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.data.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.data.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.data.index.get(p).copied()
    }

    /// The set σ(G) of primes dividing the order.
    pub fn prime_support(&self) -> &[u64] {
        &self.data.prime_support
    }

    pub fn limits(&self) -> Limits {
        self.data.limits
    }

    pub const IDENTITY: usize = 0;

    pub fn inverse(&self, a: usize) -> usize {
        self.data.inverse[a] as usize
    }

    /// Index of `a` followed by `b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.data.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.data.index[&self.data.elements[a].then(&self.data.elements[b])],
        }
    }

    /// `g⁻¹ x g`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inverse(g), x), g)
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.generator_ids();
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Whether both handles refer to the same underlying group.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
    }

    pub(crate) fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.order())
    }

    /// Subgroup generated by the given element indices.
    pub fn closure(&self, gens: &[usize]) -> FixedBitSet {
        let mut set = self.empty_set();
        set.insert(Self::IDENTITY);
        let mut queue = VecDeque::from([Self::IDENTITY]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !set.put(y) {
                    queue.push_back(y);
                }
            }
        }
        set
    }

    pub fn whole(&self) -> Subgroup {
        let mut set = self.empty_set();
        set.insert_range(..);
        Subgroup::from_members(self.clone(), set)
    }

    pub fn trivial(&self) -> Subgroup {
        let mut set = self.empty_set();
        set.insert(Self::IDENTITY);
        Subgroup::from_members(self.clone(), set)
    }

    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        Subgroup::from_members(self.clone(), self.closure(gens))
    }

    pub fn subgroup_generated_by(&self, gens: &[Permutation]) -> Result<Subgroup, GroupError> {
        let ids = gens
            .iter()
            .map(|p| self.index_of(p).ok_or(GroupError::NotASubgroup))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.subgroup_generated(&ids))
    }

    /// Validates that the indices form a subgroup.
    pub fn subgroup_from_elements(&self, elems: &[usize]) -> Result<Subgroup, GroupError> {
        let mut set = self.empty_set();
        for &e in elems {
            if e >= self.order() {
                return Err(GroupError::NotASubgroup);
            }
            set.insert(e);
        }
        if !set.contains(Self::IDENTITY) {
            return Err(GroupError::NotASubgroup);
        }
        for a in set.ones() {
            for b in set.ones() {
                if !set.contains(self.mul(a, b)) {
                    return Err(GroupError::NotASubgroup);
                }
            }
        }
        Ok(Subgroup::from_members(self.clone(), set))
    }

    /// The subgroup lattice, enumerated on first use.
    pub fn lattice(&self) -> Result<Lattice<'_>, GroupError> {
        let bound = self.data.limits.max_subgroup_order;
        if self.order() > bound {
            return Err(GroupError::SubgroupBoundExceeded {
                order: self.order(),
                bound,
            });
        }
        let data = self.data.lattice.get_or_init(|| LatticeData::enumerate(self));
        Ok(Lattice::new(self, data))
    }

    pub fn lattice_ready(&self) -> bool {
        self.data.lattice.get().is_some()
    }
}

fn close(degree: usize, gens: &[Permutation], bound: usize) -> Result<Vec<Permutation>, GroupError> {
    let identity = Permutation::identity(degree);
    let mut seen: HashMap<Permutation, ()> = HashMap::from([(identity.clone(), ())]);
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.then(g);
            if !seen.contains_key(&y) {
                if seen.len() >= bound {
                    return Err(GroupError::ElementBoundExceeded { bound });
                }
                seen.insert(y.clone(), ());
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_keys().collect();
    elements.sort();
    Ok(elements)
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("label", &self.label())
            .field("degree", &self.degree())
            .field("order", &self.order())
            .finish()
    }
}

impl fmt::Display for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {}, degree {})", self.label(), self.order(), self.degree())
    }
}
