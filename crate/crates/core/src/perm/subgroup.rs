use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use super::group::{Limits, PermGroup};
use super::permutation::Permutation;
use crate::error::GroupError;

/// A subgroup of a fixed parent group, stored as its element set.
#[derive(Clone)]
pub struct Subgroup {
    parent: PermGroup,
    members: FixedBitSet,
    order: usize,
    hash: u64,
}

/// FNV-1a over the member indices. Element indices are canonical because the
/// parent sorts its elements, so the value is reproducible across runs.
pub(crate) fn canonical_hash(members: &FixedBitSet) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for i in members.ones() {
        for b in (i as u32).to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    h
}

impl Subgroup {
    /// Trusted constructor; `members` must already be a subgroup.
    pub(crate) fn from_members(parent: PermGroup, members: FixedBitSet) -> Self {
        let order = members.count_ones(..);
        let hash = canonical_hash(&members);
        Subgroup {
            parent,
            members,
            order,
            hash,
        }
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order
    }

    pub fn canonical_hash(&self) -> u64 {
        self.hash
    }

    pub fn contains(&self, elem: usize) -> bool {
        self.members.contains(elem)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn permutations(&self) -> Vec<Permutation> {
        self.elements().map(|i| self.parent.element(i).clone()).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order == self.parent.order()
    }

    pub fn same_parent(&self, other: &Subgroup) -> bool {
        self.parent.same_group(&other.parent)
    }

    pub(crate) fn check_parent(&self, other: &Subgroup) -> Result<(), GroupError> {
        if self.same_parent(other) {
            Ok(())
        } else {
            Err(GroupError::ParentMismatch)
        }
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.same_parent(other) && self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        debug_assert!(self.same_parent(other));
        let mut m = self.members.clone();
        m.intersect_with(&other.members);
        Subgroup::from_members(self.parent.clone(), m)
    }

    /// Subgroup generated by both.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        debug_assert!(self.same_parent(other));
        if other.members.is_subset(&self.members) {
            return self.clone();
        }
        if self.members.is_subset(&other.members) {
            return other.clone();
        }
        let mut gens = self.generators();
        gens.extend(other.generators());
        self.parent.subgroup_generated(&gens)
    }

    /// The element set `{ab : a ∈ self, b ∈ other}`.
    pub fn product_set(&self, other: &Subgroup) -> FixedBitSet {
        let mut out = self.parent.empty_set();
        for a in self.elements() {
            for b in other.elements() {
                out.insert(self.parent.mul(a, b));
            }
        }
        out
    }

    /// A small generating set, chosen greedily in element order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.parent.empty_set();
        span.insert(PermGroup::IDENTITY);
        for x in self.elements() {
            if !span.contains(x) {
                gens.push(x);
                span = self.parent.closure(&gens);
                if span.count_ones(..) == self.order {
                    break;
                }
            }
        }
        gens
    }

    /// The conjugate `g⁻¹ H g`.
    pub fn conjugate_by(&self, g: usize) -> Subgroup {
        let mut m = self.parent.empty_set();
        for x in self.elements() {
            m.insert(self.parent.conjugate(x, g));
        }
        Subgroup::from_members(self.parent.clone(), m)
    }

    /// This subgroup as a standalone permutation group on the same points.
    pub fn to_group(&self) -> Result<PermGroup, GroupError> {
        self.to_group_with(self.parent.limits())
    }

    pub fn to_group_with(&self, limits: Limits) -> Result<PermGroup, GroupError> {
        let gens: Vec<Permutation> = self
            .generators()
            .into_iter()
            .map(|i| self.parent.element(i).clone())
            .collect();
        Ok(
            PermGroup::with_limits(self.parent.degree(), &gens, limits)?.named(format!(
                "{}<{}>",
                self.parent.label(),
                self.order
            )),
        )
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_parent(other) && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.hash.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.order, self.hash)
            .cmp(&(other.order, other.hash))
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators().into_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.parent.element(g))?;
        }
        write!(f, "> of order {}", self.order)
    }
}

/// Deduplicated subgroups of one parent, sorted by (order, canonical hash).
#[derive(Clone, Debug)]
pub struct SubgroupSet {
    parent: PermGroup,
    items: Vec<Subgroup>,
}

impl SubgroupSet {
    pub fn new(parent: PermGroup, items: impl IntoIterator<Item = Subgroup>) -> Self {
        let mut items: Vec<Subgroup> = items.into_iter().collect();
        debug_assert!(items.iter().all(|s| s.parent.same_group(&parent)));
        items.sort();
        items.dedup();
        SubgroupSet { parent, items }
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subgroup> {
        self.items.iter()
    }

    pub fn items(&self) -> &[Subgroup] {
        &self.items
    }

    pub fn contains(&self, h: &Subgroup) -> bool {
        self.items.binary_search(h).is_ok()
    }

    pub fn orders(&self) -> Vec<usize> {
        self.items.iter().map(Subgroup::order).collect()
    }

    pub fn into_vec(self) -> Vec<Subgroup> {
        self.items
    }
}

impl PartialEq for SubgroupSet {
    fn eq(&self, other: &Self) -> bool {
        self.items == other.items
    }
}

impl Eq for SubgroupSet {}

impl<'a> IntoIterator for &'a SubgroupSet {
    type Item = &'a Subgroup;
    type IntoIter = std::slice::Iter<'a, Subgroup>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}

impl std::ops::Index<usize> for SubgroupSet {
    type Output = Subgroup;

    fn index(&self, i: usize) -> &Subgroup {
        &self.items[i]
    }
}
