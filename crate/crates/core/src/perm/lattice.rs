//! Exhaustive subgroup lattice of a permutation group.
//!
//! Subgroups are found by seeding with every cyclic subgroup and closing
//! under joins with cyclic subgroups until no new element set appears; every
//! subgroup is a join of cyclic subgroups, so the closure is complete.
//! Records are sorted by (order, canonical hash) and addressed by [`SubId`].

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use fixedbitset::FixedBitSet;

use super::group::PermGroup;
use super::subgroup::{canonical_hash, Subgroup};
use crate::error::GroupError;

/// Position of a subgroup in its group's lattice.
pub type SubId = usize;

pub(crate) type MemoKey = (SubId, SubId, Arc<str>);

pub(crate) struct SubRecord {
    members: FixedBitSet,
    order: usize,
    gens: Vec<usize>,
    normalizer: FixedBitSet,
}

pub(crate) struct LatticeData {
    subs: Vec<SubRecord>,
    by_members: HashMap<FixedBitSet, SubId>,
    normal_in: Vec<OnceLock<Vec<SubId>>>,
    subnormal_in: Vec<OnceLock<Vec<SubId>>>,
    join_memo: Mutex<HashMap<(SubId, SubId), SubId>>,
    pub(crate) member_memo: Mutex<HashMap<MemoKey, bool>>,
    pub(crate) radical_memo: Mutex<HashMap<MemoKey, SubId>>,
}

impl LatticeData {
    pub(crate) fn enumerate(group: &PermGroup) -> Self {
        let n = group.order();

        let mut found: Vec<(FixedBitSet, Vec<usize>)> = Vec::new();
        let mut seen: HashMap<FixedBitSet, usize> = HashMap::new();
        let mut cyclics: Vec<usize> = Vec::new();
        for x in 0..n {
            let gens = if x == PermGroup::IDENTITY { vec![] } else { vec![x] };
            let members = group.closure(&gens);
            if !seen.contains_key(&members) {
                seen.insert(members.clone(), found.len());
                cyclics.push(found.len());
                found.push((members, gens));
            }
        }

        let mut frontier: Vec<usize> = cyclics.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &h in &frontier {
                for &c in &cyclics {
                    if found[c].0.is_subset(&found[h].0) {
                        continue;
                    }
                    let mut gens = found[h].1.clone();
                    gens.extend_from_slice(&found[c].1);
                    let members = group.closure(&gens);
                    if !seen.contains_key(&members) {
                        seen.insert(members.clone(), found.len());
                        next.push(found.len());
                        found.push((members, gens));
                    }
                }
            }
            frontier = next;
        }

        let mut keyed: Vec<(usize, u64, FixedBitSet, Vec<usize>)> = found
            .into_iter()
            .map(|(m, g)| (m.count_ones(..), canonical_hash(&m), m, g))
            .collect();
        keyed.sort_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));

        let subs: Vec<SubRecord> = keyed
            .into_iter()
            .map(|(order, _, members, gens)| {
                let mut normalizer = group.empty_set();
                for g in 0..n {
                    if gens.iter().all(|&s| members.contains(group.conjugate(s, g))) {
                        normalizer.insert(g);
                    }
                }
                SubRecord {
                    members,
                    order,
                    gens,
                    normalizer,
                }
            })
            .collect();
        let by_members = subs.iter().enumerate().map(|(i, r)| (r.members.clone(), i)).collect();
        let len = subs.len();
        LatticeData {
            subs,
            by_members,
            normal_in: (0..len).map(|_| OnceLock::new()).collect(),
            subnormal_in: (0..len).map(|_| OnceLock::new()).collect(),
            join_memo: Mutex::new(HashMap::new()),
            member_memo: Mutex::new(HashMap::new()),
            radical_memo: Mutex::new(HashMap::new()),
        }
    }
}

/// Borrowed view of a group's enumerated subgroup lattice.
#[derive(Clone, Copy)]
pub struct Lattice<'a> {
    group: &'a PermGroup,
    data: &'a LatticeData,
}

impl std::fmt::Debug for Lattice<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Lattice")
            .field("group", &self.group.label())
            .field("subgroups", &self.len())
            .finish()
    }
}

impl<'a> Lattice<'a> {
    pub(crate) fn new(group: &'a PermGroup, data: &'a LatticeData) -> Self {
        Lattice { group, data }
    }

    pub(crate) fn data(&self) -> &'a LatticeData {
        self.data
    }

    pub fn group(&self) -> &'a PermGroup {
        self.group
    }

    pub fn len(&self) -> usize {
        self.data.subs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.subs.is_empty()
    }

    pub fn ids(&self) -> std::ops::Range<SubId> {
        0..self.len()
    }

    pub fn trivial(&self) -> SubId {
        0
    }

    pub fn whole(&self) -> SubId {
        self.len() - 1
    }

    pub fn order(&self, id: SubId) -> usize {
        self.data.subs[id].order
    }

    pub fn members(&self, id: SubId) -> &'a FixedBitSet {
        &self.data.subs[id].members
    }

    pub fn generators(&self, id: SubId) -> &'a [usize] {
        &self.data.subs[id].gens
    }

    pub fn subgroup(&self, id: SubId) -> Subgroup {
        Subgroup::from_members(self.group.clone(), self.members(id).clone())
    }

    pub fn id_of_members(&self, members: &FixedBitSet) -> Option<SubId> {
        self.data.by_members.get(members).copied()
    }

    pub fn id_of(&self, h: &Subgroup) -> Result<SubId, GroupError> {
        if !h.parent().same_group(self.group) {
            return Err(GroupError::ParentMismatch);
        }
        self.id_of_members(h.members()).ok_or(GroupError::NotASubgroup)
    }

    pub fn is_sub(&self, a: SubId, b: SubId) -> bool {
        a == b || self.members(a).is_subset(self.members(b))
    }

    /// Whether `a` is a normal subgroup of `b`.
    pub fn is_normal_in(&self, a: SubId, b: SubId) -> bool {
        self.is_sub(a, b) && self.members(b).is_subset(&self.data.subs[a].normalizer)
    }

    pub fn normalizer(&self, a: SubId) -> SubId {
        self.id_of_members(&self.data.subs[a].normalizer)
            .expect("normalizer is a subgroup")
    }

    /// All subgroups contained in `u`, ascending.
    pub fn below(&self, u: SubId) -> impl Iterator<Item = SubId> + 'a {
        let data = self.data;
        let top = &data.subs[u].members;
        (0..=u).filter(move |&s| data.subs[s].members.is_subset(top))
    }

    /// Normal subgroups of `t`, ascending.
    pub fn normal_in(&self, t: SubId) -> &'a [SubId] {
        self.data.normal_in[t].get_or_init(|| self.below(t).filter(|&s| self.is_normal_in(s, t)).collect())
    }

    /// Normal subgroups of `t` containing `bottom`.
    pub fn normal_between(&self, t: SubId, bottom: SubId) -> impl Iterator<Item = SubId> + 'a {
        let data = self.data;
        let low = &data.subs[bottom].members;
        self.normal_in(t)
            .iter()
            .copied()
            .filter(move |&s| low.is_subset(&data.subs[s].members))
    }

    /// Subnormal subgroups of `u`, ascending.
    pub fn subnormal_in(&self, u: SubId) -> &'a [SubId] {
        self.data.subnormal_in[u].get_or_init(|| {
            let mut mark = vec![false; self.len()];
            mark[u] = true;
            let mut queue = VecDeque::from([u]);
            while let Some(s) = queue.pop_front() {
                for &n in self.normal_in(s) {
                    if !std::mem::replace(&mut mark[n], true) {
                        queue.push_back(n);
                    }
                }
            }
            (0..self.len()).filter(|&i| mark[i]).collect()
        })
    }

    pub fn meet(&self, a: SubId, b: SubId) -> SubId {
        if self.is_sub(a, b) {
            return a;
        }
        if self.is_sub(b, a) {
            return b;
        }
        let mut m = self.members(a).clone();
        m.intersect_with(self.members(b));
        self.id_of_members(&m).expect("intersection is a subgroup")
    }

    pub fn join(&self, a: SubId, b: SubId) -> SubId {
        if self.is_sub(a, b) {
            return b;
        }
        if self.is_sub(b, a) {
            return a;
        }
        let key = (a.min(b), a.max(b));
        if let Some(&j) = self.data.join_memo.lock().unwrap().get(&key) {
            return j;
        }
        let mut gens = self.generators(a).to_vec();
        gens.extend_from_slice(self.generators(b));
        let j = self
            .id_of_members(&self.group.closure(&gens))
            .expect("join is a subgroup");
        self.data.join_memo.lock().unwrap().insert(key, j);
        j
    }
}
