use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::group::PermGroup;
use super::permutation::Permutation;
use super::subgroup::{Subgroup, SubgroupSet};
use crate::error::GroupError;
use crate::primes::p_part;

/// Every subgroup of `g`, each exactly once.
pub fn subgroups(g: &PermGroup) -> Result<SubgroupSet, GroupError> {
    let lat = g.lattice()?;
    Ok(SubgroupSet::new(g.clone(), lat.ids().map(|i| lat.subgroup(i))))
}

/// Every subgroup of `h`, taken from the parent's lattice.
pub fn subgroups_of(h: &Subgroup) -> Result<SubgroupSet, GroupError> {
    let lat = h.parent().lattice()?;
    let top = lat.id_of(h)?;
    Ok(SubgroupSet::new(
        h.parent().clone(),
        lat.below(top).map(|i| lat.subgroup(i)),
    ))
}

pub fn normal_subgroups(g: &PermGroup) -> Result<SubgroupSet, GroupError> {
    let lat = g.lattice()?;
    let top = lat.whole();
    Ok(SubgroupSet::new(
        g.clone(),
        lat.normal_in(top).iter().map(|&i| lat.subgroup(i)),
    ))
}

/// Whether `h` is a normal subgroup of `ambient`.
pub fn is_normal(h: &Subgroup, ambient: &Subgroup) -> Result<bool, GroupError> {
    h.check_parent(ambient)?;
    if !h.is_subgroup_of(ambient) {
        return Ok(false);
    }
    Ok(normalized_by(h, &ambient.generators()))
}

fn normalized_by(h: &Subgroup, conjugators: &[usize]) -> bool {
    let g = h.parent();
    let hg = h.generators();
    conjugators
        .iter()
        .all(|&k| hg.iter().all(|&s| h.contains(g.conjugate(s, k))))
}

/// Smallest subgroup of `k` containing `h` and normalized by `k`.
pub fn normal_closure(h: &Subgroup, k: &Subgroup) -> Result<Subgroup, GroupError> {
    h.check_parent(k)?;
    let g = h.parent();
    let kg = k.generators();
    let mut gens = h.generators();
    let mut span = g.closure(&gens);
    loop {
        let mut extra = Vec::new();
        for &x in &kg {
            for &s in &gens {
                let t = g.conjugate(s, x);
                if !span.contains(t) && !extra.contains(&t) {
                    extra.push(t);
                }
            }
        }
        if extra.is_empty() {
            return Ok(Subgroup::from_members(g.clone(), span));
        }
        gens.extend(extra);
        span = g.closure(&gens);
    }
}

/// Subnormality in the parent group via the normal-closure chain.
pub fn is_subnormal(h: &Subgroup, g: &PermGroup) -> Result<bool, GroupError> {
    if !h.parent().same_group(g) {
        return Err(GroupError::ParentMismatch);
    }
    is_subnormal_in(h, &g.whole())
}

pub fn is_subnormal_in(h: &Subgroup, k: &Subgroup) -> Result<bool, GroupError> {
    h.check_parent(k)?;
    if !h.is_subgroup_of(k) {
        return Ok(false);
    }
    let mut current = k.clone();
    loop {
        if current == *h {
            return Ok(true);
        }
        let next = normal_closure(h, &current)?;
        if next == current {
            return Ok(false);
        }
        current = next;
    }
}

/// A quotient group realized by the action on cosets, with the projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    source: PermGroup,
    kernel: Subgroup,
    group: PermGroup,
    projection: Vec<usize>,
}

impl Quotient {
    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    /// Image of a source element index.
    pub fn project(&self, x: usize) -> usize {
        self.projection[x]
    }

    pub fn image(&self, h: &Subgroup) -> Subgroup {
        debug_assert!(h.parent().same_group(&self.source));
        let mut m = self.group.empty_set();
        for x in h.elements() {
            m.insert(self.projection[x]);
        }
        Subgroup::from_members(self.group.clone(), m)
    }

    /// Full preimage of a quotient subgroup; always contains the kernel.
    pub fn preimage(&self, s: &Subgroup) -> Subgroup {
        debug_assert!(s.parent().same_group(&self.group));
        let mut m = self.source.empty_set();
        for (x, &y) in self.projection.iter().enumerate() {
            if s.contains(y) {
                m.insert(x);
            }
        }
        Subgroup::from_members(self.source.clone(), m)
    }
}

pub fn quotient(g: &PermGroup, n: &Subgroup) -> Result<Quotient, GroupError> {
    if !n.parent().same_group(g) {
        return Err(GroupError::ParentMismatch);
    }
    if !normalized_by(n, g.generator_ids()) {
        return Err(GroupError::NotNormal);
    }

    // Right cosets Nx, numbered by their smallest element.
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        for m in n.elements() {
            coset_of[g.mul(m, x)] = reps.len();
        }
        reps.push(x);
    }
    let action = |x: usize| -> Vec<usize> { reps.iter().map(|&r| coset_of[g.mul(r, x)]).collect() };

    let gen_actions: Vec<Vec<usize>> = g.generator_ids().iter().map(|&s| action(s)).collect();
    let moved: Vec<usize> = (0..reps.len())
        .filter(|&i| gen_actions.iter().any(|a| a[i] != i))
        .collect();
    let (degree, relabel) = if moved.is_empty() {
        (1, vec![0; reps.len()])
    } else {
        let mut relabel = vec![0; reps.len()];
        for (new, &old) in moved.iter().enumerate() {
            relabel[old] = new;
        }
        (moved.len(), relabel)
    };
    let compress = |images: Vec<usize>| -> Permutation {
        if moved.is_empty() {
            return Permutation::identity(1);
        }
        let v = moved.iter().map(|&i| relabel[images[i]]).collect();
        Permutation::new(v).expect("coset action is a bijection")
    };

    let gens: Vec<Permutation> = gen_actions.into_iter().map(compress).collect();
    let group = PermGroup::with_limits(degree, &gens, g.limits())?.named(format!("{}/<{}>", g.label(), n.order()));
    let projection = (0..g.order())
        .map(|x| {
            group
                .index_of(&compress(action(x)))
                .expect("image of an element lies in the quotient")
        })
        .collect();
    Ok(Quotient {
        source: g.clone(),
        kernel: n.clone(),
        group,
        projection,
    })
}

pub fn centralizer(g: &PermGroup, h: &Subgroup) -> Result<Subgroup, GroupError> {
    if !h.parent().same_group(g) {
        return Err(GroupError::ParentMismatch);
    }
    Ok(centralizer_in(&g.whole(), h))
}

pub fn normalizer(g: &PermGroup, h: &Subgroup) -> Result<Subgroup, GroupError> {
    if !h.parent().same_group(g) {
        return Err(GroupError::ParentMismatch);
    }
    Ok(normalizer_in(&g.whole(), h))
}

/// Elements of `k` commuting with every element of `h`.
pub fn centralizer_in(k: &Subgroup, h: &Subgroup) -> Subgroup {
    let g = k.parent();
    let hg = h.generators();
    let mut m = g.empty_set();
    for x in k.elements() {
        if hg.iter().all(|&s| g.mul(s, x) == g.mul(x, s)) {
            m.insert(x);
        }
    }
    Subgroup::from_members(g.clone(), m)
}

pub fn normalizer_in(k: &Subgroup, h: &Subgroup) -> Subgroup {
    let g = k.parent();
    let hg = h.generators();
    let mut m = g.empty_set();
    for x in k.elements() {
        if hg.iter().all(|&s| h.contains(g.conjugate(s, x))) {
            m.insert(x);
        }
    }
    Subgroup::from_members(g.clone(), m)
}

fn conjugates_into(h: &Subgroup, k: &Subgroup, x: usize) -> bool {
    let g = h.parent();
    h.elements().all(|s| k.contains(g.conjugate(s, x)))
}

/// Some `x` in the parent with `x⁻¹ H x = K`, the smallest such index.
pub fn are_conjugate(h: &Subgroup, k: &Subgroup) -> Result<Option<usize>, GroupError> {
    h.check_parent(k)?;
    are_conjugate_in(h, k, &h.parent().whole())
}

/// As [`are_conjugate`], with the conjugating element drawn from `within`.
pub fn are_conjugate_in(h: &Subgroup, k: &Subgroup, within: &Subgroup) -> Result<Option<usize>, GroupError> {
    h.check_parent(k)?;
    h.check_parent(within)?;
    if h.order() != k.order() {
        return Ok(None);
    }
    Ok(within.elements().find(|&x| conjugates_into(h, k, x)))
}

pub fn conjugacy_classes(set: &SubgroupSet) -> Vec<SubgroupSet> {
    conjugacy_classes_in(set, &set.parent().whole())
}

/// Partition of `set` under conjugation by elements of `within`, classes
/// ordered by their first member.
pub fn conjugacy_classes_in(set: &SubgroupSet, within: &Subgroup) -> Vec<SubgroupSet> {
    let mut assigned = vec![false; set.len()];
    let mut classes = Vec::new();
    for i in 0..set.len() {
        if assigned[i] {
            continue;
        }
        let h = &set[i];
        let orbit: HashSet<FixedBitSet> = within.elements().map(|x| h.conjugate_by(x).members().clone()).collect();
        let mut class = Vec::new();
        for j in i..set.len() {
            if !assigned[j] && orbit.contains(set[j].members()) {
                assigned[j] = true;
                class.push(set[j].clone());
            }
        }
        classes.push(SubgroupSet::new(set.parent().clone(), class));
    }
    classes
}

pub fn subgroups_of_order(g: &PermGroup, n: usize) -> Result<SubgroupSet, GroupError> {
    let lat = g.lattice()?;
    Ok(SubgroupSet::new(
        g.clone(),
        lat.ids().filter(|&i| lat.order(i) == n).map(|i| lat.subgroup(i)),
    ))
}

/// Subgroups whose order is the full `p`-part of `|G|`.
pub fn sylow(g: &PermGroup, p: u64) -> Result<SubgroupSet, GroupError> {
    if !crate::primes::is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    subgroups_of_order(g, p_part(g.order() as u64, p) as usize)
}
