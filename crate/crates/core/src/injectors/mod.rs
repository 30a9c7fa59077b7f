//! Injectors: the exhaustive oracle, Hall subgroups and the constructive
//! builders for π-nilpotent, p-nilpotent and Hartley-class injectors.

mod constructive;

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

pub use constructive::{
    hartley_injectors_constructive, iterated_class_injectors, p_nilpotent_injectors,
    pi_nilpotent_injectors_constructive,
};

use crate::error::{ClassError, GroupError};
use crate::fitting::{ClassExpr, Eval, Node};
use crate::perm::{conjugacy_classes_in, Lattice, PermGroup, SubId, Subgroup, SubgroupSet};
use crate::primes::{pi_part, PrimeSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Oracle,
    Constructive,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Oracle => "oracle",
            Method::Constructive => "constructive",
        })
    }
}

/// An injector written as the product of a normal radical and a complement
/// part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub radical_part: Subgroup,
    pub complement_part: Subgroup,
}

impl Decomposition {
    /// Whether the element products `radical_part * complement_part` are
    /// exactly the elements of `v`.
    pub fn verify(&self, v: &Subgroup) -> bool {
        self.radical_part.product_set(&self.complement_part) == *v.members()
    }
}

/// A named consistency check carried out while building a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct InjectorReport {
    pub group_label: String,
    pub class_text: String,
    pub injectors: SubgroupSet,
    pub conjugacy_class_count: usize,
    /// Aligned with `injectors`; only constructive reports carry these.
    pub decompositions: Option<Vec<Decomposition>>,
    pub method: Method,
    /// Whether the oracle found the same set; `None` when no oracle ran.
    pub agreement: Option<bool>,
    pub checks: Vec<Check>,
}

impl InjectorReport {
    pub fn orders(&self) -> Vec<usize> {
        self.injectors.orders()
    }

    pub fn failed_checks(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect()
    }

    /// All checks passed and the oracle did not disagree.
    pub fn is_consistent(&self) -> bool {
        self.failed_checks().is_empty() && self.agreement != Some(false)
    }

    pub fn agreement_text(&self) -> &'static str {
        match self.agreement {
            Some(true) => "agrees with oracle",
            Some(false) => "disagrees with oracle",
            None => "unverified-by-oracle",
        }
    }
}

impl fmt::Display for InjectorReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "group {}  class {}  method {}",
            self.group_label, self.class_text, self.method
        )?;
        writeln!(
            f,
            "{} injector(s) in {} conjugacy class(es); {}",
            self.injectors.len(),
            self.conjugacy_class_count,
            self.agreement_text()
        )?;
        for (i, v) in self.injectors.iter().enumerate() {
            write!(f, "  {v:?}")?;
            if let Some(d) = self.decompositions.as_ref().map(|ds| &ds[i]) {
                write!(f, " = [{:?}] * [{:?}]", d.radical_part, d.complement_part)?;
            }
            writeln!(f)?;
        }
        for c in &self.checks {
            writeln!(f, "  check {}: {}", c.name, if c.passed { "ok" } else { "FAILED" })?;
        }
        Ok(())
    }
}

/// Member subgroups of `u` not strictly contained in another member
/// subgroup of `u`, ascending.
pub(crate) fn maximal_ids(ev: &Eval<'_>, u: SubId, node: &Node) -> Vec<SubId> {
    let lat = ev.lattice();
    let members: Vec<SubId> = lat.below(u).filter(|&s| ev.member_sub(s, node)).collect();
    let mut maximal: Vec<SubId> = Vec::new();
    // Larger subgroups have larger ids, so a containing member is seen first.
    for &s in members.iter().rev() {
        if !maximal.iter().any(|&t| lat.is_sub(s, t)) {
            maximal.push(s);
        }
    }
    maximal.reverse();
    maximal
}

/// Subgroups `V` of `u` with `V ∩ K` maximal among member subgroups of `K`
/// for every subnormal `K` of `u`.
pub(crate) fn oracle_ids(ev: &Eval<'_>, u: SubId, node: &Node) -> Vec<SubId> {
    let lat = ev.lattice();
    let candidates = maximal_ids(ev, u, node);
    let sections: Vec<(SubId, HashSet<SubId>)> = lat
        .subnormal_in(u)
        .iter()
        .filter(|&&k| k != u)
        .map(|&k| (k, maximal_ids(ev, k, node).into_iter().collect()))
        .collect();
    candidates
        .into_iter()
        .filter(|&v| sections.iter().all(|(k, max)| max.contains(&lat.meet(v, *k))))
        .collect()
}

pub(crate) fn to_set(lat: Lattice<'_>, ids: impl IntoIterator<Item = SubId>) -> SubgroupSet {
    SubgroupSet::new(lat.group().clone(), ids.into_iter().map(|id| lat.subgroup(id)))
}

/// Checks shared by every report: each injector contains the radical and is
/// a member of the class.
pub(crate) fn invariant_checks(ev: &Eval<'_>, within: SubId, ids: &[SubId], node: &Node) -> Vec<Check> {
    let lat = ev.lattice();
    let r = ev.radical(within, lat.trivial(), node);
    vec![
        Check {
            name: "contains_radical",
            passed: ids.iter().all(|&v| lat.is_sub(r, v)),
        },
        Check {
            name: "members_of_class",
            passed: ids.iter().all(|&v| ev.member_sub(v, node)),
        },
    ]
}

fn label_within(h: &Subgroup) -> String {
    if h.is_whole() {
        h.parent().label().to_string()
    } else {
        format!("{h:?} in {}", h.parent().label())
    }
}

/// Subgroups of `g` that are members of the class and maximal as such.
pub fn f_maximal_subgroups(g: &PermGroup, class: &ClassExpr) -> Result<SubgroupSet, ClassError> {
    f_maximal_subgroups_in(&g.whole(), class)
}

pub fn f_maximal_subgroups_in(h: &Subgroup, class: &ClassExpr) -> Result<SubgroupSet, ClassError> {
    let lat = h.parent().lattice()?;
    let ev = Eval::new(lat);
    Ok(to_set(lat, maximal_ids(&ev, lat.id_of(h)?, &Node::compile(class))))
}

/// The exact injector set by exhaustive scan of the subgroup lattice.
pub fn injectors_oracle(g: &PermGroup, class: &ClassExpr) -> Result<InjectorReport, ClassError> {
    injectors_oracle_in(&g.whole(), class)
}

/// Injectors of `h` regarded as a group, as subgroups of its parent.
pub fn injectors_oracle_in(h: &Subgroup, class: &ClassExpr) -> Result<InjectorReport, ClassError> {
    let lat = h.parent().lattice()?;
    let ev = Eval::new(lat);
    let u = lat.id_of(h)?;
    let node = Node::compile(class);
    let ids = oracle_ids(&ev, u, &node);
    let checks = invariant_checks(&ev, u, &ids, &node);
    let injectors = to_set(lat, ids);
    let conjugacy_class_count = conjugacy_classes_in(&injectors, h).len();
    Ok(InjectorReport {
        group_label: label_within(h),
        class_text: class.to_string(),
        injectors,
        conjugacy_class_count,
        decompositions: None,
        method: Method::Oracle,
        agreement: None,
        checks,
    })
}

/// Subgroups whose order is the π-part of `|G|`.
pub fn hall_subgroups(g: &PermGroup, pi: &PrimeSet) -> Result<SubgroupSet, GroupError> {
    let lat = g.lattice()?;
    Ok(to_set(lat, hall_ids(lat, lat.whole(), pi)))
}

pub(crate) fn hall_ids(lat: Lattice<'_>, u: SubId, pi: &PrimeSet) -> Vec<SubId> {
    let target = pi_part(lat.order(u) as u64, pi) as usize;
    lat.below(u).filter(|&s| lat.order(s) == target).collect()
}
