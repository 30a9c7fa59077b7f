//! Class membership on sections `T/N` of a group's subgroup lattice.
//!
//! Every quotient that class evaluation needs (`G/G_F` for products, the
//! Hartley quotients) is a section of the ambient lattice, so normal
//! subgroups of `T/N` are exactly the lattice members `S` with
//! `N ≤ S ⊴ T`. Results are memoized per lattice.

use std::sync::Arc;

use super::expr::ClassExpr;
use crate::perm::{Lattice, SubId};
use crate::primes::{is_p_power, is_prime, p_part, prime_divisors, PrimeSet};

/// A class expression with a precomputed memo key on every node.
#[derive(Clone, Debug)]
pub(crate) struct Node {
    kind: Kind,
    key: Arc<str>,
}

#[derive(Clone, Debug)]
enum Kind {
    Trivial,
    All,
    Soluble,
    Nilpotent,
    PiGroups(PrimeSet),
    PiSoluble(PrimeSet),
    PiNilpotent(PrimeSet),
    PGroups(u64),
    NilpotentPi(PrimeSet),
    Product(Arc<Node>, Arc<Node>),
    Meet(Vec<Node>),
    Hartley(Arc<Node>, PrimeSet),
}

impl Node {
    pub(crate) fn compile(e: &ClassExpr) -> Node {
        let kind = match e {
            ClassExpr::Trivial => Kind::Trivial,
            ClassExpr::All => Kind::All,
            ClassExpr::Soluble => Kind::Soluble,
            ClassExpr::Nilpotent => Kind::Nilpotent,
            ClassExpr::PiGroups(p) => Kind::PiGroups(p.clone()),
            ClassExpr::PiSoluble(p) => Kind::PiSoluble(p.clone()),
            ClassExpr::PiNilpotent(p) => Kind::PiNilpotent(p.clone()),
            ClassExpr::PGroups(p) => Kind::PGroups(*p),
            ClassExpr::NilpotentPi(p) => Kind::NilpotentPi(p.clone()),
            ClassExpr::Product(a, b) => Kind::Product(Arc::new(Node::compile(a)), Arc::new(Node::compile(b))),
            ClassExpr::Meet(parts) => Kind::Meet(parts.iter().map(Node::compile).collect()),
            ClassExpr::Hartley(x, p) => Kind::Hartley(Arc::new(Node::compile(x)), p.clone()),
        };
        Node {
            kind,
            key: Arc::from(e.to_string().as_str()),
        }
    }

    /// `prod(x, Epi(~{p}))`.
    fn times_p_prime_groups(x: &Arc<Node>, p: u64) -> Node {
        let set = PrimeSet::all_but(p);
        let key = format!("prod({},Epi({set}))", x.key);
        let tail = Node {
            key: Arc::from(format!("Epi({set})").as_str()),
            kind: Kind::PiGroups(set),
        };
        Node {
            kind: Kind::Product(x.clone(), Arc::new(tail)),
            key: Arc::from(key.as_str()),
        }
    }

    /// Membership depends only on the group order.
    pub(crate) fn order_determined(&self) -> bool {
        match &self.kind {
            Kind::Trivial | Kind::All | Kind::PiGroups(_) | Kind::PGroups(_) => true,
            Kind::Meet(parts) => parts.iter().all(Node::order_determined),
            _ => false,
        }
    }

    pub(crate) fn member_by_order(&self, n: u64) -> bool {
        match &self.kind {
            Kind::Trivial => n == 1,
            Kind::All => true,
            Kind::PiGroups(pi) => pi.covers(n),
            Kind::PGroups(p) => is_p_power(n, *p),
            Kind::Meet(parts) => parts.iter().all(|c| c.member_by_order(n)),
            _ => unreachable!("not order-determined"),
        }
    }

    /// Classes closed under quotients and subdirect products, for which the
    /// residual is an intersection of normal subgroups.
    pub(crate) fn residual_supported(&self) -> bool {
        match &self.kind {
            Kind::Product(..) | Kind::Hartley(..) => false,
            Kind::Meet(parts) => parts.iter().all(Node::residual_supported),
            _ => true,
        }
    }
}

pub(crate) struct Eval<'a> {
    lat: Lattice<'a>,
}

impl<'a> Eval<'a> {
    pub(crate) fn new(lat: Lattice<'a>) -> Self {
        Eval { lat }
    }

    pub(crate) fn lattice(&self) -> Lattice<'a> {
        self.lat
    }

    fn index(&self, top: SubId, bottom: SubId) -> u64 {
        (self.lat.order(top) / self.lat.order(bottom)) as u64
    }

    /// Whether the section `top/bottom` belongs to the class.
    pub(crate) fn member(&self, top: SubId, bottom: SubId, node: &Node) -> bool {
        debug_assert!(self.lat.is_normal_in(bottom, top));
        if node.order_determined() {
            return node.member_by_order(self.index(top, bottom));
        }
        let key = (top, bottom, node.key.clone());
        if let Some(&v) = self.lat.data().member_memo.lock().unwrap().get(&key) {
            return v;
        }
        let v = self.member_uncached(top, bottom, node);
        self.lat.data().member_memo.lock().unwrap().insert(key, v);
        v
    }

    /// Membership of a lattice subgroup regarded as a group.
    pub(crate) fn member_sub(&self, id: SubId, node: &Node) -> bool {
        self.member(id, self.lat.trivial(), node)
    }

    fn member_uncached(&self, top: SubId, bottom: SubId, node: &Node) -> bool {
        let n = self.index(top, bottom);
        match &node.kind {
            Kind::Trivial | Kind::All | Kind::PiGroups(_) | Kind::PGroups(_) => node.member_by_order(n),
            Kind::Soluble => self.composition_factors(top, bottom).into_iter().all(is_prime),
            Kind::PiSoluble(pi) => self
                .composition_factors(top, bottom)
                .into_iter()
                .all(|f| is_prime(f) || prime_divisors(f).into_iter().all(|p| !pi.contains(p))),
            Kind::Nilpotent => self.is_nilpotent(top, bottom),
            Kind::NilpotentPi(pi) => pi.covers(n) && self.is_nilpotent(top, bottom),
            Kind::PiNilpotent(pi) => pi
                .restrict(&prime_divisors(n))
                .into_iter()
                .all(|p| self.has_normal_of_index(top, bottom, p_part(n, p))),
            Kind::Product(f, h) => {
                let r = self.radical(top, bottom, f);
                self.member(top, r, h)
            }
            Kind::Meet(parts) => parts.iter().all(|c| self.member(top, bottom, c)),
            Kind::Hartley(x, pi) => pi.restrict(&prime_divisors(n)).into_iter().all(|p| {
                let r = self.radical(top, bottom, &Node::times_p_prime_groups(x, p));
                is_p_power(self.index(top, r), p)
            }),
        }
    }

    /// Every `p`-part of the section is realized by a normal subgroup, so
    /// all Sylow subgroups of the section are normal.
    fn is_nilpotent(&self, top: SubId, bottom: SubId) -> bool {
        let n = self.index(top, bottom);
        prime_divisors(n)
            .into_iter()
            .all(|p| self.has_normal_of_index(top, bottom, n / p_part(n, p)))
    }

    /// Whether `top/bottom` has a normal subgroup of the given index.
    fn has_normal_of_index(&self, top: SubId, bottom: SubId, index: u64) -> bool {
        let target = self.lat.order(top) / index as usize;
        self.lat
            .normal_between(top, bottom)
            .any(|s| self.lat.order(s) == target)
    }

    /// Orders of the composition factors of `top/bottom`, top down, found by
    /// repeatedly passing to a largest proper normal subgroup.
    pub(crate) fn composition_factors(&self, top: SubId, bottom: SubId) -> Vec<u64> {
        let mut out = Vec::new();
        let mut cur = top;
        while cur != bottom {
            let next = self
                .lat
                .normal_between(cur, bottom)
                .filter(|&s| s != cur)
                .max_by_key(|&s| (self.lat.order(s), s))
                .expect("bottom is a proper normal subgroup");
            out.push(self.index(cur, next));
            cur = next;
        }
        out
    }

    /// Largest normal subgroup of `top/bottom` in the class, as the join of
    /// all normal members.
    pub(crate) fn radical(&self, top: SubId, bottom: SubId, node: &Node) -> SubId {
        let key = (top, bottom, node.key.clone());
        if let Some(&r) = self.lat.data().radical_memo.lock().unwrap().get(&key) {
            return r;
        }
        let candidates: Vec<SubId> = self.lat.normal_between(top, bottom).collect();
        let mut acc = bottom;
        for &s in candidates.iter().rev() {
            if !self.lat.is_sub(s, acc) && self.member(s, bottom, node) {
                acc = self.lat.join(acc, s);
            }
        }
        self.lat.data().radical_memo.lock().unwrap().insert(key, acc);
        acc
    }

    /// Intersection of all normal `N` with `top/N` in the class.
    pub(crate) fn residual(&self, top: SubId, node: &Node) -> SubId {
        let mut acc = top;
        for &s in self.lat.normal_in(top) {
            if !self.lat.is_sub(acc, s) && self.member(top, s, node) {
                acc = self.lat.meet(acc, s);
            }
        }
        acc
    }
}
