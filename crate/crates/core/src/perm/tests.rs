use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use proptest::prelude::*;

use super::families::*;
use super::*;
use crate::error::GroupError;

fn lim() -> Limits {
    Limits::default()
}

fn s4() -> PermGroup {
    symmetric(4, lim()).unwrap()
}

fn perm(degree: usize, cycles: &[&[usize]]) -> Permutation {
    let cs: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
    Permutation::from_cycles(degree, &cs).unwrap()
}

fn sub(g: &PermGroup, cycles: &[&[&[usize]]]) -> Subgroup {
    let gens: Vec<Permutation> = cycles.iter().map(|c| perm(g.degree(), c)).collect();
    g.subgroup_generated_by(&gens).unwrap()
}

fn v4(g: &PermGroup) -> Subgroup {
    sub(g, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]])
}

/// Subgroups generated by at most three elements, by direct closure.
fn small_rank_subgroups(g: &PermGroup) -> HashSet<Vec<usize>> {
    let n = g.order();
    let mut out = HashSet::new();
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                let m = g.closure(&[a, b, c]);
                out.insert(m.ones().collect());
            }
        }
    }
    out
}

#[test]
fn orders_of_standard_groups() {
    assert_eq!(symmetric(3, lim()).unwrap().order(), 6);
    assert_eq!(PermGroup::new(1, &[]).unwrap().order(), 1);
    assert_eq!(alternating(5, lim()).unwrap().order(), 60);
    assert_eq!(sl2_3(lim()).unwrap().order(), 24);
    assert_eq!(dihedral(5, lim()).unwrap().order(), 10);
}

#[test]
fn subgroup_counts_match_direct_closure() {
    for (g, expected) in [
        (cyclic(6, lim()).unwrap(), 4),
        (s4(), 30),
        (quaternion(lim()).unwrap(), 6),
        (dihedral(4, lim()).unwrap(), 10),
        (alternating(4, lim()).unwrap(), 10),
    ] {
        let subs = subgroups(&g).unwrap();
        assert_eq!(subs.len(), expected, "{}", g.label());
        let listed: HashSet<Vec<usize>> = subs.iter().map(|h| h.elements().collect()).collect();
        assert_eq!(listed, small_rank_subgroups(&g), "{}", g.label());
    }
}

#[test]
fn lattice_ids_are_ordered() {
    let g = s4();
    let lat = g.lattice().unwrap();
    assert_eq!(lat.order(lat.trivial()), 1);
    assert_eq!(lat.order(lat.whole()), 24);
    for id in lat.ids().skip(1) {
        assert!(lat.order(id - 1) <= lat.order(id));
    }
    assert_eq!(lat.len(), 30);
}

#[test]
fn normal_subgroups_of_s4_and_a5() {
    assert_eq!(normal_subgroups(&s4()).unwrap().orders(), vec![1, 4, 12, 24]);
    assert_eq!(
        normal_subgroups(&alternating(5, lim()).unwrap()).unwrap().orders(),
        vec![1, 60]
    );
}

#[test]
fn subnormality_in_s4() {
    let g = s4();
    let t = sub(&g, &[&[&[0, 1]]]);
    assert!(!is_subnormal(&t, &g).unwrap());
    let d = sub(&g, &[&[&[0, 1], &[2, 3]]]);
    assert!(is_subnormal(&d, &g).unwrap());
    assert!(!is_normal(&d, &g.whole()).unwrap());
    assert_eq!(normal_closure(&t, &g.whole()).unwrap().order(), 24);
    assert_eq!(normal_closure(&d, &g.whole()).unwrap(), v4(&g));
}

#[test]
fn quotient_s4_by_v4() {
    let g = s4();
    let q = quotient(&g, &v4(&g)).unwrap();
    assert_eq!(q.group().order(), 6);
    assert!(!q.group().is_abelian());
    let a4 = sub(&g, &[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]]]);
    assert_eq!(q.image(&a4).order(), 3);
    assert_eq!(q.preimage(&q.image(&a4)), a4);
    assert_eq!(q.preimage(&q.group().trivial()), v4(&g));
    let t = sub(&g, &[&[&[0, 1]]]);
    assert!(matches!(quotient(&g, &t), Err(GroupError::NotNormal)));
}

#[test]
fn quotient_by_trivial_and_whole() {
    let g = s4();
    assert_eq!(quotient(&g, &g.trivial()).unwrap().group().order(), 24);
    let top = quotient(&g, &g.whole()).unwrap();
    assert_eq!(top.group().order(), 1);
    assert_eq!(top.preimage(&top.group().whole()).order(), 24);
}

#[test]
fn centralizers_and_normalizers() {
    let g = s4();
    assert_eq!(centralizer(&g, &v4(&g)).unwrap(), v4(&g));
    for p in sylow(&g, 2).unwrap().iter() {
        assert_eq!(&normalizer(&g, p).unwrap(), p);
    }
    let c3 = sub(&g, &[&[&[0, 1, 2]]]);
    assert_eq!(normalizer(&g, &c3).unwrap().order(), 6);
    assert_eq!(centralizer(&g, &c3).unwrap(), c3);
}

#[test]
fn conjugacy_in_s4() {
    let g = s4();
    let sylows = sylow(&g, 2).unwrap();
    assert_eq!(sylows.len(), 3);
    assert_eq!(conjugacy_classes(&sylows).len(), 1);
    let other = sub(&g, &[&[&[0, 1]], &[&[2, 3]]]);
    assert_eq!(other.order(), 4);
    assert_eq!(are_conjugate(&v4(&g), &other).unwrap(), None);
    let a = sylows.items()[0].clone();
    let b = sylows.items()[2].clone();
    let x = are_conjugate(&a, &b).unwrap().expect("Sylow subgroups are conjugate");
    let xi = g.inverse(x);
    let image = g.subgroup_generated(&a.elements().map(|h| g.mul(g.mul(xi, h), x)).collect::<Vec<_>>());
    assert_eq!(image, b);
}

#[test]
fn conjugacy_within_a_subgroup() {
    let g = s4();
    let a4 = sub(&g, &[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]]]);
    let threes = subgroups_of_order(&g, 3).unwrap();
    assert_eq!(conjugacy_classes_in(&threes, &a4).len(), 1);
    let twos = SubgroupSet::new(
        g.clone(),
        subgroups_of(&v4(&g))
            .unwrap()
            .iter()
            .filter(|h| h.order() == 2)
            .cloned(),
    );
    assert_eq!(twos.len(), 3);
    assert_eq!(conjugacy_classes_in(&twos, &v4(&g)).len(), 3);
    assert_eq!(conjugacy_classes_in(&twos, &a4).len(), 1);
}

#[test]
fn sylow_and_order_filters() {
    let a5 = alternating(5, lim()).unwrap();
    assert!(subgroups_of_order(&a5, 20).unwrap().is_empty());
    assert_eq!(sylow(&a5, 2).unwrap().len(), 5);
    assert_eq!(sylow(&a5, 3).unwrap().len(), 10);
    assert_eq!(sylow(&a5, 5).unwrap().len(), 6);
    assert_eq!(sylow(&a5, 7).unwrap().orders(), vec![1]);
    assert!(matches!(sylow(&a5, 4), Err(GroupError::NotPrime(4))));
}

#[test]
fn subgroup_bound_is_enforced() {
    let tight = Limits {
        max_elements: 5040,
        max_subgroup_order: 20,
    };
    let g = symmetric(4, tight).unwrap();
    assert!(matches!(
        g.lattice(),
        Err(GroupError::SubgroupBoundExceeded { order: 24, bound: 20 })
    ));
    let tiny = Limits {
        max_elements: 10,
        max_subgroup_order: 10,
    };
    assert!(matches!(
        symmetric(4, tiny),
        Err(GroupError::ElementBoundExceeded { bound: 10 })
    ));
}

#[test]
fn subgroups_of_a_subgroup_and_mismatched_parents() {
    let g = s4();
    assert_eq!(subgroups_of(&v4(&g)).unwrap().len(), 5);
    let other = s4();
    let h = v4(&other);
    assert!(matches!(is_normal(&h, &g.whole()), Err(GroupError::ParentMismatch)));
}

#[test]
fn subgroup_from_elements_validates() {
    let g = s4();
    assert!(g.subgroup_from_elements(&[0]).unwrap().is_trivial());
    let t = perm(4, &[&[0, 1]]);
    let u = perm(4, &[&[1, 2]]);
    let ids = [0, g.index_of(&t).unwrap(), g.index_of(&u).unwrap()];
    assert!(matches!(g.subgroup_from_elements(&ids), Err(GroupError::NotASubgroup)));
}

#[test]
fn direct_products_and_lattice_sizes() {
    let a5 = alternating(5, lim()).unwrap();
    let c7 = cyclic(7, lim()).unwrap();
    let g = direct_product(&[a5, c7], lim()).unwrap();
    assert_eq!(g.order(), 420);
    assert_eq!(g.label(), "A5xC7");
    assert_eq!(subgroups(&g).unwrap().len(), 118);
}

fn s4_subset() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..24, 0..4)
}

proptest! {
    #[test]
    fn closures_are_lattice_members(gens in s4_subset()) {
        let g = s4();
        let lat = g.lattice().unwrap();
        let m = g.closure(&gens);
        let id = lat.id_of_members(&m);
        prop_assert!(id.is_some());
        prop_assert_eq!(24 % lat.order(id.unwrap()), 0);
        for &x in &gens {
            prop_assert!(m.contains(x));
        }
    }

    #[test]
    fn meet_and_join_are_bounds(a in s4_subset(), b in s4_subset()) {
        let g = s4();
        let lat = g.lattice().unwrap();
        let x = lat.id_of_members(&g.closure(&a)).unwrap();
        let y = lat.id_of_members(&g.closure(&b)).unwrap();
        let m = lat.meet(x, y);
        let j = lat.join(x, y);
        prop_assert!(lat.is_sub(m, x) && lat.is_sub(m, y));
        prop_assert!(lat.is_sub(x, j) && lat.is_sub(y, j));
        let mut both: Vec<usize> = a.clone();
        both.extend(&b);
        prop_assert_eq!(lat.members(j), &g.closure(&both));
        let mut inter: FixedBitSet = lat.members(x).clone();
        inter.intersect_with(lat.members(y));
        prop_assert_eq!(lat.members(m), &inter);
    }

    #[test]
    fn normal_closure_is_normal_and_minimal(gens in s4_subset()) {
        let g = s4();
        let h = g.subgroup_generated(&gens);
        let n = normal_closure(&h, &g.whole()).unwrap();
        prop_assert!(is_normal(&n, &g.whole()).unwrap());
        prop_assert!(h.is_subgroup_of(&n));
        for m in normal_subgroups(&g).unwrap().iter() {
            if h.is_subgroup_of(m) {
                prop_assert!(n.is_subgroup_of(m));
            }
        }
    }

    #[test]
    fn quotient_orders_and_homomorphism(pick in 0usize..4, a in 0usize..24, b in 0usize..24) {
        let g = s4();
        let normals = normal_subgroups(&g).unwrap();
        let n = &normals.items()[pick];
        let q = quotient(&g, n).unwrap();
        prop_assert_eq!(q.group().order() * n.order(), 24);
        prop_assert_eq!(q.project(g.mul(a, b)), q.group().mul(q.project(a), q.project(b)));
    }

    #[test]
    fn conjugation_preserves_order_and_normalizer_fixes(gens in s4_subset(), x in 0usize..24) {
        let g = s4();
        let h = g.subgroup_generated(&gens);
        let k = h.conjugate_by(x);
        prop_assert_eq!(h.order(), k.order());
        prop_assert!(are_conjugate(&h, &k).unwrap().is_some());
        let nh = normalizer(&g, &h).unwrap();
        prop_assert!(h.is_subgroup_of(&nh));
        prop_assert_eq!(nh.contains(x), k == h);
    }
}
