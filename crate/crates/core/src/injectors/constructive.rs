use std::collections::BTreeMap;

use super::{
    hall_ids, invariant_checks, maximal_ids, oracle_ids, to_set, Check, Decomposition, InjectorReport, Method,
};
use crate::error::{GroupError, InjectorError};
use crate::fitting::{member, radical, ClassExpr, Eval, Node};
use crate::perm::{conjugacy_classes, quotient, Lattice, PermGroup, SubId};
use crate::primes::{is_prime, PrimeSet};

/// Injector id mapped to its first recorded (radical part, complement part).
type Assembly = BTreeMap<SubId, (SubId, SubId)>;

fn require(g: &PermGroup, class: &ClassExpr) -> Result<(), InjectorError> {
    if member(g, class)? {
        Ok(())
    } else {
        Err(InjectorError::Hypothesis(format!("{} is not in {class}", g.label())))
    }
}

fn nilpotent_pi(pi: &PrimeSet) -> Node {
    Node::compile(&ClassExpr::NilpotentPi(pi.clone()))
}

/// `O_π'(G) W` over every Hall π-subgroup `H` and every nilpotent-π
/// injector `W` of `H`.
fn pi_nilpotent_assembly(ev: &Eval<'_>, pi: &PrimeSet) -> Assembly {
    let lat = ev.lattice();
    let o = ev.radical(
        lat.whole(),
        lat.trivial(),
        &Node::compile(&ClassExpr::PiGroups(pi.complement())),
    );
    let node = nilpotent_pi(pi);
    let mut out = Assembly::new();
    for h in hall_ids(lat, lat.whole(), pi) {
        for w in oracle_ids(ev, h, &node) {
            out.entry(lat.join(o, w)).or_insert((o, w));
        }
    }
    out
}

/// Builds the report, running the oracle for `oracle_class` on the whole
/// group for the agreement field.
fn finish(
    ev: &Eval<'_>,
    class: &ClassExpr,
    oracle_class: &ClassExpr,
    assembly: &Assembly,
    mut checks: Vec<Check>,
) -> InjectorReport {
    let lat = ev.lattice();
    let ids: Vec<SubId> = assembly.keys().copied().collect();
    let node = Node::compile(class);
    checks.extend(invariant_checks(ev, lat.whole(), &ids, &node));

    let injectors = to_set(lat, ids.iter().copied());
    let decompositions: Vec<Decomposition> = injectors
        .iter()
        .map(|v| {
            let (r, c) = assembly[&lat.id_of(v).expect("lattice member")];
            Decomposition {
                radical_part: lat.subgroup(r),
                complement_part: lat.subgroup(c),
            }
        })
        .collect();
    checks.push(Check {
        name: "decomposition",
        passed: injectors.iter().zip(&decompositions).all(|(v, d)| d.verify(v)),
    });
    let conjugacy_class_count = conjugacy_classes(&injectors).len();
    checks.push(Check {
        name: "single_class",
        passed: conjugacy_class_count == 1,
    });

    let oracle = oracle_ids(ev, lat.whole(), &Node::compile(oracle_class));
    InjectorReport {
        group_label: lat.group().label().to_string(),
        class_text: class.to_string(),
        injectors,
        conjugacy_class_count,
        decompositions: Some(decompositions),
        method: Method::Constructive,
        agreement: Some(oracle == ids),
        checks,
    }
}

fn hall_check(lat: Lattice<'_>, pi: &PrimeSet) -> Check {
    Check {
        name: "hall_subgroup_exists",
        passed: !hall_ids(lat, lat.whole(), pi).is_empty(),
    }
}

/// π-nilpotent injectors of a π-soluble group as products of the
/// π'-radical with nilpotent-π injectors of Hall π-subgroups.
pub fn pi_nilpotent_injectors_constructive(g: &PermGroup, pi: &PrimeSet) -> Result<InjectorReport, InjectorError> {
    require(g, &ClassExpr::PiSoluble(pi.clone()))?;
    let lat = g.lattice()?;
    let ev = Eval::new(lat);
    let assembly = pi_nilpotent_assembly(&ev, pi);
    let class = ClassExpr::PiNilpotent(pi.clone());
    Ok(finish(&ev, &class, &class, &assembly, vec![hall_check(lat, pi)]))
}

/// p-nilpotent injectors of a p-soluble group as products of the
/// p'-radical with Sylow p-subgroups.
pub fn p_nilpotent_injectors(g: &PermGroup, p: u64) -> Result<InjectorReport, InjectorError> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p).into());
    }
    let pi = PrimeSet::single(p);
    require(g, &ClassExpr::PiSoluble(pi.clone()))?;
    let lat = g.lattice()?;
    let ev = Eval::new(lat);
    let o = ev.radical(
        lat.whole(),
        lat.trivial(),
        &Node::compile(&ClassExpr::PiGroups(pi.complement())),
    );
    let mut assembly = Assembly::new();
    for s in hall_ids(lat, lat.whole(), &pi) {
        assembly.entry(lat.join(o, s)).or_insert((o, s));
    }

    let class = ClassExpr::PiNilpotent(pi);
    let node = Node::compile(&class);
    let maximal = maximal_ids(&ev, lat.whole(), &node);
    let r = ev.radical(lat.whole(), lat.trivial(), &node);
    let checks = vec![
        Check {
            name: "maximal_p_nilpotent",
            passed: assembly.keys().all(|v| maximal.contains(v)),
        },
        Check {
            name: "contains_p_nilpotent_radical",
            passed: assembly.keys().all(|&v| lat.is_sub(r, v)),
        },
    ];
    Ok(finish(&ev, &class, &class, &assembly, checks))
}

/// Injectors for `hartley(X; π)` in a group of `prod(X, PiSol(π))`.
///
/// Two assemblies are built and compared: pulling back the π-nilpotent
/// injectors of `G/G_X`, and the product of the radical for
/// `prod(X, Epi(π'))` with pullbacks of nilpotent-π injectors of Hall
/// π-subgroups of `G/G_X`. The second supplies the decompositions.
pub fn hartley_injectors_constructive(
    g: &PermGroup,
    x: &ClassExpr,
    pi: &PrimeSet,
) -> Result<InjectorReport, InjectorError> {
    require(g, &ClassExpr::product(x.clone(), ClassExpr::PiSoluble(pi.clone())))?;
    let lat = g.lattice()?;
    let ev = Eval::new(lat);
    let q = quotient(g, &radical(g, x)?)?;
    let qlat = q.group().lattice()?;
    let qev = Eval::new(qlat);
    let pull = |id: SubId| {
        lat.id_of(&q.preimage(&qlat.subgroup(id)))
            .expect("preimage is a subgroup")
    };

    let route_a: Vec<SubId> = {
        let mut ids: Vec<SubId> = pi_nilpotent_assembly(&qev, pi).keys().map(|&v| pull(v)).collect();
        ids.sort_unstable();
        ids
    };

    let rx = ev.radical(
        lat.whole(),
        lat.trivial(),
        &Node::compile(&ClassExpr::product(x.clone(), ClassExpr::PiGroups(pi.complement()))),
    );
    let node = nilpotent_pi(pi);
    let mut route_b = Assembly::new();
    for h in hall_ids(qlat, qlat.whole(), pi) {
        for w in oracle_ids(&qev, h, &node) {
            let l = pull(w);
            route_b.entry(lat.join(rx, l)).or_insert((rx, l));
        }
    }

    let checks = vec![
        hall_check(qlat, pi),
        Check {
            name: "assemblies_agree",
            passed: route_b.keys().copied().eq(route_a.iter().copied()),
        },
    ];
    let class = ClassExpr::hartley(x.clone(), pi.clone());
    Ok(finish(&ev, &class, &class, &route_b, checks))
}

/// Injectors for the `k`-fold product of `PiNil(π)` in a π-soluble group,
/// built as Hartley-class injectors with `X` the `(k-1)`-fold product.
pub fn iterated_class_injectors(g: &PermGroup, pi: &PrimeSet, k: usize) -> Result<InjectorReport, InjectorError> {
    if k == 0 {
        return Err(InjectorError::ZeroIterations);
    }
    require(g, &ClassExpr::PiSoluble(pi.clone()))?;
    let base = ClassExpr::PiNilpotent(pi.clone());
    let x = ClassExpr::power(&base, k - 1);
    let mut report = hartley_injectors_constructive(g, &x, pi)?;

    let lat = g.lattice()?;
    let ev = Eval::new(lat);
    let target = ClassExpr::power(&base, k);
    let oracle = to_set(lat, oracle_ids(&ev, lat.whole(), &Node::compile(&target)));
    report.checks.push(Check {
        name: "hartley_form_agrees",
        passed: report.agreement == Some(true),
    });
    report.agreement = Some(oracle == report.injectors);
    report.class_text = target.to_string();
    Ok(report)
}
