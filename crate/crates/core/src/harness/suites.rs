use std::collections::HashSet;
use std::error::Error;
use std::time::Instant;

use rayon::prelude::*;

use super::catalog::Catalog;
use super::config::Config;
use super::report::{GroupRecord, Report, Status, SuiteResult};
use crate::error::HarnessError;
use crate::fitting::{
    h_radical, hfun_predicates, member, member_subgroup, radical, radical_of, residual, ClassExpr, HFunction,
};
use crate::injectors::{
    f_maximal_subgroups, hall_subgroups, hartley_injectors_constructive, injectors_oracle, injectors_oracle_in,
    iterated_class_injectors, p_nilpotent_injectors, pi_nilpotent_injectors_constructive, InjectorReport,
};
use crate::perm::{
    centralizer, conjugacy_classes, is_subnormal, normal_subgroups, normalizer, quotient, subgroups, sylow, PermGroup,
    Subgroup,
};
use crate::primes::{p_part, PrimeSet};

type Res<T> = Result<T, Box<dyn Error + Send + Sync>>;

pub const SUITE_IDS: &[&str] = &[
    "sylow-sanity",
    "fitting-axioms",
    "thm-1.1",
    "lem-2.1",
    "lem-2.2",
    "lem-2.3",
    "lem-2.4",
    "lem-3.1",
    "cor-3.2",
    "lem-3.3",
    "lem-3.4",
    "thm-1.5",
    "cor-1.5.1",
    "cor-1.5.2",
    "cor-1.5.3",
    "cor-1.5.4",
];

type SuiteFn = fn(&Ctx<'_>) -> Vec<GroupRecord>;

fn lookup(id: &str) -> Option<SuiteFn> {
    Some(match id {
        "sylow-sanity" => sylow_sanity,
        "fitting-axioms" => fitting_axioms,
        "thm-1.1" => thm_1_1,
        "lem-2.1" => lem_2_1,
        "lem-2.2" => lem_2_2,
        "lem-2.3" => lem_2_3,
        "lem-2.4" => lem_2_4,
        "lem-3.1" => lem_3_1,
        "cor-3.2" => cor_3_2,
        "lem-3.3" => lem_3_3,
        "lem-3.4" => lem_3_4,
        "thm-1.5" => thm_1_5,
        "cor-1.5.1" => cor_1_5_1,
        "cor-1.5.2" => cor_1_5_2,
        "cor-1.5.3" => cor_1_5_3,
        "cor-1.5.4" => cor_1_5_4,
        _ => return None,
    })
}

/// Expands `all` and checks every id.
pub fn resolve_suites(ids: &[String]) -> Result<Vec<&'static str>, HarnessError> {
    let mut out = Vec::new();
    for id in ids {
        if id == "all" {
            out.extend_from_slice(SUITE_IDS);
        } else {
            let known = SUITE_IDS
                .iter()
                .find(|s| **s == id.as_str())
                .ok_or_else(|| HarnessError::UnknownSuite(id.clone()))?;
            out.push(*known);
        }
    }
    Ok(out)
}

fn pool(threads: usize) -> Result<Option<rayon::ThreadPool>, HarnessError> {
    if threads == 0 {
        return Ok(None);
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map(Some)
        .map_err(|e| HarnessError::Config {
            line: 0,
            message: format!("threads: {e}"),
        })
}

fn run_in(
    pool: Option<&rayon::ThreadPool>,
    id: &str,
    catalog: &Catalog,
    config: &Config,
) -> Result<SuiteResult, HarnessError> {
    let run = lookup(id).ok_or_else(|| HarnessError::UnknownSuite(id.to_string()))?;
    let groups = catalog.up_to(config.max_order);
    let ctx = Ctx {
        config,
        groups: &groups,
    };
    let start = Instant::now();
    let records = match pool {
        Some(p) => p.install(|| run(&ctx)),
        None => run(&ctx),
    };
    Ok(SuiteResult::new(id, records, start.elapsed()))
}

/// Runs one suite over the catalog groups within the configured order bound.
pub fn run_suite(id: &str, catalog: &Catalog, config: &Config) -> Result<SuiteResult, HarnessError> {
    run_in(pool(config.threads)?.as_ref(), id, catalog, config)
}

/// Runs the named suites (`all` expands to every suite) into one report.
pub fn verify(ids: &[String], catalog: &Catalog, config: &Config) -> Result<Report, HarnessError> {
    let ids = resolve_suites(ids)?;
    let pool = pool(config.threads)?;
    let suites = ids
        .iter()
        .map(|id| run_in(pool.as_ref(), id, catalog, config))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Report::new(config.echo(), suites))
}

struct Ctx<'a> {
    config: &'a Config,
    groups: &'a [PermGroup],
}

impl Ctx<'_> {
    /// One record per (group, parameter), in group-major order.
    fn grid<P: Sync>(
        &self,
        params: &[P],
        describe: impl Fn(&P) -> String + Sync,
        f: impl Fn(&PermGroup, &P, &str) -> Res<GroupRecord> + Sync,
    ) -> Vec<GroupRecord> {
        let tasks: Vec<(&PermGroup, &P)> = self
            .groups
            .iter()
            .flat_map(|g| params.iter().map(move |p| (g, p)))
            .collect();
        tasks
            .par_iter()
            .map(|&(g, p)| {
                let d = describe(p);
                f(g, p, &d).unwrap_or_else(|e| errored(g, &d, e))
            })
            .collect()
    }

    /// Any number of records per group, in group order.
    fn per_group(&self, f: impl Fn(&PermGroup) -> Res<Vec<GroupRecord>> + Sync) -> Vec<GroupRecord> {
        let chunks: Vec<Vec<GroupRecord>> = self
            .groups
            .par_iter()
            .map(|g| f(g).unwrap_or_else(|e| vec![errored(g, "", e)]))
            .collect();
        chunks.concat()
    }

    fn x_pi(&self) -> Vec<(ClassExpr, PrimeSet)> {
        let c = self.config;
        c.xs.iter()
            .flat_map(|x| c.pis.iter().map(move |pi| (x.clone(), pi.clone())))
            .collect()
    }

    fn x_p(&self) -> Vec<(ClassExpr, u64)> {
        let c = self.config;
        c.xs.iter()
            .flat_map(|x| c.primes.iter().map(move |&p| (x.clone(), p)))
            .collect()
    }

    /// Classes whose injectors are examined.
    fn injector_classes(&self) -> Vec<ClassExpr> {
        let mut v = vec![ClassExpr::Nilpotent];
        for pi in &self.config.pis {
            v.push(ClassExpr::NilpotentPi(pi.clone()));
            v.push(ClassExpr::PiNilpotent(pi.clone()));
        }
        v.extend(self.x_pi().into_iter().map(|(x, pi)| ClassExpr::hartley(x, pi)));
        dedup(v)
    }

    fn axiom_classes(&self) -> Vec<ClassExpr> {
        let mut v = vec![ClassExpr::Nilpotent, ClassExpr::Soluble];
        for pi in &self.config.pis {
            v.push(ClassExpr::PiGroups(pi.clone()));
            v.push(ClassExpr::PiSoluble(pi.clone()));
            v.push(ClassExpr::PiNilpotent(pi.clone()));
            v.push(ClassExpr::NilpotentPi(pi.clone()));
        }
        v.extend(self.config.xs.iter().cloned());
        for (x, pi) in self.x_pi() {
            v.push(ClassExpr::hartley(x.clone(), pi.clone()));
            v.push(ClassExpr::product(x, ClassExpr::PiNilpotent(pi)));
        }
        dedup(v)
    }
}

fn dedup(v: Vec<ClassExpr>) -> Vec<ClassExpr> {
    let mut seen = HashSet::new();
    v.into_iter().filter(|c| seen.insert(c.clone())).collect()
}

fn record(label: &str, params: &str, status: Status, details: String) -> GroupRecord {
    GroupRecord {
        label: label.to_string(),
        params: params.to_string(),
        status,
        details,
        injector_orders: Vec::new(),
        class_count: None,
    }
}

fn errored(g: &PermGroup, params: &str, e: Box<dyn Error + Send + Sync>) -> GroupRecord {
    record(g.label(), params, Status::Fail, format!("error: {e}"))
}

fn skipped(g: &PermGroup, params: &str, reason: String) -> GroupRecord {
    record(g.label(), params, Status::Skipped, reason)
}

/// Pass when every check holds; details name the failed checks.
fn judged(label: &str, params: &str, checks: &[(&str, bool)], summary: String) -> GroupRecord {
    let failed: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    if failed.is_empty() {
        record(label, params, Status::Pass, summary)
    } else {
        record(
            label,
            params,
            Status::Fail,
            format!("failed: {}; {summary}", failed.join(", ")),
        )
    }
}

fn with_injectors(mut r: GroupRecord, report: &InjectorReport) -> GroupRecord {
    r.injector_orders = report.orders();
    r.class_count = Some(report.conjugacy_class_count);
    r
}

fn summary(report: &InjectorReport) -> String {
    let mut s = format!(
        "{} injector(s) in {} class(es)",
        report.injectors.len(),
        report.conjugacy_class_count
    );
    if report.decompositions.is_some() {
        s.push_str("; ");
        s.push_str(report.agreement_text());
    }
    s
}

/// Judges a report on its own checks, oracle agreement and `extra`.
fn from_report(g: &PermGroup, params: &str, report: &InjectorReport, extra: &[(&str, bool)]) -> GroupRecord {
    let mut checks: Vec<(&str, bool)> = report.checks.iter().map(|c| (c.name, c.passed)).collect();
    checks.push(("oracle_agreement", report.agreement.unwrap_or(true)));
    checks.extend_from_slice(extra);
    with_injectors(judged(g.label(), params, &checks, summary(report)), report)
}

/// `Some(reason)` when `g` is outside the class.
fn outside(g: &PermGroup, class: &ClassExpr) -> Res<Option<String>> {
    Ok((!member(g, class)?).then(|| format!("not in {class}")))
}

fn d_class(c: &ClassExpr) -> String {
    format!("class={c}")
}

fn d_pi(pi: &PrimeSet) -> String {
    format!("pi={pi}")
}

fn d_p(p: &u64) -> String {
    format!("p={p}")
}

fn d_x_pi((x, pi): &(ClassExpr, PrimeSet)) -> String {
    format!("x={x} pi={pi}")
}

fn d_x_p((x, p): &(ClassExpr, u64)) -> String {
    format!("x={x} p={p}")
}

fn sylow_sanity(ctx: &Ctx<'_>) -> Vec<GroupRecord> {
    ctx.per_group(|g| {
        if g.prime_support().is_empty() {
            return Ok(vec![record(g.label(), "", Status::Pass, "trivial group".into())]);
        }
        let all = subgroups(g)?;
        let mut out = Vec::new();
        for &p in g.prime_support() {
            let s = sylow(g, p)?;
            let pp = p_part(g.order() as u64, p) as usize;
            let classes = conjugacy_classes(&s).len();
            let n = s.len();
            let first = s.items().first().ok_or("no Sylow subgroup")?;
            let covered = all
                .iter()
                .filter(|h| crate::primes::is_p_power(h.order() as u64, p))
                .all(|h| s.iter().any(|q| h.is_subgroup_of(q)));
            let checks = [
                ("orders", s.orders().iter().all(|&o| o == pp)),
                ("count_mod_p", n as u64 % p == 1),
                (
                    "count_is_normalizer_index",
                    n * normalizer(g, first)?.order() == g.order(),
                ),
                ("one_class", classes == 1),
                ("p_subgroups_covered", covered),
            ];
            let mut r = judged(
                g.label(),
                &d_p(&p),
                &checks,
                format!("{n} Sylow {p}-subgroup(s) of order {pp}"),
            );
            r.injector_orders = s.orders();
            r.class_count = Some(classes);
            out.push(r);
        }
        Ok(out)
    })
}

fn fitting_axioms(ctx: &Ctx<'_>) -> Vec<GroupRecord> {
    ctx.grid(&ctx.axiom_classes(), d_class, |g, c, d| {
        let normals = normal_subgroups(g)?;
        let mut is_member = Vec::with_capacity(normals.len());
        for n in normals.iter() {
            is_member.push(member_subgroup(n, c)?);
        }
        let items = normals.items();
        let mut closed = true;
        for (i, m) in items.iter().enumerate() {
            for (j, n) in items.iter().enumerate() {
                if is_member[i] && n.is_subgroup_of(m) && !is_member[j] {
                    closed = false;
                }
            }
        }
        let mut products = true;
        for (i, a) in items.iter().enumerate() {
            for (j, b) in items.iter().enumerate().skip(i) {
                if is_member[i] && is_member[j] && !member_subgroup(&a.join(b), c)? {
                    products = false;
                }
            }
        }
        let r = radical(g, c)?;
        let largest = member_subgroup(&r, c)?
            && normals.contains(&r)
            && items.iter().zip(&is_member).all(|(n, &m)| !m || n.is_subgroup_of(&r));
        let count = is_member.iter().filter(|&&m| m).count();
        Ok(judged(
            g.label(),
            d,
            &[
                ("normal_subgroups_of_members", closed),
                ("products_of_normal_members", products),
                ("radical_is_largest", largest),
            ],
            format!(
                "{count} of {} normal subgroups in class; radical of order {}",
                items.len(),
                r.order()
            ),
        ))
    })
}

fn thm_1_1(ctx: &Ctx<'_>) -> Vec<GroupRecord> {
    ctx.grid(&ctx.injector_classes(), d_class, |g, c, d| {
        if let Some(reason) = outside(g, &ClassExpr::Soluble)? {
            return Ok(skipped(g, d, reason));
        }
        let r = injectors_oracle(g, c)?;
        Ok(from_report(
            g,
            d,
            &r,
            &[
                ("nonempty", !r.injectors.is_empty()),
                ("one_class", r.conjugacy_class_count == 1),
            ],
        ))
    })
}

fn lem_2_1(ctx: &Ctx<'_>) -> Vec<GroupRecord> {
    ctx.grid(&ctx.config.pis, d_pi, |g, pi, d| {
        if let Some(reason) = outside(g, &ClassExpr::PiSoluble(pi.clone()))? {
            return Ok(skipped(g, d, reason));
        }
        let f = radical(g, &ClassExpr::PiNilpotent(pi.clone()))?;
        let constrained = centralizer(g, &f)?.is_subgroup_of(&f);
        let o_prime = radical(g, &ClassExpr::PiGroups(pi.complement()))?;
        let special = if o_prime.is_trivial() {
            let o = radical(g, &ClassExpr::PiGroups(pi.clone()))?;
            centralizer(g, &o)?.is_subgroup_of(&o)
        } else {
            true
        };
        Ok(judged(
            g.label(),
            d,
            &[
                ("centralizer_in_pi_nilpotent_radical", constrained),
                ("centralizer_in_pi_radical", special),
            ],
            format!("pi-nilpotent radical of order {}", f.order()),
        ))
    })
}

fn maximal_normal(g: &PermGroup) -> Res<Vec<Subgroup>> {
    let normals = normal_subgroups(g)?;
    let proper: Vec<&Subgroup> = normals.iter().filter(|n| !n.is_whole()).collect();
    Ok(proper
        .iter()
        .filter(|m| !proper.iter().any(|n| *n != **m && m.is_subgroup_of(n)))
        .map(|m| (*m).clone())
        .collect())
}

fn lem_2_2(ctx: &Ctx<'_>) -> Vec<GroupRecord> {
    let classes = ctx.injector_classes();
    ctx.per_group(|g| {
        let normals = normal_subgroups(g)?;
        let maximal = maximal_normal(g)?;
        let copy = quotient(g, &g.trivial())?;
        let mut out = Vec::new();
        for c in &classes {
            let d = d_class(c);
            let r = injectors_oracle(g, c)?;
            let fmax = f_maximal_subgroups(g, c)?;
            let rad = radical(g, c)?;
            let contains_radical = r.injectors.iter().all(|v| rad.is_subgroup_of(v));
            let f_maximal = r.injectors.iter().all(|v| fmax.contains(v));
            let mut intersections = true;
            for k in normals.iter() {
                let inner = injectors_oracle_in(k, c)?;
                intersections &= r.injectors.iter().all(|v| inner.injectors.contains(&v.intersection(k)));
            }
            let mut inner_max = Vec::new();
            for m in &maximal {
                inner_max.push(injectors_oracle_in(m, c)?);
            }
            let criterion = fmax
                .iter()
                .filter(|w| {
                    maximal
                        .iter()
                        .zip(&inner_max)
                        .all(|(m, i)| i.injectors.contains(&w.intersection(m)))
                })
                .all(|w| r.injectors.contains(w));
            let image = injectors_oracle(copy.group(), c)?;
            let transported = r.injectors.len() == image.injectors.len()
                && r.injectors.iter().all(|v| image.injectors.contains(&copy.image(v)));
            let rec = judged(
                g.label(),
                &d,
                &[
                    ("intersections_with_normal", intersections),
                    ("isomorphic_image", transported),
                    ("maximal_normal_criterion", criterion),
                    ("contains_radical", contains_radical),
                    ("f_maximal", f_maximal),
                ],
                summary(&r),
            );
            out.push(with_injectors(rec, &r));
        }
        Ok(out)
    })
}

fn lem_2_3(ctx: &Ctx<'_>) -> Vec<GroupRecord> {
    let mut classes = ctx.injector_classes();
    classes.extend(ctx.config.xs.iter().cloned());
    classes.push(ClassExpr::Soluble);
    let classes = dedup(classes);
    let mut lower = vec![ClassExpr::Nilpotent, ClassExpr::Soluble];
    lower.extend(ctx.config.xs.iter().cloned());
    let lower = dedup(lower);
    let mut upper = vec![ClassExpr::Nilpotent];
    for pi in &ctx.config.pis {
        upper.push(ClassExpr::PiNilpotent(pi.clone()));
        upper.push(ClassExpr::PiGroups(pi.complement()));
    }
    let upper = dedup(upper);

    ctx.per_group(|g| {
        let subnormal: Vec<Subgroup> = subgroups(g)?
            .iter()
            .filter(|h| is_subnormal(h, g).unwrap_or(false))
            .cloned()
            .collect();
        let mut out = Vec::new();
        for c in &classes {
            let r = radical(g, c)?;
            let mut ok = true;
            for n in &subnormal {
                ok &= radical_of(n, c)? == n.intersection(&r);
            }
            out.push(judged(
                g.label(),
                &format!("subnormal class={c}"),
                &[("radical_of_subnormal", ok)],
                format!("{} subnormal subgroups", subnormal.len()),
            ));
        }
        for f in &lower {
            let q = quotient(g, &radical(g, f)?)?;
            for h in &upper {
                let down = q.preimage(&radical(q.group(), h)?);
                let up = radical(g, &ClassExpr::product(f.clone(), h.clone()))?;
                out.push(judged(
                    g.label(),
                    &format!("quotient f={f} h={h}"),
                    &[("radical_through_quotient", down == up)],
                    format!("product radical of order {}", up.order()),
                ));
            }
        }
        Ok(out)
    })
}

fn lem_2_4(ctx: &Ctx<'_>) -> Vec<GroupRecord> {
    ctx.grid(&ctx.config.pis, d_pi, |g, pi, d| {
        if let Some(reason) = outside(g, &ClassExpr::PiSoluble(pi.clone()))? {
            return Ok(skipped(g, d, reason));
        }
        let r = injectors_oracle(g, &ClassExpr::PiGroups(pi.clone()))?;
        let halls = hall_subgroups(g, pi)?;
        let covered = subgroups(g)?
            .iter()
            .filter(|h| pi.covers(h.order() as u64))
            .all(|h| halls.iter().any(|k| h.is_subgroup_of(k)));
        Ok(from_report(
            g,
            d,
            &r,
            &[
                ("injectors_are_hall_subgroups", r.injectors == halls),
                ("nonempty", !halls.is_empty()),
                ("one_class", r.conjugacy_class_count == 1),
                ("pi_subgroups_in_hall_subgroups", covered),
            ],
        ))
    })
}

fn lem_3_1(ctx: &Ctx<'_>) -> Vec<GroupRecord> {
    ctx.grid(&ctx.config.pis, d_pi, |g, pi, d| {
        if let Some(reason) = outside(g, &ClassExpr::PiSoluble(pi.clone()))? {
            return Ok(skipped(g, d, reason));
        }
        Ok(from_report(g, d, &pi_nilpotent_injectors_constructive(g, pi)?, &[]))
    })
}

fn p_soluble(p: u64) -> ClassExpr {
    ClassExpr::PiSoluble(PrimeSet::single(p))
}

fn cor_3_2(ctx: &Ctx<'_>) -> Vec<GroupRecord> {
    ctx.grid(&ctx.config.primes, d_p, |g, &p, d| {
        if let Some(reason) = outside(g, &p_soluble(p))? {
            return Ok(skipped(g, d, reason));
        }
        Ok(from_report(g, d, &p_nilpotent_injectors(g, p)?, &[]))
    })
}

fn lem_3_3(ctx: &Ctx<'_>) -> Vec<GroupRecord> {
    let mut out = ctx.grid(&ctx.x_pi(), d_x_pi, |g, (x, pi), d| {
        if let Some(reason) = outside(g, &ClassExpr::hartley(x.clone(), pi.clone()))? {
            return Ok(skipped(g, d, reason));
        }
        let mut ok = true;
        for q in pi.restrict(g.prime_support()) {
            let res = residual(g, &ClassExpr::PGroups(q))?;
            let rad = radical(
                g,
                &ClassExpr::product(x.clone(), ClassExpr::PiGroups(PrimeSet::all_but(q))),
            )?;
            ok &= res.is_subgroup_of(&rad);
        }
        Ok(judged(
            g.label(),
            d,
            &[("residual_in_radical", ok)],
            "residual containment".into(),
        ))
    });
    out.extend(ctx.grid(&ctx.x_p(), d_x_p, |g, (x, p), d| {
        let ep = ClassExpr::PiGroups(PrimeSet::all_but(*p));
        let in_product = member(g, &ClassExpr::product(x.clone(), ep.clone()))?;
        let res = residual(g, &ep)?;
        let res_in_x = member_subgroup(&res, x)?;
        Ok(judged(
            g.label(),
            &format!("residual {d}"),
            &[("product_iff_residual_in_x", in_product == res_in_x)],
            format!("residual of order {}", res.order()),
        ))
    }));
    for (x, pi) in ctx.x_pi() {
        let d = d_x_pi(&(x.clone(), pi.clone()));
        let h = HFunction::invariable(x, pi);
        let rec = match hfun_predicates(&h, ctx.groups) {
            Ok(p) => judged(
                "catalog",
                &d,
                &[
                    ("integrated", p.integrated_ok),
                    ("full", p.full_ok),
                    ("invariable", p.invariable),
                ],
                format!("{} groups", ctx.groups.len()),
            ),
            Err(e) => record("catalog", &d, Status::Fail, format!("error: {e}")),
        };
        out.push(rec);
    }
    out
}

fn lem_3_4(ctx: &Ctx<'_>) -> Vec<GroupRecord> {
    ctx.grid(&ctx.x_pi(), d_x_pi, |g, (x, pi), d| {
        let hyp = ClassExpr::product(x.clone(), ClassExpr::PiSoluble(pi.clone()));
        if let Some(reason) = outside(g, &hyp)? {
            return Ok(skipped(g, d, reason));
        }
        let h = HFunction::invariable(x.clone(), pi.clone());
        let hclass = h.class();
        let pinil = ClassExpr::PiNilpotent(pi.clone());
        let gh = h_radical(g, &h)?;
        let q = quotient(g, &gh)?;
        let g_h = radical(g, &hclass)?;
        let identity = q.image(&g_h) == radical(q.group(), &pinil)?;
        let mut criterion = true;
        let mut above = 0;
        for v in subgroups(g)?.iter().filter(|v| g_h.is_subgroup_of(v)) {
            above += 1;
            criterion &= member_subgroup(v, &hclass)? == member_subgroup(&q.image(v), &pinil)?;
        }
        Ok(judged(
            g.label(),
            d,
            &[
                ("h_radical_is_x_radical", gh == radical(g, x)?),
                ("radical_identity", identity),
                ("membership_criterion", criterion),
            ],
            format!("{above} subgroups above the radical"),
        ))
    })
}

fn thm_1_5(ctx: &Ctx<'_>) -> Vec<GroupRecord> {
    ctx.grid(&ctx.x_pi(), d_x_pi, |g, (x, pi), d| {
        let hyp = ClassExpr::product(x.clone(), ClassExpr::PiSoluble(pi.clone()));
        if let Some(reason) = outside(g, &hyp)? {
            return Ok(skipped(g, d, reason));
        }
        Ok(from_report(g, d, &hartley_injectors_constructive(g, x, pi)?, &[]))
    })
}

fn cor_1_5_1(ctx: &Ctx<'_>) -> Vec<GroupRecord> {
    ctx.grid(&ctx.x_pi(), d_x_pi, |g, (x, pi), d| {
        let product = ClassExpr::product(x.clone(), ClassExpr::PiNilpotent(pi.clone()));
        let same = member(g, &ClassExpr::hartley(x.clone(), pi.clone()))? == member(g, &product)?;
        if !member(g, &ClassExpr::PiSoluble(pi.clone()))? {
            return Ok(judged(
                g.label(),
                d,
                &[("membership_equivalence", same)],
                "membership only".into(),
            ));
        }
        let r = injectors_oracle(g, &product)?;
        Ok(from_report(
            g,
            d,
            &r,
            &[
                ("membership_equivalence", same),
                ("nonempty", !r.injectors.is_empty()),
                ("one_class", r.conjugacy_class_count == 1),
            ],
        ))
    })
}

fn cor_1_5_2(ctx: &Ctx<'_>) -> Vec<GroupRecord> {
    let c = ctx.config;
    let params: Vec<(PrimeSet, usize)> = c
        .pis
        .iter()
        .flat_map(|pi| c.ks.iter().map(move |&k| (pi.clone(), k)))
        .collect();
    ctx.grid(
        &params,
        |(pi, k)| format!("pi={pi} k={k}"),
        |g, (pi, k), d| {
            if let Some(reason) = outside(g, &ClassExpr::PiSoluble(pi.clone()))? {
                return Ok(skipped(g, d, reason));
            }
            Ok(from_report(g, d, &iterated_class_injectors(g, pi, *k)?, &[]))
        },
    )
}

fn cor_1_5_3(ctx: &Ctx<'_>) -> Vec<GroupRecord> {
    ctx.grid(&ctx.x_p(), d_x_p, |g, (x, p), d| {
        let hyp = ClassExpr::product(x.clone(), p_soluble(*p));
        if let Some(reason) = outside(g, &hyp)? {
            return Ok(skipped(g, d, reason));
        }
        Ok(from_report(
            g,
            d,
            &hartley_injectors_constructive(g, x, &PrimeSet::single(*p))?,
            &[],
        ))
    })
}

fn cor_1_5_4(ctx: &Ctx<'_>) -> Vec<GroupRecord> {
    ctx.grid(&ctx.config.primes, d_p, |g, &p, d| {
        if let Some(reason) = outside(g, &p_soluble(p))? {
            return Ok(skipped(g, d, reason));
        }
        let r = p_nilpotent_injectors(g, p)?;
        let oracle = injectors_oracle(g, &ClassExpr::PiNilpotent(PrimeSet::single(p)))?;
        Ok(from_report(
            g,
            d,
            &r,
            &[
                ("one_class", r.conjugacy_class_count == 1),
                ("oracle_one_class", oracle.conjugacy_class_count == 1),
            ],
        ))
    })
}
