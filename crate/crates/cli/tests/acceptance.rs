//! Acceptance criteria; prints one PASS/FAIL line per criterion.

use std::collections::{HashMap, HashSet};
use std::process::Command;
use std::time::{Duration, Instant};

use fitgroup::fitting::{member, radical};
use fitgroup::harness::{run_suite, Catalog, Config, Status, SuiteResult};
use fitgroup::injectors::{
    hartley_injectors_constructive, injectors_oracle, p_nilpotent_injectors, pi_nilpotent_injectors_constructive,
};
use fitgroup::perm::subgroups;
use fitgroup::{ClassExpr, Limits, PermGroup, Permutation, PrimeSet};

const ENGINE_BUDGET: Duration = Duration::from_secs(10);
const SUITE_BUDGET: Duration = Duration::from_secs(300);
const NAIVE_MAX_ORDER: usize = 24;
const A5_NIL_INJECTORS: usize = 21;
const A5_NIL_CLASSES: usize = 3;

type Outcome = Result<String, String>;
type Criterion = fn() -> Outcome;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed(budget: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let summary = f()?;
    let t = start.elapsed();
    ensure(t < budget, || format!("took {t:.2?}, budget {budget:?}"))?;
    Ok(format!("{summary} in {t:.2?}"))
}

fn catalog() -> Catalog {
    Catalog::builtin(Limits::default()).expect("builtin catalog")
}

fn suite(id: &str, catalog: &Catalog, config: &Config) -> Result<SuiteResult, String> {
    let s = run_suite(id, catalog, config).map_err(|e| e.to_string())?;
    let fails: Vec<String> = s
        .failures()
        .map(|r| format!("{} [{}]: {}", r.label, r.params, r.details))
        .collect();
    ensure(fails.is_empty(), || format!("{id}: {}", fails.join("; ")))?;
    Ok(s)
}

fn passed(s: &SuiteResult) -> impl Iterator<Item = &fitgroup::harness::GroupRecord> {
    s.records.iter().filter(|r| r.status == Status::Pass)
}

/// Counts subsets closed under multiplication by deciding each element in
/// turn and pruning as soon as a decided-out element is a forced product.
fn naive_subgroup_count(g: &PermGroup) -> usize {
    let elems: Vec<Permutation> = g.elements().to_vec();
    let index: HashMap<&Permutation, usize> = elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let n = elems.len();
    let table: Vec<Vec<usize>> = elems
        .iter()
        .map(|a| elems.iter().map(|b| index[&a.then(b)]).collect())
        .collect();

    fn search(pos: usize, inside: &mut Vec<bool>, chosen: &mut Vec<usize>, table: &[Vec<usize>]) -> usize {
        let n = table.len();
        if pos == n {
            return usize::from(!chosen.is_empty());
        }
        let forced = chosen.iter().any(|&a| chosen.iter().any(|&b| table[a][b] == pos));
        let mut count = 0;
        if !forced {
            count += search(pos + 1, inside, chosen, table);
        }
        chosen.push(pos);
        inside[pos] = true;
        let consistent = chosen
            .iter()
            .all(|&a| [table[a][pos], table[pos][a]].iter().all(|&c| c > pos || inside[c]));
        if consistent {
            count += search(pos + 1, inside, chosen, table);
        }
        inside[pos] = false;
        chosen.pop();
        count
    }

    search(0, &mut vec![false; n], &mut Vec::new(), &table)
}

fn criterion_1() -> Outcome {
    timed(ENGINE_BUDGET, || {
        let catalog = catalog();
        let mut checked = Vec::new();
        for g in catalog.groups().filter(|g| g.order() <= NAIVE_MAX_ORDER) {
            let naive = naive_subgroup_count(g);
            let lattice = subgroups(g).map_err(|e| e.to_string())?.len();
            ensure(naive == lattice, || {
                format!("{}: naive {naive}, lattice {lattice}", g.label())
            })?;
            checked.push((g.label().to_string(), naive));
        }
        for (label, want) in [("S4", 30), ("Q8", 6), ("C6", 4)] {
            let got = checked.iter().find(|(l, _)| l == label).map(|(_, n)| *n);
            ensure(got == Some(want), || {
                format!("{label}: {got:?} subgroups, expected {want}")
            })?;
        }
        let s = suite("sylow-sanity", &catalog, &Config::default())?;
        let groups: HashSet<&str> = s.records.iter().map(|r| r.label.as_str()).collect();
        ensure(groups.len() == catalog.len(), || "sylow-sanity missed groups".into())?;
        Ok(format!(
            "{} groups match the naive count; sylow-sanity {} records",
            checked.len(),
            s.records.len()
        ))
    })
}

fn criterion_2() -> Outcome {
    timed(SUITE_BUDGET, || {
        let catalog = catalog();
        let s = suite("thm-1.1", &catalog, &Config::default())?;
        let mut soluble = 0;
        for g in catalog.groups() {
            if !member(g, &ClassExpr::Soluble).map_err(|e| e.to_string())? {
                continue;
            }
            soluble += 1;
            for r in s.records.iter().filter(|r| r.label == g.label()) {
                ensure(r.status == Status::Pass, || {
                    format!("{} [{}] {:?}", r.label, r.params, r.status)
                })?;
                ensure(!r.injector_orders.is_empty() && r.class_count == Some(1), || {
                    format!("{} [{}]: {}", r.label, r.params, r.details)
                })?;
            }
        }
        Ok(format!("{soluble} soluble groups, {} records pass", passed(&s).count()))
    })
}

fn criterion_3() -> Outcome {
    timed(SUITE_BUDGET, || {
        let catalog = catalog();
        let config = Config::default();
        let mut compared = 0;
        for g in catalog.groups() {
            for pi in &config.pis {
                if !member(g, &ClassExpr::PiSoluble(pi.clone())).map_err(|e| e.to_string())? {
                    continue;
                }
                let c = pi_nilpotent_injectors_constructive(g, pi).map_err(|e| e.to_string())?;
                let o = injectors_oracle(g, &ClassExpr::PiNilpotent(pi.clone())).map_err(|e| e.to_string())?;
                ensure(c.injectors == o.injectors, || {
                    format!("{} pi={pi}: sets differ", g.label())
                })?;
                compared += 1;
            }
            for &p in &config.primes {
                let single = PrimeSet::single(p);
                if !member(g, &ClassExpr::PiSoluble(single.clone())).map_err(|e| e.to_string())? {
                    continue;
                }
                let c = p_nilpotent_injectors(g, p).map_err(|e| e.to_string())?;
                let o = injectors_oracle(g, &ClassExpr::PiNilpotent(single)).map_err(|e| e.to_string())?;
                ensure(c.injectors == o.injectors, || {
                    format!("{} p={p}: sets differ", g.label())
                })?;
                compared += 1;
            }
        }
        let pi_nil = suite("lem-3.1", &catalog, &config)?;
        let cor = suite("cor-3.2", &catalog, &config)?;
        let s4 = cor
            .records
            .iter()
            .find(|r| r.label == "S4" && r.params == "p=3")
            .ok_or("no S4 p=3 record")?;
        ensure(s4.injector_orders == [12], || {
            format!("S4 p=3: {:?}", s4.injector_orders)
        })?;
        Ok(format!(
            "{compared} constructive sets equal the oracle; {} + {} suite records pass",
            passed(&pi_nil).count(),
            passed(&cor).count()
        ))
    })
}

fn criterion_4() -> Outcome {
    let catalog = catalog();
    let default = Config::default();
    let mut matrix: Vec<(ClassExpr, PrimeSet)> = default
        .xs
        .iter()
        .flat_map(|x| default.pis.iter().map(move |pi| (x.clone(), pi.clone())))
        .collect();
    let epi: ClassExpr = "Epi({2,3,5})".parse().unwrap();
    let seven = PrimeSet::single(7);
    matrix.push((epi.clone(), seven.clone()));

    let mut verified = 0;
    for g in catalog.groups() {
        for (x, pi) in &matrix {
            let hyp = ClassExpr::product(x.clone(), ClassExpr::PiSoluble(pi.clone()));
            if !member(g, &hyp).map_err(|e| e.to_string())? {
                continue;
            }
            let tag = || format!("{} x={x} pi={pi}", g.label());
            let r = hartley_injectors_constructive(g, x, pi).map_err(|e| format!("{}: {e}", tag()))?;
            let o = injectors_oracle(g, &ClassExpr::hartley(x.clone(), pi.clone())).map_err(|e| e.to_string())?;
            ensure(r.injectors == o.injectors, || format!("{}: differs from oracle", tag()))?;
            ensure(r.conjugacy_class_count == 1, || {
                format!("{}: {} classes", tag(), r.conjugacy_class_count)
            })?;
            let gx = radical(g, &ClassExpr::product(x.clone(), ClassExpr::PiGroups(pi.complement())))
                .map_err(|e| e.to_string())?;
            let ds = r
                .decompositions
                .as_ref()
                .ok_or_else(|| format!("{}: no decompositions", tag()))?;
            for (v, d) in r.injectors.iter().zip(ds) {
                ensure(d.radical_part == gx, || format!("{}: radical part differs", tag()))?;
                let product: HashSet<Permutation> = d
                    .radical_part
                    .permutations()
                    .iter()
                    .flat_map(|a| d.complement_part.permutations().into_iter().map(move |b| a.then(&b)))
                    .collect();
                let members: HashSet<Permutation> = v.permutations().into_iter().collect();
                ensure(product == members, || format!("{}: product is not the injector", tag()))?;
            }
            verified += 1;
        }
    }

    let s = suite("thm-1.5", &catalog, &default)?;
    let extra = Config {
        xs: vec![epi],
        pis: vec![seven],
        ..Config::default()
    };
    let e = suite("thm-1.5", &catalog, &extra)?;
    let a5c7 = e.records.iter().find(|r| r.label == "A5xC7").ok_or("no A5xC7 record")?;
    ensure(a5c7.status == Status::Pass, || {
        format!("A5xC7: {:?} {}", a5c7.status, a5c7.details)
    })?;
    Ok(format!(
        "{verified} (group, X, pi) cases decompose and match the oracle; {} suite records pass",
        passed(&s).count() + passed(&e).count()
    ))
}

fn criterion_5() -> Outcome {
    let catalog = catalog();
    let config = Config::default();
    let mut total = 0;
    for g in catalog.groups() {
        for x in &config.xs {
            for pi in &config.pis {
                let a = member(g, &ClassExpr::hartley(x.clone(), pi.clone())).map_err(|e| e.to_string())?;
                let b = member(g, &ClassExpr::product(x.clone(), ClassExpr::PiNilpotent(pi.clone())))
                    .map_err(|e| e.to_string())?;
                ensure(a == b, || format!("{} x={x} pi={pi}: {a} vs {b}", g.label()))?;
                total += 1;
            }
        }
    }
    let s = suite("cor-1.5.1", &catalog, &config)?;
    ensure(s.totals.skipped == 0, || "cor-1.5.1 skipped records".into())?;
    Ok(format!("{total} of {total} memberships agree"))
}

fn criterion_6() -> Outcome {
    let catalog = catalog();
    let config = Config::default();
    let mut parts = Vec::new();
    for id in ["lem-2.1", "lem-2.2", "lem-2.3", "lem-2.4", "lem-3.4"] {
        let s = suite(id, &catalog, &config)?;
        ensure(s.totals.pass > 0, || format!("{id}: nothing passed"))?;
        parts.push(format!("{id} {}", s.totals.pass));
    }
    // The Hall check in lem-2.4 scans every pi-subgroup; repeat it here.
    let mut scanned = 0;
    for g in catalog.groups() {
        for pi in &config.pis {
            if !member(g, &ClassExpr::PiSoluble(pi.clone())).map_err(|e| e.to_string())? {
                continue;
            }
            let halls = fitgroup::injectors::hall_subgroups(g, pi).map_err(|e| e.to_string())?;
            for h in subgroups(g).map_err(|e| e.to_string())?.iter() {
                if pi.covers(h.order() as u64) {
                    ensure(halls.iter().any(|k| h.is_subgroup_of(k)), || {
                        format!("{} pi={pi}: {h} in no Hall subgroup", g.label())
                    })?;
                    scanned += 1;
                }
            }
        }
    }
    Ok(format!(
        "{}; {scanned} pi-subgroups lie in Hall subgroups",
        parts.join(", ")
    ))
}

fn criterion_7() -> Outcome {
    let a5 = catalog().require("A5").map_err(|e| e.to_string())?.clone();
    let r = injectors_oracle(&a5, &ClassExpr::Nilpotent).map_err(|e| e.to_string())?;
    ensure(
        r.injectors.len() == A5_NIL_INJECTORS && r.conjugacy_class_count == A5_NIL_CLASSES,
        || format!("{} injectors in {} classes", r.injectors.len(), r.conjugacy_class_count),
    )?;
    Ok(format!(
        "{} injectors in {} classes",
        r.injectors.len(),
        r.conjugacy_class_count
    ))
}

fn criterion_8() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut reports = Vec::new();
    for i in 0..2 {
        let path = dir.path().join(format!("run{i}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_fitgroup"))
            .args(["verify", "--suite", "all", "--json"])
            .arg(&path)
            .output()
            .map_err(|e| e.to_string())?
            .status;
        ensure(status.success(), || format!("run {i} exited with {status}"))?;
        reports.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure(reports[0] == reports[1], || "reports differ".into())?;
    Ok(format!("two runs, {} identical bytes", reports[0].len()))
}

fn main() {
    let criteria: [(&str, Criterion); 8] = [
        ("engine sanity", criterion_1),
        ("soluble injectors", criterion_2),
        ("pi- and p-nilpotent construction", criterion_3),
        ("Hartley construction", criterion_4),
        ("membership identity", criterion_5),
        ("structural suites", criterion_6),
        ("negative control", criterion_7),
        ("determinism", criterion_8),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(msg) => println!("criterion {} ({name}): PASS - {msg}", i + 1),
            Err(msg) => {
                failures += 1;
                println!("criterion {} ({name}): FAIL - {msg}", i + 1);
            }
        }
    }
    if failures > 0 {
        eprintln!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
