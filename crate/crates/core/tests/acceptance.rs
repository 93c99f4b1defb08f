//! Acceptance checks, one line per criterion. Runs without the test harness
//! and exits non-zero if any criterion fails.

mod common;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::sync::Arc;
use std::time::{Duration, Instant};
use wcolim::bicolim::{comparison_functor, example_idempotent, verify_bicolimit};
use wcolim::fincat::{functor_category, FinCat};
use wcolim::pscolim::{
    conical_oracle, pscolim_presentation, sigma_functor_cat, verify_main_theorem, yoneda_equivalence,
};
use wcolim::psfun::{enumerate_pseudo_naturals, PseudoFunctor, PseudoNat, Variance};
use wcolim::seeds::{self, Seed};
use wcolim::Budget;

type Verdict = Result<String, String>;

fn budget() -> Budget {
    Budget::default()
}

fn point() -> Arc<FinCat> {
    Arc::new(FinCat::terminal())
}

fn terminal_weight(e: &PseudoFunctor) -> Arc<PseudoFunctor> {
    Arc::new(PseudoFunctor::constant(Variance::Contravariant, e.shape.clone(), point()))
}

fn within_bounds(s: &Seed) -> bool {
    let k = &*s.e.shape;
    let fibers = s.e.values.iter().chain(&s.w.values).all(|v| v.n_objects() <= 4);
    k.n_objects() <= 2 && k.n_one() <= 6 && k.n_two() <= 8 && fibers
}

fn main_theorem() -> Verdict {
    let mut instances = 0;
    let mut slowest = Duration::ZERO;
    for s in seeds::all_seeds().iter().filter(|s| within_bounds(s)) {
        let start = Instant::now();
        let mut passed = 0;
        for (name, x) in seeds::test_categories() {
            let r = verify_main_theorem(&s.e, &s.w, &x, budget()).map_err(|e| format!("{} {name}: {e}", s.name))?;
            if !r.passed() {
                return Err(format!("{} {name}: {:?}", s.name, r.witness));
            }
            passed += 1;
        }
        let took = start.elapsed();
        slowest = slowest.max(took);
        if took > Duration::from_secs(60) {
            return Err(format!("{} took {took:?}", s.name));
        }
        if passed >= 2 {
            instances += 1;
        }
    }
    if instances < 5 {
        return Err(format!("only {instances} instances in bounds"));
    }
    Ok(format!("{instances} instances x 5 categories, strict isomorphism, slowest {slowest:.2?}"))
}

fn conical() -> Verdict {
    let mut cases: Vec<(String, Arc<PseudoFunctor>)> = seeds::all_seeds()
        .into_iter()
        .filter(|s| s.e.shape.is_locally_discrete())
        .map(|s| (s.name.to_string(), s.e))
        .collect();
    let mut r = ChaCha8Rng::seed_from_u64(2);
    let iso = Arc::new(FinCat::walking_iso());
    for i in 0..40 {
        let (e, _) = updown_instance(&random_poset(&mut r, 3));
        let e = if i % 2 == 0 { e } else { Arc::new(times(&e, &iso)) };
        cases.push((format!("random {i}"), e));
    }
    for (name, e) in &cases {
        let w = terminal_weight(e);
        let pres = pscolim_presentation(e, &w, budget()).map_err(|err| format!("{name}: {err}"))?;
        let (oracle, sigma) = conical_oracle(e, budget()).map_err(|err| format!("{name}: {err}"))?;
        // same indices, endpoints, identities and composition table; labels
        // differ only by the trivial weight coordinate
        if *pres.p != oracle {
            return Err(format!("{name}: categories differ"));
        }
        if pres.sigma != sigma {
            return Err(format!("{name}: marked arrows differ"));
        }
    }
    Ok(format!("{} locally discrete instances equal exactly", cases.len()))
}

fn counterexample() -> Verdict {
    let start = Instant::now();
    let report = example_idempotent(budget()).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    let actual = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())? + "\n";
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/example_idempotent.json");
    let golden = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
    let mut problems = Vec::new();
    if actual != golden {
        problems.push("golden file differs".to_string());
    }
    if took > Duration::from_secs(5) {
        problems.push(format!("took {took:?}"));
    }
    if !report.separates() {
        problems.push(format!(
            "pseudo side groupoid={} with {} arrow(s); bi side {} object(s), {} arrow(s), groupoid={}, non-invertible idempotents {:?}; comparison {:?}",
            report.pseudo.is_groupoid,
            report.pseudo.arrows.len(),
            report.bi.objects.len(),
            report.bi.arrows.len(),
            report.bi.is_groupoid,
            report.bi.noninvertible_idempotents,
            report.comparison,
        ));
    }
    if problems.is_empty() {
        Ok(format!("separates, golden match, {took:.2?}"))
    } else {
        Err(problems.join("; "))
    }
}

fn yoneda() -> Verdict {
    let mut checked = 0;
    for s in seeds::all_seeds() {
        for c in s.e.shape.objects() {
            let (r, _) = yoneda_equivalence(&s.e, c, budget()).map_err(|e| format!("{} at {c}: {e}", s.name))?;
            if !r.passed() {
                return Err(format!("{} at {c}: {:?}", s.name, r.witness));
            }
            checked += 1;
        }
    }
    if checked < 3 {
        return Err(format!("only {checked} instances"));
    }
    Ok(format!("{checked} (instance, object) pairs: GF = id, unit and coherence cells marked"))
}

fn bicolimit() -> Verdict {
    let xs = [
        ("terminal", point()),
        ("walking_arrow", Arc::new(FinCat::walking_arrow())),
        ("walking_idempotent", Arc::new(FinCat::walking_idempotent())),
    ];
    let mut checked = 0;
    for s in seeds::all_seeds() {
        for (name, x) in &xs {
            let r = verify_bicolimit(&s.e, &s.w, x, budget()).map_err(|e| format!("{} {name}: {e}", s.name))?;
            if !r.passed() {
                return Err(format!("{} {name}: {:?}", s.name, r.witness));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (instance, category) pairs: strict round trip, invertible unit"))
}

fn comparison() -> Verdict {
    let mut cases: Vec<(String, Arc<PseudoFunctor>, Arc<PseudoFunctor>)> =
        seeds::all_seeds().into_iter().map(|s| (s.name.to_string(), s.e, s.w)).collect();
    let mut r = ChaCha8Rng::seed_from_u64(6);
    for i in 0..20 {
        let (e, w) = updown_instance(&random_poset(&mut r, 3));
        cases.push((format!("random {i}"), e, w));
    }
    let (mut checked, mut skipped) = (0, 0);
    for (name, e, w) in &cases {
        match comparison_functor(e, w, budget()) {
            Ok(d) if d.report.passed() => checked += 1,
            Ok(d) => return Err(format!("{name}: {:?}", d.report)),
            Err(err) if err.is_budget() => skipped += 1,
            Err(err) => return Err(format!("{name}: {err}")),
        }
    }
    Ok(format!("{checked} instances well-defined, marked-preserving, surjective; {skipped} out of budget"))
}

fn validators() -> Verdict {
    let mut r = ChaCha8Rng::seed_from_u64(7);
    let iso = Arc::new(FinCat::walking_iso());
    let mut bases: Vec<Arc<PseudoFunctor>> = Vec::new();
    for s in seeds::all_seeds() {
        bases.push(Arc::new(times(&s.e, &iso)));
        bases.push(Arc::new(times(&s.w, &iso)));
        bases.push(s.e);
        bases.push(s.w);
    }
    let (mut functors, mut nats, mut mutants) = (0, 0, 0);
    let mut laws = HashSet::new();
    let mut round = 0;
    while functors < 200 || nats < 200 || mutants < 400 {
        let base = if round % 3 == 2 {
            let (e, w) = updown_instance(&random_poset(&mut r, 3));
            Arc::new(times(if r.gen_bool(0.5) { &e } else { &w }, &iso))
        } else {
            bases[r.gen_range(0..bases.len())].clone()
        };
        round += 1;
        let (g, tau) = transport(&mut r, &base);
        let g = Arc::new(g);
        let rep = g.validate();
        if !rep.is_valid() {
            return Err(format!("valid transported functor rejected: {rep}"));
        }
        functors += 1;
        let candidates = [
            transport_nat(&base, &g, &tau),
            transport_nat_back(&base, &g, &tau),
            PseudoNat::identity(&g),
        ];
        for t in &candidates {
            let rep = t.validate();
            if !rep.is_valid() {
                return Err(format!("valid pseudo-natural rejected: {rep}"));
            }
            nats += 1;
        }
        for m in mutate_functor(&mut r, &g) {
            let rep = m.mutant.validate();
            if !m.laws.iter().any(|&l| rep.has(l)) || !m.witness.iter().all(|&c| rep.mentions(c)) {
                return Err(format!("{}: wrong or missing witness: {rep}", m.what));
            }
            laws.extend(m.laws.iter().copied().filter(|&l| rep.has(l)));
            mutants += 1;
        }
        let pick = r.gen_range(0..2);
        for m in mutate_nat(&mut r, &candidates[pick]) {
            let rep = m.mutant.validate();
            if !m.laws.iter().any(|&l| rep.has(l)) || !m.witness.iter().all(|&c| rep.mentions(c)) {
                return Err(format!("{}: wrong or missing witness: {rep}", m.what));
            }
            laws.extend(m.laws.iter().copied().filter(|&l| rep.has(l)));
            mutants += 1;
        }
    }
    let mut laws: Vec<String> = laws.iter().map(|l| format!("{l:?}")).collect();
    laws.sort();
    Ok(format!(
        "{functors} pseudo-functors and {nats} pseudo-naturals accepted; {mutants} mutations rejected ({})",
        laws.join(", ")
    ))
}

fn enumeration() -> Verdict {
    const LIMIT: f64 = 2e7;
    let mut r = ChaCha8Rng::seed_from_u64(8);
    let mut pairs: Vec<(String, Arc<PseudoFunctor>, Arc<PseudoFunctor>)> = Vec::new();
    for s in seeds::all_seeds() {
        for (tag, f) in [("E", &s.e), ("W", &s.w)] {
            let (g, _) = transport(&mut r, f);
            pairs.push((format!("{} {tag}->{tag}", s.name), f.clone(), f.clone()));
            pairs.push((format!("{} {tag}->transported", s.name), f.clone(), Arc::new(g)));
        }
    }
    for i in 0..10 {
        let (e, w) = updown_instance(&random_poset(&mut r, 2));
        pairs.push((format!("random {i} E"), e.clone(), e));
        pairs.push((format!("random {i} W"), w.clone(), w));
    }
    let (mut compared, mut skipped, mut total) = (0, 0, 0);
    for (name, f, g) in &pairs {
        if f.shape.n_objects() > 2 || brute_nat_candidates(f, g) > LIMIT {
            skipped += 1;
            continue;
        }
        let fast: HashSet<_> = enumerate_pseudo_naturals(f, g, budget())
            .map_err(|e| format!("{name}: {e}"))?
            .iter()
            .map(nat_key)
            .collect();
        let slow: HashSet<_> = brute_pseudo_naturals(f, g).iter().map(nat_key).collect();
        if fast != slow {
            return Err(format!("{name}: enumerated {} but brute force found {}", fast.len(), slow.len()));
        }
        compared += 1;
        total += fast.len();
    }
    let mut sigma_checked = 0;
    for s in seeds::all_seeds() {
        let pres = pscolim_presentation(&s.e, &s.w, budget()).map_err(|e| e.to_string())?;
        for (name, x) in seeds::test_categories() {
            let sub = sigma_functor_cat(&pres, &x, budget()).map_err(|e| e.to_string())?;
            let all = functor_category(&pres.p, &x, budget()).map_err(|e| e.to_string())?;
            let keep: Vec<usize> = all
                .cat
                .objects()
                .filter(|&o| all.functor(o).inverts(|a| pres.sigma[a]))
                .collect();
            let full = all.cat.full_subcategory(&keep);
            if (sub.cat.n_objects(), sub.cat.n_arrows()) != (full.n_objects(), full.n_arrows()) {
                return Err(format!(
                    "{} {name}: sigma functor category {}/{} vs filtered {}/{}",
                    s.name,
                    sub.cat.n_objects(),
                    sub.cat.n_arrows(),
                    full.n_objects(),
                    full.n_arrows()
                ));
            }
            sigma_checked += 1;
        }
    }
    if compared < 10 {
        return Err(format!("only {compared} pairs small enough for brute force"));
    }
    Ok(format!(
        "{compared} pairs agree ({total} transformations, {skipped} too large); {sigma_checked} functor categories agree"
    ))
}

fn main() {
    let criteria: [(u32, &str, fn() -> Verdict); 8] = [
        (1, "main theorem", main_theorem),
        (2, "conical oracle", conical),
        (3, "idempotent counterexample", counterexample),
        (4, "yoneda unit", yoneda),
        (5, "bicolimit pipeline", bicolimit),
        (6, "comparison functor", comparison),
        (7, "validator soundness", validators),
        (8, "enumeration oracles", enumeration),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (n, name, check) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str()) || n.to_string() == *f) {
            continue;
        }
        let start = Instant::now();
        let verdict = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let took = start.elapsed();
        match verdict {
            Ok(detail) => println!("criterion {n} ({name}): PASS [{took:.2?}] {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {n} ({name}): FAIL [{took:.2?}] {detail}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}
