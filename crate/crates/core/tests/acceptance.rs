//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails or overruns its time limit.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use discon::cnf::CnfFormula;
use discon::constructive::{
    classify_indep_deg3, color_3regular, color_max_deg3, matching_cut_indep_deg3, Classification,
};
use discon::cuts::{
    find_matching_cut, find_proper_edge_cut, find_rainbow_vertex_cut, verify_matching_cut,
};
use discon::generate::{
    all_formulas, complete, cubic_catalog, cycle, random_cnf, random_connected_graph, random_cubic,
    random_indep_deg3, random_max_deg3, random_tree, random_with_cut_vertex, rng,
};
use discon::graph::{find_pattern, Multigraph, Pattern};
use discon::harness::{
    xcheck_nae, xcheck_padded, xcheck_sat_rvd, CrossCheckReport, RunConfig, RvdVariant,
};
use discon::reductions::{edge_to_4cycle, lift_matching_cut, project_matching_cut};
use discon::solvers::{
    chromatic_index, is_proper_disconnected, is_rainbow_vertex_disconnected, pd_exact, pd_is_one,
    pd_via_blocks, Budgets,
};
use rand::Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: discon::Error) -> String {
    e.to_string()
}

fn pd(g: &Multigraph) -> Result<usize, String> {
    pd_exact(g, &Budgets::default()).map(|r| r.value).map_err(err)
}

fn complete_graphs() -> Outcome {
    for n in 2..=6 {
        let got = pd(&complete(n))?;
        ensure(got == n.div_ceil(2), || format!("pd(K{n}) = {got}"))?;
    }
    Ok("K2..K6 match ceil(n/2)".into())
}

fn cycles_and_trees() -> Outcome {
    ensure(pd(&cycle(3))? == 2, || "pd(C3) != 2".into())?;
    for n in 4..=9 {
        ensure(pd(&cycle(n))? == 1, || format!("pd(C{n}) != 1"))?;
    }
    let mut r = rng(2);
    for i in 0..25 {
        let n = r.gen_range(2..=9);
        let t = random_tree(n, &mut r).map_err(err)?;
        ensure(pd(&t)? == 1, || format!("tree {i} has pd != 1"))?;
    }
    Ok("C3=2, C4..C9=1, 25 trees = 1".into())
}

fn two_colors_verified(g: &Multigraph, c: &discon::cuts::EdgeColoring) -> Result<(), String> {
    ensure(c.distinct_colors() <= 2, || format!("{} colors", c.distinct_colors()))?;
    ensure(is_proper_disconnected(g, c).map_err(err)?.holds(), || "not proper disconnected".into())
}

fn max_degree_three() -> Outcome {
    let mut count = 0;
    for (name, g) in cubic_catalog() {
        let t = color_3regular(&g).map_err(|e| format!("{name}: {e}"))?;
        two_colors_verified(&g, &t.coloring).map_err(|e| format!("{name}: {e}"))?;
        count += 1;
    }
    let mut r = rng(3);
    for i in 0..20 {
        let n = 2 * r.gen_range(2..=5);
        let g = random_cubic(n, &mut r).map_err(err)?;
        let t = color_3regular(&g).map_err(|e| format!("cubic {i}: {e}"))?;
        two_colors_verified(&g, &t.coloring).map_err(|e| format!("cubic {i}: {e}"))?;
        count += 1;
    }
    for i in 0..20 {
        let n = r.gen_range(4..=10);
        let extra = r.gen_range(0..6);
        let g = random_max_deg3(n, extra, &mut r).map_err(err)?;
        let t = color_max_deg3(&g).map_err(|e| format!("deg3 {i}: {e}"))?;
        two_colors_verified(&g, &t.coloring).map_err(|e| format!("deg3 {i}: {e}"))?;
        count += 1;
    }
    Ok(format!("{count} graphs two-colored and verified"))
}

fn classification() -> Outcome {
    let mut r = rng(4);
    let (mut ones, mut twos) = (0, 0);
    for i in 0..30 {
        let n = r.gen_range(4..=9);
        let extra = r.gen_range(0..8);
        let g = random_indep_deg3(n, extra, &mut r).map_err(err)?;
        let class = classify_indep_deg3(&g).map_err(err)?;
        let exact = pd(&g)?;
        ensure(class.value() == exact, || {
            format!("graph {i}: classify {} vs exact {exact}", class.value())
        })?;
        let pattern = find_pattern(&g, Pattern::Triangle).is_some()
            || find_pattern(&g, Pattern::K23).is_some();
        ensure(pattern == (exact == 2), || format!("graph {i}: pattern {pattern} vs pd {exact}"))?;
        if let Classification::PdOne { certificates, .. } = &class {
            ones += 1;
            for (&(x, y), cert) in certificates {
                ensure(verify_matching_cut(&g, cert).map_err(err)?, || {
                    format!("graph {i}: bad cut")
                })?;
                let again = matching_cut_indep_deg3(&g, x, y).map_err(err)?;
                ensure(verify_matching_cut(&g, &again.certificate).map_err(err)?, || {
                    format!("graph {i}: bad cut")
                })?;
            }
        } else {
            twos += 1;
        }
    }
    Ok(format!("30 graphs agree ({ones} with pd=1, {twos} with pd=2)"))
}

fn block_lemma() -> Outcome {
    let mut r = rng(5);
    for i in 0..25 {
        let n = r.gen_range(3..=7);
        let g = random_with_cut_vertex(n, 0.5, &mut r).map_err(err)?;
        let blocks = pd_via_blocks(&g, &Budgets::default()).map_err(err)?;
        let exact = pd(&g)?;
        ensure(blocks == exact, || format!("graph {i}: blocks {blocks} vs exact {exact}"))?;
    }
    Ok("25 graphs agree".into())
}

fn inequality_chain() -> Outcome {
    let mut r = rng(6);
    for i in 0..100 {
        let n = r.gen_range(2..=6);
        let p = r.gen_range(0.1..0.9);
        let g = random_connected_graph(n, p, &mut r).map_err(err)?;
        let value = pd(&g)?;
        let chi = chromatic_index(&g, &Budgets::default()).map_err(err)?;
        let delta = g.max_degree();
        ensure(1 <= value && value <= chi && chi <= delta + 1, || {
            format!("graph {i}: pd {value}, chi' {chi}, delta {delta}")
        })?;
    }
    Ok("100 graphs satisfy 1 <= pd <= chi' <= delta+1".into())
}

fn four_cycle_lemma() -> Outcome {
    let mut r = rng(7);
    let mut lifted = 0;
    for i in 0..25 {
        let n = r.gen_range(2..=6);
        let p = r.gen_range(0.1..0.7);
        let g = random_connected_graph(n, p, &mut r).map_err(err)?;
        let star = edge_to_4cycle(&g).map_err(err)?;
        let here = pd_is_one(&g).map_err(err)?;
        let there = pd_is_one(&star.graph).map_err(err)?;
        ensure(here.holds() == there.holds(), || {
            format!("graph {i}: G {} vs G* {}", here.holds(), there.holds())
        })?;
        for (x, y) in all_pairs(g.vertex_count()) {
            if let Some(cert) = find_matching_cut(&g, x, y).map_err(err)? {
                let up = lift_matching_cut(&g, &star, &cert).map_err(err)?;
                let down = project_matching_cut(&g, &star, &up).map_err(err)?;
                ensure(down == cert, || format!("graph {i}: round trip changed the cut"))?;
                lifted += 1;
            }
            if let Some(cert) = find_matching_cut(&star.graph, x, y).map_err(err)? {
                project_matching_cut(&g, &star, &cert).map_err(err)?;
            }
        }
    }
    Ok(format!("25 graphs agree, {lifted} cuts lifted and projected"))
}

fn tally(reports: &[CrossCheckReport], decode: bool) -> Result<(usize, usize), String> {
    for r in reports {
        ensure(r.passed(decode), || format!("failed: {} [{}]", r.summary(), r.formula))?;
    }
    let sat = reports.iter().filter(|r| r.oracle_sat()).count();
    Ok((sat, reports.len() - sat))
}

fn nae_sample() -> Vec<CnfFormula> {
    let mut out: Vec<CnfFormula> = all_formulas(1, 1).chain(all_formulas(1, 2)).collect();
    out.extend(all_formulas(3, 2).step_by(933).take(50));
    out
}

fn nae_soundness() -> Outcome {
    let cfg = RunConfig::default();
    let mut formulas = nae_sample();
    let mut r = rng(8);
    for _ in 0..20 {
        let n = r.gen_range(1..=4);
        let m = r.gen_range(1..=3);
        formulas.push(random_cnf(n, m, &mut r).map_err(err)?);
    }
    let reports: Vec<CrossCheckReport> =
        formulas.iter().map(|f| xcheck_nae(f, &cfg)).collect::<Result<_, _>>().map_err(err)?;
    for r in &reports {
        ensure(r.structural.iter().any(|(n, ok)| n == "max-degree-4" && *ok), || {
            format!("degree: {}", r.summary())
        })?;
    }
    let (sat, unsat) = tally(&reports, true)?;
    Ok(format!("{} formulas agree ({sat} NAE-satisfiable, {unsat} not)", reports.len()))
}

fn padding() -> Outcome {
    let cfg = RunConfig::default();
    let formulas = [
        CnfFormula::from_dimacs_triples(2, &[[1, 1, -2]]),
        CnfFormula::from_dimacs_triples(1, &[[1, 1, 1]]),
        CnfFormula::from_dimacs_triples(3, &[[1, 2, 3], [-1, -2, -3]]),
        CnfFormula::from_dimacs_triples(2, &[[1, -1, 2], [1, 1, 2]]),
        CnfFormula::from_dimacs_triples(1, &[[1, -1, 1], [-1, -1, -1]]),
    ];
    let mut checks = 0;
    for f in formulas {
        let f = f.map_err(err)?;
        let base = xcheck_nae(&f, &cfg).map_err(err)?;
        for k in [1, 2, 4] {
            let r = xcheck_padded(&f, k, &cfg).map_err(err)?;
            ensure(r.structural_ok(), || format!("structure: {}", r.summary()))?;
            ensure(r.cut_present() == base.cut_present(), || {
                format!("verdict differs: {}", r.summary())
            })?;
            ensure(r.agreement, || format!("oracle disagrees: {}", r.summary()))?;
            checks += 1;
        }
    }
    Ok(format!("{checks} padded instances match the matching-cut verdict"))
}

fn rvd_soundness() -> Outcome {
    let cfg = RunConfig::default();
    let mut formulas: Vec<CnfFormula> = all_formulas(1, 1).chain(all_formulas(2, 1)).collect();
    formulas.push(CnfFormula::from_dimacs_triples(1, &[[1, 1, 1], [-1, -1, -1]]).map_err(err)?);
    let mut r = rng(10);
    for _ in 0..15 {
        let n = r.gen_range(1..=3);
        let m = r.gen_range(1..=2);
        formulas.push(random_cnf(n, m, &mut r).map_err(err)?);
    }
    let mut total = (0, 0);
    for v in RvdVariant::ALL {
        let reports: Vec<CrossCheckReport> = formulas
            .iter()
            .map(|f| xcheck_sat_rvd(f, v, &cfg))
            .collect::<Result<_, _>>()
            .map_err(err)?;
        let (s, u) = tally(&reports, true)?;
        total = (total.0 + s, total.1 + u);
    }
    Ok(format!(
        "{} formulas x 3 variants agree ({} sat, {} unsat checks)",
        formulas.len(),
        total.0,
        total.1
    ))
}

fn finder_oracles() -> Outcome {
    let mut r = rng(11);
    let mut pairs = 0;
    for i in 0..200 {
        let n = r.gen_range(2..=5);
        let p = r.gen_range(0.2..0.9);
        let g = random_connected_graph(n, p, &mut r).map_err(err)?;
        let ec = random_edge_coloring(&g, r.gen_range(1..=3), &mut r);
        let vc = random_vertex_coloring(&g, r.gen_range(1..=n), &mut r);
        for (x, y) in all_pairs(n) {
            let a = find_proper_edge_cut(&g, &ec, x, y).map_err(err)?.is_some();
            ensure(a == proper_cut_oracle(&g, ec.colors(), x, y), || {
                format!("instance {i}: proper cut")
            })?;
            let b = find_matching_cut(&g, x, y).map_err(err)?.is_some();
            ensure(b == matching_cut_oracle(&g, x, y), || format!("instance {i}: matching cut"))?;
            let c = find_rainbow_vertex_cut(&g, &vc, x, y).map_err(err)?.is_some();
            ensure(c == rainbow_cut_oracle(&g, vc.colors(), x, y), || {
                format!("instance {i}: rainbow cut")
            })?;
            pairs += 1;
        }
    }
    Ok(format!("200 instances, {pairs} pairs x 3 finders agree"))
}

fn rainbow_verification() -> Outcome {
    let mut r = rng(12);
    let mut yes = 0;
    for i in 0..50 {
        let n = r.gen_range(2..=7);
        let p = r.gen_range(0.1..0.6);
        let g = random_connected_graph(n, p, &mut r).map_err(err)?;
        let c = random_vertex_coloring(&g, r.gen_range(1..=n), &mut r);
        let fast = is_rainbow_vertex_disconnected(&g, &c).map_err(err)?.holds();
        let slow = rvd_coloring_ok(&g, c.colors());
        ensure(fast == slow, || format!("instance {i}: {fast} vs {slow}"))?;
        yes += usize::from(fast);
    }
    Ok(format!("50 colorings agree ({yes} rainbow vertex-disconnected)"))
}

type Criterion = (&'static str, u64, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 12] = [
        ("pd of complete graphs", 120, complete_graphs),
        ("pd of cycles and trees", 30, cycles_and_trees),
        ("maximum degree 3 colorings", 120, max_degree_three),
        ("independent degree-3 classification", 120, classification),
        ("block lemma", 300, block_lemma),
        ("inequality chain", 300, inequality_chain),
        ("4-cycle transform lemma", 300, four_cycle_lemma),
        ("NAE reduction soundness", 600, nae_soundness),
        ("padding theorem", 120, padding),
        ("rvd reduction soundness", 600, rvd_soundness),
        ("cut finders versus exhaustive oracles", 120, finder_oracles),
        ("rainbow verification versus exhaustive search", 120, rainbow_verification),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > Duration::from_secs(limit) => {
                Err(format!("exceeded the {limit} s limit"))
            }
            other => other,
        };
        let secs = elapsed.as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail} [{secs:.2} s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why} [{secs:.2} s]", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
