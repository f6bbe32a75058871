//! Cross-validation of the reductions against the brute-force oracles.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::cnf::{nae_sat_bruteforce, sat_bruteforce, Assignment, CnfFormula};
use crate::cuts::{find_matching_cut, find_proper_edge_cut, find_rainbow_vertex_cut};
use crate::error::{Error, Result};
use crate::reductions::{
    build_gphi_rvd, build_hphi_prime, decode_assignment, pad_with_path, rvd_variant_bipartite,
    rvd_variant_deg3, Certificate, Decoded, ReductionArtifact,
};
use crate::solvers::Budgets;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub budgets: Budgets,
    pub seed: u64,
    pub nae_max_vars: usize,
    pub nae_max_clauses: usize,
    pub rvd_max_vars: usize,
    pub rvd_max_clauses: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            budgets: Budgets::default(),
            seed: 0,
            nae_max_vars: 4,
            nae_max_clauses: 3,
            rvd_max_vars: 3,
            rvd_max_clauses: 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RvdVariant {
    Base,
    Deg3,
    Bipartite,
}

impl RvdVariant {
    pub const ALL: [RvdVariant; 3] = [RvdVariant::Base, RvdVariant::Deg3, RvdVariant::Bipartite];

    pub fn name(self) -> &'static str {
        match self {
            RvdVariant::Base => "base",
            RvdVariant::Deg3 => "deg3",
            RvdVariant::Bipartite => "bipartite",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub name: String,
    pub formula: CnfFormula,
    pub oracle: Option<Assignment>,
    pub cut: Option<Certificate>,
    /// oracle verdict == cut verdict
    pub agreement: bool,
    pub vertices: usize,
    pub edges: usize,
    /// Named structural assertions and whether they held.
    pub structural: Vec<(String, bool)>,
    pub decoded: Option<Decoded>,
    pub oracle_time: Duration,
    pub cut_time: Duration,
}

impl CrossCheckReport {
    pub fn oracle_sat(&self) -> bool {
        self.oracle.is_some()
    }

    pub fn cut_present(&self) -> bool {
        self.cut.is_some()
    }

    pub fn structural_ok(&self) -> bool {
        self.structural.iter().all(|(_, ok)| *ok)
    }

    /// Agreement, structure, and optionally a satisfying decode of the cut.
    pub fn passed(&self, decode_required: bool) -> bool {
        let decode_ok = !decode_required
            || !self.cut_present()
            || self.decoded.as_ref().is_some_and(|d| d.satisfies);
        self.agreement && self.structural_ok() && decode_ok
    }

    /// One deterministic summary line (no timings).
    pub fn summary(&self) -> String {
        let verdict = |b: bool| if b { "yes" } else { "no" };
        let failed: Vec<&str> =
            self.structural.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect();
        format!(
            "{} n={} m={} |V|={} |E|={} oracle={} cut={} agree={} structure={}",
            self.name,
            self.formula.n(),
            self.formula.m(),
            self.vertices,
            self.edges,
            verdict(self.oracle_sat()),
            verdict(self.cut_present()),
            verdict(self.agreement),
            if failed.is_empty() { "ok".to_string() } else { failed.join(",") }
        )
    }
}

fn check_size(phi: &CnfFormula, max_n: usize, max_m: usize) -> Result<()> {
    if phi.n() > max_n {
        return Err(Error::BudgetExceeded {
            what: "variable count",
            actual: phi.n(),
            limit: max_n,
        });
    }
    if phi.m() > max_m {
        return Err(Error::BudgetExceeded { what: "clause count", actual: phi.m(), limit: max_m });
    }
    Ok(())
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

/// u-v matching cut in H'_phi versus NAE satisfiability.
pub fn xcheck_nae(phi: &CnfFormula, config: &RunConfig) -> Result<CrossCheckReport> {
    check_size(phi, config.nae_max_vars, config.nae_max_clauses)?;
    let art = build_hphi_prime(phi)?;
    let (u, v) = art.terminals()?;
    let (oracle, oracle_time) = timed(|| nae_sat_bruteforce(phi));
    let (cut, cut_time) = timed(|| find_matching_cut(&art.graph, u, v));
    let cut = cut?.map(Certificate::Edge);
    let structural = vec![
        ("max-degree-4".to_string(), art.graph.max_degree() == 4),
        ("simple".to_string(), art.graph.is_simple()),
    ];
    finish("nae", phi, &art, oracle?, cut, structural, oracle_time, cut_time)
}

/// u-v proper edge-cut in the padded H'_phi versus NAE satisfiability.
pub fn xcheck_padded(phi: &CnfFormula, k: usize, config: &RunConfig) -> Result<CrossCheckReport> {
    check_size(phi, config.nae_max_vars, config.nae_max_clauses)?;
    let art = pad_with_path(&build_hphi_prime(phi)?, k)?;
    let (u, v) = art.terminals()?;
    let coloring = art.edge_coloring.clone().expect("padding colors the graph");
    let (oracle, oracle_time) = timed(|| nae_sat_bruteforce(phi));
    let (cut, cut_time) = timed(|| find_proper_edge_cut(&art.graph, &coloring, u, v));
    let cut = cut?.map(Certificate::Edge);
    let structural = vec![
        ("max-degree-4".to_string(), art.graph.max_degree() == 4),
        (format!("uses-{}-colors", k), coloring.distinct_colors() == k),
    ];
    finish(&format!("pad{k}"), phi, &art, oracle?, cut, structural, oracle_time, cut_time)
}

/// Builds the requested rvd artifact.
pub fn build_rvd_variant(phi: &CnfFormula, variant: RvdVariant) -> Result<ReductionArtifact> {
    let base = build_gphi_rvd(phi);
    match variant {
        RvdVariant::Base => Ok(base),
        RvdVariant::Deg3 => rvd_variant_deg3(&base),
        RvdVariant::Bipartite => rvd_variant_bipartite(&base),
    }
}

/// s-t rainbow vertex-cut versus 3-SAT satisfiability.
pub fn xcheck_sat_rvd(
    phi: &CnfFormula,
    variant: RvdVariant,
    config: &RunConfig,
) -> Result<CrossCheckReport> {
    check_size(phi, config.rvd_max_vars, config.rvd_max_clauses)?;
    let base = build_gphi_rvd(phi);
    let art = build_rvd_variant(phi, variant)?;
    let (s, t) = art.terminals()?;
    let coloring = art.vertex_coloring.clone().expect("rvd artifacts are colored");
    let (oracle, oracle_time) = timed(|| sat_bruteforce(phi));
    let (cut, cut_time) = timed(|| find_rainbow_vertex_cut(&art.graph, &coloring, s, t));
    let cut = cut?.map(Certificate::Vertex);
    let (n, m) = (phi.n(), phi.m());
    let mut structural = vec![
        ("base-order".to_string(), base.graph.vertex_count() == 10 * m + 2 * n + 2),
        (
            "base-colors".to_string(),
            base.vertex_coloring.as_ref().is_some_and(|c| c.distinct_colors() == n + 5 * m + 1),
        ),
    ];
    match variant {
        RvdVariant::Base => {}
        RvdVariant::Deg3 => structural.push(("max-degree-3".into(), art.graph.max_degree() == 3)),
        RvdVariant::Bipartite => structural.push(("bipartite".into(), art.graph.is_bipartite())),
    }
    let name = format!("rvd-{}", variant.name());
    finish(&name, phi, &art, oracle?, cut, structural, oracle_time, cut_time)
}

#[allow(clippy::too_many_arguments)]
fn finish(
    name: &str,
    phi: &CnfFormula,
    art: &ReductionArtifact,
    oracle: Option<Assignment>,
    cut: Option<Certificate>,
    structural: Vec<(String, bool)>,
    oracle_time: Duration,
    cut_time: Duration,
) -> Result<CrossCheckReport> {
    let decoded = match &cut {
        Some(c) => Some(decode_assignment(art, c)?),
        None => None,
    };
    Ok(CrossCheckReport {
        name: name.to_string(),
        formula: phi.clone(),
        agreement: oracle.is_some() == cut.is_some(),
        oracle,
        cut,
        vertices: art.graph.vertex_count(),
        edges: art.graph.edge_count(),
        structural,
        decoded,
        oracle_time,
        cut_time,
    })
}

/// Runs `check` over all formulas in parallel; reports come back in input
/// order.
pub fn xcheck_batch<F>(formulas: &[CnfFormula], check: F) -> Result<Vec<CrossCheckReport>>
where
    F: Fn(&CnfFormula) -> Result<CrossCheckReport> + Sync + Send,
{
    formulas.par_iter().map(check).collect()
}
