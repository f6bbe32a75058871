//! Graph-level decisions and exact parameters: proper disconnectedness,
//! rainbow vertex-disconnectedness, pd(G), rvd(G), the pd = 1 test, the
//! block-wise pd and the chromatic index.
//!
//! The exact parameters enumerate canonical colorings (colors first appear in
//! ascending order along the edge/vertex order) for k = 1, 2, ... and verify
//! each one with the complete cut finders. Within one k-level the colorings
//! are split into prefixes that are checked in parallel; the first witness in
//! enumeration order wins, so the result does not depend on scheduling.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::cuts::{
    find_matching_cut, find_proper_bipartition, find_proper_edge_cut, find_rainbow_vertex_cut,
    EdgeColoring, EdgeCutCertificate, VertexColoring, VertexCutCertificate,
};
use crate::error::{Error, Result};
use crate::graph::{block_decomposition, Multigraph, VertexId};

pub type Pair = (VertexId, VertexId);

/// Search budgets. Exceeding one is reported as [`Error::BudgetExceeded`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    pub pd_max_edges: usize,
    pub rvd_max_vertices: usize,
    pub chromatic_max_edges: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Self { pd_max_edges: 16, rvd_max_vertices: 8, chromatic_max_edges: 40 }
    }
}

/// Outcome of checking every vertex pair: either all certificates, or the
/// first pair (in ascending order) without one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairCheck<C> {
    All(BTreeMap<Pair, C>),
    Fails(Pair),
}

impl<C> PairCheck<C> {
    pub fn holds(&self) -> bool {
        matches!(self, PairCheck::All(_))
    }

    pub fn certificates(&self) -> Option<&BTreeMap<Pair, C>> {
        match self {
            PairCheck::All(m) => Some(m),
            PairCheck::Fails(_) => None,
        }
    }

    pub fn failing_pair(&self) -> Option<Pair> {
        match self {
            PairCheck::Fails(p) => Some(*p),
            PairCheck::All(_) => None,
        }
    }
}

fn pairs(g: &Multigraph) -> Vec<Pair> {
    let mut out = Vec::new();
    for a in g.vertices() {
        for b in g.vertices().filter(|&b| b > a) {
            out.push((a, b));
        }
    }
    out
}

fn require_connected(g: &Multigraph) -> Result<()> {
    if g.vertex_count() < 2 {
        return Err(Error::pre("graph must have at least two vertices"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

pub fn is_proper_disconnected(
    g: &Multigraph,
    coloring: &EdgeColoring,
) -> Result<PairCheck<EdgeCutCertificate>> {
    require_connected(g)?;
    coloring.check_covers(g)?;
    let mut certs = BTreeMap::new();
    for (x, y) in pairs(g) {
        match find_proper_edge_cut(g, coloring, x, y)? {
            Some(c) => {
                certs.insert((x, y), c);
            }
            None => return Ok(PairCheck::Fails((x, y))),
        }
    }
    Ok(PairCheck::All(certs))
}

pub fn is_rainbow_vertex_disconnected(
    g: &Multigraph,
    coloring: &VertexColoring,
) -> Result<PairCheck<VertexCutCertificate>> {
    require_connected(g)?;
    coloring.check_covers(g)?;
    let mut certs = BTreeMap::new();
    for (x, y) in pairs(g) {
        match find_rainbow_vertex_cut(g, coloring, x, y)? {
            Some(c) => {
                certs.insert((x, y), c);
            }
            None => return Ok(PairCheck::Fails((x, y))),
        }
    }
    Ok(PairCheck::All(certs))
}

/// pd(G) = 1 iff every pair is separated by a matching cut.
pub fn pd_is_one(g: &Multigraph) -> Result<PairCheck<EdgeCutCertificate>> {
    require_connected(g)?;
    let mut certs = BTreeMap::new();
    for (x, y) in pairs(g) {
        match find_matching_cut(g, x, y)? {
            Some(c) => {
                certs.insert((x, y), c);
            }
            None => return Ok(PairCheck::Fails((x, y))),
        }
    }
    Ok(PairCheck::All(certs))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdResult {
    pub value: usize,
    pub witness: EdgeColoring,
    pub certificates: BTreeMap<Pair, EdgeCutCertificate>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RvdResult {
    pub value: usize,
    pub witness: VertexColoring,
    pub certificates: BTreeMap<Pair, VertexCutCertificate>,
}

/// Visits canonical colorings of `len` items with at most `k` colors, in
/// lexicographic order, extending `prefix`. Stops at the first accepted one.
fn canonical_search(
    len: usize,
    k: usize,
    prefix: &mut Vec<usize>,
    max_used: usize,
    accept: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if prefix.len() == len {
        return accept(prefix);
    }
    for c in 1..=(max_used + 1).min(k) {
        prefix.push(c);
        if canonical_search(len, k, prefix, max_used.max(c), accept) {
            return true;
        }
        prefix.pop();
    }
    false
}

/// All canonical prefixes of the given depth, in lexicographic order.
fn canonical_prefixes(depth: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    canonical_search(depth, k, &mut cur, 0, &mut |p| {
        out.push(p.to_vec());
        false
    });
    out
}

/// First canonical coloring (lexicographic) of `len` items with at most `k`
/// colors accepted by `check`, parallel over prefixes.
fn first_canonical<F>(len: usize, k: usize, check: F) -> Option<Vec<usize>>
where
    F: Fn(&[usize], &mut Option<Pair>) -> bool + Sync,
{
    let depth = len.min(6);
    canonical_prefixes(depth, k).into_par_iter().find_map_first(|prefix| {
        let max_used = prefix.iter().copied().max().unwrap_or(0);
        let mut cur = prefix;
        let mut hint = None;
        let mut found = None;
        canonical_search(len, k, &mut cur, max_used, &mut |c| {
            if check(c, &mut hint) {
                found = Some(c.to_vec());
                true
            } else {
                false
            }
        });
        found
    })
}

/// Tries the previously failing pair first; the verdict itself does not
/// depend on the order.
fn all_pairs_with_hint(
    pairs: &[Pair],
    hint: &mut Option<Pair>,
    mut ok: impl FnMut(Pair) -> bool,
) -> bool {
    if let Some(h) = *hint {
        if !ok(h) {
            return false;
        }
    }
    for &p in pairs {
        if Some(p) != *hint && !ok(p) {
            *hint = Some(p);
            return false;
        }
    }
    true
}

/// Exact proper disconnection number of a connected simple graph.
pub fn pd_exact(g: &Multigraph, budgets: &Budgets) -> Result<PdResult> {
    require_connected(g)?;
    if !g.is_simple() {
        return Err(Error::pre("pd_exact expects a simple graph"));
    }
    let m = g.edge_count();
    if m > budgets.pd_max_edges {
        return Err(Error::BudgetExceeded {
            what: "edge count",
            actual: m,
            limit: budgets.pd_max_edges,
        });
    }
    let all = pairs(g);
    for k in 1..=m.max(1) {
        let found = first_canonical(m, k, |colors, hint| {
            let coloring = EdgeColoring::new(k, colors.to_vec()).expect("canonical colors");
            all_pairs_with_hint(&all, hint, |(x, y)| {
                matches!(find_proper_bipartition(g, &coloring, x, y), Ok(Some(_)))
            })
        });
        if let Some(colors) = found {
            let witness = EdgeColoring::new(k, colors)?;
            let certificates = match is_proper_disconnected(g, &witness)? {
                PairCheck::All(c) => c,
                PairCheck::Fails(p) => {
                    return Err(Error::VerificationFailed(format!(
                        "pd witness does not separate {:?}",
                        p
                    )))
                }
            };
            return Ok(PdResult { value: k, witness, certificates });
        }
    }
    unreachable!("m distinct colors always give a proper disconnection coloring")
}

/// Exact rainbow vertex-disconnection number of a connected graph.
pub fn rvd_exact(g: &Multigraph, budgets: &Budgets) -> Result<RvdResult> {
    require_connected(g)?;
    let n = g.vertex_count();
    if n > budgets.rvd_max_vertices {
        return Err(Error::BudgetExceeded {
            what: "vertex count",
            actual: n,
            limit: budgets.rvd_max_vertices,
        });
    }
    let all = pairs(g);
    for k in 1..=n {
        let found = first_canonical(n, k, |colors, hint| {
            let coloring = VertexColoring::new(k, colors.to_vec()).expect("canonical colors");
            all_pairs_with_hint(&all, hint, |(x, y)| {
                matches!(find_rainbow_vertex_cut(g, &coloring, x, y), Ok(Some(_)))
            })
        });
        if let Some(colors) = found {
            let witness = VertexColoring::new(k, colors)?;
            let certificates = match is_rainbow_vertex_disconnected(g, &witness)? {
                PairCheck::All(c) => c,
                PairCheck::Fails(p) => {
                    return Err(Error::VerificationFailed(format!(
                        "rvd witness does not separate {:?}",
                        p
                    )))
                }
            };
            return Ok(RvdResult { value: k, witness, certificates });
        }
    }
    unreachable!("n distinct colors always give a rainbow vertex-disconnection coloring")
}

/// Maximum of pd over the blocks of a connected graph.
pub fn pd_via_blocks(g: &Multigraph, budgets: &Budgets) -> Result<usize> {
    require_connected(g)?;
    let bd = block_decomposition(g)?;
    let mut best = 1;
    for block in &bd.blocks {
        if block.is_k2() {
            continue;
        }
        let (h, _, _) = g.edge_subgraph(&block.edges);
        best = best.max(pd_exact(&h, budgets)?.value);
    }
    Ok(best)
}

/// Minimum number of colors in a proper edge coloring, by backtracking over
/// canonical colorings with k = Δ, Δ+1, ...
pub fn chromatic_index(g: &Multigraph, budgets: &Budgets) -> Result<usize> {
    if !g.is_simple() {
        return Err(Error::pre("chromatic_index expects a simple graph"));
    }
    let m = g.edge_count();
    if m > budgets.chromatic_max_edges {
        return Err(Error::BudgetExceeded {
            what: "edge count",
            actual: m,
            limit: budgets.chromatic_max_edges,
        });
    }
    if m == 0 {
        return Ok(0);
    }
    let mut k = g.max_degree();
    loop {
        if proper_edge_coloring(g, k).is_some() {
            return Ok(k);
        }
        k += 1;
    }
}

/// Lexicographically least canonical proper edge coloring with `k` colors.
pub fn proper_edge_coloring(g: &Multigraph, k: usize) -> Option<EdgeColoring> {
    let m = g.edge_count();
    let mut colors = vec![0usize; m];
    // colors already used at each vertex, as a bitmask
    let mut at = vec![0u64; g.vertex_count()];
    fn rec(
        g: &Multigraph,
        k: usize,
        i: usize,
        max_used: usize,
        colors: &mut [usize],
        at: &mut [u64],
    ) -> bool {
        if i == colors.len() {
            return true;
        }
        let e = g.edges()[i];
        for c in 1..=(max_used + 1).min(k) {
            let bit = 1u64 << c;
            if at[e.u.0] & bit != 0 || at[e.v.0] & bit != 0 {
                continue;
            }
            at[e.u.0] |= bit;
            at[e.v.0] |= bit;
            colors[i] = c;
            if rec(g, k, i + 1, max_used.max(c), colors, at) {
                return true;
            }
            at[e.u.0] &= !bit;
            at[e.v.0] &= !bit;
        }
        false
    }
    if k >= 63 {
        return None;
    }
    rec(g, k, 0, 0, &mut colors, &mut at).then(|| EdgeColoring::new(k.max(1), colors).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Multigraph {
        let mut p = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                p.push((a, b));
            }
        }
        Multigraph::from_pairs(n, &p)
    }

    fn cycle(n: usize) -> Multigraph {
        let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Multigraph::from_pairs(n, &pairs)
    }

    fn petersen() -> Multigraph {
        let mut p = Vec::new();
        for i in 0..5 {
            p.push((i, (i + 1) % 5));
            p.push((i, i + 5));
            p.push((5 + i, 5 + (i + 2) % 5));
        }
        Multigraph::from_pairs(10, &p)
    }

    #[test]
    fn proper_disconnected_examples() {
        let tree = Multigraph::from_pairs(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]);
        assert!(is_proper_disconnected(&tree, &EdgeColoring::uniform(4, 1)).unwrap().holds());
        let tri = cycle(3);
        assert!(!is_proper_disconnected(&tri, &EdgeColoring::uniform(3, 1)).unwrap().holds());
    }

    #[test]
    fn rainbow_disconnected_examples() {
        let p3 = Multigraph::from_pairs(3, &[(0, 1), (1, 2)]);
        let c = VertexColoring::new(2, vec![1, 2, 1]).unwrap();
        assert!(is_rainbow_vertex_disconnected(&p3, &c).unwrap().holds());
        let tri = cycle(3);
        assert!(!is_rainbow_vertex_disconnected(&tri, &VertexColoring::uniform(3, 1))
            .unwrap()
            .holds());
        let star = Multigraph::from_pairs(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let c = VertexColoring::new(2, vec![2, 1, 1, 1, 1]).unwrap();
        assert!(is_rainbow_vertex_disconnected(&star, &c).unwrap().holds());
    }

    #[test]
    fn pd_small_values() {
        let b = Budgets::default();
        assert_eq!(pd_exact(&complete(4), &b).unwrap().value, 2);
        assert_eq!(pd_exact(&cycle(5), &b).unwrap().value, 1);
        assert_eq!(pd_exact(&complete(2), &b).unwrap().value, 1);
    }

    #[test]
    fn pd_refuses_over_budget() {
        let b = Budgets { pd_max_edges: 5, ..Budgets::default() };
        assert!(matches!(pd_exact(&complete(4), &b), Err(Error::BudgetExceeded { .. })));
        let disc = Multigraph::from_pairs(4, &[(0, 1), (2, 3)]);
        assert_eq!(pd_exact(&disc, &Budgets::default()), Err(Error::Disconnected));
    }

    #[test]
    fn rvd_small_values() {
        let b = Budgets::default();
        assert_eq!(rvd_exact(&complete(2), &b).unwrap().value, 1);
        assert_eq!(rvd_exact(&Multigraph::from_pairs(3, &[(0, 1), (1, 2)]), &b).unwrap().value, 1);
        let big = Multigraph::from_pairs(9, &(0..8).map(|i| (i, i + 1)).collect::<Vec<_>>());
        assert!(matches!(rvd_exact(&big, &b), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn pd_is_one_examples() {
        let tree = Multigraph::from_pairs(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]);
        assert!(pd_is_one(&tree).unwrap().holds());
        assert!(!pd_is_one(&cycle(3)).unwrap().holds());
        assert!(pd_is_one(&cycle(6)).unwrap().holds());
    }

    #[test]
    fn pd_blocks_examples() {
        let b = Budgets::default();
        let tri_pendant = Multigraph::from_pairs(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]);
        assert_eq!(pd_via_blocks(&tri_pendant, &b).unwrap(), 2);
        let tree = Multigraph::from_pairs(4, &[(0, 1), (1, 2), (1, 3)]);
        assert_eq!(pd_via_blocks(&tree, &b).unwrap(), 1);
        let two_c4 = Multigraph::from_pairs(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)],
        );
        assert_eq!(pd_via_blocks(&two_c4, &b).unwrap(), 1);
    }

    #[test]
    fn chromatic_index_examples() {
        let b = Budgets::default();
        assert_eq!(chromatic_index(&cycle(3), &b).unwrap(), 3);
        assert_eq!(chromatic_index(&cycle(4), &b).unwrap(), 2);
        assert_eq!(chromatic_index(&petersen(), &b).unwrap(), 4);
    }

    #[test]
    fn canonical_prefixes_are_lexicographic() {
        let p = canonical_prefixes(3, 2);
        assert_eq!(p, vec![vec![1, 1, 1], vec![1, 1, 2], vec![1, 2, 1], vec![1, 2, 2]]);
    }
}
