//! NAE-3-SAT to u-v matching cut: G_phi, operation O, desimplification,
//! H'_phi, and padding with a rainbow path.
//!
//! Gadgets, with `A`/`B` the chain sides:
//! - `I_j`: the 4-cycle a_j - x_j - b_j - ~x_j - a_j, at chain position j.
//! - `C_i`: chain positions p = n+2i-1 and q = n+2i. Literal l1 sits on the
//!   4-cycle a_p - l1 - b_p - n_i - a_p; `n_i` is glued by a parallel pair to
//!   the hub `h_i`, which carries simple edges to l2 and l3. Positions q are
//!   plain chain links.
//!
//! With all a's on one side and all b's on the other, each 4-cycle puts its
//! two middle vertices on opposite sides, so l1 disagrees with n_i = h_i,
//! and h_i may have at most one of l2, l3 on the other side. That is exactly
//! "not all three literals equal".

use std::collections::BTreeMap;

use crate::cnf::{CnfFormula, Literal};
use crate::cuts::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexId};

use super::{ArtifactKind, ReductionArtifact, Trace};

pub fn build_gphi_nae(phi: &CnfFormula) -> ReductionArtifact {
    let (n, m) = (phi.n(), phi.m());
    let len = n + 2 * m;
    let mut g = Multigraph::new();
    let mut a = vec![VertexId(0); len + 1];
    let mut b = vec![VertexId(0); len + 1];
    let mut lit = Vec::with_capacity(n);
    let mut trace = Trace::default();
    let e = |g: &mut Multigraph, p: VertexId, q: VertexId| {
        g.add_edge(p, q).expect("fresh vertices");
    };

    for pos in 1..=n {
        a[pos] = g.add_labeled(format!("a{pos}"));
        b[pos] = g.add_labeled(format!("b{pos}"));
        let x = g.add_labeled(format!("x{pos}"));
        let nx = g.add_labeled(format!("~x{pos}"));
        e(&mut g, a[pos], x);
        e(&mut g, x, b[pos]);
        e(&mut g, b[pos], nx);
        e(&mut g, nx, a[pos]);
        lit.push([x, nx]);
        trace.literals.push([vec![x], vec![nx]]);
    }
    let mut slots = Vec::new();
    for i in 0..m {
        let (p, q) = (n + 2 * i + 1, n + 2 * i + 2);
        let c = i + 1;
        a[p] = g.add_labeled(format!("a{p}"));
        b[p] = g.add_labeled(format!("b{p}"));
        a[q] = g.add_labeled(format!("a{q}"));
        b[q] = g.add_labeled(format!("b{q}"));
        let l: Vec<VertexId> = (1..=3).map(|t| g.add_labeled(format!("l{c}_{t}"))).collect();
        let neg = g.add_labeled(format!("n{c}"));
        let hub = g.add_labeled(format!("h{c}"));
        e(&mut g, a[p], l[0]);
        e(&mut g, l[0], b[p]);
        e(&mut g, b[p], neg);
        e(&mut g, neg, a[p]);
        g.add_parallel_pair(neg, hub).expect("fresh vertices");
        e(&mut g, hub, l[1]);
        e(&mut g, hub, l[2]);
        trace.clauses.push(vec![a[p], b[p], a[q], b[q], l[0], l[1], l[2], neg, hub]);
        slots.push(l);
    }
    for pos in 1..len {
        g.add_parallel_pair(a[pos], a[pos + 1]).expect("chain");
    }
    for pos in 1..len {
        g.add_parallel_pair(b[pos], b[pos + 1]).expect("chain");
    }
    for (i, clause) in phi.clauses().iter().enumerate() {
        for (t, &Literal { var, positive }) in clause.iter().enumerate() {
            let z = lit[var][if positive { 0 } else { 1 }];
            g.add_parallel_pair(z, slots[i][t]).expect("literal pair");
        }
    }
    ReductionArtifact::plain(ArtifactKind::NaeBase, g, trace, Some(phi.clone()))
}

/// Replaces `y` (degree 2t+2 > 4, two simple neighbors, t pair neighbors)
/// by a (t+1)-star structure. `y` becomes tentacle z_{t+1} and keeps the two
/// simple edges; the pair to the i-th pair neighbor (ordered by first edge
/// id) moves to the new tentacle z_i. Existing edge ids are preserved.
pub fn apply_operation_o(g: &Multigraph, y: VertexId) -> Result<Multigraph> {
    g.check_vertex(y)?;
    let mut by_nbr: BTreeMap<VertexId, Vec<EdgeId>> = BTreeMap::new();
    for &(w, e) in g.incident(y) {
        by_nbr.entry(w).or_default().push(e);
    }
    let mut simple = 0;
    let mut pairs: Vec<(EdgeId, VertexId)> = Vec::new();
    for (&w, es) in &by_nbr {
        match es.len() {
            1 => simple += 1,
            2 => pairs.push((*es.iter().min().unwrap(), w)),
            k => {
                return Err(Error::pre(format!(
                    "{} has {k} parallel edges to {}",
                    g.display_vertex(y),
                    g.display_vertex(w)
                )))
            }
        }
    }
    let t = pairs.len();
    if simple != 2 || g.degree(y) != 2 * t + 2 || g.degree(y) <= 4 {
        return Err(Error::pre(format!(
            "operation O needs degree 2t+2 > 4 with two simple edges; {} has degree {} with {} simple edges",
            g.display_vertex(y),
            g.degree(y),
            simple
        )));
    }
    pairs.sort_unstable();
    let name = g.display_vertex(y);
    let mut h = Multigraph::new();
    for v in g.vertices() {
        h.add_vertex(g.label(v).map(str::to_string));
    }
    let mut z: Vec<VertexId> = (1..=t).map(|i| h.add_labeled(format!("{name}.z{i}"))).collect();
    z.push(y);
    let k = t + 1;
    let hubs: Vec<VertexId> =
        (1..=k.saturating_sub(3)).map(|i| h.add_labeled(format!("{name}.h{i}"))).collect();
    let slot: BTreeMap<VertexId, VertexId> =
        pairs.iter().enumerate().map(|(i, &(_, w))| (w, z[i])).collect();
    for ed in g.edges() {
        let (mut p, mut q) = (ed.u, ed.v);
        if p == y && slot.contains_key(&q) {
            p = slot[&q];
        } else if q == y && slot.contains_key(&p) {
            q = slot[&p];
        }
        h.add_edge(p, q)?;
    }
    let mut triangles = Vec::new();
    if k == 3 {
        triangles.push([z[0], z[1], z[2]]);
    } else {
        triangles.push([z[0], z[1], hubs[0]]);
        for i in 1..k - 3 {
            triangles.push([hubs[i - 1], z[i + 1], hubs[i]]);
        }
        triangles.push([hubs[k - 4], z[k - 2], z[k - 1]]);
    }
    for [p, q, r] in triangles {
        h.add_edge(p, q)?;
        h.add_edge(q, r)?;
        h.add_edge(p, r)?;
    }
    Ok(h)
}

/// Subdivides the lower-id edge of every parallel pair. The subdivided edge
/// keeps its id for the first half; second halves are appended. Returns the
/// simple graph and, per input edge, its replacement edges.
pub fn desimplify(g: &Multigraph) -> Result<(Multigraph, Vec<Vec<EdgeId>>)> {
    let classes = g.parallel_classes();
    let mut split = Vec::new();
    for class in &classes {
        match class.len() {
            1 => {}
            2 => split.push(class[0].min(class[1])),
            k => {
                let ed = g.edge(class[0]);
                return Err(Error::pre(format!(
                    "parallel class of size {k} between {} and {}",
                    g.display_vertex(ed.u),
                    g.display_vertex(ed.v)
                )));
            }
        }
    }
    split.sort_unstable();
    let mut h = Multigraph::new();
    for v in g.vertices() {
        h.add_vertex(g.label(v).map(str::to_string));
    }
    let mut mid = BTreeMap::new();
    for &e in &split {
        mid.insert(e, h.add_labeled(format!("s{}", e.0)));
    }
    let mut map: Vec<Vec<EdgeId>> = Vec::with_capacity(g.edge_count());
    for e in g.edge_ids() {
        let ed = g.edge(e);
        let far = mid.get(&e).copied().unwrap_or(ed.v);
        map.push(vec![h.add_edge(ed.u, far)?]);
    }
    for &e in &split {
        map[e.0].push(h.add_edge(mid[&e], g.edge(e).v)?);
    }
    Ok((h, map))
}

/// H'_phi: G_phi with u glued to both ends of the a-chain and v to both ends
/// of the b-chain, operation O on every vertex of degree above four (in
/// ascending id order), then desimplified.
pub fn build_hphi_prime(phi: &CnfFormula) -> Result<ReductionArtifact> {
    let base = build_gphi_nae(phi);
    let mut g = base.graph;
    let len = phi.n() + 2 * phi.m();
    let find = |g: &Multigraph, l: String| g.find_label(&l).expect("chain vertex");
    let (a1, al) = (find(&g, "a1".into()), find(&g, format!("a{len}")));
    let (b1, bl) = (find(&g, "b1".into()), find(&g, format!("b{len}")));
    let u = g.add_labeled("u");
    let v = g.add_labeled("v");
    g.add_parallel_pair(u, a1)?;
    g.add_parallel_pair(u, al)?;
    g.add_parallel_pair(v, b1)?;
    g.add_parallel_pair(v, bl)?;
    let original = g.vertex_count();
    for y in (0..original).map(VertexId) {
        if g.degree(y) > 4 {
            g = apply_operation_o(&g, y)?;
        }
    }
    let (h, edges) = desimplify(&g)?;
    if h.max_degree() != 4 || !h.is_simple() {
        return Err(Error::VerificationFailed(format!(
            "H'_phi has maximum degree {} (simple: {})",
            h.max_degree(),
            h.is_simple()
        )));
    }
    let mut art = ReductionArtifact::plain(
        ArtifactKind::NaeClosed,
        h,
        Trace { edges, ..base.trace },
        Some(phi.clone()),
    );
    art.terminals = Some((u, v));
    Ok(art)
}

/// Attaches a path of order `k` at the least-id degree-2 vertex y' and
/// colors the original edges 1 and the path edges 2, ..., k.
pub fn pad_with_path(art: &ReductionArtifact, k: usize) -> Result<ReductionArtifact> {
    if k == 0 {
        return Err(Error::pre("path order k must be at least 1"));
    }
    if art.kind != ArtifactKind::NaeClosed {
        return Err(Error::pre("padding applies to H'_phi artifacts"));
    }
    let mut g = art.graph.clone();
    let y = g
        .vertices()
        .find(|&v| g.degree(v) == 2)
        .ok_or_else(|| Error::pre("no degree-2 vertex to attach the path"))?;
    let mut colors = vec![1usize; g.edge_count()];
    let mut prev = y;
    for i in 2..=k {
        let p = g.add_labeled(format!("p{i}"));
        g.add_edge(prev, p)?;
        colors.push(i);
        prev = p;
    }
    let mut out = art.clone();
    out.kind = ArtifactKind::NaePadded;
    out.graph = g;
    out.edge_coloring = Some(EdgeColoring::new(k, colors)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi(n: usize, t: &[[i64; 3]]) -> CnfFormula {
        CnfFormula::from_dimacs_triples(n, t).unwrap()
    }

    fn pair_count(g: &Multigraph) -> usize {
        g.parallel_classes().iter().filter(|c| c.len() == 2).count()
    }

    #[test]
    fn gphi_pair_count() {
        let art = build_gphi_nae(&phi(1, &[[1, -1, 1]]));
        // chains 2 + 2, literals 3, intra-clause 1
        assert_eq!(pair_count(&art.graph), 8);
        let len = art.graph.find_label("a3");
        assert!(len.is_some() && art.graph.find_label("a4").is_none());
    }

    #[test]
    fn shared_literal_attaches_twice() {
        let art = build_gphi_nae(&phi(2, &[[1, 2, -1], [-1, 2, 1]]));
        let g = &art.graph;
        let nx1 = g.find_label("~x1").unwrap();
        for l in ["l1_3", "l2_1"] {
            assert_eq!(g.edges_between(nx1, g.find_label(l).unwrap()).len(), 2);
        }
    }

    #[test]
    fn operation_o_shapes() {
        let mut g = Multigraph::with_vertices(3);
        let y = g.add_labeled("y");
        g.add_edge(y, VertexId(0)).unwrap();
        g.add_edge(y, VertexId(1)).unwrap();
        let mut ws = Vec::new();
        for _ in 0..7 {
            let w = g.add_vertex(None);
            g.add_parallel_pair(y, w).unwrap();
            ws.push(w);
        }
        assert_eq!(g.degree(y), 16);
        let h = apply_operation_o(&g, y).unwrap();
        assert_eq!(h.degree(y), 4);
        assert!(h.max_degree() <= 4);
        // 7 new tentacles and 5 hubs
        assert_eq!(h.vertex_count(), g.vertex_count() + 7 + 5);
        assert_eq!(h.edges_between(VertexId(0), y).len(), 1);
        assert!(apply_operation_o(&g, VertexId(2)).is_err());
    }

    #[test]
    fn operation_o_smallest() {
        let mut g = Multigraph::with_vertices(4);
        let y = VertexId(0);
        g.add_edge(y, VertexId(1)).unwrap();
        g.add_edge(y, VertexId(2)).unwrap();
        g.add_parallel_pair(y, VertexId(3)).unwrap();
        assert!(apply_operation_o(&g, y).is_err());
        let w = g.add_vertex(None);
        g.add_parallel_pair(y, w).unwrap();
        let h = apply_operation_o(&g, y).unwrap();
        assert_eq!(h.vertex_count(), 7);
        assert_eq!(h.max_degree(), 4);
    }

    #[test]
    fn desimplify_examples() {
        let mut g = Multigraph::with_vertices(2);
        g.add_parallel_pair(VertexId(0), VertexId(1)).unwrap();
        let (h, map) = desimplify(&g).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count()), (3, 3));
        assert!(h.is_simple());
        assert_eq!(map[0].len(), 2);
        let tri = Multigraph::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(desimplify(&tri).unwrap().0, tri);
        let mut t = Multigraph::with_vertices(2);
        for _ in 0..3 {
            t.add_edge(VertexId(0), VertexId(1)).unwrap();
        }
        assert!(desimplify(&t).is_err());
    }

    #[test]
    fn hphi_structure_and_padding() {
        let art = build_hphi_prime(&phi(2, &[[1, 1, -2]])).unwrap();
        assert_eq!(art.graph.max_degree(), 4);
        assert!(art.graph.is_simple() && art.graph.is_connected());
        assert!(pad_with_path(&art, 0).is_err());
        let p1 = pad_with_path(&art, 1).unwrap();
        assert_eq!(p1.graph, art.graph);
        let p3 = pad_with_path(&art, 3).unwrap();
        let c = p3.edge_coloring.as_ref().unwrap();
        assert_eq!(c.distinct_colors(), 3);
        assert_eq!(&c.colors()[c.colors().len() - 2..], &[2, 3]);
        assert_eq!(p3.graph.max_degree(), 4);
    }
}
