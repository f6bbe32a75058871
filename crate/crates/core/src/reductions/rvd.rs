//! 3-SAT to s-t rainbow vertex-cut, plus the maximum-degree-3 and bipartite
//! variants.

use crate::cnf::CnfFormula;
use crate::cuts::VertexColoring;
use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexId};

use super::{ArtifactKind, ReductionArtifact, Trace};

/// Vertex order: s, t, x_1, ~x_1, ..., x_n, ~x_n, then per clause c_i,
/// u_{i,1..3}, v_{i,1..3}, w_{i,1..3}. Colors: r = 1, r_j = 1 + j, and
/// r_{i,k} = 1 + n + 5(i-1) + k, with w_{i,k} on r_{i,k}, u_{i,*} on
/// r_{i,4} and v_{i,*} on r_{i,5}.
pub fn build_gphi_rvd(phi: &CnfFormula) -> ReductionArtifact {
    let (n, m) = (phi.n(), phi.m());
    let mut g = Multigraph::new();
    let mut colors = Vec::new();
    let mut add = |g: &mut Multigraph, label: String, color: usize| {
        colors.push(color);
        g.add_labeled(label)
    };
    let s = add(&mut g, "s".into(), 1);
    let t = add(&mut g, "t".into(), 1);
    let mut trace = Trace::default();
    let mut lit = Vec::new();
    for j in 1..=n {
        let x = add(&mut g, format!("x{j}"), 1 + j);
        let nx = add(&mut g, format!("~x{j}"), 1 + j);
        lit.push([x, nx]);
        trace.literals.push([vec![x], vec![nx]]);
    }
    let mut gadgets = Vec::new();
    for i in 1..=m {
        let r = |k: usize| 1 + n + 5 * (i - 1) + k;
        let c = add(&mut g, format!("c{i}"), 1);
        let u: Vec<VertexId> = (1..=3).map(|k| add(&mut g, format!("u{i}_{k}"), r(4))).collect();
        let v: Vec<VertexId> = (1..=3).map(|k| add(&mut g, format!("v{i}_{k}"), r(5))).collect();
        let w: Vec<VertexId> = (1..=3).map(|k| add(&mut g, format!("w{i}_{k}"), r(k))).collect();
        let mut all = vec![c];
        all.extend(&u);
        all.extend(&v);
        all.extend(&w);
        trace.clauses.push(all);
        gadgets.push((c, u, v, w));
    }
    let e = |g: &mut Multigraph, p: VertexId, q: VertexId| {
        g.add_edge(p, q).expect("distinct fresh endpoints");
    };
    for (i, clause) in phi.clauses().iter().enumerate() {
        let (_, u, _, w) = &gadgets[i];
        for (k, l) in clause.iter().enumerate() {
            let [x, nx] = lit[l.var];
            if l.positive {
                e(&mut g, x, u[k]);
                e(&mut g, nx, w[k]);
            } else {
                e(&mut g, x, w[k]);
                e(&mut g, nx, u[k]);
            }
        }
    }
    for (_, u, v, _) in &gadgets {
        for k in 0..3 {
            e(&mut g, u[k], v[k]);
        }
    }
    for &[x, nx] in &lit {
        e(&mut g, s, x);
        e(&mut g, s, nx);
    }
    for (c, _, v, w) in &gadgets {
        for k in 0..3 {
            e(&mut g, *c, v[k]);
            e(&mut g, *c, w[k]);
        }
    }
    for (c, ..) in &gadgets {
        e(&mut g, t, *c);
    }
    e(&mut g, s, t);
    let k = 1 + n + 5 * m;
    let mut art = ReductionArtifact::plain(ArtifactKind::RvdBase, g, trace, Some(phi.clone()));
    art.terminals = Some((s, t));
    art.vertex_coloring = Some(VertexColoring::new(k, colors).expect("palette covers all colors"));
    art
}

fn require_base(art: &ReductionArtifact) -> Result<(VertexId, VertexId, &VertexColoring)> {
    match (art.kind, art.terminals, &art.vertex_coloring) {
        (ArtifactKind::RvdBase, Some((s, t)), Some(c)) => Ok((s, t, c)),
        _ => Err(Error::pre("expected an artifact from build_gphi_rvd")),
    }
}

/// Replaces every vertex of degree above 3 by a cycle with one port vertex
/// per incident edge, all in the vertex's color. The new s and t are the
/// ports of the old s-t edge.
pub fn rvd_variant_deg3(art: &ReductionArtifact) -> Result<ReductionArtifact> {
    let (s, t, coloring) = require_base(art)?;
    let g = &art.graph;
    let mut h = Multigraph::new();
    let mut colors = Vec::new();
    let mut group: Vec<Vec<VertexId>> = Vec::new();
    // port[v][i] is the vertex that takes the i-th incident edge of v
    let mut port: Vec<Vec<VertexId>> = Vec::new();
    for v in g.vertices() {
        let d = g.degree(v);
        let name = g.display_vertex(v);
        if d <= 3 {
            let w = h.add_vertex(g.label(v).map(str::to_string));
            colors.push(coloring.color(v));
            group.push(vec![w]);
            port.push(vec![w; d]);
            continue;
        }
        let cyc: Vec<VertexId> = (0..d)
            .map(|i| {
                colors.push(coloring.color(v));
                h.add_labeled(format!("{name}.{i}"))
            })
            .collect();
        for i in 0..d {
            h.add_edge(cyc[i], cyc[(i + 1) % d])?;
        }
        group.push(cyc.clone());
        port.push(cyc);
    }
    let mut trace = Trace::default();
    let mut st_ends = None;
    for e in g.edge_ids() {
        let ed = g.edge(e);
        let slot = |v: VertexId| g.incident(v).iter().position(|&(_, f)| f == e).expect("incident");
        let p = port[ed.u.0][slot(ed.u)];
        let q = port[ed.v.0][slot(ed.v)];
        trace.edges.push(vec![h.add_edge(p, q)?]);
        if (ed.u, ed.v) == (s, t) || (ed.u, ed.v) == (t, s) {
            st_ends = Some(if ed.u == s { (p, q) } else { (q, p) });
        }
    }
    let relabel = |vs: &Vec<VertexId>| vs.iter().flat_map(|v| group[v.0].clone()).collect();
    trace.literals = art.trace.literals.iter().map(|[p, n]| [relabel(p), relabel(n)]).collect();
    trace.clauses = art.trace.clauses.iter().map(relabel).collect();
    if h.max_degree() > 3 {
        return Err(Error::VerificationFailed("degree-3 variant exceeds degree 3".into()));
    }
    let mut out = art.clone();
    out.kind = ArtifactKind::RvdDeg3;
    out.graph = h;
    out.trace = trace;
    out.terminals = Some(st_ends.ok_or_else(|| Error::pre("no s-t edge"))?);
    out.vertex_coloring = Some(VertexColoring::new(coloring.k(), colors)?);
    Ok(out)
}

/// Subdivides every edge; subdivision vertices get color r = 1.
pub fn rvd_variant_bipartite(art: &ReductionArtifact) -> Result<ReductionArtifact> {
    let (_, _, coloring) = require_base(art)?;
    let g = &art.graph;
    let mut h = Multigraph::new();
    for v in g.vertices() {
        h.add_vertex(g.label(v).map(str::to_string));
    }
    let mut colors = coloring.colors().to_vec();
    let mut trace = Trace {
        literals: art.trace.literals.clone(),
        clauses: art.trace.clauses.clone(),
        edges: vec![],
    };
    for e in g.edge_ids() {
        let ed = g.edge(e);
        let mid = h.add_labeled(format!("d{}", e.0));
        colors.push(1);
        trace.edges.push(vec![h.add_edge(ed.u, mid)?, h.add_edge(mid, ed.v)?]);
    }
    let mut out = art.clone();
    out.kind = ArtifactKind::RvdBipartite;
    out.graph = h;
    out.trace = trace;
    out.vertex_coloring = Some(VertexColoring::new(coloring.k(), colors)?);
    Ok(out)
}
