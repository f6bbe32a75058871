//! Two-color proper disconnection colorings for graphs of maximum degree
//! three, and explicit matching cuts for the class where the degree-3
//! vertices are independent.
//!
//! Every public operation verifies its output before returning it.

use std::collections::BTreeMap;

use crate::cuts::{
    boundary_of, find_matching_cut, verify_matching_cut, CutKind, EdgeColoring, EdgeCutCertificate,
};
use crate::error::{Error, Result};
use crate::graph::{
    bridges, find_pattern, perfect_matching, strip_pendants, EdgeId, Multigraph, Pattern, Stripped,
    VertexId,
};
use crate::solvers::{is_proper_disconnected, Pair, PairCheck};

/// K4 with one edge subdivided; the subdivision vertex is the key vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HGadget {
    pub graph: Multigraph,
    pub key_vertex: VertexId,
}

impl HGadget {
    pub fn new() -> Self {
        let graph =
            Multigraph::from_pairs(5, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        Self { graph, key_vertex: VertexId(0) }
    }
}

impl Default for HGadget {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    /// Recursion depth; ids in a step refer to the graph at that depth.
    pub depth: usize,
    pub op: &'static str,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    /// Set for `assign` steps, which color `edges` of the input graph.
    pub color: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub steps: Vec<TraceStep>,
    pub coloring: EdgeColoring,
}

impl ConstructionTrace {
    fn finish(mut steps: Vec<TraceStep>, coloring: EdgeColoring) -> Self {
        for c in 1..=coloring.k() {
            let edges: Vec<EdgeId> = (0..coloring.colors().len())
                .map(EdgeId)
                .filter(|&e| coloring.color(e) == c)
                .collect();
            steps.push(TraceStep {
                depth: 0,
                op: "assign",
                vertices: vec![],
                edges,
                color: Some(c),
            });
        }
        Self { steps, coloring }
    }

    /// Rebuilds the coloring from the top-level `assign` steps.
    pub fn replay(&self) -> Option<EdgeColoring> {
        let mut colors = vec![0usize; self.coloring.colors().len()];
        for s in self.steps.iter().filter(|s| s.op == "assign" && s.depth == 0) {
            for e in &s.edges {
                *colors.get_mut(e.0)? = s.color?;
            }
        }
        EdgeColoring::new(self.coloring.k(), colors).ok()
    }
}

fn step(
    trace: &mut Vec<TraceStep>,
    depth: usize,
    op: &'static str,
    v: Vec<VertexId>,
    e: Vec<EdgeId>,
) {
    trace.push(TraceStep { depth, op, vertices: v, edges: e, color: None });
}

fn require_simple_connected(g: &Multigraph) -> Result<()> {
    if !g.is_simple() {
        return Err(Error::pre("graph must be simple"));
    }
    if g.vertex_count() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn verified(g: &Multigraph, colors: Vec<usize>) -> Result<EdgeColoring> {
    let coloring = EdgeColoring::new(2, colors)?;
    if g.vertex_count() >= 2 {
        if let PairCheck::Fails(p) = is_proper_disconnected(g, &coloring)? {
            return Err(Error::VerificationFailed(format!(
                "constructed coloring does not separate {} and {}",
                p.0, p.1
            )));
        }
    }
    Ok(coloring)
}

// ---------------------------------------------------------------------------
// 3-regular graphs
// ---------------------------------------------------------------------------

/// Two-coloring of the triangular prism: one edge of each triangle gets 2.
fn color_g0(g: &Multigraph) -> Option<Vec<usize>> {
    let tri = find_pattern(g, Pattern::Triangle)?;
    let partner = |a: VertexId| g.neighbors(a).into_iter().find(|w| !tri.contains(w));
    let b: Vec<VertexId> = tri.iter().map(|&a| partner(a)).collect::<Option<_>>()?;
    let edge = |p: VertexId, q: VertexId| g.edges_between(p, q).first().copied();
    let mut colors = vec![1usize; g.edge_count()];
    colors[edge(tri[0], tri[2])?.0] = 2;
    colors[edge(b[0], b[2])?.0] = 2;
    Some(colors)
}

fn bridgeless_colors(
    g: &Multigraph,
    depth: usize,
    trace: &mut Vec<TraceStep>,
) -> Result<Vec<usize>> {
    if g.vertex_count() == 6 && find_pattern(g, Pattern::Triangle).is_some() {
        step(trace, depth, "g0-stored", g.vertices().collect(), vec![]);
        return color_g0(g).ok_or_else(|| Error::pre("prism structure not recognized"));
    }
    let m = perfect_matching(g).ok_or_else(|| Error::pre("no perfect matching"))?;
    step(trace, depth, "perfect-matching", vec![], m.clone());
    let mut colors = vec![1usize; g.edge_count()];
    for &e in &m {
        colors[e.0] = 2;
    }
    let mut in_m = vec![false; g.edge_count()];
    for &e in &m {
        in_m[e.0] = true;
    }
    let rest: Vec<EdgeId> = g.edge_ids().filter(|e| !in_m[e.0]).collect();
    let (cycles, _, origin) = g.edge_subgraph(&rest);
    for comp in cycles.components() {
        if comp.len() == 3 {
            let (_, local) = cycles.induced(&comp);
            let lowest = local.iter().map(|e| origin[e.0]).min().expect("triangle edges");
            colors[lowest.0] = 2;
            step(trace, depth, "triangle-recolor", vec![], vec![lowest]);
        }
    }
    Ok(colors)
}

fn check_cubic(g: &Multigraph) -> Result<()> {
    require_simple_connected(g)?;
    if !g.is_regular(3) {
        return Err(Error::pre("graph must be 3-regular"));
    }
    Ok(())
}

/// Two-coloring of a connected bridgeless 3-regular graph.
pub fn color_3regular_bridgeless(g: &Multigraph) -> Result<ConstructionTrace> {
    check_cubic(g)?;
    if !bridges(g).is_empty() {
        return Err(Error::pre("graph must be bridgeless"));
    }
    let mut steps = Vec::new();
    let colors = bridgeless_colors(g, 0, &mut steps)?;
    Ok(ConstructionTrace::finish(steps, verified(g, colors)?))
}

/// Two-coloring of a connected 3-regular graph, splitting at bridges.
pub fn color_3regular(g: &Multigraph) -> Result<ConstructionTrace> {
    check_cubic(g)?;
    let mut steps = Vec::new();
    let colors = cubic_colors(g, 0, &mut steps)?;
    Ok(ConstructionTrace::finish(steps, verified(g, colors)?))
}

fn cubic_colors(g: &Multigraph, depth: usize, trace: &mut Vec<TraceStep>) -> Result<Vec<usize>> {
    let Some(&b) = bridges(g).first() else {
        return bridgeless_colors(g, depth, trace);
    };
    let (u, v) = (g.edge(b).u, g.edge(b).v);
    step(trace, depth, "split-bridge", vec![u, v], vec![b]);
    let mut colors = vec![0usize; g.edge_count()];
    colors[b.0] = 1;
    for end in [u, v] {
        let side = g.reachable(end, |e| e == b, |_| false);
        let keep: Vec<VertexId> = g.vertices().filter(|w| side[w.0]).collect();
        let (h, origin) = g.induced(&keep);
        let local_end = VertexId(keep.binary_search(&end).expect("end in its side"));
        let hc = degree_two_colors(&h, local_end, depth + 1, trace)?;
        for (i, c) in hc.into_iter().enumerate() {
            colors[origin[i].0] = c;
        }
    }
    Ok(colors)
}

/// Colors a graph whose only non-cubic vertex is `u`, of degree two.
fn degree_two_colors(
    h: &Multigraph,
    u: VertexId,
    depth: usize,
    trace: &mut Vec<TraceStep>,
) -> Result<Vec<usize>> {
    let inc = h.incident(u).to_vec();
    let [(u1, f1), (u2, f2)] = [inc[0], inc[1]];
    let (u1, f1, u2, f2) = if u1 < u2 { (u1, f1, u2, f2) } else { (u2, f2, u1, f1) };
    let keep: Vec<VertexId> = h.vertices().filter(|&w| w != u).collect();
    let (mut reduced, origin) = h.induced(&keep);
    let local = |w: VertexId| VertexId(keep.binary_search(&w).expect("kept vertex"));
    let mut colors = vec![0usize; h.edge_count()];

    if h.adjacent(u1, u2) {
        step(trace, depth, "diamond", vec![u, u1, u2], vec![f1, f2]);
        let d: Vec<VertexId> = (0..4).map(|_| reduced.add_vertex(None)).collect();
        for (a, b) in [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
            reduced.add_edge(d[a], d[b])?;
        }
        reduced.add_edge(d[0], local(u1))?;
        reduced.add_edge(d[1], local(u2))?;
        let c2 = cubic_colors(&reduced, depth + 1, trace)?;
        for (i, &o) in origin.iter().enumerate() {
            colors[o.0] = c2[i];
        }
        let third = |a: VertexId, b: VertexId| {
            h.incident(a).iter().find(|&&(w, _)| w != u && w != b).map(|&(_, e)| e)
        };
        let e1 = third(u1, u2).expect("u1 is cubic");
        let e3 = third(u2, u1).expect("u2 is cubic");
        let e2 = h.edges_between(u1, u2)[0];
        let (c1, cm, c3) = (colors[e1.0], colors[e2.0], colors[e3.0]);
        let other = |c: usize| 3 - c;
        let (a1, a2) = if c1 == cm {
            (other(cm), cm)
        } else if cm == c3 {
            (cm, other(cm))
        } else {
            (cm, c1)
        };
        colors[f1.0] = a1;
        colors[f2.0] = a2;
    } else {
        step(trace, depth, "shortcut", vec![u, u1, u2], vec![f1, f2]);
        reduced.add_edge(local(u1), local(u2))?;
        let c2 = cubic_colors(&reduced, depth + 1, trace)?;
        for (i, &o) in origin.iter().enumerate() {
            colors[o.0] = c2[i];
        }
        colors[f1.0] = 1;
        colors[f2.0] = 2;
    }
    Ok(colors)
}

// ---------------------------------------------------------------------------
// Maximum degree three
// ---------------------------------------------------------------------------

/// The cubic supergraph G'' of the pendant-free core G'. Core vertices and
/// core edges keep their ids from `core.graph`; one HGadget is attached to
/// each degree-2 core vertex, in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deg3Extension {
    pub core: Stripped,
    pub graph: Multigraph,
    /// (core vertex, key vertex of its gadget)
    pub attached: Vec<(VertexId, VertexId)>,
}

pub fn deg3_extension(g: &Multigraph) -> Result<Deg3Extension> {
    require_simple_connected(g)?;
    if g.max_degree() > 3 {
        return Err(Error::pre("maximum degree must be at most 3"));
    }
    let core = strip_pendants(g);
    let mut graph = core.graph.clone();
    let gadget = HGadget::new();
    let mut attached = Vec::new();
    for w in core.graph.vertices() {
        if core.graph.degree(w) != 2 {
            continue;
        }
        let base = graph.vertex_count();
        for _ in gadget.graph.vertices() {
            graph.add_vertex(None);
        }
        for e in gadget.graph.edges() {
            graph.add_edge(VertexId(base + e.u.0), VertexId(base + e.v.0))?;
        }
        let key = VertexId(base + gadget.key_vertex.0);
        graph.add_edge(w, key)?;
        attached.push((w, key));
    }
    Ok(Deg3Extension { core, graph, attached })
}

/// Two-coloring of a connected simple graph with maximum degree at most 3.
pub fn color_max_deg3(g: &Multigraph) -> Result<ConstructionTrace> {
    require_simple_connected(g)?;
    if g.max_degree() > 3 {
        return Err(Error::pre("maximum degree must be at most 3"));
    }
    let mut steps = Vec::new();
    if g.edge_count() + 1 == g.vertex_count() {
        step(&mut steps, 0, "tree", vec![], vec![]);
        let c = EdgeColoring::new(2, vec![1; g.edge_count()])?;
        let c = verified(g, c.colors().to_vec())?;
        return Ok(ConstructionTrace::finish(steps, c));
    }
    let ext = deg3_extension(g)?;
    step(
        &mut steps,
        0,
        "strip-pendants",
        ext.core.removed.iter().map(|r| r.0).collect(),
        ext.core.removed.iter().map(|r| r.1).collect(),
    );
    step(&mut steps, 0, "attach-gadgets", ext.attached.iter().map(|a| a.0).collect(), vec![]);
    let big = cubic_colors(&ext.graph, 1, &mut steps)?;
    let mut colors = vec![1usize; g.edge_count()];
    for (i, &o) in ext.core.kept_edges.iter().enumerate() {
        colors[o.0] = big[i];
    }
    Ok(ConstructionTrace::finish(steps, verified(g, colors)?))
}

// ---------------------------------------------------------------------------
// Degree-3 vertices independent
// ---------------------------------------------------------------------------

fn check_indep_class(g: &Multigraph) -> Result<()> {
    require_simple_connected(g)?;
    if g.max_degree() != 3 {
        return Err(Error::pre("maximum degree must be 3"));
    }
    for e in g.edges() {
        if g.degree(e.u) == 3 && g.degree(e.v) == 3 {
            return Err(Error::pre("degree-3 vertices must be independent"));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndepCut {
    pub certificate: EdgeCutCertificate,
    /// The casework did not produce a verifying cut and the complete search
    /// was used instead.
    pub fallback: bool,
}

/// An x-y matching cut built by the casework on degrees around x and y.
pub fn matching_cut_indep_deg3(g: &Multigraph, x: VertexId, y: VertexId) -> Result<IndepCut> {
    check_indep_class(g)?;
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(Error::SameTerminals(x));
    }
    if let Some(w) = find_pattern(g, Pattern::Triangle) {
        return Err(Error::pre(format!("graph contains the triangle {:?}", w)));
    }
    if let Some(w) = find_pattern(g, Pattern::K23) {
        return Err(Error::pre(format!("graph contains K23 {:?}", w)));
    }
    let live = Live { g, removed: vec![false; g.edge_count()] };
    if let Some(side) = live.construct(x, y) {
        let cert = EdgeCutCertificate::new(x, y, boundary_of(g, &side), CutKind::Matching);
        if verify_matching_cut(g, &cert)? {
            return Ok(IndepCut { certificate: cert, fallback: false });
        }
    }
    let cert = find_matching_cut(g, x, y)?
        .ok_or_else(|| Error::VerificationFailed(format!("no matching cut between {x} and {y}")))?;
    Ok(IndepCut { certificate: cert, fallback: true })
}

struct Live<'a> {
    g: &'a Multigraph,
    removed: Vec<bool>,
}

impl Live<'_> {
    fn nbrs(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self
            .g
            .incident(v)
            .iter()
            .filter(|(_, e)| !self.removed[e.0])
            .map(|&(w, _)| w)
            .collect();
        out.sort_unstable();
        out
    }

    fn deg(&self, v: VertexId) -> usize {
        self.nbrs(v).len()
    }

    fn edge(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        self.g.edges_between(a, b).into_iter().find(|e| !self.removed[e.0])
    }

    /// Neighbor of `v` other than `not`, if any.
    fn other(&self, v: VertexId, not: &[VertexId]) -> Option<VertexId> {
        self.nbrs(v).into_iter().find(|w| !not.contains(w))
    }

    fn pair(&self, a: VertexId, b: Option<VertexId>) -> Option<EdgeId> {
        b.and_then(|b| self.edge(a, b))
    }

    fn reach(&self, x: VertexId, cut: &[EdgeId]) -> Vec<bool> {
        self.g.reachable(x, |e| self.removed[e.0] || cut.contains(&e), |_| false)
    }

    /// Side vector (true = side of `x`) of a matching cut, or `None` when
    /// the casework does not apply.
    fn construct(&self, x: VertexId, y: VertexId) -> Option<Vec<bool>> {
        let base = self.reach(x, &[]);
        if !base[y.0] {
            return Some(base);
        }
        let (dx, dy) = (self.deg(x), self.deg(y));
        if (dy == 1 && dx != 1) || (dy == 3 && dx != 3 && dx != 1) {
            return self.construct(y, x).map(|s| s.into_iter().map(|b| !b).collect());
        }
        let cut: Vec<EdgeId> = if dx == 1 {
            self.g.incident(x).iter().filter(|(_, e)| !self.removed[e.0]).map(|&(_, e)| e).collect()
        } else if dx == 3 {
            self.degree_three(x, y)?
        } else if let Some(xy) = self.edge(x, y) {
            return self.adjacent_pair(x, y, xy);
        } else {
            self.nonadjacent_pair(x, y)?
        };
        let side = self.reach(x, &cut);
        (!side[y.0]).then_some(side)
    }

    fn adjacent_pair(&self, x: VertexId, y: VertexId, xy: EdgeId) -> Option<Vec<bool>> {
        let x1 = self.other(x, &[y])?;
        let y1 = self.other(y, &[x])?;
        if x1 == y1 {
            return None;
        }
        let mut removed = self.removed.clone();
        removed[xy.0] = true;
        let sub = Live { g: self.g, removed };
        let mut side = sub.construct(x1, y1)?;
        side[x.0] = true;
        side[y.0] = false;
        Some(side)
    }

    fn nonadjacent_pair(&self, x: VertexId, y: VertexId) -> Option<Vec<EdgeId>> {
        let n = self.nbrs(x);
        let (a, b) = (n[0], n[1]);
        let (x1, x2) = if self.deg(a) <= 2 || self.deg(b) == 3 { (a, b) } else { (b, a) };
        if self.deg(x1) <= 2 {
            let u1 = self.other(x1, &[x]);
            return Some([self.edge(x, x2), self.pair(x1, u1)].into_iter().flatten().collect());
        }
        let us: Vec<VertexId> = self.nbrs(x1).into_iter().filter(|&w| w != x).collect();
        let vs: Vec<VertexId> = self.nbrs(x2).into_iter().filter(|&w| w != x).collect();
        if let Some(&c) = us.iter().find(|u| vs.contains(u)) {
            let u2 = *us.iter().find(|&&u| u != c)?;
            let v2 = *vs.iter().find(|&&v| v != c)?;
            let w = self.other(u2, &[x1]);
            let q = self.other(v2, &[x2]);
            let cut = if y != v2 {
                [self.edge(x, x1), self.edge(x2, c), self.pair(v2, q)]
            } else {
                [self.edge(x, x2), self.edge(x1, c), self.pair(u2, w)]
            };
            Some(cut.into_iter().flatten().collect())
        } else {
            let (u1, u2) = (us[0], *us.get(1)?);
            let w = self.other(u1, &[x1]);
            let q = self.other(u2, &[x1]);
            let cut = if y == u1 {
                [self.edge(x, x2), self.edge(x1, u1), self.pair(u2, q)]
            } else {
                [self.edge(x, x2), self.edge(x1, u2), self.pair(u1, w)]
            };
            Some(cut.into_iter().flatten().collect())
        }
    }

    fn degree_three(&self, x: VertexId, y: VertexId) -> Option<Vec<EdgeId>> {
        let n = self.nbrs(x);
        let outer = |v: VertexId| -> Vec<VertexId> {
            self.nbrs(v).into_iter().filter(|&w| w != x).collect()
        };
        let i = (0..3).find(|&i| {
            let mine = outer(n[i]);
            (0..3).filter(|&j| j != i).all(|j| outer(n[j]).iter().all(|w| !mine.contains(w)))
        })?;
        let rest: Vec<VertexId> = (0..3).filter(|&j| j != i).map(|j| n[j]).collect();
        let (x1, x2, x3) = (n[i], rest[0], rest[1]);
        let s = |v: VertexId| self.other(v, &[x]);
        let (s1, s2, s3) = (s(x1), s(x2), s(x3));
        let xy = self.edge(x, y);
        let cut: Vec<Option<EdgeId>> = if xy.is_none() {
            vec![self.pair(x1, s1), self.pair(x2, s2), self.edge(x, x3)]
        } else if y == x2 {
            vec![self.pair(x1, s1), xy, self.pair(x3, s3)]
        } else if y == x3 {
            vec![self.pair(x1, s1), xy, self.pair(x2, s2)]
        } else if s2.is_some() && s2 == s3 {
            let s2 = s2?;
            if self.deg(s2) == 3 {
                let p1 = self.other(s2, &[x2, x3]);
                vec![xy, self.pair(s2, p1)]
            } else {
                vec![xy]
            }
        } else {
            vec![xy, self.pair(x2, s2), self.pair(x3, s3)]
        };
        Some(cut.into_iter().flatten().collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// pd = 2, witnessed by a triangle or a K_{2,3}.
    PdTwo { pattern: Pattern, witness: Vec<VertexId> },
    /// pd = 1, with a matching cut for every pair.
    PdOne { certificates: BTreeMap<Pair, EdgeCutCertificate>, fallbacks: Vec<Pair> },
}

impl Classification {
    pub fn value(&self) -> usize {
        match self {
            Classification::PdTwo { .. } => 2,
            Classification::PdOne { .. } => 1,
        }
    }
}

pub fn classify_indep_deg3(g: &Multigraph) -> Result<Classification> {
    check_indep_class(g)?;
    for pattern in [Pattern::Triangle, Pattern::K23] {
        if let Some(witness) = find_pattern(g, pattern) {
            return Ok(Classification::PdTwo { pattern, witness });
        }
    }
    let mut certificates = BTreeMap::new();
    let mut fallbacks = Vec::new();
    for x in g.vertices() {
        for y in g.vertices().filter(|&y| y > x) {
            let r = matching_cut_indep_deg3(g, x, y)?;
            if r.fallback {
                fallbacks.push((x, y));
            }
            certificates.insert((x, y), r.certificate);
        }
    }
    Ok(Classification::PdOne { certificates, fallbacks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Multigraph {
        Multigraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    fn prism() -> Multigraph {
        Multigraph::from_pairs(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
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

    /// Two copies of K4 minus an edge, each completed by a new vertex on the
    /// missing edge's ends, joined by a bridge between those new vertices.
    fn bridged() -> Multigraph {
        let mut p = Vec::new();
        for base in [0, 5] {
            p.extend([(base, base + 1), (base, base + 2), (base + 1, base + 2)]);
            p.extend([(base, base + 3), (base + 1, base + 3), (base + 2, base + 4)]);
            p.extend([(base + 3, base + 4)]);
        }
        p.push((4, 9));
        Multigraph::from_pairs(10, &p)
    }

    fn subdivided_k4() -> Multigraph {
        let mut p = Vec::new();
        let mut next = 4;
        for a in 0..4 {
            for b in a + 1..4 {
                p.push((a, next));
                p.push((next, b));
                next += 1;
            }
        }
        Multigraph::from_pairs(10, &p)
    }

    #[test]
    fn gadget_shape() {
        let h = HGadget::new();
        assert_eq!(h.graph.degree(h.key_vertex), 2);
        assert!(h.graph.vertices().filter(|&v| v != h.key_vertex).all(|v| h.graph.degree(v) == 3));
    }

    #[test]
    fn bridgeless_examples() {
        for g in [k4(), petersen(), prism()] {
            let t = color_3regular_bridgeless(&g).unwrap();
            assert!(t.coloring.distinct_colors() <= 2);
            assert_eq!(t.replay().as_ref(), Some(&t.coloring));
        }
        let t = color_3regular_bridgeless(&prism()).unwrap();
        assert!(t.steps.iter().any(|s| s.op == "g0-stored"));
    }

    #[test]
    fn bridged_cubic_uses_split() {
        let g = bridged();
        assert!(g.is_regular(3));
        let t = color_3regular(&g).unwrap();
        assert!(t.steps.iter().any(|s| s.op == "split-bridge"));
        assert!(matches!(color_3regular_bridgeless(&g), Err(Error::Precondition(_))));
    }

    #[test]
    fn max_deg3_examples() {
        let c4p = Multigraph::from_pairs(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]);
        assert!(color_max_deg3(&c4p).unwrap().coloring.distinct_colors() <= 2);
        let tree = Multigraph::from_pairs(4, &[(0, 1), (1, 2), (1, 3)]);
        assert_eq!(color_max_deg3(&tree).unwrap().coloring.colors(), &[1, 1, 1]);
        let star4 = Multigraph::from_pairs(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert!(color_max_deg3(&star4).is_err());
    }

    #[test]
    fn indep_examples() {
        let c6_with_leaf =
            Multigraph::from_pairs(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6)]);
        let r = matching_cut_indep_deg3(&c6_with_leaf, VertexId(1), VertexId(4)).unwrap();
        assert!(verify_matching_cut(&c6_with_leaf, &r.certificate).unwrap());
        let g = subdivided_k4();
        let c = classify_indep_deg3(&g).unwrap();
        assert_eq!(c.value(), 1);
        let k23 = Multigraph::from_pairs(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        assert!(matches!(
            classify_indep_deg3(&k23).unwrap(),
            Classification::PdTwo { pattern: Pattern::K23, .. }
        ));
    }
}
