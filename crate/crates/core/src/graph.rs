//! Multigraph storage and the classical subroutines used everywhere else:
//! components, bridges, blocks, perfect matchings, pendant stripping and
//! small pattern detection.
//!
//! Vertices are dense indices `0..n`; edges are dense indices `0..m` in
//! insertion order. Every iteration is in ascending id order so that all
//! searches built on top are reproducible.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// One edge record. `class` is the parallel-class tag: the id of the first
/// edge inserted between the same endpoint pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub class: EdgeId,
}

impl Edge {
    pub fn other(&self, w: VertexId) -> VertexId {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, w: VertexId) -> bool {
        self.u == w || self.v == w
    }

    pub fn shares_endpoint(&self, other: &Edge) -> bool {
        self.touches(other.u) || self.touches(other.v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Multigraph {
    labels: Vec<Option<String>>,
    edges: Vec<Edge>,
    adj: Vec<Vec<(VertexId, EdgeId)>>,
    classes: HashMap<(VertexId, VertexId), EdgeId>,
    class_sizes: BTreeMap<EdgeId, usize>,
}

impl Multigraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// `n` unlabeled vertices, no edges.
    pub fn with_vertices(n: usize) -> Self {
        let mut g = Self::new();
        for _ in 0..n {
            g.add_vertex(None);
        }
        g
    }

    /// Simple graph from 0-based index pairs. Panics on malformed input, so
    /// it is meant for literals in tests and catalog code.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut g = Self::with_vertices(n);
        for &(a, b) in pairs {
            g.add_edge(VertexId(a), VertexId(b)).expect("valid edge literal");
        }
        g
    }

    pub fn add_vertex(&mut self, label: Option<String>) -> VertexId {
        self.labels.push(label);
        self.adj.push(Vec::new());
        VertexId(self.labels.len() - 1)
    }

    pub fn add_labeled(&mut self, label: impl Into<String>) -> VertexId {
        self.add_vertex(Some(label.into()))
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(self.display_vertex(u)));
        }
        let id = EdgeId(self.edges.len());
        let key = (u.min(v), u.max(v));
        let class = *self.classes.entry(key).or_insert(id);
        *self.class_sizes.entry(class).or_insert(0) += 1;
        self.edges.push(Edge { u, v, class });
        self.adj[u.0].push((v, id));
        self.adj[v.0].push((u, id));
        Ok(id)
    }

    /// Adds a pair of parallel edges, the basic "glue" of the reduction gadgets.
    pub fn add_parallel_pair(&mut self, u: VertexId, v: VertexId) -> Result<[EdgeId; 2]> {
        Ok([self.add_edge(u, v)?, self.add_edge(u, v)?])
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.0 < self.labels.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e.0 < self.edges.len() {
            Ok(())
        } else {
            Err(Error::UnknownEdge(e))
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.labels.len()).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0]
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels[v.0].as_deref()
    }

    pub fn set_label(&mut self, v: VertexId, label: impl Into<String>) {
        self.labels[v.0] = Some(label.into());
    }

    pub fn find_label(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| l.as_deref() == Some(label)).map(VertexId)
    }

    /// Label if present, otherwise the 1-based index.
    pub fn display_vertex(&self, v: VertexId) -> String {
        match self.labels.get(v.0).and_then(|l| l.as_deref()) {
            Some(l) => l.to_string(),
            None => (v.0 + 1).to_string(),
        }
    }

    /// Incident (neighbor, edge) pairs in ascending edge id order.
    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v.0]
    }

    /// Degree with parallel edges counted by multiplicity.
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.0].len()
    }

    /// Distinct neighbors in ascending id order.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut ns: Vec<VertexId> = self.adj[v.0].iter().map(|&(w, _)| w).collect();
        ns.sort_unstable();
        ns.dedup();
        ns
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edges_between(&self, u: VertexId, v: VertexId) -> Vec<EdgeId> {
        self.adj[u.0].iter().filter(|&&(w, _)| w == v).map(|&(_, e)| e).collect()
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u.0].iter().any(|&(w, _)| w == v)
    }

    pub fn class_size(&self, e: EdgeId) -> usize {
        self.class_sizes[&self.edges[e.0].class]
    }

    /// No two edges share an endpoint pair.
    pub fn is_simple(&self) -> bool {
        self.class_sizes.values().all(|&s| s == 1)
    }

    /// Parallel classes with at least two edges, each as ascending edge ids.
    pub fn parallel_classes(&self) -> Vec<Vec<EdgeId>> {
        let mut by_class: BTreeMap<EdgeId, Vec<EdgeId>> = BTreeMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            if self.class_sizes[&e.class] > 1 {
                by_class.entry(e.class).or_default().push(EdgeId(i));
            }
        }
        by_class.into_values().collect()
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.vertices().all(|v| self.degree(v) == d)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Vertices reachable from `start` avoiding removed edges and vertices.
    pub fn reachable(
        &self,
        start: VertexId,
        edge_removed: impl Fn(EdgeId) -> bool,
        vertex_removed: impl Fn(VertexId) -> bool,
    ) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count()];
        if vertex_removed(start) {
            return seen;
        }
        seen[start.0] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in &self.adj[v.0] {
                if !seen[w.0] && !edge_removed(e) && !vertex_removed(w) {
                    seen[w.0] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Partition into connected components, each sorted, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut comp = vec![usize::MAX; self.vertex_count()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if comp[s.0] != usize::MAX {
                continue;
            }
            let idx = out.len();
            let mut members = vec![s];
            comp[s.0] = idx;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for &(w, _) in &self.adj[v.0] {
                    if comp[w.0] == usize::MAX {
                        comp[w.0] = idx;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Proper 2-coloring of the vertices if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.vertex_count()];
        for s in self.vertices() {
            if side[s.0].is_some() {
                continue;
            }
            side[s.0] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let sv = side[v.0].unwrap();
                for &(w, _) in &self.adj[v.0] {
                    match side[w.0] {
                        None => {
                            side[w.0] = Some(!sv);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == sv => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Subgraph induced by `keep` (in the given order). Returns the graph and
    /// the old id of each new vertex; edges keep their relative order.
    pub fn induced(&self, keep: &[VertexId]) -> (Multigraph, Vec<EdgeId>) {
        let mut map = vec![None; self.vertex_count()];
        let mut h = Multigraph::new();
        for &v in keep {
            map[v.0] = Some(h.add_vertex(self.labels[v.0].clone()));
        }
        let mut edge_origin = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if let (Some(a), Some(b)) = (map[e.u.0], map[e.v.0]) {
                h.add_edge(a, b).expect("induced edge");
                edge_origin.push(EdgeId(i));
            }
        }
        (h, edge_origin)
    }

    /// Subgraph on the given edges, with vertices relabeled densely in
    /// ascending old-id order. Returns (graph, old vertex ids, old edge ids).
    pub fn edge_subgraph(&self, edges: &[EdgeId]) -> (Multigraph, Vec<VertexId>, Vec<EdgeId>) {
        let mut es = edges.to_vec();
        es.sort_unstable();
        es.dedup();
        let mut verts: Vec<VertexId> =
            es.iter().flat_map(|&e| [self.edges[e.0].u, self.edges[e.0].v]).collect();
        verts.sort_unstable();
        verts.dedup();
        let mut map = vec![None; self.vertex_count()];
        let mut h = Multigraph::new();
        for &v in &verts {
            map[v.0] = Some(h.add_vertex(self.labels[v.0].clone()));
        }
        for &e in &es {
            let ed = self.edges[e.0];
            h.add_edge(map[ed.u.0].unwrap(), map[ed.v.0].unwrap()).expect("subgraph edge");
        }
        (h, verts, es)
    }
}

/// Builds a graph from labeled endpoint pairs; one vertex per distinct label
/// in order of first appearance, edge ids in input order.
pub fn build_graph<S: AsRef<str>>(pairs: &[(S, S)], allow_parallel: bool) -> Result<Multigraph> {
    let mut g = Multigraph::new();
    let mut ids: HashMap<String, VertexId> = HashMap::new();
    for (a, b) in pairs {
        let (a, b) = (a.as_ref(), b.as_ref());
        if a == b {
            return Err(Error::SelfLoop(a.to_string()));
        }
        let mut id_of = |l: &str, g: &mut Multigraph| {
            *ids.entry(l.to_string()).or_insert_with(|| g.add_labeled(l))
        };
        let u = id_of(a, &mut g);
        let v = id_of(b, &mut g);
        if !allow_parallel && g.adjacent(u, v) {
            return Err(Error::DuplicateEdge(a.to_string(), b.to_string()));
        }
        g.add_edge(u, v)?;
    }
    Ok(g)
}

/// Edges whose removal increases the number of components. An edge of a
/// parallel class of size two or more is never a bridge.
pub fn bridges(g: &Multigraph) -> Vec<EdgeId> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut out = Vec::new();
    // iterative DFS: (vertex, parent edge, next incident index)
    for root in g.vertices() {
        if disc[root.0] != usize::MAX {
            continue;
        }
        let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        disc[root.0] = timer;
        low[root.0] = timer;
        timer += 1;
        while let Some(&mut (v, pe, ref mut next)) = stack.last_mut() {
            if let Some(&(w, e)) = g.incident(v).get(*next) {
                *next += 1;
                if Some(e) == pe {
                    continue;
                }
                if disc[w.0] == usize::MAX {
                    disc[w.0] = timer;
                    low[w.0] = timer;
                    timer += 1;
                    stack.push((w, Some(e), 0));
                } else {
                    low[v.0] = low[v.0].min(disc[w.0]);
                }
            } else {
                stack.pop();
                if let (Some(pe), Some(&(p, _, _))) = (pe, stack.last()) {
                    low[p.0] = low[p.0].min(low[v.0]);
                    if low[v.0] > disc[p.0] {
                        out.push(pe);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Block {
    /// A single edge (possibly with parallel copies it is not: a parallel
    /// pair forms a 2-edge block).
    pub fn is_k2(&self) -> bool {
        self.vertices.len() == 2 && self.edges.len() == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<VertexId>,
}

/// Blocks (maximal 2-connected pieces or single edges) of a connected graph,
/// ordered by their smallest edge id.
pub fn block_decomposition(g: &Multigraph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut blocks = Vec::new();
    let mut is_cut = vec![false; n];
    let Some(root) = g.vertices().next() else {
        return Ok(BlockDecomposition { blocks, cut_vertices: vec![] });
    };
    let mut root_children = 0;
    let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
    disc[root.0] = timer;
    low[root.0] = timer;
    timer += 1;
    while let Some(&mut (v, pe, ref mut next)) = stack.last_mut() {
        if let Some(&(w, e)) = g.incident(v).get(*next) {
            *next += 1;
            if Some(e) == pe {
                continue;
            }
            if disc[w.0] == usize::MAX {
                edge_stack.push(e);
                disc[w.0] = timer;
                low[w.0] = timer;
                timer += 1;
                if v == root {
                    root_children += 1;
                }
                stack.push((w, Some(e), 0));
            } else if disc[w.0] < disc[v.0] {
                edge_stack.push(e);
                low[v.0] = low[v.0].min(disc[w.0]);
            }
        } else {
            stack.pop();
            if let (Some(pe), Some(&(p, _, _))) = (pe, stack.last()) {
                low[p.0] = low[p.0].min(low[v.0]);
                if low[v.0] >= disc[p.0] {
                    if p != root {
                        is_cut[p.0] = true;
                    }
                    let mut edges = Vec::new();
                    while let Some(top) = edge_stack.pop() {
                        edges.push(top);
                        if top == pe {
                            break;
                        }
                    }
                    edges.sort_unstable();
                    let mut vertices: Vec<VertexId> =
                        edges.iter().flat_map(|&e| [g.edge(e).u, g.edge(e).v]).collect();
                    vertices.sort_unstable();
                    vertices.dedup();
                    blocks.push(Block { vertices, edges });
                }
            }
        }
    }
    if root_children > 1 {
        is_cut[root.0] = true;
    }
    blocks.sort_by_key(|b| b.edges[0]);
    let cut_vertices = g.vertices().filter(|v| is_cut[v.0]).collect();
    Ok(BlockDecomposition { blocks, cut_vertices })
}

/// Exact perfect matching by backtracking on the lowest unmatched vertex,
/// pruning whenever the unmatched vertices contain an odd component.
pub fn perfect_matching(g: &Multigraph) -> Option<Vec<EdgeId>> {
    let n = g.vertex_count();
    if n % 2 == 1 {
        return None;
    }
    let mut mate: Vec<Option<EdgeId>> = vec![None; n];
    let mut chosen = Vec::new();
    if match_rec(g, &mut mate, &mut chosen) {
        chosen.sort_unstable();
        Some(chosen)
    } else {
        None
    }
}

fn match_rec(g: &Multigraph, mate: &mut [Option<EdgeId>], chosen: &mut Vec<EdgeId>) -> bool {
    let Some(v) = g.vertices().find(|v| mate[v.0].is_none()) else {
        return true;
    };
    if has_odd_free_component(g, mate) {
        return false;
    }
    for &(w, e) in g.incident(v) {
        if mate[w.0].is_some() {
            continue;
        }
        mate[v.0] = Some(e);
        mate[w.0] = Some(e);
        chosen.push(e);
        if match_rec(g, mate, chosen) {
            return true;
        }
        chosen.pop();
        mate[v.0] = None;
        mate[w.0] = None;
    }
    false
}

fn has_odd_free_component(g: &Multigraph, mate: &[Option<EdgeId>]) -> bool {
    let mut seen = vec![false; g.vertex_count()];
    for s in g.vertices() {
        if seen[s.0] || mate[s.0].is_some() {
            continue;
        }
        seen[s.0] = true;
        let mut size = 0;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            size += 1;
            for &(w, _) in g.incident(v) {
                if !seen[w.0] && mate[w.0].is_none() {
                    seen[w.0] = true;
                    stack.push(w);
                }
            }
        }
        if size % 2 == 1 {
            return true;
        }
    }
    false
}

/// Result of repeatedly deleting degree-one vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stripped {
    pub graph: Multigraph,
    /// Old id of each remaining vertex, ascending.
    pub kept: Vec<VertexId>,
    /// Old id of each remaining edge.
    pub kept_edges: Vec<EdgeId>,
    /// Deleted (vertex, pendant edge) pairs in removal order.
    pub removed: Vec<(VertexId, EdgeId)>,
}

/// Deletes pendant vertices one at a time (smallest id first) until none is
/// left. A tree shrinks to a single vertex; any other connected graph to its
/// 2-core.
pub fn strip_pendants(g: &Multigraph) -> Stripped {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut edge_alive = vec![true; g.edge_count()];
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut remaining = n;
    let mut removed = Vec::new();
    loop {
        if remaining <= 1 {
            break;
        }
        let Some(v) = g.vertices().find(|v| alive[v.0] && deg[v.0] == 1) else {
            break;
        };
        let &(w, e) = g
            .incident(v)
            .iter()
            .find(|&&(_, e)| edge_alive[e.0])
            .expect("pendant vertex has a live edge");
        alive[v.0] = false;
        edge_alive[e.0] = false;
        deg[v.0] = 0;
        deg[w.0] -= 1;
        remaining -= 1;
        removed.push((v, e));
    }
    let kept: Vec<VertexId> = g.vertices().filter(|v| alive[v.0]).collect();
    let (graph, kept_edges) = g.induced(&kept);
    Stripped { graph, kept, kept_edges, removed }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    Triangle,
    K23,
}

/// Lexicographically first witness of the pattern as a (not necessarily
/// induced) subgraph. Triangle witnesses are `[a, b, c]`; K_{2,3} witnesses
/// are `[p, q, c1, c2, c3]` with `{p, q}` the side of size two.
pub fn find_pattern(g: &Multigraph, pattern: Pattern) -> Option<Vec<VertexId>> {
    let nbrs: Vec<Vec<VertexId>> = g.vertices().map(|v| g.neighbors(v)).collect();
    match pattern {
        Pattern::Triangle => {
            for a in g.vertices() {
                for &b in nbrs[a.0].iter().filter(|&&b| b > a) {
                    if let Some(&c) = nbrs[b.0].iter().find(|&&c| c > b && g.adjacent(a, c)) {
                        return Some(vec![a, b, c]);
                    }
                }
            }
            None
        }
        Pattern::K23 => {
            for p in g.vertices() {
                for q in g.vertices().filter(|&q| q > p) {
                    let common: Vec<VertexId> = nbrs[p.0]
                        .iter()
                        .copied()
                        .filter(|c| nbrs[q.0].binary_search(c).is_ok())
                        .collect();
                    if common.len() >= 3 {
                        return Some(vec![p, q, common[0], common[1], common[2]]);
                    }
                }
            }
            None
        }
    }
}
