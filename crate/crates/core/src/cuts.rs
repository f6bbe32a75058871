//! Colorings, cut certificates, their verifiers, and complete cut finders
//! between a terminal pair.
//!
//! Edge cuts are searched over vertex bipartitions: if some proper (or
//! matching) edge set separates `x` from `y`, the boundary of the side of
//! `x` is a subset of it and therefore proper as well. The search assigns
//! sides in ascending vertex order with the `x` side tried first, so the
//! first bipartition found is the lexicographically least one.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    k: usize,
    colors: Vec<usize>,
}

impl EdgeColoring {
    /// Colors are 1-based and must lie in `[1, k]`.
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self> {
        check_palette(k, &colors)?;
        Ok(Self { k, colors })
    }

    pub fn uniform(edge_count: usize, color: usize) -> Self {
        Self { k: color.max(1), colors: vec![color.max(1); edge_count] }
    }

    pub fn for_graph(g: &Multigraph, k: usize, colors: Vec<usize>) -> Result<Self> {
        let c = Self::new(k, colors)?;
        c.check_covers(g)?;
        Ok(c)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn color(&self, e: EdgeId) -> usize {
        self.colors[e.0]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn distinct_colors(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    pub fn check_covers(&self, g: &Multigraph) -> Result<()> {
        if self.colors.len() != g.edge_count() {
            return Err(Error::ColoringSize { expected: g.edge_count(), got: self.colors.len() });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexColoring {
    k: usize,
    colors: Vec<usize>,
}

impl VertexColoring {
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self> {
        check_palette(k, &colors)?;
        Ok(Self { k, colors })
    }

    pub fn uniform(vertex_count: usize, color: usize) -> Self {
        Self { k: color.max(1), colors: vec![color.max(1); vertex_count] }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn color(&self, v: VertexId) -> usize {
        self.colors[v.0]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn distinct_colors(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    pub fn check_covers(&self, g: &Multigraph) -> Result<()> {
        if self.colors.len() != g.vertex_count() {
            return Err(Error::ColoringSize { expected: g.vertex_count(), got: self.colors.len() });
        }
        Ok(())
    }

    /// No two of the given vertices share a color.
    pub fn is_rainbow(&self, set: impl IntoIterator<Item = VertexId>) -> bool {
        let mut seen = HashSet::new();
        set.into_iter().all(|v| seen.insert(self.colors[v.0]))
    }
}

fn check_palette(k: usize, colors: &[usize]) -> Result<()> {
    if k == 0 {
        return Err(Error::pre("palette size k must be positive"));
    }
    match colors.iter().find(|&&c| c == 0 || c > k) {
        Some(&color) => Err(Error::ColorOutOfRange { color, k }),
        None => Ok(()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CutKind {
    Matching,
    Proper,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeCutCertificate {
    pub x: VertexId,
    pub y: VertexId,
    /// Ascending edge ids.
    pub cut: Vec<EdgeId>,
    pub kind: CutKind,
}

impl EdgeCutCertificate {
    pub fn new(x: VertexId, y: VertexId, mut cut: Vec<EdgeId>, kind: CutKind) -> Self {
        cut.sort_unstable();
        cut.dedup();
        Self { x, y, cut, kind }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexCutCertificate {
    pub x: VertexId,
    pub y: VertexId,
    /// Ascending vertex ids, never containing `x` or `y`.
    pub cut: Vec<VertexId>,
}

impl VertexCutCertificate {
    pub fn new(x: VertexId, y: VertexId, mut cut: Vec<VertexId>) -> Self {
        cut.sort_unstable();
        cut.dedup();
        Self { x, y, cut }
    }
}

/// True iff removing `cut` leaves `x` and `y` in different components.
pub fn separates_edges(g: &Multigraph, cut: &[EdgeId], x: VertexId, y: VertexId) -> bool {
    let mut removed = vec![false; g.edge_count()];
    for e in cut {
        removed[e.0] = true;
    }
    !g.reachable(x, |e| removed[e.0], |_| false)[y.0]
}

/// No two edges of `set` share an endpoint.
pub fn is_matching(g: &Multigraph, set: &[EdgeId]) -> bool {
    let mut used = vec![false; g.vertex_count()];
    for &e in set {
        let ed = g.edge(e);
        if used[ed.u.0] || used[ed.v.0] {
            return false;
        }
        used[ed.u.0] = true;
        used[ed.v.0] = true;
    }
    true
}

/// Adjacent edges of `set` carry distinct colors, i.e. every color class
/// inside `set` is a matching.
pub fn is_proper_set(g: &Multigraph, coloring: &EdgeColoring, set: &[EdgeId]) -> bool {
    let mut seen: HashSet<(VertexId, usize)> = HashSet::new();
    for &e in set {
        let ed = g.edge(e);
        let c = coloring.color(e);
        if !seen.insert((ed.u, c)) || !seen.insert((ed.v, c)) {
            return false;
        }
    }
    true
}

fn check_terminals(g: &Multigraph, x: VertexId, y: VertexId) -> Result<()> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(Error::SameTerminals(x));
    }
    Ok(())
}

/// Checks that the certificate separates its terminals and that each color
/// class within the cut is a matching; matching certificates must in
/// addition be matchings outright.
pub fn verify_proper_edge_cut(
    g: &Multigraph,
    coloring: &EdgeColoring,
    cert: &EdgeCutCertificate,
) -> Result<bool> {
    coloring.check_covers(g)?;
    check_terminals(g, cert.x, cert.y)?;
    for &e in &cert.cut {
        g.check_edge(e)?;
    }
    if cert.kind == CutKind::Matching && !is_matching(g, &cert.cut) {
        return Ok(false);
    }
    Ok(is_proper_set(g, coloring, &cert.cut) && separates_edges(g, &cert.cut, cert.x, cert.y))
}

/// A matching that separates the terminals.
pub fn verify_matching_cut(g: &Multigraph, cert: &EdgeCutCertificate) -> Result<bool> {
    check_terminals(g, cert.x, cert.y)?;
    for &e in &cert.cut {
        g.check_edge(e)?;
    }
    Ok(is_matching(g, &cert.cut) && separates_edges(g, &cert.cut, cert.x, cert.y))
}

/// Separation after deleting the vertex set (and every x–y edge when the
/// terminals are adjacent).
pub fn separates_vertices(g: &Multigraph, cut: &[VertexId], x: VertexId, y: VertexId) -> bool {
    let mut removed = vec![false; g.vertex_count()];
    for v in cut {
        removed[v.0] = true;
    }
    let reach = g.reachable(
        x,
        |e| {
            let ed = g.edge(e);
            ed.touches(x) && ed.touches(y)
        },
        |v| removed[v.0],
    );
    !reach[y.0]
}

pub fn verify_rainbow_vertex_cut(
    g: &Multigraph,
    coloring: &VertexColoring,
    cert: &VertexCutCertificate,
) -> Result<bool> {
    coloring.check_covers(g)?;
    check_terminals(g, cert.x, cert.y)?;
    for &v in &cert.cut {
        g.check_vertex(v)?;
        if v == cert.x || v == cert.y {
            return Err(Error::TerminalInCut(v));
        }
    }
    if !separates_vertices(g, &cert.cut, cert.x, cert.y) {
        return Ok(false);
    }
    let s = cert.cut.iter().copied();
    let rainbow = if g.adjacent(cert.x, cert.y) {
        coloring.is_rainbow(s.clone().chain([cert.x])) || coloring.is_rainbow(s.chain([cert.y]))
    } else {
        coloring.is_rainbow(s)
    };
    Ok(rainbow)
}

// ---------------------------------------------------------------------------
// Bipartition search
// ---------------------------------------------------------------------------

const UNSET: u8 = 2;

/// Complete search for a bipartition `x ∈ side 0`, `y ∈ side 1` whose
/// boundary has, at every vertex, pairwise distinct edge colors. With all
/// colors equal this is exactly the matching-cut condition.
struct BoundarySearch<'a> {
    g: &'a Multigraph,
    color: &'a [usize],
    nodes: u64,
}

impl<'a> BoundarySearch<'a> {
    fn run(g: &'a Multigraph, color: &'a [usize], x: VertexId, y: VertexId) -> Option<Vec<u8>> {
        let mut s = BoundarySearch { g, color, nodes: 0 };
        let mut side = vec![UNSET; g.vertex_count()];
        let mut queue = VecDeque::new();
        if !s.assign(&mut side, x, 0, &mut queue) || !s.assign(&mut side, y, 1, &mut queue) {
            return None;
        }
        if !s.propagate(&mut side, &mut queue) {
            return None;
        }
        s.dfs(side)
    }

    fn dfs(&mut self, side: Vec<u8>) -> Option<Vec<u8>> {
        self.nodes += 1;
        let Some(v) = side.iter().position(|&s| s == UNSET) else {
            return Some(side);
        };
        for choice in [0u8, 1] {
            let mut next = side.clone();
            let mut queue = VecDeque::new();
            if self.assign(&mut next, VertexId(v), choice, &mut queue)
                && self.propagate(&mut next, &mut queue)
            {
                if let Some(found) = self.dfs(next) {
                    return Some(found);
                }
            }
        }
        None
    }

    fn assign(&self, side: &mut [u8], v: VertexId, s: u8, queue: &mut VecDeque<VertexId>) -> bool {
        match side[v.0] {
            UNSET => {
                side[v.0] = s;
                queue.push_back(v);
                for &(w, _) in self.g.incident(v) {
                    queue.push_back(w);
                }
                true
            }
            cur => cur == s,
        }
    }

    fn propagate(&self, side: &mut [u8], queue: &mut VecDeque<VertexId>) -> bool {
        while let Some(v) = queue.pop_front() {
            if side[v.0] == UNSET {
                // Two equally colored edges into the same side force v there.
                let mut forced: Option<u8> = None;
                let inc = self.g.incident(v);
                for (i, &(w, e)) in inc.iter().enumerate() {
                    let sw = side[w.0];
                    if sw == UNSET {
                        continue;
                    }
                    let c = self.color[e.0];
                    let dup =
                        inc[..i].iter().any(|&(w2, e2)| side[w2.0] == sw && self.color[e2.0] == c);
                    if dup {
                        match forced {
                            None => forced = Some(sw),
                            Some(f) if f != sw => return false,
                            _ => {}
                        }
                    }
                }
                if let Some(f) = forced {
                    if !self.assign(side, v, f, queue) {
                        return false;
                    }
                }
            } else {
                // A crossing edge of color c at v pins every other color-c
                // neighbor of v to v's side.
                let sv = side[v.0];
                let inc = self.g.incident(v);
                for &(w, e) in inc {
                    if side[w.0] == UNSET || side[w.0] == sv {
                        continue;
                    }
                    let c = self.color[e.0];
                    for &(w2, e2) in inc {
                        if e2 == e || self.color[e2.0] != c {
                            continue;
                        }
                        match side[w2.0] {
                            UNSET => {
                                if !self.assign(side, w2, sv, queue) {
                                    return false;
                                }
                            }
                            s2 if s2 != sv => return false,
                            _ => {}
                        }
                    }
                }
            }
        }
        true
    }
}

fn boundary(g: &Multigraph, side: &[u8]) -> Vec<EdgeId> {
    g.edge_ids()
        .filter(|&e| {
            let ed = g.edge(e);
            side[ed.u.0] != side[ed.v.0]
        })
        .collect()
}

/// Boundary edges of the bipartition `(in_side, rest)`.
pub fn boundary_of(g: &Multigraph, in_side: &[bool]) -> Vec<EdgeId> {
    g.edge_ids()
        .filter(|&e| {
            let ed = g.edge(e);
            in_side[ed.u.0] != in_side[ed.v.0]
        })
        .collect()
}

/// Lexicographically least bipartition (as a side vector, `x` side = 0) whose
/// boundary is a proper edge-cut under `coloring`.
pub fn find_proper_bipartition(
    g: &Multigraph,
    coloring: &EdgeColoring,
    x: VertexId,
    y: VertexId,
) -> Result<Option<Vec<u8>>> {
    coloring.check_covers(g)?;
    check_terminals(g, x, y)?;
    Ok(BoundarySearch::run(g, coloring.colors(), x, y))
}

pub fn find_proper_edge_cut(
    g: &Multigraph,
    coloring: &EdgeColoring,
    x: VertexId,
    y: VertexId,
) -> Result<Option<EdgeCutCertificate>> {
    Ok(find_proper_bipartition(g, coloring, x, y)?
        .map(|side| EdgeCutCertificate::new(x, y, boundary(g, &side), CutKind::Proper)))
}

/// Lexicographically least bipartition whose boundary is a matching cut.
pub fn find_matching_bipartition(
    g: &Multigraph,
    x: VertexId,
    y: VertexId,
) -> Result<Option<Vec<u8>>> {
    check_terminals(g, x, y)?;
    let mono = vec![1usize; g.edge_count()];
    Ok(BoundarySearch::run(g, &mono, x, y))
}

pub fn find_matching_cut(
    g: &Multigraph,
    x: VertexId,
    y: VertexId,
) -> Result<Option<EdgeCutCertificate>> {
    Ok(find_matching_bipartition(g, x, y)?
        .map(|side| EdgeCutCertificate::new(x, y, boundary(g, &side), CutKind::Matching)))
}

// ---------------------------------------------------------------------------
// Rainbow vertex-cut search
// ---------------------------------------------------------------------------

/// Path-hitting search: while `x` still reaches `y` in `G - S`, any rainbow
/// cut containing `S` must contain a still-addable vertex of every x–y path,
/// so branching on the addable vertices of one path is complete. The path is
/// chosen to minimize the number of addable vertices (0-1 BFS).
struct RainbowSearch<'a> {
    g: &'a Multigraph,
    coloring: &'a VertexColoring,
    x: VertexId,
    y: VertexId,
    adjacent: bool,
    forbidden: Option<usize>,
    visited: HashSet<Vec<VertexId>>,
}

impl RainbowSearch<'_> {
    fn skip_edge(&self, e: EdgeId) -> bool {
        self.adjacent && {
            let ed = self.g.edge(e);
            ed.touches(self.x) && ed.touches(self.y)
        }
    }

    fn addable(&self, v: VertexId, in_s: &[bool], used: &HashSet<usize>) -> bool {
        let c = self.coloring.color(v);
        v != self.x && v != self.y && !in_s[v.0] && !used.contains(&c) && self.forbidden != Some(c)
    }

    /// Path from x to y in G - S with the fewest addable vertices; returns
    /// those addable vertices in path order, or None if y is unreachable.
    fn cheapest_path(&self, in_s: &[bool], used: &HashSet<usize>) -> Option<Vec<VertexId>> {
        let n = self.g.vertex_count();
        let mut dist = vec![usize::MAX; n];
        let mut pred: Vec<Option<VertexId>> = vec![None; n];
        let mut dq = VecDeque::new();
        dist[self.x.0] = 0;
        dq.push_back(self.x);
        while let Some(v) = dq.pop_front() {
            for &(w, e) in self.g.incident(v) {
                if in_s[w.0] || self.skip_edge(e) {
                    continue;
                }
                let cost = usize::from(self.addable(w, in_s, used));
                let nd = dist[v.0] + cost;
                if nd < dist[w.0] {
                    dist[w.0] = nd;
                    pred[w.0] = Some(v);
                    if cost == 0 {
                        dq.push_front(w);
                    } else {
                        dq.push_back(w);
                    }
                }
            }
        }
        if dist[self.y.0] == usize::MAX {
            return None;
        }
        let mut path = Vec::new();
        let mut cur = self.y;
        while let Some(p) = pred[cur.0] {
            if self.addable(cur, in_s, used) {
                path.push(cur);
            }
            cur = p;
        }
        path.reverse();
        Some(path)
    }

    fn dfs(
        &mut self,
        set: &mut Vec<VertexId>,
        in_s: &mut [bool],
        used: &mut HashSet<usize>,
    ) -> bool {
        let mut key = set.clone();
        key.sort_unstable();
        if !self.visited.insert(key) {
            return false;
        }
        let Some(candidates) = self.cheapest_path(in_s, used) else {
            return true;
        };
        for v in candidates {
            let c = self.coloring.color(v);
            set.push(v);
            in_s[v.0] = true;
            used.insert(c);
            if self.dfs(set, in_s, used) {
                return true;
            }
            used.remove(&c);
            in_s[v.0] = false;
            set.pop();
        }
        false
    }
}

/// Searches sets with at most one vertex per color class. For adjacent
/// terminals the option "S + x rainbow" is tried before "S + y rainbow".
pub fn find_rainbow_vertex_cut(
    g: &Multigraph,
    coloring: &VertexColoring,
    x: VertexId,
    y: VertexId,
) -> Result<Option<VertexCutCertificate>> {
    coloring.check_covers(g)?;
    check_terminals(g, x, y)?;
    let adjacent = g.adjacent(x, y);
    let options: Vec<Option<usize>> = if adjacent {
        let (cx, cy) = (coloring.color(x), coloring.color(y));
        if cx == cy {
            vec![Some(cx)]
        } else {
            vec![Some(cx), Some(cy)]
        }
    } else {
        vec![None]
    };
    for forbidden in options {
        let mut search =
            RainbowSearch { g, coloring, x, y, adjacent, forbidden, visited: HashSet::new() };
        let mut set = Vec::new();
        let mut in_s = vec![false; g.vertex_count()];
        let mut used = HashSet::new();
        if search.dfs(&mut set, &mut in_s, &mut used) {
            return Ok(Some(VertexCutCertificate::new(x, y, set)));
        }
    }
    Ok(None)
}
