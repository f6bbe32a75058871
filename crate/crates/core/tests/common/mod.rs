//! Exhaustive reference implementations used as oracles by the tests. They
//! share no search code with the library.
#![allow(dead_code)]

use discon::cuts::{EdgeColoring, VertexColoring};
use discon::generate::{random_connected_graph, rng};
use discon::graph::{EdgeId, Multigraph, VertexId};
use rand::Rng;

pub fn v(i: usize) -> VertexId {
    VertexId(i)
}

/// Plain BFS over the edges not in `removed_edges`, avoiding `removed_vertices`.
pub fn connected_after(
    g: &Multigraph,
    removed_edges: &[bool],
    removed_vertices: &[bool],
    x: VertexId,
    y: VertexId,
) -> bool {
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = vec![x];
    seen[x.0] = true;
    while let Some(a) = stack.pop() {
        if a == y {
            return true;
        }
        for (i, e) in g.edges().iter().enumerate() {
            if removed_edges[i] || !(e.u == a || e.v == a) {
                continue;
            }
            let b = if e.u == a { e.v } else { e.u };
            if !seen[b.0] && !removed_vertices[b.0] {
                seen[b.0] = true;
                stack.push(b);
            }
        }
    }
    false
}

fn share(g: &Multigraph, a: usize, b: usize) -> bool {
    let (p, q) = (g.edges()[a], g.edges()[b]);
    p.u == q.u || p.u == q.v || p.v == q.u || p.v == q.v
}

/// No two edges of the set share an endpoint while having the same color.
pub fn proper_set(g: &Multigraph, colors: &[usize], set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &a)| set[i + 1..].iter().all(|&b| colors[a] != colors[b] || !share(g, a, b)))
}

pub fn matching_set(g: &Multigraph, set: &[usize]) -> bool {
    set.iter().enumerate().all(|(i, &a)| set[i + 1..].iter().all(|&b| !share(g, a, b)))
}

fn members(mask: u64, len: usize) -> Vec<usize> {
    (0..len).filter(|i| mask >> i & 1 == 1).collect()
}

/// Does any edge subset accepted by `ok` separate x and y?
pub fn edge_subset_oracle(
    g: &Multigraph,
    x: VertexId,
    y: VertexId,
    ok: impl Fn(&[usize]) -> bool,
) -> bool {
    let m = g.edge_count();
    assert!(m <= 22, "edge subset oracle is exponential");
    let none = vec![false; g.vertex_count()];
    (0..1u64 << m).any(|mask| {
        let set = members(mask, m);
        if !ok(&set) {
            return false;
        }
        let mut removed = vec![false; m];
        for &e in &set {
            removed[e] = true;
        }
        !connected_after(g, &removed, &none, x, y)
    })
}

pub fn proper_cut_oracle(g: &Multigraph, colors: &[usize], x: VertexId, y: VertexId) -> bool {
    edge_subset_oracle(g, x, y, |s| proper_set(g, colors, s))
}

pub fn matching_cut_oracle(g: &Multigraph, x: VertexId, y: VertexId) -> bool {
    edge_subset_oracle(g, x, y, |s| matching_set(g, s))
}

fn rainbow(colors: &[usize], set: &[usize]) -> bool {
    let mut seen: Vec<usize> = set.iter().map(|&i| colors[i]).collect();
    seen.sort_unstable();
    seen.windows(2).all(|w| w[0] != w[1])
}

/// Rainbow x-y vertex-cut by enumerating every vertex subset avoiding x, y.
/// For adjacent x, y the x-y edges are deleted first and S+x or S+y must be
/// rainbow.
pub fn rainbow_cut_oracle(g: &Multigraph, colors: &[usize], x: VertexId, y: VertexId) -> bool {
    let n = g.vertex_count();
    assert!(n <= 20, "vertex subset oracle is exponential");
    let removed_edges: Vec<bool> =
        g.edges().iter().map(|e| (e.u == x && e.v == y) || (e.u == y && e.v == x)).collect();
    let adjacent = removed_edges.iter().any(|&b| b);
    (0..1u64 << n).any(|mask| {
        if mask >> x.0 & 1 == 1 || mask >> y.0 & 1 == 1 {
            return false;
        }
        let set = members(mask, n);
        let colorful = if adjacent {
            let mut sx = set.clone();
            sx.push(x.0);
            let mut sy = set.clone();
            sy.push(y.0);
            rainbow(colors, &sx) || rainbow(colors, &sy)
        } else {
            rainbow(colors, &set)
        };
        if !colorful {
            return false;
        }
        let mut removed = vec![false; n];
        for &a in &set {
            removed[a] = true;
        }
        !connected_after(g, &removed_edges, &removed, x, y)
    })
}

pub fn all_pairs(n: usize) -> Vec<(VertexId, VertexId)> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            out.push((v(a), v(b)));
        }
    }
    out
}

pub fn pd_coloring_ok(g: &Multigraph, colors: &[usize]) -> bool {
    all_pairs(g.vertex_count()).into_iter().all(|(a, b)| proper_cut_oracle(g, colors, a, b))
}

pub fn rvd_coloring_ok(g: &Multigraph, colors: &[usize]) -> bool {
    all_pairs(g.vertex_count()).into_iter().all(|(a, b)| rainbow_cut_oracle(g, colors, a, b))
}

/// Every coloring of `len` items with colors 1..=k, in lexicographic order.
pub fn all_colorings(len: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = (k as u64).pow(len as u32);
    (0..total).map(move |mut code| {
        let mut c = vec![0; len];
        for slot in c.iter_mut().rev() {
            *slot = (code % k as u64) as usize + 1;
            code /= k as u64;
        }
        c
    })
}

/// Least k such that some k-edge-coloring is proper disconnected.
pub fn pd_oracle(g: &Multigraph) -> usize {
    (1..).find(|&k| all_colorings(g.edge_count(), k).any(|c| pd_coloring_ok(g, &c))).unwrap()
}

/// Least k such that some k-vertex-coloring is rainbow vertex-disconnected.
pub fn rvd_oracle(g: &Multigraph) -> usize {
    (1..).find(|&k| all_colorings(g.vertex_count(), k).any(|c| rvd_coloring_ok(g, &c))).unwrap()
}

/// Smallest k admitting a proper edge coloring, by exhaustion.
pub fn chromatic_index_oracle(g: &Multigraph) -> usize {
    let m = g.edge_count();
    (1..)
        .find(|&k| {
            all_colorings(m, k)
                .any(|c| (0..m).all(|a| (a + 1..m).all(|b| c[a] != c[b] || !share(g, a, b))))
        })
        .unwrap()
}

pub fn has_perfect_matching_oracle(g: &Multigraph) -> bool {
    let m = g.edge_count();
    let n = g.vertex_count();
    if n % 2 == 1 {
        return false;
    }
    (0..1u64 << m).any(|mask| {
        let set = members(mask, m);
        set.len() * 2 == n && matching_set(g, &set)
    })
}

/// Edges whose removal disconnects their endpoints.
pub fn bridges_oracle(g: &Multigraph) -> Vec<EdgeId> {
    let none = vec![false; g.vertex_count()];
    (0..g.edge_count())
        .filter(|&i| {
            let mut removed = vec![false; g.edge_count()];
            removed[i] = true;
            let e = g.edges()[i];
            !connected_after(g, &removed, &none, e.u, e.v)
        })
        .map(EdgeId)
        .collect()
}

pub fn random_edge_coloring(g: &Multigraph, k: usize, r: &mut impl Rng) -> EdgeColoring {
    EdgeColoring::new(k, (0..g.edge_count()).map(|_| r.gen_range(1..=k)).collect()).unwrap()
}

pub fn random_vertex_coloring(g: &Multigraph, k: usize, r: &mut impl Rng) -> VertexColoring {
    VertexColoring::new(k, (0..g.vertex_count()).map(|_| r.gen_range(1..=k)).collect()).unwrap()
}

/// Seeded stream of small connected graphs with 2..=max_n vertices.
pub fn small_graphs(seed: u64, count: usize, max_n: usize) -> Vec<Multigraph> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(2..=max_n);
            let p = r.gen_range(0.1..0.7);
            random_connected_graph(n, p, &mut r).unwrap()
        })
        .collect()
}
