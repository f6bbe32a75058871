//! Seeded instance generators. The same seed always yields the same stream.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cnf::{CnfFormula, Literal};
use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexId};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_cnf(n: usize, m: usize, rng: &mut impl Rng) -> Result<CnfFormula> {
    if n == 0 {
        return Err(Error::pre("a formula needs at least one variable"));
    }
    let clauses = (0..m)
        .map(|_| [(); 3].map(|_| Literal { var: rng.gen_range(0..n), positive: rng.gen_bool(0.5) }))
        .collect();
    CnfFormula::new(n, clauses)
}

/// Every formula with `n` variables and `m` clauses, in lexicographic order
/// of the literal codes (2*var + negated).
pub fn all_formulas(n: usize, m: usize) -> impl Iterator<Item = CnfFormula> {
    let lits = 2 * n;
    let total = (lits as u64).pow(3 * m as u32);
    (0..total).map(move |mut code| {
        let mut flat = Vec::with_capacity(3 * m);
        for _ in 0..3 * m {
            flat.push((code % lits as u64) as usize);
            code /= lits as u64;
        }
        flat.reverse();
        let clauses = flat
            .chunks(3)
            .map(|c| [0, 1, 2].map(|i| Literal { var: c[i] / 2, positive: c[i] % 2 == 0 }))
            .collect();
        CnfFormula::new(n, clauses).expect("codes in range")
    })
}

/// Random labeled tree: vertex i attaches to a uniform earlier vertex.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Result<Multigraph> {
    if n == 0 {
        return Err(Error::pre("a tree needs at least one vertex"));
    }
    let mut g = Multigraph::with_vertices(n);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        g.add_edge(VertexId(j), VertexId(i))?;
    }
    Ok(g)
}

/// Random tree plus each remaining pair independently with probability `p`.
pub fn random_connected_graph(n: usize, p: f64, rng: &mut impl Rng) -> Result<Multigraph> {
    let mut g = random_tree(n, rng)?;
    for a in 0..n {
        for b in a + 1..n {
            let (a, b) = (VertexId(a), VertexId(b));
            if !g.adjacent(a, b) && rng.gen_bool(p) {
                g.add_edge(a, b)?;
            }
        }
    }
    Ok(g)
}

/// Connected graph with a cut vertex: two random connected pieces sharing
/// one vertex, relabeled randomly.
pub fn random_with_cut_vertex(n: usize, p: f64, rng: &mut impl Rng) -> Result<Multigraph> {
    if n < 3 {
        return Err(Error::pre("a cut vertex needs at least three vertices"));
    }
    let left = rng.gen_range(2..n);
    let right = n + 1 - left;
    let a = random_connected_graph(left, p, rng)?;
    let b = random_connected_graph(right, p, rng)?;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut g = Multigraph::with_vertices(n);
    for e in a.edges() {
        g.add_edge(VertexId(perm[e.u.0]), VertexId(perm[e.v.0]))?;
    }
    // vertex 0 of b is identified with the last vertex of a
    let map = |v: VertexId| if v.0 == 0 { left - 1 } else { left - 1 + v.0 };
    for e in b.edges() {
        g.add_edge(VertexId(perm[map(e.u)]), VertexId(perm[map(e.v)]))?;
    }
    Ok(g)
}

/// Random connected simple cubic graph by the pairing model with rejection.
pub fn random_cubic(n: usize, rng: &mut impl Rng) -> Result<Multigraph> {
    if n % 2 == 1 || n < 4 {
        return Err(Error::pre(format!("no cubic graph of order {n}")));
    }
    loop {
        let mut points: Vec<usize> = (0..3 * n).map(|i| i / 3).collect();
        points.shuffle(rng);
        let mut g = Multigraph::with_vertices(n);
        let mut ok = true;
        for pair in points.chunks(2) {
            let (a, b) = (VertexId(pair[0]), VertexId(pair[1]));
            if a == b || g.adjacent(a, b) {
                ok = false;
                break;
            }
            g.add_edge(a, b)?;
        }
        if ok && g.is_connected() {
            return Ok(g);
        }
    }
}

/// Random connected simple graph with maximum degree exactly 3 (n >= 4).
pub fn random_max_deg3(n: usize, extra: usize, rng: &mut impl Rng) -> Result<Multigraph> {
    grow(n, extra, rng, |_, _, _| true)
}

/// Random connected simple graph with maximum degree 3 whose degree-3
/// vertices are pairwise nonadjacent (n >= 4).
pub fn random_indep_deg3(n: usize, extra: usize, rng: &mut impl Rng) -> Result<Multigraph> {
    grow(n, extra, rng, |g, a, b| {
        [a, b].iter().all(|&v| g.degree(v) < 3 || g.neighbors(v).iter().all(|&w| g.degree(w) < 3))
    })
}

/// Grows a random tree and then adds up to `extra` random edges, keeping
/// degrees at most 3 and `keep(g, a, b)` true after each new edge ab.
/// Retries until the maximum degree is exactly 3.
fn grow(
    n: usize,
    extra: usize,
    rng: &mut impl Rng,
    keep: impl Fn(&Multigraph, VertexId, VertexId) -> bool,
) -> Result<Multigraph> {
    if n < 4 {
        return Err(Error::pre("maximum degree 3 needs at least four vertices"));
    }
    let try_add = |g: &mut Multigraph, a: VertexId, b: VertexId| -> bool {
        if a == b || g.adjacent(a, b) || g.degree(a) >= 3 || g.degree(b) >= 3 {
            return false;
        }
        let mut h = g.clone();
        h.add_edge(a, b).expect("valid vertices");
        if keep(&h, a, b) {
            *g = h;
            true
        } else {
            false
        }
    };
    for _ in 0..1000 {
        let mut g = Multigraph::with_vertices(n);
        let mut stuck = false;
        for i in 1..n {
            let mut order: Vec<usize> = (0..i).collect();
            order.shuffle(rng);
            if !order.into_iter().any(|j| try_add(&mut g, VertexId(j), VertexId(i))) {
                stuck = true;
                break;
            }
        }
        if stuck {
            continue;
        }
        for _ in 0..extra {
            let a = VertexId(rng.gen_range(0..n));
            let b = VertexId(rng.gen_range(0..n));
            try_add(&mut g, a, b);
        }
        if g.max_degree() == 3 {
            return Ok(g);
        }
    }
    Err(Error::pre("could not generate a graph with these parameters"))
}

/// Named small cubic graphs. `G0` is the prism under the name used by the
/// constructive coloring.
pub fn cubic_catalog() -> Vec<(&'static str, Multigraph)> {
    let k4 = Multigraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    let k33 = Multigraph::from_pairs(
        6,
        &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
    );
    let prism = Multigraph::from_pairs(
        6,
        &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
    );
    let cube = Multigraph::from_pairs(
        8,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 4),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 7),
        ],
    );
    let mut wagner_pairs: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    wagner_pairs.extend((0..4).map(|i| (i, i + 4)));
    let wagner = Multigraph::from_pairs(8, &wagner_pairs);
    let mut pet = Vec::new();
    for i in 0..5 {
        pet.push((i, (i + 1) % 5));
        pet.push((i, i + 5));
        pet.push((5 + i, 5 + (i + 2) % 5));
    }
    let petersen = Multigraph::from_pairs(10, &pet);
    vec![
        ("K4", k4),
        ("K33", k33),
        ("prism", prism.clone()),
        ("cube", cube),
        ("wagner", wagner),
        ("petersen", petersen),
        ("G0", prism),
    ]
}

pub fn complete(n: usize) -> Multigraph {
    let mut p = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            p.push((a, b));
        }
    }
    Multigraph::from_pairs(n, &p)
}

pub fn cycle(n: usize) -> Multigraph {
    let p: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Multigraph::from_pairs(n, &p)
}

pub fn path(n: usize) -> Multigraph {
    let p: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Multigraph::from_pairs(n, &p)
}

/// Whether `g` is connected, simple, of maximum degree 3, with independent
/// degree-3 vertices.
pub fn in_indep_deg3_class(g: &Multigraph) -> bool {
    g.is_simple()
        && g.is_connected()
        && g.max_degree() == 3
        && g.edges().iter().all(|e| g.degree(e.u) < 3 || g.degree(e.v) < 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_parity() {
        assert!(random_cubic(5, &mut rng(1)).is_err());
        let g = random_cubic(10, &mut rng(1)).unwrap();
        assert!(g.is_regular(3) && g.is_connected() && g.is_simple());
    }

    #[test]
    fn seeded_cnf_is_reproducible() {
        let a = random_cnf(3, 2, &mut rng(7)).unwrap();
        let b = random_cnf(3, 2, &mut rng(7)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn indep_class_predicate_holds() {
        let mut r = rng(3);
        for n in 4..12 {
            let g = random_indep_deg3(n, 4, &mut r).unwrap();
            assert!(in_indep_deg3_class(&g));
        }
    }

    #[test]
    fn catalog_is_cubic() {
        for (name, g) in cubic_catalog() {
            assert!(g.is_regular(3) && g.is_connected(), "{name}");
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(all_formulas(1, 1).count(), 8);
        assert_eq!(all_formulas(2, 1).count(), 64);
    }

    #[test]
    fn cut_vertex_graphs_have_one() {
        let mut r = rng(5);
        for _ in 0..20 {
            let g = random_with_cut_vertex(6, 0.5, &mut r).unwrap();
            assert!(g.is_connected());
            assert!(!crate::graph::block_decomposition(&g).unwrap().cut_vertices.is_empty());
        }
    }
}
