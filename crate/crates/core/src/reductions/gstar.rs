//! G*: every edge uv becomes a 4-cycle u - a - v - b - u.

use crate::cuts::{verify_matching_cut, CutKind, EdgeCutCertificate};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexId};

use super::{ArtifactKind, ReductionArtifact, Trace};

/// Old vertices keep their ids; edge e contributes new vertices a_e, b_e and
/// the edges u-a_e, a_e-v, v-b_e, b_e-u (ids 4e .. 4e+3).
pub fn edge_to_4cycle(g: &Multigraph) -> Result<ReductionArtifact> {
    if !g.is_simple() {
        return Err(Error::pre("edge_to_4cycle expects a simple graph"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut h = Multigraph::new();
    for v in g.vertices() {
        h.add_vertex(g.label(v).map(str::to_string));
    }
    let mut trace = Trace::default();
    for e in g.edge_ids() {
        let ed = *g.edge(e);
        let a = h.add_labeled(format!("e{}a", e.0));
        let b = h.add_labeled(format!("e{}b", e.0));
        let ids = vec![
            h.add_edge(ed.u, a)?,
            h.add_edge(a, ed.v)?,
            h.add_edge(ed.v, b)?,
            h.add_edge(b, ed.u)?,
        ];
        trace.edges.push(ids);
    }
    Ok(ReductionArtifact::plain(ArtifactKind::FourCycle, h, trace, None))
}

/// Lifts an x-y matching cut of G to G*: each cut edge uv is replaced by the
/// opposite pair u-a, v-b of its 4-cycle.
pub fn lift_matching_cut(
    g: &Multigraph,
    star: &ReductionArtifact,
    cert: &EdgeCutCertificate,
) -> Result<EdgeCutCertificate> {
    check_star(g, star)?;
    if !verify_matching_cut(g, cert)? {
        return Err(Error::pre("input is not a matching cut of G"));
    }
    let cut: Vec<EdgeId> = cert
        .cut
        .iter()
        .flat_map(|e| {
            let c = &star.trace.edges[e.0];
            [c[0], c[2]]
        })
        .collect();
    let lifted = EdgeCutCertificate::new(cert.x, cert.y, cut, CutKind::Matching);
    if !verify_matching_cut(&star.graph, &lifted)? {
        return Err(Error::VerificationFailed("lifted cut does not verify in G*".into()));
    }
    Ok(lifted)
}

/// Projects a matching cut of G* between two old vertices back to G: an edge
/// of G is cut when two edges of its 4-cycle are.
pub fn project_matching_cut(
    g: &Multigraph,
    star: &ReductionArtifact,
    cert: &EdgeCutCertificate,
) -> Result<EdgeCutCertificate> {
    check_star(g, star)?;
    let old = |v: VertexId| v.0 < g.vertex_count();
    if !old(cert.x) || !old(cert.y) {
        return Err(Error::pre("projection needs terminals that are vertices of G"));
    }
    if !verify_matching_cut(&star.graph, cert)? {
        return Err(Error::pre("input is not a matching cut of G*"));
    }
    let cut: Vec<EdgeId> = g
        .edge_ids()
        .filter(|e| {
            star.trace.edges[e.0].iter().filter(|f| cert.cut.binary_search(f).is_ok()).count() >= 2
        })
        .collect();
    let projected = EdgeCutCertificate::new(cert.x, cert.y, cut, CutKind::Matching);
    if !verify_matching_cut(g, &projected)? {
        return Err(Error::VerificationFailed("projected cut does not verify in G".into()));
    }
    Ok(projected)
}

fn check_star(g: &Multigraph, star: &ReductionArtifact) -> Result<()> {
    if star.kind != ArtifactKind::FourCycle
        || star.trace.edges.len() != g.edge_count()
        || star.graph.vertex_count() != g.vertex_count() + 2 * g.edge_count()
    {
        return Err(Error::pre("artifact is not G* of this graph"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuts::find_matching_cut;

    #[test]
    fn k2_becomes_c4() {
        let g = Multigraph::from_pairs(2, &[(0, 1)]);
        let s = edge_to_4cycle(&g).unwrap();
        assert_eq!((s.graph.vertex_count(), s.graph.edge_count()), (4, 4));
        assert!(s.graph.is_regular(2) && s.graph.is_connected());
        let cert = find_matching_cut(&g, VertexId(0), VertexId(1)).unwrap().unwrap();
        let lifted = lift_matching_cut(&g, &s, &cert).unwrap();
        assert_eq!(lifted.cut, vec![EdgeId(0), EdgeId(2)]);
        assert_eq!(project_matching_cut(&g, &s, &lifted).unwrap(), cert);
    }

    #[test]
    fn triangle_counts() {
        let g = Multigraph::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]);
        let s = edge_to_4cycle(&g).unwrap();
        assert_eq!(s.graph.vertex_count(), 9);
        assert_eq!(s.graph.edge_count(), 12);
        assert!(s.graph.is_bipartite());
        assert!((3..9).all(|v| s.graph.degree(VertexId(v)) == 2));
    }

    #[test]
    fn lift_rejects_non_cut() {
        let g = Multigraph::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]);
        let s = edge_to_4cycle(&g).unwrap();
        let bogus =
            EdgeCutCertificate::new(VertexId(0), VertexId(1), vec![EdgeId(0)], CutKind::Matching);
        assert!(lift_matching_cut(&g, &s, &bogus).is_err());
    }
}
