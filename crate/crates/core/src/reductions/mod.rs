//! Gadget graphs for the hardness reductions, the structural transforms they
//! use, and decoding of cut certificates back to truth assignments.

mod gstar;
mod nae;
mod rvd;

pub use gstar::{edge_to_4cycle, lift_matching_cut, project_matching_cut};
pub use nae::{apply_operation_o, build_gphi_nae, build_hphi_prime, desimplify, pad_with_path};
pub use rvd::{build_gphi_rvd, rvd_variant_bipartite, rvd_variant_deg3};

use crate::cnf::{Assignment, CnfFormula};
use crate::cuts::{
    verify_matching_cut, verify_proper_edge_cut, verify_rainbow_vertex_cut, EdgeColoring,
    EdgeCutCertificate, VertexColoring, VertexCutCertificate,
};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArtifactKind {
    /// G_phi, the multigraph before closing the chains.
    NaeBase,
    /// H'_phi with terminals u, v.
    NaeClosed,
    /// H'_phi with a rainbow path attached, edge-colored.
    NaePadded,
    /// G* of an input graph.
    FourCycle,
    RvdBase,
    RvdDeg3,
    RvdBipartite,
}

impl ArtifactKind {
    pub fn is_rvd(self) -> bool {
        matches!(self, ArtifactKind::RvdBase | ArtifactKind::RvdDeg3 | ArtifactKind::RvdBipartite)
    }

    pub fn is_nae(self) -> bool {
        matches!(self, ArtifactKind::NaeBase | ArtifactKind::NaeClosed | ArtifactKind::NaePadded)
    }
}

/// Maps from formula objects and source edges to vertices/edges of the
/// artifact graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Trace {
    /// Per variable: vertices standing for the positive literal, then those
    /// standing for the negative literal.
    pub literals: Vec<[Vec<VertexId>; 2]>,
    /// Per clause: the vertices of its gadget.
    pub clauses: Vec<Vec<VertexId>>,
    /// Per edge of the source graph: the edges replacing it.
    pub edges: Vec<Vec<EdgeId>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionArtifact {
    pub kind: ArtifactKind,
    pub graph: Multigraph,
    pub terminals: Option<(VertexId, VertexId)>,
    pub edge_coloring: Option<EdgeColoring>,
    pub vertex_coloring: Option<VertexColoring>,
    pub trace: Trace,
    pub formula: Option<CnfFormula>,
}

impl ReductionArtifact {
    fn plain(
        kind: ArtifactKind,
        graph: Multigraph,
        trace: Trace,
        formula: Option<CnfFormula>,
    ) -> Self {
        Self {
            kind,
            graph,
            terminals: None,
            edge_coloring: None,
            vertex_coloring: None,
            trace,
            formula,
        }
    }

    pub fn terminals(&self) -> Result<(VertexId, VertexId)> {
        self.terminals.ok_or_else(|| Error::pre("artifact has no terminals"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Edge(EdgeCutCertificate),
    Vertex(VertexCutCertificate),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub assignment: Assignment,
    /// Whether the assignment satisfies the formula (NAE semantics for the
    /// NAE artifacts).
    pub satisfies: bool,
    /// Variables the certificate says nothing about; they default to false.
    pub unconstrained: Vec<usize>,
}

/// Reads a truth assignment off a verified cut certificate.
///
/// Vertex cuts: a positive literal vertex in the cut sets its variable true,
/// a negative one sets it false. Edge cuts: a variable is true when its
/// positive literal vertex lies on the side of the first terminal.
pub fn decode_assignment(art: &ReductionArtifact, cert: &Certificate) -> Result<Decoded> {
    let phi = art.formula.as_ref().ok_or_else(|| Error::pre("artifact carries no formula"))?;
    let g = &art.graph;
    let n = phi.n();
    let mut values = vec![false; n];
    let mut unconstrained = Vec::new();
    match cert {
        Certificate::Vertex(c) => {
            let coloring =
                art.vertex_coloring.as_ref().filter(|_| art.kind.is_rvd()).ok_or_else(|| {
                    Error::pre("vertex certificates decode only on rvd artifacts")
                })?;
            if !verify_rainbow_vertex_cut(g, coloring, c)? {
                return Err(Error::pre("certificate does not verify"));
            }
            for (j, [pos, neg]) in art.trace.literals.iter().enumerate() {
                let hit = |group: &Vec<VertexId>| group.iter().any(|v| c.cut.contains(v));
                if hit(pos) {
                    values[j] = true;
                } else if !hit(neg) {
                    unconstrained.push(j);
                }
            }
            let assignment = Assignment { values };
            let satisfies = phi.satisfied_by(&assignment);
            Ok(Decoded { assignment, satisfies, unconstrained })
        }
        Certificate::Edge(c) => {
            if !art.kind.is_nae() {
                return Err(Error::pre("edge certificates decode only on NAE artifacts"));
            }
            let ok = match &art.edge_coloring {
                Some(col) => verify_proper_edge_cut(g, col, c)?,
                None => verify_matching_cut(g, c)?,
            };
            if !ok {
                return Err(Error::pre("certificate does not verify"));
            }
            let side = g.reachable(c.x, |e| c.cut.binary_search(&e).is_ok(), |_| false);
            for (j, [pos, neg]) in art.trace.literals.iter().enumerate() {
                let p = side[pos[0].0];
                values[j] = p;
                if p == side[neg[0].0] {
                    unconstrained.push(j);
                }
            }
            let assignment = Assignment { values };
            let satisfies = phi.nae_satisfied_by(&assignment);
            Ok(Decoded { assignment, satisfies, unconstrained })
        }
    }
}
