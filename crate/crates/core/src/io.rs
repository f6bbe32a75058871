//! Text formats: a DIMACS-like edge list with colorings, terminals and labels
//! as comment sidecars, and a DOT subset that round-trips.
//!
//! Edge list:
//! ```text
//! p graph <n> <m>
//! <u> <v>                      one line per edge, 1-based, in edge-id order
//! c edgecolor <e> <k>          1-based edge index, color k
//! c vertexcolor <v> <k>
//! c terminal <label> <v>
//! c vertexlabel <v> <label>
//! ```

use std::collections::BTreeMap;

use crate::cuts::{EdgeColoring, VertexColoring};
use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexId};
use crate::reductions::ReductionArtifact;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GraphFile {
    pub graph: Multigraph,
    pub edge_coloring: Option<EdgeColoring>,
    pub vertex_coloring: Option<VertexColoring>,
    /// Named terminals in file order, e.g. `("s", v)`.
    pub terminals: Vec<(String, VertexId)>,
}

impl GraphFile {
    pub fn plain(graph: Multigraph) -> Self {
        Self { graph, ..Self::default() }
    }

    pub fn from_artifact(art: &ReductionArtifact) -> Self {
        let names = if art.kind.is_rvd() { ["s", "t"] } else { ["u", "v"] };
        let terminals = art
            .terminals
            .map(|(a, b)| vec![(names[0].to_string(), a), (names[1].to_string(), b)])
            .unwrap_or_default();
        Self {
            graph: art.graph.clone(),
            edge_coloring: art.edge_coloring.clone(),
            vertex_coloring: art.vertex_coloring.clone(),
            terminals,
        }
    }

    pub fn terminal(&self, name: &str) -> Option<VertexId> {
        self.terminals.iter().find(|(n, _)| n == name).map(|&(_, v)| v)
    }
}

fn palette(colors: &[usize]) -> usize {
    colors.iter().copied().max().unwrap_or(1).max(1)
}

pub fn emit_edge_list(f: &GraphFile) -> String {
    let g = &f.graph;
    let mut out = format!("p graph {} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u.0 + 1, e.v.0 + 1));
    }
    if let Some(c) = &f.edge_coloring {
        for (i, k) in c.colors().iter().enumerate() {
            out.push_str(&format!("c edgecolor {} {}\n", i + 1, k));
        }
    }
    if let Some(c) = &f.vertex_coloring {
        for (i, k) in c.colors().iter().enumerate() {
            out.push_str(&format!("c vertexcolor {} {}\n", i + 1, k));
        }
    }
    for (name, v) in &f.terminals {
        out.push_str(&format!("c terminal {} {}\n", name, v.0 + 1));
    }
    for v in g.vertices() {
        if let Some(l) = g.label(v) {
            out.push_str(&format!("c vertexlabel {} {}\n", v.0 + 1, l));
        }
    }
    out
}

fn num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| Error::parse(line, format!("bad {what}")))
}

fn index(tok: Option<&str>, line: usize, what: &str, bound: usize) -> Result<usize> {
    let i = num(tok, line, what)?;
    if i == 0 || i > bound {
        return Err(Error::parse(line, format!("{what} {i} out of range 1..={bound}")));
    }
    Ok(i - 1)
}

pub fn parse_edge_list(text: &str) -> Result<GraphFile> {
    let mut header: Option<(usize, usize)> = None;
    let mut g = Multigraph::new();
    let mut edge_colors: BTreeMap<usize, usize> = BTreeMap::new();
    let mut vertex_colors: BTreeMap<usize, usize> = BTreeMap::new();
    let mut terminals = Vec::new();
    let mut last = 1;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last = line;
        let mut tok = raw.split_whitespace();
        let Some(first) = tok.next() else { continue };
        match first {
            "p" => {
                if header.is_some() {
                    return Err(Error::parse(line, "duplicate header"));
                }
                if tok.next() != Some("graph") {
                    return Err(Error::parse(line, "expected 'p graph <n> <m>'"));
                }
                let n = num(tok.next(), line, "vertex count")?;
                let m = num(tok.next(), line, "edge count")?;
                g = Multigraph::with_vertices(n);
                header = Some((n, m));
            }
            "c" => {
                let Some((n, m)) = header else { continue };
                match tok.next() {
                    Some("edgecolor") => {
                        let e = index(tok.next(), line, "edge", m)?;
                        edge_colors.insert(e, num(tok.next(), line, "color")?);
                    }
                    Some("vertexcolor") => {
                        let v = index(tok.next(), line, "vertex", n)?;
                        vertex_colors.insert(v, num(tok.next(), line, "color")?);
                    }
                    Some("terminal") => {
                        let name = tok
                            .next()
                            .ok_or_else(|| Error::parse(line, "missing terminal name"))?;
                        let v = index(tok.next(), line, "vertex", n)?;
                        terminals.push((name.to_string(), VertexId(v)));
                    }
                    Some("vertexlabel") => {
                        let v = index(tok.next(), line, "vertex", n)?;
                        let label =
                            tok.next().ok_or_else(|| Error::parse(line, "missing label"))?;
                        g.set_label(VertexId(v), label);
                    }
                    _ => {}
                }
            }
            _ => {
                let (n, _) = header.ok_or_else(|| Error::parse(line, "edge before header"))?;
                let u = index(Some(first), line, "endpoint", n)?;
                let v = index(tok.next(), line, "endpoint", n)?;
                if tok.next().is_some() {
                    return Err(Error::parse(line, "trailing tokens after edge"));
                }
                if u == v {
                    return Err(Error::parse(line, format!("self-loop at {}", u + 1)));
                }
                g.add_edge(VertexId(u), VertexId(v))?;
            }
        }
    }
    let (n, m) = header.ok_or_else(|| Error::parse(last, "missing header"))?;
    if g.edge_count() != m {
        return Err(Error::parse(
            last,
            format!("header declares {m} edges, found {}", g.edge_count()),
        ));
    }
    let edge_coloring = collect_colors(edge_colors, m, last, "edge")?
        .map(|c| EdgeColoring::new(palette(&c), c))
        .transpose()?;
    let vertex_coloring = collect_colors(vertex_colors, n, last, "vertex")?
        .map(|c| VertexColoring::new(palette(&c), c))
        .transpose()?;
    Ok(GraphFile { graph: g, edge_coloring, vertex_coloring, terminals })
}

fn collect_colors(
    map: BTreeMap<usize, usize>,
    total: usize,
    line: usize,
    what: &str,
) -> Result<Option<Vec<usize>>> {
    if map.is_empty() {
        return Ok(None);
    }
    if map.len() != total {
        return Err(Error::parse(
            line,
            format!("{what} coloring covers {} of {total} items", map.len()),
        ));
    }
    Ok(Some(map.into_values().collect()))
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT with 1-based node ids. Colors appear as `colorindex` attributes and
/// as a paired12 palette color for rendering.
pub fn emit_dot(f: &GraphFile) -> String {
    let g = &f.graph;
    let mut out =
        String::from("graph G {\n  node [colorscheme=paired12];\n  edge [colorscheme=paired12];\n");
    for v in g.vertices() {
        let mut attrs = vec![format!("label={}", quote(&g.display_vertex(v)))];
        if let Some(c) = &f.vertex_coloring {
            let k = c.color(v);
            attrs.push(format!("colorindex={k}"));
            attrs.push(format!("style=filled, fillcolor={}", (k - 1) % 12 + 1));
        }
        if let Some((name, _)) = f.terminals.iter().find(|(_, t)| *t == v) {
            attrs.push(format!("terminal={}", quote(name)));
            attrs.push("shape=doublecircle".into());
        }
        out.push_str(&format!("  {} [{}];\n", v.0 + 1, attrs.join(", ")));
    }
    for (i, e) in g.edges().iter().enumerate() {
        let mut line = format!("  {} -- {}", e.u.0 + 1, e.v.0 + 1);
        if let Some(c) = &f.edge_coloring {
            let k = c.colors()[i];
            line.push_str(&format!(" [colorindex={k}, color={}, label=\"{k}\"]", (k - 1) % 12 + 1));
        }
        line.push_str(";\n");
        out.push_str(&line);
    }
    out.push_str("}\n");
    out
}

fn parse_attrs(s: &str, line: usize) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    let mut chars = s.chars().peekable();
    loop {
        while chars.peek().is_some_and(|c| c.is_whitespace() || *c == ',') {
            chars.next();
        }
        let key: String =
            std::iter::from_fn(|| chars.next_if(|c| c.is_alphanumeric() || *c == '_')).collect();
        if key.is_empty() {
            break;
        }
        if chars.next() != Some('=') {
            return Err(Error::parse(line, format!("attribute {key} has no value")));
        }
        let value = if chars.peek() == Some(&'"') {
            chars.next();
            let mut v = String::new();
            loop {
                match chars.next() {
                    Some('\\') => v.extend(chars.next()),
                    Some('"') => break,
                    Some(c) => v.push(c),
                    None => return Err(Error::parse(line, "unterminated string")),
                }
            }
            v
        } else {
            std::iter::from_fn(|| chars.next_if(|c| !c.is_whitespace() && *c != ',')).collect()
        };
        out.insert(key, value);
    }
    Ok(out)
}

/// Parses the DOT subset written by [`emit_dot`].
pub fn parse_dot(text: &str) -> Result<GraphFile> {
    let mut nodes: Vec<(usize, BTreeMap<String, String>)> = Vec::new();
    let mut edges: Vec<(usize, usize, BTreeMap<String, String>, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.trim().trim_end_matches(';');
        if s.is_empty()
            || s.starts_with("graph")
            || s == "}"
            || s.starts_with("node")
            || s.starts_with("edge")
        {
            continue;
        }
        let (head, attrs) = match s.find('[') {
            Some(p) => (&s[..p], parse_attrs(s[p + 1..].trim_end_matches(']'), line)?),
            None => (s, BTreeMap::new()),
        };
        let ids: Vec<&str> = head.split("--").map(str::trim).collect();
        let id = |t: &str| -> Result<usize> {
            t.parse::<usize>()
                .ok()
                .filter(|&v| v > 0)
                .ok_or_else(|| Error::parse(line, format!("bad node id '{t}'")))
        };
        match ids.as_slice() {
            [v] => nodes.push((id(v)?, attrs)),
            [a, b] => edges.push((id(a)?, id(b)?, attrs, line)),
            _ => return Err(Error::parse(line, "unsupported statement")),
        }
    }
    let n = nodes
        .iter()
        .map(|(v, _)| *v)
        .chain(edges.iter().flat_map(|e| [e.0, e.1]))
        .max()
        .unwrap_or(0);
    let mut g = Multigraph::with_vertices(n);
    let mut vcolors = vec![None; n];
    let mut terminals = Vec::new();
    for (v, attrs) in &nodes {
        let id = VertexId(v - 1);
        if let Some(l) = attrs.get("label") {
            if *l != g.display_vertex(id) {
                g.set_label(id, l.clone());
            }
        }
        if let Some(k) = attrs.get("colorindex") {
            vcolors[v - 1] = k.parse::<usize>().ok();
        }
        if let Some(t) = attrs.get("terminal") {
            terminals.push((t.clone(), id));
        }
    }
    let mut ecolors = Vec::new();
    for (a, b, attrs, line) in &edges {
        if a == b {
            return Err(Error::parse(*line, format!("self-loop at {a}")));
        }
        g.add_edge(VertexId(a - 1), VertexId(b - 1))?;
        ecolors.push(attrs.get("colorindex").and_then(|k| k.parse::<usize>().ok()));
    }
    let finish = |c: Vec<Option<usize>>| -> Option<Vec<usize>> {
        if c.is_empty() || c.iter().any(Option::is_none) {
            None
        } else {
            Some(c.into_iter().flatten().collect())
        }
    };
    let edge_coloring = finish(ecolors).map(|c| EdgeColoring::new(palette(&c), c)).transpose()?;
    let vertex_coloring =
        finish(vcolors).map(|c| VertexColoring::new(palette(&c), c)).transpose()?;
    Ok(GraphFile { graph: g, edge_coloring, vertex_coloring, terminals })
}
