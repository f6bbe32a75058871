use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use discon::cnf::{emit_dimacs, parse_dimacs, CnfFormula};
use discon::constructive::{classify_indep_deg3, color_max_deg3, Classification};
use discon::cuts::{find_matching_cut, EdgeColoring};
use discon::generate::{self, rng};
use discon::graph::{Multigraph, Pattern, VertexId};
use discon::harness::{
    build_rvd_variant, xcheck_batch, xcheck_nae, xcheck_padded, xcheck_sat_rvd, CrossCheckReport,
    RunConfig, RvdVariant,
};
use discon::io::{emit_dot, emit_edge_list, parse_edge_list, GraphFile};
use discon::reductions::{build_hphi_prime, edge_to_4cycle, pad_with_path};
use discon::solvers::{
    is_proper_disconnected, is_rainbow_vertex_disconnected, pd_exact, rvd_exact, Budgets, PairCheck,
};
use discon::Error;

/// Proper disconnection and rainbow vertex-disconnection toolkit.
///
/// Exit codes: 0 success or agreement, 1 verified negative answer, 2 budget
/// refusal, 3 verification failure or cross-check disagreement, 4 invalid
/// input or usage.
#[derive(Parser)]
#[command(name = "discon", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Global {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest edge count the exact pd search accepts.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    budget_edges: Option<u64>,
    /// Largest vertex count the exact rvd search accepts.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    budget_vertices: Option<u64>,
    /// Write the main output here instead of stdout (a directory for `gen`).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Also write the resulting graph as DOT.
    #[arg(long, global = true)]
    dot: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact proper disconnection number with a witness coloring.
    Pd { graph: PathBuf },
    /// Exact rainbow vertex-disconnection number with a witness coloring.
    Rvd { graph: PathBuf },
    /// Check that the file's edge coloring is proper disconnected.
    VerifyPd { graph: PathBuf },
    /// Check that the file's vertex coloring is rainbow vertex-disconnected.
    VerifyRvd { graph: PathBuf },
    /// Find a matching cut between two vertices.
    MatchingCut {
        graph: PathBuf,
        /// 1-based source vertex (default: first terminal in the file).
        #[arg(long)]
        from: Option<usize>,
        /// 1-based target vertex (default: second terminal in the file).
        #[arg(long)]
        to: Option<usize>,
    },
    /// Two-color a connected graph of maximum degree at most 3.
    ColorDeg3 {
        graph: PathBuf,
        /// Print the construction steps as comments.
        #[arg(long)]
        trace: bool,
    },
    /// Decide pd in {1, 2} for graphs whose degree-3 vertices are independent.
    Classify { graph: PathBuf },
    /// Build a reduction artifact.
    #[command(subcommand)]
    Reduce(Reduce),
    /// Cross-check a reduction against the brute-force oracle.
    Xcheck(Xcheck),
    /// Generate instances.
    Gen(Gen),
}

#[derive(Subcommand)]
enum Reduce {
    /// NAE-3-SAT to u-v matching cut (H'_phi).
    Nae { cnf: PathBuf },
    /// 3-SAT to s-t rainbow vertex-cut.
    RvdBase { cnf: PathBuf },
    /// As rvd-base with maximum degree 3.
    RvdDeg3 { cnf: PathBuf },
    /// As rvd-base, bipartite.
    RvdBipartite { cnf: PathBuf },
    /// Replace every edge by a 4-cycle.
    Star4cycle { graph: PathBuf },
    /// H'_phi padded with a path so the coloring uses k colors.
    Pad {
        cnf: PathBuf,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Nae,
    Pad,
    Rvd,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Base,
    Deg3,
    Bipartite,
    All,
}

#[derive(Args)]
struct Xcheck {
    suite: Suite,
    /// Check this DIMACS formula instead of generated ones.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Check every formula with the given size instead of random ones.
    #[arg(long)]
    exhaustive: bool,
    #[arg(long, default_value_t = 20)]
    count: usize,
    #[arg(long, default_value_t = 3)]
    vars: usize,
    #[arg(long, default_value_t = 2)]
    clauses: usize,
    /// Color count for the pad suite.
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, value_enum, default_value_t = VariantArg::All)]
    variant: VariantArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    RandomCnf,
    RandomConnectedGraph,
    CubicCatalog,
    IndepDeg3Class,
}

#[derive(Args)]
struct Gen {
    kind: GenKind,
    #[arg(long, default_value_t = 1)]
    count: usize,
    #[arg(long, default_value_t = 3)]
    vars: usize,
    #[arg(long, default_value_t = 2)]
    clauses: usize,
    /// Vertex count for random graphs.
    #[arg(long, default_value_t = 8)]
    order: usize,
    /// Extra edge probability for random connected graphs.
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    /// Extra edge attempts for the degree-3 class.
    #[arg(long, default_value_t = 4)]
    extra: usize,
}

struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } => 2,
            Error::VerificationFailed(_) => 3,
            _ => 4,
        };
        Self { code, msg: e.to_string() }
    }
}

fn input_error(msg: String) -> Failure {
    Failure { code: 4, msg }
}

type Outcome = Result<Output, Failure>;

#[derive(Default)]
struct Output {
    text: String,
    dot: Option<GraphFile>,
    /// Exit code 1 (verified negative) or 3 (disagreement) instead of 0.
    code: u8,
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<GraphFile, Failure> {
    parse_edge_list(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_cnf(path: &Path) -> Result<CnfFormula, Failure> {
    parse_dimacs(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn budgets(g: &Global) -> Budgets {
    let mut b = Budgets::default();
    if let Some(e) = g.budget_edges {
        b.pd_max_edges = e as usize;
    }
    if let Some(v) = g.budget_vertices {
        b.rvd_max_vertices = v as usize;
    }
    b
}

fn name(g: &Multigraph, v: VertexId) -> String {
    g.display_vertex(v)
}

fn vertex_arg(g: &Multigraph, v: usize) -> Result<VertexId, Failure> {
    if v == 0 || v > g.vertex_count() {
        return Err(input_error(format!("vertex {v} out of range 1..={}", g.vertex_count())));
    }
    Ok(VertexId(v - 1))
}

fn graph_output(header: String, file: GraphFile) -> Output {
    let text = format!("{header}{}", emit_edge_list(&file));
    Output { text, dot: Some(file), code: 0 }
}

fn cmd_pd(global: &Global, path: &Path) -> Outcome {
    let mut f = load_graph(path)?;
    let r = pd_exact(&f.graph, &budgets(global))?;
    f.edge_coloring = Some(r.witness);
    Ok(graph_output(format!("c pd {}\n", r.value), f))
}

fn cmd_rvd(global: &Global, path: &Path) -> Outcome {
    let mut f = load_graph(path)?;
    let r = rvd_exact(&f.graph, &budgets(global))?;
    f.vertex_coloring = Some(r.witness);
    Ok(graph_output(format!("c rvd {}\n", r.value), f))
}

fn verdict<C>(g: &Multigraph, what: &str, k: usize, check: PairCheck<C>) -> Output {
    match check.failing_pair() {
        None => Output { text: format!("{what} yes colors {k}\n"), ..Output::default() },
        Some((a, b)) => Output {
            text: format!("{what} no pair {} {}\n", name(g, a), name(g, b)),
            code: 1,
            ..Output::default()
        },
    }
}

fn cmd_verify_pd(path: &Path) -> Outcome {
    let f = load_graph(path)?;
    let c =
        f.edge_coloring.as_ref().ok_or_else(|| input_error("file has no edge coloring".into()))?;
    let check = is_proper_disconnected(&f.graph, c)?;
    let mut out = verdict(&f.graph, "proper-disconnected", c.distinct_colors(), check);
    out.dot = Some(f);
    Ok(out)
}

fn cmd_verify_rvd(path: &Path) -> Outcome {
    let f = load_graph(path)?;
    let c = f
        .vertex_coloring
        .as_ref()
        .ok_or_else(|| input_error("file has no vertex coloring".into()))?;
    let check = is_rainbow_vertex_disconnected(&f.graph, c)?;
    let mut out = verdict(&f.graph, "rainbow-vertex-disconnected", c.distinct_colors(), check);
    out.dot = Some(f);
    Ok(out)
}

fn cmd_matching_cut(path: &Path, from: Option<usize>, to: Option<usize>) -> Outcome {
    let f = load_graph(path)?;
    let g = &f.graph;
    let pick =
        |arg: Option<usize>, i: usize| -> Result<VertexId, Failure> {
            match arg {
                Some(v) => vertex_arg(g, v),
                None => f.terminals.get(i).map(|t| t.1).ok_or_else(|| {
                    input_error("give --from and --to or terminals in the file".into())
                }),
            }
        };
    let (x, y) = (pick(from, 0)?, pick(to, 1)?);
    let Some(cert) = find_matching_cut(g, x, y)? else {
        return Ok(Output {
            text: format!("matching-cut none {} {}\n", name(g, x), name(g, y)),
            code: 1,
            ..Output::default()
        });
    };
    let mut text = format!("matching-cut {} {} size {}\n", name(g, x), name(g, y), cert.cut.len());
    let mut colors = vec![1; g.edge_count()];
    for &e in &cert.cut {
        let ed = g.edge(e);
        text.push_str(&format!("cut {} {} {}\n", e.0 + 1, name(g, ed.u), name(g, ed.v)));
        colors[e.0] = 2;
    }
    let mut shown = f.clone();
    shown.edge_coloring = Some(EdgeColoring::new(2, colors)?);
    Ok(Output { text, dot: Some(shown), code: 0 })
}

fn cmd_color_deg3(path: &Path, trace: bool) -> Outcome {
    let mut f = load_graph(path)?;
    let t = color_max_deg3(&f.graph)?;
    let mut header = format!("c colors {}\n", t.coloring.distinct_colors());
    if trace {
        for s in t.steps.iter().filter(|s| s.op != "assign") {
            let vs: Vec<String> = s.vertices.iter().map(|v| v.to_string()).collect();
            let es: Vec<String> = s.edges.iter().map(|e| e.to_string()).collect();
            header.push_str(&format!(
                "c step {} {} [{}] [{}]\n",
                s.depth,
                s.op,
                vs.join(" "),
                es.join(" ")
            ));
        }
    }
    f.edge_coloring = Some(t.coloring);
    Ok(graph_output(header, f))
}

fn cmd_classify(path: &Path) -> Outcome {
    let f = load_graph(path)?;
    let g = &f.graph;
    let text = match classify_indep_deg3(g)? {
        Classification::PdTwo { pattern, witness } => {
            let p = match pattern {
                Pattern::Triangle => "triangle",
                Pattern::K23 => "k23",
            };
            let vs: Vec<String> = witness.iter().map(|&v| name(g, v)).collect();
            format!("pd 2 {p} {}\n", vs.join(" "))
        }
        Classification::PdOne { certificates, fallbacks } => {
            format!("pd 1 pairs {} fallbacks {}\n", certificates.len(), fallbacks.len())
        }
    };
    Ok(Output { text, dot: Some(f), code: 0 })
}

fn cmd_reduce(r: &Reduce) -> Outcome {
    let (tag, art) = match r {
        Reduce::Nae { cnf } => ("nae", build_hphi_prime(&load_cnf(cnf)?)?),
        Reduce::RvdBase { cnf } => {
            ("rvd-base", build_rvd_variant(&load_cnf(cnf)?, RvdVariant::Base)?)
        }
        Reduce::RvdDeg3 { cnf } => {
            ("rvd-deg3", build_rvd_variant(&load_cnf(cnf)?, RvdVariant::Deg3)?)
        }
        Reduce::RvdBipartite { cnf } => {
            ("rvd-bipartite", build_rvd_variant(&load_cnf(cnf)?, RvdVariant::Bipartite)?)
        }
        Reduce::Star4cycle { graph } => ("star4cycle", edge_to_4cycle(&load_graph(graph)?.graph)?),
        Reduce::Pad { cnf, k } => ("pad", pad_with_path(&build_hphi_prime(&load_cnf(cnf)?)?, *k)?),
    };
    let mut header = format!("c reduction {tag}\n");
    if let Some(phi) = &art.formula {
        header.push_str(&format!("c formula {phi}\n"));
    }
    Ok(graph_output(header, GraphFile::from_artifact(&art)))
}

fn cmd_xcheck(global: &Global, x: &Xcheck) -> Outcome {
    let formulas: Vec<CnfFormula> = if let Some(path) = &x.input {
        vec![load_cnf(path)?]
    } else if x.exhaustive {
        generate::all_formulas(x.vars, x.clauses).collect()
    } else {
        let mut r = rng(global.seed);
        (0..x.count)
            .map(|_| generate::random_cnf(x.vars, x.clauses, &mut r))
            .collect::<Result<_, _>>()?
    };
    let config = RunConfig { budgets: budgets(global), seed: global.seed, ..RunConfig::default() };
    let mut reports: Vec<CrossCheckReport> = Vec::new();
    let decode = !matches!(x.suite, Suite::Pad);
    match x.suite {
        Suite::Nae => reports.extend(xcheck_batch(&formulas, |f| xcheck_nae(f, &config))?),
        Suite::Pad => reports.extend(xcheck_batch(&formulas, |f| xcheck_padded(f, x.k, &config))?),
        Suite::Rvd => {
            let variants: Vec<RvdVariant> = match x.variant {
                VariantArg::Base => vec![RvdVariant::Base],
                VariantArg::Deg3 => vec![RvdVariant::Deg3],
                VariantArg::Bipartite => vec![RvdVariant::Bipartite],
                VariantArg::All => RvdVariant::ALL.to_vec(),
            };
            for v in variants {
                reports.extend(xcheck_batch(&formulas, |f| xcheck_sat_rvd(f, v, &config))?);
            }
        }
    }
    let mut text = String::new();
    let mut failed = 0;
    for r in &reports {
        let ok = r.passed(decode);
        failed += usize::from(!ok);
        text.push_str(&format!(
            "{} {} [{}]\n",
            if ok { "ok" } else { "FAIL" },
            r.summary(),
            r.formula
        ));
    }
    text.push_str(&format!(
        "total {} passed {} failed {}\n",
        reports.len(),
        reports.len() - failed,
        failed
    ));
    Ok(Output { text, dot: None, code: if failed == 0 { 0 } else { 3 } })
}

fn cmd_gen(global: &Global, gen: &Gen) -> Outcome {
    let mut r = rng(global.seed);
    let mut items: Vec<(String, String)> = Vec::new();
    let graph_item = |g: Multigraph| emit_edge_list(&GraphFile::plain(g));
    match gen.kind {
        GenKind::RandomCnf => {
            for i in 0..gen.count {
                let phi = generate::random_cnf(gen.vars, gen.clauses, &mut r)?;
                items.push((format!("random-cnf-{}.cnf", i + 1), emit_dimacs(&phi)));
            }
        }
        GenKind::RandomConnectedGraph => {
            for i in 0..gen.count {
                let g = generate::random_connected_graph(gen.order, gen.p, &mut r)?;
                items.push((format!("random-connected-graph-{}.graph", i + 1), graph_item(g)));
            }
        }
        GenKind::CubicCatalog => {
            for (n, g) in generate::cubic_catalog() {
                items.push((format!("{n}.graph"), graph_item(g)));
            }
        }
        GenKind::IndepDeg3Class => {
            for i in 0..gen.count {
                let g = generate::random_indep_deg3(gen.order, gen.extra, &mut r)?;
                items.push((format!("indep-deg3-{}.graph", i + 1), graph_item(g)));
            }
        }
    }
    let mut text = String::new();
    match &global.out {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|e| input_error(format!("{}: {e}", dir.display())))?;
            for (file, body) in &items {
                write(&dir.join(file), body)?;
                text.push_str(&format!("{file}\n"));
            }
        }
        None => {
            for (file, body) in &items {
                text.push_str(&format!("c instance {file}\n{body}\n"));
            }
        }
    }
    Ok(Output { text, dot: None, code: 0 })
}

fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    match &cli.cmd {
        Cmd::Pd { graph } => cmd_pd(g, graph),
        Cmd::Rvd { graph } => cmd_rvd(g, graph),
        Cmd::VerifyPd { graph } => cmd_verify_pd(graph),
        Cmd::VerifyRvd { graph } => cmd_verify_rvd(graph),
        Cmd::MatchingCut { graph, from, to } => cmd_matching_cut(graph, *from, *to),
        Cmd::ColorDeg3 { graph, trace } => cmd_color_deg3(graph, *trace),
        Cmd::Classify { graph } => cmd_classify(graph),
        Cmd::Reduce(r) => cmd_reduce(r),
        Cmd::Xcheck(x) => cmd_xcheck(g, x),
        Cmd::Gen(gen) => cmd_gen(g, gen),
    }
}

fn finish(cli: &Cli, out: Output) -> Result<u8, Failure> {
    if let (Some(path), Some(file)) = (&cli.global.dot, &out.dot) {
        write(path, &emit_dot(file))?;
    }
    match (&cli.global.out, &cli.cmd) {
        (Some(path), cmd) if !matches!(cmd, Cmd::Gen(_)) => write(path, &out.text)?,
        _ => print!("{}", out.text),
    }
    Ok(out.code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 4 } else { 0 });
        }
    };
    match run(&cli).and_then(|out| finish(&cli, out)) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
