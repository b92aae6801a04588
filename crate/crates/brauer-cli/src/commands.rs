use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use brauer::algebra::{
    algebra_of, bga_table, dimension_formula, path_quotient, skew_bga_table, trivial_extension, Algebra, AlgebraTable,
};
use brauer::covering::{check_cover_commutes, cover, default_grading};
use brauer::graph::HalfEdgeSet;
use brauer::homotopy::{idempotent_edges, mutation_object, verify_mutation};
use brauer::linalg::SVec;
use brauer::moves::move_set;
use brauer::presentation::{admissible_cut, is_gentle, relations, Quiver};
use brauer::{BrauerGraph, GradedGraph};

use crate::dot::presentation_dot;
use crate::error::CliError;
use crate::graphfile::{emit, parse, GraphFile};

#[derive(Parser, Debug)]
#[command(name = "brauer", version, about = "Brauer graphs, Kauer moves, coverings and their algebras")]
pub struct Cli {
    /// Print reports as JSON and errors as JSON on stderr.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the graph invariants (and the grading, if present).
    Validate { file: PathBuf },
    /// Edge, vertex and face counts, perimeters, multiplicities, bipartiteness.
    Invariants { file: PathBuf },
    /// Quiver of the algebra.
    Quiver {
        file: PathBuf,
        /// Also write the quiver with its relations as DOT; `-` for stdout.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Quiver and relations.
    Relations { file: PathBuf },
    /// Dimension of the algebra.
    Dim { file: PathBuf },
    /// Cartan matrix `dim e_i A e_j` and its determinant.
    Cartan { file: PathBuf },
    /// Move the listed edges.
    Move {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        edges: Vec<String>,
        #[arg(long, value_enum, default_value_t = GradingSource::Default)]
        grading: GradingSource,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Galois covering of the graded graph.
    Cover {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare the cover of the moved graph with the move of the cover.
    CheckCommute {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        edges: Vec<String>,
    },
    /// Left mutation of the algebra at the listed edges.
    Mutate {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        edges: Vec<String>,
        /// Check silting, tilting and compare End(T) with the moved graph's algebra.
        #[arg(long)]
        verify: bool,
    },
    /// Cut algebra for the listed half-edges (one per σ-orbit).
    Cut {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        delta: Vec<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GradingSource {
    /// A grading adapted to the moved edges.
    Default,
    /// The grading stored in the file.
    File,
}

/// Result of a command. `failure` is set when a check ran and failed.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub json: Value,
    pub failure: Option<String>,
}

impl Output {
    fn ok(text: String, json: Value) -> Output {
        Output { text, json, failure: None }
    }
}

pub fn read_graph_file(path: &Path) -> Result<GraphFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    parse(&text)
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "✓"
    } else {
        "✗"
    }
}

fn valid_graph(f: &GraphFile) -> Result<&BrauerGraph, CliError> {
    f.graph.ensure_valid()?;
    Ok(&f.graph)
}

/// The file's grading if present, else the default grading for `hp`.
fn graded(f: &GraphFile, hp: &HalfEdgeSet, source: GradingSource) -> Result<GradedGraph, CliError> {
    let g = valid_graph(f)?;
    let grading = match (source, &f.grading) {
        (GradingSource::File, Some(d)) => d.clone(),
        (GradingSource::File, None) => return Err(CliError::Check("the file has no grading section".into())),
        (GradingSource::Default, _) => default_grading(g, hp)?,
    };
    Ok(GradedGraph::new(g.clone(), grading)?)
}

fn algebra(f: &GraphFile) -> Result<AlgebraTable, CliError> {
    let g = valid_graph(f)?;
    Ok(match &f.grading {
        Some(d) if g.is_skew() => skew_bga_table(g, d)?,
        _ => algebra_of(g)?,
    })
}

fn element(a: &AlgebraTable, v: &SVec) -> String {
    let mut s = String::new();
    for (k, &(b, c)) in v.iter().enumerate() {
        let (num, den) = (*c.numer(), *c.denom());
        let sign = if num < 0 { "-" } else if k > 0 { "+" } else { "" };
        if k > 0 {
            s.push(' ');
        }
        s.push_str(sign);
        if k > 0 && !sign.is_empty() {
            s.push(' ');
        }
        let abs = num.abs();
        if den != 1 {
            write!(s, "{abs}/{den}·").unwrap();
        } else if abs != 1 {
            write!(s, "{abs}·").unwrap();
        }
        s.push_str(a.label(b));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn cartan_text(labels: &[String], c: &[Vec<usize>]) -> String {
    let w = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
    let mut s = String::new();
    for (l, row) in labels.iter().zip(c) {
        let pad = w - l.chars().count();
        writeln!(s, "{l}{}  {}", " ".repeat(pad), row.iter().map(|x| format!("{x:>2}")).collect::<Vec<_>>().join(" ")).unwrap();
    }
    s
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Validate { file } => {
            let f = read_graph_file(file)?;
            let report = f.graph.validate();
            let mut text = report.to_string();
            if !text.ends_with('\n') {
                text.push('\n');
            }
            let mut failure = (!report.is_valid()).then(|| "graph is invalid".to_string());
            let mut grading_ok = Value::Null;
            if let (Some(d), true) = (&f.grading, report.is_valid()) {
                match brauer::graph::check_grading(&f.graph, d) {
                    Ok(()) => {
                        text.push_str("grading: ok\n");
                        grading_ok = json!(true);
                    }
                    Err(e) => {
                        writeln!(text, "grading: {e}").unwrap();
                        grading_ok = json!(false);
                        failure = Some(e.to_string());
                    }
                }
            }
            let json = json!({ "valid": report.is_valid(), "report": report.to_string(), "grading_ok": grading_ok });
            Ok(Output { text, json, failure })
        }
        Command::Invariants { file } => {
            let f = read_graph_file(file)?;
            let g = valid_graph(&f)?;
            let inv = g.oz_invariants();
            let json = json!({
                "edges": inv.edge_count,
                "circ_vertices": inv.circ_vertex_count,
                "cross_vertices": inv.cross_vertex_count,
                "faces": inv.face_count,
                "perimeters": inv.perimeter_multiset,
                "multiplicities": inv.multiplicity_multiset,
                "bipartite": inv.bipartite,
            });
            let mut text = inv.to_string();
            if !text.ends_with('\n') {
                text.push('\n');
            }
            Ok(Output::ok(text, json))
        }
        Command::Quiver { file, dot } => {
            let f = read_graph_file(file)?;
            let g = valid_graph(&f)?;
            let p = relations(g);
            let q: &Quiver = &p.quiver;
            let mut text = String::new();
            writeln!(text, "vertices: {}", (0..q.vertices.len()).map(|v| q.vertex_label(v)).collect::<Vec<_>>().join(" ")).unwrap();
            for (k, a) in q.arrows.iter().enumerate() {
                writeln!(text, "{}: {} -> {}", q.arrow_label(k), q.vertex_label(a.source), q.vertex_label(a.target)).unwrap();
            }
            let name = file.file_stem().map(|s| s.to_string_lossy().to_string()).unwrap_or_else(|| "quiver".into());
            match dot.as_deref() {
                Some(p2) if p2 == Path::new("-") => text = presentation_dot(&name, &p),
                Some(p2) => write_file(p2, &presentation_dot(&name, &p))?,
                None => {}
            }
            let json = json!({
                "vertices": (0..q.vertices.len()).map(|v| q.vertex_label(v)).collect::<Vec<_>>(),
                "arrows": q.arrows.iter().enumerate().map(|(k, a)| json!({
                    "name": q.arrow_label(k),
                    "source": q.vertex_label(a.source),
                    "target": q.vertex_label(a.target),
                })).collect::<Vec<_>>(),
            });
            Ok(Output::ok(text, json))
        }
        Command::Relations { file } => {
            let f = read_graph_file(file)?;
            let g = valid_graph(&f)?;
            let p = relations(g);
            let rels: Vec<String> = p.relations.iter().map(|r| r.display(&p.quiver).to_string()).collect();
            Ok(Output::ok(p.to_string(), json!({ "relations": rels })))
        }
        Command::Dim { file } => {
            let f = read_graph_file(file)?;
            let a = algebra(&f)?;
            let mut text = format!("dim: {}\n", a.dim());
            let mut json = json!({ "dim": a.dim() });
            if !f.graph.is_skew() {
                let formula = dimension_formula(&f.graph);
                writeln!(text, "vertex formula: {formula}").unwrap();
                json["formula"] = json!(formula);
            }
            Ok(Output::ok(text, json))
        }
        Command::Cartan { file } => {
            let f = read_graph_file(file)?;
            let a = algebra(&f)?;
            let labels: Vec<String> = a.idempotents().iter().map(|(l, _)| l.clone()).collect();
            let c = a.cartan();
            let det = a.cartan_det();
            let text = format!("{}det: {det}\n", cartan_text(&labels, &c));
            Ok(Output::ok(text, json!({ "labels": labels, "cartan": c, "det": det.to_string() })))
        }
        Command::Move { file, edges, grading, output } => {
            let f = read_graph_file(file)?;
            let hp = f.edge_set(edges)?;
            let g = graded(&f, &hp, *grading)?;
            let moved = move_set(&g, &hp)?;
            let (graph, d) = moved.into_parts();
            let out = GraphFile { graph, grading: Some(d), aliases: f.aliases.clone() };
            let text = emit(&out);
            let json = json!({ "file": text });
            if let Some(p) = output {
                write_file(p, &text)?;
                return Ok(Output::ok(String::new(), json));
            }
            Ok(Output::ok(text, json))
        }
        Command::Cover { file, output } => {
            let f = read_graph_file(file)?;
            let source = if f.grading.is_some() { GradingSource::File } else { GradingSource::Default };
            let g = graded(&f, &HalfEdgeSet::new(), source)?;
            let c = cover(&g)?;
            let text = emit(&GraphFile::new(c.total().clone()));
            let json = json!({ "group_order": c.group_order(), "file": text });
            if let Some(p) = output {
                write_file(p, &text)?;
                return Ok(Output::ok(String::new(), json));
            }
            Ok(Output::ok(text, json))
        }
        Command::CheckCommute { file, edges } => {
            let f = read_graph_file(file)?;
            let hp = f.edge_set(edges)?;
            let source = if f.grading.is_some() { GradingSource::File } else { GradingSource::Default };
            let g = graded(&f, &hp, source)?;
            let r = check_cover_commutes(&g, &hp)?;
            let mut text = format!("commutes: {}\n", r.commutes);
            if !r.mismatches.is_empty() {
                writeln!(text, "mismatches: {}", r.mismatches.join(" ")).unwrap();
            }
            let json = json!({ "commutes": r.commutes, "mismatches": r.mismatches });
            let failure = (!r.commutes).then(|| "cover and move do not commute".to_string());
            Ok(Output { text, json, failure })
        }
        Command::Mutate { file, edges, verify } => {
            let f = read_graph_file(file)?;
            let g = valid_graph(&f)?;
            let hp = f.edge_set(edges)?;
            let a = algebra_of(g)?;
            let moved: Vec<bool> = idempotent_edges(g).iter().map(|e| hp.contains(e)).collect();
            let t = mutation_object(&a, &moved);
            let mut text = String::new();
            let mut summands = Vec::new();
            for x in &t {
                let line = if x.is_stalk() {
                    format!("{}: P({})", x.label, x.label)
                } else {
                    let targets: Vec<String> = x
                        .deg0
                        .iter()
                        .zip(&x.differential)
                        .map(|(&y, row)| format!("P({}) [{}]", a.idempotents()[y].0, element(&a, &row[0])))
                        .collect();
                    let targets = if targets.is_empty() { "0".to_string() } else { targets.join(" ⊕ ") };
                    format!("{}: P({}) -> {targets}", x.label, x.label)
                };
                writeln!(text, "{line}").unwrap();
                summands.push(line);
            }
            let mut json = json!({ "summands": summands });
            let mut failure = None;
            if *verify {
                let r = verify_mutation(g, &hp)?;
                writeln!(text, "silting: {}", mark(r.presilting)).unwrap();
                writeln!(text, "tilting: {}", mark(r.tilting)).unwrap();
                writeln!(text, "left minimal: {}", mark(r.minimal)).unwrap();
                writeln!(text, "dim End(T) = {}, dim B' = {} {}", r.end_dim, r.moved_dim, mark(r.end_dim == r.moved_dim)).unwrap();
                writeln!(text, "cartan matrices equal: {}", mark(r.cartan_equal)).unwrap();
                json["verify"] = json!({
                    "silting": r.presilting,
                    "tilting": r.tilting,
                    "left_minimal": r.minimal,
                    "end_dim": r.end_dim,
                    "moved_dim": r.moved_dim,
                    "cartan_equal": r.cartan_equal,
                    "verified": r.verified(),
                });
                if !r.verified() {
                    failure = Some("mutation does not match the moved graph".into());
                }
            }
            Ok(Output { text, json, failure })
        }
        Command::Cut { file, delta } => {
            let f = read_graph_file(file)?;
            let g = valid_graph(&f)?;
            let delta = g.subset(delta)?;
            let p = admissible_cut(g, &delta)?;
            let cut = path_quotient(&p)?.table;
            let triv = trivial_extension(&cut).dim();
            let b = if g.is_skew() { algebra_of(g)?.dim() } else { bga_table(g)?.dim() };
            let mut text = p.to_string();
            let gentle = is_gentle(&p);
            if !g.is_skew() {
                writeln!(text, "gentle: {}", mark(gentle)).unwrap();
            }
            writeln!(text, "dim B_Δ = {}", cut.dim()).unwrap();
            writeln!(text, "dim Triv(B_Δ) = {triv}, dim B = {b} {}", mark(triv == b)).unwrap();
            let json = json!({ "gentle": gentle, "cut_dim": cut.dim(), "triv_dim": triv, "dim": b });
            let failure = (triv != b).then(|| "dim Triv(B_Δ) differs from dim B".to_string());
            Ok(Output { text, json, failure })
        }
    }
}

