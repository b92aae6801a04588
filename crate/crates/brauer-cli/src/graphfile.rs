//! The GraphFile text format.
//!
//! ```text
//! # comments run to the end of the line
//! halfedges: 1+ 1- 2+ 2- 3+ 3- 4+ 4-
//! pairing: (1+ 1-)(2+ 2-)(3+ 3-)(4+ 4-)
//! orientation: (1- 4- 3- 2-)(2+ 3+)
//! multiplicity:
//!   1+ = 2
//!   2+ = 2
//! grading mod 2:
//!   1+ = 1
//!   3+ = 1
//! edges:
//!   a = 1+
//! ```
//!
//! Section bodies may sit on the header line or on the following lines.
//! Half-edges missing from `pairing` are legs, those missing from
//! `orientation` are σ-fixed. A multiplicity applies to the whole σ-orbit of
//! the named half-edge. `edges` gives extra names for edges, each pointing at
//! one of the edge's half-edges.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use brauer::graph::grading_modulus;
use brauer::perm::Perm;
use brauer::{BrauerGraph, Grading};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: BrauerGraph,
    pub grading: Option<Grading>,
    /// Extra edge names, mapped to a half-edge of the edge.
    pub aliases: BTreeMap<String, String>,
}

impl GraphFile {
    pub fn new(graph: BrauerGraph) -> GraphFile {
        GraphFile { graph, grading: None, aliases: BTreeMap::new() }
    }

    pub fn with_grading(mut self, grading: Grading) -> GraphFile {
        self.grading = Some(grading);
        self
    }

    /// Half-edges of the listed edges; aliases are tried first.
    pub fn edge_set(&self, list: &[String]) -> brauer::Result<brauer::graph::HalfEdgeSet> {
        let resolved: Vec<&str> = list.iter().map(|e| self.aliases.get(e).map(String::as_str).unwrap_or(e)).collect();
        self.graph.edge_subset(&resolved)
    }
}

#[derive(Clone, Debug)]
struct Token {
    text: String,
    line: usize,
    col: usize,
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse { line, column: col, message: msg.into() }
}

/// Splits a line into words and the punctuation `( ) = ,`, with 1-based columns.
fn tokenize(line: &str, line_no: usize, out: &mut Vec<Token>) {
    let mut cur = String::new();
    let mut start = 0;
    let flush = |cur: &mut String, start: usize, out: &mut Vec<Token>| {
        if !cur.is_empty() {
            out.push(Token { text: std::mem::take(cur), line: line_no, col: start });
        }
    };
    for (k, ch) in line.chars().enumerate() {
        let col = k + 1;
        if ch == '#' {
            break;
        }
        if ch.is_whitespace() {
            flush(&mut cur, start, out);
        } else if "()=,".contains(ch) {
            flush(&mut cur, start, out);
            out.push(Token { text: ch.to_string(), line: line_no, col });
        } else {
            if cur.is_empty() {
                start = col;
            }
            cur.push(ch);
        }
    }
    flush(&mut cur, start, out);
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Section {
    HalfEdges,
    Pairing,
    Orientation,
    Multiplicity,
    Grading,
    Edges,
}

fn section_of(word: &str) -> Option<Section> {
    Some(match word {
        "halfedges" => Section::HalfEdges,
        "pairing" => Section::Pairing,
        "orientation" => Section::Orientation,
        "multiplicity" => Section::Multiplicity,
        "grading" => Section::Grading,
        "edges" => Section::Edges,
        _ => return None,
    })
}

struct Body {
    header: Token,
    modulus: Option<u32>,
    tokens: Vec<Token>,
}

fn split_sections(text: &str) -> Result<BTreeMap<Section, Body>, CliError> {
    let mut sections: BTreeMap<Section, Body> = BTreeMap::new();
    let mut current: Option<Section> = None;
    for (k, line) in text.lines().enumerate() {
        let line_no = k + 1;
        let content = line.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        let indent = content.len() - trimmed.len();
        if let Some(colon) = trimmed.find(':') {
            let head = &trimmed[..colon];
            let words: Vec<&str> = head.split_whitespace().collect();
            let col = line[..indent].chars().count() + 1;
            let sec = words.first().and_then(|w| section_of(w)).ok_or_else(|| {
                err(line_no, col, format!("unknown section `{}`", head.trim()))
            })?;
            let header = Token { text: words[0].to_string(), line: line_no, col };
            let modulus = match (sec, &words[1..]) {
                (_, []) => None,
                (Section::Grading, ["mod", n]) => {
                    let m: u32 = n.parse().ok().filter(|&m| m > 0).ok_or_else(|| {
                        err(line_no, col, format!("bad grading modulus `{n}`"))
                    })?;
                    Some(m)
                }
                _ => return Err(err(line_no, col, format!("malformed section header `{}`", head.trim()))),
            };
            if sections.contains_key(&sec) {
                return Err(err(line_no, col, format!("section `{}` appears twice", words[0])));
            }
            let mut tokens = Vec::new();
            // Keep columns relative to the full line.
            let rest_start = indent + colon + 1;
            let pad: String = line[..rest_start].chars().map(|_| ' ').collect();
            tokenize(&format!("{pad}{}", &content[rest_start..]), line_no, &mut tokens);
            sections.insert(sec, Body { header, modulus, tokens });
            current = Some(sec);
        } else if !trimmed.is_empty() {
            let Some(sec) = current else {
                return Err(err(line_no, indent + 1, "text before the first section"));
            };
            tokenize(content, line_no, &mut sections.get_mut(&sec).expect("current section").tokens);
        }
    }
    Ok(sections)
}

fn parse_cycles(body: &Body, index: &BTreeMap<String, usize>, n: usize) -> Result<Perm, CliError> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut open: Option<Vec<usize>> = None;
    let mut last = &body.header;
    for t in &body.tokens {
        last = t;
        match (t.text.as_str(), &mut open) {
            ("(", None) => open = Some(Vec::new()),
            ("(", Some(_)) => return Err(err(t.line, t.col, "nested parenthesis")),
            (")", Some(c)) => {
                if c.is_empty() {
                    return Err(err(t.line, t.col, "empty cycle"));
                }
                cycles.push(std::mem::take(c));
                open = None;
            }
            (")", None) => return Err(err(t.line, t.col, "unmatched `)`")),
            ("=" | ",", _) => return Err(err(t.line, t.col, format!("unexpected `{}`", t.text))),
            (name, Some(c)) => {
                let h = *index.get(name).ok_or_else(|| err(t.line, t.col, format!("unknown half-edge `{name}`")))?;
                if !seen.insert(h) {
                    return Err(err(t.line, t.col, format!("`{name}` appears in two cycles")));
                }
                c.push(h);
            }
            (name, None) => return Err(err(t.line, t.col, format!("`{name}` outside a cycle"))),
        }
    }
    if open.is_some() {
        return Err(err(last.line, last.col, "unclosed cycle"));
    }
    Perm::from_cycles(n, &cycles).map_err(|e| err(body.header.line, body.header.col, e.to_string()))
}

/// `name = integer` items separated by newlines or commas.
fn parse_assignments(body: &Body) -> Result<Vec<(Token, Token)>, CliError> {
    let mut out = Vec::new();
    let toks: Vec<&Token> = body.tokens.iter().filter(|t| t.text != ",").collect();
    let mut k = 0;
    while k < toks.len() {
        let name = toks[k];
        match (toks.get(k + 1), toks.get(k + 2)) {
            (Some(eq), Some(value)) if eq.text == "=" => {
                out.push((name.clone(), (*value).clone()));
                k += 3;
            }
            _ => return Err(err(name.line, name.col, "expected `name = value`")),
        }
    }
    Ok(out)
}

fn parse_int(t: &Token) -> Result<i64, CliError> {
    t.text.parse().map_err(|_| err(t.line, t.col, format!("expected an integer, found `{}`", t.text)))
}

pub fn parse(text: &str) -> Result<GraphFile, CliError> {
    let sections = split_sections(text)?;
    let mut names: Vec<String> = Vec::new();
    let mut index: BTreeMap<String, usize> = BTreeMap::new();
    if let Some(body) = sections.get(&Section::HalfEdges) {
        for t in &body.tokens {
            if "()=,".contains(t.text.as_str()) {
                return Err(err(t.line, t.col, format!("unexpected `{}`", t.text)));
            }
            if index.insert(t.text.clone(), names.len()).is_some() {
                return Err(err(t.line, t.col, format!("duplicate half-edge `{}`", t.text)));
            }
            names.push(t.text.clone());
        }
    } else if sections.values().any(|b| !b.tokens.is_empty()) {
        return Err(err(1, 1, "missing `halfedges` section"));
    }
    let n = names.len();
    let none = Body { header: Token { text: String::new(), line: 1, col: 1 }, modulus: None, tokens: Vec::new() };
    let iota = parse_cycles(sections.get(&Section::Pairing).unwrap_or(&none), &index, n)?;
    if let Some(body) = sections.get(&Section::Pairing) {
        for c in iota.cycles() {
            if c.len() > 2 {
                return Err(err(body.header.line, body.header.col, "pairing cycles have at most two half-edges"));
            }
        }
    }
    let sigma = parse_cycles(sections.get(&Section::Orientation).unwrap_or(&none), &index, n)?;

    let mut mult: Vec<Option<(u32, Token)>> = vec![None; n];
    if let Some(body) = sections.get(&Section::Multiplicity) {
        for (name, value) in parse_assignments(body)? {
            let h = *index.get(&name.text).ok_or_else(|| err(name.line, name.col, format!("unknown half-edge `{}`", name.text)))?;
            let m = parse_int(&value)?;
            if m <= 0 {
                return Err(err(value.line, value.col, format!("bad multiplicity {m}")));
            }
            for x in sigma.orbit(h) {
                if let Some((old, _)) = &mult[x] {
                    if *old != m as u32 {
                        return Err(err(value.line, value.col, format!(
                            "bad multiplicity: `{}` is on a vertex that already has multiplicity {old}",
                            name.text
                        )));
                    }
                }
                mult[x] = Some((m as u32, value.clone()));
            }
        }
    }
    let mult: Vec<u32> = mult.into_iter().map(|m| m.map_or(1, |(v, _)| v)).collect();
    let graph = BrauerGraph::new(names.clone(), iota, sigma, mult).map_err(|e| err(1, 1, e.to_string()))?;

    let grading = match sections.get(&Section::Grading) {
        None => None,
        Some(body) => {
            let modulus = body.modulus.unwrap_or_else(|| grading_modulus(&graph));
            let mut d = vec![0i64; graph.len()];
            for (name, value) in parse_assignments(body)? {
                let h = graph
                    .index_of(&name.text)
                    .ok_or_else(|| err(name.line, name.col, format!("unknown half-edge `{}`", name.text)))?;
                d[h] = parse_int(&value)?;
            }
            Some(Grading::new(modulus, &d))
        }
    };

    let mut aliases = BTreeMap::new();
    if let Some(body) = sections.get(&Section::Edges) {
        for (name, target) in parse_assignments(body)? {
            if graph.index_of(&target.text).is_none() {
                return Err(err(target.line, target.col, format!("unknown half-edge `{}`", target.text)));
            }
            aliases.insert(name.text.clone(), target.text.clone());
        }
    }
    Ok(GraphFile { graph, grading, aliases })
}

fn cycles_text(g: &BrauerGraph, p: &Perm) -> String {
    p.cycles().iter().map(|c| format!("({})", g.names_of(c).join(" "))).collect()
}

/// Deterministic text form; `parse(emit(f)) == f`.
pub fn emit(f: &GraphFile) -> String {
    let g = &f.graph;
    let mut s = String::new();
    writeln!(s, "halfedges: {}", g.names().join(" ")).unwrap();
    writeln!(s, "pairing: {}", cycles_text(g, g.iota())).unwrap();
    writeln!(s, "orientation: {}", cycles_text(g, g.sigma())).unwrap();
    let heavy: Vec<usize> = g.vertices().circ.iter().filter(|v| v.multiplicity != 1).map(|v| v.half_edges[0]).collect();
    if !heavy.is_empty() {
        writeln!(s, "multiplicity:").unwrap();
        for h in heavy {
            writeln!(s, "  {} = {}", g.name(h), g.mult(h)).unwrap();
        }
    }
    if let Some(d) = &f.grading {
        writeln!(s, "grading mod {}:", d.modulus()).unwrap();
        for h in 0..g.len() {
            if d.degree(h) != 0 {
                writeln!(s, "  {} = {}", g.name(h), d.degree(h)).unwrap();
            }
        }
    }
    if !f.aliases.is_empty() {
        writeln!(s, "edges:").unwrap();
        for (a, h) in &f.aliases {
            writeln!(s, "  {a} = {h}").unwrap();
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use brauer::samples;

    const EX1: &str = "halfedges: 1+ 1- 2+ 2- 3+ 3- 4+ 4-
pairing: (1+ 1-)(2+ 2-)(3+ 3-)(4+ 4-)
orientation: (1- 4- 3- 2-)(2+ 3+)
multiplicity:
  1+ = 2
  2+ = 2
  3+ = 2
";

    #[test]
    fn parses_ex1() {
        let f = parse(EX1).unwrap();
        assert_eq!(f.graph, samples::ex1());
        assert_eq!(f.grading, None);
        assert_eq!(parse(&emit(&f)).unwrap(), f);
    }

    #[test]
    fn parses_ex2_legs() {
        let text = "halfedges: 1+ 1- 2 3 4+ 4- 5+ 5-\npairing: (1+ 1-)(4+ 4-)(5+ 5-)\n\
                    orientation: (1- 3 2)(1+ 4+ 5+)\nmultiplicity: 4- = 3, 3 = 2, 1- = 2\n";
        let f = parse(text).unwrap();
        assert_eq!(f.graph, samples::ex2());
        assert!(f.graph.is_skew());
    }

    #[test]
    fn empty_file_is_the_empty_graph() {
        let f = parse("halfedges:\n").unwrap();
        assert!(f.graph.is_empty());
        assert!(f.graph.validate().is_valid());
        assert!(parse("").unwrap().graph.is_empty());
    }

    #[test]
    fn grading_and_aliases_round_trip() {
        let text = format!("{EX1}grading mod 2:\n  1+ = 1\n  3+ = 1\nedges:\n  a = 4-\n");
        let f = parse(&text).unwrap();
        assert_eq!(f.grading, Some(samples::ex1_grading()));
        assert_eq!(f.edge_set(&["a".into()]).unwrap(), f.graph.edge_subset(&["4"]).unwrap());
        assert_eq!(parse(&emit(&f)).unwrap(), f);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse("halfedges: a b\npairing: (a c)\n").unwrap_err();
        assert_eq!(e.position(), Some((2, 13)));
        let e = parse("halfedges: a b\norientation: (a b)\n  (b)\n").unwrap_err();
        assert_eq!(e.position(), Some((3, 4)));
        assert!(e.to_string().contains("two cycles"));
        let e = parse("halfedges: a b\norientation: (a b)\nmultiplicity:\n  a = 2\n  b = 3\n").unwrap_err();
        assert_eq!(e.position(), Some((5, 7)));
        assert!(e.to_string().contains("bad multiplicity"));
        let e = parse("halfedges: a\nmultiplicity: a = 0\n").unwrap_err();
        assert_eq!(e.position(), Some((2, 19)));
        let e = parse("halfedges: a\nfoo: 1\n").unwrap_err();
        assert_eq!(e.position(), Some((2, 1)));
    }
}
