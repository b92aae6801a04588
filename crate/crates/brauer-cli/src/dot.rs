//! DOT output for quivers. Relations go into a comment block.

use std::fmt::Write as _;

use brauer::presentation::Presentation;

fn quoted(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn presentation_dot(name: &str, p: &Presentation) -> String {
    let q = &p.quiver;
    let mut s = String::new();
    writeln!(s, "digraph {} {{", quoted(name)).unwrap();
    if !p.relations.is_empty() {
        writeln!(s, "  /* relations").unwrap();
        for r in &p.relations {
            writeln!(s, "     {}", r.display(q).to_string().replace("*/", "* /")).unwrap();
        }
        writeln!(s, "  */").unwrap();
    }
    for v in 0..q.vertices.len() {
        writeln!(s, "  v{v} [label={}];", quoted(q.vertex_label(v))).unwrap();
    }
    for (k, a) in q.arrows.iter().enumerate() {
        writeln!(s, "  v{} -> v{} [label={}];", a.source, a.target, quoted(q.arrow_label(k))).unwrap();
    }
    writeln!(s, "}}").unwrap();
    s
}
