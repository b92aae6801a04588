//! Quivers with relations for Brauer graph algebras and skew Brauer graph
//! algebras, the presentation of the truncated skew group algebra of a
//! covering, and admissible cuts.
//!
//! Paths are stored in traversal order (first arrow first) and printed
//! right to left, so `α(2-)α(1-)` is `α(1-)` followed by `α(2-)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};

use crate::covering::CoveredGraph;
use crate::error::{Error, Result};
use crate::graph::{BrauerGraph, HalfEdgeSet};
use crate::linalg::{q, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QVertex {
    /// Smallest half-edge of the edge.
    pub edge: usize,
    /// Copy index for edges made of a single leg.
    pub copy: Option<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    pub h: usize,
    pub from: Option<u8>,
    pub to: Option<u8>,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<QVertex>,
    pub arrows: Vec<Arrow>,
    vertex_labels: Vec<String>,
    arrow_labels: Vec<String>,
    vertex_index: BTreeMap<QVertex, usize>,
    arrow_index: BTreeMap<(usize, Option<u8>, Option<u8>), usize>,
}

pub(crate) fn copies(graph: &BrauerGraph, h: usize) -> Vec<Option<u8>> {
    if graph.is_cross(h) {
        vec![Some(0), Some(1)]
    } else {
        vec![None]
    }
}

fn flip(c: Option<u8>) -> Option<u8> {
    c.map(|i| 1 - i)
}

/// Whether `h` induces an arrow: `h` is not σ-fixed, or it is and `m(h) > 1`.
pub fn induces_arrow(graph: &BrauerGraph, h: usize) -> bool {
    !graph.sigma().is_fixed(h) || graph.mult(h) > 1
}

/// `n_×(h)`: legs in the σ-orbit of `h`.
pub fn n_cross(graph: &BrauerGraph, h: usize) -> usize {
    graph.orbit(h).iter().filter(|&&x| graph.is_cross(x)).count()
}

fn copy_suffix(c: Option<u8>) -> String {
    c.map(|i| i.to_string()).unwrap_or_default()
}

impl Quiver {
    pub fn of(graph: &BrauerGraph) -> Quiver {
        Quiver::with_symbol(graph, "α")
    }

    /// Quiver of `graph` with arrows named `<symbol>(h)`.
    pub fn with_symbol(graph: &BrauerGraph, symbol: &str) -> Quiver {
        let mut vertices = Vec::new();
        let mut vertex_labels = Vec::new();
        for e in graph.edges() {
            let h = e[0];
            for c in copies(graph, h) {
                vertices.push(QVertex { edge: h, copy: c });
                let base = graph.edge_label(h);
                vertex_labels.push(match c {
                    Some(i) => format!("{base}_{i}"),
                    None => base,
                });
            }
        }
        let vertex_index: BTreeMap<QVertex, usize> = vertices.iter().enumerate().map(|(k, v)| (*v, k)).collect();
        let mut arrows = Vec::new();
        let mut arrow_labels = Vec::new();
        for h in 0..graph.len() {
            if !induces_arrow(graph, h) {
                continue;
            }
            let s = graph.sigma().apply(h);
            for from in copies(graph, h) {
                for to in copies(graph, s) {
                    let source = vertex_index[&QVertex { edge: graph.edge_of(h), copy: from }];
                    let target = vertex_index[&QVertex { edge: graph.edge_of(s), copy: to }];
                    arrows.push(Arrow { h, from, to, source, target });
                    let idx = if from.is_some() || to.is_some() {
                        format!("[{}>{}]", copy_suffix(from), copy_suffix(to))
                    } else {
                        String::new()
                    };
                    arrow_labels.push(format!("{symbol}({}){idx}", graph.name(h)));
                }
            }
        }
        let arrow_index = arrows.iter().enumerate().map(|(k, a)| ((a.h, a.from, a.to), k)).collect();
        Quiver { vertices, arrows, vertex_labels, arrow_labels, vertex_index, arrow_index }
    }

    pub fn vertex(&self, edge: usize, copy: Option<u8>) -> Option<usize> {
        self.vertex_index.get(&QVertex { edge, copy }).copied()
    }

    pub fn arrow(&self, h: usize, from: Option<u8>, to: Option<u8>) -> Option<usize> {
        self.arrow_index.get(&(h, from, to)).copied()
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertex_labels[v]
    }

    pub fn arrow_label(&self, a: usize) -> &str {
        &self.arrow_labels[a]
    }

    /// Copy of this quiver with arrow names using another symbol.
    pub fn relabeled(&self, graph: &BrauerGraph, symbol: &str) -> Quiver {
        let fresh = Quiver::with_symbol(graph, symbol);
        assert_eq!(fresh.arrows, self.arrows);
        fresh
    }

    /// Quiver with some arrows removed; vertex data is kept.
    pub fn without_arrows(&self, removed: &BTreeSet<usize>) -> (Quiver, Vec<Option<usize>>) {
        let mut map = vec![None; self.arrows.len()];
        let mut arrows = Vec::new();
        let mut arrow_labels = Vec::new();
        for (k, a) in self.arrows.iter().enumerate() {
            if !removed.contains(&k) {
                map[k] = Some(arrows.len());
                arrows.push(*a);
                arrow_labels.push(self.arrow_labels[k].clone());
            }
        }
        let arrow_index = arrows.iter().enumerate().map(|(k, a)| ((a.h, a.from, a.to), k)).collect();
        let q = Quiver {
            vertices: self.vertices.clone(),
            arrows,
            vertex_labels: self.vertex_labels.clone(),
            arrow_labels,
            vertex_index: self.vertex_index.clone(),
            arrow_index,
        };
        (q, map)
    }

    /// Path in traversal order, printed right to left.
    pub fn path_label(&self, path: &[usize]) -> String {
        let mut out = String::new();
        let mut k = path.len();
        while k > 0 {
            let a = path[k - 1];
            let mut run = 1;
            while k > run && path[k - 1 - run] == a {
                run += 1;
            }
            out.push_str(&self.arrow_labels[a]);
            if run > 1 {
                out.push_str(&format!("^{run}"));
            }
            k -= run;
        }
        out
    }

    pub fn is_path(&self, path: &[usize]) -> bool {
        path.windows(2).all(|w| self.arrows[w[0]].target == self.arrows[w[1]].source)
    }

    pub fn path_ends(&self, path: &[usize]) -> Option<(usize, usize)> {
        Some((self.arrows[*path.first()?].source, self.arrows[*path.last()?].target))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelKind {
    I,
    II,
    III,
    IV,
    V,
    /// Sum of all routes from `[h]_i` to `[h]_{i+1}` around `h`, raised to `m(h)`.
    CrossI,
    /// Difference of the powers of the summed cycles at both ends of an edge.
    CycleII,
    /// Sum of all routes of one arrow past the power of the summed cycle.
    CycleIII,
    CopyIV,
    ZeroV,
    Cut,
}

impl fmt::Display for RelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RelKind::I => "I",
            RelKind::II => "II",
            RelKind::III => "III",
            RelKind::IV => "IV",
            RelKind::V => "V",
            RelKind::CrossI => "I'",
            RelKind::CycleII => "II'",
            RelKind::CycleIII => "III'",
            RelKind::CopyIV => "IV'",
            RelKind::ZeroV => "V'",
            RelKind::Cut => "cut",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub kind: RelKind,
    pub terms: Vec<(Q, Vec<usize>)>,
}

impl Relation {
    fn new(kind: RelKind, terms: Vec<(Q, Vec<usize>)>) -> Relation {
        let mut merged: BTreeMap<Vec<usize>, Q> = BTreeMap::new();
        let mut order = Vec::new();
        for (c, p) in terms {
            if !merged.contains_key(&p) {
                order.push(p.clone());
            }
            *merged.entry(p).or_insert_with(Q::zero) += c;
        }
        let terms = order.into_iter().filter_map(|p| {
            let c = merged[&p];
            (!c.is_zero()).then_some((c, p))
        });
        Relation { kind, terms: terms.collect() }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_well_formed(&self, quiver: &Quiver) -> bool {
        let mut ends = BTreeSet::new();
        for (_, p) in &self.terms {
            if p.is_empty() || !quiver.is_path(p) {
                return false;
            }
            ends.insert(quiver.path_ends(p));
        }
        ends.len() <= 1
    }

    pub fn display<'a>(&'a self, quiver: &'a Quiver) -> RelationDisplay<'a> {
        RelationDisplay { rel: self, quiver }
    }
}

pub struct RelationDisplay<'a> {
    rel: &'a Relation,
    quiver: &'a Quiver,
}

impl fmt::Display for RelationDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) ", self.rel.kind)?;
        if self.rel.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, p)) in self.rel.terms.iter().enumerate() {
            let neg = *c < Q::zero();
            let a = if neg { -*c } else { *c };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !a.is_one() {
                write!(f, "{a}·")?;
            }
            write!(f, "{}", self.quiver.path_label(p))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices: {}", (0..self.quiver.vertices.len()).map(|v| self.quiver.vertex_label(v)).collect::<Vec<_>>().join(" "))?;
        writeln!(f, "arrows:")?;
        for (k, a) in self.quiver.arrows.iter().enumerate() {
            writeln!(
                f,
                "  {}: {} -> {}",
                self.quiver.arrow_label(k),
                self.quiver.vertex_label(a.source),
                self.quiver.vertex_label(a.target)
            )?;
        }
        writeln!(f, "relations:")?;
        for r in &self.relations {
            writeln!(f, "  {}", r.display(&self.quiver))?;
        }
        Ok(())
    }
}

/// Walks `steps` arrows around the σ-orbit of `h` starting at copy `start`.
/// Intermediate copies are free; the last one is `end` when given.
pub(crate) fn orbit_routes(
    graph: &BrauerGraph,
    quiver: &Quiver,
    h: usize,
    start: Option<u8>,
    steps: usize,
    end: Option<Option<u8>>,
) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack = vec![(h, start, Vec::with_capacity(steps))];
    while let Some((x, c, path)) = stack.pop() {
        if path.len() == steps {
            out.push(path);
            continue;
        }
        let y = graph.sigma().apply(x);
        let last = path.len() + 1 == steps;
        let targets = match (last, end) {
            (true, Some(e)) => vec![e],
            _ => copies(graph, y),
        };
        for t in targets.into_iter().rev() {
            if let Some(a) = quiver.arrow(x, c, t) {
                let mut p = path.clone();
                p.push(a);
                stack.push((y, t, p));
            }
        }
    }
    out.sort();
    out
}

/// The special `h_i`-cycles, each returning to the copy it started from.
pub fn special_cycles(graph: &BrauerGraph, h: usize, copy: Option<u8>) -> Result<Vec<Vec<usize>>> {
    let quiver = Quiver::of(graph);
    special_cycles_in(graph, &quiver, h, copy)
}

pub(crate) fn special_cycles_in(graph: &BrauerGraph, quiver: &Quiver, h: usize, copy: Option<u8>) -> Result<Vec<Vec<usize>>> {
    if h >= graph.len() || !induces_arrow(graph, h) {
        let name = graph.names().get(h).cloned().unwrap_or_else(|| h.to_string());
        return Err(Error::NoArrow(name));
    }
    if copies(graph, h) != vec![copy] && !copies(graph, h).contains(&copy) {
        return Err(Error::Malformed(format!("copy {copy:?} does not exist at {}", graph.name(h))));
    }
    let n = graph.orbit(h).len();
    Ok(orbit_routes(graph, quiver, h, copy, n, Some(copy)))
}

fn repeat(path: &[usize], times: usize) -> Vec<usize> {
    path.iter().copied().cycle().take(path.len() * times).collect()
}

fn pow2(k: usize) -> Q {
    q(1i64 << k)
}

/// Generators (I)–(V) of the ideal of relations.
pub fn relations(graph: &BrauerGraph) -> Presentation {
    let quiver = Quiver::of(graph);
    let mut rels = Vec::new();
    let sigma = graph.sigma();
    let iota = graph.iota();
    let cycles = |h: usize, c: Option<u8>| special_cycles_in(graph, &quiver, h, c).expect("h induces an arrow");

    // (I) once per edge, from its smallest half-edge.
    for e in graph.edges() {
        let h = e[0];
        let ih = iota.apply(h);
        if graph.is_cross(h) || !induces_arrow(graph, h) || !induces_arrow(graph, ih) {
            continue;
        }
        let (m, mi) = (graph.mult(h) as usize, graph.mult(ih) as usize);
        let ch = pow2(n_cross(graph, h)).pow(m as i32);
        let ci = pow2(n_cross(graph, ih)).pow(mi as i32);
        for c in cycles(h, None) {
            for c2 in cycles(ih, None) {
                rels.push(Relation::new(RelKind::I, vec![(ch, repeat(&c, m)), (-ci, repeat(&c2, mi))]));
            }
        }
    }
    // (II)
    for h in 0..graph.len() {
        if !induces_arrow(graph, h) {
            continue;
        }
        for c0 in copies(graph, h) {
            for c in cycles(h, c0) {
                let mut p = repeat(&c, graph.mult(h) as usize);
                p.push(c[0]);
                rels.push(Relation::new(RelKind::II, vec![(Q::one(), p)]));
            }
        }
    }
    // (III)
    for h in 0..graph.len() {
        let s = sigma.apply(h);
        let next = iota.apply(s);
        if !induces_arrow(graph, h) || graph.is_cross(s) || !induces_arrow(graph, next) {
            continue;
        }
        for i in copies(graph, h) {
            for j in copies(graph, sigma.apply(next)) {
                let a = quiver.arrow(h, i, None).expect("arrow into an ordinary edge");
                let b = quiver.arrow(next, None, j).expect("arrow out of an ordinary edge");
                rels.push(Relation::new(RelKind::III, vec![(Q::one(), vec![a, b])]));
            }
        }
    }
    // (IV)
    for h in graph.cross_half_edges() {
        if !induces_arrow(graph, h) {
            continue;
        }
        let m = graph.mult(h) as usize;
        for c0 in copies(graph, h) {
            for c in cycles(h, c0) {
                let mut p = repeat(&c, m - 1);
                let last = *c.last().expect("nonempty cycle");
                let a = quiver.arrows[last];
                let twisted = quiver.arrow(a.h, a.from, flip(a.to)).expect("both copies exist");
                p.extend_from_slice(&c[..c.len() - 1]);
                p.push(twisted);
                rels.push(Relation::new(RelKind::IV, vec![(Q::one(), p)]));
            }
        }
    }
    // (V)
    for h in 0..graph.len() {
        let s = sigma.apply(h);
        if sigma.is_fixed(h) || !graph.is_cross(s) {
            continue;
        }
        for i in copies(graph, h) {
            for j in copies(graph, sigma.apply(s)) {
                let path = |k: u8| vec![quiver.arrow(h, i, Some(k)).unwrap(), quiver.arrow(s, Some(k), j).unwrap()];
                rels.push(Relation::new(RelKind::V, vec![(Q::one(), path(0)), (-Q::one(), path(1))]));
            }
        }
    }
    Presentation { quiver, relations: rels }
}

/// Presentation of the truncated skew group algebra of a covering, with
/// arrows `β`, as computed from orbit representatives of the covering's
/// relations. For ordinary bases it coincides with [`relations`] of the base.
pub fn truncation_presentation(c: &CoveredGraph) -> Presentation {
    let graph = c.base().graph();
    let quiver = Quiver::with_symbol(graph, "β");
    let sigma = graph.sigma();
    let iota = graph.iota();
    let mut rels = Vec::new();
    let orbit_len = |h: usize| graph.orbit(h).len();
    let all = |routes: Vec<Vec<usize>>, c: Q| routes.into_iter().map(move |p| (c, p));

    for h in graph.cross_half_edges() {
        if !induces_arrow(graph, h) {
            continue;
        }
        let steps = orbit_len(h) * graph.mult(h) as usize;
        for i in copies(graph, h) {
            let routes = orbit_routes(graph, &quiver, h, i, steps, Some(flip(i)));
            rels.push(Relation::new(RelKind::CrossI, all(routes, Q::one()).collect()));
        }
    }
    for e in graph.edges() {
        let h = e[0];
        let ih = iota.apply(h);
        if graph.is_cross(h) || !induces_arrow(graph, h) || !induces_arrow(graph, ih) {
            continue;
        }
        let a = orbit_routes(graph, &quiver, h, None, orbit_len(h) * graph.mult(h) as usize, Some(None));
        let b = orbit_routes(graph, &quiver, ih, None, orbit_len(ih) * graph.mult(ih) as usize, Some(None));
        rels.push(Relation::new(RelKind::CycleII, all(a, Q::one()).chain(all(b, -Q::one())).collect()));
    }
    for h in 0..graph.len() {
        if !induces_arrow(graph, h) {
            continue;
        }
        let steps = orbit_len(h) * graph.mult(h) as usize + 1;
        for i in copies(graph, h) {
            for j in copies(graph, sigma.apply(h)) {
                let routes = orbit_routes(graph, &quiver, h, i, steps, Some(j));
                rels.push(Relation::new(RelKind::CycleIII, all(routes, Q::one()).collect()));
            }
        }
    }
    for h in 0..graph.len() {
        let s = sigma.apply(h);
        if sigma.is_fixed(h) || !graph.is_cross(s) {
            continue;
        }
        for i in copies(graph, h) {
            for j in copies(graph, sigma.apply(s)) {
                let path = |k: u8| vec![quiver.arrow(h, i, Some(k)).unwrap(), quiver.arrow(s, Some(k), j).unwrap()];
                rels.push(Relation::new(RelKind::CopyIV, vec![(Q::one(), path(0)), (-Q::one(), path(1))]));
            }
        }
    }
    for h in 0..graph.len() {
        let s = sigma.apply(h);
        let next = iota.apply(s);
        if !induces_arrow(graph, h) || graph.is_cross(s) || !induces_arrow(graph, next) {
            continue;
        }
        for i in copies(graph, h) {
            for j in copies(graph, sigma.apply(next)) {
                let a = quiver.arrow(h, i, None).unwrap();
                let b = quiver.arrow(next, None, j).unwrap();
                rels.push(Relation::new(RelKind::ZeroV, vec![(Q::one(), vec![a, b])]));
            }
        }
    }
    Presentation { quiver, relations: rels }
}

/// Checks that `delta` picks exactly one half-edge from every σ-orbit that
/// induces arrows. Half-edges of orbits inducing no arrow are ignored.
pub fn check_cut(graph: &BrauerGraph, delta: &HalfEdgeSet) -> Result<()> {
    if graph.multiplicities().iter().any(|&m| m != 1) {
        return Err(Error::BadCut("admissible cuts need multiplicity identically one".into()));
    }
    for orbit in graph.sigma().orbits() {
        if !induces_arrow(graph, orbit[0]) {
            continue;
        }
        let picked: Vec<usize> = orbit.iter().copied().filter(|h| delta.contains(h)).collect();
        if picked.len() != 1 {
            return Err(Error::BadCut(format!(
                "σ-orbit ({}) has {} representatives in Δ",
                graph.names_of(&orbit).join(" "),
                picked.len()
            )));
        }
    }
    Ok(())
}

/// Presentation of `B_Δ`: arrows induced by `Δ` are removed and every
/// relation term through them is dropped.
pub fn admissible_cut(graph: &BrauerGraph, delta: &HalfEdgeSet) -> Result<Presentation> {
    check_cut(graph, delta)?;
    Ok(cut_presentation(&relations(graph), delta))
}

pub(crate) fn cut_presentation(full: &Presentation, delta: &HalfEdgeSet) -> Presentation {
    let removed: BTreeSet<usize> =
        full.quiver.arrows.iter().enumerate().filter(|(_, a)| delta.contains(&a.h)).map(|(k, _)| k).collect();
    let (quiver, map) = full.quiver.without_arrows(&removed);
    let mut rels = Vec::new();
    for r in &full.relations {
        let terms: Vec<(Q, Vec<usize>)> = r
            .terms
            .iter()
            .filter_map(|(c, p)| p.iter().map(|&a| map[a]).collect::<Option<Vec<usize>>>().map(|np| (*c, np)))
            .collect();
        if !terms.is_empty() {
            rels.push(Relation::new(r.kind, terms));
        }
    }
    Presentation { quiver, relations: rels }
}

/// Gentle-algebra conditions on a presentation: monomial quadratic
/// relations, at most two arrows in and out of every vertex, and for every
/// arrow at most one continuation on each side that is a relation and at
/// most one that is not.
pub fn is_gentle(p: &Presentation) -> bool {
    let q = &p.quiver;
    let mut zero: BTreeSet<(usize, usize)> = BTreeSet::new();
    for r in &p.relations {
        match r.terms.as_slice() {
            [(_, path)] if path.len() == 2 => {
                zero.insert((path[0], path[1]));
            }
            _ => return false,
        }
    }
    let nv = q.vertices.len();
    let mut ins = vec![Vec::new(); nv];
    let mut outs = vec![Vec::new(); nv];
    for (k, a) in q.arrows.iter().enumerate() {
        outs[a.source].push(k);
        ins[a.target].push(k);
    }
    if ins.iter().chain(outs.iter()).any(|v| v.len() > 2) {
        return false;
    }
    for (k, a) in q.arrows.iter().enumerate() {
        let after = &outs[a.target];
        let z = after.iter().filter(|&&b| zero.contains(&(k, b))).count();
        if z > 1 || after.len() - z > 1 {
            return false;
        }
        let before = &ins[a.source];
        let z = before.iter().filter(|&&b| zero.contains(&(b, k))).count();
        if z > 1 || before.len() - z > 1 {
            return false;
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchReport {
    pub matches: bool,
    /// First failing check, with the offending relation when there is one.
    pub failure: Option<String>,
    pub model_dim: usize,
    pub presentation_dim: usize,
    pub relations_checked: usize,
}

impl MatchReport {
    fn failed(msg: String) -> MatchReport {
        MatchReport { matches: false, failure: Some(msg), model_dim: 0, presentation_dim: 0, relations_checked: 0 }
    }
}

/// Compares the presentation of the algebra of `graph` with the model
/// `fB_dGf` of the covering `c` under `e ↦ f`, `α ↦ β`: the arrows must
/// give a basis of `rad/rad²` of the model, every relation of `graph` and of
/// the truncation presentation must vanish, the `β` must generate, and the
/// dimensions must agree. For skew graphs all special `h_i`-cycles must
/// coincide in the model.
pub fn presentations_match(graph: &BrauerGraph, c: &CoveredGraph) -> MatchReport {
    use crate::algebra::{covering_model, path_quotient, Algebra};
    use crate::linalg::{Echelon, SVec};

    if c.base().graph() != graph {
        return MatchReport::failed("the covering is not over this graph".into());
    }
    let model = match covering_model(c) {
        Ok(m) => m,
        Err(e) => return MatchReport::failed(format!("no covering model: {e}")),
    };
    let table = model.table();
    let full = relations(graph);
    if full.quiver.arrows != model.quiver.arrows || full.quiver.vertices != model.quiver.vertices {
        return MatchReport::failed("quivers differ".into());
    }
    let mut report = MatchReport {
        matches: false,
        failure: None,
        model_dim: table.dim(),
        presentation_dim: 0,
        relations_checked: 0,
    };

    let radical: Vec<usize> = (0..table.dim()).filter(|&b| table.is_radical(b)).collect();
    let mut rad2 = Echelon::new();
    for &x in &radical {
        for &y in &radical {
            rad2.insert(&table.mul_basis(x, y));
        }
    }
    let mut top = rad2.clone();
    for (k, beta) in model.arrows.iter().enumerate() {
        if top.insert(beta).is_none() {
            report.failure = Some(format!("{} is zero or dependent modulo rad²", model.quiver.arrow_label(k)));
            return report;
        }
    }
    if top.rank() != radical.len() {
        report.failure = Some("the arrows do not span rad/rad²".into());
        return report;
    }

    let checks = full.relations.iter().map(|r| (r, &full.quiver));
    let trunc = truncation_presentation(c);
    for (r, q) in checks.chain(trunc.relations.iter().map(|r| (r, &trunc.quiver))) {
        report.relations_checked += 1;
        if !model.eval_relation(r).is_zero() {
            report.failure = Some(format!("relation {} does not vanish", r.display(q)));
            return report;
        }
    }

    let mut span = Echelon::new();
    let mut layer: Vec<SVec> = model.idempotents.iter().map(|_| SVec::zero()).collect();
    for (k, _) in model.idempotents.iter().enumerate() {
        layer[k] = table.idempotent(k).clone();
        span.insert(&layer[k]);
    }
    while !layer.is_empty() {
        let mut next = Vec::new();
        for v in &layer {
            for beta in &model.arrows {
                let w = table.mul(beta, v);
                if !w.is_zero() && span.insert(&w).is_some() {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    if span.rank() != table.dim() {
        report.failure = Some(format!("the arrows generate {} of {} dimensions", span.rank(), table.dim()));
        return report;
    }

    match path_quotient(&full) {
        Ok(pq) => report.presentation_dim = pq.table.dim(),
        Err(e) => {
            report.failure = Some(format!("presentation quotient failed: {e}"));
            return report;
        }
    }
    if report.presentation_dim != report.model_dim {
        report.failure = Some(format!("dimensions differ: {} vs {}", report.presentation_dim, report.model_dim));
        return report;
    }

    for h in (0..graph.len()).filter(|&h| induces_arrow(graph, h)) {
        for i in copies(graph, h) {
            let cycles = special_cycles_in(graph, &full.quiver, h, i).expect("h induces an arrow");
            let values: Vec<SVec> = cycles.iter().map(|p| model.eval_path(p)).collect();
            if values.windows(2).any(|w| w[0] != w[1]) {
                report.failure = Some(format!("special cycles at {} differ", graph.name(h)));
                return report;
            }
        }
    }
    report.matches = true;
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn has(p: &Presentation, kind: RelKind, text: &str) -> bool {
        p.relations.iter().any(|r| r.kind == kind && r.display(&p.quiver).to_string() == format!("({kind}) {text}"))
    }

    #[test]
    fn ex1_quiver() {
        let g = samples::ex1();
        let q = Quiver::of(&g);
        assert_eq!(q.vertices.len(), 4);
        assert_eq!(q.arrows.len(), 7);
        let loop_1 = q.arrow(g.half_edge("1+").unwrap(), None, None).unwrap();
        assert_eq!(q.arrows[loop_1].source, q.arrows[loop_1].target);
        assert!(q.arrow(g.half_edge("4+").unwrap(), None, None).is_none());
    }

    #[test]
    fn ex2_quiver() {
        let g = samples::ex2();
        let q = Quiver::of(&g);
        let mut labels: Vec<&str> = (0..q.vertices.len()).map(|v| q.vertex_label(v)).collect();
        labels.sort();
        assert_eq!(labels, vec!["1", "2_0", "2_1", "3_0", "3_1", "4", "5"]);
        let three = g.half_edge("3").unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!(q.arrow(three, Some(i), Some(j)).is_some());
            }
        }
        assert!(q.arrow(g.half_edge("5-").unwrap(), None, None).is_none());
    }

    #[test]
    fn loop_quiver() {
        let g = BrauerGraph::from_cycles(&["a", "b"], &[&["a", "b"]], &[], &[("a", 2)]).unwrap();
        let q = Quiver::of(&g);
        assert_eq!(q.vertices.len(), 1);
        assert_eq!(q.arrows.len(), 1);
    }

    #[test]
    fn special_cycle_examples() {
        let g = samples::ex1();
        let q = Quiver::of(&g);
        let c = special_cycles(&g, g.half_edge("1-").unwrap(), None).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(q.path_label(&c[0]), "α(2-)α(3-)α(4-)α(1-)");
        assert_eq!(special_cycles(&g, g.half_edge("4+").unwrap(), None), Err(Error::NoArrow("4+".into())));

        let g2 = samples::ex2();
        let q2 = Quiver::of(&g2);
        let c = special_cycles(&g2, g2.half_edge("1-").unwrap(), None).unwrap();
        assert_eq!(c.len(), 4);
        let labels: BTreeSet<String> = c.iter().map(|p| q2.path_label(p)).collect();
        assert!(labels.contains("α(2)[1>]α(3)[0>1]α(1-)[>0]"));
        let c3 = special_cycles(&g2, g2.half_edge("3").unwrap(), Some(1)).unwrap();
        assert_eq!(c3.len(), 2);
    }

    #[test]
    fn ex1_relations() {
        let p = relations(&samples::ex1());
        assert!(has(&p, RelKind::I, "α(1+)^2 - α(2-)α(3-)α(4-)α(1-)"));
        assert!(has(&p, RelKind::II, "α(1+)^3"));
        assert!(has(&p, RelKind::III, "α(1+)α(2-)"));
        assert!(p.relations.iter().all(|r| r.is_well_formed(&p.quiver)));
    }

    #[test]
    fn ex2_relations() {
        let p = relations(&samples::ex2());
        assert!(has(&p, RelKind::I, "α(1+)α(5+)α(4+) - α(4-)^3"));
        assert!(has(&p, RelKind::I, "α(5+)α(4+)α(1+) - 16·α(2)[0>]α(3)[1>0]α(1-)[>1]α(2)[0>]α(3)[1>0]α(1-)[>1]"));
        assert!(has(&p, RelKind::V, "α(3)[0>0]α(1-)[>0] - α(3)[1>0]α(1-)[>1]"));
        assert!(has(&p, RelKind::V, "α(2)[0>]α(3)[1>0] - α(2)[1>]α(3)[1>1]"));
        assert!(has(&p, RelKind::III, "α(1+)α(2)[1>]"));
        assert!(has(&p, RelKind::II, "α(4-)^4"));
        assert!(p.relations.iter().all(|r| r.is_well_formed(&p.quiver)));
    }

    #[test]
    fn arrowless_graph_has_no_relations() {
        // Two vertices joined by a single edge, one of them a loop vertex with m = 1 on both sides.
        let g = BrauerGraph::from_cycles(&["a", "b"], &[&["a", "b"]], &[], &[("a", 2)]).unwrap();
        let p = relations(&g);
        assert!(p.relations.iter().all(|r| r.is_well_formed(&p.quiver)));
        let bare = BrauerGraph::empty();
        assert!(relations(&bare).relations.is_empty());
    }

    #[test]
    fn cut_of_ex1_is_gentle_shaped() {
        let g = samples::ex1().with_unit_multiplicity();
        let delta = g.subset(&["1-", "2+"]).unwrap();
        let p = admissible_cut(&g, &delta).unwrap();
        assert!(is_gentle(&p));
        assert!(admissible_cut(&g, &g.subset(&["1-"]).unwrap()).is_err());
    }

    #[test]
    fn ex1_and_ex2_match_their_coverings() {
        use crate::covering::cover;
        use crate::graph::GradedGraph;
        let g1 = GradedGraph::new(samples::ex1(), samples::ex1_grading()).unwrap();
        let r = presentations_match(g1.graph(), &cover(&g1).unwrap());
        assert!(r.matches, "{r:?}");
        assert_eq!(r.model_dim, 27);
        let g2 = GradedGraph::new(samples::ex2(), samples::ex2_grading()).unwrap();
        let r = presentations_match(g2.graph(), &cover(&g2).unwrap());
        assert!(r.matches, "{r:?}");
    }
}
