//! Brauer graphs and skew Brauer graphs as combinatorial maps `(H, ι, σ, m)`.
//!
//! Half-edges are stored in sorted name order, so two graphs with the same
//! labeled data compare equal regardless of how they were built.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Perm;

pub type HalfEdgeSet = BTreeSet<usize>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BrauerGraph {
    names: Vec<String>,
    iota: Perm,
    sigma: Perm,
    mult: Vec<u32>,
}

fn check_name(name: &str) -> Result<()> {
    let bad = name.is_empty() || name.chars().any(|c| c.is_whitespace() || "()[],=#:".contains(c));
    if bad {
        Err(Error::BadName(name.to_string()))
    } else {
        Ok(())
    }
}

impl BrauerGraph {
    /// Builds a graph from raw data. Structural checks only; use
    /// [`BrauerGraph::validate`] for the graph invariants.
    pub fn new(names: Vec<String>, iota: Perm, sigma: Perm, mult: Vec<u32>) -> Result<Self> {
        let n = names.len();
        if iota.len() != n || sigma.len() != n || mult.len() != n {
            return Err(Error::Malformed("pairing, orientation and multiplicity must cover every half-edge".into()));
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            check_name(name)?;
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateHalfEdge(name.clone()));
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| names[a].cmp(&names[b]));
        let mut new_of = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            new_of[old] = new;
        }
        let relabel = |p: &Perm| {
            let mut images = vec![0; n];
            for old in 0..n {
                images[new_of[old]] = new_of[p.apply(old)];
            }
            Perm::from_images(images).expect("relabeled bijection")
        };
        Ok(BrauerGraph {
            names: order.iter().map(|&o| names[o].clone()).collect(),
            iota: relabel(&iota),
            sigma: relabel(&sigma),
            mult: order.iter().map(|&o| mult[o]).collect(),
        })
    }

    /// Builds a graph from half-edge names and disjoint cycles. Names not in
    /// any pairing cycle are fixed by ι; names not in any orientation cycle
    /// are fixed by σ. Unlisted multiplicities default to 1.
    pub fn from_cycles(names: &[&str], pairing: &[&[&str]], orientation: &[&[&str]], mult: &[(&str, u32)]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let index: BTreeMap<&str, usize> = names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let lookup = |s: &str| index.get(s).copied().ok_or_else(|| Error::UnknownHalfEdge(s.to_string()));
        let to_cycles = |cycles: &[&[&str]]| -> Result<Vec<Vec<usize>>> {
            cycles.iter().map(|c| c.iter().map(|s| lookup(s)).collect()).collect()
        };
        let n = names.len();
        let iota = Perm::from_cycles(n, &to_cycles(pairing)?).map_err(|e| Error::Malformed(format!("pairing: {e}")))?;
        let sigma = Perm::from_cycles(n, &to_cycles(orientation)?).map_err(|e| Error::Malformed(format!("orientation: {e}")))?;
        let mut m = vec![1; n];
        for &(s, v) in mult {
            m[lookup(s)?] = v;
        }
        BrauerGraph::new(names, iota, sigma, m)
    }

    pub fn empty() -> Self {
        BrauerGraph { names: Vec::new(), iota: Perm::identity(0), sigma: Perm::identity(0), mult: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, h: usize) -> &str {
        &self.names[h]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|s| s.as_str().cmp(name)).ok()
    }

    pub fn half_edge(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::UnknownHalfEdge(name.to_string()))
    }

    pub fn iota(&self) -> &Perm {
        &self.iota
    }

    pub fn sigma(&self) -> &Perm {
        &self.sigma
    }

    pub fn mult(&self, h: usize) -> u32 {
        self.mult[h]
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.mult
    }

    /// Same half-edges and pairing, new orientation and multiplicity.
    pub fn with_orientation(&self, sigma: Perm, mult: Vec<u32>) -> Self {
        assert_eq!(sigma.len(), self.len());
        assert_eq!(mult.len(), self.len());
        BrauerGraph { names: self.names.clone(), iota: self.iota.clone(), sigma, mult }
    }

    /// Same data with every multiplicity set to 1.
    pub fn with_unit_multiplicity(&self) -> Self {
        self.with_orientation(self.sigma.clone(), vec![1; self.len()])
    }

    pub fn is_cross(&self, h: usize) -> bool {
        self.iota.is_fixed(h)
    }

    pub fn is_skew(&self) -> bool {
        (0..self.len()).any(|h| self.is_cross(h))
    }

    pub fn cross_half_edges(&self) -> Vec<usize> {
        (0..self.len()).filter(|&h| self.is_cross(h)).collect()
    }

    /// Least common multiple of the multiplicities (1 for the empty graph).
    pub fn mbar(&self) -> u32 {
        self.mult.iter().fold(1, |acc, &m| num_integer::lcm(acc, m.max(1)))
    }

    /// Edges as ι-orbits, each listed from its smallest half-edge.
    pub fn edges(&self) -> Vec<Vec<usize>> {
        self.iota.orbits()
    }

    /// Representative (smallest half-edge) of the edge containing `h`.
    pub fn edge_of(&self, h: usize) -> usize {
        h.min(self.iota.apply(h))
    }

    /// Display name of the edge containing `h`: the common stem of `x+`/`x-`,
    /// the half-edge itself for a leg, otherwise `a|b`.
    pub fn edge_label(&self, h: usize) -> String {
        let a = self.edge_of(h);
        let b = self.iota.apply(a);
        if a == b {
            return self.names[a].clone();
        }
        let (na, nb) = (&self.names[a], &self.names[b]);
        let stem = |s: &str| s.strip_suffix('+').or_else(|| s.strip_suffix('-')).map(str::to_string);
        match (stem(na), stem(nb)) {
            (Some(x), Some(y)) if x == y && na != nb => x,
            _ => format!("{na}|{nb}"),
        }
    }

    /// Representative (smallest half-edge) of the σ-orbit containing `h`.
    pub fn vertex_of(&self, h: usize) -> usize {
        *self.sigma.orbit(h).iter().min().expect("nonempty orbit")
    }

    /// σ-orbit of `h` listed as `h, σh, σ²h, …`.
    pub fn orbit(&self, h: usize) -> Vec<usize> {
        self.sigma.orbit(h)
    }

    /// The subset of the named half-edges.
    pub fn subset<S: AsRef<str>>(&self, names: &[S]) -> Result<HalfEdgeSet> {
        names.iter().map(|s| self.half_edge(s.as_ref())).collect()
    }

    /// All half-edges of the named edges. An edge may be named by its label
    /// (see [`BrauerGraph::edge_label`]) or by any of its half-edges.
    pub fn edge_subset<S: AsRef<str>>(&self, edges: &[S]) -> Result<HalfEdgeSet> {
        let mut out = HalfEdgeSet::new();
        for e in edges {
            let e = e.as_ref();
            let found: Vec<usize> = match self.index_of(e) {
                Some(h) => vec![h],
                None => (0..self.len()).filter(|&h| self.edge_label(h) == e).collect(),
            };
            if found.is_empty() {
                return Err(Error::UnknownEdge(e.to_string()));
            }
            for h in found {
                out.insert(h);
                out.insert(self.iota.apply(h));
            }
        }
        Ok(out)
    }

    pub fn is_pairing_stable(&self, set: &HalfEdgeSet) -> bool {
        set.iter().all(|&h| set.contains(&self.iota.apply(h)))
    }

    pub fn names_of<'a, I: IntoIterator<Item = &'a usize>>(&self, hs: I) -> Vec<String> {
        hs.into_iter().map(|&h| self.names[h].clone()).collect()
    }

    /// Connected components (orbits of the group generated by ι and σ).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for y in [self.iota.apply(x), self.sigma.apply(x), self.sigma.inverse().apply(x)] {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Every violated graph invariant, with the offending half-edges.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let n = self.len();
        let bad_iota: Vec<usize> = (0..n).filter(|&h| self.iota.apply(self.iota.apply(h)) != h).collect();
        if !bad_iota.is_empty() {
            violations.push(Violation::PairingNotInvolution { half_edges: self.names_of(&bad_iota) });
        }
        let zero: Vec<usize> = (0..n).filter(|&h| self.mult[h] == 0).collect();
        if !zero.is_empty() {
            violations.push(Violation::NonPositiveMultiplicity { half_edges: self.names_of(&zero) });
        }
        for orbit in self.sigma.orbits() {
            if orbit.iter().any(|&h| self.mult[h] != self.mult[orbit[0]]) {
                violations.push(Violation::MultiplicityNotConstant { orbit: self.names_of(&orbit) });
            }
        }
        for h in 0..n {
            if self.iota.is_fixed(h) && self.sigma.is_fixed(h) {
                violations.push(Violation::FixedByBoth { half_edge: self.names[h].clone() });
            }
        }
        for comp in self.components() {
            let excluded = match comp.as_slice() {
                [a, b] => {
                    self.iota.apply(*a) == *b
                        && self.sigma.is_fixed(*a)
                        && self.sigma.is_fixed(*b)
                        && self.mult[*a] == 1
                        && self.mult[*b] == 1
                }
                [x] => self.iota.is_fixed(*x) && self.sigma.is_fixed(*x) && self.mult[*x] == 1,
                _ => false,
            };
            if excluded {
                violations.push(Violation::ExcludedComponent { half_edges: self.names_of(&comp) });
            }
        }
        ValidationReport { violations }
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidGraph(report.to_string()))
        }
    }

    /// Circ vertices (σ-orbits) and cross vertices (ι-fixed half-edges).
    pub fn vertices(&self) -> Vertices {
        let circ = self
            .sigma
            .orbits()
            .into_iter()
            .map(|orbit| {
                let multiplicity = self.mult[orbit[0]];
                CircVertex { half_edges: orbit, multiplicity }
            })
            .collect();
        Vertices { circ, cross: self.cross_half_edges() }
    }

    /// Face permutation φ = σ∘ι.
    pub fn face_permutation(&self) -> Result<Perm> {
        if self.is_skew() {
            return Err(Error::FacesOfSkew);
        }
        Ok(self.sigma.compose(&self.iota))
    }

    /// Faces as orbits of φ = σ∘ι; the perimeter of a face is its length.
    pub fn faces(&self) -> Result<Vec<Vec<usize>>> {
        Ok(self.face_permutation()?.orbits())
    }

    /// Bipartiteness of the underlying multigraph, where a leg joins its circ
    /// vertex to its own cross vertex.
    pub fn is_bipartite(&self) -> bool {
        let n = self.len();
        // Node ids: vertex representative for circ vertices, n + h for the cross vertex of h.
        let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for h in 0..n {
            let a = self.vertex_of(h);
            let b = if self.is_cross(h) {
                n + h
            } else if h < self.iota.apply(h) {
                self.vertex_of(self.iota.apply(h))
            } else {
                continue;
            };
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        let mut color: BTreeMap<usize, bool> = BTreeMap::new();
        for &start in adj.keys() {
            if color.contains_key(&start) {
                continue;
            }
            color.insert(start, false);
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                let cx = color[&x];
                for &y in &adj[&x] {
                    match color.get(&y) {
                        Some(&cy) if cy == cx => return false,
                        Some(_) => {}
                        None => {
                            color.insert(y, !cx);
                            queue.push_back(y);
                        }
                    }
                }
            }
        }
        true
    }

    /// Face data is left empty for skew graphs.
    pub fn oz_invariants(&self) -> OZInvariants {
        let vertices = self.vertices();
        let mut perimeters: Vec<usize> = match self.faces() {
            Ok(faces) => faces.iter().map(Vec::len).collect(),
            Err(_) => Vec::new(),
        };
        perimeters.sort_unstable();
        let mut multiplicities: Vec<u32> = vertices.circ.iter().map(|v| v.multiplicity).collect();
        multiplicities.sort_unstable();
        OZInvariants {
            edge_count: self.edges().len(),
            circ_vertex_count: vertices.circ.len(),
            cross_vertex_count: vertices.cross.len(),
            face_count: perimeters.len(),
            perimeter_multiset: perimeters,
            multiplicity_multiset: multiplicities,
            bipartite: self.is_bipartite(),
        }
    }
}

impl fmt::Debug for BrauerGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cyc = |p: &Perm| -> String {
            p.cycles()
                .iter()
                .map(|c| format!("({})", c.iter().map(|&h| self.names[h].as_str()).collect::<Vec<_>>().join(" ")))
                .collect::<String>()
        };
        let mult: Vec<String> =
            (0..self.len()).filter(|&h| self.mult[h] != 1).map(|h| format!("{}={}", self.names[h], self.mult[h])).collect();
        write!(f, "BrauerGraph {{ H: [{}], ι: {}, σ: {}, m: [{}] }}", self.names.join(" "), cyc(&self.iota), cyc(&self.sigma), mult.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircVertex {
    /// σ-orbit listed from its smallest half-edge.
    pub half_edges: Vec<usize>,
    pub multiplicity: u32,
}

impl CircVertex {
    pub fn valency(&self) -> usize {
        self.half_edges.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertices {
    pub circ: Vec<CircVertex>,
    pub cross: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    PairingNotInvolution { half_edges: Vec<String> },
    NonPositiveMultiplicity { half_edges: Vec<String> },
    MultiplicityNotConstant { orbit: Vec<String> },
    FixedByBoth { half_edge: String },
    ExcludedComponent { half_edges: Vec<String> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::PairingNotInvolution { half_edges } => write!(f, "pairing is not an involution at {}", half_edges.join(" ")),
            Violation::NonPositiveMultiplicity { half_edges } => write!(f, "multiplicity must be positive at {}", half_edges.join(" ")),
            Violation::MultiplicityNotConstant { orbit } => write!(f, "m not constant on σ-orbit ({})", orbit.join(" ")),
            Violation::FixedByBoth { half_edge } => write!(f, "half-edge {half_edge} is fixed by both pairing and orientation"),
            Violation::ExcludedComponent { half_edges } => write!(f, "excluded component {{{}}}", half_edges.join(", ")),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OZInvariants {
    pub edge_count: usize,
    pub circ_vertex_count: usize,
    pub cross_vertex_count: usize,
    pub face_count: usize,
    pub perimeter_multiset: Vec<usize>,
    pub multiplicity_multiset: Vec<u32>,
    pub bipartite: bool,
}

impl OZInvariants {
    /// Copy with the bipartite flag cleared, for comparisons where it is not
    /// expected to be preserved.
    pub fn without_bipartite(&self) -> OZInvariants {
        OZInvariants { bipartite: false, ..self.clone() }
    }
}

impl fmt::Display for OZInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "edges: {}", self.edge_count)?;
        writeln!(f, "circ vertices: {}", self.circ_vertex_count)?;
        writeln!(f, "cross vertices: {}", self.cross_vertex_count)?;
        writeln!(f, "faces: {}", self.face_count)?;
        writeln!(f, "perimeters: {:?}", self.perimeter_multiset)?;
        writeln!(f, "multiplicities: {:?}", self.multiplicity_multiset)?;
        write!(f, "bipartite: {}", self.bipartite)
    }
}

/// Degrees `d: H → Z/nZ` stored as canonical residues.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Grading {
    modulus: u32,
    degrees: Vec<u32>,
}

impl Grading {
    pub fn new(modulus: u32, degrees: &[i64]) -> Self {
        assert!(modulus > 0, "grading modulus must be positive");
        let n = modulus as i64;
        Grading { modulus, degrees: degrees.iter().map(|&d| d.rem_euclid(n) as u32).collect() }
    }

    pub fn zero(len: usize, modulus: u32) -> Self {
        Grading::new(modulus, &vec![0; len])
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn degree(&self, h: usize) -> u32 {
        self.degrees[h]
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Builds a grading from named degrees; unnamed half-edges get 0.
    pub fn from_named(graph: &BrauerGraph, modulus: u32, named: &[(&str, i64)]) -> Result<Self> {
        let mut d = vec![0i64; graph.len()];
        for &(s, v) in named {
            d[graph.half_edge(s)?] = v;
        }
        Ok(Grading::new(modulus, &d))
    }
}

/// Modulus a grading of `graph` must use: 2 for skew graphs, m̄ otherwise.
pub fn grading_modulus(graph: &BrauerGraph) -> u32 {
    if graph.is_skew() {
        2
    } else {
        graph.mbar()
    }
}

/// Checks admissibility (ordinary) or 0-homogeneity (skew).
pub fn check_grading(graph: &BrauerGraph, grading: &Grading) -> Result<()> {
    if grading.len() != graph.len() {
        return Err(Error::Grading("grading does not cover every half-edge".into()));
    }
    let n = grading_modulus(graph);
    if grading.modulus() != n {
        return Err(Error::Grading(format!("modulus {} but the graph requires {n}", grading.modulus())));
    }
    let mbar = graph.mbar();
    for v in graph.vertices().circ {
        let sum: u64 = v.half_edges.iter().map(|&h| grading.degree(h) as u64).sum::<u64>() % n as u64;
        let want = if graph.is_skew() { 0 } else { (mbar / v.multiplicity) as u64 % n as u64 };
        if sum != want {
            return Err(Error::Grading(format!(
                "vertex ({}) has degree sum {sum}, expected {want}",
                graph.names_of(&v.half_edges).join(" ")
            )));
        }
    }
    Ok(())
}

/// A valid graph together with a grading satisfying its invariant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedGraph {
    graph: BrauerGraph,
    grading: Grading,
}

impl GradedGraph {
    pub fn new(graph: BrauerGraph, grading: Grading) -> Result<Self> {
        graph.ensure_valid()?;
        check_grading(&graph, &grading)?;
        Ok(GradedGraph { graph, grading })
    }

    pub(crate) fn new_unchecked(graph: BrauerGraph, grading: Grading) -> Self {
        GradedGraph { graph, grading }
    }

    pub fn graph(&self) -> &BrauerGraph {
        &self.graph
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn into_parts(self) -> (BrauerGraph, Grading) {
        (self.graph, self.grading)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn ex1_is_valid_with_expected_vertices() {
        let g = samples::ex1();
        assert!(g.validate().is_valid());
        let v = g.vertices();
        let mut got: Vec<(Vec<String>, u32)> =
            v.circ.iter().map(|c| (g.names_of(&c.half_edges), c.multiplicity)).collect();
        got.sort();
        let s = |xs: &[&str]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        let mut want = vec![
            (s(&["1-", "4-", "3-", "2-"]), 1),
            (s(&["2+", "3+"]), 2),
            (s(&["1+"]), 2),
            (s(&["4+"]), 1),
        ];
        want.sort();
        assert_eq!(got, want);
        assert!(v.cross.is_empty());
    }

    #[test]
    fn ex2_vertices_and_cross() {
        let g = samples::ex2();
        assert!(g.validate().is_valid());
        let v = g.vertices();
        assert_eq!(g.names_of(&v.cross), vec!["2", "3"]);
        let mut mults: Vec<(Vec<String>, u32)> = v
            .circ
            .iter()
            .map(|c| {
                let mut hs = g.names_of(&c.half_edges);
                hs.sort();
                (hs, c.multiplicity)
            })
            .collect();
        mults.sort();
        let s = |xs: &[&str]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        assert_eq!(
            mults,
            vec![(s(&["1+", "4+", "5+"]), 1), (s(&["1-", "2", "3"]), 2), (s(&["4-"]), 3), (s(&["5-"]), 1)]
        );
    }

    #[test]
    fn non_constant_multiplicity_is_reported() {
        let g = BrauerGraph::from_cycles(
            &["1+", "1-", "4+", "4-"],
            &[&["1+", "1-"], &["4+", "4-"]],
            &[&["1-", "4-"], &["1+", "4+"]],
            &[("4-", 2)],
        )
        .unwrap();
        let report = g.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::MultiplicityNotConstant { orbit } if orbit.contains(&"1-".to_string()))));
    }

    #[test]
    fn single_edge_with_trivial_orientation_is_excluded() {
        let g = BrauerGraph::from_cycles(&["1+", "1-"], &[&["1+", "1-"]], &[], &[]).unwrap();
        assert!(matches!(g.validate().violations.as_slice(), [Violation::ExcludedComponent { .. }]));
        let with_mult = BrauerGraph::from_cycles(&["1+", "1-"], &[&["1+", "1-"]], &[], &[("1+", 2)]).unwrap();
        assert!(with_mult.validate().is_valid());
    }

    #[test]
    fn lone_leg_is_excluded() {
        let g = BrauerGraph::from_cycles(&["2"], &[], &[], &[]).unwrap();
        let v = g.validate().violations;
        assert!(v.iter().any(|x| matches!(x, Violation::ExcludedComponent { .. })));
        assert!(v.iter().any(|x| matches!(x, Violation::FixedByBoth { .. })));
    }

    #[test]
    fn empty_graph() {
        let g = BrauerGraph::empty();
        assert!(g.validate().is_valid());
        assert!(g.vertices().circ.is_empty() && g.vertices().cross.is_empty());
    }

    #[test]
    fn faces_of_ex1() {
        let g = samples::ex1();
        let mut per: Vec<usize> = g.faces().unwrap().iter().map(Vec::len).collect();
        per.sort();
        assert_eq!(per, vec![2, 6]);
        assert_eq!(samples::ex2().faces(), Err(Error::FacesOfSkew));
    }

    #[test]
    fn single_loop_has_two_unit_faces() {
        let g = BrauerGraph::from_cycles(&["a", "b"], &[&["a", "b"]], &[&["a", "b"]], &[]).unwrap();
        assert_eq!(g.faces().unwrap(), vec![vec![0], vec![1]]);
        assert!(!g.is_bipartite());
    }

    #[test]
    fn oz_of_examples() {
        let o1 = samples::ex1().oz_invariants();
        assert_eq!((o1.edge_count, o1.circ_vertex_count, o1.cross_vertex_count), (4, 4, 0));
        assert_eq!(o1.multiplicity_multiset, vec![1, 1, 2, 2]);
        assert!(o1.bipartite);
        let o2 = samples::ex2().oz_invariants();
        assert_eq!((o2.edge_count, o2.circ_vertex_count, o2.cross_vertex_count), (5, 4, 2));
        assert_eq!(o2.multiplicity_multiset, vec![1, 1, 2, 3]);
    }

    #[test]
    fn ex1_grading_is_admissible() {
        let g = samples::ex1();
        check_grading(&g, &samples::ex1_grading()).unwrap();
        assert!(check_grading(&g, &Grading::zero(g.len(), 2)).is_err());
        let g2 = samples::ex2();
        check_grading(&g2, &Grading::zero(g2.len(), 2)).unwrap();
    }

    #[test]
    fn canonical_order_makes_equal_graphs_equal() {
        let a = BrauerGraph::from_cycles(&["x", "y"], &[&["x", "y"]], &[&["x", "y"]], &[]).unwrap();
        let b = BrauerGraph::from_cycles(&["y", "x"], &[&["y", "x"]], &[&["y", "x"]], &[]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn edge_labels_and_subsets() {
        let g = samples::ex2();
        let h = g.half_edge("1+").unwrap();
        assert_eq!(g.edge_label(h), "1");
        assert_eq!(g.edge_label(g.half_edge("2").unwrap()), "2");
        let s = g.edge_subset(&["1", "4"]).unwrap();
        assert_eq!(g.names_of(&s), vec!["1+", "1-", "4+", "4-"]);
        assert!(g.edge_subset(&["9"]).is_err());
    }
}
