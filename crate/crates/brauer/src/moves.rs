//! Sectors and graded generalized Kauer moves.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{BrauerGraph, GradedGraph, Grading, HalfEdgeSet};
use crate::perm::Perm;

/// A run `h, σh, …, σ^r h` inside a subset, with `σ^{r+1} h` outside it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sector {
    pub h: usize,
    pub r: usize,
}

impl Sector {
    pub fn display<'a>(&self, graph: &'a BrauerGraph) -> SectorDisplay<'a> {
        SectorDisplay { graph, sector: *self }
    }
}

pub struct SectorDisplay<'a> {
    graph: &'a BrauerGraph,
    sector: Sector,
}

impl fmt::Display for SectorDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.graph.name(self.sector.h), self.sector.r)
    }
}

fn check_stable(graph: &BrauerGraph, hp: &HalfEdgeSet) -> Result<()> {
    if let Some(&bad) = hp.iter().find(|&&h| h >= graph.len()) {
        return Err(Error::Malformed(format!("half-edge index {bad} out of range")));
    }
    if !graph.is_pairing_stable(hp) {
        let missing: Vec<usize> = hp.iter().copied().filter(|&h| !hp.contains(&graph.iota().apply(h))).collect();
        return Err(Error::NotPairingStable(graph.names_of(&missing).join(" ")));
    }
    Ok(())
}

/// The escape index `r` of `h`, if `h ∈ H'` and its orbit leaves `H'`.
fn escape(graph: &BrauerGraph, hp: &HalfEdgeSet, h: usize) -> Option<usize> {
    if !hp.contains(&h) {
        return None;
    }
    let orbit = graph.orbit(h);
    orbit.iter().position(|x| !hp.contains(x)).map(|k| k - 1)
}

pub fn is_sector(graph: &BrauerGraph, hp: &HalfEdgeSet, s: Sector) -> bool {
    s.h < graph.len() && escape(graph, hp, s.h) == Some(s.r)
}

/// All sectors of `H'`, one per half-edge of `H'` whose orbit leaves `H'`.
pub fn sectors(graph: &BrauerGraph, hp: &HalfEdgeSet) -> Result<Vec<Sector>> {
    check_stable(graph, hp)?;
    Ok(hp.iter().filter_map(|&h| escape(graph, hp, h).map(|r| Sector { h, r })).collect())
}

/// Sectors whose predecessor `σ^{-1} h` lies outside `H'`, in processing
/// order: by vertex representative, then by half-edge.
pub fn maximal_sectors(graph: &BrauerGraph, hp: &HalfEdgeSet) -> Result<Vec<Sector>> {
    let inv = graph.sigma().inverse();
    let mut out: Vec<Sector> = sectors(graph, hp)?.into_iter().filter(|s| !hp.contains(&inv.apply(s.h))).collect();
    out.sort_by_key(|s| (graph.vertex_of(s.h), s.h));
    Ok(out)
}

struct MoveData {
    top: usize,
    next: usize,
    far: usize,
    prev: usize,
    run: Vec<usize>,
}

fn move_data(graph: &BrauerGraph, hp: &HalfEdgeSet, s: Sector) -> Result<MoveData> {
    if !is_sector(graph, hp, s) {
        let name = graph.names().get(s.h).cloned().unwrap_or_else(|| s.h.to_string());
        return Err(Error::NotASector { h: name, r: s.r });
    }
    let sigma = graph.sigma();
    let run: Vec<usize> = (0..=s.r as i64).map(|i| sigma.pow_apply(s.h, i)).collect();
    let top = *run.last().expect("nonempty run");
    let next = sigma.apply(top);
    Ok(MoveData { top, next, far: graph.iota().apply(next), prev: sigma.inverse().apply(s.h), run })
}

fn moved_orientation(graph: &BrauerGraph, s: Sector, d: &MoveData) -> (Perm, Vec<u32>) {
    let n = graph.len();
    let sigma = Perm::transposition(n, s.h, d.next)
        .compose(graph.sigma())
        .compose(&Perm::transposition(n, d.top, d.far));
    let mut mult = graph.multiplicities().to_vec();
    let m_far = graph.mult(d.far);
    for &x in &d.run {
        mult[x] = m_far;
    }
    (sigma, mult)
}

/// Kauer move of one sector on the ungraded data `(σ, m)`.
pub fn move_sector_ungraded(graph: &BrauerGraph, s: Sector, hp: &HalfEdgeSet) -> Result<BrauerGraph> {
    check_stable(graph, hp)?;
    let d = move_data(graph, hp, s)?;
    let (sigma, mult) = moved_orientation(graph, s, &d);
    Ok(graph.with_orientation(sigma, mult))
}

/// Graded Kauer move of one sector. `s` must be a sector of `H'` in `g`,
/// not necessarily maximal.
pub fn move_sector(g: &GradedGraph, s: Sector, hp: &HalfEdgeSet) -> Result<GradedGraph> {
    let graph = g.graph();
    check_stable(graph, hp)?;
    let data = move_data(graph, hp, s)?;
    let (sigma, mult) = moved_orientation(graph, s, &data);

    let grading = g.grading();
    let d = |x: usize| grading.degree(x) as i64;
    let extra = i64::from(graph.is_cross(data.next));
    let run_sum: i64 = data.run.iter().map(|&x| d(x)).sum();
    let with_prev = run_sum + d(data.prev);
    let special = data.far == data.prev;

    let d_far = -run_sum - extra;
    let d_top = if special { with_prev + d(data.top) + extra } else { d(data.far) + d(data.top) + extra };
    let d_prev = if special { d_far } else { with_prev };

    let mut degrees: Vec<i64> = grading.degrees().iter().map(|&x| x as i64).collect();
    degrees[data.far] = d_far;
    degrees[data.top] = d_top;
    degrees[data.prev] = d_prev;
    let moved = graph.with_orientation(sigma, mult);
    Ok(GradedGraph::new_unchecked(moved, Grading::new(grading.modulus(), &degrees)))
}

/// Composite move over all maximal sectors of `H'`, in canonical order.
pub fn move_set(g: &GradedGraph, hp: &HalfEdgeSet) -> Result<GradedGraph> {
    let order = maximal_sectors(g.graph(), hp)?;
    move_sectors(g, hp, &order)
}

/// Applies the moves of `order` in sequence.
pub fn move_sectors(g: &GradedGraph, hp: &HalfEdgeSet, order: &[Sector]) -> Result<GradedGraph> {
    let mut cur = g.clone();
    for &s in order {
        cur = move_sector(&cur, s, hp)?;
    }
    Ok(cur)
}

/// Composite move on `(σ, m)` only, for graphs without a grading at hand.
pub fn move_set_ungraded(graph: &BrauerGraph, hp: &HalfEdgeSet) -> Result<BrauerGraph> {
    let order = maximal_sectors(graph, hp)?;
    let mut cur = graph.clone();
    for s in order {
        cur = move_sector_ungraded(&cur, s, hp)?;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::check_grading;
    use crate::samples;

    fn cycles_named(graph: &BrauerGraph, p: &Perm) -> Vec<Vec<String>> {
        p.cycles().iter().map(|c| graph.names_of(c)).collect()
    }

    fn perm_of(graph: &BrauerGraph, cycles: &[&[&str]]) -> Perm {
        let cs: Vec<Vec<usize>> = cycles.iter().map(|c| c.iter().map(|s| graph.half_edge(s).unwrap()).collect()).collect();
        Perm::from_cycles(graph.len(), &cs).unwrap()
    }

    #[test]
    fn maximal_sectors_ex1() {
        let g = samples::ex1();
        let hp = g.edge_subset(&["1", "2"]).unwrap();
        let ms = maximal_sectors(&g, &hp).unwrap();
        let got: Vec<(String, usize)> = ms.iter().map(|s| (g.name(s.h).to_string(), s.r)).collect();
        let mut got = got;
        got.sort();
        assert_eq!(got, vec![("2+".to_string(), 0), ("2-".to_string(), 1)]);
        assert!(sectors(&g, &hp).unwrap().iter().all(|s| g.name(s.h) != "1+"));
    }

    #[test]
    fn maximal_sectors_ex2() {
        let g = samples::ex2();
        let hp = g.edge_subset(&["1", "4"]).unwrap();
        let mut got: Vec<(String, usize)> =
            maximal_sectors(&g, &hp).unwrap().iter().map(|s| (g.name(s.h).to_string(), s.r)).collect();
        got.sort();
        // 1+ and 4+ are consecutive at their vertex, so they form one run from 1+.
        assert_eq!(got, vec![("1+".to_string(), 1), ("1-".to_string(), 0)]);
        assert!(sectors(&g, &hp).unwrap().iter().all(|s| g.name(s.h) != "4-"));
    }

    #[test]
    fn unstable_subset_is_rejected() {
        let g = samples::ex1();
        let hp = g.subset(&["1+"]).unwrap();
        assert!(matches!(sectors(&g, &hp), Err(Error::NotPairingStable(_))));
    }

    #[test]
    fn non_sector_is_rejected() {
        let g = GradedGraph::new(samples::ex1(), samples::ex1_grading()).unwrap();
        let hp = g.graph().edge_subset(&["1", "2"]).unwrap();
        let h = g.graph().half_edge("1-").unwrap();
        assert!(matches!(move_sector(&g, Sector { h, r: 3 }, &hp), Err(Error::NotASector { .. })));
    }

    #[test]
    fn ex1_move() {
        let g = GradedGraph::new(samples::ex1(), samples::ex1_grading()).unwrap();
        let gr = g.graph();
        let hp = gr.edge_subset(&["1", "2"]).unwrap();
        let moved = move_set(&g, &hp).unwrap();
        let mg = moved.graph();
        assert_eq!(mg.sigma(), &perm_of(gr, &[&["1-", "4+", "2-"], &["2+", "4-", "3-"]]));
        assert_eq!(
            cycles_named(mg, mg.sigma()),
            vec![vec!["1-", "4+", "2-"], vec!["2+", "4-", "3-"]]
        );
        for h in 0..mg.len() {
            let want = if ["1+", "3+"].contains(&mg.name(h)) { 2 } else { 1 };
            assert_eq!(mg.mult(h), want, "m at {}", mg.name(h));
            assert_eq!(moved.grading().degree(h), want - 1, "d at {}", mg.name(h));
        }
        // Decomposition (2- 4-)(2+ 3+) σ (1- 4+)(2+ 3-).
        let left = perm_of(gr, &[&["2-", "4-"], &["2+", "3+"]]);
        let right = perm_of(gr, &[&["1-", "4+"], &["2+", "3-"]]);
        assert_eq!(mg.sigma(), &left.compose(gr.sigma()).compose(&right));
        assert!(mg.validate().is_valid());
        check_grading(mg, moved.grading()).unwrap();
    }

    #[test]
    fn ex2_move() {
        let g = GradedGraph::new(samples::ex2(), samples::ex2_grading()).unwrap();
        let gr = g.graph();
        let hp = gr.edge_subset(&["1", "4"]).unwrap();
        let moved = move_set(&g, &hp).unwrap();
        let mg = moved.graph();
        assert_eq!(mg.sigma(), &perm_of(gr, &[&["5-", "1+", "4+"], &["1-", "2", "3"]]));
        for h in 0..mg.len() {
            let name = mg.name(h);
            let m = match name {
                "4-" => 3,
                "1-" | "2" | "3" => 2,
                _ => 1,
            };
            assert_eq!(mg.mult(h), m, "m at {name}");
            let d = u32::from(name == "3" || name == "1-");
            assert_eq!(moved.grading().degree(h), d, "d at {name}");
        }
        assert!(mg.validate().is_valid());
        check_grading(mg, moved.grading()).unwrap();
    }

    #[test]
    fn special_case_keeps_graph() {
        // Vertex (a b x) with edge {x, y} where y is the predecessor of the sector's start.
        // σ = (a b x y): sector (a, 1) escapes to x, ιx = y = σ^{-1}a.
        let g = BrauerGraph::from_cycles(
            &["a", "b", "x", "y", "c", "e"],
            &[&["a", "c"], &["b", "e"], &["x", "y"]],
            &[&["a", "b", "x", "y"], &["c", "e"]],
            &[],
        )
        .unwrap();
        let gg = GradedGraph::new(g.clone(), Grading::new(1, &[0; 6])).unwrap();
        let hp = g.subset(&["a", "b", "c", "e"]).unwrap();
        let a = g.half_edge("a").unwrap();
        let moved = move_sector(&gg, Sector { h: a, r: 1 }, &hp).unwrap();
        let orbits = |p: &Perm| {
            let mut o: Vec<Vec<usize>> = p.orbits().into_iter().map(|mut c| {
                c.sort();
                c
            }).collect();
            o.sort();
            o
        };
        assert_eq!(orbits(moved.graph().sigma()), orbits(g.sigma()));
    }

    #[test]
    fn empty_subset_is_identity() {
        let g = GradedGraph::new(samples::ex1(), samples::ex1_grading()).unwrap();
        assert_eq!(move_set(&g, &HalfEdgeSet::new()).unwrap(), g);
    }

    #[test]
    fn full_subset_is_identity() {
        let g = GradedGraph::new(samples::ex2(), samples::ex2_grading()).unwrap();
        let all: HalfEdgeSet = (0..g.graph().len()).collect();
        assert_eq!(move_set(&g, &all).unwrap(), g);
    }

    #[test]
    fn ungraded_agrees_with_graded() {
        let g = GradedGraph::new(samples::ex2(), samples::ex2_grading()).unwrap();
        let hp = g.graph().edge_subset(&["1", "4"]).unwrap();
        assert_eq!(&move_set_ungraded(g.graph(), &hp).unwrap(), move_set(&g, &hp).unwrap().graph());
    }
}
