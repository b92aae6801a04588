//! Galois coverings of graded Brauer graphs and of graded skew Brauer graphs.
//!
//! The half-edge `h_i` of the total graph is named `<h>_<i>`.

use crate::error::{Error, Result};
use crate::graph::{check_grading, grading_modulus, BrauerGraph, GradedGraph, Grading, HalfEdgeSet};
use crate::moves::{maximal_sectors, move_set, move_set_ungraded};
use crate::perm::Perm;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveredGraph {
    base: GradedGraph,
    total: BrauerGraph,
    order: usize,
    lift: Vec<Vec<usize>>,
    sheet_of: Vec<(usize, usize)>,
}

pub fn sheet_name(base_name: &str, i: usize) -> String {
    format!("{base_name}_{i}")
}

impl CoveredGraph {
    pub fn base(&self) -> &GradedGraph {
        &self.base
    }

    pub fn total(&self) -> &BrauerGraph {
        &self.total
    }

    pub fn group_order(&self) -> usize {
        self.order
    }

    /// Total index of `h_i`.
    pub fn lift(&self, h: usize, i: usize) -> usize {
        self.lift[h][i % self.order]
    }

    /// `(h, i)` for the total half-edge `h_i`.
    pub fn sheet_of(&self, x: usize) -> (usize, usize) {
        self.sheet_of[x]
    }

    /// The deck transformation `h_i ↦ h_{i+1}`.
    pub fn shift(&self) -> Perm {
        let images = (0..self.total.len())
            .map(|x| {
                let (h, i) = self.sheet_of[x];
                self.lift(h, i + 1)
            })
            .collect();
        Perm::from_images(images).expect("shift is a bijection")
    }

    /// Replaces the total graph, keeping the sheet data. Only meant for
    /// building deliberately inconsistent coverings in negative tests.
    pub fn with_total(mut self, total: BrauerGraph) -> Self {
        assert_eq!(total.names(), self.total.names());
        self.total = total;
        self
    }

    /// Checks that the projection `h_i ↦ h` commutes with pairings and orientations.
    pub fn projection_commutes(&self) -> bool {
        let base = self.base.graph();
        (0..self.total.len()).all(|x| {
            let (h, _) = self.sheet_of[x];
            self.sheet_of[self.total.iota().apply(x)].0 == base.iota().apply(h)
                && self.sheet_of[self.total.sigma().apply(x)].0 == base.sigma().apply(h)
        })
    }
}

/// Builds the covering `Γ_d` with group order `m̄` (ordinary) or 2 (skew).
pub fn cover(g: &GradedGraph) -> Result<CoveredGraph> {
    let base = g.graph();
    check_grading(base, g.grading())?;
    let n = base.len();
    let order = grading_modulus(base) as usize;
    let skew = base.is_skew();

    let mut names = Vec::with_capacity(n * order);
    for h in 0..n {
        for i in 0..order {
            names.push(sheet_name(base.name(h), i));
        }
    }
    let raw = |h: usize, i: usize| h * order + (i % order);
    let mut iota = vec![0; n * order];
    let mut sigma = vec![0; n * order];
    let mut mult = vec![1; n * order];
    for h in 0..n {
        let d = g.grading().degree(h) as usize;
        for i in 0..order {
            iota[raw(h, i)] = if base.is_cross(h) { raw(h, i + 1) } else { raw(base.iota().apply(h), i) };
            sigma[raw(h, i)] = raw(base.sigma().apply(h), i + d);
            if skew {
                mult[raw(h, i)] = base.mult(h);
            }
        }
    }
    let perm = |v: Vec<usize>| Perm::from_images(v).map_err(|e| Error::Malformed(e.to_string()));
    let total = BrauerGraph::new(names, perm(iota)?, perm(sigma)?, mult)?;

    let mut lift = vec![vec![0; order]; n];
    let mut sheet_of = vec![(0, 0); n * order];
    for h in 0..n {
        for (i, slot) in lift[h].iter_mut().enumerate() {
            let x = total.index_of(&sheet_name(base.name(h), i)).expect("sheet exists");
            *slot = x;
            sheet_of[x] = (h, i);
        }
    }
    Ok(CoveredGraph { base: g.clone(), total, order, lift, sheet_of })
}

/// `H'_d`: every sheet of every half-edge of `H'`.
pub fn lift_subset(c: &CoveredGraph, hp: &HalfEdgeSet) -> HalfEdgeSet {
    hp.iter().flat_map(|&h| (0..c.order).map(move |i| (h, i))).map(|(h, i)| c.lift(h, i)).collect()
}

/// Grading used when the caller gives none. Ordinary graphs put the whole
/// required degree `m̄/m̃(v)` on one half-edge per vertex: `σ^{-1}h` for the
/// smallest maximal sector `(h, r)` at `v` when `v` meets both `H'` and its
/// complement, otherwise the smallest half-edge at `v`. Skew graphs get 0.
pub fn default_grading(graph: &BrauerGraph, hp: &HalfEdgeSet) -> Result<Grading> {
    let modulus = grading_modulus(graph);
    if graph.is_skew() {
        return Ok(Grading::zero(graph.len(), modulus));
    }
    let mbar = graph.mbar();
    let maximal = maximal_sectors(graph, hp)?;
    let inv = graph.sigma().inverse();
    let mut degrees = vec![0i64; graph.len()];
    for v in graph.vertices().circ {
        let inside = v.half_edges.iter().filter(|h| hp.contains(h)).count();
        let mixed = inside > 0 && inside < v.half_edges.len();
        let min_h = *v.half_edges.iter().min().expect("nonempty vertex");
        let target = if mixed {
            let s = maximal
                .iter()
                .filter(|s| graph.vertex_of(s.h) == min_h)
                .min_by_key(|s| s.h)
                .expect("a mixed vertex has a maximal sector");
            inv.apply(s.h)
        } else {
            min_h
        };
        degrees[target] = (mbar / v.multiplicity) as i64;
    }
    Ok(Grading::new(modulus, &degrees))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommuteReport {
    pub commutes: bool,
    /// Total half-edges where the two sides disagree on orientation or multiplicity.
    pub mismatches: Vec<String>,
}

/// Compares the covering of the moved graph with the move of the covering.
pub fn check_cover_commutes(g: &GradedGraph, hp: &HalfEdgeSet) -> Result<CommuteReport> {
    let moved = move_set(g, hp)?;
    let lhs = cover(&moved)?;
    let c = cover(g)?;
    let rhs = move_set_ungraded(c.total(), &lift_subset(&c, hp))?;
    let lt = lhs.total();
    let mismatches: Vec<String> = (0..lt.len())
        .filter(|&x| {
            lt.names() != rhs.names()
                || lt.sigma().apply(x) != rhs.sigma().apply(x)
                || lt.iota().apply(x) != rhs.iota().apply(x)
                || lt.mult(x) != rhs.mult(x)
        })
        .map(|x| lt.name(x).to_string())
        .collect();
    Ok(CommuteReport { commutes: mismatches.is_empty() && lt == &rhs, mismatches })
}
