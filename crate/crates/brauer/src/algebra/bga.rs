//! Normal-form basis of an ordinary Brauer graph algebra.
//!
//! The basis consists of one idempotent per edge, the proper initial pieces
//! `Path(h, len)` of `(C_h)^{m(h)}` for `1 ≤ len < |orbit(h)|·m(h)`, and one
//! socle element per edge identifying `(C_h)^{m(h)}` with `(C_{ιh})^{m(ιh)}`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::BrauerGraph;
use crate::linalg::SVec;

use super::AlgebraTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BgaElem {
    Idem(usize),
    /// `α_{σ^{len-1}h} ⋯ α_h`.
    Path { h: usize, len: usize },
    Socle(usize),
}

#[derive(Clone, Debug)]
pub struct BgaBasis {
    pub elements: Vec<BgaElem>,
    index: HashMap<BgaElem, usize>,
    /// Position of each edge representative among the idempotents.
    edge_pos: HashMap<usize, usize>,
    cycle_len: Vec<usize>,
}

impl BgaBasis {
    pub fn of(graph: &BrauerGraph) -> BgaBasis {
        let edges: Vec<usize> = graph.edges().iter().map(|e| e[0]).collect();
        let cycle_len: Vec<usize> = (0..graph.len()).map(|h| graph.orbit(h).len() * graph.mult(h) as usize).collect();
        let mut elements: Vec<BgaElem> = edges.iter().map(|&e| BgaElem::Idem(e)).collect();
        for h in 0..graph.len() {
            for len in 1..cycle_len[h] {
                elements.push(BgaElem::Path { h, len });
            }
        }
        elements.extend(edges.iter().map(|&e| BgaElem::Socle(e)));
        let index = elements.iter().enumerate().map(|(k, b)| (*b, k)).collect();
        let edge_pos = edges.iter().enumerate().map(|(k, &e)| (e, k)).collect();
        BgaBasis { elements, index, edge_pos, cycle_len }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index(&self, b: BgaElem) -> Option<usize> {
        self.index.get(&b).copied()
    }

    pub fn idem(&self, edge: usize) -> usize {
        self.index[&BgaElem::Idem(edge)]
    }

    /// Index of the arrow `α_h`, if `h` induces one.
    pub fn arrow(&self, h: usize) -> Option<usize> {
        self.index(BgaElem::Path { h, len: 1 })
    }

    fn product(&self, graph: &BrauerGraph, x: BgaElem, y: BgaElem) -> Option<BgaElem> {
        use BgaElem::*;
        let sigma = graph.sigma();
        match (x, y) {
            (Idem(e), other) => (self.left_edge(graph, other) == e).then_some(other),
            (other, Idem(e)) => (self.right_edge(graph, other) == e).then_some(other),
            (Socle(_), _) | (_, Socle(_)) => None,
            (Path { h: h2, len: b }, Path { h: h1, len: a }) => {
                if sigma.pow_apply(h1, a as i64) != h2 {
                    return None;
                }
                let n = self.cycle_len[h1];
                match (a + b).cmp(&n) {
                    std::cmp::Ordering::Less => Some(Path { h: h1, len: a + b }),
                    std::cmp::Ordering::Equal => Some(Socle(graph.edge_of(h1))),
                    std::cmp::Ordering::Greater => None,
                }
            }
        }
    }

    fn left_edge(&self, graph: &BrauerGraph, b: BgaElem) -> usize {
        match b {
            BgaElem::Idem(e) | BgaElem::Socle(e) => e,
            BgaElem::Path { h, len } => graph.edge_of(graph.sigma().pow_apply(h, len as i64)),
        }
    }

    fn right_edge(&self, graph: &BrauerGraph, b: BgaElem) -> usize {
        match b {
            BgaElem::Idem(e) | BgaElem::Socle(e) => e,
            BgaElem::Path { h, .. } => graph.edge_of(h),
        }
    }

    pub fn label(&self, graph: &BrauerGraph, b: BgaElem) -> String {
        match b {
            BgaElem::Idem(e) => format!("e({})", graph.edge_label(e)),
            BgaElem::Socle(e) => format!("s({})", graph.edge_label(e)),
            BgaElem::Path { h, len } => {
                (0..len).rev().map(|k| format!("α({})", graph.name(graph.sigma().pow_apply(h, k as i64)))).collect()
            }
        }
    }
}

/// Structure constants of the Brauer graph algebra of an ordinary graph.
pub fn bga_table(graph: &BrauerGraph) -> Result<AlgebraTable> {
    graph.ensure_valid()?;
    if graph.is_skew() {
        return Err(Error::Algebra("bga_table needs an ordinary graph; use skew_bga_table".into()));
    }
    let basis = BgaBasis::of(graph);
    let n = basis.len();
    let mut table = vec![SVec::zero(); n * n];
    for (i, &x) in basis.elements.iter().enumerate() {
        for (j, &y) in basis.elements.iter().enumerate() {
            if let Some(z) = basis.product(graph, x, y) {
                table[i * n + j] = SVec::unit(basis.index[&z]);
            }
        }
    }
    let labels = basis.elements.iter().map(|&b| basis.label(graph, b)).collect();
    let idempotents = graph.edges().iter().map(|e| (graph.edge_label(e[0]), SVec::unit(basis.idem(e[0])))).collect();
    let corners = basis
        .elements
        .iter()
        .map(|&b| (basis.edge_pos[&basis.left_edge(graph, b)], basis.edge_pos[&basis.right_edge(graph, b)]))
        .collect();
    let radical = basis.elements.iter().map(|b| !matches!(b, BgaElem::Idem(_))).collect();
    Ok(AlgebraTable::from_parts(labels, table, idempotents, corners, radical))
}

/// `Σ_v m̃(v)·val(v)²`.
pub fn dimension_formula(graph: &BrauerGraph) -> usize {
    graph.vertices().circ.iter().map(|v| v.multiplicity as usize * v.valency() * v.valency()).sum()
}
