//! Shared fixtures and independent oracles for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use brauer::graph::HalfEdgeSet;
use brauer::BrauerGraph;

pub use brauer::random::fuzz_case;

/// Orbits of a permutation given by its image table, by repeated application.
pub fn orbit_sets(images: &[usize]) -> BTreeSet<BTreeSet<usize>> {
    let mut out = BTreeSet::new();
    for start in 0..images.len() {
        let mut orb = BTreeSet::new();
        let mut x = start;
        while orb.insert(x) {
            x = images[x];
        }
        out.insert(orb);
    }
    out
}

/// Face perimeters by walking x ↦ σ(ι(x)) from every half-edge.
pub fn face_perimeters(graph: &BrauerGraph) -> Vec<usize> {
    let images: Vec<usize> = (0..graph.len()).map(|x| graph.sigma().apply(graph.iota().apply(x))).collect();
    let mut p: Vec<usize> = orbit_sets(&images).iter().map(BTreeSet::len).collect();
    p.sort_unstable();
    p
}

/// Sectors by the defining minimality condition, checked over every r.
pub fn brute_sectors(graph: &BrauerGraph, hp: &HalfEdgeSet) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for &h in hp {
        for r in 0..graph.len() {
            let escapes = !hp.contains(&graph.sigma().pow_apply(h, r as i64 + 1));
            let stays = (0..=r).all(|k| hp.contains(&graph.sigma().pow_apply(h, k as i64)));
            if escapes && stays {
                out.insert((h, r));
            }
        }
    }
    out
}

pub fn brute_maximal_sectors(graph: &BrauerGraph, hp: &HalfEdgeSet) -> BTreeSet<(usize, usize)> {
    brute_sectors(graph, hp)
        .into_iter()
        .filter(|&(h, _)| !hp.contains(&graph.sigma().pow_apply(h, -1)))
        .collect()
}
