//! Seeded random graphs for property tests.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::covering::default_grading;
use crate::graph::{BrauerGraph, GradedGraph, HalfEdgeSet};
use crate::perm::Perm;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomParams {
    /// Number of half-edges. Rounded up to even for ordinary graphs.
    pub n_half: usize,
    pub allow_skew: bool,
    pub max_multiplicity: u32,
}

impl Default for RandomParams {
    fn default() -> Self {
        RandomParams { n_half: 8, allow_skew: false, max_multiplicity: 2 }
    }
}

/// A valid graph determined by `seed` and `params`. With `allow_skew` the
/// graph has at least one leg.
pub fn gen_random(seed: u64, params: RandomParams) -> BrauerGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_m = params.max_multiplicity.max(1);
    loop {
        let g = attempt(&mut rng, params.n_half, params.allow_skew, max_m);
        if g.validate().is_valid() {
            return g;
        }
    }
}

fn attempt(rng: &mut ChaCha8Rng, n_half: usize, allow_skew: bool, max_m: u32) -> BrauerGraph {
    let (legs, pairs) = if allow_skew {
        let n = n_half.max(1);
        let mut legs = rng.gen_range(1..=n.min(3));
        // The remaining half-edges must pair up.
        if (n - legs) % 2 == 1 {
            legs = if legs < n { legs + 1 } else { legs - 1 };
        }
        (legs, (n - legs) / 2)
    } else {
        (0, n_half.div_ceil(2))
    };
    let mut names = Vec::new();
    let mut pairing = Vec::new();
    for k in 1..=pairs {
        names.push(format!("{k}+"));
        names.push(format!("{k}-"));
        pairing.push(vec![names.len() - 2, names.len() - 1]);
    }
    for k in pairs + 1..=pairs + legs {
        names.push(k.to_string());
    }
    let n = names.len();
    let iota = Perm::from_cycles(n, &pairing).expect("disjoint pairs");

    // Random orientation: shuffle, then cut into cycles.
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut cycles = Vec::new();
    let mut start = 0;
    while start < n {
        let len = rng.gen_range(1..=(n - start).min(5));
        cycles.push(order[start..start + len].to_vec());
        start += len;
    }
    let sigma = Perm::from_cycles(n, &cycles).expect("disjoint cycles");
    let mut mult = vec![1; n];
    for c in &cycles {
        let m = rng.gen_range(1..=max_m);
        for &h in c {
            mult[h] = m;
        }
    }
    BrauerGraph::new(names, iota, sigma, mult).expect("generated names are valid")
}

/// A random ι-stable subset: each edge is kept with probability 1/2.
pub fn random_edge_subset(graph: &BrauerGraph, seed: u64) -> HalfEdgeSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut out = HalfEdgeSet::new();
    for e in graph.edges() {
        if rng.gen_bool(0.5) {
            out.extend(e);
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct FuzzCase {
    pub seed: u64,
    pub graded: GradedGraph,
    pub subset: HalfEdgeSet,
}

/// Fuzz case `seed`: alternates ordinary and skew graphs of 4 to 10
/// half-edges, with a random ι-stable subset and its default grading.
pub fn fuzz_case(seed: u64, max_multiplicity: u32) -> FuzzCase {
    let skew = seed % 2 == 1;
    let params = RandomParams { n_half: 4 + (seed as usize / 2) % 7, allow_skew: skew, max_multiplicity };
    let graph = gen_random(seed, params);
    let subset = random_edge_subset(&graph, seed);
    let grading = default_grading(&graph, &subset).expect("stable subset");
    let graded = GradedGraph::new(graph, grading).expect("default grading is admissible");
    FuzzCase { seed, graded, subset }
}
