mod common;

use std::collections::BTreeSet;

use brauer::algebra::{
    algebra_of, bga_table, check_phi, covering_model, dimension_formula, path_quotient, quotient_by_ideal,
    skew_bga_table, trivial_extension, Algebra, AlgebraTable, BgaBasis, GroupActionTable,
};
use brauer::covering::cover;
use brauer::graph::{check_grading, HalfEdgeSet};
use brauer::homotopy::verify_mutation;
use brauer::linalg::{q, SVec};
use brauer::moves::move_set_ungraded;
use brauer::perm::Perm;
use brauer::presentation::{admissible_cut, is_gentle, presentations_match, relations, Quiver};
use brauer::random::FuzzCase;
use brauer::{samples, BrauerGraph, GradedGraph, Grading};

use common::fuzz_case;

/// `Σ_v m̃(v) val(v)²`, with `m̃(v)` the multiplicity times the number of
/// times σ must run through the orbit to return.
fn formula_oracle(g: &BrauerGraph) -> usize {
    g.sigma().orbits().iter().map(|o| g.mult(o[0]) as usize * o.len() * o.len()).sum()
}

/// Dimension of `f B_d G f` read off the cover's Cartan matrix: for each pair
/// of base edges, the sum over the group of `dim e_{x_0} B_d e_{g.y_0}`.
fn skew_truncation_oracle(g: &BrauerGraph, grading: &Grading) -> usize {
    let c = cover(&GradedGraph::new(g.clone(), grading.clone()).unwrap()).unwrap();
    let total = c.total();
    let cartan = bga_table(total).unwrap().cartan();
    let edges: Vec<usize> = total.edges().iter().map(|e| e[0]).collect();
    let pos = |h: usize| edges.iter().position(|&e| e == total.edge_of(h)).unwrap();
    let shift = c.shift();
    let base: Vec<usize> = g.edges().iter().map(|e| e[0]).collect();
    let mut dim = 0;
    for &x in &base {
        for &y in &base {
            let x0 = c.lift(x, 0);
            let mut y_s = c.lift(y, 0);
            for _ in 0..c.group_order() {
                dim += cartan[pos(x0)][pos(y_s)];
                y_s = shift.apply(y_s);
            }
        }
    }
    dim
}

#[test]
fn ex1_dimension_oracles() {
    let g = samples::ex1();
    let a = bga_table(&g).unwrap();
    assert_eq!(a.dim(), 27);
    assert_eq!(dimension_formula(&g), 27);
    assert_eq!(formula_oracle(&g), 27);
    let pq = path_quotient(&relations(&g)).unwrap();
    assert_eq!(pq.table.dim(), 27);
    a.check_associative().unwrap();
    a.check_unit().unwrap();
    let c = a.cartan();
    for i in 0..c.len() {
        for j in 0..c.len() {
            assert_eq!(c[i][j], c[j][i]);
        }
    }
}

#[test]
fn dimension_formula_on_fuzz() {
    for seed in (0..200).step_by(2) {
        let g = fuzz_case(seed, 3).graded.graph().clone();
        let a = bga_table(&g).unwrap();
        assert_eq!(a.dim(), formula_oracle(&g), "seed {seed}");
        assert_eq!(a.dim(), dimension_formula(&g), "seed {seed}");
    }
}

#[test]
fn bga_socle_form_is_symmetric_and_nondegenerate() {
    for seed in (0..60).step_by(2) {
        let g = fuzz_case(seed, 2).graded.graph().clone();
        let a = bga_table(&g).unwrap();
        if a.dim() > 60 {
            continue;
        }
        let socle: Vec<(usize, brauer::linalg::Q)> =
            (0..a.dim()).filter(|&b| a.label(b).starts_with("s(")).map(|b| (b, q(1))).collect();
        let (symmetric, rank) = a.form_rank(&socle);
        assert!(symmetric, "seed {seed}");
        assert_eq!(rank, a.dim(), "seed {seed}");
        let c = a.cartan();
        for i in 0..c.len() {
            for j in 0..c.len() {
                assert_eq!(c[i][j], c[j][i], "seed {seed}");
            }
        }
    }
}

#[test]
fn ex2_skew_model_dimension() {
    let g = samples::ex2();
    let a = skew_bga_table(&g, &samples::ex2_grading()).unwrap();
    assert_eq!(a.dim(), skew_truncation_oracle(&g, &samples::ex2_grading()));
    assert_eq!(a.dim(), 63);
    a.check_associative_auto().unwrap();
    a.check_unit().unwrap();
}

/// Every mod-2 grading of ex2 with zero vertex sums.
fn zero_homogeneous_gradings(g: &BrauerGraph) -> Vec<Grading> {
    let n = g.len();
    (0..1u32 << n)
        .map(|mask| Grading::new(2, &(0..n).map(|h| (mask >> h & 1) as i64).collect::<Vec<_>>()))
        .filter(|gr| check_grading(g, gr).is_ok())
        .collect()
}

#[test]
fn ex2_skew_dimension_is_grading_independent() {
    let g = samples::ex2();
    let gradings = zero_homogeneous_gradings(&g);
    assert!(gradings.len() > 1);
    for gr in gradings.iter().take(8) {
        let a = skew_bga_table(&g, gr).unwrap();
        assert_eq!(a.dim(), 63, "{:?}", gr.degrees());
        assert_eq!(a.dim(), skew_truncation_oracle(&g, gr));
    }
}

#[test]
fn examples_match_their_coverings() {
    let g1 = samples::ex1();
    let c1 = cover(&GradedGraph::new(g1.clone(), samples::ex1_grading()).unwrap()).unwrap();
    assert!(presentations_match(&g1, &c1).matches);
    let g2 = samples::ex2();
    let c2 = cover(&GradedGraph::new(g2.clone(), samples::ex2_grading()).unwrap()).unwrap();
    let r = presentations_match(&g2, &c2);
    assert!(r.matches, "{:?}", r.failure);
    assert_eq!(r.model_dim, 63);
}

/// Fuzz cases whose algebra has dimension at most 40.
fn small_cases(count: usize) -> Vec<FuzzCase> {
    let mut out = Vec::new();
    let mut seed = 0;
    while out.len() < count {
        let case = fuzz_case(seed, 2);
        seed += 1;
        let g = case.graded.graph();
        let dim = if g.is_skew() {
            skew_truncation_oracle(g, case.graded.grading())
        } else {
            dimension_formula(g)
        };
        if dim <= 40 {
            out.push(case);
        }
    }
    out
}

#[test]
fn presentations_match_on_fuzz() {
    let mut skew = 0;
    for case in small_cases(100) {
        let g = case.graded.graph();
        let c = cover(&case.graded).unwrap();
        let r = presentations_match(g, &c);
        assert!(r.matches, "seed {}: {:?}", case.seed, r.failure);
        assert!(r.model_dim <= 40);
        skew += g.is_skew() as usize;
    }
    assert!(skew > 20);
}

#[test]
fn scrambled_cover_does_not_match() {
    let g = samples::ex1();
    let c = cover(&GradedGraph::new(g.clone(), samples::ex1_grading()).unwrap()).unwrap();
    let total = c.total().clone();
    let a = total.half_edge("1+_0").unwrap();
    let b = total.half_edge("3-_1").unwrap();
    let sigma = total.sigma().compose(&Perm::transposition(total.len(), a, b));
    let scrambled = total.with_orientation(sigma, total.multiplicities().to_vec());
    let r = presentations_match(&g, &c.with_total(scrambled));
    assert!(!r.matches);
    assert!(r.failure.is_some());
}

#[test]
fn cut_of_ex1_with_unit_multiplicity_is_gentle() {
    let g = samples::ex1().with_unit_multiplicity();
    let delta = g.subset(&["1-", "2+"]).unwrap();
    let p = admissible_cut(&g, &delta).unwrap();
    assert!(is_gentle(&p));
    let b = bga_table(&g).unwrap();
    let cut = path_quotient(&p).unwrap().table;
    assert_eq!(trivial_extension(&cut).dim(), b.dim());
    // B_Δ is also B modulo the arrows of Δ.
    let basis = BgaBasis::of(&g);
    let gens: Vec<SVec> = delta.iter().filter_map(|&h| basis.arrow(h)).map(SVec::unit).collect();
    let q = quotient_by_ideal(&b, &gens).unwrap();
    assert_eq!(q.dim(), cut.dim());
    assert_eq!(q.cartan(), cut.cartan());
}

#[test]
fn bad_cuts_are_rejected() {
    let g = samples::ex1().with_unit_multiplicity();
    assert!(admissible_cut(&g, &g.subset(&["1-", "4-", "2+"]).unwrap()).is_err());
    assert!(admissible_cut(&g, &HalfEdgeSet::new()).is_err());
    assert!(admissible_cut(&samples::ex1(), &g.subset(&["1-", "2+"]).unwrap()).is_err());
}

#[test]
fn ex2_trivial_extension_of_cut() {
    let g = samples::ex2().with_unit_multiplicity();
    let delta = g.subset(&["2", "5+"]).unwrap();
    let cut = path_quotient(&admissible_cut(&g, &delta).unwrap()).unwrap().table;
    let triv = trivial_extension(&cut);
    triv.check_associative_auto().unwrap();
    assert_eq!(triv.dim(), algebra_of(&g).unwrap().dim());
}

/// The cut `A_0 → C ← A_1` of the cover of the skew graph with edge 1, leg 2
/// and `σ = (1+ 2)`, with the deck transformation acting by the swap.
fn small_cut_with_action() -> (AlgebraTable, GroupActionTable) {
    let g = BrauerGraph::from_cycles(&["1+", "1-", "2"], &[&["1+", "1-"]], &[&["1+", "2"]], &[]).unwrap();
    let c = cover(&GradedGraph::new(g.clone(), Grading::zero(g.len(), 2)).unwrap()).unwrap();
    let total = c.total();
    let delta: HalfEdgeSet = (0..2).map(|i| c.lift(g.half_edge("2").unwrap(), i)).collect();
    let p = admissible_cut(total, &delta).unwrap();
    let pq = path_quotient(&p).unwrap();
    let quiver: &Quiver = &p.quiver;
    let shift = c.shift();
    let images = pq
        .basis
        .iter()
        .map(|(start, arrows)| {
            let v = quiver.vertices[*start];
            let start2 = quiver.vertex(total.edge_of(shift.apply(v.edge)), None).unwrap();
            let arrows2: Vec<usize> = arrows
                .iter()
                .map(|&a| quiver.arrows.iter().position(|x| x.h == shift.apply(quiver.arrows[a].h)).unwrap())
                .collect();
            let img = pq.eval_path(start2, &arrows2);
            assert_eq!(img.nnz(), 1);
            let pair = *img.iter().next().unwrap();
            pair
        })
        .collect();
    let act = GroupActionTable::new(2, images).unwrap();
    (pq.table, act)
}

#[test]
fn phi_is_an_isomorphism_on_small_instance() {
    let (a, act) = small_cut_with_action();
    assert_eq!(a.dim(), 5);
    act.check_automorphism(&a).unwrap();
    let r = check_phi(&a, &act).unwrap();
    assert!(r.dim <= 20);
    assert!(r.is_isomorphism(), "{:?}", r.failure);
}

#[test]
fn skew_cover_model_of_small_instance() {
    let g = BrauerGraph::from_cycles(&["1+", "1-", "2"], &[&["1+", "1-"]], &[&["1+", "2"]], &[]).unwrap();
    let c = cover(&GradedGraph::new(g.clone(), Grading::zero(g.len(), 2)).unwrap()).unwrap();
    let m = covering_model(&c).unwrap();
    assert_eq!(m.table().dim(), skew_truncation_oracle(&g, &Grading::zero(g.len(), 2)));
    assert_eq!(bga_table(c.total()).unwrap().dim(), 10);
}

#[test]
fn cartan_determinant_is_move_invariant() {
    for (g, edges) in [(samples::ex1(), ["1", "2"]), (samples::ex2(), ["1", "4"])] {
        let hp = g.edge_subset(&edges).unwrap();
        let moved = move_set_ungraded(&g, &hp).unwrap();
        let d0 = algebra_of(&g).unwrap().cartan_det().abs();
        let d1 = algebra_of(&moved).unwrap().cartan_det().abs();
        assert_eq!(d0, d1);
    }
    let mut checked = 0;
    for case in small_cases(200) {
        let g = case.graded.graph();
        let moved = move_set_ungraded(g, &case.subset).unwrap();
        let d0 = algebra_of(g).unwrap().cartan_det().abs();
        let d1 = algebra_of(&moved).unwrap().cartan_det().abs();
        assert_eq!(d0, d1, "seed {}", case.seed);
        checked += 1;
    }
    assert_eq!(checked, 200);
}

#[test]
fn mutation_on_examples() {
    let g = samples::ex1();
    let r = verify_mutation(&g, &g.edge_subset(&["1", "2"]).unwrap()).unwrap();
    assert!(r.verified(), "{r:?}");
    assert_eq!(r.end_dim, 22);
    let g = samples::ex2();
    let r = verify_mutation(&g, &g.edge_subset(&["1", "4"]).unwrap()).unwrap();
    assert!(r.verified(), "{r:?}");
    assert_eq!(r.end_dim, 63);
}

#[test]
fn mutation_on_fuzz() {
    let mut seen = BTreeSet::new();
    for case in small_cases(40) {
        let g = case.graded.graph();
        let r = verify_mutation(g, &case.subset).unwrap();
        assert!(r.verified(), "seed {}: {r:?}", case.seed);
        seen.insert(g.is_skew());
    }
    assert_eq!(seen.len(), 2);
}
