//! Algebra models built from coverings: `fB_dGf` for a graded (skew) Brauer
//! graph, where `B_d` is the Brauer graph algebra of the covering and `G`
//! acts by the sheet shift.

use num_traits::One;

use crate::covering::{cover, CoveredGraph};
use crate::error::{Error, Result};
use crate::graph::{grading_modulus, BrauerGraph, GradedGraph, Grading};
use crate::linalg::{q, SVec, Q};
use crate::presentation::{Quiver, Relation};

use super::bga::{bga_table, BgaBasis, BgaElem};
use super::skew::{GroupActionTable, SkewGroup};
use super::truncate::{truncate, Truncation};
use super::{Algebra, AlgebraTable};

pub struct CoveringModel {
    pub cover: CoveredGraph,
    /// Quiver of the base with arrows named `β`.
    pub quiver: Quiver,
    pub total_algebra: AlgebraTable,
    pub total_basis: BgaBasis,
    pub shift: GroupActionTable,
    /// The idempotents `f_{[h]}`, `f_{[h]_i}` in `B_d G`, in quiver vertex order.
    pub idempotents: Vec<(String, SVec)>,
    pub truncation: Truncation,
    /// Images of the arrows `β` in the coordinates of the truncation.
    pub arrows: Vec<SVec>,
}

impl CoveringModel {
    pub fn table(&self) -> &AlgebraTable {
        &self.truncation.table
    }

    pub fn skew_group(&self) -> SkewGroup<'_> {
        SkewGroup { base: &self.total_algebra, act: &self.shift }
    }

    /// Image of a path given in traversal order.
    pub fn eval_path(&self, path: &[usize]) -> SVec {
        let t = self.table();
        let mut it = path.iter();
        let Some(&first) = it.next() else { return SVec::zero() };
        it.fold(self.arrows[first].clone(), |acc, &a| t.mul(&self.arrows[a], &acc))
    }

    pub fn eval_relation(&self, r: &Relation) -> SVec {
        r.terms.iter().fold(SVec::zero(), |acc, (c, p)| acc.add_scaled(&self.eval_path(p), *c))
    }
}

/// The sheet shift `h_i ↦ h_{i+1}` on the normal-form basis of `B_d`.
fn shift_action(c: &CoveredGraph, basis: &BgaBasis) -> Result<GroupActionTable> {
    let t = c.total();
    let s = c.shift();
    let images = basis
        .elements
        .iter()
        .map(|&b| {
            let image = match b {
                BgaElem::Idem(e) => BgaElem::Idem(t.edge_of(s.apply(e))),
                BgaElem::Socle(e) => BgaElem::Socle(t.edge_of(s.apply(e))),
                BgaElem::Path { h, len } => BgaElem::Path { h: s.apply(h), len },
            };
            basis
                .index(image)
                .map(|k| (k, Q::one()))
                .ok_or_else(|| Error::GroupAction("the shift does not preserve the normal-form basis".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    GroupActionTable::new(c.group_order(), images)
}

pub fn covering_model(c: &CoveredGraph) -> Result<CoveringModel> {
    let base = c.base().graph();
    let grading = c.base().grading();
    let total = c.total();
    let total_algebra = bga_table(total)?;
    let total_basis = BgaBasis::of(total);
    let shift = shift_action(c, &total_basis)?;
    let sg = SkewGroup::new(&total_algebra, &shift)?;
    let quiver = Quiver::with_symbol(base, "β");
    let half = q(1) / q(2);

    let idempotents: Vec<(String, SVec)> = quiver
        .vertices
        .iter()
        .enumerate()
        .map(|(k, v)| {
            let e = total_basis.idem(total.edge_of(c.lift(v.edge, 0)));
            let f = match v.copy {
                None => sg.tensor(&SVec::unit(e), 0),
                Some(i) => {
                    let sign = if i == 0 { half } else { -half };
                    SVec::from_pairs([(sg.index(e, 0), half), (sg.index(e, 1), sign)])
                }
            };
            (quiver.vertex_label(k).to_string(), f)
        })
        .collect();
    let truncation = truncate(&sg, &idempotents)?;

    let order = c.group_order() as i64;
    let mut arrows = Vec::with_capacity(quiver.arrows.len());
    for a in &quiver.arrows {
        let d = grading.degree(a.h) as i64;
        let lifted = c.lift(a.h, (-d).rem_euclid(order) as usize);
        let alpha = total_basis
            .arrow(lifted)
            .ok_or_else(|| Error::Algebra(format!("{} induces no arrow in the covering", total.name(lifted))))?;
        let x = sg.tensor(&SVec::unit(alpha), -d);
        let beta = sg.mul(&sg.mul(&idempotents[a.target].1, &x), &idempotents[a.source].1);
        let coords = truncation
            .coordinates(&beta)
            .ok_or_else(|| Error::Algebra("an arrow image lies outside fAf".into()))?;
        arrows.push(coords);
    }
    Ok(CoveringModel { cover: c.clone(), quiver, total_algebra, total_basis, shift, idempotents, truncation, arrows })
}

/// Model of a (skew) Brauer graph algebra through the covering given by `grading`.
pub fn skew_bga_table(graph: &BrauerGraph, grading: &Grading) -> Result<AlgebraTable> {
    let gg = GradedGraph::new(graph.clone(), grading.clone())?;
    Ok(covering_model(&cover(&gg)?)?.truncation.table)
}

/// `bga_table` for ordinary graphs, the covering model with zero grading for skew ones.
pub fn algebra_of(graph: &BrauerGraph) -> Result<AlgebraTable> {
    if graph.is_skew() {
        skew_bga_table(graph, &Grading::zero(graph.len(), grading_modulus(graph)))
    } else {
        bga_table(graph)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn ex1_model_has_base_dimension() {
        let gg = GradedGraph::new(samples::ex1(), samples::ex1_grading()).unwrap();
        let m = covering_model(&cover(&gg).unwrap()).unwrap();
        assert_eq!(m.total_algebra.dim(), 54);
        assert_eq!(m.table().dim(), 27);
        m.table().check_associative().unwrap();
        m.table().check_unit().unwrap();
        assert!(m.arrows.iter().all(|a| !a.is_zero()));
    }

    #[test]
    fn ex2_model_is_an_algebra() {
        let t = algebra_of(&samples::ex2()).unwrap();
        t.check_associative_auto().unwrap();
        t.check_unit().unwrap();
        assert_eq!(t.idempotents().len(), 7);
    }
}
