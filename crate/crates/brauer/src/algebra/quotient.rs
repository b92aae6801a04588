//! Finite-dimensional quotients of path algebras and of algebra tables.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::linalg::{Echelon, SVec, Q};
use crate::presentation::{Presentation, Quiver};

use super::{Algebra, AlgebraTable};

const MAX_LENGTH: usize = 64;
const MAX_PATHS: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PathKey {
    start: usize,
    arrows: Vec<usize>,
}

/// `kQ/I` with basis a set of paths that are independent modulo `I`.
pub struct PathQuotient {
    pub table: AlgebraTable,
    /// Basis paths as `(start vertex, arrows in traversal order)`.
    pub basis: Vec<(usize, Vec<usize>)>,
    /// Every path longer than this lies in the ideal.
    pub length_bound: usize,
    paths: HashMap<PathKey, usize>,
    ideal: Echelon,
    basis_of_path: HashMap<usize, usize>,
    killed: Vec<Vec<usize>>,
}

impl PathQuotient {
    /// Image of the path (traversal order) in the quotient.
    pub fn eval_path(&self, start: usize, arrows: &[usize]) -> SVec {
        let key = PathKey { start, arrows: arrows.to_vec() };
        match self.paths.get(&key) {
            Some(&k) => self.reduce(&SVec::unit(k)),
            None => SVec::zero(),
        }
    }

    fn reduce(&self, v: &SVec) -> SVec {
        self.ideal.remainder(v).map_indices(|k| self.basis_of_path.get(&k).copied())
    }

    /// Paths containing a monomial relation, treated as zero.
    pub fn monomials(&self) -> &[Vec<usize>] {
        &self.killed
    }
}

fn has_killed_suffix(path: &[usize], killed: &[Vec<usize>]) -> bool {
    killed.iter().any(|m| path.ends_with(m))
}

fn enumerate(quiver: &Quiver, killed: &[Vec<usize>], max_len: usize) -> Result<Vec<PathKey>> {
    let mut out: Vec<PathKey> = (0..quiver.vertices.len()).map(|v| PathKey { start: v, arrows: vec![] }).collect();
    let mut outgoing = vec![Vec::new(); quiver.vertices.len()];
    for (k, a) in quiver.arrows.iter().enumerate() {
        outgoing[a.source].push(k);
    }
    let mut frontier = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            let end = p.arrows.last().map_or(p.start, |&a| quiver.arrows[a].target);
            for &a in &outgoing[end] {
                let mut arrows = p.arrows.clone();
                arrows.push(a);
                if !has_killed_suffix(&arrows, killed) {
                    next.push(PathKey { start: p.start, arrows });
                }
            }
        }
        out.extend(next.iter().cloned());
        if out.len() > MAX_PATHS {
            return Err(Error::Algebra("too many paths; the presentation looks infinite-dimensional".into()));
        }
        frontier = next;
    }
    out.sort_by(|a, b| (a.arrows.len(), &a.arrows, a.start).cmp(&(b.arrows.len(), &b.arrows, b.start)));
    Ok(out)
}

fn path_end(quiver: &Quiver, p: &PathKey) -> usize {
    p.arrows.last().map_or(p.start, |&a| quiver.arrows[a].target)
}

/// Computes `kQ/I` for the ideal generated by the relations, assuming it is
/// finite-dimensional. The length bound grows until every path of maximal
/// length lies in the ideal.
pub fn path_quotient(p: &Presentation) -> Result<PathQuotient> {
    let quiver = &p.quiver;
    let killed: Vec<Vec<usize>> = {
        let set: BTreeSet<Vec<usize>> = p.relations.iter().filter(|r| r.is_monomial()).map(|r| r.terms[0].1.clone()).collect();
        set.into_iter().collect()
    };
    let longest = p.relations.iter().flat_map(|r| r.terms.iter().map(|(_, t)| t.len())).max().unwrap_or(1);
    let mut bound = longest.max(1);
    loop {
        if bound > MAX_LENGTH {
            return Err(Error::Algebra(format!("no length bound up to {MAX_LENGTH}")));
        }
        let keys = enumerate(quiver, &killed, bound)?;
        let index: HashMap<PathKey, usize> = keys.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
        let vector = |terms: &mut dyn Iterator<Item = (Q, PathKey)>| -> SVec {
            SVec::from_pairs(terms.filter_map(|(c, key)| index.get(&key).map(|&k| (k, c))))
        };
        let mut ideal = Echelon::new();
        let mut work: Vec<SVec> = Vec::new();
        for r in p.relations.iter().filter(|r| !r.is_monomial()) {
            let Some(start) = r.terms.first().and_then(|(_, t)| t.first()).map(|&a| quiver.arrows[a].source) else {
                continue;
            };
            let v = vector(&mut r.terms.iter().map(|(c, t)| (*c, PathKey { start, arrows: t.clone() })));
            if ideal.insert(&v).is_some() {
                work.push(v);
            }
        }
        let mut by_end: Vec<Vec<usize>> = vec![Vec::new(); quiver.vertices.len()];
        let mut by_start: Vec<Vec<usize>> = vec![Vec::new(); quiver.vertices.len()];
        for (k, a) in quiver.arrows.iter().enumerate() {
            by_start[a.source].push(k);
            by_end[a.target].push(k);
        }
        while let Some(v) = work.pop() {
            let Some(&(k0, _)) = v.iter().next() else { continue };
            let (s, e) = (keys[k0].start, path_end(quiver, &keys[k0]));
            let mut products = Vec::new();
            for &a in &by_start[e] {
                products.push(vector(&mut v.iter().map(|&(k, c)| {
                    let mut arrows = keys[k].arrows.clone();
                    arrows.push(a);
                    (c, PathKey { start: keys[k].start, arrows })
                })));
            }
            for &a in &by_end[s] {
                products.push(vector(&mut v.iter().map(|&(k, c)| {
                    let mut arrows = vec![a];
                    arrows.extend_from_slice(&keys[k].arrows);
                    (c, PathKey { start: quiver.arrows[a].source, arrows })
                })));
            }
            for w in products {
                if !w.is_zero() && ideal.insert(&w).is_some() {
                    work.push(w);
                }
            }
        }
        let top_in_ideal = keys.iter().enumerate().filter(|(_, k)| k.arrows.len() == bound).all(|(i, _)| ideal.is_pivot(i));
        if !top_in_ideal {
            bound += 1;
            continue;
        }
        return Ok(finish(quiver, keys, index, ideal, killed, bound));
    }
}

fn finish(
    quiver: &Quiver,
    keys: Vec<PathKey>,
    index: HashMap<PathKey, usize>,
    ideal: Echelon,
    killed: Vec<Vec<usize>>,
    bound: usize,
) -> PathQuotient {
    let basis_keys: Vec<usize> = (0..keys.len()).filter(|&k| !ideal.is_pivot(k)).collect();
    let basis_of_path: HashMap<usize, usize> = basis_keys.iter().enumerate().map(|(b, &k)| (k, b)).collect();
    let dim = basis_keys.len();
    let mut table = vec![SVec::zero(); dim * dim];
    for (i, &ki) in basis_keys.iter().enumerate() {
        for (j, &kj) in basis_keys.iter().enumerate() {
            // b_i · b_j: walk b_j, then b_i.
            let (x, y) = (&keys[ki], &keys[kj]);
            if path_end(quiver, y) != x.start {
                continue;
            }
            let mut arrows = y.arrows.clone();
            arrows.extend_from_slice(&x.arrows);
            if let Some(&k) = index.get(&PathKey { start: y.start, arrows }) {
                table[i * dim + j] = ideal.remainder(&SVec::unit(k)).map_indices(|k| basis_of_path.get(&k).copied());
            }
        }
    }
    let labels = basis_keys
        .iter()
        .map(|&k| {
            let p = &keys[k];
            if p.arrows.is_empty() {
                format!("e({})", quiver.vertex_label(p.start))
            } else {
                quiver.path_label(&p.arrows)
            }
        })
        .collect();
    let idempotents = (0..quiver.vertices.len())
        .map(|v| (quiver.vertex_label(v).to_string(), SVec::unit(basis_of_path[&index[&PathKey { start: v, arrows: vec![] }]])))
        .collect();
    let corners = basis_keys.iter().map(|&k| (path_end(quiver, &keys[k]), keys[k].start)).collect();
    let radical = basis_keys.iter().map(|&k| !keys[k].arrows.is_empty()).collect();
    let basis = basis_keys.iter().map(|&k| (keys[k].start, keys[k].arrows.clone())).collect();
    let paths = index;
    PathQuotient {
        table: AlgebraTable::from_parts(labels, table, idempotents, corners, radical),
        basis,
        length_bound: bound,
        paths,
        ideal,
        basis_of_path,
        killed,
    }
}

/// `A/I` for the two-sided ideal generated by `gens`. The quotient keeps the
/// basis elements of `A` that are not pivots of the ideal.
pub fn quotient_by_ideal(a: &AlgebraTable, gens: &[SVec]) -> Result<AlgebraTable> {
    let mut ideal = Echelon::new();
    let mut work = Vec::new();
    let n_idem = a.idempotents().len();
    for g in gens {
        for x in 0..n_idem {
            for y in 0..n_idem {
                let piece = a.mul(&a.mul(a.idempotent(x), g), a.idempotent(y));
                if !piece.is_zero() && ideal.insert(&piece).is_some() {
                    work.push(piece);
                }
            }
        }
    }
    while let Some(v) = work.pop() {
        for b in 0..a.dim() {
            let e = SVec::unit(b);
            for w in [a.mul(&e, &v), a.mul(&v, &e)] {
                if !w.is_zero() && ideal.insert(&w).is_some() {
                    work.push(w);
                }
            }
        }
    }
    let keep: Vec<usize> = (0..a.dim()).filter(|&b| !ideal.is_pivot(b)).collect();
    let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    let project = |v: &SVec| ideal.remainder(v).map_indices(|k| pos.get(&k).copied());
    let dim = keep.len();
    let mut table = vec![SVec::zero(); dim * dim];
    for (i, &bi) in keep.iter().enumerate() {
        for (j, &bj) in keep.iter().enumerate() {
            table[i * dim + j] = project(&a.mul_basis(bi, bj));
        }
    }
    let mut idempotents = Vec::new();
    for (l, e) in a.idempotents() {
        let img = project(e);
        if img.is_zero() {
            return Err(Error::Algebra(format!("the ideal contains the idempotent {l}")));
        }
        idempotents.push((l.clone(), img));
    }
    Ok(AlgebraTable::from_parts(
        keep.iter().map(|&b| a.label(b).to_string()).collect(),
        table,
        idempotents,
        keep.iter().map(|&b| a.corner(b)).collect(),
        keep.iter().map(|&b| a.is_radical(b)).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::bga_table;
    use crate::presentation::relations;
    use crate::samples;

    #[test]
    fn ex1_rewriting_matches_basis() {
        let g = samples::ex1();
        let q = path_quotient(&relations(&g)).unwrap();
        assert_eq!(q.table.dim(), 27);
        assert_eq!(q.table.cartan(), bga_table(&g).unwrap().cartan());
        q.table.check_associative().unwrap();
        q.table.check_unit().unwrap();
    }

    #[test]
    fn loop_graph() {
        let g = BrauerGraph::from_cycles(&["a", "b"], &[&["a", "b"]], &[], &[("a", 2)]).unwrap();
        assert_eq!(path_quotient(&relations(&g)).unwrap().table.dim(), 3);
    }

    use crate::graph::BrauerGraph;

    #[test]
    fn quotient_by_arrows_of_ex1() {
        let g = samples::ex1();
        let a = bga_table(&g).unwrap();
        let rad: Vec<SVec> = (0..a.dim()).filter(|&b| a.is_radical(b)).map(SVec::unit).collect();
        let top = quotient_by_ideal(&a, &rad).unwrap();
        assert_eq!(top.dim(), 4);
        assert!(quotient_by_ideal(&a, &[]).unwrap().dim() == 27);
    }
}
