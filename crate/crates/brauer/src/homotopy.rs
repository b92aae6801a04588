//! Two-term complexes of projective right modules, their homotopy-category
//! morphism spaces, left mutation at a set of edges, and endomorphism
//! algebras of the mutated object.
//!
//! `Hom(e_xA, e_yA) ≅ e_y A e_x` by evaluation at `e_x`; composing
//! `u: e_xA → e_yA` with `v: e_yA → e_zA` gives `v·u`.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::algebra::{algebra_of, truncate, Algebra, AlgebraTable};
use crate::error::{Error, Result};
use crate::graph::{BrauerGraph, HalfEdgeSet};
use crate::linalg::{kernel, rank, Echelon, SVec, Q};
use crate::moves::move_set_ungraded;
use crate::presentation::Quiver;

/// Matrix of algebra elements; `m[r][c]` maps summand `c` of the source to
/// summand `r` of the target.
pub type Matrix = Vec<Vec<SVec>>;

/// `X^{-1} → X^0` with `X^i` a sum of indecomposable projectives `e_xA`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjPresentation {
    pub label: String,
    pub deg_minus1: Vec<usize>,
    pub deg0: Vec<usize>,
    /// Rows indexed by `deg0`, columns by `deg_minus1`.
    pub differential: Matrix,
}

impl ProjPresentation {
    pub fn stalk(label: impl Into<String>, x: usize) -> ProjPresentation {
        ProjPresentation { label: label.into(), deg_minus1: vec![], deg0: vec![x], differential: vec![vec![]] }
    }

    pub fn is_stalk(&self) -> bool {
        self.deg_minus1.is_empty()
    }

    /// Entries lie in the right corners.
    pub fn check(&self, a: &AlgebraTable) -> Result<()> {
        if self.differential.len() != self.deg0.len() || self.differential.iter().any(|r| r.len() != self.deg_minus1.len()) {
            return Err(Error::Algebra(format!("{}: differential has the wrong shape", self.label)));
        }
        for (r, &y) in self.deg0.iter().enumerate() {
            for (c, &x) in self.deg_minus1.iter().enumerate() {
                if self.differential[r][c].iter().any(|&(b, _)| a.corner(b) != (y, x)) {
                    return Err(Error::Algebra(format!("{}: entry ({r}, {c}) is outside e_y A e_x", self.label)));
                }
            }
        }
        Ok(())
    }
}

/// Basis of `Hom(e_iA, e_jA) = e_j A e_i` as indices of basis elements of `a`.
pub fn proj_hom(a: &AlgebraTable, i: usize, j: usize) -> Vec<usize> {
    a.corner_basis(j, i)
}

fn zero_matrix(rows: usize, cols: usize) -> Matrix {
    vec![vec![SVec::zero(); cols]; rows]
}

/// `g ∘ f`.
fn compose(a: &AlgebraTable, g: &Matrix, f: &Matrix, cols: usize) -> Matrix {
    let rows = g.len();
    let mut out = zero_matrix(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            let mut acc = SVec::zero();
            for (k, gk) in g[r].iter().enumerate() {
                if gk.is_zero() || f[k][c].is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(gk, &f[k][c]));
            }
            out[r][c] = acc;
        }
    }
    out
}

/// Coordinates for `Hom(⊕ e_{cols}A, ⊕ e_{rows}A)`.
struct MatSpace {
    rows: Vec<usize>,
    cols: Vec<usize>,
    blocks: Vec<(usize, usize, Vec<usize>)>,
    dim: usize,
}

impl MatSpace {
    fn new(a: &AlgebraTable, rows: &[usize], cols: &[usize]) -> MatSpace {
        let mut blocks = Vec::new();
        let mut dim = 0;
        for (r, &y) in rows.iter().enumerate() {
            for (c, &x) in cols.iter().enumerate() {
                let basis = proj_hom(a, x, y);
                dim += basis.len();
                blocks.push((r, c, basis));
            }
        }
        MatSpace { rows: rows.to_vec(), cols: cols.to_vec(), blocks, dim }
    }

    fn vector(&self, m: &Matrix) -> SVec {
        let mut pairs = Vec::new();
        let mut off = 0;
        for (r, c, basis) in &self.blocks {
            for (k, &b) in basis.iter().enumerate() {
                let v = m[*r][*c].get(b);
                if !v.is_zero() {
                    pairs.push((off + k, v));
                }
            }
            off += basis.len();
        }
        SVec::from_pairs(pairs)
    }

    fn matrix(&self, v: &SVec) -> Matrix {
        let mut m = zero_matrix(self.rows.len(), self.cols.len());
        let mut off = 0;
        for (r, c, basis) in &self.blocks {
            let entry = SVec::from_pairs(basis.iter().enumerate().map(|(k, &b)| (b, v.get(off + k))));
            m[*r][*c] = entry;
            off += basis.len();
        }
        m
    }

    fn basis(&self) -> Vec<Matrix> {
        (0..self.dim).map(|k| self.matrix(&SVec::unit(k))).collect()
    }
}

fn shifted(v: &SVec, by: usize) -> SVec {
    SVec::from_pairs(v.iter().map(|&(k, c)| (k + by, c)))
}

/// A chain map `X → Y` of two-term complexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub minus1: Matrix,
    pub zero: Matrix,
}

/// `Hom_K(X, Y[k])`; representatives are kept for `k = 0`.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub shift: i32,
    pub dim: usize,
    pub representatives: Vec<ChainMap>,
}

struct Hom0 {
    s1: MatSpace,
    s0: MatSpace,
    reduce: Echelon,
    homotopies: usize,
    reps: Vec<ChainMap>,
}

impl Hom0 {
    fn new(a: &AlgebraTable, x: &ProjPresentation, y: &ProjPresentation) -> Hom0 {
        let s1 = MatSpace::new(a, &y.deg_minus1, &x.deg_minus1);
        let s0 = MatSpace::new(a, &y.deg0, &x.deg0);
        let target = MatSpace::new(a, &y.deg0, &x.deg_minus1);
        let mut columns = Vec::with_capacity(s1.dim + s0.dim);
        for e in s1.basis() {
            columns.push(target.vector(&compose(a, &y.differential, &e, x.deg_minus1.len())).scaled(-Q::one()));
        }
        for e in s0.basis() {
            columns.push(target.vector(&compose(a, &e, &x.differential, x.deg_minus1.len())));
        }
        let chain_maps = kernel(&columns);
        let mut reduce = Echelon::tracking();
        let mut homotopies = 0;
        for s in MatSpace::new(a, &y.deg_minus1, &x.deg0).basis() {
            let f1 = compose(a, &s, &x.differential, x.deg_minus1.len());
            let f0 = compose(a, &y.differential, &s, x.deg0.len());
            let v = s1.vector(&f1).add(&shifted(&s0.vector(&f0), s1.dim));
            if reduce.insert(&v).is_some() {
                homotopies += 1;
            }
        }
        let mut reps = Vec::new();
        for v in chain_maps {
            if reduce.insert(&v).is_some() {
                reps.push(ChainMap { minus1: s1.matrix(&v), zero: s0.matrix(&split_high(&v, s1.dim)) });
            }
        }
        Hom0 { s1, s0, reduce, homotopies, reps }
    }

    fn vec_of(&self, f: &ChainMap) -> SVec {
        self.s1.vector(&f.minus1).add(&shifted(&self.s0.vector(&f.zero), self.s1.dim))
    }

    /// Coordinates of a chain map modulo homotopy in the representatives.
    fn coordinates(&self, f: &ChainMap) -> Result<SVec> {
        let combo = self
            .reduce
            .coordinates(&self.vec_of(f))
            .ok_or_else(|| Error::Algebra("not a chain map".into()))?;
        Ok(SVec::from_pairs(combo.iter().filter(|(k, _)| *k >= self.homotopies).map(|&(k, c)| (k - self.homotopies, c))))
    }
}

fn split_high(v: &SVec, from: usize) -> SVec {
    SVec::from_pairs(v.iter().filter(|(k, _)| *k >= from).map(|&(k, c)| (k - from, c)))
}

/// Dimension of `Hom_{K^b(proj A)}(X, Y[k])` for two-term complexes.
pub fn hom_complexes(a: &AlgebraTable, x: &ProjPresentation, y: &ProjPresentation, k: i32) -> HomSpace {
    match k {
        0 => {
            let h = Hom0::new(a, x, y);
            HomSpace { shift: 0, dim: h.reps.len(), representatives: h.reps }
        }
        1 => {
            // X^{-1} → Y^0 modulo Hom(X^0, Y^0)∘d_X + d_Y∘Hom(X^{-1}, Y^{-1}).
            let v = MatSpace::new(a, &y.deg0, &x.deg_minus1);
            let mut images = Vec::new();
            for e in MatSpace::new(a, &y.deg0, &x.deg0).basis() {
                images.push(v.vector(&compose(a, &e, &x.differential, x.deg_minus1.len())));
            }
            for e in MatSpace::new(a, &y.deg_minus1, &x.deg_minus1).basis() {
                images.push(v.vector(&compose(a, &y.differential, &e, x.deg_minus1.len())));
            }
            HomSpace { shift: 1, dim: v.dim - rank(&images), representatives: vec![] }
        }
        -1 => {
            // X^0 → Y^{-1} killed by d_Y on the left and d_X on the right.
            let v = MatSpace::new(a, &y.deg_minus1, &x.deg0);
            let left = MatSpace::new(a, &y.deg0, &x.deg0);
            let right = MatSpace::new(a, &y.deg_minus1, &x.deg_minus1);
            let columns: Vec<SVec> = v
                .basis()
                .iter()
                .map(|e| {
                    left.vector(&compose(a, &y.differential, e, x.deg0.len()))
                        .add(&shifted(&right.vector(&compose(a, e, &x.differential, x.deg_minus1.len())), left.dim))
                })
                .collect();
            HomSpace { shift: -1, dim: kernel(&columns).len(), representatives: vec![] }
        }
        _ => HomSpace { shift: k, dim: 0, representatives: vec![] },
    }
}

/// Minimal left `add(⊕_{y ∈ targets} e_yA)`-approximation of `e_xA`: a
/// basis of `⊕_y e_y A e_x` modulo the maps factoring through a radical map
/// between the targets. Returns `(y, u)` with `u ∈ e_y A e_x`.
pub fn minimal_approximation(a: &AlgebraTable, x: usize, targets: &BTreeSet<usize>) -> Vec<(usize, SVec)> {
    let mut out = Vec::new();
    for &y in targets {
        let mut composites = Echelon::new();
        for &z in targets {
            for &u in &proj_hom(a, x, z) {
                for &v in &proj_hom(a, z, y) {
                    if a.is_radical(v) {
                        composites.insert(&a.mul_basis(v, u));
                    }
                }
            }
        }
        for &u in &proj_hom(a, x, y) {
            let e = SVec::unit(u);
            if composites.insert(&e).is_some() {
                out.push((y, e));
            }
        }
    }
    out
}

/// Components of an approximation are independent modulo maps factoring
/// through radical maps between its targets, so no target summand can be
/// dropped.
pub fn is_left_minimal(a: &AlgebraTable, x: usize, components: &[(usize, SVec)]) -> bool {
    let targets: BTreeSet<usize> = components.iter().map(|(y, _)| *y).collect();
    for &y in &targets {
        let mut ech = Echelon::new();
        for &z in &targets {
            for &u in &proj_hom(a, x, z) {
                for &v in &proj_hom(a, z, y) {
                    if a.is_radical(v) {
                        ech.insert(&a.mul_basis(v, u));
                    }
                }
            }
        }
        for (_, u) in components.iter().filter(|(t, _)| *t == y) {
            if ech.insert(u).is_none() {
                return false;
            }
        }
    }
    true
}

/// `μ⁺(A; e_{unmoved}A)`: stalks at unmoved idempotents, and for a moved
/// idempotent `x` the cone of its minimal approximation by the unmoved ones.
pub fn mutation_object(a: &AlgebraTable, moved: &[bool]) -> Vec<ProjPresentation> {
    let unmoved: BTreeSet<usize> = (0..moved.len()).filter(|&x| !moved[x]).collect();
    (0..moved.len())
        .map(|x| {
            let label = a.idempotents()[x].0.clone();
            if !moved[x] {
                return ProjPresentation::stalk(label, x);
            }
            let approx = minimal_approximation(a, x, &unmoved);
            ProjPresentation {
                label,
                deg_minus1: vec![x],
                deg0: approx.iter().map(|(y, _)| *y).collect(),
                differential: approx.into_iter().map(|(_, u)| vec![u]).collect(),
            }
        })
        .collect()
}

/// `Hom(T, T[k])` summed over all pairs of summands.
pub fn total_hom(a: &AlgebraTable, t: &[ProjPresentation], k: i32) -> usize {
    t.iter().map(|x| t.iter().map(|y| hom_complexes(a, x, y, k).dim).sum::<usize>()).sum()
}

pub fn is_presilting(a: &AlgebraTable, t: &[ProjPresentation]) -> bool {
    total_hom(a, t, 1) == 0
}

pub fn is_tilting(a: &AlgebraTable, t: &[ProjPresentation]) -> bool {
    total_hom(a, t, 1) == 0 && total_hom(a, t, -1) == 0
}

/// `End(T)` with one idempotent per summand; `Hom(T_i, T_j)` sits in corner `(j, i)`.
pub fn end_table(a: &AlgebraTable, t: &[ProjPresentation]) -> Result<AlgebraTable> {
    for k in [1, -1] {
        let d = total_hom(a, t, k);
        if d != 0 {
            return Err(Error::NotTilting(format!("Hom(T, T[{k}]) has dimension {d}")));
        }
    }
    let n = t.len();
    let homs: Vec<Vec<Hom0>> = (0..n).map(|j| (0..n).map(|i| Hom0::new(a, &t[i], &t[j])).collect()).collect();
    let mut offsets = vec![vec![0; n]; n];
    let mut labels = Vec::new();
    let mut corners = Vec::new();
    let mut elements: Vec<(usize, usize, usize)> = Vec::new();
    for j in 0..n {
        for i in 0..n {
            offsets[j][i] = elements.len();
            for k in 0..homs[j][i].reps.len() {
                elements.push((j, i, k));
                labels.push(format!("[{}<{}]{k}", t[j].label, t[i].label));
                corners.push((j, i));
            }
        }
    }
    let dim = elements.len();
    let mut table = vec![SVec::zero(); dim * dim];
    for (p, &(k2, j2, r2)) in elements.iter().enumerate() {
        for (q, &(j1, i1, r1)) in elements.iter().enumerate() {
            if j2 != j1 {
                continue;
            }
            let g = &homs[k2][j2].reps[r2];
            let f = &homs[j1][i1].reps[r1];
            let comp = ChainMap {
                minus1: compose(a, &g.minus1, &f.minus1, t[i1].deg_minus1.len()),
                zero: compose(a, &g.zero, &f.zero, t[i1].deg0.len()),
            };
            let coords = homs[k2][i1].coordinates(&comp)?;
            table[p * dim + q] = shifted(&coords, offsets[k2][i1]);
        }
    }
    let mut idempotents = Vec::new();
    for i in 0..n {
        let id = ChainMap { minus1: identity(a, &t[i].deg_minus1), zero: identity(a, &t[i].deg0) };
        let coords = homs[i][i].coordinates(&id)?;
        idempotents.push((t[i].label.clone(), shifted(&coords, offsets[i][i])));
    }
    let radical = vec![true; dim];
    let raw = AlgebraTable::from_parts(labels, table, idempotents.clone(), corners, radical);
    Ok(truncate(&raw, &idempotents)?.table)
}

fn identity(a: &AlgebraTable, summands: &[usize]) -> Matrix {
    let n = summands.len();
    let mut m = zero_matrix(n, n);
    for (k, &x) in summands.iter().enumerate() {
        m[k][k] = a.idempotent(x).clone();
    }
    m
}

/// Edge (smallest half-edge) behind each idempotent of `algebra_of(graph)`.
pub fn idempotent_edges(graph: &BrauerGraph) -> Vec<usize> {
    if graph.is_skew() {
        Quiver::of(graph).vertices.iter().map(|v| v.edge).collect()
    } else {
        graph.edges().iter().map(|e| e[0]).collect()
    }
}

/// One side of the approximation of `e_{[h]}B` read off the graph: the
/// arrows along the sector starting at `start`, ending at the edge of
/// `target`, or no target when the whole σ-orbit lies in `H'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxComponent {
    pub start: usize,
    pub target: Option<usize>,
    /// `start, σ start, …, σ^r start`.
    pub path: Vec<usize>,
}

pub fn approximation(graph: &BrauerGraph, hp: &HalfEdgeSet, h: usize) -> Result<Vec<ApproxComponent>> {
    if !hp.contains(&h) {
        return Err(Error::NotInSubset(graph.name(h).to_string()));
    }
    let mut sides = vec![h];
    if graph.iota().apply(h) != h {
        sides.push(graph.iota().apply(h));
    }
    let mut out = Vec::new();
    for s in sides {
        let orbit = graph.orbit(s);
        match orbit.iter().position(|x| !hp.contains(x)) {
            Some(r1) => out.push(ApproxComponent { start: s, target: Some(orbit[r1]), path: orbit[..r1].to_vec() }),
            None => out.push(ApproxComponent { start: s, target: None, path: orbit.clone() }),
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MutationReport {
    pub summands: usize,
    pub moved: usize,
    pub presilting: bool,
    pub tilting: bool,
    pub minimal: bool,
    pub end_dim: usize,
    pub moved_dim: usize,
    pub end_cartan: Vec<Vec<usize>>,
    pub moved_cartan: Vec<Vec<usize>>,
    pub cartan_equal: bool,
}

impl MutationReport {
    pub fn verified(&self) -> bool {
        self.presilting && self.tilting && self.minimal && self.end_dim == self.moved_dim && self.cartan_equal
    }
}

/// Compares Cartan matrices up to swapping the two copies of each leg.
fn cartan_equal_up_to_copies(graph: &BrauerGraph, c1: &[Vec<usize>], c2: &[Vec<usize>]) -> bool {
    if c1.len() != c2.len() {
        return false;
    }
    let q = Quiver::of(graph);
    let pairs: Vec<(usize, usize)> = graph
        .cross_half_edges()
        .into_iter()
        .filter_map(|h| Some((q.vertex(h, Some(0))?, q.vertex(h, Some(1))?)))
        .collect();
    let n = c1.len();
    for mask in 0..(1u64 << pairs.len()) {
        let mut perm: Vec<usize> = (0..n).collect();
        for (k, &(a, b)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                perm.swap(a, b);
            }
        }
        if (0..n).all(|i| (0..n).all(|j| c1[perm[i]][perm[j]] == c2[i][j])) {
            return true;
        }
    }
    false
}

/// Mutates the algebra of `graph` at the edges of `hp` and compares the
/// endomorphism algebra with the algebra of the moved graph.
pub fn verify_mutation(graph: &BrauerGraph, hp: &HalfEdgeSet) -> Result<MutationReport> {
    if !graph.is_pairing_stable(hp) {
        return Err(Error::NotPairingStable(graph.names_of(hp).join(" ")));
    }
    let a = algebra_of(graph)?;
    let edges = idempotent_edges(graph);
    let moved: Vec<bool> = edges.iter().map(|e| hp.contains(e)).collect();
    let t = mutation_object(&a, &moved);
    for x in &t {
        x.check(&a)?;
    }
    let minimal = t.iter().all(|x| x.is_stalk() || is_left_minimal(&a, x.deg_minus1[0], &column(x)));
    let presilting = is_presilting(&a, &t);
    let tilting = is_tilting(&a, &t);
    let moved_graph = move_set_ungraded(graph, hp)?;
    let b = algebra_of(&moved_graph)?;
    let (end_dim, end_cartan) = if tilting {
        let e = end_table(&a, &t)?;
        (e.dim(), e.cartan())
    } else {
        (0, vec![])
    };
    let moved_cartan = b.cartan();
    let cartan_equal = tilting && cartan_equal_up_to_copies(graph, &end_cartan, &moved_cartan);
    Ok(MutationReport {
        summands: t.len(),
        moved: moved.iter().filter(|&&m| m).count(),
        presilting,
        tilting,
        minimal,
        end_dim,
        moved_dim: b.dim(),
        end_cartan,
        moved_cartan,
        cartan_equal,
    })
}

fn column(x: &ProjPresentation) -> Vec<(usize, SVec)> {
    x.deg0.iter().zip(&x.differential).map(|(&y, row)| (y, row[0].clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{bga_table, BgaBasis, BgaElem};
    use crate::samples;

    #[test]
    fn stalk_homs_are_cartan_entries() {
        let a = bga_table(&samples::ex1()).unwrap();
        let c = a.cartan();
        let n = c.len();
        for i in 0..n {
            for j in 0..n {
                let x = ProjPresentation::stalk("x", i);
                let y = ProjPresentation::stalk("y", j);
                assert_eq!(hom_complexes(&a, &x, &y, 0).dim, c[j][i]);
                assert_eq!(hom_complexes(&a, &x, &y, 1).dim, 0);
                assert_eq!(hom_complexes(&a, &x, &y, -1).dim, 0);
                assert_eq!(hom_complexes(&a, &x, &y, 2).dim, 0);
            }
        }
    }

    #[test]
    fn hom_from_p4_to_p3_contains_alpha() {
        let g = samples::ex1();
        let a = bga_table(&g).unwrap();
        let basis = BgaBasis::of(&g);
        let e = |s: &str| idempotent_edges(&g).iter().position(|&x| x == g.edge_of(g.half_edge(s).unwrap())).unwrap();
        let alpha = basis.index(BgaElem::Path { h: g.half_edge("4-").unwrap(), len: 1 }).unwrap();
        assert!(proj_hom(&a, e("4-"), e("3-")).contains(&alpha));
    }

    #[test]
    fn empty_mutation_gives_the_algebra() {
        let a = bga_table(&samples::ex1()).unwrap();
        let t = mutation_object(&a, &[false; 4]);
        assert!(t.iter().all(|x| x.is_stalk()));
        let e = end_table(&a, &t).unwrap();
        assert_eq!(e.dim(), a.dim());
        assert_eq!(e.cartan(), a.cartan());
        e.check_associative().unwrap();
        e.check_unit().unwrap();
    }

    #[test]
    fn ex1_mutation() {
        let g = samples::ex1();
        let hp = g.edge_subset(&["1", "2"]).unwrap();
        let r = verify_mutation(&g, &hp).unwrap();
        assert!(r.verified(), "{r:?}");
        assert_eq!(r.summands, 4);
        assert_eq!(r.moved, 2);
        assert_eq!(r.end_dim, 22);
    }

    #[test]
    fn ex1_combinatorial_approximation_matches() {
        let g = samples::ex1();
        let hp = g.edge_subset(&["1", "2"]).unwrap();
        let a = bga_table(&g).unwrap();
        let basis = BgaBasis::of(&g);
        let edges = idempotent_edges(&g);
        let pos = |h: usize| edges.iter().position(|&e| e == g.edge_of(h)).unwrap();
        let unmoved: BTreeSet<usize> = (0..edges.len()).filter(|&x| !hp.contains(&edges[x])).collect();
        for name in ["1+", "2+"] {
            let h = g.half_edge(name).unwrap();
            let comb = approximation(&g, &hp, h).unwrap();
            let generic = minimal_approximation(&a, pos(h), &unmoved);
            let mut want: Vec<usize> = comb.iter().filter_map(|c| c.target.map(pos)).collect();
            let mut got: Vec<usize> = generic.iter().map(|(y, _)| *y).collect();
            want.sort();
            got.sort();
            assert_eq!(want, got, "{name}");
            let comps: Vec<(usize, SVec)> = comb
                .iter()
                .filter_map(|c| {
                    let y = pos(c.target?);
                    let b = basis.index(BgaElem::Path { h: c.start, len: c.path.len() })?;
                    Some((y, SVec::unit(b)))
                })
                .collect();
            assert!(is_left_minimal(&a, pos(h), &comps));
        }
    }

    #[test]
    fn ex2_mutation() {
        let g = samples::ex2();
        let hp = g.edge_subset(&["1", "4"]).unwrap();
        let r = verify_mutation(&g, &hp).unwrap();
        assert!(r.verified(), "{r:?}");
    }

    #[test]
    fn approximation_requires_membership() {
        let g = samples::ex1();
        let hp = g.edge_subset(&["1"]).unwrap();
        assert!(approximation(&g, &hp, g.half_edge("3+").unwrap()).is_err());
        let whole = g.edge_subset(&["2", "3"]).unwrap();
        let comps = approximation(&g, &whole, g.half_edge("2+").unwrap()).unwrap();
        assert_eq!(comps.iter().filter(|c| c.target.is_none()).count(), 1);
    }
}
