//! Idempotent truncation `fAf` with a Peirce- and radical-adapted basis.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, SVec, Q};

use super::{Algebra, AlgebraTable};

pub struct Truncation {
    pub table: AlgebraTable,
    /// Basis of `fAf` in the coordinates of the ambient algebra.
    pub embed: Vec<SVec>,
    coords: Echelon,
}

impl Truncation {
    /// Coordinates of an ambient element lying in `fAf`.
    pub fn coordinates(&self, v: &SVec) -> Option<SVec> {
        self.coords.coordinates(v)
    }
}

fn left_mul<A: Algebra>(a: &A, x: &SVec, b: usize) -> SVec {
    let mut acc = SVec::zero();
    for &(i, c) in x.iter() {
        let p = a.mul_basis(i, b);
        if !p.is_zero() {
            acc = acc.add_scaled(&p, c);
        }
    }
    acc
}

fn independent(vs: impl IntoIterator<Item = SVec>) -> Vec<SVec> {
    let mut ech = Echelon::new();
    vs.into_iter().filter(|v| !v.is_zero() && ech.insert(v).is_some()).collect()
}

fn is_nilpotent<A: Algebra>(a: &A, x: &SVec, bound: usize) -> bool {
    let mut p = x.clone();
    for _ in 0..bound {
        if p.is_zero() {
            return true;
        }
        p = a.mul(&p, x);
    }
    p.is_zero()
}

/// `fAf` for `f = Σ f_x` with the given orthogonal idempotents. Each
/// diagonal corner `f_x A f_x` must be local; its basis starts with `f_x`
/// and continues with radical elements.
pub fn truncate<A: Algebra>(a: &A, idempotents: &[(String, SVec)]) -> Result<Truncation> {
    for (x, (lx, fx)) in idempotents.iter().enumerate() {
        for (y, (_, fy)) in idempotents.iter().enumerate() {
            let p = a.mul(fx, fy);
            let ok = if x == y { &p == fx && !fx.is_zero() } else { p.is_zero() };
            if !ok {
                return Err(Error::Idempotents(format!("{lx} is not idempotent or not orthogonal to the others")));
            }
        }
    }
    let n = idempotents.len();
    let mut embed = Vec::new();
    let mut labels = Vec::new();
    let mut corners = Vec::new();
    let mut radical = Vec::new();
    for (x, (lx, fx)) in idempotents.iter().enumerate() {
        let row = independent((0..a.dim()).map(|b| left_mul(a, fx, b)));
        for (y, (ly, fy)) in idempotents.iter().enumerate() {
            let mut vs: Vec<SVec> = Vec::new();
            if x == y {
                vs.push(fx.clone());
            }
            vs.extend(row.iter().map(|u| a.mul(u, fy)));
            let mut basis = independent(vs);
            if x == y {
                adapt_radical(a, &mut basis, lx)?;
            }
            for (k, v) in basis.into_iter().enumerate() {
                let diagonal_unit = x == y && k == 0;
                labels.push(if diagonal_unit { lx.clone() } else { format!("[{lx}<{ly}]{k}") });
                corners.push((x, y));
                radical.push(!diagonal_unit);
                embed.push(v);
            }
        }
    }
    let mut coords = Echelon::tracking();
    for v in &embed {
        coords.insert(v).expect("corner bases are independent");
    }
    let dim = embed.len();
    let mut table = vec![SVec::zero(); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            if corners[i].1 != corners[j].0 {
                continue;
            }
            let p = a.mul(&embed[i], &embed[j]);
            if p.is_zero() {
                continue;
            }
            table[i * dim + j] =
                coords.coordinates(&p).ok_or_else(|| Error::Algebra("truncation is not closed under products".into()))?;
        }
    }
    let idem_index: Vec<usize> = (0..n).map(|x| corners.iter().position(|&c| c == (x, x)).expect("f_x ∈ f_x A f_x")).collect();
    let idem = idempotents.iter().zip(idem_index).map(|((l, _), k)| (l.clone(), SVec::unit(k))).collect();
    let table = AlgebraTable::from_parts(labels, table, idem, corners, radical);
    Ok(Truncation { table, embed, coords })
}

/// Replaces `basis[1..]` (a complement of `f = basis[0]` in a local corner)
/// by trace-zero elements, which span the radical.
fn adapt_radical<A: Algebra>(a: &A, basis: &mut [SVec], label: &str) -> Result<()> {
    let k = basis.len();
    if k <= 1 {
        return Ok(());
    }
    let mut coords = Echelon::tracking();
    for v in basis.iter() {
        coords.insert(v);
    }
    let f = basis[0].clone();
    let dim = Q::from_integer(k as i64);
    for i in 1..k {
        let mut trace = Q::zero();
        for j in 0..k {
            let c = coords.coordinates(&a.mul(&basis[i], &basis[j])).ok_or_else(|| {
                Error::Algebra(format!("corner at {label} is not closed under products"))
            })?;
            trace += c.get(j);
        }
        basis[i] = basis[i].add_scaled(&f, -trace / dim);
        if !is_nilpotent(a, &basis[i], k + 1) {
            return Err(Error::Idempotents(format!("{label} is not primitive")));
        }
    }
    Ok(())
}
