//! Cyclic group actions by monomial automorphisms and skew group algebras.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{SVec, Q};

use super::{Algebra, AlgebraTable};

/// Action of the generator `g` of `Z/nZ` sending basis element `b` to
/// `c_b · b_{π(b)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupActionTable {
    order: usize,
    /// `pows[s][b] = (π^s(b), coefficient of g^s on b)`.
    pows: Vec<Vec<(usize, Q)>>,
}

impl GroupActionTable {
    pub fn new(order: usize, images: Vec<(usize, Q)>) -> Result<GroupActionTable> {
        if order == 0 {
            return Err(Error::GroupAction("group order must be positive".into()));
        }
        let n = images.len();
        if images.iter().any(|&(k, c)| k >= n || c.is_zero()) {
            return Err(Error::GroupAction("images must be nonzero multiples of basis elements".into()));
        }
        let mut pows = vec![(0..n).map(|b| (b, Q::one())).collect::<Vec<_>>()];
        for s in 1..=order {
            let prev = &pows[s - 1];
            let next: Vec<(usize, Q)> = (0..n)
                .map(|b| {
                    let (k, c) = prev[b];
                    let (k2, c2) = images[k];
                    (k2, c * c2)
                })
                .collect();
            pows.push(next);
        }
        if pows[order].iter().enumerate().any(|(b, &(k, c))| k != b || !c.is_one()) {
            return Err(Error::GroupAction(format!("g^{order} is not the identity")));
        }
        pows.pop();
        Ok(GroupActionTable { order, pows })
    }

    pub fn trivial(dim: usize) -> GroupActionTable {
        GroupActionTable::new(1, (0..dim).map(|b| (b, Q::one())).collect()).expect("identity action")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.pows[0].len()
    }

    /// `g^s · b_b` as `(index, coefficient)`; `s` is taken modulo the order.
    pub fn apply_pow(&self, b: usize, s: i64) -> (usize, Q) {
        self.pows[s.rem_euclid(self.order as i64) as usize][b]
    }

    pub fn apply_vec(&self, v: &SVec, s: i64) -> SVec {
        SVec::from_pairs(v.iter().map(|&(b, c)| {
            let (k, d) = self.apply_pow(b, s);
            (k, c * d)
        }))
    }

    /// Checks that `g` is an algebra automorphism of `a`.
    pub fn check_automorphism(&self, a: &AlgebraTable) -> Result<()> {
        if self.dim() != a.dim() {
            return Err(Error::GroupAction("action and algebra dimensions differ".into()));
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = self.apply_vec(&a.mul_basis(i, j), 1);
                let rhs = a.mul(&self.apply_vec(&SVec::unit(i), 1), &self.apply_vec(&SVec::unit(j), 1));
                if lhs != rhs {
                    return Err(Error::GroupAction(format!(
                        "g does not respect the product {}·{}",
                        a.label(i),
                        a.label(j)
                    )));
                }
            }
        }
        if self.apply_vec(&a.unit(), 1) != a.unit() {
            return Err(Error::GroupAction("g does not fix the unit".into()));
        }
        Ok(())
    }

    /// Permutation induced on the idempotents of `a`, when `g` permutes them.
    pub fn idempotent_permutation(&self, a: &AlgebraTable) -> Result<Vec<usize>> {
        (0..a.idempotents().len())
            .map(|x| {
                let image = self.apply_vec(a.idempotent(x), 1);
                (0..a.idempotents().len())
                    .find(|&y| a.idempotent(y) == &image)
                    .ok_or_else(|| Error::GroupAction(format!("g does not permute the idempotent {}", a.idempotents()[x].0)))
            })
            .collect()
    }
}

/// Lazy skew group algebra `AG`; basis element `b ⊗ g^s` has index `b·n + s`.
pub struct SkewGroup<'a> {
    pub base: &'a AlgebraTable,
    pub act: &'a GroupActionTable,
}

impl<'a> SkewGroup<'a> {
    pub fn new(base: &'a AlgebraTable, act: &'a GroupActionTable) -> Result<SkewGroup<'a>> {
        act.check_automorphism(base)?;
        Ok(SkewGroup { base, act })
    }

    pub fn index(&self, b: usize, s: i64) -> usize {
        b * self.act.order() + s.rem_euclid(self.act.order() as i64) as usize
    }

    pub fn split(&self, k: usize) -> (usize, usize) {
        (k / self.act.order(), k % self.act.order())
    }

    /// `Σ c_b b ⊗ g^s` for an element `Σ c_b b` of the base.
    pub fn tensor(&self, v: &SVec, s: i64) -> SVec {
        SVec::from_pairs(v.iter().map(|&(b, c)| (self.index(b, s), c)))
    }

    /// Left and right corners of `b ⊗ g^s` in terms of the base idempotents,
    /// when `g` permutes them.
    fn corners(&self, perm: &[usize]) -> Vec<(usize, usize)> {
        let n = self.act.order();
        let mut inv = vec![0; perm.len()];
        for (x, &y) in perm.iter().enumerate() {
            inv[y] = x;
        }
        (0..self.dim())
            .map(|k| {
                let (b, s) = self.split(k);
                let (l, mut r) = self.base.corner(b);
                for _ in 0..s % n {
                    r = inv[r];
                }
                (l, r)
            })
            .collect()
    }
}

impl Algebra for SkewGroup<'_> {
    fn dim(&self) -> usize {
        self.base.dim() * self.act.order()
    }

    fn mul_basis(&self, i: usize, j: usize) -> SVec {
        let (a, s) = self.split(i);
        let (b, t) = self.split(j);
        let (gb, c) = self.act.apply_pow(b, s as i64);
        let p = self.base.mul_basis(a, gb);
        if p.is_zero() {
            return p;
        }
        SVec::from_pairs(p.iter().map(|&(k, v)| (self.index(k, (s + t) as i64), v * c)))
    }
}

fn group_suffix(s: usize) -> String {
    match s {
        0 => "⊗1".into(),
        1 => "⊗g".into(),
        _ => format!("⊗g^{s}"),
    }
}

/// Materialized skew group algebra with idempotents `e_x ⊗ 1`.
pub fn skew_group_table(a: &AlgebraTable, act: &GroupActionTable) -> Result<AlgebraTable> {
    let sg = SkewGroup::new(a, act)?;
    let perm = act.idempotent_permutation(a)?;
    let corners = sg.corners(&perm);
    let labels = (0..sg.dim())
        .map(|k| {
            let (b, s) = sg.split(k);
            format!("{}{}", a.label(b), group_suffix(s))
        })
        .collect();
    let idempotents = a.idempotents().iter().map(|(l, e)| (l.clone(), sg.tensor(e, 0))).collect();
    let radical = (0..sg.dim()).map(|k| a.is_radical(sg.split(k).0)).collect();
    Ok(AlgebraTable::from_algebra(&sg, labels, idempotents, corners, radical))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::bga_table;
    use crate::samples;

    #[test]
    fn trivial_group_gives_the_algebra() {
        let a = bga_table(&samples::ex1()).unwrap();
        let t = skew_group_table(&a, &GroupActionTable::trivial(a.dim())).unwrap();
        assert_eq!(t.dim(), a.dim());
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                assert_eq!(t.mul_basis(i, j), a.mul_basis(i, j));
            }
        }
    }

    #[test]
    fn order_is_checked() {
        let swap = vec![(1, Q::one()), (0, Q::one())];
        assert!(GroupActionTable::new(2, swap.clone()).is_ok());
        assert!(GroupActionTable::new(3, swap).is_err());
    }
}
