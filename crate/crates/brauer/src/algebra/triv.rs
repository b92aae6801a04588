//! Trivial extensions `A ⋉ DA` and the comparison map
//! `Φ: Triv(ΛG) → Triv(Λ)G`.

use num_traits::One;

use crate::error::Result;
use crate::linalg::{rank, SVec, Q};

use super::skew::{skew_group_table, GroupActionTable};
use super::{Algebra, AlgebraTable};

/// `Triv(A) = A ⊕ DA` with `(a, φ)(b, ψ) = (ab, aψ + φb)`, where
/// `(aψ)(x) = ψ(xa)` and `(φb)(x) = φ(bx)`. The dual basis element `b*`
/// has index `dim A + b`.
pub fn trivial_extension(a: &AlgebraTable) -> AlgebraTable {
    let d = a.dim();
    let n = 2 * d;
    let mut acc: Vec<Vec<(usize, Q)>> = vec![Vec::new(); n * n];
    for i in 0..d {
        for j in 0..d {
            acc[i * n + j] = a.mul_basis(i, j).iter().copied().collect();
        }
    }
    for i in 0..d {
        for k in 0..d {
            // λ_i · λ_j* has λ_k*-coefficient [λ_j](λ_k λ_i).
            for &(j, c) in a.mul_basis(k, i).iter() {
                acc[i * n + d + j].push((d + k, c));
            }
            // λ_j* · λ_i has λ_k*-coefficient [λ_j](λ_i λ_k).
            for &(j, c) in a.mul_basis(i, k).iter() {
                acc[(d + j) * n + i].push((d + k, c));
            }
        }
    }
    let table = acc.into_iter().map(SVec::from_pairs).collect();
    let mut labels: Vec<String> = a.labels().to_vec();
    labels.extend(a.labels().iter().map(|l| format!("D({l})")));
    let mut corners: Vec<(usize, usize)> = (0..d).map(|b| a.corner(b)).collect();
    corners.extend((0..d).map(|b| {
        let (l, r) = a.corner(b);
        (r, l)
    }));
    let mut radical: Vec<bool> = (0..d).map(|b| a.is_radical(b)).collect();
    radical.extend(std::iter::repeat_n(true, d));
    AlgebraTable::from_parts(labels, table, a.idempotents().to_vec(), corners, radical)
}

/// Action on `Triv(A)` induced by an action on `A`: `(g.φ)(b) = φ(g⁻¹.b)`,
/// so `g.b* = c⁻¹ (π b)*` when `g.b = c·(π b)`.
pub fn dual_action(a: &AlgebraTable, act: &GroupActionTable) -> Result<GroupActionTable> {
    let d = a.dim();
    let mut images: Vec<(usize, Q)> = (0..d).map(|b| act.apply_pow(b, 1)).collect();
    images.extend((0..d).map(|b| {
        let (k, c) = act.apply_pow(b, 1);
        (d + k, Q::one() / c)
    }));
    GroupActionTable::new(act.order(), images)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiReport {
    pub dim: usize,
    pub bijective: bool,
    pub multiplicative: bool,
    /// First product where `Φ(xy) ≠ Φ(x)Φ(y)`, as basis labels.
    pub failure: Option<(String, String)>,
}

impl PhiReport {
    pub fn is_isomorphism(&self) -> bool {
        self.bijective && self.multiplicative
    }
}

/// Evaluates `Φ(a⊗g, φ) = (a,0)⊗g + Σ_h (0, φ_h)⊗h` with
/// `φ_h(b) = φ(h⁻¹.b ⊗ h⁻¹)` on a basis and checks that it is an
/// isomorphism of algebras.
pub fn check_phi(a: &AlgebraTable, act: &GroupActionTable) -> Result<PhiReport> {
    let lhs = trivial_extension(&skew_group_table(a, act)?);
    let triv = trivial_extension(a);
    let rhs = skew_group_table(&triv, &dual_action(a, act)?)?;
    let (d, n) = (a.dim(), act.order());
    let dn = d * n;
    let image = |x: usize| -> SVec {
        if x < dn {
            return SVec::unit(x);
        }
        let (i, s) = ((x - dn) / n, (x - dn) % n);
        // (λ_i⊗g^s)* is supported on h = g^{-s} and evaluates to c at λ_k
        // where g^s.λ_k = c·λ_i.
        let (k, _) = act.apply_pow(i, -(s as i64));
        let (back, c) = act.apply_pow(k, s as i64);
        debug_assert_eq!(back, i);
        let t = (n - s) % n;
        SVec::single((d + k) * n + t, c)
    };
    let images: Vec<SVec> = (0..lhs.dim()).map(image).collect();
    let bijective = lhs.dim() == rhs.dim() && rank(&images) == lhs.dim();
    let apply = |v: &SVec| -> SVec {
        v.iter().fold(SVec::zero(), |acc, &(x, c)| acc.add_scaled(&images[x], c))
    };
    for x in 0..lhs.dim() {
        for y in 0..lhs.dim() {
            let left = apply(&lhs.mul_basis(x, y));
            let right = rhs.mul(&images[x], &images[y]);
            if left != right {
                return Ok(PhiReport {
                    dim: lhs.dim(),
                    bijective,
                    multiplicative: false,
                    failure: Some((lhs.label(x).to_string(), lhs.label(y).to_string())),
                });
            }
        }
    }
    Ok(PhiReport { dim: lhs.dim(), bijective, multiplicative: true, failure: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triv_of_field() {
        let t = trivial_extension(&AlgebraTable::field());
        assert_eq!(t.dim(), 2);
        assert_eq!(t.mul_basis(1, 1), SVec::zero());
        assert_eq!(t.mul_basis(0, 1), SVec::unit(1));
        t.check_associative().unwrap();
        t.check_unit().unwrap();
    }

    #[test]
    fn phi_for_swap_on_two_points() {
        let n = 2;
        let mut table = vec![SVec::zero(); n * n];
        for i in 0..n {
            table[i * n + i] = SVec::unit(i);
        }
        let a = AlgebraTable::from_parts(
            vec!["e0".into(), "e1".into()],
            table,
            vec![("0".into(), SVec::unit(0)), ("1".into(), SVec::unit(1))],
            vec![(0, 0), (1, 1)],
            vec![false, false],
        );
        let act = GroupActionTable::new(2, vec![(1, Q::one()), (0, Q::one())]).unwrap();
        let r = check_phi(&a, &act).unwrap();
        assert!(r.is_isomorphism(), "{r:?}");
        assert_eq!(r.dim, 8);
    }
}
