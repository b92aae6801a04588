//! Exact finite-dimensional algebra models.
//!
//! Basis elements are Peirce-adapted: each lies in a single corner
//! `e_L A e_R` of the distinguished idempotents. Products follow the
//! right-to-left path convention, so an arrow `α: x → y` sits in `e_y A e_x`.

mod bga;
mod model;
mod quotient;
mod skew;
mod triv;
mod truncate;

pub use bga::{bga_table, dimension_formula, BgaBasis, BgaElem};
pub use model::{algebra_of, covering_model, skew_bga_table, CoveringModel};
pub use quotient::{path_quotient, quotient_by_ideal, PathQuotient};
pub use skew::{skew_group_table, GroupActionTable, SkewGroup};
pub use triv::{check_phi, dual_action, trivial_extension, PhiReport};
pub use truncate::{truncate, Truncation};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{det_i128, rank, SVec, Q};

/// Anything with a basis and bilinear structure constants.
pub trait Algebra {
    fn dim(&self) -> usize;

    fn mul_basis(&self, i: usize, j: usize) -> SVec;

    fn mul(&self, x: &SVec, y: &SVec) -> SVec {
        let mut acc: std::collections::BTreeMap<usize, Q> = std::collections::BTreeMap::new();
        for &(i, a) in x.iter() {
            for &(j, b) in y.iter() {
                for &(k, c) in self.mul_basis(i, j).iter() {
                    *acc.entry(k).or_insert_with(Q::zero) += a * b * c;
                }
            }
        }
        SVec::from_pairs(acc)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraTable {
    labels: Vec<String>,
    table: Vec<SVec>,
    idempotents: Vec<(String, SVec)>,
    corners: Vec<(usize, usize)>,
    radical: Vec<bool>,
}

impl Algebra for AlgebraTable {
    fn dim(&self) -> usize {
        self.labels.len()
    }

    fn mul_basis(&self, i: usize, j: usize) -> SVec {
        self.table[i * self.labels.len() + j].clone()
    }
}

impl AlgebraTable {
    /// Builds a table from structure constants. `corners[b] = (l, r)` means
    /// `e_l · b · e_r = b`; `radical[b]` marks basis elements of the radical.
    pub fn from_parts(
        labels: Vec<String>,
        table: Vec<SVec>,
        idempotents: Vec<(String, SVec)>,
        corners: Vec<(usize, usize)>,
        radical: Vec<bool>,
    ) -> AlgebraTable {
        let n = labels.len();
        assert_eq!(table.len(), n * n);
        assert_eq!(corners.len(), n);
        assert_eq!(radical.len(), n);
        AlgebraTable { labels, table, idempotents, corners, radical }
    }

    /// Materializes any algebra given its corner and radical data.
    pub fn from_algebra<A: Algebra>(
        a: &A,
        labels: Vec<String>,
        idempotents: Vec<(String, SVec)>,
        corners: Vec<(usize, usize)>,
        radical: Vec<bool>,
    ) -> AlgebraTable {
        let n = a.dim();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(if corners[i].1 == corners[j].0 { a.mul_basis(i, j) } else { SVec::zero() });
            }
        }
        AlgebraTable::from_parts(labels, table, idempotents, corners, radical)
    }

    /// The one-dimensional algebra `k`.
    pub fn field() -> AlgebraTable {
        AlgebraTable::from_parts(
            vec!["1".into()],
            vec![SVec::unit(0)],
            vec![("1".into(), SVec::unit(0))],
            vec![(0, 0)],
            vec![false],
        )
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, b: usize) -> &str {
        &self.labels[b]
    }

    pub fn idempotents(&self) -> &[(String, SVec)] {
        &self.idempotents
    }

    pub fn idempotent(&self, i: usize) -> &SVec {
        &self.idempotents[i].1
    }

    pub fn idempotent_index(&self, label: &str) -> Option<usize> {
        self.idempotents.iter().position(|(l, _)| l == label)
    }

    pub fn corner(&self, b: usize) -> (usize, usize) {
        self.corners[b]
    }

    pub fn is_radical(&self, b: usize) -> bool {
        self.radical[b]
    }

    /// Basis elements of `e_l A e_r`.
    pub fn corner_basis(&self, l: usize, r: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.corners[b] == (l, r)).collect()
    }

    pub fn unit(&self) -> SVec {
        self.idempotents.iter().fold(SVec::zero(), |acc, (_, e)| acc.add(e))
    }

    /// `C[i][j] = dim e_i A e_j`.
    pub fn cartan(&self) -> Vec<Vec<usize>> {
        let n = self.idempotents.len();
        let mut c = vec![vec![0; n]; n];
        for &(l, r) in &self.corners {
            c[l][r] += 1;
        }
        c
    }

    pub fn cartan_det(&self) -> i128 {
        let c: Vec<Vec<i128>> = self.cartan().iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        det_i128(&c)
    }

    fn fail(msg: String) -> Error {
        Error::Algebra(msg)
    }

    fn check_triple(&self, i: usize, j: usize, k: usize) -> Result<()> {
        let ab = self.mul_basis(i, j);
        let left = self.mul(&ab, &SVec::unit(k));
        let bc = self.mul_basis(j, k);
        let right = self.mul(&SVec::unit(i), &bc);
        if left != right {
            return Err(Self::fail(format!(
                "({}·{})·{} ≠ {}·({}·{})",
                self.labels[i], self.labels[j], self.labels[k], self.labels[i], self.labels[j], self.labels[k]
            )));
        }
        Ok(())
    }

    /// Associativity on every basis triple.
    pub fn check_associative(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                if self.table[i * n + j].is_zero() {
                    // (b_i b_j) b_k = 0, so b_i (b_j b_k) must vanish too.
                    for k in 0..n {
                        let bc = self.mul_basis(j, k);
                        if !bc.is_zero() && !self.mul(&SVec::unit(i), &bc).is_zero() {
                            return self.check_triple(i, j, k);
                        }
                    }
                    continue;
                }
                for k in 0..n {
                    self.check_triple(i, j, k)?;
                }
            }
        }
        Ok(())
    }

    /// Associativity on `samples` random triples.
    pub fn check_associative_sampled(&self, samples: usize, seed: u64) -> Result<()> {
        let n = self.dim();
        if n == 0 {
            return Ok(());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            self.check_triple(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
        }
        Ok(())
    }

    /// Full check up to dimension 40, sampled above.
    pub fn check_associative_auto(&self) -> Result<()> {
        if self.dim() <= 40 {
            self.check_associative()
        } else {
            self.check_associative_sampled(10_000, 7)
        }
    }

    /// Idempotents are orthogonal, sum to a two-sided unit, and match the corner data.
    pub fn check_unit(&self) -> Result<()> {
        for (a, (la, ea)) in self.idempotents.iter().enumerate() {
            for (b, (_, eb)) in self.idempotents.iter().enumerate() {
                let p = self.mul(ea, eb);
                let expect = if a == b { ea.clone() } else { SVec::zero() };
                if p != expect {
                    return Err(Error::Idempotents(format!("{la} is not orthogonal or not idempotent")));
                }
            }
        }
        let one = self.unit();
        for b in 0..self.dim() {
            let x = SVec::unit(b);
            if self.mul(&one, &x) != x || self.mul(&x, &one) != x {
                return Err(Self::fail(format!("unit does not fix {}", self.labels[b])));
            }
            let (l, r) = self.corners[b];
            if self.mul(&self.mul(self.idempotent(l), &x), self.idempotent(r)) != x {
                return Err(Self::fail(format!("{} is not in its corner", self.labels[b])));
            }
        }
        Ok(())
    }

    /// Coefficient sum over the given basis elements, used as a trace form.
    pub fn form_rank(&self, functional: &[(usize, Q)]) -> (bool, usize) {
        let n = self.dim();
        let t = |v: &SVec| functional.iter().fold(Q::zero(), |acc, &(k, c)| acc + c * v.get(k));
        let mut symmetric = true;
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::new();
            for j in 0..n {
                let a = t(&self.mul_basis(i, j));
                if a != t(&self.mul_basis(j, i)) {
                    symmetric = false;
                }
                if !a.is_zero() {
                    row.push((j, a));
                }
            }
            rows.push(SVec::from_pairs(row));
        }
        (symmetric, rank(&rows))
    }

    /// Replaces the basis labels.
    pub fn with_labels(mut self, labels: Vec<String>) -> AlgebraTable {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_is_an_algebra() {
        let k = AlgebraTable::field();
        k.check_associative().unwrap();
        k.check_unit().unwrap();
        assert_eq!(k.cartan(), vec![vec![1]]);
    }

    #[test]
    fn semisimple_cartan_is_identity() {
        let n = 3;
        let mut table = vec![SVec::zero(); n * n];
        for i in 0..n {
            table[i * n + i] = SVec::unit(i);
        }
        let a = AlgebraTable::from_parts(
            (0..n).map(|i| format!("e{i}")).collect(),
            table,
            (0..n).map(|i| (format!("e{i}"), SVec::unit(i))).collect(),
            (0..n).map(|i| (i, i)).collect(),
            vec![false; n],
        );
        a.check_associative().unwrap();
        a.check_unit().unwrap();
        assert_eq!(a.cartan(), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(a.cartan_det(), 1);
    }
}
