//! Exact sparse linear algebra over the rationals.

use std::collections::BTreeMap;

use num_rational::Ratio;
use num_traits::{One, Zero};

/// Exact scalar type used throughout the crate.
pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

/// Sparse vector: sorted `(index, value)` pairs with no zero values.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SVec {
    entries: Vec<(usize, Q)>,
}

impl SVec {
    pub fn zero() -> Self {
        SVec { entries: Vec::new() }
    }

    pub fn unit(i: usize) -> Self {
        SVec { entries: vec![(i, Q::one())] }
    }

    pub fn single(i: usize, c: Q) -> Self {
        if c.is_zero() {
            SVec::zero()
        } else {
            SVec { entries: vec![(i, c)] }
        }
    }

    /// Builds a vector from unsorted pairs, summing repeated indices.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Q)>>(pairs: I) -> Self {
        let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
        for (i, c) in pairs {
            *acc.entry(i).or_insert_with(Q::zero) += c;
        }
        SVec {
            entries: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    fn from_sorted_unchecked(entries: Vec<(usize, Q)>) -> Self {
        SVec { entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Q)> {
        self.entries.iter()
    }

    pub fn get(&self, i: usize) -> Q {
        match self.entries.binary_search_by_key(&i, |e| e.0) {
            Ok(k) => self.entries[k].1,
            Err(_) => Q::zero(),
        }
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|e| e.0)
    }

    pub fn scaled(&self, c: Q) -> SVec {
        if c.is_zero() {
            return SVec::zero();
        }
        SVec::from_sorted_unchecked(self.entries.iter().map(|&(i, v)| (i, v * c)).collect())
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &SVec, c: Q) -> SVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() || b < other.entries.len() {
            let ia = self.entries.get(a).map(|e| e.0).unwrap_or(usize::MAX);
            let ib = other.entries.get(b).map(|e| e.0).unwrap_or(usize::MAX);
            if ia < ib {
                out.push(self.entries[a]);
                a += 1;
            } else if ib < ia {
                out.push((ib, other.entries[b].1 * c));
                b += 1;
            } else {
                let v = self.entries[a].1 + other.entries[b].1 * c;
                if !v.is_zero() {
                    out.push((ia, v));
                }
                a += 1;
                b += 1;
            }
        }
        SVec::from_sorted_unchecked(out)
    }

    pub fn add(&self, other: &SVec) -> SVec {
        self.add_scaled(other, Q::one())
    }

    pub fn sub(&self, other: &SVec) -> SVec {
        self.add_scaled(other, -Q::one())
    }

    /// Reindexes through `f`; indices mapped to `None` are dropped.
    pub fn map_indices<F: Fn(usize) -> Option<usize>>(&self, f: F) -> SVec {
        SVec::from_pairs(self.entries.iter().filter_map(|&(i, c)| f(i).map(|j| (j, c))))
    }

    pub fn to_dense(&self, n: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); n];
        for &(i, c) in &self.entries {
            v[i] = c;
        }
        v
    }
}

impl FromIterator<(usize, Q)> for SVec {
    fn from_iter<T: IntoIterator<Item = (usize, Q)>>(iter: T) -> Self {
        SVec::from_pairs(iter)
    }
}

#[derive(Clone, Debug)]
struct Row {
    vec: SVec,
    combo: SVec,
}

/// Incrementally maintained reduced row echelon form.
///
/// Pivots sit at the largest index of each row, so reduction rewrites large
/// indices in terms of smaller ones. With tracking enabled, each row also
/// records its expression in the accepted input vectors, which gives
/// coordinates and kernels.
#[derive(Clone, Debug)]
pub struct Echelon {
    rows: BTreeMap<usize, Row>,
    track: bool,
    accepted: usize,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { rows: BTreeMap::new(), track: false, accepted: 0 }
    }

    pub fn tracking() -> Self {
        Echelon { rows: BTreeMap::new(), track: true, accepted: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.rows.contains_key(&i)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Returns `(remainder, combo)` with `v = remainder + Σ combo_k · accepted_k`
    /// and the remainder supported off the pivot columns.
    pub fn reduce(&self, v: &SVec) -> (SVec, SVec) {
        let mut rem = v.clone();
        let mut combo = SVec::zero();
        let hits: Vec<(usize, Q)> = v.iter().filter(|(i, _)| self.rows.contains_key(i)).copied().collect();
        for (p, _) in hits {
            let c = rem.get(p);
            if c.is_zero() {
                continue;
            }
            let row = &self.rows[&p];
            rem = rem.add_scaled(&row.vec, -c);
            if self.track {
                combo = combo.add_scaled(&row.combo, c);
            }
        }
        (rem, combo)
    }

    pub fn remainder(&self, v: &SVec) -> SVec {
        self.reduce(v).0
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Inserts `v`. Returns the index it receives among accepted vectors, or
    /// `None` when `v` is already in the span.
    pub fn insert(&mut self, v: &SVec) -> Option<usize> {
        self.insert_reduced(v).map(|(k, _)| k)
    }

    /// Like [`Echelon::insert`] but on rejection returns the combination
    /// expressing `v` in the accepted vectors.
    pub fn insert_or_combo(&mut self, v: &SVec) -> Result<usize, SVec> {
        let (rem, combo) = self.reduce(v);
        if rem.is_zero() {
            return Err(combo);
        }
        Ok(self.accept(rem, combo))
    }

    fn insert_reduced(&mut self, v: &SVec) -> Option<(usize, SVec)> {
        let (rem, combo) = self.reduce(v);
        if rem.is_zero() {
            return None;
        }
        let k = self.accept(rem.clone(), combo);
        Some((k, rem))
    }

    fn accept(&mut self, rem: SVec, combo: SVec) -> usize {
        let k = self.accepted;
        self.accepted += 1;
        let p = rem.max_index().expect("nonzero remainder");
        let inv = Q::one() / rem.get(p);
        let vec = rem.scaled(inv);
        let combo = if self.track { SVec::unit(k).sub(&combo).scaled(inv) } else { SVec::zero() };
        for row in self.rows.values_mut() {
            let c = row.vec.get(p);
            if !c.is_zero() {
                row.vec = row.vec.add_scaled(&vec, -c);
                if self.track {
                    row.combo = row.combo.add_scaled(&combo, -c);
                }
            }
        }
        self.rows.insert(p, Row { vec, combo });
        k
    }

    /// Coordinates of `v` in the accepted vectors, if `v` lies in their span.
    pub fn coordinates(&self, v: &SVec) -> Option<SVec> {
        assert!(self.track, "coordinates need a tracking echelon");
        let (rem, combo) = self.reduce(v);
        if rem.is_zero() {
            Some(combo)
        } else {
            None
        }
    }
}

impl Default for Echelon {
    fn default() -> Self {
        Echelon::new()
    }
}

/// Basis of the kernel of the linear map whose `j`-th column image is `columns[j]`.
pub fn kernel(columns: &[SVec]) -> Vec<SVec> {
    let mut ech = Echelon::tracking();
    let mut accepted_col = Vec::new();
    let mut out = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        match ech.insert_or_combo(col) {
            Ok(_) => accepted_col.push(j),
            Err(combo) => {
                let v = SVec::unit(j).add(&SVec::from_pairs(combo.iter().map(|&(k, c)| (accepted_col[k], -c))));
                out.push(v);
            }
        }
    }
    out
}

pub fn rank(vectors: &[SVec]) -> usize {
    let mut ech = Echelon::new();
    for v in vectors {
        ech.insert(v);
    }
    ech.rank()
}

/// Determinant of a square integer matrix by fraction-free elimination.
pub fn det_i128(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(pairs: &[(usize, i64)]) -> SVec {
        SVec::from_pairs(pairs.iter().map(|&(i, c)| (i, q(c))))
    }

    #[test]
    fn add_scaled_cancels() {
        let a = v(&[(0, 1), (3, 2)]);
        let b = v(&[(3, 1), (5, 1)]);
        assert_eq!(a.add_scaled(&b, q(-2)), v(&[(0, 1), (5, -2)]));
    }

    #[test]
    fn echelon_coordinates_roundtrip() {
        let basis = [v(&[(0, 1), (1, 1)]), v(&[(1, 1), (2, 1)]), v(&[(0, 2), (2, 3)])];
        let mut e = Echelon::tracking();
        for b in &basis {
            assert!(e.insert(b).is_some());
        }
        let target = v(&[(0, 5), (1, -1), (2, 7)]);
        let c = e.coordinates(&target).unwrap();
        let mut back = SVec::zero();
        for &(k, x) in c.iter() {
            back = back.add_scaled(&basis[k], x);
        }
        assert_eq!(back, target);
    }

    #[test]
    fn kernel_of_dependent_columns() {
        let cols = [v(&[(0, 1)]), v(&[(1, 1)]), v(&[(0, 1), (1, 1)]), SVec::zero()];
        let k = kernel(&cols);
        assert_eq!(k.len(), 2);
        for kv in &k {
            let mut img = SVec::zero();
            for &(j, c) in kv.iter() {
                img = img.add_scaled(&cols[j], c);
            }
            assert!(img.is_zero());
        }
    }

    #[test]
    fn bareiss_determinant() {
        assert_eq!(det_i128(&[vec![2, 1], vec![1, 2]]), 3);
        assert_eq!(det_i128(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 4]]), -4);
        assert_eq!(det_i128(&[vec![1, 2], vec![2, 4]]), 0);
    }
}
