//! Permutations of `0..n` stored by their images.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm(Vec<usize>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a bijection on 0..{0}")]
pub struct NotBijective(pub usize);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, NotBijective> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(NotBijective(n));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// Builds a permutation from disjoint cycles; unlisted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, NotBijective> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cyc in cycles {
            for (k, &a) in cyc.iter().enumerate() {
                if a >= n || touched[a] {
                    return Err(NotBijective(n));
                }
                touched[a] = true;
                images[a] = cyc[(k + 1) % cyc.len()];
            }
        }
        Perm::from_images(images)
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Perm::identity(n);
        p.0.swap(a, b);
        p
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_fixed(&self, i: usize) -> bool {
        self.0[i] == i
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Self {
        assert_eq!(self.len(), other.len());
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    /// `self^k (i)` for any integer `k`.
    pub fn pow_apply(&self, i: usize, k: i64) -> usize {
        let mut x = i;
        if k >= 0 {
            for _ in 0..k {
                x = self.0[x];
            }
        } else {
            let inv = self.inverse();
            for _ in 0..(-k) {
                x = inv.0[x];
            }
        }
        x
    }

    /// Orbit of `i`, listed as `i, p(i), p²(i), …`.
    pub fn orbit(&self, i: usize) -> Vec<usize> {
        let mut out = vec![i];
        let mut x = self.0[i];
        while x != i {
            out.push(x);
            x = self.0[x];
        }
        out
    }

    /// All orbits, each starting at its smallest point, sorted by that point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for i in 0..self.len() {
            if !seen[i] {
                let orb = self.orbit(i);
                for &x in &orb {
                    seen[x] = true;
                }
                out.push(orb);
            }
        }
        out
    }

    /// Non-trivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.orbits().into_iter().filter(|c| c.len() > 1).collect()
    }

    /// Order of the permutation (lcm of cycle lengths).
    pub fn order(&self) -> usize {
        self.orbits().iter().fold(1, |acc, c| num_integer::lcm(acc, c.len()))
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm_strategy(n: usize) -> impl Strategy<Value = Perm> {
        Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).unwrap())
    }

    #[test]
    fn compose_reads_right_to_left() {
        let a = Perm::from_cycles(3, &[vec![0, 1]]).unwrap();
        let b = Perm::from_cycles(3, &[vec![1, 2]]).unwrap();
        // (0 1)(1 2) sends 1 -> 2 -> 2 and 2 -> 1 -> 0.
        let ab = a.compose(&b);
        assert_eq!(ab.apply(1), 2);
        assert_eq!(ab.apply(2), 0);
    }

    #[test]
    fn from_cycles_rejects_overlap() {
        assert!(Perm::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    proptest! {
        #[test]
        fn inverse_is_two_sided(p in perm_strategy(9)) {
            prop_assert!(p.compose(&p.inverse()).is_identity());
            prop_assert!(p.inverse().compose(&p).is_identity());
        }

        #[test]
        fn orbits_partition(p in perm_strategy(11)) {
            let total: usize = p.orbits().iter().map(|o| o.len()).sum();
            prop_assert_eq!(total, 11);
            let cyc = Perm::from_cycles(11, &p.cycles()).unwrap();
            prop_assert_eq!(cyc, p);
        }

        #[test]
        fn pow_apply_matches_order(p in perm_strategy(8), i in 0usize..8) {
            let k = p.order() as i64;
            prop_assert_eq!(p.pow_apply(i, k), i);
            prop_assert_eq!(p.pow_apply(p.pow_apply(i, 3), -3), i);
        }
    }
}
