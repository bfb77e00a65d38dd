use alloc::collections::BTreeMap;

use num_traits::Zero;

use crate::ratpoly::Rational;

/// Finite `dim × dim` truncation of a banded matrix, stored sparsely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandMatrix {
    dim: usize,
    entries: BTreeMap<(usize, usize), Rational>,
    declared_bandwidth: usize,
}

impl BandMatrix {
    pub fn new(dim: usize, declared_bandwidth: usize) -> Self {
        BandMatrix {
            dim,
            entries: BTreeMap::new(),
            declared_bandwidth,
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::new(dim, 0);
        for i in 0..dim {
            m.set(i, i, Rational::from_integer(1.into()));
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn declared_bandwidth(&self) -> usize {
        self.declared_bandwidth
    }

    /// Store `v` at `(i, j)`; zeros are not stored. Out-of-range indices are
    /// dropped (they belong to the semi-infinite matrix, not the truncation).
    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        if i >= self.dim || j >= self.dim {
            return;
        }
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Largest `|i − j|` over stored entries.
    pub fn actual_bandwidth(&self) -> usize {
        self.entries
            .keys()
            .map(|&(i, j)| i.abs_diff(j))
            .max()
            .unwrap_or(0)
    }

    pub fn respects_declared_band(&self) -> bool {
        self.actual_bandwidth() <= self.declared_bandwidth
    }

    pub fn mul(&self, rhs: &BandMatrix) -> BandMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = BandMatrix::new(self.dim, self.declared_bandwidth + rhs.declared_bandwidth);
        let mut rows: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            for (&(_, j), b) in rhs.entries.range((k, 0)..(k + 1, 0)) {
                *rows.entry((i, j)).or_insert_with(Rational::zero) += a * b;
            }
        }
        for ((i, j), v) in rows {
            out.set(i, j, v);
        }
        out
    }

    pub fn add(&self, rhs: &BandMatrix) -> BandMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = self.clone();
        out.declared_bandwidth = self.declared_bandwidth.max(rhs.declared_bandwidth);
        for (&(i, j), v) in &rhs.entries {
            let s = out.get(i, j) + v;
            out.set(i, j, s);
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> BandMatrix {
        let mut out = BandMatrix::new(self.dim, self.declared_bandwidth);
        for (&(i, j), v) in &self.entries {
            out.set(i, j, v * k);
        }
        out
    }

    /// First `(i, j)` with `i ≤ max_row`, `j ≤ max_col` where the two differ.
    pub fn first_block_difference(
        &self,
        other: &BandMatrix,
        max_row: usize,
        max_col: usize,
    ) -> Option<(usize, usize)> {
        for i in 0..=max_row.min(self.dim - 1) {
            for j in 0..=max_col.min(self.dim - 1) {
                if self.get(i, j) != other.get(i, j) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::int;

    fn tri(n: usize) -> BandMatrix {
        let mut m = BandMatrix::new(n, 1);
        for i in 0..n {
            m.set(i, i, int(2));
            if i + 1 < n {
                m.set(i, i + 1, int(-1));
                m.set(i + 1, i, int(-1));
            }
        }
        m
    }

    #[test]
    fn product_of_tridiagonals_is_pentadiagonal() {
        let t = tri(6);
        let p = t.mul(&t);
        assert_eq!(p.actual_bandwidth(), 2);
        assert_eq!(p.get(2, 2), int(6));
        assert_eq!(p.get(0, 0), int(5));
        assert_eq!(p.get(1, 3), int(1));
        assert!(p.respects_declared_band());
    }

    #[test]
    fn identity_is_neutral() {
        let t = tri(5);
        assert_eq!(
            t.mul(&BandMatrix::identity(5))
                .first_block_difference(&t, 4, 4),
            None
        );
        assert_eq!(
            BandMatrix::identity(5)
                .mul(&t)
                .first_block_difference(&t, 4, 4),
            None
        );
    }

    #[test]
    fn zeros_not_stored() {
        let mut m = BandMatrix::new(3, 0);
        m.set(1, 1, int(0));
        m.set(5, 5, int(1));
        assert_eq!(m.nnz(), 0);
    }
}
