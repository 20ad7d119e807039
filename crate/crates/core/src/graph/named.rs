//! Small named graphs used as fixtures.

use super::SimpleGraph;

impl SimpleGraph {
    pub fn complete(v: usize) -> Self {
        Self::from_fn(v, |_, _| true)
    }

    pub fn cycle(v: usize) -> Self {
        Self::from_fn(v, |i, j| j == i + 1 || (i == 0 && j + 1 == v && v > 2))
    }

    pub fn path(v: usize) -> Self {
        Self::from_fn(v, |i, j| j == i + 1)
    }

    /// Kneser graph `K(n, r)`: `r`-subsets of `0..n`, adjacent when disjoint.
    pub fn kneser(n: usize, r: usize) -> Self {
        let sets = subsets(n, r);
        Self::from_fn(sets.len(), |i, j| sets[i] & sets[j] == 0)
    }

    /// `K(5, 2)`, srg(10,3,0,1).
    pub fn petersen() -> Self {
        Self::kneser(5, 2)
    }

    /// Triangular graph `T(n)`: 2-subsets of `0..n`, adjacent when they meet.
    pub fn triangular(n: usize) -> Self {
        let sets = subsets(n, 2);
        Self::from_fn(sets.len(), |i, j| sets[i] & sets[j] != 0)
    }
}

/// `r`-subsets of `0..n` as bitmasks, in increasing numeric order.
fn subsets(n: usize, r: usize) -> Vec<u64> {
    (0u64..1 << n).filter(|m| m.count_ones() as usize == r).collect()
}
