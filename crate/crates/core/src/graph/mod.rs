//! Simple graphs and their adjacency matrices.

mod canon;
mod named;
mod paley;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm, CANON_MAX_ORDER};
pub use paley::paley;

use std::fmt;

use crate::bitmat::{dot, weight, BitMatrix};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::{ExactMatrix, IntMatrix};

/// Undirected graph on vertices `0..v` without loops or multiple edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleGraph {
    adj: BitMatrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdjacencyKind {
    /// `1` for adjacent pairs, `0` elsewhere.
    ZeroOne,
    /// Zero diagonal, `-1` for adjacent pairs, `+1` for non-adjacent pairs.
    Pm1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    pub fn new(v: usize, k: usize, lambda: usize, mu: usize) -> Self {
        SrgParams { v, k, lambda, mu }
    }

    /// `k (k - λ - 1) = (v - k - 1) μ`.
    pub fn is_feasible(&self) -> bool {
        let SrgParams { v, k, lambda, mu } = *self;
        k < v && lambda < k && (k * (k - lambda - 1)) == (v - k - 1) * mu
    }

    /// Parameters of a Paley graph of order `q`.
    pub fn paley(q: usize) -> Self {
        SrgParams::new(q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4)
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "srg({},{},{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

impl SimpleGraph {
    /// Edgeless graph.
    pub fn new(v: usize) -> Self {
        SimpleGraph { adj: BitMatrix::zeros(v, v) }
    }

    pub fn from_edges(v: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(v);
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// From a symmetric 0/1 matrix with zero diagonal.
    pub fn from_adjacency(m: &ExactMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::BadInput(format!("adjacency matrix must be square, got {}x{}", m.rows(), m.cols())));
        }
        let v = m.rows();
        let mut g = Self::new(v);
        for i in 0..v {
            if m.get(i, i) != 0 {
                return Err(Error::BadInput(format!("nonzero diagonal entry at vertex {i}")));
            }
            for j in 0..v {
                let x = m.get(i, j);
                if x > 1 || x != m.get(j, i) {
                    return Err(Error::BadInput(format!("entry ({i},{j}) breaks a symmetric 0/1 pattern")));
                }
                if x == 1 && i < j {
                    g.toggle(i, j);
                }
            }
        }
        Ok(g)
    }

    pub fn from_fn(v: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::new(v);
        for i in 0..v {
            for j in i + 1..v {
                if f(i, j) {
                    g.toggle(i, j);
                }
            }
        }
        g
    }

    fn check_vertex(&self, x: usize) -> Result<()> {
        if x < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: x, order: self.order() })
        }
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::BadInput(format!("loop at vertex {a}")));
        }
        self.adj.set(a, b, true);
        self.adj.set(b, a, true);
        Ok(())
    }

    pub(crate) fn toggle(&mut self, a: usize, b: usize) {
        let x = !self.adj.get(a, b);
        self.adj.set(a, b, x);
        self.adj.set(b, a, x);
    }

    pub fn order(&self) -> usize {
        self.adj.rows()
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj.get(a, b)
    }

    pub fn degree(&self, x: usize) -> usize {
        weight(self.adj.row(x)) as usize
    }

    pub fn neighbors(&self, x: usize) -> Vec<usize> {
        (0..self.order()).filter(|&y| self.has_edge(x, y)).collect()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let v = self.order();
        (0..v).flat_map(|a| (a + 1..v).filter(move |&b| self.has_edge(a, b)).map(move |b| (a, b))).collect()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.order()).map(|x| self.degree(x)).sum::<usize>() / 2
    }

    /// Packed adjacency rows.
    pub fn adjacency_bits(&self) -> &BitMatrix {
        &self.adj
    }

    pub fn adjacency(&self, kind: AdjacencyKind) -> IntMatrix {
        let v = self.order();
        match kind {
            AdjacencyKind::ZeroOne => IntMatrix::from_fn(v, v, |i, j| i64::from(self.has_edge(i, j))),
            AdjacencyKind::Pm1 => IntMatrix::from_fn(v, v, |i, j| match (i == j, self.has_edge(i, j)) {
                (true, _) => 0,
                (false, true) => -1,
                (false, false) => 1,
            }),
        }
    }

    /// Adjacency matrix reduced into `field`.
    pub fn adjacency_over(&self, kind: AdjacencyKind, field: &FieldSpec) -> ExactMatrix {
        self.adjacency(kind).reduce(field)
    }

    pub fn complement(&self) -> Self {
        Self::from_fn(self.order(), |i, j| !self.has_edge(i, j))
    }

    /// The graph with vertex `x` renamed to `phi[x]`.
    pub fn relabel(&self, phi: &[usize]) -> Self {
        let v = self.order();
        assert_eq!(phi.len(), v, "relabeling has the wrong length");
        let mut g = Self::new(v);
        for (a, b) in self.edges() {
            g.toggle(phi[a], phi[b]);
        }
        g
    }

    pub fn disjoint_union(&self, other: &SimpleGraph) -> Self {
        let off = self.order();
        let mut g = Self::new(off + other.order());
        for (a, b) in self.edges() {
            g.toggle(a, b);
        }
        for (a, b) in other.edges() {
            g.toggle(off + a, off + b);
        }
        g
    }

    pub fn common_neighbors(&self, a: usize, b: usize) -> usize {
        self.adj.row(a).iter().zip(self.adj.row(b)).map(|(x, y)| (x & y).count_ones() as usize).sum()
    }

    /// Strongly regular parameters, if any. Complete and edgeless graphs are
    /// rejected. The integer identity `A^2 = kI + λA + μ(J - I - A)` is
    /// checked whenever parameters are returned.
    pub fn srg_params(&self) -> Option<SrgParams> {
        let v = self.order();
        if v < 2 {
            return None;
        }
        let k = self.degree(0);
        if k == 0 || k + 1 == v || (1..v).any(|x| self.degree(x) != k) {
            return None;
        }
        let (mut lambda, mut mu) = (None, None);
        for a in 0..v {
            for b in a + 1..v {
                let slot = if self.has_edge(a, b) { &mut lambda } else { &mut mu };
                let c = self.common_neighbors(a, b);
                match *slot {
                    None => *slot = Some(c),
                    Some(prev) if prev != c => return None,
                    _ => {}
                }
            }
        }
        let params = SrgParams::new(v, k, lambda?, mu?);
        assert!(self.satisfies_srg_identity(&params), "strongly regular graph violates the A^2 identity");
        Some(params)
    }

    /// `A^2 = kI + λA + μ(J - I - A)` over the integers.
    pub fn satisfies_srg_identity(&self, p: &SrgParams) -> bool {
        let v = self.order();
        if v != p.v {
            return false;
        }
        let a = self.adjacency(AdjacencyKind::ZeroOne);
        let i = IntMatrix::identity(v);
        let j = IntMatrix::all_ones(v);
        let rhs = i.scale(p.k as i64).add(&a.scale(p.lambda as i64)).add(&j.sub(&i).sub(&a).scale(p.mu as i64));
        a.mul(&a) == rhs
    }

    /// `A^2 = A` over `F_2`, decided both by packed matrix arithmetic and by
    /// common-neighbor parity (odd for adjacent pairs, even otherwise).
    pub fn is_idempotent_mod2(&self) -> bool {
        let by_matrix = self.idempotent_mod2_by_matrix();
        let by_parity = self.idempotent_mod2_by_parity();
        assert_eq!(by_matrix, by_parity, "matrix and parity tests for A^2 = A disagree");
        by_matrix
    }

    pub(crate) fn idempotent_mod2_by_matrix(&self) -> bool {
        // A symmetric: (A^2)_{xy} = (row x, row y)
        let v = self.order();
        (0..v).all(|x| (0..v).all(|y| dot(self.adj.row(x), self.adj.row(y)) == self.has_edge(x, y)))
    }

    pub(crate) fn idempotent_mod2_by_parity(&self) -> bool {
        let v = self.order();
        (0..v).all(|x| (x + 1..v).all(|y| (self.common_neighbors(x, y) % 2 == 1) == self.has_edge(x, y)))
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph on {} vertices with {} edges", self.order(), self.edge_count())
    }
}
