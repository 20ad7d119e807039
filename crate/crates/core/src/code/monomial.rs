use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::ExactMatrix;

/// A monomial matrix `M` with `M[j][perm[j]] = scales[j]`, so that
/// `(c M)[perm[j]] = scales[j] * c[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    perm: Vec<usize>,
    scales: Vec<u32>,
}

impl Monomial {
    pub fn new(perm: Vec<usize>, scales: Vec<u32>) -> Result<Self> {
        let n = perm.len();
        if scales.len() != n {
            return Err(Error::DimensionMismatch("permutation and scales differ in length".into()));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::BadInput(format!("{perm:?} is not a permutation")));
            }
        }
        if scales.contains(&0) {
            return Err(Error::BadInput("monomial scales must be nonzero".into()));
        }
        Ok(Monomial { perm, scales })
    }

    pub fn permutation(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        Self::new(perm, vec![1; n])
    }

    pub fn identity(n: usize) -> Self {
        Monomial { perm: (0..n).collect(), scales: vec![1; n] }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn scales(&self) -> &[u32] {
        &self.scales
    }

    pub fn to_matrix(&self, field: &FieldSpec) -> Result<ExactMatrix> {
        for &s in &self.scales {
            field.check(s)?;
        }
        let mut m = ExactMatrix::zeros(field, self.len(), self.len());
        for (j, (&p, &s)) in self.perm.iter().zip(&self.scales).enumerate() {
            m.set(j, p, s);
        }
        Ok(m)
    }

    /// Image of a row vector.
    pub fn apply(&self, field: &FieldSpec, word: &[u32]) -> Vec<u32> {
        let mut out = vec![0; word.len()];
        for (j, &c) in word.iter().enumerate() {
            out[self.perm[j]] = field.mul(self.scales[j], c);
        }
        out
    }
}
