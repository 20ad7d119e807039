//! Linear codes over `F_2` and `F_3`.
//!
//! A code is held as its RREF generator matrix, so two [`LinearCode`]
//! values are the same subspace exactly when they compare equal.

mod enumerate;
mod equivalence;
mod monomial;

pub use enumerate::{WeightDistribution, DEFAULT_BUDGET};
pub use equivalence::{equivalent_bruteforce, BRUTEFORCE_MAX_LENGTH};
pub use monomial::Monomial;

use std::fmt;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::ExactMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearCode {
    field: FieldSpec,
    n: usize,
    gen: ExactMatrix,
}

/// Which derived code of a binary LCD code is again LCD.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dichotomy {
    PuncturedIsLcd,
    ShortenedIsLcd,
}

fn check_code_field(field: &FieldSpec) -> Result<()> {
    match field.order() {
        2 | 3 => Ok(()),
        q => Err(Error::BadField(format!("codes are supported over F_2 and F_3, not F_{q}"))),
    }
}

fn check_coords(coords: &[usize], n: usize) -> Result<()> {
    match coords.iter().find(|&&c| c >= n) {
        Some(&c) => Err(Error::CoordinateOutOfRange { coordinate: c + 1, length: n }),
        None => Ok(()),
    }
}

impl LinearCode {
    /// The row span of `rows`, canonicalized. No rows gives the zero code.
    pub fn from_rows(field: &FieldSpec, n: usize, rows: &[Vec<u32>]) -> Result<Self> {
        check_code_field(field)?;
        let m = ExactMatrix::from_rows(field, n, rows)?;
        Self::from_generator(&m)
    }

    /// The row span of any matrix over `F_2` or `F_3`.
    pub fn from_generator(m: &ExactMatrix) -> Result<Self> {
        check_code_field(m.field())?;
        let red = m.rref();
        let gen = red.matrix.select_rows(&(0..red.rank).collect::<Vec<_>>());
        Ok(LinearCode { field: m.field().clone(), n: m.cols(), gen })
    }

    pub fn zero(field: &FieldSpec, n: usize) -> Result<Self> {
        Self::from_generator(&ExactMatrix::zeros(field, 0, n))
    }

    pub fn full_space(field: &FieldSpec, n: usize) -> Result<Self> {
        Self::from_generator(&ExactMatrix::identity(field, n))
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Code length `n`.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Dimension `k`.
    pub fn dim(&self) -> usize {
        self.gen.rows()
    }

    /// The RREF generator matrix (`k x n`).
    pub fn generator(&self) -> &ExactMatrix {
        &self.gen
    }

    pub fn is_binary(&self) -> bool {
        self.field.order() == 2
    }

    pub fn contains(&self, word: &[u32]) -> bool {
        if word.len() != self.n {
            return false;
        }
        let Ok(row) = ExactMatrix::from_rows(&self.field, self.n, &[word.to_vec()]) else {
            return false;
        };
        self.gen.vstack(&row).map(|m| m.rank() == self.dim()).unwrap_or(false)
    }

    pub fn dual(&self) -> LinearCode {
        LinearCode::from_generator(&self.gen.null_space()).expect("same field")
    }

    /// `G G^T`.
    pub fn gram(&self) -> ExactMatrix {
        self.gen.mul(&self.gen.transpose()).expect("conformable")
    }

    /// LCD test through the rank of `G G^T`.
    pub fn is_lcd(&self) -> bool {
        self.gram().rank() == self.dim()
    }

    /// `dim(C ∩ C^⊥) = n - dim(C + C^⊥)`.
    pub fn hull_dim(&self) -> usize {
        let sum = self.gen.vstack(self.dual().generator()).expect("same shape");
        self.n - sum.rank()
    }

    /// `G^T (G G^T)^{-1} G`. The zero code has the zero projector.
    pub fn projector(&self) -> Result<ExactMatrix> {
        let inv = self.gram().invert().map_err(|e| match e {
            Error::SingularMatrix => Error::NotLcd,
            other => other,
        })?;
        let gt = self.gen.transpose();
        gt.mul(&inv)?.mul(&self.gen)
    }

    /// Binary only. Even-weight vectors form a subspace, so the generator rows decide.
    pub fn is_even(&self) -> Result<bool> {
        if !self.is_binary() {
            return Err(Error::WrongField { expected: 2, actual: self.field.order() });
        }
        Ok((0..self.dim()).all(|i| self.gen.row(i).iter().filter(|&&v| v != 0).count() % 2 == 0))
    }

    /// Deletes the coordinates in `coords` (0-indexed).
    pub fn puncture(&self, coords: &[usize]) -> Result<LinearCode> {
        check_coords(coords, self.n)?;
        let keep: Vec<usize> = (0..self.n).filter(|c| !coords.contains(c)).collect();
        LinearCode::from_generator(&self.gen.select_columns(&keep))
    }

    /// Subcode vanishing on `coords`, punctured there.
    pub fn shorten(&self, coords: &[usize]) -> Result<LinearCode> {
        check_coords(coords, self.n)?;
        let mut sorted = coords.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        // message vectors y with y G restricted to coords = 0
        let restricted = self.gen.select_columns(&sorted);
        let combos = restricted.transpose().null_space();
        let sub = if combos.rows() == 0 {
            ExactMatrix::zeros(&self.field, 0, self.n)
        } else {
            combos.mul(&self.gen)?
        };
        LinearCode::from_generator(&sub)?.puncture(&sorted)
    }

    /// Whether some coordinate is zero in every codeword, i.e. `d(C^⊥) = 1`.
    fn has_zero_coordinate(&self) -> bool {
        (0..self.n).any(|j| (0..self.dim()).all(|i| self.gen.get(i, j) == 0))
    }

    /// Exactly one of the punctured and shortened codes on coordinate `i`
    /// (0-indexed) is LCD, and the projector diagonal predicts which.
    pub fn puncture_shorten_dichotomy(&self, i: usize) -> Result<Dichotomy> {
        if !self.is_binary() {
            return Err(Error::WrongField { expected: 2, actual: self.field.order() });
        }
        check_coords(&[i], self.n)?;
        if !self.is_lcd() {
            return Err(Error::PreconditionFailed("code is not LCD".into()));
        }
        let dual = self.dual();
        if self.dim() == 0 || dual.dim() == 0 {
            return Err(Error::PreconditionFailed("code and its dual must both be nonzero".into()));
        }
        if self.has_zero_coordinate() {
            return Err(Error::PreconditionFailed("d(C^⊥) = 1".into()));
        }
        if dual.has_zero_coordinate() {
            return Err(Error::PreconditionFailed("d(C) = 1".into()));
        }
        let punctured = self.puncture(&[i])?.is_lcd();
        let shortened = self.shorten(&[i])?.is_lcd();
        let diagonal = self.projector()?.get(i, i);
        let coord = i + 1;
        match (punctured, shortened) {
            (true, false) if diagonal == 0 => Ok(Dichotomy::PuncturedIsLcd),
            (false, true) if diagonal == 1 => Ok(Dichotomy::ShortenedIsLcd),
            (true, false) | (false, true) => Err(Error::TheoremViolation(format!(
                "projector diagonal {diagonal} at coordinate {coord} disagrees with punctured LCD = {punctured}"
            ))),
            _ => Err(Error::TheoremViolation(format!(
                "coordinate {coord}: punctured LCD = {punctured}, shortened LCD = {shortened}"
            ))),
        }
    }

    /// `C M = { c M : c in C }`.
    pub fn transform(&self, m: &Monomial) -> Result<LinearCode> {
        if m.len() != self.n {
            return Err(Error::DimensionMismatch(format!("monomial of size {} on a code of length {}", m.len(), self.n)));
        }
        LinearCode::from_generator(&self.gen.mul(&m.to_matrix(&self.field)?)?)
    }
}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}] code over {}", self.n, self.dim(), self.field)
    }
}

/// Largest `d` with `sum_{i<k} ceil(d / q^i) <= n`.
pub fn griesmer_max_d(n: usize, k: usize, q: u64) -> Result<usize> {
    if k == 0 || k > n {
        return Err(Error::BadInput(format!("need 1 <= k <= n, got n={n} k={k}")));
    }
    let length = |d: u64| -> u64 {
        let mut total = 0u64;
        let mut qi = 1u64;
        for _ in 0..k {
            total += d.div_ceil(qi);
            qi = qi.saturating_mul(q);
        }
        total
    };
    let mut d = 1u64;
    while length(d + 1) <= n as u64 {
        d += 1;
    }
    Ok(d as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn k3_code() -> LinearCode {
        LinearCode::from_rows(&FieldSpec::f2(), 3, &[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]).unwrap()
    }

    /// Span by brute force: every combination of the input rows.
    fn span_oracle(field: &FieldSpec, n: usize, rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
        let p = field.order();
        let mut out = std::collections::BTreeSet::new();
        let total = (p as usize).pow(rows.len() as u32);
        for idx in 0..total {
            let mut w = vec![0u32; n];
            let mut rest = idx;
            for r in rows {
                let c = (rest % p as usize) as u32;
                rest /= p as usize;
                for j in 0..n {
                    w[j] = (w[j] + c * r[j]) % p;
                }
            }
            out.insert(w);
        }
        out.into_iter().collect()
    }

    #[test]
    fn from_rows_examples() {
        let c = k3_code();
        assert_eq!((c.len(), c.dim()), (3, 2));
        let mut words = c.codewords(1 << 10).unwrap();
        words.sort();
        assert_eq!(words, span_oracle(&FieldSpec::f2(), 3, &[vec![0, 1, 1], vec![1, 0, 1]]));
        assert_eq!(words, vec![vec![0, 0, 0], vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);

        let t = LinearCode::from_rows(&FieldSpec::f3(), 3, &[vec![1, 1, 1]]).unwrap();
        assert_eq!(t.dim(), 1);
        let z = LinearCode::from_rows(&FieldSpec::f2(), 4, &[vec![0; 4], vec![0; 4]]).unwrap();
        assert_eq!(z.dim(), 0);
        assert_eq!(LinearCode::from_rows(&FieldSpec::f2(), 4, &[]).unwrap(), z);
        assert!(LinearCode::from_rows(&FieldSpec::of_order(5).unwrap(), 2, &[]).is_err());
    }

    #[test]
    fn dual_examples() {
        let d = k3_code().dual();
        assert_eq!(d, LinearCode::from_rows(&FieldSpec::f2(), 3, &[vec![1, 1, 1]]).unwrap());
        let z = LinearCode::zero(&FieldSpec::f3(), 4).unwrap();
        assert_eq!(z.dual(), LinearCode::full_space(&FieldSpec::f3(), 4).unwrap());
        assert_eq!(k3_code().dual().dual(), k3_code());
    }

    #[test]
    fn lcd_examples() {
        assert!(k3_code().is_lcd());
        assert_eq!(k3_code().hull_dim(), 0);
        let rep2 = LinearCode::from_rows(&FieldSpec::f2(), 2, &[vec![1, 1]]).unwrap();
        assert!(!rep2.is_lcd());
        assert_eq!(rep2.hull_dim(), 1);
        // (1,1,1) over F_2 has (c,c) = 1 and is LCD
        assert!(LinearCode::from_rows(&FieldSpec::f2(), 3, &[vec![1, 1, 1]]).unwrap().is_lcd());
        let f3 = FieldSpec::f3();
        let ij = LinearCode::from_rows(&f3, 6, &[vec![1, 0, 0, 1, 1, 1], vec![0, 1, 0, 1, 1, 1], vec![0, 0, 1, 1, 1, 1]]).unwrap();
        assert!(ij.is_lcd());
        assert_eq!(ij.gram(), ExactMatrix::identity(&f3, 3));
    }

    #[test]
    fn projector_examples() {
        let f2 = FieldSpec::f2();
        let pi = k3_code().projector().unwrap();
        assert_eq!(pi, ExactMatrix::from_fn(&f2, 3, 3, |i, j| u32::from(i != j)));
        let full = LinearCode::full_space(&f2, 4).unwrap();
        assert_eq!(full.projector().unwrap(), ExactMatrix::identity(&f2, 4));
        let rep2 = LinearCode::from_rows(&f2, 2, &[vec![1, 1]]).unwrap();
        assert_eq!(rep2.projector(), Err(Error::NotLcd));
        let zero = LinearCode::zero(&f2, 3).unwrap();
        assert!(zero.projector().unwrap().is_zero());

        let f3 = FieldSpec::f3();
        let ij = LinearCode::from_rows(&f3, 6, &[vec![1, 0, 0, 1, 1, 1], vec![0, 1, 0, 1, 1, 1], vec![0, 0, 1, 1, 1, 1]]).unwrap();
        let expected = ExactMatrix::from_fn(&f3, 6, 6, |i, j| match (i < 3, j < 3) {
            (true, true) => u32::from(i == j),
            (false, false) => 0,
            _ => 1,
        });
        assert_eq!(ij.projector().unwrap(), expected);
    }

    #[test]
    fn evenness() {
        assert_eq!(k3_code().is_even(), Ok(true));
        let odd = LinearCode::from_rows(&FieldSpec::f2(), 3, &[vec![1, 1, 1]]).unwrap();
        assert_eq!(odd.is_even(), Ok(false));
        let t = LinearCode::from_rows(&FieldSpec::f3(), 3, &[vec![1, 1, 1]]).unwrap();
        assert_eq!(t.is_even(), Err(Error::WrongField { expected: 2, actual: 3 }));
    }

    #[test]
    fn puncture_and_shorten_examples() {
        let f2 = FieldSpec::f2();
        let c = k3_code();
        assert_eq!(c.puncture(&[2]).unwrap(), LinearCode::full_space(&f2, 2).unwrap());
        assert_eq!(c.puncture(&[]).unwrap(), c);
        let all = c.puncture(&[0, 1, 2]).unwrap();
        assert_eq!((all.len(), all.dim()), (0, 0));
        assert_eq!(c.shorten(&[2]).unwrap(), LinearCode::from_rows(&f2, 2, &[vec![1, 1]]).unwrap());
        assert_eq!(c.shorten(&[]).unwrap(), c);
        let full3 = LinearCode::full_space(&f2, 3).unwrap();
        assert_eq!(full3.shorten(&[0]).unwrap(), LinearCode::full_space(&f2, 2).unwrap());
        assert_eq!(c.puncture(&[3]), Err(Error::CoordinateOutOfRange { coordinate: 4, length: 3 }));
    }

    #[test]
    fn dichotomy_examples() {
        let f2 = FieldSpec::f2();
        // [3,1] repetition code: projector J, so every shortening is LCD
        let rep = LinearCode::from_rows(&f2, 3, &[vec![1, 1, 1]]).unwrap();
        for i in 0..3 {
            assert_eq!(rep.puncture_shorten_dichotomy(i), Ok(Dichotomy::ShortenedIsLcd));
        }
        // [6,4] even LCD code of two disjoint triangles: d = 2, d⊥ = 3
        let mut rows = Vec::new();
        for b in [0, 3] {
            for i in 0..3 {
                let mut r = vec![0; 6];
                for j in 0..3 {
                    if i != j {
                        r[b + j] = 1;
                    }
                }
                rows.push(r);
            }
        }
        let two_k3 = LinearCode::from_rows(&f2, 6, &rows).unwrap();
        for i in 0..6 {
            assert_eq!(two_k3.puncture_shorten_dichotomy(i), Ok(Dichotomy::PuncturedIsLcd));
        }
        // the K_3 code has d⊥ = 3 but d = 2; fine. Full space violates d⊥ >= 2.
        assert!(matches!(
            LinearCode::full_space(&f2, 3).unwrap().puncture_shorten_dichotomy(0),
            Err(Error::PreconditionFailed(_))
        ));
        let not_lcd = LinearCode::from_rows(&f2, 4, &[vec![1, 1, 0, 0], vec![0, 0, 1, 1]]).unwrap();
        assert!(matches!(not_lcd.puncture_shorten_dichotomy(0), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn griesmer_examples() {
        assert_eq!(griesmer_max_d(3, 2, 2).unwrap(), 2);
        for q in [2, 3, 4] {
            for n in 1..8 {
                assert_eq!(griesmer_max_d(n, n, q).unwrap(), 1);
            }
        }
        assert!(griesmer_max_d(3, 0, 2).is_err());
        assert!(griesmer_max_d(3, 4, 2).is_err());
    }

    #[test]
    fn transform_by_monomial() {
        let f3 = FieldSpec::f3();
        let c = LinearCode::from_rows(&f3, 3, &[vec![1, 2, 0]]).unwrap();
        let m = Monomial::new(vec![2, 0, 1], vec![2, 1, 1]).unwrap();
        // (1,2,0) M: position 2 <- 2*1, position 0 <- 1*2, position 1 <- 0
        let image = c.transform(&m).unwrap();
        assert!(image.contains(&[2, 0, 2]));
    }
}
