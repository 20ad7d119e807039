//! Dense exact matrices over a [`FieldSpec`], plus integer matrices for
//! identities that must hold before any reduction.

use crate::bitmat::BitMatrix;
use crate::error::{Error, Result};
use crate::field::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Reduced row echelon form together with its rank and pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: ExactMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl ExactMatrix {
    pub fn zeros(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        ExactMatrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        Self::from_fn(field, n, n, |i, j| u32::from(i == j))
    }

    pub fn all_ones(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        Self::from_fn(field, rows, cols, |_, _| 1)
    }

    /// Builds a matrix from a closure; values are taken as-is and must be canonical.
    pub fn from_fn(field: &FieldSpec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                debug_assert!(v < field.order());
                data.push(v);
            }
        }
        ExactMatrix { field: field.clone(), rows, cols, data }
    }

    /// Rows must share one length (`cols`) and hold canonical elements.
    pub fn from_rows(field: &FieldSpec, cols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!("row {i} has length {}, expected {cols}", row.len())));
            }
            for &v in row {
                data.push(field.check(v)?);
            }
        }
        Ok(ExactMatrix { field: field.clone(), rows: rows.len(), cols, data })
    }

    pub fn from_bits(bits: &BitMatrix) -> Self {
        Self::from_fn(&FieldSpec::f2(), bits.rows(), bits.cols(), |i, j| u32::from(bits.get(i, j)))
    }

    /// Packed copy; only meaningful over `F_2`.
    pub fn to_bits(&self) -> BitMatrix {
        debug_assert_eq!(self.field.order(), 2);
        BitMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) == 1)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        debug_assert!(v < self.field.order());
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    fn same_field(&self, other: &ExactMatrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!("{} vs {}", self.field, other.field)));
        }
        Ok(())
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<Self> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.field.order() == 2 {
            return Ok(Self::from_bits(&self.to_bits().mul(&other.to_bits())));
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        if f.is_prime_field() {
            let p = f.order() as u64;
            for i in 0..self.rows {
                for j in 0..other.cols {
                    let mut acc = 0u64;
                    for l in 0..self.cols {
                        acc += self.get(i, l) as u64 * other.get(l, j) as u64;
                        if acc >= 1 << 62 {
                            acc %= p;
                        }
                    }
                    out.set(i, j, (acc % p) as u32);
                }
            }
        } else {
            for i in 0..self.rows {
                for j in 0..other.cols {
                    let acc = (0..self.cols).fold(0, |acc, l| f.add(acc, f.mul(self.get(i, l), other.get(l, j))));
                    out.set(i, j, acc);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<Self> {
        self.same_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("matrix sum of different shapes".into()));
        }
        let f = &self.field;
        Ok(Self::from_fn(f, self.rows, self.cols, |i, j| f.add(self.get(i, j), other.get(i, j))))
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        Self::from_fn(f, self.rows, self.cols, |i, j| f.neg(self.get(i, j)))
    }

    pub fn sub(&self, other: &ExactMatrix) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// `M^2 = M`.
    pub fn is_idempotent(&self) -> bool {
        self.is_square() && self.mul(self).map(|sq| &sq == self).unwrap_or(false)
    }

    pub fn diagonal(&self) -> Vec<u32> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).collect()
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(&self.field, self.rows, cols.len(), |i, j| self.get(i, cols[j]))
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Self::from_fn(&self.field, rows.len(), self.cols, |i, j| self.get(rows[i], j))
    }

    /// `[self | other]`
    pub fn hstack(&self, other: &ExactMatrix) -> Result<Self> {
        self.same_field(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack of different heights".into()));
        }
        Ok(Self::from_fn(&self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        }))
    }

    /// `[self; other]`
    pub fn vstack(&self, other: &ExactMatrix) -> Result<Self> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack of different widths".into()));
        }
        let mut out = self.clone();
        out.data.extend_from_slice(&other.data);
        out.rows += other.rows;
        Ok(out)
    }

    pub fn rref(&self) -> Rref {
        if self.field.order() == 2 {
            let mut bits = self.to_bits();
            let pivots = bits.rref_in_place();
            return Rref { matrix: Self::from_bits(&bits), rank: pivots.len(), pivots };
        }
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            m.scale_row(r, inv);
            for i in 0..m.rows {
                let factor = m.get(i, c);
                if i != r && factor != 0 {
                    m.axpy_row(r, i, f.neg(factor));
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, rank: pivots.len(), pivots }
    }

    pub fn rank(&self) -> usize {
        if self.field.order() == 2 {
            return self.to_bits().rank();
        }
        self.rref().rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, r: usize, s: u32) {
        for j in 0..self.cols {
            let v = self.field.mul(self.get(r, j), s);
            self.set(r, j, v);
        }
    }

    /// `row[dst] += s * row[src]`
    fn axpy_row(&mut self, src: usize, dst: usize, s: u32) {
        for j in 0..self.cols {
            let v = self.field.add(self.get(dst, j), self.field.mul(s, self.get(src, j)));
            self.set(dst, j, v);
        }
    }

    /// Drops all-zero rows.
    pub fn without_zero_rows(&self) -> Self {
        let keep: Vec<usize> = (0..self.rows).filter(|&i| self.row(i).iter().any(|&v| v != 0)).collect();
        self.select_rows(&keep)
    }

    /// Inverse by Gauss-Jordan on `[M | I]`.
    pub fn invert(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!("cannot invert a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(&self.field, n))?;
        let red = aug.rref();
        if red.pivots.iter().take_while(|&&c| c < n).count() < n {
            return Err(Error::SingularMatrix);
        }
        Ok(Self::from_fn(&self.field, n, n, |i, j| red.matrix.get(i, n + j)))
    }

    /// Rows spanning `{x : M x^T = 0}`, one per non-pivot column, in the
    /// standard form read off the RREF.
    pub fn null_space(&self) -> Self {
        let f = &self.field;
        let red = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !red.pivots.contains(c)).collect();
        let mut out = Self::zeros(f, free.len(), self.cols);
        for (b, &fc) in free.iter().enumerate() {
            out.set(b, fc, 1);
            for (r, &pc) in red.pivots.iter().enumerate() {
                out.set(b, pc, f.neg(red.matrix.get(r, fc)));
            }
        }
        out
    }

    /// Matrix with entries reinterpreted as integers (`0..p`).
    pub fn to_int(&self) -> IntMatrix {
        IntMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) as i64)
    }

    /// Entries lifted to the symmetric range, so `p - 1` becomes `-1`.
    pub fn to_int_signed(&self) -> IntMatrix {
        let p = self.field.order() as i64;
        IntMatrix::from_fn(self.rows, self.cols, |i, j| {
            let v = self.get(i, j) as i64;
            if 2 * v > p { v - p } else { v }
        })
    }
}

/// Integer matrix, used for adjacency matrices before reduction mod `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| 0)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| i64::from(i == j))
    }

    pub fn all_ones(n: usize) -> Self {
        Self::from_fn(n, n, |_, _| 1)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mul(&self, other: &IntMatrix) -> Self {
        assert_eq!(self.cols, other.rows, "integer matrix product dimension mismatch");
        Self::from_fn(self.rows, other.cols, |i, j| (0..self.cols).map(|l| self.get(i, l) * other.get(l, j)).sum())
    }

    pub fn add(&self, other: &IntMatrix) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &IntMatrix) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn scale(&self, s: i64) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| s * self.get(i, j))
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Reduction into a prime field.
    pub fn reduce(&self, field: &FieldSpec) -> ExactMatrix {
        assert!(field.is_prime_field(), "integer reduction targets a prime field");
        ExactMatrix::from_fn(field, self.rows, self.cols, |i, j| field.from_int(self.get(i, j)))
    }
}

/// Rank of `a mod p`.
pub fn p_rank(a: &IntMatrix, p: u32) -> Result<usize> {
    let field = FieldSpec::prime(p)?;
    Ok(a.reduce(&field).rank())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3(f: &FieldSpec) -> ExactMatrix {
        ExactMatrix::from_fn(f, 3, 3, |i, j| u32::from(i != j))
    }

    #[test]
    fn rref_examples() {
        let f2 = FieldSpec::f2();
        let id = ExactMatrix::identity(&f2, 3);
        let r = id.rref();
        assert_eq!((r.matrix, r.rank, r.pivots), (id, 3, vec![0, 1, 2]));
        let j = ExactMatrix::all_ones(&f2, 3, 3).rref();
        assert_eq!((j.rank, j.pivots), (1, vec![0]));
        assert_eq!(k3(&f2).rank(), 2);
        // over F_3, J - I for K_3 has determinant 2, so full rank
        assert_eq!(k3(&FieldSpec::f3()).rank(), 3);
    }

    #[test]
    fn invert_examples() {
        let f2 = FieldSpec::f2();
        let m = ExactMatrix::from_rows(&f2, 2, &[vec![1, 1], vec![1, 0]]).unwrap();
        let inv = m.invert().unwrap();
        assert_eq!(inv, ExactMatrix::from_rows(&f2, 2, &[vec![0, 1], vec![1, 1]]).unwrap());
        assert_eq!(m.mul(&inv).unwrap(), ExactMatrix::identity(&f2, 2));

        let f3 = FieldSpec::f3();
        // I + 3J reduces to I mod 3
        let i3j = IntMatrix::identity(3).add(&IntMatrix::all_ones(3).scale(3)).reduce(&f3);
        assert_eq!(i3j.invert().unwrap(), ExactMatrix::identity(&f3, 3));
        assert_eq!(ExactMatrix::all_ones(&f3, 2, 2).invert(), Err(Error::SingularMatrix));
        assert!(matches!(ExactMatrix::zeros(&f3, 2, 3).invert(), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn extension_field_rref() {
        let f9 = FieldSpec::of_order(9).unwrap();
        let m = ExactMatrix::from_rows(&f9, 2, &[vec![3, 1], vec![2, 3]]).unwrap();
        // det = 3*3 - 1*2 = x^2 - 2 = -1 - 2 = 0 in F_9
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn p_rank_examples() {
        assert_eq!(p_rank(&IntMatrix::zeros(4, 4), 2).unwrap(), 0);
        assert_eq!(p_rank(&IntMatrix::identity(4).scale(3), 3).unwrap(), 0);
        assert_eq!(p_rank(&IntMatrix::identity(4).scale(3), 2).unwrap(), 4);
    }

    #[test]
    fn null_space_is_orthogonal() {
        let f3 = FieldSpec::f3();
        let m = ExactMatrix::from_rows(&f3, 4, &[vec![1, 2, 0, 1], vec![0, 1, 1, 2]]).unwrap();
        let ns = m.null_space();
        assert_eq!(ns.rows(), 2);
        assert!(m.mul(&ns.transpose()).unwrap().is_zero());
    }

    #[test]
    fn dimension_checks() {
        let f2 = FieldSpec::f2();
        let a = ExactMatrix::zeros(&f2, 2, 3);
        assert!(a.mul(&a).is_err());
        assert!(a.mul(&ExactMatrix::zeros(&FieldSpec::f3(), 3, 1)).is_err());
        assert_eq!(a.transpose().transpose(), a);
        assert!(ExactMatrix::from_rows(&f2, 2, &[vec![0, 2]]).is_err());
        assert!(ExactMatrix::from_rows(&f2, 2, &[vec![0]]).is_err());
    }
}
