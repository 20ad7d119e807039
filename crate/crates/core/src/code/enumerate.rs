//! Exhaustive codeword enumeration.
//!
//! Binary codes walk the reflected Gray code over the message space, so
//! each step is a single packed-row XOR plus a popcount. Large binary codes
//! are split on their top message bits into independent chunks that run on
//! the rayon pool; counts are summed, so results match a serial walk.
//! Ternary codes use an odometer over base-3 digits.

use rayon::prelude::*;

use super::LinearCode;
use crate::bitmat::words_for;
use crate::error::{Error, Result};

/// Default cap on the number of codewords an enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 1 << 28;

/// Below this dimension binary enumeration stays on the calling thread.
const PARALLEL_MIN_DIM: usize = 16;
const SPLIT_BITS: usize = 6;

/// `counts[w]` is the number of codewords of weight `w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Smallest nonzero weight present.
    pub fn min_weight(&self) -> Option<usize> {
        self.counts.iter().enumerate().skip(1).find(|(_, &c)| c > 0).map(|(w, _)| w)
    }

    /// CSV with a `weight,count` header and one line per weight `0..=n`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("weight,count\n");
        for (w, c) in self.counts.iter().enumerate() {
            out.push_str(&format!("{w},{c}\n"));
        }
        out
    }
}

fn check_budget(code: &LinearCode, budget: u64) -> Result<()> {
    let q = code.field().order() as u64;
    let size = q.checked_pow(code.dim() as u32);
    match size {
        Some(s) if s <= budget => Ok(()),
        _ => Err(Error::BudgetExceeded(format!(
            "{}^{} codewords exceed the enumeration budget of {budget}",
            q,
            code.dim()
        ))),
    }
}

impl LinearCode {
    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        self.weight_distribution_with_budget(DEFAULT_BUDGET)
    }

    pub fn weight_distribution_with_budget(&self, budget: u64) -> Result<WeightDistribution> {
        check_budget(self, budget)?;
        let counts = if self.is_binary() { binary_counts(self) } else { ternary_counts(self) };
        Ok(WeightDistribution { counts })
    }

    pub fn min_weight(&self) -> Result<usize> {
        self.min_weight_with_budget(DEFAULT_BUDGET)
    }

    pub fn min_weight_with_budget(&self, budget: u64) -> Result<usize> {
        if self.dim() == 0 {
            return Err(Error::NoNonzeroCodeword);
        }
        let wd = self.weight_distribution_with_budget(budget)?;
        Ok(wd.min_weight().expect("nonzero code has a nonzero codeword"))
    }

    /// Every codeword, in message order. Meant for small codes and test oracles.
    pub fn codewords(&self, budget: u64) -> Result<Vec<Vec<u32>>> {
        check_budget(self, budget)?;
        let f = self.field();
        let q = f.order() as usize;
        let k = self.dim();
        let n = self.len();
        let g = self.generator();
        let total = q.pow(k as u32);
        let mut out = Vec::with_capacity(total);
        for idx in 0..total {
            let mut w = vec![0u32; n];
            let mut rest = idx;
            for i in 0..k {
                let c = (rest % q) as u32;
                rest /= q;
                if c != 0 {
                    for (j, wj) in w.iter_mut().enumerate() {
                        *wj = f.add(*wj, f.mul(c, g.get(i, j)));
                    }
                }
            }
            out.push(w);
        }
        Ok(out)
    }
}

fn packed_rows<const W: usize>(code: &LinearCode) -> Vec<[u64; W]> {
    let g = code.generator();
    (0..g.rows())
        .map(|i| {
            let mut r = [0u64; W];
            for j in 0..g.cols() {
                if g.get(i, j) == 1 {
                    r[j / 64] |= 1 << (j % 64);
                }
            }
            r
        })
        .collect()
}

fn binary_counts(code: &LinearCode) -> Vec<u64> {
    match words_for(code.len()) {
        0 | 1 => gray_counts::<1>(code),
        2 => gray_counts::<2>(code),
        3 | 4 => gray_counts::<4>(code),
        5..=8 => gray_counts::<8>(code),
        _ => gray_counts_wide(code),
    }
}

fn merge(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

fn split_bits(k: usize) -> usize {
    if k >= PARALLEL_MIN_DIM { SPLIT_BITS.min(k) } else { 0 }
}

fn gray_counts<const W: usize>(code: &LinearCode) -> Vec<u64> {
    let n = code.len();
    let rows = packed_rows::<W>(code);
    let k = rows.len();
    let split = split_bits(k);
    let low = k - split;
    let walk = |chunk: usize| -> Vec<u64> {
        let mut counts = vec![0u64; n + 1];
        let mut word = [0u64; W];
        for b in 0..split {
            if (chunk >> b) & 1 == 1 {
                for (x, y) in word.iter_mut().zip(&rows[low + b]) {
                    *x ^= y;
                }
            }
        }
        let weight = |w: &[u64; W]| w.iter().map(|x| x.count_ones() as usize).sum::<usize>();
        counts[weight(&word)] += 1;
        for step in 1u64..(1u64 << low) {
            let row = &rows[step.trailing_zeros() as usize];
            for (x, y) in word.iter_mut().zip(row) {
                *x ^= y;
            }
            counts[weight(&word)] += 1;
        }
        counts
    };
    if split == 0 {
        walk(0)
    } else {
        (0..1usize << split).into_par_iter().map(walk).reduce(|| vec![0; n + 1], merge)
    }
}

fn gray_counts_wide(code: &LinearCode) -> Vec<u64> {
    let n = code.len();
    let stride = words_for(n);
    let g = code.generator().to_bits();
    let k = g.rows();
    let split = split_bits(k);
    let low = k - split;
    let walk = |chunk: usize| -> Vec<u64> {
        let mut counts = vec![0u64; n + 1];
        let mut word = vec![0u64; stride];
        for b in 0..split {
            if (chunk >> b) & 1 == 1 {
                crate::bitmat::xor_into(&mut word, g.row(low + b));
            }
        }
        counts[crate::bitmat::weight(&word) as usize] += 1;
        for step in 1u64..(1u64 << low) {
            crate::bitmat::xor_into(&mut word, g.row(step.trailing_zeros() as usize));
            counts[crate::bitmat::weight(&word) as usize] += 1;
        }
        counts
    };
    (0..1usize << split).into_par_iter().map(walk).reduce(|| vec![0; n + 1], merge)
}

fn ternary_counts(code: &LinearCode) -> Vec<u64> {
    let n = code.len();
    let g = code.generator();
    let k = g.rows();
    let rows: Vec<Vec<u8>> = (0..k).map(|i| g.row(i).iter().map(|&v| v as u8).collect()).collect();
    let mut counts = vec![0u64; n + 1];
    let mut word = vec![0u8; n];
    let mut digits = vec![0u8; k];
    let add = |word: &mut [u8], row: &[u8]| {
        for (x, &y) in word.iter_mut().zip(row) {
            *x = (*x + y) % 3;
        }
    };
    counts[0] += 1;
    'outer: loop {
        // odometer: 2 -> 0 wraps add one more copy of the row
        let mut i = 0;
        loop {
            if i == k {
                break 'outer;
            }
            add(&mut word, &rows[i]);
            if digits[i] == 2 {
                digits[i] = 0;
                i += 1;
            } else {
                digits[i] += 1;
                break;
            }
        }
        counts[word.iter().filter(|&&x| x != 0).count()] += 1;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn brute_counts(code: &LinearCode) -> Vec<u64> {
        let mut counts = vec![0u64; code.len() + 1];
        for w in code.codewords(1 << 20).unwrap() {
            counts[w.iter().filter(|&&x| x != 0).count()] += 1;
        }
        counts
    }

    #[test]
    fn small_examples() {
        let f2 = FieldSpec::f2();
        let k3 = LinearCode::from_rows(&f2, 3, &[vec![0, 1, 1], vec![1, 0, 1]]).unwrap();
        assert_eq!(k3.weight_distribution().unwrap().counts(), &[1, 0, 3, 0]);
        assert_eq!(k3.min_weight().unwrap(), 2);
        let zero = LinearCode::zero(&f2, 3).unwrap();
        assert_eq!(zero.weight_distribution().unwrap().counts(), &[1, 0, 0, 0]);
        assert_eq!(zero.min_weight(), Err(Error::NoNonzeroCodeword));
        let full = LinearCode::full_space(&f2, 2).unwrap();
        assert_eq!(full.weight_distribution().unwrap().counts(), &[1, 2, 1]);
        let t = LinearCode::from_rows(&FieldSpec::f3(), 3, &[vec![1, 1, 1]]).unwrap();
        assert_eq!(t.min_weight().unwrap(), 3);
        assert_eq!(t.weight_distribution().unwrap().counts(), &[1, 0, 0, 2]);
    }

    #[test]
    fn budget() {
        let full = LinearCode::full_space(&FieldSpec::f2(), 12).unwrap();
        assert!(matches!(full.weight_distribution_with_budget(1 << 11), Err(Error::BudgetExceeded(_))));
        assert_eq!(full.weight_distribution_with_budget(1 << 12).unwrap().total(), 1 << 12);
    }

    #[test]
    fn gray_walk_matches_brute_force_across_widths() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for &(n, k, p) in &[(10, 5, 2), (70, 8, 2), (150, 6, 2), (700, 4, 2), (9, 6, 3), (20, 17, 2)] {
            let field = FieldSpec::prime(p).unwrap();
            let rows: Vec<Vec<u32>> = (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect()).collect();
            let code = LinearCode::from_rows(&field, n, &rows).unwrap();
            let wd = code.weight_distribution().unwrap();
            assert_eq!(wd.counts(), brute_counts(&code).as_slice(), "n={n} k={k} p={p}");
            assert_eq!(wd.total(), (p as u64).pow(code.dim() as u32));
        }
    }

    #[test]
    fn csv_format() {
        let full = LinearCode::full_space(&FieldSpec::f2(), 2).unwrap();
        assert_eq!(full.weight_distribution().unwrap().to_csv(), "weight,count\n0,1\n1,2\n2,1\n");
    }
}
