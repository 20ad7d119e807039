//! Seeded random instances for property checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::code::{LinearCode, Monomial};
use crate::field::FieldSpec;
use crate::matrix::ExactMatrix;

/// Row span of a random `k x n` matrix; the dimension may drop below `k`.
pub fn random_code<R: Rng>(rng: &mut R, field: &FieldSpec, n: usize, k: usize) -> LinearCode {
    let q = field.order();
    let g = ExactMatrix::from_fn(field, k, n, |_, _| rng.gen_range(0..q));
    LinearCode::from_generator(&g).expect("F_2 or F_3")
}

/// Rejection-samples an LCD code of length `n` and dimension in `1..n`.
pub fn random_lcd_code<R: Rng>(rng: &mut R, field: &FieldSpec, n: usize) -> LinearCode {
    assert!(n >= 2);
    loop {
        let k = rng.gen_range(1..n);
        let c = random_code(rng, field, n, k);
        if c.dim() >= 1 && c.is_lcd() {
            return c;
        }
    }
}

/// Rejection-samples a binary even LCD code of length `n`.
pub fn random_even_lcd_code<R: Rng>(rng: &mut R, n: usize) -> LinearCode {
    assert!(n >= 3);
    let f2 = FieldSpec::f2();
    loop {
        let k = rng.gen_range(1..n);
        let mut rows: Vec<Vec<u32>> = (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..2)).collect()).collect();
        for row in &mut rows {
            if row.iter().sum::<u32>() % 2 == 1 {
                let j = rng.gen_range(0..n);
                row[j] ^= 1;
            }
        }
        let c = LinearCode::from_rows(&f2, n, &rows).expect("valid rows");
        if c.dim() >= 1 && c.is_lcd() {
            return c;
        }
    }
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn random_monomial<R: Rng>(rng: &mut R, field: &FieldSpec, n: usize) -> Monomial {
    let q = field.order();
    let scales = (0..n).map(|_| rng.gen_range(1..q)).collect();
    Monomial::new(random_permutation(rng, n), scales).expect("valid monomial")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn samplers_meet_their_contracts() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        for n in 3..10 {
            let c = random_lcd_code(&mut rng, &FieldSpec::f3(), n);
            assert!(c.is_lcd() && c.dim() >= 1 && c.len() == n);
            let e = random_even_lcd_code(&mut rng, n);
            assert!(e.is_lcd() && e.is_even().unwrap());
            let m = random_monomial(&mut rng, &FieldSpec::f3(), n);
            assert!(m.scales().iter().all(|&s| s == 1 || s == 2));
        }
    }
}
