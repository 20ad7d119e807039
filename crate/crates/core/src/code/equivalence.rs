//! Monomial equivalence by exhaustive search, for short codes.

use super::{LinearCode, Monomial};
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

pub const BRUTEFORCE_MAX_LENGTH: usize = 10;

/// Decides whether `c2 = c1 M` for some monomial `M`, returning a witness.
///
/// Coordinates of `c1` are matched to coordinates of `c2` one at a time.
/// A partial match survives only while the projections of the two codes onto
/// the matched coordinates agree, which is necessary for any completion.
pub fn equivalent_bruteforce(c1: &LinearCode, c2: &LinearCode) -> Result<Option<Monomial>> {
    if c1.field() != c2.field() || c1.len() != c2.len() {
        return Err(Error::BadInput("codes must share field and length".into()));
    }
    let n = c1.len();
    if n > BRUTEFORCE_MAX_LENGTH {
        return Err(Error::BudgetExceeded(format!(
            "brute-force equivalence is limited to length {BRUTEFORCE_MAX_LENGTH}, got {n}"
        )));
    }
    if c1.dim() != c2.dim() || c1.weight_distribution()? != c2.weight_distribution()? {
        return Ok(None);
    }
    // Over F_2 and F_3 every monomial M has M M^T = I, so C M = C' iff
    // C^⊥ M = C'^⊥; the smaller side prunes sooner.
    if 2 * c1.dim() > n {
        let m = search(&c1.dual(), &c2.dual())?;
        if let Some(m) = &m {
            debug_assert_eq!(&c1.transform(m)?, c2);
        }
        return Ok(m);
    }
    search(c1, c2)
}

fn search(c1: &LinearCode, c2: &LinearCode) -> Result<Option<Monomial>> {
    let n = c1.len();
    let (p1, p2) = (coordinate_profiles(c1)?, coordinate_profiles(c2)?);
    let (mut s1, mut s2) = (p1.clone(), p2.clone());
    s1.sort();
    s2.sort();
    if s1 != s2 {
        return Ok(None);
    }
    let mut search = Search {
        c1,
        c2,
        p1,
        p2,
        perm: Vec::with_capacity(n),
        scales: Vec::with_capacity(n),
        used: vec![false; n],
    };
    if search.extend() {
        let m = Monomial::new(search.perm, search.scales)?;
        debug_assert_eq!(&c1.transform(&m)?, c2);
        Ok(Some(m))
    } else {
        Ok(None)
    }
}

/// For each coordinate, the weight counts of codewords nonzero there.
/// Monomial maps carry the profile of `j` to the profile of its image.
fn coordinate_profiles(c: &LinearCode) -> Result<Vec<Vec<u32>>> {
    let n = c.len();
    let mut prof = vec![vec![0u32; n + 1]; n];
    for w in c.codewords(super::DEFAULT_BUDGET)? {
        let wt = w.iter().filter(|&&x| x != 0).count();
        for (j, &x) in w.iter().enumerate() {
            if x != 0 {
                prof[j][wt] += 1;
            }
        }
    }
    Ok(prof)
}

struct Search<'a> {
    c1: &'a LinearCode,
    c2: &'a LinearCode,
    p1: Vec<Vec<u32>>,
    p2: Vec<Vec<u32>>,
    perm: Vec<usize>,
    scales: Vec<u32>,
    used: Vec<bool>,
}

/// Canonical basis of the row span.
fn span(m: &ExactMatrix) -> ExactMatrix {
    let red = m.rref();
    red.matrix.select_rows(&(0..red.rank).collect::<Vec<_>>())
}

impl Search<'_> {
    fn consistent(&self) -> bool {
        let depth = self.perm.len();
        let g1 = self.c1.generator();
        let g2 = self.c2.generator();
        let f = self.c1.field();
        let left = g1.select_columns(&(0..depth).collect::<Vec<_>>());
        let right = ExactMatrix::from_fn(f, g2.rows(), depth, |i, j| {
            // column j of c1 scaled by s lands at perm[j]: undo the scale on c2's side
            let inv = f.inv(self.scales[j]).expect("nonzero scale");
            f.mul(inv, g2.get(i, self.perm[j]))
        });
        span(&left) == span(&right)
    }

    fn extend(&mut self) -> bool {
        let n = self.c1.len();
        if self.perm.len() == n {
            return true;
        }
        let q = self.c1.field().order();
        // a global scalar fixes every linear code, so the first scale can be 1
        let scales: Vec<u32> = if self.perm.is_empty() { vec![1] } else { (1..q).collect() };
        let j = self.perm.len();
        for target in 0..n {
            if self.used[target] || self.p1[j] != self.p2[target] {
                continue;
            }
            for &s in &scales {
                self.perm.push(target);
                self.scales.push(s);
                self.used[target] = true;
                if self.consistent() && self.extend() {
                    return true;
                }
                self.used[target] = false;
                self.perm.pop();
                self.scales.pop();
            }
        }
        false
    }
}
