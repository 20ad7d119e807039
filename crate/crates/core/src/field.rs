//! Arithmetic in small finite fields `F_p` and `F_{p^k}`.
//!
//! Elements are `u32` values in `0..p^k`. For an extension field the value
//! packs the coefficients of the residue polynomial in base `p`, constant
//! term first: `c0 + c1*p + c2*p^2 + ...`. In `F_9 = F_3[x]/(x^2+1)` the
//! element `x` is therefore `3`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest field order accepted. Keeps every intermediate product in `u64`.
pub const MAX_ORDER: u32 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldOp {
    Add,
    Mul,
    Neg,
    Inv,
}

/// A prime field or a small extension of one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
    k: u32,
    /// Monic modulus, ascending coefficients (length `k + 1`); `None` when `k == 1`.
    modulus: Option<Vec<u32>>,
    q: u32,
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Writes `q = p^k` with `p` prime, if possible.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut k) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::BadField(format!("{p} is not prime")));
        }
        if p > MAX_ORDER {
            return Err(Error::BadField(format!("prime {p} is too large")));
        }
        Ok(FieldSpec { p, k: 1, modulus: None, q: p })
    }

    /// The binary field.
    pub fn f2() -> Self {
        FieldSpec { p: 2, k: 1, modulus: None, q: 2 }
    }

    /// The ternary field.
    pub fn f3() -> Self {
        FieldSpec { p: 3, k: 1, modulus: None, q: 3 }
    }

    /// `F_p[x]/(modulus)`. `modulus` lists ascending coefficients of a monic
    /// polynomial of degree `k`, leading 1 included. Irreducibility is checked.
    pub fn extension(p: u32, modulus: Vec<u32>) -> Result<Self> {
        let base = Self::prime(p)?;
        if modulus.len() < 2 {
            return Err(Error::BadField("modulus must have degree at least 1".into()));
        }
        let k = (modulus.len() - 1) as u32;
        if modulus.iter().any(|&c| c >= p) || *modulus.last().unwrap() != 1 {
            return Err(Error::BadField(format!("modulus {modulus:?} is not a monic polynomial over F_{p}")));
        }
        if k == 1 {
            return Ok(base);
        }
        let q = (p as u64).pow(k);
        if q > MAX_ORDER as u64 {
            return Err(Error::BadField(format!("order {p}^{k} is too large")));
        }
        if !is_irreducible(p, &modulus) {
            return Err(Error::BadField(format!("modulus {modulus:?} is reducible over F_{p}")));
        }
        Ok(FieldSpec { p, k, modulus: Some(modulus), q: q as u32 })
    }

    /// `F_{p^k}` with the lexicographically least irreducible monic modulus,
    /// comparing ascending coefficient lists (`x^2+1` for `F_9`, `x^2+x+1` for `F_25`).
    pub fn with_default_modulus(p: u32, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::BadField("extension degree must be at least 1".into()));
        }
        if k == 1 {
            return Self::prime(p);
        }
        Self::prime(p)?;
        let q = (p as u64).pow(k);
        if q > MAX_ORDER as u64 {
            return Err(Error::BadField(format!("order {p}^{k} is too large")));
        }
        // Counting over packed values with the constant term as the most
        // significant digit gives ascending-list lexicographic order.
        for code in 0..q as u32 {
            let mut low = vec![0u32; k as usize];
            let mut rest = code;
            for slot in (0..k as usize).rev() {
                low[slot] = rest % p;
                rest /= p;
            }
            let mut poly = low;
            poly.push(1);
            if is_irreducible(p, &poly) {
                return Ok(FieldSpec { p, k, modulus: Some(poly), q: q as u32 });
            }
        }
        Err(Error::BadField(format!("no irreducible polynomial of degree {k} over F_{p}")))
    }

    /// The field of order `q` with its default modulus.
    pub fn of_order(q: u32) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or_else(|| Error::BadField(format!("{q} is not a prime power")))?;
        Self::with_default_modulus(p, k)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> Option<&[u32]> {
        self.modulus.as_deref()
    }

    pub fn is_prime_field(&self) -> bool {
        self.k == 1
    }

    pub fn check(&self, a: u32) -> Result<u32> {
        if a < self.q {
            Ok(a)
        } else {
            Err(Error::BadElement { element: a, order: self.q })
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    fn digits(&self, mut a: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.k as usize);
        for _ in 0..self.k {
            out.push(a % self.p);
            a /= self.p;
        }
        out
    }

    fn pack(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.pack(&sum)
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.k == 1 {
            return (self.p - a % self.p) % self.p;
        }
        let d: Vec<u32> = self.digits(a).iter().map(|&x| (self.p - x) % self.p).collect();
        self.pack(&d)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        let p = self.p as u64;
        let (da, db) = (self.digits(a), self.digits(b));
        let k = self.k as usize;
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        let modulus = self.modulus.as_ref().expect("extension field has a modulus");
        // x^k = -(m_0 + ... + m_{k-1} x^{k-1})
        for deg in (k..prod.len()).rev() {
            let lead = prod[deg];
            if lead == 0 {
                continue;
            }
            prod[deg] = 0;
            for (i, &m) in modulus[..k].iter().enumerate() {
                let slot = deg - k + i;
                prod[slot] = (prod[slot] + (p - lead) * m as u64) % p;
            }
        }
        let low: Vec<u32> = prod[..k].iter().map(|&c| c as u32).collect();
        self.pack(&low)
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let (mut base, mut acc) = (a, 1u32);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero(self.q));
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Whether `a` is a nonzero square.
    pub fn is_nonzero_square(&self, a: u32) -> bool {
        if a == 0 {
            return false;
        }
        if self.p == 2 {
            return true;
        }
        self.pow(a, (self.q as u64 - 1) / 2) == 1
    }

    /// Checked single-operation entry point: `b` must be present exactly for
    /// the binary operations.
    pub fn apply(&self, op: FieldOp, a: u32, b: Option<u32>) -> Result<u32> {
        self.check(a)?;
        if let Some(b) = b {
            self.check(b)?;
        }
        match (op, b) {
            (FieldOp::Add, Some(b)) => Ok(self.add(a, b)),
            (FieldOp::Mul, Some(b)) => Ok(self.mul(a, b)),
            (FieldOp::Neg, None) => Ok(self.neg(a)),
            (FieldOp::Inv, None) => self.inv(a),
            (op, _) => Err(Error::BadInput(format!("wrong operand count for {op:?}"))),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q)
    }
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(p: u32, poly: &[u32]) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut rest = code;
            for _ in 0..d {
                divisor.push((rest % p as u64) as u32);
                rest /= p as u64;
            }
            divisor.push(1);
            if poly_rem_is_zero(p, poly, &divisor) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(p: u32, num: &[u32], monic: &[u32]) -> bool {
    let p = p as u64;
    let mut r: Vec<u64> = num.iter().map(|&c| c as u64).collect();
    let d = monic.len() - 1;
    for deg in (d..r.len()).rev() {
        let lead = r[deg];
        if lead == 0 {
            continue;
        }
        for (i, &m) in monic.iter().enumerate() {
            let slot = deg - d + i;
            r[slot] = (r[slot] + (p - lead) * m as u64) % p;
        }
    }
    r[..d].iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_examples() {
        let f2 = FieldSpec::f2();
        assert_eq!(f2.apply(FieldOp::Add, 1, Some(1)).unwrap(), 0);
        let f3 = FieldSpec::f3();
        assert_eq!(f3.apply(FieldOp::Inv, 2, None).unwrap(), 2);
        assert_eq!(f3.apply(FieldOp::Neg, 1, None).unwrap(), 2);
    }

    #[test]
    fn f9_x_times_x() {
        let f9 = FieldSpec::extension(3, vec![1, 0, 1]).unwrap();
        // x is packed as 3
        assert_eq!(f9.apply(FieldOp::Mul, 3, Some(3)).unwrap(), 2);
    }

    #[test]
    fn errors() {
        let f3 = FieldSpec::f3();
        assert_eq!(f3.apply(FieldOp::Inv, 0, None), Err(Error::DivisionByZero(3)));
        assert!(matches!(f3.apply(FieldOp::Add, 3, Some(0)), Err(Error::BadElement { .. })));
        assert!(FieldSpec::prime(9).is_err());
        // x^2 + 2x + 1 = (x+1)^2 over F_3
        assert!(FieldSpec::extension(3, vec![1, 2, 1]).is_err());
    }

    #[test]
    fn default_moduli() {
        assert_eq!(FieldSpec::with_default_modulus(3, 2).unwrap().modulus(), Some(&[1, 0, 1][..]));
        assert_eq!(FieldSpec::with_default_modulus(5, 2).unwrap().modulus(), Some(&[1, 1, 1][..]));
        assert_eq!(FieldSpec::of_order(49).unwrap().order(), 49);
        assert_eq!(prime_power(25), Some((5, 2)));
        assert_eq!(prime_power(12), None);
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for q in [2, 3, 4, 5, 7, 8, 9, 25, 27] {
            let f = FieldSpec::of_order(q).unwrap();
            let mut squares = 0;
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "q={q} a={a}");
                }
                if f.is_nonzero_square(a) {
                    squares += 1;
                }
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements().step_by(3) {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    }
                }
            }
            let expected = if q % 2 == 0 { q - 1 } else { (q - 1) / 2 };
            assert_eq!(squares, expected, "q={q}");
        }
    }
}
