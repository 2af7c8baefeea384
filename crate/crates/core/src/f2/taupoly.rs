use std::fmt;
use std::ops::{Add, Mul};

const WORD_BITS: usize = 64;

/// A polynomial in GF(2)[t], coefficients bit-packed (bit i = coefficient
/// of t^i). Addition is coefficientwise XOR. Nonzero polynomials carry no
/// trailing zero words, so the leading coefficient is always 1.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TauPoly {
    words: Vec<u64>,
}

impl TauPoly {
    pub fn zero() -> Self {
        TauPoly { words: Vec::new() }
    }

    pub fn one() -> Self {
        TauPoly { words: vec![1] }
    }

    /// The monomial t^k.
    pub fn tau_power(k: usize) -> Self {
        let mut words = vec![0u64; k / WORD_BITS + 1];
        words[k / WORD_BITS] = 1 << (k % WORD_BITS);
        TauPoly { words }
    }

    pub fn from_coefficients(coeffs: &[u8]) -> Self {
        let mut p = TauPoly::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            if c % 2 == 1 {
                p = p + TauPoly::tau_power(i);
            }
        }
        p
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    /// Degree of the polynomial; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        let w = *self.words.last()?;
        Some((self.words.len() - 1) * WORD_BITS + (WORD_BITS - 1 - w.leading_zeros() as usize))
    }

    pub fn coefficient(&self, i: usize) -> bool {
        self.words
            .get(i / WORD_BITS)
            .is_some_and(|w| (w >> (i % WORD_BITS)) & 1 == 1)
    }

    /// True when the polynomial is a single monomial t^k.
    pub fn is_monomial(&self) -> bool {
        self.words.iter().map(|w| w.count_ones()).sum::<u32>() == 1
    }

    fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return TauPoly::zero();
        }
        let word_shift = k / WORD_BITS;
        let bit_shift = k % WORD_BITS;
        let mut words = vec![0u64; self.words.len() + word_shift + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + word_shift] |= w << bit_shift;
            if bit_shift > 0 {
                words[i + word_shift + 1] |= w >> (WORD_BITS - bit_shift);
            }
        }
        let mut p = TauPoly { words };
        p.trim();
        p
    }

    /// Euclidean division: returns (quotient, remainder) with
    /// deg r < deg divisor.
    pub fn div_rem(&self, divisor: &TauPoly) -> (TauPoly, TauPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let d = divisor.degree().unwrap();
        let mut rem = self.clone();
        let mut quot = TauPoly::zero();
        while let Some(rd) = rem.degree() {
            if rd < d {
                break;
            }
            let shift = rd - d;
            quot = quot + TauPoly::tau_power(shift);
            rem = rem + divisor.shifted(shift);
        }
        (quot, rem)
    }

    pub fn divides(&self, other: &TauPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }
}

impl Add for TauPoly {
    type Output = TauPoly;
    fn add(self, rhs: TauPoly) -> TauPoly {
        &self + &rhs
    }
}

impl Add for &TauPoly {
    type Output = TauPoly;
    fn add(self, rhs: &TauPoly) -> TauPoly {
        let (long, short) = if self.words.len() >= rhs.words.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut words = long.words.clone();
        for (w, o) in words.iter_mut().zip(&short.words) {
            *w ^= o;
        }
        let mut p = TauPoly { words };
        p.trim();
        p
    }
}

impl Mul for &TauPoly {
    type Output = TauPoly;
    fn mul(self, rhs: &TauPoly) -> TauPoly {
        let mut acc = TauPoly::zero();
        for (wi, &w) in self.words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                acc = acc + rhs.shifted(wi * WORD_BITS + b);
            }
        }
        acc
    }
}

impl Mul for TauPoly {
    type Output = TauPoly;
    fn mul(self, rhs: TauPoly) -> TauPoly {
        &self * &rhs
    }
}

impl fmt::Display for TauPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let deg = self.degree().unwrap();
        let mut first = true;
        for i in (0..=deg).rev() {
            if self.coefficient(i) {
                if !first {
                    write!(f, " + ")?;
                }
                match i {
                    0 => write!(f, "1")?,
                    1 => write!(f, "t")?,
                    _ => write!(f, "t^{i}")?,
                }
                first = false;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TauPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A dense matrix with GF(2)[t] entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TauPolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<TauPoly>,
}

impl TauPolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        TauPolyMatrix {
            rows,
            cols,
            entries: vec![TauPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = TauPolyMatrix::zeros(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = TauPoly::one();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<TauPoly>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        TauPolyMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &TauPoly {
        assert!(r < self.rows && c < self.cols);
        &self.entries[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut TauPoly {
        assert!(r < self.rows && c < self.cols);
        &mut self.entries[r * self.cols + c]
    }

    pub fn column(&self, c: usize) -> Vec<TauPoly> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(TauPoly::is_zero)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    pub fn add_row_multiple(&mut self, src: usize, dst: usize, q: &TauPoly) {
        assert_ne!(src, dst);
        for c in 0..self.cols {
            let add = self.get(src, c) * q;
            let e = self.get_mut(dst, c);
            *e = &*e + &add;
        }
    }

    /// col[dst] += q * col[src]
    pub fn add_col_multiple(&mut self, src: usize, dst: usize, q: &TauPoly) {
        assert_ne!(src, dst);
        for r in 0..self.rows {
            let add = self.get(r, src) * q;
            let e = self.get_mut(r, dst);
            *e = &*e + &add;
        }
    }

    pub fn mul(&self, rhs: &TauPolyMatrix) -> TauPolyMatrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = TauPolyMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let add = a * rhs.get(k, c);
                    let e = out.get_mut(r, c);
                    *e = &*e + &add;
                }
            }
        }
        out
    }

    /// `self * v` for a column vector of polynomials.
    pub fn mul_column(&self, v: &[TauPoly]) -> Vec<TauPoly> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = TauPoly::zero();
                for c in 0..self.cols {
                    acc = acc + self.get(r, c) * &v[c];
                }
                acc
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_is_xor() {
        let a = TauPoly::from_coefficients(&[1, 1, 0, 1]);
        let b = TauPoly::from_coefficients(&[0, 1, 1, 1]);
        assert_eq!(&a + &b, TauPoly::from_coefficients(&[1, 0, 1]));
        assert!((&a + &a).is_zero());
    }

    #[test]
    fn mul_carryless() {
        // (t + 1)^2 = t^2 + 1 in characteristic 2
        let p = TauPoly::from_coefficients(&[1, 1]);
        assert_eq!(&p * &p, TauPoly::from_coefficients(&[1, 0, 1]));
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = TauPoly::from_coefficients(&[1, 0, 1, 1, 1]);
        let b = TauPoly::from_coefficients(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn degree_and_monomial() {
        assert_eq!(TauPoly::tau_power(5).degree(), Some(5));
        assert!(TauPoly::tau_power(5).is_monomial());
        assert!(!TauPoly::from_coefficients(&[1, 1]).is_monomial());
        assert_eq!(TauPoly::zero().degree(), None);
    }
}
