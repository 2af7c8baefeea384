use std::fmt;

const WORD_BITS: usize = 64;

/// A bit vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(WORD_BITS)],
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = BitVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "BitVec length mismatch");
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set bit, if any.
    pub fn first_set(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter_set(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

/// A dense bit-packed matrix over GF(2), row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    words: Vec<u64>,
}

/// Result of reduced row echelon form.
pub struct Rref {
    pub rank: usize,
    pub reduced: BitMatrix,
    pub pivot_columns: Vec<usize>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(WORD_BITS).max(1);
        BitMatrix {
            rows,
            cols,
            stride,
            words: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v % 2 == 1);
            }
        }
        m
    }

    pub fn from_bitvec_rows(rows: &[BitVec], cols: usize) -> Self {
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols);
            for c in row.iter_set() {
                m.set(r, c, true);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        (self.words[r * self.stride + c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols);
        let mask = 1u64 << (c % WORD_BITS);
        let w = &mut self.words[r * self.stride + c / WORD_BITS];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn row(&self, r: usize) -> BitVec {
        assert!(r < self.rows);
        BitVec {
            len: self.cols,
            words: self.words[r * self.stride..(r + 1) * self.stride].to_vec(),
        }
    }

    pub fn set_row(&mut self, r: usize, v: &BitVec) {
        assert!(r < self.rows && v.len == self.cols);
        self.words[r * self.stride..r * self.stride + v.words.len()].copy_from_slice(&v.words);
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let (a, b) = if src < dst {
            let (lo, hi) = self.words.split_at_mut(dst * self.stride);
            (&lo[src * self.stride..src * self.stride + self.stride], &mut hi[..self.stride])
        } else {
            let (lo, hi) = self.words.split_at_mut(src * self.stride);
            (&hi[..self.stride], &mut lo[dst * self.stride..dst * self.stride + self.stride])
        };
        for (d, s) in b.iter_mut().zip(a) {
            *d ^= s;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.stride {
            self.words.swap(a * self.stride + k, b * self.stride + k);
        }
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    out.set(c, r, true);
                }
            }
        }
        out
    }

    /// Multiply `self` by a column vector: returns `self * v`.
    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len, self.cols, "dimension mismatch");
        let mut out = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            let mut acc = 0u64;
            for k in 0..self.stride {
                acc ^= self.words[r * self.stride + k] & v.words.get(k).copied().unwrap_or(0);
            }
            if acc.count_ones() % 2 == 1 {
                out.set(r, true);
            }
        }
        out
    }

    /// Row vector times matrix: returns `v * self`.
    pub fn vec_mul(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len, self.rows, "dimension mismatch");
        let mut out = BitVec::zeros(self.cols);
        for r in v.iter_set() {
            out.xor_assign(&self.row(r));
        }
        out
    }

    /// Reduced row echelon form by Gaussian elimination.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivot_columns = Vec::new();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(pivot) = (rank..m.rows).find(|&r| m.get(r, col)) else {
                continue;
            };
            m.swap_rows(rank, pivot);
            for r in 0..m.rows {
                if r != rank && m.get(r, col) {
                    m.xor_row_into(rank, r);
                }
            }
            pivot_columns.push(col);
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        Rref {
            rank,
            reduced: m,
            pivot_columns,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right null space: rows `v` of the result satisfy
    /// `self * v^T = 0`. Row count is `cols - rank`.
    pub fn kernel_basis(&self) -> BitMatrix {
        let Rref {
            reduced,
            pivot_columns,
            ..
        } = self.rref();
        let is_pivot = {
            let mut p = vec![false; self.cols];
            for &c in &pivot_columns {
                p[c] = true;
            }
            p
        };
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut basis = BitMatrix::zeros(free.len(), self.cols);
        for (bi, &f) in free.iter().enumerate() {
            basis.set(bi, f, true);
            for (ri, &pc) in pivot_columns.iter().enumerate() {
                if reduced.get(ri, f) {
                    basis.set(bi, pc, true);
                }
            }
        }
        basis
    }

    /// Express `v` as a GF(2)-combination of the rows of `self`.
    ///
    /// Returns `x` with `x * self = v` when `v` lies in the row span,
    /// otherwise `None`. Panics on dimension mismatch.
    pub fn solve_in_span(&self, v: &BitVec) -> Option<BitVec> {
        assert_eq!(v.len, self.cols, "dimension mismatch");
        // Eliminate [self | I] so the tracking block records row combinations.
        let mut m = self.clone();
        let mut track = BitMatrix::identity(self.rows);
        let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(p) = (rank..m.rows).find(|&r| m.get(r, col)) else {
                continue;
            };
            m.swap_rows(rank, p);
            track.swap_rows(rank, p);
            for r in 0..m.rows {
                if r != rank && m.get(r, col) {
                    m.xor_row_into(rank, r);
                    track.xor_row_into(rank, r);
                }
            }
            pivots.push((rank, col));
            rank += 1;
        }
        let mut residual = v.clone();
        let mut x = BitVec::zeros(self.rows);
        for &(row, col) in &pivots {
            if residual.get(col) {
                residual.xor_assign(&m.row(row));
                x.xor_assign(&track.row(row));
            }
        }
        residual.is_zero().then_some(x)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                write!(f, "{}", u8::from(self.get(r, c)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identity() {
        let m = BitMatrix::identity(3);
        let r = m.rref();
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivot_columns, vec![0, 1, 2]);
        assert_eq!(r.reduced, m);
    }

    #[test]
    fn rref_equal_rows() {
        let m = BitMatrix::from_rows(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(m.rref().rank, 1);
    }

    #[test]
    fn rref_xor_dependent_row() {
        let m = BitMatrix::from_rows(&[vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 0]]);
        assert_eq!(m.rref().rank, 2);
    }

    #[test]
    fn rref_idempotent() {
        let m = BitMatrix::from_rows(&[vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]);
        let r = m.rref();
        let r2 = r.reduced.rref();
        assert_eq!(r.reduced, r2.reduced);
    }

    #[test]
    fn kernel_injective() {
        let m = BitMatrix::identity(2);
        assert_eq!(m.kernel_basis().rows(), 0);
    }

    #[test]
    fn kernel_zero_map() {
        let m = BitMatrix::zeros(2, 3);
        assert_eq!(m.kernel_basis().rows(), 3);
    }

    #[test]
    fn kernel_single_vector() {
        let m = BitMatrix::from_rows(&[vec![1, 1, 0], vec![0, 0, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.rows(), 1);
        assert_eq!(k.row(0), BitVec::from_bits(&[true, true, false]));
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = BitMatrix::from_rows(&[vec![1, 0, 1, 1], vec![0, 1, 1, 0]]);
        let k = m.kernel_basis();
        for r in 0..k.rows() {
            assert!(m.mul_vec(&k.row(r)).is_zero());
        }
    }

    #[test]
    fn solve_identity() {
        let m = BitMatrix::identity(2);
        let x = m
            .solve_in_span(&BitVec::from_bits(&[true, false]))
            .unwrap();
        assert_eq!(x, BitVec::from_bits(&[true, false]));
    }

    #[test]
    fn solve_not_in_span() {
        let m = BitMatrix::from_rows(&[vec![1, 1]]);
        assert!(m.solve_in_span(&BitVec::from_bits(&[true, false])).is_none());
    }

    #[test]
    fn solve_row_sum() {
        let m = BitMatrix::from_rows(&[vec![1, 0], vec![1, 1]]);
        let v = BitVec::from_bits(&[false, true]);
        let x = m.solve_in_span(&v).unwrap();
        assert_eq!(x, BitVec::from_bits(&[true, true]));
        assert_eq!(m.vec_mul(&x), v);
    }
}
