//! Dense matrices over GF(2) with rows packed into `u64` words.

use std::fmt;

/// A bit vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitRow {
    len: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut row = BitRow::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                row.set(i, true);
            }
        }
        row
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Parity of the bitwise AND.
    pub fn dot(&self, other: &BitRow) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum::<u32>() % 2 == 1
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", self.get(i) as u8)?;
        }
        Ok(())
    }
}

/// A `rows x cols` matrix over GF(2), stored row-major with packed words.
#[derive(Clone, PartialEq, Eq)]
pub struct Z2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl Z2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(64);
        Z2Matrix { rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Z2Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.stride + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let w = &mut self.data[r * self.stride + c / 64];
        let mask = 1u64 << (c % 64);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, r: usize, c: usize) {
        self.data[r * self.stride + c / 64] ^= 1u64 << (c % 64);
    }

    pub fn row(&self, r: usize) -> BitRow {
        BitRow { len: self.cols, words: self.row_words(r).to_vec() }
    }

    /// Number of ones in column `c`.
    pub fn column_weight(&self, c: usize) -> usize {
        (0..self.rows).filter(|&r| self.get(r, c)).count()
    }

    pub fn transpose(&self) -> Z2Matrix {
        let mut t = Z2Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.row(r).ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    /// `self * v`.
    pub fn mul_vec(&self, v: &BitRow) -> BitRow {
        assert_eq!(v.len(), self.cols);
        let mut out = BitRow::zeros(self.rows);
        for r in 0..self.rows {
            let parity = self.row_words(r).iter().zip(&v.words).map(|(a, b)| (a & b).count_ones()).sum::<u32>();
            if parity % 2 == 1 {
                out.set(r, true);
            }
        }
        out
    }

    /// `self * other`.
    pub fn mul(&self, other: &Z2Matrix) -> Z2Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Z2Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in self.row(r).ones() {
                let (dst, src) = (r * out.stride, k * other.stride);
                for w in 0..out.stride {
                    out.data[dst + w] ^= other.data[src + w];
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// `row[dst] ^= row[src]`, touching only words from `from_word` on.
    #[inline]
    fn xor_rows(&mut self, dst: usize, src: usize, from_word: usize) {
        debug_assert_ne!(dst, src);
        let s = self.stride;
        let (d0, s0) = (dst * s, src * s);
        if dst < src {
            let (head, tail) = self.data.split_at_mut(s0);
            for w in from_word..s {
                head[d0 + w] ^= tail[w];
            }
        } else {
            let (head, tail) = self.data.split_at_mut(d0);
            for w in from_word..s {
                tail[w] ^= head[s0 + w];
            }
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        for w in 0..s {
            self.data.swap(a * s + w, b * s + w);
        }
    }

    /// Reduces to row echelon form in place and returns the pivot columns.
    ///
    /// With `full` set, entries above each pivot are cleared too (reduced echelon form).
    /// Pivot choice is deterministic: the first row at or below the current rank
    /// with a one in the column.
    pub fn eliminate(&mut self, full: bool) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&r| self.get(r, c)) else {
                continue;
            };
            self.swap_rows(rank, p);
            let word = c / 64;
            let start = if full { 0 } else { rank + 1 };
            for r in start..self.rows {
                if r != rank && self.get(r, c) {
                    self.xor_rows(r, rank, word);
                }
            }
            pivots.push(c);
            rank += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate(false).len()
    }

    /// Solves `self * x = b`, returning one solution if the system is consistent.
    ///
    /// Works on the augmented matrix `[self | b]`; the system is inconsistent iff the
    /// last column becomes a pivot.
    pub fn solve(&self, b: &BitRow) -> Option<BitRow> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Z2Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in self.row(r).ones() {
                aug.set(r, c, true);
            }
            if b.get(r) {
                aug.set(r, self.cols, true);
            }
        }
        let pivots = aug.eliminate(true);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = BitRow::zeros(self.cols);
        for (r, &c) in pivots.iter().enumerate() {
            if aug.get(r, self.cols) {
                x.set(c, true);
            }
        }
        Some(x)
    }
}

impl fmt::Debug for Z2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Z2Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "{:?}", self.row(r))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn from_rows(rows: &[&[u8]]) -> Z2Matrix {
        let mut m = Z2Matrix::zeros(rows.len(), rows[0].len());
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v == 1);
            }
        }
        m
    }

    #[test]
    fn rank_small() {
        assert_eq!(Z2Matrix::identity(5).rank(), 5);
        assert_eq!(Z2Matrix::zeros(3, 7).rank(), 0);
        let m = from_rows(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn wide_rows_cross_word_boundaries() {
        let mut m = Z2Matrix::zeros(3, 200);
        m.set(0, 3, true);
        m.set(0, 130, true);
        m.set(1, 130, true);
        m.set(1, 199, true);
        m.set(2, 3, true);
        m.set(2, 199, true);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = from_rows(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let b = BitRow::from_bools(&[true, true, false]);
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        assert!(m.solve(&BitRow::from_bools(&[true, false, false])).is_none());
    }

    fn arb_matrix() -> impl Strategy<Value = Z2Matrix> {
        (1usize..12, 1usize..80).prop_flat_map(|(r, c)| {
            proptest::collection::vec(any::<bool>(), r * c).prop_map(move |bits| {
                let mut m = Z2Matrix::zeros(r, c);
                for (i, b) in bits.into_iter().enumerate() {
                    m.set(i / c, i % c, b);
                }
                m
            })
        })
    }

    proptest! {
        #[test]
        fn rank_bounded_and_transpose_invariant(m in arb_matrix()) {
            let r = m.rank();
            prop_assert!(r <= m.rows().min(m.cols()));
            prop_assert_eq!(r, m.transpose().rank());
        }

        #[test]
        fn reduced_form_is_stable(m in arb_matrix()) {
            let mut once = m.clone();
            let p1 = once.eliminate(true);
            let mut twice = once.clone();
            let p2 = twice.eliminate(true);
            prop_assert_eq!(p1, p2);
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn solve_finds_preimages(m in arb_matrix(), seed in any::<u64>()) {
            let mut x = BitRow::zeros(m.cols());
            for c in 0..m.cols() {
                if (seed >> (c % 64)) & 1 == 1 {
                    x.set(c, true);
                }
            }
            let b = m.mul_vec(&x);
            let y = m.solve(&b).expect("image vector must be solvable");
            prop_assert_eq!(m.mul_vec(&y), b);
        }
    }
}
