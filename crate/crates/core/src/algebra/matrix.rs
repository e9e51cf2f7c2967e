//! Dense matrices over a prime field GF(p).
//!
//! For p = 2 every row is a run of packed `u64` words and elimination works
//! word-at-a-time with XOR. Other primes store one byte per entry.

use super::field::is_prime;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Storage {
    Bits { wpr: usize, words: Vec<u64> },
    Bytes(Vec<u8>),
}

/// A `rows x cols` matrix with entries in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatGFp {
    rows: usize,
    cols: usize,
    p: u32,
    storage: Storage,
}

pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

fn check_modulus(p: u32) -> Result<()> {
    if !is_prime(p as u64) {
        return Err(Error::NonPrimeModulus(p));
    }
    if p >= 256 {
        return Err(Error::ModulusTooLarge(p));
    }
    Ok(())
}

pub(crate) fn inv_table(p: u32) -> Vec<u8> {
    let mut inv = vec![0u8; p as usize];
    for a in 1..p {
        for b in 1..p {
            if a * b % p == 1 {
                inv[a as usize] = b as u8;
            }
        }
    }
    inv
}

impl MatGFp {
    pub fn zeros(rows: usize, cols: usize, p: u32) -> Result<Self> {
        check_modulus(p)?;
        let storage = if p == 2 {
            let wpr = words_for(cols);
            Storage::Bits {
                wpr,
                words: vec![0; rows * wpr],
            }
        } else {
            Storage::Bytes(vec![0; rows * cols])
        };
        Ok(MatGFp {
            rows,
            cols,
            p,
            storage,
        })
    }

    /// The 0 x 0 matrix.
    pub fn empty(p: u32) -> Result<Self> {
        Self::zeros(0, 0, p)
    }

    pub fn identity(n: usize, p: u32) -> Result<Self> {
        let mut m = Self::zeros(n, n, p)?;
        for i in 0..n {
            m.set(i, i, 1);
        }
        Ok(m)
    }

    /// Builds a matrix from row vectors; entries are reduced mod p.
    pub fn from_rows(p: u32, cols: usize, rows: &[Vec<u8>]) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols, p)?;
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {r} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for (c, &x) in row.iter().enumerate() {
                m.set(r, c, (x as u32 % p) as u8);
            }
        }
        Ok(m)
    }

    /// Binary matrix from packed rows (bit `c` of the row is column `c`).
    pub fn from_bit_rows(cols: usize, rows: &[Vec<u64>]) -> Self {
        let wpr = words_for(cols);
        let mut words = Vec::with_capacity(rows.len() * wpr);
        for row in rows {
            assert_eq!(row.len(), wpr, "packed row length");
            words.extend_from_slice(row);
        }
        MatGFp {
            rows: rows.len(),
            cols,
            p: 2,
            storage: Storage::Bits { wpr, words },
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn is_packed(&self) -> bool {
        matches!(self.storage, Storage::Bits { .. })
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        match &self.storage {
            Storage::Bits { wpr, words } => ((words[r * wpr + c / 64] >> (c % 64)) & 1) as u8,
            Storage::Bytes(b) => b[r * self.cols + c],
        }
    }

    pub fn set(&mut self, r: usize, c: usize, value: u8) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        let value = (value as u32 % self.p) as u8;
        match &mut self.storage {
            Storage::Bits { wpr, words } => {
                let w = &mut words[r * *wpr + c / 64];
                if value == 1 {
                    *w |= 1 << (c % 64);
                } else {
                    *w &= !(1 << (c % 64));
                }
            }
            Storage::Bytes(b) => b[r * self.cols + c] = value,
        }
    }

    pub fn row(&self, r: usize) -> Vec<u8> {
        (0..self.cols).map(|c| self.get(r, c)).collect()
    }

    /// Packed words of row `r`. Panics unless p = 2.
    pub fn row_words(&self, r: usize) -> &[u64] {
        match &self.storage {
            Storage::Bits { wpr, words } => &words[r * wpr..(r + 1) * wpr],
            Storage::Bytes(_) => panic!("row_words on a matrix with p = {}", self.p),
        }
    }

    pub fn words_per_row(&self) -> usize {
        words_for(self.cols)
    }

    pub fn is_zero(&self) -> bool {
        match &self.storage {
            Storage::Bits { words, .. } => words.iter().all(|&w| w == 0),
            Storage::Bytes(b) => b.iter().all(|&x| x == 0),
        }
    }

    pub fn row_is_zero(&self, r: usize) -> bool {
        match &self.storage {
            Storage::Bits { .. } => self.row_words(r).iter().all(|&w| w == 0),
            Storage::Bytes(b) => b[r * self.cols..(r + 1) * self.cols]
                .iter()
                .all(|&x| x == 0),
        }
    }

    pub fn transpose(&self) -> MatGFp {
        let mut t = MatGFp::zeros(self.cols, self.rows, self.p).unwrap();
        for r in 0..self.rows {
            for c in 0..self.cols {
                let x = self.get(r, c);
                if x != 0 {
                    t.set(c, r, x);
                }
            }
        }
        t
    }

    pub fn select_rows(&self, idx: &[usize]) -> MatGFp {
        let mut m = MatGFp::zeros(idx.len(), self.cols, self.p).unwrap();
        for (i, &r) in idx.iter().enumerate() {
            for c in 0..self.cols {
                m.set(i, c, self.get(r, c));
            }
        }
        m
    }

    pub fn select_columns(&self, idx: &[usize]) -> MatGFp {
        let mut m = MatGFp::zeros(self.rows, idx.len(), self.p).unwrap();
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                m.set(r, j, self.get(r, c));
            }
        }
        m
    }

    /// Appends the rows of `other` below `self`.
    pub fn vstack(&self, other: &MatGFp) -> Result<MatGFp> {
        if self.cols != other.cols || self.p != other.p {
            return Err(Error::DimensionMismatch(
                "vstack of incompatible matrices".into(),
            ));
        }
        let mut m = MatGFp::zeros(self.rows + other.rows, self.cols, self.p)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c));
            }
        }
        for r in 0..other.rows {
            for c in 0..self.cols {
                m.set(self.rows + r, c, other.get(r, c));
            }
        }
        Ok(m)
    }

    /// `self * v^T` for a vector of length `cols`.
    pub fn mul_vec(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let s: u32 = (0..self.cols)
                    .map(|c| self.get(r, c) as u32 * v[c] as u32)
                    .sum();
                (s % self.p) as u8
            })
            .collect()
    }

    /// Same matrix with one-byte-per-entry storage, even when p = 2.
    #[cfg(test)]
    pub(crate) fn with_byte_storage(&self) -> MatGFp {
        let mut b = vec![0u8; self.rows * self.cols];
        for r in 0..self.rows {
            for c in 0..self.cols {
                b[r * self.cols + c] = self.get(r, c);
            }
        }
        MatGFp {
            rows: self.rows,
            cols: self.cols,
            p: self.p,
            storage: Storage::Bytes(b),
        }
    }

    /// Reduced row echelon form and its strictly increasing pivot columns.
    /// Zero rows end up at the bottom; the shape is unchanged.
    pub fn rref(&self) -> (MatGFp, Vec<usize>) {
        let mut m = self.clone();
        let pivots = match &mut m.storage {
            Storage::Bits { wpr, words } => rref_bits(words, self.rows, self.cols, *wpr),
            Storage::Bytes(b) => rref_bytes(b, self.rows, self.cols, self.p),
        };
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis (as rows) of `{ x : self * x^T = 0 }`.
    pub fn nullspace(&self) -> MatGFp {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut basis = MatGFp::zeros(free.len(), self.cols, self.p).unwrap();
        for (i, &f) in free.iter().enumerate() {
            basis.set(i, f, 1);
            for (row, &pc) in pivots.iter().enumerate() {
                let x = r.get(row, f) as u32;
                if x != 0 {
                    basis.set(i, pc, ((self.p - x) % self.p) as u8);
                }
            }
        }
        basis
    }

    /// The nonzero rows of the RREF, i.e. a reduced basis of the row space.
    pub fn row_basis(&self) -> (MatGFp, Vec<usize>) {
        let (r, pivots) = self.rref();
        let idx: Vec<usize> = (0..pivots.len()).collect();
        (r.select_rows(&idx), pivots)
    }
}

fn rref_bits(words: &mut [u64], rows: usize, cols: usize, wpr: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let (w, bit) = (c / 64, 1u64 << (c % 64));
        let Some(pr) = (rank..rows).find(|&r| words[r * wpr + w] & bit != 0) else {
            continue;
        };
        if pr != rank {
            for k in 0..wpr {
                words.swap(pr * wpr + k, rank * wpr + k);
            }
        }
        let (head, tail) = words.split_at_mut(rank * wpr);
        let (pivot, tail) = tail.split_at_mut(wpr);
        for r in 0..rank {
            let row = &mut head[r * wpr..(r + 1) * wpr];
            if row[w] & bit != 0 {
                for k in w..wpr {
                    row[k] ^= pivot[k];
                }
            }
        }
        for r in 0..rows - rank - 1 {
            let row = &mut tail[r * wpr..(r + 1) * wpr];
            if row[w] & bit != 0 {
                for k in w..wpr {
                    row[k] ^= pivot[k];
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    pivots
}

fn rref_bytes(b: &mut [u8], rows: usize, cols: usize, p: u32) -> Vec<usize> {
    let inv = inv_table(p);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&r| b[r * cols + c] != 0) else {
            continue;
        };
        if pr != rank {
            for k in 0..cols {
                b.swap(pr * cols + k, rank * cols + k);
            }
        }
        let s = inv[b[rank * cols + c] as usize] as u32;
        for k in c..cols {
            b[rank * cols + k] = (b[rank * cols + k] as u32 * s % p) as u8;
        }
        for r in 0..rows {
            if r == rank {
                continue;
            }
            let f = b[r * cols + c] as u32;
            if f == 0 {
                continue;
            }
            for k in c..cols {
                let sub = f * b[rank * cols + k] as u32 % p;
                b[r * cols + k] = ((b[r * cols + k] as u32 + p - sub) % p) as u8;
            }
        }
        pivots.push(c);
        rank += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{rngs::StdRng, Rng, SeedableRng};

    fn fano() -> MatGFp {
        let lines = [
            [0, 1, 2],
            [0, 3, 4],
            [0, 5, 6],
            [1, 3, 5],
            [1, 4, 6],
            [2, 3, 6],
            [2, 4, 5],
        ];
        let mut m = MatGFp::zeros(7, 7, 2).unwrap();
        for (j, l) in lines.iter().enumerate() {
            for &x in l {
                m.set(x, j, 1);
            }
        }
        m
    }

    fn random(rows: usize, cols: usize, p: u32, rng: &mut StdRng) -> MatGFp {
        let mut m = MatGFp::zeros(rows, cols, p).unwrap();
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, rng.gen_range(0..p) as u8);
            }
        }
        m
    }

    #[test]
    fn fano_rank() {
        assert_eq!(fano().rank(), 4);
        let (r, piv) = fano().rref();
        assert_eq!(piv.len(), 4);
        assert!((0..7).filter(|&i| !r.row_is_zero(i)).count() == 4);
    }

    #[test]
    fn zero_and_empty() {
        for p in [2, 3, 5] {
            assert_eq!(MatGFp::zeros(4, 9, p).unwrap().rank(), 0);
        }
        assert_eq!(MatGFp::empty(2).unwrap().rank(), 0);
        assert_eq!(MatGFp::zeros(3, 0, 3).unwrap().rank(), 0);
    }

    #[test]
    fn modulus_guards() {
        assert_eq!(
            MatGFp::zeros(1, 1, 4).unwrap_err(),
            Error::NonPrimeModulus(4)
        );
        assert_eq!(
            MatGFp::zeros(1, 1, 257).unwrap_err(),
            Error::ModulusTooLarge(257)
        );
    }

    #[test]
    fn identity_rref() {
        let id = MatGFp::identity(5, 3).unwrap();
        let (r, piv) = id.rref();
        assert_eq!(r, id);
        assert_eq!(piv, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn duplicated_rows_same_rref() {
        let f = fano();
        let doubled = f.vstack(&f).unwrap();
        let (a, pa) = f.row_basis();
        let (b, pb) = doubled.row_basis();
        assert_eq!(a, b);
        assert_eq!(pa, pb);
    }

    #[test]
    fn nullspace_small() {
        let m = MatGFp::from_rows(2, 2, &[vec![1, 1]]).unwrap();
        let n = m.nullspace();
        assert_eq!(n.rows(), 1);
        assert_eq!(n.row(0), vec![1, 1]);
        assert_eq!(MatGFp::identity(4, 2).unwrap().nullspace().rows(), 0);
    }

    #[test]
    fn rank_nullity_and_kernel() {
        let mut rng = StdRng::seed_from_u64(7);
        for p in [2u32, 3, 5, 7] {
            for _ in 0..20 {
                let rows = rng.gen_range(1..20);
                let cols = rng.gen_range(1..90);
                let m = random(rows, cols, p, &mut rng);
                let n = m.nullspace();
                assert_eq!(m.rank() + n.rows(), cols);
                for i in 0..n.rows() {
                    assert!(m.mul_vec(&n.row(i)).iter().all(|&x| x == 0));
                }
            }
        }
    }

    #[test]
    fn rank_transpose_and_permutation() {
        let mut rng = StdRng::seed_from_u64(11);
        for p in [2u32, 3] {
            for _ in 0..20 {
                let m = random(rng.gen_range(1..30), rng.gen_range(1..70), p, &mut rng);
                let rk = m.rank();
                assert_eq!(m.transpose().rank(), rk);
                let mut rows: Vec<usize> = (0..m.rows()).collect();
                let mut cols: Vec<usize> = (0..m.cols()).collect();
                for i in (1..rows.len()).rev() {
                    rows.swap(i, rng.gen_range(0..=i));
                }
                for i in (1..cols.len()).rev() {
                    cols.swap(i, rng.gen_range(0..=i));
                }
                assert_eq!(m.select_rows(&rows).select_columns(&cols).rank(), rk);
            }
        }
    }

    #[test]
    fn packed_path_agrees_with_generic() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..50 {
            let m = random(rng.gen_range(1..=64), rng.gen_range(1..=96), 2, &mut rng);
            let g = m.with_byte_storage();
            assert!(m.is_packed() && !g.is_packed());
            let (rm, pm) = m.rref();
            let (rg, pg) = g.rref();
            assert_eq!(pm, pg);
            assert_eq!(rm.with_byte_storage(), rg);
        }
    }
}
