//! Gray-code enumeration of all codewords of a linear code.
//!
//! Codeword number `i` (for `0 <= i < p^k`) has coefficient vector
//! `c_j = (d_j - d_{j+1}) mod p`, where `d` are the base-p digits of `i`.
//! Moving from `i - 1` to `i` adds basis row `j` once, with `j` the number of
//! trailing zero digits of `i`, so each step costs one row addition and any
//! index range can be walked independently.

use rayon::prelude::*;

use crate::algebra::MatGFp;

/// A borrowed codeword: packed bits for p = 2, one byte per coordinate otherwise.
#[derive(Clone, Copy, Debug)]
pub enum Word<'a> {
    Bits(&'a [u64]),
    Bytes(&'a [u8]),
}

impl Word<'_> {
    pub fn weight(&self) -> usize {
        match self {
            Word::Bits(w) => w.iter().map(|x| x.count_ones() as usize).sum(),
            Word::Bytes(b) => b.iter().filter(|&&x| x != 0).count(),
        }
    }

    pub fn get(&self, i: usize) -> u8 {
        match self {
            Word::Bits(w) => (w[i / 64] >> (i % 64) & 1) as u8,
            Word::Bytes(b) => b[i],
        }
    }

    pub fn to_vec(&self, len: usize) -> Vec<u8> {
        (0..len).map(|i| self.get(i)).collect()
    }
}

pub(crate) struct Walker {
    p: u32,
    dim: usize,
    len: usize,
    wpr: usize,
    /// Packed rows for p = 2, byte rows otherwise.
    bits: Vec<u64>,
    bytes: Vec<u8>,
}

impl Walker {
    pub(crate) fn new(basis: &MatGFp) -> Self {
        let (dim, len, p) = (basis.rows(), basis.cols(), basis.p());
        let mut w = Walker {
            p,
            dim,
            len,
            wpr: 0,
            bits: Vec::new(),
            bytes: Vec::new(),
        };
        if basis.is_packed() {
            w.wpr = basis.words_per_row();
            for r in 0..dim {
                w.bits.extend_from_slice(basis.row_words(r));
            }
        } else {
            for r in 0..dim {
                w.bytes.extend(basis.row(r));
            }
        }
        w
    }

    pub(crate) fn total(&self) -> u128 {
        (self.p as u128).pow(self.dim as u32)
    }

    fn digits(&self, mut i: u64) -> Vec<u32> {
        let mut d = vec![0u32; self.dim + 1];
        for x in d.iter_mut().take(self.dim) {
            *x = (i % self.p as u64) as u32;
            i /= self.p as u64;
        }
        d
    }

    fn trailing(&self, mut i: u64) -> usize {
        let mut j = 0;
        while i.is_multiple_of(self.p as u64) {
            i /= self.p as u64;
            j += 1;
        }
        j
    }

    /// Visits codewords `start..end` in index order.
    pub(crate) fn walk(&self, start: u64, end: u64, f: &mut impl FnMut(Word)) {
        if start >= end {
            return;
        }
        let d = self.digits(start);
        let coeff: Vec<u32> = (0..self.dim)
            .map(|j| (d[j] + self.p - d[j + 1]) % self.p)
            .collect();
        if self.p == 2 {
            let mut state = vec![0u64; self.wpr];
            for (j, &c) in coeff.iter().enumerate() {
                if c == 1 {
                    for (s, r) in state
                        .iter_mut()
                        .zip(&self.bits[j * self.wpr..(j + 1) * self.wpr])
                    {
                        *s ^= r;
                    }
                }
            }
            for i in start..end {
                f(Word::Bits(&state));
                if i + 1 < end {
                    let j = self.trailing(i + 1);
                    for (s, r) in state
                        .iter_mut()
                        .zip(&self.bits[j * self.wpr..(j + 1) * self.wpr])
                    {
                        *s ^= r;
                    }
                }
            }
        } else {
            let p = self.p as u16;
            let mut state = vec![0u8; self.len];
            for (j, &c) in coeff.iter().enumerate() {
                let row = &self.bytes[j * self.len..(j + 1) * self.len];
                for (s, &r) in state.iter_mut().zip(row) {
                    *s = ((*s as u16 + c as u16 * r as u16) % p) as u8;
                }
            }
            for i in start..end {
                f(Word::Bytes(&state));
                if i + 1 < end {
                    let j = self.trailing(i + 1);
                    let row = &self.bytes[j * self.len..(j + 1) * self.len];
                    for (s, &r) in state.iter_mut().zip(row) {
                        *s = ((*s as u16 + r as u16) % p) as u8;
                    }
                }
            }
        }
    }

    /// Splits `0..total` into contiguous chunks, folds each in parallel and
    /// returns the per-chunk results in index order.
    pub(crate) fn par_chunks<T: Send>(
        &self,
        init: impl Fn() -> T + Sync,
        step: impl Fn(&mut T, Word) + Sync,
    ) -> Vec<T> {
        let total = self.total() as u64;
        let chunk = (total / 512).max(1 << 12);
        let n = total.div_ceil(chunk);
        (0..n)
            .into_par_iter()
            .map(|c| {
                let mut acc = init();
                let (s, e) = (c * chunk, ((c + 1) * chunk).min(total));
                self.walk(s, e, &mut |w| step(&mut acc, w));
                acc
            })
            .collect()
    }
}
