use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Number of codewords of each weight `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub(crate) fn from_counts(counts: Vec<u64>) -> Self {
        WeightDistribution { counts }
    }

    /// Code length `n`.
    pub fn length(&self) -> usize {
        self.counts.len() - 1
    }

    /// `A_w`, zero beyond the length.
    pub fn get(&self, w: usize) -> u64 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    /// Smallest nonzero weight that occurs.
    pub fn min_weight(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&w| self.counts[w] > 0)
    }

    /// `(weight, count)` for every weight that occurs, ascending.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(w, &c)| (w, c))
    }

    pub fn to_map(&self) -> BTreeMap<usize, u64> {
        self.nonzero().collect()
    }

    /// `weight,count` lines with a header, ascending, nonzero weights only.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("weight,count\n");
        for (w, c) in self.nonzero() {
            writeln!(s, "{w},{c}").unwrap();
        }
        s
    }
}

/// Hex form of a codeword. Binary words pack four coordinates per digit,
/// first coordinate in the high bit, zero-padded at the end; other fields use
/// two digits per coordinate.
pub fn codeword_hex(word: &[u8], p: u32) -> String {
    if p == 2 {
        word.chunks(4)
            .map(|c| {
                let nib = c
                    .iter()
                    .enumerate()
                    .fold(0u8, |acc, (i, &b)| acc | (b & 1) << (3 - i));
                char::from_digit(nib as u32, 16).unwrap()
            })
            .collect()
    } else {
        hex::encode(word)
    }
}
