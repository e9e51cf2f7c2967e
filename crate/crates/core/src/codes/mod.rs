//! Linear codes over GF(p) spanned by incidence vectors, with exhaustive
//! enumeration, classical bounds, Reed–Muller and bent-function codes.

mod bounds;
mod enumerate;
mod rm;
mod weights;

pub use bounds::{johnson_restricted, rudolph_bound};
pub use enumerate::Word;
pub use rm::{inner_product_bent, is_bent, punctured_rm_code, rm_code, sdp_code};
pub use weights::{codeword_hex, WeightDistribution};

use std::sync::OnceLock;

use enumerate::Walker;

use crate::algebra::MatGFp;
use crate::designs::IncidenceStructure;
use crate::error::{Error, Result};

/// Default limit on the number of codewords an enumeration may visit.
pub const DEFAULT_CAP: u64 = 1 << 28;

/// The enumeration cap, read once from `EMBEDRANK_CAP` if set.
pub fn default_cap() -> u64 {
    static CAP: OnceLock<u64> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("EMBEDRANK_CAP")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_CAP)
    })
}

/// The row space of a generator matrix, with its reduced basis cached.
#[derive(Clone, Debug)]
pub struct LinearCode {
    generators: MatGFp,
    basis: MatGFp,
    pivots: Vec<usize>,
    cap: u64,
}

/// Outcome of comparing the residual code dimension with the Hill–Newton guarantee.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HillNewton {
    /// `wt(y)` equals the minimum weight, so the dimension drops by exactly one.
    pub guaranteed: bool,
    /// `dim C - dim Res(C, y)` as computed.
    pub drop: usize,
    pub min_weight: usize,
    pub weight: usize,
}

impl LinearCode {
    pub fn from_rows(m: &MatGFp) -> Self {
        let (basis, pivots) = m.row_basis();
        LinearCode {
            generators: m.clone(),
            basis,
            pivots,
            cap: default_cap(),
        }
    }

    /// Column space of `m`.
    pub fn from_cols(m: &MatGFp) -> Self {
        Self::from_rows(&m.transpose())
    }

    /// Code spanned by the rows of `vectors`, each of length `n`.
    pub fn from_vectors(p: u32, n: usize, vectors: &[Vec<u8>]) -> Result<Self> {
        Ok(Self::from_rows(&MatGFp::from_rows(p, n, vectors)?))
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    pub fn length(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn p(&self) -> u32 {
        self.basis.p()
    }

    pub fn generators(&self) -> &MatGFp {
        &self.generators
    }

    /// Reduced row echelon basis.
    pub fn basis(&self) -> &MatGFp {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `p^dim`.
    pub fn size(&self) -> u128 {
        (self.p() as u128)
            .checked_pow(self.dim() as u32)
            .unwrap_or(u128::MAX)
    }

    fn walker(&self) -> Result<Walker> {
        let size = self.size();
        if size > self.cap as u128 {
            return Err(Error::TooLarge {
                size,
                cap: self.cap,
            });
        }
        Ok(Walker::new(&self.basis))
    }

    pub fn contains(&self, y: &[u8]) -> Result<bool> {
        if y.len() != self.length() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for code of length {}",
                y.len(),
                self.length()
            )));
        }
        let p = self.p();
        let mut r: Vec<u32> = y.iter().map(|&x| x as u32 % p).collect();
        for (i, &c) in self.pivots.iter().enumerate() {
            let a = r[c];
            if a == 0 {
                continue;
            }
            for (k, x) in r.iter_mut().enumerate() {
                let b = self.basis.get(i, k) as u32;
                if b != 0 {
                    *x = (*x + (p - a) * b) % p;
                }
            }
        }
        Ok(r.iter().all(|&x| x == 0))
    }

    /// Span of this code and the extra vectors.
    pub fn extend(&self, extra: &[Vec<u8>]) -> Result<LinearCode> {
        let more = MatGFp::from_rows(self.p(), self.length(), extra)?;
        Ok(LinearCode::from_rows(&self.basis.vstack(&more)?).with_cap(self.cap))
    }

    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        let w = self.walker()?;
        let n = self.length();
        let parts = w.par_chunks(|| vec![0u64; n + 1], |acc, x| acc[x.weight()] += 1);
        let mut counts = vec![0u64; n + 1];
        for part in parts {
            for (c, x) in counts.iter_mut().zip(part) {
                *c += x;
            }
        }
        Ok(WeightDistribution::from_counts(counts))
    }

    /// Minimum nonzero weight; absent for the zero code.
    pub fn min_weight(&self) -> Result<Option<usize>> {
        Ok(self.weight_distribution()?.min_weight())
    }

    /// Codewords accepted by `keep`, in enumeration order.
    pub fn find_codewords(&self, keep: impl Fn(Word) -> bool + Sync) -> Result<Vec<Vec<u8>>> {
        let w = self.walker()?;
        let n = self.length();
        let parts = w.par_chunks(Vec::new, |acc: &mut Vec<Vec<u8>>, x| {
            if keep(x) {
                acc.push(x.to_vec(n));
            }
        });
        Ok(parts.into_iter().flatten().collect())
    }

    pub fn codewords_of_weight(&self, weight: usize) -> Result<Vec<Vec<u8>>> {
        self.find_codewords(|x| x.weight() == weight)
    }

    /// The code punctured on the support of the codeword `y`.
    pub fn residual_code(&self, y: &[u8]) -> Result<LinearCode> {
        if !self.contains(y)? {
            return Err(Error::NotACodeword);
        }
        let keep: Vec<usize> = (0..self.length()).filter(|&i| y[i] == 0).collect();
        Ok(LinearCode::from_rows(&self.basis.select_columns(&keep)).with_cap(self.cap))
    }

    /// Compares the dimension drop of `Res(C, y)` with the Hill–Newton condition.
    pub fn hill_newton(&self, y: &[u8]) -> Result<HillNewton> {
        let res = self.residual_code(y)?;
        let weight = y.iter().filter(|&&x| x != 0).count();
        if weight == 0 {
            return Err(Error::WrongParameters("y must be nonzero".into()));
        }
        let min_weight = self.min_weight()?.unwrap_or(0);
        Ok(HillNewton {
            guaranteed: weight == min_weight,
            drop: self.dim() - res.dim(),
            min_weight,
            weight,
        })
    }

    /// Supports of the minimum-weight codewords as blocks, each support once,
    /// in order of first appearance.
    pub fn min_weight_design(&self) -> Result<IncidenceStructure> {
        let d = self
            .min_weight()?
            .ok_or_else(|| Error::WrongParameters("zero code".into()))?;
        let mut seen = std::collections::HashSet::new();
        let blocks: Vec<Vec<usize>> = self
            .codewords_of_weight(d)?
            .into_iter()
            .map(|c| (0..c.len()).filter(|&i| c[i] != 0).collect::<Vec<_>>())
            .filter(|s| seen.insert(s.clone()))
            .collect();
        IncidenceStructure::new(self.length(), blocks)
    }
}
