//! Incidence structures and the derivations built on them: t-design checks,
//! residual and derived structures, parallel classes, resolutions, and the
//! good/normal block tests.

mod derive;
mod format;
mod resolve;
mod special;

pub use derive::{Restriction, Side};
pub use resolve::AffineResolution;
pub use special::{GoodBlock, NormalBlock};

use std::collections::{BTreeMap, HashSet};

use crate::algebra::MatGFp;
use crate::bits::{binomial, BitSet};
use crate::error::{Error, Result};

/// Points `0..v` and an ordered list of blocks (a multiset of point sets).
///
/// Each block is kept sorted. Block order is significant and survives
/// serialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceStructure {
    v: usize,
    blocks: Vec<Vec<usize>>,
    name: Option<String>,
}

/// Parameters of a verified t-(v,k,λ) design.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesignParams {
    pub t: usize,
    pub v: usize,
    pub k: usize,
    pub lambda: u64,
    pub r: u64,
    pub b: u64,
    /// `lambdas[s]` is λ_s for `0 <= s <= t`.
    pub lambdas: Vec<u64>,
    /// `b == v`.
    pub symmetric: bool,
    /// Fisher's inequality `b >= v`, recorded when `t >= 2` and `v > k > 0`.
    pub fisher: Option<bool>,
}

/// A partition of block indices into parallel classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Resolution {
    classes: Vec<Vec<usize>>,
    class_size: usize,
}

impl IncidenceStructure {
    /// Validates that every point is below `v` and no block repeats a point.
    pub fn new(v: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut out = Vec::with_capacity(blocks.len());
        for (j, mut b) in blocks.into_iter().enumerate() {
            b.sort_unstable();
            if b.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::WrongParameters(format!("block {j} repeats a point")));
            }
            if let Some(&x) = b.last() {
                if x >= v {
                    return Err(Error::BadIndex { index: x, limit: v });
                }
            }
            out.push(b);
        }
        Ok(IncidenceStructure {
            v,
            blocks: out,
            name: None,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, j: usize) -> Result<&[usize]> {
        self.blocks
            .get(j)
            .map(|b| b.as_slice())
            .ok_or(Error::BadIndex {
                index: j,
                limit: self.blocks.len(),
            })
    }

    pub(crate) fn check_block(&self, j: usize) -> Result<()> {
        self.block(j).map(|_| ())
    }

    /// Common block size, if all blocks have the same size.
    pub fn uniform_block_size(&self) -> Option<usize> {
        let k = self.blocks.first()?.len();
        self.blocks.iter().all(|b| b.len() == k).then_some(k)
    }

    pub fn block_sizes(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for b in &self.blocks {
            *m.entry(b.len()).or_insert(0) += 1;
        }
        m
    }

    pub fn replication(&self) -> Vec<usize> {
        let mut r = vec![0; self.v];
        for b in &self.blocks {
            for &x in b {
                r[x] += 1;
            }
        }
        r
    }

    /// Point-by-block incidence matrix over GF(p).
    pub fn incidence_matrix(&self, p: u32) -> Result<MatGFp> {
        let mut m = MatGFp::zeros(self.v, self.blocks.len(), p)?;
        for (j, b) in self.blocks.iter().enumerate() {
            for &x in b {
                m.set(x, j, 1);
            }
        }
        Ok(m)
    }

    /// Block-by-point incidence matrix (the transpose) over GF(p).
    pub fn block_matrix(&self, p: u32) -> Result<MatGFp> {
        let mut m = MatGFp::zeros(self.blocks.len(), self.v, p)?;
        for (j, b) in self.blocks.iter().enumerate() {
            for &x in b {
                m.set(j, x, 1);
            }
        }
        Ok(m)
    }

    pub fn block_sets(&self) -> Vec<BitSet> {
        self.blocks
            .iter()
            .map(|b| BitSet::from_indices(self.v, b))
            .collect()
    }

    /// Checks whether the structure is a t-design; returns its parameters.
    pub fn verify_tdesign(&self, t: usize) -> Option<DesignParams> {
        let k = self.uniform_block_size()?;
        if t > k || self.v == 0 {
            return None;
        }
        let total = binomial(self.v as u64, t as u64);
        let lambda = if t == 0 {
            self.blocks.len() as u64
        } else if total <= 1 << 26 {
            let mut counts = vec![0u32; total as usize];
            for b in &self.blocks {
                for_each_subset(b, t, |s| counts[colex_rank(s)] += 1);
            }
            let l = counts[0];
            if counts.iter().any(|&c| c != l) {
                return None;
            }
            l as u64
        } else {
            let mut counts = std::collections::HashMap::new();
            for b in &self.blocks {
                for_each_subset(b, t, |s| *counts.entry(s.to_vec()).or_insert(0u64) += 1);
            }
            if counts.is_empty() {
                0
            } else {
                let l = *counts.values().next().unwrap();
                if counts.len() as u128 != total || counts.values().any(|&c| c != l) {
                    return None;
                }
                l
            }
        };
        let (v, kk) = (self.v as u64, k as u64);
        let mut lambdas = Vec::with_capacity(t + 1);
        for s in 0..=t as u64 {
            let num = lambda as u128 * binomial(v - s, t as u64 - s);
            let den = binomial(kk - s, t as u64 - s);
            if den == 0 || !num.is_multiple_of(den) {
                return None;
            }
            lambdas.push((num / den) as u64);
        }
        let b = lambdas[0];
        if b != self.blocks.len() as u64 {
            return None;
        }
        let r = if t >= 1 {
            lambdas[1]
        } else {
            self.replication().first().copied().unwrap_or(0) as u64
        };
        let fisher = (t >= 2 && self.v > k && k > 0).then_some(b >= v);
        Some(DesignParams {
            t,
            v: self.v,
            k,
            lambda,
            r,
            b,
            lambdas,
            symmetric: b == v,
            fisher,
        })
    }

    /// Multiset of intersection sizes over unordered block pairs.
    pub fn intersection_profile(&self) -> BTreeMap<usize, usize> {
        let sets = self.block_sets();
        let mut m = BTreeMap::new();
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                *m.entry(sets[i].intersection_count(&sets[j])).or_insert(0) += 1;
            }
        }
        m
    }

    /// No repeated blocks and no two points on exactly the same blocks.
    pub fn is_simple(&self) -> bool {
        let mut seen = HashSet::new();
        if !self.blocks.iter().all(|b| seen.insert(b.clone())) {
            return false;
        }
        let mut rows = vec![Vec::new(); self.v];
        for (j, b) in self.blocks.iter().enumerate() {
            for &x in b {
                rows[x].push(j);
            }
        }
        let mut seen = HashSet::new();
        rows.into_iter().all(|r| seen.insert(r))
    }

    /// Structure on the same points keeping only blocks `keep` (in that order).
    pub fn sub_structure(&self, keep: &[usize]) -> Result<IncidenceStructure> {
        let blocks = keep
            .iter()
            .map(|&j| self.block(j).map(|b| b.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Ok(IncidenceStructure {
            v: self.v,
            blocks,
            name: None,
        })
    }

    /// Distinct blocks with their multiplicities, in order of first appearance.
    pub fn distinct_blocks(&self) -> Vec<(Vec<usize>, usize)> {
        let mut index: std::collections::HashMap<Vec<usize>, usize> =
            std::collections::HashMap::new();
        let mut out: Vec<(Vec<usize>, usize)> = Vec::new();
        for b in &self.blocks {
            match index.get(b).copied() {
                Some(i) => out[i].1 += 1,
                None => {
                    index.insert(b.clone(), out.len());
                    out.push((b.clone(), 1));
                }
            }
        }
        out
    }

    /// Applies a point relabeling (`perm[old] = new`) and keeps block order.
    pub fn relabel_points(&self, perm: &[usize]) -> Result<IncidenceStructure> {
        if perm.len() != self.v {
            return Err(Error::DimensionMismatch("permutation length".into()));
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| perm[x]).collect())
            .collect();
        IncidenceStructure::new(self.v, blocks)
    }

    /// Reorders blocks: block `j` of the result is block `order[j]` of `self`.
    pub fn reorder_blocks(&self, order: &[usize]) -> Result<IncidenceStructure> {
        self.sub_structure(order)
    }
}

fn for_each_subset(b: &[usize], t: usize, mut f: impl FnMut(&[usize])) {
    let n = b.len();
    if t > n {
        return;
    }
    let mut idx: Vec<usize> = (0..t).collect();
    let mut cur = vec![0; t];
    loop {
        for (c, &i) in cur.iter_mut().zip(&idx) {
            *c = b[i];
        }
        f(&cur);
        let mut i = t;
        while i > 0 && idx[i - 1] == n - t + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..t {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn colex_rank(sorted: &[usize]) -> usize {
    sorted
        .iter()
        .enumerate()
        .map(|(i, &x)| binomial(x as u64, i as u64 + 1) as usize)
        .sum()
}

impl Resolution {
    /// Checks the resolution invariants against `d`: classes partition the
    /// block indices, and each class partitions the points.
    pub fn new(d: &IncidenceStructure, classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; d.b()];
        let class_size = classes.first().map_or(0, |c| c.len());
        for class in &classes {
            if class.len() != class_size {
                return Err(Error::WrongParameters("classes of unequal size".into()));
            }
            let mut cover = vec![false; d.v()];
            for &j in class {
                let b = d.block(j)?;
                if std::mem::replace(&mut seen[j], true) {
                    return Err(Error::WrongParameters(format!("block {j} in two classes")));
                }
                for &x in b {
                    if std::mem::replace(&mut cover[x], true) {
                        return Err(Error::WrongParameters("class blocks overlap".into()));
                    }
                }
            }
            if cover.iter().any(|&c| !c) {
                return Err(Error::WrongParameters(
                    "class does not cover the points".into(),
                ));
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::WrongParameters("resolution misses a block".into()));
        }
        let classes = classes
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        Ok(Resolution {
            classes,
            class_size,
        })
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_size(&self) -> usize {
        self.class_size
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Classes sorted by their least block; equal resolutions have equal normal forms.
    pub fn normalized(&self) -> Vec<Vec<usize>> {
        let mut c = self.classes.clone();
        c.sort();
        c
    }

    /// `class_of[j]` = index of the class containing block `j`.
    pub fn class_of(&self) -> Vec<usize> {
        let n = self.classes.iter().map(|c| c.len()).sum();
        let mut out = vec![0; n];
        for (i, c) in self.classes.iter().enumerate() {
            for &j in c {
                out[j] = i;
            }
        }
        out
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub fn fano() -> IncidenceStructure {
        IncidenceStructure::new(
            7,
            vec![
                vec![0, 1, 2],
                vec![0, 3, 4],
                vec![0, 5, 6],
                vec![1, 3, 5],
                vec![1, 4, 6],
                vec![2, 3, 6],
                vec![2, 4, 5],
            ],
        )
        .unwrap()
    }

    pub fn k4_edges() -> IncidenceStructure {
        IncidenceStructure::new(
            4,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3],
            ],
        )
        .unwrap()
    }

    #[test]
    fn fano_is_symmetric_2_7_3_1() {
        let p = fano().verify_tdesign(2).unwrap();
        assert_eq!((p.v, p.k, p.lambda, p.r, p.b), (7, 3, 1, 3, 7));
        assert!(p.symmetric);
        assert_eq!(p.fisher, Some(true));
        // exhaustive pair count
        for x in 0..7 {
            for y in x + 1..7 {
                let c = fano()
                    .blocks()
                    .iter()
                    .filter(|b| b.contains(&x) && b.contains(&y))
                    .count();
                assert_eq!(c, 1);
            }
        }
        assert!(fano().verify_tdesign(3).is_none());
    }

    #[test]
    fn lambda_s_consistency() {
        let d = fano();
        let p2 = d.verify_tdesign(2).unwrap();
        for s in 0..=2 {
            let ps = d.verify_tdesign(s).unwrap();
            assert_eq!(ps.lambda, p2.lambdas[s]);
        }
    }

    #[test]
    fn rejects_bad_blocks() {
        assert!(IncidenceStructure::new(3, vec![vec![0, 3]]).is_err());
        assert!(IncidenceStructure::new(3, vec![vec![1, 1]]).is_err());
        let mixed = IncidenceStructure::new(4, vec![vec![0, 1], vec![2]]).unwrap();
        assert!(mixed.verify_tdesign(1).is_none());
    }

    #[test]
    fn profiles() {
        let p = fano().intersection_profile();
        assert_eq!(p.into_iter().collect::<Vec<_>>(), vec![(1, 21)]);
        let single = IncidenceStructure::new(3, vec![vec![0, 1]]).unwrap();
        assert!(single.intersection_profile().is_empty());
    }

    #[test]
    fn simplicity() {
        assert!(fano().is_simple());
        let rep = IncidenceStructure::new(3, vec![vec![0, 1], vec![0, 1], vec![2]]).unwrap();
        assert!(!rep.is_simple());
        // points 0 and 1 lie on the same blocks
        let twins = IncidenceStructure::new(3, vec![vec![0, 1], vec![2]]).unwrap();
        assert!(!twins.is_simple());
    }

    #[test]
    fn resolution_invariants_checked() {
        let d = k4_edges();
        assert!(Resolution::new(&d, vec![vec![0, 5], vec![1, 4], vec![2, 3]]).is_ok());
        assert!(Resolution::new(&d, vec![vec![0, 1], vec![2, 3], vec![4, 5]]).is_err());
        assert!(Resolution::new(&d, vec![vec![0, 5], vec![1, 4]]).is_err());
    }
}
