use rayon::prelude::*;

use super::{IncidenceStructure, Resolution};
use crate::bits::BitSet;
use crate::error::{Error, Result};

/// Result of a successful affine-resolvability test.
#[derive(Clone, Debug)]
pub struct AffineResolution {
    /// Blocks per parallel class.
    pub q: usize,
    /// Size of the intersection of two non-parallel blocks.
    pub mu: usize,
    pub resolution: Resolution,
}

impl IncidenceStructure {
    /// Bose's criterion: a 2-design with `b = v + r - 1`, integral `μ = k²/v`,
    /// and every two blocks meeting in 0 or μ points. The unique resolution is
    /// recovered by grouping blocks into disjointness classes.
    pub fn is_affine_resolvable(&self) -> Option<AffineResolution> {
        let params = self.verify_tdesign(2)?;
        let (v, k) = (params.v, params.k);
        if k == 0 || k >= v || v % k != 0 {
            return None;
        }
        if params.b != v as u64 + params.r - 1 || (k * k) % v != 0 {
            return None;
        }
        let mu = k * k / v;
        let q = v / k;
        let sets = self.block_sets();
        let n = sets.len();
        let mut class = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            if class[i] != usize::MAX {
                continue;
            }
            let mut c = vec![i];
            for j in i + 1..n {
                let m = sets[i].intersection_count(&sets[j]);
                if m == 0 {
                    if class[j] != usize::MAX {
                        return None;
                    }
                    c.push(j);
                } else if m != mu {
                    return None;
                }
            }
            for &j in &c {
                class[j] = classes.len();
            }
            classes.push(c);
        }
        // Remaining pairs must still meet in 0 or μ points.
        for i in 0..n {
            for j in i + 1..n {
                let m = sets[i].intersection_count(&sets[j]);
                if (m == 0) != (class[i] == class[j]) || (m != 0 && m != mu) {
                    return None;
                }
            }
        }
        if classes.iter().any(|c| c.len() != q) {
            return None;
        }
        let resolution = Resolution::new(self, classes).ok()?;
        Some(AffineResolution { q, mu, resolution })
    }

    fn class_precondition(&self) -> Result<usize> {
        let k = self
            .uniform_block_size()
            .ok_or(Error::NonUniformBlockSize)?;
        if k == 0 || !self.v().is_multiple_of(k) {
            return Err(Error::WrongParameters(format!(
                "block size {k} does not divide v = {}",
                self.v()
            )));
        }
        Ok(self.v() / k)
    }

    /// All sets of `v/k` pairwise disjoint blocks, as sorted index lists in
    /// lexicographic order.
    pub fn parallel_classes(&self) -> Result<Vec<Vec<usize>>> {
        let size = self.class_precondition()?;
        let sets = self.block_sets();
        let n = sets.len();
        // disjoint[i] = blocks j > i disjoint from i
        let disjoint: Vec<BitSet> = (0..n)
            .map(|i| {
                let mut s = BitSet::new(n);
                for j in i + 1..n {
                    if sets[i].is_disjoint(&sets[j]) {
                        s.insert(j);
                    }
                }
                s
            })
            .collect();
        let per_root: Vec<Vec<Vec<usize>>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut out = Vec::new();
                let mut stack = vec![i];
                extend_clique(&disjoint, disjoint[i].clone(), size, &mut stack, &mut out);
                out
            })
            .collect();
        Ok(per_root.into_iter().flatten().collect())
    }

    /// All resolutions, found by exact cover over the parallel classes,
    /// branching on the lowest uncovered block. Fails with `CapExceeded` when
    /// more than `limit` exist.
    pub fn resolutions(&self, limit: Option<usize>) -> Result<Vec<Resolution>> {
        let classes = self.parallel_classes()?;
        let n = self.b();
        let class_sets: Vec<BitSet> = classes.iter().map(|c| BitSet::from_indices(n, c)).collect();
        let mut by_block: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (ci, c) in classes.iter().enumerate() {
            for &j in c {
                by_block[j].push(ci);
            }
        }
        if n == 0 {
            return Ok(Vec::new());
        }
        let cap = limit.unwrap_or(usize::MAX);
        let branches: Vec<Result<Vec<Vec<usize>>>> = by_block[0]
            .par_iter()
            .map(|&ci| {
                let mut out = Vec::new();
                let mut chosen = vec![ci];
                let covered = class_sets[ci].clone();
                cover(&by_block, &class_sets, covered, &mut chosen, &mut out, cap)?;
                Ok(out)
            })
            .collect();
        let mut all = Vec::new();
        for b in branches {
            all.extend(b?);
            if all.len() > cap {
                return Err(Error::CapExceeded(cap));
            }
        }
        all.into_iter()
            .map(|sel| Resolution::new(self, sel.iter().map(|&ci| classes[ci].clone()).collect()))
            .collect()
    }
}

fn extend_clique(
    disjoint: &[BitSet],
    cand: BitSet,
    size: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if stack.len() == size {
        out.push(stack.clone());
        return;
    }
    for j in cand.iter() {
        let mut next = cand.clone();
        next.intersect_with(&disjoint[j]);
        if next.count() + stack.len() + 1 < size {
            continue;
        }
        stack.push(j);
        extend_clique(disjoint, next, size, stack, out);
        stack.pop();
    }
}

fn cover(
    by_block: &[Vec<usize>],
    class_sets: &[BitSet],
    covered: BitSet,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) -> Result<()> {
    let n = by_block.len();
    let Some(first) = (0..n).find(|&j| !covered.contains(j)) else {
        out.push(chosen.clone());
        if out.len() > cap {
            return Err(Error::CapExceeded(cap));
        }
        return Ok(());
    };
    for &ci in &by_block[first] {
        if !class_sets[ci].is_disjoint(&covered) {
            continue;
        }
        let mut next = covered.clone();
        next.union_with(&class_sets[ci]);
        chosen.push(ci);
        cover(by_block, class_sets, next, chosen, out, cap)?;
        chosen.pop();
    }
    Ok(())
}
