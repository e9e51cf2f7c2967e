use std::collections::HashMap;

use super::{IncidenceStructure, Resolution, Side};
use crate::error::{Error, Result};

/// The data attached to a good block `B` of an affine resolvable design.
#[derive(Clone, Debug)]
pub struct GoodBlock {
    /// Distinct representatives of the nonempty intersections with `B`, on the points of `B`.
    pub s: IncidenceStructure,
    /// Residual blocks of size `q^{n-1} - q^{n-2}`, on the points outside `B`.
    pub dprime: IncidenceStructure,
    /// Resolution of `dprime`; class `i` is labeled by block `i` of `s`.
    pub resolution: Resolution,
    /// Original block index of each block of `dprime`.
    pub dprime_blocks: Vec<usize>,
    /// Original indices of the `q - 1` blocks parallel to `B`.
    pub parallel_blocks: Vec<usize>,
    /// Original point index of each point of `dprime`.
    pub residual_points: Vec<usize>,
}

/// The symmetric design underlying a normal block.
#[derive(Clone, Debug)]
pub struct NormalBlock {
    pub d0: IncidenceStructure,
    /// Set when `d0` has blocks of size one or `λ = 0`, where the symmetric
    /// design condition holds only in a trivial sense.
    pub degenerate: bool,
}

/// `Some(n)` with `q^n == v`.
fn log_exact(v: usize, q: usize) -> Option<u32> {
    if q < 2 {
        return None;
    }
    let (mut x, mut n) = (1usize, 0u32);
    while x < v {
        x = x.checked_mul(q)?;
        n += 1;
    }
    (x == v).then_some(n)
}

type Blocks = Vec<Vec<usize>>;

/// Splits a multiset of blocks into distinct blocks (first-appearance order)
/// and returns `None` unless every distinct block occurs exactly `q` times.
fn uniform_copies(blocks: &[Vec<usize>], q: usize) -> Option<(Blocks, Blocks)> {
    let mut index: HashMap<&[usize], usize> = HashMap::new();
    let mut distinct: Vec<Vec<usize>> = Vec::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        let slot = *index.entry(b.as_slice()).or_insert_with(|| {
            distinct.push(b.clone());
            members.push(Vec::new());
            distinct.len() - 1
        });
        members[slot].push(i);
    }
    members
        .iter()
        .all(|m| m.len() == q)
        .then_some((distinct, members))
}

/// Whether `d` is a 2-(v, k, λ) design, also accepting the `k = 1, λ = 0`
/// case where the blocks are exactly the singletons.
fn is_design_with(d: &IncidenceStructure, k: usize, lambda: u64) -> bool {
    if k == 1 {
        let mut seen = vec![false; d.v()];
        return lambda == 0
            && d.b() == d.v()
            && d.blocks()
                .iter()
                .all(|b| b.len() == 1 && !std::mem::replace(&mut seen[b[0]], true));
    }
    match d.verify_tdesign(2) {
        Some(p) => p.k == k && p.lambda == lambda,
        None => false,
    }
}

impl IncidenceStructure {
    /// Tests whether block `j` is good. The design must be affine resolvable
    /// with the parameters of `AG_{n-1}(n, q)`, `n >= 2`.
    pub fn good_block(&self, j: usize) -> Result<Option<GoodBlock>> {
        self.check_block(j)?;
        let ar = self
            .is_affine_resolvable()
            .ok_or_else(|| Error::WrongParameters("design is not affine resolvable".into()))?;
        let q = ar.q;
        let n = log_exact(self.v(), q)
            .filter(|&n| n >= 2 && ar.mu * q * q == self.v() && ar.mu == q.pow(n - 2))
            .ok_or_else(|| {
                Error::WrongParameters(format!(
                    "v = {} is not q^n with block size q^(n-1)",
                    self.v()
                ))
            })?;
        let k_s = q.pow(n - 2);
        let lambda_s = ((k_s - 1) / (q - 1)) as u64;

        let der = self.restrict(j, Side::Derived, false)?;
        let Some((distinct, members)) = uniform_copies(der.structure.blocks(), q) else {
            return Ok(None);
        };
        let s = IncidenceStructure::new(der.structure.v(), distinct)?;
        if !s.is_simple() || !is_design_with(&s, k_s, lambda_s) {
            return Ok(None);
        }

        let res = self.restrict(j, Side::Residual, false)?;
        let big = q.pow(n - 1);
        let mut parallel_blocks = Vec::new();
        let mut keep = Vec::new();
        let mut new_of_orig = HashMap::new();
        for (i, b) in res.structure.blocks().iter().enumerate() {
            if b.len() == big {
                parallel_blocks.push(res.block_map[i]);
            } else {
                new_of_orig.insert(res.block_map[i], keep.len());
                keep.push(i);
            }
        }
        let dprime = res.structure.sub_structure(&keep)?;
        let dprime_blocks: Vec<usize> = keep.iter().map(|&i| res.block_map[i]).collect();
        let classes = members
            .iter()
            .map(|m| m.iter().map(|&i| new_of_orig[&der.block_map[i]]).collect())
            .collect();
        let resolution = Resolution::new(&dprime, classes)?;
        Ok(Some(GoodBlock {
            s,
            dprime,
            resolution,
            dprime_blocks,
            parallel_blocks,
            residual_points: res.point_map,
        }))
    }

    /// Tests whether block `j` of a symmetric design with parameters
    /// `((q³μ-1)/(q-1), (q²μ-1)/(q-1), (qμ-1)/(q-1))` is normal, returning the
    /// symmetric design `D₀` whose `q` copies form the derived design.
    pub fn normal_block(&self, j: usize, q: usize) -> Result<Option<NormalBlock>> {
        self.check_block(j)?;
        let p = self
            .verify_tdesign(2)
            .filter(|p| p.symmetric)
            .ok_or_else(|| Error::WrongParameters("design is not a symmetric 2-design".into()))?;
        if q < 2 {
            return Err(Error::WrongParameters(format!(
                "q = {q} must be at least 2"
            )));
        }
        let num = p.k * (q - 1) + 1;
        let mu = num / (q * q);
        let fits = num.is_multiple_of(q * q)
            && mu >= 1
            && p.v * (q - 1) == q * q * q * mu - 1
            && p.lambda as usize * (q - 1) == q * mu - 1;
        if !fits {
            return Err(Error::WrongParameters(format!(
                "2-({}, {}, {}) does not match q = {q}",
                p.v, p.k, p.lambda
            )));
        }
        let k0 = (q * mu - 1) / (q - 1);
        let lambda0 = ((mu - 1) / (q - 1)) as u64;
        if !(mu - 1).is_multiple_of(q - 1) {
            return Ok(None);
        }
        let der = self.restrict(j, Side::Derived, false)?;
        let Some((distinct, _)) = uniform_copies(der.structure.blocks(), q) else {
            return Ok(None);
        };
        let d0 = IncidenceStructure::new(der.structure.v(), distinct)?;
        if d0.b() != d0.v() || !is_design_with(&d0, k0, lambda0) {
            return Ok(None);
        }
        Ok(Some(NormalBlock {
            d0,
            degenerate: k0 == 1 || lambda0 == 0,
        }))
    }
}
