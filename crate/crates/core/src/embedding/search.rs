//! Completion search: given an affine resolvable design and a good block,
//! look for every affine resolvable design with the same parameters that has
//! the same residual, by adjoining one extra row to the residual incidence
//! matrix and assembling the missing points from codewords of the span.

use std::collections::HashMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::clique::uniform_sets;
use super::family;
use crate::algebra::MatGFp;
use crate::bits::{binomial, BitSet};
use crate::codes::LinearCode;
use crate::designs::{GoodBlock, IncidenceStructure, Resolution};
use crate::error::{Error, Result};
use crate::iso::{automorphism_group, canonical_cert, CanonicalCert};

/// Largest number of candidate extra rows the search will try.
pub const MAX_CANDIDATES: u128 = 4096;
/// Largest number of completions collected for one candidate.
pub const MAX_COMPLETIONS: usize = 1 << 16;

/// The residual incidence matrix of a design at a good block, extended by the
/// blocks parallel to it and one all-zero column standing for the block itself.
///
/// Rows are the points outside the block, in the order of
/// `good.residual_points`. Columns are the blocks of `good.dprime`, then the
/// `q - 1` parallel blocks, then the extra column.
#[derive(Clone, Debug)]
pub struct ResidualInstance {
    pub good: GoodBlock,
    /// Resolution of `good.dprime` used to form candidate rows.
    pub resolution: Resolution,
    pub q: usize,
    pub n: u32,
    pub p: u32,
    rows: Vec<BitSet>,
    parallel: Vec<Vec<usize>>,
}

impl ResidualInstance {
    pub fn new(d: &IncidenceStructure, block: usize, r: Option<&Resolution>) -> Result<Self> {
        let (q, n, p) = family(d)?;
        let good = d.good_block(block)?.ok_or(Error::NotGoodBlock(block))?;
        let resolution = match r {
            Some(r) => Resolution::new(&good.dprime, r.classes().to_vec())?,
            None => good.resolution.clone(),
        };
        let nd = good.dprime.b();
        let cols = nd + good.parallel_blocks.len() + 1;
        let mut position = vec![usize::MAX; d.v()];
        for (i, &x) in good.residual_points.iter().enumerate() {
            position[x] = i;
        }
        let mut rows = vec![BitSet::new(cols); good.residual_points.len()];
        for (j, b) in good.dprime.blocks().iter().enumerate() {
            for &x in b {
                rows[x].insert(j);
            }
        }
        let mut parallel = Vec::new();
        for (i, &j) in good.parallel_blocks.iter().enumerate() {
            let pts: Vec<usize> = d.blocks()[j].iter().map(|&x| position[x]).collect();
            for &x in &pts {
                rows[x].insert(nd + i);
            }
            parallel.push(pts);
        }
        Ok(ResidualInstance {
            good,
            resolution,
            q,
            n,
            p,
            rows,
            parallel,
        })
    }

    pub fn columns(&self) -> usize {
        self.good.dprime.b() + self.parallel.len() + 1
    }

    /// Number of blocks through a point of the full design.
    pub fn replication(&self) -> usize {
        (self.q.pow(self.n) - 1) / (self.q - 1)
    }

    /// Number of blocks through two points of the full design.
    pub fn lambda(&self) -> usize {
        (self.q.pow(self.n - 1) - 1) / (self.q - 1)
    }

    /// Number of points to add, equal to the size of the chosen block.
    pub fn missing_points(&self) -> usize {
        self.q.pow(self.n - 1)
    }

    /// The extended residual matrix over GF(p).
    pub fn matrix(&self) -> MatGFp {
        let mut m = MatGFp::zeros(self.rows.len(), self.columns(), self.p).expect("p is prime");
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.iter() {
                m.set(i, j, 1);
            }
        }
        m
    }

    /// Class choices for the extra row: the class holding block 0 of
    /// `good.dprime` together with `lambda - 1` of the others, in
    /// lexicographic order.
    pub fn candidates(&self) -> Result<Vec<Vec<usize>>> {
        let class_of = self.resolution.class_of();
        let fixed = class_of[0];
        let others: Vec<usize> = (0..self.resolution.len()).filter(|&c| c != fixed).collect();
        let pick = self.lambda() - 1;
        let count = binomial(others.len() as u64, pick as u64);
        if count > MAX_CANDIDATES {
            return Err(Error::InfeasibleInstance(format!(
                "{count} candidate rows exceed the limit of {MAX_CANDIDATES}"
            )));
        }
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..pick).collect();
        loop {
            let mut c: Vec<usize> = idx.iter().map(|&i| others[i]).collect();
            c.push(fixed);
            c.sort_unstable();
            out.push(c);
            let Some(i) = (0..pick).rev().find(|&i| idx[i] < others.len() - pick + i) else {
                break;
            };
            idx[i] += 1;
            for k in i + 1..pick {
                idx[k] = idx[k - 1] + 1;
            }
        }
        Ok(out)
    }

    /// The extra row for a class choice: ones on the blocks of the chosen
    /// classes and on the last column.
    pub fn candidate_vector(&self, classes: &[usize]) -> Vec<u8> {
        let mut y = vec![0u8; self.columns()];
        for &c in classes {
            for &j in &self.resolution.classes()[c] {
                y[j] = 1;
            }
        }
        y[self.columns() - 1] = 1;
        y
    }

    /// 0/1 codewords that can serve as rows of the missing points: weight
    /// equal to the replication number, a one in the last column, zero on
    /// the parallel blocks, and `lambda` common ones with every residual row.
    pub fn admissible_rows(&self, code: &LinearCode) -> Result<Vec<BitSet>> {
        let (r, lambda, cols) = (self.replication(), self.lambda(), self.columns());
        let nd = self.good.dprime.b();
        let supports: Vec<Vec<usize>> = self.rows.iter().map(|b| b.iter().collect()).collect();
        let words = code.find_codewords(|x| {
            x.weight() == r
                && x.get(cols - 1) == 1
                && (nd..cols - 1).all(|j| x.get(j) == 0)
                && (0..cols).all(|j| x.get(j) <= 1)
                && supports
                    .iter()
                    .all(|s| s.iter().filter(|&&j| x.get(j) == 1).count() == lambda)
        })?;
        Ok(words
            .iter()
            .map(|w| {
                BitSet::from_indices(cols, &(0..cols).filter(|&j| w[j] == 1).collect::<Vec<_>>())
            })
            .collect())
    }

    /// All sets of `missing_points` admissible rows that meet pairwise in
    /// `lambda` ones and cover every residual block column the right number
    /// of times. Each set is listed once, as increasing indices.
    pub fn completions(&self, rows: &[BitSet]) -> Result<Vec<Vec<usize>>> {
        let per_col = self.q.pow(self.n - 2);
        uniform_sets(
            rows,
            self.lambda(),
            self.missing_points(),
            self.good.dprime.b(),
            per_col,
            MAX_COMPLETIONS,
        )
    }

    /// The full design: residual points `0..`, then the new points, with the
    /// blocks in column order; the last block consists of the new points.
    pub fn assemble(&self, new_rows: &[&BitSet]) -> Result<IncidenceStructure> {
        let nd = self.good.dprime.b();
        let base = self.rows.len();
        let mut blocks: Vec<Vec<usize>> = self.good.dprime.blocks().to_vec();
        blocks.extend(self.parallel.iter().cloned());
        blocks.push(Vec::new());
        for (i, row) in new_rows.iter().enumerate() {
            for j in row.iter() {
                if j < nd || j == self.columns() - 1 {
                    blocks[j].push(base + i);
                }
            }
        }
        IncidenceStructure::new(base + new_rows.len(), blocks)
    }
}

/// What one candidate row led to.
#[derive(Clone, Debug)]
pub struct CandidateOutcome {
    /// Position in the lexicographic candidate list.
    pub index: usize,
    pub classes: Vec<usize>,
    pub code_dim: usize,
    pub admissible: usize,
    /// Pairwise non-isomorphic designs completed from this code.
    pub designs: Vec<(IncidenceStructure, CanonicalCert)>,
}

impl CandidateOutcome {
    /// Enough admissible rows exist to supply every missing point.
    pub fn viable(&self, need: usize) -> bool {
        self.admissible >= need
    }
}

#[derive(Clone, Debug)]
pub struct IsoClass {
    pub representative: IncidenceStructure,
    pub digest: String,
    /// Number of viable codes yielding this class.
    pub multiplicity: usize,
    pub aut_order: u128,
}

#[derive(Clone, Debug)]
pub struct EmbeddingSearchResult {
    pub candidates_examined: usize,
    pub viable_codes: usize,
    /// Outcomes of the viable candidates, in candidate order.
    pub outcomes: Vec<CandidateOutcome>,
    /// Iso classes in order of first appearance.
    pub iso_classes: Vec<IsoClass>,
}

impl EmbeddingSearchResult {
    /// Every design found, one per (viable code, iso class) pair.
    pub fn designs(&self) -> impl Iterator<Item = &IncidenceStructure> {
        self.outcomes
            .iter()
            .flat_map(|o| o.designs.iter().map(|(d, _)| d))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "candidates_examined": self.candidates_examined,
            "viable_codes": self.viable_codes,
            "codes": self.outcomes.iter().map(|o| json!({
                "candidate": o.index,
                "classes": o.classes,
                "dim": o.code_dim,
                "admissible": o.admissible,
                "designs": o.designs.iter().map(|(_, c)| c.digest.clone()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "iso_classes": self.iso_classes.iter().map(|c| json!({
                "digest": c.digest,
                "multiplicity": c.multiplicity,
                "aut_order": c.aut_order.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

fn run_candidate(
    inst: &ResidualInstance,
    base: &MatGFp,
    index: usize,
    classes: Vec<usize>,
) -> Result<CandidateOutcome> {
    let y = inst.candidate_vector(&classes);
    let code = LinearCode::from_rows(base).extend(&[y])?;
    let rows = inst.admissible_rows(&code)?;
    let mut designs: Vec<(IncidenceStructure, CanonicalCert)> = Vec::new();
    if rows.len() >= inst.missing_points() {
        for sol in inst.completions(&rows)? {
            let picked: Vec<&BitSet> = sol.iter().map(|&i| &rows[i]).collect();
            let e = inst.assemble(&picked)?;
            debug_assert!(e.is_affine_resolvable().is_some());
            let cert = canonical_cert(&e);
            if designs.iter().all(|(_, c)| c != &cert) {
                designs.push((e, cert));
            }
        }
    }
    Ok(CandidateOutcome {
        index,
        classes,
        code_dim: code.dim(),
        admissible: rows.len(),
        designs,
    })
}

/// Runs the completion search for the residual of `d` at the good block
/// `block`, optionally with a chosen resolution of the residual blocks.
/// Candidates are processed in parallel on the current rayon pool; the
/// result does not depend on the number of threads.
pub fn embedding_search(
    d: &IncidenceStructure,
    block: usize,
    r: Option<&Resolution>,
) -> Result<EmbeddingSearchResult> {
    let inst = ResidualInstance::new(d, block, r)?;
    let candidates = inst.candidates()?;
    let base = inst.matrix();
    let outcomes: Vec<CandidateOutcome> = candidates
        .into_par_iter()
        .enumerate()
        .map(|(i, c)| run_candidate(&inst, &base, i, c))
        .collect::<Result<_>>()?;
    let examined = outcomes.len();
    let need = inst.missing_points();
    let outcomes: Vec<CandidateOutcome> = outcomes.into_iter().filter(|o| o.viable(need)).collect();

    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut iso_classes: Vec<IsoClass> = Vec::new();
    for o in &outcomes {
        for (e, cert) in &o.designs {
            match index.get(cert.digest.as_str()) {
                Some(&k) => iso_classes[k].multiplicity += 1,
                None => {
                    index.insert(&cert.digest, iso_classes.len());
                    iso_classes.push(IsoClass {
                        representative: e.clone(),
                        digest: cert.digest.clone(),
                        multiplicity: 1,
                        aut_order: 0,
                    });
                }
            }
        }
    }
    iso_classes
        .par_iter_mut()
        .for_each(|c| c.aut_order = automorphism_group(&c.representative).order());
    Ok(EmbeddingSearchResult {
        candidates_examined: examined,
        viable_codes: outcomes.len(),
        outcomes,
        iso_classes,
    })
}
