//! Embedding an affine resolvable 2-(q^n, q^{n-1}, λ) design as the residual
//! of a symmetric design, through the code spanned by `[A | 0]` and the
//! all-one vector.

use super::clique::uniform_sets;
use super::{family, MAX_COMPLETIONS};
use crate::algebra::MatGFp;
use crate::bits::BitSet;
use crate::codes::LinearCode;
use crate::designs::IncidenceStructure;
use crate::error::{Error, Result};

/// Code of length `b + 1` spanned by the point rows of the incidence matrix,
/// padded with a zero, and the all-one vector.
pub fn sym_embedding_code(d: &IncidenceStructure, p: u32) -> Result<LinearCode> {
    let (q, _, pq) = family(d)?;
    if pq != p {
        return Err(Error::WrongParameters(format!(
            "p = {p} does not divide q = {q}"
        )));
    }
    let b = d.b();
    let mut m = MatGFp::zeros(d.v() + 1, b + 1, p)?;
    for (j, blk) in d.blocks().iter().enumerate() {
        for &x in blk {
            m.set(x, j, 1);
        }
    }
    for j in 0..=b {
        m.set(d.v(), j, 1);
    }
    Ok(LinearCode::from_rows(&m))
}

#[derive(Clone, Debug)]
pub struct SymEmbedding {
    /// Block size of the symmetric design sought.
    pub k: usize,
    /// Number of codewords of weight `k`.
    pub weight_k_codewords: usize,
    /// Number of rows a symmetric design would need.
    pub required: usize,
    /// Symmetric designs found, one per completion: old points first, then
    /// the new points; blocks in column order, the last one being the new points.
    pub designs: Vec<IncidenceStructure>,
}

impl SymEmbedding {
    /// True when too few weight-`k` codewords exist for any embedding.
    pub fn ruled_out(&self) -> bool {
        self.weight_k_codewords < self.required
    }
}

/// Searches for symmetric designs having `d` as residual, with the new rows
/// taken from the weight-`k` codewords of [`sym_embedding_code`].
pub fn sym_embedding_search(d: &IncidenceStructure, p: u32) -> Result<SymEmbedding> {
    let (q, n, _) = family(d)?;
    let code = sym_embedding_code(d, p)?;
    let (v, b) = (d.v(), d.b());
    let k = (q.pow(n) - 1) / (q - 1);
    let lambda = (q.pow(n - 1) - 1) / (q - 1);
    let required = v + k;
    let words = code.codewords_of_weight(k)?;
    let mut out = SymEmbedding {
        k,
        weight_k_codewords: words.len(),
        required,
        designs: Vec::new(),
    };
    if out.ruled_out() {
        return Ok(out);
    }
    let mut old = vec![BitSet::new(b + 1); v];
    for (j, blk) in d.blocks().iter().enumerate() {
        for &x in blk {
            old[x].insert(j);
        }
    }
    let rows: Vec<BitSet> = words
        .iter()
        .filter(|w| w[b] == 1 && w.iter().all(|&a| a <= 1))
        .map(|w| BitSet::from_indices(b + 1, &(0..=b).filter(|&j| w[j] == 1).collect::<Vec<_>>()))
        .filter(|r| old.iter().all(|o| o.intersection_count(r) == lambda))
        .collect();
    let block_size = d.uniform_block_size().ok_or(Error::NonUniformBlockSize)?;
    let sols = uniform_sets(&rows, lambda, k, b, k - block_size, MAX_COMPLETIONS)?;
    for sol in sols {
        let mut blocks: Vec<Vec<usize>> = d.blocks().to_vec();
        blocks.push(Vec::new());
        for (i, &r) in sol.iter().enumerate() {
            for j in rows[r].iter() {
                blocks[j].push(v + i);
            }
        }
        out.designs.push(IncidenceStructure::new(v + k, blocks)?);
    }
    Ok(out)
}
