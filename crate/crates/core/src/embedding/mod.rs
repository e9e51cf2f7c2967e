//! Linear embeddability of residual designs: the rank test, sufficient and
//! necessary conditions, the completion search for affine resolvable
//! 2-designs, and embeddings into symmetric designs.

mod clique;
mod search;
mod sym;

pub use search::{
    embedding_search, CandidateOutcome, EmbeddingSearchResult, IsoClass, ResidualInstance,
    MAX_CANDIDATES, MAX_COMPLETIONS,
};
pub use sym::{sym_embedding_code, sym_embedding_search, SymEmbedding};

use serde::Serialize;

use crate::algebra::prime_power;
use crate::bits::binomial;
use crate::codes::{LinearCode, Word};
use crate::designs::{IncidenceStructure, Resolution};
use crate::error::{Error, Result};

/// p-ranks of a design and of its residual with respect to one block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddabilityReport {
    pub block: usize,
    pub p: u32,
    pub rank_full: usize,
    pub rank_residual: usize,
    /// `rank_full == rank_residual + 1`.
    pub embeddable: bool,
}

pub fn embeddability(d: &IncidenceStructure, block: usize, p: u32) -> Result<EmbeddabilityReport> {
    let res = d.residual(block, true)?;
    let rank_full = d.incidence_matrix(p)?.rank();
    let rank_residual = res.incidence_matrix(p)?.rank();
    Ok(EmbeddabilityReport {
        block,
        p,
        rank_full,
        rank_residual,
        embeddable: rank_full == rank_residual + 1,
    })
}

/// Outcome of the minimum-weight criterion for one block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Thm1Entry {
    pub block: usize,
    /// Block size equals the minimum weight of the column code.
    pub certified: bool,
    /// Result of the direct rank test.
    pub embeddable: bool,
}

/// Certifies embeddability of every residual taken with respect to a block
/// whose size equals the minimum weight of the code spanned by the columns of
/// the incidence matrix; the direct rank test is reported alongside.
pub fn thm1_certify(d: &IncidenceStructure, p: u32) -> Result<Vec<Thm1Entry>> {
    let code = LinearCode::from_cols(&d.incidence_matrix(p)?);
    let dmin = code.min_weight()?;
    (0..d.b())
        .map(|j| {
            let rep = embeddability(d, j, p)?;
            Ok(Thm1Entry {
                block: j,
                certified: Some(d.blocks()[j].len()) == dmin,
                embeddable: rep.embeddable,
            })
        })
        .collect()
}

fn support_is_union(word: Word, classes: &[Vec<usize>]) -> bool {
    classes.iter().all(|c| {
        let first = word.get(c[0]) != 0;
        c.iter().all(|&j| (word.get(j) != 0) == first)
    })
}

/// Weight-`w` codewords whose support is a union of classes of `r`, the code
/// coordinates being the blocks the resolution partitions.
pub fn parallel_union_codewords(
    code: &LinearCode,
    r: &Resolution,
    w: usize,
) -> Result<Vec<Vec<u8>>> {
    let covered: usize = r.classes().iter().map(|c| c.len()).sum();
    if covered != code.length() {
        return Err(Error::DimensionMismatch(format!(
            "resolution covers {covered} blocks, code has length {}",
            code.length()
        )));
    }
    let classes = r.classes();
    code.find_codewords(|x| x.weight() == w && support_is_union(x, classes))
}

/// Required versus found codeword counts for a necessary condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NecessaryCheck {
    pub required: u64,
    pub found: u64,
    pub passes: bool,
}

/// `(q, n, p)` for an affine resolvable 2-(q^n, q^{n-1}, ·) design with `q >= 4`.
pub(crate) fn family(d: &IncidenceStructure) -> Result<(usize, u32, u32)> {
    let ar = d
        .is_affine_resolvable()
        .ok_or_else(|| Error::WrongParameters("design is not affine resolvable".into()))?;
    let q = ar.q;
    let mut n = 1u32;
    while q.pow(n) < d.v() {
        n += 1;
    }
    if q.pow(n) != d.v() || n < 2 || ar.mu != q.pow(n - 2) {
        return Err(Error::WrongParameters(format!(
            "v = {} is not q^n for q = {q}",
            d.v()
        )));
    }
    if q < 4 {
        return Err(Error::WrongParameters(format!("q = {q} is below 4")));
    }
    let (p, _) = prime_power(q as u64).ok_or(Error::NoField(q as u64))?;
    Ok((q, n, p))
}

/// Necessary condition for embedding the residual with respect to a good
/// block: the code of the size-`q^{n-1} - q^{n-2}` residual blocks must hold
/// at least `(p-1)·C(q^{n-1}, 2)` codewords of weight `2q^{n-1}` whose supports
/// are unions of parallel classes of the induced resolution.
pub fn thm5_necessary(d: &IncidenceStructure, block: usize) -> Result<NecessaryCheck> {
    thm5_necessary_with(d, block, None)
}

/// As [`thm5_necessary`], with an explicit resolution of the residual blocks
/// (block indices in the order of `GoodBlock::dprime`).
pub fn thm5_necessary_with(
    d: &IncidenceStructure,
    block: usize,
    r: Option<&Resolution>,
) -> Result<NecessaryCheck> {
    let (q, n, p) = family(d)?;
    let gb = d.good_block(block)?.ok_or(Error::NotGoodBlock(block))?;
    let r = match r {
        Some(r) => Resolution::new(&gb.dprime, r.classes().to_vec())?,
        None => gb.resolution.clone(),
    };
    let code = LinearCode::from_rows(&gb.dprime.incidence_matrix(p)?);
    let found = parallel_union_codewords(&code, &r, 2 * q.pow(n - 1))?.len() as u64;
    let required = (p as u64 - 1) * binomial(q.pow(n - 1) as u64, 2) as u64;
    Ok(NecessaryCheck {
        required,
        found,
        passes: found >= required,
    })
}

/// Necessary condition for embedding an affine resolvable design as the
/// residual of a symmetric design with respect to a normal block: its row
/// code must hold at least `(p-1)·C((q^n-1)/(q-1), 2)` codewords of weight
/// `2q^{n-1}` whose supports are unions of its parallel classes.
pub fn thm_taf_necessary(d: &IncidenceStructure, p: u32) -> Result<NecessaryCheck> {
    let (q, n, pq) = family(d)?;
    if pq != p {
        return Err(Error::WrongParameters(format!(
            "p = {p} does not divide q = {q}"
        )));
    }
    let r = d
        .is_affine_resolvable()
        .expect("checked by family")
        .resolution;
    let code = LinearCode::from_rows(&d.incidence_matrix(p)?);
    let found = parallel_union_codewords(&code, &r, 2 * q.pow(n - 1))?.len() as u64;
    let lines = ((q.pow(n) - 1) / (q - 1)) as u64;
    let required = (p as u64 - 1) * binomial(lines, 2) as u64;
    Ok(NecessaryCheck {
        required,
        found,
        passes: found >= required,
    })
}

/// Parameters `(v + r, r, λ)` of a symmetric design having a 2-(v,k,λ)
/// design as residual, when `r = k + λ`.
pub fn quasi_residual_params(v: u64, k: u64, lambda: u64) -> Option<(u64, u64, u64)> {
    if k < 2 || v <= k || lambda == 0 || !(lambda * (v - 1)).is_multiple_of(k - 1) {
        return None;
    }
    let r = lambda * (v - 1) / (k - 1);
    (r == k + lambda).then_some((v + r, r, lambda))
}
