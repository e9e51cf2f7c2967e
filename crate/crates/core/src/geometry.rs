//! Affine and projective geometry designs over GF(q).
//!
//! Vectors of GF(q)^n are numbered by their coordinate tuples read as base-q
//! numbers with the first coordinate most significant, where each coordinate
//! is the field element's index. Subspaces are enumerated through their
//! reduced row echelon forms: pivot sets in lexicographic order, then free
//! entries counted in base q.

use crate::algebra::FieldSpec;
use crate::designs::{IncidenceStructure, Resolution};
use crate::error::{Error, Result};

/// Largest ambient vector space the generators will enumerate.
const MAX_VECTORS: u64 = 1 << 22;

struct Space {
    f: FieldSpec,
    q: u32,
    n: usize,
}

impl Space {
    fn new(n: usize, q: u64) -> Result<Self> {
        let f = FieldSpec::of_order(q)?;
        let size = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        if size > MAX_VECTORS as u128 {
            return Err(Error::TooLarge {
                size,
                cap: MAX_VECTORS,
            });
        }
        Ok(Space { f, q: q as u32, n })
    }

    fn count(&self) -> usize {
        (self.q as usize).pow(self.n as u32)
    }

    fn encode(&self, x: &[u32]) -> usize {
        x.iter()
            .fold(0, |acc, &c| acc * self.q as usize + c as usize)
    }

    fn decode(&self, mut i: usize) -> Vec<u32> {
        let mut x = vec![0; self.n];
        for c in x.iter_mut().rev() {
            *c = (i % self.q as usize) as u32;
            i /= self.q as usize;
        }
        x
    }

    fn add(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.f.add_idx(x, y))
            .collect()
    }

    /// All vectors of the row space of `basis`, as encoded indices.
    fn span(&self, basis: &[Vec<u32>]) -> Vec<usize> {
        let mut vecs = vec![vec![0u32; self.n]];
        for row in basis {
            let mut next = Vec::with_capacity(vecs.len() * self.q as usize);
            for c in 0..self.q {
                let scaled: Vec<u32> = row.iter().map(|&x| self.f.mul_idx(c, x)).collect();
                next.extend(vecs.iter().map(|v| self.add(v, &scaled)));
            }
            vecs = next;
        }
        vecs.iter().map(|v| self.encode(v)).collect()
    }

    /// Row bases of all `d`-dimensional subspaces, in RREF.
    fn subspaces(&self, d: usize) -> Vec<Vec<Vec<u32>>> {
        let mut out = Vec::new();
        let mut pivots: Vec<usize> = (0..d).collect();
        loop {
            // free slots: (row, column) with column > pivot of row and not a pivot column
            let free: Vec<(usize, usize)> = (0..d)
                .flat_map(|r| {
                    let piv = &pivots;
                    (piv[r] + 1..self.n)
                        .filter(move |c| !piv.contains(c))
                        .map(move |c| (r, c))
                })
                .collect();
            let total = (self.q as usize).pow(free.len() as u32);
            for mut code in 0..total {
                let mut basis = vec![vec![0u32; self.n]; d];
                for (r, &p) in pivots.iter().enumerate() {
                    basis[r][p] = 1;
                }
                for &(r, c) in free.iter().rev() {
                    basis[r][c] = (code % self.q as usize) as u32;
                    code /= self.q as usize;
                }
                out.push(basis);
            }
            let mut i = d;
            while i > 0 && pivots[i - 1] == self.n - d + i - 1 {
                i -= 1;
            }
            if i == 0 {
                return out;
            }
            pivots[i - 1] += 1;
            for j in i..d {
                pivots[j] = pivots[j - 1] + 1;
            }
        }
    }
}

/// `AG_d(n, q)`: points are the vectors of GF(q)^n, blocks are the cosets of
/// all d-dimensional subspaces. The returned resolution groups the cosets of
/// each subspace; its classes appear in subspace enumeration order.
pub fn ag_design(n: usize, q: u64, d: usize) -> Result<(IncidenceStructure, Resolution)> {
    if d < 1 || d >= n {
        return Err(Error::BadDimension(format!(
            "need 1 <= d <= n-1, got n={n}, d={d}"
        )));
    }
    let sp = Space::new(n, q)?;
    let mut blocks = Vec::new();
    let mut classes = Vec::new();
    for basis in sp.subspaces(d) {
        let sub = sp.span(&basis);
        let mut covered = vec![false; sp.count()];
        let mut class = Vec::new();
        for x in 0..sp.count() {
            if covered[x] {
                continue;
            }
            let xv = sp.decode(x);
            let coset: Vec<usize> = sub
                .iter()
                .map(|&s| sp.encode(&sp.add(&xv, &sp.decode(s))))
                .collect();
            for &y in &coset {
                covered[y] = true;
            }
            class.push(blocks.len());
            blocks.push(coset);
        }
        classes.push(class);
    }
    let design = IncidenceStructure::new(sp.count(), blocks)?.with_name(format!("AG_{d}({n},{q})"));
    let resolution = Resolution::new(&design, classes)?;
    Ok((design, resolution))
}

/// `PG_d(n, q)`: points are the 1-dimensional subspaces of GF(q)^(n+1),
/// represented by vectors whose first nonzero coordinate is 1 and ordered
/// lexicographically; blocks are the (d+1)-dimensional subspaces.
pub fn pg_design(n: usize, q: u64, d: usize) -> Result<IncidenceStructure> {
    if d < 1 || d >= n {
        return Err(Error::BadDimension(format!(
            "need 1 <= d <= n-1, got n={n}, d={d}"
        )));
    }
    let sp = Space::new(n + 1, q)?;
    let mut point_of = vec![usize::MAX; sp.count()];
    let mut v = 0;
    for (x, slot) in point_of.iter_mut().enumerate() {
        if sp.decode(x).iter().find(|&&c| c != 0) == Some(&1) {
            *slot = v;
            v += 1;
        }
    }
    let blocks = sp
        .subspaces(d + 1)
        .iter()
        .map(|basis| {
            sp.span(basis)
                .into_iter()
                .filter(|&x| point_of[x] != usize::MAX)
                .map(|x| point_of[x])
                .collect()
        })
        .collect();
    Ok(IncidenceStructure::new(v, blocks)?.with_name(format!("PG_{d}({n},{q})")))
}
