//! Selection of rows with a constant pairwise intersection and prescribed
//! column sums.

use crate::bits::BitSet;
use crate::error::{Error, Result};

/// Every set of `need` rows that meet pairwise in exactly `lambda` ones and
/// whose sums over columns `0..cols` all equal `per_col`. Sets are listed
/// once each, as increasing indices, in lexicographic order.
pub(crate) fn uniform_sets(
    rows: &[BitSet],
    lambda: usize,
    need: usize,
    cols: usize,
    per_col: usize,
    cap: usize,
) -> Result<Vec<Vec<usize>>> {
    let n = rows.len();
    let compat: Vec<BitSet> = (0..n)
        .map(|a| {
            BitSet::from_indices(
                n,
                &(0..n)
                    .filter(|&b| b != a && rows[a].intersection_count(&rows[b]) == lambda)
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    let mut s = State {
        rows,
        compat,
        need,
        cols,
        per_col,
        cap,
        chosen: Vec::new(),
        load: vec![0; cols],
        out: Vec::new(),
    };
    s.extend(&BitSet::from_indices(n, &(0..n).collect::<Vec<_>>()), 0)?;
    Ok(s.out)
}

struct State<'a> {
    rows: &'a [BitSet],
    compat: Vec<BitSet>,
    need: usize,
    cols: usize,
    per_col: usize,
    cap: usize,
    chosen: Vec<usize>,
    load: Vec<usize>,
    out: Vec<Vec<usize>>,
}

impl State<'_> {
    fn extend(&mut self, allowed: &BitSet, from: usize) -> Result<()> {
        if self.chosen.len() == self.need {
            if self.load.iter().all(|&l| l == self.per_col) {
                if self.out.len() == self.cap {
                    return Err(Error::CapExceeded(self.cap));
                }
                self.out.push(self.chosen.clone());
            }
            return Ok(());
        }
        let avail: Vec<usize> = allowed.iter().filter(|&i| i >= from).collect();
        if self.chosen.len() + avail.len() < self.need {
            return Ok(());
        }
        for i in avail {
            let cols: Vec<usize> = self.rows[i].iter().filter(|&j| j < self.cols).collect();
            if cols.iter().any(|&j| self.load[j] == self.per_col) {
                continue;
            }
            for &j in &cols {
                self.load[j] += 1;
            }
            self.chosen.push(i);
            let mut next = allowed.clone();
            next.intersect_with(&self.compat[i]);
            self.extend(&next, i + 1)?;
            self.chosen.pop();
            for &j in &cols {
                self.load[j] -= 1;
            }
        }
        Ok(())
    }
}
