use super::IncidenceStructure;
use crate::error::Result;

/// Which side of a block to restrict to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Points outside the block.
    Residual,
    /// Points of the block.
    Derived,
}

/// A residual or derived structure together with the index maps back to the parent.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub structure: IncidenceStructure,
    /// `point_map[new] = old` point index.
    pub point_map: Vec<usize>,
    /// `block_map[new] = old` block index.
    pub block_map: Vec<usize>,
}

impl IncidenceStructure {
    /// Restricts every other block to one side of block `j`. Empty restrictions
    /// are dropped unless `keep_empty` is set; block order follows the parent.
    pub fn restrict(&self, j: usize, side: Side, keep_empty: bool) -> Result<Restriction> {
        let b = self.block(j)?;
        let mut in_block = vec![false; self.v()];
        for &x in b {
            in_block[x] = true;
        }
        let point_map: Vec<usize> = (0..self.v())
            .filter(|&x| in_block[x] == (side == Side::Derived))
            .collect();
        let mut new_index = vec![usize::MAX; self.v()];
        for (i, &x) in point_map.iter().enumerate() {
            new_index[x] = i;
        }
        let mut blocks = Vec::new();
        let mut block_map = Vec::new();
        for (i, other) in self.blocks().iter().enumerate() {
            if i == j {
                continue;
            }
            let nb: Vec<usize> = other
                .iter()
                .filter(|&&x| new_index[x] != usize::MAX)
                .map(|&x| new_index[x])
                .collect();
            if nb.is_empty() && !keep_empty {
                continue;
            }
            blocks.push(nb);
            block_map.push(i);
        }
        let structure = IncidenceStructure::new(point_map.len(), blocks)?;
        Ok(Restriction {
            structure,
            point_map,
            block_map,
        })
    }

    /// Residual structure: other blocks minus block `j`, on the complement of `j`.
    pub fn residual(&self, j: usize, keep_empty: bool) -> Result<IncidenceStructure> {
        Ok(self.restrict(j, Side::Residual, keep_empty)?.structure)
    }

    /// Derived structure: other blocks intersected with block `j`.
    pub fn derived(&self, j: usize, keep_empty: bool) -> Result<IncidenceStructure> {
        Ok(self.restrict(j, Side::Derived, keep_empty)?.structure)
    }
}
