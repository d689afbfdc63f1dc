//! Cells of the cubic realization.
//!
//! A coordinate is minimal-cellular when every minimal increase is defined.
//! Its maximal-cellular correspondent applies the increases from the last
//! index down to the first. The pair spans a box whose `2^(n-1)` corners are
//! all cubic coordinates, and mixing the negative entries of the lower corner
//! with the rest of the upper corner gives a synchronized coordinate.

use std::collections::BTreeSet;

use crate::cubic::{is_valid_entries, CubicCoordinate};
use crate::error::{Error, Result};
use crate::lattice::PosetInstance;

pub fn is_minimal_cellular(c: &CubicCoordinate) -> bool {
    (1..c.size()).all(|i| c.min_increase_unchecked(i).is_some())
}

/// Applies minimal increases in the given order of (1-based) indices,
/// stopping at the first undefined one.
pub fn apply_increases(c: &CubicCoordinate, order: &[usize]) -> Result<Option<CubicCoordinate>> {
    let mut current = c.clone();
    for &i in order {
        match current.min_increase(i)? {
            Some(next) => current = next,
            None => return Ok(None),
        }
    }
    Ok(Some(current))
}

/// `↑_1(↑_2(...↑_{n-1}(c)...))`.
pub fn maximal_correspondent(c: &CubicCoordinate) -> Result<CubicCoordinate> {
    if !is_minimal_cellular(c) {
        return Err(Error::NotMinimalCellular);
    }
    let order: Vec<usize> = (1..c.size()).rev().collect();
    apply_increases(c, &order)?
        .ok_or_else(|| Error::Invariant(format!("increase chain from {:?} is undefined", c.entries())))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    min: CubicCoordinate,
    max: CubicCoordinate,
}

impl Cell {
    pub fn from_minimal(c: CubicCoordinate) -> Result<Self> {
        let max = maximal_correspondent(&c)?;
        Ok(Self { min: c, max })
    }

    pub fn size(&self) -> usize {
        self.min.size()
    }

    pub fn minimal(&self) -> &CubicCoordinate {
        &self.min
    }

    pub fn maximal(&self) -> &CubicCoordinate {
        &self.max
    }

    /// Negative lower entries stay non-positive; non-negative ones become positive.
    pub fn is_sign_coherent(&self) -> bool {
        self.min.entries().iter().zip(self.max.entries()).all(|(&lo, &hi)| if lo < 0 { hi <= 0 } else { hi > 0 })
    }

    /// All mixes of the two corners, each checked to be a cubic coordinate.
    pub fn vertices(&self) -> Result<BTreeSet<CubicCoordinate>> {
        let dim = self.size() - 1;
        let (lo, hi) = (self.min.entries(), self.max.entries());
        let mut out = BTreeSet::new();
        for mask in 0u64..1 << dim {
            let mix: Vec<i64> = (0..dim).map(|k| if mask >> k & 1 == 1 { hi[k] } else { lo[k] }).collect();
            if !is_valid_entries(&mix) {
                return Err(Error::Invariant(format!("cell corner {mix:?} is not a cubic coordinate")));
            }
            out.insert(CubicCoordinate::new_unchecked(mix));
        }
        Ok(out)
    }

    /// Entry `i` is `c^m_i` when negative, else `c^M_i`.
    pub fn gamma(&self) -> CubicCoordinate {
        let entries = self
            .min
            .entries()
            .iter()
            .zip(self.max.entries())
            .map(|(&lo, &hi)| if lo < 0 { lo } else { hi })
            .collect();
        CubicCoordinate::new_unchecked(entries)
    }

    /// Coordinates `c` with `c^m <= c <= c^M`, corners included.
    pub fn interior(&self, poset: &PosetInstance) -> Vec<CubicCoordinate> {
        poset.elements().iter().filter(|c| self.min.leq(c) && c.leq(&self.max)).cloned().collect()
    }
}

/// One cell per minimal-cellular element of the poset.
pub fn enumerate_cells(poset: &PosetInstance) -> Result<Vec<Cell>> {
    poset
        .elements()
        .iter()
        .filter(|c| is_minimal_cellular(c))
        .map(|c| Cell::from_minimal(c.clone()))
        .collect()
}
