//! Subsets of the vertex set `[n] = {1, ..., n}`, encoded as bitmasks.
//!
//! Vertices are 1-based in file formats and display output, 0-based in the
//! internal bit positions. `n` is capped at 20 so a `u32` mask suffices.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ground-set size.
pub const MAX_VERTICES: usize = 20;

/// A subset `B` of `[n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    mask: u32,
    n: usize,
}

impl Subset {
    pub fn empty(n: usize) -> Self {
        Subset { mask: 0, n }
    }

    pub fn full(n: usize) -> Self {
        Subset {
            mask: (1u32 << n) - 1,
            n,
        }
    }

    /// Builds a subset from a bitmask over `n` vertices.
    pub fn from_mask(mask: u32, n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::GuardExceeded {
                what: "vertex set".into(),
                size: n,
                limit: MAX_VERTICES,
            });
        }
        if mask >= (1u32 << n) {
            return Err(Error::invalid(format!(
                "mask {mask:#b} has bits outside [1, {n}]"
            )));
        }
        Ok(Subset { mask, n })
    }

    /// Builds a subset from 1-based vertex labels.
    pub fn from_vertices(vertices: &[usize], n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::GuardExceeded {
                what: "vertex set".into(),
                size: n,
                limit: MAX_VERTICES,
            });
        }
        let mut mask = 0u32;
        for &v in vertices {
            if v < 1 || v > n {
                return Err(Error::invalid(format!("vertex {v} outside [1, {n}]")));
            }
            let bit = 1u32 << (v - 1);
            if mask & bit != 0 {
                return Err(Error::invalid(format!("repeated vertex {v}")));
            }
            mask |= bit;
        }
        Ok(Subset { mask, n })
    }

    /// Builds a subset from 0-based member indices.
    pub fn from_indices(indices: &[usize], n: usize) -> Result<Self> {
        let vertices: Vec<usize> = indices.iter().map(|&i| i + 1).collect();
        Subset::from_vertices(&vertices, n)
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_full(&self) -> bool {
        self.mask == (1u32 << self.n) - 1
    }

    /// Membership of a 0-based index.
    pub fn contains_index(&self, i: usize) -> bool {
        i < self.n && self.mask & (1u32 << i) != 0
    }

    /// Membership of a 1-based vertex.
    pub fn contains_vertex(&self, v: usize) -> bool {
        v >= 1 && self.contains_index(v - 1)
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.n == other.n && self.mask & !other.mask == 0
    }

    pub fn intersects(&self, other: &Subset) -> bool {
        self.mask & other.mask != 0
    }

    /// 0-based member indices, ascending.
    pub fn indices(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.contains_index(i)).collect()
    }

    /// 1-based vertex labels, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        self.indices().iter().map(|&i| i + 1).collect()
    }

    /// All subsets of `[n]`, ascending by mask.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        (0..(1u32 << n)).map(move |mask| Subset { mask, n })
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.vertices().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
