//! Bit-level hypercube structure.
//!
//! Vertices of the n-dimensional hypercube are the integers `0..2^n`; two
//! vertices share an edge exactly when their labels differ in one bit.
//! Direction `i` is bit `i` (LSB is direction 0), so no adjacency lists
//! are ever materialised.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Vertex label, interpreted as an n-bit string.
pub type VertexId = u32;

/// Largest supported dimension. Keeps state vectors within a few GB.
pub const MAX_DIM: u32 = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct HypercubeDims {
    n: u32,
}

impl HypercubeDims {
    pub fn new(n: u32) -> Result<Self> {
        if !(2..=MAX_DIM).contains(&n) {
            return invalid(format!("hypercube dimension {n} outside 2..={MAX_DIM}"));
        }
        Ok(Self { n })
    }

    /// Dimension n (also the vertex degree).
    #[inline]
    pub fn dim(&self) -> usize {
        self.n as usize
    }

    /// Vertex count N = 2^n.
    #[inline]
    pub fn vertex_count(&self) -> usize {
        1usize << self.n
    }

    #[inline]
    pub fn contains(&self, x: VertexId) -> bool {
        (x as usize) < self.vertex_count()
    }

    pub fn check_vertex(&self, x: VertexId) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            invalid(format!(
                "vertex {x} out of range for N = {}",
                self.vertex_count()
            ))
        }
    }

    /// The neighbour of `x` along direction `i`, i.e. `x XOR 2^i`.
    pub fn neighbor(&self, x: VertexId, i: usize) -> Result<VertexId> {
        self.check_vertex(x)?;
        if i >= self.dim() {
            return invalid(format!("direction {i} out of range for n = {}", self.n));
        }
        Ok(x ^ (1 << i))
    }

    /// All n neighbours of `x`, in direction order.
    pub fn neighbors(&self, x: VertexId) -> Result<Vec<VertexId>> {
        self.check_vertex(x)?;
        Ok((0..self.dim()).map(|i| x ^ (1 << i)).collect())
    }
}

impl TryFrom<u32> for HypercubeDims {
    type Error = crate::Error;

    fn try_from(n: u32) -> Result<Self> {
        Self::new(n)
    }
}

impl From<HypercubeDims> for u32 {
    fn from(d: HypercubeDims) -> u32 {
        d.n
    }
}

#[inline]
pub fn hamming_distance(x: VertexId, y: VertexId) -> u32 {
    (x ^ y).count_ones()
}

#[inline]
pub fn is_adjacent(x: VertexId, y: VertexId) -> bool {
    hamming_distance(x, y) == 1
}
