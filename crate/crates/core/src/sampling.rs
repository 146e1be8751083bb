//! Marked-vertex sets for the two experiment scenarios.
//!
//! Adjacent clusters are stars: a center plus some of its neighbours.
//! Mixed samples add `a − 1` vertices that sit at Hamming distance at least
//! 2 from every other marked vertex, drawn by rejection from a seeded
//! ChaCha8 stream so that a `(base_seed, a, sample)` triple always yields
//! the same set.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::hypercube::{hamming_distance, HypercubeDims, VertexId};

/// Draw limit for rejection sampling.
pub const MAX_REJECTION_DRAWS: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScenarioKind {
    /// `a` adjacent vertices plus `a − 1` scattered non-adjacent ones.
    Mixed,
    /// A single star of `a` adjacent vertices around vertex 0.
    Adjacent,
}

impl ScenarioKind {
    pub fn tag(&self) -> &'static str {
        match self {
            ScenarioKind::Mixed => "mixed",
            ScenarioKind::Adjacent => "adjacent",
        }
    }

    /// Total marked vertices for a group with `a` adjacent vertices.
    pub fn total_marked(&self, a: usize) -> usize {
        match self {
            ScenarioKind::Mixed => 2 * a - 1,
            ScenarioKind::Adjacent => a,
        }
    }
}

impl fmt::Display for ScenarioKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ScenarioKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mixed" => Ok(ScenarioKind::Mixed),
            "adjacent" => Ok(ScenarioKind::Adjacent),
            _ => invalid(format!(
                "unknown scenario '{s}' (expected adjacent or mixed)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedSample {
    pub adjacent: Vec<VertexId>,
    pub non_adjacent: Vec<VertexId>,
    pub seed: u64,
}

impl MarkedSample {
    /// Adjacent cluster followed by the scattered vertices.
    pub fn all(&self) -> Vec<VertexId> {
        self.adjacent
            .iter()
            .chain(&self.non_adjacent)
            .copied()
            .collect()
    }

    pub fn len(&self) -> usize {
        self.adjacent.len() + self.non_adjacent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Checks the structural invariants of a sample.
    pub fn audit(&self, dims: HypercubeDims) -> Result<()> {
        let all = self.all();
        all.iter().try_for_each(|&x| dims.check_vertex(x))?;
        if let Some((&center, rest)) = self.adjacent.split_first() {
            if let Some(&x) = rest.iter().find(|&&x| hamming_distance(center, x) != 1) {
                return invalid(format!(
                    "cluster vertex {x} is not adjacent to center {center}"
                ));
            }
        }
        for (i, &x) in all.iter().enumerate() {
            if all[..i].contains(&x) {
                return invalid(format!("vertex {x} appears twice"));
            }
        }
        for &x in &self.non_adjacent {
            if let Some(&y) = all.iter().find(|&&y| y != x && hamming_distance(x, y) < 2) {
                return invalid(format!("vertex {x} is adjacent to marked vertex {y}"));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioSpec {
    pub kind: ScenarioKind,
    /// Adjacent marked vertices per sample.
    pub a: usize,
    /// Samples per group. Adjacent groups always produce a single sample.
    pub samples: usize,
    pub base_seed: u64,
}

impl ScenarioSpec {
    pub fn validate(&self, dims: HypercubeDims) -> Result<()> {
        if self.a < 2 {
            return invalid(format!(
                "a = {} but at least 2 adjacent vertices are required",
                self.a
            ));
        }
        if self.a > dims.dim() + 1 {
            return invalid(format!("a = {} exceeds n+1 = {}", self.a, dims.dim() + 1));
        }
        if self.kind == ScenarioKind::Mixed && self.samples == 0 {
            return invalid("mixed scenario needs at least one sample per group");
        }
        Ok(())
    }

    pub fn total_marked(&self) -> usize {
        self.kind.total_marked(self.a)
    }

    /// Seed of sample `index`: `base_seed + a·2³² + index` (wrapping).
    pub fn sample_seed(&self, index: usize) -> u64 {
        self.base_seed
            .wrapping_add((self.a as u64) << 32)
            .wrapping_add(index as u64)
    }
}

/// `[center, center ⊕ 2^d₁, …]` using the first `a − 1` entries of `directions`.
pub fn adjacent_cluster(
    dims: HypercubeDims,
    a: usize,
    center: VertexId,
    directions: &[usize],
) -> Result<Vec<VertexId>> {
    if a == 0 {
        return invalid("cluster needs at least its center");
    }
    if a > dims.dim() + 1 {
        return invalid(format!(
            "a = {a} exceeds n+1 = {}: a vertex has only n neighbours",
            dims.dim() + 1
        ));
    }
    if directions.len() < a - 1 {
        return invalid(format!(
            "need {} directions for a cluster of {a}, got {}",
            a - 1,
            directions.len()
        ));
    }
    let dirs = &directions[..a - 1];
    for (i, d) in dirs.iter().enumerate() {
        if dirs[..i].contains(d) {
            return invalid(format!("direction {d} repeated"));
        }
    }
    let mut out = Vec::with_capacity(a);
    out.push(center);
    for &d in dirs {
        out.push(dims.neighbor(center, d)?);
    }
    Ok(out)
}

/// Star around vertex 0 along directions 0, 1, 2, …
pub fn canonical_cluster(dims: HypercubeDims, a: usize) -> Result<Vec<VertexId>> {
    let dirs: Vec<usize> = (0..a.saturating_sub(1)).collect();
    adjacent_cluster(dims, a, 0, &dirs)
}

/// Draws `count` vertices uniformly, rejecting any within Hamming distance 1
/// of `forbidden` or of an earlier pick.
pub fn sample_non_adjacent<R: Rng + ?Sized>(
    dims: HypercubeDims,
    count: usize,
    forbidden: &[VertexId],
    rng: &mut R,
) -> Result<Vec<VertexId>> {
    let n_vertices = dims.vertex_count() as u64;
    let mut chosen: Vec<VertexId> = Vec::with_capacity(count);
    let mut draws = 0u64;
    while chosen.len() < count {
        if draws >= MAX_REJECTION_DRAWS {
            return Err(Error::Infeasible {
                draws,
                placed: chosen.len(),
                requested: count,
            });
        }
        draws += 1;
        let v = rng.gen_range(0..n_vertices) as VertexId;
        let clear = forbidden
            .iter()
            .chain(&chosen)
            .all(|&u| hamming_distance(u, v) >= 2);
        if clear {
            chosen.push(v);
        }
    }
    Ok(chosen)
}

/// All samples of one group.
///
/// Mixed groups keep the canonical cluster fixed and redraw the scattered
/// vertices per sample from [`ScenarioSpec::sample_seed`]. Adjacent groups
/// yield one seed-independent sample (recorded with seed 0).
pub fn generate_groups(spec: &ScenarioSpec, dims: HypercubeDims) -> Result<Vec<MarkedSample>> {
    spec.validate(dims)?;
    let cluster = canonical_cluster(dims, spec.a)?;
    let samples = match spec.kind {
        ScenarioKind::Adjacent => vec![MarkedSample {
            adjacent: cluster,
            non_adjacent: Vec::new(),
            seed: 0,
        }],
        ScenarioKind::Mixed => (0..spec.samples)
            .map(|i| {
                let seed = spec.sample_seed(i);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let scattered = sample_non_adjacent(dims, spec.a - 1, &cluster, &mut rng)?;
                Ok(MarkedSample {
                    adjacent: cluster.clone(),
                    non_adjacent: scattered,
                    seed,
                })
            })
            .collect::<Result<Vec<_>>>()?,
    };
    for s in &samples {
        s.audit(dims)?;
    }
    Ok(samples)
}
