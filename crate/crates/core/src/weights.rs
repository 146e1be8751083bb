//! Self-loop weight schemes and their split across `m` self-loops.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::hypercube::HypercubeDims;

/// Total self-loop weight `l` as a function of n, N and the number of
/// marked vertices k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WeightScheme {
    /// l = n/N
    #[serde(rename = "n_over_N")]
    NOver,
    /// l = (n/N)·k
    #[serde(rename = "n_over_N_times_k")]
    NOverTimesK,
    /// l = n²/N
    #[serde(rename = "n2_over_N")]
    N2Over,
    /// l = (n²/N)·k
    #[serde(rename = "n2_over_N_times_k")]
    N2OverTimesK,
}

impl WeightScheme {
    pub const ALL: [WeightScheme; 4] = [
        WeightScheme::NOver,
        WeightScheme::NOverTimesK,
        WeightScheme::N2Over,
        WeightScheme::N2OverTimesK,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            WeightScheme::NOver => "n_over_N",
            WeightScheme::NOverTimesK => "n_over_N_times_k",
            WeightScheme::N2Over => "n2_over_N",
            WeightScheme::N2OverTimesK => "n2_over_N_times_k",
        }
    }

    pub fn scales_with_k(&self) -> bool {
        matches!(self, WeightScheme::NOverTimesK | WeightScheme::N2OverTimesK)
    }
}

impl fmt::Display for WeightScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for WeightScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        WeightScheme::ALL
            .into_iter()
            .find(|w| w.tag() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown weight scheme '{s}'")))
    }
}

/// Total weight `l` for `k` marked vertices.
pub fn compute_weight(scheme: WeightScheme, dims: HypercubeDims, k: usize) -> Result<f64> {
    if k == 0 {
        return invalid("number of marked vertices must be at least 1");
    }
    let n = dims.dim() as f64;
    let big_n = dims.vertex_count() as f64;
    let k = k as f64;
    Ok(match scheme {
        WeightScheme::NOver => n / big_n,
        WeightScheme::NOverTimesK => n / big_n * k,
        WeightScheme::N2Over => n * n / big_n,
        WeightScheme::N2OverTimesK => n * n / big_n * k,
    })
}

/// Coin parameters: `m` self-loops each of weight `l' = l/m` next to `n`
/// edge directions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoinSpec {
    n: usize,
    m: usize,
    l: f64,
    l_prime: f64,
}

impl CoinSpec {
    /// Splits total weight `l` evenly over `m` self-loops.
    pub fn new(dims: HypercubeDims, l: f64, m: usize) -> Result<Self> {
        if m == 0 {
            return invalid("number of self-loops must be at least 1");
        }
        if !(l.is_finite() && l > 0.0) {
            return invalid(format!("self-loop weight must be positive, got {l}"));
        }
        Ok(Self {
            n: dims.dim(),
            m,
            l,
            l_prime: l / m as f64,
        })
    }

    /// Number of edge directions.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of self-loops per vertex.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Total self-loop weight.
    pub fn l(&self) -> f64 {
        self.l
    }

    /// Weight carried by each self-loop.
    pub fn l_prime(&self) -> f64 {
        self.l_prime
    }

    pub fn coin_dim(&self) -> usize {
        self.n + self.m
    }

    /// Component of |s^C⟩ on each edge direction, 1/√(n+l).
    pub fn edge_amplitude(&self) -> f64 {
        1.0 / (self.n as f64 + self.l).sqrt()
    }

    /// Component of |s^C⟩ on each self-loop, √l'/√(n+l).
    pub fn loop_amplitude(&self) -> f64 {
        self.l_prime.sqrt() / (self.n as f64 + self.l).sqrt()
    }

    /// The weighted coin state |s^C⟩ as a real vector of length n+m.
    pub fn coin_state(&self) -> Vec<f64> {
        let mut v = vec![self.edge_amplitude(); self.n];
        v.resize(self.coin_dim(), self.loop_amplitude());
        v
    }
}

pub fn make_coin_spec(
    scheme: WeightScheme,
    dims: HypercubeDims,
    k: usize,
    m: usize,
) -> Result<CoinSpec> {
    if m == 0 {
        return invalid("number of self-loops must be at least 1");
    }
    CoinSpec::new(dims, compute_weight(scheme, dims, k)?, m)
}
