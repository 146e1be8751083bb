//! Structured evolution of the multi-self-loop lackadaisical walk.
//!
//! The state lives in a single buffer of `(n + m) · N` complex amplitudes,
//! vertex-major: the coin block of vertex `x` is
//! `amplitudes[x·(n+m) .. (x+1)·(n+m)]`. Inside a block, indices `0..n` are
//! the edge directions and `n..n+m` the self-loops.
//!
//! One step is `U = S · (I_N ⊗ C) · Q`: oracle, then coin, then the
//! flip-flop shift. All three act in place.

use std::collections::HashSet;
use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::hypercube::{HypercubeDims, VertexId};
use crate::weights::CoinSpec;

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
    coin_dim: usize,
}

impl StateVector {
    /// Wraps a raw vertex-major amplitude buffer.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>, coin_dim: usize) -> Result<Self> {
        if coin_dim == 0 || !amplitudes.len().is_multiple_of(coin_dim) {
            return invalid(format!(
                "buffer of length {} is not a whole number of coin blocks of size {coin_dim}",
                amplitudes.len()
            ));
        }
        Ok(Self {
            amplitudes,
            coin_dim,
        })
    }

    pub fn zeros(dims: HypercubeDims, coin: &CoinSpec) -> Self {
        Self {
            amplitudes: vec![Complex64::new(0.0, 0.0); coin.coin_dim() * dims.vertex_count()],
            coin_dim: coin.coin_dim(),
        }
    }

    pub fn coin_dim(&self) -> usize {
        self.coin_dim
    }

    pub fn vertex_count(&self) -> usize {
        self.amplitudes.len() / self.coin_dim
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    /// Flat index of basis state |c, x⟩.
    #[inline]
    pub fn index(&self, c: usize, x: VertexId) -> usize {
        x as usize * self.coin_dim + c
    }

    #[inline]
    pub fn amplitude(&self, c: usize, x: VertexId) -> Complex64 {
        self.amplitudes[self.index(c, x)]
    }

    pub fn set_amplitude(&mut self, c: usize, x: VertexId, value: Complex64) {
        let i = self.index(c, x);
        self.amplitudes[i] = value;
    }

    /// Coin block of a single vertex.
    pub fn block(&self, x: VertexId) -> &[Complex64] {
        let start = x as usize * self.coin_dim;
        &self.amplitudes[start..start + self.coin_dim]
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn as_mut_slice(&mut self) -> &mut [Complex64] {
        &mut self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    /// Pairwise sum, so rounding stays near machine precision at n = 24.
    pub fn norm_sqr(&self) -> f64 {
        pairwise_norm_sqr(&self.amplitudes)
    }

    /// Largest componentwise modulus of the difference.
    pub fn max_abs_diff(&self, other: &StateVector) -> f64 {
        assert_eq!(self.len(), other.len(), "state dimension mismatch");
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

fn pairwise_norm_sqr(v: &[Complex64]) -> f64 {
    if v.len() <= 64 {
        return v.iter().map(|a| a.norm_sqr()).sum();
    }
    let (lo, hi) = v.split_at(v.len() / 2);
    pairwise_norm_sqr(lo) + pairwise_norm_sqr(hi)
}

/// Marked vertices and how many of their self-loops get a phase flip.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSpec {
    marked: Vec<VertexId>,
    s: usize,
}

impl OracleSpec {
    pub fn new(marked: Vec<VertexId>, s: usize) -> Result<Self> {
        if marked.is_empty() {
            return invalid("marked vertex set is empty");
        }
        let mut seen = HashSet::with_capacity(marked.len());
        if let Some(dup) = marked.iter().find(|&&x| !seen.insert(x)) {
            return invalid(format!("vertex {dup} marked twice"));
        }
        if s == 0 {
            return invalid("number of inverted self-loops must be at least 1");
        }
        Ok(Self { marked, s })
    }

    pub fn marked(&self) -> &[VertexId] {
        &self.marked
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn k(&self) -> usize {
        self.marked.len()
    }

    /// Checks the oracle against a concrete hypercube and coin.
    pub fn validate(&self, dims: HypercubeDims, coin: &CoinSpec) -> Result<()> {
        if self.s > coin.m() {
            return invalid(format!(
                "cannot invert {} self-loops with only m = {}",
                self.s,
                coin.m()
            ));
        }
        self.marked.iter().try_for_each(|&x| dims.check_vertex(x))
    }
}

/// Fraction of `p_max` a local maximum must reach to count as the first peak.
pub const PEAK_FRACTION: f64 = 0.9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WalkResult {
    /// Largest success probability over the window.
    pub p_max: f64,
    /// Earliest step attaining `p_max`.
    pub t_max: usize,
    /// Earliest local maximum of p(t) with p ≥ `PEAK_FRACTION · p_max`;
    /// falls back to `t_max` when no interior local maximum qualifies.
    /// This is the hitting time used for runtime scaling: later revivals
    /// often beat the first peak by a hair and make `t_max` jump.
    pub t_peak: usize,
    pub p_history: Option<Vec<f64>>,
}

/// Uniform superposition over vertices of the weighted coin state |s^C⟩.
pub fn initial_state(dims: HypercubeDims, coin: &CoinSpec) -> StateVector {
    let scale = 1.0 / (dims.vertex_count() as f64).sqrt();
    let block: Vec<Complex64> = coin
        .coin_state()
        .into_iter()
        .map(|a| Complex64::new(a * scale, 0.0))
        .collect();
    let mut state = StateVector::zeros(dims, coin);
    for chunk in state.amplitudes.chunks_exact_mut(coin.coin_dim()) {
        chunk.copy_from_slice(&block);
    }
    state
}

/// Partial phase inversion: at each marked vertex negate all edge
/// components and the first `s` self-loops.
pub fn apply_oracle(state: &mut StateVector, oracle: &OracleSpec, coin: &CoinSpec) -> Result<()> {
    if oracle.s > coin.m() {
        return invalid(format!(
            "cannot invert {} self-loops with only m = {}",
            oracle.s,
            coin.m()
        ));
    }
    let n_vertices = state.vertex_count();
    if let Some(&x) = oracle.marked.iter().find(|&&x| x as usize >= n_vertices) {
        return invalid(format!(
            "marked vertex {x} out of range for N = {n_vertices}"
        ));
    }
    apply_oracle_unchecked(state, oracle, coin.n());
    Ok(())
}

#[inline]
fn apply_oracle_unchecked(state: &mut StateVector, oracle: &OracleSpec, n: usize) {
    let d = state.coin_dim;
    let flipped = n + oracle.s;
    for &x in &oracle.marked {
        let start = x as usize * d;
        for a in &mut state.amplitudes[start..start + flipped] {
            *a = -*a;
        }
    }
}

/// Weighted Grover coin `2|s^C⟩⟨s^C| − I` on every vertex, as a rank-1 update.
pub fn apply_coin(state: &mut StateVector, coin: &CoinSpec) {
    assert_eq!(state.coin_dim, coin.coin_dim(), "coin dimension mismatch");
    let n = coin.n();
    let e = coin.edge_amplitude();
    let w = coin.loop_amplitude();
    for block in state.amplitudes.chunks_exact_mut(coin.coin_dim()) {
        let (edges, loops) = block.split_at_mut(n);
        let edge_sum: Complex64 = edges.iter().sum();
        let loop_sum: Complex64 = loops.iter().sum();
        let overlap = (edge_sum * e + loop_sum * w) * 2.0;
        let to_edge = overlap * e;
        let to_loop = overlap * w;
        for a in edges.iter_mut() {
            *a = to_edge - *a;
        }
        for a in loops.iter_mut() {
            *a = to_loop - *a;
        }
    }
}

/// Flip-flop shift: swaps ψ(c, x) with ψ(c, x ⊕ 2^c) for every edge
/// direction `c`; self-loop components stay put.
pub fn apply_shift(state: &mut StateVector, dims: HypercubeDims) {
    let n = dims.dim();
    let d = state.coin_dim;
    assert!(d >= n, "coin dimension smaller than hypercube degree");
    assert_eq!(
        state.vertex_count(),
        dims.vertex_count(),
        "vertex count mismatch"
    );
    let amps = &mut state.amplitudes;
    for x in 0..dims.vertex_count() {
        for c in 0..n {
            let y = x | (1 << c);
            if y != x {
                amps.swap(x * d + c, y * d + c);
            }
        }
    }
}

/// One step `U = S · (I ⊗ C) · Q`.
pub fn step(
    state: &mut StateVector,
    dims: HypercubeDims,
    coin: &CoinSpec,
    oracle: &OracleSpec,
) -> Result<()> {
    apply_oracle(state, oracle, coin)?;
    apply_coin(state, coin);
    apply_shift(state, dims);
    Ok(())
}

/// `U† = Q · (I ⊗ C) · S`; each factor is its own inverse.
pub fn step_adjoint(
    state: &mut StateVector,
    dims: HypercubeDims,
    coin: &CoinSpec,
    oracle: &OracleSpec,
) -> Result<()> {
    apply_shift(state, dims);
    apply_coin(state, coin);
    apply_oracle(state, oracle, coin)
}

/// Probability of measuring any marked vertex.
pub fn success_probability(state: &StateVector, oracle: &OracleSpec) -> f64 {
    oracle
        .marked
        .iter()
        .map(|&x| state.block(x).iter().map(|a| a.norm_sqr()).sum::<f64>())
        .sum()
}

/// Step budget `⌈(π/2)·√(N·(n+m)/k)⌉ · multiplier`. The default multiplier is 3.
pub fn default_budget(dims: HypercubeDims, coin: &CoinSpec, k: usize, multiplier: f64) -> usize {
    let base =
        FRAC_PI_2 * ((dims.vertex_count() * coin.coin_dim()) as f64 / k.max(1) as f64).sqrt();
    (base.ceil() * multiplier).ceil().max(1.0) as usize
}

/// Evolves from the initial state for `t_budget` steps and reports the
/// largest success probability seen (including t = 0) with the earliest
/// step that reached it.
pub fn run_walk(
    dims: HypercubeDims,
    coin: &CoinSpec,
    oracle: &OracleSpec,
    t_budget: usize,
    keep_history: bool,
) -> Result<WalkResult> {
    oracle.validate(dims, coin)?;
    let mut state = initial_state(dims, coin);
    let mut history = keep_history.then(|| Vec::with_capacity(t_budget + 1));

    let mut p_max = success_probability(&state, oracle);
    let mut t_max = 0;
    if let Some(h) = history.as_mut() {
        h.push(p_max);
    }
    // (step, p) of every interior local maximum, in time order
    let mut peaks: Vec<(usize, f64)> = Vec::new();
    let (mut before, mut last) = (f64::NEG_INFINITY, p_max);
    for t in 1..=t_budget {
        apply_oracle_unchecked(&mut state, oracle, coin.n());
        apply_coin(&mut state, coin);
        apply_shift(&mut state, dims);
        let p = success_probability(&state, oracle);
        if t >= 2 && last >= before && last >= p {
            peaks.push((t - 1, last));
        }
        if p > p_max {
            p_max = p;
            t_max = t;
        }
        if let Some(h) = history.as_mut() {
            h.push(p);
        }
        before = last;
        last = p;
    }
    let t_peak = peaks
        .iter()
        .find(|&&(_, p)| p >= PEAK_FRACTION * p_max)
        .map_or(t_max, |&(t, _)| t.min(t_max));
    Ok(WalkResult {
        p_max,
        t_max,
        t_peak,
        p_history: history,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{make_coin_spec, WeightScheme};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_state(dims: HypercubeDims, coin: &CoinSpec, seed: u64) -> StateVector {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut s = StateVector::zeros(dims, coin);
        for a in s.as_mut_slice() {
            *a = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
        let norm = s.norm_sqr().sqrt();
        for a in s.as_mut_slice() {
            *a /= norm;
        }
        s
    }

    #[test]
    fn initial_state_n12_m1() {
        let d = HypercubeDims::new(12).unwrap();
        let coin = make_coin_spec(WeightScheme::NOver, d, 1, 1).unwrap();
        let s = initial_state(d, &coin);
        let l: f64 = 12.0 / 4096.0;
        let edge = 1.0 / ((12.0 + l).sqrt() * 64.0);
        assert!((edge - 0.0045103).abs() < 1e-6);
        let looped = l.sqrt() / ((12.0 + l).sqrt() * 64.0);
        for x in [0, 17, 4095] {
            for c in 0..12 {
                assert!((s.amplitude(c, x).re - edge).abs() < 1e-15);
            }
            assert!((s.amplitude(12, x).re - looped).abs() < 1e-15);
        }
        assert!((s.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn initial_state_n3_m2_by_hand() {
        let d = HypercubeDims::new(3).unwrap();
        // l' = 0.5, l = 1.0: edge = 1/(2·√8), loop = √0.5/(2·√8)
        let coin = CoinSpec::new(d, 1.0, 2).unwrap();
        let s = initial_state(d, &coin);
        let edge = 1.0 / (2.0 * 8f64.sqrt());
        let looped = 0.5f64.sqrt() * edge;
        assert_eq!(s.len(), 40);
        for x in 0..8 {
            for c in 0..5 {
                let want = if c < 3 { edge } else { looped };
                assert!((s.amplitude(c, x) - Complex64::new(want, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn single_loop_matches_lqw_initial_state() {
        let d = HypercubeDims::new(5).unwrap();
        let l = 0.3;
        let coin = CoinSpec::new(d, l, 1).unwrap();
        let s = initial_state(d, &coin);
        let denom = (32f64).sqrt() * (5.0 + l).sqrt();
        for x in 0..32 {
            assert_eq!(s.amplitude(5, x).re, l.sqrt() / denom);
            assert_eq!(s.amplitude(0, x).re, 1.0 / denom);
        }
    }

    #[test]
    fn oracle_partial_inversion() {
        let d = HypercubeDims::new(4).unwrap();
        let coin = CoinSpec::new(d, 0.4, 4).unwrap();
        let oracle = OracleSpec::new(vec![6], 1).unwrap();
        let before = random_state(d, &coin, 1);
        let mut after = before.clone();
        apply_oracle(&mut after, &oracle, &coin).unwrap();
        for x in 0..16 {
            for c in 0..8 {
                let flipped = x == 6 && c < 5;
                let want = if flipped {
                    -before.amplitude(c, x)
                } else {
                    before.amplitude(c, x)
                };
                assert_eq!(after.amplitude(c, x), want, "c={c} x={x}");
            }
        }
        apply_oracle(&mut after, &oracle, &coin).unwrap();
        assert_eq!(after, before);
    }

    #[test]
    fn oracle_single_loop_full_inversion() {
        let d = HypercubeDims::new(3).unwrap();
        let coin = CoinSpec::new(d, 0.2, 1).unwrap();
        let oracle = OracleSpec::new(vec![5], 1).unwrap();
        let before = random_state(d, &coin, 2);
        let mut after = before.clone();
        apply_oracle(&mut after, &oracle, &coin).unwrap();
        for c in 0..4 {
            assert_eq!(after.amplitude(c, 5), -before.amplitude(c, 5));
        }
    }

    #[test]
    fn oracle_errors() {
        let d = HypercubeDims::new(3).unwrap();
        let coin = CoinSpec::new(d, 0.2, 2).unwrap();
        let mut s = initial_state(d, &coin);
        let far = OracleSpec::new(vec![8], 1).unwrap();
        assert!(apply_oracle(&mut s, &far, &coin).is_err());
        let too_many = OracleSpec::new(vec![1], 3).unwrap();
        assert!(apply_oracle(&mut s, &too_many, &coin).is_err());
        assert!(OracleSpec::new(vec![], 1).is_err());
        assert!(OracleSpec::new(vec![1, 2, 1], 1).is_err());
        assert!(OracleSpec::new(vec![1], 0).is_err());
    }

    #[test]
    fn coin_fixes_sc_and_negates_orthogonal() {
        let d = HypercubeDims::new(3).unwrap();
        let coin = CoinSpec::new(d, 0.7, 2).unwrap();
        let sc = coin.coin_state();
        let mut s = StateVector::zeros(d, &coin);
        for (c, &v) in sc.iter().enumerate() {
            s.set_amplitude(c, 4, Complex64::new(v, 0.0));
        }
        // orthogonal to s^C: e0 - e1
        s.set_amplitude(0, 2, Complex64::new(0.0, 1.0));
        s.set_amplitude(1, 2, Complex64::new(0.0, -1.0));
        let before = s.clone();
        apply_coin(&mut s, &coin);
        for c in 0..5 {
            assert!((s.amplitude(c, 4) - before.amplitude(c, 4)).norm() < 1e-15);
            assert!((s.amplitude(c, 2) + before.amplitude(c, 2)).norm() < 1e-15);
        }
    }

    #[test]
    fn shift_moves_along_edge() {
        let d = HypercubeDims::new(3).unwrap();
        let coin = CoinSpec::new(d, 0.5, 1).unwrap();
        let mut s = StateVector::zeros(d, &coin);
        s.set_amplitude(0, 0, Complex64::new(1.0, 0.0));
        s.set_amplitude(3, 6, Complex64::new(0.0, 1.0));
        apply_shift(&mut s, d);
        assert_eq!(s.amplitude(0, 1), Complex64::new(1.0, 0.0));
        assert_eq!(s.amplitude(0, 0), Complex64::new(0.0, 0.0));
        // self-loop untouched
        assert_eq!(s.amplitude(3, 6), Complex64::new(0.0, 1.0));
    }

    #[test]
    fn involutions() {
        let d = HypercubeDims::new(5).unwrap();
        let coin = CoinSpec::new(d, 0.3, 3).unwrap();
        let s0 = random_state(d, &coin, 9);
        let mut s = s0.clone();
        apply_shift(&mut s, d);
        assert_ne!(s, s0);
        apply_shift(&mut s, d);
        assert_eq!(s, s0);
        apply_coin(&mut s, &coin);
        apply_coin(&mut s, &coin);
        assert!(s.max_abs_diff(&s0) < 1e-12);
    }

    #[test]
    fn step_then_adjoint_round_trip() {
        let d = HypercubeDims::new(6).unwrap();
        let coin = CoinSpec::new(d, 0.2, 3).unwrap();
        let oracle = OracleSpec::new(vec![0, 1, 9], 2).unwrap();
        let s0 = initial_state(d, &coin);
        let mut s = s0.clone();
        for _ in 0..100 {
            step(&mut s, d, &coin, &oracle).unwrap();
            assert!((s.norm_sqr() - 1.0).abs() < 1e-12);
        }
        for _ in 0..100 {
            step_adjoint(&mut s, d, &coin, &oracle).unwrap();
        }
        assert!(s.max_abs_diff(&s0) < 1e-9);
    }

    #[test]
    fn success_probability_cases() {
        let d = HypercubeDims::new(4).unwrap();
        let coin = CoinSpec::new(d, 0.5, 2).unwrap();
        let oracle = OracleSpec::new(vec![3, 8, 12], 1).unwrap();
        let s = initial_state(d, &coin);
        assert!((success_probability(&s, &oracle) - 3.0 / 16.0).abs() < 1e-14);

        let mut conc = StateVector::zeros(d, &coin);
        conc.set_amplitude(1, 8, Complex64::new(0.6, 0.0));
        conc.set_amplitude(5, 12, Complex64::new(0.0, 0.8));
        assert!((success_probability(&conc, &oracle) - 1.0).abs() < 1e-14);

        let d3 = HypercubeDims::new(3).unwrap();
        let coin3 = CoinSpec::new(d3, 0.5, 2).unwrap();
        let r = random_state(d3, &coin3, 4);
        let pair = OracleSpec::new(vec![0, 1], 1).unwrap();
        let mut brute = 0.0;
        for (i, a) in r.as_slice().iter().enumerate() {
            if i / 5 == 0 || i / 5 == 1 {
                brute += a.re * a.re + a.im * a.im;
            }
        }
        assert!((success_probability(&r, &pair) - brute).abs() < 1e-15);
    }

    #[test]
    fn zero_budget_reports_initial_probability() {
        let d = HypercubeDims::new(12).unwrap();
        let coin = make_coin_spec(WeightScheme::NOver, d, 3, 2).unwrap();
        let oracle = OracleSpec::new(vec![0, 1, 2], 1).unwrap();
        let r = run_walk(d, &coin, &oracle, 0, true).unwrap();
        assert_eq!(r.t_max, 0);
        assert!((r.p_max - 3.0 / 4096.0).abs() < 1e-15);
        assert_eq!(r.p_history.unwrap().len(), 1);
    }

    #[test]
    fn history_is_consistent_with_maximum() {
        let d = HypercubeDims::new(6).unwrap();
        let coin = make_coin_spec(WeightScheme::N2Over, d, 2, 2).unwrap();
        let oracle = OracleSpec::new(vec![5, 40], 1).unwrap();
        let r = run_walk(d, &coin, &oracle, 80, true).unwrap();
        let h = r.p_history.as_ref().unwrap();
        assert_eq!(h.len(), 81);
        assert_eq!(h[r.t_max], r.p_max);
        assert!(h.iter().all(|&p| p <= r.p_max));
        assert!(h[..r.t_max].iter().all(|&p| p < r.p_max));
        assert!(r.t_peak <= r.t_max);
        // brute-force first qualifying local maximum
        let brute = (1..h.len() - 1)
            .find(|&t| h[t] >= PEAK_FRACTION * r.p_max && h[t] >= h[t - 1] && h[t] >= h[t + 1])
            .unwrap_or(r.t_max);
        assert_eq!(r.t_peak, brute.min(r.t_max));
    }

    #[test]
    fn budget_formula() {
        let d = HypercubeDims::new(12).unwrap();
        let coin = make_coin_spec(WeightScheme::NOver, d, 3, 1).unwrap();
        // (π/2)·√(4096·13/3) = 209.6.. -> 210, times 3
        assert_eq!(default_budget(d, &coin, 3, 3.0), 630);
        assert_eq!(default_budget(d, &coin, 3, 1.0), 210);
    }
}
