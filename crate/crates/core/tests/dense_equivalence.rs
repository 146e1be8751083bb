//! Structured engine against explicit matrices on small hypercubes.

use lackwalk::reference::{build_dense, evolve_dense, OperatorLabel};
use lackwalk::walk::{apply_coin, apply_oracle, apply_shift, initial_state, step};
use lackwalk::{CoinSpec, HypercubeDims, OracleSpec, StateVector};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_state(len: usize, coin_dim: usize, seed: u64) -> StateVector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v: Vec<Complex64> = (0..len)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let norm = v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    v.iter_mut().for_each(|a| *a /= norm);
    StateVector::from_amplitudes(v, coin_dim).unwrap()
}

#[test]
fn coin_matches_dense_n3_m2() {
    let d = HypercubeDims::new(3).unwrap();
    let coin = CoinSpec::new(d, 0.37, 2).unwrap();
    let psi = random_state(40, 5, 11);
    let dense = build_dense(OperatorLabel::Coin, d, &coin, None).unwrap();
    let mut fast = psi.clone();
    apply_coin(&mut fast, &coin);
    assert!(fast.max_abs_diff(&dense.apply(&psi)) < 1e-12);
}

#[test]
fn shift_matches_dense_n3_m1() {
    let d = HypercubeDims::new(3).unwrap();
    let coin = CoinSpec::new(d, 0.5, 1).unwrap();
    let psi = random_state(32, 4, 12);
    let dense = build_dense(OperatorLabel::Shift, d, &coin, None).unwrap();
    let mut fast = psi.clone();
    apply_shift(&mut fast, d);
    assert_eq!(fast.max_abs_diff(&dense.apply(&psi)), 0.0);
}

#[test]
fn oracle_matches_dense() {
    let d = HypercubeDims::new(3).unwrap();
    let coin = CoinSpec::new(d, 0.5, 3).unwrap();
    let o = OracleSpec::new(vec![1, 6], 2).unwrap();
    let psi = random_state(48, 6, 13);
    let dense = build_dense(OperatorLabel::Oracle, d, &coin, Some(&o)).unwrap();
    let mut fast = psi.clone();
    apply_oracle(&mut fast, &o, &coin).unwrap();
    assert_eq!(fast.max_abs_diff(&dense.apply(&psi)), 0.0);
}

#[test]
fn one_step_from_initial_state() {
    let d = HypercubeDims::new(3).unwrap();
    let coin = CoinSpec::new(d, 3.0 * 3.0 / 8.0, 2).unwrap();
    let o = OracleSpec::new(vec![0], 1).unwrap();
    let psi0 = initial_state(d, &coin);
    let dense = build_dense(OperatorLabel::Step, d, &coin, Some(&o)).unwrap();
    let mut fast = psi0.clone();
    step(&mut fast, d, &coin, &o).unwrap();
    assert!(fast.max_abs_diff(&dense.apply(&psi0)) < 1e-14);
}

#[test]
fn twenty_five_steps_two_marked() {
    let d = HypercubeDims::new(3).unwrap();
    let coin = CoinSpec::new(d, 0.8, 2).unwrap();
    let o = OracleSpec::new(vec![0, 3], 1).unwrap();
    let psi0 = initial_state(d, &coin);
    let dense = build_dense(OperatorLabel::Step, d, &coin, Some(&o)).unwrap();
    let mut fast = psi0.clone();
    for _ in 0..25 {
        step(&mut fast, d, &coin, &o).unwrap();
    }
    assert!(fast.max_abs_diff(&evolve_dense(&dense, &psi0, 25)) < 1e-10);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_configurations_agree(
        n in 2u32..=4,
        m in 1usize..=3,
        s_raw in 1usize..=3,
        k in 1usize..=3,
        l in 0.01f64..2.0,
        seed in any::<u64>(),
    ) {
        let s = s_raw.min(m);
        let d = HypercubeDims::new(n).unwrap();
        let coin = CoinSpec::new(d, l, m).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut marked = Vec::new();
        while marked.len() < k {
            let v = rng.gen_range(0..d.vertex_count() as u32);
            if !marked.contains(&v) {
                marked.push(v);
            }
        }
        let o = OracleSpec::new(marked, s).unwrap();
        let psi = random_state(coin.coin_dim() * d.vertex_count(), coin.coin_dim(), seed ^ 0x5eed);
        let dense = build_dense(OperatorLabel::Step, d, &coin, Some(&o)).unwrap();
        let mut fast = psi.clone();
        for _ in 0..20 {
            step(&mut fast, d, &coin, &o).unwrap();
        }
        let slow = evolve_dense(&dense, &psi, 20);
        prop_assert!(fast.max_abs_diff(&slow) < 1e-10);
    }
}
