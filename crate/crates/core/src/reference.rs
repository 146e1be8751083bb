//! Dense matrix versions of the walk operators for tiny hypercubes.
//!
//! Everything here is built entry by entry from the operator definitions and
//! shares no code with [`crate::walk`] beyond the parameter types, so the two
//! can be checked against each other. Basis ordering is the engine's
//! vertex-major `|c, x⟩ ↦ x·(n+m) + c`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hypercube::HypercubeDims;
use crate::walk::{OracleSpec, StateVector};
use crate::weights::CoinSpec;

/// Largest total dimension `(n+m)·N` a dense operator may have.
pub const MAX_DENSE_DIM: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorLabel {
    Coin,
    Shift,
    Oracle,
    Step,
}

#[derive(Debug, Clone)]
pub struct DenseOperator {
    pub label: OperatorLabel,
    pub matrix: DMatrix<Complex64>,
}

const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

impl DenseOperator {
    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn adjoint(&self) -> DenseOperator {
        DenseOperator {
            label: self.label,
            matrix: self.matrix.adjoint(),
        }
    }

    /// `max |U†U − I|` over all entries.
    pub fn unitarity_defect(&self) -> f64 {
        let prod = self.matrix.adjoint() * &self.matrix;
        let id = DMatrix::<Complex64>::identity(self.dim(), self.dim());
        (prod - id).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn apply(&self, state: &StateVector) -> StateVector {
        assert_eq!(state.len(), self.dim(), "dimension mismatch");
        let v = DVector::from_column_slice(state.as_slice());
        let out = &self.matrix * v;
        StateVector::from_amplitudes(out.as_slice().to_vec(), state.coin_dim())
            .expect("same block structure as input")
    }
}

fn weighted_coin_vector(coin: &CoinSpec) -> Vec<f64> {
    let n = coin.n() as f64;
    let norm = (n + coin.l()).sqrt();
    let per_loop = coin.l() / coin.m() as f64;
    (0..coin.coin_dim())
        .map(|c| {
            if c < coin.n() {
                1.0 / norm
            } else {
                per_loop.sqrt() / norm
            }
        })
        .collect()
}

pub fn build_dense(
    label: OperatorLabel,
    dims: HypercubeDims,
    coin: &CoinSpec,
    oracle: Option<&OracleSpec>,
) -> Result<DenseOperator> {
    let d = coin.coin_dim();
    let n_vertices = dims.vertex_count();
    let total = d * n_vertices;
    if total > MAX_DENSE_DIM {
        return Err(Error::TooLarge {
            dim: total,
            limit: MAX_DENSE_DIM,
        });
    }
    let idx = |c: usize, x: usize| x * d + c;

    let matrix = match label {
        OperatorLabel::Coin => {
            let s = weighted_coin_vector(coin);
            let mut m = DMatrix::zeros(total, total);
            for x in 0..n_vertices {
                for i in 0..d {
                    for j in 0..d {
                        let delta = if i == j { 1.0 } else { 0.0 };
                        m[(idx(i, x), idx(j, x))] = Complex64::new(2.0 * s[i] * s[j] - delta, 0.0);
                    }
                }
            }
            m
        }
        OperatorLabel::Shift => {
            let mut m = DMatrix::zeros(total, total);
            for x in 0..n_vertices {
                for c in 0..d {
                    let target = if c < dims.dim() { x ^ (1 << c) } else { x };
                    m[(idx(c, target), idx(c, x))] = ONE;
                }
            }
            m
        }
        OperatorLabel::Oracle => {
            let mut m = DMatrix::identity(total, total);
            if let Some(o) = oracle {
                o.validate(dims, coin)?;
                for &w in o.marked() {
                    for c in 0..coin.n() + o.s() {
                        m[(idx(c, w as usize), idx(c, w as usize))] = -ONE;
                    }
                }
            }
            m
        }
        OperatorLabel::Step => {
            let q = build_dense(OperatorLabel::Oracle, dims, coin, oracle)?.matrix;
            let c = build_dense(OperatorLabel::Coin, dims, coin, oracle)?.matrix;
            let s = build_dense(OperatorLabel::Shift, dims, coin, oracle)?.matrix;
            s * c * q
        }
    };
    Ok(DenseOperator { label, matrix })
}

/// `t` successive matrix-vector products.
pub fn evolve_dense(op: &DenseOperator, state: &StateVector, t: usize) -> StateVector {
    (0..t).fold(state.clone(), |s, _| op.apply(&s))
}
