use super::{ExactMatrix, Scalar, Subspace};
use crate::error::{Error, Result};

/// Joint generalized eigenspaces of commuting operators acting on row vectors.
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub components: Vec<(Vec<Scalar>, Subspace)>,
    /// True when the component dimensions add up to the ambient dimension.
    pub complete: bool,
}

/// For each candidate tuple `(c_1, .., c_k)` returns the intersection over `j` of
/// `{v : v (A_j - c_j)^N = 0}` with `N` at least the ambient dimension.
pub fn joint_generalized_eigenspaces(
    ops: &[ExactMatrix],
    candidates: &[Vec<Scalar>],
) -> Result<EigenDecomposition> {
    let Some(first) = ops.first() else {
        return Err(Error::InvalidParams("no operators".into()));
    };
    let n = first.rows();
    let field = first.field();
    for op in ops {
        if !op.is_square() {
            return Err(Error::NotSquare { rows: op.rows(), cols: op.cols() });
        }
        if op.rows() != n {
            return Err(Error::DimensionMismatch { expected: n, got: op.rows() });
        }
    }
    for i in 0..ops.len() {
        for j in i + 1..ops.len() {
            if ops[i].mul(&ops[j])? != ops[j].mul(&ops[i])? {
                return Err(Error::NonCommuting(i, j));
            }
        }
    }
    for (i, c) in candidates.iter().enumerate() {
        if c.len() != ops.len() {
            return Err(Error::DimensionMismatch { expected: ops.len(), got: c.len() });
        }
        if candidates[..i].contains(c) {
            return Err(Error::DuplicateCandidates);
        }
    }
    // Kernels of powers stabilise by exponent n, so any power of two >= n works.
    let squarings = (n.max(1) as u64).next_power_of_two().trailing_zeros();
    let mut components = Vec::with_capacity(candidates.len());
    let mut total = 0;
    for cand in candidates {
        let mut stacked: Option<ExactMatrix> = None;
        for (op, c) in ops.iter().zip(cand) {
            let mut b = op.shift(c)?;
            for _ in 0..squarings {
                b = b.mul(&b)?;
            }
            stacked = Some(match stacked {
                None => b,
                Some(s) => s.hcat(&b)?,
            });
        }
        let kernel = stacked.expect("at least one operator").left_kernel();
        let space = Subspace::span(field, n, kernel)?;
        total += space.dim();
        components.push((cand.clone(), space));
    }
    Ok(EigenDecomposition { components, complete: total == n })
}
