//! Induction from `H_n` to `H_{n+1}`: `Ind M(μ) = M(μ∪ω)`, its filtration by the
//! layers `SStd(S, μ∪ω)`, the quotient realization of `Ind S(μ)` and its Specht
//! filtration, a tensor-product cross-check, and the residue block decomposition.

mod blocks;
mod induced;
mod tensor;

pub use blocks::{block_decomposition, central_ops, i_induce, jm_matrix, BlockEntry};
pub use induced::{induced_specht, InducedCert, InducedModule, InnerEntry, OuterEntry, SubLayer};
pub use tensor::{compare_models, find_isomorphism, tensor_model};

use std::sync::Arc;

use serde::Serialize;

use crate::arith::Subspace;
use crate::cellular::{m_St, m_lambda};
use crate::combinatorics::{layer_order, layer_tableaux, MultiPartition, Node, SStdTableau, StdTableau};
use crate::error::{Error, Result};
use crate::hecke::{spin, Algebra, AlgebraElement, Params};
use crate::symgroup::interval_word;

/// Parameters of `H_{n+1}` sharing the field and parameters of `H_n`.
pub fn induced_params(params: &Params) -> Params {
    params.with_n(params.n + 1)
}

/// `h H_{n+1}` for `h` in `H_n`.
fn induced_right_ideal(params: &Params, h: &AlgebraElement) -> Result<(Arc<Algebra>, Subspace)> {
    let big = Algebra::get(&induced_params(params));
    let v = h.embed(&big)?.into_coeffs();
    let span = spin(&big, [v])?;
    Ok((big, span))
}

#[derive(Clone, Debug, Serialize)]
pub struct IndPermReport {
    pub mu: MultiPartition,
    /// `m_μ = m_{μ∪ω}` in `H_{n+1}`.
    pub element_identity: bool,
    /// `m_μ H_{n+1} = m_{μ∪ω} H_{n+1}`.
    pub equal: bool,
    pub dim: usize,
}

/// Compares `Ind M(μ) = m_μ H_{n+1}` with `M(μ∪ω)` inside `H_{n+1}`.
pub fn ind_perm_module(params: &Params, mu: &MultiPartition) -> Result<(Subspace, IndPermReport)> {
    let small = Algebra::get(params);
    let m = m_lambda(&small, mu)?;
    let (big, ind) = induced_right_ideal(params, &m)?;
    let mu_omega = mu.add_node(&mu.lowest_addable())?;
    let m_big = m_lambda(&big, &mu_omega)?;
    let element_identity = m.embed(&big)? == m_big;
    let perm = spin(&big, [m_big.into_coeffs()])?;
    let equal = ind.dim() == perm.dim() && ind.contains_subspace(&perm)?;
    let report = IndPermReport { mu: mu.clone(), element_identity, equal, dim: ind.dim() };
    Ok((ind, report))
}

/// `a^λ_e + λ^(e)_1 + .. + λ^(e)_r`: the position of the last node of row `r` of
/// component `e` in row-reading order.
pub fn bump_index(lambda: &MultiPartition, beta: &Node) -> usize {
    lambda.offset(beta.comp) + (1..=beta.row).map(|i| lambda.row_len(i, beta.comp)).sum::<usize>()
}

/// The same index with `a^λ_1 + .. + a^λ_e` in place of `a^λ_e`.
pub fn bump_index_printed(lambda: &MultiPartition, beta: &Node) -> usize {
    (1..=beta.comp).map(|s| lambda.offset(s)).sum::<usize>()
        + (1..=beta.row).map(|i| lambda.row_len(i, beta.comp)).sum::<usize>()
}

#[derive(Clone, Debug, Serialize)]
pub struct BumpReport {
    pub lambda: MultiPartition,
    pub beta: Node,
    pub a: usize,
    pub a_printed: usize,
    /// `T_{n-1,a+1} m_ν ∈ m_λ H_{n+1}`.
    pub prefix_n_minus_1: bool,
    /// `T_{n,a+1} m_ν ∈ m_λ H_{n+1}`.
    pub prefix_n: bool,
    /// Both prefixes with the printed index.
    pub printed_prefix_n_minus_1: bool,
    pub printed_prefix_n: bool,
}

impl BumpReport {
    /// The membership with the row-reading index and the cycle moving `a+1` to `n+1`.
    pub fn ok(&self) -> bool {
        self.prefix_n
    }
}

fn bump_reports(params: &Params, lambda: &MultiPartition, betas: &[Node]) -> Result<Vec<BumpReport>> {
    let small = Algebra::get(params);
    let (big, ideal) = induced_right_ideal(params, &m_lambda(&small, lambda)?)?;
    let n = params.n;
    let mut out = Vec::with_capacity(betas.len());
    for beta in betas {
        let nu = lambda.add_node(beta).map_err(|_| Error::NotAddable(format!("{beta:?} for {lambda}")))?;
        let m_nu = m_lambda(&big, &nu)?;
        let member = |top: usize, a: usize| -> Result<bool> {
            // T_{b,a} = 1 when b < a
            let word = if top > a { interval_word(top, a + 1) } else { Vec::new() };
            ideal.contains(m_nu.left_word(&word).coeffs())
        };
        let a = bump_index(lambda, beta);
        let a_printed = bump_index_printed(lambda, beta);
        out.push(BumpReport {
            lambda: lambda.clone(),
            beta: *beta,
            a,
            a_printed,
            prefix_n_minus_1: n >= 1 && member(n - 1, a)?,
            prefix_n: member(n, a)?,
            printed_prefix_n_minus_1: n >= 1 && member(n - 1, a_printed)?,
            printed_prefix_n: member(n, a_printed)?,
        });
    }
    Ok(out)
}

/// Membership of `T_{b,a+1} m_{λ∪β}` in `m_λ H_{n+1}` for one addable node.
pub fn verify_bump(params: &Params, lambda: &MultiPartition, beta: &Node) -> Result<BumpReport> {
    if !lambda.addable_nodes().contains(beta) {
        return Err(Error::NotAddable(format!("{beta:?} for {lambda}")));
    }
    Ok(bump_reports(params, lambda, &[*beta])?.remove(0))
}

/// [`verify_bump`] for every multipartition and every addable node.
pub fn verify_bump_all(params: &Params) -> Result<Vec<BumpReport>> {
    let mut out = Vec::new();
    for lambda in crate::combinatorics::all_multipartitions(params.ell, params.n) {
        out.extend(bump_reports(params, &lambda, &lambda.addable_nodes())?);
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosureReport {
    pub s: String,
    pub u: String,
    pub ok: bool,
}

fn closure_reports(params: &Params, s: &SStdTableau, us: &[SStdTableau]) -> Result<Vec<ClosureReport>> {
    let small = Algebra::get(params);
    let m_s = m_St(&small, s, &StdTableau::initial(s.shape()))?;
    let (big, ideal) = induced_right_ideal(params, &m_s)?;
    let mut out = Vec::with_capacity(us.len());
    for u in us {
        let m_u = m_St(&big, u, &StdTableau::initial(u.shape()))?;
        out.push(ClosureReport { s: s.compact(), u: u.compact(), ok: ideal.contains(m_u.coeffs())? });
    }
    Ok(out)
}

/// `m_{U t^ν} ∈ m_{S t^λ} H_{n+1}`.
pub fn verify_closure(params: &Params, s: &SStdTableau, u: &SStdTableau) -> Result<ClosureReport> {
    Ok(closure_reports(params, s, std::slice::from_ref(u))?.remove(0))
}

/// [`verify_closure`] for every `S` of type μ and every `U ∈ SStd(S, μ∪ω)`.
pub fn verify_closure_all(params: &Params, mu: &MultiPartition) -> Result<Vec<ClosureReport>> {
    let mut out = Vec::new();
    for s in layer_order(mu) {
        out.extend(closure_reports(params, &s, &layer_tableaux(&s))?);
    }
    Ok(out)
}

/// Shapes of `SStd(S_i, μ∪ω)` for each `S_i` in layer order: the outer layers of the
/// refined filtration of `M(μ∪ω)`, found without any linear algebra.
pub fn outer_layer_shapes(mu: &MultiPartition) -> Vec<(SStdTableau, Vec<SStdTableau>)> {
    layer_order(mu).into_iter().map(|s| {
        let us = layer_tableaux(&s);
        (s, us)
    }).collect()
}

#[cfg(test)]
mod tests;
