use serde::Serialize;

use super::{induced_params, induced_specht};
use crate::arith::{joint_generalized_eigenspaces, ExactMatrix, Scalar, Subspace};
use crate::combinatorics::{standard_tableaux, MultiPartition};
use crate::error::{Error, Result};
use crate::hecke::{ModuleRep, Params};

/// The matrix of `L_k` on a module: `L_1 = T_0`, `L_{i+1} = q^{-1} T_i L_i T_i`.
pub fn jm_matrix(rep: &ModuleRep, k: usize) -> Result<ExactMatrix> {
    let n = rep.generators.len();
    if k == 0 || k > n {
        return Err(Error::OutOfRange { index: k, range: format!("1..={n}") });
    }
    let q_inv = rep.params.q.inv().expect("q is invertible");
    let mut l = rep.generators[0].clone();
    for i in 1..k {
        let t = &rep.generators[i];
        l = t.mul(&l)?.mul(t)?.scale(&q_inv);
    }
    Ok(l)
}

fn elementary<T: Clone>(xs: &[T], one: T, zero: T, add: impl Fn(&T, &T) -> T, mul: impl Fn(&T, &T) -> T) -> Vec<T> {
    let mut e = vec![zero; xs.len() + 1];
    e[0] = one;
    for (i, x) in xs.iter().enumerate() {
        for j in (1..=i + 1).rev() {
            e[j] = add(&e[j], &mul(&e[j - 1], x));
        }
    }
    e.remove(0);
    e
}

/// `e_1(L), .., e_n(L)`, checked to commute with every generator.
pub fn central_ops(rep: &ModuleRep) -> Result<Vec<ExactMatrix>> {
    let field = rep.params.field;
    let d = rep.basis_labels.len();
    let ls = (1..=rep.generators.len()).map(|k| jm_matrix(rep, k)).collect::<Result<Vec<_>>>()?;
    let es = elementary(
        &ls,
        ExactMatrix::identity(field, d),
        ExactMatrix::zeros(field, d, d),
        |a, b| a.add(b).expect("square"),
        |a, b| a.mul(b).expect("square"),
    );
    for (j, e) in es.iter().enumerate() {
        for (g, t) in rep.generators.iter().enumerate() {
            if e.mul(t)? != t.mul(e)? {
                return Err(Error::NonCommuting(j + 1, g));
            }
        }
    }
    Ok(es)
}

/// The values of `e_1, .., e_n` on a multiset of residues.
pub fn residue_character(residues: &[Scalar]) -> Vec<Scalar> {
    let Some(f) = residues.first().map(|r| r.field()) else {
        return Vec::new();
    };
    elementary(residues, f.one(), f.zero(), |a, b| a + b, |a, b| a * b)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockEntry {
    pub residue: Scalar,
    pub dim: usize,
    pub expected_dim: usize,
}

fn components(
    params: &Params,
    mu: &MultiPartition,
    rep: &ModuleRep,
    extra: Option<&Scalar>,
) -> Result<(Vec<BlockEntry>, Vec<Subspace>, bool)> {
    let ops = central_ops(rep)?;
    let base = mu.residues(params);
    let mut residues: Vec<Scalar> = Vec::new();
    let mut expected: Vec<usize> = Vec::new();
    for alpha in mu.addable_nodes() {
        let r = alpha.residue(params);
        let k = standard_tableaux(&mu.add_node(&alpha)?).len();
        match residues.iter().position(|x| x == &r) {
            Some(i) => expected[i] += k,
            None => {
                residues.push(r);
                expected.push(k);
            }
        }
    }
    if let Some(i) = extra {
        if !residues.contains(i) {
            residues.push(i.clone());
            expected.push(0);
        }
    }
    let candidates: Vec<Vec<Scalar>> = residues
        .iter()
        .map(|r| {
            let mut all = base.clone();
            all.push(r.clone());
            residue_character(&all)
        })
        .collect();
    let dec = joint_generalized_eigenspaces(&ops, &candidates)?;
    let mut entries = Vec::with_capacity(residues.len());
    let mut spaces = Vec::with_capacity(residues.len());
    for ((r, e), (_, space)) in residues.into_iter().zip(expected).zip(dec.components) {
        entries.push(BlockEntry { residue: r, dim: space.dim(), expected_dim: e });
        spaces.push(space);
    }
    Ok((entries, spaces, dec.complete))
}

/// Generalized eigenspaces of the central operators on `Ind S(μ)`, one per residue of
/// an addable node, with the dimension predicted by the addable nodes of that residue.
/// The flag says whether the components exhaust the module.
pub fn block_decomposition(params: &Params, mu: &MultiPartition, rep: &ModuleRep) -> Result<(Vec<BlockEntry>, bool)> {
    let (entries, _, complete) = components(params, mu, rep, None)?;
    Ok((entries, complete))
}

/// The `i`-component of `Ind S(μ)` and whether its dimension is the sum of `#Std(μ∪α)`
/// over addable `α` of residue `i`, with all components exhausting the module.
pub fn i_induce(params: &Params, mu: &MultiPartition, i: &Scalar) -> Result<(Subspace, bool)> {
    let (quotient, _) = induced_specht(params, mu)?;
    let Some(rep) = quotient else {
        return Err(Error::Singular(format!("no quotient model for Ind S({mu})")));
    };
    debug_assert_eq!(rep.params, induced_params(params));
    let (entries, spaces, complete) = components(params, mu, &rep, Some(i))?;
    let k = entries.iter().position(|e| &e.residue == i).expect("candidate added");
    let ok = complete && entries.iter().all(|e| e.dim == e.expected_dim);
    Ok((spaces[k].clone(), ok))
}
