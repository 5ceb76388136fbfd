use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use super::{m_lambda, specht_rep};
use crate::arith::{ExactMatrix, Frame, Scalar, Subspace};
use crate::combinatorics::{layer_order, standard_tableaux, MultiPartition, SStdTableau, StdTableau};
use crate::error::{Error, Result};
use crate::hecke::{spin, Algebra, AlgebraElement, ModuleRep, Params};

/// `M(μ) = m_μ H_n` inside the regular module, with its semistandard basis.
pub struct PermModule {
    pub mu: MultiPartition,
    /// Semistandard tableaux of type μ in layer order.
    pub layers: Vec<SStdTableau>,
    /// Standard tableaux of each layer's shape.
    pub tableaux: Vec<Vec<StdTableau>>,
    /// `m_{St}` in Ariki-Koike coordinates, indexed `[layer][t]`.
    pub vectors: Vec<Vec<Vec<Scalar>>>,
    /// Row space of `m_μ H_n`.
    pub span: Subspace,
    /// Right action on the semistandard basis, flattened in layer order.
    pub rep: ModuleRep,
    frame: Frame,
}

impl PermModule {
    /// Position of the first basis vector of each layer, plus the total.
    pub fn layer_offsets(&self) -> Vec<usize> {
        let mut out = vec![0];
        for ts in &self.tableaux {
            out.push(out.last().unwrap() + ts.len());
        }
        out
    }

    /// Coordinates on the semistandard basis, or `None` outside `M(μ)`.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        self.frame.coordinates(v)
    }
}

/// `m_{St}` for every semistandard `S` of type μ and every `t`, grouped as in [`layer_order`].
pub(crate) fn semistandard_vectors(
    alg: &Arc<Algebra>,
    mu: &MultiPartition,
    layers: &[SStdTableau],
) -> Result<Vec<Vec<Vec<Scalar>>>> {
    let mut index: HashMap<String, usize> = HashMap::new();
    for (i, s) in layers.iter().enumerate() {
        index.insert(serde_json::to_string(s)?, i);
    }
    let mut out: Vec<Vec<Vec<Scalar>>> = layers
        .iter()
        .map(|s| vec![vec![alg.field().zero(); alg.dim()]; standard_tableaux(s.shape()).len()])
        .collect();
    let mut shapes: Vec<&MultiPartition> = Vec::new();
    for s in layers {
        if !shapes.contains(&s.shape()) {
            shapes.push(s.shape());
        }
    }
    for lam in shapes {
        let ts = standard_tableaux(lam);
        let m = m_lambda(alg, lam)?;
        let rights: Vec<AlgebraElement> = ts.iter().map(|t| m.right_word(&t.d_perm().reduced_word())).collect();
        for s in &ts {
            let key = serde_json::to_string(&s.type_map(mu)?)?;
            let Some(&i) = index.get(&key) else {
                continue;
            };
            let word = s.d_perm().inverse().reduced_word();
            for (j, r) in rights.iter().enumerate() {
                let v = r.left_word(&word);
                for (acc, x) in out[i][j].iter_mut().zip(v.coeffs()) {
                    *acc = &*acc + x;
                }
            }
        }
    }
    Ok(out)
}

/// Builds `M(μ)` and checks that the `m_{St}` are a basis of it.
pub fn perm_module(params: &Params, mu: &MultiPartition) -> Result<PermModule> {
    let alg = Algebra::get(params);
    let m = m_lambda(&alg, mu)?;
    let span = spin(&alg, [m.coeffs().to_vec()])?;
    let layers = layer_order(mu);
    let tableaux: Vec<Vec<StdTableau>> = layers.iter().map(|s| standard_tableaux(s.shape())).collect();
    let vectors = semistandard_vectors(&alg, mu, &layers)?;
    let mut frame = Frame::new(params.field, alg.dim());
    for v in vectors.iter().flatten() {
        if !span.contains(v)? {
            return Err(Error::Singular(format!("an m_St of type {mu} lies outside M({mu})")));
        }
        frame.push(v.clone())?;
    }
    if frame.len() != span.dim() {
        return Err(Error::Singular(format!("{} semistandard vectors for dim M({mu}) = {}", frame.len(), span.dim())));
    }
    let flat: Vec<&Vec<Scalar>> = vectors.iter().flatten().collect();
    let d = flat.len();
    let mut gens = Vec::with_capacity(alg.num_generators());
    for g in 0..alg.num_generators() {
        let mut rows = Vec::with_capacity(d);
        for v in &flat {
            let c = frame.coordinates(&alg.right_act(v, g))?.ok_or_else(|| Error::Singular(format!("M({mu}) not closed")))?;
            rows.push(c);
        }
        gens.push(ExactMatrix::from_rows(params.field, d, rows)?);
    }
    let mut labels = Vec::with_capacity(d);
    for (s, ts) in layers.iter().zip(&tableaux) {
        for t in ts {
            labels.push(format!("{}|{}", s.compact(), serde_json::to_string(t)?));
        }
    }
    let rep = ModuleRep::new(params.clone(), labels, gens)?;
    Ok(PermModule { mu: mu.clone(), layers, tableaux, vectors, span, rep, frame })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainEntry {
    pub layer_index: usize,
    pub shape: MultiPartition,
    pub tableau: String,
    /// Dimension of `M_i`.
    pub dim: usize,
    pub closed: bool,
    pub iso_checked: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationCert {
    pub chain: Vec<ChainEntry>,
    pub ok: bool,
}

/// The filtration `M_i = span{m_{S_j t} : j <= i}` of `M(μ)` with `M_i/M_{i-1} ≅ S(λ_i)`.
///
/// Closure and the intertwiner are both read off the coordinates of `m_{S_i t} T_g`
/// on the semistandard basis: closure means no support beyond layer `i`, and the
/// block at layer `i` must equal the Specht matrix.
pub fn djm_filtration(params: &Params, mu: &MultiPartition) -> Result<FiltrationCert> {
    let pm = perm_module(params, mu)?;
    let offsets = pm.layer_offsets();
    let mut spechts: HashMap<MultiPartition, ModuleRep> = HashMap::new();
    let mut chain = Vec::with_capacity(pm.layers.len());
    let mut below_closed = true;
    for (i, s) in pm.layers.iter().enumerate() {
        let sp = match spechts.get(s.shape()) {
            Some(r) => r.clone(),
            None => {
                let r = specht_rep(params, s.shape())?;
                spechts.insert(s.shape().clone(), r.clone());
                r
            }
        };
        let (lo, hi) = (offsets[i], offsets[i + 1]);
        let mut closed = below_closed;
        let mut iso = true;
        for (g, mat) in pm.rep.generators.iter().enumerate() {
            for r in lo..hi {
                let row = mat.row(r);
                if row[hi..].iter().any(|x| !x.is_zero()) {
                    closed = false;
                }
                if row[lo..hi] != *sp.generators[g].row(r - lo) {
                    iso = false;
                }
            }
        }
        below_closed = closed;
        chain.push(ChainEntry {
            layer_index: i + 1,
            shape: s.shape().clone(),
            tableau: s.compact(),
            dim: hi,
            closed,
            iso_checked: iso && hi - lo == sp.basis_labels.len(),
        });
    }
    let ok = chain.iter().all(|c| c.closed && c.iso_checked);
    Ok(FiltrationCert { chain, ok })
}
