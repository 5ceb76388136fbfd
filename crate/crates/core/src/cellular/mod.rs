//! The Murphy-type cellular basis `m_st`, Specht modules, permutation modules
//! and their semistandard filtrations.

mod filtration;

pub use filtration::{djm_filtration, perm_module, ChainEntry, FiltrationCert, PermModule};
pub(crate) use filtration::semistandard_vectors;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::arith::{ExactMatrix, Scalar};
use crate::cache;
use crate::combinatorics::{all_multipartitions, standard_tableaux, MultiPartition, SStdTableau, StdTableau};
use crate::error::{Error, Result};
use crate::hecke::{Algebra, AlgebraElement, ModuleRep, Params};
use crate::symgroup::parabolic_elements;

/// `u_λ^+ = prod_{s=2}^ℓ prod_{k=1}^{a_s} (L_k - Q_s)`.
pub fn u_plus(alg: &Arc<Algebra>, lambda: &MultiPartition) -> Result<AlgebraElement> {
    check_shape(alg, lambda)?;
    let p = alg.params();
    let mut acc = AlgebraElement::one(alg);
    for s in 2..=p.ell {
        for k in 1..=lambda.offset(s) {
            acc = acc.mul(&AlgebraElement::l_elem(alg, k)?.minus_scalar(&p.big_q[s - 1]))?;
        }
    }
    Ok(acc)
}

/// `x_λ = sum_{w in S_λ} T_w`.
pub fn x_lambda(alg: &Arc<Algebra>, lambda: &MultiPartition) -> Result<AlgebraElement> {
    check_shape(alg, lambda)?;
    let mut acc = AlgebraElement::zero(alg);
    for w in parabolic_elements(lambda, alg.n())? {
        acc = acc.add(&AlgebraElement::t_w(alg, &w)?)?;
    }
    Ok(acc)
}

/// `m_λ = u_λ^+ x_λ`.
pub fn m_lambda(alg: &Arc<Algebra>, lambda: &MultiPartition) -> Result<AlgebraElement> {
    u_plus(alg, lambda)?.mul(&x_lambda(alg, lambda)?)
}

fn check_shape(alg: &Arc<Algebra>, lambda: &MultiPartition) -> Result<()> {
    if lambda.ell() != alg.params().ell || lambda.size() != alg.n() {
        return Err(Error::InvalidMultiPartition(format!("{lambda} is not in Λ⁺ for ℓ={}, n={}", alg.params().ell, alg.n())));
    }
    Ok(())
}

/// `m_st = T_{d(s)}^* m_λ T_{d(t)}`.
pub fn m_st(alg: &Arc<Algebra>, s: &StdTableau, t: &StdTableau) -> Result<AlgebraElement> {
    if s.shape() != t.shape() {
        return Err(Error::InvalidMultiPartition(format!("shapes {} and {} differ", s.shape(), t.shape())));
    }
    let right = m_lambda(alg, t.shape())?.right_word(&t.d_perm().reduced_word());
    Ok(right.left_word(&s.d_perm().inverse().reduced_word()))
}

/// `m_{St} = sum_{s : μ(s) = S} m_st`.
#[allow(non_snake_case)]
pub fn m_St(alg: &Arc<Algebra>, big_s: &SStdTableau, t: &StdTableau) -> Result<AlgebraElement> {
    if big_s.shape() != t.shape() {
        return Err(Error::InvalidMultiPartition(format!("shapes {} and {} differ", big_s.shape(), t.shape())));
    }
    let right = m_lambda(alg, t.shape())?.right_word(&t.d_perm().reduced_word());
    let mut acc = AlgebraElement::zero(alg);
    for s in standard_tableaux(t.shape()) {
        if &s.type_map(big_s.ty())? == big_s {
            acc = acc.add(&right.left_word(&s.d_perm().inverse().reduced_word()))?;
        }
    }
    Ok(acc)
}

/// The basis `{m_st}` of `H_n`, grouped by shape with the most dominant shapes first,
/// with its change of basis to Ariki-Koike coordinates.
pub struct CellularBasis {
    params: Params,
    shapes: Vec<MultiPartition>,
    tableaux: Vec<Vec<StdTableau>>,
    /// Position of the first triple of each shape.
    offsets: Vec<usize>,
    /// Rows are the `m_st` in Ariki-Koike coordinates.
    matrix: ExactMatrix,
    inverse: ExactMatrix,
}

#[derive(Serialize, Deserialize)]
struct CellularPayload {
    matrix: ExactMatrix,
    inverse: ExactMatrix,
}

static CELLULAR: OnceLock<Mutex<HashMap<Params, Arc<CellularBasis>>>> = OnceLock::new();

impl CellularBasis {
    /// The shared cellular basis, built on first use or read from the disk cache.
    pub fn get(params: &Params) -> Result<Arc<CellularBasis>> {
        let reg = CELLULAR.get_or_init(|| Mutex::new(HashMap::new()));
        let mut map = reg.lock().expect("cellular registry poisoned");
        if let Some(c) = map.get(params) {
            return Ok(c.clone());
        }
        let c = Arc::new(CellularBasis::build(params)?);
        map.insert(params.clone(), c.clone());
        Ok(c)
    }

    fn build(params: &Params) -> Result<CellularBasis> {
        let alg = Algebra::get(params);
        let shapes = all_multipartitions(params.ell, params.n);
        let tableaux: Vec<Vec<StdTableau>> = shapes.iter().map(standard_tableaux).collect();
        let mut offsets = Vec::with_capacity(shapes.len());
        let mut total = 0;
        for ts in &tableaux {
            offsets.push(total);
            total += ts.len() * ts.len();
        }
        let payload = match cache::load::<CellularPayload>(params, "cellular") {
            Some(p) if p.matrix.rows() == alg.dim() && p.inverse.rows() == alg.dim() => p,
            _ => {
                let mut rows = Vec::with_capacity(alg.dim());
                for (lam, ts) in shapes.iter().zip(&tableaux) {
                    let m = m_lambda(&alg, lam)?;
                    let rights: Vec<AlgebraElement> = ts.iter().map(|t| m.right_word(&t.d_perm().reduced_word())).collect();
                    for s in ts {
                        let word = s.d_perm().inverse().reduced_word();
                        for r in &rights {
                            rows.push(r.left_word(&word).into_coeffs());
                        }
                    }
                }
                if rows.len() != alg.dim() {
                    return Err(Error::Singular(format!("{} cellular triples for dimension {}", rows.len(), alg.dim())));
                }
                let matrix = ExactMatrix::from_rows(params.field, alg.dim(), rows)?;
                let inverse = matrix.inverse().ok_or_else(|| Error::Singular("cellular change of basis".into()))?;
                let payload = CellularPayload { matrix, inverse };
                if let Err(e) = cache::store(params, "cellular", &payload) {
                    log::warn!("could not cache the cellular basis: {e}");
                }
                payload
            }
        };
        Ok(CellularBasis { params: params.clone(), shapes, tableaux, offsets, matrix: payload.matrix, inverse: payload.inverse })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn shapes(&self) -> &[MultiPartition] {
        &self.shapes
    }

    pub fn tableaux(&self, shape: usize) -> &[StdTableau] {
        &self.tableaux[shape]
    }

    pub fn len(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn shape_index(&self, lambda: &MultiPartition) -> Option<usize> {
        self.shapes.iter().position(|s| s == lambda)
    }

    /// Position of the triple `(λ, s, t)` given by indices into [`CellularBasis::tableaux`].
    pub fn position(&self, shape: usize, s: usize, t: usize) -> usize {
        let k = self.tableaux[shape].len();
        self.offsets[shape] + s * k + t
    }

    /// The triple at a position.
    pub fn triple(&self, pos: usize) -> (usize, usize, usize) {
        let shape = self.offsets.partition_point(|&o| o <= pos) - 1;
        let k = self.tableaux[shape].len();
        let r = pos - self.offsets[shape];
        (shape, r / k, r % k)
    }

    /// `m_st` in Ariki-Koike coordinates.
    pub fn element(&self, pos: usize) -> &[Scalar] {
        self.matrix.row(pos)
    }

    /// Coefficients of `h` on the cellular basis.
    pub fn to_cellular(&self, h: &[Scalar]) -> Vec<Scalar> {
        self.inverse.apply(h)
    }

    /// Change of basis: rows are the `m_st`.
    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }
}

/// The Specht module `S(λ)` on the basis `m_t = m_{t^λ t} + H_n(λ)`, `t` in reading-word order.
pub fn specht_rep(params: &Params, lambda: &MultiPartition) -> Result<ModuleRep> {
    let alg = Algebra::get(params);
    check_shape(&alg, lambda)?;
    let cb = CellularBasis::get(params)?;
    let si = cb.shape_index(lambda).expect("every multipartition has a cell");
    let ts = cb.tableaux(si);
    let k = ts.len();
    let top = &cb.shapes()[si];
    let mut gens = Vec::with_capacity(alg.num_generators());
    for g in 0..alg.num_generators() {
        let mut m = ExactMatrix::zeros(params.field, k, k);
        for j in 0..k {
            let v = alg.right_act(cb.element(cb.position(si, 0, j)), g);
            let c = cb.to_cellular(&v);
            for (pos, x) in c.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let (sh, a, b) = cb.triple(pos);
                if sh == si && a == 0 {
                    m.set(j, b, x.clone());
                } else if !cb.shapes()[sh].strictly_dominates(top)? {
                    return Err(Error::Singular(format!("m_(t^λ t) T_{g} leaves the cell of {lambda} at triple {pos}")));
                }
            }
        }
        gens.push(m);
    }
    debug_assert!(ts.first().map(|t| t == &StdTableau::initial(lambda)).unwrap_or(true));
    let labels = ts.iter().map(|t| serde_json::to_string(t).expect("tableau serializes")).collect();
    ModuleRep::new(params.clone(), labels, gens)
}

/// Whether `v` is a combination of `m_st` with shapes strictly dominating `λ`.
pub fn in_higher_ideal(cb: &CellularBasis, lambda: &MultiPartition, v: &[Scalar]) -> Result<bool> {
    let c = cb.to_cellular(v);
    for (pos, x) in c.iter().enumerate() {
        if !x.is_zero() && !cb.shapes()[cb.triple(pos).0].strictly_dominates(lambda)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `v` lies in the span of the cellular basis elements of the given shapes.
pub fn supported_on(cb: &CellularBasis, shapes: &[usize], v: &[Scalar]) -> bool {
    let c = cb.to_cellular(v);
    c.iter().enumerate().all(|(pos, x)| x.is_zero() || shapes.contains(&cb.triple(pos).0))
}

#[cfg(test)]
mod tests;
