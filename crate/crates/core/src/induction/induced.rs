use std::collections::HashMap;

use serde::Serialize;

use super::{block_decomposition, compare_models, ind_perm_module, induced_params, BlockEntry};
use crate::arith::{ExactMatrix, Frame};
use crate::cellular::{semistandard_vectors, specht_rep, m_lambda};
use crate::combinatorics::{layer_order, layer_tableaux, standard_tableaux, MultiPartition, Node, SStdTableau};
use crate::error::{Error, Result};
use crate::hecke::{spin, Algebra, ModuleRep, Params};

/// `M(μ∪ω)` on the basis `m_{Uv}`, `U` running over `SStd(S_1, μ∪ω), SStd(S_2, μ∪ω), ..`
/// with each `SStd(S_i, μ∪ω)` in decreasing order of the added node.
pub struct InducedModule {
    /// Parameters of `H_n`.
    pub params: Params,
    pub big: Params,
    pub mu: MultiPartition,
    pub omega: Node,
    pub mu_omega: MultiPartition,
    pub outer: Vec<SStdTableau>,
    pub inner: Vec<Vec<SStdTableau>>,
    /// `ranges[i][u]` is the range of basis positions of `m_{Uv}` for the `u`-th tableau of layer `i`.
    pub ranges: Vec<Vec<(usize, usize)>>,
    /// Action of `H_{n+1}` on the basis; `None` if the `m_{Uv}` are not a basis of `M(μ∪ω)`.
    pub rep: Option<ModuleRep>,
    /// `Ind M(μ) = M(μ∪ω)` as subspaces and `m_μ = m_{μ∪ω}`.
    pub ind_perm_ok: bool,
    pub perm_dim: usize,
}

impl InducedModule {
    pub fn build(params: &Params, mu: &MultiPartition) -> Result<InducedModule> {
        let big = induced_params(params);
        let alg = Algebra::get(&big);
        let omega = mu.lowest_addable();
        let mu_omega = mu.add_node(&omega)?;
        let (_, report) = ind_perm_module(params, mu)?;
        let ind_perm_ok = report.equal && report.element_identity;
        let perm = spin(&alg, [m_lambda(&alg, &mu_omega)?.into_coeffs()])?;

        let outer = layer_order(mu);
        let inner: Vec<Vec<SStdTableau>> = outer.iter().map(layer_tableaux).collect();
        let flat: Vec<SStdTableau> = inner.iter().flatten().cloned().collect();
        let vectors = semistandard_vectors(&alg, &mu_omega, &flat)?;
        let mut ranges = Vec::with_capacity(inner.len());
        let mut pos = 0;
        for us in &inner {
            let mut r = Vec::with_capacity(us.len());
            for u in us {
                let k = standard_tableaux(u.shape()).len();
                r.push((pos, pos + k));
                pos += k;
            }
            ranges.push(r);
        }

        let mut frame = Frame::new(big.field, alg.dim());
        let mut basis_ok = true;
        for v in vectors.iter().flatten() {
            if !perm.contains(v)? || frame.push(v.clone()).is_err() {
                basis_ok = false;
                break;
            }
        }
        basis_ok &= frame.len() == perm.dim();
        let rep = if basis_ok {
            let flat_vecs: Vec<_> = vectors.iter().flatten().collect();
            let mut gens = Vec::with_capacity(alg.num_generators());
            for g in 0..alg.num_generators() {
                let mut rows = Vec::with_capacity(pos);
                for v in &flat_vecs {
                    let c = frame
                        .coordinates(&alg.right_act(v, g))?
                        .ok_or_else(|| Error::Singular(format!("M({mu_omega}) is not closed")))?;
                    rows.push(c);
                }
                gens.push(ExactMatrix::from_rows(big.field, pos, rows)?);
            }
            let mut labels = Vec::with_capacity(pos);
            for u in &flat {
                for t in standard_tableaux(u.shape()) {
                    labels.push(format!("{}|{}", u.compact(), serde_json::to_string(&t)?));
                }
            }
            Some(ModuleRep::new(big.clone(), labels, gens)?)
        } else {
            None
        };
        Ok(InducedModule {
            params: params.clone(),
            big,
            mu: mu.clone(),
            omega,
            mu_omega,
            outer,
            inner,
            ranges,
            rep,
            ind_perm_ok,
            perm_dim: perm.dim(),
        })
    }

    /// End of the block of outer layer `i`.
    fn layer_end(&self, i: usize) -> usize {
        self.ranges[i].last().map(|r| r.1).unwrap_or_else(|| if i == 0 { 0 } else { self.layer_end(i - 1) })
    }

    fn layer_start(&self, i: usize) -> usize {
        if i == 0 { 0 } else { self.layer_end(i - 1) }
    }

    /// Whether rows `lo..hi` of every generator vanish from column `hi` on.
    fn rows_closed(rep: &ModuleRep, lo: usize, hi: usize) -> bool {
        rep.generators.iter().all(|g| (lo..hi).all(|r| g.row(r)[hi..].iter().all(|x| x.is_zero())))
    }

    /// The outer chain `N_1 ⊂ .. ⊂ N_m` and its refinement.
    pub fn outer_entries(&self) -> Vec<OuterEntry> {
        let f = self.params.ell * (self.params.n + 1);
        let mut out = Vec::with_capacity(self.outer.len());
        let mut below = true;
        for (i, s) in self.outer.iter().enumerate() {
            let (lo, hi) = (self.layer_start(i), self.layer_end(i));
            let closed = below && self.rep.as_ref().is_some_and(|r| Self::rows_closed(r, 0, hi));
            below = closed;
            let mut sublayers = Vec::with_capacity(self.inner[i].len());
            for (u, &(a, b)) in self.inner[i].iter().zip(&self.ranges[i]) {
                sublayers.push(SubLayer {
                    tableau: u.compact(),
                    shape: u.shape().clone(),
                    dim: b - a,
                    closed: self.rep.as_ref().is_some_and(|r| Self::rows_closed(r, 0, b)),
                });
            }
            let totally_ordered = sublayers
                .windows(2)
                .all(|w| w[0].shape.strictly_dominates(&w[1].shape).unwrap_or(false));
            out.push(OuterEntry {
                layer: i + 1,
                tableau: s.compact(),
                shape: s.shape().clone(),
                dim: hi,
                closed,
                quotient_dim_ok: hi - lo == f * standard_tableaux(s.shape()).len(),
                totally_ordered,
                sublayers,
            });
        }
        out
    }

    /// `Ind S(μ) ≅ M(μ∪ω)/N^α` on the representatives `m_{(T^μ∪α_j)v}`.
    pub fn quotient(&self) -> Option<ModuleRep> {
        let rep = self.rep.as_ref()?;
        let m = self.outer.len() - 1;
        let (lo, hi) = (self.layer_start(m), self.layer_end(m));
        if !Self::rows_closed(rep, 0, lo) {
            return None;
        }
        let gens = rep
            .generators
            .iter()
            .map(|g| {
                let rows = (lo..hi).map(|r| g.row(r)[lo..hi].to_vec()).collect();
                ExactMatrix::from_rows(self.big.field, hi - lo, rows).expect("square block")
            })
            .collect();
        ModuleRep::new(self.big.clone(), rep.basis_labels[lo..hi].to_vec(), gens).ok()
    }

    /// The inner chain `I_1 ⊂ .. ⊂ I_a` of the quotient.
    pub fn inner_entries(&self, quotient: Option<&ModuleRep>) -> Result<Vec<InnerEntry>> {
        let m = self.outer.len() - 1;
        let lo = self.layer_start(m);
        let addable = self.mu.addable_nodes();
        let mut spechts: HashMap<MultiPartition, ModuleRep> = HashMap::new();
        let mut out = Vec::with_capacity(addable.len());
        for (j, (u, &(a, b))) in self.inner[m].iter().zip(&self.ranges[m]).enumerate() {
            let alpha = addable[j];
            let shape = self.mu.add_node(&alpha)?;
            // N^{α_{j+1}} from its definition: N_{m-1} plus every m_{Uv} with shape(U) ⊳ μ∪α_{j+1}
            let n_beta_ok = match addable.get(j + 1) {
                Some(next) => {
                    let target = self.mu.add_node(next)?;
                    let mut above = Vec::new();
                    for (k, uu) in self.inner[m].iter().enumerate() {
                        if uu.shape().strictly_dominates(&target)? {
                            above.push(k);
                        }
                    }
                    above == (0..=j).collect::<Vec<_>>()
                }
                None => true,
            };
            let sp = match spechts.get(&shape) {
                Some(r) => r.clone(),
                None => {
                    let r = specht_rep(&self.big, &shape)?;
                    spechts.insert(shape.clone(), r.clone());
                    r
                }
            };
            let (qa, qb) = (a - lo, b - lo);
            let (closed, intertwiner_ok) = match quotient {
                Some(q) => {
                    let closed = Self::rows_closed(q, 0, qb);
                    let inter = qb - qa == sp.basis_labels.len()
                        && q.generators.iter().zip(&sp.generators).all(|(g, s)| {
                            (qa..qb).all(|r| g.row(r)[qa..qb] == *s.row(r - qa))
                        });
                    (closed, inter)
                }
                None => (false, false),
            };
            out.push(InnerEntry {
                alpha,
                tableau: u.compact(),
                shape,
                dim: qb,
                closed,
                n_beta_ok,
                intertwiner_ok,
            });
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubLayer {
    pub tableau: String,
    pub shape: MultiPartition,
    pub dim: usize,
    pub closed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OuterEntry {
    pub layer: usize,
    pub tableau: String,
    pub shape: MultiPartition,
    /// Dimension of `N_i`.
    pub dim: usize,
    pub closed: bool,
    pub quotient_dim_ok: bool,
    /// The shapes of `SStd(S_i, μ∪ω)` strictly decrease in dominance.
    pub totally_ordered: bool,
    pub sublayers: Vec<SubLayer>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InnerEntry {
    pub alpha: Node,
    pub tableau: String,
    pub shape: MultiPartition,
    /// Dimension of `I_j`.
    pub dim: usize,
    pub closed: bool,
    /// `I_j` agrees with `N^{α_{j+1}}/N^α` built from its definition.
    pub n_beta_ok: bool,
    pub intertwiner_ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct InducedCert {
    pub params: Params,
    pub mu: MultiPartition,
    pub omega: Node,
    pub ind_perm_ok: bool,
    pub outer: Vec<OuterEntry>,
    pub inner: Vec<InnerEntry>,
    pub quotient_dim: usize,
    pub expected_quotient_dim: usize,
    pub models_isomorphic: bool,
    pub blocks: Vec<BlockEntry>,
    pub blocks_complete: bool,
    pub ok: bool,
}

impl InducedCert {
    /// Names of the checks that failed.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.ind_perm_ok {
            out.push("Ind M(mu) = M(mu+omega)".to_string());
        }
        for e in &self.outer {
            if !e.closed {
                out.push(format!("outer layer {} closed", e.layer));
            }
            if !e.quotient_dim_ok {
                out.push(format!("outer layer {} dimension", e.layer));
            }
            if !e.totally_ordered {
                out.push(format!("outer layer {} totally ordered", e.layer));
            }
            for s in &e.sublayers {
                if !s.closed {
                    out.push(format!("outer layer {} sublayer {} closed", e.layer, s.tableau));
                }
            }
        }
        for e in &self.inner {
            if !e.closed {
                out.push(format!("inner layer {} closed", e.tableau));
            }
            if !e.n_beta_ok {
                out.push(format!("inner layer {} equals N^beta/N^alpha", e.tableau));
            }
            if !e.intertwiner_ok {
                out.push(format!("inner layer {} intertwiner", e.tableau));
            }
        }
        if self.quotient_dim != self.expected_quotient_dim {
            out.push("dim Ind S(mu)".to_string());
        }
        if !self.models_isomorphic {
            out.push("tensor and quotient models isomorphic".to_string());
        }
        for b in &self.blocks {
            if b.dim != b.expected_dim {
                out.push(format!("block {} dimension", b.residue));
            }
        }
        if !self.blocks_complete {
            out.push("block decomposition complete".to_string());
        }
        out
    }
}

/// Builds the quotient model of `Ind S(μ)` and every check on it.
pub fn induced_specht(params: &Params, mu: &MultiPartition) -> Result<(Option<ModuleRep>, InducedCert)> {
    let im = InducedModule::build(params, mu)?;
    let outer = im.outer_entries();
    let quotient = im.quotient();
    let inner = im.inner_entries(quotient.as_ref())?;
    let expected = params.ell * (params.n + 1) * standard_tableaux(mu).len();
    let quotient_dim = quotient.as_ref().map(|q| q.basis_labels.len()).unwrap_or(0);
    let models_isomorphic = match &quotient {
        Some(q) => compare_models(params, mu, q)?,
        None => false,
    };
    let (blocks, blocks_complete) = match &quotient {
        Some(q) => block_decomposition(params, mu, q)?,
        None => (Vec::new(), false),
    };
    let mut cert = InducedCert {
        params: params.clone(),
        mu: mu.clone(),
        omega: im.omega,
        ind_perm_ok: im.ind_perm_ok,
        outer,
        inner,
        quotient_dim,
        expected_quotient_dim: expected,
        models_isomorphic,
        blocks,
        blocks_complete,
        ok: false,
    };
    cert.ok = cert.failures().is_empty();
    Ok((quotient, cert))
}
