//! The operations behind the command-line tool, returning serializable reports.

use serde::Serialize;

use crate::arith::{Field, Scalar};
use crate::checks::{find_check, registry, Check};
use crate::combinatorics::{
    all_multipartitions, layer_order, semistandard_tableaux, standard_tableaux, MultiPartition, Node,
};
use crate::error::{Error, Result};
use crate::hecke::{preset, Params, Verdict};
use crate::induction::{induced_specht, outer_layer_shapes, InducedCert};

/// Largest ambient dimension `ℓ^(n+1) (n+1)!` attempted without `force`.
pub const BUDGET: usize = 10_000;

/// Where the field and parameters come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamSource {
    Preset(String),
    Explicit { field: String, q: String, big_q: Vec<String> },
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub ell: usize,
    pub n: usize,
    pub mu: Option<MultiPartition>,
    pub source: ParamSource,
    /// Checks to run; empty means all of them.
    pub checks: Vec<String>,
    pub force: bool,
    pub jobs: Option<usize>,
}

impl RunConfig {
    /// The generic preset at `(ℓ, n)`.
    pub fn new(ell: usize, n: usize) -> RunConfig {
        RunConfig {
            ell,
            n,
            mu: None,
            source: ParamSource::Preset("generic".into()),
            checks: Vec::new(),
            force: false,
            jobs: None,
        }
    }

    pub fn with_mu(mut self, mu: MultiPartition) -> RunConfig {
        self.mu = Some(mu);
        self
    }

    pub fn with_preset(mut self, name: &str) -> RunConfig {
        self.source = ParamSource::Preset(name.into());
        self
    }

    /// Resolves the parameters and validates `μ` against them.
    pub fn params(&self) -> Result<Params> {
        let params = match &self.source {
            ParamSource::Preset(name) => preset(name)?.params(self.ell, self.n)?,
            ParamSource::Explicit { field, q, big_q } => {
                let field: Field = field.parse()?;
                let q = field.parse_scalar(q)?;
                let big_q = big_q.iter().map(|s| field.parse_scalar(s)).collect::<Result<Vec<Scalar>>>()?;
                Params::new(self.ell, self.n, field, q, big_q)?
            }
        };
        if let Some(mu) = &self.mu {
            if mu.ell() != self.ell || mu.size() != self.n {
                return Err(Error::InvalidMultiPartition(format!(
                    "{mu} has {} components and size {}, expected {} and {}",
                    mu.ell(),
                    mu.size(),
                    self.ell,
                    self.n
                )));
            }
        }
        Ok(params)
    }

    fn mu(&self) -> Result<&MultiPartition> {
        self.mu.as_ref().ok_or_else(|| Error::InvalidMultiPartition("this command needs --mu".into()))
    }

    /// Refuses work in `H_{n+1}` beyond [`BUDGET`] unless forced.
    pub fn guard(&self, params: &Params) -> Result<()> {
        let dim = params.with_n(params.n + 1).dimension();
        if dim > BUDGET && !self.force {
            return Err(Error::Budget { dim, budget: BUDGET });
        }
        Ok(())
    }

    fn selected(&self) -> Result<Vec<Box<dyn Check>>> {
        if self.checks.is_empty() {
            return Ok(registry());
        }
        self.checks.iter().map(|c| find_check(c)).collect()
    }

    /// Runs `f` on a pool of `jobs` threads, or the global pool.
    pub fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        match self.jobs {
            Some(j) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(j.max(1))
                    .build()
                    .map_err(|e| Error::InvalidParams(format!("thread pool: {e}")))?;
                Ok(pool.install(f))
            }
            None => Ok(f()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NodeInfo {
    pub node: Node,
    pub residue: Scalar,
}

#[derive(Clone, Debug, Serialize)]
pub struct ShapeInfo {
    pub shape: MultiPartition,
    pub std_count: usize,
    pub addable: Vec<NodeInfo>,
    pub removable: Vec<NodeInfo>,
    /// Semistandard tableaux of this type in layer order.
    pub layer_order: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SStdCount {
    pub shape: MultiPartition,
    pub count: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerateReport {
    pub params: Params,
    pub multipartitions: Vec<ShapeInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<MultiPartition>,
    /// `#SStd(λ, μ)` for every λ, when `μ` is given.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sstd_counts: Vec<SStdCount>,
}

pub fn cmd_enumerate(cfg: &RunConfig) -> Result<EnumerateReport> {
    let params = cfg.params()?;
    let nodes = |ns: Vec<Node>| ns.into_iter().map(|node| NodeInfo { residue: node.residue(&params), node }).collect();
    let multipartitions = all_multipartitions(cfg.ell, cfg.n)
        .into_iter()
        .map(|shape| ShapeInfo {
            std_count: standard_tableaux(&shape).len(),
            addable: nodes(shape.addable_nodes()),
            removable: nodes(shape.removable_nodes()),
            layer_order: layer_order(&shape).iter().map(|t| t.compact()).collect(),
            shape,
        })
        .collect();
    let sstd_counts = match &cfg.mu {
        Some(mu) => all_multipartitions(cfg.ell, cfg.n)
            .into_iter()
            .map(|shape| SStdCount { count: semistandard_tableaux(&shape, mu).len(), shape })
            .collect(),
        None => Vec::new(),
    };
    Ok(EnumerateReport { params, multipartitions, mu: cfg.mu.clone(), sstd_counts })
}

/// The certificate for `Ind S(μ)`.
pub fn cmd_induce(cfg: &RunConfig) -> Result<InducedCert> {
    let params = cfg.params()?;
    let mu = cfg.mu()?;
    cfg.guard(&params)?;
    Ok(induced_specht(&params, mu)?.1)
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub summary: String,
    pub ok: bool,
    pub verdicts: Vec<Verdict>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub params: Params,
    pub checks: Vec<CheckResult>,
    pub ok: bool,
}

impl VerifyReport {
    pub fn failures(&self) -> Vec<String> {
        self.checks
            .iter()
            .flat_map(|c| c.verdicts.iter().filter(|v| !v.ok).map(move |v| format!("{}: {}", c.name, v.name)))
            .collect()
    }
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<VerifyReport> {
    let params = cfg.params()?;
    cfg.guard(&params)?;
    let mut checks = Vec::new();
    for c in cfg.selected()? {
        log::info!("running {} at {params}", c.name());
        let verdicts = c.run(&params)?;
        checks.push(CheckResult {
            name: c.name().into(),
            summary: c.summary().into(),
            ok: verdicts.iter().all(|v| v.ok),
            verdicts,
        });
    }
    let ok = checks.iter().all(|c| c.ok);
    Ok(VerifyReport { params, checks, ok })
}

#[derive(Clone, Debug, Serialize)]
pub struct SubLayerInfo {
    pub tableau: String,
    pub shape: MultiPartition,
}

#[derive(Clone, Debug, Serialize)]
pub struct LayerInfo {
    pub index: usize,
    pub tableau: String,
    pub shape: MultiPartition,
    pub sublayers: Vec<SubLayerInfo>,
}

/// A shape `ν` in an earlier layer strictly dominated by a shape `μ∪α` of the last layer.
#[derive(Clone, Debug, Serialize)]
pub struct Inversion {
    pub earlier: MultiPartition,
    pub earlier_layer: usize,
    pub tableau: String,
    pub dominated_by: MultiPartition,
    pub earlier_is_mu_plus_node: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LayersReport {
    pub mu: MultiPartition,
    pub omega: Node,
    pub mu_omega: MultiPartition,
    pub layers: Vec<LayerInfo>,
    pub inversions: Vec<Inversion>,
}

/// The layers `SStd(S_i, μ∪ω)` of `M(μ∪ω)`, found combinatorially, and the places
/// where they disagree with dominance.
pub fn cmd_layers(cfg: &RunConfig) -> Result<LayersReport> {
    let mu = cfg.mu()?.clone();
    if mu.ell() != cfg.ell || mu.size() != cfg.n {
        return Err(Error::InvalidMultiPartition(format!("{mu} is not an {}-multipartition of {}", cfg.ell, cfg.n)));
    }
    let omega = mu.lowest_addable();
    let mu_omega = mu.add_node(&omega)?;
    let layers: Vec<LayerInfo> = outer_layer_shapes(&mu)
        .into_iter()
        .enumerate()
        .map(|(index, (s, us))| LayerInfo {
            index,
            tableau: s.compact(),
            shape: s.shape().clone(),
            sublayers: us.iter().map(|u| SubLayerInfo { tableau: u.compact(), shape: u.shape().clone() }).collect(),
        })
        .collect();
    let plus_node: Vec<MultiPartition> = mu.addable_nodes().iter().map(|a| mu.add_node(a)).collect::<Result<_>>()?;
    let mut inversions = Vec::new();
    if let Some((last, earlier)) = layers.split_last() {
        for top in &last.sublayers {
            for layer in earlier {
                for sub in &layer.sublayers {
                    if top.shape.strictly_dominates(&sub.shape)? {
                        inversions.push(Inversion {
                            earlier: sub.shape.clone(),
                            earlier_layer: layer.index,
                            tableau: sub.tableau.clone(),
                            dominated_by: top.shape.clone(),
                            earlier_is_mu_plus_node: plus_node.contains(&sub.shape),
                        });
                    }
                }
            }
        }
    }
    Ok(LayersReport { mu, omega, mu_omega, layers, inversions })
}
