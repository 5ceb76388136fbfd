//! Named verification suites, selectable by name.

use rayon::prelude::*;

use crate::cellular::{djm_filtration, specht_rep, CellularBasis};
use crate::combinatorics::{all_multipartitions, MultiPartition};
use crate::error::{Error, Result};
use crate::hecke::{relation_failures, verify_relations, Params, Verdict};
use crate::induction::{induced_specht, verify_bump_all, verify_closure_all};

/// A family of exact checks run against one parameter set.
pub trait Check: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn run(&self, params: &Params) -> Result<Vec<Verdict>>;
}

/// Runs `f` on every multipartition of the parameters, keeping enumeration order.
fn per_mu<F>(params: &Params, f: F) -> Result<Vec<Verdict>>
where
    F: Fn(&MultiPartition) -> Result<Verdict> + Send + Sync,
{
    all_multipartitions(params.ell, params.n).par_iter().map(f).collect()
}

struct Relations;

impl Check for Relations {
    fn name(&self) -> &'static str {
        "relations"
    }

    fn summary(&self) -> &'static str {
        "defining relations, basis words, L-commutation, interval identity, cellular change of basis"
    }

    fn run(&self, params: &Params) -> Result<Vec<Verdict>> {
        let mut out = verify_relations(params)?.verdicts;
        let cb = CellularBasis::get(params);
        let ok = cb.as_ref().is_ok_and(|cb| cb.len() == params.dimension());
        out.push(Verdict::new("cellular change of basis invertible", ok));
        Ok(out)
    }
}

struct Specht;

impl Check for Specht {
    fn name(&self) -> &'static str {
        "specht"
    }

    fn summary(&self) -> &'static str {
        "every Specht module satisfies the defining relations"
    }

    fn run(&self, params: &Params) -> Result<Vec<Verdict>> {
        per_mu(params, |lam| {
            let rep = specht_rep(params, lam)?;
            Ok(Verdict::from_failures(format!("S({lam}) relations"), &relation_failures(&rep, params)))
        })
    }
}

struct Filtration;

impl Check for Filtration {
    fn name(&self) -> &'static str {
        "filtration"
    }

    fn summary(&self) -> &'static str {
        "semistandard Specht filtration of each permutation module"
    }

    fn run(&self, params: &Params) -> Result<Vec<Verdict>> {
        per_mu(params, |mu| {
            let cert = djm_filtration(params, mu)?;
            let failures: Vec<String> = cert
                .chain
                .iter()
                .filter(|e| !(e.closed && e.iso_checked))
                .map(|e| format!("layer {} ({})", e.layer_index, e.tableau))
                .collect();
            Ok(Verdict::from_failures(format!("M({mu}) filtration"), &failures))
        })
    }
}

struct Bump;

impl Check for Bump {
    fn name(&self) -> &'static str {
        "bump"
    }

    fn summary(&self) -> &'static str {
        "T_{n,a+1} m_(λ∪β) lies in m_λ H_{n+1} for every λ and addable β"
    }

    fn run(&self, params: &Params) -> Result<Vec<Verdict>> {
        let failures: Vec<String> = verify_bump_all(params)?
            .iter()
            .filter(|r| !r.ok())
            .map(|r| format!("{} + {} (a={})", r.lambda, r.beta, r.a))
            .collect();
        Ok(vec![Verdict::from_failures("bump membership", &failures)])
    }
}

struct Closure;

impl Check for Closure {
    fn name(&self) -> &'static str {
        "closure"
    }

    fn summary(&self) -> &'static str {
        "m_(U t^ν) lies in m_(S t^λ) H_{n+1} for every S and U in SStd(S, μ∪ω)"
    }

    fn run(&self, params: &Params) -> Result<Vec<Verdict>> {
        per_mu(params, |mu| {
            let failures: Vec<String> = verify_closure_all(params, mu)?
                .into_iter()
                .filter(|r| !r.ok)
                .map(|r| format!("{} -> {}", r.s, r.u))
                .collect();
            Ok(Verdict::from_failures(format!("{mu} closure"), &failures))
        })
    }
}

struct Induction;

impl Check for Induction {
    fn name(&self) -> &'static str {
        "induction"
    }

    fn summary(&self) -> &'static str {
        "induced permutation module, both filtrations, intertwiners, tensor model and blocks"
    }

    fn run(&self, params: &Params) -> Result<Vec<Verdict>> {
        per_mu(params, |mu| {
            let (_, cert) = induced_specht(params, mu)?;
            Ok(Verdict::from_failures(format!("Ind S({mu})"), &cert.failures()))
        })
    }
}

/// Every check, in the order `verify` runs them.
pub fn registry() -> Vec<Box<dyn Check>> {
    vec![Box::new(Relations), Box::new(Specht), Box::new(Filtration), Box::new(Bump), Box::new(Closure), Box::new(Induction)]
}

pub fn find_check(name: &str) -> Result<Box<dyn Check>> {
    registry().into_iter().find(|c| c.name() == name).ok_or_else(|| Error::UnknownCheck(name.to_string()))
}
