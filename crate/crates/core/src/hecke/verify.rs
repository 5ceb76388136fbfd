//! Exhaustive identity checks for the engine.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{relation_failures, Algebra, AlgebraElement, Params};
use crate::arith::Scalar;
use crate::error::Result;
use crate::symgroup::{interval_group, interval_word, Perm};

/// A named pass/fail outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Verdict {
    pub fn new(name: impl Into<String>, ok: bool) -> Verdict {
        Verdict { name: name.into(), ok, detail: None }
    }

    pub fn with_detail(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Verdict {
        Verdict { name: name.into(), ok, detail: Some(detail.into()) }
    }

    /// Passes when `failures` is empty; otherwise lists the first few.
    pub fn from_failures(name: impl Into<String>, failures: &[String]) -> Verdict {
        if failures.is_empty() {
            Verdict::new(name, true)
        } else {
            let shown: Vec<&str> = failures.iter().take(5).map(String::as_str).collect();
            Verdict::with_detail(name, false, format!("{} failure(s): {}", failures.len(), shown.join("; ")))
        }
    }
}

/// Results of [`verify_relations`].
#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub params: Params,
    pub verdicts: Vec<Verdict>,
}

impl RelationReport {
    pub fn ok(&self) -> bool {
        self.verdicts.iter().all(|v| v.ok)
    }
}

/// Relations, basis words, reduced-word independence, the `L`-commutation property,
/// the interval identity, associativity and the anti-involution.
pub fn verify_relations(params: &Params) -> Result<RelationReport> {
    let alg = Algebra::get(params);
    let verdicts = vec![
        basis_count(&alg),
        Verdict::from_failures("defining relations", &relation_failures(&*alg, params)),
        basis_words(&alg),
        reduced_words(&alg)?,
        l_commutation(&alg)?,
        interval_identity(&alg)?,
        associativity(&alg, 6)?,
        star_checks(&alg, 6)?,
    ];
    Ok(RelationReport { params: params.clone(), verdicts })
}

fn basis_count(alg: &Arc<Algebra>) -> Verdict {
    let expected = alg.params().ell.pow(alg.n() as u32) * (1..=alg.n()).product::<usize>();
    let labels = alg.labels();
    let distinct: std::collections::HashSet<_> = labels.iter().collect();
    let ok = labels.len() == expected && distinct.len() == expected && labels.iter().enumerate().all(|(i, l)| alg.index_of(l) == Some(i));
    Verdict::with_detail("basis count", ok, format!("{} labels, expected {expected}", labels.len()))
}

/// Multiplying 1 by the generator word of each label reproduces that label.
fn basis_words(alg: &Arc<Algebra>) -> Verdict {
    let one = AlgebraElement::one(alg);
    let mut failures = Vec::new();
    for idx in 0..alg.dim() {
        let (f, word) = alg.label_word(idx);
        if one.right_word(&word).scale(&f) != AlgebraElement::basis(alg, idx) {
            failures.push(alg.label(idx).to_string());
        }
    }
    Verdict::from_failures("basis words", &failures)
}

fn reduced_words(alg: &Arc<Algebra>) -> Result<Verdict> {
    let n = alg.n();
    let mut failures = Vec::new();
    for w in Perm::all(n) {
        let expected = AlgebraElement::t_w(alg, &w)?;
        let idx = alg.index_of(&super::BasisLabel { exps: vec![0; n], w: w.clone() }).expect("label");
        if expected != AlgebraElement::basis(alg, idx) {
            failures.push(format!("T_w for {w:?} is not a basis label"));
        }
        for word in w.all_reduced_words() {
            if AlgebraElement::t_word(alg, &word, n)? != expected {
                failures.push(format!("{word:?}"));
            }
        }
    }
    Ok(Verdict::from_failures("reduced words agree", &failures))
}

/// `(L_1 - a)..(L_k - a)` commutes with `T_w` for `w` in `S_k x S_{n-k}`.
fn l_commutation(alg: &Arc<Algebra>) -> Result<Verdict> {
    let p = alg.params();
    let n = alg.n();
    let f = p.field;
    let mut samples: Vec<Scalar> = vec![f.zero(), f.one(), p.q.clone(), f.from_i64(-3)];
    samples.extend(p.big_q.iter().cloned());
    samples.sort_by_key(|s| s.to_string());
    samples.dedup();
    let mut failures = Vec::new();
    for k in 1..=n {
        let ls: Vec<AlgebraElement> = (1..=k).map(|j| AlgebraElement::l_elem(alg, j)).collect::<Result<_>>()?;
        for a in &samples {
            let mut prod = AlgebraElement::one(alg);
            for l in &ls {
                prod = prod.mul(&l.minus_scalar(a))?;
            }
            for u in interval_group(n, 1, k) {
                for v in interval_group(n, k + 1, n) {
                    let w = u.compose(&v)?;
                    let word = w.reduced_word();
                    if prod.right_word(&word) != prod.left_word(&word) {
                        failures.push(format!("k={k} a={a} w={w:?}"));
                    }
                }
            }
        }
    }
    Ok(Verdict::from_failures("L-product commutation", &failures))
}

/// `(sum_{S_{a,b}} T_w) T_{b,a} = T_{b,a} (sum_{S_{a+1,b+1}} T_v)` for `1 <= a < b <= n-1`.
fn interval_identity(alg: &Arc<Algebra>) -> Result<Verdict> {
    let n = alg.n();
    let mut failures = Vec::new();
    for b in 2..n {
        for a in 1..b {
            let sum = |lo: usize, hi: usize| -> Result<AlgebraElement> {
                let mut acc = AlgebraElement::zero(alg);
                for w in interval_group(n, lo, hi) {
                    acc = acc.add(&AlgebraElement::t_w(alg, &w)?)?;
                }
                Ok(acc)
            };
            let word = interval_word(b, a);
            let lhs = sum(a, b)?.right_word(&word);
            let rhs = sum(a + 1, b + 1)?.left_word(&word);
            if lhs != rhs {
                failures.push(format!("a={a} b={b}"));
            }
        }
    }
    Ok(Verdict::from_failures("interval identity", &failures))
}

/// A random element with a handful of small integer coefficients.
pub fn random_element(alg: &Arc<Algebra>, rng: &mut impl Rng, terms: usize) -> AlgebraElement {
    let f = alg.field();
    let mut c = vec![f.zero(); alg.dim()];
    for _ in 0..terms {
        let i = rng.gen_range(0..alg.dim());
        c[i] = f.from_i64(rng.gen_range(-3..=3));
    }
    AlgebraElement::from_coeffs(alg, c).expect("right size")
}

fn associativity(alg: &Arc<Algebra>, trials: usize) -> Result<Verdict> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut failures = Vec::new();
    for t in 0..trials {
        let x = random_element(alg, &mut rng, 4);
        let y = random_element(alg, &mut rng, 4);
        let z = random_element(alg, &mut rng, 4);
        if x.mul(&y)?.mul(&z)? != x.mul(&y.mul(&z)?)? {
            failures.push(format!("trial {t}"));
        }
    }
    Ok(Verdict::from_failures("associativity (sampled)", &failures))
}

fn star_checks(alg: &Arc<Algebra>, trials: usize) -> Result<Verdict> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x57a2);
    let mut failures = Vec::new();
    for t in 0..trials {
        let x = random_element(alg, &mut rng, 4);
        let y = random_element(alg, &mut rng, 4);
        if x.star().star() != x {
            failures.push(format!("involution, trial {t}"));
        }
        if x.mul(&y)?.star() != y.star().mul(&x.star())? {
            failures.push(format!("anti-multiplicative, trial {t}"));
        }
    }
    for w in Perm::all(alg.n()) {
        if AlgebraElement::t_w(alg, &w)?.star() != AlgebraElement::t_w(alg, &w.inverse())? {
            failures.push(format!("T_w* for {w:?}"));
        }
    }
    Ok(Verdict::from_failures("anti-involution", &failures))
}
