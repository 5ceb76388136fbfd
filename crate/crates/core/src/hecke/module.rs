//! Right modules given by generator actions, and the generic checks run on them.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Algebra, Params};
use crate::arith::{is_zero_vec, sub_vec, unit_vec, ExactMatrix, Field, Scalar, Subspace};
use crate::error::{Error, Result};

/// A finite-dimensional right module over `H_n`, given by the action of `T_0..T_{n-1}`
/// on row vectors.
pub trait RightModule {
    fn dim(&self) -> usize;
    fn field(&self) -> Field;
    fn num_generators(&self) -> usize;
    fn act(&self, v: &[Scalar], g: usize) -> Vec<Scalar>;

    fn act_word(&self, v: &[Scalar], word: &[usize]) -> Vec<Scalar> {
        word.iter().fold(v.to_vec(), |acc, &g| self.act(&acc, g))
    }
}

impl RightModule for Algebra {
    fn dim(&self) -> usize {
        Algebra::dim(self)
    }

    fn field(&self) -> Field {
        Algebra::field(self)
    }

    fn num_generators(&self) -> usize {
        Algebra::num_generators(self)
    }

    fn act(&self, v: &[Scalar], g: usize) -> Vec<Scalar> {
        self.right_act(v, g)
    }
}

impl RightModule for Arc<Algebra> {
    fn dim(&self) -> usize {
        Algebra::dim(self)
    }

    fn field(&self) -> Field {
        Algebra::field(self)
    }

    fn num_generators(&self) -> usize {
        Algebra::num_generators(self)
    }

    fn act(&self, v: &[Scalar], g: usize) -> Vec<Scalar> {
        self.right_act(v, g)
    }
}

/// The submodule generated by `seeds` on top of an already closed submodule `start`.
pub fn spin_from<M, I>(m: &M, start: Subspace, seeds: I) -> Result<Subspace>
where
    M: RightModule + ?Sized,
    I: IntoIterator<Item = Vec<Scalar>>,
{
    let mut space = start;
    let mut queue = std::collections::VecDeque::new();
    for v in seeds {
        if space.insert(v.clone())? {
            queue.push_back(v);
        }
    }
    loop {
        // dependence is only screened modulo a prime here and certified below
        while let Some(v) = queue.pop_front() {
            if space.dim() == m.dim() {
                break;
            }
            for g in 0..m.num_generators() {
                let w = m.act(&v, g);
                if space.insert_probable(w.clone())? {
                    queue.push_back(w);
                }
            }
        }
        if space.dim() == m.dim() {
            return Ok(space);
        }
        let basis = space.basis().to_vec();
        for v in &basis {
            for g in 0..m.num_generators() {
                let w = m.act(v, g);
                if space.insert(w.clone())? {
                    queue.push_back(w);
                }
            }
        }
        if queue.is_empty() {
            return Ok(space);
        }
    }
}

/// The submodule generated by `seeds`.
pub fn spin<M, I>(m: &M, seeds: I) -> Result<Subspace>
where
    M: RightModule + ?Sized,
    I: IntoIterator<Item = Vec<Scalar>>,
{
    spin_from(m, Subspace::zero(m.field(), m.dim()), seeds)
}

/// Whether `s` is stable under every generator.
pub fn is_closed<M: RightModule + ?Sized>(m: &M, s: &Subspace) -> Result<bool> {
    for v in s.basis() {
        for g in 0..m.num_generators() {
            if !s.contains(&m.act(v, g))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks every defining relation as an identity of operators; returns the failing ones.
pub fn relation_failures<M: RightModule + ?Sized>(m: &M, params: &Params) -> Vec<String> {
    let n = m.num_generators();
    let d = m.dim();
    let f = m.field();
    let mut failures = Vec::new();
    let holds = |lhs: &dyn Fn(&[Scalar]) -> Vec<Scalar>| (0..d).all(|i| is_zero_vec(&lhs(&unit_vec(f, d, i))));
    let same = |a: &[usize], b: &[usize]| holds(&|v: &[Scalar]| sub_vec(&m.act_word(v, a), &m.act_word(v, b)));
    if n == 0 {
        return failures;
    }
    let cyclotomic = |v: &[Scalar]| {
        params.big_q.iter().fold(v.to_vec(), |w, qs| {
            let t = m.act(&w, 0);
            t.iter().zip(&w).map(|(a, b)| a - &(b * qs)).collect()
        })
    };
    if !holds(&cyclotomic) {
        failures.push("cyclotomic relation for T_0".to_string());
    }
    for i in 1..n {
        let quad = |v: &[Scalar]| {
            let w: Vec<Scalar> = m.act(v, i).iter().zip(v).map(|(a, b)| a - &(b * &params.q)).collect();
            m.act(&w, i).iter().zip(&w).map(|(a, b)| a + b).collect()
        };
        if !holds(&quad) {
            failures.push(format!("quadratic relation for T_{i}"));
        }
    }
    if n >= 2 && !same(&[0, 1, 0, 1], &[1, 0, 1, 0]) {
        failures.push("T_0 T_1 T_0 T_1 = T_1 T_0 T_1 T_0".to_string());
    }
    for i in 1..n.saturating_sub(1) {
        if !same(&[i, i + 1, i], &[i + 1, i, i + 1]) {
            failures.push(format!("braid relation for T_{i}, T_{}", i + 1));
        }
    }
    for i in 0..n {
        for j in i + 2..n {
            if !same(&[i, j], &[j, i]) {
                failures.push(format!("T_{i} and T_{j} commute"));
            }
        }
    }
    failures
}

/// A module with an ordered basis and one matrix per generator, acting on the right.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleRep {
    pub params: Params,
    pub basis_labels: Vec<String>,
    pub generators: Vec<ExactMatrix>,
}

impl ModuleRep {
    pub fn new(params: Params, basis_labels: Vec<String>, generators: Vec<ExactMatrix>) -> Result<ModuleRep> {
        let d = basis_labels.len();
        if generators.len() != params.n {
            return Err(Error::DimensionMismatch { expected: params.n, got: generators.len() });
        }
        for g in &generators {
            if g.rows() != d || g.cols() != d {
                return Err(Error::DimensionMismatch { expected: d, got: g.rows() });
            }
        }
        Ok(ModuleRep { params, basis_labels, generators })
    }

    /// Matrix of a word in the generators, acting on the right.
    pub fn word_matrix(&self, word: &[usize]) -> ExactMatrix {
        let mut m = ExactMatrix::identity(self.params.field, self.dim());
        for &g in word {
            m = m.mul(&self.generators[g]).expect("square");
        }
        m
    }

    /// Whether `x` intertwines: `self(g) * x = x * other(g)` for every generator.
    pub fn intertwines(&self, other: &ModuleRep, x: &ExactMatrix) -> Result<bool> {
        for (a, b) in self.generators.iter().zip(&other.generators) {
            if a.mul(x)? != x.mul(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl RightModule for ModuleRep {
    fn dim(&self) -> usize {
        self.basis_labels.len()
    }

    fn field(&self) -> Field {
        self.params.field
    }

    fn num_generators(&self) -> usize {
        self.generators.len()
    }

    fn act(&self, v: &[Scalar], g: usize) -> Vec<Scalar> {
        self.generators[g].apply(v)
    }
}
