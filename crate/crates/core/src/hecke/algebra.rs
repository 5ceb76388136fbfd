//! The normal-form engine for `H_n` on the basis `L_1^{a_1}..L_n^{a_n} T_w`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::Params;
use crate::arith::{is_zero_vec, Field, Scalar};
use crate::error::{Error, Result};
use crate::symgroup::{interval_perm, Perm};

/// A basis label `(a, w)` standing for `L_1^{a_1}..L_n^{a_n} T_w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BasisLabel {
    #[serde(rename = "a")]
    pub exps: Vec<usize>,
    pub w: Perm,
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("L{}", k + 1)),
                _ => parts.push(format!("L{}^{}", k + 1, e)),
            }
        }
        if !self.w.is_identity() {
            let word: Vec<String> = self.w.reduced_word().iter().map(|i| i.to_string()).collect();
            parts.push(format!("T[{}]", word.join(",")));
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Sparse rows of a linear map on the basis, row `r` holding the image of label `r`.
#[derive(Clone, Debug)]
pub(crate) struct SparseRows(pub(crate) Vec<Vec<(u32, Scalar)>>);

impl SparseRows {
    fn apply(&self, v: &[Scalar], field: Field) -> Vec<Scalar> {
        let mut out = vec![field.zero(); v.len()];
        for (x, row) in v.iter().zip(&self.0) {
            if x.is_zero() {
                continue;
            }
            for (c, y) in row {
                out[*c as usize] += &(x * y);
            }
        }
        out
    }

    fn from_dense(rows: Vec<Vec<Scalar>>) -> SparseRows {
        SparseRows(
            rows.into_iter()
                .map(|r| r.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i as u32, x)).collect())
                .collect(),
        )
    }
}

type Combo = BTreeMap<u32, Scalar>;

fn combo_add(acc: &mut Combo, idx: u32, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&idx) {
        Some(x) => {
            *x += &c;
            if x.is_zero() {
                acc.remove(&idx);
            }
        }
        None => {
            acc.insert(idx, c);
        }
    }
}

/// `H_n` with memoized right-multiplication by each generator.
pub struct Algebra {
    params: Params,
    nfact: usize,
    perms: Vec<Perm>,
    perm_index: HashMap<Perm, u32>,
    /// `shift[p][i-1]` is the index of `w_p s_i`.
    shift: Vec<Vec<u32>>,
    ascent: Vec<Vec<bool>>,
    right: Vec<SparseRows>,
    left: OnceLock<Vec<SparseRows>>,
}

static REGISTRY: OnceLock<Mutex<HashMap<Params, Arc<Algebra>>>> = OnceLock::new();

impl Algebra {
    /// The shared algebra for these parameters, built on first use.
    pub fn get(params: &Params) -> Arc<Algebra> {
        let reg = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
        let mut map = reg.lock().expect("algebra registry poisoned");
        if let Some(a) = map.get(params) {
            return a.clone();
        }
        let a = Arc::new(Algebra::build(params.clone()));
        map.insert(params.clone(), a.clone());
        a
    }

    fn build(params: Params) -> Algebra {
        let n = params.n;
        let perms = Perm::all(n);
        let nfact = perms.len();
        let perm_index: HashMap<Perm, u32> = perms.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        let shift = perms.iter().map(|p| (1..n).map(|i| perm_index[&p.mul_simple(i)]).collect()).collect();
        let ascent = perms.iter().map(|p| (1..n).map(|i| p.right_ascent(i)).collect()).collect();
        let mut alg = Algebra { params, nfact, perms, perm_index, shift, ascent, right: Vec::new(), left: OnceLock::new() };
        let right = Engine::new(&alg).right_matrices();
        alg.right = right;
        log::debug!("built H_{} with {} basis elements", n, alg.dim());
        alg
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn field(&self) -> Field {
        self.params.field
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    pub fn dim(&self) -> usize {
        self.ell_pow_n() * self.nfact
    }

    fn ell_pow_n(&self) -> usize {
        self.params.ell.pow(self.params.n as u32)
    }

    /// Generators are `T_0, .., T_{n-1}`.
    pub fn num_generators(&self) -> usize {
        self.params.n
    }

    fn exps_of_code(&self, mut code: usize) -> Vec<usize> {
        let ell = self.params.ell;
        (0..self.params.n)
            .map(|_| {
                let e = code % ell;
                code /= ell;
                e
            })
            .collect()
    }

    fn code_of_exps(&self, exps: &[usize]) -> usize {
        exps.iter().rev().fold(0, |acc, &e| acc * self.params.ell + e)
    }

    pub fn label(&self, idx: usize) -> BasisLabel {
        BasisLabel { exps: self.exps_of_code(idx / self.nfact), w: self.perms[idx % self.nfact].clone() }
    }

    pub fn labels(&self) -> Vec<BasisLabel> {
        (0..self.dim()).map(|i| self.label(i)).collect()
    }

    pub fn index_of(&self, label: &BasisLabel) -> Option<usize> {
        if label.exps.len() != self.params.n || label.exps.iter().any(|&e| e >= self.params.ell) {
            return None;
        }
        let p = *self.perm_index.get(&label.w)? as usize;
        Some(self.code_of_exps(&label.exps) * self.nfact + p)
    }

    /// Right action of generator `g` on a coordinate vector.
    pub fn right_act(&self, v: &[Scalar], g: usize) -> Vec<Scalar> {
        self.right[g].apply(v, self.field())
    }

    /// Left multiplication by generator `g`.
    pub fn left_act(&self, v: &[Scalar], g: usize) -> Vec<Scalar> {
        self.left_matrices()[g].apply(v, self.field())
    }

    pub fn right_word(&self, v: &[Scalar], word: &[usize]) -> Vec<Scalar> {
        word.iter().fold(v.to_vec(), |acc, &g| self.right_act(&acc, g))
    }

    /// `T_{i_1} .. T_{i_k} * v`, the word read left to right.
    pub fn left_word(&self, word: &[usize], v: &[Scalar]) -> Vec<Scalar> {
        word.iter().rev().fold(v.to_vec(), |acc, &g| self.left_act(&acc, g))
    }

    /// A generator word for a basis label, with the scalar it must be scaled by:
    /// `L_k = q^{-(k-1)} T_{k-1}..T_1 T_0 T_1..T_{k-1}`, followed by a reduced word of `w`.
    pub fn label_word(&self, idx: usize) -> (Scalar, Vec<usize>) {
        let label = self.label(idx);
        let mut factor = self.field().one();
        let mut word = Vec::new();
        for (k0, &e) in label.exps.iter().enumerate() {
            for _ in 0..e {
                word.extend(l_word(k0 + 1));
                factor = &factor * &self.params.q.pow(-(k0 as i64)).expect("q invertible");
            }
        }
        word.extend(label.w.reduced_word());
        (factor, word)
    }

    fn left_matrices(&self) -> &[SparseRows] {
        self.left.get_or_init(|| (0..self.num_generators()).map(|g| SparseRows::from_dense(self.products_with_labels(&self.generator_vec(g)))).collect())
    }

    fn generator_vec(&self, g: usize) -> Vec<Scalar> {
        self.right_act(&self.unit_vec(), g)
    }

    fn unit_vec(&self) -> Vec<Scalar> {
        let mut v = vec![self.field().zero(); self.dim()];
        v[0] = self.field().one();
        v
    }

    /// `h * b` for every basis label `b`, each built from a shorter label by one step.
    pub(crate) fn products_with_labels(&self, h: &[Scalar]) -> Vec<Vec<Scalar>> {
        let d = self.dim();
        let mut out: Vec<Option<Vec<Scalar>>> = vec![None; d];
        let mut by_length: Vec<usize> = (0..self.nfact).collect();
        by_length.sort_by_key(|&p| self.perms[p].length());
        for code in 0..self.ell_pow_n() {
            let base = code * self.nfact;
            let v = if code == 0 {
                h.to_vec()
            } else {
                let exps = self.exps_of_code(code);
                let k = exps.iter().rposition(|&e| e > 0).expect("nonzero code") + 1;
                let mut prev = exps.clone();
                prev[k - 1] -= 1;
                let parent = out[self.code_of_exps(&prev) * self.nfact].as_ref().expect("parent first");
                let scaled = self.right_word(parent, &l_word(k));
                let f = self.params.q.pow(-(k as i64 - 1)).expect("q invertible");
                scaled.iter().map(|x| x * &f).collect()
            };
            out[base] = Some(v);
            for &p in by_length.iter().skip(1) {
                let i = (1..self.params.n).find(|&i| !self.ascent[p][i - 1]).expect("non-identity has a descent");
                let parent = self.shift[p][i - 1] as usize;
                let v = self.right_act(out[base + parent].as_ref().expect("shorter first"), i);
                out[base + p] = Some(v);
            }
        }
        out.into_iter().map(|v| v.expect("all labels reached")).collect()
    }

    fn perm_idx(&self, p: &Perm) -> usize {
        self.perm_index[p] as usize
    }
}

/// `T_{k-1} .. T_1 T_0 T_1 .. T_{k-1}`.
pub(crate) fn l_word(k: usize) -> Vec<usize> {
    let mut w: Vec<usize> = (0..k).rev().collect();
    w.extend(1..k);
    w
}

/// Builds the right-multiplication tables from the rewriting rules.
struct Engine<'a> {
    alg: &'a Algebra,
    q: Scalar,
    qm1: Scalar,
    qinv: Scalar,
    ell: usize,
    n: usize,
    /// `twl[p][k-1]` expresses `T_{w_p} L_k` as `sum c L_j T_u`, keyed by `(j, u)`.
    twl: Vec<Vec<BTreeMap<(usize, u32), Scalar>>>,
    /// Normal form of `L_j^ℓ`, index `j-1`.
    nf_pow: Vec<Combo>,
    memo: HashMap<Vec<usize>, Combo>,
}

impl<'a> Engine<'a> {
    fn new(alg: &'a Algebra) -> Engine<'a> {
        let p = &alg.params;
        let one = p.field.one();
        let mut e = Engine {
            alg,
            q: p.q.clone(),
            qm1: &p.q - &one,
            qinv: p.q.inv().expect("q invertible"),
            ell: p.ell,
            n: p.n,
            twl: Vec::new(),
            nf_pow: Vec::new(),
            memo: HashMap::new(),
        };
        e.compute_twl();
        e.compute_nf_pow();
        e
    }

    fn index(&self, exps: &[usize], p: u32) -> u32 {
        (self.alg.code_of_exps(exps) * self.alg.nfact + p as usize) as u32
    }

    /// Label times `T_i` for `i >= 1`.
    fn label_right_t(&self, idx: u32, i: usize, c: &Scalar, acc: &mut Combo) {
        let nf = self.alg.nfact as u32;
        let (code, p) = (idx / nf, idx % nf);
        let up = code * nf + self.alg.shift[p as usize][i - 1];
        if self.alg.ascent[p as usize][i - 1] {
            combo_add(acc, up, c.clone());
        } else {
            combo_add(acc, idx, c * &self.qm1);
            combo_add(acc, up, c * &self.q);
        }
    }

    fn combo_right_t(&self, x: &Combo, i: usize) -> Combo {
        let mut acc = Combo::new();
        for (idx, c) in x {
            self.label_right_t(*idx, i, c, &mut acc);
        }
        acc
    }

    fn combo_right_perm(&self, x: &Combo, p: u32) -> Combo {
        self.alg.perms[p as usize].reduced_word().iter().fold(x.clone(), |acc, &i| self.combo_right_t(&acc, i))
    }

    fn lt_right_t(&self, x: &BTreeMap<(usize, u32), Scalar>, i: usize) -> BTreeMap<(usize, u32), Scalar> {
        let mut acc: BTreeMap<(usize, u32), Scalar> = BTreeMap::new();
        let mut add = |key: (usize, u32), c: Scalar| {
            let e = acc.entry(key).or_insert_with(|| self.alg.field().zero());
            *e += &c;
        };
        for (&(j, u), c) in x {
            let up = self.alg.shift[u as usize][i - 1];
            if self.alg.ascent[u as usize][i - 1] {
                add((j, up), c.clone());
            } else {
                add((j, u), c * &self.qm1);
                add((j, up), c * &self.q);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        acc
    }

    fn compute_twl(&mut self) {
        let alg = self.alg;
        let n = self.n;
        let mut order: Vec<usize> = (0..alg.nfact).collect();
        order.sort_by_key(|&p| alg.perms[p].length());
        let mut twl: Vec<Vec<BTreeMap<(usize, u32), Scalar>>> = vec![Vec::new(); alg.nfact];
        let one = alg.field().one();
        for &p in &order {
            if alg.perms[p].is_identity() {
                twl[p] = (1..=n).map(|k| BTreeMap::from([((k, p as u32), one.clone())])).collect();
                continue;
            }
            let i = (1..n).find(|&i| !alg.ascent[p][i - 1]).expect("descent");
            let wp = alg.shift[p][i - 1] as usize;
            let mut row = Vec::with_capacity(n);
            for k in 1..=n {
                let r = if k == i {
                    // T_i L_i = L_{i+1} T_i - (q-1) L_{i+1}
                    let mut r = self.lt_right_t(&twl[wp][i], i);
                    for (key, c) in &twl[wp][i] {
                        let e = r.entry(*key).or_insert_with(|| alg.field().zero());
                        *e -= &(c * &self.qm1);
                    }
                    r
                } else if k == i + 1 {
                    // T_i L_{i+1} = L_i T_i + (q-1) L_{i+1}
                    let mut r = self.lt_right_t(&twl[wp][i - 1], i);
                    for (key, c) in &twl[wp][i] {
                        let e = r.entry(*key).or_insert_with(|| alg.field().zero());
                        *e += &(c * &self.qm1);
                    }
                    r
                } else {
                    self.lt_right_t(&twl[wp][k - 1], i)
                };
                let mut r = r;
                r.retain(|_, c| !c.is_zero());
                row.push(r);
            }
            twl[p] = row;
        }
        self.twl = twl;
    }

    fn unit_exps(&self) -> Vec<usize> {
        vec![0; self.n]
    }

    fn compute_nf_pow(&mut self) {
        let f = self.alg.field();
        let ell = self.ell;
        if self.n == 0 {
            return;
        }
        // prod_s (x - Q_s) = sum_m p_m x^m
        let mut poly = vec![f.one()];
        for qs in &self.alg.params.big_q {
            let mut next = vec![f.zero(); poly.len() + 1];
            for (m, c) in poly.iter().enumerate() {
                next[m + 1] += c;
                next[m] -= &(c * qs);
            }
            poly = next;
        }
        let id = self.alg.perm_idx(&Perm::identity(self.n)) as u32;
        let mut first = Combo::new();
        for (m, c) in poly.iter().enumerate().take(ell) {
            let mut e = self.unit_exps();
            e[0] = m;
            combo_add(&mut first, self.index(&e, id), -c);
        }
        self.nf_pow.push(first);
        for j in 2..=self.n {
            let mut acc = Combo::new();
            for (idx, c) in self.nf_pow[j - 2].clone() {
                self.label_left_t(idx, j - 1, &c, &mut acc);
            }
            for c in 1..ell {
                let mut e = self.unit_exps();
                e[j - 2] = c;
                e[j - 1] = ell - c;
                combo_add(&mut acc, self.index(&e, id), self.qm1.clone());
            }
            let mut r = self.combo_right_t(&acc, j - 1);
            for c in r.values_mut() {
                *c *= &self.qinv;
            }
            self.nf_pow.push(r);
        }
    }

    /// `T_i * L^d T_v` for `d` supported on `1..=i` and `v` in `S_i`:
    /// `T_i L_i^m = L_{i+1}^m T_i - (q-1) sum_{c<m} L_i^c L_{i+1}^{m-c}`.
    fn label_left_t(&self, idx: u32, i: usize, c: &Scalar, acc: &mut Combo) {
        let nf = self.alg.nfact as u32;
        let (code, p) = ((idx / nf) as usize, idx % nf);
        let mut d = self.alg.exps_of_code(code);
        let v = &self.alg.perms[p as usize];
        debug_assert!(d[i..].iter().all(|&e| e == 0));
        debug_assert!(v.images()[i..].iter().enumerate().all(|(k, &x)| x == i + k + 1));
        let m = d[i - 1];
        d[i - 1] = 0;
        let mut top = d.clone();
        top[i] = m;
        let sv = self.alg.perm_idx(&v.simple_mul(i)) as u32;
        combo_add(acc, self.index(&top, sv), c.clone());
        for k in 0..m {
            let mut e = d.clone();
            e[i - 1] = k;
            e[i] = m - k;
            combo_add(acc, self.index(&e, p), -(c * &self.qm1));
        }
    }

    /// Normal form of `L^b` for an arbitrary exponent vector.
    fn pow_nf(&mut self, b: &[usize]) -> Combo {
        let Some(j) = b.iter().rposition(|&e| e >= self.ell) else {
            let id = self.alg.perm_idx(&Perm::identity(self.n)) as u32;
            return Combo::from([(self.index(b, id), self.alg.field().one())]);
        };
        if let Some(r) = self.memo.get(b) {
            return r.clone();
        }
        let nf = self.alg.nfact as u32;
        let mut acc = Combo::new();
        for (idx, c) in self.nf_pow[j].clone() {
            let d = self.alg.exps_of_code((idx / nf) as usize);
            let v = idx % nf;
            let mut e = b.to_vec();
            e[j] -= self.ell;
            for (x, y) in e.iter_mut().zip(&d) {
                *x += y;
            }
            let inner = self.pow_nf(&e);
            for (k, x) in self.combo_right_perm(&inner, v) {
                combo_add(&mut acc, k, &x * &c);
            }
        }
        self.memo.insert(b.to_vec(), acc.clone());
        acc
    }

    /// `L^a T_w * T_0 = L^a (T_w L_1)`.
    fn label_right_t0(&mut self, idx: u32) -> Combo {
        let nf = self.alg.nfact as u32;
        let (code, p) = ((idx / nf) as usize, idx % nf);
        let a = self.alg.exps_of_code(code);
        let mut acc = Combo::new();
        for ((j, u), c) in self.twl[p as usize][0].clone() {
            let mut b = a.clone();
            b[j - 1] += 1;
            if b[j - 1] < self.ell {
                combo_add(&mut acc, self.index(&b, u), c);
            } else {
                let pw = self.pow_nf(&b);
                for (k, x) in self.combo_right_perm(&pw, u) {
                    combo_add(&mut acc, k, &x * &c);
                }
            }
        }
        acc
    }

    fn right_matrices(mut self) -> Vec<SparseRows> {
        let d = self.alg.dim() as u32;
        let mut out = Vec::with_capacity(self.n);
        if self.n == 0 {
            return out;
        }
        out.push(SparseRows((0..d).map(|idx| self.label_right_t0(idx).into_iter().collect()).collect()));
        let one = self.alg.field().one();
        for i in 1..self.n {
            out.push(SparseRows(
                (0..d)
                    .map(|idx| {
                        let mut acc = Combo::new();
                        self.label_right_t(idx, i, &one, &mut acc);
                        acc.into_iter().collect()
                    })
                    .collect(),
            ));
        }
        out
    }
}

/// An element of `H_n`, stored densely on the Ariki-Koike basis.
#[derive(Clone)]
pub struct AlgebraElement {
    alg: Arc<Algebra>,
    coeffs: Vec<Scalar>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.alg.params == other.alg.params && self.coeffs == other.coeffs
    }
}

impl Eq for AlgebraElement {}

impl AlgebraElement {
    pub fn from_coeffs(alg: &Arc<Algebra>, coeffs: Vec<Scalar>) -> Result<AlgebraElement> {
        if coeffs.len() != alg.dim() {
            return Err(Error::DimensionMismatch { expected: alg.dim(), got: coeffs.len() });
        }
        if let Some(x) = coeffs.iter().find(|x| x.field() != alg.field()) {
            return Err(Error::FieldMismatch(alg.field(), x.field()));
        }
        Ok(AlgebraElement { alg: alg.clone(), coeffs })
    }

    pub fn zero(alg: &Arc<Algebra>) -> AlgebraElement {
        AlgebraElement { alg: alg.clone(), coeffs: vec![alg.field().zero(); alg.dim()] }
    }

    pub fn one(alg: &Arc<Algebra>) -> AlgebraElement {
        AlgebraElement { alg: alg.clone(), coeffs: alg.unit_vec() }
    }

    pub fn scalar(alg: &Arc<Algebra>, c: &Scalar) -> AlgebraElement {
        Self::one(alg).scale(c)
    }

    pub fn basis(alg: &Arc<Algebra>, idx: usize) -> AlgebraElement {
        let mut e = Self::zero(alg);
        e.coeffs[idx] = alg.field().one();
        e
    }

    /// `T_i` for `0 <= i < n`.
    pub fn generator(alg: &Arc<Algebra>, i: usize) -> Result<AlgebraElement> {
        if i >= alg.num_generators() {
            return Err(Error::OutOfRange { index: i, range: format!("0..{}", alg.num_generators()) });
        }
        Ok(AlgebraElement { alg: alg.clone(), coeffs: alg.generator_vec(i) })
    }

    /// `T_w`, built from the lexicographically smallest reduced word.
    pub fn t_w(alg: &Arc<Algebra>, w: &Perm) -> Result<AlgebraElement> {
        Self::t_word(alg, &w.reduced_word(), w.degree())
    }

    /// `T_{i_1} .. T_{i_k}` for a word in `1..n`.
    pub fn t_word(alg: &Arc<Algebra>, word: &[usize], degree: usize) -> Result<AlgebraElement> {
        if degree != alg.n() {
            return Err(Error::DegreeMismatch(degree, alg.n()));
        }
        if let Some(&i) = word.iter().find(|&&i| i == 0 || i >= alg.n()) {
            return Err(Error::OutOfRange { index: i, range: format!("1..{}", alg.n()) });
        }
        Ok(AlgebraElement { alg: alg.clone(), coeffs: alg.right_word(&alg.unit_vec(), word) })
    }

    /// `L_k = q^{-(k-1)} T_{k-1}..T_0..T_{k-1}`, for `1 <= k <= n`.
    pub fn l_elem(alg: &Arc<Algebra>, k: usize) -> Result<AlgebraElement> {
        if k == 0 || k > alg.n() {
            return Err(Error::OutOfRange { index: k, range: format!("1..={}", alg.n()) });
        }
        let v = alg.right_word(&alg.unit_vec(), &l_word(k));
        let f = alg.params.q.pow(-(k as i64 - 1)).expect("q invertible");
        Ok(AlgebraElement { alg: alg.clone(), coeffs: v.iter().map(|x| x * &f).collect() })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coeffs)
    }

    /// Nonzero terms as `(label, coefficient)`.
    pub fn terms(&self) -> Vec<(BasisLabel, Scalar)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (self.alg.label(i), c.clone())).collect()
    }

    pub fn coefficient(&self, label: &BasisLabel) -> Option<&Scalar> {
        self.alg.index_of(label).map(|i| &self.coeffs[i])
    }

    fn same(&self, other: &AlgebraElement) -> Result<()> {
        if Arc::ptr_eq(&self.alg, &other.alg) || self.alg.params == other.alg.params {
            Ok(())
        } else {
            Err(Error::ParamsMismatch)
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.same(other)?;
        Ok(AlgebraElement { alg: self.alg.clone(), coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.same(other)?;
        Ok(AlgebraElement { alg: self.alg.clone(), coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() })
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        AlgebraElement { alg: self.alg.clone(), coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// `self - c`.
    pub fn minus_scalar(&self, c: &Scalar) -> AlgebraElement {
        let mut e = self.clone();
        e.coeffs[0] -= c;
        e
    }

    /// `self * T_g`.
    pub fn right_generator(&self, g: usize) -> AlgebraElement {
        AlgebraElement { alg: self.alg.clone(), coeffs: self.alg.right_act(&self.coeffs, g) }
    }

    /// `T_g * self`.
    pub fn left_generator(&self, g: usize) -> AlgebraElement {
        AlgebraElement { alg: self.alg.clone(), coeffs: self.alg.left_act(&self.coeffs, g) }
    }

    /// `T_{i_1}..T_{i_k} * self`.
    pub fn left_word(&self, word: &[usize]) -> AlgebraElement {
        AlgebraElement { alg: self.alg.clone(), coeffs: self.alg.left_word(word, &self.coeffs) }
    }

    pub fn right_word(&self, word: &[usize]) -> AlgebraElement {
        AlgebraElement { alg: self.alg.clone(), coeffs: self.alg.right_word(&self.coeffs, word) }
    }

    /// The product, expanding each basis label of `other` into a generator word.
    pub fn mul(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.same(other)?;
        let alg = &self.alg;
        let mut acc = vec![alg.field().zero(); alg.dim()];
        for (idx, c) in other.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (f, word) = alg.label_word(idx);
            let v = alg.right_word(&self.coeffs, &word);
            crate::arith::add_scaled(&mut acc, &(c * &f), &v);
        }
        Ok(AlgebraElement { alg: alg.clone(), coeffs: acc })
    }

    /// The anti-involution fixing every `T_i`: `(L^a T_w)* = T_{w^{-1}} L^a`.
    pub fn star(&self) -> AlgebraElement {
        let alg = &self.alg;
        let mut acc = vec![alg.field().zero(); alg.dim()];
        for (idx, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let label = alg.label(idx);
            let winv = alg.perm_idx(&label.w.inverse());
            let mut v = vec![alg.field().zero(); alg.dim()];
            v[winv] = alg.field().one();
            let (f, word) = alg.label_word(alg.index_of(&BasisLabel { exps: label.exps.clone(), w: Perm::identity(alg.n()) }).expect("valid"));
            let v = alg.right_word(&v, &word);
            crate::arith::add_scaled(&mut acc, &(c * &f), &v);
        }
        AlgebraElement { alg: alg.clone(), coeffs: acc }
    }

    /// The image under `H_n -> H_{n+1}`.
    pub fn embed(&self, target: &Arc<Algebra>) -> Result<AlgebraElement> {
        if target.params != self.alg.params.with_n(self.alg.n() + 1) {
            return Err(Error::ParamsMismatch);
        }
        let mut coeffs = vec![target.field().zero(); target.dim()];
        for (idx, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let label = self.alg.label(idx);
            let mut exps = label.exps;
            exps.push(0);
            let j = target.index_of(&BasisLabel { exps, w: label.w.extend() }).expect("embedded label");
            coeffs[j] = c.clone();
        }
        Ok(AlgebraElement { alg: target.clone(), coeffs })
    }

    /// Coordinates over `H_n` in the free basis `L_{n+1}^a T_{n,k}` of `H_{n+1}`,
    /// keyed by `(a, k)`; `T_{n,n+1} = 1`.
    pub fn free_coordinates(&self, base: &Arc<Algebra>) -> Result<BTreeMap<(usize, usize), AlgebraElement>> {
        let n = base.n();
        if self.alg.params != base.params.with_n(n + 1) {
            return Err(Error::ParamsMismatch);
        }
        let mut out: BTreeMap<(usize, usize), AlgebraElement> = BTreeMap::new();
        let mut coset_inv: HashMap<usize, Perm> = HashMap::new();
        for (idx, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let label = self.alg.label(idx);
            let k = label.w.image(n + 1);
            let sinv = coset_inv.entry(k).or_insert_with(|| interval_perm(n + 1, n, k).expect("in range").inverse());
            let u = label.w.compose(sinv)?.restrict().expect("u fixes n+1");
            let a = label.exps[n];
            let j = base.index_of(&BasisLabel { exps: label.exps[..n].to_vec(), w: u }).expect("valid label");
            let e = out.entry((a, k)).or_insert_with(|| AlgebraElement::zero(base));
            e.coeffs[j] = c.clone();
        }
        Ok(out)
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = terms.iter().map(|(l, c)| format!("({c})*{l}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Serialize for AlgebraElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            a: &'a [usize],
            w: &'a Perm,
            c: &'a Scalar,
        }
        let terms = self.terms();
        let mut seq = s.serialize_seq(Some(terms.len()))?;
        for (l, c) in &terms {
            seq.serialize_element(&Term { a: &l.exps, w: &l.w, c })?;
        }
        seq.end()
    }
}
