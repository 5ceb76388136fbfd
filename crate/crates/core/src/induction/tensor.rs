use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::induced_params;
use crate::arith::{unit_vec, ExactMatrix, Frame, Scalar};
use crate::cellular::specht_rep;
use crate::combinatorics::{standard_tableaux, MultiPartition};
use crate::error::Result;
use crate::hecke::{Algebra, AlgebraElement, ModuleRep, Params, RightModule};
use crate::symgroup::interval_word;

/// `S(μ) ⊗_{H_n} H_{n+1}` on the basis `m_t ⊗ L_{n+1}^a T_{n,k}`, ordered by `t`, then `a`, then `k`.
pub fn tensor_model(params: &Params, mu: &MultiPartition) -> Result<ModuleRep> {
    let small = Algebra::get(params);
    let big = Algebra::get(&induced_params(params));
    let sp = specht_rep(params, mu)?;
    let field = params.field;
    let (ell, n) = (params.ell, params.n);
    let ts = standard_tableaux(mu);
    let d = ts.len();
    let f = ell * (n + 1);
    let coset = |a: usize, k: usize| a * (n + 1) + (k - 1);

    // action of each Ariki-Koike basis element of H_n on S(μ)
    let label_mats: Vec<ExactMatrix> = (0..small.dim())
        .map(|idx| {
            let (c, word) = small.label_word(idx);
            sp.word_matrix(&word).scale(&c)
        })
        .collect();
    let act = |h: &AlgebraElement| -> Result<ExactMatrix> {
        let mut acc = ExactMatrix::zeros(field, d, d);
        for (idx, c) in h.coeffs().iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&label_mats[idx].scale(c))?;
            }
        }
        Ok(acc)
    };

    let l_top = AlgebraElement::l_elem(&big, n + 1)?;
    let mut reps = Vec::with_capacity(f);
    for a in 0..ell {
        let mut x = AlgebraElement::one(&big);
        for _ in 0..a {
            x = x.mul(&l_top)?;
        }
        for k in 1..=n + 1 {
            reps.push(((a, k), x.right_word(&interval_word(n, k))));
        }
    }

    let mut gens = Vec::with_capacity(big.num_generators());
    for g in 0..big.num_generators() {
        let mut m = ExactMatrix::zeros(field, d * f, d * f);
        for ((a, k), x) in &reps {
            for ((a2, k2), h) in x.right_generator(g).free_coordinates(&small)? {
                let hm = act(&h)?;
                for t in 0..d {
                    for t2 in 0..d {
                        let c = hm.get(t, t2);
                        if !c.is_zero() {
                            m.set(t * f + coset(*a, *k), t2 * f + coset(a2, k2), c.clone());
                        }
                    }
                }
            }
        }
        gens.push(m);
    }
    let mut labels = Vec::with_capacity(d * f);
    for t in &ts {
        for a in 0..ell {
            for k in 1..=n + 1 {
                labels.push(format!("{}|L{}^{a}*T[{n},{k}]", serde_json::to_string(t)?, n + 1));
            }
        }
    }
    ModuleRep::new(induced_params(params), labels, gens)
}

/// An invertible `X` with `a(g) X = X b(g)` for every generator, if one is found.
///
/// `a` must be generated by the basis vector `seed`. A homomorphism is then fixed by the
/// image `y` of the seed, and the conditions on `y` are linear: with `b_i = e_seed a(w_i)`
/// a basis of `a` and `b_i a(g) = sum_j c_j b_j`, we need `y (b(w_i) b(g) - sum_j c_j b(w_j)) = 0`.
/// Random elements of the solution space are tried until one is invertible.
pub fn find_isomorphism(a: &ModuleRep, b: &ModuleRep, seed: usize, rng_seed: u64) -> Result<Option<ExactMatrix>> {
    let field = a.field();
    let dim = a.dim();
    if dim != b.dim() || a.num_generators() != b.num_generators() {
        return Ok(None);
    }
    if dim == 0 {
        return Ok(Some(ExactMatrix::zeros(field, 0, 0)));
    }
    let mut frame = Frame::new(field, dim);
    let mut vecs: Vec<Vec<Scalar>> = Vec::new();
    let mut words: Vec<ExactMatrix> = Vec::new();
    let start = unit_vec(field, dim, seed);
    frame.push(start.clone())?;
    vecs.push(start);
    words.push(ExactMatrix::identity(field, dim));
    let mut next = 0;
    while next < vecs.len() && vecs.len() < dim {
        for g in 0..a.num_generators() {
            let w = a.act(&vecs[next], g);
            if frame.push(w.clone()).is_ok() {
                vecs.push(w);
                words.push(words[next].mul(&b.generators[g])?);
            }
        }
        next += 1;
    }
    if vecs.len() < dim {
        log::warn!("seed {seed} does not generate the module");
        return Ok(None);
    }

    let mut stacked: Option<ExactMatrix> = None;
    for (i, v) in vecs.iter().enumerate() {
        for g in 0..a.num_generators() {
            let c = frame.coordinates(&a.act(v, g))?.expect("the frame spans the module");
            let mut m = words[i].mul(&b.generators[g])?;
            for (j, cj) in c.iter().enumerate() {
                if !cj.is_zero() {
                    m = m.sub(&words[j].scale(cj))?;
                }
            }
            stacked = Some(match stacked {
                None => m,
                Some(s) => s.hcat(&m)?,
            });
        }
    }
    let solutions = match stacked {
        Some(s) => s.left_kernel(),
        None => (0..dim).map(|i| unit_vec(field, dim, i)).collect(),
    };
    if solutions.is_empty() {
        return Ok(None);
    }
    let basis = ExactMatrix::from_rows(field, dim, vecs)?;
    let basis_inv = basis.inverse().expect("frame vectors are independent");
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    for _ in 0..24 {
        let mut y = vec![field.zero(); dim];
        for s in &solutions {
            let r = field.from_i64(rng.gen_range(1..=1000));
            for (acc, x) in y.iter_mut().zip(s) {
                *acc = &*acc + &(&r * x);
            }
        }
        let rows: Vec<Vec<Scalar>> = words.iter().map(|w| w.apply(&y)).collect();
        let x = basis_inv.mul(&ExactMatrix::from_rows(field, dim, rows)?)?;
        if x.rank() == dim && a.intertwines(b, &x)? {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Whether the tensor model and the given quotient model of `Ind S(μ)` are isomorphic.
pub fn compare_models(params: &Params, mu: &MultiPartition, quotient: &ModuleRep) -> Result<bool> {
    let tensor = tensor_model(params, mu)?;
    // m_{t^μ} ⊗ 1 generates the induced module
    let seed = params.n;
    Ok(find_isomorphism(&tensor, quotient, seed, 0x1d5eed)?.is_some())
}
