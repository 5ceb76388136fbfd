use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::arith::unit_vec;
use crate::combinatorics::{initial_semistandard, partitions};
use crate::hecke::{preset, random_element, relation_failures, Generic, Preset};

fn part(p: &[usize]) -> MultiPartition {
    MultiPartition::partition(p)
}

fn multi(c: &[&[usize]]) -> MultiPartition {
    MultiPartition::new(c.iter().map(|p| p.to_vec()).collect()).unwrap()
}

fn generic(ell: usize, n: usize) -> Params {
    Generic.params(ell, n).unwrap()
}

#[test]
fn m_lambda_examples() {
    let p = generic(1, 3);
    let alg = Algebra::get(&p);
    for lam in partitions(3) {
        let lam = MultiPartition::partition(&lam);
        assert_eq!(u_plus(&alg, &lam).unwrap(), AlgebraElement::one(&alg));
        assert_eq!(m_lambda(&alg, &lam).unwrap(), x_lambda(&alg, &lam).unwrap());
    }
    let alg = Algebra::get(&generic(1, 2));
    let x = x_lambda(&alg, &part(&[2])).unwrap();
    assert_eq!(x, AlgebraElement::one(&alg).add(&AlgebraElement::generator(&alg, 1).unwrap()).unwrap());

    let alg = Algebra::get(&generic(2, 2));
    let lam = multi(&[&[1], &[1]]);
    let q2 = alg.params().big_q[1].clone();
    assert_eq!(x_lambda(&alg, &lam).unwrap(), AlgebraElement::one(&alg));
    assert_eq!(m_lambda(&alg, &lam).unwrap(), AlgebraElement::l_elem(&alg, 1).unwrap().minus_scalar(&q2));
}

#[test]
fn u_plus_commutes_with_x() {
    for (ell, n) in [(2, 3), (3, 2)] {
        let alg = Algebra::get(&generic(ell, n));
        for lam in all_multipartitions(ell, n) {
            let u = u_plus(&alg, &lam).unwrap();
            let x = x_lambda(&alg, &lam).unwrap();
            assert_eq!(u.mul(&x).unwrap(), x.mul(&u).unwrap(), "{lam}");
        }
    }
}

#[test]
fn m_st_examples() {
    let alg = Algebra::get(&generic(2, 3));
    for lam in all_multipartitions(2, 3) {
        let ts = standard_tableaux(&lam);
        let t0 = StdTableau::initial(&lam);
        assert_eq!(m_st(&alg, &t0, &t0).unwrap(), m_lambda(&alg, &lam).unwrap());
        for s in &ts {
            for t in &ts {
                assert_eq!(m_st(&alg, s, t).unwrap().star(), m_st(&alg, t, s).unwrap());
            }
        }
    }
    let a = StdTableau::initial(&multi(&[&[2], &[1]]));
    let b = StdTableau::initial(&multi(&[&[3], &[]]));
    assert!(m_st(&alg, &a, &b).is_err());
}

#[test]
fn cellular_basis_sizes() {
    let cb = CellularBasis::get(&generic(1, 2)).unwrap();
    assert_eq!(cb.len(), 2);
    assert_eq!(cb.shapes().len(), 2);
    let cb = CellularBasis::get(&generic(2, 2)).unwrap();
    assert_eq!(cb.len(), 8);
    assert_eq!(cb.matrix().rank(), 8);
    for (si, lam) in cb.shapes().iter().enumerate() {
        let alg = Algebra::get(cb.params());
        let got = cb.to_cellular(m_lambda(&alg, lam).unwrap().coeffs());
        assert_eq!(got, unit_vec(alg.field(), 8, cb.position(si, 0, 0)));
    }
    for pos in 0..cb.len() {
        let (sh, s, t) = cb.triple(pos);
        assert_eq!(cb.position(sh, s, t), pos);
    }
}

#[test]
fn star_transposes_cellular_coordinates() {
    let p = generic(2, 3);
    let alg = Algebra::get(&p);
    let cb = CellularBasis::get(&p).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..4 {
        let h = random_element(&alg, &mut rng, 10);
        let c = cb.to_cellular(h.coeffs());
        let cs = cb.to_cellular(h.star().coeffs());
        for pos in 0..cb.len() {
            let (sh, s, t) = cb.triple(pos);
            assert_eq!(cs[cb.position(sh, t, s)], c[pos]);
        }
    }
}

#[test]
fn cell_ideals_are_two_sided() {
    let p = generic(2, 2);
    let alg = Algebra::get(&p);
    let cb = CellularBasis::get(&p).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let hs: Vec<AlgebraElement> = (0..3).map(|_| random_element(&alg, &mut rng, 6)).collect();
    for lam in cb.shapes() {
        for pos in 0..cb.len() {
            let sh = &cb.shapes()[cb.triple(pos).0];
            if !sh.strictly_dominates(lam).unwrap() {
                continue;
            }
            let m = AlgebraElement::from_coeffs(&alg, cb.element(pos).to_vec()).unwrap();
            for h in &hs {
                assert!(in_higher_ideal(&cb, lam, m.mul(h).unwrap().coeffs()).unwrap());
                assert!(in_higher_ideal(&cb, lam, h.mul(&m).unwrap().coeffs()).unwrap());
            }
        }
    }
}

#[test]
fn specht_examples() {
    let p = generic(1, 3);
    let q = p.q.clone();
    let minus_one = -&p.field.one();
    let row = specht_rep(&p, &part(&[3])).unwrap();
    assert_eq!(row.basis_labels.len(), 1);
    for g in &row.generators[1..] {
        assert_eq!(g.get(0, 0), &q);
    }
    let col = specht_rep(&p, &part(&[1, 1, 1])).unwrap();
    for g in &col.generators[1..] {
        assert_eq!(g.get(0, 0), &minus_one);
    }
    let s = specht_rep(&generic(2, 2), &multi(&[&[1], &[1]])).unwrap();
    assert_eq!(s.basis_labels.len(), 2);
}

#[test]
fn sign_module_direct_oracle() {
    // m_(1,1) = T_1 + ... is just 1 in H_2 with ℓ=1, and S((1,1)) is m_λ H_2 / H_2((2))
    let p = generic(1, 2);
    let alg = Algebra::get(&p);
    let one = AlgebraElement::one(&alg);
    let t1 = AlgebraElement::generator(&alg, 1).unwrap();
    // 1·T_1 = T_1 = (1 + T_1) - 1, and 1 + T_1 = m_(2) lies in the higher ideal
    let x2 = m_lambda(&alg, &part(&[2])).unwrap();
    assert_eq!(t1.add(&one).unwrap(), x2);
    let col = specht_rep(&p, &part(&[1, 1])).unwrap();
    assert_eq!(col.generators[1].get(0, 0), &-&p.field.one());
}

#[test]
fn specht_relations() {
    for (ell, n) in [(1, 4), (2, 3), (3, 2)] {
        let p = generic(ell, n);
        for lam in all_multipartitions(ell, n) {
            let rep = specht_rep(&p, &lam).unwrap();
            assert_eq!(rep.basis_labels.len(), standard_tableaux(&lam).len());
            assert!(relation_failures(&rep, &p).is_empty(), "{lam}");
        }
    }
    let p = preset("root-of-unity:3").unwrap().params(2, 2).unwrap();
    for lam in all_multipartitions(2, 2) {
        assert!(relation_failures(&specht_rep(&p, &lam).unwrap(), &p).is_empty());
    }
}

#[test]
fn perm_module_examples() {
    let p = generic(2, 2);
    let mu = multi(&[&[1], &[1]]);
    let pm = perm_module(&p, &mu).unwrap();
    assert_eq!(pm.span.dim(), 4);
    assert_eq!(pm.rep.basis_labels.len(), 4);
    let alg = Algebra::get(&p);
    let last = pm.layers.len() - 1;
    assert_eq!(pm.layers[last], initial_semistandard(&mu));
    let t0 = StdTableau::initial(&mu);
    let j = pm.tableaux[last].iter().position(|t| t == &t0).unwrap();
    assert_eq!(pm.vectors[last][j], m_lambda(&alg, &mu).unwrap().into_coeffs());
    assert_eq!(m_St(&alg, &initial_semistandard(&mu), &t0).unwrap(), m_lambda(&alg, &mu).unwrap());
    assert!(relation_failures(&pm.rep, &p).is_empty());

    for n in 1..=4 {
        assert_eq!(perm_module(&generic(1, n), &part(&[n])).unwrap().span.dim(), 1);
    }
}

#[test]
fn m_st_sum_matches_basis_vectors() {
    let p = generic(1, 3);
    let alg = Algebra::get(&p);
    let mu = part(&[2, 1]);
    let pm = perm_module(&p, &mu).unwrap();
    for (i, s) in pm.layers.iter().enumerate() {
        for (j, t) in pm.tableaux[i].iter().enumerate() {
            assert_eq!(m_St(&alg, s, t).unwrap().into_coeffs(), pm.vectors[i][j]);
        }
    }
}

#[test]
fn filtration_examples() {
    let cert = djm_filtration(&generic(1, 3), &part(&[3])).unwrap();
    assert!(cert.ok);
    assert_eq!(cert.chain.len(), 1);

    let cert = djm_filtration(&generic(2, 2), &multi(&[&[1], &[1]])).unwrap();
    assert!(cert.ok, "{cert:?}");
    let shapes: Vec<MultiPartition> = cert.chain.iter().map(|c| c.shape.clone()).collect();
    assert_eq!(shapes, vec![multi(&[&[2], &[]]), multi(&[&[1, 1], &[]]), multi(&[&[1], &[1]])]);
    assert_eq!(cert.chain.iter().map(|c| c.dim).collect::<Vec<_>>(), vec![1, 2, 4]);

    let cert = djm_filtration(&generic(1, 3), &part(&[2, 1])).unwrap();
    assert!(cert.ok);
    let shapes: Vec<MultiPartition> = cert.chain.iter().map(|c| c.shape.clone()).collect();
    assert_eq!(shapes, vec![part(&[3]), part(&[2, 1])]);
    assert_eq!(cert.chain.last().unwrap().dim, 3);
}

#[test]
fn filtration_json_shape() {
    let cert = djm_filtration(&generic(1, 2), &part(&[1, 1])).unwrap();
    let v = serde_json::to_value(&cert).unwrap();
    assert_eq!(v["ok"], true);
    assert_eq!(v["chain"][0]["layer_index"], 1);
    assert_eq!(v["chain"][0]["shape"], serde_json::json!([[2]]));
}
