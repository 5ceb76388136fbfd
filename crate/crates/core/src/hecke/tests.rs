use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::arith::{ExactMatrix, Field, Scalar};
use crate::symgroup::{interval_word, Perm};

fn generic(ell: usize, n: usize) -> Arc<Algebra> {
    Algebra::get(&Generic.params(ell, n).unwrap())
}

fn q(alg: &Arc<Algebra>) -> Scalar {
    alg.params().q.clone()
}

fn s(n: usize, i: usize) -> Perm {
    Perm::simple(n, i).unwrap()
}

#[test]
fn unit_and_first_jucys_murphy() {
    let alg = generic(2, 3);
    assert_eq!(AlgebraElement::t_w(&alg, &Perm::identity(3)).unwrap(), AlgebraElement::one(&alg));
    let l1 = AlgebraElement::l_elem(&alg, 1).unwrap();
    assert_eq!(l1, AlgebraElement::generator(&alg, 0).unwrap());
    let terms = l1.terms();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0].0.exps, vec![1, 0, 0]);
    assert!(terms[0].0.w.is_identity());
    // every L_k is a single basis monomial
    for k in 1..=3 {
        let mut exps = vec![0; 3];
        exps[k - 1] = 1;
        let idx = alg.index_of(&BasisLabel { exps, w: Perm::identity(3) }).unwrap();
        assert_eq!(AlgebraElement::l_elem(&alg, k).unwrap(), AlgebraElement::basis(&alg, idx));
    }
}

#[test]
fn second_jucys_murphy_at_level_one() {
    // oracle: regular representation on {1, T_1} written by hand, T_0 = Q_1
    let alg = generic(1, 2);
    let f = Field::Rational;
    let (qq, q1) = (f.from_i64(7), f.from_i64(2));
    let t1 = ExactMatrix::from_rows(f, 2, vec![vec![f.zero(), f.one()], vec![qq.clone(), &qq - &f.one()]]).unwrap();
    let t0 = ExactMatrix::identity(f, 2).scale(&q1);
    let l2 = t1.mul(&t0).unwrap().mul(&t1).unwrap().scale(&qq.inv().unwrap());
    let expected = l2.row(0).to_vec();
    let got = AlgebraElement::l_elem(&alg, 2).unwrap();
    // basis order: identity then s_1
    assert_eq!(got.coeffs(), &expected[..]);
    assert!(got.terms().iter().all(|(l, _)| l.exps == vec![0, 0]));
}

#[test]
fn quadratic_relation_products() {
    let alg = generic(2, 3);
    let qq = q(&alg);
    for i in 1..3 {
        let t = AlgebraElement::generator(&alg, i).unwrap();
        let lhs = t.mul(&t).unwrap();
        let rhs = t.scale(&(&qq - &alg.field().one())).add(&AlgebraElement::scalar(&alg, &qq)).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn length_additive_product() {
    let alg = generic(1, 3);
    let t1 = AlgebraElement::generator(&alg, 1).unwrap();
    let t21 = AlgebraElement::t_word(&alg, &[2, 1], 3).unwrap();
    let w = s(3, 1).compose(&s(3, 2)).unwrap().compose(&s(3, 1)).unwrap();
    assert_eq!(t1.mul(&t21).unwrap(), AlgebraElement::t_w(&alg, &w).unwrap());
}

#[test]
fn cyclotomic_square_at_level_two() {
    let alg = generic(2, 2);
    let f = alg.field();
    let t0 = AlgebraElement::generator(&alg, 0).unwrap();
    let (q1, q2) = (f.from_i64(2), f.from_i64(3));
    let rhs = t0.scale(&(&q1 + &q2)).sub(&AlgebraElement::scalar(&alg, &(&q1 * &q2))).unwrap();
    assert_eq!(t0.mul(&t0).unwrap(), rhs);
}

#[test]
fn cyclotomic_cube_at_level_three() {
    let alg = generic(3, 1);
    let f = alg.field();
    let t0 = AlgebraElement::generator(&alg, 0).unwrap();
    let mut p = AlgebraElement::one(&alg);
    for qs in [2, 3, 5] {
        p = p.mul(&t0.minus_scalar(&f.from_i64(qs))).unwrap();
    }
    assert!(p.is_zero());
    assert_eq!(alg.dim(), 3);
}

#[test]
fn star_examples() {
    let alg = generic(2, 3);
    let one = AlgebraElement::one(&alg);
    assert_eq!(one.star(), one);
    let t12 = AlgebraElement::t_word(&alg, &[1, 2], 3).unwrap();
    let t21 = AlgebraElement::t_word(&alg, &[2, 1], 3).unwrap();
    assert_eq!(t12.star(), t21);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..5 {
        let h = random_element(&alg, &mut rng, 6);
        assert_eq!(h.star().star(), h);
    }
    for k in 1..=3 {
        let l = AlgebraElement::l_elem(&alg, k).unwrap();
        assert_eq!(l.star(), l);
    }
}

#[test]
fn left_and_right_generators_agree_with_mul() {
    let alg = generic(2, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let h = random_element(&alg, &mut rng, 8);
    for g in 0..3 {
        let t = AlgebraElement::generator(&alg, g).unwrap();
        assert_eq!(h.right_generator(g), h.mul(&t).unwrap());
        assert_eq!(h.left_generator(g), t.mul(&h).unwrap());
    }
}

#[test]
fn embedding_is_multiplicative() {
    let small = generic(2, 2);
    let big = generic(2, 3);
    assert_eq!(AlgebraElement::one(&small).embed(&big).unwrap(), AlgebraElement::one(&big));
    for i in 0..2 {
        assert_eq!(
            AlgebraElement::generator(&small, i).unwrap().embed(&big).unwrap(),
            AlgebraElement::generator(&big, i).unwrap()
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..5 {
        let x = random_element(&small, &mut rng, 4);
        let y = random_element(&small, &mut rng, 4);
        let lhs = x.mul(&y).unwrap().embed(&big).unwrap();
        let rhs = x.embed(&big).unwrap().mul(&y.embed(&big).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
    assert!(AlgebraElement::one(&small).embed(&small).is_err());
}

fn reassemble(coords: &std::collections::BTreeMap<(usize, usize), AlgebraElement>, big: &Arc<Algebra>) -> AlgebraElement {
    let n = big.n() - 1;
    let mut acc = AlgebraElement::zero(big);
    for (&(a, k), c) in coords {
        let mut x = c.embed(big).unwrap();
        for _ in 0..a {
            x = x.mul(&AlgebraElement::l_elem(big, n + 1).unwrap()).unwrap();
        }
        x = x.right_word(&interval_word(n, k));
        acc = acc.add(&x).unwrap();
    }
    acc
}

#[test]
fn free_coordinates_examples() {
    let small = generic(2, 2);
    let big = generic(2, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let x = random_element(&small, &mut rng, 5);
    let c = x.embed(&big).unwrap().free_coordinates(&small).unwrap();
    assert_eq!(c.keys().copied().collect::<Vec<_>>(), vec![(0, 3)]);
    assert_eq!(c[&(0, 3)], x);
    let l3 = AlgebraElement::l_elem(&big, 3).unwrap();
    let c = l3.free_coordinates(&small).unwrap();
    assert_eq!(c.keys().copied().collect::<Vec<_>>(), vec![(1, 3)]);
    assert_eq!(c[&(1, 3)], AlgebraElement::one(&small));
    for _ in 0..5 {
        let h = random_element(&big, &mut rng, 10);
        assert_eq!(reassemble(&h.free_coordinates(&small).unwrap(), &big), h);
    }
}

#[test]
fn relations_hold_generic() {
    for (ell, n) in [(1, 3), (2, 3), (3, 2), (2, 2)] {
        let report = verify_relations(&Generic.params(ell, n).unwrap()).unwrap();
        assert!(report.ok(), "{report:?}");
    }
}

#[test]
fn relations_hold_at_roots_of_unity() {
    for (ell, n) in [(1, 3), (2, 2)] {
        let p = preset("root-of-unity:3").unwrap().params(ell, n).unwrap();
        let report = verify_relations(&p).unwrap();
        assert!(report.ok(), "{report:?}");
    }
}

#[test]
fn detects_broken_relations() {
    // a module where T_1 acts by 2 breaks the quadratic relation for q = 7
    let p = Generic.params(1, 2).unwrap();
    let f = p.field;
    let rep = ModuleRep::new(
        p.clone(),
        vec!["v".into()],
        vec![ExactMatrix::from_i64(f, &[&[2]]), ExactMatrix::from_i64(f, &[&[2]])],
    )
    .unwrap();
    let fails = relation_failures(&rep, &p);
    assert_eq!(fails, vec!["quadratic relation for T_1".to_string()]);
    let trivial = ModuleRep::new(
        p.clone(),
        vec!["v".into()],
        vec![ExactMatrix::from_i64(f, &[&[2]]), ExactMatrix::from_i64(f, &[&[7]])],
    )
    .unwrap();
    assert!(relation_failures(&trivial, &p).is_empty());
}

#[test]
fn element_json() {
    let alg = generic(2, 2);
    let t = AlgebraElement::generator(&alg, 1).unwrap().scale(&alg.field().from_ratio(1, 2).unwrap());
    assert_eq!(serde_json::to_string(&t).unwrap(), r#"[{"a":[0,0],"w":[2,1],"c":"1/2"}]"#);
}

#[test]
fn params_mismatch_is_an_error() {
    let a = generic(2, 2);
    let b = Algebra::get(&preset("root-of-unity:3").unwrap().params(2, 2).unwrap());
    assert!(AlgebraElement::one(&a).mul(&AlgebraElement::one(&b)).is_err());
    assert!(AlgebraElement::generator(&a, 2).is_err());
    assert!(AlgebraElement::l_elem(&a, 3).is_err());
}
