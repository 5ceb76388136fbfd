use super::*;
use crate::arith::Scalar;
use crate::cellular::perm_module;
use crate::combinatorics::{all_multipartitions, initial_semistandard, standard_tableaux};
use crate::hecke::{preset, relation_failures, Generic, Preset};

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
fn induced_permutation_module() {
    let p = generic(1, 2);
    let (span, rep) = ind_perm_module(&p, &part(&[2])).unwrap();
    assert!(rep.equal && rep.element_identity);
    let big = induced_params(&p);
    assert_eq!(span.dim(), perm_module(&big, &part(&[2, 1])).unwrap().span.dim());
    assert_eq!(span.dim(), 3);
    let p = generic(2, 2);
    for mu in all_multipartitions(2, 2) {
        let (span, rep) = ind_perm_module(&p, &mu).unwrap();
        assert!(rep.equal && rep.element_identity, "{mu}");
        assert_eq!(span.dim(), 2 * 3 * perm_module(&p, &mu).unwrap().span.dim());
    }
}

#[test]
fn bump_index_readings() {
    let lam = multi(&[&[2], &[1], &[1]]);
    let beta = Node::new(1, 2, 3);
    assert_eq!(bump_index(&lam, &beta), 4);
    assert_eq!(bump_index_printed(&lam, &beta), 2 + 3 + 1);
    let lam = multi(&[&[2], &[1]]);
    for beta in lam.addable_nodes() {
        assert_eq!(bump_index(&lam, &beta), bump_index_printed(&lam, &beta));
    }
}

#[test]
fn bump_examples() {
    let r = verify_bump(&generic(1, 1), &part(&[1]), &Node::new(1, 2, 1)).unwrap();
    assert!(r.ok(), "{r:?}");
    let lam = part(&[2, 1]);
    let r = verify_bump(&generic(1, 3), &lam, &lam.lowest_addable()).unwrap();
    assert!(r.ok() && r.prefix_n_minus_1);
    assert!(verify_bump(&generic(1, 3), &lam, &Node::new(2, 3, 1)).is_err());
    for r in verify_bump_all(&generic(2, 2)).unwrap() {
        assert!(r.ok(), "{r:?}");
    }
}

#[test]
fn closure_examples() {
    let p = generic(1, 3);
    let mu = part(&[2, 1]);
    let t = initial_semistandard(&mu);
    let u = crate::combinatorics::attach_node(&t, &mu.lowest_addable()).unwrap();
    assert!(verify_closure(&p, &t, &u).unwrap().ok);
    for r in verify_closure_all(&p, &mu).unwrap() {
        assert!(r.ok, "{r:?}");
    }
    let p = generic(2, 2);
    for mu in all_multipartitions(2, 2) {
        for r in verify_closure_all(&p, &mu).unwrap() {
            assert!(r.ok, "{mu}: {r:?}");
        }
    }
}

#[test]
fn theorem_filtration_examples() {
    let im = InducedModule::build(&generic(1, 2), &part(&[2])).unwrap();
    let outer = im.outer_entries();
    assert_eq!(outer.len(), 1);
    assert_eq!(outer[0].dim, 3);

    let im = InducedModule::build(&generic(2, 2), &multi(&[&[1], &[1]])).unwrap();
    let outer = im.outer_entries();
    let dims: Vec<usize> = outer.iter().map(|e| e.dim).collect();
    assert_eq!(dims, vec![6, 12, 24]);
    assert!(outer.iter().all(|e| e.closed && e.quotient_dim_ok && e.totally_ordered));

    let im = InducedModule::build(&generic(1, 3), &part(&[2, 1])).unwrap();
    let outer = im.outer_entries();
    assert_eq!(outer.iter().map(|e| e.dim).collect::<Vec<_>>(), vec![4, 12]);
    assert!(outer.iter().all(|e| e.closed && e.quotient_dim_ok));
}

#[test]
fn induced_specht_examples() {
    let (q, cert) = induced_specht(&generic(1, 3), &part(&[2, 1])).unwrap();
    assert!(cert.ok, "{:?}", cert.failures());
    assert_eq!(q.unwrap().basis_labels.len(), 8);
    let shapes: Vec<MultiPartition> = cert.inner.iter().map(|e| e.shape.clone()).collect();
    assert_eq!(shapes, vec![part(&[3, 1]), part(&[2, 2]), part(&[2, 1, 1])]);
    assert_eq!(cert.inner.iter().map(|e| e.dim).collect::<Vec<_>>(), vec![3, 5, 8]);

    let (_, cert) = induced_specht(&generic(2, 2), &multi(&[&[1], &[1]])).unwrap();
    assert!(cert.ok, "{:?}", cert.failures());
    assert_eq!(cert.quotient_dim, 12);
    assert_eq!(cert.inner.len(), 4);
    assert!(cert.inner.windows(2).all(|w| w[1].dim - w[0].dim == 3));

    let (_, cert) = induced_specht(&generic(1, 2), &part(&[2])).unwrap();
    assert!(cert.ok);
    let shapes: Vec<MultiPartition> = cert.inner.iter().map(|e| e.shape.clone()).collect();
    assert_eq!(shapes, vec![part(&[3]), part(&[2, 1])]);
}

#[test]
fn tensor_model_examples() {
    let t = tensor_model(&generic(2, 2), &multi(&[&[1], &[1]])).unwrap();
    assert_eq!(t.basis_labels.len(), 12);
    let t = tensor_model(&generic(1, 1), &part(&[1])).unwrap();
    assert_eq!(t.basis_labels.len(), 2);
    let p = generic(2, 2);
    let big = induced_params(&p);
    for mu in all_multipartitions(2, 2) {
        let t = tensor_model(&p, &mu).unwrap();
        assert!(relation_failures(&t, &big).is_empty(), "{mu}");
    }
}

#[test]
fn models_agree() {
    for (ell, n) in [(1, 3), (2, 2)] {
        let p = generic(ell, n);
        for mu in all_multipartitions(ell, n) {
            let (q, cert) = induced_specht(&p, &mu).unwrap();
            assert!(cert.models_isomorphic, "{mu}");
            assert!(compare_models(&p, &mu, &q.unwrap()).unwrap());
        }
    }
}

#[test]
fn non_isomorphic_modules_are_rejected() {
    let p = generic(1, 3);
    let big = induced_params(&p);
    let a = crate::cellular::specht_rep(&big, &part(&[3, 1])).unwrap();
    let b = crate::cellular::specht_rep(&big, &part(&[2, 1, 1])).unwrap();
    assert!(find_isomorphism(&a, &b, 0, 1).unwrap().is_none());
    assert!(find_isomorphism(&a, &a, 0, 1).unwrap().is_some());
}

#[test]
fn central_operators() {
    let p = generic(2, 2);
    let big = induced_params(&p);
    let (q, _) = induced_specht(&p, &multi(&[&[1], &[1]])).unwrap();
    let ops = central_ops(&q.unwrap()).unwrap();
    assert_eq!(ops.len(), 3);

    let lam = multi(&[&[1], &[1]]);
    let rep = crate::cellular::specht_rep(&p, &lam).unwrap();
    let ops = central_ops(&rep).unwrap();
    let chi = blocks::residue_character(&lam.residues(&p));
    for (op, c) in ops.iter().zip(&chi) {
        assert_eq!(op, &crate::arith::ExactMatrix::identity(p.field, 2).scale(c));
    }

    let one = crate::cellular::specht_rep(&generic(1, 1), &part(&[1])).unwrap();
    assert_eq!(jm_matrix(&one, 1).unwrap().get(0, 0), &generic(1, 1).big_q[0]);
    let _ = big;
}

fn f7() -> Params {
    preset("root-of-unity:3").unwrap().params(1, 1).unwrap()
}

#[test]
fn blocks_at_a_root_of_unity() {
    let p = f7();
    assert_eq!(p.q, p.field.from_i64(2));
    let (_, cert) = induced_specht(&p, &part(&[1])).unwrap();
    let dims: Vec<(Scalar, usize)> = cert.blocks.iter().map(|b| (b.residue.clone(), b.dim)).collect();
    assert_eq!(dims, vec![(p.field.from_i64(2), 1), (p.field.from_i64(4), 1)]);
    assert!(cert.ok);

    let p2 = p.with_n(2);
    let (_, cert) = induced_specht(&p2, &part(&[2])).unwrap();
    assert_eq!(cert.blocks.len(), 1);
    assert_eq!(cert.blocks[0].residue, p.field.from_i64(4));
    assert_eq!(cert.blocks[0].dim, 3);
    assert!(cert.ok);

    let (space, ok) = i_induce(&p2, &part(&[2]), &p.field.from_i64(4)).unwrap();
    assert!(ok);
    assert_eq!(space.dim(), 3);
    let (space, ok) = i_induce(&p2, &part(&[2]), &p.field.from_i64(1)).unwrap();
    assert!(ok);
    assert_eq!(space.dim(), 0);
}

#[test]
fn generic_blocks_split_fully() {
    let p = generic(1, 3);
    for mu in all_multipartitions(1, 3) {
        let (_, cert) = induced_specht(&p, &mu).unwrap();
        assert!(cert.blocks_complete);
        let expected: Vec<usize> =
            mu.addable_nodes().iter().map(|a| standard_tableaux(&mu.add_node(a).unwrap()).len()).collect();
        assert_eq!(cert.blocks.iter().map(|b| b.dim).collect::<Vec<_>>(), expected);
    }
}

#[test]
fn refined_layers_of_three_three_one() {
    let mu = part(&[3, 3, 1]);
    let layers = outer_layer_shapes(&mu);
    let first = |target: &MultiPartition| layers.iter().position(|(_, us)| us.iter().any(|u| u.shape() == target));
    let p422 = first(&part(&[4, 2, 2])).unwrap();
    let p431 = first(&part(&[4, 3, 1])).unwrap();
    let last = layers.len() - 1;
    assert!(p422 < last);
    assert!(layers[last].1.iter().any(|u| u.shape() == &part(&[4, 3, 1])));
    // 1112/223/4 comes from 1112/223, an earlier layer than any containing (4,2,2)
    assert!(p431 < p422);
    assert!(layers.iter().all(|(_, us)| us.windows(2).all(|w| w[0].shape().strictly_dominates(w[1].shape()).unwrap())));
}
