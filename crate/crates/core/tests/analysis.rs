use hgl_core::algebra::quaternions;
use hgl_core::analysis::{
    algebra_iso_classes, check_character_idempotents, check_nilpotent_witness, descend_all, hopf_iso_classes,
    minimal_splitting_subfield_check, PairWitness,
};
use hgl_core::catalog::Structure;
use hgl_core::galois::{split_model, splitting_field_cubic};
use hgl_core::groups::dihedral;
use hgl_core::hopf::group_algebra_hopf;
use hgl_core::linalg::int;
use hgl_core::wedderburn::{noncommutative_wedderburn, ComponentKind, DEFAULT_SCAN_BOUND};

fn cubic() -> hgl_core::galois::GaloisAlgebra {
    splitting_field_cubic(&int(2)).unwrap()
}

#[test]
fn three_hopf_classes_at_p3() {
    let report = hopf_iso_classes(&cubic()).unwrap();
    assert_eq!(
        report.classes,
        vec![
            vec![Structure::Rho],
            vec![Structure::Lambda],
            vec![Structure::Cyclic(0), Structure::Cyclic(1), Structure::Cyclic(2)]
        ]
    );
    assert!(report.consistent());
    let rho_lambda = report
        .pairs
        .iter()
        .find(|p| p.left == Structure::Rho && p.right == Structure::Lambda)
        .unwrap();
    match &rho_lambda.witness {
        PairWitness::NotIsomorphic { isomorphisms, failures, .. } => {
            // |Aut(D_3)| = 6 candidate isomorphisms, all failing
            assert_eq!(*isomorphisms, 6);
            assert_eq!(failures.len(), 6);
        }
        other => panic!("unexpected witness {other:?}"),
    }
    for pair in &report.pairs {
        if let (Structure::Cyclic(_), Structure::Cyclic(_)) = (pair.left, pair.right) {
            match &pair.witness {
                PairWitness::Isomorphic { iso, induced_map_ok, algebra_map_ok } => {
                    // φ(η_c) = η_d
                    assert_eq!(iso.map[1], 1);
                    assert!(*induced_map_ok && *algebra_map_ok);
                }
                other => panic!("unexpected witness {other:?}"),
            }
        }
    }
}

#[test]
fn split_model_classes_at_p5() {
    let l = split_model(&dihedral(5).unwrap());
    let report = hopf_iso_classes(&l).unwrap();
    assert_eq!(report.classes.len(), 3);
    assert!(report.consistent());
}

#[test]
fn minimal_splitting_field() {
    let report = minimal_splitting_subfield_check(&dihedral(3).unwrap());
    assert!(report.passes());
    let trivial = report.subgroups.iter().find(|s| s.elements.len() == 1).unwrap();
    assert_eq!(trivial.equivariant_isos, 6);
    for s in report.subgroups.iter().filter(|s| s.elements.len() > 1) {
        assert_eq!(s.equivariant_isos, 0, "{:?}", s.elements);
    }
}

#[test]
fn idempotent_and_nilpotent_witnesses() {
    let l = cubic();
    let all = descend_all(&l).unwrap();
    let h_lambda = &all.iter().find(|(s, _)| *s == Structure::Lambda).unwrap().1;
    assert!(check_character_idempotents(h_lambda).unwrap().passes());
    assert!(check_nilpotent_witness(h_lambda).unwrap().passes());
}

#[test]
fn two_algebra_classes_at_p3() {
    let report = algebra_iso_classes(&cubic()).unwrap();
    assert_eq!(
        report.classes,
        vec![
            vec![Structure::Rho, Structure::Lambda],
            vec![Structure::Cyclic(0), Structure::Cyclic(1), Structure::Cyclic(2)]
        ]
    );
    let matrix_shape = vec![
        (1, 1, ComponentKind::Field),
        (1, 1, ComponentKind::Field),
        (4, 1, ComponentKind::Matrix2OverCenter),
    ];
    for (s, r) in &report.reports {
        match s {
            Structure::Rho | Structure::Lambda => assert_eq!(r.shape(), matrix_shape, "{s}"),
            Structure::Cyclic(_) => assert_eq!(r.shape(), vec![(1, 1, ComponentKind::Field); 6], "{s}"),
        }
        assert_eq!(r.total_dim(), 6);
    }
}

#[test]
fn lambda_components_match_character_idempotents() {
    let report = algebra_iso_classes(&cubic()).unwrap();
    let all = descend_all(&cubic()).unwrap();
    let h = &all[1].1;
    let lambda_report = &report.reports[1].1;
    assert!(lambda_report.idempotents_are_complete(&h.hopf.algebra));
    let (e1, e2) = hgl_core::analysis::character_idempotents(3).unwrap();
    let mut expected: Vec<_> = [e1, e2]
        .iter()
        .map(|e| h.coordinates(&hgl_core::analysis::lambda_element(h, e).unwrap()).unwrap())
        .collect();
    expected.sort();
    let mut found: Vec<_> = lambda_report
        .components
        .iter()
        .filter(|c| c.dim == 1)
        .map(|c| c.idempotent.clone())
        .collect();
    found.sort();
    assert_eq!(found, expected);
}

#[test]
fn group_algebra_and_quaternion_controls() {
    let qd3 = group_algebra_hopf(&dihedral(3).unwrap());
    let r = noncommutative_wedderburn(&qd3.algebra, &[], DEFAULT_SCAN_BOUND).unwrap();
    assert_eq!(r.describe(), "Q x Q x Mat2(Q)");
    let q = noncommutative_wedderburn(&quaternions(), &[], DEFAULT_SCAN_BOUND).unwrap();
    assert!(q.components.iter().all(|c| c.nilpotent.is_none()));
    assert!(q.components.iter().all(|c| c.kind != ComponentKind::Matrix2OverCenter));
}
