use hgl_core::catalog::{structure_subgroup, Structure};
use hgl_core::descent::{
    base_change_is_group_algebra, check_measuring, comul_by_direct_solve, descend, group_algebra, hopf_action,
    j_map_is_bijective, explicit_basis_elements, spans_descended, verify_hopf_galois, verify_explicit_basis,
    DescendedHopf,
};
use hgl_core::galois::{split_model, splitting_field_cubic, GaloisAlgebra};
use hgl_core::groups::{dihedral, left_regular_perm};
use hgl_core::linalg::{add_vectors, int};

fn descended(field: &GaloisAlgebra, structure: Structure) -> DescendedHopf {
    let n = structure_subgroup(field.group(), structure).unwrap();
    descend(&group_algebra(field, &n).unwrap()).unwrap()
}

#[test]
fn all_five_cubic_descents_are_hopf_galois() {
    let l = splitting_field_cubic(&int(2)).unwrap();
    for structure in Structure::all(3) {
        let h = descended(&l, structure);
        assert_eq!(h.dim(), 6, "{structure}");
        let report = h.hopf.axiom_report();
        assert!(report.all_pass(), "{structure}: {report:?}");
        assert!(h.hopf.is_cocommutative(), "{structure}");
        let action = hopf_action(&h);
        assert_eq!(check_measuring(&h, &action), Ok(()), "{structure}");
        assert!(j_map_is_bijective(&l, &action), "{structure}");
        assert!(base_change_is_group_algebra(&h), "{structure}");
        assert!(h.basis.iter().all(|b| h.is_fixed(b)), "{structure}");
    }
}

#[test]
fn commutativity_matches_structure_type() {
    let l = splitting_field_cubic(&int(2)).unwrap();
    assert!(!descended(&l, Structure::Rho).hopf.is_commutative());
    assert!(!descended(&l, Structure::Lambda).hopf.is_commutative());
    for c in 0..3 {
        assert!(descended(&l, Structure::Cyclic(c)).hopf.is_commutative());
    }
}

#[test]
fn comultiplication_agrees_with_direct_tensor_solve() {
    let l = splitting_field_cubic(&int(2)).unwrap();
    for structure in [Structure::Cyclic(0), Structure::Lambda] {
        let h = descended(&l, structure);
        for k in 0..h.dim() {
            let direct = comul_by_direct_solve(&h, k).expect("Δ(b) lies in H (x) H");
            assert_eq!(direct, h.hopf.comul_of(k), "{structure} basis {k}");
        }
    }
}

#[test]
fn explicit_bases_span_for_cubic_field() {
    let l = splitting_field_cubic(&int(2)).unwrap();
    let alpha = l.algebra().basis_vector(1);
    for structure in Structure::all(3) {
        let h = descended(&l, structure);
        assert!(verify_explicit_basis(&h, structure, None).unwrap(), "{structure}");
    }
    let h = descended(&l, Structure::Lambda);
    assert!(verify_explicit_basis(&h, Structure::Lambda, Some(&alpha)).unwrap());
}

#[test]
fn literal_reflection_pairing_is_not_fixed() {
    // y s + r(y) rs + r^2(y) r^2 s pairs r^i(y) with r^i s; the fixed element
    // pairs it with r^{-i} s instead.
    let l = splitting_field_cubic(&int(2)).unwrap();
    let h = descended(&l, Structure::Lambda);
    let a = &h.group_algebra;
    let group = l.group();
    let y = l.algebra().basis_vector(1);
    let lam = |g: &str| left_regular_perm(group, group.index_of(g).unwrap());
    let r = group.index_of("r").unwrap();
    let r2 = group.index_of("r^2").unwrap();
    let literal = [("s", y.clone()), ("rs", l.act(r, &y)), ("r^2s", l.act(r2, &y))]
        .iter()
        .map(|(g, x)| a.term(x, &lam(g)).unwrap())
        .reduce(|u, v| add_vectors(&u, &v))
        .unwrap();
    assert!(!h.contains(&literal));
    let corrected = [("s", y.clone()), ("r^2s", l.act(r, &y)), ("rs", l.act(r2, &y))]
        .iter()
        .map(|(g, x)| a.term(x, &lam(g)).unwrap())
        .reduce(|u, v| add_vectors(&u, &v))
        .unwrap();
    assert!(h.contains(&corrected));
}

#[test]
fn dropping_an_element_breaks_the_span() {
    let l = splitting_field_cubic(&int(2)).unwrap();
    let h = descended(&l, Structure::Cyclic(0));
    let mut elements = explicit_basis_elements(&h, Structure::Cyclic(0), None).unwrap();
    assert!(spans_descended(&h, &elements));
    elements[5] = elements[4].clone();
    assert!(!spans_descended(&h, &elements));
}

#[test]
fn split_model_descents_p5() {
    let group = dihedral(5).unwrap();
    let l = split_model(&group);
    for structure in Structure::all(5) {
        let h = descended(&l, structure);
        assert_eq!(h.dim(), 10);
        assert!(h.hopf.axiom_report().all_pass(), "{structure}");
        assert!(base_change_is_group_algebra(&h), "{structure}");
        assert!(verify_hopf_galois(&h), "{structure}");
        assert!(verify_explicit_basis(&h, structure, None).unwrap(), "{structure}");
    }
}

#[test]
fn split_model_descents_p7() {
    let group = dihedral(7).unwrap();
    let l = split_model(&group);
    for structure in Structure::all(7) {
        let h = descended(&l, structure);
        assert_eq!(h.dim(), 14);
        assert!(h.hopf.axiom_report().all_pass(), "{structure}");
        assert!(base_change_is_group_algebra(&h), "{structure}");
        assert!(verify_explicit_basis(&h, structure, None).unwrap(), "{structure}");
    }
}
