//! One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hgl_core::algebra::quaternions;
use hgl_core::analysis::{
    algebra_iso_classes, check_character_idempotents, check_nilpotent_witness, descend_all, hopf_iso_classes,
    minimal_splitting_subfield_check, PairWitness,
};
use hgl_core::catalog::{completeness_check_p3, verify_catalog, Structure};
use hgl_core::descent::{
    base_change_is_group_algebra, check_measuring, hopf_action, j_map_rank, verify_explicit_basis,
};
use hgl_core::galois::{split_model, splitting_field_cubic, sqrt_d_witness};
use hgl_core::groups::dihedral;
use hgl_core::hp_form::{check_variety, hp_algebra, hp_iso_to_descended, hp_q6_check, rescaling_iso, variety_points};
use hgl_core::linalg::int;
use hgl_core::wedderburn::{commutative_wedderburn, noncommutative_wedderburn, ComponentKind, DEFAULT_SCAN_BOUND};
use hgl_core::Result;

type Outcome = Result<(bool, String)>;

fn criterion_1() -> Outcome {
    let report = completeness_check_p3()?;
    Ok((
        report.passes(),
        format!("found {}, dihedral {}, cyclic {}, matches catalog {}", report.found, report.dihedral, report.cyclic, report.matches_catalog),
    ))
}

fn criterion_2() -> Outcome {
    let mut ok = true;
    let mut sizes = Vec::new();
    for p in [3, 5, 7, 11, 13] {
        let report = verify_catalog(p)?;
        ok &= report.passes();
        sizes.push(format!("p={p}:{}", report.entries.len()));
    }
    Ok((ok, sizes.join(" ")))
}

fn criterion_3() -> Outcome {
    let l = splitting_field_cubic(&int(2))?;
    let mut ok = true;
    let mut detail = Vec::new();
    for (s, h) in descend_all(&l)? {
        let action = hopf_action(&h);
        let rank = j_map_rank(&l, &action);
        let pass = h.dim() == 6
            && h.hopf.axiom_report().all_pass()
            && check_measuring(&h, &action).is_ok()
            && rank == 36;
        ok &= pass;
        detail.push(format!("{s}:dim {} j-rank {rank}", h.dim()));
    }
    Ok((ok, detail.join(", ")))
}

fn criterion_4() -> Outcome {
    let l = splitting_field_cubic(&int(2))?;
    let all = descend_all(&l)?;
    let get = |s: Structure| &all.iter().find(|(t, _)| *t == s).expect("catalog structure").1;
    let alpha = l.algebra().basis_vector(1);
    let lambda = verify_explicit_basis(get(Structure::Lambda), Structure::Lambda, Some(&alpha))?;
    let n0 = verify_explicit_basis(get(Structure::Cyclic(0)), Structure::Cyclic(0), None)?;
    Ok((lambda && n0, format!("H_lambda span {lambda}, H_0 span {n0}")))
}

fn criterion_5() -> Outcome {
    let l = splitting_field_cubic(&int(2))?;
    let report = hopf_iso_classes(&l)?;
    let expected = vec![
        vec![Structure::Rho],
        vec![Structure::Lambda],
        vec![Structure::Cyclic(0), Structure::Cyclic(1), Structure::Cyclic(2)],
    ];
    let mut rho_lambda_exhaustive = false;
    let mut cyclic_witnesses = true;
    for pair in &report.pairs {
        match (pair.left, pair.right, &pair.witness) {
            (Structure::Rho, Structure::Lambda, PairWitness::NotIsomorphic { isomorphisms, failures, .. }) => {
                rho_lambda_exhaustive = *isomorphisms == 6 && failures.len() == 6;
            }
            (Structure::Cyclic(_), Structure::Cyclic(_), w) => {
                cyclic_witnesses &= matches!(w, PairWitness::Isomorphic { iso, induced_map_ok: true, algebra_map_ok: true } if iso.map[1] == 1);
            }
            _ => {}
        }
    }
    let classes: Vec<String> = report
        .classes
        .iter()
        .map(|c| format!("{{{}}}", c.iter().map(|s| s.hopf_name()).collect::<Vec<_>>().join(",")))
        .collect();
    Ok((
        report.classes == expected && report.consistent() && rho_lambda_exhaustive && cyclic_witnesses,
        classes.join(" "),
    ))
}

fn criterion_6() -> Outcome {
    let report = minimal_splitting_subfield_check(&dihedral(3)?);
    let detail: Vec<String> = report
        .subgroups
        .iter()
        .map(|s| format!("|G'|={}:{}", s.elements.len(), s.equivariant_isos))
        .collect();
    Ok((report.passes(), format!("{} center trivial {}", detail.join(" "), report.center_trivial)))
}

fn criterion_7() -> Outcome {
    let l = splitting_field_cubic(&int(2))?;
    let all = descend_all(&l)?;
    let h = &all.iter().find(|(s, _)| *s == Structure::Lambda).expect("lambda").1;
    let idem = check_character_idempotents(h)?;
    let nil = check_nilpotent_witness(h)?;
    Ok((idem.passes() && nil.passes(), format!("{idem:?} {nil:?}")))
}

fn criterion_8() -> Outcome {
    let l = splitting_field_cubic(&int(2))?;
    let report = algebra_iso_classes(&l)?;
    let matrix_shape = vec![
        (1, 1, ComponentKind::Field),
        (1, 1, ComponentKind::Field),
        (4, 1, ComponentKind::Matrix2OverCenter),
    ];
    let shapes_ok = report
        .reports
        .iter()
        .filter(|(s, _)| matches!(s, Structure::Rho | Structure::Lambda))
        .all(|(_, r)| r.shape() == matrix_shape);
    let quaternion = noncommutative_wedderburn(&quaternions(), &[], DEFAULT_SCAN_BOUND)?;
    let control = quaternion.components.iter().all(|c| c.nilpotent.is_none() && c.kind == ComponentKind::Undetermined);
    Ok((
        shapes_ok && report.classes.len() == 2 && control,
        format!("algebra classes {}, quaternion control {control}", report.classes.len()),
    ))
}

fn criterion_9() -> Outcome {
    let l = splitting_field_cubic(&int(2))?;
    let all = descend_all(&l)?;
    let h0 = &all.iter().find(|(s, _)| *s == Structure::Cyclic(0)).expect("N0").1;
    let descended = commutative_wedderburn(&h0.hopf.algebra)?;
    let descended_ok = descended.components.len() == 6 && descended.components.iter().all(|c| c.dim == 1);
    let hp = hp_algebra(&int(-3))?;
    let q6 = hp_q6_check(&hp, &variety_points())?;
    let variety = check_variety(&hp, &variety_points())?;
    let iso = hp_iso_to_descended(&hp, h0);
    let remark = rescaling_iso(&int(-3), &int(2));
    Ok((
        descended_ok && q6.passes() && variety.passes() && iso.is_ok() && remark.is_ok(),
        format!(
            "H_0 components {}, HP components {}, points ok {}, iso {}, b vs 4b {}",
            descended.components.len(),
            q6.wedderburn.components.len(),
            variety.passes(),
            iso.is_ok(),
            remark.is_ok()
        ),
    ))
}

fn criterion_10() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for p in [5u64, 7] {
        let l = split_model(&dihedral(p)?);
        let (_, d) = sqrt_d_witness(&l)?;
        ok &= d == int(1);
        let all = descend_all(&l)?;
        for (s, h) in &all {
            ok &= h.dim() == 2 * p as usize
                && h.hopf.axiom_report().all_pass()
                && base_change_is_group_algebra(h)
                && verify_explicit_basis(h, *s, None)?;
        }
        detail.push(format!("p={p}: {} structures", all.len()));
    }
    Ok((ok, detail.join(", ")))
}

/// Name, check and optional time limit in seconds.
type Criterion = (&'static str, fn() -> Outcome, Option<u64>);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("exhaustive count for D_3", criterion_1, Some(10)),
        ("catalog verification p <= 13", criterion_2, Some(30)),
        ("five Hopf-Galois descents over Q(2^(1/3), zeta_3)", criterion_3, Some(60)),
        ("explicit bases of H_lambda and H_0", criterion_4, None),
        ("Hopf-isomorphism classes at p = 3", criterion_5, None),
        ("minimal splitting field of H_lambda", criterion_6, None),
        ("idempotent and nilpotent witnesses", criterion_7, None),
        ("Wedderburn shapes and algebra classes", criterion_8, None),
        ("H_0 = Q^6 and the HP presentation", criterion_9, None),
        ("split-model suite p in {5, 7}", criterion_10, Some(120)),
    ];
    let mut failures = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|s| elapsed < Duration::from_secs(s));
        let (pass, detail) = match outcome {
            Ok((pass, detail)) => (pass && in_time, detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failures += 1;
        }
        let budget = limit.map_or(String::new(), |s| format!(" / {s}s"));
        println!(
            "criterion {:>2} {}: {name} [{:.2}s{budget}] {detail}",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
