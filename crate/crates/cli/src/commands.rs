//! Report builders for each subcommand.

use serde_json::{json, Map, Value};

use hgl_core::analysis::{
    algebra_iso_classes, check_character_idempotents, check_nilpotent_witness, descend_all, hopf_iso_classes,
    minimal_splitting_subfield_check, nilpotent_witness, PairWitness,
};
use hgl_core::catalog::{catalog, completeness_check_p3, structure_subgroup, verify_catalog, Structure, MAX_CATALOG_PRIME};
use hgl_core::descent::{
    base_change_is_group_algebra, check_measuring, descend, group_algebra, hopf_action, j_map_rank,
    verify_explicit_basis, DescendedHopf,
};
use hgl_core::galois::{split_model, splitting_field_cubic, sqrt_d_witness, GaloisAlgebra};
use hgl_core::groups::{
    cyclic, dihedral, elementary_abelian_4, enumerate_regular_normalized, is_normalized_by, is_regular, iso_type,
    left_regular, left_regular_perm, right_regular_perm, FiniteGroup, Perm, PermSubgroup,
};
use hgl_core::hp_form::{check_variety, hp_algebra, hp_iso_to_descended, hp_q6_check, rescaling_iso, variety_points};
use hgl_core::linalg::{int, parse_scalar};
use hgl_core::wedderburn::{commutative_wedderburn, WedderburnReport};
use hgl_core::Error;

use crate::report::{rational, Report};

/// Why a command could not produce a report.
#[derive(Debug)]
pub enum CommandError {
    /// Bad or unsupported input; exit code 2.
    Usage(String),
    /// The computation itself failed; exit code 1.
    Failed(String),
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(_) | Error::NotOddPrime(_) | Error::SearchInfeasible { .. } => {
                CommandError::Usage(e.to_string())
            }
            other => CommandError::Failed(other.to_string()),
        }
    }
}

type CmdResult = Result<Report, CommandError>;

fn usage(msg: impl Into<String>) -> CommandError {
    CommandError::Usage(msg.into())
}

fn checked_prime(p: u64) -> Result<FiniteGroup, CommandError> {
    if p > MAX_CATALOG_PRIME {
        return Err(usage(format!("p = {p} exceeds the supported maximum {MAX_CATALOG_PRIME}")));
    }
    Ok(dihedral(p)?)
}

/// `cubic:<v>` or `split`.
pub fn parse_field(spec: &str, p: u64) -> Result<GaloisAlgebra, CommandError> {
    let group = checked_prime(p)?;
    if spec == "split" {
        return Ok(split_model(&group));
    }
    let v = spec
        .strip_prefix("cubic:")
        .ok_or_else(|| usage(format!("unknown field `{spec}`; expected cubic:<v> or split")))?;
    if p != 3 {
        return Err(usage("the cubic field model needs p = 3"));
    }
    Ok(splitting_field_cubic(&parse_scalar(v)?)?)
}

fn perm_images(group: &FiniteGroup, perm: &Perm) -> Value {
    Value::Array((0..group.order()).map(|g| Value::String(group.name(perm.apply(g)).into())).collect())
}

/// Display names of the elements of `n`, in subgroup order.
fn element_names(group: &FiniteGroup, structure: Structure, n: &PermSubgroup) -> Vec<String> {
    let named = |f: &dyn Fn(usize) -> Perm, prefix: &str| -> Vec<String> {
        n.elements()
            .iter()
            .map(|e| {
                let g = (0..group.order()).find(|&g| f(g) == *e).expect("regular representation");
                format!("{prefix}({})", group.name(g))
            })
            .collect()
    };
    match structure {
        Structure::Rho => named(&|g| right_regular_perm(group, g), "ρ"),
        Structure::Lambda => named(&|g| left_regular_perm(group, g), "λ"),
        Structure::Cyclic(_) => (0..n.order())
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "η".to_string(),
                _ => format!("η^{i}"),
            })
            .collect(),
    }
}

pub fn catalog_report(p: u64) -> CmdResult {
    let group = checked_prime(p)?;
    let mut report = Report::new("catalog");
    report.input("p", p);
    let entries = catalog(p)?;
    let verified = verify_catalog(p)?;
    let mut listed = Vec::new();
    for (entry, check) in entries.iter().zip(&verified.entries) {
        let mut item = Map::new();
        item.insert("label".into(), json!(check.label));
        item.insert("hopf_algebra".into(), json!(entry.structure.hopf_name()));
        item.insert("iso_type".into(), json!(entry.iso_type.to_string()));
        item.insert("order".into(), json!(check.order));
        if let Structure::Cyclic(_) = entry.structure {
            item.insert("generator_images".into(), perm_images(&group, entry.subgroup.element(1)));
        }
        listed.push(Value::Object(item));
        let label = &check.label;
        report.check(format!("catalog.{label}.regular"), check.regular, None);
        report.check(format!("catalog.{label}.normalized"), check.normalized, None);
        for (name, value) in [
            ("conjugation_rule", check.conjugation_rule),
            ("involution_rule", check.involution_rule),
            ("power_rule", check.power_rule),
        ] {
            if let Some(pass) = value {
                report.check(format!("catalog.{label}.{name}"), pass, None);
            }
        }
    }
    report.result("entries", listed);
    report.result("count", entries.len());
    report.check(
        "catalog.size",
        entries.len() == p as usize + 2,
        Some(format!("{} entries for p + 2 = {}", entries.len(), p + 2)),
    );
    report.check("catalog.pairwise_distinct", verified.pairwise_distinct, None);
    report.check("catalog.involutions_distinct", verified.involutions_distinct, None);
    Ok(report)
}

fn parse_group(id: &str) -> Result<FiniteGroup, CommandError> {
    if id == "klein4" {
        return Ok(elementary_abelian_4());
    }
    let number = |s: &str| s.parse::<u64>().map_err(|_| usage(format!("unknown group `{id}`")));
    if let Some(p) = id.strip_prefix('d') {
        return Ok(dihedral(number(p)?)?);
    }
    if let Some(n) = id.strip_prefix('c') {
        return Ok(cyclic(number(n)? as usize)?);
    }
    Err(usage(format!("unknown group `{id}`; expected d3 or klein4")))
}

pub fn enumerate_report(id: &str) -> CmdResult {
    let group = parse_group(id)?;
    let mut report = Report::new("enumerate");
    report.input("group", id);
    let found = enumerate_regular_normalized(&group)?;
    let lambda = left_regular(&group);
    let known = if id == "d3" { catalog(3)? } else { Vec::new() };
    let mut listed = Vec::new();
    let mut types = Vec::new();
    for n in &found {
        let t = iso_type(n)?;
        types.push(t);
        let mut item = Map::new();
        item.insert("iso_type".into(), json!(t.to_string()));
        item.insert(
            "elements".into(),
            Value::Array(n.elements().iter().map(|e| perm_images(&group, e)).collect()),
        );
        if let Some(entry) = known.iter().find(|e| e.subgroup == *n) {
            item.insert("catalog_label".into(), json!(entry.structure.label()));
        }
        listed.push(Value::Object(item));
    }
    report.result("count", found.len());
    report.result("subgroups", listed);
    report.check(
        "enumerate.regular_and_normalized",
        found.iter().all(|n| is_regular(n) && is_normalized_by(n, &lambda)),
        None,
    );
    match id {
        "d3" => {
            let completeness = completeness_check_p3()?;
            report.check("enumerate.count", found.len() == 5, Some(format!("found {}", found.len())));
            report.check("enumerate.matches_catalog", completeness.matches_catalog, None);
            report.check(
                "enumerate.census",
                completeness.dihedral == 2 && completeness.cyclic == 3,
                Some(format!("dihedral {}, cyclic {}", completeness.dihedral, completeness.cyclic)),
            );
        }
        "klein4" => {
            let cyclic4 = types.iter().filter(|t| t.is_cyclic() && t.order() == 4).count();
            report.check("enumerate.cyclic_order4_present", cyclic4 > 0, Some(format!("{cyclic4} cyclic of order 4")));
        }
        _ => {}
    }
    Ok(report)
}

fn descended_for(field: &GaloisAlgebra, structure: Structure) -> Result<DescendedHopf, CommandError> {
    let p = field.group().order() / 2;
    if let Structure::Cyclic(c) = structure {
        if c >= p {
            return Err(usage(format!("structure N{c} needs c < {p}")));
        }
    }
    let n = structure_subgroup(field.group(), structure)?;
    Ok(descend(&group_algebra(field, &n)?)?)
}

pub fn descend_report(p: u64, structure: &str, field_spec: &str) -> CmdResult {
    let field = parse_field(field_spec, p)?;
    let structure: Structure = structure.parse()?;
    let h = descended_for(&field, structure)?;
    let mut report = Report::new("descend");
    report.input("p", p);
    report.input("structure", structure.label());
    report.input("field", field_spec);

    let names = element_names(field.group(), structure, h.group_algebra.subgroup());
    let basis: Vec<Value> = h
        .basis
        .iter()
        .map(|b| Value::String(h.group_algebra.format_element(b, &names)))
        .collect();
    let (w, d) = sqrt_d_witness(&field)?;
    report.result("field", field.name());
    report.result("hopf_algebra", structure.hopf_name());
    report.result("dim", h.dim());
    report.result("basis", basis);
    report.result("commutative", h.hopf.is_commutative());
    report.result("cocommutative", h.hopf.is_cocommutative());
    report.result("sqrt_d", json!({ "w": field.format_element(&w), "d": rational(&d) }));

    for check in h.hopf.axiom_report().checks {
        report.check(format!("hopf.{}", check.name), check.pass, None);
    }
    let action = hopf_action(&h);
    let measuring = check_measuring(&h, &action);
    report.check("hopf_galois.measuring", measuring.is_ok(), measuring.err().map(|f| format!("{f:?}")));
    let rank = j_map_rank(&field, &action);
    let full = field.dim() * field.dim();
    report.check("hopf_galois.j_bijective", rank == full, Some(format!("rank {rank} of {full}")));
    report.check("l_form.base_change", base_change_is_group_algebra(&h), None);
    let alpha = field.algebra().basis_vector(1);
    let y = (structure == Structure::Lambda && field_spec.starts_with("cubic")).then_some(alpha.as_slice());
    report.check("basis.explicit_span", verify_explicit_basis(&h, structure, y)?, None);
    Ok(report)
}

fn wedderburn_value(r: &WedderburnReport) -> Value {
    let components: Vec<Value> = r
        .shape()
        .iter()
        .map(|(dim, center, kind)| json!({ "dim": dim, "center_dim": center, "kind": kind.label() }))
        .collect();
    json!({ "shape": r.describe(), "components": components })
}

fn class_names(classes: &[Vec<Structure>]) -> Value {
    Value::Array(
        classes
            .iter()
            .map(|c| Value::Array(c.iter().map(|s| json!(s.hopf_name())).collect()))
            .collect(),
    )
}

pub fn classify_report(p: u64, field_spec: &str) -> CmdResult {
    if p != 3 {
        return Err(usage("classify supports p = 3 only"));
    }
    if !field_spec.starts_with("cubic:") {
        return Err(usage("classify needs a cubic:<v> field"));
    }
    let field = parse_field(field_spec, p)?;
    let mut report = Report::new("classify");
    report.input("p", p);
    report.input("field", field_spec);

    let hopf = hopf_iso_classes(&field)?;
    let pairs: Vec<Value> = hopf
        .pairs
        .iter()
        .map(|pair| {
            let witness = match &pair.witness {
                PairWitness::Isomorphic { iso, induced_map_ok, .. } => {
                    json!({ "equivariant_iso": iso.map, "induced_hopf_map": induced_map_ok })
                }
                PairWitness::NotIsomorphic { candidates, isomorphisms, failures } => json!({
                    "candidates": candidates,
                    "isomorphisms": isomorphisms,
                    "failures": failures.iter().map(|f| json!({ "map": f.map, "g": f.g, "eta": f.eta })).collect::<Vec<_>>(),
                }),
            };
            json!({ "left": pair.left.hopf_name(), "right": pair.right.hopf_name(), "witness": witness })
        })
        .collect();
    report.result("hopf_classes", class_names(&hopf.classes));
    report.result("hopf_pairs", pairs);
    report.check("hopf_classes.count", hopf.classes.len() == 3, Some(format!("{} classes", hopf.classes.len())));
    report.check("hopf_classes.witnesses_consistent", hopf.consistent(), None);

    let algebra = algebra_iso_classes(&field)?;
    let mut wedderburn = Map::new();
    for (s, r) in &algebra.reports {
        wedderburn.insert(s.hopf_name(), wedderburn_value(r));
        let expected = match s {
            Structure::Rho | Structure::Lambda => "Q x Q x Mat2(Q)",
            Structure::Cyclic(_) => "Q x Q x Q x Q x Q x Q",
        };
        report.check(format!("wedderburn.{}", s.label()), r.describe() == expected, Some(r.describe()));
    }
    report.result("algebra_classes", class_names(&algebra.classes));
    report.result("wedderburn", wedderburn);
    report.check(
        "algebra_classes.count",
        algebra.classes.len() == 2,
        Some(format!("{} classes", algebra.classes.len())),
    );

    let splitting = minimal_splitting_subfield_check(field.group());
    let subgroups: Vec<Value> = splitting
        .subgroups
        .iter()
        .map(|s| json!({ "elements": s.elements, "equivariant_isos": s.equivariant_isos }))
        .collect();
    report.result("minimal_splitting", json!({ "subgroups": subgroups, "center_trivial": splitting.center_trivial }));
    report.check("minimal_splitting", splitting.passes(), None);

    let all = descend_all(&field)?;
    let find = |s: Structure| &all.iter().find(|(t, _)| *t == s).expect("catalog structure").1;
    let h_lambda = find(Structure::Lambda);
    let idem = check_character_idempotents(h_lambda)?;
    report.check("witness.character_idempotents", idem.passes(), Some(format!("{idem:?}")));
    let nil = check_nilpotent_witness(h_lambda)?;
    let b = nilpotent_witness(h_lambda)?;
    let names = element_names(field.group(), Structure::Lambda, h_lambda.group_algebra.subgroup());
    report.result("nilpotent", json!({ "b": h_lambda.group_algebra.format_element(&b, &names), "b_squared_zero": nil.square_zero }));
    report.check("witness.nilpotent", nil.passes(), Some(format!("{nil:?}")));

    let h0 = find(Structure::Cyclic(0));
    let (_, d) = sqrt_d_witness(&field)?;
    let hp = hp_algebra(&d)?;
    let iso = hp_iso_to_descended(&hp, h0);
    report.check("hp.iso_to_descended", iso.is_ok(), iso.err().map(|e| e.to_string()));
    let h0_split = commutative_wedderburn(&h0.hopf.algebra)?;
    report.check("hp.descended_q6", h0_split.describe() == "Q x Q x Q x Q x Q x Q", Some(h0_split.describe()));
    if d == int(-3) {
        let points = variety_points();
        let variety = check_variety(&hp, &points)?;
        report.check("hp.variety_points", variety.passes(), Some(format!("{variety:?}")));
        let q6 = hp_q6_check(&hp, &points)?;
        report.check("hp.q6_interpolants", q6.passes(), None);
    }
    let rescaled = rescaling_iso(&d, &int(2));
    report.check("hp.generator_rescaling", rescaled.is_ok(), rescaled.err().map(|e| e.to_string()));
    report.result("hp", json!({ "b": rational(&d), "u": rational(&(&d * int(4))) }));
    Ok(report)
}
