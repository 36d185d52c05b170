//! The `p + 2` regular subgroups of `Perm(D_p)` normalized by `λ(D_p)`:
//! `ρ(D_p)`, `λ(D_p)` and the cyclic `N_c = <η_c>`, `η_c = λ(r) ρ(r^c s)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::groups::{
    closure_bounded, conj_by, dihedral, enumerate_regular_normalized, is_normalized_by, is_regular, iso_type,
    left_regular, left_regular_perm, right_regular, right_regular_perm, FiniteGroup, IsoType, Perm, PermSubgroup,
};

/// Largest prime the catalog is built for.
pub const MAX_CATALOG_PRIME: u64 = 13;

/// Which regular subgroup a Hopf-Galois structure comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Structure {
    /// `ρ(G)`: the classical structure, Hopf algebra `K[G]`.
    Rho,
    /// `λ(G)`: the canonical non-classical structure, `H_λ`.
    Lambda,
    /// `N_c`, Hopf algebra `H_c`.
    Cyclic(usize),
}

impl Structure {
    pub fn label(&self) -> String {
        match self {
            Structure::Rho => "rho".into(),
            Structure::Lambda => "lambda".into(),
            Structure::Cyclic(c) => format!("N{c}"),
        }
    }

    /// Name of the descended Hopf algebra.
    pub fn hopf_name(&self) -> String {
        match self {
            Structure::Rho => "K[D_p]".into(),
            Structure::Lambda => "H_lambda".into(),
            Structure::Cyclic(c) => format!("H_{c}"),
        }
    }

    /// `rho, lambda, N0 .. N(p-1)`.
    pub fn all(p: usize) -> Vec<Structure> {
        [Structure::Rho, Structure::Lambda]
            .into_iter()
            .chain((0..p).map(Structure::Cyclic))
            .collect()
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for Structure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rho" => Ok(Structure::Rho),
            "lambda" => Ok(Structure::Lambda),
            _ => s
                .strip_prefix('N')
                .and_then(|c| c.parse().ok())
                .map(Structure::Cyclic)
                .ok_or_else(|| Error::InvalidInput(format!("unknown structure `{s}`"))),
        }
    }
}

fn check_prime(p: u64) -> Result<()> {
    if p > MAX_CATALOG_PRIME {
        return Err(Error::InvalidInput(format!("p = {p} exceeds the catalog cap {MAX_CATALOG_PRIME}")));
    }
    dihedral(p).map(|_| ())
}

/// `η_c = λ(r) ρ(r^c s)` in `Perm(D_p)`, i.e. `x -> r x (r^c s)^{-1}`.
pub fn eta_in(group: &FiniteGroup, c: usize) -> Result<Perm> {
    let p = group.order() / 2;
    if c >= p {
        return Err(Error::InvalidInput(format!("c = {c} outside [0, {}]", p - 1)));
    }
    let r = 1;
    let rcs = c + p;
    Ok(left_regular_perm(group, r).compose(&right_regular_perm(group, rcs)))
}

pub fn eta(p: u64, c: usize) -> Result<Perm> {
    check_prime(p)?;
    eta_in(&dihedral(p)?, c)
}

/// The regular subgroup for `structure`. `N_c` lists `η_c^i` at index `i`.
pub fn structure_subgroup(group: &FiniteGroup, structure: Structure) -> Result<PermSubgroup> {
    match structure {
        Structure::Rho => Ok(right_regular(group)),
        Structure::Lambda => Ok(left_regular(group)),
        Structure::Cyclic(c) => {
            let e = eta_in(group, c)?;
            Ok(closure_bounded(&[e], group.order())?.with_label(structure.label()))
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub structure: Structure,
    pub subgroup: PermSubgroup,
    pub iso_type: IsoType,
}

/// `ρ(D_p), λ(D_p), N_0, .., N_{p-1}` in that order.
pub fn catalog(p: u64) -> Result<Vec<CatalogEntry>> {
    check_prime(p)?;
    let group = dihedral(p)?;
    Structure::all(p as usize)
        .into_iter()
        .map(|structure| {
            let subgroup = structure_subgroup(&group, structure)?;
            let iso_type = iso_type(&subgroup)?;
            Ok(CatalogEntry { structure, subgroup, iso_type })
        })
        .collect()
}

/// Per-entry verification results.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryCheck {
    pub label: String,
    pub iso_type: IsoType,
    pub order: usize,
    pub regular: bool,
    pub normalized: bool,
    /// For `N_c`: `^r η = η` and `^s η = η^{-1}`.
    pub conjugation_rule: Option<bool>,
    /// For `N_c`: its unique involution is `ρ(r^c s)`.
    pub involution_rule: Option<bool>,
    /// For `N_c`: `η^i = λ(r^i) ρ((r^c s)^i)` for every `i`.
    pub power_rule: Option<bool>,
}

impl EntryCheck {
    pub fn passes(&self) -> bool {
        let expected_type = match self.label.as_str() {
            "rho" | "lambda" => self.iso_type.is_dihedral(),
            _ => self.iso_type == IsoType::Cyclic(self.order),
        };
        expected_type
            && self.regular
            && self.normalized
            && self.conjugation_rule.unwrap_or(true)
            && self.involution_rule.unwrap_or(true)
            && self.power_rule.unwrap_or(true)
    }
}

#[derive(Clone, Debug)]
pub struct CatalogReport {
    pub p: u64,
    pub entries: Vec<EntryCheck>,
    pub pairwise_distinct: bool,
    pub involutions_distinct: bool,
}

impl CatalogReport {
    pub fn passes(&self) -> bool {
        self.entries.len() == self.p as usize + 2
            && self.pairwise_distinct
            && self.involutions_distinct
            && self.entries.iter().all(EntryCheck::passes)
    }
}

/// Builds the catalog and checks every claim made about it.
pub fn verify_catalog(p: u64) -> Result<CatalogReport> {
    let entries = catalog(p)?;
    let group = dihedral(p)?;
    let pu = p as usize;
    let lambda = left_regular(&group);
    let (lr, ls) = (left_regular_perm(&group, 1), left_regular_perm(&group, pu));
    let mut checks = Vec::new();
    let mut involutions = Vec::new();
    for entry in &entries {
        let n = &entry.subgroup;
        let mut check = EntryCheck {
            label: entry.structure.label(),
            iso_type: entry.iso_type,
            order: n.order(),
            regular: is_regular(n),
            normalized: is_normalized_by(n, &lambda),
            conjugation_rule: None,
            involution_rule: None,
            power_rule: None,
        };
        if let Structure::Cyclic(c) = entry.structure {
            let e = eta_in(&group, c)?;
            check.conjugation_rule = Some(conj_by(&lr, &e) == e && conj_by(&ls, &e) == e.inverse());
            let involutions_in_n: Vec<&Perm> = n.elements().iter().filter(|x| x.order() == 2).collect();
            let expected = right_regular_perm(&group, c + pu);
            check.involution_rule = Some(involutions_in_n == vec![&expected] && e.pow(p as i64) == expected);
            let rcs = c + pu;
            check.power_rule = Some((0..2 * pu).all(|i| {
                e.pow(i as i64)
                    == left_regular_perm(&group, group.pow(1, i)).compose(&right_regular_perm(&group, group.pow(rcs, i)))
            }));
            involutions.push(expected);
        }
        checks.push(check);
    }
    let keys: Vec<_> = entries.iter().map(|e| e.subgroup.key()).collect();
    let pairwise_distinct = (0..keys.len()).all(|i| (i + 1..keys.len()).all(|j| keys[i] != keys[j]));
    let involutions_distinct =
        (0..involutions.len()).all(|i| (i + 1..involutions.len()).all(|j| involutions[i] != involutions[j]));
    Ok(CatalogReport { p, entries: checks, pairwise_distinct, involutions_distinct })
}

#[derive(Clone, Debug)]
pub struct CompletenessReport {
    pub found: usize,
    pub matches_catalog: bool,
    pub dihedral: usize,
    pub cyclic: usize,
    /// Catalog label of each enumerated subgroup, in enumeration order.
    pub labels: Vec<Option<String>>,
}

impl CompletenessReport {
    pub fn passes(&self) -> bool {
        self.found == 5 && self.matches_catalog && self.dihedral == 2 && self.cyclic == 3
    }
}

/// Exhaustive enumeration for `D_3` compared with `catalog(3)` as sets.
pub fn completeness_check_p3() -> Result<CompletenessReport> {
    let group = dihedral(3)?;
    let found = enumerate_regular_normalized(&group)?;
    let entries = catalog(3)?;
    let labels: Vec<Option<String>> = found
        .iter()
        .map(|n| entries.iter().find(|e| e.subgroup == *n).map(|e| e.structure.label()))
        .collect();
    let matches_catalog = found.len() == entries.len() && labels.iter().all(Option::is_some);
    let types: Vec<IsoType> = found.iter().map(iso_type).collect::<Result<_>>()?;
    Ok(CompletenessReport {
        found: found.len(),
        matches_catalog,
        dihedral: types.iter().filter(|t| t.is_dihedral()).count(),
        cyclic: types.iter().filter(|t| t.is_cyclic()).count(),
        labels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_definition_unwound() {
        let d3 = dihedral(3).unwrap();
        let e0 = eta(3, 0).unwrap();
        // η_0(1) = r · s^{-1} = rs
        assert_eq!(d3.name(e0.apply(d3.identity())), "rs");
        assert_eq!(e0.pow(3), right_regular_perm(&d3, 3));
        assert_eq!(eta(5, 3).unwrap().order(), 10);
        assert!(eta(3, 3).is_err());
    }

    #[test]
    fn catalog_sizes() {
        assert_eq!(catalog(3).unwrap().len(), 5);
        assert_eq!(catalog(5).unwrap().len(), 7);
        assert!(catalog(4).is_err());
        assert!(catalog(17).is_err());
    }

    #[test]
    fn structure_labels_round_trip() {
        for s in Structure::all(5) {
            assert_eq!(s.label().parse::<Structure>().unwrap(), s);
        }
        assert!("N".parse::<Structure>().is_err());
        assert!("sigma".parse::<Structure>().is_err());
    }

    #[test]
    fn p5_catalog_verifies() {
        let report = verify_catalog(5).unwrap();
        assert!(report.passes(), "{report:?}");
    }
}
