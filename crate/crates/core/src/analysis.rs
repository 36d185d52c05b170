//! Hopf- and algebra-isomorphism classification of the descended Hopf
//! algebras, the minimal splitting field of `H_λ`, and the idempotent and
//! nilpotent witnesses inside `H_λ`.

use num_traits::Zero;

use crate::catalog::{structure_subgroup, Structure};
use crate::descent::{descend, group_algebra, DescendedHopf};
use crate::error::{Error, Result};
use crate::galois::GaloisAlgebra;
use crate::groups::{
    dihedral, equivariant_isomorphism_search, left_regular, left_regular_perm, right_regular, EquivarianceFailure,
    FiniteGroup, GroupIso,
};
use crate::hopf::{check_algebra_morphism, check_hopf_morphism, group_algebra_hopf};
use crate::linalg::{frac, is_zero_vector, zero_vector, Matrix, Scalar, Vector};
use crate::wedderburn::{commutative_wedderburn, noncommutative_wedderburn, WedderburnReport, DEFAULT_SCAN_BOUND};

/// Every catalog structure descended over `field`, in catalog order.
pub fn descend_all(field: &GaloisAlgebra) -> Result<Vec<(Structure, DescendedHopf)>> {
    let p = field.group().order() / 2;
    Structure::all(p)
        .into_iter()
        .map(|s| {
            let n = structure_subgroup(field.group(), s)?;
            Ok((s, descend(&group_algebra(field, &n)?)?))
        })
        .collect()
}

/// The `Q`-linear map `H -> H'` induced by `x η -> x φ(η)`, in the descended
/// bases.
pub fn induced_map(source: &DescendedHopf, target: &DescendedHopf, iso: &GroupIso) -> Result<Matrix> {
    let a = &source.group_algebra;
    let cols: Vec<Vector> = source
        .basis
        .iter()
        .map(|b| {
            let moved = a.permute_blocks(b, &iso.map);
            target
                .coordinates(&moved)
                .ok_or_else(|| Error::MapCheck("image of a fixed element is not fixed".into()))
        })
        .collect::<Result<_>>()?;
    Matrix::from_columns(target.dim(), &cols)
}

#[derive(Clone, Debug)]
pub enum PairWitness {
    /// An equivariant isomorphism and whether its induced map passed the
    /// Hopf-morphism check.
    Isomorphic { iso: GroupIso, induced_map_ok: bool, algebra_map_ok: bool },
    /// Every candidate isomorphism fails equivariance.
    NotIsomorphic { candidates: usize, isomorphisms: usize, failures: Vec<EquivarianceFailure> },
}

impl PairWitness {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, PairWitness::Isomorphic { .. })
    }

    /// A positive witness checks out, or a negative one is exhaustive.
    pub fn certified(&self) -> bool {
        match self {
            PairWitness::Isomorphic { induced_map_ok, algebra_map_ok, .. } => *induced_map_ok && *algebra_map_ok,
            PairWitness::NotIsomorphic { isomorphisms, failures, .. } => failures.len() == *isomorphisms,
        }
    }
}

#[derive(Clone, Debug)]
pub struct PairReport {
    pub left: Structure,
    pub right: Structure,
    pub witness: PairWitness,
}

#[derive(Clone, Debug)]
pub struct HopfIsoClassReport {
    pub classes: Vec<Vec<Structure>>,
    pub pairs: Vec<PairReport>,
}

impl HopfIsoClassReport {
    pub fn class_of(&self, s: Structure) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(&s))
    }

    /// Pairwise results agree with the partition and every witness is
    /// certified.
    pub fn consistent(&self) -> bool {
        self.pairs.iter().all(|pair| {
            pair.witness.certified()
                && (self.class_of(pair.left) == self.class_of(pair.right)) == pair.witness.is_isomorphic()
        })
    }
}

/// Partitions the catalog structures by `G`-equivariant isomorphism of the
/// underlying subgroups.
pub fn hopf_iso_classes(field: &GaloisAlgebra) -> Result<HopfIsoClassReport> {
    let descended = descend_all(field)?;
    let group = field.group();
    let everything: Vec<usize> = (0..group.order()).collect();
    let mut parent: Vec<usize> = (0..descended.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        if parent[x] != x {
            parent[x] = find(parent, parent[x]);
        }
        parent[x]
    }
    let mut pairs = Vec::new();
    for i in 0..descended.len() {
        for j in i + 1..descended.len() {
            let (si, hi) = &descended[i];
            let (sj, hj) = &descended[j];
            let search = equivariant_isomorphism_search(
                hi.group_algebra.subgroup(),
                hj.group_algebra.subgroup(),
                group,
                &everything,
            );
            let witness = match search.equivariant.into_iter().next() {
                Some(iso) => {
                    let phi = induced_map(hi, hj, &iso);
                    let induced_map_ok = phi.as_ref().is_ok_and(|m| check_hopf_morphism(&hi.hopf, &hj.hopf, m).is_ok());
                    let algebra_map_ok =
                        phi.as_ref().is_ok_and(|m| check_algebra_morphism(&hi.hopf.algebra, &hj.hopf.algebra, m).is_ok());
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri] = rj;
                    PairWitness::Isomorphic { iso, induced_map_ok, algebra_map_ok }
                }
                None => PairWitness::NotIsomorphic {
                    candidates: search.candidates,
                    isomorphisms: search.isomorphisms,
                    failures: search.failures,
                },
            };
            pairs.push(PairReport { left: *si, right: *sj, witness });
        }
    }
    let mut classes: Vec<Vec<Structure>> = Vec::new();
    let mut roots: Vec<usize> = Vec::new();
    for (i, (s, _)) in descended.iter().enumerate() {
        let root = find(&mut parent, i);
        match roots.iter().position(|&r| r == root) {
            Some(k) => classes[k].push(*s),
            None => {
                roots.push(root);
                classes.push(vec![*s]);
            }
        }
    }
    Ok(HopfIsoClassReport { classes, pairs })
}

#[derive(Clone, Debug)]
pub struct SubgroupSplitting {
    /// Element names of the acting subgroup.
    pub elements: Vec<String>,
    pub equivariant_isos: usize,
    pub candidates: usize,
    pub isomorphisms: usize,
}

#[derive(Clone, Debug)]
pub struct MinimalSplittingReport {
    pub subgroups: Vec<SubgroupSplitting>,
    pub center_trivial: bool,
}

impl MinimalSplittingReport {
    /// Only the trivial subgroup admits an equivariant `λ -> ρ` isomorphism.
    pub fn passes(&self) -> bool {
        self.center_trivial
            && self
                .subgroups
                .iter()
                .all(|s| (s.equivariant_isos > 0) == (s.elements.len() == 1))
    }
}

/// For every subgroup `G' <= G`, searches for `G'`-equivariant isomorphisms
/// `λ(G) -> ρ(G)`.
pub fn minimal_splitting_subfield_check(group: &FiniteGroup) -> MinimalSplittingReport {
    let (lam, rho) = (left_regular(group), right_regular(group));
    let subgroups = group
        .subgroups()
        .into_iter()
        .map(|sub| {
            let search = equivariant_isomorphism_search(&lam, &rho, group, &sub);
            SubgroupSplitting {
                elements: sub.iter().map(|&g| group.name(g).to_string()).collect(),
                equivariant_isos: search.equivariant.len(),
                candidates: search.candidates,
                isomorphisms: search.isomorphisms,
            }
        })
        .collect();
    MinimalSplittingReport { subgroups, center_trivial: group.center() == vec![group.identity()] }
}

/// `e_1 = (1/2p) Σ g` and `e_2 = (1/2p) Σ χ(g) g` with `χ(r) = 1`,
/// `χ(s) = -1`, in the group-index basis of `Q[D_p]`.
pub fn character_idempotents(p: u64) -> Result<(Vector, Vector)> {
    let group = dihedral(p)?;
    let n = group.order();
    let c = frac(1, n as i64);
    let e1 = vec![c.clone(); n];
    let e2 = (0..n).map(|g| if g < n / 2 { c.clone() } else { -c.clone() }).collect();
    Ok((e1, e2))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentReport {
    pub idempotent: bool,
    pub orthogonal: bool,
    pub central: bool,
    pub conjugation_fixed: bool,
    /// `Σ c_g λ(g)` lies in the descended `H_λ`.
    pub in_descended: bool,
}

impl IdempotentReport {
    pub fn passes(&self) -> bool {
        self.idempotent && self.orthogonal && self.central && self.conjugation_fixed && self.in_descended
    }
}

/// `Σ c_g λ(g)` with rational coefficients, as an element of `L[λ(G)]`.
pub fn lambda_element(h: &DescendedHopf, coeffs: &[Scalar]) -> Result<Vector> {
    let a = &h.group_algebra;
    let field = a.field();
    let mut out = zero_vector(a.dim());
    for (g, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = a.term(&field.scalar(c), &left_regular_perm(field.group(), g))?;
        out = crate::linalg::add_vectors(&out, &term);
    }
    Ok(out)
}

/// Checks both character idempotents in `Q[G]` and inside `h`, which must be
/// the descent of `λ(G)`.
pub fn check_character_idempotents(h: &DescendedHopf) -> Result<IdempotentReport> {
    let group = h.field().group();
    let p = (group.order() / 2) as u64;
    let (e1, e2) = character_idempotents(p)?;
    let qg = group_algebra_hopf(group).algebra;
    let n = group.order();
    let central = |e: &Vector| (0..n).all(|g| qg.mul(e, &qg.basis_vector(g)) == qg.mul(&qg.basis_vector(g), e));
    let conjugate = |e: &Vector, g: usize| {
        let mut out = zero_vector(n);
        for (x, c) in e.iter().enumerate() {
            out[group.mul(group.mul(g, x), group.inv(g))] += c;
        }
        out
    };
    Ok(IdempotentReport {
        idempotent: qg.mul(&e1, &e1) == e1 && qg.mul(&e2, &e2) == e2,
        orthogonal: is_zero_vector(&qg.mul(&e1, &e2)) && is_zero_vector(&qg.mul(&e2, &e1)),
        central: central(&e1) && central(&e2),
        conjugation_fixed: (0..n).all(|g| conjugate(&e1, g) == e1 && conjugate(&e2, g) == e2),
        in_descended: h.contains(&lambda_element(h, &e1)?) && h.contains(&lambda_element(h, &e2)?),
    })
}

/// `α λ(s) + αζ λ(sr) + αζ² λ(sr²)` in `L[λ(D_3)]` for the cubic model.
pub fn nilpotent_witness(h: &DescendedHopf) -> Result<Vector> {
    let a = &h.group_algebra;
    let field = a.field();
    let group = field.group();
    if group.order() != 6 || field.dim() != 6 || !field.name().starts_with("cubic") {
        return Err(Error::InvalidInput("the nilpotent witness needs the cubic model".into()));
    }
    let alpha = field.algebra().basis_vector(1);
    let zeta = field.algebra().basis_vector(3);
    let (r, s) = (1, 3);
    let mut b = zero_vector(a.dim());
    let mut coeff = alpha;
    let mut element = s;
    for _ in 0..3 {
        let term = a.term(&coeff, &left_regular_perm(group, element))?;
        b = crate::linalg::add_vectors(&b, &term);
        coeff = field.mul(&coeff, &zeta);
        element = group.mul(element, r);
    }
    Ok(b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentReport {
    pub nonzero: bool,
    pub fixed: bool,
    pub in_descended: bool,
    pub square_zero: bool,
}

impl NilpotentReport {
    pub fn passes(&self) -> bool {
        self.nonzero && self.fixed && self.in_descended && self.square_zero
    }
}

pub fn check_nilpotent_witness(h: &DescendedHopf) -> Result<NilpotentReport> {
    let b = nilpotent_witness(h)?;
    let a = &h.group_algebra;
    Ok(NilpotentReport {
        nonzero: !is_zero_vector(&b),
        fixed: h.is_fixed(&b),
        in_descended: h.contains(&b),
        square_zero: is_zero_vector(&a.mul(&b, &b)),
    })
}

/// Wedderburn report of a descended algebra: the commutative split for
/// commutative algebras, otherwise the central split with `injected`
/// nilpotent candidates (in descended coordinates) tried before the scan.
pub fn wedderburn(h: &DescendedHopf, injected: &[Vector]) -> Result<WedderburnReport> {
    if h.hopf.is_commutative() {
        commutative_wedderburn(&h.hopf.algebra)
    } else {
        noncommutative_wedderburn(&h.hopf.algebra, injected, DEFAULT_SCAN_BOUND)
    }
}

#[derive(Clone, Debug)]
pub struct AlgebraClassReport {
    pub reports: Vec<(Structure, WedderburnReport)>,
    pub classes: Vec<Vec<Structure>>,
}

/// Groups the descended algebras by commutativity and Wedderburn shape.
/// `H_λ` gets the nilpotent witness injected when the field is the cubic
/// model.
pub fn algebra_iso_classes(field: &GaloisAlgebra) -> Result<AlgebraClassReport> {
    let descended = descend_all(field)?;
    let mut reports = Vec::new();
    let mut keys = Vec::new();
    let mut classes: Vec<Vec<Structure>> = Vec::new();
    for (s, h) in &descended {
        let injected: Vec<Vector> = match (s, nilpotent_witness(h)) {
            (Structure::Lambda, Ok(b)) => h.coordinates(&b).into_iter().collect(),
            _ => Vec::new(),
        };
        let report = wedderburn(h, &injected)?;
        let key = (h.hopf.is_commutative(), report.shape());
        match keys.iter().position(|k| *k == key) {
            Some(i) => classes[i].push(*s),
            None => {
                keys.push(key);
                classes.push(vec![*s]);
            }
        }
        reports.push((*s, report));
    }
    Ok(AlgebraClassReport { reports, classes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::splitting_field_cubic;
    use crate::linalg::int;

    #[test]
    fn d3_idempotents_by_formula() {
        let (e1, e2) = character_idempotents(3).unwrap();
        assert_eq!(e1, vec![frac(1, 6); 6]);
        let s = frac(1, 6);
        assert_eq!(e2, vec![s.clone(), s.clone(), s.clone(), -s.clone(), -s.clone(), -s]);
    }

    #[test]
    fn minimal_splitting_for_d3() {
        let report = minimal_splitting_subfield_check(&dihedral(3).unwrap());
        assert_eq!(report.subgroups.len(), 6);
        assert!(report.passes(), "{report:?}");
    }

    #[test]
    fn nilpotent_needs_cubic_model() {
        let l = crate::galois::split_model(&dihedral(3).unwrap());
        let lam = left_regular(l.group());
        let h = descend(&group_algebra(&l, &lam).unwrap()).unwrap();
        assert!(nilpotent_witness(&h).is_err());
        let l = splitting_field_cubic(&int(2)).unwrap();
        let lam = left_regular(l.group());
        let h = descend(&group_algebra(&l, &lam).unwrap()).unwrap();
        assert!(check_nilpotent_witness(&h).unwrap().passes());
    }
}
