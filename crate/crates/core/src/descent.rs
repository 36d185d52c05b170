//! Galois descent: `H = (L[N])^G` with its Hopf structure, the Hopf action of
//! `H` on `L`, and the Hopf-Galois and `L`-form checks.
//!
//! `L[N]` is stored as a rational vector space of dimension `|N| dim(L)`; the
//! coordinate of `e_a η_k` (with `e_a` an `L`-basis element and `η_k` the
//! `k`-th element of `N`) is `k * dim(L) + a`.

use num_traits::{One, Zero};

use crate::algebra::Algebra;
use crate::catalog::{eta_in, Structure};
use crate::error::{Error, Result};
use crate::galois::{fixed_subalgebra, sqrt_d_witness, GaloisAlgebra};
use crate::groups::{conj_by, first_normalization_failure, left_regular_perm, Perm, PermSubgroup};
use crate::hopf::HopfPresentation;
use crate::linalg::{
    axpy, integer_normalize, kernel, solve, sub_vectors, zero_vector, Coordinates, Matrix, Scalar, Vector,
};

/// The group algebra `L[N]` as a rational vector space. Products are computed
/// from the group law, `(x η_k)(y η_l) = xy η_{kl}`, rather than from stored
/// structure constants, which would need `(|N| dim L)^3` entries.
#[derive(Clone, Debug)]
pub struct GroupAlgebraOverL {
    field: GaloisAlgebra,
    subgroup: PermSubgroup,
}

pub fn group_algebra(field: &GaloisAlgebra, subgroup: &PermSubgroup) -> Result<GroupAlgebraOverL> {
    if subgroup.degree() != field.group().order() {
        return Err(Error::DegreeMismatch { expected: field.group().order(), found: subgroup.degree() });
    }
    Ok(GroupAlgebraOverL { field: field.clone(), subgroup: subgroup.clone() })
}

impl GroupAlgebraOverL {
    pub fn field(&self) -> &GaloisAlgebra {
        &self.field
    }

    pub fn subgroup(&self) -> &PermSubgroup {
        &self.subgroup
    }

    pub fn dim(&self) -> usize {
        self.field.dim() * self.rank()
    }

    /// `1 · η_0`, where `η_0` is the identity of `N`.
    pub fn unit(&self) -> Vector {
        self.pure(self.field.unit(), 0)
    }

    /// `|N|`.
    pub fn rank(&self) -> usize {
        self.subgroup.order()
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let d = self.field.dim();
        let mut out = zero_vector(self.dim());
        for k in 0..self.rank() {
            let x = self.block(a, k);
            if x.iter().all(Zero::is_zero) {
                continue;
            }
            for l in 0..self.rank() {
                let y = self.block(b, l);
                if y.iter().all(Zero::is_zero) {
                    continue;
                }
                let kl = self.subgroup.mul_index(k, l);
                axpy(&mut out[kl * d..(kl + 1) * d], &Scalar::one(), &self.field.mul(x, y));
            }
        }
        out
    }

    /// The element `x η_k`.
    pub fn pure(&self, x: &[Scalar], k: usize) -> Vector {
        let d = self.field.dim();
        let mut v = zero_vector(self.dim());
        v[k * d..(k + 1) * d].clone_from_slice(x);
        v
    }

    /// `x η` for a permutation `η ∈ N`.
    pub fn term(&self, x: &[Scalar], eta: &Perm) -> Result<Vector> {
        let k = self
            .subgroup
            .position(eta)
            .ok_or_else(|| Error::InvalidInput("permutation is not in N".into()))?;
        Ok(self.pure(x, k))
    }

    /// The `L`-coefficient of `η_k` in `v`.
    pub fn block<'v>(&self, v: &'v [Scalar], k: usize) -> &'v [Scalar] {
        let d = self.field.dim();
        &v[k * d..(k + 1) * d]
    }

    /// `x · v` for `x ∈ L`.
    pub fn scalar_mul(&self, x: &[Scalar], v: &[Scalar]) -> Vector {
        let d = self.field.dim();
        let mut out = Vec::with_capacity(v.len());
        for k in 0..self.rank() {
            out.extend(self.field.mul(x, &v[k * d..(k + 1) * d]));
        }
        out
    }

    /// Applies `η_k -> η_{perm[k]}` blockwise.
    pub fn permute_blocks(&self, v: &[Scalar], perm: &[usize]) -> Vector {
        let d = self.field.dim();
        let mut out = zero_vector(v.len());
        for (k, &target) in perm.iter().enumerate() {
            out[target * d..(target + 1) * d].clone_from_slice(&v[k * d..(k + 1) * d]);
        }
        out
    }

    /// Renders an element as `Σ (x) η_k` using the given names for `N`.
    pub fn format_element(&self, v: &[Scalar], names: &[String]) -> String {
        let terms: Vec<String> = (0..self.rank())
            .filter_map(|k| {
                let x = self.block(v, k);
                (!x.iter().all(Zero::is_zero)).then(|| format!("({})·{}", self.field.format_element(x), names[k]))
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// `g(x η) = g(x) (λ(g) η λ(g)^{-1})`, stored as the Galois matrix on `L`
/// together with the induced permutation of `N`.
#[derive(Clone, Debug)]
pub struct SemilinearAction {
    conjugation: Vec<Vec<usize>>,
}

pub fn semilinear_action(a: &GroupAlgebraOverL) -> Result<SemilinearAction> {
    let group = a.field.group();
    let n = &a.subgroup;
    let lambdas: Vec<Perm> = (0..group.order()).map(|g| left_regular_perm(group, g)).collect();
    if let Some((g, eta)) = first_normalization_failure(n, &lambdas) {
        return Err(Error::NotNormalized { g, eta });
    }
    let conjugation = lambdas
        .iter()
        .map(|l| {
            n.elements()
                .iter()
                .map(|eta| n.position(&conj_by(l, eta)).expect("normalized"))
                .collect()
        })
        .collect();
    Ok(SemilinearAction { conjugation })
}

impl SemilinearAction {
    /// Index of `^g η_k` in `N`.
    pub fn conjugate(&self, g: usize, k: usize) -> usize {
        self.conjugation[g][k]
    }

    pub fn apply(&self, a: &GroupAlgebraOverL, g: usize, v: &[Scalar]) -> Vector {
        let d = a.field.dim();
        let mut out = zero_vector(v.len());
        for k in 0..a.rank() {
            let image = a.field.act(g, &v[k * d..(k + 1) * d]);
            let target = self.conjugation[g][k];
            out[target * d..(target + 1) * d].clone_from_slice(&image);
        }
        out
    }

    pub fn matrix(&self, a: &GroupAlgebraOverL, g: usize) -> Matrix {
        let d = a.field.dim();
        let dn = a.dim();
        let m = a.field.action(g);
        let mut out = Matrix::zeros(dn, dn);
        for k in 0..a.rank() {
            let target = self.conjugation[g][k];
            for i in 0..d {
                for j in 0..d {
                    out[(target * d + i, k * d + j)] = m[(i, j)].clone();
                }
            }
        }
        out
    }
}

/// A descended Hopf algebra together with the data it came from.
#[derive(Clone, Debug)]
pub struct DescendedHopf {
    pub hopf: HopfPresentation,
    /// Basis of `H` inside `L[N]`: integer vectors with content 1, sorted.
    pub basis: Vec<Vector>,
    pub group_algebra: GroupAlgebraOverL,
    pub action: SemilinearAction,
    coords: Coordinates,
}

/// `H = (L[N])^G` with `Δ(xη) = xη (x) η`, `ε(xη) = x`, `σ(xη) = xη^{-1}`
/// restricted to `H` and rewritten in the descended basis.
pub fn descend(a: &GroupAlgebraOverL) -> Result<DescendedHopf> {
    let action = semilinear_action(a)?;
    let field = &a.field;
    let d = field.dim();
    let n = a.rank();
    let dn = a.dim();

    let blocks: Vec<Matrix> = field
        .group()
        .generators()
        .iter()
        .map(|&g| action.matrix(a, g).sub(&Matrix::identity(dn)))
        .collect();
    let mut basis = kernel(&Matrix::vstack(&blocks)?).columns();
    if basis.len() != n {
        return Err(Error::DescentDimension { expected: n, found: basis.len() });
    }
    for v in &mut basis {
        integer_normalize(v);
    }
    basis.sort();
    let coords = Coordinates::new(dn, &basis)?;
    let coords_of = |v: &[Scalar], what: &str| {
        coords
            .of(v)
            .ok_or_else(|| Error::NotClosed(format!("{what} leaves the fixed space")))
    };

    let mut products = Vec::with_capacity(n * n);
    for x in &basis {
        for y in &basis {
            products.push(coords_of(&a.mul(x, y), "product")?);
        }
    }
    let unit = coords_of(&a.unit(), "unit")?;
    let algebra = Algebra::from_products(n, products, unit)?;

    // L-coordinates with respect to the descended basis, which is an L-basis
    // of L[N]: solve Σ_i l_i b_i = 1·η for every η.
    let mut t_cols = Vec::with_capacity(dn);
    for b in &basis {
        for e in 0..d {
            t_cols.push(a.scalar_mul(&field.algebra().basis_vector(e), b));
        }
    }
    let t = Matrix::from_columns(dn, &t_cols)?;
    let rhs_cols: Vec<Vector> = (0..n).map(|k| a.pure(field.unit(), k)).collect();
    let rhs = Matrix::from_columns(dn, &rhs_cols)?;
    let q = solve(&t, &rhs).ok_or_else(|| Error::NotClosed("descended basis is not an L-basis".into()))?;
    if t.mul(&q) != rhs {
        return Err(Error::NotClosed("L-coordinate residual is nonzero".into()));
    }
    // lcoord[k][i]: L-coefficient of b_i in η_k
    let lcoord: Vec<Vec<Vector>> = (0..n)
        .map(|k| (0..n).map(|i| (0..d).map(|e| q[(i * d + e, k)].clone()).collect()).collect())
        .collect();

    let as_rational = |x: &[Scalar], what: &str| {
        field
            .as_rational(x)
            .ok_or_else(|| Error::NotClosed(format!("{what} coefficient is not rational")))
    };

    // Δ(b) = Σ_η b_η η (x) η = Σ_{i,j} (Σ_η b_η q_i(η) q_j(η)) b_i (x) b_j
    let pair_products: Vec<Vec<Vec<Vector>>> = (0..n)
        .map(|k| {
            (0..n)
                .map(|i| (0..n).map(|j| field.mul(&lcoord[k][i], &lcoord[k][j])).collect())
                .collect()
        })
        .collect();
    let mut comul = Matrix::zeros(n * n, n);
    let mut counit = Matrix::zeros(1, n);
    let mut antipode_cols = Vec::with_capacity(n);
    let inverse_perm: Vec<usize> = (0..n).map(|k| a.subgroup.inv_index(k)).collect();
    for (col, b) in basis.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                let mut acc = zero_vector(d);
                for (k, pp) in pair_products.iter().enumerate() {
                    let bk = a.block(b, k);
                    if bk.iter().all(Zero::is_zero) {
                        continue;
                    }
                    let term = field.mul(bk, &pp[i][j]);
                    axpy(&mut acc, &Scalar::one(), &term);
                }
                comul[(i * n + j, col)] = as_rational(&acc, "comultiplication")?;
            }
        }
        let mut eps = zero_vector(d);
        for k in 0..n {
            axpy(&mut eps, &Scalar::one(), a.block(b, k));
        }
        counit[(0, col)] = as_rational(&eps, "counit")?;
        antipode_cols.push(coords_of(&a.permute_blocks(b, &inverse_perm), "antipode")?);
    }
    let antipode = Matrix::from_columns(n, &antipode_cols)?;

    let label = a.subgroup.label().unwrap_or("N").to_string();
    let hopf = HopfPresentation {
        algebra,
        comul,
        counit,
        antipode,
        provenance: format!("({})[{label}]^G", field.name()),
    };
    Ok(DescendedHopf { hopf, basis, group_algebra: a.clone(), action, coords })
}

impl DescendedHopf {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn field(&self) -> &GaloisAlgebra {
        &self.group_algebra.field
    }

    /// Coordinates of an element of `L[N]` in the descended basis, if it
    /// lies in `H`.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        self.coords.of(v)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords.contains(v)
    }

    /// The element of `L[N]` with the given coordinates.
    pub fn element(&self, coords: &[Scalar]) -> Vector {
        Algebra::combine(&self.basis, coords)
    }

    /// Whether `v ∈ L[N]` is fixed by every element of `G`.
    pub fn is_fixed(&self, v: &[Scalar]) -> bool {
        let a = &self.group_algebra;
        (0..a.field.group().order()).all(|g| self.action.apply(a, g, v) == v)
    }
}

/// Action matrices on `L` of the descended basis elements:
/// `(Σ r_η η) · x = Σ r_η η^{-1}[1_G](x)`.
pub fn hopf_action(h: &DescendedHopf) -> Vec<Matrix> {
    let a = &h.group_algebra;
    let field = &a.field;
    let identity = field.group().identity();
    let automorphism: Vec<usize> = a
        .subgroup
        .elements()
        .iter()
        .map(|eta| eta.inverse().apply(identity))
        .collect();
    h.basis
        .iter()
        .map(|b| {
            let mut m = Matrix::zeros(field.dim(), field.dim());
            for (k, &g) in automorphism.iter().enumerate() {
                let coeff = a.block(b, k);
                if coeff.iter().all(Zero::is_zero) {
                    continue;
                }
                m = m.add(&field.algebra().left_mul_matrix(coeff).mul(field.action(g)));
            }
            m
        })
        .collect()
}

/// First measuring-axiom violation, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MeasuringFailure {
    /// `h_k · (e_a e_b) != Σ (h_(1) · e_a)(h_(2) · e_b)`.
    Product { k: usize, a: usize, b: usize },
    /// `h_k · 1 != ε(h_k) 1`.
    Unit { k: usize },
}

/// Checks `h · (xy) = (m ∘ Δ)(h)(x (x) y)` and `h · 1 = ε(h) 1` on all basis
/// triples.
pub fn check_measuring(h: &DescendedHopf, action: &[Matrix]) -> std::result::Result<(), MeasuringFailure> {
    let field = h.field();
    let d = field.dim();
    let n = h.dim();
    let images: Vec<Vec<Vector>> = action.iter().map(Matrix::columns).collect();
    for k in 0..n {
        if action[k].mul_vec(field.unit()) != field.scalar(&h.hopf.counit_of(k)) {
            return Err(MeasuringFailure::Unit { k });
        }
        let delta = h.hopf.comul_of(k);
        let terms: Vec<(usize, usize, &Scalar)> = delta
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(ij, c)| (ij / n, ij % n, c))
            .collect();
        for x in 0..d {
            for y in 0..d {
                let lhs = action[k].mul_vec(&field.algebra().basis_product(x, y));
                let mut rhs = zero_vector(d);
                for &(i, j, c) in &terms {
                    axpy(&mut rhs, c, &field.mul(&images[i][x], &images[j][y]));
                }
                if lhs != rhs {
                    return Err(MeasuringFailure::Product { k, a: x, b: y });
                }
            }
        }
    }
    Ok(())
}

/// Rank of `j: L (x) H -> End(L)`, `j(x (x) h)(y) = x (h · y)`.
pub fn j_map_rank(field: &GaloisAlgebra, action: &[Matrix]) -> usize {
    let d = field.dim();
    let mut cols = Vec::with_capacity(d * action.len());
    for e in 0..d {
        let lx = field.algebra().left_mul_matrix(&field.algebra().basis_vector(e));
        for m in action {
            cols.push(lx.mul(m).entries().to_vec());
        }
    }
    Matrix::from_columns(d * d, &cols).expect("d^2 rows").rank()
}

/// `j` is a bijection.
pub fn j_map_is_bijective(field: &GaloisAlgebra, action: &[Matrix]) -> bool {
    let d = field.dim();
    action.len() == d && j_map_rank(field, action) == d * d
}

pub fn verify_hopf_galois(h: &DescendedHopf) -> bool {
    j_map_is_bijective(h.field(), &hopf_action(h))
}

/// Rank of `L (x) span(basis) -> L[N]`, `x (x) h -> x h`.
pub fn multiplication_map_rank(a: &GroupAlgebraOverL, basis: &[Vector]) -> usize {
    let field = &a.field;
    let cols: Vec<Vector> = (0..field.dim())
        .flat_map(|e| basis.iter().map(move |b| a.scalar_mul(&field.algebra().basis_vector(e), b)))
        .collect();
    if cols.is_empty() {
        return 0;
    }
    Matrix::from_columns(a.dim(), &cols).expect("column length").rank()
}

/// `L (x) H -> L[N]` is bijective, i.e. `H` is an `L`-form of `Q[N]`.
pub fn base_change_is_group_algebra(h: &DescendedHopf) -> bool {
    let a = &h.group_algebra;
    h.basis.len() * a.field.dim() == a.dim() && multiplication_map_rank(a, &h.basis) == a.dim()
}

/// Explicit elements claimed to span `H`:
///
/// * `ρ`: the group elements `ρ(g)`;
/// * `λ`: `1`, `r^i + r^{-i}`, `√d (r^i - r^{-i})` for `1 <= i <= (p-1)/2`, and
///   `w s + Σ_{i=1}^{p-1} r^{i(p-1)/2}(w) r^{-i} s` for `w` in a basis of
///   `L^<s>` (or the powers `1, y, .., y^{p-1}` of a supplied `y`);
/// * `N_c`: `1`, `η^p`, `η^i + η^{-i}`, `√d (η^i - η^{-i})` for `1 <= i < p`.
///
/// Products `r^i s` are identified with `λ(r^i s)`.
pub fn explicit_basis_elements(h: &DescendedHopf, structure: Structure, y: Option<&[Scalar]>) -> Result<Vec<Vector>> {
    let a = &h.group_algebra;
    let field = &a.field;
    let group = field.group();
    let p = group.order() / 2;
    let one = field.unit().clone();
    let neg = |v: &[Scalar]| -> Vector { v.iter().map(|x| -x).collect() };
    let (w, _) = sqrt_d_witness(field)?;
    let mut out = Vec::new();
    match structure {
        Structure::Rho => {
            for g in 0..group.order() {
                out.push(a.term(&one, &crate::groups::right_regular_perm(group, g))?);
            }
        }
        Structure::Lambda => {
            let lam = |g: usize| left_regular_perm(group, g);
            let r_pow = |i: usize| group.pow(1, i % p);
            let s = p;
            out.push(a.term(&one, &lam(0))?);
            for i in 1..=(p - 1) / 2 {
                let (pos, negi) = (lam(r_pow(i)), lam(r_pow(p - i)));
                out.push(crate::linalg::add_vectors(&a.term(&one, &pos)?, &a.term(&one, &negi)?));
                out.push(crate::linalg::add_vectors(&a.term(&w, &pos)?, &a.term(&neg(&w), &negi)?));
            }
            let s_basis: Vec<Vector> = match y {
                Some(y) => (0..p).map(|k| field.algebra().pow(y, k)).collect(),
                None => fixed_subalgebra(field, &[s])?.basis,
            };
            for b0 in &s_basis {
                let mut v = a.term(b0, &lam(s))?;
                for i in 1..p {
                    let twist = field.act(r_pow(i * (p - 1) / 2), b0);
                    let element = group.mul(r_pow(p - i), s);
                    v = crate::linalg::add_vectors(&v, &a.term(&twist, &lam(element))?);
                }
                out.push(v);
            }
        }
        Structure::Cyclic(c) => {
            let eta = eta_in(group, c)?;
            let pw = |i: i64| eta.pow(i);
            out.push(a.term(&one, &pw(0))?);
            out.push(a.term(&one, &pw(p as i64))?);
            for i in 1..p as i64 {
                out.push(crate::linalg::add_vectors(&a.term(&one, &pw(i))?, &a.term(&one, &pw(-i))?));
            }
            for i in 1..p as i64 {
                out.push(crate::linalg::add_vectors(&a.term(&w, &pw(i))?, &a.term(&neg(&w), &pw(-i))?));
            }
        }
    }
    Ok(out)
}

/// The explicit elements are independent, lie in `H`, and there are `dim H`
/// of them, so their span is `H`.
pub fn spans_descended(h: &DescendedHopf, elements: &[Vector]) -> bool {
    elements.len() == h.dim()
        && elements.iter().all(|e| h.contains(e))
        && Matrix::from_columns(h.group_algebra.dim(), elements)
            .map(|m| m.rank() == h.dim())
            .unwrap_or(false)
}

pub fn verify_explicit_basis(h: &DescendedHopf, structure: Structure, y: Option<&[Scalar]>) -> Result<bool> {
    Ok(spans_descended(h, &explicit_basis_elements(h, structure, y)?))
}

/// Residual of `Δ(b_k) = Σ c_ij b_i (x) b_j` computed directly in
/// `L[N] (x)_L L[N] = L[N x N]` by solving the full rational system.
/// Returns the coordinates found by the direct solve.
pub fn comul_by_direct_solve(h: &DescendedHopf, k: usize) -> Option<Vector> {
    let a = &h.group_algebra;
    let field = &a.field;
    let d = field.dim();
    let n = h.dim();
    let len = n * n * d;
    let tensor = |x: &[Scalar], y: &[Scalar]| -> Vector {
        let mut out = zero_vector(len);
        for e in 0..n {
            let xe = a.block(x, e);
            if xe.iter().all(Zero::is_zero) {
                continue;
            }
            for f in 0..n {
                let yf = a.block(y, f);
                if yf.iter().all(Zero::is_zero) {
                    continue;
                }
                let prod = field.mul(xe, yf);
                out[(e * n + f) * d..(e * n + f + 1) * d].clone_from_slice(&prod);
            }
        }
        out
    };
    let cols: Vec<Vector> = h
        .basis
        .iter()
        .flat_map(|bi| h.basis.iter().map(move |bj| (bi, bj)))
        .map(|(bi, bj)| tensor(bi, bj))
        .collect();
    let system = Matrix::from_columns(len, &cols).ok()?;
    let mut target = zero_vector(len);
    for e in 0..n {
        let be = a.block(&h.basis[k], e);
        target[(e * n + e) * d..(e * n + e + 1) * d].clone_from_slice(be);
    }
    let rhs = Matrix::from_columns(len, std::slice::from_ref(&target)).ok()?;
    let x = solve(&system, &rhs)?;
    let residual = sub_vectors(&system.mul(&x).column(0), &target);
    residual.iter().all(Zero::is_zero).then(|| x.column(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::structure_subgroup;
    use crate::galois::{split_model, splitting_field_cubic};
    use crate::groups::{dihedral, right_regular};
    use crate::linalg::int;

    fn cubic() -> GaloisAlgebra {
        splitting_field_cubic(&int(2)).unwrap()
    }

    #[test]
    fn group_algebra_dimensions_and_group_law() {
        let l = cubic();
        let n0 = structure_subgroup(l.group(), Structure::Cyclic(0)).unwrap();
        let a = group_algebra(&l, &n0).unwrap();
        assert_eq!(a.dim(), 36);
        let unit = a.unit();
        assert_eq!(a.mul(&unit, &unit), unit);
        // η^1 η^5 = 1
        let one = l.unit().clone();
        assert_eq!(a.mul(&a.pure(&one, 1), &a.pure(&one, 5)), unit);
    }

    #[test]
    fn degree_mismatch_rejected() {
        let l = cubic();
        let rho = right_regular(&dihedral(5).unwrap());
        assert!(matches!(group_algebra(&l, &rho), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn semilinear_action_rules() {
        let l = cubic();
        let group = l.group().clone();
        let n0 = structure_subgroup(&group, Structure::Cyclic(0)).unwrap();
        let a = group_algebra(&l, &n0).unwrap();
        let act = semilinear_action(&a).unwrap();
        assert_eq!(act.matrix(&a, 0), Matrix::identity(36));
        // s(x η) = s(x) η^{-1}
        let alpha = l.algebra().basis_vector(1);
        let v = a.pure(&alpha, 1);
        assert_eq!(act.apply(&a, 3, &v), a.pure(&l.act(3, &alpha), 5));

        let rho = right_regular(&group);
        let a = group_algebra(&l, &rho).unwrap();
        let act = semilinear_action(&a).unwrap();
        for g in 0..6 {
            for h in 0..6 {
                assert_eq!(act.conjugate(g, h), h);
            }
        }
    }

    #[test]
    fn non_normalized_subgroup_is_reported() {
        let l = cubic();
        let ls = crate::groups::closure(&[left_regular_perm(l.group(), 3)]).unwrap();
        let a = group_algebra(&l, &ls).unwrap();
        assert!(matches!(semilinear_action(&a), Err(Error::NotNormalized { .. })));
    }

    #[test]
    fn classical_descent_is_group_ring() {
        let l = cubic();
        let rho = right_regular(l.group());
        let h = descend(&group_algebra(&l, &rho).unwrap()).unwrap();
        assert_eq!(h.dim(), 6);
        assert!(verify_explicit_basis(&h, Structure::Rho, None).unwrap());
        let action = hopf_action(&h);
        // each ρ(g) acts as the automorphism g
        for g in 0..6 {
            let elt = h.group_algebra.term(l.unit(), &crate::groups::right_regular_perm(l.group(), g)).unwrap();
            let c = h.coordinates(&elt).unwrap();
            let mut m = Matrix::zeros(6, 6);
            for (i, ci) in c.iter().enumerate() {
                m = m.add(&action[i].scale(ci));
            }
            assert_eq!(&m, l.action(g));
        }
    }

    #[test]
    fn unit_acts_as_identity() {
        let l = cubic();
        let n0 = structure_subgroup(l.group(), Structure::Cyclic(0)).unwrap();
        let h = descend(&group_algebra(&l, &n0).unwrap()).unwrap();
        let action = hopf_action(&h);
        let u = h.hopf.algebra.unit();
        let mut m = Matrix::zeros(6, 6);
        for (i, ci) in u.iter().enumerate() {
            m = m.add(&action[i].scale(ci));
        }
        assert_eq!(m, Matrix::identity(6));
    }

    #[test]
    fn zeroed_action_breaks_j_map() {
        let l = cubic();
        let n0 = structure_subgroup(l.group(), Structure::Cyclic(1)).unwrap();
        let h = descend(&group_algebra(&l, &n0).unwrap()).unwrap();
        let mut action = hopf_action(&h);
        assert!(j_map_is_bijective(&l, &action));
        action[2] = Matrix::zeros(6, 6);
        assert!(!j_map_is_bijective(&l, &action));
    }

    #[test]
    fn proper_subspace_is_not_an_l_form() {
        let l = cubic();
        let lam = crate::groups::left_regular(l.group());
        let h = descend(&group_algebra(&l, &lam).unwrap()).unwrap();
        assert!(base_change_is_group_algebra(&h));
        assert!(multiplication_map_rank(&h.group_algebra, &h.basis[..5]) < 36);
    }

    #[test]
    fn split_model_descent_d5() {
        let group = dihedral(5).unwrap();
        let l = split_model(&group);
        let n2 = structure_subgroup(&group, Structure::Cyclic(2)).unwrap();
        let h = descend(&group_algebra(&l, &n2).unwrap()).unwrap();
        assert_eq!(h.dim(), 10);
        assert!(h.hopf.axiom_report().all_pass());
    }
}
